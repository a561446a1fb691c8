"""Command line front end.

Every subcommand reads a JSON payload (arrangement or framework), runs the
requested computation, and prints a JSON report to stdout; logs go to
stderr.  Exit codes: 0 success, 1 negative verdict under --assert, 2 input
error, 3 internal consistency failure (a theorem-violation, meaning a bug
rather than bad input).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Any

from arrform.arrangement import Arrangement, rank
from arrform.constructions import corpus, generate
from arrform.errors import (
    ArrformError,
    InputError,
    PreconditionError,
    TheoremViolationError,
    UnsupportedOperationError,
)
from arrform.exactlin import SubspaceBasis
from arrform.persp import (
    PerspectiveDatum,
    default_perspective_hyperplane,
    is_formal,
    realize,
    verify_weak_rep,
    wprep_report,
)
from arrform.polyjac import jacobian_slice, ksat_slice, sat_quotient_dim
from arrform.rigidity import (
    Framework,
    arrangement_of,
    correspondence_check,
    edges_parallel,
    engineers_trick,
    has_generic_matroid,
    motion_space,
    trivial_motions,
)
from arrform.resolution import (
    betti_table,
    classify,
    duality_check,
    max_degree_syzygy_dim,
    regularity,
)

OK, ASSERT_FAILED, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


def _read_payload(path: str) -> tuple[dict, str]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path} must hold a JSON object")
    return data, digest


def _load_arrangement(path: str) -> tuple[Arrangement, str]:
    data, digest = _read_payload(path)
    if "vertices" in data:
        return arrangement_of(Framework.from_json(data)), digest
    return Arrangement.from_json(data), digest


def _load_framework(path: str) -> tuple[Framework, str]:
    data, digest = _read_payload(path)
    if "vertices" not in data:
        raise InputError("rigidity needs a framework payload with vertices and edges")
    return Framework.from_json(data), digest


def _report(command: str, digest: str, verdicts: dict, tables: dict | None = None,
            certificates: dict | None = None) -> dict:
    out: dict[str, Any] = {
        "command": command,
        "input_digest": digest,
        "verdicts": verdicts,
    }
    if tables:
        out["tables"] = tables
    if certificates:
        out["certificates"] = certificates
    return out


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
    else:
        json.dump(report, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_formality(args) -> tuple[dict, bool]:
    arr, digest = _load_arrangement(args.file)
    rep = wprep_report(arr, args.rank)
    verdicts = {
        "rank_bound": args.rank,
        "formal" if args.rank == 3 else "k_generated": rep.dim_nontrivial == 0,
        "nontrivial_dim": rep.dim_nontrivial,
        "trivial_dim": rep.dim_trivial,
        "total_dim": rep.dim_total,
    }
    return _report("formality", digest, verdicts), rep.dim_nontrivial == 0


def _cmd_wprep(args) -> tuple[dict, bool]:
    arr, digest = _load_arrangement(args.file)
    rep = wprep_report(arr, args.rank)
    certificates: dict[str, Any] = {
        "nontrivial_basis": [[str(x) for x in v] for v in rep.basis_nontrivial]
    }
    if args.realize and rep.basis_nontrivial:
        h0 = default_perspective_hyperplane(arr, args.rank)
        realized = []
        for lam in rep.basis_nontrivial:
            image = realize(PerspectiveDatum(arr, h0, lam, args.rank))
            if not verify_weak_rep(arr, image, args.rank):
                raise TheoremViolationError("realized arrangement failed re-verification")
            realized.append(image.to_json())
        certificates["hyperplane"] = [str(c) for c in h0.coefficients]
        certificates["realizations"] = realized
    return _report("wprep", digest, rep.to_json(), certificates=certificates), True


def _cmd_jacobian(args) -> tuple[dict, bool]:
    arr, digest = _load_arrangement(args.file)
    degree = args.degree if args.degree is not None else arr.n - 1
    jac = jacobian_slice(arr, degree)
    sat = ksat_slice(arr, args.codim, degree)
    quotient = sat_quotient_dim(arr, args.codim, degree)
    verdicts = {
        "degree": degree,
        "codim": args.codim,
        "jacobian_dim": jac.dim,
        "saturation_dim": sat.dim,
        "quotient_dim": quotient,
    }
    return _report("jacobian", digest, verdicts), True


def _cmd_betti(args) -> tuple[dict, bool]:
    arr, digest = _load_arrangement(args.file)
    table = betti_table(arr)
    shape = classify(arr)
    duality = duality_check(arr)
    if not duality.agree:
        raise TheoremViolationError("duality cross-check failed")
    verdicts = {
        "lines": arr.n,
        "regularity": table.regularity,
        "classification": shape.kind,
        "exponents": list(shape.exponents) if shape.exponents else None,
        "level": shape.level,
        "top_syzygy_dim": max_degree_syzygy_dim(arr),
        "duality_agrees": duality.agree,
    }
    tables = {"betti": table.to_json(), "duality": duality.to_json()}
    if args.pretty:
        tables["rendered"] = table.render()
    return _report("betti", digest, verdicts, tables=tables), True


def _cmd_rigidity(args) -> tuple[dict, bool]:
    fw, digest = _load_framework(args.file)
    motions = motion_space(fw)
    verdicts: dict[str, Any] = {
        "edges": len(fw.graph.edges),
        "vertices": fw.graph.vertex_count,
        "motion_dim": motions.basis.dim,
        "trivial_dim": motions.dim_trivial,
        "nontrivial_dim": motions.dim_nontrivial,
        "infinitesimally_rigid": motions.dim_nontrivial == 0,
        "generic_matroid": has_generic_matroid(fw),
    }
    agree = True
    if verdicts["generic_matroid"]:
        check = correspondence_check(fw)
        verdicts["correspondence"] = check.to_json()
        agree = check.agree
        if not agree:
            raise TheoremViolationError("rigidity correspondence failed")
    certificates = {}
    if motions.dim_nontrivial > 0:
        trivial = SubspaceBasis.from_vectors(
            2 * fw.graph.vertex_count, trivial_motions(fw)
        )
        moved = next(v for v in motions.basis.vectors if not trivial.contains(v))
        redrawn = engineers_trick(fw, moved)
        if not edges_parallel(fw, redrawn):
            raise TheoremViolationError("redrawing lost parallelism")
        certificates["motion"] = [str(x) for x in moved]
        certificates["parallel_redrawing"] = redrawn.to_json()
        certificates["degenerate_edges"] = [list(e) for e in redrawn.degenerate_edges()]
    return _report("rigidity", digest, verdicts, certificates=certificates), agree


def _cmd_crosscheck(args) -> tuple[dict, bool]:
    arr, digest = _load_arrangement(args.file)
    b1_top = max_degree_syzygy_dim(arr)
    quotient = sat_quotient_dim(arr, 2, arr.n - 1)
    nontrivial = wprep_report(arr, 3).dim_nontrivial
    agree = b1_top == quotient == nontrivial
    verdicts = {
        "b1_top": b1_top,
        "sat_quotient": quotient,
        "wprep_nontrivial": nontrivial,
        "agree": agree,
    }
    if not agree:
        raise TheoremViolationError("triangle of pipelines disagrees")
    return _report("crosscheck", digest, verdicts), agree


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise InputError(f"--param needs key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        try:
            parsed = json.loads(value)
        except json.JSONDecodeError:
            parsed = value
        if isinstance(parsed, list):
            parsed = tuple(parsed)
        params[key] = parsed
    return params


def _cmd_gen(args) -> tuple[dict, bool]:
    entry = generate(args.name, _parse_params(args.param))
    payload = entry.payload.to_json()
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True).encode()
    ).hexdigest()
    if args.raw:
        _emit(payload, args.pretty)
        return {}, True
    report = _report(
        "gen",
        digest,
        {"name": entry.name, "params": {k: str(v) for k, v in entry.params.items()}},
        tables={"expectations": {k: str(v) for k, v in entry.expectations.items()}},
        certificates={"payload": payload},
    )
    return report, True


def verify_entry(entry) -> dict:
    """Compare one corpus entry against its recorded expectations."""
    from arrform.resolution import betti_table as _bt

    arr = entry.arrangement
    results: dict[str, Any] = {}
    exp = entry.expectations
    if "formal" in exp:
        results["formal"] = (exp["formal"], is_formal(arr))
    if "nontrivial" in exp:
        results["nontrivial"] = (exp["nontrivial"], wprep_report(arr, 3).dim_nontrivial)
    if "b1_top" in exp and exp["b1_top"] is not None:
        results["b1_top"] = (exp["b1_top"], max_degree_syzygy_dim(arr))
    if "betti_b0" in exp:
        table = _bt(arr)
        results["betti_b0"] = (exp["betti_b0"], table.b0)
        if "betti_b1" in exp:
            results["betti_b1"] = (exp["betti_b1"], table.b1)
    if "regularity" in exp:
        results["regularity"] = (exp["regularity"], regularity(arr))
    if "classification" in exp:
        shape = classify(arr)
        results["classification"] = (
            tuple(exp["classification"]),
            (shape.kind, shape.exponents),
        )
    fw = entry.framework
    if fw is not None:
        if "generic_matroid" in exp:
            results["generic_matroid"] = (exp["generic_matroid"], has_generic_matroid(fw))
        if "motion_nontrivial" in exp:
            results["motion_nontrivial"] = (
                exp["motion_nontrivial"],
                motion_space(fw).dim_nontrivial,
            )
        if "triple_points" in exp:
            from arrform.arrangement import flats_of_rank

            rank2 = flats_of_rank(arr, 2)
            results["triple_points"] = (
                exp["triple_points"],
                len([f for f in rank2 if f.size >= 3]),
            )
            results["double_points"] = (
                exp.get("double_points"),
                len([f for f in rank2 if f.size == 2]),
            )
    checked = {}
    ok = True
    for key, (expected, actual) in results.items():
        good = expected == actual or expected is None
        ok = ok and good
        checked[key] = {"expected": _plain(expected), "actual": _plain(actual), "ok": good}
    return {"name": entry.name, "params": {k: str(v) for k, v in entry.params.items()},
            "ok": ok, "checks": checked}


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _entry_key(entry) -> str:
    return f"{entry.name}:{json.dumps({k: str(v) for k, v in sorted(entry.params.items())})}"


def _verify_named(spec: tuple[str, dict]) -> dict:
    name, params = spec
    return verify_entry(generate(name, params))


def _cmd_corpus(args) -> tuple[dict, bool]:
    entries = corpus()
    if args.entries:
        wanted = set(args.entries.split(","))
        entries = [e for e in entries if e.name in wanted]
        if not entries:
            raise InputError(f"no corpus entries match {sorted(wanted)}")
    results = []
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        os.environ["ARRFORM_JOBS"] = "1"  # avoid nested pools in workers
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(verify_entry, e) for e in entries]
            for e, fut in zip(entries, futures):
                results.append(fut.result())
                print(f"checked {e.name} {e.params}", file=sys.stderr)
    else:
        for e in entries:
            results.append(verify_entry(e))
            print(f"checked {e.name} {e.params}", file=sys.stderr)
    ok = all(r["ok"] for r in results)
    digest = hashlib.sha256(json.dumps([_entry_key(e) for e in entries]).encode()).hexdigest()
    report = _report(
        "corpus",
        digest,
        {"entries": len(results), "all_ok": ok},
        tables={"results": results},
    )
    return report, ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrform",
        description="Exact formality, representation, rigidity and derivation computations for line arrangements.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON report")
    common.add_argument(
        "--assert", dest="assert_", action="store_true",
        help="exit 1 when the boolean verdict of the command is negative",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    sub.add_parser = None  # use add_parser below

    p = add_parser("formality", help="decide formality (or k-generation)")
    p.add_argument("file")
    p.add_argument("--rank", type=int, default=3)
    p.set_defaults(func=_cmd_formality)

    p = sub.add_parser("wprep", help="weak perspective representation space")
    p.add_argument("file")
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--realize", action="store_true")
    p.set_defaults(func=_cmd_wprep)

    p = sub.add_parser("jacobian", help="Jacobian and saturation slice dimensions")
    p.add_argument("file")
    p.add_argument("--codim", type=int, default=2)
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=_cmd_jacobian)

    p = sub.add_parser("betti", help="derivation Betti table, regularity, classification")
    p.add_argument("file")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("rigidity", help="motions, correspondence, parallel redrawing")
    p.add_argument("file")
    p.set_defaults(func=_cmd_rigidity)

    p = sub.add_parser("gen", help="emit a named corpus payload")
    p.add_argument("name")
    p.add_argument("--param", action="append", default=[])
    p.add_argument("--raw", action="store_true", help="emit only the payload JSON")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("crosscheck", help="triangle of syzygy, saturation and representation counts")
    p.add_argument("file")
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("corpus", help="verify every corpus entry against its expectations")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--entries", help="comma separated entry names to restrict to")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, verdict = args.func(args)
    except TheoremViolationError as exc:
        _emit({"error": {"kind": "internal_consistency", "message": str(exc)}}, True)
        return INTERNAL_ERROR
    except (InputError, PreconditionError, UnsupportedOperationError) as exc:
        _emit({"error": {"kind": "input", "message": str(exc)}}, True)
        return INPUT_ERROR
    except ArrformError as exc:
        _emit({"error": {"kind": "input", "message": str(exc)}}, True)
        return INPUT_ERROR
    if report:
        _emit(report, args.pretty)
    if args.assert_ and not verdict:
        return ASSERT_FAILED
    return OK


if __name__ == "__main__":
    sys.exit(main())
