"""Build script.  The Cython extension is optional: if it cannot be built
the package falls back to the pure-Python elimination kernel."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("arrform._ckernel", ["src/arrform/_ckernel.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
