"""Build script for the compiled evaluation core.

The extension is optional at runtime: if the build is skipped or fails,
`aieo.backend` falls back to the pure-Python interpreter in `aieo._purecore`.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("aieo._fastcore", ["src/aieo/_fastcore.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
