"""Build hook: compiles the optional kernel extension when Cython is present.

Set HCPOLY_NO_EXT=1 to skip the extension entirely; the package then runs on
the pure-Python kernel fallbacks with identical results.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HCPOLY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hcpoly/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
