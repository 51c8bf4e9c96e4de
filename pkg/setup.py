"""Build script.  The Cython kernel is optional: if Cython (or a C compiler)
is unavailable the package installs with the pure-Python kernel only.

Set SPEXM_NO_EXT=1 to skip the extension build explicitly.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SPEXM_NO_EXT") != "1" and os.path.exists("src/spexm/_kernel_cy.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/spexm/_kernel_cy.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
