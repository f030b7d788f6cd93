"""Build script: compiles the optional elimination kernel.

The package is pure Python; the Cython extension is a drop-in twin of
``starspline._bareiss`` selected at import time when present.  Any build
failure (no Cython, no compiler) falls back to a pure-Python install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "starspline._bareiss_cy",
                ["src/starspline/_bareiss_cy.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001
    print(f"starspline: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
