"""Build script: compiles the optional Cython search kernels.

The package is fully functional without the extension; cfhyper.kernels
falls back to the pure-Python implementation when the compiled module is
missing. Any failure here therefore only costs speed, not correctness.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("cfhyper: Cython not available, building without compiled kernels",
              file=sys.stderr)
        return []
    try:
        return cythonize(
            [Extension("cfhyper._kernels_cy", ["src/cfhyper/_kernels_cy.pyx"])],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover - depends on toolchain
        print(f"cfhyper: skipping compiled kernels ({exc})", file=sys.stderr)
        return []


setup(ext_modules=extensions())
