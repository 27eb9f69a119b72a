"""Build script for the optional compiled routing kernels.

The package is fully functional without the extension: trigreedy.kernels
falls back to the pure-Python implementation when the compiled module is
absent or fails to import.  We therefore treat any build failure of the
extension as non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/trigreedy/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    import sys

    print(f"warning: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
