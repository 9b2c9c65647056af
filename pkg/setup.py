"""Build script for the optional compiled kernels.

The package is fully functional without the extension; kneserdisc.kernels
falls back to the pure-Python implementations when the compiled module is
absent.  A missing Cython or a failing C compiler therefore must not abort
the install, hence optional=True.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "kneserdisc._ckernels",
                ["src/kneserdisc/_ckernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
