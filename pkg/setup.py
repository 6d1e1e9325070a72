"""Build script for the optional compiled kernels.

The package is pure Python by contract; the extension module only
accelerates a few integer inner loops.  If Cython or a C compiler is
missing the build degrades to the pure-Python kernels silently.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "cubictorsion._kernels_c",
                ["src/cubictorsion/_kernels_c.pyx"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
