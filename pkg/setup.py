import os

from setuptools import Extension, setup

# The compiled kernel is a speedup, not a requirement: the package falls back
# to the pure-Python kernels when the extension is absent or fails to build.
# Set MORAVA3_PURE=1 to skip the extension entirely.
ext_modules = []
if os.environ.get("MORAVA3_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "morava3._kernel_c",
                    ["src/morava3/_kernel_c.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
