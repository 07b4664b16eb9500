import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ABELIANCFT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "abeliancft._kernels._fast",
                    ["src/abeliancft/_kernels/_fast.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install with the pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
