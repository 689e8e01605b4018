import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CANTORSHIFT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cantorshift._kernel._ckernel",
                    ["src/cantorshift/_kernel/_ckernel.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The package runs on the pure-Python kernel when Cython is absent.
        ext_modules = []

setup(ext_modules=ext_modules)
