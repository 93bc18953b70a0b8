from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fibquot._kernels._core",
                ["src/fibquot/_kernels/_core.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython available: install pure-Python only, the kernel layer
    # falls back automatically at import time.
    extensions = []

setup(ext_modules=extensions)
