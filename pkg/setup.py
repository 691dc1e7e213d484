from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "bechex._kernel._fast",
                ["src/bechex/_kernel/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: ship pure Python only; bechex._kernel falls back at import.
    extensions = []

setup(ext_modules=extensions)
