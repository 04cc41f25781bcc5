from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    # optional: the package falls back to zipcone._kernels_py when the
    # compiled module is missing or fails to build.
    ext_modules = cythonize(
        [
            Extension(
                "zipcone._ckernels",
                ["src/zipcone/_ckernels.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
