from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The compiled core is optional; funcnet.kernels falls back to pure Python.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "funcnet._kernels",
                ["src/funcnet/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
