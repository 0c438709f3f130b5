from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "olt._kernels",
                ["src/olt/_kernels.pyx"],
                libraries=["gmp"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    # fall back to the pure-Python kernels if GMP or a compiler is missing
    for ext in ext_modules:
        ext.optional = True

setup(ext_modules=ext_modules)
