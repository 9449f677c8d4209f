from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; negamma.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("negamma._kernels", ["src/negamma/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
