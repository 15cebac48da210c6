"""Build the optional compiled kernels; the package works without them."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    pass
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("exact3._kernels", ["src/exact3/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
