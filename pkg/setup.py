import os

from setuptools import setup
from setuptools.extension import Extension


def ext_modules():
    if os.environ.get("MAMINDA_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    exts = [Extension("maminda._kernels",
                      [os.path.join("src", "maminda", "_kernels.pyx")],
                      include_dirs=[numpy.get_include()],
                      extra_compile_args=["-O3"],
                      optional=True)]
    return cythonize(exts, compiler_directives={"language_level": "3"})


setup(ext_modules=ext_modules())
