import os

import numpy as np
from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
if not os.environ.get("HANKELTENSOR_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension(
                "hankeltensor._kernels",
                ["src/hankeltensor/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
