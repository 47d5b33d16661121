import numpy as np
from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension(
            "crosscap.jets._jetcore",
            ["src/crosscap/jets/_jetcore.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3"],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )],
        language_level=3,
    )
except ImportError:
    # pure-python fallback is selected at import time; the wheel still works
    ext_modules = []

setup(ext_modules=ext_modules)
