"""Build script: compiles the CSR kernel extension when Cython + a C compiler
are available, otherwise installs pure-Python only (burnlab falls back to
burnlab._pykernels at import time)."""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "burnlab._speedups",
                ["src/burnlab/_speedups.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
