"""Build the optional Cython kernel; the package falls back to numpy without it."""
import warnings

from setuptools import Extension, setup


def _extensions():
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ModuleNotFoundError:
        warnings.warn("cython/numpy missing: installing pure-Python kernels only")
        return []
    ext = Extension(
        "qbm_ohmic._fpkernel",
        ["src/qbm_ohmic/_fpkernel.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
