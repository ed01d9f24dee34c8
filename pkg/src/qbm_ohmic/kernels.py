"""Select the Fokker-Planck kernel backend at import time.

The compiled extension is used when it was built; otherwise, or when
``QBM_OHMIC_PURE_PYTHON=1`` is set, the numpy version is used.
"""
import os

from . import _fpkernel_py

python_fp_rhs = _fpkernel_py.fp_rhs

try:
    if os.environ.get("QBM_OHMIC_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from ._fpkernel import fp_rhs as compiled_fp_rhs
except ImportError:
    compiled_fp_rhs = None

fp_rhs = compiled_fp_rhs if compiled_fp_rhs is not None else python_fp_rhs
BACKEND = "cython" if compiled_fp_rhs is not None else "python"
