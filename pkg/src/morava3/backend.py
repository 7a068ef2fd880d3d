"""Kernel selection: compiled extension when possible, pure Python otherwise.

The compiled kernels store residues in 64-bit words, so they are only used
when the working modulus fits (3^N with N <= 39; the default profile uses
N = 24).  Larger moduli silently fall back to the pure kernels, which have
no size limit.

The choice can be pinned with the environment variable MORAVA3_BACKEND or
at runtime with set_backend(); both accept "python", "compiled" or "auto".
"""

import os

from . import _kernel_py

try:
    from . import _kernel_c
except ImportError:
    _kernel_c = None

HAVE_COMPILED = _kernel_c is not None

# Largest modulus whose residues fit the compiled kernels' 64-bit words.
COMPILED_MOD_CAP = 3**39

_MODES = ("auto", "python", "compiled")
_mode = "auto"


def set_backend(mode):
    """Pin the kernel choice; "auto" restores the default selection."""
    global _mode
    if mode is None:
        mode = "auto"
    if mode not in _MODES:
        raise ValueError(f"unknown backend {mode!r}, expected one of {_MODES}")
    if mode == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernels requested but morava3._kernel_c is not built")
    _mode = mode


def current_mode():
    return _mode


def kernel_for(mod):
    """Return the kernel module to use for arithmetic modulo `mod`."""
    if _mode == "python":
        return _kernel_py
    if _mode == "compiled":
        if mod > COMPILED_MOD_CAP:
            raise RuntimeError(
                f"modulus {mod} exceeds the compiled kernels' 64-bit cap; "
                "use the python backend for 3-adic precision above 39 digits"
            )
        return _kernel_c
    if HAVE_COMPILED and mod <= COMPILED_MOD_CAP:
        return _kernel_c
    return _kernel_py


def active_backend(mod=None):
    """Name of the backend that kernel_for would pick ("compiled"/"python")."""
    k = kernel_for(mod if mod is not None else 3**24)
    return "compiled" if k is _kernel_c else "python"


_env = os.environ.get("MORAVA3_BACKEND", "").strip().lower()
if _env:
    set_backend(_env)
