"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``ANNIDEAL_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from annideal import _pykernels

python = _pykernels
compiled = None

if not os.environ.get("ANNIDEAL_PURE_PYTHON"):
    try:
        from annideal import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else python
BACKEND = active.NAME


def available():
    """Names of importable kernel backends."""
    return [k.NAME for k in (python, compiled) if k is not None]


def get(name=None):
    if name is None:
        return active
    if name == "python":
        return python
    if name == "cython":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return compiled
    raise ValueError(f"unknown kernel backend {name!r}")
