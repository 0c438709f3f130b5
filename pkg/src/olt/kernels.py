"""Backend selection for the multi-exponentiation kernels.

The compiled GMP extension is preferred; the pure-Python version is used if
the extension is missing or ``OLT_PURE_PYTHON`` is set to a non-empty value.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _fallback}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

_active = _fallback if os.environ.get("OLT_PURE_PYTHON") or _compiled is None else _compiled


def available() -> list:
    return sorted(_BACKENDS)


def backend() -> str:
    return "compiled" if _active is _compiled else "python"


def set_backend(name: str) -> None:
    global _active
    if name == "auto":
        name = "compiled" if _compiled is not None else "python"
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {available()}") from None


@contextmanager
def use_backend(name: str):
    """Temporarily switch backends; not meant to be mixed with concurrent callers."""
    global _active
    saved = _active
    set_backend(name)
    try:
        yield
    finally:
        _active = saved


def fold_pow(as_, bs, exps, p):
    return _active.fold_pow(as_, bs, exps, p)


def fold_pow_columns(as_, bs, columns, p):
    return _active.fold_pow_columns(as_, bs, columns, p)
