"""Pure-Python multi-exponentiation kernels.

Same contract as the compiled ``_kernels`` extension; used when it is not
built or when ``OLT_PURE_PYTHON`` is set.
"""


def fold_pow(as_, bs, exps, p):
    """Return ``(prod a_k**e_k, prod b_k**e_k) mod p``."""
    A = B = 1
    for a, b, e in zip(as_, bs, exps):
        A = A * pow(a, e, p) % p
        B = B * pow(b, e, p) % p
    return A, B


def fold_pow_columns(as_, bs, columns, p):
    """:func:`fold_pow` once per exponent column."""
    return [fold_pow(as_, bs, col, p) for col in columns]
