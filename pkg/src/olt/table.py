"""Oblivious lookup tables.

A function ``f`` on a finite set ``X`` of exponents is turned into a public
vector ``ell`` with ``<(1, x, ..., x**(n-1)), ell> = f(x)`` in Z_q for every
``x`` in ``X``.  An input ``x`` is supplied as the ciphertexts of
``g**(x**k)`` for ``k = 0..n-1``; raising them to the entries of ``ell`` and
multiplying gives a ciphertext of ``g**f(x)`` without decrypting anything.

For ``f: X -> X`` the n columns of a :class:`LookupMatrix` produce all n
components of the encoding of ``f(x)``, so lookups can be chained.
"""

from __future__ import annotations

import contextvars
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple

from . import kernels
from .elgamal import Ciphertext, encrypt, rerandomize
from .errors import (
    DimensionMismatch,
    DuplicateInput,
    FormatError,
    NotClosed,
    ParamsMismatch,
    TableTooLarge,
    UnknownInput,
)
from .group import GroupParams, from_hex, pow_mod, record_exps, to_hex
from .linalg import dot, mat_mul, mat_vec, power_row, random_invertible, solve, vandermonde


@dataclass(frozen=True)
class FunctionSpec:
    """The graph of ``f`` as ``(x, y)`` pairs of exponents."""

    pairs: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "FunctionSpec":
        return cls(tuple((int(x), int(y)) for x, y in mapping.items()))

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def xs(self) -> list:
        return [x for x, _ in self.pairs]

    @property
    def ys(self) -> list:
        return [y for _, y in self.pairs]

    def reduced(self, q: int) -> "FunctionSpec":
        return FunctionSpec(tuple((x % q, y % q) for x, y in self.pairs))

    def check(self, q: int, closed: bool = False) -> None:
        n = self.n
        if n < 1:
            raise DimensionMismatch("a function needs at least one point")
        if n >= q:
            raise TableTooLarge(f"n = {n} must be smaller than q")
        xs = {x % q for x in self.xs}
        if len(xs) != n:
            raise DuplicateInput("x-values must be pairwise distinct mod q")
        if closed:
            stray = [y for y in self.ys if y % q not in xs]
            if stray:
                raise NotClosed(f"f leaves its domain at y = {stray[0]}")

    def apply(self, x: int, q: int) -> int:
        for a, b in self.pairs:
            if a % q == x % q:
                return b % q
        raise UnknownInput(f"{x} is not in the domain")

    def to_json(self) -> list:
        return [{"x": to_hex(x), "y": to_hex(y)} for x, y in self.pairs]

    @classmethod
    def from_json(cls, data) -> "FunctionSpec":
        if not isinstance(data, list):
            raise FormatError("function spec must be a JSON array")
        try:
            return cls(tuple((from_hex(e["x"]), from_hex(e["y"])) for e in data))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed function spec entry: {exc!r}") from exc


@dataclass(frozen=True)
class SingleTable:
    ell: Tuple[int, ...]
    params: GroupParams

    @property
    def n(self) -> int:
        return len(self.ell)

    def to_json(self) -> dict:
        return {"n": self.n, "params": self.params.to_dict(), "ell": [to_hex(v) for v in self.ell]}

    @classmethod
    def from_json(cls, data: dict) -> "SingleTable":
        try:
            ell = tuple(from_hex(v) for v in data["ell"])
            params = GroupParams.from_dict(data["params"])
            n = data["n"]
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed table: {exc!r}") from exc
        if n != len(ell):
            raise FormatError(f"table declares n = {n} but has {len(ell)} entries")
        return cls(ell, params)


@dataclass(frozen=True)
class LookupMatrix:
    """Columns ``ell_1..ell_n``; column j yields ``g**(f(x)**(j-1))``."""

    columns: Tuple[Tuple[int, ...], ...]
    params: GroupParams

    @property
    def n(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> SingleTable:
        return SingleTable(self.columns[j], self.params)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "params": self.params.to_dict(),
            "columns": [[to_hex(v) for v in col] for col in self.columns],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LookupMatrix":
        try:
            cols = tuple(tuple(from_hex(v) for v in col) for col in data["columns"])
            params = GroupParams.from_dict(data["params"])
            n = data.get("n", len(cols))
        except (KeyError, TypeError, AttributeError) as exc:
            raise FormatError(f"malformed lookup matrix: {exc!r}") from exc
        if n != len(cols) or any(len(c) != n for c in cols):
            raise FormatError("lookup matrix must be n x n")
        return cls(cols, params)


@dataclass(frozen=True)
class EncodedInput:
    """Ciphertexts of ``g**(x**0), ..., g**(x**(n-1))``."""

    cts: Tuple[Ciphertext, ...]
    params: Optional[GroupParams] = None

    @property
    def n(self) -> int:
        return len(self.cts)

    def to_json(self) -> dict:
        out = {"n": self.n, "cts": [c.to_dict() for c in self.cts]}
        if self.params is not None:
            out["params"] = self.params.to_dict()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "EncodedInput":
        try:
            cts = tuple(Ciphertext.from_dict(c) for c in data["cts"])
            params = GroupParams.from_dict(data["params"]) if "params" in data else None
            n = data.get("n", len(cts))
        except (KeyError, TypeError, AttributeError) as exc:
            raise FormatError(f"malformed encoded input: {exc!r}") from exc
        if n != len(cts):
            raise FormatError(f"encoding declares n = {n} but has {len(cts)} ciphertexts")
        return cls(cts, params)


def interpolate(xs: Sequence[int], targets: Sequence[int], params: GroupParams, rng=None, mix: bool = True):
    """Table vector ``ell`` with ``V ell = targets`` for the Vandermonde ``V`` of ``xs``.

    With ``mix`` set, a random invertible ``U`` is drawn, ``(V U) alpha = targets``
    is solved and ``ell = U alpha`` is returned.  The result does not depend on
    ``U``; ``mix=False`` solves ``V ell = targets`` directly.
    """
    q = params.q
    V = vandermonde(xs, q)
    if not mix:
        return solve(V, targets, q)
    U = random_invertible(len(xs), q, rng)
    alpha = solve(mat_mul(V, U, q), targets, q)
    return mat_vec(U, alpha, q)


def build_single_table(spec: FunctionSpec, params: GroupParams, rng=None, mix: bool = True) -> SingleTable:
    spec.check(params.q)
    q = params.q
    ell = interpolate(spec.xs, [y % q for y in spec.ys], params, rng, mix)
    return SingleTable(tuple(ell), params)


def build_lookup_matrix(spec: FunctionSpec, params: GroupParams, rng=None, mix: bool = True) -> LookupMatrix:
    spec.check(params.q, closed=True)
    q, n = params.q, spec.n
    powers = [power_row(y % q, n, q) for y in spec.ys]
    columns = []
    for j in range(n):
        targets = [row[j] for row in powers]
        columns.append(tuple(interpolate(spec.xs, targets, params, rng, mix)))
    return LookupMatrix(tuple(columns), params)


def encode(x: int, n: int, pk: int, params: GroupParams, rng=None) -> EncodedInput:
    if n < 1:
        raise ValueError("n must be positive")
    p, g = params.p, params.g
    cts = tuple(encrypt(pow_mod(g, e, p), pk, params, rng) for e in power_row(x % params.q, n, params.q))
    return EncodedInput(cts, params)


def _check_compatible(enc: EncodedInput, n: int, params: GroupParams) -> None:
    if enc.params is not None and enc.params != params:
        raise ParamsMismatch("input and table were made over different groups")
    if enc.n != n:
        raise DimensionMismatch(f"input has {enc.n} components, table expects {n}")


def eval_single(enc: EncodedInput, table: SingleTable) -> Ciphertext:
    """Ciphertext of ``g**<(1, x, ...), ell>`` from an encoding of ``x``.

    Every entry of the table costs one ciphertext exponentiation, zero
    entries included, so the work done never depends on the table.
    """
    _check_compatible(enc, table.n, table.params)
    a, b = kernels.fold_pow(
        [c.a for c in enc.cts], [c.b for c in enc.cts], table.ell, table.params.p
    )
    record_exps(2 * table.n)
    return Ciphertext(a, b)


def _eval_column(as_, bs, col, p):
    pair = kernels.fold_pow(as_, bs, col, p)
    record_exps(2 * len(col))
    return pair


def eval_chain(
    enc: EncodedInput,
    L: LookupMatrix,
    pk: Optional[int] = None,
    rng=None,
    rerandomize_output: bool = False,
    workers: Optional[int] = None,
) -> EncodedInput:
    """Encoding of ``f(x)`` from an encoding of ``x``.

    ``workers`` > 1 evaluates the columns on a thread pool; the compiled
    kernel releases the GIL so this gives real parallelism.
    """
    params = L.params
    n = L.n
    _check_compatible(enc, n, params)
    if rerandomize_output and pk is None:
        raise ValueError("re-randomization needs the public key")
    as_ = [c.a for c in enc.cts]
    bs = [c.b for c in enc.cts]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(contextvars.copy_context().run, _eval_column, as_, bs, col, params.p)
                for col in L.columns
            ]
            pairs = [f.result() for f in futures]
    else:
        pairs = kernels.fold_pow_columns(as_, bs, L.columns, params.p)
        record_exps(2 * n * n)
    out = [Ciphertext(a, b) for a, b in pairs]
    if rerandomize_output:
        out = [rerandomize(c, pk, params, rng) for c in out]
    return EncodedInput(tuple(out), params)


def plain_lookup(x: int, spec: FunctionSpec, table: SingleTable) -> int:
    """``<(1, x, ..., x**(n-1)), ell>`` for ``x`` in the domain of ``spec``."""
    q = table.params.q
    if x % q not in {v % q for v in spec.xs}:
        raise UnknownInput(f"{x} is not in the domain")
    return dot(power_row(x % q, table.n, q), table.ell, q)
