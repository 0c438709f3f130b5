"""Safe-prime groups and the modular arithmetic everything else is built on.

A group is a safe prime ``p = 2q + 1`` together with a generator ``g`` of the
subgroup of quadratic residues, which has prime order ``q``.  Scalars are
plain ``int`` values reduced modulo ``q``; group elements are plain ``int``
values in ``[1, p)`` whose ``q``-th power is 1.

Modular exponentiations done through :func:`pow_mod` are tallied by the
innermost active :func:`counting` context, which is how the benchmark
harness verifies the quadratic cost of a chained lookup.
"""

from __future__ import annotations

import secrets
import threading
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import FormatError

MR_ROUNDS = 64

_SMALL_PRIMES = [r for r in range(3, 2000, 2) if all(r % d for d in range(3, int(r**0.5) + 1, 2))]

# RFC 3526 MODP groups; 2 is a quadratic residue for both (p = 7 mod 8).
_MODP_1536 = int(
    "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74"
    "020bbea63b139b22514a08798e3404ddef9519b3cd3a431b302b0a6df25f1437"
    "4fe1356d6d51c245e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
    "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece45b3dc2007cb8a163bf05"
    "98da48361c55d39a69163fa8fd24cf5f83655d23dca3ad961c62f356208552bb"
    "9ed529077096966d670c354e4abc9804f1746c08ca237327ffffffffffffffff",
    16,
)
_MODP_2048 = int(
    "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74"
    "020bbea63b139b22514a08798e3404ddef9519b3cd3a431b302b0a6df25f1437"
    "4fe1356d6d51c245e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
    "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece45b3dc2007cb8a163bf05"
    "98da48361c55d39a69163fa8fd24cf5f83655d23dca3ad961c62f356208552bb"
    "9ed529077096966d670c354e4abc9804f1746c08ca18217c32905e462e36ce3b"
    "e39e772c180e86039b2783a2ec07a28fb5c55df06f4c52c9de2bcbf695581718"
    "3995497cea956ae515d2261898fa051015728e5a8aacaa68ffffffffffffffff",
    16,
)


@dataclass(frozen=True)
class GroupParams:
    p: int
    q: int
    g: int

    @property
    def bits(self) -> int:
        return self.p.bit_length()

    def contains(self, x: int) -> bool:
        """True if ``x`` lies in the order-q subgroup."""
        return 0 < x < self.p and pow(x, self.q, self.p) == 1

    def to_dict(self) -> dict:
        return {"p": to_hex(self.p), "q": to_hex(self.q), "g": to_hex(self.g)}

    @classmethod
    def from_dict(cls, d: dict) -> "GroupParams":
        try:
            return cls(p=from_hex(d["p"]), q=from_hex(d["q"]), g=from_hex(d["g"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed group parameters: {exc!r}") from exc


TEST_GROUP = GroupParams(p=23, q=11, g=4)

NAMED_GROUPS = {
    "modp1536": GroupParams(p=_MODP_1536, q=(_MODP_1536 - 1) // 2, g=2),
    "modp2048": GroupParams(p=_MODP_2048, q=(_MODP_2048 - 1) // 2, g=2),
}


def to_hex(x: int) -> str:
    return format(x, "x")


def from_hex(s: str) -> int:
    if not isinstance(s, str) or not s:
        raise FormatError(f"expected a hex string, got {s!r}")
    try:
        return int(s, 16)
    except ValueError as exc:
        raise FormatError(f"bad hex value {s!r}") from exc


class ExpCounter:
    """Thread-safe tally of modular exponentiations."""

    def __init__(self):
        self.count = 0
        self._lock = threading.Lock()

    def add(self, k: int = 1) -> None:
        with self._lock:
            self.count += k


_active_counter: ContextVar[Optional[ExpCounter]] = ContextVar("olt_exp_counter", default=None)


@contextmanager
def counting() -> Iterator[ExpCounter]:
    """Count exponentiations performed inside the ``with`` block.

    The counter follows the context, so worker threads started with
    :func:`contextvars.copy_context` report into it as well.
    """
    counter = ExpCounter()
    token = _active_counter.set(counter)
    try:
        yield counter
    finally:
        _active_counter.reset(token)


def record_exps(k: int) -> None:
    counter = _active_counter.get()
    if counter is not None:
        counter.add(k)


def pow_mod(base: int, exp: int, modulus: int) -> int:
    if modulus <= 1:
        raise ValueError("modulus must exceed 1")
    record_exps(1)
    return pow(base, exp, modulus)


def _default_rng():
    return secrets.SystemRandom()


def is_probable_prime(n: int, rounds: int = MR_ROUNDS, rng=None) -> bool:
    """Miller-Rabin with random bases; error probability at most 4**-rounds."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    for r in _SMALL_PRIMES:
        if n == r:
            return True
        if n % r == 0:
            return False
    rng = rng or _default_rng()
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sieve_passes(q: int) -> bool:
    # q has at least 15 bits here, so it cannot equal a small prime
    for r in _SMALL_PRIMES:
        m = q % r
        if m == 0 or (2 * m + 1) % r == 0:
            return False
    return True


def generate_params(bits: int, rng=None) -> GroupParams:
    """Draw a fresh group whose modulus has exactly ``bits`` bits."""
    if bits < 16:
        raise ValueError(f"bits must be at least 16, got {bits}")
    rng = rng or _default_rng()
    top = 1 << (bits - 2)
    while True:
        q = rng.getrandbits(bits - 1) | top | 1
        if not _sieve_passes(q):
            continue
        p = 2 * q + 1
        # cheap Fermat filters before the full test
        if pow(2, q - 1, q) != 1 or pow(2, p - 1, p) != 1:
            continue
        if is_probable_prime(q, rng=rng) and is_probable_prime(p, rng=rng):
            break
    while True:
        h = rng.randrange(2, p - 1)
        g = h * h % p
        if g != 1:
            return GroupParams(p=p, q=q, g=g)


def named_group(name: str) -> GroupParams:
    try:
        return NAMED_GROUPS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown named group {name!r}; choose from {sorted(NAMED_GROUPS)}") from None


def validate_params(params: GroupParams) -> bool:
    p, q, g = params.p, params.q, params.g
    if p != 2 * q + 1 or not (1 < g < p):
        return False
    if pow(g, q, p) != 1:
        return False
    return is_probable_prime(q) and is_probable_prime(p)


def random_scalar(params: GroupParams, rng=None) -> int:
    """Uniform element of Z_q."""
    return (rng or _default_rng()).randrange(params.q)


def random_nonzero_scalar(params: GroupParams, rng=None) -> int:
    """Uniform element of [1, q), used for keys and encryption nonces."""
    return (rng or _default_rng()).randrange(1, params.q)
