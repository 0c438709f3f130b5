"""Multiplicative ElGamal over the order-q subgroup of a safe-prime group.

Plaintexts are group elements.  A ciphertext of ``m`` under ``pk = g**sk`` is
``(g**r, m * pk**r)`` for a nonce ``r`` drawn from ``[1, q)``.  Component-wise
products multiply plaintexts, component-wise powers exponentiate them.

Randomness comes from an injected ``random.Random``-compatible object; when
none is given the system CSPRNG is used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormatError, InvalidMessage
from .group import GroupParams, from_hex, pow_mod, random_nonzero_scalar, record_exps, to_hex


@dataclass(frozen=True)
class Ciphertext:
    a: int
    b: int

    def to_dict(self) -> dict:
        return {"a": to_hex(self.a), "b": to_hex(self.b)}

    @classmethod
    def from_dict(cls, d: dict) -> "Ciphertext":
        try:
            return cls(a=from_hex(d["a"]), b=from_hex(d["b"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed ciphertext: {exc!r}") from exc


@dataclass(frozen=True)
class KeyPair:
    sk: int
    pk: int
    params: GroupParams

    @classmethod
    def from_secret(cls, sk: int, params: GroupParams) -> "KeyPair":
        if not 1 <= sk < params.q:
            raise ValueError("secret exponent must lie in [1, q)")
        return cls(sk=sk, pk=pow_mod(params.g, sk, params.p), params=params)

    def public_dict(self) -> dict:
        return {"pk": to_hex(self.pk)}

    def secret_dict(self) -> dict:
        return {"sk": to_hex(self.sk), "pk": to_hex(self.pk)}


def keygen(params: GroupParams, rng=None) -> KeyPair:
    return KeyPair.from_secret(random_nonzero_scalar(params, rng), params)


def encrypt(m: int, pk: int, params: GroupParams, rng=None) -> Ciphertext:
    if not params.contains(m):
        raise InvalidMessage(f"{m} is not in the order-{params.q} subgroup")
    r = random_nonzero_scalar(params, rng)
    p = params.p
    return Ciphertext(pow_mod(params.g, r, p), m * pow_mod(pk, r, p) % p)


def decrypt(c: Ciphertext, kp: KeyPair) -> int:
    p = kp.params.p
    shared = pow_mod(c.a, kp.sk, p)
    return c.b * pow(shared, -1, p) % p


def ct_mul(c1: Ciphertext, c2: Ciphertext, params: GroupParams) -> Ciphertext:
    p = params.p
    return Ciphertext(c1.a * c2.a % p, c1.b * c2.b % p)


def ct_pow(c: Ciphertext, e: int, params: GroupParams) -> Ciphertext:
    p = params.p
    record_exps(2)
    e %= params.q
    return Ciphertext(pow(c.a, e, p), pow(c.b, e, p))


def rerandomize(c: Ciphertext, pk: int, params: GroupParams, rng=None) -> Ciphertext:
    """Fresh-looking ciphertext of the same plaintext."""
    return ct_mul(c, encrypt(1, pk, params, rng), params)
