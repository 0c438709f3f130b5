import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from olt.group import (
    NAMED_GROUPS,
    GroupParams,
    counting,
    generate_params,
    is_probable_prime,
    named_group,
    pow_mod,
    random_nonzero_scalar,
    random_scalar,
    validate_params,
)


def test_fixed_group_generator_has_order_q():
    assert pow(4, 11, 23) == 1


@pytest.mark.parametrize(
    "p, q, g, ok",
    [(23, 11, 4, True), (23, 11, 1, False), (25, 12, 2, False), (23, 11, 5, False), (23, 10, 4, False)],
)
def test_validate_params(p, q, g, ok):
    assert validate_params(GroupParams(p, q, g)) is ok


@pytest.mark.parametrize("bits", [16, 17, 32, 64, 128])
def test_generate_params(bits):
    params = generate_params(bits, random.Random(bits))
    assert params.p.bit_length() == bits
    assert params.p == 2 * params.q + 1
    assert pow(params.g, params.q, params.p) == 1 and params.g != 1
    assert validate_params(params)


def test_generate_params_is_seed_reproducible():
    assert generate_params(48, random.Random(7)) == generate_params(48, random.Random(7))


def test_generate_params_rejects_tiny_sizes():
    with pytest.raises(ValueError):
        generate_params(8, random.Random(0))


@pytest.mark.parametrize("name, bits", [("modp1536", 1536), ("modp2048", 2048)])
def test_named_groups_validate(name, bits):
    params = named_group(name)
    assert params.bits == bits
    assert validate_params(params)


def test_unknown_named_group():
    with pytest.raises(ValueError):
        named_group("modp999")


def test_primality_against_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))

    for n in range(0, 5000):
        assert is_probable_prime(n) == trial(n), n


def test_carmichael_numbers_are_composite():
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265, 321197185):
        assert not is_probable_prime(n)


@pytest.mark.parametrize("base, exp, mod, want", [(4, 11, 23, 1), (4, 5, 23, 12), (7, 0, 23, 1), (9, 0, 2, 1)])
def test_pow_mod(base, exp, mod, want):
    assert pow_mod(base, exp, mod) == want


def test_pow_mod_rejects_trivial_modulus():
    with pytest.raises(ValueError):
        pow_mod(3, 2, 1)


def test_counter_scopes():
    pow_mod(2, 3, 5)
    with counting() as outer:
        pow_mod(2, 3, 5)
        with counting() as inner:
            pow_mod(2, 3, 5)
            pow_mod(2, 3, 5)
        pow_mod(2, 3, 5)
    assert (outer.count, inner.count) == (2, 2)


@settings(max_examples=200)
@given(st.integers(min_value=0), st.integers(min_value=0))
def test_exponents_close_mod_q(a, b):
    for params in (GroupParams(23, 11, 4), NAMED_GROUPS["modp1536"]):
        p, q, g = params.p, params.q, params.g
        a_, b_ = a % q, b % q
        assert pow_mod(g, a_, p) * pow_mod(g, b_, p) % p == pow_mod(g, (a_ + b_) % q, p)


def test_random_scalar_range(small):
    rng = random.Random(1)
    draws = [random_scalar(small, rng) for _ in range(2000)]
    assert min(draws) == 0 and max(draws) == small.q - 1
    nonces = [random_nonzero_scalar(small, rng) for _ in range(2000)]
    assert min(nonces) == 1 and max(nonces) == small.q - 1


def test_random_scalar_independent_streams(group64):
    assert random_scalar(group64, random.Random(1)) != random_scalar(group64, random.Random(2))
    assert random_scalar(group64) != random_scalar(group64)


def test_random_scalar_uniform_chi_square(small):
    rng = random.Random(99)
    draws = 10**6
    counts = [0] * small.q
    for _ in range(draws):
        counts[random_scalar(small, rng)] += 1
    expected = draws / small.q
    sigma = (draws * (1 / small.q) * (1 - 1 / small.q)) ** 0.5
    assert all(abs(c - expected) <= 5 * sigma for c in counts)
    chi2 = sum((c - expected) ** 2 / expected for c in counts)
    # 10 degrees of freedom; 29.59 is the 0.999 quantile
    assert chi2 < 29.59


def test_params_json_round_trip(group64):
    d = group64.to_dict()
    assert all(v == v.lower() and not v.startswith("0") for v in d.values())
    assert GroupParams.from_dict(d) == group64
