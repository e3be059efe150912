import random

import pytest

from teter import (
    FiberProductRing,
    GorensteinInputError,
    NonStabilizedError,
    NoWitnessError,
    NumericalSemigroup,
    PrecisionTooSmallError,
    build_approximation,
    verify_approximation,
)
from teter.fiber import default_precision
from teter.modp import TruncatedSeries


@pytest.fixture(scope="module")
def ring345():
    return FiberProductRing(NumericalSemigroup([3, 4, 5]), 6)


@pytest.fixture(scope="module")
def ring4511():
    return FiberProductRing(NumericalSemigroup([4, 5, 11]), 11)


def test_construction_facts(ring345):
    assert (ring345.cyclic_generator, ring345.cyclic_length) == (3, 3)
    assert ring345.precision == default_precision(ring345.semigroup) == 40
    assert ring345.width == len(ring345.t_exponents) + len(ring345.u_exponents)
    assert ring345.t_exponents[:5] == (0, 3, 4, 5, 6)
    assert ring345.u_exponents[0] == 3
    # one basis generator per semigroup generator plus the first pure tail
    assert len(ring345.generator_indices) == 4


def test_construction_facts_other_shift():
    ring = FiberProductRing(NumericalSemigroup([3, 4, 5]), 5)
    assert (ring.cyclic_generator, ring.cyclic_length) == (5, 2)


def test_pairs_satisfy_the_matching_condition(ring345, ring4511):
    for ring in (ring345, ring4511):
        g, c = ring.cyclic_generator, ring.cyclic_length
        for i in range(ring.width):
            t_side, u_side = ring.basis_pair(i)
            for k in range(c):
                assert t_side.coeffs[k * g] == u_side.coeffs[k]


def exercise_products(ring, pairs):
    n = ring.precision
    tested = 0
    for i, j in pairs:
        ti, ui = ring.basis_pair(i)
        tj, uj = ring.basis_pair(j)
        if ti.top_exponent() + tj.top_exponent() > n:
            continue
        if ui.top_exponent() + uj.top_exponent() > n:
            continue
        want_t, want_u = ti * tj, ui * uj
        got_t = TruncatedSeries(ring.prime, n)
        got_u = TruncatedSeries(ring.prime, n)
        for k in ring.basis_product(i, j):
            bt, bu = ring.basis_pair(k)
            got_t, got_u = got_t + bt, got_u + bu
        assert got_t == want_t and got_u == want_u
        tested += 1
    return tested


def test_products_act_componentwise_exhaustive(ring345):
    w = ring345.width
    pairs = [(i, j) for i in range(w) for j in range(i, w)]
    assert exercise_products(ring345, pairs) > 1000


def test_products_act_componentwise_sampled(ring4511):
    rng = random.Random(42)
    w = ring4511.width
    pairs = [(rng.randrange(w), rng.randrange(w)) for _ in range(400)]
    assert exercise_products(ring4511, pairs) > 100


def test_hilbert_function(ring345, ring4511):
    assert ring345.hilbert_function(0) == 1
    assert tuple(ring345.hilbert_function(k) for k in range(8)) == (
        1, 4, 8, 12, 16, 20, 24, 28,
    )
    assert tuple(ring4511.hilbert_function(k) for k in range(8)) == (
        1, 4, 8, 13, 18, 23, 28, 33,
    )
    with pytest.raises(ValueError):
        ring345.hilbert_function(-1)
    # degree 8 needs exponents up to 45, past the cutoff at 40
    with pytest.raises(PrecisionTooSmallError):
        ring345.hilbert_function(8)


def test_multiplicity(ring345, ring4511):
    assert ring345.multiplicity() == 4
    assert ring4511.multiplicity() == 5


def test_multiplicity_budget_too_small():
    ring = FiberProductRing(NumericalSemigroup([3, 4, 5]), 6)
    with pytest.raises(NonStabilizedError):
        ring.multiplicity(max_k=1)


def test_kernel_profile(ring345):
    # the t-side kernel is a rank-one module over the series variable
    assert ring345.kernel_profile(5) == [1, 2, 3, 4, 5]


def test_socle_of_reduction(ring345, ring4511):
    assert ring345.socle_of_reduction() == 1
    assert ring345.is_gorenstein()
    assert FiberProductRing(NumericalSemigroup([3, 4, 5]), 5).socle_of_reduction() == 1
    assert ring4511.socle_of_reduction() == 1


def test_graded_socle_of_reduction(ring345, ring4511):
    assert ring345.graded_socle_of_reduction() == 1
    assert FiberProductRing(NumericalSemigroup([3, 4, 5]), 5).graded_socle_of_reduction() == 1
    assert ring4511.graded_socle_of_reduction() == 2


def test_rejects_gorenstein_base():
    with pytest.raises(GorensteinInputError):
        FiberProductRing(NumericalSemigroup([3, 4]), 6)


def test_rejects_bad_shifts():
    H = NumericalSemigroup([3, 4, 5])
    with pytest.raises(NoWitnessError):
        FiberProductRing(H, 2)  # not proper
    with pytest.raises(NoWitnessError):
        FiberProductRing(H, 7)  # proper but not cyclic


def test_rejects_bad_precision_and_modulus():
    H = NumericalSemigroup([3, 4, 5])
    with pytest.raises(PrecisionTooSmallError):
        FiberProductRing(H, 6, precision=20)
    with pytest.raises(ValueError):
        FiberProductRing(H, 6, prime=10)


def test_build_approximation_is_the_ring():
    ring = build_approximation(NumericalSemigroup([3, 4, 5]), 6)
    assert isinstance(ring, FiberProductRing)
    assert ring.shift == 6


def test_verify_approximation_certificate():
    H = NumericalSemigroup([3, 4, 5])
    cert = verify_approximation(H, 6)
    assert cert.shift == 6
    assert cert.multiplicity == 4
    assert cert.gorenstein and cert.socle_dim == 1
    assert cert.graded_socle_dim == 1
    assert cert.hilbert == (1, 4, 8, 12, 16, 20, 24, 28)
    assert cert.precision == 40
    assert cert.precisions_checked == (40, 50)
    assert cert.primes == (32003, 65521)
    assert cert.status == "numerically-verified"
    assert cert == verify_approximation(H, 6)


def test_verify_approximation_argument_checks():
    H = NumericalSemigroup([3, 4, 5])
    with pytest.raises(ValueError):
        verify_approximation(H, 6, primes=(4, 65521))
    with pytest.raises(ValueError):
        verify_approximation(H, 6, primes=(32003,))
    with pytest.raises(ValueError):
        verify_approximation(H, 6, primes=(32003, 32003))


def test_power_spaces_shrink(ring345):
    dims = [ring345.width - ring345.hilbert_function(k) for k in range(6)]
    assert dims == sorted(dims, reverse=True)
