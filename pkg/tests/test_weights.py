from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superduality.errors import DomainError
from superduality.symfunc import conjugate
from superduality.weights import (
    Coroot, CorootAlpha, Eps, HCoroot, Weight, eps, frobenius_theta, gl_partition_weight,
    gl_weight_partition, h_to_coroot, head_fw, in_P_plus, in_P_plusplus_G, in_P_plusplus_script,
    natural_inverse, natural_map, omega, pairing, tail_fw, tail_partition, theta_inverse,
    theta_inverse_weight, theta_map, truncate_weight, varpi, weight_from_json, weight_to_json,
)

partitions = st.lists(st.integers(1, 6), min_size=0, max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def partition_weight(mu, tail=0):
    """Epsilon coefficients mu_j at the integer indices 2j."""
    return Weight({Eps(tail, 2 * (j + 1)): p for j, p in enumerate(mu)})


def theta_oracle(mu):
    """Interleave conjugate parts minus (j-1) with parts minus j, clipped at zero."""
    conj = conjugate(mu)
    seq = []
    for j in range(1, max(len(mu), len(conj)) + 2):
        column = conj[j - 1] if j <= len(conj) else 0
        row = mu[j - 1] if j <= len(mu) else 0
        seq += [max(column - (j - 1), 0), max(row - j, 0)]
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def test_eps_minus_one_is_tail_fundamental_weight():
    assert eps(0, -2) == tail_fw(0, -2)


def test_eps_half_in_fundamental_weights():
    assert eps(0, 1) == -tail_fw(0, 1) + tail_fw(0, -2)


def test_eps_three_halves_and_h_three_halves():
    assert eps(0, 3) == -(tail_fw(0, 3) - tail_fw(0, 2))
    h = Coroot({HCoroot(0, 3): 1})
    assert h == -Coroot({HCoroot(0, 2): 1}) + Coroot({CorootAlpha("t0:2"): 1})


def test_varpi_examples():
    assert varpi(-2) == tail_fw(0, -2)
    assert varpi(4) == eps(0, 4) + eps(0, 2) + tail_fw(0, -2)
    assert varpi(3) == -eps(0, 3) - eps(0, 1)


def test_eps_h_duality():
    indices = [-2] + list(range(1, 9))
    for i in indices:
        for j in indices:
            assert pairing(eps(0, i), h_to_coroot(0, j)) == int(i == j)


def test_omega_and_head_weights_vanish_on_tail_h():
    for j in [-2] + list(range(1, 7)):
        h = h_to_coroot(0, j)
        assert pairing(head_fw("1"), h) == 0
    # omega is seen only through the derivation term of each h
    assert pairing(omega(), h_to_coroot(0, -2)) == -1
    assert pairing(omega(), h_to_coroot(0, 1)) == 1


def test_varpi_dual_to_beta_coroots():
    # beta coroots on the even chain: h_{-1} - h_1, then h_j - h_{j+1}
    def beta(index):
        nxt = 2 if index == -2 else index + 2
        return h_to_coroot(0, index) - h_to_coroot(0, nxt)
    indices = [-2, 2, 4, 6]
    for i in indices:
        for j in indices:
            value = pairing(varpi(i), beta(j))
            assert value == int(i == j)


def test_frobenius_theta_examples():
    assert frobenius_theta(()) == ()
    assert frobenius_theta((1,)) == (1,)
    assert frobenius_theta((3, 1)) == (2, 2)


def test_natural_and_theta_examples():
    head = head_fw("1") * 2 + omega()
    assert natural_map(head) == head and theta_map(head) == head
    assert natural_map(partition_weight((2,))) == eps(0, 1) + eps(0, 3)
    assert theta_map(partition_weight((3, 1))) == eps(0, 1) * 2 + eps(0, 2) * 2


def test_p_plus_examples():
    assert in_P_plus(Weight())
    assert not in_P_plus(head_fw("1"), levi=["1"], odd=["1"])
    assert not in_P_plus(partition_weight((1, 2)))
    assert in_P_plusplus_script(Weight())
    assert not in_P_plusplus_script(eps(0, 1))
    assert in_P_plusplus_script(eps(0, -2) * 2 + eps(0, 1))


def test_p_plusplus_g_needs_first_row_largest():
    assert in_P_plusplus_G(eps(0, -2) * 2 + eps(0, 2))
    assert not in_P_plusplus_G(eps(0, -2) + eps(0, 2) * 2)


def test_truncation_examples():
    assert truncate_weight(omega(), "dg", 0) == -eps(0, -2) + eps(0, 1)
    assert truncate_weight(eps(0, 2), "sg", 0) is None
    assert truncate_weight(eps(0, 1), "sg", 0) == eps(0, 1)


def test_json_round_trip_and_errors():
    w = head_fw("a1") * Fraction(3, 2) + eps(1, 3) - omega(1) + tail_fw(0, 4)
    assert weight_from_json(weight_to_json(w)) == w
    with pytest.raises(DomainError):
        weight_from_json({"terms": [{"basis": "nope", "coeff": "1"}]})


def test_gl_partition_weight_round_trip():
    for nu in [(), (1,), (2, 1), (3, 2, 1), (1, 1, 1, 1, 1), (2, 2, 1, 1)]:
        w = gl_partition_weight(nu, 3)
        assert gl_weight_partition(w, 3) == nu
        assert gl_weight_partition(natural_map(w), 3, flavor="sg") == nu


@settings(max_examples=200, deadline=None)
@given(partitions)
def test_maps_agree_with_partition_oracles(mu):
    w = partition_weight(mu)
    assert tail_partition(w) == mu
    conj = conjugate(mu)
    expected_natural = Weight({Eps(0, 2 * j + 1): p for j, p in enumerate(conj)})
    assert natural_map(w) == expected_natural
    theta = frobenius_theta(mu)
    assert theta == theta_oracle(mu)
    assert theta_map(w) == Weight({Eps(0, k + 1): c for k, c in enumerate(theta)})
    assert theta_inverse(theta) == mu
    assert natural_inverse(natural_map(w)) == w
    assert theta_inverse_weight(theta_map(w)) == w


@settings(max_examples=100, deadline=None)
@given(partitions, partitions)
def test_maps_injective(mu, nu):
    if mu != nu:
        assert natural_map(partition_weight(mu)) != natural_map(partition_weight(nu))
        assert theta_map(partition_weight(mu)) != theta_map(partition_weight(nu))


@settings(max_examples=100, deadline=None)
@given(partitions)
def test_theta_and_natural_share_partition(mu):
    w = partition_weight(mu)
    recovered = theta_inverse(frobenius_theta(mu))
    half = [natural_map(w).coeff(Eps(0, 2 * j + 1)) for j in range(len(conjugate(mu)))]
    assert tuple(half) == conjugate(recovered)
