import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superduality import oracle
from superduality.cartan import Sgcm, build_merged_diagram, matrix_preset, preset
from superduality.errors import DomainError
from superduality.reflect import (
    FundamentalSystem, apply_sequence, bc_sequence, bs_sequence, g_system, head_system,
    normalize_diagonal, odd_reflection, sg_system, track_highest_weight,
)
from superduality.weights import Eps, Weight, eps, head_fw, natural_map, omega, theta_map


def t(m):
    return f"t0:{m}"


def test_gl11_reflection_negates_root_and_coroot():
    fs = FundamentalSystem.from_sgcm(matrix_preset("gl(1|1)"))
    new = odd_reflection(fs, "t0:-2")
    assert new.roots["t0:-2"] == {"t0:-2": -1}
    assert new.coroots["t0:-2"] == -fs.coroots["t0:-2"]


@pytest.mark.parametrize("sign", [-1, 1])
def test_reflect_twice_restores_system(sign):
    fs = head_system(preset("G3"), 2, "dg")
    original = fs.pairing_matrix()
    for s in ("t0:-2", "t0:1", "t0:3"):
        back = normalize_diagonal(odd_reflection(normalize_diagonal(odd_reflection(fs, s, sign)), s, sign))
        assert back.roots == fs.roots and back.parity == fs.parity
        # rows of isotropic roots may come back negated, which leaves the algebra unchanged
        for k, i in enumerate(fs.ids):
            row = back.pairing_matrix()[k]
            if fs.a(i, i) == 0:
                assert row in (original[k], [-x for x in original[k]])
            else:
                assert row == original[k]


def test_reflection_at_half_builds_beta_minus_one():
    fs = head_system(preset("gl(3|1)"), 1, "dg")
    new = odd_reflection(fs, t(1))
    assert new.roots[t(-2)] == {t(-2): 1, t(1): 1}
    assert new.roots[t(2)] == {t(1): 1, t(2): 1}
    assert new.roots[t(1)] == {t(1): -1}


def test_reflection_rejects_even_root():
    fs = head_system(preset("G3"), 1, "dg")
    with pytest.raises(DomainError):
        odd_reflection(fs, "1")


def test_normalize_keeps_valid_diagonals():
    fs = head_system(preset("G3"), 1, "dg")
    assert normalize_diagonal(fs) == fs


def test_normalize_negates_minus_two_row():
    sgcm = Sgcm(["1", "2"], ["even", "even"], [[-2, 1], [-1, 2]])
    fs = normalize_diagonal(FundamentalSystem.from_sgcm(sgcm))
    assert fs.pairing_matrix() == [[2, -1], [-1, 2]]


def test_sequences_after_reflection_have_valid_diagonals():
    fs = apply_sequence(head_system(preset("G3"), 3, "dg"), bc_sequence(3))
    for i in fs.ids:
        assert fs.a(i, i) in (0, 2)


def test_sequence_examples():
    assert bc_sequence(1) == [{t(1): 1}]
    assert bc_sequence(2) == [{t(1): 1}, {t(3): 1}, {t(1): 1, t(2): 1, t(3): 1}]
    assert bs_sequence(2) == [{t(2): 1}, {t(4): 1}, {t(2): 1, t(3): 1, t(4): 1}]
    assert len(bc_sequence(4)) == 10 and len(bs_sequence(4)) == 10


def test_apply_empty_sequence_is_identity():
    fs = head_system(preset("G3"), 1, "dg")
    assert apply_sequence(fs, []) == fs


def test_bc_one_contains_beta_minus_one():
    fs = apply_sequence(head_system(preset("G3"), 1, "dg"), bc_sequence(1))
    roots = fs.root_set()
    assert tuple(sorted({t(-2): 1, t(1): 1}.items())) in roots
    assert ((t(1), -1),) in roots


def test_bs_one_contains_beta_half():
    fs = apply_sequence(head_system(preset("G3"), 2, "dg"), bs_sequence(1))
    roots = fs.root_set()
    assert ((t(-2), 1),) in roots
    assert tuple(sorted({t(2): 1, t(3): 1}.items())) in roots


@pytest.mark.parametrize("name", ["gl(3|1)", "G3", "osp(2|4)", "D21a(3)"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_reflected_systems_match_g_and_sg_diagrams(name, n):
    head = preset(name)
    assert g_system(head, n).to_diagram() == build_merged_diagram(head, n, "g")
    assert sg_system(head, n).to_diagram() == build_merged_diagram(head, n, "sg")


def test_track_weight_unchanged_when_orthogonal():
    fs = head_system(preset("gl(3|1)"), 2, "dg")
    lam = head_fw("1") * 3
    assert track_highest_weight(lam, fs, bc_sequence(2)) == lam


def test_track_single_box():
    fs = head_system(preset("gl(3|1)"), 1, "dg")
    lam = eps(0, 2)
    assert theta_map(lam) == eps(0, 1)
    assert track_highest_weight(theta_map(lam), fs, bc_sequence(1)) == lam


def test_track_two_one_through_bs():
    fs = head_system(preset("gl(3|1)"), 2, "dg")
    lam = eps(0, 2) * 2 + eps(0, 4)
    assert track_highest_weight(theta_map(lam), fs, bs_sequence(2)) == natural_map(lam)


def _expanded_roots(fs, height):
    """Positive roots of a system written in the original simple roots."""
    sgcm = fs.to_sgcm()
    out = {}
    for beta, value in oracle.root_multiplicities(sgcm, height).items():
        expr = {}
        for i, c in zip(sgcm.indices, beta):
            for k, v in fs.roots[i].items():
                expr[k] = expr.get(k, 0) + c * v
        out[tuple(sorted((k, v) for k, v in expr.items() if v))] = value
    return out


def test_root_set_changes_by_one_sign_flip():
    fs = head_system(preset("gl(2|1)"), 1, "dg")
    before = _expanded_roots(fs, 10)
    for s in (t(-2), t(1), t(2)):
        after = _expanded_roots(normalize_diagonal(odd_reflection(fs, s)), 10)
        flipped = ((s, -1),)
        expected = dict(before)
        del expected[((s, 1),)]
        expected[flipped] = before[((s, 1),)]
        assert after == expected


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_theta_weight_tracks_to_even_and_mixed_sides(parts):
    mu = tuple(sorted((p for p in parts if p), reverse=True))
    fs = head_system(preset("gl(3|1)"), 4, "dg")
    lam = Weight({Eps(0, 2 * (j + 1)): p for j, p in enumerate(mu)}) + head_fw("2") + omega() * 2
    for n in range(1, 5):
        if len(mu) <= n:
            assert track_highest_weight(theta_map(lam), fs, bc_sequence(n)) == lam
        if not mu or mu[0] <= n:
            assert track_highest_weight(theta_map(lam), fs, bs_sequence(n)) == natural_map(lam)


def test_reflected_sign_rejects_other_values():
    fs = head_system(preset("G3"), 1, "dg")
    with pytest.raises(DomainError):
        odd_reflection(fs, t(1), reflected_sign=2)
