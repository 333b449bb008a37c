import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superduality import oracle
from superduality.cartan import EVEN, ODD, HeadSpec, Sgcm, matrix_preset, preset
from superduality.chars import (
    FormalCharacter, RootFrame, TransferTable, even_side_table, fits_rank, flavor_system,
    irreducible_char, is_typical, levi_ids, levi_irreducible_char, parabolic_verma_char, pbw_factor,
    superduality_transfer, tensor_decompose_integrable, truncate_char, weight_labels, weyl_kac_terms,
)
from superduality.errors import DomainError, UnsupportedError
from superduality.symfunc import lr_coefficients
from superduality.weights import (
    Eps, Weight, eps, gl_partition_weight, gl_weight_partition, head_fw, natural_map, omega, theta_map,
)

GL21 = preset("gl(2|1)")
GL31 = preset("gl(3|1)")


def bare_frame(size):
    return RootFrame(tuple(str(k) for k in range(size)), tuple(Weight() for _ in range(size)))


def sl3_dimension(a, b):
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def test_pbw_even_root_is_geometric_series():
    ch = pbw_factor({(1,): (1, EVEN)}, bare_frame(1), 4)
    assert ch.terms == {(k,): 1 for k in range(5)}


def test_pbw_odd_root_is_one_plus_exponential():
    ch = pbw_factor({(1,): (1, ODD)}, bare_frame(1), 4)
    assert ch.terms == {(0,): 1, (1,): 1}


def test_pbw_rejects_incomplete_root_list():
    with pytest.raises(DomainError):
        pbw_factor({(1,): (1, EVEN)}, bare_frame(1), 4, complete_to=2)


def test_weyl_kac_sl2_and_sl3():
    assert weyl_kac_terms(matrix_preset("sl(2)"), [2], 10) == {(0,): 1, (1,): 1, (2,): 1}
    assert weyl_kac_terms(matrix_preset("sl(3)"), [1, 0], 10) == {(0, 0): 1, (1, 0): 1, (1, 1): 1}


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 0), (2, 1), (3, 2)])
def test_weyl_kac_sl3_dimensions(a, b):
    terms = weyl_kac_terms(matrix_preset("sl(3)"), [a, b], 40)
    assert sum(terms.values()) == sl3_dimension(a, b)


@pytest.mark.parametrize("name,labels", [("B2", [1, 1]), ("G2", [1, 0]), ("G2", [0, 1]), ("A3", [1, 0, 1])])
def test_weyl_kac_matches_oracle_finite(name, labels):
    gcm = matrix_preset(name)
    assert weyl_kac_terms(gcm, labels, 8) == oracle.irreducible_character(gcm, labels, 8)


@pytest.mark.parametrize("labels", [[1, 0], [0, 1], [1, 1]])
def test_weyl_kac_matches_oracle_affine(labels):
    gcm = matrix_preset("affineA1")
    assert weyl_kac_terms(gcm, labels, 5) == oracle.irreducible_character(gcm, labels, 5)


def test_weyl_kac_rejects_odd_and_non_dominant():
    with pytest.raises(UnsupportedError):
        weyl_kac_terms(matrix_preset("gl(1|1)"), [0], 3)
    with pytest.raises(DomainError):
        weyl_kac_terms(matrix_preset("sl(2)"), [-1], 3)


def test_levi_character_of_natural_tail():
    lam = gl_partition_weight((1,), 3)
    ch = levi_irreducible_char(GL31, "g", 2, eps(0, 2), 4)
    assert ch.terms == {(0, 0, 0, 0): 1, (0, 0, 0, 1): 1}
    # a head-only weight has a trivial tail factor without the head Levi
    assert levi_irreducible_char(GL31, "g", 2, lam, 4).terms == {(0,) * 4: 1}


def test_levi_character_includes_head_factor():
    lam = gl_partition_weight((1,), 3)
    ch = levi_irreducible_char(GL31, "g", 2, lam, 6, ["1", "2"])
    assert sum(ch.terms.values()) == 3


def test_parabolic_verma_of_gl11_is_one_plus_exponential():
    empty = HeadSpec(Sgcm([], {}, []), {0: ()})
    ch = parabolic_verma_char(empty, "sg", -1, Weight(), 5)
    assert ch.terms == {(0,): 1, (1,): 1}


@pytest.mark.parametrize("rank", [0, 1])
def test_parabolic_verma_matches_oracle(rank):
    fs = flavor_system(GL21, "sg", rank)
    sgcm = fs.to_sgcm()
    for a in range(3):
        for c in range(-2, 3):
            lam = head_fw("1") * a + eps(0, -2) * c
            labels = weight_labels(lam, fs)
            ch = parabolic_verma_char(GL21, "sg", rank, lam, 4, ["1"])
            levi = [sgcm.pos(i) for i in levi_ids(GL21, fs, ["1"])]
            assert ch.terms == oracle.parabolic_verma_oracle(sgcm, levi, labels, 4)


def test_typicality_of_gl11():
    gl11 = matrix_preset("gl(1|1)")
    assert not is_typical(gl11, [0])
    assert is_typical(gl11, [1])


def test_irreducible_super_character_atypical_trivial():
    fs = flavor_system(GL21, "sg", 0)
    ch = irreducible_char(GL21, "sg", 0, Weight(), 4)
    assert ch.terms == {(0,) * len(fs.ids): 1}


def test_single_entry_transfer_matches_oracle_for_typical_weights():
    fs = flavor_system(GL21, "sg", 0)
    sgcm = fs.to_sgcm()
    checked = 0
    for a in range(3):
        for c in range(-2, 3):
            lam = head_fw("1") * a + eps(0, -2) * c + eps(0, 2)
            labels = weight_labels(natural_map(lam), fs)
            if not is_typical(sgcm, labels):
                continue
            ch = superduality_transfer(TransferTable.single(lam), GL21, 0, 4, "sg", ["1"])
            assert ch.terms == oracle.irreducible_character(sgcm, labels, 4)
            checked += 1
    assert checked > 5


def test_even_side_table_of_trivial_weight_transfers_to_trivial():
    table = even_side_table(GL21, 3, Weight(), 8, ["1"])
    assert table.entries[Weight()] == 1
    for target, rank in (("sg", 0), ("sg", 1), ("dg", 1)):
        ch = superduality_transfer(table, GL21, rank, 3, target, ["1"])
        assert ch.text() == "1"


def test_transfer_rejects_unknown_target():
    with pytest.raises(DomainError):
        superduality_transfer(TransferTable.single(Weight()), GL21, 0, 3, "g")


def random_weight(rnd):
    parts = sorted((rnd.randint(0, 2) for _ in range(3)), reverse=True)
    w = head_fw("1") * rnd.randint(0, 2) + eps(0, -2) * rnd.randint(-2, 2) + omega(0) * rnd.randint(-1, 1)
    for j, p in enumerate(parts, start=1):
        if p:
            w = w + eps(0, 2 * j) * p
    return w


@pytest.mark.parametrize("flavor,mapper", [("g", lambda w: w), ("sg", natural_map), ("dg", theta_map)])
def test_truncation_of_parabolic_verma(flavor, mapper):
    rnd = random.Random(7)
    for _ in range(5):
        mu = mapper(random_weight(rnd))
        big = parabolic_verma_char(GL21, flavor, 3, mu, 4, ["1"])
        for n in (1, 2):
            cut = truncate_char(big, flavor, n)
            if fits_rank(mu, flavor, n):
                small = truncate_char(parabolic_verma_char(GL21, flavor, n, mu, 4, ["1"]), flavor, n)
                assert cut.as_weights() == small.as_weights()
            else:
                assert not cut


def test_truncation_is_idempotent():
    mu = natural_map(eps(0, 2) * 2 + eps(0, 4))
    ch = parabolic_verma_char(GL21, "sg", 3, mu, 4, ["1"])
    once = truncate_char(ch, "sg", 2)
    assert truncate_char(once, "sg", 2).as_weights() == once.as_weights()


def _partitions(result):
    return {gl_weight_partition(w, 3): c for w, c in result.items()}


def test_tensor_square_of_natural():
    box = gl_partition_weight((1,), 3)
    assert _partitions(tensor_decompose_integrable(GL31, "g", 2, box, box, 20)) == {(2,): 1, (1, 1): 1}


def test_tensor_two_one_with_box():
    first, second = gl_partition_weight((2, 1), 3), gl_partition_weight((1,), 3)
    found = _partitions(tensor_decompose_integrable(GL31, "g", 2, first, second, 40))
    expected = {k: v for k, v in lr_coefficients((2, 1), (1,)).items() if len(k) <= 5}
    assert found == expected


def _small_character(rnd_terms, cutoff=4):
    frame = RootFrame(("x", "y"), (eps(0, 2), eps(0, 4)))
    return FormalCharacter(Weight(), frame, rnd_terms, cutoff)


series = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3), max_size=6)


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_character_products_commute_and_associate(a, b, c):
    x, y, z = _small_character(a), _small_character(b), _small_character(c)
    assert (x * y).terms == (y * x).terms
    assert ((x * y) * z).terms == (x * (y * z)).terms
    assert (x * (y + z)).terms == (x * y + x * z).terms


def test_character_json_and_text():
    fs = flavor_system(GL21, "sg", -1)
    ch = parabolic_verma_char(GL21, "sg", -1, Weight(), 2)
    data = ch.to_json()
    assert data["roots"] == list(fs.ids) and data["cutoff"] == 2
    assert "a[t0:-2]" in ch.text()


def test_adding_characters_requires_lower_anchor():
    frame = RootFrame(("x",), (eps(0, 2),))
    top = FormalCharacter.one(Weight(), frame, 3)
    below = FormalCharacter.one(-eps(0, 2), frame, 3)
    assert (top + below).terms == {(0,): 1, (1,): 1}
    with pytest.raises(DomainError):
        below + top


def test_sg_characters_are_nonnegative():
    for a in range(3):
        lam = natural_map(head_fw("1") * a + eps(0, 2) + Weight({Eps(0, 4): 1}))
        ch = parabolic_verma_char(GL21, "sg", 2, lam, 4, ["1"])
        assert all(v > 0 for v in ch.terms.values())
