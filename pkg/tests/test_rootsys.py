import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liekoszul.errors import ValidationError
from liekoszul.rootsys import LieType, build_root_system, root_system, sub

from oracles import POSITIVE_ROOTS

CLASSICAL_COUNTS = [
    ("A", 1, 1), ("A", 4, 10), ("B", 2, 4), ("B", 5, 25), ("C", 3, 9), ("C", 4, 16),
    ("D", 4, 12), ("D", 5, 20), ("G", 2, 6), ("F", 4, 24), ("E", 6, 36), ("E", 7, 63),
    ("E", 8, 120),
]
SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
               ("C", 3), ("C", 4), ("D", 3), ("D", 4), ("G", 2), ("F", 4)]


@pytest.mark.parametrize("fam,rank,npos", CLASSICAL_COUNTS)
def test_positive_root_counts(fam, rank, npos):
    rs = root_system(fam, rank)
    assert len(rs.positive_roots) == npos
    assert len(rs.all_roots) == 2 * npos
    assert set(rs.all_roots) == {tuple(-x for x in a) for a in rs.all_roots}
    assert rs.dim_g == 2 * npos + rank


@pytest.mark.parametrize("fam,rank", [k for k in POSITIVE_ROOTS])
def test_positive_roots_match_hand_list(fam, rank):
    rs = root_system(fam, rank)
    got = sorted(tuple(int(c) for c in rs.to_simple_root_coords(a)) for a in rs.positive_roots)
    assert got == sorted(POSITIVE_ROOTS[(fam, rank)])


def test_small_examples():
    a1 = root_system("A", 1)
    assert a1.all_roots == ((-2,), (2,)) and a1.dim_g == 3
    g2 = root_system("G", 2)
    assert len(g2.all_roots) == 12 and g2.dim_g == 14
    b3 = root_system("B", 3)
    assert len(b3.all_roots) == 18 and b3.dim_g == 21
    assert b3.theta == (0, 1, 0)
    assert b3.to_simple_root_coords(b3.theta) == (1, 2, 2)


@pytest.mark.parametrize("fam,rank", SMALL_TYPES + [("E", 6), ("E", 8)])
def test_root_lengths_and_theta(fam, rank):
    rs = root_system(fam, rank)
    lengths = {rs.inner(a, a) for a in rs.all_roots}
    assert max(lengths) == 2
    assert lengths <= {Fraction(2), Fraction(1), Fraction(2, 3)}
    assert rs.inner(rs.theta, rs.theta) == 2
    assert all(c >= 0 for c in rs.theta)
    for a in rs.simple_roots:
        assert not rs.is_root(tuple(x + y for x, y in zip(rs.theta, a)))


@pytest.mark.parametrize("fam,rank", SMALL_TYPES)
def test_cartan_reproduced_by_form(fam, rank):
    rs = root_system(fam, rank)
    for i, ai in enumerate(rs.simple_roots):
        for j, aj in enumerate(rs.simple_roots):
            assert 2 * rs.inner(ai, aj) / rs.inner(aj, aj) == rs.cartan[i][j]


@pytest.mark.parametrize("fam,rank", SMALL_TYPES)
def test_root_strings(fam, rank):
    rs = root_system(fam, rank)
    roots = set(rs.all_roots)
    for a in rs.all_roots:
        for b in rs.all_roots:
            if b == a or b == tuple(-x for x in a):
                continue
            p = 0
            while tuple(y - (p + 1) * x for x, y in zip(a, b)) in roots:
                p += 1
            q = 0
            while tuple(y + (q + 1) * x for x, y in zip(a, b)) in roots:
                q += 1
            assert p - q == 2 * rs.inner(b, a) / rs.inner(a, a)
            # the string is unbroken
            for k in range(-p, q + 1):
                assert tuple(y + k * x for x, y in zip(a, b)) in roots


def test_rho_pairs_with_simple_roots():
    for fam, rank in SMALL_TYPES:
        rs = root_system(fam, rank)
        for a in rs.simple_roots:
            assert rs.inner(rs.rho, a) == rs.inner(a, a) / 2


def test_a1_pairing():
    rs = root_system("A", 1)
    assert rs.inner((1,), (2,)) == 1
    assert rs.to_simple_root_coords((2,)) == (1,)


weights2 = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@given(weights2, weights2, weights2, st.integers(-4, 4))
def test_form_symmetric_bilinear(x, y, z, k):
    for fam in ("A", "B", "G"):
        rs = root_system(fam, 2)
        assert rs.inner(x, y) == rs.inner(y, x)
        xz = tuple(a + b for a, b in zip(x, z))
        assert rs.inner(xz, y) == rs.inner(x, y) + rs.inner(z, y)
        assert rs.inner(tuple(k * a for a in x), y) == k * rs.inner(x, y)


@given(weights2)
def test_simple_root_coords_roundtrip(w):
    rs = root_system("G", 2)
    c = rs.to_simple_root_coords(w)
    back = [sum(c[i] * rs.simple_roots[i][j] for i in range(2)) for j in range(2)]
    assert tuple(back) == w


def test_dominance():
    rs = root_system("B", 3)
    assert rs.is_dominant(rs.zero)
    assert rs.is_dominant(rs.theta)
    assert not rs.is_dominant((-1, 0, 0))


@pytest.mark.parametrize("fam,rank,order", [("A", 2, 6), ("B", 3, 48), ("G", 2, 12), ("D", 4, 192)])
def test_weyl_orbit_and_signs(fam, rank, order):
    rs = root_system(fam, rank)
    signed = rs.signed_orbit(rs.rho)
    assert len(signed) == order
    assert sum(s for _, s in signed) == 0
    for w, s in signed[:20]:
        dom, parity = rs.dominant_rep(w)
        assert dom == rs.rho
        assert (-1) ** parity == s


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5),
                                          ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
def test_invalid_types(family, rank):
    with pytest.raises(ValidationError):
        LieType(family, rank)


def test_rank_ceiling():
    with pytest.raises(ValidationError, match="limit"):
        build_root_system(LieType("A", 13))
    assert build_root_system(LieType("A", 13), max_rank=13).rank == 13


def test_length_mismatch():
    rs = root_system("A", 2)
    with pytest.raises(ValidationError):
        rs.inner((1,), (1, 0))


def test_golden_json_g2():
    doc = json.loads(json.dumps(root_system("G", 2).to_dict(), sort_keys=True))
    assert doc["cartan"] == [[2, -1], [-3, 2]]
    assert doc["theta"] == [0, 1]
    assert doc["theta_root_coords"] == ["3", "2"]
    assert [r["simple"] for r in doc["positive_roots"]] == [
        ["0", "1"], ["1", "0"], ["1", "1"], ["2", "1"], ["3", "1"], ["3", "2"]]
    assert [r["fundamental"] for r in doc["positive_roots"]] == [
        [-3, 2], [2, -1], [-1, 1], [1, 0], [3, -1], [0, 1]]
    assert doc["dim_g"] == 14 and doc["num_roots"] == 12


def test_sorted_by_height():
    rs = root_system("F", 4)
    heights = [rs.height(a) for a in rs.all_roots]
    assert heights == sorted(heights)
    assert sub(rs.theta, rs.positive_roots[-1]) == rs.zero
