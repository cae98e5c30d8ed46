from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncenergy.groups import GroupSpec, GroupTable, SpecError, build, center, centralizer_count, commutativity_degree
from ncenergy.groups.table import (
    GroupError,
    conjugacy_class_count,
    direct_product,
    element_orders,
    exponent,
    is_normal,
    quotient_by_center,
    quotient_by_normal,
    relabel,
)

# (spec, order, |Z|, centralizer count, Pr)
KNOWN = [
    ("Dihedral(m=3)", 6, 1, 5, Fraction(1, 2)),
    ("Dihedral(m=4)", 8, 2, 4, Fraction(5, 8)),
    ("GeneralizedQuaternion(m=2)", 8, 2, 4, Fraction(5, 8)),
    ("SuzukiSz2", 20, 1, 7, Fraction(1, 4)),
    ("GL2(q=3)", 48, 2, None, Fraction(1, 6)),
    ("PSL2(k=2)", 60, 1, None, Fraction(1, 12)),
    ("HanakiU(n=2)", 16, 4, 4, Fraction(5, 8)),
    ("HanakiU(n=3)", 64, 8, None, None),
    ("HanakiV(p=3,n=1)", 27, 3, 5, Fraction(11, 27)),
    ("ExtraspecialP3(p=3,exponent=3)", 27, 3, 5, Fraction(11, 27)),
    ("Quasidihedral(n=4)", 16, 2, None, None),
    ("FrobeniusPQ(p=3,q=7)", 21, 1, None, None),
    ("Metacyclic(m=3,n=2)", 12, 2, None, None),
]


@pytest.mark.parametrize("text,order,z,cent,pr", KNOWN)
def test_known_invariants(text, order, z, cent, pr):
    g = build(GroupSpec.parse(text))
    assert g.order == order
    assert len(center(g)) == z
    if cent is not None:
        assert centralizer_count(g) == cent
    if pr is not None:
        assert commutativity_degree(g) == pr


@pytest.mark.parametrize("text", [k[0] for k in KNOWN])
def test_commutativity_two_ways(text):
    g = build(GroupSpec.parse(text))
    pairs = int(g.commute_matrix().sum())
    assert Fraction(pairs, g.order**2) == Fraction(conjugacy_class_count(g), g.order)


def test_spec_round_trip_and_validation():
    s = GroupSpec.parse("Cyclic(k=2) x Dihedral(m=4)")
    assert str(s) == "Cyclic(k=2) x Dihedral(m=4)"
    assert GroupSpec.parse(str(s)) == s
    assert GroupSpec.parse("Z2xD8") == s
    assert GroupSpec.of("ExtraspecialP3", p=3)["exponent"] == 9
    for bad in ("Dihedral(m=2)", "FrobeniusPQ(p=3,q=5)", "GL2(q=6)", "ExtraspecialP3(p=2,exponent=2)", "Nope"):
        with pytest.raises(SpecError):
            GroupSpec.parse(bad)


def test_non_associative_table_is_rejected():
    # a Latin square with identity that is not associative (order 5 loop)
    mul = np.array(
        [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    )
    with pytest.raises(GroupError):
        GroupTable(mul, [str(i) for i in range(5)])


def test_quotients():
    d8 = build(GroupSpec.of("Dihedral", m=4))
    q = quotient_by_center(d8)
    assert q.order == 4 and q.is_abelian() and exponent(q) == 2
    d12 = build(GroupSpec.of("Dihedral", m=6))
    z = center(d12)
    assert is_normal(d12, z)
    assert not quotient_by_normal(d12, z).is_abelian()


def test_direct_product_center_multiplies():
    g = build(GroupSpec.of("Dihedral", m=3))
    c4 = build(GroupSpec.of("Cyclic", k=4))
    prod = direct_product(c4, g)
    assert prod.order == 24
    assert len(center(prod)) == 4
    assert commutativity_degree(prod) == commutativity_degree(g)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["Dihedral(m=5)", "SuzukiSz2", "Quasidihedral(n=4)", "M16"]), st.randoms())
def test_relabel_preserves_invariants(text, rnd):
    g = build(GroupSpec.parse(text))
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert sorted(element_orders(h)) == sorted(element_orders(g))
    assert len(center(h)) == len(center(g))
    assert centralizer_count(h) == centralizer_count(g)


@pytest.mark.parametrize("m", range(3, 9))
def test_dihedral_structure(m):
    g = build(GroupSpec.of("Dihedral", m=m))
    orders = element_orders(g)
    assert orders.count(2) == m + (1 if m % 2 == 0 else 0)
    assert len(center(g)) == (2 if m % 2 == 0 else 1)
