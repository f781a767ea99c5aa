from fractions import Fraction
from itertools import combinations

import pytest

from oracles import brute_permanent, rational_roots
from permlab import families
from permlab.families import FamilyError, family_matrix, verify_family
from permlab.permideal import j_ideal
from permlab.polyring import PolyRing
from permlab.scalars import QQ


def test_dxd1_anchor_d3():
    assert families.dxd1_rows(3) == [[1, 1, 1, -7], [1, 1, -4, 2], [1, 1, 3, 5]]


@pytest.mark.parametrize("d", range(2, 9))
def test_dxd1_vanishes(d):
    res = verify_family("dxd1", d)
    assert res["pass"] and res["checked"] == d + 1


@pytest.mark.parametrize("d", range(2, 8))
def test_dxd1_brute_oracle(d):
    rows = families.dxd1_rows(d)
    for cols in combinations(range(d + 1), d):
        assert brute_permanent([[r[c] for c in cols] for r in rows]) == 0
    # from d=3 on the matrix has full support, so it is not a trivial point
    if d >= 3:
        assert all(x != 0 for r in rows for x in r)


def test_dxd1_needs_d():
    with pytest.raises(FamilyError):
        family_matrix("dxd1")
    with pytest.raises(FamilyError):
        families.dxd1_rows(1)


def test_four_by_six():
    res = verify_family("four-by-six")
    assert res["pass"] and res["checked"] == 15


def test_four_by_six_complex_oracle():
    rows = [[1, 1, 1, t, t, t] for t in (1, -1, 1j, -1j)]
    for cols in combinations(range(6), 4):
        assert brute_permanent([[r[c] for c in cols] for r in rows]) == 0


@pytest.mark.parametrize("fid", ["param-A", "param-B"])
def test_parametric_identities(fid):
    res = verify_family(fid)
    assert res["pass"] and res["checked"] == 4


@pytest.mark.parametrize("fid", ["param-A", "param-B"])
def test_parametric_specializations(fid):
    M = family_matrix(fid)
    for a in (Fraction(3), Fraction(-5, 7), Fraction(11, 2)):
        rows = [[Fraction(x.evaluate([a]).value) for x in r] for r in M.rows]
        for cols in combinations(range(4), 3):
            assert brute_permanent([[r[c] for c in cols] for r in rows]) == 0


@pytest.mark.parametrize("fid", ["degenerate-1", "degenerate-2", "degenerate-3", "degenerate-4"])
def test_degenerate_components(fid):
    assert verify_family(fid)["pass"]


def test_unknown_family():
    with pytest.raises(FamilyError):
        family_matrix("nope")


def test_verify_all():
    out = families.verify_all_families(8)
    assert len(out) == 7 + 7 and all(r["pass"] for r in out)


def test_h_sigma_difference():
    res = families.verify_h_sigma()
    assert not res["pass"]
    assert res["grouping_matches_expansion"]
    assert (res["h_at_ones"], res["rhs_at_ones"]) == ("12", "15")
    R = PolyRing(QQ, ["a", "b", "c", "u"])
    assert R.parse(res["difference"]) == R.parse("3*a*b*c*u")


def test_h_sigma_control():
    # dropping sigma_4 leaves a larger gap, 4*a*b*c*u
    res = families.verify_h_sigma(drop_sigma4=True)
    R = PolyRing(QQ, ["a", "b", "c", "u"])
    assert R.parse(res["difference"]) == R.parse("4*a*b*c*u")


def test_jprime():
    rep = families.jprime_generators()["report"]
    assert rep["verdict"] == "equal"
    assert rep["relation_in_setB"]
    assert all(rep["degenerate_components_vanish"].values())


def test_j3_points():
    res = families.verify_j3_points()
    assert res["pass"]
    assert res["param-A"]["generators"] == len(j_ideal(3).generators) == 11
    assert res["dxd1-3"]["permanents_vanish"]


@pytest.mark.parametrize("fid", ["param-A", "param-B"])
def test_exclusion_roots(fid):
    roots = families.full_support_exclusions(fid)
    assert roots == {Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1)}
    # independent check entry by entry
    M = family_matrix(fid)
    oracle = set()
    for r in M.rows:
        for x in r:
            if x.degree() > 0:
                coeffs = [0] * (x.degree() + 1)
                for key, c in x.terms.items():
                    coeffs[x.ring.unpack(key)[0]] = c
                oracle |= rational_roots(coeffs)
    assert roots == oracle


def test_rational_roots_helper():
    R = PolyRing(QQ, ["a"])
    assert families._rational_roots(R.parse("2*a^2 - 3*a + 1")) == {Fraction(1), Fraction(1, 2)}
    assert families._rational_roots(R.parse("a^3")) == {Fraction(0)}
    assert families._rational_roots(R.parse("a^2 + 1")) == set()
