"""Explicit matrices with vanishing subpermanents and the identities around them."""

from __future__ import annotations

from fractions import Fraction

from .groebner import ideal_subset, normal_form, buchberger
from .permcore import Matrix, permanent, selectors
from .permideal import IdealBasis, j_ideal
from .polyring import Poly, PolyRing
from .scalars import QQ, QQI

__all__ = [
    "FAMILY_IDS",
    "FamilyError",
    "family_matrix",
    "family_order",
    "verify_family",
    "verify_all_families",
    "verify_h_sigma",
    "jprime_generators",
    "verify_j3_points",
    "full_support_exclusions",
]


class FamilyError(ValueError):
    pass


FAMILY_IDS = (
    "dxd1",
    "four-by-six",
    "param-A",
    "param-B",
    "degenerate-1",
    "degenerate-2",
    "degenerate-3",
    "degenerate-4",
)

_PARAM_A = [
    ["1", "1", "1", "a+2"],
    ["1", "a", "a", "-a*(2*a+1)"],
    ["a+1", "-a", "-a", "a*(1-a)"],
]

_PARAM_B = [
    ["1", "1", "a+1", "3*(a+1)"],
    ["1", "a", "-a", "a^2+a+1"],
    ["a+2", "-a*(2*a+1)", "a*(1-a)", "(a-1)*(2*a+1)*(a+2)"],
]

# components of the normalized 3 x 4 variety along a = -u
_DEGENERATE = {
    "degenerate-1": [["1", "1", "1", "1"], ["0", "0", "b", "c"], ["0", "0", "e*b", "-c*e"]],
    "degenerate-2": [["1", "1", "1", "1"], ["0", "0", "0", "0"], ["0", "d", "e", "f"]],
    "degenerate-3": [["1", "1", "1", "1"], ["u", "-u", "0", "0"], ["u", "u", "e", "-e"]],
    "degenerate-4": [["1", "1", "1", "1"], ["u", "-u", "u", "u"], ["u", "0", "e", "-u-e"]],
}

_A_RING = PolyRing(QQ, ["a"])
_DEGENERATE_RING = PolyRing(QQ, ["u", "b", "c", "d", "e", "f"])


def dxd1_rows(d: int) -> list[list[int]]:
    if d < 2:
        raise FamilyError("dxd1 needs d >= 2")
    rows = []
    for i in range(d):
        if i < d - 2:
            tail = [1, 2 - 3 * d]
        elif i == d - 2:
            tail = [2 - 2 * d, (d - 2) * (d - 1)]
        else:
            tail = [d, (2 * d - 1) * (d - 2)]
        rows.append([1] * (d - 1) + tail)
    return rows


def family_matrix(fid: str, d: int | None = None) -> Matrix:
    """The family's matrix: scalar for dxd1 and four-by-six, symbolic otherwise."""
    if fid == "dxd1":
        if d is None:
            raise FamilyError("dxd1 needs d")
        return Matrix(dxd1_rows(d), field=QQ)
    if fid == "four-by-six":
        i = QQI.I
        tail = [1, -1, i, (0, -1)]
        return Matrix([[1, 1, 1, t, t, t] for t in tail], field=QQI)
    if fid == "param-A":
        return Matrix(_PARAM_A, ring=_A_RING)
    if fid == "param-B":
        return Matrix(_PARAM_B, ring=_A_RING)
    if fid in _DEGENERATE:
        return Matrix(_DEGENERATE[fid], ring=_DEGENERATE_RING)
    raise FamilyError("unknown family %r (known: %s)" % (fid, ", ".join(FAMILY_IDS)))


def family_order(fid: str, d: int | None = None) -> int:
    """Size of the subpermanents the family kills: the number of rows."""
    return family_matrix(fid, d).m


def verify_family(fid: str, d: int | None = None) -> dict:
    """Every maximal subpermanent is exactly zero (as a scalar or as a polynomial)."""
    M = family_matrix(fid, d)
    k = M.m
    bad = []
    checked = 0
    for rows, cols in selectors(M.m, M.n, k):
        checked += 1
        v = permanent(M.submatrix(rows, cols))
        if not v.is_zero():
            bad.append({"columns": [c + 1 for c in cols], "value": str(v)})
    return {"id": fid, "d": d, "pass": not bad, "checked": checked, "failures": bad}


def verify_all_families(dmax: int = 8) -> list[dict]:
    out = [verify_family("dxd1", d) for d in range(2, dmax + 1)]
    out += [verify_family(fid) for fid in FAMILY_IDS if fid != "dxd1"]
    return out


def verify_h_sigma(drop_sigma4: bool = False) -> dict:
    """Compare the displayed quartic h with sigma_1*sigma_3 - sigma_4 in QQ[a,b,c,u]."""
    R = PolyRing(QQ, ["a", "b", "c", "u"])
    h = R.parse("u^2*(a*b+a*c+b*c) + u*(a^2*b+a^2*c+a*b^2+a*c^2+b^2*c+b*c^2) + (a^2*b*c+a*b^2*c+a*b*c^2)")
    expanded = R.parse(
        "u^2*a*b+u^2*a*c+u^2*b*c+u*a^2*b+u*a^2*c+u*a*b^2+u*a*c^2+u*b^2*c+u*b*c^2+a^2*b*c+a*b^2*c+a*b*c^2"
    )
    s1 = R.parse("a+b+c+u")
    s3 = R.parse("a*b*c+a*b*u+a*c*u+b*c*u")
    s4 = R.parse("a*b*c*u")
    rhs = s1 * s3 if drop_sigma4 else s1 * s3 - s4
    diff = rhs - h
    ones = [1, 1, 1, 1]
    return {
        "pass": diff.is_zero(),
        "grouping_matches_expansion": h == expanded,
        "h": str(h),
        "rhs": str(rhs),
        "difference": str(diff),
        "h_at_ones": str(h.evaluate(ones)),
        "rhs_at_ones": str(rhs.evaluate(ones)),
    }


def _jprime_ring() -> PolyRing:
    return PolyRing(QQ, ["u", "A", "B", "C", "D", "E", "F"])


def jprime_generators() -> dict:
    """Both containments between the shifted subpermanents and the displayed quadruple."""
    R = _jprime_ring()
    shift = {x: R.parse("%s-u" % x.upper()) for x in "abcdef"}
    src = PolyRing(QQ, ["u", "a", "b", "c", "d", "e", "f"])
    M = Matrix([["1", "1", "1", "1"], ["u", "a", "b", "c"], ["u", "d", "e", "f"]], ring=src)
    perms = [permanent(M.submatrix([0, 1, 2], cols)) for _, cols in selectors(3, 4, 3)]
    set_a = IdealBasis(R, [p.substitute(shift, R) for p in perms], "J' subpermanents")
    set_b = IdealBasis(
        R,
        [R.parse(s) for s in ("A*E+B*D-2*u^2", "A*F+C*D-2*u^2", "B*F+C*E-2*u^2", "u*(A+B+C+D+E+F-6*u)")],
        "J' displayed",
    )
    a_in_b = ideal_subset(set_a, set_b)
    b_in_a = ideal_subset(set_b, set_a)
    gb_b = buchberger(set_b)
    relation = R.parse("B*C*D + u^2*(A-B-C)")
    nf = normal_form(relation, gb_b)
    degenerate = {fid: verify_family(fid)["pass"] for fid in _DEGENERATE}
    if a_in_b and b_in_a:
        verdict = "equal"
    elif a_in_b:
        verdict = "subpermanents inside displayed"
    elif b_in_a:
        verdict = "displayed inside subpermanents"
    else:
        verdict = "neither"
    return {
        "setA": set_a,
        "setB": set_b,
        "report": {
            "setA_in_setB": a_in_b,
            "setB_in_setA": b_in_a,
            "verdict": verdict,
            "relation": str(relation),
            "relation_normal_form": str(nf),
            "relation_in_setB": nf.is_zero(),
            "degenerate_components_vanish": degenerate,
        },
    }


def _j3_at(M: Matrix) -> list[Poly]:
    J = j_ideal(3)
    names = ["x_%d_%d" % (i, j) for i in range(1, 4) for j in range(1, 5)]
    binding = {name: M.rows[k // 4][k % 4] for k, name in enumerate(names)}
    return [g.substitute(binding, M.ring) for g in J.generators]


def verify_j3_points() -> dict:
    """Substitute param-A and param-B into the generators of J_3; dxd1 at d=3 is reported only."""
    out: dict = {}
    ok = True
    for fid in ("param-A", "param-B"):
        vals = _j3_at(family_matrix(fid))
        nonzero = [k + 1 for k, v in enumerate(vals) if not v.is_zero()]
        out[fid] = {"generators": len(vals), "nonzero": nonzero}
        ok = ok and not nonzero
    M = family_matrix("dxd1", 3)
    Rz = PolyRing(QQ, ["t"])
    Ms = Matrix._raw([[Rz.const(x) for x in r] for r in M.rows], ring=Rz)
    vals = _j3_at(Ms)
    out["dxd1-3"] = {"values": [str(v) for v in vals], "permanents_vanish": all(v.is_zero() for v in vals[:4])}
    out["pass"] = ok
    return out


def _rational_roots(f: Poly) -> set[Fraction]:
    """Rational roots of a univariate integer-coefficient polynomial by the rational root theorem."""
    coeffs = {}
    for key, c in f.terms.items():
        coeffs[f.ring.unpack(key)[0]] = Fraction(c)
    roots: set = set()
    if not coeffs:
        raise ValueError("zero polynomial")
    low = min(coeffs)
    if low > 0:
        roots.add(Fraction(0))
    shifted = {e - low: c for e, c in coeffs.items()}
    den = 1
    for c in shifted.values():
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in shifted.items()}
    top = max(ints)
    a0, an = abs(ints[0]), abs(ints[top])
    for p in _divisors(a0):
        for q in _divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r ** e for e, c in ints.items()) == 0:
                    roots.add(r)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(x: int) -> list[int]:
    return [d for d in range(1, x + 1) if x % d == 0]


def full_support_exclusions(fid: str = "param-A") -> set[Fraction]:
    """Rational values of the parameter at which some entry vanishes."""
    M = family_matrix(fid)
    roots: set = set()
    for row in M.rows:
        for x in row:
            if x.is_zero():
                raise FamilyError("entry is identically zero")
            if x.degree() > 0:
                roots |= _rational_roots(x)
    return roots
