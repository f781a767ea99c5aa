"""Named checks that produce JSON reports, and the suites that group them.

Every scenario returns a :class:`Report`.  Status meanings:

* ``pass``: every asserted identity or property held;
* ``evidence``: a characteristic-0 claim confirmed over a finite field only;
* ``fail``: something asserted did not hold (details in ``findings``);
* ``budget-exceeded``: a search or Groebner cap stopped the run.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Sequence

from . import ajt, families, permalgebra, permideal
from .groebner import ResourceCapExceeded, ideal_contains, ideal_subset
from .permcore import Matrix, determinant, permanent
from .permideal import IdealBasis
from .polyring import PolyRing
from .scalars import QQ, Field, field_parse

SCHEMA = 1
SEVERITY = {"pass": 0, "evidence": 1, "budget-exceeded": 2, "fail": 3}
EXIT_CODES = {"pass": 0, "evidence": 0, "fail": 1, "budget-exceeded": 3}


@dataclass
class Report:
    scenario: str
    params: dict
    status: str = "pass"
    counts: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    artifacts: list = field(default_factory=list)
    runtime_ms: int = 0
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "scenario": self.scenario,
            "params": self.params,
            "status": self.status,
            "counts": self.counts,
            "findings": self.findings,
            "artifacts": self.artifacts,
            "runtime_ms": self.runtime_ms,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, default=str)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def worsen(self, status: str) -> None:
        if SEVERITY[status] > SEVERITY[self.status]:
            self.status = status


def worst(statuses: Sequence[str]) -> str:
    return max(statuses, key=SEVERITY.__getitem__, default="pass")


def _timed(fn: Callable[..., Report]) -> Callable[..., Report]:
    def wrapper(*args, **kwargs) -> Report:
        t0 = time.perf_counter()
        try:
            rep = fn(*args, **kwargs)
        except ResourceCapExceeded as exc:
            rep = Report(fn.__name__.replace("_", "-"), {"args": [str(a) for a in args], **{k: str(v) for k, v in kwargs.items()}})
            rep.status = "budget-exceeded"
            rep.findings.append(str(exc))
        rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _fname(F: Field) -> str:
    return str(F)


# --------------------------------------------------------------------------
# identities


@_timed
def evid(d: int, field: Field = QQ, all_alpha: bool = True) -> Report:
    """Signed inclusion-exclusion identity over every alpha and every special row."""
    rep = Report("verify-evid", {"d": d, "field": _fname(field), "all_alpha": all_alpha})
    n = 2 * d - 1
    alphas = list(combinations(range(1, n + 1), d - 1)) if all_alpha else [tuple(range(1, d))]
    rows = range(1, d + 1) if all_alpha else [1]
    checked = 0
    for r in rows:
        for a in alphas:
            res = permideal.verify_evid(d, a, field, special_row=r)
            checked += 1
            if not res["pass"]:
                rep.status = "fail"
                rep.findings.append("alpha=%s row=%d: difference %s" % (list(a), r, res["difference"]))
    rep.counts = {"identities": checked}
    rep.extra["sign"] = (-1) ** (d - 1)
    return rep


@_timed
def preevid(d: int, n: int, field: Field = QQ) -> Report:
    rep = Report("verify-preevid", {"d": d, "n": n, "field": _fname(field)})
    checked = 0
    for a in combinations(range(1, n + 1), d - 1):
        res = permideal.verify_preevid(d, n, a, field)
        checked += 1
        if not res["pass"]:
            rep.status = "fail"
            rep.findings.append("alpha=%s: difference %s" % (list(a), res.get("difference")))
        rep.extra["signs"] = res["signs"]
    rep.counts = {"identities": checked}
    return rep


@_timed
def structj(d: int, field: Field = QQ, perturb: bool = False) -> Report:
    rep = Report("verify-structj", {"d": d, "field": _fname(field), "perturb": perturb})
    res = permideal.verify_structj(d, field, perturb)
    rep.counts = {"checks": res["checked"], "failures": len(res["failures"])}
    if not res["pass"]:
        rep.status = "fail"
        rep.findings += ["identity fails for %s" % f for f in res["failures"]]
    if d == 3 and not perturb:
        ngens = len(permideal.j_ideal(3, field))
        rep.counts["j_ideal_generators"] = ngens
        if ngens != 11:
            rep.status = "fail"
            rep.findings.append("J_3 has %d generators, expected 11" % ngens)
    return rep


@_timed
def h_rank(d: int, n: int, field: Field = QQ) -> Report:
    rep = Report("verify-h-rank", {"d": d, "n": n, "field": _fname(field)})
    res = permalgebra.verify_h_rank(d, n, field)
    span = permalgebra.verify_column_span(d, n, field)
    rep.counts = {"minors": res["minors"], "columns": span["columns"]}
    if not res["pass"]:
        rep.status = "fail"
        rep.findings.append("nonzero minor at %s" % res["failures"][0])
    if not span["pass"]:
        rep.status = "fail"
        rep.findings.append("column span check failed at %s" % span["failures"][:3])
    return rep


@_timed
def h_sigma() -> Report:
    """The printed quartic against sigma_1*sigma_3 - sigma_4; a mismatch is a finding."""
    rep = Report("family-h-sigma", {})
    res = families.verify_h_sigma()
    control = families.verify_h_sigma(drop_sigma4=True)
    rep.counts = {"identity_holds": int(res["pass"]), "control_rejected": int(not control["pass"])}
    rep.extra["difference"] = res["difference"]
    rep.extra["spot_check"] = {"h": res["h_at_ones"], "rhs": res["rhs_at_ones"]}
    if not res["pass"]:
        rep.status = "fail"
        rep.findings.append(
            "printed identity h = s1*s3 - s4 does not hold: s1*s3 - s4 - h = %s" % res["difference"]
        )
    if not res["grouping_matches_expansion"]:
        rep.status = "fail"
        rep.findings.append("grouped and expanded forms of h differ")
    if control["pass"]:
        rep.status = "fail"
        rep.findings.append("negative control unexpectedly passed")
    return rep


@_timed
def family_verify(fid: str, d: int | None = None) -> Report:
    rep = Report("family-verify", {"id": fid, "d": d})
    res = families.verify_family(fid, d)
    rep.counts = {"subpermanents": res["checked"], "nonzero": len(res["failures"])}
    if fid == "dxd1" and d == 3:
        rep.extra["matrix"] = families.family_matrix(fid, d).text_rows()
    if fid == "param-A":
        roots = sorted(families.full_support_exclusions(fid))
        rep.extra["zero_entry_parameters"] = [str(r) for r in roots]
    if not res["pass"]:
        rep.status = "fail"
        rep.findings += ["columns %s: %s" % (f["columns"], f["value"]) for f in res["failures"]]
    return rep


@_timed
def family_verify_all(dmax: int = 8) -> Report:
    rep = Report("family-verify-all", {"dmax": dmax})
    results = families.verify_all_families(dmax)
    rep.counts = {"families": len(results), "passed": sum(r["pass"] for r in results)}
    for r in results:
        if not r["pass"]:
            rep.status = "fail"
            rep.findings.append("%s d=%s fails" % (r["id"], r["d"]))
    return rep


@_timed
def jprime() -> Report:
    rep = Report("family-jprime", {"order": "degrevlex"})
    res = families.jprime_generators()["report"]
    rep.counts = {"setA_in_setB": int(res["setA_in_setB"]), "setB_in_setA": int(res["setB_in_setA"])}
    rep.extra["report"] = res
    rep.findings.append("containment verdict: %s" % res["verdict"])
    rep.findings.append("normal form of %s modulo setB: %s" % (res["relation"], res["relation_normal_form"]))
    if not all(res["degenerate_components_vanish"].values()):
        rep.status = "fail"
        rep.findings.append("a degenerate component does not lie on the variety")
    return rep


@_timed
def j3_points() -> Report:
    rep = Report("family-j3-points", {})
    res = families.verify_j3_points()
    rep.extra["evaluations"] = res
    rep.counts = {"families": 2, "nonzero": sum(len(res[f]["nonzero"]) for f in ("param-A", "param-B"))}
    if not res["pass"]:
        rep.status = "fail"
        rep.findings.append("a family point does not lie on V(J_3)")
    return rep


@_timed
def moncor(d: int, field: Field = QQ, out: str | None = None) -> Report:
    rep = Report("certificate-moncor", {"d": d, "field": _fname(field)})
    cert = permideal.moncor_certificate(d, field)
    basis = permideal.permanental_ideal(d, d, 2 * d - 1, field)
    res = permideal.verify_certificate(cert, basis)
    primes = permideal._prime_factors(cert.c)
    rep.counts = {"pairs": len(cert.pairs), "c": cert.c}
    rep.extra["c_prime_factors"] = primes
    if not res["pass"]:
        rep.status = "fail"
        rep.findings.append("certificate does not verify")
    if any(p > d for p in primes):
        rep.status = "fail"
        rep.findings.append("scalar %d has a prime factor above d" % cert.c)
    if out:
        with open(out, "w") as fh:
            json.dump(cert.to_json(), fh, indent=2, sort_keys=True)
        rep.artifacts.append(out)
    return rep


# --------------------------------------------------------------------------
# containments


@_timed
def typev(d: int, m: int, n: int, v: Sequence[int], field: Field = QQ) -> Report:
    spec = permideal.TypeSpec(tuple(v))
    rep = Report("scenario-typev", {"d": d, "m": m, "n": n, "v": list(spec.v), "field": _fname(field), "order": "degrevlex"})
    placement = permideal.default_placement(d, m, n, spec)
    prime = permideal.type_v_prime(d, m, n, spec, placement, field)
    I = permideal.permanental_ideal(d, m, n, field)
    ok = ideal_subset(I, prime)
    rep.counts = {"prime_generators": len(prime), "ideal_generators": len(I), "contained": int(ok)}
    rep.extra["placement"] = {
        "rows": list(placement.rows),
        "cols": list(placement.cols),
        "row_blocks": [list(b) for b in placement.row_blocks],
        "col_blocks": [list(b) for b in placement.col_blocks],
    }
    if not ok:
        rep.status = "fail"
        rep.findings.append("I_%d(%d,%d) is not inside the type %s prime" % (d, m, n, spec.v))
    return rep


@_timed
def exminlem(d: int, m: int, n: int, d1: int, rows: Sequence[int], cols: Sequence[int], field: Field = QQ) -> Report:
    rep = Report(
        "scenario-exminlem",
        {"d": d, "m": m, "n": n, "d1": d1, "rows": list(rows), "cols": list(cols), "field": _fname(field)},
    )
    m1, n1 = len(rows), len(cols)
    hypothesis = d - d1 >= (m + n) - (m1 + n1)
    I = permideal.permanental_ideal(d, m, n, field)
    J = permideal.embedded_ideal(d1, rows, cols, m, n, field)
    ok = ideal_subset(I, J)
    rep.counts = {"contained": int(ok), "hypothesis": int(hypothesis)}
    if hypothesis and not ok:
        rep.status = "fail"
        rep.findings.append("containment fails although d - d1 >= (m+n) - (m1+n1)")
    elif not hypothesis:
        rep.findings.append("hypothesis does not hold; containment %s" % ("holds" if ok else "fails"))
    return rep


def _finite_status(F: Field) -> str:
    return "evidence" if F.is_finite else "pass"


@_timed
def ajtconj(d: int, field: Field = QQ, power: int | None = None) -> Report:
    """(det M)^power in the maximal permanents of (M | M); power defaults to d."""
    e = d if power is None else power
    rep = Report("scenario-ajtconj", {"d": d, "field": _fname(field), "power": e, "order": "degrevlex"})
    I = permideal.doubled_ideal(d, field)
    M = Matrix.generic(d, d, field)
    target = determinant(M) ** e
    ok = ideal_contains(I, target)
    rep.counts = {"generators": len(I), "member": int(ok)}
    if ok:
        rep.status = _finite_status(field) if e == d else "pass"
        if field.is_finite:
            rep.findings.append("membership holds over %s only; this is evidence for characteristic 0" % field)
        else:
            rep.findings.append("(det M)^%d lies in I_%d(M|M) exactly over %s" % (e, d, field))
    else:
        rep.status = "fail" if e >= d else "pass"
        rep.findings.append("(det M)^%d is not in I_%d(M|M) over %s" % (e, d, field))
    return rep


@_timed
def ajtsublemma(d: int, field: Field = QQ) -> Report:
    rep = Report("scenario-ajtsublemma", {"d": d, "field": _fname(field), "order": "degrevlex"})
    I = permideal.doubled_ideal(d, field)
    M = Matrix.generic(d, d, field)
    det = determinant(M)
    sub = permideal.permanental_ideal(d - 1, d, d, field) if d > 1 else None
    gens = sub.generators if sub is not None else [M.ring.one]
    members = sum(ideal_contains(I, det * g) for g in gens)
    rep.counts = {"products": len(gens), "members": members}
    if members != len(gens):
        rep.status = "fail"
        rep.findings.append("%d products of det with I_%d(%d,%d) lie outside the ideal" % (len(gens) - members, d - 1, d, d))
    return rep


def _char3_products(d: int, field: Field):
    M = Matrix.generic(d, d, field)
    factors = [permideal.minors_ideal(i, list(range(1, i + 1)), M) for i in range(1, d + 1)]
    for combo in product(*factors):
        out = M.ring.one
        for f in combo:
            out = out * f
        yield out


@_timed
def char3ajt(d: int, field: Field | None = None) -> Report:
    """Products of one minor from each D_i(M_i) against I_d(M|M).

    In characteristic 3 every product must be a member.  Over other fields
    the run is a control; at d=3 the expected outcome is a non-member.
    """
    F = field if field is not None else field_parse("F3")
    rep = Report("scenario-char3ajt", {"d": d, "field": _fname(F), "order": "degrevlex"})
    I = permideal.doubled_ideal(d, F)
    total = members = 0
    for p in _char3_products(d, F):
        total += 1
        members += ideal_contains(I, p)
    rep.counts = {"products": total, "members": members}
    if F.char == 3:
        if members != total:
            rep.status = "fail"
            rep.findings.append("%d products lie outside I_%d(M|M)" % (total - members, d))
    else:
        rep.extra["control"] = True
        if members < total:
            rep.findings.append("control: %d of %d products are not members over %s" % (total - members, total, F))
        elif d >= 3:
            rep.status = "fail"
            rep.findings.append("control: every product is a member over %s" % F)
        else:
            rep.findings.append("control: every product is a member over %s at d=%d" % (F, d))
    return rep


# --------------------------------------------------------------------------
# enumerations


_CONTEXT_DEGREE = {(2, 3): 2, (3, 5): 3, (4, 4): 3}


@_timed
def variety(d: int, m: int, n: int, q: int, classify: bool = False, budget: int = 0, partitions: int = 1,
            max_unclassified: int = 20) -> Report:
    rep = Report("enumerate-variety", {"d": d, "m": m, "n": n, "q": q, "classify": classify, "budget_nodes": budget})
    if classify and _CONTEXT_DEGREE.get((m, n)) != d:
        raise ValueError("no classification context for d=%d on %dx%d" % (d, m, n))
    res = ajt.variety_enumerate(d, m, n, q, budget=budget, partitions=partitions)
    rep.counts = {"solutions": len(res), "nodes": res.nodes}
    if res.exceeded:
        rep.status = "budget-exceeded"
        rep.findings.append("node budget exhausted; counts are partial")
        return rep
    if classify:
        cls = ajt.classify_points(res, (m, n))
        rep.counts.update(cls["counts"])
        if cls["unclassified"]:
            rep.status = "fail"
            rep.findings.append("%d variety points match no listed component" % len(cls["unclassified"]))
            rep.extra["unclassified"] = cls["unclassified"][:max_unclassified]
    return rep


@_timed
def setevid(q: int) -> Report:
    """Each row of a 2x3 point has a zero entry or the other row is zero."""
    rep = Report("enumerate-setevid", {"d": 2, "m": 2, "n": 3, "q": q})
    F = ajt.field_of_size(q)
    res = ajt.variety_enumerate(2, 2, 3, q)
    bad = 0
    for rows in map(res.rows_of, res.codes):
        for r in range(2):
            other = rows[1 - r]
            if not (any(F.is_zero(x) for x in rows[r]) or all(F.is_zero(x) for x in other)):
                bad += 1
                break
    rep.counts = {"solutions": len(res), "violations": bad}
    if F.char <= 2:
        rep.findings.append("characteristic %d: the zero-entry property is only asserted in characteristic above 2" % F.char)
    elif bad:
        rep.status = "fail"
    return rep


@_timed
def nowitness(d: int, n: int, q: int) -> Report:
    rep = Report("ajt-classify-nowitness", {"d": d, "n": n, "q": q})
    rows = ajt.enumerate_no_witness(d, n, q)
    counts = {"zero-row": 0, "classified-two-column": 0, "unclassified": 0}
    bad = []
    for M, tag in rows:
        counts[tag] += 1
        if tag == "unclassified" and len(bad) < 20:
            bad.append(M.text_rows())
    rep.counts = {"no_witness": len(rows), **counts}
    theorem_applies = q == d + 1 and ajt.is_prime(q)
    if bad:
        rep.extra["unclassified"] = bad
        if theorem_applies:
            rep.status = "fail"
            rep.findings.append("unclassified no-witness matrices at q = d+1 prime")
        else:
            rep.findings.append("raw classification only; q is not d+1 prime")
    return rep


# --------------------------------------------------------------------------
# searches


@_timed
def witness(A: Matrix, budget: int = 0) -> Report:
    rep = Report("ajt-witness", {"matrix": A.text_rows(), "field": _fname(A.field), "budget_nodes": budget})
    w = ajt.find_witness(A, budget)
    rep.counts = {"nodes": w.nodes, "found": int(w.found)}
    F = A.field
    rep.extra["witnesses"] = [[F.format(x) for x in w.witness]] if w.found else []
    if w.exceeded:
        rep.status = "budget-exceeded"
    elif A.n <= 6 and F.q ** A.n <= 10 ** 5:
        if not ajt.polylink_agrees(A):
            rep.status = "fail"
            rep.findings.append("search result disagrees with the reduced P'_A")
    return rep


@_timed
def bblsgen(q: int, trials: int, seed: int, d: int = 4) -> Report:
    rep = Report("ajt-bblsgen", {"q": q, "trials": trials, "d": d}, seed=seed)
    F = ajt.field_of_size(q)
    rng = random.Random(seed)
    missing = []
    for _ in range(trials):
        A = ajt.random_invertible(d, F, rng)
        if not ajt.find_witness(A).found:
            missing.append(A.text_rows())
    rep.counts = {"trials": trials, "without_witness": len(missing)}
    if missing:
        rep.extra["unclassified"] = missing[:20]
        if q >= d >= 4:
            rep.status = "fail"
            rep.findings.append("invertible matrices without a witness")
    return rep


def _random_matrix(F: Field, d: int, n: int, rng: random.Random, zero_row: bool) -> Matrix:
    rows = [[F.random(rng) for _ in range(n)] for _ in range(d)]
    if zero_row:
        rows[rng.randrange(d)] = [F.zero] * n
    return Matrix._raw(rows, field=F)


@_timed
def largechar(seed: int, trials: int = 300) -> Report:
    """Witness exists iff no zero row, exhaustively at d=n=2 and randomly for d <= q-2."""
    rep = Report("ajt-largechar", {"trials": trials, "exhaustive": [[2, 2, 5], [2, 2, 7]], "random_q": [7, 8, 9]}, seed=seed)
    bad = []
    checked = 0
    for q in (5, 7):
        F = ajt.field_of_size(q)
        for flat in product(range(q), repeat=4):
            A = Matrix._raw([flat[:2], flat[2:]], field=F)
            checked += 1
            has_zero_row = any(all(x == 0 for x in r) for r in A.rows)
            if ajt.find_witness(A).found == has_zero_row:
                bad.append({"q": q, "matrix": A.text_rows()})
    rng = random.Random(seed)
    for q in (7, 8, 9):
        F = ajt.field_of_size(q)
        for _ in range(trials):
            d = rng.randint(1, q - 2)
            n = rng.randint(1, 5)
            A = _random_matrix(F, d, n, rng, rng.random() < 0.25)
            checked += 1
            has_zero_row = any(all(F.is_zero(x) for x in r) for r in A.rows)
            if ajt.find_witness(A).found == has_zero_row:
                bad.append({"q": q, "matrix": A.text_rows()})
    rep.counts = {"matrices": checked, "counterexamples": len(bad)}
    if bad:
        rep.status = "fail"
        rep.extra["witnesses"] = bad[:20]
    return rep


def _random_alpha(n: int, d: int, rng: random.Random) -> tuple:
    alpha = [0] * n
    for _ in range(d):
        alpha[rng.randrange(n)] += 1
    return tuple(alpha)


@_timed
def links(seed: int, trials: int = 1000) -> Report:
    """Coefficient/permanent link, coset formula, reduction soundness and the witness criterion."""
    rep = Report("ajt-links", {"trials": trials}, seed=seed)
    rng = random.Random(seed)
    fields = [QQ, field_parse("F7")]
    permlink_bad = betterlink_bad = 0
    for t in range(trials):
        F = fields[t % 2]
        d = rng.randint(1, 4)
        n = rng.randint(1, 4)
        if F.is_finite:
            A = _random_matrix(F, d, n, rng, False)
        else:
            A = Matrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(d)], field=F)
        alpha = _random_alpha(n, d, rng)
        c = ajt.c_alpha(A, alpha)
        lhs = permanent(ajt.repeat_columns(A, alpha))
        mult = math.prod(math.factorial(a) for a in alpha)
        if lhs != c * mult:
            permlink_bad += 1
        if ajt.c_alpha(A, alpha, "coset") != c:
            betterlink_bad += 1
    reduce_bad = reduce_checked = 0
    for q in (2, 3, 4, 5):
        F = ajt.field_of_size(q)
        for nv in (1, 2, 3):
            R = PolyRing(F, ["x%d" % i for i in range(nv)])
            for k in range(max(1, trials // 40)):
                f = _random_poly(R, q, rng)
                if k % 3 == 0:
                    x = R.gens()[rng.randrange(nv)]
                    f = f * (x ** q - x)
                reduce_checked += 1
                if ajt.vanishes_everywhere(f) != ajt.reduce_q(f).is_zero():
                    reduce_bad += 1
    polylink_bad = polylink_checked = 0
    F3 = field_parse("F3")
    for n in (1, 2, 3):
        for flat in product(range(3), repeat=2 * n):
            A = Matrix._raw([flat[:n], flat[n:]], field=F3)
            polylink_checked += 1
            if not ajt.polylink_agrees(A):
                polylink_bad += 1
    rep.counts = {
        "permlink": trials,
        "permlink_failures": permlink_bad,
        "betterlink": trials,
        "betterlink_failures": betterlink_bad,
        "reduceq": reduce_checked,
        "reduceq_failures": reduce_bad,
        "polylink": polylink_checked,
        "polylink_failures": polylink_bad,
    }
    if permlink_bad or betterlink_bad or reduce_bad or polylink_bad:
        rep.status = "fail"
    return rep


def _random_poly(R: PolyRing, q: int, rng: random.Random):
    F = R.field
    terms = {}
    for _ in range(rng.randint(0, 4)):
        exps = [rng.randint(0, 2 * q) for _ in range(R.nvars)]
        terms[R.pack(exps)] = F.random(rng)
    f = R.zero
    for key, c in terms.items():
        f = f + R.monomial(R.unpack(key)).scale(c)
    return f


# --------------------------------------------------------------------------
# suites


def _suite_identities(seed: int | None) -> list[Report]:
    out = [evid(d) for d in (2, 3, 4)]
    out += [preevid(d, n) for d, n in ((3, 4), (4, 5), (4, 6))]
    out += [structj(d) for d in (2, 3)]
    out += [h_rank(d, n) for d, n in ((2, 3), (2, 4), (3, 4))]
    out += [moncor(d) for d in (1, 2, 3)]
    out += [family_verify_all(), h_sigma(), jprime(), j3_points()]
    return out


def _suite_containments(seed: int | None) -> list[Report]:
    F3, F5, F7 = (field_parse(s) for s in ("F3", "F5", "F7"))
    return [
        typev(2, 3, 3, (2,)),
        typev(3, 4, 4, (2, 2)),
        exminlem(2, 2, 3, 1, (1, 2), (1, 2)),
        ajtsublemma(2, QQ),
        ajtsublemma(3, F5),
        char3ajt(2, F3),
        char3ajt(3, F3),
        char3ajt(3, QQ),
        ajtconj(2, QQ),
        ajtconj(3, F5),
        ajtconj(3, F7),
    ]


def _suite_enumerations(seed: int | None) -> list[Report]:
    return [
        variety(2, 2, 2, 3),
        variety(2, 2, 3, 5, classify=True),
        variety(2, 2, 3, 7, classify=True),
        variety(3, 3, 5, 3, classify=True),
        variety(3, 4, 4, 3, classify=True),
        setevid(5),
        nowitness(2, 2, 3),
        nowitness(2, 3, 3),
        nowitness(4, 2, 5),
    ]


def _suite_searches(seed: int | None) -> list[Report]:
    if seed is None:
        raise ValueError("the searches suite is randomized and needs --seed")
    return [
        links(seed),
        largechar(seed),
        bblsgen(4, 10000, seed),
        bblsgen(5, 10000, seed),
    ]


SUITES = {
    "identities": _suite_identities,
    "containments": _suite_containments,
    "enumerations": _suite_enumerations,
    "searches": _suite_searches,
}


def run_suite(name: str, seed: int | None = None) -> Report:
    """Run a suite; the aggregate status is the worst member status."""
    t0 = time.perf_counter()
    if name == "all":
        if seed is None:
            raise ValueError("suite all is randomized and needs --seed")
        members = []
        for key in ("identities", "containments", "enumerations", "searches"):
            members += SUITES[key](seed)
    elif name in SUITES:
        members = SUITES[name](seed)
    else:
        raise ValueError("unknown suite %r" % name)
    status = worst([m.status for m in members])
    counts: dict = {s: 0 for s in SEVERITY}
    for m in members:
        counts[m.status] += 1
    findings = ["%s: %s" % (m.scenario, f) for m in members for f in m.findings]
    rep = Report("suite-" + name, {"suite": name}, status, counts, findings, seed=seed)
    rep.extra["members"] = [m.to_json() for m in members]
    rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def strip_runtime(obj):
    """Copy of a report dict without runtime fields, for determinism comparisons."""
    if isinstance(obj, dict):
        return {k: strip_runtime(v) for k, v in obj.items() if k != "runtime_ms"}
    if isinstance(obj, list):
        return [strip_runtime(v) for v in obj]
    return obj
