"""One test per acceptance criterion; each prints a single PASS/FAIL line with timing."""

import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

import conftest
from permlab import families, scenarios
from permlab.families import verify_family
from permlab.permcore import Matrix, permanent
from permlab.permideal import j_ideal
from permlab.scalars import QQ, field_parse
from test_ajt import _component_union_count

F3, F4, F5, F7 = (field_parse(s) for s in ("F3", "GF2^2", "F5", "F7"))


@contextmanager
def criterion(num, title, limit_s):
    state = {"ok": False, "note": ""}
    t0 = time.perf_counter()
    try:
        yield state
    finally:
        dt = time.perf_counter() - t0
        ok = state["ok"] and dt < limit_s
        line = "criterion %2d %s: %s (%.1f s, limit %g s)%s" % (
            num, "PASS" if ok else "FAIL", title, dt, limit_s, " " + state["note"] if state["note"] else "")
        print(line)
        conftest.ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_c01_dxd1_family():
    with criterion(1, "dxd1 family d=2..8 exact", 10) as st:
        anchor = Matrix([[1, 1, 1, -7], [1, 1, -4, 2], [1, 1, 3, 5]], field=QQ)
        reps = [scenarios.family_verify("dxd1", d) for d in range(2, 9)]
        st["ok"] = families.family_matrix("dxd1", 3).rows == anchor.rows and all(r.status == "pass" for r in reps)


def test_c02_four_by_six():
    with criterion(2, "four-by-six over QQ(i)", 1) as st:
        res = verify_family("four-by-six")
        st["ok"] = res["pass"] and res["checked"] == 15


def test_c03_evid_preevid():
    with criterion(3, "evid d=2,3,4 and preevid", 60) as st:
        ev = [scenarios.evid(d) for d in (2, 3, 4)]
        pre = [scenarios.preevid(d, n) for d, n in ((3, 4), (4, 5), (4, 6))]
        signs_ok = all(r.extra["sign"] == (-1) ** (d - 1) for r, d in zip(ev, (2, 3, 4)))
        st["ok"] = signs_ok and all(r.status == "pass" for r in ev + pre)
        st["note"] = "identities=%d" % sum(r.counts["identities"] for r in ev + pre)


def test_c04_moncor():
    with criterion(4, "moncor certificates d=2,3", 60) as st:
        reps = {d: scenarios.moncor(d) for d in (2, 3)}
        primes_ok = all(p <= d for d, r in reps.items() for p in r.extra["c_prime_factors"])
        st["ok"] = primes_ok and all(r.status == "pass" for r in reps.values())
        st["note"] = "c=" + ",".join(str(r.counts["c"]) for r in reps.values())


def test_c05_h_rank():
    with criterion(5, "H-rank minors vanish", 300) as st:
        reps = [scenarios.h_rank(d, n) for d, n in ((2, 3), (2, 4), (3, 4))]
        st["ok"] = [r.counts["minors"] for r in reps] == [1, 16, 210] and all(r.status == "pass" for r in reps)


def test_c06_structj():
    with criterion(6, "structJ d=2,3 and 11 generators of J_3", 30) as st:
        reps = [scenarios.structj(d) for d in (2, 3)]
        st["ok"] = all(r.status == "pass" for r in reps) and len(j_ideal(3)) == 11


def test_c07_h_sigma_and_families():
    with criterion(7, "h-sigma verdict, param families, J_3 points", 60) as st:
        hs = scenarios.h_sigma()
        res = families.verify_h_sigma()
        # a definitive verdict: either the identity holds or the difference is surfaced as a finding
        verdict = hs.status == "pass" if res["pass"] else (hs.status == "fail" and any(res["difference"] in f for f in hs.findings))
        params = all(verify_family(f)["pass"] for f in ("param-A", "param-B"))
        j3 = families.verify_j3_points()["pass"]
        st["ok"] = verdict and params and j3
        st["note"] = "h-sigma difference: %s" % res["difference"]


def test_c08_containments():
    with criterion(8, "Groebner containment batch", 1800) as st:
        expect = [
            (scenarios.typev(2, 3, 3, (2,)), "pass"),
            (scenarios.typev(3, 4, 4, (2, 2)), "pass"),
            (scenarios.exminlem(2, 2, 3, 1, (1, 2), (1, 2)), "pass"),
            (scenarios.ajtconj(2, QQ), "pass"),
            (scenarios.ajtconj(3, F5), "evidence"),
            (scenarios.ajtconj(3, F7), "evidence"),
            (scenarios.ajtsublemma(2, QQ), "pass"),
            (scenarios.ajtsublemma(3, F5), "pass"),
            (scenarios.char3ajt(2, F3), "pass"),
            (scenarios.char3ajt(3, F3), "pass"),
        ]
        control = scenarios.char3ajt(3, QQ)
        ok = all(r.status == s for r, s in expect)
        ok = ok and control.counts["members"] < control.counts["products"] and control.status == "pass"
        st["ok"] = ok
        st["note"] = "QQ control members %d/%d" % (control.counts["members"], control.counts["products"])


def test_c09a_i2_23():
    with criterion(9, "(a) I_2(2,3) over F5, F7 vs union count", 900) as st:
        ok = True
        for q in (5, 7):
            rep = scenarios.variety(2, 2, 3, q, classify=True)
            ok = ok and rep.status == "pass" and rep.counts["unclassified"] == 0
            ok = ok and rep.counts["solutions"] == _component_union_count(q)
        st["ok"] = ok


def test_c09b_i3_35():
    with criterion(9, "(b) I_3(3,5) over F3 classified", 900) as st:
        rep = scenarios.variety(3, 3, 5, 3, classify=True)
        st["ok"] = rep.status == "pass" and rep.counts["unclassified"] == 0 and rep.counts["minors-on-4-columns"] > 0
        st["note"] = "points=%d" % rep.counts["solutions"]


def test_c09c_i3_44():
    with criterion(9, "(c) I_3(4,4) over F3 classified", 900) as st:
        rep = scenarios.variety(3, 4, 4, 3, classify=True)
        st["ok"] = rep.status == "pass" and rep.counts["unclassified"] == 0 and rep.counts["minors-2x2"] > 0
        st["note"] = "points=%d" % rep.counts["solutions"]


def test_c10_ajt_finite_suite():
    with criterion(10, "AJT finite-field suite", 600) as st:
        links = scenarios.links(42, 1000)
        large = scenarios.largechar(42)
        nw = [scenarios.nowitness(2, n, 3) for n in (1, 2, 3)] + [scenarios.nowitness(4, 2, 5)]
        bb = [scenarios.bblsgen(q, 10000, 42) for q in (4, 5)]
        ok = links.status == "pass" and links.counts["permlink"] == 1000 and links.counts["betterlink"] == 1000
        ok = ok and large.status == "pass" and large.counts["counterexamples"] == 0
        ok = ok and all(r.status == "pass" and r.counts["unclassified"] == 0 for r in nw)
        ok = ok and all(r.status == "pass" and r.counts["without_witness"] == 0 for r in bb)
        st["ok"] = ok


def test_c11_ryser_performance():
    with criterion(11, "Ryser 20x20 and Ryser = Laplace", 120) as st:
        rng = random.Random(2024)
        rows = [[rng.randint(-9, 9) for _ in range(20)] for _ in range(20)]
        t0 = time.perf_counter()
        permanent(Matrix(rows, field=QQ))
        fast = time.perf_counter() - t0 < 2
        agree = True
        for spec in ("QQ", "QQi", "F2", "F3", "F7", "GF2^2", "GF3^2"):
            F = field_parse(spec)
            for _ in range(500):
                n = rng.randint(1, 9)
                A = Matrix._raw([[F.random(rng) for _ in range(n)] for _ in range(n)], field=F)
                agree = agree and permanent(A, "ryser") == permanent(A, "laplace")
        st["ok"] = fast and agree


@pytest.mark.slow
def test_c12_determinism():
    with criterion(12, "suite all --seed 42 is deterministic", 1800) as st:
        a = scenarios.run_suite("all", 42).to_json()
        b = scenarios.run_suite("all", 42).to_json()
        st["ok"] = json.dumps(scenarios.strip_runtime(a), sort_keys=True) == json.dumps(scenarios.strip_runtime(b), sort_keys=True)
        st["note"] = "suite status %s" % a["status"]
