import random

import pytest

from permlab import _pure, kernels
from permlab.scalars import field_parse

compiled = pytest.importorskip("permlab._kernels")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.backend_module("python") is _pure


@pytest.mark.parametrize("p", [2, 3, 101, 2 ** 31 - 1])
def test_ryser_mod_agree(p):
    rng = random.Random(p)
    for _ in range(40):
        n = rng.randint(1, 10)
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        assert compiled.ryser_mod(rows, p) == _pure.ryser_mod(rows, p)


@pytest.mark.parametrize("spec,d,m,n", [("F3", 2, 2, 2), ("F3", 2, 2, 3), ("F5", 2, 2, 3), ("GF2^2", 2, 2, 3), ("F3", 2, 3, 3)])
def test_variety_agree(spec, d, m, n):
    F = field_parse(spec)
    add, mul = F.tables()
    a = compiled.variety_dfs(d, m, n, F.q, add, mul, 0, 0, -1)
    b = _pure.variety_dfs(d, m, n, F.q, add, mul, 0, 0, -1)
    assert list(a[0]) == list(b[0])
    assert a[1:] == b[1:]


def test_variety_budget_agree():
    F = field_parse("F3")
    add, mul = F.tables()
    a = compiled.variety_dfs(3, 3, 4, 3, add, mul, 500, 0, -1)
    b = _pure.variety_dfs(3, 3, 4, 3, add, mul, 500, 0, -1)
    assert a[2] and b[2]
    assert list(a[0]) == list(b[0])


@pytest.mark.parametrize("spec", ["F3", "F5", "GF2^2"])
def test_witness_agree(spec):
    F = field_parse(spec)
    add, mul = F.tables()
    rng = random.Random(9)
    for _ in range(300):
        d, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randrange(F.q) for _ in range(n)] for _ in range(d)]
        assert compiled.find_witness(rows, F.q, add, mul, 0) == _pure.find_witness(rows, F.q, add, mul, 0)


def test_nowitness_sweep_agree():
    F = field_parse("F3")
    add, mul = F.tables()
    assert list(compiled.nowitness_sweep(2, 3, 3, add, mul)) == list(_pure.nowitness_sweep(2, 3, 3, add, mul))


def test_benchmark_cases_agree():
    import importlib.util
    import pathlib

    path = pathlib.Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    py = kernels.backend_module("python")
    cy = kernels.backend_module("cython")
    for name, fn in bench.cases():
        assert fn(py) == fn(cy), name
