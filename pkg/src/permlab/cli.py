"""``permlab`` command line: every scenario as a subcommand, JSON on stdout."""

from __future__ import annotations

import functools
import json
import sys

import click

from . import families, permideal, scenarios
from .groebner import ResourceCapExceeded, ideal_contains
from .permcore import Matrix, MatrixFormatError
from .permideal import IdealBasis, IdealFormatError
from .polyring import PolySyntaxError
from .scalars import FieldError, field_parse
from .scenarios import Report


def _global_options(fn):
    """Global flags, accepted before or after the subcommand name."""
    opts = [
        click.option("--field", "field_", default=None, help="Coefficient field: QQ, QQi, F<p>, GF<p>^<k>."),
        click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=None, help="Seed for randomized runs."),
        click.option("--budget-nodes", type=click.IntRange(0), default=None, help="Search node budget (0 = none)."),
        click.option("--json-out", type=click.Path(dir_okay=False, writable=True), default=None,
                     help="Also write the report to this file."),
        click.option("--threads", type=click.IntRange(1), default=None,
                     help="Partitions for enumerations; partitions run in this process."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _settings(ctx: click.Context, **local) -> dict:
    root = ctx.find_root().obj or {}
    out = dict(root)
    for k, v in local.items():
        if v is not None:
            out[k] = v
    return out


def _field(settings: dict, default: str = "QQ"):
    try:
        return field_parse(settings.get("field_") or default)
    except FieldError as exc:
        raise click.BadParameter(str(exc), param_hint="--field")


def _emit(rep: Report, settings: dict) -> None:
    path = settings.get("json_out")
    if path:
        rep.artifacts.append(path)
    text = rep.dumps()
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    click.echo(text)
    click.echo("%s: %s (%d ms)" % (rep.scenario, rep.status, rep.runtime_ms), err=True)
    for f in rep.findings[:10]:
        click.echo("  " + f, err=True)
    sys.exit(rep.exit_code)


def command(group: click.Group, name: str, **kw):
    """Register a leaf command that takes the global flags and returns a Report."""

    def deco(fn):
        @group.command(name, **kw)
        @_global_options
        @click.pass_context
        @functools.wraps(fn)
        def wrapper(ctx, field_, seed, budget_nodes, json_out, threads, **params):
            settings = _settings(ctx, field_=field_, seed=seed, budget_nodes=budget_nodes,
                                 json_out=json_out, threads=threads)
            try:
                rep = fn(settings, **params)
            except (ValueError, FieldError, IdealFormatError, MatrixFormatError, PolySyntaxError) as exc:
                raise click.UsageError(str(exc))
            except ResourceCapExceeded as exc:
                rep = Report(name, {k: v for k, v in params.items()}, "budget-exceeded", findings=[str(exc)])
            _emit(rep, settings)

        return wrapper

    return deco


@click.group()
@_global_options
@click.version_option(package_name="artifact")
@click.pass_context
def main(ctx, field_, seed, budget_nodes, json_out, threads):
    """Permanental ideals, identities and finite-field searches."""
    ctx.obj = {k: v for k, v in dict(field_=field_, seed=seed, budget_nodes=budget_nodes,
                                     json_out=json_out, threads=threads).items() if v is not None}


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise click.BadParameter("expected comma-separated integers, got %r" % text)


# ---------------------------------------------------------------- ideal

@main.group()
def ideal():
    """Generating sets."""


@command(ideal, "gens")
@click.option("--d", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the ideal file here.")
def ideal_gens(s, d, m, n, out):
    F = _field(s)
    I = permideal.permanental_ideal(d, m, n, F)
    rep = Report("ideal-gens", {"d": d, "m": m, "n": n, "field": str(F)})
    rep.counts = {"generators": len(I)}
    rep.extra["generators"] = [str(g) for g in I]
    if out:
        with open(out, "w") as fh:
            fh.write(I.to_text())
        rep.artifacts.append(out)
    return rep


# ---------------------------------------------------------------- verify

@main.group()
def verify():
    """Exact polynomial identities."""


@command(verify, "evid")
@click.option("--d", type=int, required=True)
@click.option("--alpha", default=None, help="One (d-1)-subset, e.g. 1,2; default runs all.")
@click.option("--row", type=int, default=1)
def verify_evid(s, d, alpha, row):
    F = _field(s)
    if alpha is None:
        return scenarios.evid(d, F)
    res = permideal.verify_evid(d, _ints(alpha), F, special_row=row)
    rep = Report("verify-evid", {"d": d, "alpha": list(_ints(alpha)), "row": row, "field": str(F)})
    rep.extra["sign"] = res["sign"]
    rep.counts = {"identities": 1}
    if not res["pass"]:
        rep.status = "fail"
        rep.findings.append("difference " + res["difference"])
    return rep


@command(verify, "preevid")
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, required=True)
def verify_preevid(s, d, n):
    return scenarios.preevid(d, n, _field(s))


@command(verify, "structj")
@click.option("--d", type=int, required=True)
@click.option("--perturb", is_flag=True, help="Negative control: perturb one index.")
def verify_structj(s, d, perturb):
    return scenarios.structj(d, _field(s), perturb)


@command(verify, "h-rank")
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, required=True)
def verify_h_rank(s, d, n):
    return scenarios.h_rank(d, n, _field(s))


# ---------------------------------------------------------------- certificate

@main.group()
def certificate():
    """Membership certificates."""


@command(certificate, "moncor")
@click.option("--d", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def certificate_moncor(s, d, out):
    return scenarios.moncor(d, _field(s), out)


# ---------------------------------------------------------------- gb

@main.group()
def gb():
    """Groebner basis queries."""


@command(gb, "membership")
@click.option("--ideal", "ideal_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--poly", "poly_text", required=True)
@click.option("--order", type=click.Choice(["degrevlex", "lex"]), default="degrevlex")
def gb_membership(s, ideal_path, poly_text, order):
    with open(ideal_path) as fh:
        I = IdealBasis.from_text(fh.read())
    f = I.ring.parse(poly_text)
    member = ideal_contains(I, f, order)
    rep = Report("gb-membership", {"ideal": ideal_path, "poly": poly_text, "order": order,
                                   "field": str(I.ring.field)})
    rep.counts = {"generators": len(I), "member": int(member)}
    return rep


# ---------------------------------------------------------------- scenario

@main.group()
def scenario():
    """Containments decided with Groebner bases."""


@command(scenario, "ajtconj")
@click.option("--d", type=int, required=True)
@click.option("--power", type=int, default=None, help="Exponent of det; defaults to d.")
def scenario_ajtconj(s, d, power):
    return scenarios.ajtconj(d, _field(s), power)


@command(scenario, "ajtsublemma")
@click.option("--d", type=int, required=True)
def scenario_ajtsublemma(s, d):
    return scenarios.ajtsublemma(d, _field(s))


@command(scenario, "char3ajt")
@click.option("--d", type=int, required=True)
def scenario_char3ajt(s, d):
    return scenarios.char3ajt(d, _field(s, "F3"))


@command(scenario, "typev")
@click.option("--d", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--v", "v_text", required=True, help="Type as comma-separated block sizes, e.g. 2,2.")
def scenario_typev(s, d, m, n, v_text):
    return scenarios.typev(d, m, n, _ints(v_text), _field(s))


@command(scenario, "exminlem")
@click.option("--d", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--d1", type=int, required=True)
@click.option("--rows", "rows_text", required=True)
@click.option("--cols", "cols_text", required=True)
def scenario_exminlem(s, d, m, n, d1, rows_text, cols_text):
    return scenarios.exminlem(d, m, n, d1, _ints(rows_text), _ints(cols_text), _field(s))


# ---------------------------------------------------------------- ajt

@main.group("ajt")
def ajt_group():
    """Nowhere-zero witness searches over finite fields."""


@command(ajt_group, "witness")
@click.option("--matrix", "matrix_path", type=click.Path(exists=True, dir_okay=False), required=True)
def ajt_witness(s, matrix_path):
    try:
        with open(matrix_path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise click.UsageError("malformed matrix file: %s" % exc)
    M = Matrix.from_json(data)
    if M.symbolic or not M.field.is_finite:
        raise click.UsageError("witness search needs a matrix over a finite field")
    return scenarios.witness(M, s.get("budget_nodes") or 0)


@command(ajt_group, "classify-nowitness")
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
def ajt_classify(s, d, n, q):
    return scenarios.nowitness(d, n, q)


def _need_seed(s: dict) -> int:
    if s.get("seed") is None:
        raise click.UsageError("this command is randomized; pass --seed")
    return s["seed"]


@command(ajt_group, "bblsgen")
@click.option("--q", type=int, required=True)
@click.option("--trials", type=int, default=10000)
@click.option("--d", type=int, default=4)
def ajt_bblsgen(s, q, trials, d):
    return scenarios.bblsgen(q, trials, _need_seed(s), d)


@command(ajt_group, "largechar")
@click.option("--trials", type=int, default=300)
def ajt_largechar(s, trials):
    return scenarios.largechar(_need_seed(s), trials)


@command(ajt_group, "links")
@click.option("--trials", type=int, default=1000)
def ajt_links(s, trials):
    return scenarios.links(_need_seed(s), trials)


# ---------------------------------------------------------------- enumerate

@main.group("enumerate")
def enumerate_group():
    """Exhaustive searches of permanental varieties."""


@command(enumerate_group, "variety")
@click.option("--d", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--classify", is_flag=True, help="Tag each point by a component.")
def enumerate_variety(s, d, m, n, q, classify):
    return scenarios.variety(d, m, n, q, classify, s.get("budget_nodes") or 0, s.get("threads") or 1)


@command(enumerate_group, "setevid")
@click.option("--q", type=int, required=True)
def enumerate_setevid(s, q):
    return scenarios.setevid(q)


# ---------------------------------------------------------------- family

@main.group()
def family():
    """Explicit matrix families."""


_IDS = click.Choice(list(families.FAMILY_IDS))


@command(family, "show")
@click.option("--id", "fid", type=_IDS, required=True)
@click.option("--d", type=int, default=None)
def family_show(s, fid, d):
    M = families.family_matrix(fid, d)
    rep = Report("family-show", {"id": fid, "d": d})
    rep.extra["matrix"] = M.text_rows()
    rep.counts = {"rows": M.m, "columns": M.n}
    return rep


@command(family, "verify")
@click.option("--id", "fid", type=_IDS, required=True)
@click.option("--d", type=int, default=None)
def family_verify(s, fid, d):
    return scenarios.family_verify(fid, d)


@command(family, "verify-all")
@click.option("--dmax", type=int, default=8)
def family_verify_all(s, dmax):
    return scenarios.family_verify_all(dmax)


@command(family, "h-sigma")
def family_h_sigma(s):
    return scenarios.h_sigma()


@command(family, "jprime")
def family_jprime(s):
    return scenarios.jprime()


@command(family, "j3-points")
def family_j3_points(s):
    return scenarios.j3_points()


# ---------------------------------------------------------------- suite

@command(main, "suite")
@click.argument("name", type=click.Choice(["identities", "containments", "enumerations", "searches", "all"]))
def suite(s, name):
    return scenarios.run_suite(name, s.get("seed"))


if __name__ == "__main__":
    main()
