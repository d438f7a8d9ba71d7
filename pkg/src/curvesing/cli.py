"""Command-line interface: catalog listings, invariants, covering-degree
tables, the free-divisor determinant identities, divisor sampling, figure
data emission, and the aggregated verification run.

All randomness is derived from the --seed flag (echoed in every report) so
output is byte-deterministic given the flags.
"""

import csv
import json
import sys
from fractions import Fraction

import click

from .catalog import (
    DEFAULT_MODULI,
    RestrictionError,
    default_entries,
    instantiate,
    parse_descriptor,
    printed_miniversal,
)
from .deform import (
    DeformationFamily,
    bifurcation_matrix,
    discriminant_matrix,
    euler_row_check,
    level_collapse_certificate,
    normalize_leading,
    sample_discriminant,
    sample_sigma,
    sigma_equation,
)
from .invariants import GenericityConfig, conjecture_check, tjurina
from .llmap import (
    ProfileError,
    degenerate_draws,
    extended_matrix_relation,
    ll_degree,
    ll_fiber_origin_check,
    ll_jacobian_check,
    weight_profile,
)
from .poly import QQ, Polynomial
from .seeds import stable_rng


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        n, d = int(obj.numerator), int(obj.denominator)
        return n if d == 1 else f"{n}/{d}"
    return str(obj)


def _emit(ctx, payload):
    payload = {"seed": ctx.obj["seed"], **payload}
    if ctx.obj["json"]:
        click.echo(json.dumps(_jsonable(payload), sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent=0):
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            click.echo(f"{pad}{key}:")
            _emit_text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            click.echo(f"{pad}{key}:")
            for item in value:
                line = "  ".join(f"{k}={_jsonable(v)}" for k, v in item.items())
                click.echo(f"{pad}  {line}")
        else:
            click.echo(f"{pad}{key}: {_jsonable(value)}")


def _entry(descriptor, modulus):
    try:
        family, indices = parse_descriptor(descriptor)
        if family in ("X9star", "J10star") and modulus is None:
            modulus = DEFAULT_MODULI[0]
        return instantiate(family, indices, modulus=modulus)
    except (ValueError, RestrictionError) as e:
        raise click.UsageError(str(e))


def _deform_family(descriptor):
    """A deformation family for the free-divisor machinery: the A series or
    a C_{p,q,r} entry with its printed miniversal deformation."""
    family, indices = parse_descriptor(descriptor)
    if family == "A":
        return DeformationFamily.a_series(indices[0]), family, indices
    if family == "C_space":
        return DeformationFamily.from_printed(printed_miniversal(*indices)), family, indices
    raise click.UsageError(
        "free-divisor entries are the A series (A2, ...) or C:p,q,r")


@click.group()
@click.option("--seed", type=int, default=0, show_default=True,
              help="master seed for every genericity draw")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@click.option("--max-tau", type=int, default=None,
              help="cap the catalog range by Tjurina number")
@click.pass_context
def main(ctx, seed, as_json, max_tau):
    """Exact invariants of functions on determinantal space curves."""
    ctx.ensure_object(dict)
    ctx.obj.update(seed=seed, json=as_json, max_tau=max_tau)


@main.command()
@click.pass_context
def catalog(ctx):
    """List all catalog entries in the default range."""
    records = [e.describe() for e in default_entries(ctx.obj["max_tau"])]
    _emit(ctx, {"count": len(records), "entries": records})


@main.command("tjurina")
@click.argument("descriptor")
@click.option("--modulus", default=None, help="modulus for X9*/J10*")
@click.pass_context
def tjurina_cmd(ctx, descriptor, modulus):
    """Tjurina number of one catalog entry."""
    entry = _entry(descriptor, modulus)
    tau = tjurina(entry.pair)
    _emit(ctx, {"name": entry.name, "tau": tau,
                "expected": entry.expected_tau, "match": tau == entry.expected_tau})
    if tau != entry.expected_tau:
        sys.exit(1)


@main.command()
@click.argument("descriptor")
@click.option("--modulus", default=None, help="modulus for X9*/J10*")
@click.pass_context
def milnor(ctx, descriptor, modulus):
    """Milnor number of one catalog entry (where a route exists)."""
    entry = _entry(descriptor, modulus)
    report = conjecture_check(entry, GenericityConfig(seed=ctx.obj["seed"]))
    _emit(ctx, report)


@main.command("verify-conjecture")
@click.option("--entry", "descriptor", default=None, help="restrict to one entry")
@click.option("--modulus", default=None)
@click.pass_context
def verify_conjecture(ctx, descriptor, modulus):
    """Check tau = mu on every entry with an implemented Milnor route."""
    cfg = GenericityConfig(seed=ctx.obj["seed"])
    entries = ([_entry(descriptor, modulus)] if descriptor
               else default_entries(ctx.obj["max_tau"]))
    rows, failed = [], False
    for e in entries:
        report = conjecture_check(e, cfg)
        rows.append({"family": e.family, "indices": list(e.indices),
                     "tau": report["tau"], "mu": report["mu"],
                     "status": report["status"]})
        if report["status"] == "mismatch":
            failed = True
    _emit(ctx, {"results": rows})
    if failed:
        sys.exit(1)


@main.command("ll-degree")
@click.option("--entry", "descriptor", default=None)
@click.option("--all", "show_all", is_flag=True, help="the full in-range table")
@click.pass_context
def ll_degree_cmd(ctx, descriptor, show_all):
    """Covering degree of the critical-value map."""
    if descriptor:
        entries = [_entry(descriptor, None)]
    elif show_all:
        entries = default_entries(ctx.obj["max_tau"])
    else:
        raise click.UsageError("give --entry NAME or --all")
    rows = []
    for e in entries:
        try:
            rows.append({"name": e.name, "degree": ll_degree(weight_profile(e))})
        except ProfileError as ex:
            rows.append({"name": e.name, "degree": None, "reason": str(ex)})
    _emit(ctx, {"results": rows})


@main.command("ll-check")
@click.option("--entry", "descriptor", required=True, help="C:p,q,r entry")
@click.option("--off-draws", type=int, default=20, show_default=True)
@click.option("--on-draws", type=int, default=5, show_default=True)
@click.option("--fiber-draws", type=int, default=500, show_default=True)
@click.pass_context
def ll_check(ctx, descriptor, off_draws, on_draws, fiber_draws):
    """Covering-property checks for a C_{p,q,r} entry: jacobian
    nonsingularity off the bifurcation diagram, singularity on it, the
    extended-matrix determinant relation, and the origin-fiber bound."""
    family, indices = parse_descriptor(descriptor)
    if family != "C_space":
        raise click.UsageError("ll-check takes a C:p,q,r entry")
    p, q, r = indices
    seed = ctx.obj["seed"]
    rng = stable_rng(seed, "llcheck", p, q, r)

    def draw():
        pd = printed_miniversal(p, q, r)
        vals = {}
        for name in pd.parameters:
            lo = 1 if name in ("alpha", "beta", "gamma") else -6
            vals[name] = Fraction(rng.randint(lo, 6), rng.randint(1, 3))
        return vals

    off_ok = attempts = 0
    while off_ok < off_draws and attempts < 3 * off_draws:
        attempts += 1
        if ll_jacobian_check(p, q, r, draw())["nonsingular"]:
            off_ok += 1
    on_ok = 0
    for pt in degenerate_draws(p, q, r, on_draws, seed=seed):
        if not ll_jacobian_check(p, q, r, pt)["nonsingular"]:
            on_ok += 1
    ext = extended_matrix_relation(p, q, r, seed=seed, draws=4)
    fiber = ll_fiber_origin_check(p, q, r, draws=fiber_draws, seed=seed)
    report = {
        "entry": descriptor,
        "off_sigma_nonsingular": f"{off_ok}/{off_draws}",
        "on_sigma_singular": f"{on_ok}/{on_draws}",
        "cofactor_identity": ext["cofactor_identity"],
        "fiber_degree_ok": fiber["degree_ok"],
        "fiber_zero_hits": len(fiber["zero_fiber_hits"]),
    }
    _emit(ctx, report)
    ok = (off_ok == off_draws and on_ok == on_draws
          and ext["cofactor_identity"]
          and fiber["degree_ok"] and not fiber["zero_fiber_hits"])
    if not ok:
        sys.exit(1)


@main.command("free-divisor")
@click.option("--entry", "descriptor", required=True,
              help="A-series (A2) or C:p,q,r entry")
@click.option("--mode", type=click.Choice(["delta", "sigma"]), default="delta",
              show_default=True)
@click.option("--samples", type=int, default=25, show_default=True)
@click.pass_context
def free_divisor(ctx, descriptor, mode, samples):
    """Determinantal free-divisor data: the discriminant matrix V (mode
    delta) or the bifurcation matrix W (mode sigma), with the axis /
    tangency verifications."""
    fam, family, indices = _deform_family(descriptor)
    seed = ctx.obj["seed"]
    if mode == "delta":
        V = discriminant_matrix(fam)
        det = V.det()
        axis = det.substitute({p: (Polynomial.variable(p, fam.parameters)
                                   if p == fam.constant_param
                                   else Polynomial.constant(0, fam.parameters))
                               for p in fam.parameters})
        expected = Polynomial.variable(fam.constant_param, fam.parameters) ** fam.tau_like
        vanish = 0
        try:
            pts = sample_discriminant(family, indices, samples, seed=seed)
            for pt in pts:
                full = {p: pt.get(p, QQ(0)) for p in fam.parameters}
                if det.evaluate(full) == 0:
                    vanish += 1
            sampled = len(pts)
        except ValueError:
            sampled = 0
        report = {
            "entry": descriptor, "mode": mode, "size": V.size,
            "entries": [[str(e) for e in row] for row in V.entries],
            "det": str(normalize_leading(det)),
            "axis_identity": axis == expected,
            "samples_vanishing": f"{vanish}/{sampled}",
        }
        ok = report["axis_identity"] and vanish == sampled
    else:
        W = bifurcation_matrix(fam)
        det = normalize_leading(W.det())
        weights = {p: fam.weights[p] for p in W.parameters}
        report = {
            "entry": descriptor, "mode": mode, "size": W.size,
            "row_degrees": list(W.row_degrees),
            "entries": [[str(e) for e in row] for row in W.entries],
            "det": str(det),
            "euler_row": euler_row_check(W, weights),
        }
        ok = report["euler_row"]
        if family == "C_space":
            report["det_matches_branch_equation"] = det == sigma_equation(fam)
            ok = ok and report["det_matches_branch_equation"]
        if (family, tuple(indices)) == ("C_space", (1, 1, 1)):
            vanish = total = 0
            for component in ("nonsmooth", "degenerate", "level"):
                for pt in sample_sigma(samples, seed=seed, component=component):
                    vals = {p: pt[p] for p in W.parameters}
                    total += 1
                    if det.evaluate(vals) == 0:
                        vanish += 1
            report["samples_vanishing"] = f"{vanish}/{total}"
            ok = ok and vanish == total
    _emit(ctx, report)
    if not ok:
        sys.exit(1)


def _sigma_rows(n, seed, components):
    rows = []
    for component in components:
        for pt in sample_sigma(n, seed=seed, component=component):
            rows.append((component, pt["alpha"], pt["beta"], pt["gamma"]))
    return rows


@main.command("sample-sigma")
@click.option("--component", default="all",
              type=click.Choice(["all", "nonsmooth", "degenerate", "level"]),
              show_default=True)
@click.option("-n", "count", type=int, default=100, show_default=True)
@click.option("--real", is_flag=True,
              help="emit real points (all samples are rational, hence real)")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write CSV here instead of stdout")
@click.pass_context
def sample_sigma_cmd(ctx, component, count, real, out):
    """Sample the components of the C_{1,1,1} bifurcation diagram as CSV
    rows component,l1,l2,l3 in the (alpha, beta, gamma) coordinates."""
    components = (("nonsmooth", "degenerate", "level")
                  if component == "all" else (component,))
    rows = _sigma_rows(count, ctx.obj["seed"], components)
    target = open(out, "w", newline="") if out else sys.stdout
    try:
        writer = csv.writer(target)
        writer.writerow(["component", "l1", "l2", "l3"])
        for row in rows:
            writer.writerow([row[0]] + [str(v) for v in row[1:]])
    finally:
        if out:
            target.close()
            click.echo(f"wrote {len(rows)} points to {out} (seed {ctx.obj['seed']})")


@main.command("emit-figure")
@click.option("--out", type=click.Path(dir_okay=False), required=True,
              help="CSV path; a PNG is written alongside")
@click.option("-n", "count", type=int, default=120, show_default=True)
@click.pass_context
def emit_figure(ctx, out, count):
    """Figure data for the C_{1,1,1} bifurcation diagram: the real point
    cloud of all three components as CSV plus a rendered projective chart
    (gamma = 1) showing the nodal cubic and its three tangent lines."""
    seed = ctx.obj["seed"]
    rows = _sigma_rows(count, seed, ("nonsmooth", "degenerate", "level")) \
        if count > 0 else []
    with open(out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["component", "l1", "l2", "l3"])
        for row in rows:
            writer.writerow([row[0]] + [str(v) for v in row[1:]])

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    # degenerate component in the chart gamma = 1: (alpha, beta) =
    # (-t^3, -(1+t)^3), the rational parametrization of the nodal cubic
    ts = [i / 50 for i in range(-150, 151)]
    ax.plot([-(t ** 3) for t in ts], [-((1 + t) ** 3) for t in ts],
            color="tab:blue", label="degenerate (nodal cubic)")
    ax.axvline(0, color="tab:red", label="nonsmooth: alpha = 0")
    ax.axhline(0, color="tab:green", label="nonsmooth: beta = 0")
    pts = [(float(r[1]) / float(r[3]), float(r[2]) / float(r[3]))
           for r in rows if r[0] == "degenerate" and r[3] != 0]
    if pts:
        ax.scatter(*zip(*pts), s=12, color="tab:blue", zorder=3,
                   label="sampled points")
    lim = 30
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_xlabel("alpha / gamma")
    ax.set_ylabel("beta / gamma")
    ax.set_title("bifurcation diagram, chart gamma = 1\n"
                 "(gamma = 0 component is the line at infinity)")
    ax.legend(loc="lower left", fontsize=8)
    png = out.rsplit(".", 1)[0] + ".png"
    fig.savefig(png, dpi=120)
    plt.close(fig)
    click.echo(f"wrote {len(rows)} points to {out} and figure to {png} "
               f"(seed {seed})")


@main.command("verify-all")
@click.pass_context
def verify_all(ctx):
    """Run the whole verification battery: Tjurina calibration, the tau = mu
    checks, the covering-degree table, and the free-divisor identities."""
    seed = ctx.obj["seed"]
    max_tau = ctx.obj["max_tau"]
    cfg = GenericityConfig(seed=seed)
    sections = {}
    failed = False

    entries = default_entries(max_tau)
    bad = [e.name for e in entries
           if tjurina(e.pair) != e.expected_tau]
    sections["tau_calibration"] = {"entries": len(entries), "mismatches": bad}
    failed = failed or bool(bad)

    mu_bad, mu_skipped, mu_checked = [], 0, 0
    for e in entries:
        report = conjecture_check(e, cfg)
        if report["status"] == "mu not computed":
            mu_skipped += 1
        else:
            mu_checked += 1
            if not report["equal"]:
                mu_bad.append(e.name)
    sections["conjecture"] = {"checked": mu_checked, "skipped": mu_skipped,
                              "mismatches": mu_bad}
    failed = failed or bool(mu_bad)

    ll_bad = []
    for e in entries:
        if not e.is_quasi_homogeneous:
            continue
        try:
            if ll_degree(weight_profile(e)) < 1:
                ll_bad.append(e.name)
        except ProfileError:
            ll_bad.append(e.name)
    sections["ll_degrees"] = {"failures": ll_bad}
    failed = failed or bool(ll_bad)

    det_bad = []
    for descriptor, family, indices in (("A1", "A", (1,)), ("A2", "A", (2,)),
                                        ("A3", "A", (3,)),
                                        ("C:1,1,1", "C_space", (1, 1, 1))):
        fam = (DeformationFamily.a_series(indices[0]) if family == "A"
               else DeformationFamily.from_printed(printed_miniversal(*indices)))
        det = discriminant_matrix(fam).det()
        axis = det.substitute({p: (Polynomial.variable(p, fam.parameters)
                                   if p == fam.constant_param
                                   else Polynomial.constant(0, fam.parameters))
                               for p in fam.parameters})
        expected = Polynomial.variable(fam.constant_param, fam.parameters) ** fam.tau_like
        if axis != expected:
            det_bad.append(descriptor)
            continue
        for pt in sample_discriminant(family, indices, 10, seed=seed):
            full = {p: pt.get(p, QQ(0)) for p in fam.parameters}
            if det.evaluate(full) != 0:
                det_bad.append(descriptor)
                break
    sections["discriminant_identities"] = {"failures": det_bad}
    failed = failed or bool(det_bad)

    fam = DeformationFamily.from_printed(printed_miniversal(1, 1, 1))
    W = bifurcation_matrix(fam)
    detW = normalize_leading(W.det())
    sig_ok = (tuple(sorted(W.row_degrees)) == (1, 2, 3)
              and euler_row_check(W, {p: fam.weights[p] for p in W.parameters})
              and detW == sigma_equation(fam)
              and level_collapse_certificate())
    for component in ("nonsmooth", "degenerate", "level"):
        for pt in sample_sigma(10, seed=seed, component=component):
            if detW.evaluate({p: pt[p] for p in W.parameters}) != 0:
                sig_ok = False
    sections["bifurcation_identities"] = {"ok": sig_ok}
    failed = failed or not sig_ok

    sections["status"] = "FAIL" if failed else "PASS"
    _emit(ctx, sections)
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
