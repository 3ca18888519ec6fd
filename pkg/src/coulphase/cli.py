"""
Command-line interface.

Usage:
    coulphase phase --l 0 --eta 1.0 --method exact
    coulphase table --precision 4
    coulphase scan --var eta --start 0 --stop 4 --steps 401 --methods exact --format csv
    coulphase relerr --start 0.05 --stop 5 --steps 200
    coulphase zero --tol 1e-10
    coulphase deflection --mode quantum --l 3 --eta 2
    coulphase eikonal --b 0.01 --a 1 --eta 1
    coulphase wkb --l 5 --eta 1

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
2 usage or domain error, 3 series failed to converge.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import click
import numpy as np

from .core import ConvergenceError, CoulombDomainError, EvalConfig
from .phase_shifts import METHOD_ALIASES, find_sigma0_zero, order1_error, phase, sigma0_exact, sigma_l_exact
from .semiclassical import SCREENINGS, deflection_classical, deflection_quantum, wkb_phase

__all__ = ["cli", "main", "table_records", "scan_records", "relerr_records", "render", "ScanSpec"]

# |sigma_0| below this puts a relerr row in the ill-conditioned window
NEAR_ZERO_FLAG = 0.05

TABLE_GRID = [(0.1, 0), (0.1, 1), (0.1, 2), (1.0, 0), (1.0, 1), (1.0, 2)]

SCAN_METHODS = {
    "eta": tuple(METHOD_ALIASES),
    "l": tuple(METHOD_ALIASES),
    "lambda": ("wkb", "classical"),
    "b_over_a": tuple(SCREENINGS),
}

EXIT_USAGE = 2
EXIT_CONVERGENCE = 3


def _col(name: str) -> str:
    return name.replace("-", "_")


# ---------------------------------------------------------------- rendering


def _cell(v, precision):
    if v is None:
        return None
    if isinstance(v, (bool, str)):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    return float(f"{float(v):.{precision}g}")


def _cell_text(v, precision):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.{precision}g}"
    return str(v)


def render(records: list[dict], fmt: str = "csv", precision: int = 10) -> str:
    """Render flat records as CSV, a JSON array, or an aligned text table."""
    if fmt == "json":
        return json.dumps([{k: _cell(v, precision) for k, v in r.items()} for r in records]) + "\n"
    keys = list(records[0]) if records else []
    rows = [[_cell_text(r.get(k), precision) for k in keys] for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "text":
        widths = [max(len(k), *(len(row[i]) for row in rows)) if rows else len(k) for i, k in enumerate(keys)]
        lines = ["  ".join(k.rjust(w) for k, w in zip(keys, widths))]
        lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
        return "\n".join(lines) + "\n"
    raise CoulombDomainError(f"unknown format {fmt!r}")


# ------------------------------------------------------------------ records


def phase_record(l: int, eta: float, methods, cfg: EvalConfig) -> dict:
    rec = {"l": l, "eta": eta}
    for m in methods:
        res = phase(l, eta, m, cfg)
        rec[f"sigma_{_col(m)}"] = res.sigma
        rec[f"sigma_{_col(m)}_over_pi"] = res.sigma / math.pi
        if res.error_bound is not None:
            rec[f"error_bound_{_col(m)}"] = res.error_bound
    return rec


def table_records(cfg: EvalConfig | None = None) -> list[dict]:
    cfg = cfg or EvalConfig()
    out = []
    for eta, l in TABLE_GRID:
        rec = phase_record(l, eta, ("order0", "order1", "exact"), cfg)
        out.append(
            {
                "eta": eta,
                "l": l,
                "sigma_order0_over_pi": rec["sigma_order0_over_pi"],
                "sigma_order1_over_pi": rec["sigma_order1_over_pi"],
                "sigma_exact_over_pi": rec["sigma_exact_over_pi"],
            }
        )
    return out


@dataclass
class ScanSpec:
    """A 1-D grid over one variable with the other parameters held fixed."""

    variable: str
    start: float
    stop: float
    steps: int
    methods: list
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.variable not in SCAN_METHODS:
            raise CoulombDomainError(f"unknown scan variable {self.variable!r}")
        if not self.start < self.stop:
            raise CoulombDomainError(f"need start < stop, got {self.start} >= {self.stop}")
        if self.steps < 2:
            raise CoulombDomainError(f"need steps >= 2, got {self.steps}")
        self.methods = list(self.methods)
        if not self.methods:
            raise CoulombDomainError("no methods requested")
        bad = [m for m in self.methods if m not in SCAN_METHODS[self.variable]]
        if bad:
            raise CoulombDomainError(
                f"methods {bad} are not valid for --var {self.variable}; "
                f"choose from {list(SCAN_METHODS[self.variable])}"
            )

    def grid(self):
        pts = np.linspace(self.start, self.stop, self.steps)
        if self.variable == "l":
            return [int(round(p)) for p in pts]
        return [float(p) for p in pts]


def _scan_point(spec: ScanSpec, x, cfg: EvalConfig) -> dict:
    var, fixed = spec.variable, spec.fixed
    if var == "eta":
        rec = {"eta": x, "l": fixed.get("l", 0)}
    elif var == "l":
        rec = {"l": x, "eta": fixed["eta"]}
    elif var == "lambda":
        rec = {"lambda": x, "eta": fixed["eta"]}
    else:
        a = fixed.get("a", 1.0)
        rec = {"b_over_a": x, "b": x * a, "a": a, "eta": fixed["eta"]}

    for m in spec.methods:
        keys = [f"sigma_{_col(m)}"]
        if var in ("eta", "l"):
            keys.append(f"sigma_{_col(m)}_over_pi")
        if var == "lambda" and m == "classical":
            keys = ["theta_classical"]
        try:
            if var in ("eta", "l"):
                res = phase(rec["l"], rec["eta"], m, cfg)
                vals = [res.sigma, res.sigma / math.pi]
            elif var == "lambda":
                fn = wkb_phase if m == "wkb" else deflection_classical
                vals = [fn(x, rec["eta"])]
            else:
                vals = [SCREENINGS[m](rec["b"], rec["a"], rec["eta"])]
        except CoulombDomainError as exc:
            click.echo(f"warning: {var}={x} method={m}: {exc}", err=True)
            vals = [None] * len(keys)
        rec.update(zip(keys, vals))
    return rec


def scan_records(spec: ScanSpec, cfg: EvalConfig | None = None, jobs: int = 1) -> list[dict]:
    """One record per grid point, always in grid order."""
    cfg = cfg or EvalConfig()
    grid = spec.grid()
    if jobs > 1:
        # kernels release the GIL; map() keeps grid order
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda x: _scan_point(spec, x, cfg), grid))
    return [_scan_point(spec, x, cfg) for x in grid]


def relerr_records(start: float, stop: float, steps: int, cfg: EvalConfig | None = None) -> list[dict]:
    cfg = cfg or EvalConfig()
    if not 0 < start < stop:
        raise CoulombDomainError(f"need 0 < start < stop, got start={start}, stop={stop}")
    if steps < 2:
        raise CoulombDomainError(f"need steps >= 2, got {steps}")
    out = []
    for eta in np.linspace(start, stop, steps):
        eta = float(eta)
        exact = sigma0_exact(eta, cfg).sigma
        err, kind = order1_error(eta, cfg)
        out.append(
            {
                "eta": eta,
                "sigma_exact": exact,
                "sigma_order1": phase(0, eta, "order1", cfg).sigma,
                "error": err,
                "error_kind": kind,
                "status": "near-zero-denominator" if abs(exact) < NEAR_ZERO_FLAG else "ok",
            }
        )
    return out


# ---------------------------------------------------------------- commands


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except CoulombDomainError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_USAGE)
        except ConvergenceError as exc:
            click.echo(f"convergence failure: {exc}", err=True)
            ctx.exit(EXIT_CONVERGENCE)


_fmt_option = click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="text", show_default=True)
_prec_option = click.option("--precision", type=click.IntRange(1, 17), default=10, show_default=True,
                            help="Significant digits per numeric cell.")
_tol_option = click.option("--tol", type=float, default=None,
                           help="Series relative tolerance (overrides COULPHASE_TOL).")


def _config(tol=None, **kw) -> EvalConfig:
    return EvalConfig.from_env(series_rel_tol=tol, **kw)


def _emit(records, fmt, precision):
    click.echo(render(records, fmt, precision), nl=False)


@click.group(cls=_Group)
def cli():
    """Coulomb phase shifts: exact, Stirling-series and semiclassical routes."""


@cli.command("phase")
@click.option("--l", "l", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--eta", type=float, required=True)
@click.option("--method", type=click.Choice(list(METHOD_ALIASES)), default="exact", show_default=True)
@_fmt_option
@_prec_option
@_tol_option
def cmd_phase(l, eta, method, fmt, precision, tol):
    """One phase shift sigma_l(eta)."""
    _emit([phase_record(l, eta, [method], _config(tol))], fmt, precision)


@cli.command("table")
@_fmt_option
@_prec_option
@_tol_option
def cmd_table(fmt, precision, tol):
    """sigma^(0)/pi, sigma^(1)/pi and exact sigma/pi for eta in {0.1, 1} and l in {0, 1, 2}."""
    _emit(table_records(_config(tol)), fmt, precision)


@cli.command("scan")
@click.option("--var", "variable", type=click.Choice(list(SCAN_METHODS)), default="eta", show_default=True)
@click.option("--start", type=float, required=True)
@click.option("--stop", type=float, required=True)
@click.option("--steps", type=int, default=101, show_default=True)
@click.option("--methods", default="exact", show_default=True, help="Comma-separated method names.")
@click.option("--l", "l", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--eta", type=float, default=1.0, show_default=True)
@click.option("--a", "a", type=float, default=1.0, show_default=True, help="Screening length for b_over_a scans.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@_fmt_option
@_prec_option
@_tol_option
def cmd_scan(variable, start, stop, steps, methods, l, eta, a, jobs, fmt, precision, tol):
    """Evaluate methods on a linear grid of one variable."""
    spec = ScanSpec(variable, start, stop, steps, [m.strip() for m in methods.split(",") if m.strip()],
                    fixed={"l": l, "eta": eta, "a": a})
    _emit(scan_records(spec, _config(tol), jobs), fmt, precision)


@cli.command("relerr")
@click.option("--start", type=float, default=0.05, show_default=True)
@click.option("--stop", type=float, default=5.0, show_default=True)
@click.option("--steps", type=int, default=100, show_default=True)
@_fmt_option
@_prec_option
@_tol_option
def cmd_relerr(start, stop, steps, fmt, precision, tol):
    """Error of the first-order s-wave formula against the exact sigma_0."""
    _emit(relerr_records(start, stop, steps, _config(tol)), fmt, precision)


@cli.command("zero")
@click.option("--tol", type=float, default=None, help="Absolute tolerance on eta*.")
@_fmt_option
@_prec_option
def cmd_zero(tol, fmt, precision):
    """Positive zero eta* of sigma_0(eta)."""
    cfg = _config(root_abs_tol=tol)
    root = find_sigma0_zero(cfg)
    if fmt == "text":
        click.echo(f"{root:.{precision}g}")
    else:
        _emit([{"eta_zero": root}], fmt, precision)


@cli.command("deflection")
@click.option("--mode", type=click.Choice(["classical", "quantum"]), default="classical", show_default=True)
@click.option("--lambda", "lam", type=float, default=None, help="Semiclassical angular momentum (classical).")
@click.option("--l", "l", type=int, default=None, help="Angular momentum (quantum, or lambda = l in classical).")
@click.option("--eta", type=float, required=True)
@_fmt_option
@_prec_option
@_tol_option
def cmd_deflection(mode, lam, l, eta, fmt, precision, tol):
    """Deflection function in radians and degrees."""
    if mode == "quantum":
        if l is None:
            raise click.UsageError("quantum mode needs --l")
        if l < 1:
            raise click.UsageError("quantum deflection needs --l >= 1 (it uses sigma_{l-1})")
        theta = deflection_quantum(l, eta, _config(tol))
        rec = {"mode": mode, "l": l, "eta": eta}
    else:
        if lam is None:
            if l is None:
                raise click.UsageError("classical mode needs --lambda (or --l)")
            lam = float(l)
        theta = deflection_classical(lam, eta)
        rec = {"mode": mode, "lambda": lam, "eta": eta}
    rec.update(theta_rad=theta, theta_deg=math.degrees(theta))
    _emit([rec], fmt, precision)


@cli.command("eikonal")
@click.option("--b", "b", type=float, required=True)
@click.option("--a", "a", type=float, required=True)
@click.option("--eta", type=float, required=True)
@click.option("--screening", type=click.Choice(["all", *SCREENINGS]), default="all", show_default=True)
@_fmt_option
@_prec_option
def cmd_eikonal(b, a, eta, screening, fmt, precision):
    """Eikonal Coulomb phase for the screening functions."""
    names = list(SCREENINGS) if screening == "all" else [screening]
    rec = {"b": b, "a": a, "eta": eta}
    for name in names:
        try:
            rec[f"sigma_{_col(name)}"] = SCREENINGS[name](b, a, eta)
        except CoulombDomainError as exc:
            if screening != "all":
                raise
            click.echo(f"warning: {name}: {exc}", err=True)
            rec[f"sigma_{_col(name)}"] = None
    _emit([rec], fmt, precision)


@cli.command("wkb")
@click.option("--lambda", "lam", type=float, default=None)
@click.option("--l", "l", type=click.IntRange(min=0), default=None, help="Use lambda = l + 1/2 and compare with the exact sigma_l.")
@click.option("--eta", type=float, required=True)
@_fmt_option
@_prec_option
@_tol_option
def cmd_wkb(lam, l, eta, fmt, precision, tol):
    """Closed-form WKB phase."""
    if (lam is None) == (l is None):
        raise click.UsageError("give exactly one of --lambda or --l")
    if l is not None:
        lam = l + 0.5
        wkb = wkb_phase(lam, eta)
        exact = sigma_l_exact((l, eta), _config(tol)).sigma
        rec = {"l": l, "lambda": lam, "eta": eta, "sigma_wkb": wkb, "sigma_exact": exact, "difference": wkb - exact}
    else:
        rec = {"lambda": lam, "eta": eta, "sigma_wkb": wkb_phase(lam, eta)}
    _emit([rec], fmt, precision)


def main(argv=None):
    return cli.main(args=argv, prog_name="coulphase")


if __name__ == "__main__":
    sys.exit(main())
