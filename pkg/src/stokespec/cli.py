"""Command line front end: solve spectra, run inequality checks, write reports.

Subcommands
-----------
solve
    Compute the requested spectrum and write spectrum_<problem>.json plus
    a binary field blob fields_<problem>.bin.
check
    Run the configured inequality checks and write bound_checks.csv,
    frame_<kind>.json for each frame sweep and dim_bound.json for the
    dimension estimate.
report
    Write spectrum_report.csv with one row per eigenvalue: index, value,
    ratio to the linear growth law, and the running-sum margin.

All subcommands take --config (JSON path), --out (output directory,
default "."), --seed (overrides the config seed); check also takes
--checks with a comma separated subset of the configured checks.

Config schema::

    {
      "domain":  {"shape": "rectangle", "width": 1.0, "height": 1.0, "nx": 64}
                 or {"shape": "disk", "radius": 0.5, "nx": 64},
      "problem": "laplace" | "stokes",
      "m": 20,
      "tol": 1e-8,            # optional, default 1e-8
      "seed": 0,              # optional, default 0
      "checks": [...],        # check subcommand; see _CHECKS below
      "grid_sizes": [32, 64, 128],   # doubling sizes for extrapolated lambda1
      "fluid": {"nu": 1.0, "f_norm": 1.0, "lambda1": 52.34},  # lambda1 optional
      "frame": {"duplicate_family": false}
    }

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
config error, 3 eigensolver non-convergence.

The binary blob starts with the little-endian header
struct.pack("<5sIIdI", b"STKS1", nx, ny, h, m) followed by m full node
grids of shape (nx+1, ny+1), row-major float64: eigenfunctions for the
scalar problem, stream functions for the vector one.
"""

import argparse
import csv
import json
import os
import struct
import sys

import numpy as np

from . import bounds, frame, lt_attractor
from .eig import ConvergenceError
from .grid import make_disk, make_rectangle
from .operators import richardson, solve_laplacian, solve_stokes

__all__ = ["main", "ConfigError", "load_config"]

_CHECKS = ("liyau", "stokes_sum", "stokes_each", "frame_scalar",
           "frame_vector", "frame_divfree", "lt", "dim")


class ConfigError(ValueError):
    """Configuration file is missing, malformed, or inconsistent."""


def _require(cond, msg):
    if not cond:
        raise ConfigError(msg)


def load_config(path):
    """Parse and validate a config file; raises ConfigError on any defect."""
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise ConfigError("config %s is not valid JSON: %s" % (path, exc))
    _require(isinstance(cfg, dict), "config root must be an object")
    dom = cfg.get("domain")
    _require(isinstance(dom, dict), "config needs a domain object")
    shape = dom.get("shape")
    _require(shape in ("rectangle", "disk"),
             "domain.shape must be rectangle or disk, got %r" % (shape,))
    _require(isinstance(dom.get("nx"), int) and dom["nx"] >= 8,
             "domain.nx must be an integer >= 8")
    if shape == "rectangle":
        _require("width" in dom and "height" in dom,
                 "rectangle domain needs width and height")
    else:
        _require("radius" in dom, "disk domain needs a radius")
    problem = cfg.get("problem", "stokes")
    _require(problem in ("laplace", "stokes"),
             "problem must be laplace or stokes, got %r" % (problem,))
    cfg["problem"] = problem
    m = cfg.get("m", 10)
    _require(isinstance(m, int) and m >= 1, "m must be a positive integer")
    cfg["m"] = m
    cfg.setdefault("tol", 1e-8)
    cfg.setdefault("seed", 0)
    checks = cfg.get("checks", [])
    _require(isinstance(checks, list), "checks must be a list")
    for c in checks:
        _require(c in _CHECKS, "unknown check %r; known: %s" % (c, ", ".join(_CHECKS)))
    return cfg


def build_domain(cfg):
    dom = cfg["domain"]
    try:
        if dom["shape"] == "rectangle":
            return make_rectangle(float(dom["width"]), float(dom["height"]),
                                  dom["nx"])
        return make_disk(float(dom["radius"]), dom["nx"])
    except ValueError as exc:
        raise ConfigError("bad domain: %s" % exc)


def _parse_checks(arg, cfg):
    if arg:
        names = [c.strip() for c in arg.split(",") if c.strip()]
        for c in names:
            _require(c in _CHECKS,
                     "unknown check %r; known: %s" % (c, ", ".join(_CHECKS)))
        return names
    names = cfg.get("checks", [])
    _require(len(names) > 0, "no checks configured and none given via --checks")
    return names


def _write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _write_blob(path, domain, grids):
    header = struct.pack("<5sIIdI", b"STKS1", domain.nx, domain.ny,
                         domain.h, len(grids))
    with open(path, "wb") as fh:
        fh.write(header)
        for g in grids:
            fh.write(np.ascontiguousarray(g, dtype="<f8").tobytes())


class _Solves:
    """Caches the eigensolves shared between checks."""

    def __init__(self, domain, cfg, seed):
        self.domain = domain
        self.cfg = cfg
        self.seed = seed
        self._laplace = None
        self._stokes = None

    def laplace(self):
        if self._laplace is None:
            self._laplace = solve_laplacian(self.domain, self.cfg["m"],
                                            tol=self.cfg["tol"], seed=self.seed)
        return self._laplace

    def stokes(self):
        if self._stokes is None:
            self._stokes = solve_stokes(self.domain, self.cfg["m"],
                                        tol=self.cfg["tol"], seed=self.seed)
        return self._stokes


def cmd_solve(cfg, out_dir, seed):
    domain = build_domain(cfg)
    problem = cfg["problem"]
    if problem == "laplace":
        eset = solve_laplacian(domain, cfg["m"], tol=cfg["tol"], seed=seed)
        grids = [f.grid for f in eset.eigenfunctions]
    else:
        eset = solve_stokes(domain, cfg["m"], tol=cfg["tol"], seed=seed)
        grids = [f.grid for f in eset.stream_functions]
    report = {
        "domain": domain.spec(),
        "problem": problem,
        "h": domain.h,
        "m": len(eset),
        "eigenvalues": [float(v) for v in eset.eigenvalues],
        "residuals": [float(r) for r in eset.residuals],
        "solver_seed": eset.solver_seed,
    }
    _write_json(os.path.join(out_dir, "spectrum_%s.json" % problem), report)
    _write_blob(os.path.join(out_dir, "fields_%s.bin" % problem), domain, grids)
    return 0


def _frame_report_dict(rep, domain):
    return {
        "m": rep.m,
        "bound_kind": rep.bound_kind,
        "bound": rep.bound,
        "sup_value": rep.sup_value,
        "argmax_xi": list(rep.argmax_xi),
        "max_div_residual": rep.max_div_residual,
        "slack": rep.slack,
        "passed": rep.passed,
        "measure": domain.measure,
    }


def _resolve_lambda1(cfg, domain, seed):
    fluid = cfg.get("fluid")
    _require(isinstance(fluid, dict), "dim check needs a fluid object")
    _require("nu" in fluid and "f_norm" in fluid,
             "fluid needs nu and f_norm")
    if "lambda1" in fluid:
        return float(fluid["lambda1"]), "supplied"
    sizes = cfg.get("grid_sizes")
    _require(isinstance(sizes, list) and len(sizes) >= 3,
             "dim check needs fluid.lambda1 or at least three grid_sizes")
    vals = []
    for nx in sizes:
        sub = dict(cfg["domain"])
        sub["nx"] = int(nx)
        dom = build_domain({"domain": sub})
        vals.append(solve_stokes(dom, 1, tol=cfg["tol"], seed=seed).eigenvalues[0])
    ex = richardson(vals)
    return float(ex.limit), "extrapolated(nx=%s)" % ",".join(str(int(n)) for n in sizes)


def cmd_check(cfg, out_dir, seed, checks_arg):
    checks = _parse_checks(checks_arg, cfg)
    domain = build_domain(cfg)
    solves = _Solves(domain, cfg, seed)
    rows = []
    failed = False
    duplicate = bool(cfg.get("frame", {}).get("duplicate_family", False))

    for name in checks:
        if name == "liyau":
            recs = bounds.check_sum_bound(solves.laplace().eigenvalues,
                                          bounds.li_yau_sum_bound, 2,
                                          domain.measure, name="liyau_sum")
            rows.extend(recs)
        elif name == "stokes_sum":
            recs = bounds.check_sum_bound(solves.stokes().eigenvalues,
                                          bounds.stokes_sum_bound, 2,
                                          domain.measure, name="stokes_sum")
            rows.extend(recs)
        elif name == "stokes_each":
            for k, lam in enumerate(solves.stokes().eigenvalues, start=1):
                rhs = bounds.stokes_each_bound(2, domain.measure, k)
                slack = 0.01 * rhs
                rows.append(bounds.BoundCheck(
                    name="stokes_each", m=k, lhs=float(lam), rhs=rhs,
                    margin=float(lam) - rhs, passed=float(lam) - rhs >= -slack,
                    slack=slack, params=(2, domain.measure)))
        elif name in ("frame_scalar", "frame_vector", "frame_divfree"):
            kind = name.split("_", 1)[1]
            if kind == "scalar":
                family = list(solves.laplace().eigenfunctions)
            else:
                family = list(solves.stokes().velocities)
            if duplicate:
                family = family + family
            xi = frame.make_xi_grid(domain, seed=seed)
            rep = frame.frame_check(family, xi, kind)
            _write_json(os.path.join(out_dir, "frame_%s.json" % kind),
                        _frame_report_dict(rep, domain))
            failed = failed or not rep.passed
        elif name == "lt":
            family = list(solves.stokes().velocities)
            if duplicate:
                family = family + family
            rows.append(lt_attractor.lt_check(family))
        elif name == "dim":
            lam1, source = _resolve_lambda1(cfg, domain, seed)
            params = lt_attractor.FluidParams(
                nu=float(cfg["fluid"]["nu"]),
                f_norm=float(cfg["fluid"]["f_norm"]),
                lambda1=lam1, measure=domain.measure)
            db = lt_attractor.dim_bound(params)
            _write_json(os.path.join(out_dir, "dim_bound.json"), {
                "G": db.grashof,
                "m_star": db.m_star,
                "dim_bound": db.dim_bound,
                "dim_bound_coarse": db.dim_bound_coarse,
                "lambda1": lam1,
                "lambda1_source": source,
                "precondition_ok": db.precondition_ok,
                "constants": lt_attractor.lt_constants().as_dict(),
            })

    if rows:
        with open(os.path.join(out_dir, "bound_checks.csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["name", "m", "lhs", "rhs", "margin", "passed"])
            for r in rows:
                w.writerow(r.row())
        failed = failed or any(not r.passed for r in rows)
    return 1 if failed else 0


def cmd_report(cfg, out_dir, seed):
    domain = build_domain(cfg)
    problem = cfg["problem"]
    if problem == "laplace":
        eset = solve_laplacian(domain, cfg["m"], tol=cfg["tol"], seed=seed)
        sum_fn = bounds.li_yau_sum_bound
    else:
        eset = solve_stokes(domain, cfg["m"], tol=cfg["tol"], seed=seed)
        sum_fn = bounds.stokes_sum_bound
    w = bounds.weyl_coefficient(2, domain.measure)
    recs = bounds.check_sum_bound(eset.eigenvalues, sum_fn, 2, domain.measure)
    path = os.path.join(out_dir, "spectrum_report.csv")
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["k", "lambda_k", "weyl_ratio", "sum_margin"])
        for k, (lam, rec) in enumerate(zip(eset.eigenvalues, recs), start=1):
            out.writerow([k, repr(float(lam)), repr(float(lam) / (w * k)),
                          repr(rec.margin)])
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="stokespec",
                                description="spectra and inequality checks "
                                            "for gridded planar domains")
    sub = p.add_subparsers(dest="command", required=True)
    for name, about in (("solve", "compute a spectrum"),
                        ("check", "run inequality checks"),
                        ("report", "tabulate a spectrum against growth laws")):
        sp = sub.add_parser(name, help=about)
        sp.add_argument("--config", required=True, help="path to config JSON")
        sp.add_argument("--out", default=".", help="output directory")
        sp.add_argument("--seed", type=int, default=None,
                        help="override the config seed")
        if name == "check":
            sp.add_argument("--checks", default=None,
                            help="comma separated subset of the configured checks")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        out_dir = args.out
        os.makedirs(out_dir, exist_ok=True)
        seed = cfg["seed"] if args.seed is None else args.seed
        if args.command == "solve":
            return cmd_solve(cfg, out_dir, seed)
        if args.command == "check":
            return cmd_check(cfg, out_dir, seed, args.checks)
        return cmd_report(cfg, out_dir, seed)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except frame.OrthonormalityError as exc:
        print("check failed: %s" % exc, file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print("solver did not converge: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
