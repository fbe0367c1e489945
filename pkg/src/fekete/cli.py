"""Command-line front end: table emission, configuration and the certificate cache.

Every subcommand builds a :class:`Report`; the exit status is 0 exactly when
the report carries no defects, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any, Callable, Sequence

from .arith import is_prime, legendre, primes_up_to
from .bernoulli import irregular_index_check, kubota_leopoldt_check
from .construct import (
    SPECIAL_POINTS,
    FeketeDefect,
    alternating_half_sum_sign,
    build,
    special_values,
    unit_interval_root_count,
)
from .galois import (
    DEFAULT_Q_BOUND,
    DEFAULT_SEED,
    QUADRUPLE,
    TRIPLE,
    CertificateCache,
    GaloisCertificate,
    WitnessNotFound,
    discriminant_relation_check,
    find_smallest,
    irreducibility_certify,
    s_value,
)
from .modular import DEFAULT_DISC_BUDGET, discriminant_valuation_report, modp_shape

CONFIG_ENV = "FEKETE_CONFIG"
FORMATS = ("json", "csv", "text")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- config


@dataclass(frozen=True)
class RunConfig:
    q_bound: int = DEFAULT_Q_BOUND
    p_min: int | None = None
    p_max: int | None = None
    threads: int = 1
    seed: int = DEFAULT_SEED
    cache: str | None = None
    format: str = "text"
    disc_budget: int = DEFAULT_DISC_BUDGET

    def __post_init__(self):
        if self.q_bound < 2:
            raise UsageError("q_bound must be >= 2")
        if self.threads < 1:
            raise UsageError("threads must be >= 1")
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {', '.join(FORMATS)}")

    @property
    def p_range(self) -> tuple[int | None, int | None]:
        return self.p_min, self.p_max


def load_config(args: argparse.Namespace, environ: dict[str, str] | None = None) -> RunConfig:
    """Flags override the file named by FEKETE_CONFIG, which overrides defaults."""
    environ = os.environ if environ is None else environ
    values: dict[str, Any] = {}
    path = environ.get(CONFIG_ENV)
    if path:
        try:
            with open(path) as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        known = {f.name for f in fields(RunConfig)}
        unknown = set(loaded) - known
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(loaded)
    for name in ("q_bound", "p_min", "p_max", "threads", "seed", "cache", "format"):
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    if getattr(args, "p", None) is not None:
        values["p_min"] = values["p_max"] = args.p
    return RunConfig(**values)


# ---------------------------------------------------------------- reports


@dataclass
class Report:
    command: str
    columns: list[str]
    rows: list[list[Any]] = field(default_factory=list)
    defects: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.defects

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_cell(x) for x in v) + ")"
    if v is None:
        return ""
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(report.columns)
        for row in report.rows:
            w.writerow([_cell(v) for v in row])
        return buf.getvalue().rstrip("\n")
    table = [report.columns] + [[_cell(v) for v in row] for row in report.rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(report.columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in table]
    for key, value in report.summary.items():
        lines.append(f"{key}: {_cell(value)}")
    for d in report.defects:
        lines.append("DEFECT " + json.dumps(d))
    return "\n".join(lines)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _wall(t: float) -> str:
    return f"{t:.3f}"


# ---------------------------------------------------------------- p selection


def _require_fekete_prime(p: int) -> None:
    if p in (3, 5):
        raise UsageError(f"p = {p} gives the degenerate f_p = g_p = 1; use an odd prime p >= 7")
    if p < 7 or p % 2 == 0 or not is_prime(p):
        raise UsageError(f"p must be an odd prime >= 7, got {p}")


def select_primes(cfg: RunConfig, default: tuple[int, int] | None = None) -> list[int]:
    lo, hi = cfg.p_range
    if lo is not None and lo == hi:
        _require_fekete_prime(lo)
        return [lo]
    if lo is None and hi is None:
        if default is None:
            raise UsageError("give --p or --p-min/--p-max")
        lo, hi = default
    lo = 7 if lo is None else lo
    if hi is None:
        raise UsageError("--p-max is required with --p-min")
    return [p for p in primes_up_to(hi) if p >= max(lo, 7)]


def _map(cfg: RunConfig, fn: Callable, items: Sequence) -> list:
    # results come back in input order whatever the completion order
    if cfg.threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(cfg.threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# ---------------------------------------------------------------- commands


def cmd_poly(cfg: RunConfig, which: str) -> Report:
    ps = select_primes(cfg)
    report = Report("poly", ["p", "which", "coeffs"])
    for p in ps:
        t = build(p)
        poly = {"F": t.F, "f": t.f, "g": t.g}[which]
        report.rows.append([p, which, list(poly.coeffs)])
    return report


def _values_row(p: int) -> tuple[list, bool]:
    sv = special_values(p)
    row = [p] + [sv.values[u] for u in SPECIAL_POINTS] + [[_frac(sv.predicted[u]) for u in SPECIAL_POINTS], sv.all_match]
    return row, sv.all_match


def cmd_values(cfg: RunConfig) -> Report:
    cols = ["p"] + [f"g({u})" for u in SPECIAL_POINTS] + ["predicted", "match"]
    report = Report("values", cols)
    ps = select_primes(cfg, default=(7, 23))
    for p, (row, ok) in zip(ps, _map(cfg, _values_row, ps)):
        report.rows.append(row)
        if not ok:
            report.defects.append({"p": p, "check": "special_values", "row": row})
    return report


def _certify_one(args: tuple) -> dict:
    p, kind, q_bound, seed, cache_dir = args
    start = time.perf_counter()
    out: dict[str, Any] = {"p": p, "cache_hit": False, "note": ""}
    cache = CertificateCache(cache_dir) if cache_dir else None
    cert: GaloisCertificate | None = None
    if cache is not None:
        cert = cache.get(p, kind)
        if cert is not None:
            out["cache_hit"] = True
        elif cache.rejected:
            out["note"] = "stale cache entry recomputed"
    if cert is None:
        try:
            cert = find_smallest(p, kind, q_bound, seed)
        except WitnessNotFound as exc:
            out.update(primes=None, validated=False, note=str(exc), wall=_wall(time.perf_counter() - start))
            return out
        if cache is not None:
            cache.put(cert)
    out.update(primes=list(cert.primes), validated=cert.validated, wall=_wall(time.perf_counter() - start))
    return out


def cmd_certify(cfg: RunConfig, kind: str) -> Report:
    report = Report("certify", ["p", "kind", "primes", "validated", "cache_hit", "wall_s", "note"])
    ps = [p for p in select_primes(cfg) if p >= 11]
    work = [(p, kind, cfg.q_bound, cfg.seed, cfg.cache) for p in ps]
    for res in _map(cfg, _certify_one, work):
        report.rows.append([res["p"], kind, res["primes"], res["validated"], res["cache_hit"], res["wall"], res["note"]])
        if not res["validated"]:
            report.defects.append({"p": res["p"], "check": f"{kind}_certificate", "note": res["note"]})
    return report


def _irregular_row(p: int) -> list:
    kl = kubota_leopoldt_check(p)
    return [p, irregular_index_check(p), kl.holds]


def cmd_irregular(cfg: RunConfig) -> Report:
    lo, hi = cfg.p_range
    if lo is None and hi is None:
        raise UsageError("give --p or --p-min/--p-max")
    lo = lo if lo is not None else 7
    hi = hi if hi is not None else lo
    ps = [p for p in primes_up_to(hi) if p >= lo and p % 4 == 1 and p > 5]
    report = Report("irregular", ["p", "divides", "congruence"])
    report.rows = _map(cfg, _irregular_row, ps)
    report.summary["hits"] = [r[0] for r in report.rows if r[1]]
    for r in report.rows:
        if not r[2]:
            report.defects.append({"p": r[0], "check": "kubota_leopoldt_congruence"})
    return report


def _modp_row(p: int) -> tuple[list, bool]:
    s = modp_shape(p)
    row = [p, s.multiplicity_F, s.multiplicity_f, s.r_p, s.cofactor_nonvanishing_at_1, list(s.predicted), s.matches]
    return row, s.matches


def cmd_modp(cfg: RunConfig) -> Report:
    report = Report("modp", ["p", "mult_F", "mult_f", "r_p", "cofactor_nonzero", "predicted", "match"])
    ps = select_primes(cfg)
    for p, (row, ok) in zip(ps, _map(cfg, _modp_row, ps)):
        report.rows.append(row)
        if not ok:
            report.defects.append({"p": p, "check": "modp_shape"})
    return report


def _disc_row(args: tuple) -> list:
    p, budget = args
    r = discriminant_valuation_report(p, budget)
    return [p, r.v_p, r.bound_p, r.v_2, r.bound_2, r.p_divides, r.gcd_degree_mod_p, r.both_bounds_hold]


def cmd_disc(cfg: RunConfig) -> Report:
    ps = select_primes(cfg)
    over = [p for p in ps if p > cfg.disc_budget]
    if over:
        raise UsageError(f"exact discriminants are limited to p <= {cfg.disc_budget}; refused {over}")
    report = Report("disc", ["p", "v_p", "bound_p", "v_2", "bound_2", "p_divides", "gcd_deg_mod_p", "holds"])
    report.rows = _map(cfg, _disc_row, [(p, cfg.disc_budget) for p in ps])
    for r in report.rows:
        if not (r[7] and r[5]):
            report.defects.append({"p": r[0], "check": "discriminant_valuations"})
    return report


def cmd_roots(cfg: RunConfig) -> Report:
    report = Report("roots", ["p", "roots_in_0_1"])
    ps = select_primes(cfg)
    report.rows = [[p, c] for p, c in zip(ps, _map(cfg, unit_interval_root_count, ps))]
    return report


def _verify_one(args: tuple) -> list[list]:
    p, q_bound, budget = args
    checks: list[tuple[str, Callable[[], bool]]] = [
        ("special_values", lambda: special_values(p).all_match),
        ("half_sum_sign", lambda: alternating_half_sum_sign(p) == legendre(2, p)),
        ("s_p_not_square", lambda: not s_value(p).is_square),
        ("modp_shape", lambda: modp_shape(p).matches),
        ("irreducible", lambda: irreducibility_certify(p, q_bound).status == "irreducible"),
    ]
    if p <= budget:
        checks.append(("disc_relation", lambda: discriminant_relation_check(p)))
        checks.append(("disc_valuations", lambda: discriminant_valuation_report(p, budget).both_bounds_hold))
    if p >= 11:
        checks.append(("triple", lambda: find_smallest(p, TRIPLE, q_bound).validated))
    rows = []
    for name, fn in checks:
        start = time.perf_counter()
        try:
            ok, note = bool(fn()), ""
        except (FeketeDefect, WitnessNotFound) as exc:
            ok, note = False, str(exc)
        rows.append([p, name, ok, _wall(time.perf_counter() - start), note])
    return rows


def cmd_verify_all(cfg: RunConfig) -> Report:
    report = Report("verify-all", ["p", "check", "ok", "wall_s", "note"])
    ps = select_primes(cfg, default=(7, 60))
    for rows in _map(cfg, _verify_one, [(p, cfg.q_bound, cfg.disc_budget) for p in ps]):
        for row in rows:
            report.rows.append(row)
            if not row[2]:
                report.defects.append({"p": row[0], "check": row[1], "note": row[4]})
    return report


# ---------------------------------------------------------------- entry point


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int)
    common.add_argument("--p-min", dest="p_min", type=int)
    common.add_argument("--p-max", dest="p_max", type=int)
    common.add_argument("--q-bound", dest="q_bound", type=int)
    common.add_argument("--threads", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--cache")
    common.add_argument("--format", choices=FORMATS)
    parser = argparse.ArgumentParser(prog="fekete", description="Fekete polynomial computations and checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    poly = sub.add_parser("poly", parents=[common], help="print F_p, f_p or g_p")
    poly.add_argument("--which", choices=("F", "f", "g"), default="g")
    sub.add_parser("values", parents=[common], help="special values of g_p")
    cert = sub.add_parser("certify", parents=[common], help="smallest Galois certificates")
    cert.add_argument("--kind", choices=(TRIPLE, QUADRUPLE), default=TRIPLE)
    sub.add_parser("irregular", parents=[common], help="p | B_{(p+3)/2} scan")
    sub.add_parser("modp", parents=[common], help="(x-1) multiplicities mod p")
    sub.add_parser("disc", parents=[common], help="discriminant valuations")
    sub.add_parser("roots", parents=[common], help="real roots of F_p(x)/x in (0,1)")
    sub.add_parser("verify-all", parents=[common], help="every per-p check over a range")
    return parser


def run(argv: Sequence[str] | None = None, environ: dict[str, str] | None = None) -> tuple[int, str, str]:
    """Parse, execute and render; returns (exit code, stdout text, stderr text)."""
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        cfg = load_config(args, environ)
        if args.command == "poly":
            report = cmd_poly(cfg, args.which)
        elif args.command == "certify":
            report = cmd_certify(cfg, args.kind)
        else:
            report = {
                "values": cmd_values,
                "irregular": cmd_irregular,
                "modp": cmd_modp,
                "disc": cmd_disc,
                "roots": cmd_roots,
                "verify-all": cmd_verify_all,
            }[args.command](cfg)
    except UsageError as exc:
        return 2, "", f"usage error: {exc}"
    if args.command == "poly" and cfg.format == "text":
        out = "\n".join(" ".join(str(c) for c in row[2]) for row in report.rows)
    else:
        out = render(report, cfg.format)
    err = "" if report.ok else json.dumps({"defects": report.defects})
    return (0 if report.ok else 1), out, err


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
