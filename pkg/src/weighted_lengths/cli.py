"""Command-line reports: stats, histogram, window, bounds, supersym, residues.

Every report is a list of flat rows. Exact rationals are written as ``p/q``;
``*_6dp`` / ``*_2dp`` columns carry half-to-even roundings for comparison
with printed tables.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, List, Optional

from .bounds import verify_bound
from .core import residue_class, validate, direction_data
from .enumeration import LineCounter, length_multiset, support_range, count_in_window
from .errors import SemigroupError, WidthOverflow
from .geometry import TriangleDensity
from .stats import empirical_stats, predicted_stats, round_half_even
from .supersymmetric import (
    SupersymmetricSystem,
    canonicalize,
    decompose,
    is_element,
    verify_translation,
)

COMMANDS = ("stats", "histogram", "window", "bounds", "supersym", "residues")


@dataclass
class RunConfig:
    command: str
    m: Optional[tuple] = None
    n_gens: Optional[tuple] = None
    n_values: List[int] = field(default_factory=list)
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    fmt: str = "csv"
    out: Optional[str] = None
    # supersym only
    abc: Optional[tuple] = None
    m2: Optional[tuple] = None
    n_gens2: Optional[tuple] = None
    n_max: Optional[int] = None

    def as_dict(self) -> dict:
        d = {
            "command": self.command,
            "m": list(self.m) if self.m else None,
            "n_gens": list(self.n_gens) if self.n_gens else None,
            "n": list(self.n_values),
            "alpha": encode(self.alpha) if self.alpha is not None else None,
            "beta": encode(self.beta) if self.beta is not None else None,
            "format": self.fmt,
        }
        if self.command == "supersym":
            d.update(abc=list(self.abc) if self.abc else None,
                     m2=list(self.m2) if self.m2 else None,
                     n_gens2=list(self.n_gens2) if self.n_gens2 else None,
                     n_max=self.n_max)
        return d


def parse_rational(text: str) -> Fraction:
    """``"7.1"`` -> 71/10, ``"2/3"`` -> 2/3. Never goes through a float."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def parse_triple(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def encode(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def decode(text: str):
    if text in ("true", "false"):
        return text == "true"
    if text == "":
        return None
    if "/" in text:
        return Fraction(text)
    if "." in text:
        return Decimal(text)
    try:
        return int(text)
    except ValueError:
        return text


def dp6(x) -> Decimal:
    return round_half_even(x, 6)


# --- reports -----------------------------------------------------------------


def _weights(cfg: RunConfig, theorem_mode: bool):
    ws = validate(cfg.m, cfg.n_gens, theorem_mode=theorem_mode)
    for n in cfg.n_values:
        ws.check_width(n)
    return ws, direction_data(ws)


def stats_rows(cfg: RunConfig) -> List[dict]:
    ws, _ = _weights(cfg, theorem_mode=False)
    rows = []
    for n in sorted(cfg.n_values):
        emp = empirical_stats(length_multiset(ws, n))
        pred = predicted_stats(ws, n)
        for name in ("mean", "median", "mode", "stdev", "min", "max"):
            a, p = getattr(emp, name), getattr(pred, name)
            rows.append({
                "n": n,
                "statistic": name,
                "actual": a if not isinstance(a, float) else dp6(a),
                "actual_2dp": round_half_even(a, 2),
                "predicted": p if not isinstance(p, float) else dp6(p),
                "predicted_2dp": round_half_even(p, 2),
            })
    return rows


def histogram_rows(cfg: RunConfig) -> Iterable[dict]:
    ws, dd = _weights(cfg, theorem_mode=False)
    tri = TriangleDensity(ws, dd)
    n1, n2, n3 = ws.n
    for n in sorted(cfg.n_values):
        if n <= 0:
            raise SemigroupError("histogram needs n > 0")
        scale = Fraction(2 * n1 * n2 * n3, dd.d * n)
        if ws.coprime:
            get = LineCounter(ws, dd, n).count
        else:
            get = length_multiset(ws, n).__getitem__
        lo, hi = support_range(ws, n)
        for m in range(lo, hi + 1):
            count = get(m)
            pos = Fraction(m, n)
            dens = tri(pos)
            yield {
                "n": n,
                "m": m,
                "count": count,
                "position": pos,
                "scaled": count * scale,
                "scaled_6dp": dp6(count * scale),
                "density": dens,
                "density_6dp": dp6(dens),
            }


def _window(cfg: RunConfig):
    if cfg.alpha is None or cfg.beta is None:
        raise SemigroupError("--alpha and --beta are required")
    if not cfg.alpha < cfg.beta:
        raise SemigroupError("need alpha < beta")
    return cfg.alpha, cfg.beta


def window_rows(cfg: RunConfig) -> List[dict]:
    ws, dd = _weights(cfg, theorem_mode=False)
    alpha, beta = _window(cfg)
    n1, n2, n3 = ws.n
    rows = []
    for n in sorted(cfg.n_values):
        count = count_in_window(ws, n, alpha, beta, dd)
        mass = Fraction(2 * n1 * n2 * n3 * count, n * n) if n else Fraction(0)
        rows.append({"n": n, "alpha": alpha, "beta": beta, "count": count,
                     "scaled_mass": mass, "scaled_mass_6dp": dp6(mass)})
    return rows


def bounds_rows(cfg: RunConfig) -> List[dict]:
    ws, dd = _weights(cfg, theorem_mode=False)
    alpha, beta = _window(cfg)
    rows = []
    for n in sorted(cfg.n_values):
        rep = verify_bound(ws, dd, n, alpha, beta)
        row = {"n": n, "alpha": alpha, "beta": beta, "count": rep.count}
        for name in ("scaled_mass", "integral", "error", "theorem_bound", "refined_bound"):
            row[name] = getattr(rep, name)
        for name in ("scaled_mass", "integral", "error", "theorem_bound", "refined_bound"):
            row[name + "_6dp"] = dp6(getattr(rep, name))
        row["theorem_ok"] = rep.theorem_ok
        row["refined_ok"] = rep.refined_ok
        rows.append(row)
    return rows


def supersym_rows(cfg: RunConfig, notice=sys.stderr) -> List[dict]:
    if cfg.abc:
        sys_ = SupersymmetricSystem(*cfg.abc)
    else:
        if not (cfg.m and cfg.n_gens and cfg.m2 and cfg.n_gens2):
            raise SemigroupError("supersym needs --abc or all of --m, --n-gens, --m2, --n-gens2")
        sys_ = canonicalize(cfg.m, cfg.n_gens, cfg.m2, cfg.n_gens2)
        print(
            f"notice: canonicalized to (a,b,c)=({sys_.a},{sys_.b},{sys_.c}), "
            f"n={sys_.n}, m1={sys_.m1}, m2={sys_.m2}; "
            f"coordinate permutations {sys_.permutation[0]} and {sys_.permutation[1]}",
            file=notice,
        )
    ns = set(cfg.n_values)
    if cfg.n_max is not None:
        ns.update(range(cfg.n_max + 1))
    rows = []
    for n in sorted(ns):
        if not is_element(sys_.n, n):
            continue
        dec = decompose(sys_, n)
        offset = sum((b - a) * x for a, b, x in zip(sys_.m1, sys_.m2, dec.x))
        rows.append({"n": n, "q": dec.q, "r": dec.r, "offset": offset,
                     "pass": verify_translation(sys_, n)})
    return rows


def residue_rows(cfg: RunConfig) -> List[dict]:
    ws, dd = _weights(cfg, theorem_mode=False)
    return [{"n": n, "d": dd.d, "c": residue_class(ws, dd, n).c} for n in sorted(cfg.n_values)]


REPORTS = {
    "stats": stats_rows,
    "histogram": histogram_rows,
    "window": window_rows,
    "bounds": bounds_rows,
    "supersym": supersym_rows,
    "residues": residue_rows,
}


# --- output ------------------------------------------------------------------


def write_csv(rows: Iterable[dict], stream) -> None:
    writer = None
    for row in rows:
        if writer is None:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(list(row))
        writer.writerow([encode(v) if v is not None else "" for v in row.values()])


def read_csv(stream) -> List[dict]:
    reader = csv.DictReader(stream)
    return [{k: decode(v) for k, v in row.items()} for row in reader]


def _json_value(v):
    if v is None or isinstance(v, (bool, int)):
        return v
    return encode(v)


def write_json(cfg: RunConfig, rows: Iterable[dict], stream) -> None:
    doc = {"config": cfg.as_dict(), "rows": [{k: _json_value(v) for k, v in r.items()} for r in rows]}
    json.dump(doc, stream, indent=1)
    stream.write("\n")


def read_json(stream) -> dict:
    doc = json.load(stream)
    doc["rows"] = [
        {k: decode(v) if isinstance(v, str) else v for k, v in row.items()} for row in doc["rows"]
    ]
    return doc


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if cfg.command == "supersym":
            rows = supersym_rows(cfg, notice=stderr)
        else:
            if not cfg.n_values:
                raise SemigroupError("at least one --n is required")
            if any(n < 0 for n in cfg.n_values):
                raise SemigroupError("n must be nonnegative")
            rows = REPORTS[cfg.command](cfg)
        buf = io.StringIO()
        if cfg.fmt == "json":
            write_json(cfg, rows, buf)
        else:
            write_csv(rows, buf)
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except WidthOverflow as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        stdout.write(buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weighted-lengths",
        description="Weighted factorization length reports for three-generator numerical semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--m", type=parse_triple, help="weights m1,m2,m3")
        p.add_argument("--n-gens", type=parse_triple, help="generators n1,n2,n3")
        p.add_argument("--n", type=int, action="append", default=[], dest="n_values",
                       help="semigroup element (repeatable)")
        p.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")
        p.add_argument("--out", help="output path (default: standard output)")
        if name in ("window", "bounds"):
            p.add_argument("--alpha", type=parse_rational, required=True)
            p.add_argument("--beta", type=parse_rational, required=True)
        if name == "supersym":
            p.add_argument("--abc", type=parse_triple, help="distinct positive a,b,c")
            p.add_argument("--m2", type=parse_triple)
            p.add_argument("--n-gens2", type=parse_triple)
            p.add_argument("--n-max", type=int, help="also check every element up to this bound")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command != "supersym" and (args.m is None or args.n_gens is None):
        print("error: --m and --n-gens are required", file=sys.stderr)
        return 2
    cfg = RunConfig(
        command=args.command,
        m=args.m,
        n_gens=args.n_gens,
        n_values=args.n_values,
        alpha=getattr(args, "alpha", None),
        beta=getattr(args, "beta", None),
        fmt=args.fmt,
        out=args.out,
        abc=getattr(args, "abc", None),
        m2=getattr(args, "m2", None),
        n_gens2=getattr(args, "n_gens2", None),
        n_max=getattr(args, "n_max", None),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
