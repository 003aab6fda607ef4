"""Command-line front end.

Usage:
    gotzmann tau --n 3 --r 2 --d 4
    gotzmann tau --n 5 --r 2 --d 2 --method all
    gotzmann table --n-range 3..5 --d-range 0..3 --format csv
    gotzmann check --suite conjecture --max-n 6
    gotzmann interpolate --n 4

Exit codes: 0 ok, 1 verification failure, 2 invalid arguments or I/O, 3 capacity cap.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import click

from . import checks
from .errors import CapacityError, GotzmannError, InconsistencyError, ThresholdNotFound
from .polyfit import fit_tau, render_dominant
from .thresholds import compute

EXIT_VERIFY, EXIT_USAGE, EXIT_CAP = 1, 2, 3

METHOD_NAMES = {
    "recursive": ("recursive",),
    "delta": ("delta_sum",),
    "machinery": ("machinery",),
    "oracle": ("oracle_search",),
    "closed": ("closed_form",),
    "all": ("recursive", "delta_sum", "closed_form", "machinery", "oracle_search"),
}


@dataclass
class ResultRecord:
    n: int
    r: int
    d: int
    tau: str
    methods: list[str] = field(default_factory=list)
    timestamp: str | None = None

    @property
    def value(self) -> int:
        return int(self.tau)


def now_stamp() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


def dump_records(records: list[ResultRecord]) -> str:
    """Canonical JSON: re-dumping parsed output reproduces it byte for byte."""
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def load_records(text: str) -> list[ResultRecord]:
    return [ResultRecord(**obj) for obj in json.loads(text)]


def dump_csv(records: list[ResultRecord]) -> str:
    lines = ["n,r,d,tau"] + [f"{r.n},{r.r},{r.d},{r.tau}" for r in records]
    return "\n".join(lines) + "\n"


class Cache:
    """Write-through JSON cache keyed by "n,r,d". Purely an accelerator."""

    def __init__(self, path: str | None):
        self.path = Path(path) if path else None
        self.data = {}
        if self.path and self.path.exists():
            try:
                self.data = json.loads(self.path.read_text())
            except (OSError, ValueError):
                self.data = {}

    def get(self, n, r, d) -> ResultRecord | None:
        obj = self.data.get(f"{n},{r},{d}")
        return ResultRecord(**obj) if obj else None

    def put(self, rec: ResultRecord):
        if self.path is None:
            return
        stored = asdict(rec)
        stored["timestamp"] = stored["timestamp"] or now_stamp()
        self.data[f"{rec.n},{rec.r},{rec.d}"] = stored
        fd, tmp = tempfile.mkstemp(dir=self.path.parent or ".", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.data, fh, indent=2, sort_keys=True)
        os.replace(tmp, self.path)


def parse_range(text: str, name: str) -> range:
    """'3..5', '3-5' or '4' (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
        elif "-" in text.strip().lstrip("-"):
            lo, hi = text.rsplit("-", 1)
        else:
            lo = hi = text
        out = range(int(lo), int(hi) + 1)
    except ValueError:
        raise click.BadParameter(f"cannot parse range {text!r}", param_hint=name)
    if len(out) == 0:
        raise click.BadParameter(f"range {text!r} is empty", param_hint=name)
    return out


def _fail(code: int, msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Gotzmann thresholds of powers of a variable."""


@main.command()
@click.option("--n", "n", type=int, required=True, help="Number of variables.")
@click.option("--r", "r", type=int, default=2, show_default=True, help="Index of the variable x_r.")
@click.option("--d", "d", type=int, required=True, help="Exponent d in x_r^d.")
@click.option("--method", type=click.Choice(list(METHOD_NAMES)), default="recursive", show_default=True)
@click.option("--cache", type=click.Path(dir_okay=False), default=None, help="JSON result cache.")
def tau(n, r, d, method, cache):
    """Print tau_n(x_r^d)."""
    if not 2 <= r < n or d < 0:
        raise click.UsageError(f"need 2 <= r < n and d >= 0, got n={n} r={r} d={d}")
    store = Cache(cache)
    if method == "recursive":
        hit = store.get(n, r, d)
        if hit is not None:
            click.echo(hit.tau)
            return
    try:
        rec = compute(n, r, d, METHOD_NAMES[method])
    except (CapacityError, ThresholdNotFound) as exc:
        _fail(EXIT_CAP, str(exc))
    except InconsistencyError as exc:
        _fail(EXIT_VERIFY, str(exc))
    if method == "all":
        for name, v in rec.agreement.items():
            click.echo(f"{name}: {v}")
        if not rec.consistent():
            click.echo("methods DISAGREE", err=True)
            sys.exit(EXIT_VERIFY)
        click.echo(f"tau = {rec.tau} (all {len(rec.agreement)} methods agree)")
    else:
        click.echo(str(rec.tau))
    if rec.consistent():
        store.put(ResultRecord(n, r, d, str(rec.tau), sorted(rec.agreement)))


def _cell(args) -> tuple[int, int, int, int, int]:
    n, r, d = args
    rec = compute(n, r, d, ("recursive", "delta_sum"))
    return n, r, d, rec.agreement["recursive"], rec.agreement["delta_sum"]


@main.command()
@click.option("--n-range", "n_range", required=True, help="Inclusive range of n, e.g. 3..5.")
@click.option("--d-range", "d_range", required=True, help="Inclusive range of d, e.g. 0..3.")
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file (default stdout).")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--cache", type=click.Path(dir_okay=False), default=None)
@click.option("--stamp/--no-stamp", default=False, help="Fill record timestamps (JSON).")
def table(n_range, d_range, r, fmt, out, jobs, cache, stamp):
    """Tabulate tau_n(x_r^d); rows ordered by n, then d."""
    ns = parse_range(n_range, "--n-range")
    ds = parse_range(d_range, "--d-range")
    if r < 2 or ns[0] <= r or ds[0] < 0:
        raise click.UsageError(f"need 2 <= r < n and d >= 0 throughout (r={r}, n from {ns[0]}, d from {ds[0]})")
    store = Cache(cache)
    cells = [(n, r, d) for n in ns for d in ds]
    known = {c: store.get(*c) for c in cells}
    todo = [c for c in cells if known[c] is None]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell, todo, chunksize=max(1, len(todo) // (4 * jobs))))
    else:
        results = [_cell(c) for c in todo]

    fresh = {}
    for n, r_, d, a, b in results:
        if a != b:
            _fail(EXIT_VERIFY, f"tau_{n}(x_{r_}^{d}): recursive {a} != delta_sum {b}")
        rec = ResultRecord(n, r_, d, str(a), ["delta_sum", "recursive"])
        store.put(rec)
        fresh[(n, r_, d)] = rec

    stamp_value = now_stamp() if stamp else None
    records = []
    for c in cells:
        rec = known[c] or fresh[c]
        records.append(ResultRecord(rec.n, rec.r, rec.d, rec.tau, list(rec.methods), stamp_value))
    text = dump_csv(records) if fmt == "csv" else dump_records(records)
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        _fail(EXIT_USAGE, f"cannot write {out}: {exc}")


@main.command()
@click.option("--suite", type=click.Choice(list(checks.SUITES)), required=True)
@click.option("--max-n", type=int, default=None)
@click.option("--max-d", type=int, default=None)
def check(suite, max_n, max_d):
    """Run a verification suite; exit 0 iff every check passes."""
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_d is not None:
        if suite == "conjecture":
            raise click.UsageError("the conjecture suite takes --max-n only")
        kwargs["max_d"] = max_d
    failed = 0
    try:
        for label, ok, detail in checks.SUITES[suite](**kwargs):
            click.echo(f"{'PASS' if ok else 'FAIL'}  {label}")
            if not ok:
                failed += 1
                if detail:
                    click.echo(f"      {detail}")
    except CapacityError as exc:
        _fail(EXIT_CAP, str(exc))
    except GotzmannError as exc:
        _fail(EXIT_VERIFY, str(exc))
    click.echo(f"{suite}: {'FAILED' if failed else 'passed'}")
    sys.exit(EXIT_VERIFY if failed else 0)


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r", type=int, default=2, show_default=True)
def interpolate(n, r):
    """Print tau_n(x_r^d) as a polynomial in d, in the binomial basis."""
    if not 2 <= r < n:
        raise click.UsageError(f"need 2 <= r < n, got n={n} r={r}")
    p = fit_tau(n, r)
    click.echo(f"tau_{n}(x_{r}^d) = {p.render()}")
    click.echo(f"degree: {p.degree}")
    click.echo(f"dominant: {render_dominant(p)}")


if __name__ == "__main__":
    main()
