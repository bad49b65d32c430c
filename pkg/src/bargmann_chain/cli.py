"""Command-line front end: ``sweep``, ``reproduce``, ``circuit`` and ``oracle``.

Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import svg
from .analytic import critical_coupling, hx_brute_force, hx_ground
from .bargmann import SweepError, SweepResult, sweep
from .circuit import polygon_circuit
from .spin_ops import ChainParams, parse_spin

EXIT_USAGE = 1
EXIT_NUMERIC = 2
FORMATS = ("csv", "json", "svg")
SWEEP_PANELS = ("cnum", "phase", "joined", "abs", "speed")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _spin_token(text: str):
    if text not in ("1/2", "1"):
        raise argparse.ArgumentTypeError("spin must be given as 1/2 or 1")
    return parse_spin(text)


@dataclass
class RunConfig:
    spins: int = 3
    spin: object = parse_spin("1/2")
    vertices: int = 100
    radius: float = 1e-5
    field: float = 1.0
    j_min: float | None = None
    j_max: float | None = None
    j_steps: int = 201
    reverse: bool = False
    output: str = "sweep"
    formats: tuple = ("csv", "json")
    threads: int | None = None

    def validate(self):
        try:
            ChainParams(self.spins, self.spin, 0.0, self.field)
            polygon_circuit(self.vertices, self.radius)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if self.j_steps < 1:
            raise UsageError("j-steps must be at least 1")
        lo, hi = self.j_range()
        if self.j_steps == 1 and lo != hi:
            raise UsageError("a one-point grid needs j-min == j-max")
        if self.j_steps > 1 and not hi > lo:
            raise UsageError("j-max must exceed j-min")
        bad = set(self.formats) - set(FORMATS)
        if bad:
            raise UsageError(f"unknown output format(s): {', '.join(sorted(bad))}")
        return self

    def j_range(self):
        jc = critical_coupling(self.field)
        lo = jc - 2 * self.radius if self.j_min is None else self.j_min
        hi = jc + 2 * self.radius if self.j_max is None else self.j_max
        return lo, hi

    def j_grid(self) -> np.ndarray:
        lo, hi = self.j_range()
        return np.linspace(lo, hi, self.j_steps)


# flag name -> (RunConfig attribute, parser)
_KEYS = {
    "spins": ("spins", int),
    "spin": ("spin", _spin_token),
    "vertices": ("vertices", int),
    "radius": ("radius", float),
    "field": ("field", float),
    "j-min": ("j_min", float),
    "j-max": ("j_max", float),
    "j-steps": ("j_steps", int),
    "reverse": ("reverse", lambda t: str(t).strip().lower() in ("1", "true", "yes", "on")),
    "output": ("output", str),
    "format": ("formats", lambda t: tuple(f.strip() for f in str(t).split(",") if f.strip())),
    "threads": ("threads", int),
}


def read_config_file(path) -> dict:
    """Flat ``key = value`` file; ``#`` starts a comment; keys are flag names."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (t.strip() for t in line.split("=", 1))
        key = key.lstrip("-").replace("_", "-")
        if key not in _KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        attr, conv = _KEYS[key]
        try:
            out[attr] = conv(value)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return out


def _add_sweep_flags(p):
    p.add_argument("--config", help="flat key = value file; flags override it")
    p.add_argument("--spins", type=int, help="chain length N (default 3)")
    p.add_argument("--spin", type=_spin_token, help="1/2 or 1 (default 1/2)")
    p.add_argument("--vertices", type=int, help="circuit vertex count (default 100)")
    p.add_argument("--radius", type=float, help="circuit circumradius r (default 1e-5)")
    p.add_argument("--field", type=float, help="field magnitude B (default 1)")
    p.add_argument("--j-min", type=float, help="default Jc - 2r")
    p.add_argument("--j-max", type=float, help="default Jc + 2r")
    p.add_argument("--j-steps", type=int, help="number of J samples (default 201)")
    p.add_argument("--reverse", action="store_true", default=None, help="traverse the circuit clockwise")
    p.add_argument("--output", help="output path prefix (default ./sweep)")
    p.add_argument("--format", dest="formats", type=_KEYS["format"][1], help="comma list of csv,json,svg")
    p.add_argument("--threads", type=int, help="worker threads (default: all cores)")


def config_from_args(args) -> RunConfig:
    values = read_config_file(args.config) if getattr(args, "config", None) else {}
    for _, (attr, _) in _KEYS.items():
        v = getattr(args, attr, None)
        if v is not None:
            values[attr] = v
    return RunConfig(**values).validate()


def _write_manifest(directory: Path, lines: dict):
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    body = [f"created: {stamp}"] + [f"{k}: {v}" for k, v in lines.items()]
    (directory / "MANIFEST").write_text("\n".join(body) + "\n")


def _emit(result: SweepResult, prefix: Path, formats) -> list:
    written = []
    if "csv" in formats:
        result.to_csv(prefix.with_name(prefix.name + ".csv"))
        written.append(prefix.name + ".csv")
    if "json" in formats:
        result.to_json(prefix.with_name(prefix.name + ".json"))
        written.append(prefix.name + ".json")
    if "svg" in formats and len(result.J) > 1:
        for panel in SWEEP_PANELS:
            name = f"{prefix.name}_{panel}.svg"
            (prefix.parent / name).write_text(svg.panel_svg([result], panel))
            written.append(name)
    return written


def run_sweep(cfg: RunConfig) -> int:
    params = ChainParams(cfg.spins, cfg.spin, 0.0, cfg.field)
    circuit = polygon_circuit(cfg.vertices, cfg.radius, reverse=cfg.reverse)
    prefix = Path(cfg.output)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    info = {
        "command": "sweep",
        "spins": cfg.spins,
        "spin": str(cfg.spin),
        "vertices": cfg.vertices,
        "radius": repr(cfg.radius),
        "field": repr(cfg.field),
        "j_grid": f"{cfg.j_range()[0]!r}..{cfg.j_range()[1]!r} x {cfg.j_steps}",
        "reverse": cfg.reverse,
    }
    try:
        result = sweep(params, circuit, cfg.j_grid(), threads=cfg.threads)
    except SweepError as exc:
        written = _emit(exc.partial, prefix, cfg.formats) if exc.partial is not None else []
        _write_manifest(prefix.parent, {**info, "status": f"FAILED at J={exc.J!r}, vertex {exc.vertex}: {exc.cause}", "files": " ".join(written)})
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    written = _emit(result, prefix, cfg.formats)
    _write_manifest(prefix.parent, {**info, "status": "ok", "files": " ".join(written)})
    return 0


# figure presets: name -> list of (label, N, s, vertices) and panels
PRESETS = {
    "fig3": ([(f"N={n}", n, "1/2", 100) for n in (3, 5, 7, 9, 11)], ("cnum", "phase"), True),
    "fig4": ([(f"N={n}", n, "1/2", 100) for n in (3, 5, 7, 9, 11)], ("abs",), False),
    "fig5": ([(f"M={m}", 3, "1/2", m) for m in (100, 150, 200, 250, 300)], ("abs",), False),
    "fig6": ([("N=3", 3, "1/2", 100)], ("speed",), False),
    "fig7": ([(f"N={n}", n, "1", 100) for n in (5, 7)], ("cnum", "phase", "joined", "abs"), True),
}


def _panel_csv(results, labels, panel) -> str:
    lines = ["label," + ",".join(("re_C", "im_C") if panel == "cnum" else ("J_minus_Jc_over_r", panel))]
    for res, label in zip(results, labels):
        x, y, _ = svg.panel_series(res, panel)
        lines += [f"{label},{float(a)!r},{float(b)!r}" for a, b in zip(x, y)]
    return "\n".join(lines) + "\n"


def reproduce(figure: str, outdir, *, j_steps: int = 201, radius: float = 1e-5, threads=None, only=None) -> list:
    """Run one figure preset and write ``<figure>_<panel>.{csv,svg}`` files.

    Presets that show one panel per chain (fig3, fig7) name panels
    ``N<n>_<kind>``; the others overlay every run in a single panel.
    ``only`` restricts the run list by label (for quick looks).
    """
    runs, panels, per_run = PRESETS[figure]
    if only:
        runs = [r for r in runs if r[0] in only]
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    J = np.linspace(0.5 - 2 * radius, 0.5 + 2 * radius, j_steps)
    results, labels = [], []
    for label, N, s, M in runs:
        results.append(sweep(ChainParams(N, s), polygon_circuit(M, radius), J, threads=threads))
        labels.append(label)
    written = []
    groups = [([r], [l], f"N{r.params.N}_") for r, l in zip(results, labels)] if per_run else [(results, labels, "")]
    for res, labs, tag in groups:
        for panel in panels:
            stem = f"{figure}_{tag}{panel}"
            (outdir / f"{stem}.csv").write_text(_panel_csv(res, labs, panel))
            (outdir / f"{stem}.svg").write_text(svg.panel_svg(res, panel, labs, title=f"{figure} {' '.join(labs)}"))
            written += [f"{stem}.csv", f"{stem}.svg"]
    return written


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bargmann-chain", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sweep", help="Bargmann invariant across a J grid")
    _add_sweep_flags(s)

    r = sub.add_parser("reproduce", help="run a figure preset")
    r.add_argument("figure", choices=sorted(PRESETS))
    r.add_argument("--output", default=".", help="output directory")
    r.add_argument("--j-steps", type=int, default=201)
    r.add_argument("--threads", type=int)
    r.add_argument("--only", action="append", help="restrict to runs with this label, e.g. N=3")

    c = sub.add_parser("circuit", help="print a polygon circuit as JSON")
    c.add_argument("--vertices", type=int, default=100)
    c.add_argument("--radius", type=float, default=1e-5)
    c.add_argument("--reverse", action="store_true")

    o = sub.add_parser("oracle", help="classical ground-state data of the x-field chain as JSON")
    o.add_argument("--spins", type=int, required=True)
    o.add_argument("--coupling", type=float, required=True)
    o.add_argument("--field", type=float, default=1.0)
    o.add_argument("--spin", type=_spin_token, default=parse_spin("1/2"))
    o.add_argument("--brute-force", action="store_true", help="enumerate every configuration")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, parse errors exit 1
        return exc.code
    try:
        if args.command == "sweep":
            return run_sweep(config_from_args(args))
        if args.command == "reproduce":
            if args.j_steps < 2:
                raise UsageError("j-steps must be at least 2")
            try:
                files = reproduce(args.figure, args.output, j_steps=args.j_steps, threads=args.threads, only=args.only)
            except SweepError as exc:
                print(f"numerical failure: {exc}", file=sys.stderr)
                return EXIT_NUMERIC
            print("\n".join(files))
            return 0
        if args.command == "circuit":
            try:
                c = polygon_circuit(args.vertices, args.radius, reverse=args.reverse)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            print(c.to_json())
            return 0
        if args.command == "oracle":
            fn = hx_brute_force if args.brute_force else hx_ground
            try:
                info = fn(args.spins, args.coupling, args.field, args.spin)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            print(json.dumps(info.to_dict()))
            return 0
    except UsageError as exc:
        print(f"bargmann-chain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
