"""Command-line front door: gen | stats | verify | scan.

Every output file carries a comment header with the effective run
configuration (content-determining fields only, defaults included), so a
run can be reproduced byte-for-byte from its own output.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import __version__, survey
from .graphs import build_graph, export_dot, export_edge_list
from .maps import MapFamily, parse_maps
from .metrics import full_report
from .spaces import parse_space
from .survey import (
    ca_mandelbrot,
    connectivity_locus,
    euler_sequence,
    permutation_lambda,
    to_pbm,
)
from .verify import CLAIM_IDS, run_claim

SCAN_KINDS = ("locus", "ca-mandelbrot", "euler-seq", "perm-lambda", "artin-census")

_LOCUS_START = {"zn": 1, "znz": 2, "units": 1, "from2": 3}

# header keys that reappear as positional CLI arguments
_POSITIONAL_KEYS = ("claim", "kind")


@dataclass(frozen=True)
class RunConfig:
    """Content-determining configuration of one run, as ordered key=value
    pairs; round-trips through the comment header of any output file."""

    command: str
    fields: tuple[tuple[str, str], ...]

    def header_lines(self) -> list[str]:
        pairs = (("command", self.command),) + self.fields
        return [f"ringgraphs={__version__}"] + [f"{k}={v}" for k, v in pairs]

    def to_args(self) -> list[str]:
        """Reconstruct the argument vector that reproduces this run."""
        argv = [self.command]
        for key, value in self.fields:
            if key in _POSITIONAL_KEYS:
                argv.append(value)
            else:
                argv += [f"--{key}", value]
        return argv

    @classmethod
    def from_output(cls, text: str) -> "RunConfig":
        """Parse the header back out of a written output file."""
        pairs = []
        for line in text.splitlines():
            if line.startswith(("# ", "// ")):
                line = line.split(" ", 1)[1].strip()
            elif line != "P1":
                break
            else:
                continue
            key, sep, value = line.partition("=")
            if sep:
                pairs.append((key, value))
        table = dict(pairs)
        if "command" not in table:
            raise ValueError("no run configuration header found")
        command = table["command"]
        fields = tuple(
            (k, v) for k, v in pairs if k not in ("command", "ringgraphs")
        )
        return cls(command, fields)


def _write(path: str | None, body: str, config: RunConfig) -> None:
    header = config.header_lines()
    if path is None:
        sys.stdout.write("".join(f"# {h}\n" for h in header) + body)
        return
    if path.endswith(".dot"):
        text = "".join(f"// {h}\n" for h in header) + body
    elif path.endswith(".pbm"):
        text = body  # header already embedded after the magic number
    else:
        text = "".join(f"# {h}\n" for h in header) + body
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _build_family(space_text: str, maps_text: str) -> MapFamily:
    return MapFamily(parse_maps(maps_text), parse_space(space_text))


def cmd_gen(args) -> int:
    family = _build_family(args.space, args.maps)
    g = build_graph(family)
    config = RunConfig(
        "gen", (("space", args.space), ("maps", family.provenance()))
    )
    outs = args.out or [None]
    for path in outs:
        if path is not None and path.endswith(".dot"):
            labels = None
            if args.labels:
                labels = [str(s.payload) for s in family.space.enumerate()]
            body = export_dot(g, labels)
        else:
            body = export_edge_list(g)
        _write(path, body, config)
    return 0


def cmd_stats(args) -> int:
    family = _build_family(args.space, args.maps)
    report = full_report(build_graph(family), nu_estimator=args.nu, sample_seed=args.seed)
    config = RunConfig(
        "stats",
        (
            ("space", args.space),
            ("maps", family.provenance()),
            ("nu", args.nu),
            ("seed", str(args.seed)),
        ),
    )
    _write(args.out, report.to_json(), config)
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    header = []
    if args.nmax is not None:
        kwargs["n_max"] = args.nmax
        header.append(("nmax", str(args.nmax)))
    if args.pmax is not None:
        kwargs["p_max"] = args.pmax
        header.append(("pmax", str(args.pmax)))
    if args.claim == "power-pair":
        kwargs["a"] = args.a
        kwargs["b"] = args.b
        header += [("a", str(args.a)), ("b", str(args.b))]
    if args.claim == "pierpont":
        kwargs["space_kind"] = args.space_kind
        header.append(("space-kind", args.space_kind))
    if args.claim == "fermat" and args.extras is not None:
        extras = tuple(int(v) for v in args.extras.split(",") if v.strip())
        kwargs["extras"] = extras
        header.append(("extras", ",".join(str(v) for v in extras)))
    verdict = run_claim(args.claim, **kwargs)
    config = RunConfig("verify", (("claim", args.claim),) + tuple(header))
    _write(args.out, verdict.to_line() + "\n", config)
    if args.out is not None:
        print(verdict.to_line())
    return 0 if verdict.passed else 2


def cmd_scan(args) -> int:
    kind = args.kind
    if kind == "locus":
        start = _LOCUS_START.get(args.space_kind)
        if start is None:
            raise ValueError(f"locus scans sweep residue spaces, not {args.space_kind!r}")
        maps = parse_maps(args.maps)
        result = connectivity_locus(maps, args.space_kind, range(start, args.nmax + 1))
        config = RunConfig(
            "scan",
            (
                ("kind", kind),
                ("space-kind", args.space_kind),
                ("maps", args.maps),
                ("nmax", str(args.nmax)),
            ),
        )
        _write(args.out, result.to_csv(), config)
    elif kind == "ca-mandelbrot":
        workers = args.workers if args.workers else os.cpu_count() or 1
        print(f"workers={workers}", file=sys.stderr)
        result = ca_mandelbrot(args.width, workers=workers)
        config = RunConfig("scan", (("kind", kind), ("width", str(args.width))))
        body = to_pbm(result, tuple(config.header_lines()))
        if args.out is None:
            sys.stdout.write(body)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(body)
    elif kind == "euler-seq":
        seq = euler_sequence(args.nmax)
        body = "n,euler_char\n" + "".join(
            f"{i + 1},{chi}\n" for i, chi in enumerate(seq)
        )
        config = RunConfig("scan", (("kind", kind), ("nmax", str(args.nmax))))
        _write(args.out, body, config)
    elif kind == "perm-lambda":
        census = permutation_lambda(args.n, args.trials, args.seed)
        config = RunConfig(
            "scan",
            (
                ("kind", kind),
                ("n", str(args.n)),
                ("trials", str(args.trials)),
                ("seed", str(args.seed)),
            ),
        )
        _write(args.out, census.to_csv(), config)
    elif kind == "artin-census":
        count, fraction = survey.artin_census(args.count)
        body = f"primes={args.count} count={count} fraction={fraction:.9g}\n"
        config = RunConfig("scan", (("kind", kind), ("count", str(args.count))))
        _write(args.out, body, config)
    else:
        raise ValueError(f"unknown scan kind {kind!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringgraphs",
        description="graphs generated by map families on finite rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a graph and export .edges/.dot files")
    gen.add_argument("--space", required=True, help="state space, e.g. zn:31")
    gen.add_argument("--maps", required=True, help='comma-separated maps, e.g. "2x,3x+1"')
    gen.add_argument("--out", action="append", help="output file (.edges or .dot)")
    gen.add_argument("--labels", action="store_true", help="label DOT nodes with state payloads")
    gen.set_defaults(func=cmd_gen)

    stats = sub.add_parser("stats", help="compute the full statistics report")
    stats.add_argument("--space", required=True)
    stats.add_argument("--maps", required=True)
    stats.add_argument("--nu", choices=("local", "transitivity"), default="local")
    stats.add_argument("--seed", type=int, default=0, help="sampling seed for huge graphs")
    stats.add_argument("--out")
    stats.set_defaults(func=cmd_stats)

    ver = sub.add_parser("verify", help="run one claim checker")
    ver.add_argument("claim", choices=CLAIM_IDS)
    ver.add_argument("--nmax", type=int)
    ver.add_argument("--pmax", type=int)
    ver.add_argument("--a", type=int, default=2, help="first exponent (power-pair)")
    ver.add_argument("--b", type=int, default=5, help="second exponent (power-pair)")
    ver.add_argument(
        "--space-kind", choices=("znz", "from2"), default="znz",
        help="vertex set reading for pierpont",
    )
    ver.add_argument("--extras", help="comma-separated extra n values (fermat)")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    scan = sub.add_parser("scan", help="parameter-space sweeps and censuses")
    scan.add_argument("kind", choices=SCAN_KINDS)
    scan.add_argument("--maps", help="maps for locus scans")
    scan.add_argument(
        "--space-kind", default="zn", help="residue space family for locus scans"
    )
    scan.add_argument("--nmax", type=int, default=100)
    scan.add_argument("--width", type=int, default=9, help="bit width (ca-mandelbrot)")
    scan.add_argument("--n", type=int, default=100, help="modulus (perm-lambda)")
    scan.add_argument("--trials", type=int, default=50)
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--count", type=int, default=10000, help="primes (artin-census)")
    scan.add_argument(
        "--workers", type=int, default=0,
        help="0 = one worker per available CPU (results are worker-invariant)",
    )
    scan.add_argument("--out")
    scan.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
