"""Parameter-space campaigns: connectivity loci over moduli, the 256x256
cellular-automaton connectivity grid, the Euler-characteristic sequence, the
census of primes with 2 as a primitive root, and the random-permutation
length-cluster experiment.

All sweeps are deterministic; seeded experiments reproduce bit-for-bit from
(n, trials, seed).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _scipy_components

from . import rng
from .graphs import build_graph
from .maps import (
    CARule,
    MapExpr,
    MapFamily,
    Perm,
    PowerPlus,
    format_map,
    image_table,
)
from .metrics import components, full_report, triangle_count
from .numtheory import first_primes, is_primitive_root
from .spaces import BitVec, Zn, parse_space

GRID_RULES = 256


@dataclass(frozen=True)
class LocusResult:
    """Per-parameter component counts for one sweep, sorted by parameter."""

    axis: str
    params: tuple
    component_counts: tuple[int, ...]
    generation: tuple[tuple[str, str], ...]
    seed: int | None = None

    def connected_params(self) -> tuple:
        return tuple(
            p for p, c in zip(self.params, self.component_counts) if c == 1
        )

    def to_csv(self) -> str:
        lines = ["param,components,connected"]
        for p, c in zip(self.params, self.component_counts):
            name = f"{p[0]}:{p[1]}" if isinstance(p, tuple) else str(p)
            lines.append(f"{name},{c},{1 if c == 1 else 0}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LambdaCensus:
    """Per-trial length-cluster coefficients for seeded permutation pairs."""

    n: int
    trials: int
    seed: int
    lambdas: tuple[float | None, ...]
    mean: float | None
    std: float | None
    undefined_count: int

    def to_csv(self) -> str:
        lines = ["trial,lambda"]
        for i, lam in enumerate(self.lambdas):
            lines.append(f"{i},{_fmt9(lam) if lam is not None else 'undef'}")
        mean = _fmt9(self.mean) if self.mean is not None else "undef"
        std = _fmt9(self.std) if self.std is not None else "undef"
        lines.append(
            f"# n={self.n} trials={self.trials} seed={self.seed} "
            f"mean={mean} std={std} undefined={self.undefined_count}"
        )
        return "\n".join(lines) + "\n"


def _fmt9(x: float) -> str:
    return f"{x:.9g}"


def connectivity_locus(
    maps: tuple[MapExpr, ...], space_kind: str, n_values
) -> LocusResult:
    """Component counts of the graphs generated by the given maps on the
    space family space_kind:n for each swept n."""
    n_values = tuple(int(n) for n in n_values)
    if not n_values:
        raise ValueError("empty sweep range")
    counts = []
    for n in n_values:
        family = MapFamily(maps, parse_space(f"{space_kind}:{n}"))
        counts.append(components(build_graph(family))[0])
    gen = (("space", space_kind), ("maps", ",".join(format_map(m) for m in maps)))
    return LocusResult(
        axis=f"n={n_values[0]}..{n_values[-1]}",
        params=n_values,
        component_counts=tuple(counts),
        generation=gen,
    )


def euler_sequence(n_max: int) -> tuple[int, ...]:
    """Euler characteristic of the squaring-map graph on Z_n, n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    for n in range(1, n_max + 1):
        g = build_graph(MapFamily((PowerPlus(2, 0),), Zn(n)))
        out.append(g.vertex_count - g.edge_count + triangle_count(g))
    return tuple(out)


# ---------------------------------------------------------------------------
# cellular-automaton connectivity grid


def _ca_cell_counts(width: int, a_rows) -> np.ndarray:
    """Component counts for grid cells (a, b), b >= a, for the given rows."""
    size = 1 << width
    space = BitVec(width)
    tables = [image_table(CARule(r), space) for r in range(GRID_RULES)]
    idx = np.arange(size, dtype=np.int64)
    rows = np.concatenate([idx, idx])
    data = np.ones(2 * size, dtype=np.int8)
    out = np.zeros((len(a_rows), GRID_RULES), dtype=np.int32)
    for i, a in enumerate(a_rows):
        for b in range(a, GRID_RULES):
            cols = np.concatenate([tables[a], tables[b]])
            mat = coo_matrix((data, (rows, cols)), shape=(size, size))
            out[i, b], _ = _scipy_components(mat, directed=False)
    return out


def ca_mandelbrot(width: int, workers: int = 1) -> LocusResult:
    """Connectivity of the graph on width-w bit vectors generated by each
    pair of elementary CA rules; 256x256 symmetric grid."""
    if not 3 <= width <= 20:
        raise ValueError("width must be in 3..20")
    grid = np.zeros((GRID_RULES, GRID_RULES), dtype=np.int32)
    if workers <= 1:
        slab = _ca_cell_counts(width, range(GRID_RULES))
        grid[:] = slab
    else:
        chunks = [list(range(start, GRID_RULES, workers)) for start in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_ca_cell_counts, width, chunk) for chunk in chunks
            ]
            for chunk, fut in zip(chunks, futures):
                grid[chunk, :] = fut.result()
    upper = np.triu(grid)
    full = upper + np.triu(grid, 1).T
    params = tuple((a, b) for a in range(GRID_RULES) for b in range(GRID_RULES))
    return LocusResult(
        axis="rule pairs (a,b), 0..255 x 0..255, row=a col=b",
        params=params,
        component_counts=tuple(int(c) for c in full.ravel()),
        generation=(("space", f"bits:{width}"), ("maps", "ca:a,ca:b")),
    )


def grid_of(result: LocusResult) -> np.ndarray:
    """Reshape a rule-pair locus into its 256x256 connectivity grid."""
    counts = np.array(result.component_counts, dtype=np.int32)
    return (counts == 1).reshape(GRID_RULES, GRID_RULES)


def to_pbm(result: LocusResult, header_lines: tuple[str, ...] = ()) -> str:
    """Plain PBM (P1) bitmap of the connectivity grid; 1 = connected."""
    grid = grid_of(result)
    lines = ["P1"]
    lines.extend(f"# {h}" for h in header_lines)
    lines.append(f"{GRID_RULES} {GRID_RULES}")
    for row in grid:
        lines.append("".join("1" if c else "0" for c in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# censuses


def permutation_lambda(n: int, trials: int, seed: int) -> LambdaCensus:
    """Length-cluster coefficient over graphs from independent seeded
    permutation pairs on Z_n; undefined trials (nu outside (0,1)) are counted
    separately, not coerced."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    stream = rng.SeedStream(seed)
    lambdas: list[float | None] = []
    for _ in range(trials):
        s1 = stream.next_u64()
        s2 = stream.next_u64()
        family = MapFamily((Perm(s1), Perm(s2)), Zn(n))
        report = full_report(build_graph(family))
        lambdas.append(report.lam)
    defined = [x for x in lambdas if x is not None]
    if defined:
        mean = math.fsum(defined) / len(defined)
        var = math.fsum((x - mean) ** 2 for x in defined) / len(defined)
        std = math.sqrt(var)
    else:
        mean = std = None
    return LambdaCensus(
        n=n,
        trials=trials,
        seed=seed,
        lambdas=tuple(lambdas),
        mean=mean,
        std=std,
        undefined_count=len(lambdas) - len(defined),
    )


def artin_census(prime_count: int) -> tuple[int, float]:
    """(count, fraction) of the first prime_count primes having 2 as a
    primitive root; p = 2 never qualifies."""
    if prime_count < 1:
        raise ValueError("prime_count must be >= 1")
    count = 0
    for p in first_primes(prime_count):
        p = int(p)
        if p > 2 and is_primitive_root(2, p):
            count += 1
    return count, count / prime_count
