"""Randomized sieve deciding exact cover and k-dimensional matching.

The decision procedure XORs the probe value cover_weight over every
subset X of V - U.  Families of n/k edges that miss some vertex outside
U are counted once per subset of the missed vertices, an even number of
times, so they vanish in characteristic 2; what remains is the summed
weight of exact covers at random edge weights.  A nonzero sum proves a
cover exists; a zero sum is wrong only when the cover polynomial happens
to vanish at the random point, probability about n / (k * 2^m).

solve_kdm exploits a given vertex partition: with U the union of the
first two blocks every edge projects to a pair joining them, so each
probe is a single bipartite determinant and one sweep of 2^(n(k-2)/k)
probes decides the instance.

solve_xkc knows no partition, so it samples U of size round(t*n) (t from
the exponent optimizer), discards edges meeting U three or more times
(no cover edge does, when U is good), and repeats with fresh weights
until the attempt budget ceil(ln(1/eps)/p) is spent.  Answers are one
sided: yes is always backed by a nonzero certificate.

Threaded runs split the X counter range into contiguous chunks and XOR
the partial sums, so results are bit-identical for any worker count.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .gf2m import GF2m, field_for
from .hypergraph import Hypergraph, ProjectedView, project, validate
from .linalg import determinant
from .matchweight import cover_weight
from .params import optimize, repetitions


@dataclass
class SieveConfig:
    """Knobs shared by both solvers."""

    m: int = 64              # field degree, 8 or 64
    seed: int = 0            # master seed for U sampling and edge weights
    epsilon: float = 2.0 ** -20  # false-no budget of solve_xkc
    threads: int = 1


@dataclass
class Decision:
    """Outcome of one solver run."""

    answer: str              # "yes" or "no"
    probes: int              # total X subsets swept
    attempts: int            # U draws consumed
    elapsed: float           # wall seconds
    reason: str | None = None
    u_fraction: float | None = None
    max_attempts: int | None = None

    @property
    def yes(self) -> bool:
        return self.answer == "yes"


def _rest_bits(H: Hypergraph, u_order) -> list[int]:
    in_u = set(u_order)
    return [1 << v for v in range(H.n) if v not in in_u]


def _x_mask(code: int, rest_bits: list[int]) -> int:
    mask = 0
    idx = 0
    while code:
        if code & 1:
            mask |= rest_bits[idx]
        code >>= 1
        idx += 1
    return mask


def _sweep_general(info, weights, n, k, gf, rest_bits, start, stop):
    """XOR of probe values for X codes in [start, stop)."""
    u_order, pair_info, loop_info, empty_info = info
    total = 0
    for code in range(start, stop):
        xm = _x_mask(code, rest_bits)
        probe_view = ProjectedView(
            u_order,
            [(e, i, j) for mk, e, i, j in pair_info if not mk & xm],
            [(e, i) for mk, e, i in loop_info if not mk & xm],
            [e for mk, e in empty_info if not mk & xm],
            [],
        )
        total ^= cover_weight(probe_view, weights, n, k, gf)
    return total


def _sweep_kdm(entries, b, weights, gf, rest_bits, start, stop):
    """XOR of bipartite determinants for X codes in [start, stop)."""
    total = 0
    full = (1 << b) - 1
    for code in range(start, stop):
        xm = _x_mask(code, rest_bits)
        mat = [[0] * b for _ in range(b)]
        rows_hit = 0
        cols_hit = 0
        for mk, eid, r, c in entries:
            if mk & xm:
                continue
            mat[r][c] ^= weights[eid]
            rows_hit |= 1 << r
            cols_hit |= 1 << c
        if rows_hit != full or cols_hit != full:
            continue  # some block vertex lost every edge, determinant is zero
        total ^= determinant(mat, gf)
    return total


def _run_chunks(kernel, total_codes: int, threads: int) -> int:
    if threads <= 1 or total_codes <= 1:
        return kernel(0, total_codes)
    parts = min(threads, total_codes)
    step, extra = divmod(total_codes, parts)
    ranges = []
    start = 0
    for i in range(parts):
        size = step + (1 if i < extra else 0)
        ranges.append((start, start + size))
        start += size
    with ThreadPoolExecutor(max_workers=parts) as pool:
        partials = list(pool.map(lambda r: kernel(*r), ranges))
    total = 0
    for p in partials:
        total ^= p
    return total


def _sieve(H: Hypergraph, u_vertices, weights, gf: GF2m, threads: int) -> int:
    if len(weights) != len(H.edges):
        raise ValueError(f"{len(weights)} weights for {len(H.edges)} edges")
    if H.n == 0 or H.n % H.k != 0:
        raise ValueError("vertex count must be a positive multiple of k")
    view = project(H, u_vertices)
    if view.dropped:
        raise ValueError(f"{len(view.dropped)} edges meet U more than twice")
    masks = H.edge_masks
    info = (
        view.u_order,
        [(masks[e], e, i, j) for e, i, j in view.pairs],
        [(masks[e], e, i) for e, i in view.loops],
        [(masks[e], e) for e in view.empties],
    )
    rest_bits = _rest_bits(H, view.u_order)

    def kernel(start, stop):
        return _sweep_general(info, weights, H.n, H.k, gf, rest_bits, start, stop)

    return _run_chunks(kernel, 1 << len(rest_bits), threads)


def sieve_decide(H: Hypergraph, u_vertices, weights, gf: GF2m) -> int:
    """Summed cover weight at the given edge weights; nonzero proves a
    cover exists.  Requires every edge to meet U at most twice."""
    return _sieve(H, u_vertices, weights, gf, threads=1)


def sieve_decide_parallel(H: Hypergraph, u_vertices, weights, gf: GF2m,
                          threads: int) -> int:
    """sieve_decide with the X range fanned out over worker threads.

    Chunks are contiguous counter ranges combined by XOR, so the value
    is bit-identical to the serial sweep for every worker count.
    """
    return _sieve(H, u_vertices, weights, gf, threads=threads)


def solve_kdm(H: Hypergraph, cfg: SieveConfig | None = None) -> Decision:
    """Decide a partitioned instance with one sweep of bipartite probes.

    U is the union of the first two partition blocks, so the instance is
    its own filtered version and a single weight draw suffices; the only
    error mode is a false no, at probability about (n/k) / 2^m.
    """
    t0 = time.perf_counter()
    cfg = cfg or SieveConfig()
    violation = validate(H)
    if violation is not None:
        raise ValueError(str(violation))
    if H.partition is None:
        raise ValueError("partitioned solver needs an instance with a partition")
    gf = field_for(cfg.m)
    rng = random.Random(cfg.seed)
    weights = [gf.sample(rng) for _ in H.edges]
    left, right = H.partition[0], H.partition[1]
    view = project(H, list(left) + list(right))
    lpos = {v: i for i, v in enumerate(left)}
    rpos = {v: i for i, v in enumerate(right)}
    masks = H.edge_masks
    entries = []
    for eid, i, j in view.pairs:
        vi, vj = view.u_order[i], view.u_order[j]
        if vi in lpos:
            entries.append((masks[eid], eid, lpos[vi], rpos[vj]))
        else:
            entries.append((masks[eid], eid, lpos[vj], rpos[vi]))
    rest_bits = _rest_bits(H, view.u_order)
    b = H.n // H.k

    def kernel(start, stop):
        return _sweep_kdm(entries, b, weights, gf, rest_bits, start, stop)

    probes = 1 << len(rest_bits)
    total = _run_chunks(kernel, probes, cfg.threads)
    return Decision("yes" if total else "no", probes, 1,
                    time.perf_counter() - t0,
                    u_fraction=2.0 / H.k, max_attempts=1)


def solve_xkc(H: Hypergraph, cfg: SieveConfig | None = None) -> Decision:
    """Decide an unpartitioned instance by repeated random-U sieving.

    Each attempt samples U, keeps only edges meeting it at most twice,
    draws fresh weights and sweeps; a nonzero sum ends the run with yes.
    After ceil(ln(1/epsilon)/p) barren attempts the answer is no, wrong
    with probability at most epsilon plus the vanishing-determinant term.
    """
    t0 = time.perf_counter()
    cfg = cfg or SieveConfig()
    violation = validate(H)
    if violation is not None:
        raise ValueError(str(violation))
    n, k = H.n, H.k
    if n == 0:
        return Decision("yes", 0, 0, time.perf_counter() - t0, reason="empty instance")
    if n % k != 0:
        return Decision("no", 0, 0, time.perf_counter() - t0,
                        reason=f"cardinality: n={n} is not a multiple of k={k}")
    gf = field_for(cfg.m)
    rng = random.Random(cfg.seed)
    t = 1.0 if k == 2 else optimize(k).t
    tn = min(n, max(2, round(t * n)))
    max_attempts = repetitions(n, k, tn / n, cfg.epsilon)
    masks = H.edge_masks
    probes_per_attempt = 1 << (n - tn)
    probes = 0
    for attempt in range(1, max_attempts + 1):
        u_vertices = sorted(rng.sample(range(n), tn))
        u_mask = 0
        for v in u_vertices:
            u_mask |= 1 << v
        keep = [eid for eid, mk in enumerate(masks) if (mk & u_mask).bit_count() <= 2]
        sub = Hypergraph(n, k, [H.edges[eid] for eid in keep])
        weights = [gf.sample(rng) for _ in keep]
        total = _sieve(sub, u_vertices, weights, gf, cfg.threads)
        probes += probes_per_attempt
        if total:
            return Decision("yes", probes, attempt, time.perf_counter() - t0,
                            u_fraction=tn / n, max_attempts=max_attempts)
    return Decision("no", probes, max_attempts, time.perf_counter() - t0,
                    u_fraction=tn / n, max_attempts=max_attempts)
