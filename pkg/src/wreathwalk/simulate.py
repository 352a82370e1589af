"""Monte Carlo side: vectorized walk sampling (discrete and continuized),
empirical TV with jackknife errors, and the two coupling experiments (the
per-coordinate randomization tail and the pair-event graph connectivity
time).

Randomness contract: everything goes through numpy's default_rng (PCG64),
and every report records the seed.  Per step the sampler draws, in order,
p, then q, then one batch of base-group indices (two for the independent
walk, one for the paired walk, none for the bare permutation walk),
regardless of whether p == q, so the stream layout is fixed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .groups import GroupTable
from .wreath import WreathElement

RNG_ALGORITHM = "PCG64"


@dataclass
class SimConfig:
    kind: str                      # sym | independent | paired
    n: int
    g: GroupTable | None = None
    k: int = 0                     # step count (discrete mode)
    t: float | None = None         # time horizon (continuized mode)
    trials: int = 1000
    seed: int = 0
    mode: str = "discrete"

    def __post_init__(self):
        if self.kind not in ("sym", "independent", "paired"):
            raise ValueError(f"unknown walk kind {self.kind!r}")
        if self.kind != "sym" and self.g is None:
            raise ValueError("wreath walks need a base group")
        if self.trials < 1:
            raise ValueError("trials >= 1")
        if self.mode not in ("discrete", "continuized"):
            raise ValueError("mode is discrete or continuized")
        if self.mode == "continuized" and self.t is None:
            raise ValueError("continuized mode needs a time horizon t")


def sample_step(g: GroupTable | None, state: WreathElement, kind: str,
                rng) -> WreathElement:
    """One left-multiplication by a draw from the walk measure, realized
    procedurally.  Scalar reference for the vectorized runner."""
    coords = list(state.coords)
    perm = list(state.perm)
    n = len(perm)
    p = int(rng.integers(n))
    q = int(rng.integers(n))
    if kind == "sym":
        a = b = 0
    elif kind == "independent":
        a = int(rng.integers(g.order))
        b = int(rng.integers(g.order))
    else:
        a = int(rng.integers(g.order))
        b = int(g.inv[a])
    if p == q:
        if kind != "sym":
            coords[p] = int(g.mult[a, coords[p]])
    else:
        # increment (v; tau_pq): new_x[p] = v_p x_q, new_x[q] = v_q x_p,
        # new_perm = tau o perm (swap the values p and q)
        xp, xq = coords[p], coords[q]
        if kind == "sym":
            coords[p], coords[q] = xq, xp
        else:
            coords[p] = int(g.mult[a, xq])
            coords[q] = int(g.mult[b, xp])
        for i in range(n):
            if perm[i] == p:
                perm[i] = q
            elif perm[i] == q:
                perm[i] = p
    return WreathElement(tuple(coords), tuple(perm))


def run_walk(cfg: SimConfig) -> tuple[np.ndarray, np.ndarray]:
    """Simulate all trials; returns (coords, perms) arrays of shape
    (trials, n).  Tracks the inverse permutation internally so a step is
    O(1) per trial."""
    rng = np.random.default_rng(cfg.seed)
    T, n = cfg.trials, cfg.n
    wreath = cfg.kind != "sym"
    if wreath:
        go = cfg.g.order
        mult = np.asarray(cfg.g.mult, dtype=np.int64)
        ginv = np.asarray(cfg.g.inv, dtype=np.int64)
    coords = np.zeros((T, n), dtype=np.int64)
    pinv = np.tile(np.arange(n, dtype=np.int64), (T, 1))
    if cfg.mode == "continuized":
        steps = rng.poisson(cfg.t, size=T)
        kmax = int(steps.max()) if T else 0
    else:
        steps = np.full(T, cfg.k, dtype=np.int64)
        kmax = cfg.k
    rows = np.arange(T)
    for step in range(kmax):
        p = rng.integers(0, n, size=T)
        q = rng.integers(0, n, size=T)
        if wreath:
            a = rng.integers(0, go, size=T)
            b = ginv[a] if cfg.kind == "paired" else rng.integers(0, go, size=T)
        active = steps > step
        swap = active & (p != q)
        r = rows[swap]
        pp, qq = p[swap], q[swap]
        if wreath:
            xp = coords[r, pp].copy()
            xq = coords[r, qq]
            coords[r, pp] = mult[a[swap], xq]
            coords[r, qq] = mult[b[swap], xp]
        else:
            xp = coords[r, pp].copy()
            coords[r, pp] = coords[r, qq]
            coords[r, qq] = xp
        tmp = pinv[r, pp].copy()
        pinv[r, pp] = pinv[r, qq]
        pinv[r, qq] = tmp
        if wreath:
            stay = active & (p == q)
            r2 = rows[stay]
            pp2 = p[stay]
            coords[r2, pp2] = mult[a[stay], coords[r2, pp2]]
    perms = np.empty_like(pinv)
    np.put_along_axis(perms, pinv, np.broadcast_to(np.arange(n), (T, n)), axis=1)
    return coords, perms


def encode_states(coords: np.ndarray, perms: np.ndarray, g_order: int) -> np.ndarray:
    """Element indices in the explicit-table order: coords major (first
    coordinate most significant), permutations in lexicographic rank."""
    T, n = coords.shape
    idx = np.zeros(T, dtype=np.int64)
    for i in range(n):
        idx = idx * g_order + coords[:, i]
    rank = np.zeros(T, dtype=np.int64)
    for i in range(n):
        smaller = np.zeros(T, dtype=np.int64)
        for j in range(i + 1, n):
            smaller += perms[:, j] < perms[:, i]
        rank = rank * (n - i) + smaller
    return idx * math.factorial(n) + rank


def run_walk_indices(cfg: SimConfig) -> np.ndarray:
    coords, perms = run_walk(cfg)
    go = cfg.g.order if cfg.g is not None else 1
    return encode_states(coords, perms, go)


def empirical_tv(samples: np.ndarray, reference, order: int,
                 blocks: int = 100) -> tuple[float, float]:
    """Plug-in TV between the empirical law of `samples` (element indices)
    and a reference distribution, with a grouped delete-one-block jackknife
    standard error.  reference: dict index -> prob, or None for uniform."""
    m = len(samples)
    if m < 2:
        raise ValueError("need at least 2 samples")
    pi = np.full(order, 1.0 / order)
    if reference is not None:
        pi = np.zeros(order)
        for i, p in reference.items():
            pi[i] = float(p)
    counts = np.bincount(samples, minlength=order).astype(np.float64)
    tv = 0.5 * np.abs(counts / m - pi).sum()
    B = min(blocks, m)
    edges = np.linspace(0, m, B + 1).astype(int)
    reps = []
    for b in range(B):
        blk = samples[edges[b]:edges[b + 1]]
        cb = np.bincount(blk, minlength=order).astype(np.float64)
        mb = len(blk)
        reps.append(0.5 * np.abs((counts - cb) / (m - mb) - pi).sum())
    reps = np.asarray(reps)
    se = math.sqrt((B - 1) / B * ((reps - reps.mean()) ** 2).sum())
    return float(tv), se


def one_step_counts(kind: str, n: int, g: GroupTable | None, draws: int,
                    seed: int) -> np.ndarray:
    """Element-index histogram of single steps from the identity; for
    goodness-of-fit checks against the exact measure."""
    cfg = SimConfig(kind=kind, n=n, g=g, k=1, trials=draws, seed=seed)
    idx = run_walk_indices(cfg)
    go = g.order if g is not None else 1
    order = go ** n * math.factorial(n)
    return np.bincount(idx, minlength=order)


# ---------------------------------------------------------------------------
# coupling experiments

def per_step_hit_probability(n: int) -> Fraction:
    """Chance a fixed coordinate is randomized in one independent-walk
    step: p=q=i plus the 2(n-1) ordered pairs touching i."""
    return Fraction(2 * n - 1, n * n)


def discrete_coupling_tail(n: int, k: int, trials: int, seed: int) -> float:
    """Empirical P{T > k} where T is the first step by which every
    coordinate has been randomized (both endpoints count on p != q steps,
    the single coordinate on p == q steps)."""
    rng = np.random.default_rng(seed)
    touched = np.zeros((trials, n), dtype=bool)
    rows = np.arange(trials)
    for _ in range(k):
        p = rng.integers(0, n, size=trials)
        q = rng.integers(0, n, size=trials)
        touched[rows, p] = True
        touched[rows, q] = True
    return float(np.mean(~touched.all(axis=1)))


def discrete_coupling_bound(n: int, k: int) -> float:
    """Union bound n (1 - 1/n)^{2k} on the tail above."""
    return n * (1.0 - 1.0 / n) ** (2 * k)


@dataclass
class CouplingReport:
    n: int
    trials: int
    seed: int
    t_samples: np.ndarray = field(repr=False)
    tstar_samples: np.ndarray = field(repr=False)
    rows: list = field(default_factory=list)

    columns = ("c", "threshold", "empirical_tail", "limit", "stderr", "trials", "seed")


def _connectivity_time(n: int, rng, chunk: int = 512) -> float:
    """Time for the pair-event graph to connect.  Pair events form a
    Poisson stream at aggregate rate (n-1)/n, each joining a uniform
    unordered pair."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    t = 0.0
    mean_gap = n / (n - 1.0)
    while True:
        gaps = rng.exponential(mean_gap, size=chunk)
        i_arr = rng.integers(0, n, size=chunk)
        j_arr = rng.integers(0, n - 1, size=chunk)
        for e in range(chunk):
            t += gaps[e]
            i = i_arr[e]
            j = j_arr[e]
            if j >= i:
                j += 1
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                comps -= 1
                if comps == 1:
                    return t


def coupling_experiment(n: int, trials: int, c_values, seed: int) -> CouplingReport:
    """Graph-connectivity coupling times for the paired walk's continuized
    chain.  T = connectivity time of the pair-event graph; T* adds an
    independent Exp(mean n) wait for the next single-coordinate event
    (aggregate rate 1/n, memoryless past T).  Emits, per c, a T row with
    the limit 1 - exp(-e^{-2c}) and a T* row with the envelope 2e^{-c};
    threshold = (1/2) n log n + c n in continuous time."""
    if n > 10 ** 4 or trials > 10 ** 6:
        raise ValueError("caps: n <= 1e4, trials <= 1e6")
    rng = np.random.default_rng(seed)
    ts = np.empty(trials)
    for i in range(trials):
        ts[i] = _connectivity_time(n, rng)
    tstars = ts + rng.exponential(float(n), size=trials)
    rows = []
    for c in c_values:
        thr = 0.5 * n * math.log(n) + c * n
        for samples, limit in (
            (ts, 1.0 - math.exp(-math.exp(-2.0 * c))),
            (tstars, 2.0 * math.exp(-c)),
        ):
            tail = float(np.mean(samples > thr))
            se = math.sqrt(tail * (1.0 - tail) / trials)
            rows.append(
                {
                    "c": c,
                    "threshold": thr,
                    "empirical_tail": tail,
                    "limit": limit,
                    "stderr": se,
                    "trials": trials,
                    "seed": seed,
                }
            )
    return CouplingReport(
        n=n, trials=trials, seed=seed, t_samples=ts, tstar_samples=tstars, rows=rows
    )
