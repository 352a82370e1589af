"""Brute-force oracle on explicit group tables: exact transition matrices,
convolution powers, and distances.

Everything is exact rational arithmetic.  Matrices are stored as an integer
matrix over a common denominator so powers stay cheap; no code here touches
the spectral modules, so agreement between the two routes is evidence, not
circularity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .groups import GroupTable
from .walks import WalkMeasure


@dataclass
class TransitionMatrix:
    group: GroupTable
    num: list            # order x order ints
    den: int             # shared denominator

    @property
    def order(self) -> int:
        return len(self.num)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.num[i][j], self.den)

    def trace(self) -> Fraction:
        return Fraction(sum(self.num[i][i] for i in range(self.order)), self.den)


def measure_on_table(measure: WalkMeasure, g: GroupTable) -> dict[int, Fraction]:
    """Per-element masses of the measure on an explicit table; keys are
    element indices with nonzero mass."""
    if g.elements is None:
        raise ValueError("table must carry decoded elements")
    out = {}
    for i, e in enumerate(g.elements):
        p = measure.element_prob(e)
        if p:
            out[i] = p
    total = sum(out.values())
    if total != 1:
        raise ValueError(f"measure sums to {total} on this table")
    return out


def build_transition_matrix(g: GroupTable, measure: WalkMeasure) -> TransitionMatrix:
    """M[i][j] = P(e_j * e_i^{-1}): row = current state, column = next."""
    probs = measure_on_table(measure, g)
    den = math.lcm(*(p.denominator for p in probs.values()))
    order = g.order
    row_of_identity = [0] * order
    for idx, p in probs.items():
        row_of_identity[idx] = int(p * den)
    num = []
    mult = g.mult
    inv = g.inv
    for i in range(order):
        # e_j e_i^{-1} for all j, via one table row
        gi = int(inv[i])
        row = [0] * order
        for j in range(order):
            row[j] = row_of_identity[int(mult[j, gi])]
        num.append(row)
    return TransitionMatrix(group=g, num=num, den=den)


def _mat_mult(a: list, b: list) -> list:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matrix_power_traces(m: TransitionMatrix, k_max: int) -> list[Fraction]:
    """tr(M^k) for k = 0..k_max via repeated multiplication, exact."""
    order = m.order
    traces = [Fraction(order)]
    power = m.num
    den = m.den
    for k in range(1, k_max + 1):
        if k > 1:
            power = _mat_mult(power, m.num)
            den *= m.den
        traces.append(Fraction(sum(power[i][i] for i in range(order)), den))
    return traces


def _convolve_once(dist: list, support: dict, mult, order: int) -> list:
    nxt = [Fraction(0)] * order
    for s, ps in support.items():
        srow = mult[s]
        for x in range(order):
            if dist[x]:
                nxt[int(srow[x])] += ps * dist[x]
    return nxt


def convolution_power(g: GroupTable, measure: WalkMeasure, k: int) -> list[Fraction]:
    """P^{*k} as a dense vector over the table, by k sparse convolutions."""
    if k < 0:
        raise ValueError("k must be >= 0")
    order = g.order
    support = measure_on_table(measure, g)
    dist = [Fraction(0)] * order
    dist[0] = Fraction(1)
    for _ in range(k):
        dist = _convolve_once(dist, support, g.mult, order)
    assert sum(dist) == 1
    return dist


def convolution_curve(g: GroupTable, measure: WalkMeasure, ks: list):
    """Yield (k, P^{*k}) at the requested k values in one incremental pass.
    ks must be sorted ascending and nonnegative."""
    if ks and ks[0] < 0:
        raise ValueError("k must be >= 0")
    order = g.order
    support = measure_on_table(measure, g)
    dist = [Fraction(0)] * order
    dist[0] = Fraction(1)
    cur = 0
    for k in ks:
        if k < cur:
            raise ValueError("ks must be ascending")
        while cur < k:
            dist = _convolve_once(dist, support, g.mult, order)
            cur += 1
        assert sum(dist) == 1
        yield k, dist


def exact_distances(dist: list, order: int) -> dict:
    """tv, l1, l2 squared, and |G|*l2^2 of dist against uniform; exact."""
    u = Fraction(1, order)
    l1 = Fraction(0)
    l2_sq = Fraction(0)
    for p in dist:
        diff = p - u
        l1 += abs(diff)
        l2_sq += diff * diff
    return {
        "tv": l1 / 2,
        "l1": l1,
        "l2_sq": l2_sq,
        "l2n_sq": order * l2_sq,
    }


def trace_moment_check(m: TransitionMatrix, spectral_moments: list, k_max: int) -> list:
    """Deviations tr(M^k) - sum(mult * value^k) for k = 0..k_max; all should
    be exactly zero when the spectrum is right."""
    traces = matrix_power_traces(m, k_max)
    return [traces[k] - spectral_moments[k] for k in range(k_max + 1)]
