"""Walk measures on G wr S_n (and S_n) and their exact spectra.

Three kinds:

  sym          on S_n:      P(e) = 1/n, P(tau) = 2/n^2 per transposition.
  independent  on G wr S_n: P(id) = 1/(|G|n); P(u;e) = 1/(|G|n^2) per
               element with one non-identity coordinate; P(v;tau) =
               2/(|G|^2 n^2) per transposition element.
  paired       like independent, but (v;tau) carries mass 2/(|G| n^2) and
               only on the class whose cycle product is the identity
               (the two coordinates mutually inverse).

All per-element masses are exact Fractions.  Eigenvalues (the walks are
class measures, so Fourier transforms are scalars) are exact Fractions:

  sym          1/n + ((n-1)/n) r(lambda)
  independent  n_1/n^2 + [n_1(n_1-1)/n^2] r(lambda_1)
  paired       n_1/n^2 + sum_j [n_j(n_j-1)/n^2] r(lambda_j) / d_j

where d_j is the dimension of the j-th base irrep (so the division is
invisible on abelian bases).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .classes import support_classes, support_tag_of
from .groups import GroupTable
from .partitions import Partition, char_ratio_transposition, dim_partition, enumerate_partitions
from .reps import IrrepLabel, enumerate_labels, irrep_dimension, support_characters

WALK_KINDS = ("sym", "independent", "paired")


@dataclass
class WalkMeasure:
    kind: str
    n: int
    base: GroupTable | None                  # None for the sym walk
    class_probs: dict                        # tag -> per-element Fraction
    support: list = field(default_factory=list)  # (tag, type, size)

    def total_mass(self) -> Fraction:
        if self.kind == "sym":
            return self.class_probs[("id",)] + Fraction(self.n * (self.n - 1), 2) * self.class_probs[("tau",)]
        return sum(self.class_probs[tag] * size for tag, _, size in self.support)

    def element_prob(self, w) -> Fraction:
        """Mass of a single element; WreathElement for wreath walks, a
        permutation tuple for sym."""
        if self.kind == "sym":
            perm = w
            n = len(perm)
            fixed = sum(1 for i in range(n) if perm[i] == i)
            if fixed == n:
                return self.class_probs[("id",)]
            if fixed == n - 2:
                return self.class_probs[("tau",)]
            return Fraction(0)
        tag = support_tag_of(self.base, w)
        if tag is None:
            return Fraction(0)
        return self.class_probs.get(tag, Fraction(0))


def build_measure(kind: str, n: int, g: GroupTable | None = None) -> WalkMeasure:
    if kind not in WALK_KINDS:
        raise ValueError(f"walk kind must be one of {WALK_KINDS}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "sym":
        probs = {("id",): Fraction(1, n), ("tau",): Fraction(2, n * n)}
        m = WalkMeasure(kind=kind, n=n, base=None, class_probs=probs)
        assert m.total_mass() == 1
        return m
    if g is None:
        raise ValueError("wreath walks need a base group")
    a = g.order
    probs = {("id",): Fraction(1, a * n)}
    for k in range(2, g.num_classes + 1):
        probs[("u", k)] = Fraction(1, a * n * n)
    if n >= 2:
        for k in range(1, g.num_classes + 1):
            if kind == "independent":
                probs[("v", k)] = Fraction(2, a * a * n * n)
            else:  # paired: only mutually inverse pairs
                probs[("v", k)] = Fraction(2, a * n * n) if k == 1 else Fraction(0)
    support = support_classes(g, n)
    m = WalkMeasure(kind=kind, n=n, base=g, class_probs=probs, support=support)
    if n >= 2:
        assert m.total_mass() == 1
    else:
        # n = 1: no transpositions; mass sits on the u/id classes alone
        assert m.total_mass() == 1
    return m


def _r_or_zero(lam: Partition) -> Fraction:
    return char_ratio_transposition(lam) if sum(lam) >= 2 else Fraction(0)


def eigenvalue(measure: WalkMeasure, label) -> Fraction:
    """Closed-form Fourier scalar of the measure at the given irrep."""
    n = measure.n
    if measure.kind == "sym":
        lam: Partition = label
        if n == 1:
            return Fraction(1)
        return Fraction(1, n) + Fraction(n - 1, n) * _r_or_zero(lam)
    lab: IrrepLabel = label
    n1 = lab.type[0]
    if measure.kind == "independent":
        val = Fraction(n1, n * n)
        if n1 >= 2:
            val += Fraction(n1 * (n1 - 1), n * n) * char_ratio_transposition(lab.lambdas[0])
        return val
    # paired; the 1/d_j keeps the per-slot term consistent with the support
    # characters (see support_characters) -- it only matters off slot 1
    dims = measure.base.irrep_dims()
    val = Fraction(n1, n * n)
    for j, nj in enumerate(lab.type):
        if nj >= 2:
            r = char_ratio_transposition(lab.lambdas[j])
            val += Fraction(nj * (nj - 1), n * n) * r / dims[j]
    return val


def fourier_class_function(measure: WalkMeasure, label):
    """Fourier transform of the measure at the irrep, evaluated from class
    data alone: (1/d) sum_classes P_i n_i chi_i.  Exact when the base table
    is exact; equals eigenvalue() in all cases (the independent route
    validates the support-character formulas)."""
    n = measure.n
    if measure.kind == "sym":
        lam = label
        if n == 1:
            return Fraction(1)
        d = dim_partition(lam)
        chi_tau = d * char_ratio_transposition(lam)
        return measure.class_probs[("id",)] + measure.class_probs[("tau",)] * Fraction(
            n * (n - 1), 2
        ) * chi_tau / d
    g = measure.base
    sc = support_characters(g, n, label)
    d = sc.dim
    acc = measure.class_probs[("id",)] * d  # chi(id) = d
    for tag, _, size in measure.support:
        if tag[0] == "u":
            acc = acc + _times(measure.class_probs[tag] * size, sc.chi_u[tag[1]])
        elif tag[0] == "v":
            p = measure.class_probs[tag]
            if p:
                acc = acc + _times(p * size, sc.chi_v[tag[1]])
    return _times(Fraction(1, d), acc)


def _times(coeff: Fraction, value):
    if isinstance(value, complex):
        return float(coeff) * value
    return coeff * value


@dataclass(frozen=True)
class SpectralLine:
    value: Fraction
    multiplicity: int
    witness: object      # IrrepLabel (wreath) or Partition (sym)


@dataclass
class Spectrum:
    kind: str
    n: int
    base_name: str
    group_order: int     # |G wr S_n| (or n! for sym)
    lines: list          # SpectralLine, descending by value

    def trivial_line(self) -> SpectralLine:
        return self.lines[0]

    def multiplicity_total(self) -> int:
        return sum(l.multiplicity for l in self.lines)


def spectrum(kind: str, n: int, g: GroupTable | None = None,
             max_labels: int | None = None) -> Spectrum:
    """Deduplicated exact spectrum of the walk's transition operator."""
    measure = build_measure(kind, n, g)
    acc: dict[Fraction, int] = {}
    witness: dict[Fraction, object] = {}
    if kind == "sym":
        for lam in enumerate_partitions(n):
            val = eigenvalue(measure, lam)
            d = dim_partition(lam)
            acc[val] = acc.get(val, 0) + d * d
            witness.setdefault(val, lam)
        total = math.factorial(n)
        base_name = f"S_{n}"
    else:
        kwargs = {} if max_labels is None else {"max_labels": max_labels}
        for lab in enumerate_labels(g, n, **kwargs):
            val = eigenvalue(measure, lab)
            d = irrep_dimension(g, n, lab)
            acc[val] = acc.get(val, 0) + d * d
            witness.setdefault(val, lab)
        total = g.order ** n * math.factorial(n)
        base_name = g.name
    lines = [
        SpectralLine(value=v, multiplicity=m, witness=witness[v])
        for v, m in sorted(acc.items(), reverse=True)
    ]
    assert sum(l.multiplicity for l in lines) == total
    assert lines[0].value == 1 and lines[0].multiplicity == 1, "walk must be ergodic"
    return Spectrum(kind=kind, n=n, base_name=base_name, group_order=total, lines=lines)


def return_probability(spec: Spectrum, k: int) -> Fraction:
    """P^{*k}(identity) = (1/|G|) sum multiplicity * value^k, exact."""
    if k < 0:
        raise ValueError("k must be >= 0")
    acc = Fraction(0)
    for line in spec.lines:
        acc += line.multiplicity * line.value ** k
    return acc / spec.group_order


def l2n_sq_spectral(spec: Spectrum, k: int):
    """|G| * ||P^{*k} - U||_2^2 = sum over nontrivial lines of
    multiplicity * value^{2k}.  Exact Fraction for k <= 64, float beyond."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k <= 64:
        acc = Fraction(0)
        for line in spec.lines[1:]:
            acc += line.multiplicity * line.value ** (2 * k)
        return acc
    acc = 0.0
    for line in spec.lines[1:]:
        if line.value == 0:
            continue
        ln = math.log(line.multiplicity) + 2 * k * math.log(abs(line.value))
        acc += math.exp(ln) if ln > -745 else 0.0
    return acc
