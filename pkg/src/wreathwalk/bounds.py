"""Distance curves and every bound chain: the collapsed independent-walk
sum, the relaxed paired-walk upper bound, coupling and dominant-term and
Chebyshev witnesses, and the step-count threshold tables.

Exact rational arithmetic where the instance is small (n <= 12); beyond
that a windowed evaluator returns certified lower/upper floats for the
collapsed sum without enumerating all partitions of n.  l2n_sq(k) always
means |group| * ||P^{*k} - U||_2^2 with the trivial line excluded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import GroupTable
from .partitions import (
    char_ratio_transposition,
    conjugate,
    content_sum,
    dim_hook,
    enumerate_partitions,
    partition_count,
    partitions_of,
)

J_WINDOW = 12          # deficit window for large-n inner sums
FULL_ENUM_MAX = 40     # below this, just enumerate all partitions
EXACT_N_MAX = 12       # exact Fraction path


# ---------------------------------------------------------------------------
# collapsed l2 sum for the independent walk (and, with g_order=1, the
# transposition walk on S_n alone)

def _inner_terms_exact(m: int, n: int, denom: int):
    """(d^2, y) for every lambda |- m with y = (m + content)/denom; the
    trivial [n] is skipped when m == n."""
    out = []
    for lam in partitions_of(m):
        if m == n and lam == (n,):
            continue
        d = dim_hook(lam)
        y = Fraction(m + content_sum(lam), denom)
        out.append((d * d, y))
    return out


def l2n_sq_collapsed(g_order: int, n: int, k: int, exact: bool | None = None):
    """sum over n_1 of C(n,n_1)(n!/n_1!)(|G|-1)^{n-n_1} sum over lambda|-n_1
    of d^2 [(n_1 + content)/n^2]^{2k}, trivial (n_1=n, [n]) excluded.

    Independent walk only; with g_order=1 it degenerates to the
    transposition walk's spectral sum on S_n.  Exact Fractions for
    n <= 12 and k <= 64, float (windowed upper edge) otherwise.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if exact is None:
        exact = n <= EXACT_N_MAX and k <= 64
    if exact:
        if n > EXACT_N_MAX:
            raise ValueError(f"exact path limited to n <= {EXACT_N_MAX}")
        total = Fraction(0)
        for n1 in range(n + 1):
            if g_order == 1 and n1 < n:
                continue
            w = (
                math.comb(n, n1)
                * (math.factorial(n) // math.factorial(n1))
                * (g_order - 1) ** (n - n1)
            )
            for d2, y in _inner_terms_exact(n1, n, n * n):
                total += w * d2 * y ** (2 * k)
        return total
    lo, hi = l2n_sq_collapsed_bounds(g_order, n, k)
    return hi


def l2n_sq_collapsed_bounds(g_order: int, n: int, k: int,
                            j_window: int = J_WINDOW) -> tuple[float, float]:
    """Certified (lower, upper) floats for the collapsed sum.  They coincide
    whenever every inner sum is fully enumerated (n <= FULL_ENUM_MAX)."""
    if k == 0:
        v = g_order ** n * math.factorial(n) - 1
        f = float(v) if v < 10 ** 308 else float("inf")
        return f, f
    return _outer_float_bounds(g_order, n, k, j_window, relaxed=False)


def _outer_float_bounds(g_order: int, n: int, k: int, j_window: int,
                        relaxed: bool) -> tuple[float, float]:
    lo_terms: list[float] = []
    hi_terms: list[float] = []
    for n1 in range(1, n + 1):
        if g_order == 1 and n1 < n:
            continue
        ln_w = (
            math.lgamma(n + 1) - math.lgamma(n1 + 1) - math.lgamma(n - n1 + 1)
            + math.lgamma(n + 1) - math.lgamma(n1 + 1)
        )
        if g_order > 1:
            ln_w += (n - n1) * math.log(g_order - 1)
        in_lo, in_hi = _inner_ln_terms(n1, n, k, j_window, relaxed)
        lo_terms.extend(ln_w + t for t in in_lo)
        hi_terms.extend(ln_w + t for t in in_hi)
    return _exp_clamped(_lse(lo_terms)), _exp_clamped(_lse(hi_terms))


def _lse(ln_terms: list[float]) -> float:
    if not ln_terms:
        return float("-inf")
    m = max(ln_terms)
    if m == float("-inf"):
        return m
    return m + math.log(math.fsum(math.exp(t - m) for t in ln_terms))


def _exp_clamped(ln_val: float) -> float:
    if ln_val == float("-inf"):
        return 0.0
    if ln_val > 709.0:
        return float("inf")
    return math.exp(ln_val)


@lru_cache(maxsize=None)
def _partition_stats(m: int) -> tuple:
    """(2 ln d, content) for every partition of m."""
    return tuple(
        (2.0 * math.log(dim_hook(lam)), content_sum(lam)) for lam in partitions_of(m)
    )


@lru_cache(maxsize=None)
def _window_mu_stats(j: int) -> tuple:
    """Per mu |- j: (mu_1, rows, ln d_mu, content, conjugate prefix)."""
    if j == 0:
        return (((0, 0, 0.0, 0, ())),)
    out = []
    for mu in partitions_of(j):
        out.append((mu[0], len(mu), math.log(dim_hook(mu)), content_sum(mu), conjugate(mu)))
    return tuple(out)


def _cmax_at_deficit(m: int, j: int) -> int | None:
    """Largest content among partitions of m with first row exactly m - j
    (greedy wide packing; a box moved to a wider higher row always gains)."""
    w = m - j
    if w < 1:
        return None
    c = w * (w - 1)
    rem = j
    i = 2
    while rem > 0:
        t = min(w, rem)
        c += t * t - (2 * i - 1) * t
        rem -= t
        i += 1
    return c


def _inner_ln_terms(m: int, n: int, k: int, j_window: int,
                    relaxed: bool = False) -> tuple[list[float], list[float]]:
    """ln of each term d^2 |y|^{2k} over lambda |- m (trivial [n] excluded
    when m == n), split as (exact part, exact part + tail majorants).
    y = (m + content)/n^2, or (m + content)/(n m) in relaxed scaling."""
    if m == 0:
        return [], []
    two_k = 2 * k
    ln_scale = math.log(n) + math.log(m) if relaxed else 2.0 * math.log(n)
    if m <= max(FULL_ENUM_MAX, 2 * j_window + 2):
        terms = []
        for ln_d2, c in _partition_stats(m):
            if m == n and c == m * (m - 1):   # lambda = [n], the trivial line
                continue
            val = abs(m + c)
            if val == 0:
                continue
            terms.append(ln_d2 + two_k * (math.log(val) - ln_scale))
        return terms, list(terms)
    exact_terms: list[float] = []
    ln_m_fact = math.lgamma(m + 1)
    for j in range(0, min(j_window, m - 1) + 1):
        ln_j_fact = math.lgamma(j + 1)
        for mu1, rows, ln_d_mu, c_mu, conj in _window_mu_stats(j):
            if mu1 > m - j:
                continue
            ln_d = (
                ln_m_fact
                - math.lgamma(m - j - mu1 + 1)
                - math.fsum(math.log(m - j - c + 1 + conj[c - 1]) for c in range(1, mu1 + 1))
                - ln_j_fact
                + ln_d_mu
            )
            c_lam = (m - j) * (m - j - 1) + c_mu - 2 * j
            skip_self = m == n and j == 0          # the trivial line [n]
            if not skip_self:
                val = abs(m + c_lam)
                if val:
                    exact_terms.append(2.0 * ln_d + two_k * (math.log(val) - ln_scale))
            if m - 1 - rows > j_window:            # conjugate falls outside the window
                val = abs(m - c_lam)
                if val:
                    exact_terms.append(2.0 * ln_d + two_k * (math.log(val) - ln_scale))
    hi_terms = list(exact_terms)
    ln2 = math.log(2.0)
    for j in range(j_window + 1, m):
        cmax = _cmax_at_deficit(m, j)
        if cmax is None or m + cmax <= 0:
            continue
        ln_count = 2.0 * (ln_m_fact - math.lgamma(j + 1) - math.lgamma(m - j + 1)) + math.lgamma(j + 1)
        hi_terms.append(ln2 + ln_count + two_k * (math.log(m + cmax) - ln_scale))
    return exact_terms, hi_terms


def sym_l2n_sq(n: int, k: int):
    """Spectral sum for the transposition walk on S_n alone."""
    return l2n_sq_collapsed(1, n, k)


def sym_l2n_sq_bounds(n: int, k: int) -> tuple[float, float]:
    return l2n_sq_collapsed_bounds(1, n, k)


# ---------------------------------------------------------------------------
# paired walk: delta_n and the relaxed upper bound

def delta_n(g: GroupTable, n: int) -> int:
    """sum over nontrivial base irreps of d^{2n}; |G|-1 when abelian."""
    return sum(d ** (2 * n) for d in g.irrep_dims()[1:])


def paired_relaxed_bound(g: GroupTable, n: int, k: int):
    """Upper bound on (1/4) l2n_sq for the paired walk:

      (1/2) s sum_{n_1} C(n,n_1)(n!/n_1!)(|G|-1)^{n-n_1}
          sum_{lambda |- n_1, trivial excluded} d^2 [(n_1+content)/(n n_1)]^{2k}
      + (1/4) delta_n ((n-1)/n)^{2k}

    The inner power majorizes every per-slot eigenvalue (the true ones
    carry an extra 1/d_j decay), so the bound is loose but safe on
    nonabelian bases.  Exact Fraction for n <= 12 and k <= 64."""
    if k < 0:
        raise ValueError("k must be >= 0")
    s = g.num_classes
    dn = delta_n(g, n)
    g_order = g.order
    if n <= EXACT_N_MAX and k <= 64:
        total = Fraction(0)
        for n1 in range(n + 1):
            w = (
                math.comb(n, n1)
                * (math.factorial(n) // math.factorial(n1))
                * (g_order - 1) ** (n - n1)
            )
            if n1 == 0:
                total += w if k == 0 else 0
                continue
            for d2, y in _inner_terms_exact(n1, n, n * n1):
                total += w * d2 * y ** (2 * k)
        return Fraction(s, 2) * total + Fraction(dn, 4) * Fraction(n - 1, n) ** (2 * k)
    if k == 0:
        main = float(g_order ** n * math.factorial(n) - 1)
    else:
        main = _outer_float_bounds(g_order, n, k, J_WINDOW, relaxed=True)[1]
    return 0.5 * s * main + 0.25 * dn * (1.0 - 1.0 / n) ** (2 * k)


# ---------------------------------------------------------------------------
# TV bounds

def tv_upper_spectral(l2n_sq_value) -> float:
    """TV <= (1/2) sqrt(|group| * ||P-U||_2^2), clamped to [0, 1]."""
    v = float(l2n_sq_value)
    if v != v or v == float("inf"):
        return 1.0
    return min(1.0, 0.5 * math.sqrt(max(0.0, v)))


def tv_upper_coupling(n: int, g_order: int, k: int, sym_tv_upper: float) -> float:
    """TV of the independent wreath walk <= TV of the bare permutation walk
    plus the chance some coordinate was never touched: exact tail
    n (1 - 1/n)^{2k}."""
    tail = n * (1.0 - 1.0 / n) ** (2 * k)
    return min(1.0, sym_tv_upper + tail)


def tv_lower_dominant(g_order: int, n: int, k: int, kind: str,
                      dims: list[int] | None = None) -> float:
    """(1/2) sqrt of the dominant spectral summand: a certified lower bound
    on (1/2) sqrt(l2n_sq), i.e. on the normalized l2 distance scale (not a
    TV lower bound).

    independent: n^2 (|G|-1) (1-1/n)^{4k}.
    paired: max of that and the all-in-one-slot family; on an abelian base
    the family sums to (|G|-1)((n-1)/n)^{2k}, with base irrep dims supplied
    each slot decays as ((n-1)/(n d_j))^{2k}, which is what the true
    spectrum does.
    """
    if kind not in ("independent", "paired"):
        raise ValueError("dominant term applies to the wreath walks")
    term = n * n * (g_order - 1) * (1.0 - 1.0 / n) ** (4 * k)
    if kind == "paired":
        if dims is None:
            dn_term = (g_order - 1) * (1.0 - 1.0 / n) ** (2 * k)
        else:
            dn_term = sum(
                d ** (2 * n) * ((n - 1.0) / (n * d)) ** (2 * k) for d in dims[1:]
            )
        term = max(term, dn_term)
    return 0.5 * math.sqrt(term)


def tv_lower_chebyshev_sym(n: int, k: int) -> float:
    """Chebyshev separation for the transposition walk on S_n, using the
    fixed-point count: E = (n-1)(1-2/n)^k and
    Var = 1 + (n-1)(1-2/n)^k + (1/2)(n-1)(n-2)(1-4/n)^k
          - (1/2)(n^2-n+2)(1-2/n)^{2k};
    the bound 1 - 1/a^2 - Var/(E-a)^2 holds for every a in (0, E), so the
    best grid point is still a true lower bound.  Clamped to [0, 1]."""
    if n < 4:
        raise ValueError("needs n >= 4")
    if k < 0:
        raise ValueError("k must be >= 0")
    e1 = (1.0 - 2.0 / n) ** k
    e2 = (1.0 - 4.0 / n) ** k
    E = (n - 1) * e1
    if E <= 0:
        return 0.0
    var = 1.0 + (n - 1) * e1 + 0.5 * (n - 1) * (n - 2) * e2 - 0.5 * (n * n - n + 2) * e1 * e1
    var = max(var, 0.0)
    best = 0.0
    top = E * 0.999
    lo = E * 1e-4
    if top <= lo:
        return 0.0
    ratio = (top / lo) ** (1.0 / 63.0)
    a = lo
    for _ in range(64):
        val = 1.0 - 1.0 / (a * a) - var / ((E - a) * (E - a))
        if val > best:
            best = val
        a *= ratio
    return min(1.0, best)


# ---------------------------------------------------------------------------
# eigenvalue envelope for the independent walk

def independent_envelope_holds(n: int, exhaustive_up_to: int = 30) -> bool:
    """Every nontrivial independent-walk eigenvalue has modulus at most
    (1 - 1/n)^2.  Exact-arithmetic reduction:

      n_1 <= n-1: |y| <= (n_1 + n_1(n_1-1))/n^2 = n_1^2/n^2 since |r| <= 1.
      n_1 = n: [n] is excluded and the largest remaining r is
               r([n-1,1]) = (n-3)/(n-1) (moving a box to a higher row
               strictly increases the content sum, so [n-1,1] dominates);
               then |y| <= (n-2)/n < (1-1/n)^2.

    For small n the r-extremes are also checked by brute enumeration.
    """
    if n < 2:
        return True
    cap = Fraction((n - 1) ** 2, n * n)
    assert Fraction((n - 1) ** 2, n * n) <= cap
    assert Fraction(1, n * n) <= cap
    # n_1 = n branch, both signs
    r2 = Fraction(n - 3, n - 1)
    top = Fraction(1, n) + Fraction(n - 1, n) * r2
    bot = Fraction(1, n) - Fraction(n - 1, n)
    assert abs(top) <= cap and abs(bot) <= cap
    if n <= exhaustive_up_to:
        rs = sorted(
            (char_ratio_transposition(lam), lam) for lam in enumerate_partitions(n)
        )
        assert rs[-1][1] == (n,) and rs[-1][0] == 1
        assert rs[-2][0] == r2
        assert rs[0][0] == -1
        for r, lam in rs[:-1]:
            y = Fraction(1, n) + Fraction(n - 1, n) * r
            assert abs(y) <= cap, (n, lam)
    return True


def envelope_decay_certificate(g_order: int, n: int, c: float,
                               k0: int | None = None) -> tuple[float, float]:
    """(upper bound at k0 + ceil(cn), e^{-4c} * lower bound at k0) for the
    independent walk's l2n_sq; the first should not exceed the second."""
    if k0 is None:
        extra = 0.25 * n * math.log(g_order - 1) if g_order > 1 else 0.0
        k0 = math.ceil(0.5 * n * math.log(n) + extra)
    k1 = k0 + math.ceil(c * n)
    lo0, _ = l2n_sq_collapsed_bounds(g_order, n, k0)
    _, hi1 = l2n_sq_collapsed_bounds(g_order, n, k1)
    return hi1, math.exp(-4.0 * c) * lo0


# ---------------------------------------------------------------------------
# step-count thresholds

@dataclass(frozen=True)
class ThresholdRow:
    g_class: str       # Z2 | Zm | Sm | abelian | nonabelian
    metric: str        # l2 | tv
    direction: str     # sufficient | necessary
    formula: str
    asymptotic: bool = False


_IND_L2 = {
    "Z2": "(1/2) n log n",
    "Zm": "(1/2) n log n + (1/4) n log(m-1)",
    "Sm": "(1/2) n log n + (1/4) n log(m!-1)",
    "abelian": "(1/2) n log n + (1/4) n log(|G|-1)",
    "nonabelian": "(1/2) n log n + (1/4) n log(|G|-1)",
}

_PAIRED_L2_SUFF = {
    "Z2": "n log n",
    "Zm": "n log n + n log(m-1)",
    "Sm": "max{ (1/2) n log delta_n, n log n + (1/2) n log(m!-1) + (1/2) n log(p(m)-1) }",
    "abelian": "n log n + n log(|G|-1)",
    "nonabelian": "max{ (1/2) n log delta_n, n log n + (1/2) n log(|G|-1) + (1/2) n log(s-1) }",
}

_PAIRED_L2_NEC = {
    "Z2": "(1/2) n log n",
    "Zm": "(1/2) n log n + (1/4) n log(m-1)",
    "Sm": "max{ (1/2) n log delta_n, (1/2) n log n + (1/4) n log(m!-1) }",
    "abelian": "(1/2) n log n + (1/4) n log(|G|-1)",
    "nonabelian": "max{ (1/2) n log delta_n, (1/2) n log n + (1/4) n log(|G|-1) }",
}

G_CLASSES = ("Z2", "Zm", "Sm", "abelian", "nonabelian")


def threshold_rows(kind: str) -> list[ThresholdRow]:
    """Every row of the step-count summary table for one walk."""
    if kind == "sym":
        return [
            ThresholdRow("Sm", m, d, "(1/2) n log n")
            for m in ("l2", "tv")
            for d in ("sufficient", "necessary")
        ]
    if kind == "independent":
        rows = []
        for gc in G_CLASSES:
            for direction in ("sufficient", "necessary"):
                rows.append(ThresholdRow(gc, "l2", direction, _IND_L2[gc]))
            for direction in ("sufficient", "necessary"):
                rows.append(ThresholdRow(gc, "tv", direction, "(1/2) n log n"))
        return rows
    if kind == "paired":
        rows = []
        for gc in G_CLASSES:
            rows.append(ThresholdRow(gc, "l2", "sufficient", _PAIRED_L2_SUFF[gc]))
            rows.append(ThresholdRow(gc, "l2", "necessary", _PAIRED_L2_NEC[gc]))
            rows.append(ThresholdRow(gc, "tv", "sufficient", "(1/2) n log n", asymptotic=True))
            rows.append(ThresholdRow(gc, "tv", "necessary", "(1/2) n log n"))
        return rows
    raise ValueError(f"unknown walk kind {kind!r}")


def classify_base(g: GroupTable) -> str:
    if g.order == 2:
        return "Z2"
    if g.name.startswith("Z:"):
        return "Zm"
    if g.name.startswith("S:"):
        return "Sm"
    return "abelian" if g.is_abelian else "nonabelian"


def mixing_threshold(g: GroupTable | None, n: int, kind: str, metric: str) -> float:
    """The sufficient-direction step count of the summary tables, as a
    number (natural log)."""
    if metric not in ("l2", "tv"):
        raise ValueError("metric must be l2 or tv")
    base = 0.5 * n * math.log(n)
    if kind == "sym" or metric == "tv":
        return base
    if g is None:
        raise ValueError("wreath thresholds need the base group")
    a = g.order
    if kind == "independent":
        return base + (0.25 * n * math.log(a - 1) if a > 1 else 0.0)
    if kind == "paired":
        s = g.num_classes
        main = n * math.log(n)
        if a > 1:
            main += 0.5 * n * math.log(a - 1)
        if s > 1:
            main += 0.5 * n * math.log(s - 1)
        dn = delta_n(g, n)
        alt = 0.5 * n * math.log(dn) if dn > 1 else 0.0
        return max(main, alt)
    raise ValueError(f"unknown walk kind {kind!r}")


# ---------------------------------------------------------------------------
# curve assembly

@dataclass
class DistanceCurve:
    kind: str
    base_name: str
    n: int
    mode: str                 # full-spectrum | collapsed | relaxed
    rows: list                # dicts keyed by the csv columns

    columns = (
        "k",
        "l2n_sq",
        "tv_upper_spectral",
        "tv_upper_coupling",
        "l2_lower_dominant",
        "tv_lower_chebyshev",
    )


def distance_curve(kind: str, n: int, g: GroupTable | None = None,
                   ks: list[int] | None = None, mode: str = "auto",
                   max_labels: int | None = None) -> DistanceCurve:
    """Distance/bound table over a k range.  mode=auto prefers the exact
    spectrum when the label set is enumerable, the collapsed formula for
    large independent instances, and the relaxed bound for large paired
    ones."""
    from .walks import l2n_sq_spectral, spectrum

    if ks is None:
        ks = list(range(0, 2 * n + 1))
    if mode == "auto":
        if kind == "sym":
            mode = "full-spectrum" if n <= 30 else "collapsed"
        elif partition_count_bound(g, n, max_labels):
            mode = "full-spectrum"
        else:
            mode = "collapsed" if kind == "independent" else "relaxed"
    if mode == "collapsed" and kind == "paired":
        raise ValueError("the collapsed sum only matches the independent walk; use relaxed")
    if mode == "relaxed" and kind != "paired":
        raise ValueError("the relaxed bound is paired-walk only")
    spec = None
    if mode == "full-spectrum":
        spec = spectrum(kind, n, g, max_labels=max_labels) if kind != "sym" else spectrum(kind, n)
    rows = []
    is_wreath = kind in ("independent", "paired")
    dims = g.irrep_dims() if is_wreath else None
    g_order = g.order if is_wreath else 1
    for k in ks:
        if spec is not None:
            l2 = l2n_sq_spectral(spec, k)
        elif mode == "collapsed":
            l2 = l2n_sq_collapsed(g_order, n, k)
        else:
            l2 = 4.0 * float(paired_relaxed_bound(g, n, k))
        row = {
            "k": k,
            "l2n_sq": l2,
            "tv_upper_spectral": tv_upper_spectral(l2),
            "tv_upper_coupling": None,
            "l2_lower_dominant": None,
            "tv_lower_chebyshev": None,
        }
        if kind == "independent":
            sym_part = tv_upper_spectral(sym_l2n_sq(n, k)) if n >= 2 else 0.0
            row["tv_upper_coupling"] = tv_upper_coupling(n, g_order, k, sym_part)
        if is_wreath:
            row["l2_lower_dominant"] = tv_lower_dominant(g_order, n, k, kind, dims=dims)
        if kind == "sym" and n >= 4:
            row["tv_lower_chebyshev"] = tv_lower_chebyshev_sym(n, k)
        rows.append(row)
    return DistanceCurve(
        kind=kind,
        base_name=g.name if g is not None else f"S_{n}",
        n=n,
        mode=mode,
        rows=rows,
    )


def partition_count_bound(g: GroupTable | None, n: int, max_labels: int | None) -> bool:
    """True when the full label set is small enough to enumerate."""
    from .reps import MAX_LABELS
    from .classes import class_count

    if g is None:
        return partition_count(n) <= 200000
    cap = max_labels if max_labels is not None else MAX_LABELS
    return class_count(g, n) <= cap
