"""Wreath product G wr S_n: elements, arithmetic, and explicit tables.

An element is (coords, perm): coords in G^n (base-group indices) and perm a
permutation tuple with perm[i] the image of position i.  Multiplication:

    (y; sigma) * (x; pi) = (y_i * x_{sigma^{-1}(i)}; sigma pi)

so the identity is ((0,...,0), (0,1,...,n-1)) and
(x; pi)^{-1} = (x_{pi(i)}^{-1}; pi^{-1}).
"""
from __future__ import annotations

import itertools
import math
from typing import NamedTuple

import numpy as np

from .groups import GroupTable, conjugacy_classes

MAX_WREATH_ORDER = 5000


class WreathElement(NamedTuple):
    coords: tuple
    perm: tuple


def wreath_identity(n: int) -> WreathElement:
    return WreathElement((0,) * n, tuple(range(n)))


def perm_inverse(perm: tuple) -> tuple:
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return tuple(out)


def wreath_multiply(g: GroupTable, a: WreathElement, b: WreathElement) -> WreathElement:
    y, sigma = a
    x, pi = b
    sinv = perm_inverse(sigma)
    mult = g.mult
    coords = tuple(int(mult[y[i], x[sinv[i]]]) for i in range(len(y)))
    perm = tuple(sigma[pi[i]] for i in range(len(pi)))
    return WreathElement(coords, perm)


def wreath_inverse(g: GroupTable, a: WreathElement) -> WreathElement:
    x, pi = a
    inv = g.inv
    coords = tuple(int(inv[x[pi[i]]]) for i in range(len(x)))
    return WreathElement(coords, perm_inverse(pi))


def wreath_order(g_order: int, n: int) -> int:
    return g_order ** n * math.factorial(n)


def enumerate_wreath_elements(g: GroupTable, n: int):
    """All of G wr S_n in lexicographic order, coords major, permutation
    minor; the identity comes first."""
    for coords in itertools.product(range(g.order), repeat=n):
        for perm in itertools.permutations(range(n)):
            yield WreathElement(coords, perm)


class WreathTable(NamedTuple):
    group: GroupTable        # the wreath product as a plain GroupTable
    base: GroupTable
    n: int
    elements: list           # index -> WreathElement
    index: dict              # WreathElement -> index


def build_wreath_table(g: GroupTable, n: int, max_order: int = MAX_WREATH_ORDER) -> WreathTable:
    """Materialize G wr S_n as an explicit multiplication table.

    Refuses orders above max_order (default 5000).
    """
    order = wreath_order(g.order, n)
    if order > max_order:
        raise ValueError(f"wreath order {order} exceeds cap {max_order}")
    elements = list(enumerate_wreath_elements(g, n))
    index = {e: i for i, e in enumerate(elements)}
    assert elements[0] == wreath_identity(n)
    mult = np.empty((order, order), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mult[i, j] = index[wreath_multiply(g, a, b)]
    inv = np.empty(order, dtype=np.int64)
    for i, a in enumerate(elements):
        inv[i] = index[wreath_inverse(g, a)]
    classes, class_of = conjugacy_classes(mult, inv)
    table = GroupTable(
        name=f"{g.name} wr S_{n}",
        mult=mult,
        inv=inv,
        labels=[f"{e.coords}|{e.perm}" for e in elements],
        classes=classes,
        class_of=class_of,
        elements=elements,
    )
    return WreathTable(group=table, base=g, n=n, elements=elements, index=index)
