"""Type matrices against brute-force conjugation closure.

The closure check is the ground truth: orbits of g -> h g h^{-1} over the
explicit wreath table, compared to the type-matrix fingerprint.  The
instances include a nonabelian base with 3-cycles in the top group, which
is exactly where a wrong cycle-product traversal direction would show up.
"""
import itertools

import pytest

from wreathwalk.classes import (
    class_count,
    class_size,
    cycle_products,
    support_classes,
    support_tag_of,
    type_matrix,
    u_type,
    v_type,
)
from wreathwalk.groups import build_group
from wreathwalk.wreath import WreathElement, build_wreath_table, wreath_order

INSTANCES = [("Z:2", 2), ("Z:2", 3), ("Z:3", 2), ("S:3", 2), ("Z:2", 4), ("S:3", 3)]


def brute_classes(wt):
    g = wt.base
    W = wt.group
    seen = [False] * W.order
    out = []
    for i in range(W.order):
        if seen[i]:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            x = frontier.pop()
            for h in range(W.order):
                y = int(W.mult[int(W.mult[h, x]), int(W.inv[h])])
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = True
        out.append(orbit)
    return out


@pytest.mark.parametrize("gspec,n", INSTANCES)
def test_type_matrix_matches_conjugation(gspec, n):
    g = build_group(gspec)
    wt = build_wreath_table(g, n)
    orbits = brute_classes(wt)
    # same partition of the group: (a) count matches the convolution formula,
    # (b) two elements share an orbit iff they share a type matrix
    assert len(orbits) == class_count(g, n)
    fingerprint = [type_matrix(g, e) for e in wt.elements]
    for orbit in orbits:
        tms = {fingerprint[x] for x in orbit}
        assert len(tms) == 1
        tm = next(iter(tms))
        assert class_size(g, n, tm) == len(orbit)
        # nobody outside the orbit shares the fingerprint
        outside = [x for x in range(wt.group.order) if fingerprint[x] == tm]
        assert len(outside) == len(orbit)


def test_class_count_small_values():
    g2 = build_group("Z:2")
    # wreath class counts grow by convolving partition counts
    assert class_count(g2, 1) == 2
    assert class_count(g2, 2) == 5
    assert class_count(g2, 3) == 10
    assert class_count(g2, 4) == 20
    assert class_count(g2, 6) == 65
    g3 = build_group("S:3")
    assert class_count(g3, 1) == 3
    assert class_count(g3, 2) == 9


def test_cycle_products_hand_example():
    g = build_group("Z:3")
    # 3-cycle 0->1->2->0 with coords (1, 2, 2): product along backward orbit
    # 0, 2, 1 is 1+2+2 = 5 = 2 mod 3
    w = WreathElement(coords=(1, 2, 2), perm=(1, 2, 0))
    [(length, cls)] = cycle_products(g, w)
    assert length == 3
    assert cls == 2


def test_support_sizes_sum_to_measure_support():
    g = build_group("S:3")
    n = 3
    sup = support_classes(g, n)
    tags = [t for t, _, _ in sup]
    assert ("id",) in tags
    sizes = {t: sz for t, _, sz in sup}
    assert sizes[("id",)] == 1
    # u-classes: n |C_k|
    assert sizes[("u", 2)] == 3 * 3   # transposition class of S3 has size 3
    assert sizes[("u", 3)] == 3 * 2
    # v-classes: n(n-1)/2 |G| |C_k|
    assert sizes[("v", 1)] == 3 * 6 * 1
    assert sizes[("v", 2)] == 3 * 6 * 3
    assert sizes[("v", 3)] == 3 * 6 * 2


@pytest.mark.parametrize("gspec,n", [("Z:2", 3), ("S:3", 2)])
def test_support_tag_roundtrip(gspec, n):
    g = build_group(gspec)
    wt = build_wreath_table(g, n)
    sup = support_classes(g, n)
    by_tag = {t: 0 for t, _, _ in sup}
    for e in wt.elements:
        tag = support_tag_of(g, e)
        if tag is not None:
            by_tag[tag] += 1
    for t, _, sz in sup:
        assert by_tag[t] == sz


def test_u_v_types_disjoint():
    g = build_group("S:3")
    n = 4
    tms = [u_type(g, n, k) for k in range(2, 4)] + [v_type(g, n, k) for k in range(1, 4)]
    assert len(set(tms)) == len(tms)


def test_wreath_order_helper():
    assert wreath_order(2, 3) == 48
    assert wreath_order(6, 2) == 72
    assert wreath_order(6, 3) == 1296
