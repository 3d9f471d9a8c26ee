"""Matching criteria: odd-component scans, the 2*mL >= ML test, and oracles.

Under the uniform measure every odd component of ``G - A`` carries exactly
1/n of mass in the natural odd-component measure (a component of size 2k+1
weighted by 1/(2k+1)), so the scan below works with the integer count of odd
components directly.  ``c_star`` is the worst ratio (odd components of G-A) /
|A| over scanned nonempty A:

* ``classical_holds`` (all ratios <= 1) is, for connected graphs on an even
  number of vertices, exactly Tutte's perfect-matching condition;
* ``strict_holds`` (all ratios < 1) is the strict variant and is *expected*
  to fail at finite scale -- deleting one vertex of an even-order graph always
  leaves an odd component, so c_star >= 1.  It is reported, never relied on.

``brouwer_haemers_test`` checks the spectral sufficient condition
``2*mL >= ML`` on the mean-zero Laplacian extremes; ``two_set_inequality``
checks the measure inequality that a pair of sets with no edges between them
must satisfy; both are validated against the exhaustive oracles in the tests.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graphs import (CapExceeded, Graph, Mask, bits, components_within,
                     is_connected, mask_of, popcount)
from .spectral import TOL, mean_zero_extremes


def odd_component_count(g: Graph, removed: Mask) -> int:
    region = g.full_mask & ~removed
    return sum(1 for comp in components_within(g.adj_masks, region)
               if popcount(comp) % 2 == 1)


def odd_component_measure(g: Graph, removed: Mask) -> float:
    """Mass of the odd components of G - A: each contributes exactly 1/n."""
    return odd_component_count(g, removed) / g.n


@dataclass
class TutteReport:
    c_star: float
    witness: Mask
    classical_holds: bool
    strict_holds: bool
    mode: str
    scanned: int
    bh_condition: Optional[bool]
    matching: Optional[List[Tuple[int, int]]]


def _scan(g: Graph, subsets) -> Tuple[float, Mask, bool, bool, int]:
    best = -1.0
    witness = 0
    classical = True
    strict = True
    scanned = 0
    count = odd_component_count
    for a in subsets:
        o = count(g, a)
        s = popcount(a)
        scanned += 1
        if o > s:
            classical = False
        if o >= s:
            strict = False
        ratio = o / s
        if ratio > best:
            best = ratio
            witness = a
    return best, witness, classical, strict, scanned


def _random_subsets(g: Graph, seed: int, samples: int):
    rng = random.Random(seed)
    n = g.n
    verts = list(range(n))
    seed_weights = [1.0 / (1 + g.degrees[v]) for v in verts]
    sizes = list(range(1, n))
    size_weights = [2.0 ** -s for s in sizes]
    seen = set()
    for v in verts:  # always probe the singletons
        m = 1 << v
        seen.add(m)
        yield m
    for _ in range(samples):
        s = rng.choices(sizes, weights=size_weights)[0] if sizes else 1
        v0 = rng.choices(verts, weights=seed_weights)[0]
        a = 1 << v0
        while popcount(a) < s:
            nbhd = 0
            for v in bits(a):
                nbhd |= g.adj_masks[v]
            nbhd &= ~a
            pool = nbhd if (nbhd and rng.random() < 0.7) else (g.full_mask & ~a)
            if pool == 0:
                break
            pool_list = list(bits(pool))
            a |= 1 << pool_list[rng.randrange(len(pool_list))]
        if a not in seen:
            seen.add(a)
            yield a


def tutte_scan(g: Graph, mode: str = "exhaustive", seed: int = 0,
               samples: int = 2000, tol: float = TOL) -> TutteReport:
    """Scan subsets A for the worst odd-component ratio.

    ``exhaustive`` walks all nonempty subsets (n <= 22); ``randomized`` draws
    seeded samples biased toward small sets grown from low-degree vertices,
    plus all singletons.  Ties on the maximum keep the earliest (smallest)
    witness encountered.
    """
    if mode == "exhaustive":
        if g.n > 22:
            raise CapExceeded("exhaustive Tutte scan capped at n=22")
        subsets = range(1, 1 << g.n)
    elif mode == "randomized":
        subsets = _random_subsets(g, seed, samples)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")
    c_star, witness, classical, strict, scanned = _scan(g, subsets)

    bh = None
    if g.n >= 2 and is_connected(g):
        m_l, big_l = mean_zero_extremes(g, tol)
        bh = bool(2.0 * m_l >= big_l - tol)

    matching = None
    if g.n % 2 == 0 and g.n <= 24:
        matching = perfect_matching_oracle(g)

    return TutteReport(c_star=c_star, witness=witness, classical_holds=classical,
                       strict_holds=strict, mode=mode, scanned=scanned,
                       bh_condition=bh, matching=matching)


def brouwer_haemers_test(g: Graph, tol: float = TOL) -> bool:
    """Spectral matching condition 2*mL >= ML for connected regular graphs."""
    if not g.is_regular:
        raise ValueError("spectral matching condition needs a regular graph")
    if not is_connected(g):
        raise ValueError("spectral matching condition needs a connected graph")
    m_l, big_l = mean_zero_extremes(g, tol)
    return bool(2.0 * m_l >= big_l - tol)


@dataclass(frozen=True)
class TwoSetReport:
    lhs: float
    rhs: float
    holds: bool
    mL: float
    ML: float


def two_set_inequality(g: Graph, y: Mask, z: Mask, tol: float = TOL) -> TwoSetReport:
    """Check mu(Y)mu(Z)/((1-mu(Y))(1-mu(Z))) <= ((ML-mL)/(ML+mL))^2.

    Requires a connected regular graph and disjoint nonempty Y, Z with no
    edges between them; an edge between the sets is reported explicitly.
    """
    if y == 0 or z == 0:
        raise ValueError("both sets must be nonempty")
    if y & z:
        raise ValueError("sets must be disjoint")
    for v in bits(y):
        between = g.adj_masks[v] & z
        if between:
            u = (between & -between).bit_length() - 1
            raise ValueError(f"edge ({v}, {u}) joins the two sets")
    if not g.is_regular:
        raise ValueError("two-set inequality needs a regular graph")
    if not is_connected(g):
        raise ValueError("two-set inequality needs a connected graph")
    mu_y, mu_z = g.mu(y), g.mu(z)
    m_l, big_l = mean_zero_extremes(g, tol)
    lhs = (mu_y * mu_z) / ((1.0 - mu_y) * (1.0 - mu_z))
    rhs = ((big_l - m_l) / (big_l + m_l)) ** 2
    return TwoSetReport(lhs=lhs, rhs=rhs, holds=bool(lhs <= rhs + tol),
                        mL=m_l, ML=big_l)


def independent_expansion(g: Graph) -> Tuple[float, Mask]:
    """min |N(A)|/|A| over nonempty independent sets A; capped at n = 24.

    Strict expansion (min ratio > 1) rules out perfect matchings' obstructions
    for bipartite-style graphs; the tests use the contrapositive.
    """
    if g.n > 24:
        raise CapExceeded("independent-set expansion scan capped at n=24")
    adj = g.adj_masks
    best = math.inf
    witness = 0

    def visit(a: Mask, nbhd: Mask, size: int):
        nonlocal best, witness
        ratio = popcount(nbhd) / size
        if ratio < best:
            best = ratio
            witness = a

    def rec(a: Mask, nbhd: Mask, size: int, start: int):
        for v in range(start, g.n):
            if adj[v] & a:
                continue  # v sees A, so A + v is not independent
            a2 = a | (1 << v)
            nb2 = nbhd | adj[v]
            visit(a2, nb2, size + 1)
            rec(a2, nb2, size + 1, v + 1)

    rec(0, 0, 0, 0)
    return best, witness


def perfect_matching_oracle(g: Graph) -> Optional[List[Tuple[int, int]]]:
    """Exact perfect-matching search; None when there is none.  Cap n = 24.

    Branches on the lowest uncovered vertex and memoizes failing residual
    vertex sets, which keeps the search tiny at this scale.  The witness is
    deterministic: each matched pair uses the least available partner.
    """
    if g.n > 24:
        raise CapExceeded("perfect matching oracle capped at n=24")
    if g.n % 2 == 1:
        return None
    adj = g.adj_masks
    dead: set = set()

    def rec(uncov: Mask) -> Optional[List[Tuple[int, int]]]:
        if uncov == 0:
            return []
        if uncov in dead:
            return None
        b = uncov & -uncov
        v = b.bit_length() - 1
        for u in bits(adj[v] & uncov):
            rest = rec(uncov ^ b ^ (1 << u))
            if rest is not None:
                return [(v, u)] + rest
        dead.add(uncov)
        return None

    return rec(g.full_mask)
