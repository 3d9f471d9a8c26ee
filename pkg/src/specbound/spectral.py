"""Spectra of the adjacency and Laplacian operators, and the derived bounds.

For a finite graph with uniform measure the adjacency operator acts by
summing over neighbors, ``(Tf)(x) = sum_{y ~ x} f(y)``; the Laplacian is
``L = D - T``.  The Rayleigh extremes

    m(T) = min spec,  M(T) = max spec = ||T||

drive everything here: the greedy-peeling chromatic bound ``floor(M)+1``, the
Hoffman-type lower bound ``ceil(1 - M/m)``, independence-ratio bounds, the
spectral gap of regular graphs, and the mean-zero Laplacian extremes used by
the matching criteria.

All eigensolves are dense symmetric (numpy ``eigvalsh``/``eigh``), capped at
n = 4096; at that scale the solver is exact to far better than the 1e-9
tolerance used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .graphs import CapExceeded, Graph, Mask, bits, components, is_connected, popcount

TOL = 1e-9
MAX_DENSE_N = 4096


def snapped_floor(x: float, eps: float = 1e-9) -> int:
    """floor with an epsilon nudge so that 2.9999999999 floors to 3."""
    return math.floor(x + eps)


def snapped_ceil(x: float, eps: float = 1e-9) -> int:
    return math.ceil(x - eps)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, sorted ascending, with a comparison tolerance."""

    values: Tuple[float, ...]
    tol: float = TOL

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def min(self) -> float:
        return self.values[0]

    @property
    def max(self) -> float:
        return self.values[-1]

    def contains(self, x: float) -> bool:
        return any(abs(v - x) <= self.tol for v in self.values)

    def multiplicity(self, x: float) -> int:
        return sum(1 for v in self.values if abs(v - x) <= self.tol)

    def multiset_close(self, other: "Spectrum") -> bool:
        return multiset_close(self.values, other.values, max(self.tol, other.tol))


def multiset_close(a: Sequence[float], b: Sequence[float], tol: float = TOL) -> bool:
    """Multiset equality by greedy pairing of the two sorted lists."""
    if len(a) != len(b):
        return False
    sa, sb = sorted(a), sorted(b)
    return all(abs(x - y) <= tol for x, y in zip(sa, sb))


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian_matrix(g: Graph) -> np.ndarray:
    lap = -adjacency_matrix(g)
    lap[np.diag_indices(g.n)] = g.degrees
    return lap


def _eigvalsh(mat: np.ndarray) -> np.ndarray:
    if mat.shape[0] > MAX_DENSE_N:
        raise CapExceeded(f"dense eigensolve capped at n={MAX_DENSE_N}")
    return np.linalg.eigvalsh(mat)


def adjacency_spectrum(g: Graph, tol: float = TOL) -> Spectrum:
    """Eigenvalues of the adjacency operator; always within [-d, d]."""
    vals = _eigvalsh(adjacency_matrix(g))
    d = g.max_degree
    if len(vals) and (vals[0] < -d - tol or vals[-1] > d + tol):
        raise RuntimeError("adjacency eigenvalue escaped the degree bound; "
                           "eigensolve is untrustworthy here")
    return Spectrum(tuple(vals), tol)


def laplacian_spectrum(g: Graph, tol: float = TOL) -> Spectrum:
    """Eigenvalues of L = D - T; nonnegative, kernel dim = #components."""
    vals = _eigvalsh(laplacian_matrix(g))
    if len(vals) and vals[0] < -tol:
        raise RuntimeError("negative Laplacian eigenvalue; eigensolve is "
                           "untrustworthy here")
    return Spectrum(tuple(vals), tol)


def extremes(spectrum: Spectrum) -> Tuple[float, float]:
    """(m, M): least and greatest eigenvalue."""
    return spectrum.min, spectrum.max


def spectral_gap(g: Graph, tol: float = TOL) -> float:
    """Distance from the degree eigenvalue down to the rest of the spectrum.

    Defined for connected regular graphs: the adjacency spectrum sits inside
    [-d, d - gap] plus the simple eigenvalue d itself.
    """
    if not g.is_regular:
        raise ValueError("spectral gap is defined for regular graphs")
    if not is_connected(g):
        raise ValueError("spectral gap needs a connected graph")
    d = g.max_degree
    below = [v for v in adjacency_spectrum(g, tol) if v < d - tol]
    if not below:
        raise ValueError("no eigenvalue below the degree; gap undefined")
    return d - max(below)


def mean_zero_extremes(g: Graph, tol: float = TOL) -> Tuple[float, float]:
    """Rayleigh extremes of the Laplacian restricted to mean-zero functions.

    For a connected graph these are the second-smallest and the largest
    Laplacian eigenvalues.
    """
    if not is_connected(g):
        raise ValueError("mean-zero extremes need a connected graph")
    if g.n < 2:
        raise ValueError("mean-zero extremes need at least two vertices")
    vals = laplacian_spectrum(g, tol).values
    return vals[1], vals[-1]


@dataclass(frozen=True)
class BlockExtremes:
    m: float
    M: float
    empty: bool = False


def block_extremes(g: Graph, parts: Sequence[Mask], tol: float = TOL) -> List[BlockExtremes]:
    """Rayleigh extremes of the diagonal blocks of T under a vertex partition.

    The diagonal block for a part is the adjacency operator of the induced
    subgraph.  Parts must be disjoint and cover the vertex set; empty parts
    are legal and contribute (0, 0), flagged.
    """
    union = 0
    for p in parts:
        if union & p:
            raise ValueError("partition has overlapping parts")
        union |= p
    if union != g.full_mask:
        raise ValueError("partition must cover all vertices")
    out = []
    for p in parts:
        if p == 0:
            out.append(BlockExtremes(0.0, 0.0, empty=True))
            continue
        vs = list(bits(p))
        sub = adjacency_matrix(g)[np.ix_(vs, vs)]
        vals = _eigvalsh(sub)
        out.append(BlockExtremes(float(vals[0]), float(vals[-1])))
    return out


def antidiagonal_spectrum(g: Graph, tol: float = TOL) -> Spectrum:
    """Spectrum of the operator [[0, T], [T, 0]] on the doubled vertex set.

    Computed from the actual 2n x 2n matrix; equals the symmetrization
    spec(T) union -spec(T) as a multiset, which the tests cross-check.
    """
    a = adjacency_matrix(g)
    z = np.zeros_like(a)
    big = np.block([[z, a], [a, z]])
    return Spectrum(tuple(_eigvalsh(big)), tol)


@dataclass(frozen=True)
class SpectralBounds:
    """Bundle of the spectral quantities used by the coloring/matching work.

    ``None`` marks a value whose precondition fails: ``hoffman`` on edgeless
    graphs, ``gap`` off connected regular graphs, ``mL``/``ML`` off connected
    graphs, ``independence_bound`` off regular graphs with an edge.
    """

    M: float
    m: float
    wilf: int
    hoffman: Optional[int]
    gap: Optional[float]
    mL: Optional[float]
    ML: Optional[float]
    independence_bound: Optional[float]
    mindeg_independence_bound: Optional[float]


def bounds(g: Graph, tol: float = TOL) -> SpectralBounds:
    adj = adjacency_spectrum(g, tol)
    m_t, big_m = extremes(adj)
    wilf = snapped_floor(big_m) + 1
    hoffman = None
    if g.m > 0:
        hoffman = snapped_ceil(1.0 - big_m / m_t)
    gap = None
    if g.is_regular and g.n >= 2 and is_connected(g):
        gap = spectral_gap(g, tol)
    m_l = big_l = None
    if g.n >= 2 and is_connected(g):
        m_l, big_l = mean_zero_extremes(g, tol)
    independence_bound = None
    if g.is_regular and g.m > 0:
        d = g.max_degree
        independence_bound = -m_t / (d - m_t)
    mindeg_independence_bound = None
    if g.m > 0:
        lap_max = laplacian_spectrum(g, tol).max
        mindeg_independence_bound = 1.0 - g.min_degree / lap_max
    return SpectralBounds(M=float(big_m), m=float(m_t), wilf=wilf,
                          hoffman=hoffman, gap=gap, mL=m_l, ML=big_l,
                          independence_bound=independence_bound,
                          mindeg_independence_bound=mindeg_independence_bound)


def spectral_report(g: Graph, tol: float = TOL) -> dict:
    """The flat report emitted by the CLI ``spectrum`` subcommand."""
    b = bounds(g, tol)
    return {
        "n": g.n,
        "d": g.max_degree,
        "spectrum_adj": list(adjacency_spectrum(g, tol).values),
        "spectrum_lap": list(laplacian_spectrum(g, tol).values),
        "M": b.M,
        "m": b.m,
        "wilf": b.wilf,
        "hoffman": b.hoffman,
        "gap": b.gap,
        "mL": b.mL,
        "ML": b.ML,
    }
