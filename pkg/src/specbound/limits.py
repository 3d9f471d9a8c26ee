"""Accumulated spectra along graph families, and what survives in the limit.

When graphs converge locally-globally their spectra converge too: the
distance-to-spectrum functional

    delta(G, x) = min over eigenvalues lam of (x - lam)^2

is continuous along convergent sequences, so eigenvalue accumulation points
and spectral gaps are limit objects worth tracking.  ``delta`` is computed
directly and cross-checked against the operator-norm identity
``delta = ||S|| - || S - ||S||*I ||`` with ``S = (T - xI)(T - xI)^*``, whose
two sides reduce to the max and (max - min) of the shifted squared spectrum.

``accumulate_spectra`` unions the spectra of a family's members up to an
index bound, merging duplicates at tolerance; ``max_gap`` measures how densely
the accumulated points fill an interval; ``gap_persistence`` watches the
spectral gap across a family, recording per-member failures rather than
aborting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .generators import GraphFamily
from .spectral import TOL, Spectrum, adjacency_spectrum, spectral_gap


@dataclass
class SpectrumAccumulation:
    points: Tuple[float, ...]
    per_index: Dict[int, Spectrum]
    tol: float = TOL


def _merge(values: List[float], tol: float) -> Tuple[float, ...]:
    """Sort and collapse near-duplicates, keeping the smaller of each pair."""
    out: List[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > tol:
            out.append(v)
    return tuple(out)


def accumulate_spectra(family: GraphFamily, max_index: int,
                       tol: float = TOL) -> SpectrumAccumulation:
    per_index: Dict[int, Spectrum] = {}
    values: List[float] = []
    for k, g in family.members(max_index):
        spec = adjacency_spectrum(g, tol)
        per_index[k] = spec
        values.extend(spec.values)
    if not per_index:
        raise ValueError(f"family {family.name!r} has no members at index <= {max_index}")
    return SpectrumAccumulation(points=_merge(values, tol), per_index=per_index, tol=tol)


def max_gap(acc: SpectrumAccumulation, interval: Tuple[float, float]) -> float:
    """Largest distance between consecutive accumulated points in an interval.

    The interval endpoints act as anchors, so sparse coverage near the ends
    is charged to the gap as well.
    """
    lo, hi = interval
    if not lo < hi:
        raise ValueError("interval must satisfy lo < hi")
    inside = [p for p in acc.points if lo <= p <= hi]
    anchors = [lo] + inside + [hi]
    return max(b - a for a, b in zip(anchors, anchors[1:]))


def delta(spectrum: Spectrum, x: float) -> float:
    """min (x - lam)^2 over the spectrum, with an internal cross-check.

    The direct minimum must agree with the norm form
    ``max(shifted) - (max(shifted) - min(shifted))`` computed from the same
    shifted squared spectrum; disagreement would mean the arithmetic itself
    is broken, so it raises rather than returning either value.
    """
    shifted = [(lam - x) ** 2 for lam in spectrum.values]
    direct = min(shifted)
    norm_s = max(shifted)
    norm_shifted_back = max(abs(s - norm_s) for s in shifted)
    via_norms = norm_s - norm_shifted_back
    if abs(direct - via_norms) > 1e-9:
        raise RuntimeError("distance-to-spectrum cross-check failed: "
                           f"{direct} vs {via_norms}")
    return direct


@dataclass(frozen=True)
class GapEntry:
    index: int
    gap: Optional[float]
    error: Optional[str] = None


@dataclass
class GapPersistenceReport:
    entries: List[GapEntry]

    @property
    def gaps(self) -> List[float]:
        return [e.gap for e in self.entries if e.gap is not None]

    @property
    def min_gap(self) -> Optional[float]:
        gs = self.gaps
        return min(gs) if gs else None

    @property
    def max_gap(self) -> Optional[float]:
        gs = self.gaps
        return max(gs) if gs else None


def gap_persistence(family: GraphFamily, max_index: int,
                    tol: float = TOL) -> GapPersistenceReport:
    """Spectral gap of each family member; per-member errors are recorded
    (irregular or disconnected members), never raised."""
    entries: List[GapEntry] = []
    for k, g in family.members(max_index):
        try:
            entries.append(GapEntry(k, spectral_gap(g, tol)))
        except ValueError as exc:
            entries.append(GapEntry(k, None, str(exc)))
    return GapPersistenceReport(entries)
