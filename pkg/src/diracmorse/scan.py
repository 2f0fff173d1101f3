"""Parameter scans with resonance-trajectory tracking.

States are followed across a monotone grid in one potential parameter
by nearest-neighbour linking in the (E_r, Gamma) plane.  Distances are
scaled per component by the grid-step-induced drift (widths grow to
~70 while energies stay of order 10, so an unscaled metric would
mislink broad states), and a link is accepted only below 5x the median
scaled drift.  A trajectory that finds no match for two consecutive
grid points is declared dissolved and never revived.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

import numpy as np

from .basis import BasisSpec
from .model import ModelParams
from .spectrum import ResonanceState, resonance_states, solve

SCAN_PARAMETERS = ("V0", "r0", "alpha")
THRESHOLD_FACTOR = 5.0
MAX_MISSES = 2
# Ratio of second-nearest to nearest link distance below which the
# assignment is considered a genuine tie rather than resolvable.
AMBIGUITY_RATIO = 1.05


class AmbiguousLinkError(RuntimeError):
    def __init__(self, grid_value: float, target: ResonanceState, candidates):
        self.grid_value = grid_value
        self.target = target
        self.candidates = list(candidates)
        cand = ", ".join(f"({c.E_r:.4g}, {c.Gamma:.4g})" for c in self.candidates)
        super().__init__(
            f"ambiguous trajectory link at grid value {grid_value:g}: state "
            f"({target.E_r:.4g}, {target.Gamma:.4g}) has candidates {cand}"
        )


@dataclass
class Trajectory:
    """One state followed along the grid; None marks unmatched points."""

    parameter: str
    grid: tuple
    points: List[Optional[ResonanceState]]
    key: int

    @property
    def matched(self) -> list:
        return [(g, p) for g, p in zip(self.grid, self.points) if p is not None]


def _component_scales(prev: np.ndarray, new: np.ndarray):
    """Per-component drift scale from a raw nearest-neighbour pass."""
    de, dg = [], []
    for e, g in prev:
        d2 = (new[:, 0] - e) ** 2 + (new[:, 1] - g) ** 2
        j = int(np.argmin(d2))
        de.append(abs(new[j, 0] - e))
        dg.append(abs(new[j, 1] - g))
    scale_e = max(float(np.median(de)), 1e-9)
    scale_g = max(float(np.median(dg)), 1e-9)
    return scale_e, scale_g


def link_states(
    prev_states: Sequence[ResonanceState],
    new_states: Sequence[ResonanceState],
    grid_value: float,
    threshold_factor: float = THRESHOLD_FACTOR,
    predicted: Optional[np.ndarray] = None,
):
    """Match previous states to new ones; returns {prev_index: new_index}.

    When `predicted` positions (linear extrapolation of each trajectory)
    are given they replace the raw previous positions in the metric;
    this keeps fast-moving broad states from hopping onto a ladder
    neighbour.  Raises AmbiguousLinkError for genuine ties.
    """
    if not prev_states or not new_states:
        return {}
    if predicted is not None:
        prev = np.asarray(predicted, dtype=float)
    else:
        prev = np.array([(s.E_r, s.Gamma) for s in prev_states], dtype=float)
    new = np.array([(s.E_r, s.Gamma) for s in new_states], dtype=float)
    se, sg = _component_scales(prev, new)

    dist = np.sqrt(
        ((prev[:, None, 0] - new[None, :, 0]) / se) ** 2
        + ((prev[:, None, 1] - new[None, :, 1]) / sg) ** 2
    )
    nearest = dist.min(axis=1)
    threshold = threshold_factor * max(float(np.median(nearest)), 1e-9)

    # Unresolvable tie: two previous states whose best candidate is the
    # same new state at (nearly) the same distance, while the losing
    # contender has no alternative candidate inside the threshold.
    # Ordinary ladder neighbours (and freshly exposed states between
    # two rungs) each leave the losers a fallback and are resolved by
    # the greedy assignment below.
    best = dist.argmin(axis=1)
    for j in set(best):
        contenders = [i for i in range(len(prev_states)) if best[i] == j and dist[i, j] < threshold]
        if len(contenders) < 2:
            continue
        winner = min(contenders, key=lambda i: dist[i, j])
        stuck = [winner]
        for i in contenders:
            if i == winner or dist[i, j] >= AMBIGUITY_RATIO * dist[winner, j]:
                continue
            alt = np.delete(dist[i], j)
            if alt.size == 0 or alt.min() >= threshold:
                stuck.append(i)
        if len(stuck) > 1:
            raise AmbiguousLinkError(
                grid_value, new_states[j], [prev_states[i] for i in stuck]
            )

    # Greedy one-to-one assignment in ascending distance order.
    matches = {}
    taken = set()
    flat = [(dist[i, j], i, j) for i in range(dist.shape[0]) for j in range(dist.shape[1])]
    for d, i, j in sorted(flat):
        if d >= threshold:
            break
        if i in matches or j in taken:
            continue
        matches[i] = j
        taken.add(j)
    return matches


def _with_parameter(base: ModelParams, which: str, value: float) -> ModelParams:
    if which not in SCAN_PARAMETERS:
        raise ValueError(f"unknown scan parameter {which!r}, expected one of {SCAN_PARAMETERS}")
    return replace(base, **{which: value})


def scan_parameter(
    base: ModelParams,
    spec: BasisSpec,
    which: str,
    grid: Sequence[float],
    max_workers: int = 4,
    **solve_kwargs,
) -> List[Trajectory]:
    """Solve at every grid value and link physical states into trajectories."""
    grid = tuple(float(g) for g in grid)
    if len(grid) < 1:
        raise ValueError("grid must contain at least one value")
    diffs = np.diff(grid)
    if len(grid) > 1 and not (np.all(diffs > 0) or np.all(diffs < 0)):
        raise ValueError("grid must be strictly monotone")
    param_sets = [_with_parameter(base, which, g) for g in grid]

    with ThreadPoolExecutor(max_workers=min(max_workers, len(grid))) as pool:
        spectra = list(pool.map(lambda p: solve(p, spec, **solve_kwargs), param_sets))
    per_point = [resonance_states(sp) for sp in spectra]

    trajectories: List[Trajectory] = []
    alive: List[Trajectory] = []
    misses = {}
    next_key = 0

    for k, states in enumerate(per_point):
        if k == 0:
            for st in states:
                tr = Trajectory(which, grid, [None] * len(grid), next_key)
                tr.points[0] = st
                trajectories.append(tr)
                alive.append(tr)
                misses[next_key] = 0
                next_key += 1
            continue

        heads = []
        predicted = []
        for tr in alive:
            known = [(grid[i], p) for i, p in enumerate(tr.points[:k]) if p is not None]
            g2, p2 = known[-1]
            heads.append(p2)
            if len(known) >= 2:
                g1, p1 = known[-2]
                frac = (grid[k] - g2) / (g2 - g1)
                predicted.append(
                    (
                        p2.E_r + (p2.E_r - p1.E_r) * frac,
                        max(0.0, p2.Gamma + (p2.Gamma - p1.Gamma) * frac),
                    )
                )
            else:
                predicted.append((p2.E_r, p2.Gamma))
        matches = link_states(heads, states, grid[k], predicted=np.array(predicted))
        claimed = set(matches.values())

        survivors = []
        for i, tr in enumerate(alive):
            if i in matches:
                tr.points[k] = states[matches[i]]
                misses[tr.key] = 0
                survivors.append(tr)
            else:
                misses[tr.key] += 1
                if misses[tr.key] < MAX_MISSES:
                    survivors.append(tr)
        alive = survivors

        for j, st in enumerate(states):
            if j not in claimed:
                tr = Trajectory(which, grid, [None] * len(grid), next_key)
                tr.points[k] = st
                trajectories.append(tr)
                alive.append(tr)
                misses[next_key] = 0
                next_key += 1

    return trajectories
