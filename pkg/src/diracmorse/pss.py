"""Pseudospin-doublet pairing and splitting analysis.

A doublet couples kappa_a < 0 with kappa_b = 1 - kappa_a; both carry
the same pseudo-orbital momentum l~.  The radial ladders are paired
with the (n) <-> (n-1) offset: the i-th state on the kappa_a side
partners the (i-1)-th on the kappa_b side, and the lowest kappa_a state
is the pseudospin-singlet intruder with no partner.

Ladder ordering: bound states by ascending energy, then resonances by
ascending width.  Along a resonance arc the real energy is not
monotone in the radial quantum number (deep states bend back to
negative E_r), while the width grows strictly, so the width is the
robust radial-ordering key.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Sequence, Tuple

from .basis import BasisSpec
from .model import ModelParams
from .spectrum import ResonanceState, Spectrum, StateClass, resonance_states, solve


def _l_tilde(kappa: int) -> int:
    return kappa - 1 if kappa > 0 else -kappa


def partner_kappa(kappa_a: int) -> int:
    if kappa_a >= 0:
        raise ValueError(f"kappa_a must be negative, got {kappa_a}")
    return 1 - kappa_a


@dataclass(frozen=True)
class DoubletReport:
    kappa_pair: Tuple[int, int]
    members: Tuple[Tuple[ResonanceState, ResonanceState], ...]
    dE: Tuple[float, ...]
    dGamma: Tuple[float, ...]
    unpaired_a: Tuple[ResonanceState, ...]
    unpaired_b: Tuple[ResonanceState, ...]


def radial_ladder(states: Sequence[ResonanceState]) -> List[ResonanceState]:
    """Order physical states along the radial quantum number."""
    bound = sorted((s for s in states if s.cls is StateClass.Bound), key=lambda s: s.E_r)
    reso = sorted((s for s in states if s.cls is not StateClass.Bound), key=lambda s: s.Gamma)
    return bound + reso


def pair_states(
    states_a: Sequence[ResonanceState],
    states_b: Sequence[ResonanceState],
    kappa_a: int,
    kappa_b: int,
) -> DoubletReport:
    """Pair two radial ladders with the (n, n-1) pseudospin offset."""
    if kappa_b != partner_kappa(kappa_a):
        raise ValueError(f"kappa_b must be 1 - kappa_a, got ({kappa_a}, {kappa_b})")
    if _l_tilde(kappa_a) != _l_tilde(kappa_b):
        raise ValueError(
            f"pseudo-orbital momenta differ: {_l_tilde(kappa_a)} vs {_l_tilde(kappa_b)}"
        )
    ladder_a = radial_ladder(states_a)
    ladder_b = radial_ladder(states_b)

    n_pairs = min(len(ladder_a) - 1, len(ladder_b))
    n_pairs = max(n_pairs, 0)
    pairs = [(ladder_a[i + 1], ladder_b[i]) for i in range(n_pairs)]
    pairs.sort(key=lambda ab: ab[0].E_r)

    unpaired_a = tuple(ladder_a[:1] + ladder_a[n_pairs + 1 :])
    unpaired_b = tuple(ladder_b[n_pairs:])
    return DoubletReport(
        kappa_pair=(kappa_a, kappa_b),
        members=tuple(pairs),
        dE=tuple(a.E_r - b.E_r for a, b in pairs),
        dGamma=tuple(a.Gamma - b.Gamma for a, b in pairs),
        unpaired_a=unpaired_a,
        unpaired_b=unpaired_b,
    )


def pair_doublets(spec_a: Spectrum, spec_b: Spectrum) -> DoubletReport:
    """Pair the physical states of two spectra differing only in kappa."""
    pa, pb = spec_a.params, spec_b.params
    if (pa.V0, pa.r0, pa.alpha, pa.M, pa.c_factor, pa.units) != (
        pb.V0,
        pb.r0,
        pb.alpha,
        pb.M,
        pb.c_factor,
        pb.units,
    ):
        raise ValueError("doublet spectra must share all parameters except kappa")
    return pair_states(
        resonance_states(spec_a), resonance_states(spec_b), pa.kappa, pb.kappa
    )


def solve_doublet(
    params_a: ModelParams,
    spec: BasisSpec,
    **solve_kwargs,
) -> DoubletReport:
    """Solve both kappa partners of a doublet family and pair them."""
    params_b = params_a.with_kappa(partner_kappa(params_a.kappa))
    spec_a = solve(params_a, spec, **solve_kwargs)
    spec_b = solve(params_b, spec, **solve_kwargs)
    return pair_doublets(spec_a, spec_b)


def splitting_scan(
    base: ModelParams,
    spec: BasisSpec,
    which: str,
    grid: Sequence[float],
    kappa_a: int = None,
    max_workers: int = 4,
    **solve_kwargs,
) -> List[Tuple[float, DoubletReport]]:
    """Doublet splittings along a grid in one potential parameter.

    kappa_a of None scans the family of base.kappa.
    """
    if which not in ("V0", "r0", "alpha"):
        raise ValueError(f"unknown scan parameter {which!r}")
    grid = [float(g) for g in grid]
    if kappa_a is None:
        kappa_a = base.kappa

    def one(value: float) -> Tuple[float, DoubletReport]:
        params = replace(base, **{which: value}, kappa=kappa_a)
        return value, solve_doublet(params, spec, **solve_kwargs)

    with ThreadPoolExecutor(max_workers=min(max_workers, len(grid))) as pool:
        return list(pool.map(one, grid))
