"""Diagonal states, virtual temperatures and tensor composition.

A system is a pair of equal-length tuples: level energies and level
populations.  Populations are classical probabilities because the state is
assumed diagonal in the energy eigenbasis; levels keep whatever index order
they were constructed with, and no sorting is ever applied implicitly.

Each ordered pair of levels with a positive energy gap is a *transition*,
and carries an inverse "virtual" temperature obtained by matching the
population ratio to a Boltzmann factor.  All virtual-temperature arithmetic
runs in log domain so that later tensor powers (populations raised to large
integer powers) do not underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TypeAlias

import numpy as np

from .errors import (
    DegenerateTransition,
    DimensionCap,
    IndexOutOfRange,
    InvalidParameter,
    LengthMismatch,
    NegativePopulation,
    NonFiniteEnergy,
    NotNormalized,
    ParseError,
    UndefinedTemperature,
)

#: Inverse temperature of a transition: a finite float, or +inf / -inf when
#: exactly one of the two populations vanishes (the unique consistent limit
#: of the log-ratio definition).
VirtualTemp: TypeAlias = float

#: Absolute tolerance on the population sum at construction time.
DEFAULT_NORM_TOL = 1e-9

#: Default cap on the number of levels of a composite system.
DEFAULT_DIM_CAP = 10**6


@dataclass(frozen=True)
class DiagonalSystem:
    """Energies and populations of a state diagonal in the energy basis.

    Instances are immutable values; all operations on them are pure
    functions, so systems can be shared freely between threads.
    """

    energies: tuple[float, ...]
    populations: tuple[float, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "energies", tuple(float(e) for e in self.energies))
        object.__setattr__(self, "populations", tuple(float(p) for p in self.populations))
        if len(self.energies) == 0:
            raise LengthMismatch("a system needs at least one level")
        if len(self.energies) != len(self.populations):
            raise LengthMismatch(
                f"{len(self.energies)} energies vs {len(self.populations)} populations"
            )
        for e in self.energies:
            if not math.isfinite(e):
                raise NonFiniteEnergy(f"energy {e!r} is not finite")
        for p in self.populations:
            if p < 0.0:
                raise NegativePopulation(f"population {p!r} is negative")
        total = math.fsum(self.populations)
        if not abs(total - 1.0) <= DEFAULT_NORM_TOL:
            raise NotNormalized(f"populations sum to {total!r}, expected 1")

    @property
    def dimension(self) -> int:
        return len(self.energies)


@dataclass(frozen=True)
class Transition:
    """An unordered level pair, normalized so ``hi`` is the higher-energy level.

    ``gap`` is strictly positive by construction; degenerate pairs (equal
    energies) are never represented, since no swap on them can move energy.
    ``beta_v`` is derived from the populations and the gap, see
    :func:`virtual_temperature`.
    """

    hi: int
    lo: int
    gap: float
    pop_hi: float
    pop_lo: float
    beta_v: VirtualTemp

    def __post_init__(self) -> None:
        if not self.gap > 0.0:
            raise DegenerateTransition(f"gap must be positive, got {self.gap!r}")


def new_diagonal_system(
    energies: Sequence[float],
    populations: Sequence[float],
    label: str | None = None,
    *,
    tol: float = DEFAULT_NORM_TOL,
) -> DiagonalSystem:
    """Validate and build a :class:`DiagonalSystem`.

    Populations must be non-negative and sum to 1 within ``tol``; accepted
    inputs are renormalized exactly (divided by their sum), so stored
    populations always sum to 1 up to float rounding.
    """
    es = tuple(float(e) for e in energies)
    ps = tuple(float(p) for p in populations)
    if len(es) == 0 or len(ps) == 0:
        raise LengthMismatch("energies and populations must be non-empty")
    if len(es) != len(ps):
        raise LengthMismatch(f"{len(es)} energies vs {len(ps)} populations")
    for e in es:
        if not math.isfinite(e):
            raise NonFiniteEnergy(f"energy {e!r} is not finite")
    for p in ps:
        if p < 0.0:
            raise NegativePopulation(f"population {p!r} is negative")
    total = math.fsum(ps)
    if not abs(total - 1.0) <= tol:
        raise NotNormalized(f"populations sum to {total!r}, expected 1 within {tol}")
    ps = tuple(p / total for p in ps)
    return DiagonalSystem(es, ps, label)


def gibbs_state(
    energies: Sequence[float], beta: float, *, label: str | None = None
) -> DiagonalSystem:
    """Thermal state at inverse temperature ``beta``: populations proportional
    to exp(-beta * E_k), evaluated with a max-shift so any finite ``beta`` is
    safe.  Negative ``beta`` is allowed and yields a population-inverted
    (non-passive) state, which is handy in tests.
    """
    if not math.isfinite(beta):
        raise InvalidParameter(f"beta must be finite, got {beta!r}")
    es = tuple(float(e) for e in energies)
    if not es:
        raise LengthMismatch("energies must be non-empty")
    for e in es:
        if not math.isfinite(e):
            raise NonFiniteEnergy(f"energy {e!r} is not finite")
    logw = [-beta * e for e in es]
    if not all(math.isfinite(x) for x in logw):
        raise InvalidParameter("beta * energy overflows")
    shift = max(logw)
    w = [math.exp(x - shift) for x in logw]
    z = math.fsum(w)
    return DiagonalSystem(es, tuple(x / z for x in w), label)


def _beta_from_populations(pop_hi: float, pop_lo: float, gap: float) -> VirtualTemp:
    if pop_hi == 0.0 and pop_lo == 0.0:
        raise UndefinedTemperature("both populations vanish")
    if pop_hi == 0.0:
        return math.inf
    if pop_lo == 0.0:
        return -math.inf
    return (math.log(pop_lo) - math.log(pop_hi)) / gap


def transition(sys: DiagonalSystem, i: int, j: int) -> Transition:
    """Build the transition between levels ``i`` and ``j``, oriented so the
    gap is positive.  Raises ``DegenerateTransition`` for equal energies and
    ``UndefinedTemperature`` when both populations are zero.
    """
    d = sys.dimension
    for idx in (i, j):
        if not 0 <= idx < d:
            raise IndexOutOfRange(f"level {idx} out of range for dimension {d}")
    if i == j or sys.energies[i] == sys.energies[j]:
        raise DegenerateTransition(f"levels {i} and {j} have equal energy")
    hi, lo = (i, j) if sys.energies[i] > sys.energies[j] else (j, i)
    gap = sys.energies[hi] - sys.energies[lo]
    pop_hi = sys.populations[hi]
    pop_lo = sys.populations[lo]
    return Transition(hi, lo, gap, pop_hi, pop_lo, _beta_from_populations(pop_hi, pop_lo, gap))


def virtual_temperature(sys: DiagonalSystem, i: int, j: int) -> VirtualTemp:
    """Inverse virtual temperature of the (i, j) transition.

    Computed in log domain as (log pop_lo - log pop_hi) / gap after
    orienting the pair to a positive gap, so the result does not depend on
    the argument order.  For a Gibbs state every pair returns the
    constructing beta, because the population ratio is exactly the
    Boltzmann factor.
    """
    return transition(sys, i, j).beta_v


def all_transitions(sys: DiagonalSystem) -> tuple[Transition, ...]:
    """All transitions of the system, ordered by (lo, hi).

    A d-level system with distinct energies has d(d-1)/2 of them.  Pairs
    with equal energies are skipped (no virtual temperature is defined for
    degenerate transitions), as are pairs whose populations are both zero
    (the temperature limit does not exist and no swap on them moves any
    weight).  Quadratic in the dimension; meant for small systems.
    """
    out = []
    for p in range(sys.dimension):
        for q in range(p + 1, sys.dimension):
            if sys.energies[p] == sys.energies[q]:
                continue
            if sys.populations[p] == 0.0 and sys.populations[q] == 0.0:
                continue
            out.append(transition(sys, p, q))
    out.sort(key=lambda t: (t.lo, t.hi))
    return tuple(out)


def compose_systems(
    a: DiagonalSystem, b: DiagonalSystem, *, dim_cap: int = DEFAULT_DIM_CAP
) -> DiagonalSystem:
    """Tensor product of two diagonal systems.

    Level (p, q) of the product maps to index ``p * b.dimension + q``;
    energies add and populations multiply.  The index convention is fixed
    so certificate levels can be mapped into tensor powers exactly.
    """
    d = a.dimension * b.dimension
    if d > dim_cap:
        raise DimensionCap(f"composite dimension {d} exceeds cap {dim_cap}")
    ea = np.asarray(a.energies)
    eb = np.asarray(b.energies)
    pa = np.asarray(a.populations)
    pb = np.asarray(b.populations)
    energies = np.add.outer(ea, eb).ravel()
    populations = np.multiply.outer(pa, pb).ravel()
    label = f"{a.label}(x){b.label}" if a.label and b.label else None
    return DiagonalSystem(tuple(energies.tolist()), tuple(populations.tolist()), label)


def mean_energy(sys: DiagonalSystem) -> float:
    """Average energy: sum of population * energy over all levels."""
    return math.fsum(p * e for p, e in zip(sys.populations, sys.energies))


def virtual_temp_to_wire(value: VirtualTemp) -> float | str:
    """JSON-safe form of a virtual temperature: plain number when finite,
    the strings "inf" / "-inf" otherwise (JSON has no infinity literal)."""
    if value == math.inf:
        return "inf"
    if value == -math.inf:
        return "-inf"
    return float(value)


def virtual_temp_from_wire(value: float | str) -> VirtualTemp:
    """Inverse of :func:`virtual_temp_to_wire`."""
    if isinstance(value, str):
        if value == "inf":
            return math.inf
        if value == "-inf":
            return -math.inf
        raise ParseError(f"not a virtual temperature: {value!r}")
    return float(value)


def state_to_dict(sys: DiagonalSystem) -> dict:
    """The documented state-file form of a system."""
    out: dict = {"energies": list(sys.energies), "populations": list(sys.populations)}
    if sys.label is not None:
        out["label"] = sys.label
    return out


def state_from_dict(data: object, *, tol: float = DEFAULT_NORM_TOL) -> DiagonalSystem:
    """Parse the state-file dictionary form.

    Shape problems raise ``ParseError``; numeric problems raise the same
    validation errors as :func:`new_diagonal_system`.
    """
    if not isinstance(data, dict):
        raise ParseError("state must be a JSON object")
    if "energies" not in data or "populations" not in data:
        raise ParseError('state needs "energies" and "populations" arrays')
    energies = data["energies"]
    populations = data["populations"]
    if not isinstance(energies, (list, tuple)) or not isinstance(populations, (list, tuple)):
        raise ParseError('"energies" and "populations" must be arrays')
    for x in list(energies) + list(populations):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ParseError(f"not a number: {x!r}")
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError('"label" must be a string')
    return new_diagonal_system(energies, populations, label, tol=tol)
