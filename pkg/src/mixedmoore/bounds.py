"""Moore bounds for mixed graphs.

The authoritative value of the corrected bound is the sum of the maximal
distance-partition counts, obtained from the integer recurrence

    L_0 = 1,  L_1 = z + r,  L_j = (z + r - 1) L_{j-1} + z L_{j-2}.

The closed form over Q(sqrt(v)) is evaluated exactly and used as a
cross-check.  The superseded earlier mixed bound and the classical undirected and
directed bounds are provided for comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exactq import QuadElem

__all__ = [
    "MixedParams",
    "DegenerateKind",
    "CharacteristicData",
    "LevelSequence",
    "BoundReport",
    "Estimate",
    "ClosedFormUndefined",
    "BoundConsistencyError",
    "characteristic_data",
    "level_sequence",
    "moore_bound",
    "moore_bound_closed",
    "old_bound",
    "undirected_moore",
    "directed_moore",
    "reduction_check",
    "nearest_integer_estimate",
    "rounding_threshold",
    "bound_report",
]


class ClosedFormUndefined(ValueError):
    pass


class BoundConsistencyError(RuntimeError):
    """Closed form and recurrence disagree; indicates an arithmetic bug."""


def _check_nonneg(name: str, value) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


@dataclass(frozen=True)
class MixedParams:
    """Maximum out-degree ``z``, maximum undirected degree ``r``, diameter ``k``."""

    z: int
    r: int
    k: int

    def __post_init__(self) -> None:
        _check_nonneg("z", self.z)
        _check_nonneg("r", self.r)
        _check_nonneg("k", self.k)
        if self.k < 1:
            raise ValueError("diameter k must be at least 1")


class DegenerateKind(str, enum.Enum):
    NONE = "none"
    REPEATED_ROOT = "repeated_root"
    UNIT_ROOT = "unit_root"


@dataclass(frozen=True)
class CharacteristicData:
    """Roots and coefficients of the closed form for one ``(z, r)``.

    ``A`` and ``B`` are None when ``v == 0`` (repeated root).
    """

    z: int
    r: int
    v: int
    u1: QuadElem
    u2: QuadElem
    A: QuadElem | None
    B: QuadElem | None
    degenerate_kind: DegenerateKind

    def char_poly(self, u: QuadElem) -> QuadElem:
        """Evaluate ``u^2 + (1 - z - r) u - z``."""
        return u * u + (1 - self.z - self.r) * u - self.z


@lru_cache(maxsize=4096)
def characteristic_data(z: int, r: int) -> CharacteristicData:
    _check_nonneg("z", z)
    _check_nonneg("r", r)
    v = (z + r) ** 2 + 2 * (z - r) + 1
    v_alt = (z + r - 1) ** 2 + 4 * z
    assert v == v_alt, (v, v_alt)

    root = QuadElem.sqrt(v)
    half = Fraction(1, 2)
    u1 = (z + r - 1 - root) * half
    u2 = (z + r - 1 + root) * half

    if v == 0:
        kind = DegenerateKind.REPEATED_ROOT
    elif 2 - 2 * z - r == 0:
        # u = 1 is a root: 1 + (1 - z - r) - z = 0
        kind = DegenerateKind.UNIT_ROOT
    else:
        kind = DegenerateKind.NONE

    if v == 0:
        A = B = None
    else:
        A = (root - (z + r + 1)) / (2 * root)
        B = (root + (z + r + 1)) / (2 * root)
    return CharacteristicData(z, r, v, u1, u2, A, B, kind)


@dataclass(frozen=True)
class LevelSequence:
    levels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.levels)

    def __getitem__(self, j: int) -> int:
        return self.levels[j]

    def __iter__(self):
        return iter(self.levels)

    def total(self) -> int:
        return sum(self.levels)


def level_sequence(p: MixedParams) -> LevelSequence:
    z, r = p.z, p.r
    levels = [1, z + r]
    for _ in range(2, p.k + 1):
        levels.append((z + r - 1) * levels[-1] + z * levels[-2])
    return LevelSequence(tuple(levels))


def moore_bound(p: MixedParams) -> int:
    return level_sequence(p).total()


def _geometric_sum(u: QuadElem, k: int) -> QuadElem:
    # 1 + u + ... + u^k, requires u != 1
    return (u ** (k + 1) - 1) / (u - 1)


def moore_bound_closed(p: MixedParams) -> int:
    cd = characteristic_data(p.z, p.r)
    if cd.degenerate_kind is not DegenerateKind.NONE:
        raise ClosedFormUndefined(
            f"closed form undefined; use recurrence ({cd.degenerate_kind.value} at z={p.z}, r={p.r})"
        )
    value = cd.A * _geometric_sum(cd.u1, p.k) + cd.B * _geometric_sum(cd.u2, p.k)
    n = value.to_integer()
    if n is None:
        raise BoundConsistencyError(f"closed form is not an integer: {value!r}")
    return n


def old_bound(p: MixedParams) -> int:
    """The earlier (superseded) mixed bound ``1 + sum_j [z (z+r)^(j-1) + r (z+r-1)^(j-1)]``.

    ``0**0`` is taken as 1, which Python already does.
    """
    z, r = p.z, p.r
    return 1 + sum(z * (z + r) ** (j - 1) + r * (z + r - 1) ** (j - 1) for j in range(1, p.k + 1))


def undirected_moore(d: int, k: int) -> int:
    """Classical undirected bound; ``d == 1`` gives 2 (a single edge)."""
    _check_nonneg("d", d)
    if k < 1:
        raise ValueError("diameter k must be at least 1")
    if d == 0:
        raise ValueError("degree zero has no undirected Moore bound form")
    if d == 1:
        return 2
    if d == 2:
        return 2 * k + 1
    return 1 + d * ((d - 1) ** k - 1) // (d - 2)


def directed_moore(d: int, k: int) -> int:
    _check_nonneg("d", d)
    if k < 1:
        raise ValueError("diameter k must be at least 1")
    if d == 0:
        raise ValueError("degree zero has no directed Moore bound form")
    if d == 1:
        return k + 1
    return (d ** (k + 1) - 1) // (d - 1)


def _classical(p: MixedParams) -> int | None:
    if p.z and p.r:
        return None
    if p.z == 0 and p.r == 0:
        return 1
    if p.z == 0:
        return undirected_moore(p.r, p.k)
    return directed_moore(p.z, p.k)


def reduction_check(p: MixedParams) -> bool:
    """Whether the mixed bound collapses to the classical one at ``z == 0`` or ``r == 0``."""
    if p.z and p.r:
        raise ValueError("not a reduction case: need z == 0 or r == 0")
    return moore_bound(p) == _classical(p)


class Estimate(NamedTuple):
    estimate_rounds_to_bound: bool
    residual_sign: int


def nearest_integer_estimate(p: MixedParams) -> Estimate:
    """Compare the dominant-root estimate ``B(u2^(k+1)-1)/(u2-1) - A/(u1-1)`` with the bound.

    Everything is decided by exact sign computations in Q(sqrt(v)).
    """
    if p.r < 1:
        raise ValueError("estimate requires r >= 1")
    cd = characteristic_data(p.z, p.r)
    if cd.degenerate_kind is not DegenerateKind.NONE:
        raise ClosedFormUndefined(f"estimate undefined at z={p.z}, r={p.r}")
    estimate = cd.B * _geometric_sum(cd.u2, p.k) - cd.A / (cd.u1 - 1)
    residual = estimate - moore_bound(p)
    half = Fraction(1, 2)
    rounds = (residual - half).sign() < 0 and (residual + half).sign() > 0
    return Estimate(rounds, residual.sign())


def rounding_threshold(z: int, r: int, kmax: int) -> int | None:
    """Smallest ``k0`` such that the estimate rounds to the bound for every k in ``k0..kmax``.

    None if it fails at ``kmax`` itself.  Purely empirical over the given range.
    """
    k0 = None
    for k in range(kmax, 0, -1):
        if not nearest_integer_estimate(MixedParams(z, r, k)).estimate_rounds_to_bound:
            break
        k0 = k
    return k0


@dataclass(frozen=True)
class BoundReport:
    params: MixedParams
    corrected: int
    old: int
    levels: LevelSequence
    closed_form_used: bool
    degenerate_kind: DegenerateKind
    classical: int | None = field(default=None)

    def to_dict(self) -> dict:
        """JSON-friendly view; big integers as decimal strings."""
        return {
            "z": self.params.z,
            "r": self.params.r,
            "k": self.params.k,
            "corrected": str(self.corrected),
            "old": str(self.old),
            "levels": [str(x) for x in self.levels],
            "closed_form_used": self.closed_form_used,
            "degenerate_kind": self.degenerate_kind.value,
            "classical": None if self.classical is None else str(self.classical),
        }


def bound_report(p: MixedParams) -> BoundReport:
    levels = level_sequence(p)
    corrected = levels.total()
    kind = characteristic_data(p.z, p.r).degenerate_kind
    closed_used = kind is DegenerateKind.NONE
    if closed_used:
        closed = moore_bound_closed(p)
        if closed != corrected:
            raise BoundConsistencyError(
                f"closed form {closed} != recurrence {corrected} at {p}"
            )
    return BoundReport(
        params=p,
        corrected=corrected,
        old=old_bound(p),
        levels=levels,
        closed_form_used=closed_used,
        degenerate_kind=kind,
        classical=_classical(p),
    )
