"""Structure constants and dimensional bookkeeping for the extended algebra.

The Lie algebra of the one-dimensional static group extends the abelian span
of a space generator P and a time generator E by a central generator M, with
a single independent bracket [P, E] = g*M.  The structure constants are kept
as a dense 3-index table so the Jacobi grader stays generic and can score
deliberately corrupted tables, not just the canonical one.

Basis order is (P, E, M) = (0, 1, 2) throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

P_INDEX, E_INDEX, M_INDEX = 0, 1, 2


class AntisymmetryError(ValueError):
    """A bracket table violates c[i][j][k] == -c[j][i][k]."""


@dataclass(frozen=True)
class AlgebraElement:
    """Coefficient triple over the basis (P, E, M).

    As a group logarithm the coefficients are the coordinates (x, t, xi):
    c_P is a length, c_E a time, and c_M carries L^2 T^-1.
    """

    c_P: float
    c_E: float
    c_M: float

    def __post_init__(self) -> None:
        for name in ("c_P", "c_E", "c_M"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"non-finite coefficient {name}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(
            self.c_P + other.c_P, self.c_E + other.c_E, self.c_M + other.c_M
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(
            self.c_P - other.c_P, self.c_E - other.c_E, self.c_M - other.c_M
        )

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self.c_P, -self.c_E, -self.c_M)

    def __mul__(self, scalar: float) -> "AlgebraElement":
        return AlgebraElement(
            self.c_P * scalar, self.c_E * scalar, self.c_M * scalar
        )

    __rmul__ = __mul__


class BracketTable:
    """Dense structure-constant table: [e_i, e_j] = sum_k c[i][j][k] e_k.

    The table is immutable after construction.  Antisymmetry is an invariant
    of a well-formed table but is deliberately not enforced here, so that the
    Jacobi grader can report a breach as its own error.
    """

    def __init__(self, constants) -> None:
        table = np.array(constants, dtype=float)
        if table.ndim != 3 or len(set(table.shape)) != 1:
            raise ValueError("structure constants must form an (n, n, n) array")
        if not np.all(np.isfinite(table)):
            raise ValueError("non-finite structure constant")
        table.setflags(write=False)
        self._constants = table

    @property
    def constants(self) -> np.ndarray:
        return self._constants

    @property
    def dimension(self) -> int:
        return self._constants.shape[0]

    def is_antisymmetric(self) -> bool:
        c = self._constants
        return bool(np.all(c == -np.transpose(c, (1, 0, 2))))


def aristotle_bracket_table(g: float) -> BracketTable:
    """The canonical 3-dimensional table: [P, E] = g*M, everything else zero."""
    constants = np.zeros((3, 3, 3))
    constants[P_INDEX, E_INDEX, M_INDEX] = g
    constants[E_INDEX, P_INDEX, M_INDEX] = -g
    return BracketTable(constants)


def bracket(table: BracketTable, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the table to coefficient triples."""
    if table.dimension != 3:
        raise ValueError("coefficient-triple bracket needs a 3-dimensional table")
    constants = table.constants
    va = (a.c_P, a.c_E, a.c_M)
    vb = (b.c_P, b.c_E, b.c_M)
    out = [0.0, 0.0, 0.0]
    for i in range(3):
        if va[i] == 0.0:
            continue
        for j in range(3):
            if vb[j] == 0.0:
                continue
            for k in range(3):
                c_ijk = constants[i, j, k]
                if c_ijk != 0.0:
                    out[k] += va[i] * vb[j] * c_ijk
    return AlgebraElement(float(out[0]), float(out[1]), float(out[2]))


def jacobi_violation(table: BracketTable) -> float:
    """Worst cyclic-sum defect [[x,y],z] + [[y,z],x] + [[z,x],y] over basis triples.

    Returns 0 exactly when the table defines a Lie algebra.  Raises
    AntisymmetryError before computing anything if the table is not
    antisymmetric, so a malformed table is never silently graded.
    """
    if not table.is_antisymmetric():
        raise AntisymmetryError("bracket table is not antisymmetric")
    c = table.constants
    n = table.dimension
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # [[e_i, e_j], e_k] has components c[i, j, :] @ c[:, k, :].
                cyclic = (
                    c[i, j, :] @ c[:, k, :]
                    + c[j, k, :] @ c[:, i, :]
                    + c[k, i, :] @ c[:, j, :]
                )
                worst = max(worst, float(np.max(np.abs(cyclic))))
    return worst


@dataclass(frozen=True)
class Dimension:
    """Physical dimension as the exponent triple of M^a L^b T^c."""

    mass_exp: int
    length_exp: int
    time_exp: int

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension(
            self.mass_exp + other.mass_exp,
            self.length_exp + other.length_exp,
            self.time_exp + other.time_exp,
        )

    def inverse(self) -> "Dimension":
        return Dimension(-self.mass_exp, -self.length_exp, -self.time_exp)


#: Dimension of an action, M L^2 T^-1; every duality pairing term carries it.
ACTION_DIMENSION = Dimension(1, 2, -1)

_SYMBOL_DIMENSIONS: dict[str, Dimension] = {
    "xi": Dimension(0, 2, -1),  # central group coordinate
    "t": Dimension(0, 0, 1),  # time translation
    "x": Dimension(0, 1, 0),  # space translation
    "m": Dimension(1, 0, 0),  # orbit invariant: a mass
    "e": Dimension(1, 2, -2),  # dual coordinate paired with t: an energy
    "p": Dimension(1, 1, -1),  # dual coordinate paired with x: a momentum
    "g": Dimension(0, 1, -2),  # gravitational acceleration
    "action": ACTION_DIMENSION,
}


def dimension_of(symbol: str) -> Dimension:
    """Exponent triple for one of the named coordinates and constants."""
    try:
        return _SYMBOL_DIMENSIONS[symbol]
    except KeyError:
        known = ", ".join(sorted(_SYMBOL_DIMENSIONS))
        raise ValueError(f"unknown symbol {symbol!r}; expected one of: {known}") from None


def pairing_dimension_check(overrides: Mapping[str, Dimension] | None = None) -> bool:
    """True iff the duality pairing and the bracket are dimensionally consistent.

    Every pairing term m*xi, e*t, p*x must carry the dimension of an action,
    and [P, E] = g*M must balance once each generator is assigned the inverse
    dimension of its group coordinate (so that x*P + t*E + xi*M is
    dimensionless).  ``overrides`` substitutes dimensions by symbol name,
    which is how the deliberate-mismatch checks are expressed.
    """
    dims = dict(_SYMBOL_DIMENSIONS)
    if overrides:
        dims.update(overrides)
    action = dims["action"]
    pairings_ok = (
        dims["m"] * dims["xi"] == action
        and dims["e"] * dims["t"] == action
        and dims["p"] * dims["x"] == action
    )
    p_dim = dims["x"].inverse()
    e_dim = dims["t"].inverse()
    m_dim = dims["xi"].inverse()
    bracket_ok = p_dim * e_dim == dims["g"] * m_dim
    return pairings_ok and bracket_ok
