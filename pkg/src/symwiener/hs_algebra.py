"""Truncated Hilbert-Schmidt *-algebra extended by a unit coordinate.

An element is a d x d complex matrix A together with a scalar unit
coefficient t, representing A + t*1.  The unit is a genuine extra
orthonormal coordinate: <A + t1 | B + s1> = tr(B* A) + t * conj(s).
Letter 0 is the unit coordinate, letters 1..d are the diagonal matrix
units e_k = E_kk.

Both the plain trace inner product and the geometrically weighted variant
(letter k carries weight 2^-k) live here, along with the quaternion-style
imaginary pairing used by the Heisenberg-group machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np


class DimensionMismatchError(ValueError):
    """Operands live over different truncation dimensions."""


class HsElement:
    """A + t*1 with A a d x d complex matrix and t the unit coefficient."""

    __slots__ = ("d", "unit", "matrix", "_diagonal")

    def __init__(self, d: int, unit: complex = 0.0, matrix: np.ndarray | None = None):
        if d < 1:
            raise ValueError("truncation dimension must be >= 1")
        self.d = int(d)
        self.unit = complex(unit)
        if matrix is None:
            matrix = np.zeros((d, d), dtype=complex)
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (d, d):
            raise ValueError(f"matrix must be {d}x{d}, got {matrix.shape}")
        self.matrix = matrix
        self._diagonal: bool | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(d: int) -> "HsElement":
        return HsElement(d)

    @staticmethod
    def one(d: int) -> "HsElement":
        return HsElement(d, unit=1.0)

    @staticmethod
    def basis(d: int, k: int) -> "HsElement":
        """e_0 = unit, e_k = E_kk for 1 <= k <= d."""
        if not 0 <= k <= d:
            raise ValueError(f"basis letter must lie in 0..{d}, got {k}")
        if k == 0:
            return HsElement.one(d)
        m = np.zeros((d, d), dtype=complex)
        m[k - 1, k - 1] = 1.0
        return HsElement(d, matrix=m)

    @staticmethod
    def diagonal(d: int, diag: Iterable[complex], unit: complex = 0.0) -> "HsElement":
        diag = np.asarray(list(diag), dtype=complex)
        if diag.shape != (d,):
            raise ValueError(f"need {d} diagonal values, got {diag.shape}")
        return HsElement(d, unit=unit, matrix=np.diag(diag))

    @staticmethod
    def from_coords(coords: Iterable[complex]) -> "HsElement":
        """Inverse of .coords(): coords = (unit, A_11, ..., A_dd)."""
        coords = list(coords)
        return HsElement.diagonal(len(coords) - 1, coords[1:], unit=coords[0])

    # -- structure ----------------------------------------------------

    @property
    def is_diagonal(self) -> bool:
        if self._diagonal is None:
            self._diagonal = bool(
                np.all(self.matrix == np.diag(np.diagonal(self.matrix)))
            )
        return self._diagonal

    def coords(self) -> tuple[complex, ...]:
        """(unit, A_11, ..., A_dd); only meaningful for diagonal elements."""
        if not self.is_diagonal:
            raise ValueError("coordinates are defined for diagonal-plus-unit elements only")
        return (self.unit, *(complex(z) for z in np.diagonal(self.matrix)))

    def adjoint(self) -> "HsElement":
        return HsElement(self.d, unit=np.conj(self.unit), matrix=self.matrix.conj().T)

    def __add__(self, other: "HsElement") -> "HsElement":
        _check_dims(self, other)
        return HsElement(self.d, self.unit + other.unit, self.matrix + other.matrix)

    def __sub__(self, other: "HsElement") -> "HsElement":
        _check_dims(self, other)
        return HsElement(self.d, self.unit - other.unit, self.matrix - other.matrix)

    def __neg__(self) -> "HsElement":
        return HsElement(self.d, -self.unit, -self.matrix)

    def __mul__(self, scalar: complex) -> "HsElement":
        return HsElement(self.d, self.unit * scalar, self.matrix * scalar)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.sqrt(hs_inner(self, self).real))

    def __repr__(self) -> str:
        return f"HsElement(d={self.d}, unit={self.unit!r}, diagonal={self.is_diagonal})"

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        """{"unit": [re, im], "matrix": row-major [re, im] pairs, "d": d}."""
        pairs = [[float(z.real), float(z.imag)] for z in self.matrix.ravel()]
        return {
            "unit": [float(self.unit.real), float(self.unit.imag)],
            "matrix": pairs,
            "d": self.d,
        }

    @staticmethod
    def from_json(obj: dict) -> "HsElement":
        d = int(obj["d"])
        unit = complex(obj["unit"][0], obj["unit"][1])
        flat = np.array([complex(re, im) for re, im in obj["matrix"]], dtype=complex)
        return HsElement(d, unit=unit, matrix=flat.reshape(d, d))


def _check_dims(a: HsElement, b: HsElement) -> None:
    if a.d != b.d:
        raise DimensionMismatchError(f"dimension mismatch: {a.d} vs {b.d}")


def hs_inner(a: HsElement, b: HsElement) -> complex:
    """<a|b> = tr(B* A) + t_a * conj(t_b); linear in a, conjugate-linear in b."""
    _check_dims(a, b)
    return complex(np.vdot(b.matrix, a.matrix) + a.unit * np.conj(b.unit))


def diag_coeff(a: HsElement, k: int) -> complex:
    """Fourier coordinate of ``a`` on the basis letter k.

    k = 0 reads the unit coefficient; k >= 1 reads the diagonal entry
    A_kk.  (The companion convention chi_0 == 1 as a *function* lives in
    the group-side evaluation, not here.)
    """
    if not 0 <= k <= a.d:
        raise ValueError(f"letter must lie in 0..{a.d}, got {k}")
    if k == 0:
        return a.unit
    return complex(a.matrix[k - 1, k - 1])


def letter_weights(d: int, weighted: bool = False) -> np.ndarray:
    """Per-letter weights for letters 0..d: all ones, or 2^-k geometric."""
    if weighted:
        return 0.5 ** np.arange(d + 1, dtype=float)
    return np.ones(d + 1, dtype=float)


def weighted_inner(a: HsElement, b: HsElement) -> complex:
    """Geometrically weighted inner product: letter k carries weight 2^-k.

    The matrix part contributes sum_k 2^-k (B* A)_kk (hermitian-dual
    column index k = 1..d) and the unit coordinate keeps weight 1.
    """
    _check_dims(a, b)
    w = 0.5 ** np.arange(1, a.d + 1, dtype=float)
    prod = b.matrix.conj().T @ a.matrix
    return complex(np.sum(w * np.diagonal(prod)) + a.unit * np.conj(b.unit))


def weighted_basis_norm_sq_sum(d: int) -> float:
    """Partial sum over letters 0..d of the squared weighted basis norms.

    Equals 2 * (1 - 2^-(d+1)); the full geometric series sums to 2.
    """
    return float(np.sum(letter_weights(d, weighted=True)))


@dataclass(frozen=True)
class QuaternionPair:
    """p = a + b*j with both components over the same truncation dimension."""

    a: HsElement
    b: HsElement

    def __post_init__(self) -> None:
        _check_dims(self.a, self.b)

    @property
    def d(self) -> int:
        return self.a.d

    def scale(self, t: complex) -> "QuaternionPair":
        return QuaternionPair(t * self.a, t * self.b)

    def __add__(self, other: "QuaternionPair") -> "QuaternionPair":
        return QuaternionPair(self.a + other.a, self.b + other.b)


def im_pairing(p: QuaternionPair, q: QuaternionPair, weighted: bool = False) -> complex:
    """Imaginary part of the quaternionic pairing: <a'|b> - <a|b'>.

    Antisymmetric; vanishes at p = q.  The weighted flag switches the
    underlying scalar product to the geometric one.
    """
    inner = weighted_inner if weighted else hs_inner
    return inner(q.a, p.b) - inner(p.a, q.b)
