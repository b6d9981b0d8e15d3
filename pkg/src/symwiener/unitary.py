"""Haar sampling on U(m), the Livsic block transform between levels, virtual
unitary matrices (a top-level unitary with its lazily computed descent
chain), right actions, and evaluation of the trace functionals attached to
Hilbert-Schmidt elements.

Sampling uses the Ginibre + QR construction with the diagonal phase
correction; plain QR alone is not Haar distributed because LAPACK's R
carries arbitrary diagonal phases.
"""

from __future__ import annotations

import numpy as np

from .hs_algebra import HsElement

#: |1 + t| below this triggers the singular branch of the Livsic transform.
LIVSIC_BRANCH_TOLERANCE = 1e-12

#: Construction-time unitarity validation tolerance (max-entry norm).
UNITARITY_TOLERANCE = 1e-10


def haar_batch(m: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """n Haar-distributed unitaries of size m, shape (n, m, m).

    Complex Ginibre draw followed by QR and the R-diagonal phase fix that
    makes the law exactly invariant.
    """
    if m < 1:
        raise ValueError("matrix size must be >= 1")
    z = (rng.standard_normal((n, m, m)) + 1j * rng.standard_normal((n, m, m))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    phases = diag / np.abs(diag)
    return q * phases[:, None, :]


def haar_sample(m: int, rng: np.random.Generator) -> "UnitaryMatrix":
    """One Haar-distributed unitary at level m."""
    return UnitaryMatrix(haar_batch(m, 1, rng)[0])


class UnitaryMatrix:
    """An m x m unitary, validated to UNITARITY_TOLERANCE on construction."""

    __slots__ = ("m", "entries")

    def __init__(self, entries: np.ndarray):
        entries = np.asarray(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {entries.shape}")
        defect = unitarity_defect(entries)
        if defect > UNITARITY_TOLERANCE:
            raise ValueError(f"matrix is not unitary: max |U*U - I| = {defect:.3e}")
        self.m = entries.shape[0]
        self.entries = entries

    def adjoint(self) -> "UnitaryMatrix":
        return UnitaryMatrix(self.entries.conj().T)

    def to_json(self) -> dict:
        """Same row-major [re, im] matrix encoding as the algebra elements."""
        pairs = [[float(z.real), float(z.imag)] for z in self.entries.ravel()]
        return {"matrix": pairs, "m": self.m}

    @staticmethod
    def from_json(obj: dict) -> "UnitaryMatrix":
        m = int(obj["m"])
        flat = np.array([complex(re, im) for re, im in obj["matrix"]], dtype=complex)
        return UnitaryMatrix(flat.reshape(m, m))

    def __repr__(self) -> str:
        return f"UnitaryMatrix(m={self.m})"


def unitarity_defect(u: np.ndarray) -> float:
    """max-entry norm of U*U - I (batched over leading axes)."""
    u = np.asarray(u, dtype=complex)
    gram = np.swapaxes(u, -2, -1).conj() @ u
    eye = np.eye(u.shape[-1])
    return float(np.max(np.abs(gram - eye)))


def livsic_project_batch(u: np.ndarray) -> np.ndarray:
    """One Livsic descent step U(m+1) -> U(m) on a stack of matrices.

    For u = [[z, alpha], [beta, t]] the image is z - alpha (1+t)^-1 beta,
    except on the branch |1 + t| < LIVSIC_BRANCH_TOLERANCE where it is z
    itself (there alpha and beta vanish for exactly unitary input).  The
    image of a unitary is again unitary.
    """
    u = np.asarray(u, dtype=complex)
    m = u.shape[-1] - 1
    if m < 1:
        raise ValueError("need at least a 2x2 matrix to descend")
    z = u[..., :m, :m]
    alpha = u[..., :m, m:]
    beta = u[..., m:, :m]
    t = u[..., m, m]
    denom = 1.0 + t
    singular = np.abs(denom) < LIVSIC_BRANCH_TOLERANCE
    safe = np.where(singular, 1.0, denom)
    corr = alpha * (1.0 / safe)[..., None, None] @ beta
    out = z - corr
    if np.any(singular):
        out = np.where(singular[..., None, None], z, out)
    return out


def livsic_project(u: UnitaryMatrix) -> UnitaryMatrix:
    """Single-matrix Livsic descent with unitarity re-validation."""
    return UnitaryMatrix(livsic_project_batch(u.entries[None])[0])


def livsic_chain_batch(u: np.ndarray, k: int) -> np.ndarray:
    """Composed descent from the size of ``u`` down to level k (identity if k >= size)."""
    if k < 1:
        raise ValueError("target level must be >= 1")
    out = np.asarray(u, dtype=complex)
    while out.shape[-1] > k:
        out = livsic_project_batch(out)
    return out


def livsic_chain(u: UnitaryMatrix, k: int) -> UnitaryMatrix:
    if k >= u.m:
        return u
    return UnitaryMatrix(livsic_chain_batch(u.entries, k))


def embed(u: np.ndarray, m: int) -> np.ndarray:
    """Pad a unitary with an identity block up to size m."""
    k = u.shape[-1]
    if k > m:
        raise ValueError(f"cannot embed a {k}x{k} matrix at level {m}")
    if k == m:
        return u
    out = np.eye(m, dtype=complex)
    out[:k, :k] = u
    return out


class VirtualUnitary:
    """A unitary at level m together with its Livsic descent chain.

    Levels below m are materialised lazily and cached; levels at or above
    m are the identity-padded embedding.
    """

    __slots__ = ("level", "top", "_chain")

    def __init__(self, top: UnitaryMatrix | np.ndarray):
        if isinstance(top, np.ndarray):
            top = UnitaryMatrix(top)
        self.level = top.m
        self.top = top
        self._chain: dict[int, np.ndarray] = {top.m: top.entries}

    def at_level(self, k: int) -> np.ndarray:
        """The level-k member of the stabilised sequence."""
        if k < 1:
            raise ValueError("level must be >= 1")
        if k >= self.level:
            return embed(self.top.entries, k)
        if k not in self._chain:
            # descend from the nearest cached level above k, caching each step
            src = min(lvl for lvl in self._chain if lvl > k)
            cur = self._chain[src]
            for lvl in range(src - 1, k - 1, -1):
                cur = livsic_project_batch(cur[None])[0]
                self._chain[lvl] = cur
        return self._chain[k]

    def adjoint(self) -> "VirtualUnitary":
        return VirtualUnitary(self.top.adjoint())


def right_action(v: VirtualUnitary, g: tuple[np.ndarray, np.ndarray]) -> VirtualUnitary:
    """Replace the top u by w* u v with v, w identity-padded to the level.

    The pair g = (v, w) must fit inside the tracked level.  The descent
    cache of the input is not reused (the chain of the acted element is
    recomputed on demand).
    """
    vmat, wmat = (np.asarray(x, dtype=complex) for x in g)
    m = v.level
    if vmat.shape[-1] > m or wmat.shape[-1] > m:
        raise ValueError("action pair exceeds the tracked level")
    acted = embed(wmat, m).conj().T @ v.top.entries @ embed(vmat, m)
    return VirtualUnitary(acted)


def action_inverse(g: tuple[np.ndarray, np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of a right-action pair: (v, w) -> (v*, w*)."""
    vmat, wmat = g
    return vmat.conj().T, wmat.conj().T


def paley_wiener_eval(a: HsElement, v: VirtualUnitary) -> complex:
    """conj(t_a) + tr(A* u) over the tracked d x d block of the top level.

    The unit coordinate of the argument contributes the constant 1, so the
    unit element maps to the constant function; the basis letter k reads
    the diagonal entry u_kk.  Requires level >= d so no identity padding
    enters the evaluated block.
    """
    if a.d > v.level:
        raise ValueError(f"level {v.level} too small for dimension {a.d}")
    block = v.top.entries[: a.d, : a.d]
    return complex(np.conj(a.unit) + np.vdot(a.matrix, block))


def paley_wiener_eval_batch(a: HsElement, tops: np.ndarray) -> np.ndarray:
    """Vectorised trace functional over a stack of top-level matrices."""
    d = a.d
    if tops.shape[-1] < d:
        raise ValueError(f"level {tops.shape[-1]} too small for dimension {d}")
    block = tops[..., :d, :d]
    return np.conj(a.unit) + np.einsum("jk,njk->n", a.matrix.conj(), block)


def diagonal_coordinates_batch(tops: np.ndarray, letters: tuple[int, ...]) -> np.ndarray:
    """Stack of (phi_{i1}, ..., phi_{il}) rows; letter 0 is the constant 1."""
    n = tops.shape[0]
    cols = []
    for k in letters:
        if k == 0:
            cols.append(np.ones(n, dtype=complex))
        else:
            if k > tops.shape[-1]:
                raise ValueError(f"letter {k} exceeds level {tops.shape[-1]}")
            cols.append(tops[:, k - 1, k - 1])
    return np.stack(cols, axis=1)


# -- closed-form Haar moments (small oracle set) ------------------------


def haar_pair_moment(m: int, j: int, k: int, jp: int, kp: int) -> complex:
    """E[u_jk conj(u_j'k')] = delta_jj' delta_kk' / m (1-based indices)."""
    return (1.0 / m) if (j == jp and k == kp) else 0.0


def haar_abs4_moment(m: int) -> float:
    """E|u_jk|^4 = 2 / (m (m+1))."""
    return 2.0 / (m * (m + 1))


def haar_same_row_moment(m: int) -> float:
    """E[|u_jk|^2 |u_jl|^2] for k != l (same row or same column) = 1/(m(m+1))."""
    return 1.0 / (m * (m + 1))


def haar_disjoint_moment(m: int) -> float:
    """E[|u_jk|^2 |u_j'k'|^2] with j != j', k != k': 1/(m^2 - 1)."""
    return 1.0 / (m * m - 1)
