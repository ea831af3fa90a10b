"""Complex linear algebra, seeded Gaussian sampling and exact rational scalars.

Randomness is produced by a counter-based generator (Philox) keyed by a
(seed, stream) pair, so independent streams can be consumed concurrently and
every draw is bit-identical across runs and platforms.  Complex Gaussians are
generated by Box-Muller applied to the raw counter output rather than through
numpy's Generator, which keeps the sampled values independent of numpy's
internal algorithm choices.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

import numpy as np

from .errors import DimensionError

# Default relative tolerance for numerical rank decisions.  Channel draws are
# O(1) Gaussians and every stacked system in the schemes stays below ~40x40,
# so generic conditioning leaves orders of magnitude of headroom.
REL_TOL = 1e-9

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _token64(token) -> int:
    if isinstance(token, (int, np.integer)):
        return int(token) & _MASK64
    if isinstance(token, str):
        digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "little")
    raise TypeError(f"stream token must be int or str, got {type(token)!r}")


def derive_stream(base: int, *tokens) -> int:
    """Mix tokens into a stream id; stable across platforms and sessions."""
    h = base & _MASK64
    for token in tokens:
        h = _splitmix64(h ^ _token64(token))
    return h


class SeededRng:
    """Counter-based random stream keyed by a 64-bit (seed, stream) pair.

    Equal (seed, stream) pairs yield bit-identical sequences; substreams
    derived with distinct token paths are statistically independent.
    """

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed) & _MASK64
        self.stream = int(stream) & _MASK64
        self._bits = np.random.Philox(key=np.array([self.seed, self.stream], dtype=np.uint64))

    def substream(self, *tokens) -> "SeededRng":
        """A fresh, independent stream addressed by the given tokens."""
        return SeededRng(self.seed, derive_stream(self.stream, *tokens))

    def raw(self, n: int) -> np.ndarray:
        return np.atleast_1d(self._bits.random_raw(n))

    def uniform(self, n: int) -> np.ndarray:
        """n doubles uniform on [0, 1)."""
        return (self.raw(n) >> 11) * 2.0**-53

    def complex_gaussian(self, n: int) -> np.ndarray:
        """n i.i.d. circularly-symmetric complex Gaussians, unit variance.

        Box-Muller in polar form: |z|^2 ~ Exp(1), phase uniform, so the real
        and imaginary parts are each N(0, 1/2).
        """
        raw = self.raw(2 * n)
        u1 = ((raw[:n] >> 11) + 1) * 2.0**-53  # (0, 1], keeps log finite
        u2 = (raw[n:] >> 11) * 2.0**-53
        return np.sqrt(-np.log(u1)) * np.exp(2j * np.pi * u2)


def gaussian_matrix(rng: SeededRng, rows: int, cols: int) -> np.ndarray:
    """rows x cols matrix of i.i.d. unit-variance complex Gaussian entries."""
    if rows < 1 or cols < 1:
        raise DimensionError(f"gaussian_matrix needs positive dimensions, got {rows}x{cols}")
    return rng.complex_gaussian(rows * cols).reshape(rows, cols)


def assert_finite(m: np.ndarray, what: str = "matrix") -> None:
    if not np.all(np.isfinite(m.view(np.float64) if np.iscomplexobj(m) else m)):
        raise ValueError(f"{what} contains non-finite entries")


def rank(m: np.ndarray, rel_tol: float = REL_TOL) -> int:
    """Numerical rank: singular values above rel_tol times the largest."""
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


def solve_least_squares(a: np.ndarray, b: np.ndarray, rel_tol: float = REL_TOL):
    """Minimize ||a x - b||.

    Returns (solution, residual_norm, well_posed) where well_posed is true
    iff a has full column rank under rel_tol.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2:
        raise DimensionError("lhs must be a matrix")
    if a.shape[0] != b.shape[0]:
        raise DimensionError(f"row mismatch: lhs has {a.shape[0]} rows, rhs has {b.shape[0]}")
    x, _, _, _ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.linalg.norm(a @ x - b))
    well_posed = rank(a, rel_tol) == a.shape[1]
    return x, residual, well_posed


def nullspace(m: np.ndarray, rel_tol: float = REL_TOL) -> np.ndarray:
    """Orthonormal basis of the (right) null space, columns of the result."""
    if m.size == 0:
        return np.eye(m.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(m)
    if s.size and s[0] > 0:
        r = int(np.sum(s > rel_tol * s[0]))
    else:
        r = 0
    return vh[r:].conj().T


def orth(m: np.ndarray, rel_tol: float = REL_TOL) -> np.ndarray:
    """Orthonormal basis of the column space, columns of the result."""
    if m.size == 0 or not np.any(m):
        return np.zeros((m.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    r = int(np.sum(s > rel_tol * s[0])) if s[0] > 0 else 0
    return u[:, :r]


def frac(num, den=1) -> Fraction:
    """Exact rational; thin wrapper so call sites stay terse."""
    return Fraction(num, den)
