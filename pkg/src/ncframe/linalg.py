"""Minimal complex linear algebra for 3-vectors and small fixed-size matrices.

Dot products here are bilinear (no conjugation): the invariant "lengths"
of complex orthogonal geometry are bilinear squares, so ``bilinear_dot(v, v)``
can be any complex number, including zero for nonzero v.  Use :func:`hnorm`
for the ordinary Hermitian magnitude.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix

# Working representation: plain numpy arrays.
#   ComplexVec3 -- shape (3,),  complex128
#   ComplexMat3 -- shape (3, 3), complex128, row-major
#   RealMat4    -- shape (4, 4), float64, index order (t, x, y, z)
ComplexVec3 = np.ndarray
ComplexMat3 = np.ndarray
RealMat4 = np.ndarray

#: Default relative tolerance for all residual checks.
DEFAULT_TOL = 1e-10

#: Relative determinant cutoff below which a 3x3 inverse is refused.
SINGULARITY_CUTOFF = 1e-13


def vec3(v) -> ComplexVec3:
    """Coerce to a complex 3-vector."""
    a = np.asarray(v, dtype=complex)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def rvec3(v) -> np.ndarray:
    """Coerce to a real 3-vector; reject nonzero imaginary parts."""
    a = np.asarray(v)
    if np.iscomplexobj(a):
        if np.abs(a.imag).max() > DEFAULT_TOL * max(1.0, np.abs(a).max()):
            raise ValueError("expected a real 3-vector")
        a = a.real
    a = np.asarray(a, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def mat3(m) -> ComplexMat3:
    """Coerce to a complex 3x3 matrix."""
    a = np.asarray(m, dtype=complex)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    return a


def rmat4(m) -> RealMat4:
    """Coerce to a real 4x4 matrix."""
    a = np.asarray(m, dtype=float)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    return a


def bilinear_dot(u, v) -> complex:
    """Unconjugated dot product sum_i u_i v_i."""
    u, v = vec3(u), vec3(v)
    return complex(u @ v)


def cross(u, v) -> ComplexVec3:
    """Vector product, complex-bilinear in both arguments."""
    return np.cross(vec3(u), vec3(v))


def axial_matrix(v) -> ComplexMat3:
    """Antisymmetric matrix v^x with v^x w = v x w for every w."""
    v = vec3(v)
    return np.array(
        [
            [0.0, -v[2], v[1]],
            [v[2], 0.0, -v[0]],
            [-v[1], v[0], 0.0],
        ],
        dtype=complex,
    )


def mat3_inverse(m) -> ComplexMat3:
    """Inverse of a 3x3 complex matrix.

    Raises :class:`SingularMatrix` when |det m| <= SINGULARITY_CUTOFF * ||m||^3
    (scale-invariant test; the inf-norm here is the max absolute entry).
    """
    m = mat3(m)
    det = np.linalg.det(m)
    scale = inf_norm(m)
    if abs(det) <= SINGULARITY_CUTOFF * scale**3:
        raise SingularMatrix(f"|det| = {abs(det):.3e} below cutoff for scale {scale:.3e}")
    return np.linalg.inv(m)


def inf_norm(a) -> float:
    """Max absolute entry of an array (the norm used in all residuals)."""
    a = np.asarray(a)
    return float(np.abs(a).max()) if a.size else 0.0


def hnorm(v) -> float:
    """Hermitian (Euclidean) magnitude sqrt(sum |v_i|^2)."""
    return float(np.linalg.norm(np.asarray(v)))


def is_real(a, tol: float = DEFAULT_TOL) -> bool:
    """True if every imaginary part is below tol * max(1, |a|)."""
    a = np.asarray(a, dtype=complex)
    return bool(np.abs(a.imag).max() <= tol * max(1.0, float(np.abs(a).max()))) if a.size else True
