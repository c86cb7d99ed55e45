"""First-order nonlinear constitutive relations of noncommutative electrodynamics.

The complex field combinations

    f = E + i*c*B,      h = (D + i*H/c) / epsilon0

transform as plain 3-vectors under the complex orthogonal image of the
Lorentz group, which makes the first-order constitutive pair

    h = [1 + (f*.K*)] f + (f*.f*)/2 K
    f = [1 - (h*.K*)] h - (h*.h*)/2 K

manifestly form-covariant: rotating f, h and K together leaves both relations
unchanged, and for K in canonical position its stabilizer leaves even K
itself fixed.  The two relations are mutually inverse to first order in K
only; all residuals reported here are exact-formula residuals.

Dual rotations multiply the helicity-like combinations G = (h+f)/2 and
R = (h* - f*)/2 by a common phase.  Only the fourth roots of unity preserve
the constitutive pair; the continuous family fails at second order in K,
with the quarter-turn cases holding only after exchanging the roles of the
two relations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import SpinorElement, so3c_from_spinor
from .linalg import ComplexVec3, bilinear_dot, hnorm, rvec3, vec3


@dataclass(frozen=True)
class UnitSystem:
    """Electromagnetic unit constants; defaults are the natural units c = epsilon0 = 1."""

    c: float = 1.0
    epsilon0: float = 1.0

    def __post_init__(self):
        if not (self.c > 0 and self.epsilon0 > 0):
            raise ValueError("c and epsilon0 must be positive")

    @classmethod
    def natural(cls) -> "UnitSystem":
        return cls(1.0, 1.0)

    @classmethod
    def si(cls) -> "UnitSystem":
        return cls(c=299792458.0, epsilon0=8.8541878128e-12)


NATURAL = UnitSystem()


@dataclass(frozen=True)
class FieldState:
    """Electromagnetic field in SI-style variables with derived complex forms."""

    E: np.ndarray
    B: np.ndarray
    D: np.ndarray
    H: np.ndarray
    units: UnitSystem = NATURAL

    def __post_init__(self):
        for name in ("E", "B", "D", "H"):
            object.__setattr__(self, name, rvec3(getattr(self, name)))

    @property
    def f(self) -> ComplexVec3:
        return self.E + 1j * self.units.c * self.B

    @property
    def h(self) -> ComplexVec3:
        return (self.D + 1j * self.H / self.units.c) / self.units.epsilon0

    @classmethod
    def from_eb(cls, E, B, K, units: UnitSystem = NATURAL) -> "FieldState":
        """Build the full state from (E, B) using the forward constitutive relation."""
        D, H = constitutive_real_forward(E, B, K, units)
        return cls(E=E, B=B, D=D, H=H, units=units)


def _scale(f, K) -> float:
    s = hnorm(f) * (1.0 + hnorm(K) * hnorm(f))
    return s if s > 0.0 else 1.0


def constitutive_forward(f, K) -> ComplexVec3:
    """h = [1 + (f*.K*)] f + (f*.f*)/2 K (dots bilinear, stars conjugate)."""
    f, K = vec3(f), vec3(K)
    fc = np.conj(f)
    return (1.0 + bilinear_dot(fc, np.conj(K))) * f + 0.5 * bilinear_dot(fc, fc) * K


def constitutive_inverse(h, K) -> ComplexVec3:
    """f = [1 - (h*.K*)] h - (h*.h*)/2 K; inverse of the forward map to first order in K."""
    h, K = vec3(h), vec3(K)
    hc = np.conj(h)
    return (1.0 - bilinear_dot(hc, np.conj(K))) * h - 0.5 * bilinear_dot(hc, hc) * K


def constitutive_real_forward(E, B, K, units: UnitSystem = NATURAL):
    """(D, H) from (E, B) in real variables.

    Identical, term by term, to mapping f = E + i*c*B through
    :func:`constitutive_forward`; kept in real form so the two routes can
    serve as mutual checks.
    """
    E, cB = rvec3(E), units.c * rvec3(B)
    K = vec3(K)
    n, m = K.real, K.imag
    s1 = n @ E - m @ cB
    s2 = m @ E + n @ cB
    ecb = E @ cB
    quad = 0.5 * (E @ E - cB @ cB)
    d = E + s1 * E + s2 * cB + ecb * m + quad * n
    g = cB + s1 * cB - s2 * E - ecb * n + quad * m
    return units.epsilon0 * d, units.c * units.epsilon0 * g


def constitutive_real_inverse(D, H, K, units: UnitSystem = NATURAL):
    """(E, B) from (D, H); the real form of :func:`constitutive_inverse`."""
    d = rvec3(D) / units.epsilon0
    g = rvec3(H) / (units.c * units.epsilon0)
    K = vec3(K)
    n, m = K.real, K.imag
    s1 = m @ g - n @ d
    s2 = m @ d + n @ g
    dg = d @ g
    quad = 0.5 * (g @ g - d @ d)
    E = d + s1 * d - s2 * g - dg * m + quad * n
    cB = g + s1 * g + s2 * d + dg * n + quad * m
    return E, cB / units.c


def covariance_residual(b: SpinorElement, f, K) -> float:
    """Relative failure of form-covariance for one group element.

    Returns ||forward(O f, O K) - O forward(f, K)|| / (||f|| (1 + ||K|| ||f||))
    with O the complex orthogonal image of b; zero in exact arithmetic.
    """
    f, K = vec3(f), vec3(K)
    O = so3c_from_spinor(b).matrix
    r = constitutive_forward(O @ f, O @ K) - O @ constitutive_forward(f, K)
    return hnorm(r) / _scale(f, K)


def dual_transform(f, h, K, chi: float):
    """Dual rotation by angle chi on the field pair and the parameter.

    h' = cos(chi) h + i sin(chi) f, f' = i sin(chi) h + cos(chi) f, and
    K' = exp(i*chi) K; equivalently G and R both pick up the phase exp(i*chi).
    """
    f, h, K = vec3(f), vec3(h), vec3(K)
    c, s = np.cos(chi), np.sin(chi)
    return 1j * s * h + c * f, c * h + 1j * s * f, np.exp(1j * chi) * K


def dual_invariance_residual(f, K, chi: float, swapped: bool | None = None) -> float:
    """Residual of the constitutive relations after a dual rotation by chi.

    Builds h from f, rotates (f, h, K) by chi, and tests the primed pair
    against the relation asserted at the nearest quarter-turn.  At chi = 0 or
    pi that is the forward relation on (f', h'); at chi = pi/2 or 3*pi/2 the
    rotation exchanges the roles of f and h, so the inverse relation is the
    one that holds (``swapped=True``).  Pass ``swapped`` to force a role;
    ``None`` selects it from chi.  The residual is relative to
    ||f|| (1 + ||K|| ||f||) and vanishes (to rounding) exactly at the four
    quarter-turn angles; generic angles fail at second order in K.
    """
    f, K = vec3(f), vec3(K)
    if swapped is None:
        swapped = int(round(chi / (np.pi / 2))) % 4 in (1, 3)
    h = constitutive_forward(f, K)
    fp, hp, Kp = dual_transform(f, h, K, chi)
    if swapped:
        r = fp - constitutive_inverse(hp, Kp)
    else:
        r = hp - constitutive_forward(fp, Kp)
    return hnorm(r) / _scale(f, K)


@dataclass(frozen=True)
class DualFrame:
    """Phase-covariant variables G = (h + f)/2 and R = (h* - f*)/2."""

    G: ComplexVec3
    R: ComplexVec3

    def __post_init__(self):
        object.__setattr__(self, "G", vec3(self.G))
        object.__setattr__(self, "R", vec3(self.R))

    def fields(self):
        """Recover (f, h) = (G - R*, G + R*)."""
        rc = np.conj(self.R)
        return self.G - rc, self.G + rc


def gr_from_fields(f, h) -> DualFrame:
    f, h = vec3(f), vec3(h)
    return DualFrame(G=(h + f) / 2.0, R=np.conj(h - f) / 2.0)


def gr_constraint_residual(frame: DualFrame, K) -> tuple[float, float]:
    """Residual norms of the two constitutive constraints in (G, R) variables:

        2 (G*.R) K + (G*.K*) R* + (R.K*) G = 0
        2 R* = (G*.K*) G + (R.K*) R* + 1/2 (G*.G* + R.R) K

    Both vanish to second order in K for a frame built from a consistent
    (f, h) pair; K = 0 forces R = 0, the vacuum relation h = f.
    """
    K = vec3(K)
    G, R = frame.G, frame.R
    Gc, Rc, Kc = np.conj(G), np.conj(R), np.conj(K)
    a = bilinear_dot(Gc, Kc)
    b = bilinear_dot(R, Kc)
    s = bilinear_dot(Gc, R)
    r1 = 2.0 * s * K + a * Rc + b * G
    r2 = a * G + b * Rc + 0.5 * (bilinear_dot(Gc, Gc) + bilinear_dot(R, R)) * K - 2.0 * Rc
    return hnorm(r1), hnorm(r2)


# ---------------------------------------------------------------------------
# Grid identities: the real Maxwell system vs its complex and (G, R) rewrites.
# ---------------------------------------------------------------------------

def _pderiv(a: np.ndarray, axis: int, h: float) -> np.ndarray:
    # 2nd-order central difference, periodic wrap
    return (np.roll(a, -1, axis=axis) - np.roll(a, 1, axis=axis)) / (2.0 * h)


def _spacing3(spacing):
    s = np.atleast_1d(np.asarray(spacing, dtype=float))
    if s.size == 1:
        s = np.repeat(s, 3)
    if s.size != 3 or np.any(s <= 0):
        raise ValueError("spacing must be a positive scalar or 3-vector")
    return s


def grid_divergence(F: np.ndarray, spacing) -> np.ndarray:
    """Central-difference divergence of a (3, nx, ny, nz) field, periodic BCs."""
    h = _spacing3(spacing)
    return sum(_pderiv(F[i], i, h[i]) for i in range(3))


def grid_curl(F: np.ndarray, spacing) -> np.ndarray:
    """Central-difference curl of a (3, nx, ny, nz) field, periodic BCs."""
    h = _spacing3(spacing)
    d = lambda i, j: _pderiv(F[i], j, h[j])  # noqa: E731
    return np.stack([d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)])


def maxwell_variable_check(
    E, B, D, H,
    dE_dt, dB_dt, dD_dt, dH_dt,
    spacing,
    units: UnitSystem = NATURAL,
) -> dict:
    """Check that the real source-free Maxwell system and its rewrites agree.

    All inputs are (3, nx, ny, nz) samples on a uniform periodic grid, with
    analytic time derivatives supplied by the caller; div and curl are formal
    central-difference operators.  Three forms of the same system are
    evaluated: the real one (four residual fields), the complex combination
    in (D/eps0 + i c B, E + i H/(c eps0)), and the (G, R) form.  Since the
    rewrites are linear and the difference operators commute with them, the
    cross-form discrepancies sit at rounding level even for fields that do
    not solve the equations; the residuals themselves vanish (to truncation
    error) only for solutions.

    Returns a dict of max-abs residuals per form, plus the rewrite
    discrepancies "real_vs_complex" and "complex_vs_gr".
    """
    c, eps0 = units.c, units.epsilon0
    E, B, D, H = (np.asarray(x, dtype=float) for x in (E, B, D, H))
    dE, dB, dD, dH = (np.asarray(x, dtype=float) for x in (dE_dt, dB_dt, dD_dt, dH_dt))

    r_div_b = grid_divergence(B, spacing)
    r_faraday = grid_curl(E, spacing) + dB
    r_div_d = grid_divergence(D, spacing)
    r_ampere = grid_curl(H, spacing) / c - dD / c

    F1 = D / eps0 + 1j * c * B
    dF1 = dD / eps0 + 1j * c * dB
    F2 = E + 1j * H / (c * eps0)
    c_div = grid_divergence(F1, spacing)
    c_curl = -1j * dF1 / c + grid_curl(F2, spacing)

    f = E + 1j * c * B
    h = (D + 1j * H / c) / eps0
    df = dE + 1j * c * dB
    dh = (dD + 1j * dH / c) / eps0
    G, R = (h + f) / 2.0, np.conj(h - f) / 2.0
    dG, dR = (dh + df) / 2.0, np.conj(dh - df) / 2.0
    gr_div = grid_divergence(G + R, spacing)
    gr_curl = -1j * (dG + dR) / c + grid_curl(G - R, spacing)

    amax = lambda a: float(np.abs(a).max())  # noqa: E731
    return {
        "real": {
            "div_b": amax(r_div_b),
            "faraday": amax(r_faraday),
            "div_d": amax(r_div_d),
            "ampere": amax(r_ampere),
        },
        "complex": {"divergence": amax(c_div), "curl": amax(c_curl)},
        "gr": {"divergence": amax(gr_div), "curl": amax(gr_curl)},
        "real_vs_complex": {
            "divergence": amax(c_div - (r_div_d / eps0 + 1j * c * r_div_b)),
            "curl": amax(c_curl - (r_faraday + 1j * r_ampere / eps0)),
        },
        "complex_vs_gr": {
            "divergence": amax(gr_div - c_div),
            "curl": amax(gr_curl - c_curl),
        },
    }
