"""Closed-form one-soliton fields, shape classification and profile sampling.

The candidate one-soliton of the coupled characteristic system is, with
phase ``theta = k*sigma - omega*tau + theta0``,

    u = 4*(omega+k)**2 * (tanh(theta) + 1),
    Z = (sigma+tau)/2 - 2*(omega+k) * (tanh(theta) + 1),

equivalently ``u = G/F`` and
``Z = (sigma+tau)/2 + 2*(d_tau - d_sigma) log F`` for the tau pair
``F = 1 + exp(2*theta)``, ``G = 8*(omega+k)**2 * exp(2*theta)``.

The physical-frame profile is the parametric curve ``(y, u)`` with
``y = -Z + C``.  Its shape is governed by the turning points of ``y`` along
the profile: ``dZ/dsigma = (1 - 4*(omega+k)*k*sech(theta)**2)/2`` vanishes
twice (loop), once degenerately (cusp) or never (kink) according to whether
``4*(omega+k)*k`` exceeds, equals or falls below one, which is exactly the
``alpha_critical`` threshold of :mod:`relaxwave.dispersion`.

The complex variant is ``Q = A*sech(Re theta)*exp(i*Im theta)`` with
``A = 4*(Re k + Re omega)``.  Its companion field ``Z`` is not part of the
printed closed forms; it is reconstructed here by integrating the third
equation of the complex system in the traveling frame with decaying boundary
data (the integral of ``sech**2`` is elementary, so the quadrature closes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .dispersion import ComplexWave, RealWave, alpha_critical
from .errors import DomainError
from .hirota import ExpAtom, TauFunction

__all__ = [
    "FieldBundle",
    "TauPair",
    "ProfileSamples",
    "ShapeClass",
    "SHAPE_LOOP",
    "SHAPE_CUSP",
    "SHAPE_KINK",
    "sech",
    "theta",
    "eval_uZ",
    "momentum",
    "dZ_dsigma",
    "real_bundles",
    "tau_pair",
    "u_from_tau_pair",
    "Z_from_tau_pair",
    "eval_complex_Q",
    "complex_Z",
    "complex_bundles",
    "singular_thetas",
    "classify",
    "profile",
    "count_turning_points",
    "xi_zeta_from_sigma_tau",
    "sigma_tau_from_xi_zeta",
    "hodograph_y_quadrature",
]

SHAPE_LOOP = "loop"
SHAPE_CUSP = "cusp"
SHAPE_KINK = "kink"

_MOMENTUM_SHAPE = {SHAPE_LOOP: "loop-like", SHAPE_CUSP: "cusp-like", SHAPE_KINK: "hump-like"}


def sech(x):
    """Overflow-safe ``1/cosh``."""
    ax = np.abs(x)
    e = np.exp(-ax)
    return 2.0 * e / (1.0 + e * e)


@dataclass(frozen=True)
class FieldBundle:
    """A field with its first and pure second partial derivatives on a grid."""

    f: np.ndarray
    s: np.ndarray
    t: np.ndarray
    ss: np.ndarray
    tt: np.ndarray


@dataclass(frozen=True)
class TauPair:
    """The tau-function pair whose ratio and log-derivative rebuild ``(u, Z)``."""

    F: TauFunction
    G: TauFunction


@dataclass(frozen=True)
class ShapeClass:
    """Shape verdict of a traveling profile.

    ``shape`` is one of ``"loop" | "cusp" | "kink"``; ``momentum_shape`` the
    matching descriptor of the momentum curve; ``singular_thetas`` the phase
    values where ``dZ/dsigma`` vanishes (two, one degenerate, or none).
    """

    shape: str
    momentum_shape: str
    singular_thetas: tuple[float, ...]
    alpha_critical: float


@dataclass(frozen=True)
class ProfileSamples:
    """Fixed-``tau`` samples of the parametric physical-frame profile.

    Rows share a single gauge constant ``C`` with ``y = -Z + C``; ``pi`` is
    the momentum density ``u_sigma + u_tau``.
    """

    wave: RealWave
    tau: float
    C: float
    sigma: np.ndarray
    theta: np.ndarray
    u: np.ndarray
    Z: np.ndarray
    y: np.ndarray
    pi: np.ndarray
    dZdsigma: np.ndarray


def theta(w: RealWave, sigma, tau):
    """Traveling phase ``k*sigma - omega*tau + theta0``."""
    return w.k * np.asarray(sigma, dtype=float) - w.omega * np.asarray(tau, dtype=float) \
        + w.theta0


def eval_uZ(w: RealWave, sigma, tau):
    """Closed-form ``(u, Z)`` of the candidate one-soliton."""
    th = theta(w, sigma, tau)
    bump = np.tanh(th) + 1.0
    amp = 4.0 * (w.omega + w.k) ** 2
    u = amp * bump
    Z = 0.5 * (np.asarray(sigma, dtype=float) + np.asarray(tau, dtype=float)) \
        - 2.0 * (w.omega + w.k) * bump
    return u, Z


def momentum(w: RealWave, sigma, tau):
    """Momentum density ``u_sigma + u_tau = 4*(omega+k)**2*(k-omega)*sech(theta)**2``."""
    th = theta(w, sigma, tau)
    return 4.0 * (w.omega + w.k) ** 2 * (w.k - w.omega) * sech(th) ** 2


def dZ_dsigma(w: RealWave, sigma, tau):
    """Profile slope factor ``(1 - 4*(omega+k)*k*sech(theta)**2)/2``."""
    th = theta(w, sigma, tau)
    return 0.5 * (1.0 - 4.0 * (w.omega + w.k) * w.k * sech(th) ** 2)


def real_bundles(w: RealWave, sigma, tau) -> tuple[FieldBundle, FieldBundle]:
    """Analytic derivative bundles of ``(u, Z)`` (first and pure second partials)."""
    sigma = np.asarray(sigma, dtype=float)
    tau = np.asarray(tau, dtype=float)
    th = theta(w, sigma, tau)
    T = np.tanh(th)
    S2 = sech(th) ** 2
    A = 4.0 * (w.omega + w.k) ** 2
    B = 2.0 * (w.omega + w.k)
    k, om = w.k, w.omega
    bu = FieldBundle(
        f=A * (T + 1.0),
        s=A * k * S2,
        t=-A * om * S2,
        ss=-2.0 * A * k * k * S2 * T,
        tt=-2.0 * A * om * om * S2 * T,
    )
    bz = FieldBundle(
        f=0.5 * (sigma + tau) - B * (T + 1.0),
        s=0.5 - B * k * S2,
        t=0.5 + B * om * S2,
        ss=2.0 * B * k * k * S2 * T,
        tt=2.0 * B * om * om * S2 * T,
    )
    return bu, bz


def tau_pair(w: RealWave) -> TauPair:
    """Tau pair ``F = 1 + E``, ``G = 8*(omega+k)**2*E`` with ``E = exp(2*theta)``."""
    c = math.exp(2.0 * w.theta0)
    a, b = 2.0 * w.k, -2.0 * w.omega
    F = TauFunction.from_atoms([ExpAtom(1.0, 0.0, 0.0), ExpAtom(c, a, b)])
    G = TauFunction.from_atoms([ExpAtom(8.0 * (w.omega + w.k) ** 2 * c, a, b)])
    return TauPair(F=F, G=G)


def u_from_tau_pair(pair: TauPair, sigma, tau):
    """Field ``u = G/F`` evaluated pointwise."""
    return pair.G(sigma, tau) / pair.F(sigma, tau)


def Z_from_tau_pair(pair: TauPair, sigma, tau):
    """Field ``Z = (sigma+tau)/2 + 2*(d_tau - d_sigma) log F`` evaluated pointwise."""
    F = pair.F(sigma, tau)
    logderiv = (pair.F.dtau()(sigma, tau) - pair.F.dsigma()(sigma, tau)) / F
    return 0.5 * (np.asarray(sigma, dtype=float) + np.asarray(tau, dtype=float)) \
        + 2.0 * logderiv


def eval_complex_Q(cw: ComplexWave, sigma, tau):
    """Real and imaginary parts of ``Q = A*sech(Re theta)*exp(i*Im theta)``.

    ``A = 4*(Re k + Re omega)``.
    """
    th = cw.k * np.asarray(sigma, dtype=complex) - cw.omega * np.asarray(tau, dtype=complex) \
        + cw.theta0
    A = 4.0 * (cw.k.real + cw.omega.real)
    mag = A * sech(th.real)
    return mag * np.cos(th.imag), mag * np.sin(th.imag)


def _complex_zeta_coeff(cw: ComplexWave) -> float:
    # Traveling-frame integration constant of the companion field: the third
    # equation reduces to zeta'' = -(|Q|**2)' / (2*(Re k + Re omega)), and the
    # decaying-boundary antiderivative of A**2*sech**2 is elementary.
    s = cw.k.real + cw.omega.real
    if s == 0.0:
        return 0.0
    A = 4.0 * s
    return A * A / (2.0 * s)


def complex_Z(cw: ComplexWave, sigma, tau):
    """Companion field of the complex soliton, reconstructed by quadrature.

    The traveling-frame ansatz ``Z = (sigma+tau)/2 + zeta(Re theta)`` closes
    the third equation of the complex system; decaying boundary data and the
    requirement ``Z -> sigma/2`` behind the pulse fix both constants.

    Raises
    ------
    DomainError
        If ``Re k == 0`` while ``|Q|`` is nonzero, in which case ``|Q|`` does
        not decay along ``sigma`` and the quadrature has no decaying solution.
    """
    if cw.k.real == 0.0 and (cw.k.real + cw.omega.real) != 0.0:
        raise DomainError(
            "companion-field quadrature requires decaying |Q| (Re k != 0)")
    sigma = np.asarray(sigma, dtype=float)
    tau = np.asarray(tau, dtype=float)
    thr = cw.k.real * sigma - cw.omega.real * tau + cw.theta0.real
    c = _complex_zeta_coeff(cw)
    return 0.5 * (sigma + tau) - c * (np.tanh(thr) + 1.0)


def complex_bundles(cw: ComplexWave, sigma, tau):
    """Analytic derivative bundles ``(Re Q, Im Q, Z)`` of the complex soliton."""
    sigma = np.asarray(sigma, dtype=float)
    tau = np.asarray(tau, dtype=float)
    kr, ki = cw.k.real, cw.k.imag
    wr, wi = cw.omega.real, cw.omega.imag
    thr = kr * sigma - wr * tau + cw.theta0.real
    thi = ki * sigma - wi * tau + cw.theta0.imag
    S0 = sech(thr)
    T = np.tanh(thr)
    S1 = -S0 * T
    S2d = S0 - 2.0 * S0 ** 3
    A = 4.0 * (kr + wr)
    phase = np.exp(1j * thi)
    Q = A * S0 * phase
    Q_s = A * (kr * S1 + 1j * ki * S0) * phase
    Q_t = A * (-wr * S1 - 1j * wi * S0) * phase
    Q_ss = A * (kr * kr * S2d + 2j * kr * ki * S1 - ki * ki * S0) * phase
    Q_tt = A * (wr * wr * S2d + 2j * wr * wi * S1 - wi * wi * S0) * phase
    bqr = FieldBundle(f=Q.real, s=Q_s.real, t=Q_t.real, ss=Q_ss.real, tt=Q_tt.real)
    bqi = FieldBundle(f=Q.imag, s=Q_s.imag, t=Q_t.imag, ss=Q_ss.imag, tt=Q_tt.imag)
    c = _complex_zeta_coeff(cw)
    S0sq = S0 * S0
    bz = FieldBundle(
        f=0.5 * (sigma + tau) - c * (T + 1.0),
        s=0.5 - c * kr * S0sq,
        t=0.5 + c * wr * S0sq,
        ss=2.0 * c * kr * kr * S0sq * T,
        tt=2.0 * c * wr * wr * S0sq * T,
    )
    return bqr, bqi, bz


def singular_thetas(w: RealWave, tol: float = 1e-9) -> tuple[float, ...]:
    """Phase values where the profile slope ``dZ/dsigma`` vanishes.

    With ``s = 4*(omega+k)*k``: two roots ``+/- arccosh(sqrt(s))`` for
    ``s > 1``, a single degenerate root ``0.0`` for ``|s - 1| <= tol``, none
    for ``s < 1``.
    """
    s = 4.0 * (w.omega + w.k) * w.k
    if abs(s - 1.0) <= tol:
        return (0.0,)
    if s < 1.0:
        return ()
    r = math.acosh(math.sqrt(s))
    return (-r, r)


def classify(w: RealWave, tol: float = 1e-9) -> ShapeClass:
    """Classify the traveling profile as loop, cusp or kink.

    The verdict compares ``alpha`` against ``alpha_critical(v)`` with a
    relative tolerance; the singular phase values are populated consistently
    with the verdict.  Requires ``0 < v < 1``.
    """
    ac = alpha_critical(w.v)
    delta = w.alpha - ac
    if abs(delta) <= tol * max(1.0, ac):
        shape = SHAPE_CUSP
        roots: tuple[float, ...] = (0.0,)
    elif delta < 0.0:
        shape = SHAPE_LOOP
        s = 4.0 * (w.omega + w.k) * w.k
        r = math.acosh(math.sqrt(s))
        roots = (-r, r)
    else:
        shape = SHAPE_KINK
        roots = ()
    return ShapeClass(shape=shape, momentum_shape=_MOMENTUM_SHAPE[shape],
                      singular_thetas=roots, alpha_critical=ac)


def profile(w: RealWave, tau: float = 0.0, sigma_min: float = -15.0,
            sigma_max: float = 15.0, n: int = 601, C: float = 0.0) -> ProfileSamples:
    """Sample the parametric profile ``(y, u)`` at fixed ``tau``.

    ``y = -Z + C``; the returned rows also carry the momentum density and the
    slope factor ``dZ/dsigma`` used by the turning-point count.
    """
    if not sigma_min < sigma_max:
        raise DomainError(f"need sigma_min < sigma_max, got [{sigma_min}, {sigma_max}]")
    if n < 2:
        raise DomainError(f"need at least 2 samples, got n={n}")
    sigma = np.linspace(sigma_min, sigma_max, n)
    th = theta(w, sigma, tau)
    u, Z = eval_uZ(w, sigma, tau)
    return ProfileSamples(
        wave=w,
        tau=float(tau),
        C=float(C),
        sigma=sigma,
        theta=th,
        u=u,
        Z=Z,
        y=C - Z,
        pi=momentum(w, sigma, tau),
        dZdsigma=dZ_dsigma(w, sigma, tau),
    )


def count_turning_points(dZdsigma: np.ndarray, tol: float = 1e-9) -> tuple[int, int]:
    """Count sign changes and degenerate touches of the profile slope.

    Returns ``(crossings, touches)``: a crossing is a strict sign change of
    ``dZ/dsigma`` along the samples, a touch a zero run (values within
    ``tol`` of zero) flanked by the same sign.  Loop profiles give ``(2, 0)``,
    cusps ``(0, 1)``, kinks ``(0, 0)``.
    """
    vals = np.asarray(dZdsigma, dtype=float)
    signs = np.where(np.abs(vals) <= tol, 0, np.sign(vals)).astype(int)
    # Compress consecutive runs of equal sign.
    runs: list[int] = []
    for s in signs:
        if not runs or runs[-1] != s:
            runs.append(int(s))
    crossings = 0
    touches = 0
    for i, s in enumerate(runs):
        if s != 0:
            if i > 0 and runs[i - 1] != 0 and runs[i - 1] != s:
                crossings += 1
            continue
        if 0 < i < len(runs) - 1:
            if runs[i - 1] == runs[i + 1]:
                touches += 1
            else:
                crossings += 1
    return crossings, touches


def xi_zeta_from_sigma_tau(sigma, tau):
    """Linear change of variables ``xi = (sigma-tau)/2``, ``zeta = -(sigma+tau)/2``."""
    sigma = np.asarray(sigma, dtype=float)
    tau = np.asarray(tau, dtype=float)
    return 0.5 * (sigma - tau), -0.5 * (sigma + tau)


def sigma_tau_from_xi_zeta(xi, zeta):
    """Inverse of :func:`xi_zeta_from_sigma_tau`: ``sigma = xi - zeta``, ``tau = -xi - zeta``."""
    xi = np.asarray(xi, dtype=float)
    zeta = np.asarray(zeta, dtype=float)
    return xi - zeta, -xi - zeta


def hodograph_y_quadrature(w: RealWave, xi: float, zeta: float, y0: float = 0.0,
                           theta_cut: float = 45.0) -> float:
    """Hodograph reconstruction ``y = zeta + integral of (u + u**2/2) d xi' + y0``.

    The integral runs over the fixed-``zeta`` line from far behind the pulse
    (phase below ``-theta_cut``, where the integrand has decayed past double
    precision) up to ``xi``.  This is the independent quadrature route used to
    probe the hodograph composition; for the candidate closed forms the
    mismatch against ``y = -Z + C`` is a measured finding.
    """
    kpw = w.k + w.omega
    if kpw <= 0.0:
        raise DomainError("hodograph quadrature requires k + omega > 0")

    def integrand(x: float) -> float:
        sigma, tau = sigma_tau_from_xi_zeta(x, zeta)
        u, _ = eval_uZ(w, sigma, tau)
        return float(u + 0.5 * u * u)

    # theta = (k+omega)*xi + (omega-k)*zeta + theta0 along fixed zeta.
    xi_lower = (-theta_cut - w.theta0 - (w.omega - w.k) * zeta) / kpw
    if xi <= xi_lower:
        return float(zeta + y0)
    val, _err = quad(integrand, xi_lower, xi, limit=200)
    return float(zeta + val + y0)
