"""Shared hand-derived formulas and frozen reference constants for the suite.

The frozen numbers come from an independent 50-digit evaluation of the
closed forms, rounded to double precision.  Tests compare library output
against them with explicit tolerances; nothing here is recomputed through
the code under test.
"""

from __future__ import annotations

import numpy as np

# Critical dissipative parameter v*sqrt(1+v)/(1-v) at v = 0.24 and v = 0.5.
CRIT_ALPHA_024 = 0.35164827554715928
CRIT_ALPHA_05 = 1.224744871391589

# Positive-branch wavenumber/frequency at (v, alpha) = (0.24, 0.1), the
# amplitude 4*(k+omega)**2, the slope product 4*(k+omega)*k and its
# singular phase arccosh(sqrt(s)), and the momentum peak.
K_024_01 = 0.49528668324109622
W_024_01 = 0.11886880397786309
A_024_01 = 1.5087478499246292
S_024_01 = 1.2167321370359913
THETA_SING_024_01 = 0.45018401627119606
PI0_024_01 = 0.56791966601159165

# Same quantities at (0.24, 0.8): the single-valued regime.
K_024_08 = 0.37842692189241975
S_024_08 = 0.71030639865633893

# At the critical alpha the wavenumber collapses to 1/(2*sqrt(1+v)).
K_024_CRIT = 0.44901325506693725

# Quadrature reconstructions at (xi, zeta) = (0, 0) for (0.24, 0.1):
# the profile-coordinate integral, the auxiliary-field integral, and the
# measured gaps against the local closed forms (findings, held as
# regression anchors).
Y_QUAD_ORIGIN = 2.4186857460944861
Y_GAP_ORIGIN = 1.1903747716565674
PHI_QUAD_ORIGIN = -0.6222983825085088
PHI_GAP_ORIGIN = -1.1599401704348321

# Bilinear-line atom coefficients at (0.24, 0.1) with E = exp(2*theta):
# line 1 reduces to c1*E + c2*E**2 (c2 = -g for both dissipative-term
# readings), line 2 to a pure E**2 term; g = 8*(k+omega)**2.
G_024_01 = 3.0174956998492584
LINE1_E_SQUARED = -0.056147773387063069
LINE1_E_LINEAR = -0.45433573280927332
LINE2_E2 = -7.5701358491536412
LINE2_NORMALIZED = 1.662801275938823


def hand_residuals(w, sigma, tau):
    """Coupled-system residuals of the closed-form fields, written directly.

    Independent of the library's bundle plumbing: plain tanh/sech calculus,
    r1 = u_ss - u_tt - (Z_s + Z_t)*u + alpha*(u_s + u_t),
    r2 = Z_ss - Z_tt + (u + 1)*(u_s + u_t).
    """
    sigma = np.asarray(sigma, dtype=float)
    tau = np.asarray(tau, dtype=float)
    k, om, a = w.k, w.omega, w.alpha
    th = k * sigma - om * tau + w.theta0
    T = np.tanh(th)
    S2 = 1.0 / np.cosh(th) ** 2
    A = 4.0 * (k + om) ** 2
    B = 2.0 * (k + om)
    r1 = (-2.0 * A * (k * k - om * om) * S2 * T
          - (1.0 - B * (k - om) * S2) * A * (T + 1.0)
          + a * A * (k - om) * S2)
    r2 = (2.0 * B * (k * k - om * om) * S2 * T
          + (A * (T + 1.0) + 1.0) * A * (k - om) * S2)
    return r1, r2


def hand_y_quadrature(w, xi, zeta):
    """Closed antiderivative of the profile-coordinate integral.

    integral of (u + u**2/2) d xi' from far behind the pulse along fixed
    zeta, with u = A*(tanh(theta)+1); the two elementary antiderivatives
    are A*(theta + log cosh + log 2) and (A**2/2)*(2*theta - tanh
    + 2*log cosh - 1 + 2*log 2).
    """
    k, om = w.k, w.omega
    A = 4.0 * (k + om) ** 2
    th = (k + om) * xi + (om - k) * zeta + w.theta0
    lc = np.log(np.cosh(th))
    i1 = th + lc + np.log(2.0)
    i2 = 2.0 * th - np.tanh(th) + 2.0 * lc - 1.0 + 2.0 * np.log(2.0)
    return zeta + (A * i1 + 0.5 * A * A * i2) / (k + om)


def hand_phi_quadrature(w, xi, zeta):
    """Closed antiderivative of the auxiliary-field integral.

    1 + integral of -(u_s + u_t)*(1 + u) d xi' with the momentum density
    A*(k-omega)*sech(theta)**2; antiderivatives of sech**2 and
    sech**2*(tanh+1) are elementary.
    """
    k, om = w.k, w.omega
    A = 4.0 * (k + om) ** 2
    th = (k + om) * xi + (om - k) * zeta + w.theta0
    T = np.tanh(th)
    i1 = T + 1.0
    i2 = 0.5 * T * T + T + 0.5
    return 1.0 - A * (k - om) * (i1 + A * i2) / (k + om)
