"""Analytic ground-state radial function, normalization and residual checks.

The reduced radial function is

    F(r) = N exp(A r) (1 + exp(-(r - R)/a))^(-a B)

evaluated in log space throughout; the r^-(D-1)/2 spinor prefactor is not
folded in.  F(0) is small but nonzero, an inherent feature of the
centrifugal replacement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import NotNormalizable
from .params import PhysicalParams, QuantumState, derive_coefficients, kappa
from .pekeris import pekeris_coefficients, shape_factor


@dataclass(frozen=True)
class RadialWaveFunction:
    """Ground-state radial amplitude on [0, r_max].

    norm_constant is 1.0 for an unnormalized profile (as built directly);
    normalize() returns an instance with unit L2 norm on [0, r_max].
    """

    A: float
    B: float
    a: float
    R: float
    norm_constant: float
    r_max: float


def log_profile(A: float, B: float, a: float, R: float, r):
    """log of the unnormalized amplitude: A r - a B log(1 + exp(-(r - R)/a))."""
    r = np.asarray(r, dtype=float)
    return A * r - a * B * np.logaddexp(0.0, -(r - R) / a)


def evaluate(wf: RadialWaveFunction, r):
    """Amplitude N exp(A r) (1 + exp(-(r-R)/a))^(-a B), log-space evaluation."""
    out = wf.norm_constant * np.exp(log_profile(wf.A, wf.B, wf.a, wf.R, r))
    if np.ndim(r) == 0:
        return float(out)
    return out


def peak_radius(A: float, B: float, a: float, R: float) -> float:
    """Radius maximizing the profile on [0, inf); endpoints when the slope
    A + B f never vanishes."""
    if B != 0.0:
        f_star = -A / B
        if 0.0 < f_star < 1.0:
            return R + a * math.log(1.0 / f_star - 1.0)
    # monotone profile: slope sign at the origin decides
    return 0.0 if A + B * shape_factor(0.0, R, a) <= 0.0 else math.inf


def normalize(A: float, B: float, a: float, R: float,
              r_max: float | None = None) -> RadialWaveFunction:
    """Normalized wave function on [0, r_max]; requires decay at infinity (A < 0).

    r_max defaults to a radius beyond which the tail bound exp(2 A r)
    contributes less than ~1e-13 of the integral.  Adaptive quadrature with
    absolute tolerance 1e-14 and relative tolerance 1e-10.
    """
    if A >= 0.0:
        raise NotNormalizable(
            f"A = {A}: amplitude grows like exp(A r); cannot normalize"
        )
    r_peak = peak_radius(A, B, a, R)
    if r_max is None:
        r_max = max(r_peak, R + 5.0 * a) + 30.0 / abs(A)
    shift = log_profile(A, B, a, R, r_peak if math.isfinite(r_peak) else 0.0)
    integrand = lambda r: math.exp(2.0 * (log_profile(A, B, a, R, r) - shift))
    pts = sorted({p for p in (r_peak, R) if 0.0 < p < r_max})
    integral, _ = quad(integrand, 0.0, r_max, points=pts or None,
                       epsabs=1e-14, epsrel=1e-10, limit=200)
    norm = math.exp(-shift) / math.sqrt(integral)
    return RadialWaveFunction(A=A, B=B, a=a, R=R, norm_constant=norm, r_max=r_max)


def second_derivative(wf: RadialWaveFunction, r):
    """Analytic F''(r) from the closed form.

    (log F)' = A + B f, f' = -f(1 - f)/a, so F'' = ((A + B f)^2 + B f') F.
    """
    f = shape_factor(r, wf.R, wf.a)
    fp = -f * (1.0 - f) / wf.a
    g = wf.A + wf.B * f
    return (g * g + wf.B * fp) * evaluate(wf, r)


def ode_residual(wf: RadialWaveFunction, E: float, p: PhysicalParams,
                 state: QuantumState, r) -> float:
    """Pointwise residual F'' - U(r; E) F of the transformed radial equation.

    Zero for the solved ground-state (A, B, E) configuration.
    """
    dc = derive_coefficients(p, state)
    pk = pekeris_coefficients(p.R, p.a)
    f = shape_factor(r, p.R, p.a)
    k = kappa(dc, E, p.M)
    g2 = dc.gamma / p.R**2
    u = (dc.ml_quartic - (E * E - p.M * p.M) + g2 * pk.c0
         + (k + g2 * pk.c1) * f + (dc.v + g2 * pk.c2) * f * f)
    return second_derivative(wf, r) - u * evaluate(wf, r)
