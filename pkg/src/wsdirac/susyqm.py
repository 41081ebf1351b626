"""Superpotential construction, partner potentials and the shape-invariance ladder.

The effective radial equation after the centrifugal replacement is factorized
through the superpotential phi(r) = -(A + B f(r)), with f the Woods-Saxon
shape factor.  The prefactor hbar/sqrt(2 mu) is set to 1, so A and B carry
units fm^-1 and the partner potentials fm^-2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSuperpotential, LadderSingular
from .params import DerivedCoefficients, PhysicalParams, kappa
from .pekeris import PekerisCoefficients, shape_factor

# relative threshold below which B (or a shifted B_n) counts as vanishing
_SINGULAR_RTOL = 1e-12


@dataclass(frozen=True)
class SusyParameters:
    """Solved superpotential constants for one configuration and trial energy.

    A, B : superpotential constants (fm^-1)
    frak_u : kappa + v + gamma (c1 + c2)/R^2 at the recorded energy (fm^-2)
    energy : energy at which kappa was evaluated (fm^-1), kept for provenance
    """

    A: float
    B: float
    frak_u: float
    energy: float


def slope_parameter(coeffs: DerivedCoefficients, pk: PekerisCoefficients,
                    p: PhysicalParams) -> float:
    """Energy-independent constant B = -1/(2a) + sqrt(v + gamma c2/R^2 + 1/(4a^2))."""
    radicand = coeffs.v + coeffs.gamma * pk.c2 / p.R**2 + 1.0 / (4.0 * p.a**2)
    return -1.0 / (2.0 * p.a) + np.sqrt(radicand)


def solve_susy_parameters(coeffs: DerivedCoefficients, pk: PekerisCoefficients,
                          p: PhysicalParams, E: float) -> SusyParameters:
    """Solve the three matching relations for (A, B) at trial energy E.

    Raises DegenerateSuperpotential when B = 0 (the ansatz collapses; occurs
    iff v = 0 and gamma c2 = 0, e.g. alpha_prime = 0 with ell = 0, D = 3).
    """
    B = slope_parameter(coeffs, pk, p)
    if abs(B) <= _SINGULAR_RTOL / (2.0 * p.a):
        raise DegenerateSuperpotential(
            "B = 0: the factorization ansatz collapses for this configuration"
        )
    k = kappa(coeffs, E, p.M)
    frak_u = k + coeffs.v + coeffs.gamma * (pk.c1 + pk.c2) / p.R**2
    A = frak_u / (2.0 * B) - B / 2.0
    return SusyParameters(A=A, B=B, frak_u=frak_u, energy=E)


def closed_form_A(coeffs: DerivedCoefficients, pk: PekerisCoefficients,
                  p: PhysicalParams, E: float) -> float:
    """A from the elimination closed form, coded independently of solve_susy_parameters.

    A = (kappa + gamma c1/R^2) / (-1/a + 2 sqrt(v + gamma c2/R^2 + 1/(4a^2))) + 1/(2a)
    """
    radicand = coeffs.v + coeffs.gamma * pk.c2 / p.R**2 + 1.0 / (4.0 * p.a**2)
    denom = -1.0 / p.a + 2.0 * np.sqrt(radicand)
    if abs(denom) <= _SINGULAR_RTOL / p.a:
        raise DegenerateSuperpotential("B = 0 in the closed-form elimination")
    k = kappa(coeffs, E, p.M)
    return (k + coeffs.gamma * pk.c1 / p.R**2) / denom + 1.0 / (2.0 * p.a)


def superpotential(sp: SusyParameters, r, a: float, R: float):
    """phi(r) = -(A + B f(r))  (fm^-1)."""
    return -(sp.A + sp.B * shape_factor(r, R, a))


def partner_potentials(sp: SusyParameters, r, a: float, R: float):
    """Partner pair (V_minus, V_plus) at radius r (fm^-2).

    V_minus = phi^2 - phi', V_plus = phi^2 + phi', with phi' taken analytically:
    f' = -f(1 - f)/a.
    """
    A, B = sp.A, sp.B
    f = shape_factor(r, R, a)
    v_minus = A * A + (2.0 * A * B - B / a) * f + (B * B + B / a) * f * f
    v_plus = A * A + (2.0 * A * B + B / a) * f + (B * B - B / a) * f * f
    return v_minus, v_plus


def ladder(B: float, n: int, a: float) -> float:
    """Shifted slope parameter B_n = B - n/a."""
    return B - n / a


def shifted_A(frak_u: float, B_n: float) -> float:
    """A-analogue at a shifted ladder step: frak_u/(2 B_n) - B_n/2."""
    return frak_u / (2.0 * B_n) - B_n / 2.0


def remainder(sp: SusyParameters, i: int, a: float) -> float:
    """r-independent remainder of ladder step i >= 1 (fm^-2)."""
    if i < 1:
        raise ValueError(f"ladder step i must be >= 1, got {i}")
    b_i = ladder(sp.B, i, a)
    b_prev = ladder(sp.B, i - 1, a)
    scale = max(abs(sp.B), 1.0 / a)
    if abs(b_i) <= _SINGULAR_RTOL * scale or abs(b_prev) <= _SINGULAR_RTOL * scale:
        raise LadderSingular(f"B - i/a vanishes at ladder step i={i}")
    return -(shifted_A(sp.frak_u, b_i) ** 2 - shifted_A(sp.frak_u, b_prev) ** 2)
