"""Direct numerical eigensolve of the transformed radial equation.

Independent cross-check of the closed-form spectrum: for each trial energy E
the energy-dependent coefficients are frozen, F'' = U(r; E) F is integrated
outward from r_min and inward from r_max with a fixed-step classical
Runge-Kutta scheme, and the log-derivative mismatch at the match radius is
driven to zero over E.

The equation is linear, so one RK4 step is a 2x2 transfer matrix; the sweep
is the ordered product of those matrices, evaluated as a pairwise tree with
per-pass renormalization (log-derivatives are scale-free).  The stepwise
path is kept for node counting and eigenfunction recovery.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IntegrationBlowup, NoEigenvalueInBracket, NotBoundRegime
from .params import PhysicalParams, QuantumState, derive_coefficients
from .pekeris import pekeris_coefficients, shape_factor

_RENORM_LIMIT = 1e250
_SEED_AMPLITUDE = 1e-8


@dataclass(frozen=True)
class ShootingConfig:
    """Domain truncation and search bracket for the shooting solve."""

    r_min: float
    r_max: float
    step_count: int
    match_radius: float
    energy_bracket: tuple[float, float]

    def __post_init__(self):
        if not 0.0 < self.r_min < self.match_radius < self.r_max:
            raise ValueError(
                f"need 0 < r_min < match_radius < r_max, got "
                f"({self.r_min}, {self.match_radius}, {self.r_max})"
            )
        if self.step_count < 10_000:
            raise ValueError(f"step_count must be >= 10000, got {self.step_count}")
        lo, hi = self.energy_bracket
        if not lo < hi:
            raise ValueError(f"invalid energy bracket ({lo}, {hi})")


def default_config(p: PhysicalParams, energy_bracket: tuple[float, float],
                   step_count: int = 20_000) -> ShootingConfig:
    """Standard truncation for the given potential: [R/100, R + 40 a], match at R."""
    return ShootingConfig(
        r_min=p.R / 100.0,
        r_max=p.R + 40.0 * p.a,
        step_count=step_count,
        match_radius=p.R,
        energy_bracket=energy_bracket,
    )


class _Coefficients:
    """Frozen-E radial coefficient U(r; E) of F'' = U F."""

    def __init__(self, p: PhysicalParams, state: QuantumState):
        dc = derive_coefficients(p, state)
        pk = pekeris_coefficients(p.R, p.a)
        g = dc.gamma / p.R**2
        self._p = p
        self._g0 = dc.ml_quartic + g * pk.c0
        self._g1 = g * pk.c1
        self._g2 = dc.v + g * pk.c2
        self._kc = dc.kappa_const
        self._ks = dc.kappa_slope

    def tail(self, E: float) -> float:
        """Asymptotic coefficient; its square root is the far decay rate."""
        return self._g0 - (E * E - self._p.M**2)

    def u(self, r, E: float):
        f = shape_factor(r, self._p.R, self._p.a)
        k = self._kc - self._ks * (E + self._p.M)
        return self.tail(E) + (k + self._g1) * f + self._g2 * f * f


def _transfer_matrices(coeff: _Coefficients, E: float, r0: float, h: float,
                       steps: int) -> np.ndarray:
    """Per-step RK4 transfer matrices for y = (F, F'), shape (steps, 2, 2).

    Step j maps y(r0 + j h) to y(r0 + (j+1) h); h may be negative.
    """
    idx = np.arange(steps, dtype=float)
    u1 = coeff.u(r0 + h * idx, E)
    u2 = coeff.u(r0 + h * (idx + 0.5), E)
    u3 = coeff.u(r0 + h * (idx + 1.0), E)

    def amat(u):
        A = np.zeros((steps, 2, 2))
        A[:, 0, 1] = 1.0
        A[:, 1, 0] = u
        return A

    A1, A2, A3 = amat(u1), amat(u2), amat(u3)
    K1 = A1
    K2 = A2 + (h / 2.0) * (A2 @ K1)
    K3 = A2 + (h / 2.0) * (A2 @ K2)
    K4 = A3 + h * (A3 @ K3)
    T = (h / 6.0) * (K1 + 2.0 * K2 + 2.0 * K3 + K4)
    T[:, 0, 0] += 1.0
    T[:, 1, 1] += 1.0
    return T


def _chain_product(T: np.ndarray) -> np.ndarray:
    """Ordered product T[-1] @ ... @ T[0] by pairwise reduction.

    Each pass renormalizes by the max-abs entry, so only the direction of
    the resulting map is meaningful (log-derivatives are unaffected).
    """
    M = T
    while M.shape[0] > 1:
        n = M.shape[0]
        even = n - (n % 2)
        paired = np.matmul(M[1:even:2], M[0:even:2])
        if n % 2:
            paired = np.concatenate([paired, M[-1:]], axis=0)
        scale = np.abs(paired).max(axis=(1, 2), keepdims=True)
        if not np.all(np.isfinite(scale)):
            raise IntegrationBlowup("transfer-matrix product overflowed")
        paired = paired / np.maximum(scale, 1e-300)
        M = paired
    return M[0]


def _log_derivative(coeff: _Coefficients, E: float, r0: float, h: float,
                    steps: int, slope0: float) -> float:
    T = _transfer_matrices(coeff, E, r0, h, steps)
    y = _chain_product(T) @ np.array([1.0, slope0])
    if y[0] == 0.0:
        return math.inf
    return float(y[1] / y[0])


def _match_geometry(cfg: ShootingConfig) -> tuple[float, int]:
    h = (cfg.r_max - cfg.r_min) / cfg.step_count
    i_match = int(round((cfg.match_radius - cfg.r_min) / h))
    return h, min(max(i_match, 1), cfg.step_count - 1)


def _mismatch(coeff: _Coefficients, E: float, cfg: ShootingConfig) -> float:
    h, i_match = _match_geometry(cfg)
    slope_in = math.sqrt(max(float(coeff.u(cfg.r_min, E)), 0.0))
    ld_out = _log_derivative(coeff, E, cfg.r_min, h, i_match, slope_in)
    slope_out = -math.sqrt(coeff.tail(E))
    ld_in = _log_derivative(coeff, E, cfg.r_max, -h,
                            cfg.step_count - i_match, slope_out)
    return ld_out - ld_in


def shoot_mismatch(E: float, cfg: ShootingConfig, p: PhysicalParams,
                   state: QuantumState) -> float:
    """Log-derivative mismatch at the match radius; zero iff E is an eigenvalue.

    The outward sweep starts on the locally growing solution at r_min; the
    inward sweep starts on the decaying asymptotic solution at r_max.
    Raises NotBoundRegime when the asymptotic coefficient is non-positive
    (oscillatory tail, no bound state possible at this E).
    """
    coeff = _Coefficients(p, state)
    if coeff.tail(E) <= 0.0:
        raise NotBoundRegime(
            f"asymptotic coefficient <= 0 at E = {E}: oscillatory tail"
        )
    return _mismatch(coeff, E, cfg)


def _trajectory(coeff: _Coefficients, E: float, r0: float, h: float,
                steps: int, slope0: float):
    """Stepwise amplitudes (renormalization-consistent): (values, log_scales)."""
    T = _transfer_matrices(coeff, E, r0, h, steps)
    y = np.array([_SEED_AMPLITUDE, _SEED_AMPLITUDE * slope0])
    values = np.empty(steps + 1)
    logs = np.empty(steps + 1)
    cur_log = 0.0
    values[0], logs[0] = y[0], 0.0
    for j in range(steps):
        y = T[j] @ y
        if not np.all(np.isfinite(y)):
            raise IntegrationBlowup(f"non-finite amplitude at step {j}")
        big = max(abs(y[0]), abs(y[1]))
        if big > _RENORM_LIMIT:
            y = y / big
            cur_log += math.log(big)
        values[j + 1], logs[j + 1] = y[0], cur_log
    return values, logs


def _count_nodes(values: np.ndarray) -> int:
    return int(np.sum(values[1:] * values[:-1] < 0.0))


def find_eigenvalues(cfg: ShootingConfig, p: PhysicalParams,
                     state: QuantumState, count: int,
                     scan_points: int = 400, tol: float = 1e-9) -> list[float]:
    """Up to `count` shooting eigenvalues inside the energy bracket, ascending.

    Scans the bracket on a grid, brackets sign changes of the mismatch and
    refines each by bisection to `tol`.  Sign changes caused by poles of the
    log-derivative (an outward node crossing the match radius) are
    discarded: near a pole the refined mismatch exceeds both bracket-end
    values, near a genuine eigenvalue it shrinks.  States are ordered by
    outward node count,
    then energy.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    coeff = _Coefficients(p, state)
    lo, hi = cfg.energy_bracket
    grid = np.linspace(lo, hi, scan_points)
    mm = np.array([
        _mismatch(coeff, float(E), cfg) if coeff.tail(float(E)) > 0.0 else np.nan
        for E in grid
    ])
    found = []
    h, i_match = _match_geometry(cfg)
    for i in range(scan_points - 1):
        f_lo, f_hi = mm[i], mm[i + 1]
        if not (np.isfinite(f_lo) and np.isfinite(f_hi)) or f_lo * f_hi >= 0.0:
            continue
        e_lo, e_hi = float(grid[i]), float(grid[i + 1])
        g_lo = f_lo
        while e_hi - e_lo > tol:
            mid = 0.5 * (e_lo + e_hi)
            f_mid = _mismatch(coeff, mid, cfg)
            if g_lo * f_mid <= 0.0:
                e_hi = mid
            else:
                e_lo, g_lo = mid, f_mid
        e_star = 0.5 * (e_lo + e_hi)
        f_star = _mismatch(coeff, e_star, cfg)
        if abs(f_star) > max(abs(f_lo), abs(f_hi)):
            continue  # log-derivative pole, not an eigenvalue
        slope_in = math.sqrt(max(float(coeff.u(cfg.r_min, e_star)), 0.0))
        values, _ = _trajectory(coeff, e_star, cfg.r_min, h, i_match, slope_in)
        found.append((_count_nodes(values), e_star))
    if not found:
        raise NoEigenvalueInBracket(
            f"no shooting eigenvalue in ({lo}, {hi}) for this configuration"
        )
    found.sort()
    return [e for _, e in found[:count]]


def shoot_eigenfunction(E: float, cfg: ShootingConfig, p: PhysicalParams,
                        state: QuantumState):
    """Stitched, L2-normalized eigenfunction at energy E on the shooting grid.

    Returns (r, F) arrays; the inward branch is rescaled for amplitude
    continuity at the match radius.  Intended for overlap diagnostics at a
    converged eigenvalue.
    """
    coeff = _Coefficients(p, state)
    if coeff.tail(E) <= 0.0:
        raise NotBoundRegime(f"asymptotic coefficient <= 0 at E = {E}")
    h, i_match = _match_geometry(cfg)
    slope_in = math.sqrt(max(float(coeff.u(cfg.r_min, E)), 0.0))
    val_o, log_o = _trajectory(coeff, E, cfg.r_min, h, i_match, slope_in)
    slope_out = -math.sqrt(coeff.tail(E))
    val_i, log_i = _trajectory(coeff, E, cfg.r_max, -h,
                               cfg.step_count - i_match, slope_out)
    # restore true relative magnitudes within each branch
    out = val_o * np.exp(log_o - log_o[-1])
    inw = (val_i * np.exp(log_i - log_i[-1]))[::-1]
    if inw[0] == 0.0:
        raise IntegrationBlowup("inward solution vanished at the match radius")
    inw = inw * (out[-1] / inw[0])
    F = np.concatenate([out, inw[1:]])
    r = cfg.r_min + h * np.arange(cfg.step_count + 1)
    norm = math.sqrt(np.trapezoid(F * F, r))
    return r, F / norm
