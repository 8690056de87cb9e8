"""Polarizer-light interaction as a quantum measurement on R^2 (x) R^2.

The polarizer carries an orientation pointer (slot A), the light beam a
partially linear polarization state (slot B).  Joint operators use the
Kronecker convention index = 2*i_A + i_B (pointer slow, light fast), i.e.
plain ``numpy.kron``.

The interaction ramps up through a smeared impulse around the measurement
time; only its cumulative weight G(t) in [0, 1] matters.  At weight G the
evolution is the orthogonal operator

    U = R(G(1+r)/2) (x) E_phi  +  R(G(1-r)/2) (x) E_{phi+pi/2},

built from exp(theta TAU2 (x) P) = R(theta) (x) P + I (x) (I - P) for an
orthogonal projector P.  After the measurement (G = 1) the light is found
along the polarizer axis with probability (1 + r0 cos 2(phi - phi0))/2 --
the Malus law at full polarization r0 = 1 -- while the pointer rotates by
(1+r)/2, or along the perpendicular axis with the complementary
probability and pointer rotation (1-r)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import DensityParams, density_matrix, projector, rotation

PARALLEL = "parallel"
PERPENDICULAR = "perpendicular"

_PROJECTOR_TOL = 1e-10


@dataclass(frozen=True)
class DiracProfile:
    """Smeared impulse of unit weight around the measurement time.

    ``t_m`` centres the interaction window, ``eta`` is its half-width.
    Two shapes are built in: "box" (uniform on the window, so the
    cumulative is a linear ramp) and "gaussian" (normal with sigma =
    eta/3, cumulative within 1e-12 of 1 by t_m + 8*eta).
    """

    t_m: float
    eta: float
    shape: str = "box"

    def __post_init__(self) -> None:
        if self.eta <= 0.0:
            raise ValueError(f"profile half-width eta must be positive, got {self.eta}")
        if self.shape not in ("box", "gaussian"):
            raise ValueError(f'profile shape must be "box" or "gaussian", got {self.shape!r}')


def dirac_cumulative(profile: DiracProfile, t: float) -> float:
    """Accumulated interaction weight G(t) in [0, 1] at time t."""
    if profile.shape == "box":
        ramp = (t - profile.t_m + profile.eta) / (2.0 * profile.eta)
        return min(1.0, max(0.0, ramp))
    sigma = profile.eta / 3.0
    return 0.5 * (1.0 + math.erf((t - profile.t_m) / (sigma * math.sqrt(2.0))))


def exp_projector(theta: float, p: np.ndarray) -> np.ndarray:
    """exp(theta TAU2 (x) P) for an orthogonal projector P.

    Collapses to R(theta) (x) P + I (x) (I - P): the rotation acts only on
    the range of P.  The result is orthogonal.

    Raises:
        ValueError: if ``p`` is not symmetric idempotent within 1e-10.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (2, 2):
        raise ValueError(f"projector must be 2x2, got shape {p.shape}")
    if np.abs(p - p.T).max() > _PROJECTOR_TOL:
        raise ValueError("projector must be symmetric")
    if np.abs(p @ p - p).max() > _PROJECTOR_TOL:
        raise ValueError("projector must be idempotent")
    eye = np.eye(2)
    return np.kron(rotation(theta), p) + np.kron(eye, eye - p)


def evolution_operator(g_value: float, r: float, phi: float) -> np.ndarray:
    """Joint evolution at cumulative interaction weight ``g_value``.

    U = R(G(1+r)/2) (x) E_phi + R(G(1-r)/2) (x) E_{phi+pi/2}; orthogonal
    for every admissible argument.  G = 0 is the identity (no interaction
    yet), G = 1 the post-measurement operator.
    """
    if not 0.0 <= g_value <= 1.0:
        raise ValueError(f"cumulative weight G must lie in [0, 1], got {g_value}")
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"degree of mixing r must lie in [0, 1], got {r}")
    e_par = projector(phi)
    e_perp = projector(phi + 0.5 * math.pi)
    return np.kron(rotation(g_value * (1.0 + r) / 2.0), e_par) + np.kron(
        rotation(g_value * (1.0 - r) / 2.0), e_perp
    )


def evolve_joint(
    pointer: DensityParams,
    light: DensityParams,
    interaction_r: float,
    interaction_phi: float,
) -> np.ndarray:
    """Post-measurement joint state U (rho_pointer (x) rho_light) U^T.

    Direct 4x4 conjugation by the G = 1 evolution operator; the result is
    symmetric, trace one, and positive semidefinite.
    """
    u = evolution_operator(1.0, interaction_r, interaction_phi)
    joint = np.kron(density_matrix(pointer), density_matrix(light))
    return u @ joint @ u.T


def outcome_probability(light: DensityParams, interaction_phi: float, orientation: str) -> float:
    """Probability of finding the light along (or across) the polarizer axis.

    parallel:      (1 + r0 cos 2(phi - phi0)) / 2
    perpendicular: (1 - r0 cos 2(phi - phi0)) / 2

    with (r0, phi0) the light state and phi the polarizer axis.  These
    equal the trace of the evolved joint state against I (x) E_phi and
    I (x) E_{phi+pi/2}, independently of the pointer preparation.
    """
    aligned = 0.5 * (1.0 + light.r * math.cos(2.0 * (interaction_phi - light.phi)))
    if orientation == PARALLEL:
        return aligned
    if orientation == PERPENDICULAR:
        return 1.0 - aligned
    raise ValueError(f'orientation must be "{PARALLEL}" or "{PERPENDICULAR}", got {orientation!r}')


@dataclass(frozen=True)
class MeasurementOutcome:
    """One branch of the polarizer measurement.

    ``pointer_rotation`` is the continuous pointer readout (1+r)/2 for the
    parallel branch, (1-r)/2 for the perpendicular one.
    """

    orientation: str
    pointer_rotation: float
    probability: float


def measurement_outcomes(
    light: DensityParams,
    interaction_r: float,
    interaction_phi: float,
) -> tuple[MeasurementOutcome, MeasurementOutcome]:
    """Both measurement branches; their probabilities sum to one exactly."""
    if not 0.0 <= interaction_r <= 1.0:
        raise ValueError(f"degree of mixing r must lie in [0, 1], got {interaction_r}")
    p_par = outcome_probability(light, interaction_phi, PARALLEL)
    return (
        MeasurementOutcome(PARALLEL, (1.0 + interaction_r) / 2.0, p_par),
        MeasurementOutcome(PERPENDICULAR, (1.0 - interaction_r) / 2.0, 1.0 - p_par),
    )


def sample_outcomes(p_parallel: float, n: int, seed: int) -> tuple[int, int]:
    """Count parallel/perpendicular outcomes over n seeded Bernoulli draws.

    Deterministic: identical (p_parallel, n, seed) always yields identical
    counts.  For concurrent batches derive distinct seeds as
    ``seed ^ task_index``; each call owns its own generator state.
    """
    if not 0.0 <= p_parallel <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p_parallel}")
    if n < 1:
        raise ValueError(f"sample count must be positive, got {n}")
    rng = np.random.default_rng(seed)
    count = int((rng.random(n) < p_parallel).sum())
    return count, n - count
