"""Bell states, quantum correlations, hidden-variable bounds, and scans.

Two-party states live on R^2_A (x) R^2_B.  This module (and the
isomorphism layer built on it) orders the product basis diagonal-first:

    index 0: |0>_A (x) |0>_B          index 2: |0>_A    (x) |pi/2>_B
    index 1: |pi/2>_A (x) |pi/2>_B    index 3: |pi/2>_A (x) |0>_B

:func:`from_kron_order` / :func:`to_kron_order` convert between this order
and the slot-lexicographic Kronecker order (index = 2*i_A + i_B) used by
the measurement module.

The singlet-state correlation of two orientation observables is
<Psi-| sigma(phi_a) (x) sigma(phi_b) |Psi-> = -cos(phi_a - phi_b).
Deterministic hidden-variable models predict pair correlations
P = -<eps(phi_a, .) eps(phi_b, .)> (the partner's outcomes anti-aligned,
as forced by perfect anticorrelation at equal angles), and every such
model obeys

    |P(a,b) - P(a,c)| <= 1 + P(b,c),

while the quantum correlation escapes the bound; in the reduced angles
zeta = (phi_a - phi_b)/2, eta = (phi_b - phi_c)/2 the bound reads
|sin^2 zeta - sin^2(eta + zeta)| <= sin^2 eta and fails on the diagonal
zeta = eta exactly for 0 < |eta| < pi/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .states import TWO_PI, pure_state, sigma_phi

#: Diagonal-first component i sits at Kronecker (lexicographic) slot _PERM[i].
_PERM = (0, 3, 1, 2)

#: Strict-violation tolerance: boundary cases report "not violated".
VIOLATION_TOL = 1e-12

DEFAULT_NODES = 4096


def from_kron_order(a: np.ndarray) -> np.ndarray:
    """Re-index a 4-vector or 4x4 operator from Kronecker to diagonal-first order."""
    a = np.asarray(a)
    idx = list(_PERM)
    if a.shape == (4,):
        return a[idx]
    if a.shape == (4, 4):
        return a[np.ix_(idx, idx)]
    raise ValueError(f"expected a 4-vector or 4x4 matrix, got shape {a.shape}")


def to_kron_order(a: np.ndarray) -> np.ndarray:
    """Inverse of :func:`from_kron_order`."""
    a = np.asarray(a)
    inv = np.argsort(_PERM)
    if a.shape == (4,):
        return a[inv]
    if a.shape == (4, 4):
        return a[np.ix_(inv, inv)]
    raise ValueError(f"expected a 4-vector or 4x4 matrix, got shape {a.shape}")


class BellKind(Enum):
    PHI_PLUS = "phi_plus"
    PHI_MINUS = "phi_minus"
    PSI_PLUS = "psi_plus"
    PSI_MINUS = "psi_minus"


_SQRT_HALF = 1.0 / math.sqrt(2.0)

_BELL_COMPONENTS = {
    BellKind.PHI_PLUS: (1.0, 1.0, 0.0, 0.0),
    BellKind.PHI_MINUS: (1.0, -1.0, 0.0, 0.0),
    BellKind.PSI_PLUS: (0.0, 0.0, 1.0, 1.0),
    BellKind.PSI_MINUS: (0.0, 0.0, -1.0, 1.0),
}


def bell_state(kind: BellKind) -> np.ndarray:
    """One of the four maximally entangled states, in diagonal-first order.

    Phi+- = (|00> +- |pi/2 pi/2>)/sqrt(2),
    Psi+- = (+-|0 pi/2> + |pi/2 0>)/sqrt(2).
    """
    return _SQRT_HALF * np.array(_BELL_COMPONENTS[kind])


def sigma_tensor(phi_a: float, phi_b: float) -> np.ndarray:
    """sigma(phi_a) (x) sigma(phi_b) in diagonal-first order; squares to I."""
    return from_kron_order(np.kron(sigma_phi(phi_a), sigma_phi(phi_b)))


def quantum_correlation(phi_a: float, phi_b: float) -> float:
    """Singlet expectation of the product observable, by matrix contraction.

    Equals -cos(phi_a - phi_b): perfect anticorrelation at equal angles.
    """
    psi = bell_state(BellKind.PSI_MINUS)
    return float(psi @ sigma_tensor(phi_a, phi_b) @ psi)


def joint_probabilities(
    kind: BellKind, phi_a: float, phi_b: float
) -> dict[tuple[int, int], float]:
    """Outcome table p(eps_a, eps_b) for measuring both orientation observables.

    Keys are the four sign pairs in {+1, -1}^2.  Probabilities are squared
    overlaps with the product eigenvectors of sigma(phi_a) (x) sigma(phi_b)
    (the +1 eigenvector of sigma(phi) is the pure state at phi/2); they sum
    to one, and the signed sum reproduces the quantum correlation for the
    singlet.
    """
    psi = bell_state(kind)
    eig_a = {1: pure_state(phi_a / 2.0), -1: pure_state((phi_a + math.pi) / 2.0)}
    eig_b = {1: pure_state(phi_b / 2.0), -1: pure_state((phi_b + math.pi) / 2.0)}
    table: dict[tuple[int, int], float] = {}
    for ea, ua in eig_a.items():
        for eb, ub in eig_b.items():
            amp = float(from_kron_order(np.kron(ua, ub)) @ psi)
            table[(ea, eb)] = amp * amp
    return table


@dataclass(frozen=True)
class HiddenVariableModel:
    """Deterministic local model: outcome function and hidden-value density.

    ``epsilon(phi, lam)`` returns +-1 and ``density(lam)`` a nonnegative
    weight; both must accept numpy arrays of ``lam`` (evaluation is always
    vectorized over the hidden variable).  ``domain`` is the (lo, hi)
    integration range.  Registration checks that the density integrates to
    one within 1e-9 and that the outcomes really are +-1.
    """

    epsilon: Callable[[float, np.ndarray], np.ndarray]
    density: Callable[[np.ndarray], np.ndarray]
    domain: tuple[float, float] = (0.0, TWO_PI)
    name: str = "custom"

    def __post_init__(self) -> None:
        lo, hi = self.domain
        if not hi > lo:
            raise ValueError(f"domain ({lo}, {hi}) must have positive length")
        n = 1 << 20
        lam = lo + (np.arange(n) + 0.5) * ((hi - lo) / n)
        dens = np.asarray(self.density(lam), dtype=float)
        if dens.min() < 0.0:
            raise ValueError("density must be nonnegative")
        total = float(dens.mean() * (hi - lo))
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"density integrates to {total!r}, expected 1 within 1e-9")
        probe = np.asarray(self.epsilon(0.37, lam[:64]), dtype=float)
        if not np.all(np.isin(probe, (-1.0, 1.0))):
            raise ValueError("epsilon must take values in {-1, +1}")


def _sign(x: np.ndarray) -> np.ndarray:
    return np.where(x >= 0.0, 1.0, -1.0)


def sign_cosine_model() -> HiddenVariableModel:
    """eps(phi, lam) = sgn(cos(phi - lam)), uniform hidden direction."""
    return HiddenVariableModel(
        epsilon=lambda phi, lam: _sign(np.cos(phi - lam)),
        density=lambda lam: np.full(np.shape(lam), 1.0 / TWO_PI),
        name="sign-cos",
    )


def sign_projection_model() -> HiddenVariableModel:
    """eps = sgn(u(phi/2) . u(lam)): the observable's +1 eigendirection projected on lam."""
    return HiddenVariableModel(
        epsilon=lambda phi, lam: _sign(np.cos(phi / 2.0 - lam)),
        density=lambda lam: np.full(np.shape(lam), 1.0 / TWO_PI),
        name="sign-projection",
    )


BUILTIN_MODELS: dict[str, Callable[[], HiddenVariableModel]] = {
    "sign-cos": sign_cosine_model,
    "sign-projection": sign_projection_model,
}


def classical_correlation(
    model: HiddenVariableModel,
    phi_a: float,
    phi_b: float,
    n_nodes: int = DEFAULT_NODES,
    method: str = "grid",
    seed: Optional[int] = None,
) -> float:
    """Expectation of eps(phi_a, .) eps(phi_b, .) under the model's density.

    integral density(lam) eps(phi_a, lam) eps(phi_b, lam) d(lam), by an
    n_nodes midpoint rule ("grid", error O(1/n) for the piecewise-constant
    built-ins) or a seeded uniform-proposal Monte-Carlo average ("mc").
    Always lies in [-1, 1] up to integration error; equals +1 at equal
    angles.  Note this is the overlap of one party's outcome function with
    itself at two settings; the anti-aligned pair expectation that enters
    the Bell bound is :func:`singlet_correlation`.
    """
    if n_nodes < 1:
        raise ValueError(f"n_nodes must be positive, got {n_nodes}")
    lo, hi = model.domain
    if method == "grid":
        lam = lo + (np.arange(n_nodes) + 0.5) * ((hi - lo) / n_nodes)
    elif method == "mc":
        rng = np.random.default_rng(0 if seed is None else seed)
        lam = rng.uniform(lo, hi, n_nodes)
    else:
        raise ValueError(f'integration method must be "grid" or "mc", got {method!r}')
    weights = np.asarray(model.density(lam), dtype=float) * (hi - lo)
    vals = weights * model.epsilon(phi_a, lam) * model.epsilon(phi_b, lam)
    return float(vals.mean())


def singlet_correlation(
    model: HiddenVariableModel,
    phi_a: float,
    phi_b: float,
    n_nodes: int = DEFAULT_NODES,
    method: str = "grid",
    seed: Optional[int] = None,
) -> float:
    """Pair correlation with the partner's outcomes anti-aligned.

    Perfect anticorrelation at equal angles forces eps_B = -eps_A, so the
    model's prediction for the product of the two parties' outcomes is the
    negative of :func:`classical_correlation`.  This is the quantity
    comparable with :func:`quantum_correlation` and bounded by
    :func:`baby_bell_check`.
    """
    return -classical_correlation(model, phi_a, phi_b, n_nodes, method, seed)


@dataclass(frozen=True)
class InequalityReport:
    """One evaluation of a correlation bound; violated means lhs > rhs."""

    lhs: float
    rhs: float
    violated: bool
    margin: float


def _report(lhs: float, rhs: float) -> InequalityReport:
    return InequalityReport(lhs, rhs, lhs > rhs + VIOLATION_TOL, rhs - lhs)


def baby_bell_check(p_ab: float, p_ac: float, p_bc: float) -> InequalityReport:
    """Three-angle Bell bound |P_ab - P_ac| <= 1 + P_bc.

    Takes pair correlations in the singlet convention (equal angles give
    -1); every deterministic local model satisfies the bound, the quantum
    correlation -cos violates it for suitable angle triples.

    Raises:
        ValueError: if any correlation lies outside [-1, 1].
    """
    for label, value in (("p_ab", p_ab), ("p_ac", p_ac), ("p_bc", p_bc)):
        if abs(value) > 1.0 + VIOLATION_TOL:
            raise ValueError(f"correlation {label}={value} lies outside [-1, 1]")
    return _report(abs(p_ab - p_ac), 1.0 + p_bc)


def sin_inequality(zeta: float, eta: float) -> InequalityReport:
    """The same bound in reduced angles: |sin^2(zeta) - sin^2(eta+zeta)| <= sin^2(eta)."""
    lhs = abs(math.sin(zeta) ** 2 - math.sin(eta + zeta) ** 2)
    return _report(lhs, math.sin(eta) ** 2)


@dataclass(frozen=True)
class ScanPoint:
    zeta: float
    eta: float
    report: InequalityReport


def violation_scan(zeta_grid, eta_grid) -> list[ScanPoint]:
    """Evaluate :func:`sin_inequality` over the Cartesian grid, zeta-major.

    On the diagonal zeta = eta the violated set is exactly the open
    interval 0 < eta < pi/4 (boundary points report margin 0, not
    violated).
    """
    zetas = [float(z) for z in zeta_grid]
    etas = [float(e) for e in eta_grid]
    if not zetas or not etas:
        raise ValueError("scan grids must be nonempty")
    return [ScanPoint(z, e, sin_inequality(z, e)) for z in zetas for e in etas]
