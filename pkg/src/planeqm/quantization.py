"""Covariant integral quantization of functions on the circle.

The density family rho(r, phi + phi0) resolves the identity against the
measure d(phi)/pi on [0, 2*pi):

    integral rho(r, phi + phi0) d(phi)/pi = I            (any r, phi0)

which turns every real function f on the circle into a symmetric operator

    A_f = <f> I + (r/2) [Cc(f_shifted) SIGMA3 + Cs(f_shifted) SIGMA1],

where <f> is the circle average, f_shifted(phi) = f(phi - phi0), and
Cc/Cs are the doubled-angle Fourier coefficients

    Cc(f) = integral f(phi) cos(2 phi) d(phi)/pi,
    Cs(f) = integral f(phi) sin(2 phi) d(phi)/pi.

Functions enter either as finite Fourier series (closed-form coefficients)
or as callables sampled on a uniform periodic grid: the equal-weight
rectangle rule on [0, 2*pi) is spectrally accurate and exact for
trigonometric polynomials of degree < n/2.

Restricting the map to characteristic functions of Borel sets yields the
POVM F(interval) = integral_over_interval rho d(phi)/pi, computed here
from exact antiderivatives so that additivity holds to the bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .states import SIGMA1, SIGMA3, TWO_PI, DensityParams, density_matrix

#: Default number of quadrature nodes for sampled functions.
DEFAULT_SAMPLES = 1024
MIN_SAMPLES = 8


@dataclass(frozen=True)
class FourierSeries:
    """Finite real Fourier series a0 + sum_k (ak cos(k phi) + bk sin(k phi)).

    ``terms`` holds (k, ak, bk) triples with distinct positive integer
    harmonics k.  This is the canonical exchange format for quantization
    inputs; see :func:`fourier_series_from_json` for the JSON form.
    """

    a0: float = 0.0
    terms: tuple[tuple[int, float, float], ...] = ()

    def __post_init__(self) -> None:
        cleaned = tuple(
            (int(k), float(ak), float(bk)) for k, ak, bk in self.terms
        )
        ks = [k for k, _, _ in cleaned]
        if any(k < 1 for k in ks):
            raise ValueError("harmonic indices k must be positive integers")
        if len(set(ks)) != len(ks):
            raise ValueError("harmonic indices k must be distinct")
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "a0", float(self.a0))

    @classmethod
    def constant(cls, value: float) -> "FourierSeries":
        return cls(a0=value)

    @classmethod
    def harmonic(cls, k: int, ak: float = 0.0, bk: float = 0.0) -> "FourierSeries":
        return cls(0.0, ((k, ak, bk),))

    def __call__(self, phi):
        phi = np.asarray(phi, dtype=float)
        out = np.full_like(phi, self.a0, dtype=float)
        for k, ak, bk in self.terms:
            out = out + ak * np.cos(k * phi) + bk * np.sin(k * phi)
        return out if out.shape else float(out)

    def coefficient(self, k: int) -> tuple[float, float]:
        """(ak, bk) of harmonic k, zero if absent."""
        for kk, ak, bk in self.terms:
            if kk == k:
                return ak, bk
        return 0.0, 0.0

    def shifted(self, delta: float) -> "FourierSeries":
        """The translated series phi -> f(phi - delta), again in closed form."""
        shifted_terms = []
        for k, ak, bk in self.terms:
            c, s = math.cos(k * delta), math.sin(k * delta)
            shifted_terms.append((k, ak * c - bk * s, ak * s + bk * c))
        return FourierSeries(self.a0, tuple(shifted_terms))


#: A function on [0, 2*pi): a finite Fourier series, or a callable sampled
#: on the quadrature grid.  Callables must accept numpy arrays of angles.
CircleFunction = Union[FourierSeries, Callable[[np.ndarray], np.ndarray]]


def fourier_series_from_json(data) -> FourierSeries:
    """Parse {"a0": number, "terms": [{"k": int, "ak": number, "bk": number}]}.

    Accepts a dict or a JSON string; missing coefficients default to 0.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("Fourier series JSON must be an object")
    terms = data.get("terms", [])
    if not isinstance(terms, list):
        raise ValueError('"terms" must be a list of {k, ak, bk} objects')
    parsed = []
    for entry in terms:
        if not isinstance(entry, dict) or "k" not in entry:
            raise ValueError('each term needs at least a "k" harmonic index')
        parsed.append((entry["k"], entry.get("ak", 0.0), entry.get("bk", 0.0)))
    return FourierSeries(data.get("a0", 0.0), tuple(parsed))


def fourier_series_to_json(series: FourierSeries) -> dict:
    return {
        "a0": series.a0,
        "terms": [{"k": k, "ak": ak, "bk": bk} for k, ak, bk in series.terms],
    }


@dataclass(frozen=True)
class FourierData:
    """Circle average plus the doubled-angle coefficients of a function."""

    mean: float
    cc: float
    cs: float

    def rotated(self, angle: float) -> "FourierData":
        """Coefficients of the series translated so that (cc, cs) rotates by ``angle``."""
        c, s = math.cos(angle), math.sin(angle)
        return FourierData(self.mean, self.cc * c - self.cs * s, self.cc * s + self.cs * c)


def _quadrature_grid(n_samples: int) -> np.ndarray:
    if n_samples < MIN_SAMPLES:
        raise ValueError(f"n_samples must be at least {MIN_SAMPLES}, got {n_samples}")
    return np.arange(n_samples) * (TWO_PI / n_samples)


def _sample(rule: Callable, phis: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(rule(phis), dtype=float)
    except (TypeError, ValueError):
        vals = None
    if vals is None or vals.shape != phis.shape:
        # scalar-only callable: fall back to a point-by-point evaluation
        vals = np.array([float(rule(p)) for p in phis])
    return vals


def fourier_coefficients(f: CircleFunction, n_samples: int = DEFAULT_SAMPLES) -> FourierData:
    """Mean and doubled-angle coefficients of a circle function.

    Fourier-series inputs are read off in closed form (mean = a0,
    cc = a2, cs = b2); callables are integrated with the n_samples-point
    rectangle rule, exact for trigonometric polynomials of degree
    < n_samples/2.
    """
    if n_samples < MIN_SAMPLES:
        raise ValueError(f"n_samples must be at least {MIN_SAMPLES}, got {n_samples}")
    if isinstance(f, FourierSeries):
        a2, b2 = f.coefficient(2)
        return FourierData(f.a0, a2, b2)
    phis = _quadrature_grid(n_samples)
    vals = _sample(f, phis)
    # d(phi)/(2 pi) for the mean, d(phi)/pi for the doubled-angle pair
    mean = float(vals.mean())
    cc = float(2.0 * (vals * np.cos(2.0 * phis)).mean())
    cs = float(2.0 * (vals * np.sin(2.0 * phis)).mean())
    return FourierData(mean, cc, cs)


def _check_mixing(r: float) -> None:
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"degree of mixing r must lie in [0, 1], got {r}")


def quantize(
    f: CircleFunction,
    r: float,
    phi0: float,
    n_samples: int = DEFAULT_SAMPLES,
) -> np.ndarray:
    """Quantize a circle function against the rho(r, phi + phi0) family.

    A_f = <f> I + (r/2) [Cc' SIGMA3 + Cs' SIGMA1], where (Cc', Cs') are
    the doubled-angle coefficients of f(phi - phi0), i.e. the (cc, cs)
    pair of f rotated by 2*phi0.  The output is symmetric and linear in f;
    the constant function 1 maps to the identity for every (r, phi0).
    """
    _check_mixing(r)
    data = fourier_coefficients(f, n_samples).rotated(2.0 * phi0)
    return data.mean * np.eye(2) + 0.5 * r * (data.cc * SIGMA3 + data.cs * SIGMA1)


def identity_residual(r: float, phi0: float, n_samples: int = DEFAULT_SAMPLES) -> float:
    """Max-abs entry of (integral rho(r, phi + phi0) d(phi)/pi  -  I).

    Evaluated with the rectangle rule on ``n_samples`` nodes; the exact
    integral is the identity, so the residual probes quadrature plus
    rounding only (expected ~1e-15).
    """
    _check_mixing(r)
    phis = _quadrature_grid(n_samples)
    acc = np.zeros((2, 2))
    for p in phis:
        acc += density_matrix(DensityParams(r, phi0 + p))
    return float(np.abs(acc * (2.0 / n_samples) - np.eye(2)).max())


def commutator_e1_e2(r: float, phi0: float) -> np.ndarray:
    """Commutator of the quantized cos(2 phi) and sin(2 phi).

    Equals -(r^2/2) TAU2 for every phi0: the images of the doubled-angle
    basis functions close on the rotation generator, scaled by the squared
    degree of mixing.
    """
    a1 = quantize(FourierSeries.harmonic(2, ak=1.0), r, phi0)
    a2 = quantize(FourierSeries.harmonic(2, bk=1.0), r, phi0)
    return a1 @ a2 - a2 @ a1


@dataclass(frozen=True)
class SuperpositionResult:
    """Quadrature reconstruction of a density as a continuous mixture."""

    matrix: np.ndarray
    convex: bool
    min_weight: float


def superposition_density(
    s: float,
    theta: float,
    r: float,
    n_samples: int = DEFAULT_SAMPLES,
) -> SuperpositionResult:
    """Reconstruct rho(s, theta) as a weighted average of rho(r, phi + theta).

    Evaluates integral [1/2 + (s/r) cos(2 phi)] rho(r, phi + theta) d(phi)/pi
    with the rectangle rule.  The result equals density_matrix((s, theta)).
    The weight function is nonnegative (a genuinely convex mixture) exactly
    when r >= 2 s; its minimum 1/2 - s/r is reported.
    """
    if not 0.0 < r <= 1.0:
        raise ValueError(f"mixing degree r of the integrand family must lie in (0, 1], got {r}")
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"target mixing degree s must lie in [0, 1], got {s}")
    phis = _quadrature_grid(n_samples)
    acc = np.zeros((2, 2))
    for p in phis:
        weight = 0.5 + (s / r) * math.cos(2.0 * p)
        acc += weight * density_matrix(DensityParams(r, theta + p))
    min_weight = 0.5 - s / r
    return SuperpositionResult(acc * (2.0 / n_samples), min_weight >= 0.0, min_weight)


@dataclass(frozen=True)
class BorelSet:
    """Finite union of disjoint half-open intervals [a, b) inside [0, 2*pi)."""

    intervals: tuple[tuple[float, float], ...] = field(default=())

    def __post_init__(self) -> None:
        cleaned = tuple((float(a), float(b)) for a, b in self.intervals)
        for a, b in cleaned:
            if not 0.0 <= a <= b <= TWO_PI:
                raise ValueError(
                    f"interval [{a}, {b}) must satisfy 0 <= a <= b <= 2*pi"
                )
        ordered = sorted(cleaned)
        for (_, b_prev), (a_next, _) in zip(ordered, ordered[1:]):
            if a_next < b_prev:
                raise ValueError("intervals overlap; a Borel set needs disjoint pieces")
        object.__setattr__(self, "intervals", cleaned)

    @classmethod
    def full_circle(cls) -> "BorelSet":
        return cls(((0.0, TWO_PI),))

    @property
    def measure(self) -> float:
        return sum(b - a for a, b in self.intervals)


def povm_element(
    delta: BorelSet,
    r: float,
    phi0: float,
    n_samples: int = DEFAULT_SAMPLES,
) -> np.ndarray:
    """POVM value F(delta) = integral over delta of rho(r, phi + phi0) d(phi)/pi.

    Positive semidefinite, additive over disjoint sets, and equal to the
    identity on the full circle.  Each interval is integrated from the
    exact antiderivative of the density entries, so additivity is
    bit-stable; ``n_samples`` is accepted for interface symmetry with the
    quadrature-based operations but not used.
    """
    del n_samples
    _check_mixing(r)
    out = np.zeros((2, 2))
    for a, b in delta.intervals:
        c_term = math.sin(2.0 * (b + phi0)) - math.sin(2.0 * (a + phi0))
        s_term = math.cos(2.0 * (a + phi0)) - math.cos(2.0 * (b + phi0))
        out += ((b - a) / TWO_PI) * np.eye(2)
        out += (r / (4.0 * math.pi)) * (c_term * SIGMA3 + s_term * SIGMA1)
    return out
