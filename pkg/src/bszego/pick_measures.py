"""Absolutely continuous measures on R built from rational Pick functions.

A rational Pick function phi(x) = beta x + gamma - sum c_r/(x - z_r) with
beta >= 0, Im gamma > 0, c_r >= 0, Im z_r < 0 maps the closed upper half
plane into the open upper half plane; combined with two consecutive
orthonormal polynomials it yields a density on R whose moments up to 2k-2
reproduce (kappa_{k-1}/kappa_k times) the moments of the original measure
on [-a, 1].  Moment 2k-1 is generically not matched: that boundary is part
of the statement and is probed statistically in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import oracle
from .errors import DegreeThreshold
from .quadrature import oracle_moments, weighted_oracle_integral
from .szego_polys import OrthoPoly, explicit_family, szego_orthonormal
from .weight_models import (
    Family,
    MeasureFactor,
    WeightSpec,
    build_szego_factor,
    expected_rho_degree,
)
from .poly_core import RealPolynomial

__all__ = [
    "PickFunction",
    "pick_eval",
    "MatchedMeasure",
    "matched_measure",
    "density",
    "moment_match_check",
]


@dataclass(frozen=True)
class PickFunction:
    """beta x + gamma - sum c_r / (x - z_r)."""

    beta: float
    gamma: complex
    terms: Tuple[Tuple[float, complex], ...] = ()

    def __post_init__(self):
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")
        if not complex(self.gamma).imag > 0:
            raise ValueError("gamma must have positive imaginary part")
        for c_r, z_r in self.terms:
            if c_r < 0:
                raise ValueError("pole coefficients must be nonnegative")
            if not complex(z_r).imag < 0:
                raise ValueError("poles must lie in the lower half plane")

    def __call__(self, x):
        return pick_eval(self, x)


def pick_eval(phi: PickFunction, x):
    """phi(x) on real points; Im phi(x) >= Im gamma since every pole term
    contributes nonnegative imaginary part for Im z_r < 0."""
    x = np.asarray(x, dtype=float)
    out = phi.beta * x + complex(phi.gamma)
    for c_r, z_r in phi.terms:
        out = out - c_r / (x - complex(z_r))
    return out


@dataclass(frozen=True)
class MatchedMeasure:
    phi: PickFunction
    k: int
    p_k: OrthoPoly
    p_km1: OrthoPoly
    form: str  # "measure2": |phi p_k - p_{k-1}|^2;  "measure5": |p_k + phi p_{k-1}|^2
    kappa_ratio: float  # kappa_{k-1} / kappa_k
    base_spec: WeightSpec


def matched_measure(spec: WeightSpec, phi: PickFunction, form: str = "measure2") -> MatchedMeasure:
    """Build the matched measure for the cos-plus-cosh weight with odd n, m.

    p_k is the explicit degree-(m+n)/2 polynomial; p_{k-1} comes from the
    spectral-factor recipe when its degree threshold allows, and from direct
    normalization of the constant when k - 1 = 0 (where the recipe's
    threshold l < 2k is not available).
    """
    if form not in ("measure2", "measure5"):
        raise ValueError("form must be 'measure2' or 'measure5'")
    if spec.family is not Family.CosPlusCosh or spec.n % 2 == 0 or spec.m % 2 == 0:
        raise ValueError("matched measures are built on the odd/odd cos-plus-cosh weight")
    wspec = spec.with_measure(MeasureFactor.InvSqrtBoth)
    k = (spec.n + spec.m) // 2
    p_k = explicit_family(wspec)
    l = expected_rho_degree(wspec)
    if l < 2 * (k - 1):
        factor = build_szego_factor(wspec)
        p_km1 = szego_orthonormal(factor, k - 1, MeasureFactor.InvSqrtBoth)
    elif k - 1 == 0:
        mass = float(oracle_moments(wspec, 0)[0])
        c0 = 1.0 / np.sqrt(mass)
        p_km1 = OrthoPoly(
            degree=0,
            poly=RealPolynomial([c0]),
            leading_coeff=c0,
            weight=wspec,
        )
    else:
        raise DegreeThreshold(
            f"p_(k-1) not constructible: l = {l} >= 2(k-1) = {2 * (k - 1)}"
        )
    return MatchedMeasure(
        phi=phi,
        k=k,
        p_k=p_k,
        p_km1=p_km1,
        form=form,
        kappa_ratio=p_km1.leading_coeff / p_k.leading_coeff,
        base_spec=wspec,
    )


def density(meas: MatchedMeasure, x):
    """Pointwise density; strictly positive on R.

    Im(phi - p_{k-1}/p_k) = Im phi > 0 away from the real zeros of p_k, and
    at those zeros the other factor is nonzero by interlacing, so neither
    denominator form can vanish.
    """
    x = np.asarray(x, dtype=float)
    ph = pick_eval(meas.phi, x)
    if meas.form == "measure2":
        denom = np.abs(ph * meas.p_k(x) - meas.p_km1(x)) ** 2
    else:
        denom = np.abs(meas.p_k(x) + ph * meas.p_km1(x)) ** 2
    return np.imag(ph) / np.pi / denom


def moment_match_check(meas: MatchedMeasure, j: int, tol: float = 1e-8):
    """(lhs, rhs) for the j-th moment identity.

    lhs integrates x^j against the density over R (rational substitution;
    the tails decay at least like x^-2 for j <= 2k-2).  rhs is
    kappa_{k-1}/kappa_k times the oracle moment of the base measure.
    For the boundary probe j = 2k-1, where the improper integral need not
    converge, a fixed symmetric truncation is used instead.
    """
    if j < 0 or j > 2 * meas.k - 1:
        raise ValueError("moment order must satisfy 0 <= j <= 2k-1")

    def f(x):
        return np.asarray(x) ** j * density(meas, x)

    if j <= 2 * meas.k - 2:
        lhs = oracle.improper_integral(f, decay="RationalOrder2", tol=tol)
    else:
        lhs, _ = oracle.integrate(
            oracle.IntegrandSpec(f, oracle.FiniteDirect(-60.0, 60.0)), tol=tol
        )
    rhs = meas.kappa_ratio * float(oracle_moments(meas.base_spec, j)[j])
    return lhs, rhs


def moment_match_all(meas: MatchedMeasure, tol: float = 1e-8):
    """All matched moments j = 0..2k-2 in one adaptive pass; returns (lhs, rhs) arrays."""
    powers = np.arange(2 * meas.k - 1)

    def f(x):
        x = np.asarray(x)
        return x[:, None] ** powers[None, :] * density(meas, x)[:, None]

    lhs = oracle.improper_integral(f, decay="RationalOrder2", tol=tol)
    mu = oracle_moments(meas.base_spec, 2 * meas.k - 2)
    return np.asarray(lhs), meas.kappa_ratio * mu
