"""Weight families on [-a, 1] and their spectral factors.

The basic building block is

    rho_a(t) = cos(2n asin sqrt(t)) + cosh(2m asinh sqrt(t/a)),

a polynomial in t equal to T_n(1-2t) + T_m(1+2t/a).  The cosh-minus-cos
family divides the difference by t (removable singularity at 0), and the
squared / product / mixed families combine such blocks.  For the two base
families the Fejer-Riesz factor h(z) with |h(e^{i theta})|^2 = rho(cos theta),
h zero-free in the open unit disk and h(0) > 0, is recovered from samples of
the defining trigonometric expression on the unit circle.

Negative t is always handled by the explicit real continuations
asin(sqrt(t)) = i asinh(sqrt(-t)) and asinh(sqrt(t/a)) = i asin(sqrt(-t/a)),
never by complex square roots.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, FactorizationResidual, ParityError, RootInDisk
from .poly_core import RealPolynomial, cheb_T, poly_from_circle_samples, poly_roots

__all__ = [
    "Family",
    "MeasureFactor",
    "WeightSpec",
    "SzegoFactor",
    "rho_eval",
    "xi_eta_eval",
    "expected_rho_degree",
    "build_szego_factor",
    "squared_factor",
    "weight_base",
]

_SERIES_RADIUS = 1e-6
_PARAM_CAP = 64


class Family(enum.Enum):
    CosPlusCosh = "cos_plus_cosh"
    SquaredCosPlusCosh = "squared_cos_plus_cosh"
    CoshMinusCosOverT = "cosh_minus_cos_over_t"
    ProductCosPlusCosh = "product_cos_plus_cosh"
    ProductCoshMinusCos = "product_cosh_minus_cos"
    MixedPlusMinus = "mixed_plus_minus"


class MeasureFactor(enum.Enum):
    InvSqrtBoth = "inv_sqrt_both"    # 1 / (rho sqrt((1-t)(a+t)))
    SqrtBoth = "sqrt_both"           # sqrt((1-t)(a+t)) / rho
    SqrtRatio = "sqrt_ratio"         # sqrt((1-t)/(a+t)) / rho
    PlainDt = "plain_dt"             # 1 / rho


_PRODUCT_FAMILIES = (
    Family.ProductCosPlusCosh,
    Family.ProductCoshMinusCos,
    Family.MixedPlusMinus,
)


@dataclass(frozen=True)
class WeightSpec:
    """Parameters selecting one weight function on [-a, 1]."""

    n: int
    m: int
    a: float
    family: Family = Family.CosPlusCosh
    measure_factor: MeasureFactor = MeasureFactor.InvSqrtBoth
    m_prime: Optional[int] = None

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive integers")
        if not self.a > 0:
            raise ValueError("a must be positive")
        if self.n + self.m > _PARAM_CAP:
            raise ValueError(f"n + m capped at {_PARAM_CAP} to control interpolation error")
        if self.family in _PRODUCT_FAMILIES:
            if self.m_prime is None or self.m_prime < 1:
                raise ValueError("product/mixed families require m_prime >= 1")
            if (self.m + self.m_prime) % 2 != 0:
                raise ParityError("product/mixed families require m + m_prime even")
        elif self.m_prime is not None:
            raise ValueError("m_prime only applies to product/mixed families")

    def with_measure(self, measure_factor: MeasureFactor) -> "WeightSpec":
        return WeightSpec(self.n, self.m, self.a, self.family, measure_factor, self.m_prime)

    def params_dict(self) -> dict:
        d = {"n": self.n, "m": self.m, "a": self.a, "family": self.family.value,
             "measure_factor": self.measure_factor.value}
        if self.m_prime is not None:
            d["m_prime"] = self.m_prime
        return d


def _check_domain(t, a):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    slack = 1e-9 * (1.0 + a)
    if np.any(t < -a - slack) or np.any(t > 1.0 + slack):
        raise DomainError(f"t outside [{-a}, 1]")
    return np.clip(t, -a, 1.0)


def _rho_cpc(t, n, m, a):
    return cheb_T(n, 1.0 - 2.0 * t) + cheb_T(m, 1.0 + 2.0 * t / a)


def _rho_cmc(t, n, m, a):
    """(cosh(2m asinh sqrt(t/a)) - cos(2n asin sqrt(t))) / t with series fallback.

    Direct evaluation cancels catastrophically near t = 0; below |t| < 1e-6 a
    two-term Taylor series keeps the relative error under 1e-12.
    """
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = np.abs(t) < _SERIES_RADIUS
    ts = t[small]
    out[small] = (
        2.0 * (m * m / a + n * n)
        + (2.0 * ts / 3.0) * ((m ** 4 - m * m) / (a * a) - (n ** 4 - n * n))
    )
    tb = t[~small]
    out[~small] = (cheb_T(m, 1.0 + 2.0 * tb / a) - cheb_T(n, 1.0 - 2.0 * tb)) / tb
    return out


def rho_eval(spec: WeightSpec, t):
    """Evaluate the selected family's rho at t in [-a, 1] (scalar or array)."""
    tt = _check_domain(t, spec.a)
    n, m, a = spec.n, spec.m, spec.a
    fam = spec.family
    if fam is Family.CosPlusCosh:
        out = _rho_cpc(tt, n, m, a)
    elif fam is Family.SquaredCosPlusCosh:
        out = _rho_cpc(tt, n, m, a) ** 2
    elif fam is Family.CoshMinusCosOverT:
        out = _rho_cmc(tt, n, m, a)
    elif fam is Family.ProductCosPlusCosh:
        out = _rho_cpc(tt, n, m, a) * _rho_cpc(tt, n, spec.m_prime, a)
    elif fam is Family.ProductCoshMinusCos:
        out = _rho_cmc(tt, n, m, a) * _rho_cmc(tt, n, spec.m_prime, a)
    elif fam is Family.MixedPlusMinus:
        out = _rho_cpc(tt, n, m, a) * _rho_cmc(tt, n, spec.m_prime, a)
    else:  # pragma: no cover
        raise ValueError(fam)
    return out if np.ndim(t) else float(out[0])


def xi_eta_eval(spec: WeightSpec, t):
    """The pair (xi_a(t), eta_a(t)) for the cos-plus-cosh block.

    xi_a = cos(n asin sqrt t) cosh(m asinh sqrt(t/a)),
    eta_a = sin(n asin sqrt t) sinh(m asinh sqrt(t/a));
    for t < 0 the real continuations are
    xi_a = cos(m asin sqrt(-t/a)) cosh(n asinh sqrt(-t)),
    eta_a = -sin(m asin sqrt(-t/a)) sinh(n asinh sqrt(-t)).
    Satisfies 2(xi^2 + eta^2) = rho_a identically.
    """
    tt = _check_domain(t, spec.a)
    n, m, a = spec.n, spec.m, spec.a
    xi = np.empty_like(tt)
    eta = np.empty_like(tt)
    pos = tt >= 0.0
    tp = tt[pos]
    A = n * np.arcsin(np.sqrt(tp))
    B = m * np.arcsinh(np.sqrt(tp / a))
    xi[pos] = np.cos(A) * np.cosh(B)
    eta[pos] = np.sin(A) * np.sinh(B)
    tn = tt[~pos]
    P = m * np.arcsin(np.sqrt(np.minimum(-tn / a, 1.0)))
    Q = n * np.arcsinh(np.sqrt(-tn))
    xi[~pos] = np.cos(P) * np.cosh(Q)
    eta[~pos] = -np.sin(P) * np.sinh(Q)
    if np.ndim(t):
        return xi, eta
    return float(xi[0]), float(eta[0])


def expected_rho_degree(spec: WeightSpec) -> int:
    """Degree of rho as a polynomial in t.

    T_n(1-2t) + T_m(1+2t/a) has degree max(m, n) except when m = n, n odd,
    a = 1, where the leading terms cancel and the degree drops to n - 1.
    For the cosh-minus-cos quotient the difference loses its leading term
    when m = n, n even, a = 1, and the division by t lowers the degree by 1.
    """
    n, m, a = spec.n, spec.m, spec.a
    fam = spec.family

    def cpc_deg(mm):
        if mm != n:
            return max(mm, n)
        return n - 1 if (n % 2 == 1 and a == 1.0) else n

    def cmc_deg(mm):
        if mm != n:
            return max(mm, n) - 1
        return n - 2 if (n % 2 == 0 and a == 1.0) else n - 1

    if fam is Family.CosPlusCosh:
        return cpc_deg(m)
    if fam is Family.SquaredCosPlusCosh:
        return 2 * cpc_deg(m)
    if fam is Family.CoshMinusCosOverT:
        return cmc_deg(m)
    if fam is Family.ProductCosPlusCosh:
        return cpc_deg(m) + cpc_deg(spec.m_prime)
    if fam is Family.ProductCoshMinusCos:
        return cmc_deg(m) + cmc_deg(spec.m_prime)
    if fam is Family.MixedPlusMinus:
        return cpc_deg(m) + cmc_deg(spec.m_prime)
    raise ValueError(fam)  # pragma: no cover


@dataclass(frozen=True)
class SzegoFactor:
    """Validated Fejer-Riesz factor h with |h(e^{i theta})|^2 = rho(cos theta)."""

    spec: WeightSpec
    h: RealPolynomial
    max_factorization_residual: float

    def circle_values(self, theta):
        return self.h(np.exp(1j * np.asarray(theta, dtype=float)))


def _theta_grid_samples(spec: WeightSpec, n_samples: int):
    """h(e^{i theta_k}) on the uniform grid, theta in [0, pi] by formula and
    (pi, 2pi) by conjugate symmetry."""
    n, m, a = spec.n, spec.m, spec.a
    theta = 2.0 * np.pi * np.arange(n_samples) / n_samples
    upper = theta <= np.pi + 1e-15
    th = theta[upper]
    t = np.clip(0.5 * ((1.0 - a) + (1.0 + a) * np.cos(th)), -a, 1.0)
    if spec.family is Family.CosPlusCosh:
        xi, eta = xi_eta_eval(spec, t)
        phase = (1j ** (-n)) * np.exp(1j * (n + m) * th / 2.0)
        vals_upper = phase * np.sqrt(2.0) * (xi + 1j * eta)
    elif spec.family is Family.CoshMinusCosOverT:
        F = np.empty(len(th), dtype=complex)
        pos = t > _SERIES_RADIUS
        tp = t[pos]
        A = n * np.arcsin(np.sqrt(tp))
        B = m * np.arcsinh(np.sqrt(tp / a))
        F[pos] = np.sqrt(2.0 / tp) * (np.sin(A) * np.cosh(B) - 1j * np.cos(A) * np.sinh(B))
        neg = t < -_SERIES_RADIUS
        tn = t[neg]
        P = m * np.arcsin(np.sqrt(np.minimum(-tn / a, 1.0)))
        Q = n * np.arcsinh(np.sqrt(-tn))
        F[neg] = np.sqrt(-2.0 / tn) * (np.cos(P) * np.sinh(Q) - 1j * np.sin(P) * np.cosh(Q))
        mid = ~(pos | neg)
        if np.any(mid):
            tm = t[mid]
            # sqrt(2/t) sin(n asin sqrt t - i m asinh sqrt(t/a)) is an even
            # function of sqrt(t): analytic across t = 0 with this limit.
            F[mid] = np.sqrt(2.0) * ((n - 1j * m / np.sqrt(a)) + tm * 0.0)
        phase = (1j ** (1 - n)) * np.exp(1j * (n + m - 1) * th / 2.0)
        vals_upper = phase * F
    else:
        raise ParityError(f"no circle sampling formula for family {spec.family}")
    vals = np.empty(n_samples, dtype=complex)
    vals[upper] = vals_upper
    lower = ~upper
    idx = np.arange(n_samples)[lower]
    vals[idx] = np.conj(vals[n_samples - idx])
    return vals


def _validate_factor(spec: WeightSpec, h: RealPolynomial) -> float:
    deg = expected_rho_degree(spec)
    if h.degree != deg:
        raise FactorizationResidual(
            f"factor degree {h.degree} does not match rho degree {deg}"
        )
    if not h(0.0) > 0.0:
        raise FactorizationResidual(f"h(0) = {h(0.0)} is not positive")
    theta = np.linspace(0.0, np.pi, 512)
    t = np.clip(0.5 * ((1.0 - spec.a) + (1.0 + spec.a) * np.cos(theta)), -spec.a, 1.0)
    rho = rho_eval(spec, t)
    resid = float(np.max(np.abs(np.abs(h(np.exp(1j * theta))) ** 2 - rho)))
    if resid > 1e-9 * float(np.max(rho)):
        raise FactorizationResidual(
            f"|h|^2 - rho residual {resid:.3e} above 1e-9 * max rho"
        )
    if h.degree >= 1:
        roots = poly_roots(h)
        min_mod = float(np.min(np.abs(roots)))
        if min_mod < 1.0 - 1e-8:
            raise RootInDisk(f"root of modulus {min_mod} inside the unit disk")
    return resid


def build_szego_factor(spec: WeightSpec) -> SzegoFactor:
    """Construct and validate the Fejer-Riesz factor for the base families.

    Samples the defining expression at the N-th roots of unity with N the
    smallest power of two >= 2 (deg + 1); the headroom makes degree mistakes
    visible as non-negligible trailing coefficients.
    """
    if spec.family not in (Family.CosPlusCosh, Family.CoshMinusCosOverT):
        raise ParityError(f"no direct factorization for family {spec.family}")
    deg = expected_rho_degree(spec)
    n_samples = 1
    while n_samples < 2 * (deg + 1):
        n_samples *= 2
    vals = _theta_grid_samples(spec, n_samples)
    coeffs = np.fft.fft(vals) / n_samples
    tail = np.max(np.abs(coeffs[deg + 1:])) if deg + 1 < n_samples else 0.0
    if tail > 1e-8 * np.max(np.abs(coeffs)):
        raise FactorizationResidual(
            f"trailing coefficient mass {tail:.3e} signals a degree mismatch"
        )
    h = poly_from_circle_samples(vals, deg)
    resid = _validate_factor(spec, h)
    return SzegoFactor(spec=spec, h=h, max_factorization_residual=resid)


def squared_factor(base: SzegoFactor) -> SzegoFactor:
    """Factor h^2 for the squared weight rho^2."""
    if base.spec.family is not Family.CosPlusCosh:
        raise ParityError("squared factor is defined for the cos-plus-cosh family")
    spec2 = WeightSpec(
        base.spec.n, base.spec.m, base.spec.a,
        Family.SquaredCosPlusCosh, base.spec.measure_factor,
    )
    h2 = base.h * base.h
    resid = _validate_factor(spec2, h2)
    return SzegoFactor(spec=spec2, h=h2, max_factorization_residual=resid)


def weight_base(spec: WeightSpec):
    """Split the weight into a smooth factor and a square-root kernel power.

    Returns (g, power) with  w(t) dt = g(t) * ((1-t)(a+t))^(power/2) dt,
    matching the oracle's theta-substituted interval kinds.
    """
    mf = spec.measure_factor
    if mf is MeasureFactor.InvSqrtBoth:
        return (lambda t: 1.0 / rho_eval(spec, t)), -1
    if mf is MeasureFactor.SqrtBoth:
        return (lambda t: 1.0 / rho_eval(spec, t)), +1
    if mf is MeasureFactor.SqrtRatio:
        return (lambda t: (1.0 - np.asarray(t)) / rho_eval(spec, t)), -1
    if mf is MeasureFactor.PlainDt:
        return (lambda t: 1.0 / rho_eval(spec, t)), 0
    raise ValueError(mf)  # pragma: no cover
