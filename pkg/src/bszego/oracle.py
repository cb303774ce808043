"""Independent adaptive numerical integration.

Everything here is deliberately generic: adaptive 15-point Gauss panels with
bisection refinement, endpoint substitutions for the interval kinds that need
them, and series guards near removable singularities. No closed-form result
from the rest of the package is ever used on this side of a comparison.

Evaluators may be vector-valued: an evaluator mapping an array of points of
shape (npts,) to shape (npts,) or (npts, K) integrates K components in one
adaptive pass, refining on the worst component.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import NoConvergence

__all__ = [
    "SingularityGuard",
    "ThetaSubstituted",
    "FiniteDirect",
    "RealLineExpTail",
    "RealLineRational",
    "IntegrandSpec",
    "integrate",
    "fourier_coeff",
    "improper_integral",
]

_GX, _GW = leggauss(15)
_MAX_DEPTH = 48


@dataclass(frozen=True)
class SingularityGuard:
    """Replace evaluator(x) by series(x) on |x - center| < radius."""

    center: float
    radius: float
    series: Callable


@dataclass(frozen=True)
class ThetaSubstituted:
    """Interval [-a, 1] with t = ((1-a) + (1+a) cos(theta))/2, theta in [0, pi].

    The integral computed is  int_{-a}^{1} g(t) * K(t) dt  with
    K = ((1-t)(a+t))^(weight_power/2); the substitution turns K dt into a
    smooth function of theta (weight_power -1 gives plain d(theta)).
    """

    a: float
    weight_power: int = -1


@dataclass(frozen=True)
class FiniteDirect:
    lo: float
    hi: float


@dataclass(frozen=True)
class RealLineExpTail:
    """Integrand decays like exp(-c sqrt|x|) or faster; domain truncated adaptively."""

    lo: float = 0.0
    two_sided: bool = False
    block: float = 8.0
    max_blocks: int = 400


@dataclass(frozen=True)
class RealLineRational:
    """Integrand decays like |x|^-2; substitution x = s/(1-s^2), s in (-1,1)."""


@dataclass(frozen=True)
class IntegrandSpec:
    evaluator: Callable
    interval: object
    singularity_guards: Sequence[SingularityGuard] = field(default_factory=tuple)


def _guarded(evaluator, guards):
    if not guards:
        return evaluator

    def wrapped(x):
        x = np.asarray(x, dtype=float)
        out = None
        untouched = np.ones(x.shape, dtype=bool)
        for g in guards:
            near = np.abs(x - g.center) < g.radius
            if np.any(near):
                vals = np.asarray(g.series(x[near]))
                if out is None:
                    proto = np.zeros(x.shape + vals.shape[1:], dtype=vals.dtype)
                    out = proto
                out[near] = vals
                untouched &= ~near
        direct = np.asarray(evaluator(x[untouched]))
        if out is None:
            out = np.zeros(x.shape + direct.shape[1:], dtype=direct.dtype)
        out[untouched] = direct
        return out

    return wrapped


def _panel(f, lo, hi):
    mid = 0.5 * (lo + hi)
    hw = 0.5 * (hi - lo)
    vals = np.asarray(f(mid + hw * _GX))
    if vals.ndim == 1:
        return hw * float(np.dot(_GW, vals))
    return hw * (_GW @ vals)


def _adaptive(f, lo, hi, tol):
    """Globally adaptive bisection; returns (value, err_est).

    Panels are accepted when bisecting changes their value by less than their
    share of the tolerance budget; accepted contributions are summed in
    position order for run-to-run determinism.
    """
    width = hi - lo
    coarse = _panel(f, lo, hi)
    rough = np.max(np.abs(np.atleast_1d(coarse)))
    stack = [(lo, hi, coarse, 0)]
    accepted = []
    err = 0.0
    while stack:
        a, b, ca, depth = stack.pop()
        m = 0.5 * (a + b)
        left = _panel(f, a, m)
        right = _panel(f, m, b)
        fine = left + right
        diff = np.max(np.abs(np.atleast_1d(fine - ca)))
        budget = tol * max(1.0, rough) * max((b - a) / width, 1e-6)
        if diff <= 0.25 * budget or depth >= _MAX_DEPTH:
            if depth >= _MAX_DEPTH and diff > budget:
                raise NoConvergence(
                    f"panel [{a}, {b}] not converged at depth {depth}",
                    best=fine,
                    err_est=diff,
                )
            accepted.append((a, fine))
            err += diff / 15.0
        else:
            stack.append((m, b, right, depth + 1))
            stack.append((a, m, left, depth + 1))
    accepted.sort(key=lambda item: item[0])
    total = accepted[0][1]
    for _, v in accepted[1:]:
        total = total + v
    return total, err


def integrate(spec: IntegrandSpec, tol: float = 1e-10):
    """Adaptive integration of spec; returns (value, err_est).

    err_est <= tol * (1 + |value|) on success; NoConvergence carries the best
    estimate otherwise.
    """
    tol = max(tol, 1e-14)
    f = _guarded(spec.evaluator, spec.singularity_guards)
    iv = spec.interval
    if isinstance(iv, ThetaSubstituted):
        a = iv.a
        p = iv.weight_power

        def g(theta):
            t = 0.5 * ((1.0 - a) + (1.0 + a) * np.cos(theta))
            t = np.clip(t, -a, 1.0)
            vals = np.asarray(f(t))
            if p == -1:
                return vals
            jac = (0.5 * (1.0 + a) * np.sin(theta)) ** (p + 1)
            if vals.ndim == 2:
                return vals * jac[:, None]
            return vals * jac

        value, err = _adaptive(g, 0.0, np.pi, tol)
    elif isinstance(iv, FiniteDirect):
        value, err = _adaptive(f, iv.lo, iv.hi, tol)
    elif isinstance(iv, RealLineExpTail):
        return improper_integral(
            f, decay="Exponential", tol=tol, lo=iv.lo, two_sided=iv.two_sided,
            block=iv.block, max_blocks=iv.max_blocks,
        ), 0.0
    elif isinstance(iv, RealLineRational):
        return improper_integral(f, decay="RationalOrder2", tol=tol), 0.0
    else:
        raise TypeError(f"unknown interval kind: {iv!r}")
    scale = 1.0 + np.max(np.abs(np.atleast_1d(value)))
    if err > tol * scale:
        raise NoConvergence("error estimate above tolerance", best=value, err_est=err)
    if np.ndim(value) == 0:
        return float(value), float(err)
    return value, float(err)


def fourier_coeff(g: Callable, harmonic: int, kind: str = "cos", npts: int = 4096):
    """Fourier coefficient of a 2pi-periodic evaluator by uniform sampling.

    kind "cos"/"sin" return the usual real coefficients (1/pi) int g cos/sin
    (mean value for harmonic 0); "exp" returns (1/2pi) int g e^{-i h theta}.
    The trapezoid rule on a uniform grid is spectrally accurate for smooth
    periodic integrands.
    """
    if harmonic < 0:
        raise ValueError("harmonic must be nonnegative")
    theta = 2.0 * np.pi * np.arange(npts) / npts
    vals = np.asarray(g(theta))
    if kind == "exp":
        return complex(np.mean(vals * np.exp(-1j * harmonic * theta)))
    if harmonic == 0:
        return float(np.mean(np.real(vals)))
    if kind == "cos":
        return float(2.0 * np.mean(np.real(vals * np.cos(harmonic * theta))))
    if kind == "sin":
        return float(2.0 * np.mean(np.real(vals * np.sin(harmonic * theta))))
    raise ValueError(f"unknown kind {kind!r}")


def improper_integral(
    evaluator: Callable,
    decay: str,
    tol: float = 1e-8,
    lo: float = 0.0,
    two_sided: bool = False,
    block: float = 8.0,
    max_blocks: int = 400,
):
    """Integral over an infinite range.

    "Exponential": integrate [lo, lo+block], extend block by block until three
    consecutive blocks contribute below tol * |estimate| (mirrored when
    two_sided). "RationalOrder2": substitute x = s/(1-s^2) and integrate the
    smooth image over (-1, 1) in one adaptive pass.
    """
    tol = max(tol, 1e-14)
    if decay == "Exponential":
        def one_side(sign):
            total = 0.0
            quiet = 0
            for k in range(max_blocks):
                a = lo + k * block
                b = a + block
                if sign < 0:
                    a, b = -b, -a
                contrib, _ = _adaptive(evaluator, a, b, tol * 0.1)
                total += contrib
                if abs(contrib) < tol * max(1.0, abs(total)) * 0.25:
                    quiet += 1
                    if quiet >= 3:
                        return total
                else:
                    quiet = 0
            raise NoConvergence("exponential-tail truncation not reached", best=total)

        total = one_side(+1)
        if two_sided:
            total += one_side(-1)
        return total
    if decay == "RationalOrder2":
        def g(s):
            x = s / (1.0 - s * s)
            jac = (1.0 + s * s) / (1.0 - s * s) ** 2
            vals = np.asarray(evaluator(x))
            if vals.ndim == 2:
                return vals * jac[:, None]
            return vals * jac

        value, _ = _adaptive(g, -1.0, 1.0, tol)
        return value
    raise ValueError(f"unknown decay class {decay!r}")
