"""The Frechet family Fr(gamma, x) = gamma x^{-(1+gamma)} exp(-x^{-gamma}) and
the one-sided Levy stable facts used alongside it (alpha = 1/2 elementary
form, small-argument asymptotics, power moments)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergentMoment, DomainError

__all__ = [
    "Shape",
    "RationalShape",
    "LevyIndex",
    "frechet_pdf",
    "frechet_cdf",
    "frechet_quantile",
    "frechet_moment",
    "levy_pdf_half",
    "levy_moment",
    "levy_asymptotic",
    "levy_asymptotic_rescaled",
    "find_maximum",
]

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class Shape:
    """Positive real shape parameter gamma."""

    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise DomainError(f"shape parameter must be finite and > 0, got {self.gamma}")


@dataclass(frozen=True)
class RationalShape:
    """Shape gamma = l/k stored as a reduced fraction of positive integers."""

    l: int
    k: int

    def __post_init__(self):
        if self.l < 1 or self.k < 1:
            raise DomainError("numerator and denominator must be >= 1")
        g = math.gcd(self.l, self.k)
        object.__setattr__(self, "l", self.l // g)
        object.__setattr__(self, "k", self.k // g)

    @property
    def gamma(self) -> float:
        return self.l / self.k

    def as_shape(self) -> Shape:
        return Shape(self.gamma)

    def swapped(self) -> "RationalShape":
        return RationalShape(self.k, self.l)


@dataclass(frozen=True)
class LevyIndex:
    """Stability index alpha of a one-sided Levy law, 0 < alpha < 1."""

    alpha: float

    def __post_init__(self):
        if not (0.0 < self.alpha < 1.0):
            raise DomainError(f"Levy index must lie in (0, 1), got {self.alpha}")


def _exp_or_zero(log_value: float) -> float:
    return math.exp(log_value) if log_value > -745.0 else 0.0


def frechet_pdf(shape: Shape, x: float) -> float:
    """Density gamma x^{-(1+gamma)} exp(-x^{-gamma}); 0 at x = 0 by the limit."""
    if x < 0:
        raise DomainError("frechet_pdf requires x >= 0")
    if x == 0.0:
        return 0.0
    g = shape.gamma
    lx = math.log(x)
    neg_power = -g * lx  # log of x^{-gamma}
    if neg_power > 709.0:
        return 0.0
    return _exp_or_zero(math.log(g) - (1.0 + g) * lx - math.exp(neg_power))


def frechet_cdf(shape: Shape, x: float) -> float:
    """Distribution function exp(-x^{-gamma}) for x > 0."""
    if not x > 0:
        raise DomainError("frechet_cdf requires x > 0")
    neg_power = -shape.gamma * math.log(x)
    if neg_power > 709.0:
        return 0.0
    return math.exp(-math.exp(neg_power))


def frechet_quantile(shape: Shape, q: float) -> float:
    """Inverse of frechet_cdf: (-ln q)^{-1/gamma} on 0 < q < 1."""
    if not (0.0 < q < 1.0):
        raise DomainError("frechet_quantile requires 0 < q < 1")
    return (-math.log(q)) ** (-1.0 / shape.gamma)


def frechet_moment(shape: Shape, mu: float) -> float:
    """Power moment E[X^mu] = Gamma(1 - mu/gamma), finite only for mu < gamma."""
    g = shape.gamma
    if not mu < g:
        raise DivergentMoment(f"Frechet moment diverges for mu >= gamma ({mu} >= {g})")
    return math.gamma(1.0 - mu / g)


def levy_pdf_half(x: float) -> float:
    """One-sided Levy density at alpha = 1/2:
    g(x) = x^{-3/2} exp(-1/(4x)) / (2 sqrt(pi)).

    Its defining property, L[g](p) = exp(-sqrt(p)), is what the test suite
    pins it against.
    """
    if not x > 0:
        raise DomainError("levy_pdf_half requires x > 0")
    log_val = -1.5 * math.log(x) - 0.25 / x - math.log(2.0 * math.sqrt(math.pi))
    return _exp_or_zero(log_val)


def levy_moment(idx: LevyIndex, mu: float) -> float:
    """Power moment of the one-sided Levy law:
    Gamma(1 - mu/alpha) / Gamma(1 - mu), finite only for mu < alpha."""
    a = idx.alpha
    if not mu < a:
        raise DivergentMoment(f"Levy moment diverges for mu >= alpha ({mu} >= {a})")
    return math.gamma(1.0 - mu / a) / math.gamma(1.0 - mu)


def levy_asymptotic(idx: LevyIndex, t: float) -> float:
    """Saddle-point form of the one-sided Levy density for t -> 0:

        g_a(t) = alpha^{1/(2-2 alpha)} / sqrt(2 pi (1-alpha))
                 * t^{-(2-alpha)/(2-2 alpha)}
                 * exp(-(1-alpha) alpha^{alpha/(1-alpha)} t^{-alpha/(1-alpha)})

    At alpha = 1/2 this reproduces the exact elementary density, and the
    sqrt(1-alpha) factor is what makes the gamma/(1+gamma) rescaling onto the
    Frechet density an identity rather than merely an approximation.
    """
    if not t > 0:
        raise DomainError("levy_asymptotic requires t > 0")
    a = idx.alpha
    lt = math.log(t)
    tail = (1.0 - a) * a ** (a / (1.0 - a)) * math.exp(-a / (1.0 - a) * lt)
    log_val = (math.log(a) / (2.0 - 2.0 * a)
               - 0.5 * math.log(2.0 * math.pi * (1.0 - a))
               - (2.0 - a) / (2.0 - 2.0 * a) * lt
               - tail)
    return _exp_or_zero(log_val)


def levy_asymptotic_rescaled(shape: Shape, x: float) -> float:
    """levy_asymptotic evaluated at alpha = gamma/(1+gamma) and
    t = gamma x / (1+gamma)^{1+1/gamma}.

    Equals (1+gamma)^{1/gamma} ((1+gamma)/gamma)^{3/2} x^{gamma/2}
    Fr(gamma, x) / sqrt(2 pi); the test suite evaluates that right-hand side
    independently.
    """
    if not x > 0:
        raise DomainError("levy_asymptotic_rescaled requires x > 0")
    g = shape.gamma
    alpha = g / (1.0 + g)
    t = g * x / (1.0 + g) ** (1.0 + 1.0 / g)
    return levy_asymptotic(LevyIndex(alpha), t)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def find_maximum(f, x_init: float = 1.0, arg_tol: float = 1e-10) -> tuple[float, float]:
    """Locate the maximum of a unimodal positive function on (0, inf).

    Brackets the mode by geometric expansion from x_init, then runs a
    golden-section search down to arg_tol in the argument. Used to build the
    reduced (peak-normalized) curves.
    """
    a, b, c = x_init / 2.0, x_init, x_init * 2.0
    fa, fb, fc = f(a), f(b), f(c)
    for _ in range(600):
        if fb >= fa and fb >= fc:
            break
        if fa > fb:
            a, b, c = a / 2.0, a, b
            fa, fb, fc = f(a), fa, fb
        else:
            a, b, c = b, c, c * 2.0
            fa, fb, fc = fb, fc, f(c)
    else:
        raise DomainError("could not bracket a maximum; function may not be unimodal")

    lo, hi = a, c
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > arg_tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
    x_star = 0.5 * (lo + hi)
    return x_star, f(x_star)
