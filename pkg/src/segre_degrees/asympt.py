"""Floating-point growth estimates for the exact degree sequences, plus the
exact rational verification of the constants they are built from.

Every estimate is evaluated in log space and exponentiated last: the dominant
factor (d-1)^(d*n) leaves double precision near n ~ 250 already for d = 3,
while the logarithms stay small.  Relative errors against exact values are
likewise computed from log differences, so they remain finite even when the
plain estimate would overflow.

The constants feeding the main estimate (the location of the vanishing point
of the series denominator, the Hessian determinant there, and the leading
amplitude) are recomputed from exact mixed partials and compared with their
closed forms; any mismatch raises, since it would invalidate the estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .eddeg import frobenius_ed_degree, veronese_frobenius_ed_degree
from .hyperdet import (
    binary_hyperdet_degree,
    degree_series_denominator,
    hyperdet_degree,
    mixed_partial_at_symmetric_point,
    sv_hyperdet_degree,
    symmetric_point,
)

__all__ = [
    "BinaryAsymptotics",
    "ConvergencePoint",
    "ConvergenceReport",
    "DiscriminantRatios",
    "MinimalPointCheck",
    "VerificationError",
    "binary_asymptotics",
    "convergence_sweep",
    "discriminant_ratios",
    "ed_asymptotic",
    "hyperdet_asymptotic",
    "log_ed_asymptotic",
    "log_hyperdet_asymptotic",
    "log_sv_hyperdet_asymptotic",
    "relative_error",
    "sv_hyperdet_asymptotic",
    "verify_minimal_point_constants",
]

_LOG_2PI = math.log(2.0 * math.pi)


class VerificationError(Exception):
    """An exact identity that the estimates rely on failed to hold."""


def log_hyperdet_asymptotic(d: int, n: int) -> float:
    """log of the large-n estimate of the hyperdeterminant degree of format
    (n+1)^d:

        (d-1)^(2d-2) / ([2 pi (d-2)]^((d-1)/2) d^((3d-6)/2)) * (d-1)^(dn) / n^((d-3)/2)
    """
    if d < 3:
        raise ValueError(f"the estimate requires at least three factors, got d={d}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return ((2 * d - 2) * math.log(d - 1)
            - (d - 1) / 2 * (_LOG_2PI + math.log(d - 2))
            - (3 * d - 6) / 2 * math.log(d)
            + d * n * math.log(d - 1)
            - (d - 3) / 2 * math.log(n))


def hyperdet_asymptotic(d: int, n: int) -> float:
    """Value form of ``log_hyperdet_asymptotic`` (may overflow to inf for
    very large d*n; use the log form for comparisons)."""
    return math.exp(log_hyperdet_asymptotic(d, n))


def log_ed_asymptotic(d: int, n: int) -> float:
    """log of the large-n estimate of the Frobenius ED degree of (P^n)^d:

        (d-1)^(d-1) / ((2 pi)^((d-1)/2) (d-2)^((3d-1)/2) d^((d-2)/2))
            * (d-1)^(d(n+1)) / (n+1)^((d-1)/2)

    The closed form is indexed by the vector space dimension n+1, not the
    projective dimension n: evaluated at n instead, its relative error
    against the exact degrees grows to 1 - (d-1)^(-d) rather than decaying
    like 1/n (checked against exact values up to n=30 for d=3 and n=10 for
    d=4).
    """
    if d < 3:
        raise ValueError(f"the estimate requires at least three factors, got d={d}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    size = n + 1
    return ((d - 1) * math.log(d - 1)
            - (d - 1) / 2 * _LOG_2PI
            - (3 * d - 1) / 2 * math.log(d - 2)
            - (d - 2) / 2 * math.log(d)
            + d * size * math.log(d - 1)
            - (d - 1) / 2 * math.log(size))


def ed_asymptotic(d: int, n: int) -> float:
    return math.exp(log_ed_asymptotic(d, n))


def log_sv_hyperdet_asymptotic(d: int, n: int, omega: int) -> float:
    """log of the large-n estimate for the equal-weight Veronese variant:

        (wd-1)^(2d-2) / ([2 pi (wd-2)]^((d-1)/2) w^((4d-5)/2) d^((3d-6)/2))
            * (wd-1)^(dn) / n^((d-3)/2)

    Reduces to ``log_hyperdet_asymptotic`` at omega = 1.
    """
    if d < 3:
        raise ValueError(f"the estimate requires at least three factors, got d={d}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if omega < 1:
        raise ValueError(f"weight must be positive, got {omega}")
    wd = omega * d
    return ((2 * d - 2) * math.log(wd - 1)
            - (d - 1) / 2 * (_LOG_2PI + math.log(wd - 2))
            - (4 * d - 5) / 2 * math.log(omega)
            - (3 * d - 6) / 2 * math.log(d)
            + d * n * math.log(wd - 1)
            - (d - 3) / 2 * math.log(n))


def sv_hyperdet_asymptotic(d: int, n: int, omega: int) -> float:
    return math.exp(log_sv_hyperdet_asymptotic(d, n, omega))


@dataclass(frozen=True)
class BinaryAsymptotics:
    """Large-d estimates for products of d projective lines."""

    d: int
    log_hyperdet: float
    log_ed_frobenius: float
    log_ed_generic: float

    @property
    def hyperdet(self) -> float:
        return math.exp(self.log_hyperdet)

    @property
    def ed_frobenius(self) -> float:
        return math.exp(self.log_ed_frobenius)

    @property
    def ed_generic(self) -> float:
        return math.exp(self.log_ed_generic)

    @property
    def hyperdet_over_ed_frobenius(self) -> float:
        """Equals (d+3)/e^2 identically."""
        return math.exp(self.log_hyperdet - self.log_ed_frobenius)

    @property
    def hyperdet_over_ed_generic(self) -> float:
        """Equals (d+3)/(2^(d+1) e - 1) identically (the e^(d+2) factors of
        the two estimates cancel)."""
        return math.exp(self.log_hyperdet - self.log_ed_generic)


def binary_asymptotics(d: int) -> BinaryAsymptotics:
    """Large-d estimates for the 2 x ... x 2 degree, the Frobenius ED degree
    d! (via Stirling), and the generic ED degree:

        sqrt(2 pi) d^((2d+1)/2) (d+3) / e^(d+2)
        sqrt(2 pi) d^((2d+1)/2) / e^d
        sqrt(2 pi) d^((2d+1)/2) (2^(d+1) e - 1) / e^(d+2)
    """
    if d < 2:
        raise ValueError(f"need at least two factors, got {d}")
    stirling = 0.5 * _LOG_2PI + (2 * d + 1) / 2 * math.log(d) - d
    # log(2^(d+1) e - 1) without forming the huge power
    x = (d + 1) * math.log(2.0) + 1.0
    log_big = x + math.log1p(-math.exp(-x))
    return BinaryAsymptotics(
        d=d,
        log_hyperdet=stirling + math.log(d + 3) - 2,
        log_ed_frobenius=stirling,
        log_ed_generic=stirling - 2 + log_big,
    )


@dataclass(frozen=True)
class DiscriminantRatios:
    """Exact degree ratios for the degree-omega hypersurface dual of the
    Veronese P^n, each normalized by its limiting form (so every field tends
    to 1 in the corresponding regime)."""

    n: int
    omega: int
    fixed_omega_ratio: float  # [N / ED_F] / [((w-2)/(w-1)) n],   n -> inf
    fixed_n_ratio: float      # [N / ED_F] / (n+1),               w -> inf
    gen_ratio: float          # [N / ED_gen] / [(n+1)/(2^(n+1)-1)], w -> inf


def discriminant_ratios(n: int, omega: int) -> DiscriminantRatios:
    """Compare N(n; w) = (n+1)(w-1)^n against both ED degrees of the
    degree-w Veronese embedding of P^n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if omega < 3:
        raise ValueError(f"need omega >= 3, got {omega}")
    exact = (n + 1) * (omega - 1) ** n
    ed_f = veronese_frobenius_ed_degree(n, omega)
    ed_gen = ((2 * omega - 1) ** (n + 1) - (omega - 1) ** (n + 1)) // omega
    ratio_f = Fraction(exact, ed_f)
    ratio_gen = Fraction(exact, ed_gen)
    return DiscriminantRatios(
        n=n,
        omega=omega,
        fixed_omega_ratio=float(ratio_f / (Fraction(omega - 2, omega - 1) * n)),
        fixed_n_ratio=float(ratio_f / (n + 1)),
        gen_ratio=float(ratio_gen / Fraction(n + 1, 2 ** (n + 1) - 1)),
    )


@dataclass(frozen=True)
class MinimalPointCheck:
    """Exact values of the constants at the symmetric vanishing point
    c = (1/(d-1), ..., 1/(d-1)) of the degree-series denominator."""

    d: int
    denominator_at_point: Fraction   # 0
    last_partial: Fraction           # -(d/(d-1))^(d-2), non-zero (smoothness)
    q: Fraction                      # (d-2)/d
    hessian_det: Fraction            # (d-2)^(d-1) / d^(d-2)
    leading_constant: Fraction       # (d-1)^(2d-2) / d^(2d-4)


def verify_minimal_point_constants(d: int) -> MinimalPointCheck:
    """Recompute, over exact rationals, every constant the degree estimate
    uses, and compare with the closed forms; raise on any mismatch.

    The amplitude is G(c) / (c_d dH(c))^2 with G identically 1 (the series
    is exactly an inverse square, with trivial numerator).
    """
    if d < 3:
        raise ValueError(f"the estimate requires at least three factors, got d={d}")
    point = symmetric_point(d)
    c1 = point[0]
    denom = degree_series_denominator((1,) * d)

    h_at_c = denom.evaluate(point)
    if h_at_c != 0:
        raise VerificationError(f"denominator does not vanish at the symmetric point for d={d}")

    d_last = mixed_partial_at_symmetric_point(d, (d,))
    if d_last != -Fraction(d, d - 1) ** (d - 2):
        raise VerificationError(f"last partial mismatch for d={d}: {d_last}")

    repeated = denom.partial_derivative(d - 1).partial_derivative(d - 1)
    if not repeated.is_zero:
        raise VerificationError(f"repeated partial is not identically zero for d={d}")

    d_mixed = mixed_partial_at_symmetric_point(d, (1, d))
    if d_mixed != -2 * Fraction(d, d - 1) ** (d - 3):
        raise VerificationError(f"mixed partial mismatch for d={d}: {d_mixed}")

    q = 1 + c1 * (Fraction(0) - d_mixed) / d_last
    if q != Fraction(d - 2, d):
        raise VerificationError(f"q mismatch for d={d}: {q}")

    hess = d * q ** (d - 1)
    if hess != Fraction((d - 2) ** (d - 1), d ** (d - 2)):
        raise VerificationError(f"Hessian determinant mismatch for d={d}: {hess}")

    leading = 1 / (-point[-1] * d_last) ** 2
    if leading != Fraction((d - 1) ** (2 * d - 2), d ** (2 * d - 4)):
        raise VerificationError(f"leading constant mismatch for d={d}: {leading}")

    return MinimalPointCheck(
        d=d,
        denominator_at_point=h_at_c,
        last_partial=d_last,
        q=q,
        hessian_det=hess,
        leading_constant=leading,
    )


def relative_error(exact: int, log_estimate: float) -> float:
    """|exact - estimate| / exact computed from the log of the estimate, so
    it stays finite even when the estimate itself overflows a double."""
    if exact <= 0:
        raise ValueError(f"need a positive exact value, got {exact}")
    return abs(1.0 - math.exp(log_estimate - math.log(exact)))


@dataclass(frozen=True)
class ConvergencePoint:
    grid_value: int        # n for the fixed-d sweeps, d for the binary sweep
    exact: int
    log_estimate: float
    rel_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Exact-versus-estimate record over a grid.

    ``strictly_decreasing`` is the trend acceptance check (the error term is
    of order 1/n, so relative errors must fall along an increasing grid);
    ``error_times_grid`` records rel_error * grid for the boundedness of that
    1/n error term.
    """

    formula: str
    d: int
    points: Tuple[ConvergencePoint, ...]

    @property
    def rel_errors(self) -> Tuple[float, ...]:
        return tuple(p.rel_error for p in self.points)

    @property
    def error_times_grid(self) -> Tuple[float, ...]:
        return tuple(p.rel_error * p.grid_value for p in self.points)

    @property
    def strictly_decreasing(self) -> bool:
        errs = self.rel_errors
        return all(b < a for a, b in zip(errs, errs[1:]))


def convergence_sweep(formula: str, d: int, grid: Sequence[int], omega: int = 1) -> ConvergenceReport:
    """Exact values against estimates over a grid.

    formula: "hyperdet" and "ed" sweep n for fixed d >= 3 on the hypercubical
    format (n+1)^d; "sv" does the same with equal Veronese weight omega;
    "binary" sweeps d itself (the d argument is ignored) on 2 x ... x 2.
    """
    points = []
    if formula == "hyperdet":
        for n in grid:
            exact = hyperdet_degree((n,) * d)
            log_est = log_hyperdet_asymptotic(d, n)
            points.append(ConvergencePoint(n, exact, log_est, relative_error(exact, log_est)))
    elif formula == "ed":
        for n in grid:
            exact = frobenius_ed_degree((n,) * d)
            log_est = log_ed_asymptotic(d, n)
            points.append(ConvergencePoint(n, exact, log_est, relative_error(exact, log_est)))
    elif formula == "sv":
        for n in grid:
            exact = sv_hyperdet_degree((n,) * d, omega)
            log_est = log_sv_hyperdet_asymptotic(d, n, omega)
            points.append(ConvergencePoint(n, exact, log_est, relative_error(exact, log_est)))
    elif formula == "binary":
        for dd in grid:
            exact = binary_hyperdet_degree(dd)
            log_est = binary_asymptotics(dd).log_hyperdet
            points.append(ConvergencePoint(dd, exact, log_est, relative_error(exact, log_est)))
    else:
        raise ValueError(f"unknown formula {formula!r}")
    return ConvergenceReport(formula=formula, d=d, points=tuple(points))
