"""Polar classes, dual degrees, and the binomial identities behind the
stabilization of dual degrees of products with quadrics.

For a projective variety Y of dimension m, the polar classes are

    delta_i(Y) = sum_{j=0}^{m-i} (-1)^j C(m+1-j, i+1) deg(c_j(Y)) ,

with c_j the Chern classes of the tangent bundle (Chern-Mather classes when Y
is singular; they coincide on smooth varieties).  codim(Y^dual) - 1 is the
least i with delta_i != 0, and delta_0 is deg(Y^dual) whenever the dual is a
hypersurface.

``ChernData`` records the degrees deg(c_0),...,deg(c_m).  Degrees alone do
not determine the Chern data of a Segre product, so the type optionally
carries the full multigraded Chern polynomial together with the degree of its
top monomial class; ``chern_data_product`` requires that polynomial and
raises without it.  The shortcut that needs only degrees is the product with
a smooth hypersurface Y_n in P^{n+1} of degree d:

    delta_0(X x Y_n) = sum_i alpha_i(n, m, d) * deg(c_i(X)) ,

where alpha_i is an explicit alternating binomial sum (see
``alpha_coefficient``) satisfying alpha_i(n+1, m, d) = (d-1) alpha_i(n, m, d)
for n >= m.  That ratio, and the binomial identities proving it, are checked
exhaustively by the ``*_identity_holds`` functions and
``stabilization_ratio_check``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple

from .combinat import binomial, multinomial
from .truncpoly import TruncatedPoly

__all__ = [
    "ChernData",
    "PolarProfile",
    "alpha_coefficient",
    "alpha_coefficients",
    "alternating_binomial_identity_holds",
    "chern_data_product",
    "chern_data_projective_space_product",
    "chern_data_smooth_hypersurface",
    "delta0_product_with_hypersurface",
    "dual_profile",
    "f_identity_holds",
    "f_sum",
    "g_identity_holds",
    "g_sum",
    "polar_class",
    "stabilization_ratio_check",
]


@dataclass(frozen=True)
class ChernData:
    """Degrees of the (Chern-Mather) classes of an embedded variety.

    ``class_degrees[j]`` is deg(c_j . h^(m-j)) for the hyperplane class h;
    in particular class_degrees[0] is the degree of the variety.  When the
    data came from an explicit multigraded Chern polynomial, ``chern_poly``
    holds it and ``point_degree`` is the degree of the top monomial class
    x1^c1...xk^ck as a zero-cycle (1 for products of projective spaces, d for
    a degree-d hypersurface); products need both.
    """

    dim: int
    class_degrees: Tuple[int, ...]
    chern_poly: TruncatedPoly | None = None
    point_degree: int = 1

    def __post_init__(self) -> None:
        degrees = tuple(int(v) for v in self.class_degrees)
        if self.dim < 0:
            raise ValueError(f"dimension must be non-negative, got {self.dim}")
        if len(degrees) != self.dim + 1:
            raise ValueError(
                f"need {self.dim + 1} class degrees for dimension {self.dim}, got {len(degrees)}")
        if degrees[0] < 1:
            raise ValueError(f"the variety degree must be positive, got {degrees[0]}")
        if self.point_degree < 1:
            raise ValueError(f"point degree must be positive, got {self.point_degree}")
        object.__setattr__(self, "class_degrees", degrees)


@dataclass(frozen=True)
class PolarProfile:
    """All polar classes delta_0..delta_m of a variety plus the codimension
    of its dual that they imply."""

    deltas: Tuple[int, ...]
    dual_codim: int

    @property
    def is_dual_hypersurface(self) -> bool:
        return self.dual_codim == 1

    @property
    def dual_degree(self) -> int | None:
        """deg(Y^dual) when the dual is a hypersurface, else None."""
        return self.deltas[0] if self.deltas[0] else None


def _degrees_from_poly(poly: TruncatedPoly, point_degree: int) -> Tuple[int, ...]:
    """Degrees deg(c_j . h^(m-j)) read off a multigraded total Chern class.

    h is the sum of all ring variables; pairing x^e against h^(m-j) leaves
    the multinomial count of the complementary exponent caps - e.
    """
    caps = poly.caps
    m = sum(caps)
    degrees = [0] * (m + 1)
    for exp, coeff in poly.terms.items():
        j = sum(exp)
        degrees[j] += coeff * multinomial(tuple(c - e for c, e in zip(caps, exp)))
    return tuple(point_degree * v for v in degrees)


def chern_data_projective_space_product(dims: Sequence[int]) -> ChernData:
    """Chern data of P^{n1} x ... x P^{nd}: total Chern class
    prod_i (1 + x_i)^(n_i + 1) in the ring with caps (n1,...,nd)."""
    dims_t = tuple(int(n) for n in dims)
    if not dims_t or any(n < 0 for n in dims_t):
        raise ValueError(f"invalid dimensions {dims_t}")
    caps = dims_t
    poly = TruncatedPoly.constant(caps, 1)
    for i, n in enumerate(dims_t):
        factor = TruncatedPoly(caps, {
            tuple(k if j == i else 0 for j in range(len(caps))): binomial(n + 1, k)
            for k in range(n + 1)
        })
        poly = poly * factor
    return ChernData(
        dim=sum(dims_t),
        class_degrees=_degrees_from_poly(poly, 1),
        chern_poly=poly,
        point_degree=1,
    )


def _hypersurface_chern_coeffs(n: int, deg_d: int, top: int) -> List[int]:
    """Coefficients of (1+y)^(n+2) / (1 + deg_d * y) up to y^top."""
    out = []
    s = 0
    for j in range(top + 1):
        s = binomial(n + 2, j) - deg_d * s
        out.append(s)
    return out


def chern_data_smooth_hypersurface(n: int, deg_d: int) -> ChernData:
    """Chern data of a smooth degree-d hypersurface Y_n in P^{n+1}.

    The tangent sequence 0 -> T_Y -> T_P|_Y -> O_Y(d) -> 0 gives
    c(Y_n) = (1+y)^(n+2) / (1 + d y) with y the restricted hyperplane class,
    and deg(y^n . [Y_n]) = d.
    """
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    if deg_d < 1:
        raise ValueError(f"hypersurface degree must be positive, got {deg_d}")
    coeffs = _hypersurface_chern_coeffs(n, deg_d, n)
    poly = TruncatedPoly((n,), {(j,): c for j, c in enumerate(coeffs)})
    return ChernData(
        dim=n,
        class_degrees=_degrees_from_poly(poly, deg_d),
        chern_poly=poly,
        point_degree=deg_d,
    )


def chern_data_product(a: ChernData, b: ChernData) -> ChernData:
    """Chern data of the Segre product of two varieties, by the Whitney
    formula in the combined multigraded ring.

    Both inputs must carry their multigraded Chern polynomial; degrees alone
    lose the split of the hyperplane class across the factors.
    """
    if a.chern_poly is None or b.chern_poly is None:
        raise ValueError("chern_data_product needs the full Chern polynomial of both factors")
    caps = a.chern_poly.caps + b.chern_poly.caps
    ka = len(a.chern_poly.caps)
    terms = {}
    for ea, ca in a.chern_poly.terms.items():
        for eb, cb in b.chern_poly.terms.items():
            terms[ea + eb] = ca * cb
    poly = TruncatedPoly(caps, terms)
    point_degree = a.point_degree * b.point_degree
    assert ka + len(b.chern_poly.caps) == len(caps)
    return ChernData(
        dim=a.dim + b.dim,
        class_degrees=_degrees_from_poly(poly, point_degree),
        chern_poly=poly,
        point_degree=point_degree,
    )


def polar_class(cd: ChernData, i: int) -> int:
    """delta_i = sum_{j=0}^{m-i} (-1)^j C(m+1-j, i+1) deg(c_j)."""
    m = cd.dim
    if not 0 <= i <= m:
        raise ValueError(f"polar class index {i} out of range 0..{m}")
    total = 0
    for j in range(m - i + 1):
        term = binomial(m + 1 - j, i + 1) * cd.class_degrees[j]
        total += -term if j & 1 else term
    return total


def dual_profile(cd: ChernData) -> PolarProfile:
    """All polar classes and the dual codimension they encode.

    delta_m = deg(c_0) >= 1, so some delta is always non-zero; for the
    tautological P^n this yields dual_codim = n + 1, the convention for an
    empty dual variety.
    """
    deltas = tuple(polar_class(cd, i) for i in range(cd.dim + 1))
    first = next(i for i, v in enumerate(deltas) if v)
    return PolarProfile(deltas=deltas, dual_codim=first + 1)


def alpha_coefficients(n: int, m: int, deg_d: int) -> List[int]:
    """The coefficients alpha_0..alpha_m expressing delta_0(X x Y_n) in the
    Chern class degrees of an m-dimensional X, for Y_n a smooth degree-d
    hypersurface in P^{n+1}:

        alpha_i = d * sum_{s=i}^{n+m} (-1)^s (m+n+1-s) g_{s-i} C(m+n-s, n-s+i) ,

    with g_j the y^j coefficient of (1+y)^(n+2)/(1+dy).  The leading factor
    d is deg(y^n . [Y_n]); dropping it fails the known dual degrees (conic 2,
    plane cubic 6, quadric-product examples 4/12/24).
    """
    if n < 0 or m < 0:
        raise ValueError(f"dimensions must be non-negative, got n={n}, m={m}")
    if deg_d < 1:
        raise ValueError(f"hypersurface degree must be positive, got {deg_d}")
    coeffs = _hypersurface_chern_coeffs(n, deg_d, n + m)
    alphas = []
    for i in range(m + 1):
        total = 0
        for s in range(i, n + m + 1):
            b = binomial(m + n - s, n - s + i)
            if b:
                term = (m + n + 1 - s) * coeffs[s - i] * b
                total += -term if s & 1 else term
        alphas.append(deg_d * total)
    return alphas


def alpha_coefficient(n: int, m: int, deg_d: int, i: int) -> int:
    if not 0 <= i <= m:
        raise ValueError(f"index {i} out of range 0..{m}")
    return alpha_coefficients(n, m, deg_d)[i]


def delta0_product_with_hypersurface(cd: ChernData, n: int, deg_d: int) -> int:
    """delta_0(X x Y_n) from the Chern class degrees of X alone."""
    alphas = alpha_coefficients(n, cd.dim, deg_d)
    return sum(a * v for a, v in zip(alphas, cd.class_degrees))


@dataclass(frozen=True)
class RatioCheckReport:
    """Outcome of an exhaustive alpha-ratio sweep; failures carry the
    witness tuple (n, m, d, i, alpha(n+1), alpha(n))."""

    checked: int
    failures: Tuple[Tuple[int, int, int, int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def stabilization_ratio_check(m_max: int, n_max: int, d_max: int) -> RatioCheckReport:
    """Verify alpha_i(n+1, m, d) = (d-1) alpha_i(n, m, d) for every
    0 <= i <= m <= m_max, m <= n < n_max, 2 <= d <= d_max."""
    if m_max < 0 or n_max < 0 or d_max < 2:
        raise ValueError("ranges must cover at least m=0, d=2")
    checked = 0
    failures = []
    for m in range(m_max + 1):
        for d in range(2, d_max + 1):
            prev = alpha_coefficients(m, m, d)
            for n in range(m, n_max):
                cur = alpha_coefficients(n + 1, m, d)
                for i in range(m + 1):
                    checked += 1
                    if cur[i] != (d - 1) * prev[i]:
                        failures.append((n, m, d, i, cur[i], prev[i]))
                prev = cur
    return RatioCheckReport(checked=checked, failures=tuple(failures))


# -- binomial identities behind the ratio ------------------------------------


def alternating_binomial_identity_holds(n: int, m: int, i: int) -> bool:
    """Check, by exact summation,

    sum_{r=i}^{n+m} (-1)^r (m+n+1-r) C(n+2, r+1-i) C(m+n-r, n-r+i)
        = (-1)^i (n+m+2-i) C(m+n+1-i, n+1)    for n >= m >= i >= 0.
    """
    if not (n >= m >= i >= 0):
        raise ValueError(f"need n >= m >= i >= 0, got n={n}, m={m}, i={i}")
    lhs = 0
    for r in range(i, n + m + 1):
        term = (m + n + 1 - r) * binomial(n + 2, r + 1 - i) * binomial(m + n - r, n - r + i)
        lhs += -term if r & 1 else term
    rhs = (n + m + 2 - i) * binomial(m + n + 1 - i, n + 1)
    if i & 1:
        rhs = -rhs
    return lhs == rhs


def f_sum(n: int, m: int) -> int:
    """f(n) = sum_{r=0}^{n} (-1)^r C(n+1, r+1) C(m+n+1-r, m)."""
    total = 0
    for r in range(n + 1):
        term = binomial(n + 1, r + 1) * binomial(m + n + 1 - r, m)
        total += -term if r & 1 else term
    return total


def f_identity_holds(n: int, m: int) -> bool:
    """f(n) = C(m+n+2, m), plus its two-term recurrence

        (1+n-m) f(n) + (n+3) f(n+1) = 2 (m+n+2)! / ((n+1)! m!) ,

    both checked exactly (the gamma values are factorials of positive
    integers here)."""
    if not (n >= m >= 0):
        raise ValueError(f"need n >= m >= 0, got n={n}, m={m}")
    if f_sum(n, m) != binomial(m + n + 2, m):
        return False
    lhs = (1 + n - m) * f_sum(n, m) + (n + 3) * f_sum(n + 1, m)
    rhs = 2 * factorial(n + 2 + m) // (factorial(n + 1) * factorial(m))
    return lhs == rhs


def g_sum(n: int, j: int) -> Fraction:
    """g(n,j) = sum_{s=0}^{n} (-1)^s (n+1-s+j)! / ((n+1-s)! (s+1)! (n-s)!)."""
    total = Fraction(0)
    for s in range(n + 1):
        term = Fraction(factorial(n + 1 - s + j),
                        factorial(n + 1 - s) * factorial(s + 1) * factorial(n - s))
        total += -term if s & 1 else term
    return total


def g_identity_holds(n: int, j: int) -> bool:
    """g(n,j) = (n+2+j)! / ((n+1)! (n+2)!), plus the recurrence

        (n+1-j) g(n,j) + (n^2+5n+6) g(n+1,j) = 2 (n+2+j)! / ((n+1)!)^2 ,

    both as exact rationals."""
    if not (n >= j >= 1):
        raise ValueError(f"need n >= j >= 1, got n={n}, j={j}")
    if g_sum(n, j) != Fraction(factorial(n + 2 + j), factorial(n + 1) * factorial(n + 2)):
        return False
    lhs = (n + 1 - j) * g_sum(n, j) + (n * n + 5 * n + 6) * g_sum(n + 1, j)
    rhs = Fraction(2 * factorial(n + 2 + j), factorial(n + 1) ** 2)
    return lhs == rhs
