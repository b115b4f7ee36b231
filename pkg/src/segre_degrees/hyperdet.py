"""Exact degrees of dual varieties of products of projective spaces.

When the dual variety of P^{n1} x ... x P^{nd} (Segre embedded) is a
hypersurface, its defining polynomial is the hyperdeterminant of format
(n1+1) x ... x (nd+1), and the degree of that hypersurface is the
coefficient of x1^{n1}...xd^{nd} in the power series expansion of

    [ sum_{i=0}^{d} (1 - i) e_i(x1,...,xd) ]^(-2) ,

with e_i the i-th elementary symmetric polynomial.  When every factor is
re-embedded by the same degree-w Veronese map, the weight enters as
(1 - w*i).  The expansion runs in the truncated ring with caps equal to the
target exponent, so memory scales with prod(n_i + 1) and no global
precomputation is done.

Defective formats (dual not a hypersurface) yield coefficient 0; callers
that need a hypersurface should gate on ``is_dual_nondefective``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence, Tuple

from .combinat import multinomial
from .truncpoly import TruncatedPoly, elementary_symmetric, series_inverse_square

__all__ = [
    "Format",
    "binary_hyperdet_degree",
    "degree_series_denominator",
    "hyperdet_degree",
    "is_dual_nondefective",
    "kernel_component_count",
    "mixed_partial_at_symmetric_point",
    "partition_formats",
    "sv_hyperdet_degree",
    "symmetric_point",
]


@dataclass(frozen=True)
class Format:
    """A product of projective spaces P^{n1} x ... x P^{nd} with optional
    Veronese weights (w1,...,wd); weight 1 on every factor is the plain
    Segre product."""

    dims: Tuple[int, ...]
    weights: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.dims)
        if not dims:
            raise ValueError("a format needs at least one factor")
        if any(n < 0 for n in dims):
            raise ValueError(f"factor dimensions must be non-negative, got {dims}")
        weights = tuple(int(w) for w in self.weights) or (1,) * len(dims)
        if len(weights) != len(dims):
            raise ValueError("weights must match the number of factors")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be positive, got {weights}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "weights", weights)

    @property
    def factor_count(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        """N = n1 + ... + nd, the dimension of the product."""
        return sum(self.dims)

    @property
    def is_unit_weight(self) -> bool:
        return all(w == 1 for w in self.weights)

    def is_boundary(self) -> bool:
        """True when the largest n_j equals the sum of the others."""
        return max(self.dims) * 2 == self.total_dim


def is_dual_nondefective(dims: Sequence[int]) -> bool:
    """True iff the dual of the Segre product is a hypersurface.

    Criterion: max n_j <= sum of the other n_i.  For a single factor this
    reads n1 <= 0, so only the point P^0 passes.
    """
    dims = tuple(dims)
    if not dims:
        raise ValueError("a format needs at least one factor")
    return max(dims) * 2 <= sum(dims)


def degree_series_denominator(caps: Sequence[int], weight: int = 1) -> TruncatedPoly:
    """sum_{i=0}^{d} (1 - weight*i) e_i(x), truncated to the given caps."""
    caps_t = tuple(caps)
    if weight < 1:
        raise ValueError(f"weight must be positive, got {weight}")
    total = TruncatedPoly.zero(caps_t)
    for i in range(len(caps_t) + 1):
        coeff = 1 - weight * i
        if coeff:
            total = total + elementary_symmetric(caps_t, i) * coeff
    return total


def sv_hyperdet_degree(dims: Sequence[int], weight: int = 1) -> int:
    """Degree of the dual hypersurface of a product of degree-``weight``
    Veronese re-embeddings of projective spaces (equal weight on every
    factor); 0 when the dual has higher codimension."""
    dims_t = tuple(int(n) for n in dims)
    if not dims_t or any(n < 0 for n in dims_t):
        raise ValueError(f"invalid dimensions {dims_t}")
    if weight < 1:
        raise ValueError(f"weight must be positive, got {weight}")
    h = degree_series_denominator(dims_t, weight)
    return series_inverse_square(h).coefficient(dims_t)


def hyperdet_degree(dims: Sequence[int]) -> int:
    """Degree of the hyperdeterminant of format (n1+1) x ... x (nd+1).

    Returns 0 for dual-defective formats (matrix formats k1 != k2, or one
    factor strictly larger than the rest combined).
    """
    return sv_hyperdet_degree(dims, 1)


def binary_hyperdet_degree(d: int) -> int:
    """Degree of the hyperdeterminant of format 2 x 2 x ... x 2 (d factors)
    via the closed form  d! * sum_{i=0}^{d} (-2)^i / i! * (d - i + 1).

    The partial sums are exact rationals; the total is an integer.
    """
    if d < 1:
        raise ValueError(f"need at least one factor, got {d}")
    total = Fraction(0)
    for i in range(d + 1):
        total += Fraction((-2) ** i, factorial(i)) * (d - i + 1)
    value = total * factorial(d)
    assert value.denominator == 1
    return int(value)


def kernel_component_count(dims: Sequence[int], m: int) -> Tuple[int, int]:
    """Number and projective dimension of the linear components of the
    kernel of a rank-N flattening in format (n1+1) x ... x (nd+1) x (m+1).

    Returns (N!/prod(n_i!), m - N); requires m >= N = sum(n_i).
    """
    dims_t = tuple(int(n) for n in dims)
    n_total = sum(dims_t)
    if m < n_total:
        raise ValueError(f"last factor dimension {m} below the threshold {n_total}")
    return multinomial(dims_t), m - n_total


def symmetric_point(d: int) -> Tuple[Fraction, ...]:
    """The point (1/(d-1), ..., 1/(d-1)) where the degree-series denominator
    vanishes; it drives the coefficient asymptotics."""
    if d < 2:
        raise ValueError(f"need at least two factors, got {d}")
    return (Fraction(1, d - 1),) * d


def mixed_partial_at_symmetric_point(d: int, indices: Sequence[int]) -> Fraction:
    """Mixed partial of H = sum (1-i) e_i at the symmetric vanishing point.

    ``indices`` are distinct variable indices in 1..d; the closed form is
    -k * (d/(d-1))^(d-k-1) for k distinct indices, which callers can check
    against this symbolic-differentiation route.
    """
    if d < 2:
        raise ValueError(f"need at least two factors, got {d}")
    idx = tuple(indices)
    if not idx:
        raise ValueError("need at least one differentiation index")
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated differentiation indices in {idx}")
    if any(not 1 <= i <= d for i in idx):
        raise ValueError(f"indices {idx} out of range 1..{d}")
    p = degree_series_denominator((1,) * d)
    for i in idx:
        p = p.partial_derivative(i - 1)
    return p.evaluate(symmetric_point(d))


def partition_formats(max_total: int, max_factors: int | None = None) -> Iterator[Tuple[int, ...]]:
    """All non-decreasing tuples of positive n_i with sum <= max_total.

    One representative per permutation class; the degree computations here
    are symmetric in the factors, so sweeps over these cover all formats.
    """
    def rec(remaining: int, smallest: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if prefix:
            yield prefix
        if max_factors is not None and len(prefix) == max_factors:
            return
        for n in range(smallest, remaining + 1):
            yield from rec(remaining - n, n, prefix + (n,))

    yield from rec(max_total, 1, ())
