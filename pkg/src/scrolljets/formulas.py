"""Closed-form results: inflectional locus class and degree of a scroll,
the curve and double-point identities, and the classification of
uninflected scrolls.

Every formula runs in two modes: with d and g left formal it returns exact
polynomials (CoeffPoly / ChowClass with polynomial coefficients); with
rational values supplied it returns numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .chern import segre_closed_form
from .chow import ChowClass, CoeffPoly, D, G

Numeric = Union[int, Fraction]
Value = Union[Fraction, CoeffPoly]


def _as_value(poly: CoeffPoly) -> Value:
    """Constant polynomials collapse to plain Fractions."""
    if poly.is_constant():
        return Fraction(poly.constant_value())
    return poly


@dataclass(frozen=True)
class ScrollParams:
    """Numeric/formal parameters of an embedded scroll.

    n is the dimension, ambient the dimension of the surrounding projective
    space, d the degree and g the genus of the base curve (either may be
    None to stay formal).  The jet order k is always derived as the largest
    integer with k*n <= ambient, and ell = ambient + 1 - k*n is the expected
    codimension of the inflectional locus, which automatically satisfies
    1 <= ell <= n.
    """

    n: int
    ambient: int
    d: Optional[Fraction] = None
    g: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("dimension n must be a positive integer")
        if not isinstance(self.ambient, int) or self.ambient <= self.n:
            raise ValueError(
                "ambient dimension must exceed the scroll dimension "
                f"(got ambient={self.ambient}, n={self.n})"
            )
        for name in ("d", "g"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Fraction(value))

    @property
    def k(self) -> int:
        return self.ambient // self.n

    @property
    def ell(self) -> int:
        return self.ambient + 1 - self.k * self.n

    @property
    def is_formal(self) -> bool:
        return self.d is None or self.g is None


def inflectional_class(params: ScrollParams) -> ChowClass:
    """Class of the inflectional locus: the codimension-ell Segre term.

    Formal when d, g are formal; numeric coefficients otherwise.
    """
    cls = segre_closed_form(params.n, params.k, params.ell)
    if params.d is None and params.g is None:
        return cls
    return cls.evaluate(d=params.d, g=params.g)


def inflectional_degree(params: ScrollParams) -> Value:
    """Degree of the inflectional locus:

    (k+1)d + k(2(N+1) - (k+1)n)(g-1),  N the ambient dimension.

    Agrees with the degree of :func:`inflectional_class` and specializes to
    (k+1)(d + nk(g-1)) when N = (k+1)n - 1 and to (k+1)(d + k(g-1)) when
    n = 1.
    """
    n, k, ambient = params.n, params.k, params.ambient
    poly = (k + 1) * D + (k * (2 * (ambient + 1) - (k + 1) * n)) * (G - 1)
    return _as_value(poly.substitute(d=params.d, g=params.g))


def curve_inflection_degree(
    d: Optional[Numeric],
    g: Optional[Numeric],
    k: int,
) -> Value:
    """Weighted number of inflection points of a degree-d genus-g curve
    spanning projective k-space: (k+1)(d + k(g-1))."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("jet order k must be a positive integer")
    poly = (k + 1) * (D + k * (G - 1))
    return _as_value(poly.substitute(d=d, g=g))


def double_point_check(n: int, d: Numeric, g: Numeric) -> bool:
    """Self-intersection identity for a smooth n-dimensional scroll living
    in projective 2n-space: (d-n)(d-n-1) = n(n+1)g."""
    d = Fraction(d)
    g = Fraction(g)
    return (d - n) * (d - n - 1) == n * (n + 1) * g


@dataclass(frozen=True)
class UninflectedDescriptor:
    """The balanced rational normal scroll singled out by the classification."""

    genus: int
    degree: int
    splitting_degrees: Tuple[int, ...]
    ambient_dim: int

    def __post_init__(self) -> None:
        if self.degree != sum(self.splitting_degrees):
            raise ValueError("degree must equal the sum of the splitting degrees")
        if self.ambient_dim != self.degree + len(self.splitting_degrees) - 1:
            raise ValueError("ambient dimension must equal degree + n - 1")


def classify_uninflected(n: int, k: int, ell: int) -> Optional[UninflectedDescriptor]:
    """Which scrolls of dimension n in projective (kn+ell-1)-space are
    uninflected?

    For ell < n none are (intersecting the vanishing locus class with
    L^(n-ell-1)F would force L^(n-1)F = 0, but that degree is 1), so None
    is returned, meaning "necessarily inflected".  For ell = n the unique
    answer is the balanced scroll: genus 0, degree kn, splitting degrees
    (k, ..., k), in projective ((k+1)n - 1)-space.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("dimension n must be a positive integer")
    if not isinstance(k, int) or k < 1:
        raise ValueError("jet order k must be a positive integer")
    if not isinstance(ell, int) or ell < 1 or ell > n:
        raise ValueError(f"expected codimension ell must lie in 1..{n}")
    if ell < n:
        return None
    return UninflectedDescriptor(
        genus=0,
        degree=k * n,
        splitting_degrees=(k,) * n,
        ambient_dim=(k + 1) * n - 1,
    )
