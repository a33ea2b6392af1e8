"""Exact intersection algebra of scrolls over a smooth curve.

A class on an n-dimensional scroll X -> C is stored in the basis
{L^j, L^(j-1)*F} per codimension j, where L is the hyperplane class and F
the class of a fiber of the projection to the base curve.  The only
relations needed are F*F = 0 and truncation of everything in codimension
greater than n; intersection numbers are read off from L^n = d and
L^(n-1)*F = 1.

Coefficients are sparse polynomials in the two formal parameters d (the
degree of the scroll) and g (the genus of the base curve), with exact
integer or rational coefficients.  Keeping d and g formal lets identities
between classes be established as polynomial identities instead of by
sampling numeric values.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

Scalar = Union[int, Fraction]
CoeffLike = Union["CoeffPoly", int, Fraction]


def _normalize_scalar(c: Scalar) -> Scalar:
    """Collapse Fractions with denominator 1 to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CoeffPoly:
    """Polynomial in the formal parameters d and g.

    Terms are a map from exponent pairs (e_d, e_g) to nonzero exact
    coefficients.  Instances are immutable; every operator returns a new
    object.  The module constants ``D`` and ``G`` are the two generators,
    so e.g. ``2 * D + 4 * (G - 1)`` builds 2d + 4g - 4.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        clean: dict[Tuple[int, int], Scalar] = {}
        if terms:
            for (ed, eg), c in terms.items():
                if ed < 0 or eg < 0:
                    raise ValueError("monomial exponents must be nonnegative")
                if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                    raise TypeError(f"coefficient {c!r} is not an exact number")
                c = _normalize_scalar(c)
                if c:
                    clean[(int(ed), int(eg))] = c
        self._terms = clean

    @classmethod
    def const(cls, c: Scalar) -> "CoeffPoly":
        return cls({(0, 0): c})

    @staticmethod
    def coerce(value: CoeffLike) -> "CoeffPoly":
        if isinstance(value, CoeffPoly):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not coefficients")
        if isinstance(value, (int, Fraction)):
            return CoeffPoly.const(value)
        raise TypeError(f"cannot interpret {value!r} as a d/g polynomial")

    def terms(self) -> dict[Tuple[int, int], Scalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: CoeffLike) -> "CoeffPoly":
        other = CoeffPoly.coerce(other)
        merged = dict(self._terms)
        for key, c in other._terms.items():
            merged[key] = merged.get(key, 0) + c
        return CoeffPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: CoeffLike) -> "CoeffPoly":
        return self + (-CoeffPoly.coerce(other))

    def __rsub__(self, other: CoeffLike) -> "CoeffPoly":
        return CoeffPoly.coerce(other) + (-self)

    def __mul__(self, other: CoeffLike) -> "CoeffPoly":
        other = CoeffPoly.coerce(other)
        prod: dict[Tuple[int, int], Scalar] = {}
        for (ed1, eg1), c1 in self._terms.items():
            for (ed2, eg2), c2 in other._terms.items():
                key = (ed1 + ed2, eg1 + eg2)
                prod[key] = prod.get(key, 0) + c1 * c2
        return CoeffPoly(prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CoeffPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = CoeffPoly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = CoeffPoly.const(other)
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset((key, Fraction(c)) for key, c in self._terms.items()))

    def substitute(
        self,
        d: Optional[Scalar] = None,
        g: Optional[Scalar] = None,
    ) -> "CoeffPoly":
        """Plug exact values into d and/or g; omitted parameters stay formal."""
        out: dict[Tuple[int, int], Scalar] = {}
        for (ed, eg), c in self._terms.items():
            value: Scalar = c
            key_d, key_g = ed, eg
            if d is not None:
                value = value * Fraction(d) ** ed
                key_d = 0
            if g is not None:
                value = value * Fraction(g) ** eg
                key_g = 0
            key = (key_d, key_g)
            out[key] = out.get(key, 0) + value
        return CoeffPoly(out)

    def evaluate(self, d: Scalar, g: Scalar) -> Fraction:
        """Evaluate at exact rational values; this is a ring homomorphism."""
        total = Fraction(0)
        d = Fraction(d)
        g = Fraction(g)
        for (ed, eg), c in self._terms.items():
            total += Fraction(c) * d**ed * g**eg
        return total

    def _sorted_terms(self) -> list[Tuple[Tuple[int, int], Scalar]]:
        # canonical printing order: degree-lexicographic, d before g
        return sorted(
            self._terms.items(),
            key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (ed, eg), c in self._sorted_terms():
            factors = []
            if ed == 1:
                factors.append("d")
            elif ed > 1:
                factors.append(f"d^{ed}")
            if eg == 1:
                factors.append("g")
            elif eg > 1:
                factors.append(f"g^{eg}")
            mono = "*".join(factors)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"CoeffPoly({self})"


#: The formal degree and genus parameters.
D = CoeffPoly({(1, 0): 1})
G = CoeffPoly({(0, 1): 1})


_PIECE_NAMES = {0: "1", 1: "L"}
_FIBER_NAMES = {1: "F", 2: "L*F"}


def _piece_name(j: int) -> str:
    return _PIECE_NAMES.get(j, f"L^{j}")


def _fiber_name(j: int) -> str:
    return _FIBER_NAMES.get(j, f"L^{j - 1}*F")


class ChowClass:
    """Graded class on an n-dimensional scroll, in the {L^j, L^(j-1)F} basis.

    The data is, for each codimension j in 0..n, the pair of coefficients
    (alpha_j, beta_j) of L^j and L^(j-1)*F.  There is no fiber part in
    codimension 0, products involving F*F vanish, and anything of
    codimension beyond n is dropped eagerly.
    """

    __slots__ = ("_n", "_alpha", "_beta")

    def __init__(self, n: int, terms: Iterable[Tuple[int, CoeffLike, CoeffLike]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError("scroll dimension must be a positive integer")
        alpha = [CoeffPoly() for _ in range(n + 1)]
        beta = [CoeffPoly() for _ in range(n + 1)]
        for j, a, b in terms:
            if not isinstance(j, int) or j < 0 or j > n:
                raise ValueError(f"codimension {j} outside 0..{n}")
            a = CoeffPoly.coerce(a)
            b = CoeffPoly.coerce(b)
            if j == 0 and not b.is_zero():
                raise ValueError("codimension 0 admits no fiber term")
            alpha[j] = alpha[j] + a
            beta[j] = beta[j] + b
        self._n = n
        self._alpha = tuple(alpha)
        self._beta = tuple(beta)

    @property
    def n(self) -> int:
        return self._n

    @classmethod
    def unit(cls, n: int) -> "ChowClass":
        return cls(n, [(0, 1, 0)])

    @classmethod
    def hyperplane(cls, n: int) -> "ChowClass":
        """The hyperplane class L."""
        return cls(n, [(1, 1, 0)])

    @classmethod
    def fiber(cls, n: int) -> "ChowClass":
        """The fiber class F."""
        return cls(n, [(1, 0, 1)])

    def term(self, j: int) -> Tuple[CoeffPoly, CoeffPoly]:
        """The coefficient pair (alpha_j, beta_j) in codimension j."""
        if not isinstance(j, int) or j < 0 or j > self._n:
            raise ValueError(f"codimension {j} outside 0..{self._n}")
        return self._alpha[j], self._beta[j]

    def pieces(self) -> list[Tuple[int, CoeffPoly, CoeffPoly]]:
        """Nonzero graded pieces as (codim, alpha, beta), ascending codim."""
        out = []
        for j in range(self._n + 1):
            a, b = self._alpha[j], self._beta[j]
            if not a.is_zero() or not b.is_zero():
                out.append((j, a, b))
        return out

    def is_zero(self) -> bool:
        return not self.pieces()

    def homogeneous_codim(self) -> Optional[int]:
        """Codimension of the single nonzero piece; None for the zero class.

        Raises ValueError when several graded pieces are nonzero.
        """
        pieces = self.pieces()
        if not pieces:
            return None
        if len(pieces) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return pieces[0][0]

    def _require_same_ring(self, other: "ChowClass") -> None:
        if self._n != other._n:
            raise ValueError(
                f"classes live on scrolls of different dimension ({self._n} vs {other._n})"
            )

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._require_same_ring(other)
        return ChowClass(
            self._n,
            [
                (j, self._alpha[j] + other._alpha[j], self._beta[j] + other._beta[j])
                for j in range(self._n + 1)
            ],
        )

    def __neg__(self) -> "ChowClass":
        return ChowClass(
            self._n,
            [(j, -self._alpha[j], -self._beta[j]) for j in range(self._n + 1)],
        )

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["ChowClass", CoeffLike]) -> "ChowClass":
        if not isinstance(other, ChowClass):
            scalar = CoeffPoly.coerce(other)
            return ChowClass(
                self._n,
                [
                    (j, self._alpha[j] * scalar, self._beta[j] * scalar)
                    for j in range(self._n + 1)
                ],
            )
        self._require_same_ring(other)
        n = self._n
        alpha = [CoeffPoly() for _ in range(n + 1)]
        beta = [CoeffPoly() for _ in range(n + 1)]
        for p in range(n + 1):
            ap, bp = self._alpha[p], self._beta[p]
            if ap.is_zero() and bp.is_zero():
                continue
            for q in range(n + 1 - p):
                aq, bq = other._alpha[q], other._beta[q]
                if aq.is_zero() and bq.is_zero():
                    continue
                j = p + q
                # L^p * L^q and the two mixed terms; the beta*beta product
                # carries F*F and dies.
                alpha[j] = alpha[j] + ap * aq
                beta[j] = beta[j] + ap * bq + bp * aq
        return ChowClass(n, [(j, alpha[j], beta[j]) for j in range(n + 1)])

    def __rmul__(self, other: CoeffLike) -> "ChowClass":
        return self * other

    def __pow__(self, exponent: int) -> "ChowClass":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ChowClass.unit(self._n)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "ChowClass":
        """Multiplicative inverse, as a power series truncated beyond codim n.

        Requires constant term exactly 1.  The result y satisfies
        self * y == 1 on the nose (truncation included).
        """
        a0, b0 = self.term(0)
        if a0 != 1 or not b0.is_zero():
            raise ValueError("inverse requires constant term 1")
        one = ChowClass.unit(self._n)
        nilpotent = self - one
        result = one
        power = one
        sign = 1
        for _ in range(self._n):
            power = power * nilpotent
            sign = -sign
            result = result + power * sign
        return result

    def evaluate(
        self,
        d: Optional[Scalar] = None,
        g: Optional[Scalar] = None,
    ) -> "ChowClass":
        """Substitute exact values for d and/or g in every coefficient."""
        return ChowClass(
            self._n,
            [
                (j, self._alpha[j].substitute(d, g), self._beta[j].substitute(d, g))
                for j in range(self._n + 1)
            ],
        )

    def degree_poly(self) -> CoeffPoly:
        """Degree of a homogeneous class, as a polynomial in d and g.

        For a class of codimension j this is the intersection number with
        L^(n-j), i.e. alpha_j * d + beta_j.  The zero class has degree 0.
        """
        j = self.homogeneous_codim()
        if j is None:
            return CoeffPoly()
        a, b = self.term(j)
        return a * D + b

    def degree(self, d: Scalar, g: Scalar) -> Fraction:
        """Degree of a homogeneous class at exact numeric (d, g)."""
        return self.degree_poly().evaluate(d, g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return (
            self._n == other._n
            and self._alpha == other._alpha
            and self._beta == other._beta
        )

    def __hash__(self) -> int:
        return hash((self._n, self._alpha, self._beta))

    def __str__(self) -> str:
        chunks: list[Tuple[str, str]] = []  # (sign, body)
        for j, a, b in self.pieces():
            for coeff, name in ((a, _piece_name(j)), (b, _fiber_name(j) if j else "")):
                if coeff.is_zero():
                    continue
                if coeff.is_constant():
                    c = coeff.constant_value()
                    sign = "-" if c < 0 else "+"
                    mag = abs(c)
                    if name == "1":
                        body = str(mag)
                    elif mag == 1:
                        body = name
                    else:
                        body = f"{mag}*{name}"
                else:
                    sign = "+"
                    body = f"({coeff})" if name == "1" else f"({coeff})*{name}"
                chunks.append((sign, body))
        if not chunks:
            return "0"
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ChowClass(n={self._n}, {self})"
