"""Intersection calculus on a symmetric product ``C_n`` of a genus ``g`` curve.

Classes are polynomials in the two divisor classes ``x`` (divisors through a
fixed point) and ``theta`` (pulled back from the Jacobian), truncated above
degree ``n = dim C_n``.  On top of that ring this module builds

* the Chern character of the secant bundle ``F_N`` and its Chern classes,
  both from the closed-form sums and from Newton's identities;
* the top-degree evaluation ``x^(n-m) theta^m = g!/(g-m)!``;
* the arithmetic genus of the curve ``D_{n+1}`` cut out by a map from a
  trivial rank ``n+2`` bundle to ``F_N``;
* the specialization to a smooth (4,4)-curve (``g = 9``, ``n = 2r``,
  ``d = 4r + 4``) and its closed-form quintic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

__all__ = [
    "GradedClass",
    "BundleData",
    "ext_binomial",
    "graded_mul",
    "chern_character_FN",
    "chern_classes_from_character",
    "chern_FN_closed_form",
    "c1_FN_printed",
    "c1_symmetric_product",
    "degeneracy_bracket",
    "printed_bracket",
    "intersection_eval",
    "degeneracy_genus",
    "quintic_44",
    "closed_form_genus_44",
]

Rational = Union[int, Fraction]
Monomial = tuple[int, int]


class GradedClass:
    """Polynomial in ``x`` and ``theta`` with rational coefficients, cut at total degree ``bound``.

    Keys of :attr:`terms` are exponent pairs ``(a, b)`` for ``x**a * theta**b``.
    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_bound", "_terms")

    def __init__(self, bound: int, terms: Mapping[Monomial, Rational] | Iterable = ()):
        if bound < 0:
            raise ValueError(f"bound must be non-negative, got {bound}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial {(a, b)}")
            if a + b > bound:
                continue
            c = Fraction(c)
            if c:
                clean[(a, b)] = clean.get((a, b), 0) + c
                if not clean[(a, b)]:
                    del clean[(a, b)]
        self._bound = bound
        self._terms = clean

    @classmethod
    def constant(cls, c: Rational, bound: int) -> GradedClass:
        return cls(bound, {(0, 0): c})

    @classmethod
    def x(cls, bound: int) -> GradedClass:
        return cls(bound, {(1, 0): 1})

    @classmethod
    def theta(cls, bound: int) -> GradedClass:
        return cls(bound, {(0, 1): 1})

    @property
    def bound(self) -> int:
        return self._bound

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coeff(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def part(self, degree: int) -> GradedClass:
        """Homogeneous component of the given total degree."""
        return GradedClass(self._bound, {m: c for m, c in self._terms.items() if sum(m) == degree})

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> GradedClass:
        if isinstance(other, GradedClass):
            if other._bound != self._bound:
                raise ValueError(f"bound mismatch: {self._bound} vs {other._bound}")
            return other
        if isinstance(other, (int, Fraction)):
            return GradedClass.constant(other, self._bound)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GradedClass(self._bound, out)

    __radd__ = __add__

    def __neg__(self) -> GradedClass:
        return GradedClass(self._bound, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedClass(self._bound, {m: c * other for m, c in self._terms.items()})
        if isinstance(other, GradedClass):
            return graded_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GradedClass:
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = GradedClass.constant(1, self._bound)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedClass.constant(other, self._bound)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self._bound == other._bound and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._bound, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"GradedClass(0, bound={self._bound})"
        pieces = []
        for (a, b), c in sorted(self._terms.items(), key=lambda t: (sum(t[0]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("x" if a == 1 else f"x^{a}"),
                    "" if b == 0 else ("theta" if b == 1 else f"theta^{b}"),
                ) if s
            )
            pieces.append(f"({c})*{mono}" if mono else f"({c})")
        return f"GradedClass({' + '.join(pieces)}, bound={self._bound})"

    def to_json(self) -> list[dict]:
        return [
            {"x": a, "theta": b, "coeff": str(c)}
            for (a, b), c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: list[dict], bound: int) -> GradedClass:
        return cls(bound, {(int(t["x"]), int(t["theta"])): Fraction(t["coeff"]) for t in data})


@dataclass(frozen=True)
class BundleData:
    """Genus ``g`` of the curve, symmetric power ``n`` and degree ``d`` of ``N``."""

    g: int
    n: int
    d: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be non-negative, got {self.g}")
        if self.n < 1:
            raise ValueError(f"symmetric power must be positive, got {self.n}")


def ext_binomial(m: int, i: int) -> Fraction:
    """Binomial coefficient extended to negative ``m`` by the falling factorial."""
    if i < 0:
        raise ValueError(f"lower index must be non-negative, got {i}")
    if i == 0:
        return Fraction(1)
    if 0 <= m < i:
        return Fraction(0)
    num = 1
    for t in range(i):
        num *= m - t
    return Fraction(num, factorial(i))


def graded_mul(a: GradedClass, b: GradedClass) -> GradedClass:
    if a.bound != b.bound:
        raise ValueError(f"bound mismatch: {a.bound} vs {b.bound}")
    n = a.bound
    out: dict[Monomial, Fraction] = {}
    for (a1, b1), c1 in a._terms.items():
        for (a2, b2), c2 in b._terms.items():
            if a1 + b1 + a2 + b2 > n:
                continue
            m = (a1 + a2, b1 + b2)
            out[m] = out.get(m, 0) + c1 * c2
    return GradedClass(n, out)


def chern_character_FN(B: BundleData) -> GradedClass:
    """``ch(F_N) = d + 1 - g + (2n + g - 1 - d + 4 theta) exp(-2x)`` up to degree ``n``."""
    g, n, d = B.g, B.n, B.d
    terms: dict[Monomial, Fraction] = {(0, 0): Fraction(d + 1 - g)}
    lead = 2 * n + g - 1 - d
    for k in range(n + 1):
        e_k = Fraction((-2) ** k, factorial(k))
        terms[(k, 0)] = terms.get((k, 0), 0) + lead * e_k
        if k + 1 <= n:
            terms[(k, 1)] = terms.get((k, 1), 0) + 4 * e_k
    return GradedClass(n, terms)


def chern_classes_from_character(ch: GradedClass) -> list[GradedClass]:
    """Chern classes ``c_0 .. c_bound`` from a Chern character via Newton's identities.

    With power sums ``p_k = k! ch_k``, ``k c_k = sum_{i=1}^{k} (-1)^(i-1) c_{k-i} p_i``.
    """
    rank = ch.coeff(0, 0)
    if rank.denominator != 1 or rank < 0:
        raise ValueError(f"degree-0 part must be a non-negative integer rank, got {rank}")
    n = ch.bound
    power_sums = [None] + [ch.part(k) * factorial(k) for k in range(1, n + 1)]
    c = [GradedClass.constant(1, n)]
    for k in range(1, n + 1):
        acc = GradedClass(n)
        for i in range(1, k + 1):
            term = graded_mul(c[k - i], power_sums[i])
            acc = acc + term if i % 2 else acc - term
        c.append(acc * Fraction(1, k))
    return c


def chern_FN_closed_form(B: BundleData, k: int) -> GradedClass:
    """Closed-form ``c_{n-1}(F_N)`` or ``c_n(F_N)``.

    ``c_{n-j}(F_N) = sum_i binom(d-n-g-j, i) 2^(2n-2j-i) / (n-j-i)! x^i theta^(n-j-i)``
    for ``j`` in ``{0, 1}``, with :func:`ext_binomial` coefficients.
    """
    g, n, d = B.g, B.n, B.d
    if k == n:
        top, m = n, d - n - g
    elif k == n - 1:
        top, m = n - 1, d - n - g - 1
    else:
        raise ValueError(f"closed form is available only for k = n-1 or n (n={n}), got {k}")
    terms = {
        (i, top - i): ext_binomial(m, i) * Fraction(2 ** (2 * top - i), factorial(top - i))
        for i in range(top + 1)
    }
    return GradedClass(n, terms)


def c1_FN_printed(B: BundleData) -> GradedClass:
    """``c_1(F_N) = (-4n - 2g + 2d + 2) x + 4 theta``."""
    return GradedClass(B.n, {(1, 0): -4 * B.n - 2 * B.g + 2 * B.d + 2, (0, 1): 4})


def c1_symmetric_product(g: int, n: int) -> GradedClass:
    """First Chern class of ``C_n``: ``-(g - n - 1) x - theta``."""
    return GradedClass(max(n, 1), {(1, 0): -(g - n - 1), (0, 1): -1})


def degeneracy_bracket(B: BundleData) -> GradedClass:
    """``c_1(C_n) - c_1(F_N)``, taken symbolically from the Chern character."""
    return c1_symmetric_product(B.g, B.n) - chern_character_FN(B).part(1)


def printed_bracket(B: BundleData) -> GradedClass:
    """The alternative bracket ``(3g + 3n - 2d - 3) x - 3 theta``.

    Kept only so checks can show it disagrees with :func:`degeneracy_bracket`.
    """
    return GradedClass(B.n, {(1, 0): 3 * B.g + 3 * B.n - 2 * B.d - 3, (0, 1): -3})


def intersection_eval(c: GradedClass, g: int) -> Fraction:
    """Degree of the top-degree part: ``x^(n-m) theta^m`` integrates to ``g!/(g-m)!`` (0 if ``m > g``)."""
    n = c.bound
    total = Fraction(0)
    for (a, b), coeff in c._terms.items():
        if a + b != n or b > g:
            continue
        total += coeff * Fraction(factorial(g), factorial(g - b))
    return total


def _euler_char_degeneracy(B: BundleData) -> Fraction:
    # 2 - 2 p_a = (2 - n) c_n(F) + c_{n-1}(F) [c_1(X) - c_1(F)]
    n = B.n
    cn = chern_FN_closed_form(B, n)
    cn1 = chern_FN_closed_form(B, n - 1)
    cls = cn * (2 - n) + cn1 * degeneracy_bracket(B)
    return intersection_eval(cls, B.g)


def degeneracy_genus(B: BundleData) -> Fraction:
    """Arithmetic genus of the curve ``D_{n+1}`` for a map ``O^{n+2} -> F_N`` on ``C_n``.

    Assumes that curve has expected dimension and ``D_n`` is empty; neither is checked.
    """
    return (2 - _euler_char_degeneracy(B)) / 2


def quintic_44(r: int) -> int:
    return 16 * r**5 - 64 * r**4 + 508 * r**3 - 1856 * r**2 + 3133 * r - 2028


def closed_form_genus_44(r: int) -> int:
    """``p_a = 1 + 4^(r+3) P(r) / 6`` for the (4,4)-curve case, valid for ``r >= 5``."""
    if r < 5:
        raise ValueError(f"the closed form holds for r >= 5, got r={r}")
    num = 4 ** (r + 3) * quintic_44(r)
    q, rem = divmod(num, 6)
    if rem:
        raise ArithmeticError(f"4^(r+3) P(r) is not divisible by 6 at r={r}")
    return 1 + q
