"""Exact truncated power series in q over the integers.

Everything here works modulo ``q**order``: a :class:`QSeries` stores the
coefficients of ``q**0 .. q**(order-1)`` and binary operations truncate to the
smaller of the two orders.  The main consumer is :func:`eta_product`, which
expands ``prod_{m>=1} (1 - q**m)**k`` for any integer ``k``.

Large products go through Kronecker substitution: both series are packed into
single big integers, multiplied once, and unpacked.  GMP (via ``gmpy2``) does
the multiplication when it is installed, which is what makes order 10000
expansions of the 48th power cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _bigint = int

__all__ = [
    "QSeries",
    "series_mul",
    "series_inv",
    "series_pow",
    "eta_product",
    "yau_zaslow",
    "partition_numbers",
    "bl48_coefficient",
]

# below this length the schoolbook product beats packing/unpacking
KRONECKER_THRESHOLD = 48


@dataclass(frozen=True)
class QSeries:
    """Power series ``sum c_i q**i`` known modulo ``q**order``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        cs = cs[:order] + [0] * (order - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> QSeries:
        cs = [0] * order
        if power < order:
            cs[power] = coeff
        return cls(cs, order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        if n < 0 or n >= len(self.coeffs):
            raise IndexError(f"coefficient of q^{n} is not known modulo q^{self.order}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known mod q^{self.order} to q^{order}")
        return QSeries(self.coeffs[:order])

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __sub__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self) -> QSeries:
        return QSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, int):
            return QSeries(other * c for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QSeries:
        return series_pow(self, k)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"QSeries([{shown}{more}], order={self.order})"


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    nz_b = [(j, y) for j, y in enumerate(b[:n]) if y]
    for i in range(n):
        x = a[i]
        if not x:
            continue
        for j, y in nz_b:
            if i + j >= n:
                break
            out[i + j] += x * y
    return out


def _pack(cs: Sequence[int], width: int):
    return _bigint(int.from_bytes(b"".join(c.to_bytes(width, "little") for c in cs), "little"))


def _unpack(z, width: int, n: int) -> list[int]:
    raw = int(z).to_bytes(width * n, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(n)]


def _kronecker_nonneg(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    # a, b have non-negative entries; slot width must hold any product coefficient
    ma, mb = max(a[:n], default=0), max(b[:n], default=0)
    if not ma or not mb:
        return [0] * n
    bits = ma.bit_length() + mb.bit_length() + n.bit_length() + 1
    width = (bits + 7) // 8
    # the full product has up to 2n-1 slots; only the low n are read back
    z = _pack(a[:n], width) * _pack(b[:n], width)
    z = z % (_bigint(1) << (8 * width * n))
    return _unpack(z, width, n)


def _kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    a, b = a[:n], b[:n]
    a_pos = [c if c > 0 else 0 for c in a]
    b_pos = [c if c > 0 else 0 for c in b]
    a_neg = [-c if c < 0 else 0 for c in a]
    b_neg = [-c if c < 0 else 0 for c in b]
    out = _kronecker_nonneg(a_pos, b_pos, n)
    if any(a_neg) and any(b_neg):
        out = [x + y for x, y in zip(out, _kronecker_nonneg(a_neg, b_neg, n))]
    if any(a_neg):
        out = [x - y for x, y in zip(out, _kronecker_nonneg(a_neg, b_pos, n))]
    if any(b_neg):
        out = [x - y for x, y in zip(out, _kronecker_nonneg(a_pos, b_neg, n))]
    return out


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    if n < KRONECKER_THRESHOLD:
        return QSeries(_schoolbook(a.coeffs, b.coeffs, n))
    return QSeries(_kronecker(a.coeffs, b.coeffs, n))


def series_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse of a series whose constant term is 1 or -1.

    Raises ``ValueError`` for any other constant term, since the inverse would
    leave the integers (or not exist at all).
    """
    if a.order == 0:
        return a
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"series_inv needs constant term +-1, got {c0}")
    n = a.order
    nz = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    b = [0] * n
    b[0] = c0
    for k in range(1, n):
        acc = 0
        for j, c in nz:
            if j > k:
                break
            acc += c * b[k - j]
        b[k] = -acc * c0
    return QSeries(b)


def series_pow(a: QSeries, k: int) -> QSeries:
    """``a**k`` by repeated squaring; negative ``k`` inverts first."""
    if k < 0:
        return series_pow(series_inv(a), -k)
    result = QSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def _pentagonal_series(order: int) -> list[int]:
    # prod (1 - q^m) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers
    cs = [0] * order
    if order:
        cs[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 < order:
        sign = -1 if k % 2 else 1
        cs[k * (3 * k - 1) // 2] = sign
        g2 = k * (3 * k + 1) // 2
        if g2 < order:
            cs[g2] = sign
        k += 1
    return cs


def _partition_series(order: int) -> list[int]:
    # inverse of the pentagonal series, read off the sparse recurrence
    pent = [(j, c) for j, c in enumerate(_pentagonal_series(order)) if j and c]
    p = [0] * order
    if order:
        p[0] = 1
    for n in range(1, order):
        acc = 0
        for j, c in pent:
            if j > n:
                break
            if c > 0:
                acc -= p[n - j]
            else:
                acc += p[n - j]
        p[n] = acc
    return p


@lru_cache(maxsize=64)
def eta_product(k: int, order: int) -> QSeries:
    """``prod_{m>=1} (1 - q**m)**k`` modulo ``q**order``.

    ``k = -1`` is the partition generating function, ``k = -24`` gives the
    Yau-Zaslow counts and ``k = -48`` the fixed-fiber counts.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if k == 0:
        return QSeries.one(order)
    if k < 0:
        base = QSeries(_partition_series(order))
    else:
        base = QSeries(_pentagonal_series(order))
    return series_pow(base, abs(k))


def yau_zaslow(max_g: int) -> list[int]:
    """Rational curve counts ``N_0 .. N_max_g`` (coefficients of q/Delta)."""
    if max_g < 0:
        raise ValueError(f"max_g must be non-negative, got {max_g}")
    return list(eta_product(-24, max_g + 1).coeffs)


def partition_numbers(max_n: int) -> list[int]:
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    return list(eta_product(-1, max_n + 1).coeffs)


def bl48_coefficient(n: int, order: int | None = None) -> int:
    """Coefficient of ``q**n`` in ``prod (1 - q**m)**-48``.

    ``order`` lets callers share one cached expansion across many ``n``.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if order is None or order <= n:
        order = n + 1
    return eta_product(-48, order)[n]
