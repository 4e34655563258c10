"""Admissible sequences, Young-diagram diagonals and fixed-fiber counts.

An admissible sequence is a run of positive integers ``s_{-j}, ..., s_k``
placed at a fixed position relative to index 0.  It is *1-admissible* when,
reading outward from index 0 in either direction and padding with zeros past
the ends, every step keeps the value or drops it by one.  Those are exactly
the diagonal-length profiles of Young diagrams, which is why they are counted
by the partition function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "AdmissibleSeq",
    "Partition",
    "weight",
    "is_one_admissible",
    "enumerate_one_admissible",
    "partition_to_sequence",
    "sequence_to_partition",
    "virtual_count",
    "partition_counts",
    "fixed_fiber_count",
    "NUM_BRANCHES",
]

# 24 nodal fibers, each met twice by the elliptic bisection
NUM_BRANCHES = 48


@dataclass(frozen=True, order=True)
class AdmissibleSeq:
    """Values ``s_{-left}, ..., s_{right}`` with every entry positive."""

    left: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.left < 0:
            raise ValueError(f"left offset must be non-negative, got {self.left}")
        if len(self.values) < self.left + 1:
            raise ValueError("index range must contain 0")
        if any(v < 1 for v in self.values):
            raise ValueError(f"entries must be positive integers, got {self.values}")

    @property
    def right(self) -> int:
        return len(self.values) - self.left - 1

    @property
    def indices(self) -> range:
        return range(-self.left, self.right + 1)

    def __getitem__(self, n: int) -> int:
        """Entry at index ``n``, zero outside the support."""
        i = n + self.left
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    @property
    def weight(self) -> int:
        return sum(self.values)

    def to_dict(self) -> dict:
        return {"left": self.left, "values": list(self.values)}

    @classmethod
    def from_dict(cls, data: dict) -> AdmissibleSeq:
        return cls(int(data["left"]), tuple(data["values"]))


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing, got {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(row, col)`` of the Young diagram, 0-indexed, English notation."""
        for i, length in enumerate(self.parts):
            for j in range(length):
                yield i, j


def weight(s: AdmissibleSeq) -> int:
    return s.weight


def is_one_admissible(s: AdmissibleSeq) -> bool:
    # each outward step, including the one onto the zero padding, is 0 or -1
    for n in range(0, s.right + 1):
        if s[n] - s[n + 1] not in (0, 1):
            return False
    for n in range(0, s.left + 1):
        if s[-n] - s[-n - 1] not in (0, 1):
            return False
    return True


def _tails(top: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Outward runs after a value ``top`` that end exactly at 1 and sum to ``budget``."""
    if budget == 0:
        if top == 1:
            yield ()
        return
    for nxt in (top, top - 1):
        if 1 <= nxt <= budget:
            for rest in _tails(nxt, budget - nxt):
                yield (nxt,) + rest


def enumerate_one_admissible(a: int) -> list[AdmissibleSeq]:
    """All 1-admissible sequences of weight ``a``, sorted by offset then values."""
    if a < 1:
        raise ValueError(f"weight must be positive, got {a}")
    out = []
    for peak in range(1, a + 1):
        rest = a - peak
        for left_weight in range(rest + 1):
            lefts = list(_tails(peak, left_weight))
            if not lefts:
                continue
            rights = list(_tails(peak, rest - left_weight))
            for lt in lefts:
                for rt in rights:
                    out.append(AdmissibleSeq(len(lt), lt[::-1] + (peak,) + rt))
    out.sort()
    return out


def partition_to_sequence(lam: Partition) -> AdmissibleSeq:
    """Diagonal lengths of the Young diagram: ``s_n = #{cells with col - row = n}``."""
    if not lam.parts:
        raise ValueError("the empty partition has no diagonal sequence")
    left = len(lam.parts) - 1
    right = lam.parts[0] - 1
    values = [0] * (left + right + 1)
    for i, j in lam.cells():
        values[j - i + left] += 1
    return AdmissibleSeq(left, tuple(values))


def sequence_to_partition(s: AdmissibleSeq) -> Partition:
    if not is_one_admissible(s):
        raise ValueError(f"{s} is not 1-admissible")
    # diagonal n >= 0 holds cells (i, i+n) for i < s_n;
    # diagonal n < 0 holds cells (t-n, t) for t < s_n
    rows = []
    for i in range(s.weight):
        length = sum(1 for n in range(0, s.right + 1) if s[n] > i)
        length += sum(1 for n in range(-s.left, 0) if 0 <= i + n < s[n])
        if length == 0:
            break
        rows.append(length)
    lam = Partition(tuple(rows))
    assert partition_to_sequence(lam) == s
    return lam


def virtual_count(s: AdmissibleSeq) -> int:
    return 1 if is_one_admissible(s) else 0


def partition_counts(max_n: int) -> list[int]:
    """``p(0) .. p(max_n)`` by the part-size dynamic program.

    Deliberately independent of the eta-product expansion in ``qseries`` so the
    two can check each other.
    """
    p = [1] + [0] * max_n
    for part in range(1, max_n + 1):
        for n in range(part, max_n + 1):
            p[n] += p[n - part]
    return p


def fixed_fiber_count(r: int) -> int:
    """``sum over a_1+...+a_48 = r-1 of prod p(a_i)``, as 48 explicit convolutions."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    n = r - 1
    p = partition_counts(n)
    acc = [1] + [0] * n
    for _ in range(NUM_BRANCHES):
        acc = [sum(acc[i] * p[m - i] for i in range(m + 1)) for m in range(n + 1)]
    return acc[n]
