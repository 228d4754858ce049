"""Increasing index sequences, their weights, Pieri supports and 0/1 strings.

An index sequence is a plain tuple ``(i_1, ..., i_k)`` with
``1 <= i_1 < ... < i_k``.  The ambient bound ``n`` is not part of the value;
callers check it where it matters.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

IndexSeq = tuple[int, ...]


def check_index_seq(I) -> IndexSeq:
    I = tuple(int(i) for i in I)
    if not I:
        raise ValueError("an index sequence needs at least one entry")
    if I[0] < 1 or any(a >= b for a, b in zip(I, I[1:])):
        raise ValueError(f"{I} is not a strictly increasing sequence of positive integers")
    return I


def in_range(I: IndexSeq, n: int) -> bool:
    return I[-1] <= n


def parse_index(text: str) -> IndexSeq:
    """Parse the text form ``"1,3"``."""
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"invalid index sequence {text!r}") from None
    return check_index_seq(parts)


def format_index(I: IndexSeq) -> str:
    return ",".join(map(str, I))


def weight(I: IndexSeq) -> int:
    return sum(i - j for j, i in enumerate(I, start=1))


def index_sets(k: int, n: int) -> list[IndexSeq]:
    """I^k_n in degree-then-lexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda I: (weight(I), I))


def pieri_support(I: IndexSeq, h: int) -> list[tuple[int, ...]]:
    """All H with sum h and i_1 <= i_1+h_1 < i_2 <= ... <= i_{k-1}+h_{k-1} < i_k.

    The last shift is unbounded apart from the budget.
    """
    if h < 0:
        raise ValueError("h must be nonnegative")
    k = len(I)
    out: list[tuple[int, ...]] = []
    shifts = [0] * k

    def rec(j, left):
        if j == k - 1:
            shifts[j] = left
            out.append(tuple(shifts))
            return
        for s in range(min(left, I[j + 1] - I[j] - 1) + 1):
            shifts[j] = s
            rec(j + 1, left - s)

    rec(0, h)
    return out


def shifted(I: IndexSeq, H) -> IndexSeq:
    return tuple(i + s for i, s in zip(I, H))


def to_bitstring(I: IndexSeq, n: int) -> str:
    """0 in position j exactly when j is an entry of I."""
    if I[-1] > n:
        raise ValueError(f"index {I[-1]} exceeds n={n}")
    zeros = set(I)
    return "".join("0" if j in zeros else "1" for j in range(1, n + 1))


def from_bitstring(bits: str) -> IndexSeq:
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"invalid bitstring {bits!r}")
    return check_index_seq(j for j, b in enumerate(bits, start=1) if b == "0")


def up_moves(bits: str) -> Iterator[str]:
    """Strings obtained by turning one adjacent "01" into "10"."""
    for j in range(len(bits) - 1):
        if bits[j:j + 2] == "01":
            yield bits[:j] + "10" + bits[j + 2:]
