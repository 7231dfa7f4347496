"""Fixed-width bit words with circular rotation, weight, runs and Hamming distance.

Bits are stored MSB first: index 0 is the leftmost character of the text form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

__all__ = [
    "Codeword",
    "Run",
    "word_from_text",
    "word_to_text",
    "zeros",
    "rotate_left",
    "weight",
    "circular_runs",
    "hamming",
]


@dataclass(frozen=True)
class Codeword:
    """An immutable fixed-width sequence of bits, index 0 = most significant."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("codeword must have at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("codeword bits must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Codeword":
        return cls(tuple(int(b) for b in bits))

    @property
    def width(self) -> int:
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, index):
        return self.bits[index]

    def __str__(self):
        return word_to_text(self)


@dataclass(frozen=True)
class Run:
    """A maximal circular run of equal bits starting at ``start``."""

    bit: int
    start: int
    length: int


def word_from_text(text: str) -> Codeword:
    if not text:
        raise ValueError("empty codeword text")
    bad = set(text) - {"0", "1"}
    if bad:
        raise ValueError(f"codeword text may only contain '0' and '1', got {sorted(bad)!r}")
    return Codeword(tuple(1 if c == "1" else 0 for c in text))


def word_to_text(w: Codeword) -> str:
    return "".join("1" if b else "0" for b in w.bits)


def zeros(width: int) -> Codeword:
    return Codeword((0,) * width)


def rotate_left(w: Codeword, s: int) -> Codeword:
    """Circular left rotation: bit i of the result is bit (i + s) mod width of ``w``."""
    if s < 0:
        raise ValueError("rotation amount must be nonnegative")
    s %= w.width
    if s == 0:
        return w
    return Codeword(w.bits[s:] + w.bits[:s])


def weight(w: Codeword) -> int:
    return sum(w.bits)


def circular_runs(w: Codeword) -> List[Run]:
    """Maximal runs of the word read as a circle.

    A word that starts and ends with the same bit has those two segments merged
    into one run, which is reported first with its start index in the tail of
    the word. Enumeration then proceeds left to right.
    """
    bits = w.bits
    n = len(bits)
    if all(b == bits[0] for b in bits):
        return [Run(bits[0], 0, n)]

    # bits[-1] compares index 0 against the last bit, so wrap-merging is implicit
    starts = [i for i in range(n) if bits[i] != bits[i - 1]]
    if starts[0] != 0:
        # the run holding index 0 began in the tail of the word
        starts = starts[-1:] + starts[:-1]

    m = len(starts)
    return [
        Run(bits[starts[i]], starts[i], (starts[(i + 1) % m] - starts[i]) % n)
        for i in range(m)
    ]


def hamming(a: Codeword, b: Codeword) -> int:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    return sum(x != y for x, y in zip(a.bits, b.bits))
