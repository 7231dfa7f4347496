"""Distance profiles, count comparison, and exhaustive codec verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from . import codecs
from .bitword import Codeword, hamming, rotate_left, word_from_text, word_to_text
from .codecs import (
    CodeParams,
    CyclePosition,
    InvalidCodeword,
    InvalidParams,
    Scheme,
    ValueOutOfRange,
)

__all__ = [
    "DistanceRecord",
    "CountRecord",
    "VerificationReport",
    "distance_profile",
    "count_comparison",
    "enumerate_table",
    "all_positions",
    "search_decode",
    "verify_scheme",
    "decoders_agree",
]

MAX_EXHAUSTIVE_WIDTH = 24


@dataclass(frozen=True)
class DistanceRecord:
    n2: int
    distance: int


@dataclass(frozen=True)
class CountRecord:
    n: int
    fixed_k_count: int
    guc_count: int


@dataclass
class VerificationReport:
    scheme: Scheme
    params: CodeParams
    total_codewords: int
    max_value: int
    duplicates: List[Tuple[int, int]] = field(default_factory=list)
    roundtrip_failures: List[int] = field(default_factory=list)
    decoder_mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            not self.duplicates
            and not self.roundtrip_failures
            and not self.decoder_mismatches
            and self.total_codewords == self.max_value + 1
        )

    def summary(self) -> str:
        if self.passed:
            return f"PASS total={self.total_codewords}"
        lines = [f"FAIL total={self.total_codewords} expected={self.max_value + 1}"]
        for a, b in self.duplicates:
            lines.append(f"duplicate: {a} and {b}")
        for v in self.roundtrip_failures:
            lines.append(f"roundtrip failure: {v}")
        lines.extend(f"decoder mismatch: {m}" for m in self.decoder_mismatches)
        return "\n".join(lines)


def distance_profile(
    scheme: Scheme, params: CodeParams, n1: int, n2_max: Optional[int] = None
) -> List[DistanceRecord]:
    """Hamming distance from ``encode(n1)`` to ``encode(n2)`` for n2 = 0..n2_max."""
    top = codecs.max_value(scheme, params)
    if n2_max is None:
        n2_max = top
    for name, v in (("n1", n1), ("n2_max", n2_max)):
        if not 0 <= v <= top:
            raise ValueOutOfRange(f"{name}={v} outside 0..{top}")
    ref = codecs.encode(scheme, params, n1)
    return [
        DistanceRecord(n2, hamming(ref, codecs.encode(scheme, params, n2)))
        for n2 in range(n2_max + 1)
    ]


def count_comparison(k: int, n_min: int, n_max: int) -> List[CountRecord]:
    if n_min < k + 2:
        raise InvalidParams(f"n_min must be at least k+2 = {k + 2}, got {n_min}")
    if n_max < n_min:
        raise InvalidParams(f"n_max ({n_max}) is below n_min ({n_min})")
    records = []
    for n in range(n_min, n_max + 1):
        params = CodeParams(n, k)
        records.append(
            CountRecord(
                n,
                codecs.max_value(Scheme.FIXED_K, params),
                codecs.max_value(Scheme.GUC, params),
            )
        )
    return records


def enumerate_table(scheme: Scheme, params: CodeParams) -> List[Tuple[int, str]]:
    top = codecs.max_value(scheme, params)
    return [(v, word_to_text(codecs.encode(scheme, params, v))) for v in range(top + 1)]


def all_positions(scheme: Scheme, params: CodeParams) -> Iterator[CyclePosition]:
    """Every (cycle, rotation) candidate the scheme can emit, terminal included."""
    scheme = Scheme(scheme)
    codecs.validate_params(scheme, params)
    n, k = params.n, params.k
    if scheme is Scheme.INCREASING_K:
        for c in range(1, n + 1):
            for r in range(n - c + 1):
                yield CyclePosition(c, r)
        return
    length = codecs.cycle_length(scheme, params)
    for j in range(n - k - 1):
        for r in range(length):
            yield CyclePosition(j, r)
    if scheme is Scheme.GUC:
        yield CyclePosition(n - k - 1, 0, terminal=True)


def _candidate_word(scheme: Scheme, params: CodeParams, pos: CyclePosition) -> Codeword:
    # built from text so the oracle shares no pattern code with the codec
    n, r = params.n, pos.rotation
    if scheme is Scheme.INCREASING_K:
        c = pos.cycle
        return word_from_text("0" * (n - c - r) + "1" * c + "0" * r)
    body = "1" * params.k
    if pos.cycle:
        body = "1" + "0" * pos.cycle + body
    return rotate_left(word_from_text(body.rjust(n, "0")), r)


def search_decode(scheme: Scheme, params: CodeParams, w: Codeword) -> int:
    """Reference decoder: try every candidate position until one reproduces ``w``.

    Deliberately independent of :func:`codecs.decode` and of
    :func:`codecs.value_to_position`; used to cross-check both.
    """
    scheme = Scheme(scheme)
    codecs.validate_params(scheme, params)
    if w.width != params.n:
        raise InvalidCodeword(f"codeword width {w.width} does not match n={params.n}")
    if not any(w.bits):
        return 0
    for value, pos in enumerate(all_positions(scheme, params), start=1):
        if _candidate_word(scheme, params, pos) == w:
            return value
    raise InvalidCodeword(f"{w} matches no candidate position")


def _search_table(scheme: Scheme, params: CodeParams) -> Dict[Codeword, int]:
    table = {Codeword((0,) * params.n): 0}
    for value, pos in enumerate(all_positions(scheme, params), start=1):
        table.setdefault(_candidate_word(scheme, params, pos), value)
    return table


def verify_scheme(scheme: Scheme, params: CodeParams) -> VerificationReport:
    """Exhaustively encode every value, check injectivity and both decoders."""
    scheme = Scheme(scheme)
    top = codecs.max_value(scheme, params)
    if params.n > MAX_EXHAUSTIVE_WIDTH:
        raise InvalidParams(f"exhaustive verification supports n <= {MAX_EXHAUSTIVE_WIDTH}")

    report = VerificationReport(scheme, params, 0, top)
    seen: Dict[Codeword, int] = {}
    oracle = _search_table(scheme, params)
    for v in range(top + 1):
        w = codecs.encode(scheme, params, v)
        if w in seen:
            report.duplicates.append((seen[w], v))
        else:
            seen[w] = v
        try:
            got = codecs.decode(scheme, params, w)
        except InvalidCodeword:
            got = None
        if got != v:
            report.roundtrip_failures.append(v)
        if oracle.get(w) != got:
            report.decoder_mismatches.append(
                f"{word_to_text(w)}: run-analysis={got} search={oracle.get(w)}"
            )
    report.total_codewords = len(seen)
    return report


def decoders_agree(scheme: Scheme, params: CodeParams) -> List[str]:
    """Compare the run-analysis decoder with the search decoder on all 2^n words.

    Returns a list of disagreements (empty when they agree everywhere).
    """
    scheme = Scheme(scheme)
    codecs.validate_params(scheme, params)
    oracle = _search_table(scheme, params)
    mismatches = []
    for bits in product((0, 1), repeat=params.n):
        w = Codeword(bits)
        try:
            got = codecs.decode(scheme, params, w)
        except InvalidCodeword:
            got = None
        if got != oracle.get(w):
            mismatches.append(f"{word_to_text(w)}: run-analysis={got} search={oracle.get(w)}")
    return mismatches
