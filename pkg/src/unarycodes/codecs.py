"""Encoders and decoders for the three generalized unary schemes.

``INCREASING_K``
    A right-aligned block of ``c`` ones is shifted left one place at a time;
    once it reaches the left edge the block grows by one.  Values 0..n(n+1)/2.
``FIXED_K``
    A block of ``k`` ones, optionally preceded by a single marker 1 separated
    from it by ``j`` zeros.  Each cycle is the base pattern rotated left
    ``0..n-k`` times.  Values 0..(n-k)^2-1.
``GUC``
    Same base patterns as ``FIXED_K`` but every cycle runs through all ``n``
    circular rotations, and a final terminal word ``1 0^(n-k-1) 1^k`` closes
    the count.  Values 0..n(n-k-1)+1.

Value 0 is always the all-zero word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .bitword import Codeword, circular_runs, rotate_left, weight, zeros

__all__ = [
    "Scheme",
    "CodeParams",
    "CyclePosition",
    "CodecError",
    "InvalidParams",
    "ValueOutOfRange",
    "InvalidCodeword",
    "validate_params",
    "max_value",
    "cycle_length",
    "cycle_count",
    "base_pattern",
    "value_to_position",
    "position_to_value",
    "encode",
    "decode",
]


class Scheme(enum.Enum):
    INCREASING_K = "increasing"
    FIXED_K = "fixed"
    GUC = "guc"


@dataclass(frozen=True)
class CodeParams:
    """Codeword width ``n`` and block size ``k`` (unused by INCREASING_K)."""

    n: int
    k: Optional[int] = None


@dataclass(frozen=True)
class CyclePosition:
    """Where a nonzero value sits in its scheme's enumeration.

    For FIXED_K and GUC ``cycle`` is the number of zeros between the marker 1
    and the k-block (0 means no marker).  For INCREASING_K it is the block
    length ``c``.  ``rotation`` counts left rotations (plain shifts for
    INCREASING_K) of the cycle's base pattern.
    """

    cycle: int
    rotation: int
    terminal: bool = False


class CodecError(ValueError):
    pass


class InvalidParams(CodecError):
    pass


class ValueOutOfRange(CodecError):
    pass


class InvalidCodeword(CodecError):
    pass


def validate_params(scheme: Scheme, params: CodeParams) -> None:
    """Raise :class:`InvalidParams` unless ``params`` is usable with ``scheme``."""
    scheme = Scheme(scheme)
    n, k = params.n, params.k
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"n must be a positive integer, got {n!r}")
    if scheme is Scheme.INCREASING_K:
        return
    if k is None:
        raise InvalidParams(f"k is required for scheme {scheme.value!r}")
    if not isinstance(k, int) or k < 2:
        # k = 1 makes the marker and the block indistinguishable under rotation
        raise InvalidParams(f"k must be at least 2, got {k!r}")
    if k > n - 2:
        raise InvalidParams(f"k must be at most n-2 = {n - 2}, got {k}")


def max_value(scheme: Scheme, params: CodeParams) -> int:
    """Largest encodable value; encodable values are exactly ``0..max_value``."""
    scheme = Scheme(scheme)
    validate_params(scheme, params)
    n, k = params.n, params.k
    if scheme is Scheme.INCREASING_K:
        return n * (n + 1) // 2
    if scheme is Scheme.FIXED_K:
        return (n - k) ** 2 - 1
    return n * (n - k - 1) + 1


def cycle_count(scheme: Scheme, params: CodeParams) -> int:
    """Number of full rotation cycles (the GUC terminal word is not counted)."""
    scheme = Scheme(scheme)
    validate_params(scheme, params)
    if scheme is Scheme.INCREASING_K:
        return params.n
    return params.n - params.k - 1


def cycle_length(scheme: Scheme, params: CodeParams, cycle: int = 0) -> int:
    scheme = Scheme(scheme)
    validate_params(scheme, params)
    n, k = params.n, params.k
    if scheme is Scheme.INCREASING_K:
        return n - cycle + 1
    if scheme is Scheme.FIXED_K:
        return n - k + 1
    return n


def _check_position(scheme: Scheme, params: CodeParams, pos: CyclePosition) -> None:
    n, k = params.n, params.k
    j, r = pos.cycle, pos.rotation
    if pos.terminal:
        if scheme is not Scheme.GUC or j != n - k - 1 or r != 0:
            raise ValueOutOfRange(f"invalid terminal position {pos} for {scheme.value}")
        return
    if scheme is Scheme.INCREASING_K:
        ok = 1 <= j <= n and 0 <= r <= n - j
    else:
        ok = 0 <= j <= n - k - 2 and 0 <= r < cycle_length(scheme, params)
    if not ok:
        raise ValueOutOfRange(f"invalid position {pos} for {scheme.value} with n={n}, k={k}")


def _pattern(n: int, k: int, gap: Optional[int]) -> Codeword:
    # right-aligned: [zeros] [1 0^gap] 1^k
    if gap is None:
        body = (1,) * k
    else:
        body = (1,) + (0,) * gap + (1,) * k
    return Codeword((0,) * (n - len(body)) + body)


def base_pattern(scheme: Scheme, params: CodeParams, pos: CyclePosition) -> Codeword:
    """Rotation-0 word of the cycle at ``pos``."""
    scheme = Scheme(scheme)
    validate_params(scheme, params)
    if pos.rotation != 0:
        raise ValueOutOfRange("base_pattern takes a rotation-0 position")
    _check_position(scheme, params, pos)
    n, k = params.n, params.k
    if scheme is Scheme.INCREASING_K:
        return _pattern(n, pos.cycle, None)
    if pos.terminal:
        return _pattern(n, k, n - k - 1)
    return _pattern(n, k, pos.cycle or None)


def value_to_position(scheme: Scheme, params: CodeParams, value: int) -> CyclePosition:
    scheme = Scheme(scheme)
    top = max_value(scheme, params)
    if not 1 <= value <= top:
        raise ValueOutOfRange(f"value {value} has no cycle position (valid: 1..{top})")
    n, k = params.n, params.k
    offset = value - 1
    if scheme is Scheme.INCREASING_K:
        c = 1
        while offset > n - c:
            offset -= n - c + 1
            c += 1
        return CyclePosition(c, offset)
    if scheme is Scheme.GUC and value == top:
        return CyclePosition(n - k - 1, 0, terminal=True)
    length = cycle_length(scheme, params)
    return CyclePosition(offset // length, offset % length)


def position_to_value(scheme: Scheme, params: CodeParams, pos: CyclePosition) -> int:
    scheme = Scheme(scheme)
    validate_params(scheme, params)
    _check_position(scheme, params, pos)
    if pos.terminal:
        return max_value(scheme, params)
    n = params.n
    if scheme is Scheme.INCREASING_K:
        # cycles 1..c-1 hold n + (n-1) + ... + (n-c+2) values
        c = pos.cycle
        before = (c - 1) * n - (c - 1) * (c - 2) // 2
        return before + pos.rotation + 1
    return pos.cycle * cycle_length(scheme, params) + pos.rotation + 1


def encode(scheme: Scheme, params: CodeParams, value: int) -> Codeword:
    scheme = Scheme(scheme)
    top = max_value(scheme, params)
    if not 0 <= value <= top:
        raise ValueOutOfRange(f"value {value} outside 0..{top}")
    n = params.n
    if value == 0:
        return zeros(n)
    pos = value_to_position(scheme, params, value)
    if scheme is Scheme.INCREASING_K:
        c, r = pos.cycle, pos.rotation
        return Codeword((0,) * (n - c - r) + (1,) * c + (0,) * r)
    base = base_pattern(scheme, params, CyclePosition(pos.cycle, 0, pos.terminal))
    return rotate_left(base, pos.rotation)


def decode(scheme: Scheme, params: CodeParams, w: Codeword) -> int:
    """Recover the value of ``w`` from its run structure.

    Raises :class:`InvalidCodeword` for any word ``encode`` never emits.
    """
    scheme = Scheme(scheme)
    validate_params(scheme, params)
    n, k = params.n, params.k
    if w.width != n:
        raise InvalidCodeword(f"codeword width {w.width} does not match n={n}")

    ones = weight(w)
    if ones == 0:
        return 0
    one_runs = [run for run in circular_runs(w) if run.bit == 1]

    if scheme is Scheme.INCREASING_K:
        if len(one_runs) != 1:
            raise InvalidCodeword(f"{w} is not a single contiguous block")
        run = one_runs[0]
        if run.start + run.length > n:
            raise InvalidCodeword(f"{w}: block wraps around the word edge")
        c = run.length
        r = n - (run.start + c)
        return position_to_value(scheme, params, CyclePosition(c, r))

    # the k-block of every base pattern starts at index n - k
    if ones == k and len(one_runs) == 1:
        r = (n - k - one_runs[0].start) % n
        return _checked_value(scheme, params, CyclePosition(0, r), w)

    if ones == k + 1 and len(one_runs) == 2:
        lengths = sorted(run.length for run in one_runs)
        if lengths != [1, k]:
            raise InvalidCodeword(f"{w}: 1-runs of lengths {lengths}, expected [1, {k}]")
        marker, block = sorted(one_runs, key=lambda run: run.length)
        gap = (block.start - marker.start - 1) % n
        r = (n - k - block.start) % n
        return _checked_value(scheme, params, CyclePosition(gap, r), w)

    if scheme is Scheme.GUC and ones == k + 1 and len(one_runs) == 1:
        if w == base_pattern(scheme, params, CyclePosition(n - k - 1, 0, terminal=True)):
            return max_value(scheme, params)
        raise InvalidCodeword(f"{w} is a rotated terminal pattern")

    raise InvalidCodeword(f"{w} has no value under {scheme.value} with n={n}, k={k}")


def _checked_value(scheme, params, pos, w):
    try:
        return position_to_value(scheme, params, pos)
    except ValueOutOfRange:
        raise InvalidCodeword(f"{w} maps to {pos}, outside the code") from None
