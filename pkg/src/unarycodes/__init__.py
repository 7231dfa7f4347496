"""Generalized unary codes: increasing-k, fixed-k and fixed-k with a moving bit."""

from .bitword import (
    Codeword,
    Run,
    circular_runs,
    hamming,
    rotate_left,
    weight,
    word_from_text,
    word_to_text,
)
from .codecs import (
    CodecError,
    CodeParams,
    CyclePosition,
    InvalidCodeword,
    InvalidParams,
    Scheme,
    ValueOutOfRange,
    base_pattern,
    decode,
    encode,
    max_value,
    validate_params,
    value_to_position,
)
from .analysis import (
    CountRecord,
    DistanceRecord,
    VerificationReport,
    count_comparison,
    distance_profile,
    enumerate_table,
    verify_scheme,
)

__version__ = "0.1.0"
