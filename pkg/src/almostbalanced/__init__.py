"""Almost-balanced constrained codes with a single redundancy symbol.

Words of length ``n-1`` are mapped one-to-one into words of length ``n``
whose balance statistic lies within ``alpha*sqrt(n)`` of its centre, by
iterating biased arithmetic coders until the constraint holds.
"""
from .balancer import (
    Balancer,
    CodecConfig,
    EncodeReport,
    balancer_for,
    decode_balanced,
    decode_polarity,
    decode_symbol4,
    encode_balanced,
    encode_polarity,
    encode_symbol4,
    step_map,
    validate_config,
)
from .constraints import BalanceSpec, SymbolSequence
from .errors import (
    CodecError,
    ConfigError,
    InsufficientCompression,
    InvalidProbability,
    IterationGuardExceeded,
    OutputTooLong,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "BalanceSpec",
    "Balancer",
    "CodecConfig",
    "CodecError",
    "ConfigError",
    "EncodeReport",
    "InsufficientCompression",
    "InvalidProbability",
    "IterationGuardExceeded",
    "OutputTooLong",
    "SymbolSequence",
    "balancer_for",
    "decode_balanced",
    "decode_polarity",
    "decode_symbol4",
    "encode_balanced",
    "encode_polarity",
    "encode_symbol4",
    "step_map",
    "validate_config",
]
