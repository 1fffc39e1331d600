"""Exception hierarchy shared by the coders and the CLI."""


class CodecError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(CodecError, ValueError):
    """A parameter set cannot drive a single-redundancy encoder."""


class InvalidProbability(ConfigError):
    """The derived bias p_L falls outside (1/2, 1); n is too small for alpha."""


class InsufficientCompression(ConfigError):
    """Some out-of-band input maps to an interval too short to fit the output length."""


class OutputTooLong(CodecError):
    """The shortest fraction in an interval needs more digits than allowed."""


class IterationGuardExceeded(CodecError):
    """The balancing loop ran past its iteration cap."""
