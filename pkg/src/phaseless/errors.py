"""Exception types raised by the reconstruction library.

Each error carries the process exit code the command-line front end maps it to.
"""


class PhaselessError(Exception):
    exit_code = 1


class ParseError(PhaselessError, ValueError):
    exit_code = 2


class NearZeroOnLine(PhaselessError):
    """The lifted function nearly vanishes on the line ``Im z = c``.

    The phase of ``g_M`` cannot be tracked through a (near) zero; retry with a
    different offset ``c``.
    """

    exit_code = 3


class QuadratureNonConvergence(PhaselessError):
    exit_code = 4


class InvalidRate(PhaselessError, ValueError):
    """Sampling rate or configuration outside the admissible region (e.g. ``s <= 2b``)."""

    exit_code = 5


class DomainMismatch(PhaselessError, ValueError):
    exit_code = 5


class EmptySpec(PhaselessError, ValueError):
    exit_code = 5
