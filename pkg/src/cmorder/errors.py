"""Exception types.

Every error raised on purpose by the library derives from
:class:`CMOrderError`; the CLI prints the class name on stderr.
"""


class CMOrderError(Exception):
    """Base class for domain errors."""


class SizeTooSmall(CMOrderError, ValueError):
    pass


class NegativeEntry(CMOrderError, ValueError):
    pass


class MalformedCharge(CMOrderError, ValueError):
    pass


class InternalCutoff(CMOrderError, RuntimeError):
    """A finite beta-set truncation was too short. Indicates a bug."""


class ZeroR(CMOrderError, ValueError):
    pass


class WrongLevel(CMOrderError, ValueError):
    pass


class OnWall(CMOrderError, ValueError):
    pass


class BadDivisor(CMOrderError, ValueError):
    pass


class NotCeStable(CMOrderError, ValueError):
    pass


class ConstancyViolation(CMOrderError, ValueError):
    pass


class NonEquivariant(CMOrderError, ValueError):
    pass


class PreorderNotOrder(CMOrderError, ValueError):
    pass


class UnknownSuite(CMOrderError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""
