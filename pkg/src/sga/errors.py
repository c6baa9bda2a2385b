"""Exception hierarchy shared by every module of the package."""


class GroupError(ValueError):
    """Base class for all errors raised by :mod:`sga`."""


class GroupSyntaxError(GroupError):
    """A group name does not match the naming grammar."""


class NotPrimePower(GroupError):
    """A field size is not a prime power."""


class NotPrime(GroupError):
    """An argument that must be prime is not."""


class NotSimple(GroupError):
    """Parameters name a group outside the simple-group taxonomy."""


class NotApplicable(GroupError):
    """The requested quantity is undefined for this group."""


class OrderCapExceeded(GroupError):
    """A brute-force routine would exceed its configured size cap."""


class InvalidAction(GroupError):
    """A semidirect-product action is not an automorphism."""


class FormulaIntegrityError(ArithmeticError):
    """An integer formula produced a non-exact division."""
