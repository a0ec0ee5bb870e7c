"""Exception hierarchy and warning categories for the argument network engine.

Every error carries a stable ``code`` (used on the wire as ``{code, message}``)
and a distinct process exit code for the command-line surface.
"""

from __future__ import annotations


class ArgnetError(Exception):
    """Base class for all engine errors."""

    code = "Error"
    exit_code = 1

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class EmptySummary(ArgnetError):
    code = "EmptySummary"
    exit_code = 7


class InvalidContextWeight(ArgnetError):
    code = "InvalidContextWeight"
    exit_code = 8


class UnknownNode(ArgnetError):
    code = "UnknownNode"
    exit_code = 3


class PremiseNotINode(ArgnetError):
    code = "PremiseNotINode"
    exit_code = 4


class UnknownScheme(ArgnetError):
    code = "UnknownScheme"
    exit_code = 5


class SelfReference(ArgnetError):
    code = "SelfReference"
    exit_code = 6


class SchemeKindMismatch(ArgnetError):
    code = "SchemeKindMismatch"
    exit_code = 26


class DuplicateName(ArgnetError):
    code = "DuplicateName"
    exit_code = 9


class EmptyConclusionDescriptor(ArgnetError):
    code = "EmptyConclusionDescriptor"
    exit_code = 10


class NotSchemeNode(ArgnetError):
    code = "NotSchemeNode"
    exit_code = 11


class CQIndexOutOfRange(ArgnetError):
    code = "CQIndexOutOfRange"
    exit_code = 12


class UnknownInstance(ArgnetError):
    code = "UnknownInstance"
    exit_code = 13


class AlreadyResolved(ArgnetError):
    code = "AlreadyResolved"
    exit_code = 14


class NodeNotInTree(ArgnetError):
    code = "NodeNotInTree"
    exit_code = 15


class EmptyDenominator(ArgnetError):
    code = "EmptyDenominator"
    exit_code = 16


class ZeroDenominator(ArgnetError):
    code = "ZeroDenominator"
    exit_code = 17


class InvalidSpec(ArgnetError):
    code = "InvalidSpec"
    exit_code = 18


class CycleDetected(ArgnetError):
    code = "CycleDetected"
    exit_code = 19


class DuplicateChild(ArgnetError):
    code = "DuplicateChild"
    exit_code = 20


class UnsupportedVersion(ArgnetError):
    code = "UnsupportedVersion"
    exit_code = 21


class ValidationFailed(ArgnetError):
    """Import-time validation failure; carries the full violation list."""

    code = "ValidationFailed"
    exit_code = 22

    def __init__(self, violations, message: str = ""):
        self.violations = list(violations)
        detail = message or "; ".join(v.message for v in self.violations)
        super().__init__(detail)


class CorruptLog(ArgnetError):
    code = "CorruptLog"
    exit_code = 23


class AddressInUse(ArgnetError):
    code = "AddressInUse"
    exit_code = 24


class DataDirUnwritable(ArgnetError):
    code = "DataDirUnwritable"
    exit_code = 25


class ArgnetWarning(UserWarning):
    """Base warning category."""


class SchemeArityWarning(ArgnetWarning):
    """Premise count differs from the scheme's premise descriptors."""


class MissingSchemeWeightWarning(ArgnetWarning):
    """Scheme has no configured weight; 0 is used."""


class UnknownTaxonomyTermWarning(ArgnetWarning):
    """Query referenced a domain term absent from the taxonomy."""
