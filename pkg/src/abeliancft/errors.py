"""Exception hierarchy shared across the package.

``BugTrap`` marks conditions that indicate an internal inconsistency
(two independent algorithms disagreeing, a divisibility that theory
guarantees failing to hold).  The CLI maps these to exit code 3, and
parse/usage problems to exit code 2.
"""


class AbelianCFTError(Exception):
    """Base class for all package errors."""


class BugTrap(AbelianCFTError):
    """An internal cross-check failed; never expected on valid inputs."""


class ParseError(AbelianCFTError):
    """Malformed field-spec text or CLI input."""


class InvalidSubgroup(AbelianCFTError):
    """A subgroup generator is not a unit for the given modulus."""


class NotDividing(AbelianCFTError):
    """A prime was required to divide the modulus but does not."""


class NotCyclic(AbelianCFTError):
    """The field's Galois group is not cyclic."""


class InternalMismatch(BugTrap):
    """Two independent conductor algorithms disagreed."""


class NonIntegralExponent(BugTrap):
    """A discriminant exponent failed to be an integer."""


class NonIntegral(BugTrap):
    """An exact division required by a formula was not exact."""


class ViolationFound(BugTrap):
    """Data contradicts a guarantee the certificates rely on."""


class NotSquarefree(AbelianCFTError):
    """Input integer was required to be squarefree."""


class NotFundamental(AbelianCFTError):
    """Input is not a fundamental discriminant in the required range."""


class BadP(AbelianCFTError):
    """Prime argument fails the congruence/primality preconditions."""


class ShapeNotRecognized(AbelianCFTError):
    """Field does not match any shape the decision rule covers."""


class HypothesisFail(AbelianCFTError):
    """Field is outside the hypotheses of the requested decision rule."""


class DegreeMismatch(AbelianCFTError):
    """Field degree does not match the rule's required degree."""


class TowerInconsistent(AbelianCFTError):
    """Supplied tower degrees are incompatible with phi(m)."""


class SurveyInvariantViolation(BugTrap):
    """A survey row violated a rowwise hard assertion."""
