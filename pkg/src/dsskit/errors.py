"""Exception hierarchy shared by every dsskit module.

Three families matter to callers (and map to CLI exit codes):
``ValidationError`` for bad inputs or unmet preconditions, ``VerificationMismatch``
when a construction's predicted parameters disagree with the exhaustive check,
and ``BudgetExceeded`` when an operation would exceed the verification budget.
"""


class DssError(Exception):
    """Base class for all dsskit errors."""


class ValidationError(DssError):
    """Invalid input or unmet precondition."""


class VerificationMismatch(DssError):
    """A predicted parameter disagrees with the brute-force check."""


class BudgetExceeded(DssError):
    """The requested exhaustive check is larger than the configured budget."""


# -- validation family ------------------------------------------------------

class ElementOutOfRange(ValidationError):
    pass


class SetsNotDisjoint(ValidationError):
    pass


class EmptyFamily(ValidationError):
    pass


class NotRateOne(ValidationError):
    pass


class NotPrime(ValidationError):
    pass


class OrderDoesNotDivide(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class NoClaim(ValidationError):
    pass


class WrongResidueClass(ValidationError):
    pass


class NotAdmissible(ValidationError):
    pass


class IngredientNotPerfect(ValidationError):
    pass


class IngredientNotRegular(ValidationError):
    pass


class IngredientNotDF(ValidationError):
    pass


class NotSingleSet(ValidationError):
    pass


class NotDifferenceSet(ValidationError):
    pass


class AlphabetTooSmall(ValidationError):
    pass


class PayloadLengthMismatch(ValidationError):
    pass


class SymbolOutOfRange(ValidationError):
    pass


class OffsetOutOfRange(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


# -- verification mismatch family -------------------------------------------

class IndexFormulaMismatch(VerificationMismatch):
    pass


class ClaimMismatch(VerificationMismatch):
    pass
