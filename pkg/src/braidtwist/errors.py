"""Exception hierarchy shared by every module of the package."""


class BraidError(Exception):
    """Base class for all errors raised by braidtwist."""


class InputError(BraidError, ValueError):
    """Invalid user input (bad token, bad index, bad strand count)."""


class MalformedToken(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class StrandMismatch(InputError):
    pass


class BadStrandCount(InputError):
    pass


class EmptyFactorization(InputError):
    pass


class NotSigma1Positive(BraidError):
    """The braid has no representative with a_1 and without a_1^-1."""


class NotSigma1PositiveWord(NotSigma1Positive, InputError):
    """The given *word* is not syntactically sigma_1-positive."""


class BudgetError(BraidError):
    """A resource guard tripped (word length or rewriting steps)."""


class WordTooLong(BudgetError):
    pass


class StepBudgetExceeded(BudgetError):
    pass
