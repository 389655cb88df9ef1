"""Exception hierarchy shared by every module of the package."""


class TwconjError(Exception):
    """Base class for all errors raised by twconj."""


class GroupTableError(TwconjError, ValueError):
    """A Cayley table failed validation."""


class NotClosed(GroupTableError):
    pass


class NoIdentity(GroupTableError):
    pass


class NoInverse(GroupTableError):
    pass


class NotAssociative(GroupTableError):
    def __init__(self, triple, message=None):
        self.triple = tuple(int(t) for t in triple)
        a, b, c = self.triple
        super().__init__(message or f"table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class UnknownPreset(TwconjError, ValueError):
    pass


class OrderCapExceeded(TwconjError, ValueError):
    pass


class SearchBudgetExceeded(TwconjError, RuntimeError):
    pass


class NotAHomomorphism(TwconjError, ValueError):
    def __init__(self, pair=None, message=None):
        self.pair = None if pair is None else tuple(int(p) for p in pair)
        if message is None:
            message = "map is not a homomorphism"
            if self.pair is not None:
                message += f": law fails at x={self.pair[0]}, y={self.pair[1]}"
        super().__init__(message)


class DomainMismatch(TwconjError, ValueError):
    pass


class ImagesDoNotCommute(TwconjError, ValueError):
    pass


class NotNormal(TwconjError, ValueError):
    pass


class NotInvariant(TwconjError, ValueError):
    pass


class CommutingConditionViolated(TwconjError, ValueError):
    pass


class FactorMismatch(TwconjError, ValueError):
    pass


class FactorsNotIdentical(TwconjError, ValueError):
    pass


class NotAutomorphism(TwconjError, ValueError):
    pass


class HypothesisViolated(TwconjError, ValueError):
    pass
