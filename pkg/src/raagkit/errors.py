"""Exceptions shared across the package."""


class RaagError(Exception):
    """Base class for all errors raised by raagkit."""


# -- graphs ------------------------------------------------------------------

class InvalidVertexName(RaagError):
    pass


class DuplicateVertex(RaagError):
    pass


class UnknownEndpoint(RaagError):
    pass


class ExplicitSelfLoop(RaagError):
    pass


class UnknownVertex(RaagError):
    pass


class NotAHom(RaagError):
    """A vertex map fails to be a graph homomorphism.

    Carries the first offending edge as ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MismatchedEnds(RaagError):
    pass


class SearchSpaceTooLarge(RaagError):
    pass


# -- words -------------------------------------------------------------------

class WordSyntaxError(RaagError):
    pass


class UnknownGenerator(RaagError):
    pass


class ZeroExponent(RaagError):
    pass


class GraphMismatch(RaagError):
    pass


# -- group homs / symbol words ----------------------------------------------

class NotAHomomorphism(RaagError):
    """A generator-image map fails to preserve a defining relation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BaseMismatch(RaagError):
    pass


class EndsMismatch(RaagError):
    pass


class IdentitySymbolWarning(UserWarning):
    """A symbol word uses the group identity as a symbol."""


# -- coalgebras / recovery ---------------------------------------------------

class NotACoalgebra(RaagError):
    pass


class BudgetExhausted(RaagError):
    """An enumeration budget ran out before the goal was met.

    ``found`` and ``wanted`` record how far the search got; exhaustion is not
    evidence of nonexistence.
    """

    def __init__(self, message, found=0, wanted=0):
        super().__init__(message)
        self.found = found
        self.wanted = wanted
