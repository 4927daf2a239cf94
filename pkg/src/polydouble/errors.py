"""Structured exception types shared across the package.

Every error raised on invalid input derives from PolytopeError so that
callers (in particular the command line driver) can separate "the input
is bad" from genuine bugs.
"""


class PolytopeError(Exception):
    """Base class for all input-validation and budget errors."""


class ValidationError(PolytopeError):
    """A value does not satisfy the well-formedness rules of its type."""


# -- simplicial complexes -----------------------------------------------

class NotPure(PolytopeError):
    """A maximal face has the wrong number of vertices."""


class NotPseudomanifold(PolytopeError):
    """Some ridge is not contained in exactly two maximal faces."""


class Disconnected(PolytopeError):
    """The facet adjacency graph is not connected."""


class NotAFace(PolytopeError):
    """The given vertex set is not a face of the complex."""


class SizeMismatch(PolytopeError):
    """Relabeling map does not match the vertex sets involved."""


# -- bivariate polynomials ----------------------------------------------

class DegreeExceedsM(PolytopeError):
    """Operator applied to a polynomial of degree larger than m."""


class DegreeMismatch(PolytopeError):
    """Polynomial is not homogeneous of the stated degree, or m < n."""


# -- exact geometry ------------------------------------------------------

class Unbounded(PolytopeError):
    """The inequality system has a nontrivial recession cone."""


class Empty(PolytopeError):
    """The inequality system has no solutions."""


class NotSimple(PolytopeError):
    """Some vertex is tight on more inequalities than the dimension."""


class RedundantRow(PolytopeError):
    """An inequality does not support a facet."""

    def __init__(self, row: int, message: str | None = None):
        self.row = row
        super().__init__(message or f"inequality {row} does not support a facet")


class RankDeficient(PolytopeError):
    """Coefficient matrix does not have full column rank."""


class Infeasible(PolytopeError):
    """No basic feasible solution exists."""


# -- budgets and parsing --------------------------------------------------

class BudgetExceeded(PolytopeError):
    """The requested computation is above the configured size budget."""


class ParseError(PolytopeError):
    """A spec expression or text payload could not be parsed."""
