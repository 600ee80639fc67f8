"""Exception types raised by the forest, the engine and the applications.

Every error carries its kind as the class name so the CLI can print
``ERROR line <n>: <kind>`` without a lookup table.
"""


class ForestError(Exception):
    """Base class for all user-facing errors."""

    @property
    def kind(self):
        return type(self).__name__


class UnknownEdge(ForestError):
    pass


class UnknownVertex(ForestError):
    pass


class SameTree(ForestError):
    pass


class SelfLoop(ForestError):
    pass


class NotSameTree(ForestError):
    pass


class EmptyTree(ForestError):
    pass


class EmptyPath(ForestError):
    pass


class SameVertex(ForestError):
    pass


class IsolatedVertex(ForestError):
    pass


class NonPositiveWeight(ForestError):
    pass


class OutOfRange(ForestError):
    pass


class ParseError(ForestError):
    pass


class NestedSearch(ForestError):
    """A search was started while another one is still running."""


class WrongProfile(ForestError):
    """A CLI verb that the active annotation profile does not support."""
