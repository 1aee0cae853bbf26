"""Exception types shared across the package.

Bound violations are first-class: any decision procedure that gives up
because a configured bound was hit raises a ``BoundExceeded`` subclass
instead of returning a boolean.  The CLI surfaces these as UNDECIDED.
"""


class HomliftError(Exception):
    pass


class FlavorError(HomliftError, ValueError):
    """A relation or operation violates the axioms of its flavor."""


class OrdAntisymmetryError(FlavorError):
    """An ord-flavored construction would have to identify distinct elements."""


class ValidationError(HomliftError, ValueError):
    """A map, functor or transformation fails its structural laws."""


class UnsupportedReflection(HomliftError, ValueError):
    pass


class BoundExceeded(HomliftError, RuntimeError):
    """A configured search bound was hit before the question was decided."""

    def __init__(self, bound_name: str, bound_value, context: str = ""):
        self.bound_name = bound_name
        self.bound_value = bound_value
        self.context = context
        msg = f"bound {bound_name}={bound_value} exceeded"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class SquareCapExceeded(BoundExceeded):
    pass


class CellLimitExceeded(BoundExceeded):
    pass


class SizeGuardExceeded(BoundExceeded):
    pass


class EnumerationCapExceeded(BoundExceeded):
    pass


class PushoutUnstable(BoundExceeded):
    """A category pushout did not stabilize within the word-length bound.

    The pushout may genuinely be infinite; the result is reported as
    undecided, never silently truncated.
    """
