"""Errors raised by tensor operations."""


class ShapeError(ValueError):
    """Raised when the operands of an operation have incompatible shapes."""

    def __init__(self, op, *shapes):
        self.op = op
        self.shapes = shapes
        rendered = ', '.join(str(tuple(s)) for s in shapes)
        super(ShapeError, self).__init__(
            '{0}: incompatible shapes {1}'.format(op, rendered))


class NonFiniteError(ArithmeticError):
    """Raised when an operation produces NaN or infinite values."""

    def __init__(self, op):
        self.op = op
        super(NonFiniteError, self).__init__(
            '{0}: non-finite value in forward result'.format(op))


class LookupRangeError(IndexError):
    """Raised when a row lookup uses an id outside of the table."""
