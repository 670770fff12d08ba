"""Exception classes.  The CLI maps InvalidOperand (and subclasses) to exit
code 2 and InternalInconsistency to exit code 3."""


class InvalidOperand(ValueError):
    pass


class UndefinedValuation(InvalidOperand):
    pass


class NonInvertibleSeries(InvalidOperand):
    pass


class DegreeMismatch(InvalidOperand):
    pass


class InconsistentPointIndex(InvalidOperand):
    pass


class NotApplicable(InvalidOperand):
    pass


class InternalInconsistency(RuntimeError):
    """A computed quantity contradicts a proven identity.  Always a bug."""
