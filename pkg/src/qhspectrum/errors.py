"""Exception hierarchy.

Input problems derive from :class:`InputError`, geometric obstructions from
:class:`NonIsolatedSingularity`, and broken internal consistency (which
means the engine is wrong, not the input) from :class:`InternalInvariantError`.
"""


class QHSpectrumError(Exception):
    pass


class InputError(QHSpectrumError, ValueError):
    """Bad user input: syntax, variables, weights."""


class PolySyntaxError(InputError):
    def __init__(self, message, position, expected=(), text=None):
        self.position = position
        self.expected = tuple(expected)
        self.text = text
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownVariable(InputError):
    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")


class VariableMismatch(InputError):
    pass


class LengthMismatch(InputError):
    pass


class NotQuasiHomogeneous(InputError):
    def __init__(self, message, monomial=None, degree=None):
        self.monomial = monomial
        self.degree = degree
        super().__init__(message)


class ConstantTerm(InputError):
    pass


class AmbiguousWeights(InputError):
    pass


class ZeroIdeal(InputError):
    pass


class NonZeroDimensional(QHSpectrumError):
    """The quotient by the ideal is infinite-dimensional."""

    def __init__(self, missing, names=None):
        self.missing = tuple(missing)
        self.names = tuple(names) if names is not None else tuple(f"x{i}" for i in missing)
        super().__init__("no pure power of " + ", ".join(self.names))


class NonIsolatedSingularity(NonZeroDimensional):
    def __str__(self):
        return "non-isolated: no pure power of " + ", ".join(self.names)


class SmoothPoint(QHSpectrumError):
    """mu = 0: the origin is not a singular point."""


class InternalInvariantError(QHSpectrumError):
    """A theorem-level invariant failed; the implementation is at fault."""


class SymmetryViolation(InternalInvariantError):
    pass


class MassViolation(InternalInvariantError):
    pass


class SpectrumRangeViolation(InternalInvariantError):
    pass


class MilnorOrlikMismatch(InternalInvariantError):
    pass
