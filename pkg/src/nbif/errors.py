"""Exception hierarchy shared by all modules."""


class NbifError(Exception):
    """Base class for every error raised by nbif."""


class ZeroPolynomial(NbifError, ValueError):
    pass


class ConstantPolynomial(NbifError, ValueError):
    pass


class DegenerateInput(NbifError, ValueError):
    pass


class InvalidCovector(NbifError, ValueError):
    pass


class NonPositiveCovector(InvalidCovector):
    pass


class NotBadFace(NbifError, ValueError):
    pass


class BadFaceNotAllowed(NbifError, ValueError):
    pass


class WrongFaceClass(NbifError, ValueError):
    pass


class MorseViolation(NbifError):
    """A bad face whose profile has a degenerate non-zero critical point."""

    def __init__(self, faces):
        self.faces = list(faces)
        covs = ", ".join(str(f.P) for f in self.faces)
        super().__init__(f"bad face function is not Morse on R\\{{0}}: {covs}")


class HypothesisViolated(NbifError):
    """The input fails the non-degeneracy / Morse hypotheses.

    ``verdict`` carries the offending faces so callers can fall back to the
    upper bound.
    """

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"hypotheses violated: {verdict.summary()}")


class NonIsolatedSingularities(NbifError):
    pass


class NotDoubleRoot(NbifError, ValueError):
    pass


class ParseError(NbifError, ValueError):
    """Syntax error in a polynomial expression.

    ``offset`` is the byte offset of the offending token, ``expected`` the set
    of token kinds that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = ""
        if self.expected:
            detail = "; expected one of: " + ", ".join(sorted(self.expected))
        super().__init__(f"{message} at offset {offset}{detail}")


class NegativeExponent(ParseError):
    pass
