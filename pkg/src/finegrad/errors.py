"""Exception hierarchy shared by all modules."""


class FinegradError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(FinegradError, ZeroDivisionError):
    pass


class NotHermitian(FinegradError, ValueError):
    pass


class SingularMatrix(FinegradError, ValueError):
    pass


class InvalidAntiautomorphism(FinegradError, ValueError):
    pass


class NotEigensubspace(FinegradError):
    pass


class NotAGrading(FinegradError):
    def __init__(self, j, k, message=None):
        self.pair = (j, k)
        super().__init__(message or f"bracket of parts {j} and {k} is not inside a single part")


class CollidingLabels(FinegradError):
    def __init__(self, j, k):
        self.pair = (j, k)
        super().__init__(f"parts {j} and {k} carry the same joint eigenvalues")


class PartSplitByForm(FinegradError):
    def __init__(self, j):
        self.part = j
        super().__init__(f"part {j} mixes vectors of Out_K-eigenvalue +1 and -1")


class NotInvariant(FinegradError):
    pass


class NotRealSpectrum(FinegradError):
    pass


class DimensionMismatch(FinegradError):
    pass


class MultiplierInvalid(FinegradError):
    def __init__(self, k, message=None):
        self.part = k
        super().__init__(message or f"multiplier of part {k} does not produce a fixed vector")


class NonUnitEigenvalue(FinegradError):
    pass


class CatalogCorrupt(FinegradError):
    pass


class UnknownName(FinegradError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"
