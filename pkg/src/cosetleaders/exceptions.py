"""Exception hierarchy shared by every module of the package."""


class CosetLeadersError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class NotPrime(CosetLeadersError, ValueError):
    pass


class NotIrreducible(CosetLeadersError, ValueError):
    pass


class DegreeMismatch(CosetLeadersError, ValueError):
    pass


class LengthMismatch(CosetLeadersError, ValueError):
    pass


class SpecMismatch(CosetLeadersError, ValueError):
    """Operands belong to different fields or have different lengths."""


class RankDeficient(CosetLeadersError, ValueError):
    pass


class ZeroCodeword(CosetLeadersError, ValueError):
    pass


class ParseError(CosetLeadersError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class TooLarge(CosetLeadersError):
    """An exhaustive enumeration would exceed the configured cap."""

    exit_code = 3

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} needs {size} items, cap is {cap}")


class VerificationFailure(CosetLeadersError):
    exit_code = 4


class InternalInconsistency(VerificationFailure):
    pass


class NotReducible(VerificationFailure):
    """Descent stalled outside D(0); carries the stalled word as witness."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"no test-set element reduces the weight of {list(witness)}")


class NotTrialSet(VerificationFailure):
    pass
