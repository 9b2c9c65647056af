"""Exception hierarchy shared by all kneserdisc modules."""


class KneserDiscError(Exception):
    """Base class for all library errors."""


class UsageError(KneserDiscError):
    """Invalid arguments: mismatched universes, bad parameters, wrong input."""


class CapacityError(KneserDiscError):
    """Requested computation exceeds the configured enumeration guard."""


class UnsupportedOrderError(UsageError):
    """No catalogued Hadamard construction exists for the requested order."""


class CertificationError(KneserDiscError):
    """A matrix failed the exact orthogonality check required here."""


class ParseError(KneserDiscError):
    """Malformed text input; carries the 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UncolorableVertexError(KneserDiscError):
    """A vertex matched no color class, witnessing a failed discrepancy
    precondition.  Carries the offending vertex."""

    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} matches no color class; the "
                         f"discrepancy precondition does not hold")
        self.vertex = vertex
