"""Domain errors raised by the construction and decoding pipeline."""


class HypcodeError(Exception):
    """Base class; `name` is the stable identifier used by the CLI."""

    name = "ERROR"


class EnumerationOverflow(HypcodeError):
    """Coset enumeration needed more live cosets than allowed (the quotient
    may be infinite; the two cases are not distinguishable)."""

    name = "ENUMERATION_OVERFLOW"


class DegenerateQuotient(HypcodeError):
    """The quotient is not a proper cell complex (collapsed faces, edges or
    vertices, or an edge folding back onto a single face/vertex)."""

    name = "DEGENERATE_QUOTIENT"


class NoNontrivialCycle(HypcodeError):
    """Distance is undefined because the code encodes no qubits."""

    name = "NO_NONTRIVIAL_CYCLE"


class BudgetExceeded(HypcodeError):
    """Brute-force enumeration would exceed the configured work budget."""

    name = "BUDGET_EXCEEDED"


class OddSyndrome(HypcodeError):
    """A matching problem was built with an odd number of nodes."""

    name = "ODD_SYNDROME"


class OpenSyndrome(HypcodeError):
    """Success check called on a pair of chains that do not close up."""

    name = "OPEN_SYNDROME"


class RegionTooShort(HypcodeError):
    """A boundary region has fewer than 2 edges."""

    name = "REGION_TOO_SHORT"
