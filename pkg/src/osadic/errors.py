"""Exception types shared across the toolkit.

Input problems (bad files, broken circuit axioms, mismatched ground sets)
raise subclasses of InputError.  Resource caps raise GroundTooLargeError so
callers can distinguish "refuse to materialize a powerset" from "bad data".
"""


class InputError(ValueError):
    """Malformed or inconsistent input."""


class GroundTooLargeError(InputError):
    """Ground set exceeds the configured element cap."""

    def __init__(self, n, cap):
        super().__init__(f"ground set has {n} elements, cap is {cap}")
        self.n = n
        self.cap = cap


class GroundMismatchError(InputError):
    """Two objects built over different ground sets were combined."""


class CircuitAxiomError(InputError):
    """A raw circuit collection violates one of the circuit axioms."""


class EmptyCircuitError(CircuitAxiomError):
    def __init__(self):
        super().__init__("the empty set may not be a circuit")


class NotSimpleError(CircuitAxiomError):
    """A circuit of one or two elements: the matroid would not be simple."""

    def __init__(self, circuit):
        from .bitsets import format_word
        super().__init__(f"circuit {format_word(circuit)} has fewer than 3 elements")
        self.circuit = circuit


class ComparablePairError(CircuitAxiomError):
    """One circuit contains another."""

    def __init__(self, inner, outer):
        from .bitsets import format_word
        super().__init__(
            f"circuit {format_word(inner)} is contained in circuit {format_word(outer)}")
        self.inner = inner
        self.outer = outer


class EliminationFailureError(CircuitAxiomError):
    """No circuit inside (C1 u C2) \\ e for a shared element e."""

    def __init__(self, c1, c2, element):
        from .bitsets import format_word
        super().__init__(
            f"no circuit inside ({format_word(c1)} u {format_word(c2)}) \\ {element}")
        self.c1 = c1
        self.c2 = c2
        self.element = element


class NotACircuitError(InputError):
    """An operation expected a circuit of the given family."""


class NotHomogeneousError(InputError):
    """An exterior element mixes degrees where a single degree is required."""


class ParseError(InputError):
    """A text instance file failed to parse; message carries the line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
