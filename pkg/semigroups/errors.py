"""
Exceptions raised by the semigroups package.

Every exception derives from SemigroupError and keeps the values that
triggered it as attributes, so the command layer can report them.
"""

from typing import Any, Dict


class SemigroupError(Exception):
    """Base class for all semigroup errors."""


class EmptyInput(SemigroupError):
    """No generators were given."""

    def __init__(self):
        super().__init__("generator list is empty")


class InvalidGenerator(SemigroupError):
    """A generator is not a positive integer."""

    def __init__(self, value: Any):
        self.value = value
        super().__init__(f"generators must be positive integers, got {value!r}")


class GcdNotOne(SemigroupError):
    """The generators have a common divisor, so the complement is infinite."""

    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"gcd of generators is {gcd}, not 1")


class NotASemigroup(SemigroupError):
    """A gap set whose complement is not closed under addition."""

    def __init__(self, x: int, y: int, reason: str = None):
        self.x = x
        self.y = y
        super().__init__(reason or f"{x} and {y} are in the complement but {x + y} is a gap")


class FullSemigroup(SemigroupError):
    """The operation is undefined for the full set of nonnegative integers."""

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation} is undefined for N (no gaps)")


class CapacityExceeded(SemigroupError):
    """A membership table would exceed the configured capacity."""

    def __init__(self, required: int, capacity: int, what: str = "table size"):
        self.required = required
        self.capacity = capacity
        super().__init__(f"{what} {required} exceeds capacity {capacity}")


class CapExceeded(SemigroupError):
    """Oversemigroup enumeration stopped at its member cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"enumeration exceeded cap {cap} ({count} members found); use bounds instead")


class NotAGap(SemigroupError):
    """The value is an element of the semigroup."""

    def __init__(self, x: int):
        self.x = x
        super().__init__(f"{x} is not a gap")


class NotBpfElement(SemigroupError):
    """The value is not a big pseudo-Frobenius number."""

    def __init__(self, a: int):
        self.a = a
        super().__init__(f"{a} is not in BPF(S)")


class HypothesisViolated(SemigroupError):
    """Family parameters break a construction hypothesis."""

    def __init__(self, hypothesis: str, values: Dict[str, Any]):
        self.hypothesis = hypothesis
        self.values = values
        shown = ", ".join(f"{key}={value}" for key, value in values.items())
        super().__init__(f"hypothesis '{hypothesis}' violated ({shown})")


class InternalVerificationFailed(SemigroupError):
    """A computed result failed its own certificate check."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"internal verification failed: {reason}")
