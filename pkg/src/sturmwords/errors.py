"""Exception hierarchy shared by all modules."""


class SturmwordsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidWord(SturmwordsError):
    """Input string contains letters outside the alphabet {a, b}."""


class EmptyWord(SturmwordsError):
    """Operation requires a nonempty word."""


class EmptyPattern(SturmwordsError):
    """Occurrence counting requires a nonempty pattern."""


class LengthMismatch(SturmwordsError):
    """Operands must have matching lengths."""


class NotCoprime(SturmwordsError):
    """Christoffel parameters require positive coprime (p, q)."""


class NotPrimitive(SturmwordsError):
    """Operation requires a primitive word."""


class NotChristoffel(SturmwordsError):
    """Operation requires a conjugate of a Christoffel word."""


class WordTooShort(SturmwordsError):
    """Word is shorter than the operation allows."""


class BadLength(SturmwordsError):
    """Factor length m is out of range for the given word."""


class ZeroPart(SturmwordsError):
    """Composition parts must all be >= 1."""


class EmptyComposition(SturmwordsError):
    """Composition must have at least one part."""


class PrecisionExhausted(SturmwordsError):
    """A certified decision could not be made at the precision cap."""


class DegenerateSlope(SturmwordsError):
    """Rotation points collide: the slope behaves rationally."""


class ConsistencyError(SturmwordsError):
    """Two routes that must agree produced different results (internal)."""
