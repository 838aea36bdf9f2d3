"""Word algebra over the two-letter ordered alphabet {a < b}.

Words are plain Python strings over the letters 'a' and 'b'.  Strings are
immutable, hashable, and compare lexicographically with exactly the order
we need ('a' < 'b'), so no wrapper type is introduced.  All operations are
pure functions.
"""

from .errors import EmptyPattern, EmptyWord, InvalidWord, LengthMismatch

ALPHABET = "ab"

Word = str


def validate_word(w: str) -> str:
    """Return w unchanged if it uses only letters 'a' and 'b'."""
    if w.strip("ab"):
        raise InvalidWord(f"word must use only letters 'a' and 'b': {w!r}")
    return w


def height(w: str) -> int:
    """Number of occurrences of the letter b in w."""
    return w.count("b")


def occurrences(w: str, u: str) -> int:
    """Number of (possibly overlapping) occurrences of u as a factor of w."""
    if not u:
        raise EmptyPattern("pattern must be nonempty")
    count = 0
    pos = w.find(u)
    while pos != -1:
        count += 1
        pos = w.find(u, pos + 1)
    return count


def conjugate(w: str, i: int) -> str:
    """Rotate w by i letters: w_i w_{i+1} ... w_{i-1}, indices mod |w|."""
    if not w:
        raise EmptyWord("cannot rotate the empty word")
    i %= len(w)
    return w[i:] + w[:i]


def lex_compare(u: str, v: str) -> int:
    """Lexicographic comparison of equal-length words: -1, 0, or 1."""
    if len(u) != len(v):
        raise LengthMismatch(f"cannot compare lengths {len(u)} and {len(v)}")
    if u < v:
        return -1
    if u > v:
        return 1
    return 0


def is_primitive(w: str) -> bool:
    """True iff w is not a proper power t**h with h > 1."""
    if not w:
        raise EmptyWord("primitivity is undefined for the empty word")
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w[:d] * (n // d) == w:
            return False
    return True


def prefix_heights(w: str) -> list[int]:
    """Cumulative heights: entry i is the height of w[:i] (length |w|+1)."""
    acc = [0] * (len(w) + 1)
    h = 0
    for i, ch in enumerate(w):
        if ch == "b":
            h += 1
        acc[i + 1] = h
    return acc


def is_balanced1_circular(w: str) -> bool:
    """True iff circular factors of every length have heights spanning <= 1.

    Checks lengths 1 <= m < |w|; the heights of the n circular factors of
    each length must take at most two values differing by at most one.
    """
    if not w:
        raise EmptyWord("balance is undefined for the empty word")
    n = len(w)
    acc = prefix_heights(w + w)
    for m in range(1, n):
        lo = hi = acc[m]
        for i in range(1, n):
            h = acc[i + m] - acc[i]
            if h < lo:
                lo = h
            elif h > hi:
                hi = h
            if hi - lo >= 2:
                return False
    return True
