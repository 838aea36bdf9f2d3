"""Christoffel words, circular factor multisets, and the conjugate matrix.

The lower Christoffel word for coprime (p, q) has p letters a and q
letters b; letter i is a exactly when floor((i+1)q/n) - floor(iq/n) = 0
with n = p + q.  This is the same floor-difference rule that generates
mechanical words, which keeps the finite and infinite halves of the
package consistent by construction.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import BadLength, NotChristoffel, NotCoprime, NotPrimitive, WordTooShort
from .words import conjugate, is_balanced1_circular, is_primitive


@dataclass(frozen=True)
class ChristoffelParams:
    """Slope data (p, q) together with the inverses of p and q mod n."""

    p: int
    q: int
    n: int
    p_star: int
    q_star: int


def make_params(p: int, q: int) -> ChristoffelParams:
    """Build ChristoffelParams for coprime p, q >= 1."""
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NotCoprime(f"need positive coprime p, q; got ({p}, {q})")
    n = p + q
    return ChristoffelParams(p=p, q=q, n=n, p_star=pow(p, -1, n), q_star=pow(q, -1, n))


def lower_christoffel(p: int, q: int) -> str:
    """Lower Christoffel word with p letters a and q letters b."""
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NotCoprime(f"need positive coprime p, q; got ({p}, {q})")
    n = p + q
    return "".join(
        "a" if (i + 1) * q // n - i * q // n == 0 else "b" for i in range(n)
    )


def upper_christoffel(p: int, q: int) -> str:
    """Upper Christoffel word b·u·a, the mirror of the lower word a·u·b."""
    w = lower_christoffel(p, q)
    return "b" + w[1:-1] + "a"


@dataclass(frozen=True)
class FactorMultiset:
    """The n circular factors of length m of a word of length n.

    `items` lists the factors by starting position, so the total
    multiplicity is always n.
    """

    length: int
    origin: int
    items: tuple[str, ...]

    @cached_property
    def counts(self) -> dict[str, int]:
        """Multiplicity per distinct factor, keys in lexicographic order."""
        raw: dict[str, int] = {}
        for f in self.items:
            raw[f] = raw.get(f, 0) + 1
        return {f: raw[f] for f in sorted(raw)}


def circular_factors(w: str, m: int) -> FactorMultiset:
    """Multiset of the n circular factors of length m (factors of w^2)."""
    n = len(w)
    if not 1 <= m < n:
        raise BadLength(f"need 1 <= m < |w|; got m={m}, |w|={n}")
    doubled = w + w
    return FactorMultiset(
        length=m,
        origin=n,
        items=tuple(doubled[i : i + m] for i in range(n)),
    )


@dataclass(frozen=True)
class BwtMatrix:
    """The n conjugates of a primitive word in lexicographic order."""

    source: str
    rows: tuple[str, ...]


def bwt_matrix(w: str) -> BwtMatrix:
    """Sort all conjugates of a primitive word; rows are strictly increasing."""
    if not w:
        raise NotPrimitive("the empty word has no conjugates")
    if not is_primitive(w):
        raise NotPrimitive(f"word is a proper power: {w!r}")
    doubled = w + w
    n = len(w)
    rows = tuple(sorted(doubled[i : i + n] for i in range(n)))
    return BwtMatrix(source=w, rows=rows)


def is_christoffel_conjugate(w: str) -> bool:
    """True iff w is primitive and circularly balanced (|w| >= 2)."""
    if len(w) < 2:
        raise WordTooShort(f"need |w| >= 2; got {w!r}")
    return is_primitive(w) and is_balanced1_circular(w)


def verify_isc(w: str) -> bool:
    """Check the adjacent-row structure of the conjugate matrix.

    For each i in 1..n-1, rows i-1 and i must agree everywhere except an
    ab -> ba swap at columns (i*p_star - 1) mod n and (i*p_star) mod n,
    and row i must equal row 0 rotated by (i*q_star) mod n.
    """
    if len(w) < 2 or not is_christoffel_conjugate(w):
        raise NotChristoffel(f"not a Christoffel conjugate: {w!r}")
    n = len(w)
    q = w.count("b")
    p = n - q
    p_star = pow(p, -1, n)
    q_star = pow(q, -1, n)
    rows = bwt_matrix(w).rows
    for i in range(1, n):
        col = (i * p_star) % n
        prev, cur = rows[i - 1], rows[i]
        if prev[col - 1 : col + 1] != "ab" or cur[col - 1 : col + 1] != "ba":
            return False
        if cur != prev[: col - 1] + "ba" + prev[col + 1 :]:
            return False
        if cur != conjugate(rows[0], (i * q_star) % n):
            return False
    return True
