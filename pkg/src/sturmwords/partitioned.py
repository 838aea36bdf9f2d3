"""Compositions, height profiles, varieties, and the multiplicity formula.

A composition (p_1, ..., p_k) of m splits every length-m factor into k
components; factors sharing the component heights form a variety.  For a
Christoffel word the k+1 multiplicities follow from the residues
(s_l * p) mod n of the composition's partial sums: sorted ascending as
0 = r_0 < r_1 < ... < r_k, variety l owns rows r_l .. r_{l+1}-1 of the
conjugate matrix and has multiplicity r_{l+1} - r_l (with r_{k+1} = n).
"""

from dataclasses import dataclass, field
from functools import cached_property

from .christoffel import ChristoffelParams, FactorMultiset, lower_christoffel
from .errors import BadLength, EmptyComposition, LengthMismatch, ZeroPart
from .words import height

HeightProfile = tuple[int, ...]


@dataclass(frozen=True)
class Composition:
    """Ordered partition of m into k parts, with partial sums s_0..s_k."""

    parts: tuple[int, ...]
    m: int
    k: int
    partial_sums: tuple[int, ...]


def compose(parts) -> Composition:
    """Build a Composition from a sequence of positive integers."""
    parts = tuple(parts)
    if not parts:
        raise EmptyComposition("composition needs at least one part")
    if any(p < 1 for p in parts):
        raise ZeroPart(f"all parts must be >= 1: {parts}")
    sums = [0]
    for p in parts:
        sums.append(sums[-1] + p)
    return Composition(parts=parts, m=sums[-1], k=len(parts), partial_sums=tuple(sums))


def height_profile(w: str, comp: Composition) -> HeightProfile:
    """Component heights of w split at the composition's partial sums."""
    if len(w) != comp.m:
        raise LengthMismatch(f"|w|={len(w)} but composition sums to {comp.m}")
    s = comp.partial_sums
    return tuple(height(w[s[i] : s[i + 1]]) for i in range(comp.k))


@dataclass(frozen=True)
class PartitionedFactor:
    """A length-m word split into k components, written (u_1)(u_2)...(u_k)."""

    word: str
    comp: Composition

    @cached_property
    def components(self) -> tuple[str, ...]:
        s = self.comp.partial_sums
        return tuple(self.word[s[i] : s[i + 1]] for i in range(self.comp.k))

    @property
    def profile(self) -> HeightProfile:
        return tuple(height(c) for c in self.components)

    def __str__(self) -> str:
        return "".join(f"({c})" for c in self.components)


def partition_factor(w: str, comp: Composition) -> PartitionedFactor:
    """Split w into the components prescribed by comp."""
    if len(w) != comp.m:
        raise LengthMismatch(f"|w|={len(w)} but composition sums to {comp.m}")
    return PartitionedFactor(word=w, comp=comp)


@dataclass(frozen=True)
class VarietyEntry:
    """One variety: its profile, multiplicity, and least member factor."""

    profile: HeightProfile
    multiplicity: int
    representative: str
    first_row: int | None = None


@dataclass(frozen=True)
class VarietyTable:
    """Varieties in first-appearance order with their multiplicities."""

    comp: Composition
    entries: tuple[VarietyEntry, ...]
    total: int
    residues: tuple[int, ...] | None = field(default=None, compare=False)

    def signature(self) -> tuple:
        """(profile, multiplicity, representative) triples, order-sensitive."""
        return tuple((e.profile, e.multiplicity, e.representative) for e in self.entries)

    @property
    def profiles(self) -> tuple[HeightProfile, ...]:
        return tuple(e.profile for e in self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(e.multiplicity for e in self.entries)


def classify_varieties(fs: FactorMultiset, comp: Composition) -> VarietyTable:
    """Group a factor multiset by height profile (brute-force route).

    Entries are ordered by the lexicographically least factor of each
    variety, which for Christoffel conjugates coincides with the order of
    first appearance in the conjugate matrix.
    """
    if fs.length != comp.m:
        raise LengthMismatch(f"factors have length {fs.length}, composition sums to {comp.m}")
    groups: dict[HeightProfile, list] = {}
    for factor, count in fs.counts.items():  # lexicographic factor order
        profile = height_profile(factor, comp)
        if profile in groups:
            groups[profile][0] += count
        else:
            groups[profile] = [count, factor]
    entries = tuple(
        VarietyEntry(profile=prof, multiplicity=count, representative=rep)
        for prof, (count, rep) in groups.items()
    )
    return VarietyTable(comp=comp, entries=entries, total=fs.origin)


def multiplicities_formula(params: ChristoffelParams, comp: Composition) -> VarietyTable:
    """Closed-form variety multiplicities for a Christoffel word.

    Solves i = s_l * p (mod n) for the k+1 partial sums, sorts the
    residues, and reads each variety's profile off the length-m prefix of
    its first conjugate-matrix row (row r starts at letter (r * q_star)
    mod n of the lower Christoffel word).
    """
    n = params.n
    m = comp.m
    if m >= n:
        raise BadLength(f"need m < n; got m={m}, n={n}")
    doubled = lower_christoffel(params.p, params.q) * 2
    residues = sorted((s * params.p) % n for s in comp.partial_sums)
    entries = []
    for idx, r in enumerate(residues):
        nxt = residues[idx + 1] if idx + 1 < len(residues) else n
        start = (r * params.q_star) % n
        rep = doubled[start : start + m]
        entries.append(
            VarietyEntry(
                profile=height_profile(rep, comp),
                multiplicity=nxt - r,
                representative=rep,
                first_row=r,
            )
        )
    return VarietyTable(comp=comp, entries=tuple(entries), total=n, residues=tuple(residues))


def variety_count(w: str, m: int, comp: Composition) -> int:
    """Number of distinct height profiles among circular factors of w."""
    from .christoffel import circular_factors

    return len(classify_varieties(circular_factors(w, m), comp).entries)
