"""Mechanical words and rotation-interval encodings of their factors.

The word of slope theta reads letter n as b exactly when the fractional
part {n*theta} lands in I_b = [1-theta, 1), equivalently when
floor((n+1)*theta) - floor(n*theta) = 1 (offset rho = 0 throughout).

Factors of length m correspond to the m+1 subintervals of [0, 1) cut by
the points {-j*theta}, j = 0..m; sorting the points gives the factors in
lexicographic order and the interval lengths are the factor frequencies.
Merging at the partial sums of a composition gives the k+1 varieties of
partitioned factors and their frequencies.

Every floor and every point comparison is certified: it must hold by a
margin exceeding the accumulated error bound of the slope approximation,
else the slope is refined (see slopes.certified).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadLength, ConsistencyError, DegenerateSlope
from .partitioned import Composition, HeightProfile, height_profile
from .slopes import UNCERTAIN, SlopeValue, certified
from .words import prefix_heights


def _rational_prefix(theta: Fraction, n_letters: int) -> str:
    num, den = theta.numerator, theta.denominator
    out = []
    prev = 0
    for i in range(1, n_letters + 1):
        cur = num * i // den
        out.append("b" if cur > prev else "a")
        prev = cur
    return "".join(out)


@dataclass(frozen=True)
class RotationEncoding:
    """Letter coding by rotation: {n*theta} in I_a = [0, 1-theta) reads a,
    in I_b = [1-theta, 1) reads b.

    Classification is certified: a point must clear the boundary by more
    than the slope's error bound, else the slope is refined.
    """

    theta: SlopeValue

    def boundary(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """(approximation of 1 - theta, error bound)."""
        mid, err = self.theta.approx(bits)
        return 1 - mid, err

    def classify(self, x: Fraction, *, cap_bits: int | None = None) -> str:
        """Certified letter of an exactly-known point x in [0, 1)."""
        x = Fraction(x) % 1

        def decide(mid, err):
            boundary = 1 - mid
            if abs(x - boundary) <= err:
                if err == 0:
                    return "b" if x >= boundary else "a"
                return UNCERTAIN
            return "b" if x >= boundary else "a"

        return certified(self.theta, decide, cap_bits=cap_bits)

    def orbit_letter(self, n: int, *, cap_bits: int | None = None) -> str:
        """Certified letter of R^n(0) = {n*theta}; n may be negative."""
        if self.theta.kind == "rational":
            t = self.theta.rational
            return "b" if math.floor((n + 1) * t) - math.floor(n * t) else "a"

        def decide(mid, err):
            floors = []
            for i in (n, n + 1):
                z = i * mid
                e = abs(i) * err
                f_lo = math.floor(z - e)
                f_hi = math.floor(z + e)
                if f_lo != f_hi:
                    return UNCERTAIN
                floors.append(f_lo)
            return "b" if floors[1] > floors[0] else "a"

        return certified(self.theta, decide, cap_bits=cap_bits)


def mechanical_prefix(theta: SlopeValue, n_letters: int, *, cap_bits: int | None = None) -> str:
    """First n_letters letters of the mechanical word of slope theta."""
    if n_letters < 1:
        raise BadLength(f"need at least one letter; got {n_letters}")
    if theta.kind == "rational":
        return _rational_prefix(theta.rational, n_letters)

    def decide(mid, err):
        # rescale to a fine power-of-two grid so quantization stays far
        # below the slope's own error bound
        s_bits = max(64, (err.denominator // err.numerator).bit_length() + 8)
        den = 1 << s_bits
        num = round(mid * den)
        err_num = -(-err.numerator * den // err.denominator) + 1  # ceil + quantization
        floors = [0] * (n_letters + 1)
        t = 0
        for i in range(1, n_letters + 1):
            t += num
            margin = i * err_num
            f_lo = (t - margin) >> s_bits
            f_hi = (t + margin) >> s_bits
            if f_lo != f_hi:
                return UNCERTAIN
            floors[i] = f_lo
        return "".join(
            "b" if floors[i + 1] > floors[i] else "a" for i in range(n_letters)
        )

    return certified(theta, decide, cap_bits=cap_bits)


@dataclass(frozen=True)
class FactorIntervalTable:
    """Sorted rotation points, the factor each subinterval encodes, lengths.

    points[g] is the left endpoint of subinterval g, orders[g] the j with
    points[g] = {-j*theta}, factors[g] the factor encoded by the interval
    [points[g], points[g+1]) (right endpoint 1 for the last).  `err`
    bounds the distance of every stored point and length from its true
    value.
    """

    m: int
    theta: SlopeValue
    points: tuple[Fraction, ...]
    orders: tuple[int, ...]
    factors: tuple[str, ...]
    lengths: tuple[Fraction, ...]
    err: Fraction


def factor_interval_table(theta: SlopeValue, m: int, *, cap_bits: int | None = None) -> FactorIntervalTable:
    """Certified factor/interval correspondence for factors of length m."""
    if m < 1:
        raise BadLength(f"need m >= 1; got {m}")
    if not theta.irrational:
        raise DegenerateSlope(
            "factor intervals need an irrational slope (rational slopes "
            "collapse rotation points)"
        )

    def decide(mid, err):
        pts = [(-j * mid) % 1 for j in range(m + 1)]
        errs = [j * err for j in range(m + 1)]
        for j in range(1, m + 1):
            if pts[j] == 0 and err == 0:
                raise DegenerateSlope(f"point -{j}*theta collides with 0 exactly")
            if not errs[j] < pts[j] < 1 - errs[j]:
                return UNCERTAIN
        for i in range(m + 1):
            for j in range(i + 1, m + 1):
                d = abs(pts[i] - pts[j])
                if d == 0 and err == 0:
                    raise DegenerateSlope(f"points -{i}*theta and -{j}*theta collide")
                # margin 2x: keeps sort order AND interval midpoints certified
                if d <= 2 * (errs[i] + errs[j]):
                    return UNCERTAIN
        order = sorted(zip(pts, range(m + 1)))
        factors = []
        for g in range(m + 1):
            left = order[g][0]
            right = order[g + 1][0] if g < m else Fraction(1)
            x = (left + right) / 2
            floors = []
            z = x
            for i in range(m + 1):
                f_lo = math.floor(z - errs[i])
                f_hi = math.floor(z + errs[i])
                if f_lo != f_hi:
                    return UNCERTAIN
                floors.append(f_lo)
                z += mid
            factors.append(
                "".join("b" if floors[i + 1] > floors[i] else "a" for i in range(m))
            )
        if any(factors[g] >= factors[g + 1] for g in range(m)):
            raise ConsistencyError(
                "reconstructed factors are not strictly increasing"
            )
        points = tuple(p for p, _ in order)
        lengths = tuple(
            (order[g + 1][0] if g < m else Fraction(1)) - order[g][0]
            for g in range(m + 1)
        )
        return FactorIntervalTable(
            m=m,
            theta=theta,
            points=points,
            orders=tuple(j for _, j in order),
            factors=tuple(factors),
            lengths=lengths,
            err=2 * m * err,
        )

    return certified(theta, decide, cap_bits=cap_bits, exhausted=DegenerateSlope)


def factor_frequencies(theta: SlopeValue, m: int, *, cap_bits: int | None = None) -> dict[str, Fraction]:
    """Frequency of each length-m factor (keys in lexicographic order)."""
    table = factor_interval_table(theta, m, cap_bits=cap_bits)
    return dict(zip(table.factors, table.lengths))


@dataclass(frozen=True)
class FrequencyEntry:
    """One variety: profile, member factors, frequency (interval length)."""

    profile: HeightProfile
    frequency: Fraction
    members: tuple[str, ...]


@dataclass(frozen=True)
class FrequencyTable:
    """Variety frequencies; `points` are the merged interval endpoints.

    Exact tables carry the k+1 points {-s_l*theta} and a certified error
    bound; empirical tables (window counts over a finite prefix) have
    points=None and err=None.
    """

    comp: Composition
    entries: tuple[FrequencyEntry, ...]
    points: tuple[Fraction, ...] | None
    err: Fraction | None

    def by_profile(self) -> dict[HeightProfile, FrequencyEntry]:
        return {e.profile: e for e in self.entries}


def partitioned_frequencies(theta: SlopeValue, comp: Composition, *, cap_bits: int | None = None) -> FrequencyTable:
    """Exact variety frequencies from the merged rotation intervals."""
    table = factor_interval_table(theta, comp.m, cap_bits=cap_bits)
    boundary_labels = set(comp.partial_sums)
    cut_positions = [g for g, j in enumerate(table.orders) if j in boundary_labels]
    if cut_positions[0] != 0 or len(cut_positions) != comp.k + 1:
        raise ConsistencyError("partition points do not embed in the factor points")
    entries = []
    total = len(table.factors)
    for t, g_start in enumerate(cut_positions):
        g_end = cut_positions[t + 1] if t + 1 < len(cut_positions) else total
        members = table.factors[g_start:g_end]
        freq = sum(table.lengths[g_start:g_end], Fraction(0))
        right = table.points[g_end] if g_end < total else Fraction(1)
        if freq != right - table.points[g_start]:
            raise ConsistencyError("variety frequency fails additivity")
        profiles = {height_profile(f, comp) for f in members}
        if len(profiles) != 1:
            raise ConsistencyError(
                f"members of one interval class disagree on profile: {members}"
            )
        entries.append(
            FrequencyEntry(profile=profiles.pop(), frequency=freq, members=members)
        )
    return FrequencyTable(
        comp=comp,
        entries=tuple(entries),
        points=tuple(table.points[g] for g in cut_positions),
        err=table.err,
    )


def empirical_frequencies(theta: SlopeValue, comp: Composition, n_positions: int,
                          *, cap_bits: int | None = None) -> FrequencyTable:
    """Variety frequencies counted over a finite prefix.

    Scans the n_positions windows of length comp.m starting at positions
    0..n_positions-1 of the mechanical word and divides the per-variety
    counts by n_positions.
    """
    m = comp.m
    if n_positions < m:
        raise BadLength(f"need N >= m = {m}; got {n_positions}")
    prefix = mechanical_prefix(theta, n_positions + m, cap_bits=cap_bits)
    acc = prefix_heights(prefix)
    sums = comp.partial_sums
    counts: dict[HeightProfile, int] = {}
    members: dict[HeightProfile, set[str]] = {}
    for i in range(n_positions):
        profile = tuple(acc[i + sums[j + 1]] - acc[i + sums[j]] for j in range(comp.k))
        if profile in counts:
            counts[profile] += 1
        else:
            counts[profile] = 1
            members[profile] = set()
        members[profile].add(prefix[i : i + m])
    entries = [
        FrequencyEntry(
            profile=profile,
            frequency=Fraction(count, n_positions),
            members=tuple(sorted(members[profile])),
        )
        for profile, count in counts.items()
    ]
    entries.sort(key=lambda e: e.members[0])
    return FrequencyTable(comp=comp, entries=tuple(entries), points=None, err=None)
