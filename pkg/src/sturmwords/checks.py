"""Bulk property checks: equivalence sweeps, structure checks, convergence.

These back the `check` CLI subcommand and the acceptance suite.  The
oracle-equivalence sweep runs the modular multiplicity formula against a
brute-force reclassification of the factor multiset for every coprime
pair and every composition in range; the volume (millions of
compositions) calls for a compact inner loop, so factors are reduced to
packed height-prefix keys once per (p, q, m) block and each composition
only masks those keys.  A deterministic subsample of blocks is replayed
through the public classify_varieties/multiplicities_formula API to tie
the fast loop to the real one.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .christoffel import circular_factors, lower_christoffel, make_params, verify_isc
from .partitioned import classify_varieties, compose, multiplicities_formula, variety_count
from .slopes import SlopeValue, named_slope, rational_slope
from .sturmian import (
    empirical_frequencies,
    factor_interval_table,
    mechanical_prefix,
    partitioned_frequencies,
)
from .words import is_primitive, prefix_heights


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    counterexample: str | None = None


@lru_cache(maxsize=None)
def _compositions(m: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All compositions of m as (boundary partial sums s_1..s_k, key mask)."""
    out = []
    for bits in itertools.product((0, 1), repeat=m - 1):
        bounds = tuple(i + 1 for i, b in enumerate(bits) if b) + (m,)
        mask = 0
        for b in bounds:
            mask |= 0xFF << (8 * b)
        out.append((bounds, mask))
    return tuple(out)


def _packed_key(acc, start: int, m: int) -> int:
    """Height prefix of the factor starting at `start`, one byte per column."""
    base = acc[start]
    key = 0
    for j in range(1, m + 1):
        key |= (acc[start + j] - base) << (8 * j)
    return key


def _profile_from_key(key: int, bounds: tuple[int, ...]) -> tuple[int, ...]:
    heights = [(key >> (8 * b)) & 0xFF for b in bounds]
    return tuple(h - p for h, p in zip(heights, [0] + heights[:-1]))


def _sweep_block(p: int, q: int, m: int):
    """Precomputed data shared by all compositions of one (p, q, m) block."""
    n = p + q
    w = lower_christoffel(p, q)
    doubled = w + w
    acc = prefix_heights(doubled)
    counts: dict[str, tuple[int, int]] = {}
    for s in range(n):
        f = doubled[s : s + m]
        if f in counts:
            first, c = counts[f]
            counts[f] = (first, c + 1)
        else:
            counts[f] = (s, 1)
    distinct = tuple(
        (_packed_key(acc, counts[f][0], m), counts[f][1]) for f in sorted(counts)
    )
    q_star = pow(q, -1, n)
    row_key = tuple(_packed_key(acc, (r * q_star) % n, m) for r in range(n))
    sp_mod = tuple((s * p) % n for s in range(m + 1))
    return distinct, row_key, sp_mod


def _block_mismatch(p, q, m, distinct, row_key, sp_mod) -> str | None:
    """Compare formula vs brute force for every composition of m; None if clean."""
    n = p + q
    for bounds, mask in _compositions(m):
        grouped: dict[int, int] = {}
        for key, mult in distinct:
            masked = key & mask
            if masked in grouped:
                grouped[masked] += mult
            else:
                grouped[masked] = mult
        residues = sorted(map(sp_mod.__getitem__, bounds))
        prev = 0
        formula = []
        for r in residues:
            formula.append((row_key[prev] & mask, r - prev))
            prev = r
        formula.append((row_key[prev] & mask, n - prev))
        if list(grouped.items()) != formula:
            return f"p={p} q={q} m={m} bounds={bounds}"
    return None


def _api_block_agrees(p: int, q: int, m: int) -> str | None:
    """Replay one block through the public API; mismatch description or None."""
    params = make_params(p, q)
    fs = circular_factors(lower_christoffel(p, q), m)
    distinct, row_key, sp_mod = _sweep_block(p, q, m)
    n = p + q
    for bounds, mask in _compositions(m):
        comp = compose(
            [b - a for a, b in zip((0,) + bounds[:-1], bounds)]
        )
        brute = classify_varieties(fs, comp)
        formula = multiplicities_formula(params, comp)
        if brute.signature() != formula.signature():
            return f"API brute != formula at p={p} q={q} comp={comp.parts}"
        fast = []
        grouped: dict[int, int] = {}
        for key, mult in distinct:
            masked = key & mask
            grouped[masked] = grouped.get(masked, 0) + mult
        for masked, mult in grouped.items():
            fast.append((_profile_from_key(masked, bounds), mult))
        if fast != [(e.profile, e.multiplicity) for e in brute.entries]:
            return f"fast loop != API at p={p} q={q} comp={comp.parts}"
    return None


def oracle_equivalence_check(max_n: int = 60, max_m: int = 12,
                             api_crosscheck_blocks: int = 25) -> CheckResult:
    """Formula == brute force for all coprime pairs n <= max_n, all
    compositions of all m <= min(max_m, n-1)."""
    name = f"oracle_equivalence(max_n={max_n}, max_m={max_m})"
    pairs = [
        (p, n - p)
        for n in range(2, max_n + 1)
        for p in range(1, n)
        if gcd(p, n - p) == 1
    ]
    checked = 0
    for p, q in pairs:
        n = p + q
        for m in range(1, min(max_m, n - 1) + 1):
            distinct, row_key, sp_mod = _sweep_block(p, q, m)
            bad = _block_mismatch(p, q, m, distinct, row_key, sp_mod)
            if bad is not None:
                return CheckResult(name, False, "formula/brute mismatch", bad)
            checked += len(_compositions(m))
    rng = random.Random(20140907)
    for _ in range(api_crosscheck_blocks):
        p, q = pairs[rng.randrange(len(pairs))]
        m = rng.randint(1, min(8, p + q - 1))
        bad = _api_block_agrees(p, q, m)
        if bad is not None:
            return CheckResult(name, False, "fast sweep diverges from public API", bad)
    return CheckResult(name, True, f"{checked} compositions over {len(pairs)} slopes agree")


def borel_reutenauer_check(num_pairs: int = 50, max_n: int = 200,
                           seed: int = 0) -> CheckResult:
    """m+1 distinct circular factors of every length m, random coprime pairs."""
    name = f"borel_reutenauer(num_pairs={num_pairs}, max_n={max_n})"
    rng = random.Random(seed)
    tried = 0
    for _ in range(num_pairs):
        while True:
            n = rng.randint(2, max_n)
            p = rng.randint(1, n - 1)
            if gcd(p, n - p) == 1:
                break
        w = lower_christoffel(p, n - p)
        doubled = w + w
        for m in range(1, n):
            if len({doubled[i : i + m] for i in range(n)}) != m + 1:
                return CheckResult(
                    name, False, "factor count is not m+1", f"p={p} q={n - p} m={m}"
                )
        tried += 1
    return CheckResult(name, True, f"{tried} random slopes, all lengths agree")


def isc_check(max_n: int = 200) -> CheckResult:
    """Adjacent conjugate-matrix rows swap one ab at the predicted columns."""
    name = f"isc(max_n={max_n})"
    for n in range(2, max_n + 1):
        for p in range(1, n):
            if gcd(p, n - p) != 1:
                continue
            if not verify_isc(lower_christoffel(p, n - p)):
                return CheckResult(name, False, "row structure violated", f"p={p} q={n - p}")
    return CheckResult(name, True, f"all coprime pairs with n <= {max_n} verified")


def characterization_check(max_len: int = 16) -> CheckResult:
    """Every primitive non-balanced word has a partitioning with != k+1
    varieties (single-part compositions suffice: some circular length has
    heights spanning >= 2, hence >= 3 height values)."""
    name = f"characterization(max_len={max_len})"
    confirmed = 0
    for n in range(2, max_len + 1):
        for tup in itertools.product("ab", repeat=n):
            w = "".join(tup)
            if not is_primitive(w):
                continue
            acc = prefix_heights(w + w)
            witness = None
            for m in range(1, n):
                lo = hi = acc[m]
                for i in range(1, n):
                    h = acc[i + m] - acc[i]
                    if h < lo:
                        lo = h
                    elif h > hi:
                        hi = h
                if hi - lo >= 2:
                    witness = (m, hi - lo + 1)
                    break
            if witness is None:
                continue  # balanced, hence a Christoffel conjugate
            m, spread_count = witness
            if variety_count(w, m, compose((m,))) < 3:
                return CheckResult(
                    name, False, "no variety-count witness", f"w={w} m={m}"
                )
            confirmed += 1
    return CheckResult(name, True, f"{confirmed} primitive non-balanced words witnessed")


def mechanical_christoffel_check(max_n: int = 200) -> CheckResult:
    """mechanical_prefix(q/n, n) equals lower_christoffel(p, q)."""
    name = f"mechanical_christoffel(max_n={max_n})"
    for n in range(2, max_n + 1):
        for p in range(1, n):
            q = n - p
            if gcd(p, q) != 1:
                continue
            theta = rational_slope(Fraction(q, n))
            if mechanical_prefix(theta, n) != lower_christoffel(p, q):
                return CheckResult(name, False, "prefix mismatch", f"p={p} q={q}")
    return CheckResult(name, True, f"all coprime pairs with n <= {max_n} agree")


FIXTURE_SLOPES = ("log2_3_2", "golden", "sqrt2m1")


def _slopes(names) -> list[SlopeValue]:
    return [named_slope(s) for s in names]


def lexorder_check(slope_names=FIXTURE_SLOPES, max_m: int = 50,
                   prefix_len: int = 5000) -> CheckResult:
    """Interval-table factors are strictly increasing and equal the sorted
    distinct factors of a long prefix."""
    name = f"lexorder(max_m={max_m}, prefix_len={prefix_len})"
    for theta in _slopes(slope_names):
        prefix = mechanical_prefix(theta, prefix_len)
        for m in range(1, max_m + 1):
            table = factor_interval_table(theta, m)
            if list(table.factors) != sorted(set(table.factors)):
                return CheckResult(
                    name, False, "factor sequence not strictly increasing",
                    f"slope={theta.describe()} m={m}",
                )
            observed = sorted({prefix[i : i + m] for i in range(prefix_len - m + 1)})
            if observed != list(table.factors):
                return CheckResult(
                    name, False, "interval factors differ from prefix factors",
                    f"slope={theta.describe()} m={m}",
                )
    return CheckResult(name, True, f"{len(slope_names)} slopes, m <= {max_m}")


def three_distance_check(slope_names=FIXTURE_SLOPES, max_m: int = 100) -> CheckResult:
    """Interval lengths take at most three distinct values."""
    name = f"three_distance(max_m={max_m})"
    for theta in _slopes(slope_names):
        for m in range(1, max_m + 1):
            table = factor_interval_table(theta, m)
            distinct = len(set(table.lengths))
            if distinct > 3:
                return CheckResult(
                    name, False, f"{distinct} distinct lengths",
                    f"slope={theta.describe()} m={m}",
                )
    return CheckResult(name, True, f"{len(slope_names)} slopes, m <= {max_m}")


DEFAULT_CHECK_COMPS = ((1, 3), (2, 2), (1, 1, 2), (3, 1, 1), (1, 1, 1, 1, 1))


def subset_additivity_check(slope_names=FIXTURE_SLOPES,
                            comps=DEFAULT_CHECK_COMPS) -> CheckResult:
    """Partition points embed in factor points; frequencies add up."""
    name = "subset_additivity"
    for theta in _slopes(slope_names):
        for parts in comps:
            comp = compose(parts)
            table = factor_interval_table(theta, comp.m)
            freq = partitioned_frequencies(theta, comp)
            if len(freq.entries) != comp.k + 1:
                return CheckResult(
                    name, False, "variety count is not k+1",
                    f"slope={theta.describe()} comp={parts}",
                )
            if not set(freq.points) <= set(table.points):
                return CheckResult(
                    name, False, "partition points not a subset",
                    f"slope={theta.describe()} comp={parts}",
                )
            member_sum = {}
            factor_len = dict(zip(table.factors, table.lengths))
            for entry in freq.entries:
                member_sum[entry.profile] = sum(
                    (factor_len[f] for f in entry.members), Fraction(0)
                )
                if member_sum[entry.profile] != entry.frequency:
                    return CheckResult(
                        name, False, "additivity fails",
                        f"slope={theta.describe()} comp={parts} profile={entry.profile}",
                    )
            if sum((e.frequency for e in freq.entries), Fraction(0)) != 1:
                return CheckResult(
                    name, False, "frequencies do not sum to 1",
                    f"slope={theta.describe()} comp={parts}",
                )
    return CheckResult(name, True, f"{len(slope_names)} slopes x {len(comps)} compositions")


def convergence_check(slope_name: str = "log2_3_2", parts=(1, 3),
                      n_positions: int = 100000) -> CheckResult:
    """Empirical variety frequencies approach the exact ones within 10/N."""
    name = f"convergence(N={n_positions})"
    theta = named_slope(slope_name)
    comp = compose(parts)
    exact = partitioned_frequencies(theta, comp).by_profile()
    empirical = empirical_frequencies(theta, comp, n_positions).by_profile()
    tol = Fraction(10, n_positions)
    if set(exact) != set(empirical):
        return CheckResult(name, False, "variety sets differ",
                           f"{sorted(exact)} vs {sorted(empirical)}")
    for profile, entry in exact.items():
        dev = abs(entry.frequency - empirical[profile].frequency)
        if dev > tol:
            return CheckResult(
                name, False, "empirical deviates beyond 10/N",
                f"profile={profile} deviation={float(dev)}",
            )
    return CheckResult(name, True, f"all varieties within {float(tol)}")


@dataclass(frozen=True)
class ChristoffelCheckConfig:
    max_n: int = 40
    max_m: int = 10
    br_pairs: int = 25
    br_max_n: int = 120
    seed: int = 0
    char_max_len: int = 12


@dataclass(frozen=True)
class SturmianCheckConfig:
    slope_names: tuple[str, ...] = FIXTURE_SLOPES
    max_m: int = 30
    prefix_len: int = 3000
    three_distance_max_m: int = 60
    comps: tuple = DEFAULT_CHECK_COMPS
    convergence_n: int = 20000
    consistency_max_n: int = 120


def run_christoffel_checks(cfg: ChristoffelCheckConfig = ChristoffelCheckConfig()) -> list[CheckResult]:
    return [
        oracle_equivalence_check(cfg.max_n, cfg.max_m),
        borel_reutenauer_check(cfg.br_pairs, cfg.br_max_n, cfg.seed),
        isc_check(cfg.br_max_n),
        characterization_check(cfg.char_max_len),
    ]


def run_sturmian_checks(cfg: SturmianCheckConfig = SturmianCheckConfig()) -> list[CheckResult]:
    return [
        lexorder_check(cfg.slope_names, cfg.max_m, cfg.prefix_len),
        three_distance_check(cfg.slope_names, cfg.three_distance_max_m),
        subset_additivity_check(cfg.slope_names, cfg.comps),
        convergence_check(n_positions=cfg.convergence_n),
        mechanical_christoffel_check(cfg.consistency_max_n),
    ]
