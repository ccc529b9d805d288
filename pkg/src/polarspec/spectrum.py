"""Exact weight-spectrum recursions for pre-transformed polar cosets.

Everything here is integer or dyadic arithmetic; no floats are involved,
so results are reproducible bit-for-bit at any block length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .construct import CodeConfig, min_row_weight
from .dyadic import DyadicRational
from .kernel import row_weight

__all__ = [
    "CosetSpectrum",
    "AverageSpectrum",
    "coset_spectrum",
    "p_exact",
    "p_min",
    "avg_spectrum",
    "avg_nmin",
]


@dataclass(frozen=True, slots=True)
class CosetSpectrum:
    """Weight distribution of the coset f^(i) + span(f^(i+1), ..., f^(N)).

    counts[d] is the number of weight-d vectors among the 2^(N-i) coset
    members; the list is truncated at the requested maximum weight.
    """

    m: int
    i: int
    counts: tuple[int, ...]

    @property
    def d_max(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {d: c for d, c in enumerate(self.counts) if c}


@dataclass(frozen=True, slots=True)
class AverageSpectrum:
    """Ensemble-average codeword counts E[N_d] for d = 1..d_max."""

    config: CodeConfig
    entries: dict[int, DyadicRational] = field(compare=False)

    def __getitem__(self, d: int) -> DyadicRational:
        return self.entries[d]

    @property
    def d_max(self) -> int:
        return max(self.entries)


def _pascal_row(n: int) -> tuple[int, ...]:
    # multiplicative build; exact big ints
    row = [1] * (n + 1)
    for t in range(1, n + 1):
        row[t] = row[t - 1] * (n - t + 1) // t
    return tuple(row)


def _tables(m: int, requests: dict[int, int]) -> dict[int, list[int]]:
    """Coset count lists for several rows at level m, sharing lower levels.

    requests maps row index -> maximum weight needed. Needs propagate
    down: a low-half row reuses the same row one level below (weights
    capped at the half length), an upper-half row reuses row i - N/2 at
    half the weight. Level tables are built once, bottom-up.
    """
    needs: list[dict[int, int]] = [dict() for _ in range(m + 1)]
    for i, dm in requests.items():
        needs[m][i] = max(needs[m].get(i, 0), min(dm, 1 << m))
    for level in range(m, 1, -1):
        half = 1 << (level - 1)
        for i, dm in needs[level].items():
            if i > half:
                child, cdm = i - half, dm >> 1
            else:
                child, cdm = i, min(dm, half)
            prev = needs[level - 1].get(child, 0)
            needs[level - 1][child] = max(prev, cdm)

    tables: dict[int, list[int]] = {}
    base = {1: [0, 2], 2: [0, 0, 1]}
    for i, dm in needs[1].items():
        lst = base[i][: dm + 1]
        tables[i] = lst + [0] * (dm + 1 - len(lst))
    for level in range(2, m + 1):
        half = 1 << (level - 1)
        binom_rows: dict[int, tuple[int, ...]] = {}
        nxt: dict[int, list[int]] = {}
        for i, dm in needs[level].items():
            counts = [0] * (dm + 1)
            if i > half:
                sub = tables[i - half]
                for d in range(2, dm + 1, 2):
                    counts[d] = sub[d >> 1]
            else:
                sub = tables[i]
                w = row_weight(level, i)
                lim = min(dm, len(sub) - 1)
                for d in range(w, dm + 1, 2):
                    acc = 0
                    for dp in range(w, min(d, lim) + 1, 2):
                        a = sub[dp]
                        if not a:
                            continue
                        n = half - dp
                        row = binom_rows.get(n)
                        if row is None:
                            row = binom_rows[n] = _pascal_row(n)
                        t = (d - dp) >> 1
                        if t <= n:
                            acc += (a << dp) * row[t]
                    counts[d] = acc
            nxt[i] = counts
        tables = nxt
    return tables


def _check(m: int, i: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 1 <= i <= (1 << m):
        raise ValueError(f"index {i} outside [1, {1 << m}]")


def coset_spectrum(m: int, i: int, d_max: int | None = None) -> CosetSpectrum:
    """Exact weight counts of coset i at length 2^m, up to weight d_max."""
    _check(m, i)
    n = 1 << m
    if d_max is None:
        d_max = n
    if not 0 <= d_max <= n:
        raise ValueError(f"d_max {d_max} outside [0, {n}]")
    counts = _tables(m, {i: d_max})[i]
    counts += [0] * (d_max + 1 - len(counts))
    return CosetSpectrum(m, i, tuple(counts))


def p_exact(m: int, i: int, d: int) -> DyadicRational:
    """Probability that coset i at length 2^m draws a weight-d vector."""
    spec = coset_spectrum(m, i, d)
    return DyadicRational(spec.counts[d], (1 << m) - i)


def p_min(m: int, i: int) -> DyadicRational:
    """Probability that coset i attains the minimum possible weight.

    Always a power of two: descending the recursion, each low-half step
    multiplies by 2^w / 2^(half). Kept as a separate code path from the
    full spectrum so the two can cross-check each other.
    """
    _check(m, i)
    e = 0
    idx = i
    for level in range(m, 1, -1):
        half = 1 << (level - 1)
        if idx > half:
            idx -= half
        else:
            e += half - (1 << (idx - 1).bit_count())
    return DyadicRational(1, e)


def avg_spectrum(config: CodeConfig, d_max: int | None = None) -> AverageSpectrum:
    """Ensemble-average number of weight-d codewords, exactly.

    Averages over all upper-triangular pre-transforms with unconstrained
    entries drawn uniformly: row j of the information set (ascending)
    contributes 2^(K-j) times its coset probability.
    """
    m, n, k = config.m, config.n, config.k
    if d_max is None:
        d_max = n
    if not 1 <= d_max <= n:
        raise ValueError(f"d_max {d_max} outside [1, {n}]")
    tables = _tables(m, {i: d_max for i in config.info_set})
    entries: dict[int, DyadicRational] = {}
    for d in range(1, d_max + 1):
        total = DyadicRational(0)
        for j, i in enumerate(config.info_set, start=1):
            counts = tables[i]
            if d >= len(counts) or not counts[d]:
                continue
            total = total + DyadicRational(counts[d] << (k - j), n - i)
        entries[d] = total
    return AverageSpectrum(config, entries)


def avg_nmin(config: CodeConfig) -> tuple[int, DyadicRational]:
    """Minimum codeword weight and its ensemble-average multiplicity.

    Only information rows whose transform row weight equals the minimum
    can produce minimum-weight codewords, and each does so with its
    power-of-two attainment probability.
    """
    d_min = min_row_weight(config)
    n, k = config.n, config.k
    total = DyadicRational(0)
    for j, i in enumerate(config.info_set, start=1):
        if row_weight(config.m, i) != d_min:
            continue
        total = total + DyadicRational(1 << (k - j), 0) * p_min(config.m, i)
    return d_min, total
