"""Independent ground truth by enumeration: brute-force spectra for a
fixed transform, exhaustive ensemble averages, and Monte-Carlo estimates.

Nothing in this module uses the recursion engine; agreement between the
two is the decisive cross-validation and is enforced by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .construct import CodeConfig
from .dyadic import DyadicRational
from .kernel import row_bits
from .pretransform import (
    PreTransform,
    derive_seeds,
    free_entry_count,
    identity_transform,
    random_transform,
)

__all__ = [
    "BudgetError",
    "WeightHistogram",
    "exact_spectrum",
    "ensemble_average_exact",
    "ensemble_average_mc",
]

BRUTE_MAX_K = 28
ENSEMBLE_MAX_FREE = 24
ENSEMBLE_MAX_K = 20


class BudgetError(RuntimeError):
    """Requested enumeration exceeds the documented budget."""


@dataclass(frozen=True, slots=True)
class WeightHistogram:
    """Per-weight tallies indexed d = 0..N, plus provenance metadata.

    counts holds integers for source "brute"/"scl", exact DyadicRational
    means for "exhaustive-ensemble", and float sample means for
    "monte-carlo" (which also carries per-weight sample variance).
    saturated[d], when present, marks weights whose value is only a
    lower bound (list pruning may have discarded codewords there).
    """

    source: str
    n: int
    counts: tuple
    samples: int = 1
    seed: int | None = None
    variance: tuple | None = None
    saturated: tuple | None = None

    def nonzero(self) -> dict:
        return {d: c for d, c in enumerate(self.counts) if c}


def _wordcount(n: int) -> int:
    return (n + 63) // 64


def _to_words(x: int, words: int) -> np.ndarray:
    mask = (1 << 64) - 1
    return np.array([(x >> (64 * w)) & mask for w in range(words)], dtype=np.uint64)


def generator_rows(config: CodeConfig, transform: PreTransform) -> list[int]:
    """Rows of T·F for the information indices, packed LSB-first."""
    out = []
    for i in config.info_set:
        v = transform.full_row(i)
        x = 0
        while v:
            low = v & -v
            x ^= row_bits(config.m, low.bit_length())
            v ^= low
        out.append(x)
    return out


def _hist_of_block(block: np.ndarray, n: int) -> np.ndarray:
    weights = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
    return np.bincount(weights, minlength=n + 1)


def _codeword_block(rows: list[int], n: int, split: int) -> np.ndarray:
    # all XOR combinations of the first `split` rows, by doubling
    words = _wordcount(n)
    block = np.zeros((1, words), dtype=np.uint64)
    for g in rows[:split]:
        block = np.concatenate([block, block ^ _to_words(g, words)])
    return block


def exact_spectrum(config: CodeConfig, transform: PreTransform) -> WeightHistogram:
    """Weight histogram of one fixed code by enumerating all 2^K messages."""
    k = config.k
    if k > BRUTE_MAX_K:
        raise BudgetError(f"K={k} exceeds brute-force budget {BRUTE_MAX_K}")
    n = config.n
    rows = generator_rows(config, transform)
    split = min(k, 20)
    block = _codeword_block(rows, n, split)
    hist = np.zeros(n + 1, dtype=np.int64)
    words = _wordcount(n)
    for msk in range(1 << (k - split)):
        x = 0
        mm = msk
        while mm:
            x ^= rows[split + (mm & -mm).bit_length() - 1]
            mm &= mm - 1
        hist += _hist_of_block(block ^ _to_words(x, words), n)
    return WeightHistogram("brute", n, tuple(int(c) for c in hist))


def ensemble_average_exact(config: CodeConfig) -> WeightHistogram:
    """Exact E[N_d] by enumerating every transform in the ensemble.

    Walks the 2^F free-entry assignments in Gray-code order so each step
    flips a single T entry, which perturbs a single generator row; the
    2^K codeword table is patched in place instead of rebuilt.
    """
    f = free_entry_count(config)
    k = config.k
    if f > ENSEMBLE_MAX_FREE:
        raise BudgetError(f"F={f} free entries exceed budget {ENSEMBLE_MAX_FREE}")
    if k > ENSEMBLE_MAX_K:
        raise BudgetError(f"K={k} exceeds exhaustive-ensemble budget {ENSEMBLE_MAX_K}")
    n, m = config.n, config.m
    words = _wordcount(n)

    # free entry b -> (message bit position, column index) per the
    # transform_from_bits layout: rows ascending, columns ascending
    entry_of_bit: list[tuple[int, int]] = []
    for pos, i in enumerate(config.info_set):
        entry_of_bit.extend((pos, j) for j in range(i + 1, n + 1))

    rows = generator_rows(config, identity_transform(config))
    block = _codeword_block(rows, n, k)  # identity-transform codebook
    # int64 is safe: the grand total is 2^(F+K) <= 2^44 under the budget
    hist = _hist_of_block(block, n)
    deltas = [_to_words(row_bits(m, col), words) for _, col in entry_of_bit]
    for step in range(1, 1 << f):
        b = (step & -step).bit_length() - 1
        pos, _ = entry_of_bit[b]
        view = block.reshape(-1, 1 << (pos + 1), words)
        view[:, 1 << pos :, :] ^= deltas[b]
        hist += _hist_of_block(block, n)
    means = tuple(DyadicRational(int(c), f) for c in hist)
    return WeightHistogram("exhaustive-ensemble", n, means, samples=1 << f)


def ensemble_average_mc(
    config: CodeConfig,
    master_seed: int,
    samples: int,
    method: str = "brute",
    list_size: int | None = None,
    threads: int = 1,
) -> WeightHistogram:
    """Monte-Carlo E[N_d] estimate over `samples` random transforms.

    Per-sample seeds come from derive_seeds(master_seed, samples), so the
    result is reproducible for any thread count. method "brute" measures
    each sample exactly; "scl" uses the low-weight collector with the
    given list size and propagates its saturation flags.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if method not in ("brute", "scl"):
        raise ValueError(f"unknown method {method!r}")
    if method == "scl":
        if list_size is None or list_size < 1:
            raise ValueError("scl method requires a positive list_size")
        from .scl import collect_low_weight
    elif config.k > BRUTE_MAX_K:
        raise BudgetError(f"K={config.k} exceeds brute-force budget {BRUTE_MAX_K}")

    n = config.n
    seeds = derive_seeds(master_seed, samples)

    def one(seed: int) -> WeightHistogram:
        t = random_transform(config, seed)
        if method == "brute":
            return exact_spectrum(config, t)
        return collect_low_weight(config, t, list_size)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, seeds))
    else:
        results = [one(s) for s in seeds]

    total = [0] * (n + 1)
    total_sq = [0] * (n + 1)
    sat = [False] * (n + 1)
    for hist in results:
        for d, c in enumerate(hist.counts):
            total[d] += c
            total_sq[d] += c * c
        if hist.saturated is not None:
            sat = [a or b for a, b in zip(sat, hist.saturated)]
    means = tuple(t / samples for t in total)
    if samples > 1:
        variance = tuple(
            (sq - t * t / samples) / (samples - 1) for sq, t in zip(total_sq, total)
        )
    else:
        variance = tuple(0.0 for _ in total)
    return WeightHistogram(
        "monte-carlo",
        n,
        means,
        samples=samples,
        seed=master_seed,
        variance=variance,
        saturated=tuple(sat) if method == "scl" else None,
    )
