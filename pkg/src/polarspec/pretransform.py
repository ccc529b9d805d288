"""Upper-triangular pre-transform builders: random, PAC, CRC, identity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .construct import CodeConfig

__all__ = [
    "PreTransform",
    "SplitMix64",
    "crc_transform",
    "derive_seeds",
    "free_entry_count",
    "identity_transform",
    "pac_transform",
    "parse_poly",
    "random_transform",
    "transform_from_bits",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudorandom generator (Steele/Lea/Flood, JDK 8).

    state advances by the 64-bit golden-gamma constant; each output is
    the mixed new state. Chosen as the ensemble sampler because it is
    ~10 lines in any language and bit-reproducible across platforms —
    the generator identity is part of the reproducibility contract.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def bits(self, count: int) -> int:
        """count stream bits packed into one integer, LSB first."""
        out = 0
        pos = 0
        while pos < count:
            out |= self.next_u64() << pos
            pos += 64
        return out & ((1 << count) - 1)


def derive_seeds(master_seed: int, count: int) -> list[int]:
    """Per-sample seeds: the first `count` outputs of SplitMix64(master).

    Splitting from a master seed keeps Monte-Carlo runs reproducible for
    any worker count — sample t always receives the same seed.
    """
    gen = SplitMix64(master_seed)
    return [gen.next_u64() for _ in range(count)]


@dataclass(frozen=True, slots=True)
class PreTransform:
    """Unit upper-triangular N x N binary matrix, stored sparsely.

    rows maps an information index i to the off-diagonal part of row i,
    packed as an integer whose bit j-1 is T_{ij}; only columns j > i may
    be set. The diagonal is implicit. Rows of frozen indices are not
    stored: frozen inputs are zero, so those rows never touch a codeword.
    """

    n: int
    rows: dict[int, int]

    def __post_init__(self):
        for i, mask in self.rows.items():
            if not 1 <= i <= self.n:
                raise ValueError(f"row index {i} outside [1, {self.n}]")
            if mask < 0 or mask >> self.n:
                raise ValueError(f"row {i}: mask wider than {self.n} columns")
            if mask & ((1 << i) - 1):
                raise ValueError(f"row {i}: entry at or left of the diagonal")

    def entry(self, i: int, j: int) -> int:
        """T_{ij}, 1-based."""
        if i == j:
            return 1
        if j < i:
            return 0
        return self.rows.get(i, 0) >> (j - 1) & 1

    def full_row(self, i: int) -> int:
        """Row i including the diagonal one, packed LSB-first."""
        return (1 << (i - 1)) | self.rows.get(i, 0)


def free_entry_count(config: CodeConfig) -> int:
    """Number of unconstrained entries in the ensemble: sum of N-i over A."""
    return sum(config.n - i for i in config.info_set)


def transform_from_bits(config: CodeConfig, bits: int) -> PreTransform:
    """Decode an integer into a transform, one bit per free entry.

    Bit order: information rows ascending, columns i+1..N ascending
    within a row, least significant bit first. Sweeping bits over
    [0, 2^F) therefore visits every ensemble member exactly once.
    """
    n = config.n
    rows: dict[int, int] = {}
    pos = 0
    for i in config.info_set:
        width = n - i
        rows[i] = (bits >> pos & ((1 << width) - 1)) << i
        pos += width
    if bits >> pos:
        raise ValueError(f"more than {pos} free-entry bits supplied")
    return PreTransform(n, rows)


def identity_transform(config: CodeConfig) -> PreTransform:
    """All off-diagonal entries zero; recovers the plain polar/RM code."""
    return PreTransform(config.n, {i: 0 for i in config.info_set})


def random_transform(config: CodeConfig, seed: int) -> PreTransform:
    """Uniform ensemble sample: every free entry i.i.d. Bernoulli(1/2).

    Deterministic in the seed; see SplitMix64 and transform_from_bits
    for the exact stream-to-entry mapping.
    """
    return transform_from_bits(config, SplitMix64(seed).bits(free_entry_count(config)))


def _coeffs_of(poly: int) -> tuple[int, ...]:
    # MSB of the integer is c_0
    deg = poly.bit_length() - 1
    return tuple(poly >> (deg - j) & 1 for j in range(deg + 1))


def pac_transform(config: CodeConfig, conv_coeffs: Sequence[int] | str | int) -> PreTransform:
    """Toeplitz convolution transform: T_{i,i+j} = c_j for every row i.

    conv_coeffs is c_0..c_L (c_0 must be 1), given as a bit sequence, a
    binary/hex string (leading coefficient first), or an integer whose
    most significant bit is c_0.
    """
    if isinstance(conv_coeffs, str):
        conv_coeffs = parse_poly(conv_coeffs)
    if isinstance(conv_coeffs, int):
        coeffs = _coeffs_of(conv_coeffs)
    else:
        coeffs = tuple(conv_coeffs)
    if not coeffs or coeffs[0] != 1:
        raise ValueError("convolution coefficients must start with c_0 = 1")
    if any(c not in (0, 1) for c in coeffs):
        raise ValueError("convolution coefficients must be 0/1")
    n = config.n
    template = 0
    for j, c in enumerate(coeffs[1:], start=1):
        template |= c << j
    full = (1 << n) - 1
    return PreTransform(n, {i: (template << (i - 1)) & full for i in config.info_set})


def _gf2_mod(num: int, g: int) -> int:
    dg = g.bit_length() - 1
    while num and num.bit_length() - 1 >= dg:
        num ^= g << (num.bit_length() - 1 - dg)
    return num


def parse_poly(text: str | int) -> int:
    """Polynomial as an integer, bit a holding the coefficient of D^a.

    Accepts a binary string with the leading coefficient first
    ("1000011" is D^6 + D + 1) or hexadecimal with an "0x" prefix.
    """
    if isinstance(text, int):
        poly = text
    else:
        s = text.strip().lower()
        if s.startswith("0x"):
            poly = int(s, 16)
        else:
            if not s or s.strip("01"):
                raise ValueError(f"not a binary polynomial string: {text!r}")
            if s[0] != "1":
                raise ValueError("leading coefficient must be 1")
            poly = int(s, 2)
    if poly < 1:
        raise ValueError("polynomial must be nonzero")
    return poly


def crc_transform(
    outer_config: CodeConfig, k: int, crc_poly: str | int
) -> tuple[CodeConfig, PreTransform]:
    """CRC-aided code as a pre-transform over K' = K + r selected indices.

    The K smallest selected indices carry message bits; the r largest
    carry CRC bits as dynamic frozen positions. CRC bits are the
    remainder of D^r * msg(D) mod g(D) (systematic attachment, message
    bit 1 on the highest power); column t-of-r takes the coefficient of
    D^(r-t), so the high remainder bit lands on the smallest CRC index.
    Returns the K-dimensional config together with the transform.
    """
    poly = parse_poly(crc_poly)
    r = poly.bit_length() - 1
    if not 1 <= k < outer_config.k:
        raise ValueError(f"K={k} must satisfy 1 <= K < {outer_config.k}")
    if outer_config.k - k != r:
        raise ValueError(
            f"polynomial degree {r} != number of CRC positions {outer_config.k - k}"
        )
    info = outer_config.info_set[:k]
    crc_idx = outer_config.info_set[k:]
    rows: dict[int, int] = {}
    for j, i in enumerate(info, start=1):
        rem = _gf2_mod(1 << (r + k - j), poly)
        mask = 0
        for t in range(1, r + 1):
            if rem >> (r - t) & 1:
                mask |= 1 << (crc_idx[t - 1] - 1)
        rows[i] = mask
    return CodeConfig(outer_config.m, info), PreTransform(outer_config.n, rows)
