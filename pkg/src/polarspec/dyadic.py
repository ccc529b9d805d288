"""Exact dyadic rationals: non-negative values of the form num / 2^exp.

Every probability and expected count produced by the recursion engine is
dyadic, so this is the exact carrier type for results that must survive
weights where floats underflow and counts overflow 64 bits.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["DyadicRational"]


class DyadicRational:
    """num / 2^exp with num >= 0 and exp >= 0, kept in lowest terms.

    Lowest terms means num is odd whenever exp > 0; zero is stored as
    (0, 0). Supports the arithmetic the spectrum code needs: addition,
    multiplication, shifts by powers of two, ordering, and exact decimal
    rendering with round-half-to-even.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if num < 0:
            raise ValueError("negative numerator")
        if exp < 0:
            raise ValueError("negative exponent")
        if num == 0:
            exp = 0
        else:
            shift = min(exp, (num & -num).bit_length() - 1)
            num >>= shift
            exp -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicRational is immutable")

    @classmethod
    def from_fraction(cls, frac: Fraction) -> "DyadicRational":
        den = frac.denominator
        if den & (den - 1):
            raise ValueError(f"{frac} is not dyadic")
        return cls(frac.numerator, den.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def is_zero(self) -> bool:
        return self.num == 0

    def __bool__(self) -> bool:
        return self.num != 0

    def is_integer(self) -> bool:
        return self.exp == 0

    def shifted(self, k: int) -> "DyadicRational":
        """Multiply by 2^k (k may be negative)."""
        if k >= 0:
            return DyadicRational(self.num << k, self.exp)
        return DyadicRational(self.num, self.exp - k)

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        if not isinstance(other, DyadicRational):
            return NotImplemented
        e = max(self.exp, other.exp)
        return DyadicRational(
            (self.num << (e - self.exp)) + (other.num << (e - other.exp)), e
        )

    def __mul__(self, other):
        if isinstance(other, DyadicRational):
            return DyadicRational(self.num * other.num, self.exp + other.exp)
        if isinstance(other, int):
            if other < 0:
                raise ValueError("negative factor")
            return DyadicRational(self.num * other, self.exp)
        return NotImplemented

    __rmul__ = __mul__

    def _cmp_key(self, other: "DyadicRational") -> tuple[int, int]:
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp), other.num << (e - other.exp)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.exp == 0 and self.num == other
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __lt__(self, other):
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_key(other)
        return a <= b

    def __hash__(self):
        return hash((self.num, self.exp))

    def __float__(self) -> float:
        if self.exp < 1024:
            return self.num / (1 << self.exp)
        return float(self.to_fraction())

    def decimal(self, digits: int = 6) -> str:
        """Exact decimal string with ``digits`` fractional digits.

        Rounds half to even; digits=0 yields a plain integer string.
        """
        if digits < 0:
            raise ValueError("digits must be >= 0")
        scaled = self.num * 10**digits
        q, r = divmod(scaled, 1 << self.exp)
        twice = r << 1
        if twice > (1 << self.exp) or (twice == (1 << self.exp) and q & 1):
            q += 1
        if digits == 0:
            return str(q)
        text = str(q).rjust(digits + 1, "0")
        return f"{text[:-digits]}.{text[-digits:]}"

    def __repr__(self):
        return f"DyadicRational({self.num}, {self.exp})"

    def __str__(self):
        return str(self.num) if self.exp == 0 else f"{self.num}/2^{self.exp}"
