"""
Exact truncated p-adic arithmetic.

PadicInt is a residue of ℤ_p modulo p^N, DualElem is a finite tail c/p^k of
ℚ_p/ℤ_p and PhaseRational is an exact element of ℚ/ℤ with p-power
denominator. Phases stay exact until ``to_complex`` is called.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence, Tuple, Union

from ..errors import (
    InsufficientPrecisionError,
    InvalidPrimeError,
    NotInvertibleError,
    PrecisionMismatchError,
    PrimeMismatchError,
    ZeroArgumentError,
)


def check_prime(p: int) -> int:
    """
    Validate that ``p`` is an odd prime.

    Args:
        p: Candidate prime

    Returns:
        The prime itself

    Raises:
        InvalidPrimeError: If p is 2, composite or smaller than 3
    """
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise InvalidPrimeError(f"Expected an odd prime >= 3, got {p!r}")
    for f in range(3, math.isqrt(p) + 1, 2):
        if p % f == 0:
            raise InvalidPrimeError(f"{p} is not prime")
    return p


def int_valuation(n: int, p: int) -> Optional[int]:
    """Return the exponent of p in a nonzero integer, or None for 0."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) through Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@lru_cache(maxsize=65536)
def phase_to_complex(numer: int, modulus: int) -> complex:
    """Evaluate e^{2πi numer/modulus}; the only place phases become floats."""
    if numer % modulus == 0:
        return complex(1.0, 0.0)
    return cmath.exp(2j * math.pi * (numer % modulus) / modulus)


@dataclass(frozen=True)
class Valuation:
    """
    The valuation of a p-adic quantity.

    Attributes:
        value: Integer valuation, or ``math.inf`` for an exact zero
        lower_bound: True when the value only bounds the valuation from below
            (a truncated integer whose residue is 0 at its precision)
    """
    value: Union[int, float]
    lower_bound: bool = False

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf

    def __str__(self) -> str:
        if self.is_infinite:
            return "+inf"
        return f">={self.value}" if self.lower_bound else str(self.value)


@dataclass(frozen=True)
class PhaseRational:
    """
    An exact element numer/p^k of ℚ/ℤ.

    Attributes:
        prime: The prime p
        denom_exp: Exponent k of the denominator
        numer: Numerator in [0, p^k)
    """
    prime: int
    denom_exp: int
    numer: int

    def __post_init__(self) -> None:
        if self.denom_exp < 0:
            raise ValueError("Phase denominator exponent must be non-negative")
        if not 0 <= self.numer < self.prime ** self.denom_exp:
            raise ValueError(f"Phase numerator {self.numer} out of range for {self.prime}^{self.denom_exp}")

    @classmethod
    def of(cls, prime: int, numer: int, denom_exp: int) -> "PhaseRational":
        """Build the reduced phase numer/p^denom_exp mod 1."""
        modulus = prime ** denom_exp
        numer %= modulus
        while denom_exp > 0 and numer % prime == 0:
            numer //= prime
            denom_exp -= 1
        return cls(prime, denom_exp, numer)

    @classmethod
    def zero(cls, prime: int) -> "PhaseRational":
        return cls(prime, 0, 0)

    @property
    def is_zero(self) -> bool:
        return self.numer == 0

    @property
    def value(self) -> float:
        return self.numer / self.prime ** self.denom_exp

    def as_fraction(self) -> Fraction:
        return Fraction(self.numer, self.prime ** self.denom_exp)

    def to_complex(self) -> complex:
        return phase_to_complex(self.numer, self.prime ** self.denom_exp)

    def _same_prime(self, other: "PhaseRational") -> None:
        if other.prime != self.prime:
            raise PrimeMismatchError(f"Cannot combine phases over {self.prime} and {other.prime}")

    def __add__(self, other: "PhaseRational") -> "PhaseRational":
        self._same_prime(other)
        k = max(self.denom_exp, other.denom_exp)
        p = self.prime
        numer = self.numer * p ** (k - self.denom_exp) + other.numer * p ** (k - other.denom_exp)
        return PhaseRational.of(p, numer, k)

    def __neg__(self) -> "PhaseRational":
        return PhaseRational.of(self.prime, -self.numer, self.denom_exp)

    def __sub__(self, other: "PhaseRational") -> "PhaseRational":
        return self + (-other)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"{self.numer}/{self.prime ** self.denom_exp}"


@dataclass(frozen=True)
class PadicInt:
    """
    An element of ℤ_p truncated to N digits.

    Attributes:
        prime: Odd prime p
        precision: Number of digits N
        residue: Representative in [0, p^N)
    """
    prime: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        check_prime(self.prime)
        if self.precision < 1:
            raise ValueError(f"Precision must be at least 1, got {self.precision}")
        if not 0 <= self.residue < self.prime ** self.precision:
            raise ValueError(f"Residue {self.residue} out of range mod {self.prime}^{self.precision}")

    @classmethod
    def of(cls, prime: int, precision: int, value: int) -> "PadicInt":
        """Reduce an arbitrary integer modulo p^N."""
        return cls(prime, precision, value % prime ** precision)

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    @property
    def is_zero(self) -> bool:
        return self.residue == 0

    def reduce(self, n: int) -> int:
        """Return the residue modulo p^n."""
        if n > self.precision:
            raise InsufficientPrecisionError(
                f"Cannot reduce mod {self.prime}^{n} at precision {self.precision}"
            )
        return self.residue % self.prime ** n

    def digits(self) -> Tuple[int, ...]:
        """Base-p digits, least significant first."""
        out = []
        n = self.residue
        for _ in range(self.precision):
            n, r = divmod(n, self.prime)
            out.append(r)
        return tuple(out)

    def _coerce(self, other: Union["PadicInt", int]) -> "PadicInt":
        if isinstance(other, int):
            return PadicInt.of(self.prime, self.precision, other)
        if not isinstance(other, PadicInt):
            return NotImplemented
        if other.prime != self.prime:
            raise PrimeMismatchError(f"Cannot combine {self.prime}-adic and {other.prime}-adic integers")
        if other.precision != self.precision:
            raise PrecisionMismatchError(
                f"Cannot combine precisions {self.precision} and {other.precision}"
            )
        return other

    def __add__(self, other: Union["PadicInt", int]) -> "PadicInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PadicInt.of(self.prime, self.precision, self.residue + o.residue)

    __radd__ = __add__

    def __mul__(self, other: Union["PadicInt", int]) -> "PadicInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PadicInt.of(self.prime, self.precision, self.residue * o.residue)

    __rmul__ = __mul__

    def __neg__(self) -> "PadicInt":
        return PadicInt.of(self.prime, self.precision, -self.residue)

    def __sub__(self, other: Union["PadicInt", int]) -> "PadicInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PadicInt.of(self.prime, self.precision, self.residue - o.residue)

    def __rsub__(self, other: int) -> "PadicInt":
        return (-self) + other

    def __int__(self) -> int:
        return self.residue

    def __str__(self) -> str:
        return f"{self.residue} mod {self.prime}^{self.precision}"


@dataclass(frozen=True)
class DualElem:
    """
    An element c/p^k of ℚ_p/ℤ_p in canonical form.

    Attributes:
        prime: The prime p
        denom_exp: Exponent k; 0 encodes the trivial character
        numer: Numerator in [0, p^k), prime to p when k >= 1
    """
    prime: int
    denom_exp: int
    numer: int

    def __post_init__(self) -> None:
        if self.denom_exp < 0:
            raise ValueError("Denominator exponent must be non-negative")
        if self.denom_exp == 0:
            if self.numer != 0:
                raise ValueError("The trivial dual element has numerator 0")
            return
        if not 0 < self.numer < self.prime ** self.denom_exp or self.numer % self.prime == 0:
            raise ValueError(
                f"{self.numer}/{self.prime}^{self.denom_exp} is not in canonical form"
            )

    @classmethod
    def of(cls, prime: int, numer: int, denom_exp: int) -> "DualElem":
        """Canonical form of numer/p^denom_exp in ℚ_p/ℤ_p."""
        phase = PhaseRational.of(prime, numer, denom_exp)
        return cls(prime, phase.denom_exp, phase.numer)

    @classmethod
    def trivial(cls, prime: int) -> "DualElem":
        return cls(prime, 0, 0)

    @classmethod
    def from_fraction(cls, value: Fraction, prime: int) -> "DualElem":
        phase = rational_fractional_part(value, prime)
        return cls(prime, phase.denom_exp, phase.numer)

    @classmethod
    def parse(cls, text: str, prime: int) -> "DualElem":
        """
        Parse "1", "0", "c/p^k" or "c/D" with D a power of p.

        Raises:
            ValueError: If the text is not a p-power tail
        """
        text = text.strip()
        if text in ("1", "0"):
            return cls.trivial(prime)
        try:
            numer_text, denom_text = text.split("/")
            numer = int(numer_text)
            if "^" in denom_text:
                base_text, exp_text = denom_text.split("^")
                base, exp = int(base_text), int(exp_text)
                if base != prime:
                    raise ValueError(f"Denominator base {base} differs from prime {prime}")
                denom = prime ** exp
            else:
                denom = int(denom_text)
        except ValueError as e:
            raise ValueError(f"Invalid dual element {text!r}: {e}") from None
        k = int_valuation(denom, prime)
        if k is None or prime ** k != denom:
            raise ValueError(f"Invalid dual element {text!r}: denominator is not a power of {prime}")
        return cls.of(prime, numer, k)

    @property
    def is_trivial(self) -> bool:
        return self.denom_exp == 0

    @property
    def level(self) -> int:
        return self.denom_exp

    @property
    def norm(self) -> int:
        return self.prime ** self.denom_exp

    def as_fraction(self) -> Fraction:
        return Fraction(self.numer, self.prime ** self.denom_exp)

    def numer_at(self, k: int) -> int:
        """Numerator over the common denominator p^k (k >= denom_exp)."""
        return self.numer * self.prime ** (k - self.denom_exp)

    def reduce_mod(self, m: int) -> "DualElem":
        """Canonical representative modulo p^{-m}ℤ_p."""
        if self.denom_exp <= m:
            return DualElem.trivial(self.prime)
        return DualElem.of(self.prime, self.numer % self.prime ** (self.denom_exp - m), self.denom_exp)

    def is_canonical_mod(self, m: int) -> bool:
        if self.is_trivial:
            return True
        return self.denom_exp > m and self.numer < self.prime ** (self.denom_exp - m)

    def scale(self, factor: Union[int, PadicInt]) -> "DualElem":
        """Multiply by an element of ℤ_p."""
        if isinstance(factor, PadicInt):
            if factor.prime != self.prime:
                raise PrimeMismatchError("Cannot scale by an integer over another prime")
            factor = factor.reduce(self.denom_exp) if self.denom_exp else 0
        return DualElem.of(self.prime, self.numer * factor, self.denom_exp)

    def __add__(self, other: "DualElem") -> "DualElem":
        if other.prime != self.prime:
            raise PrimeMismatchError("Cannot add dual elements over different primes")
        k = max(self.denom_exp, other.denom_exp)
        return DualElem.of(self.prime, self.numer_at(k) + other.numer_at(k), k)

    def __neg__(self) -> "DualElem":
        return DualElem.of(self.prime, -self.numer, self.denom_exp)

    def __sub__(self, other: "DualElem") -> "DualElem":
        return self + (-other)

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        return f"{self.numer}/{self.prime ** self.denom_exp}"


@dataclass(frozen=True)
class DualPoint:
    """
    A d-tuple of dual elements, the label of a character of ℤ_p^d.

    Attributes:
        components: The dual elements, all over the same prime
    """
    components: Tuple[DualElem, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("A dual point needs at least one component")
        primes = {c.prime for c in self.components}
        if len(primes) != 1:
            raise PrimeMismatchError(f"Mixed primes in dual point: {sorted(primes)}")

    @classmethod
    def of(cls, components: Sequence[DualElem]) -> "DualPoint":
        return cls(tuple(components))

    @classmethod
    def trivial(cls, prime: int, dimension: int) -> "DualPoint":
        return cls(tuple(DualElem.trivial(prime) for _ in range(dimension)))

    @classmethod
    def parse(cls, text: str, prime: int) -> "DualPoint":
        """Parse a comma-separated list such as "1,2/9,1/3"."""
        parts = [t for t in text.replace(" ", "").split(",") if t]
        return cls(tuple(DualElem.parse(t, prime) for t in parts))

    @property
    def prime(self) -> int:
        return self.components[0].prime

    @property
    def dimension(self) -> int:
        return len(self.components)

    @cached_property
    def level(self) -> int:
        return max(c.denom_exp for c in self.components)

    @property
    def norm(self) -> int:
        return self.prime ** self.level

    @property
    def is_trivial(self) -> bool:
        return all(c.is_trivial for c in self.components)

    def sub_level(self, indices: Sequence[int]) -> int:
        """Level of the sub-tuple at the given 0-based positions."""
        return max((self.components[i].denom_exp for i in indices), default=0)

    def sub_norm(self, indices: Sequence[int]) -> int:
        return self.prime ** self.sub_level(indices)

    @property
    def key(self) -> Tuple[Tuple[int, int], ...]:
        """Deterministic sort key: trivial first, then by level and numerator."""
        return tuple((c.denom_exp, c.numer) for c in self.components)

    def __iter__(self) -> Iterator[DualElem]:
        return iter(self.components)

    def __getitem__(self, i: int) -> DualElem:
        return self.components[i]

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.components)


def rational_valuation(q: Fraction, p: int) -> Union[int, float]:
    """p-adic valuation of a rational number (``math.inf`` for 0)."""
    if q == 0:
        return math.inf
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def rational_fractional_part(q: Union[Fraction, int], p: int) -> PhaseRational:
    """
    The p-adic fractional part {q}_p of a rational number.

    Denominator factors prime to p are inverted modulo the p-power part, so
    ½, ¼ and ⅙ coefficients are handled exactly.
    """
    q = Fraction(q)
    den = q.denominator
    k = int_valuation(den, p)
    if k == 0:
        return PhaseRational.zero(p)
    modulus = p ** k
    unit = den // modulus
    numer = q.numerator * pow(unit, -1, modulus)
    return PhaseRational.of(p, numer, k)


def valuation(x: Union[PadicInt, DualElem, DualPoint, int, Fraction], prime: Optional[int] = None) -> Valuation:
    """
    Return the p-adic valuation ϑ(x).

    Args:
        x: A truncated integer, a dual element or point, or an exact rational
        prime: Required when x is a plain int or Fraction

    Returns:
        The valuation; a truncated zero yields a lower bound "≥ N" and an exact
        zero yields +∞
    """
    if isinstance(x, PadicInt):
        if x.is_zero:
            return Valuation(x.precision, lower_bound=True)
        return Valuation(int_valuation(x.residue, x.prime))
    if isinstance(x, DualElem):
        return Valuation(math.inf) if x.is_trivial else Valuation(-x.denom_exp)
    if isinstance(x, DualPoint):
        return Valuation(math.inf) if x.is_trivial else Valuation(-x.level)
    if prime is None:
        raise ValueError("A prime is required to take the valuation of a plain number")
    check_prime(prime)
    return Valuation(rational_valuation(Fraction(x), prime))


def fractional_part(xi: DualElem, x: PadicInt) -> PhaseRational:
    """
    Return {ξ·x}_p.

    Raises:
        InsufficientPrecisionError: If x carries fewer than k digits
        PrimeMismatchError: If the primes differ
    """
    if xi.prime != x.prime:
        raise PrimeMismatchError(f"Dual element over {xi.prime} applied to {x.prime}-adic integer")
    if xi.is_trivial:
        return PhaseRational.zero(xi.prime)
    if x.precision < xi.denom_exp:
        raise InsufficientPrecisionError(
            f"Need {xi.denom_exp} digits to pair with {xi}, have {x.precision}"
        )
    return PhaseRational.of(xi.prime, xi.numer * x.reduce(xi.denom_exp), xi.denom_exp)


def character_eval(xi: DualPoint, x: Sequence[PadicInt]) -> complex:
    """Evaluate the character e^{2πi{ξ·x}_p} of ℤ_p^d."""
    if len(x) != xi.dimension:
        raise ValueError(f"Dimension mismatch: dual point has {xi.dimension} components, point has {len(x)}")
    total = PhaseRational.zero(xi.prime)
    for component, coord in zip(xi, x):
        total = total + fractional_part(component, coord)
    return total.to_complex()


def div_exact(x: PadicInt, k: int) -> PadicInt:
    """
    Return y with k·y ≡ x mod p^N.

    Raises:
        NotInvertibleError: If p divides k
    """
    if k % x.prime == 0:
        raise NotInvertibleError(f"{k} is not invertible modulo {x.prime}")
    return PadicInt.of(x.prime, x.precision, x.residue * pow(k, -1, x.modulus))


def lambda_p(a: Union[DualElem, Fraction, int], prime: Optional[int] = None) -> complex:
    """
    The Gauss-sum factor λ_p(a) of the p-adic Gaussian integral.

    Args:
        a: Nonzero dual element or rational
        prime: Required when a is a plain rational

    Returns:
        One of 1, -1, i, -i

    Raises:
        ZeroArgumentError: If a is zero
    """
    if isinstance(a, DualElem):
        if a.is_trivial:
            raise ZeroArgumentError("lambda_p is undefined at 0")
        p, v, a0 = a.prime, -a.denom_exp, a.numer % a.prime
    else:
        if prime is None:
            raise ValueError("A prime is required for a rational argument")
        p = check_prime(prime)
        q = Fraction(a)
        if q == 0:
            raise ZeroArgumentError("lambda_p is undefined at 0")
        v = rational_valuation(q, p)
        unit = q / Fraction(p) ** v
        a0 = unit.numerator * pow(unit.denominator, -1, p) % p
    if v % 2 == 0:
        return complex(1, 0)
    symbol = legendre(a0, p)
    if p % 4 == 1:
        return complex(symbol, 0)
    return complex(0, symbol)
