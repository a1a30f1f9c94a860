"""Integer factorization, totients, generator search, smooth-prime discovery.

Everything here works on integers below 2**31 (the field modulus bound), so
trial division is entirely adequate for factoring and the generator search
only ever needs a handful of modular exponentiations per candidate.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidField, NotADivisor, ZeroElement
from .field import FIELD_MODULUS_LIMIT, FieldElement, FieldParams, fp_pow, is_prime


@dataclass(frozen=True)
class Factorization:
    """A positive integer n as an ordered product of prime powers."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        prev = 1
        for prime, exp in self.factors:
            if prime <= prev:
                raise ValueError("factor primes must be strictly increasing")
            if exp < 1:
                raise ValueError("exponents must be positive")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            prev = prime
            prod *= prime**exp
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        """Compact form like "2^14*3^2"; exponent 1 prints bare ("2^18*3")."""
        if not self.factors:
            return "1"
        return "*".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors
        )


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    factors = []
    m = n
    for d in (2, 3):
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            factors.append((d, e))
    d = 5
    while d * d <= m:
        # 6k +/- 1 wheel
        for cand in (d, d + 2):
            e = 0
            while m % cand == 0:
                m //= cand
                e += 1
            if e:
                factors.append((cand, e))
        d += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def euler_phi(f: Factorization) -> int:
    """Euler's totient of f.n, computed exactly as prod p^(e-1) * (p-1)."""
    phi = 1
    for p, e in f.factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def generator_probability(f: Factorization) -> Fraction:
    """Chance phi(n)/n that a uniform element generates a cyclic group of order n."""
    if f.n < 2:
        raise ValueError("needs a group order n >= 2")
    return Fraction(euler_phi(f), f.n)


def element_order(params: FieldParams, a: FieldElement, f: Factorization) -> int:
    """Exact multiplicative order of a in F_p*, given f = factorize(p - 1).

    Starts from the group order and strips prime factors while the power
    stays 1; by Lagrange the result is the order.
    """
    if a % params.p == 0:
        raise ZeroElement("0 has no multiplicative order")
    if f.n != params.p - 1:
        raise ValueError("factorization must be of p - 1")
    order = f.n
    for q, e in f.factors:
        for _ in range(e):
            if order % q == 0 and fp_pow(a, order // q, params) == 1:
                order //= q
            else:
                break
    return order


def find_generator(params: FieldParams, n: int) -> FieldElement:
    """Smallest a >= 2 generating the order-n subgroup of F_p*.

    Requires n | p - 1.  Candidates are scanned in ascending order; a
    candidate generates the subgroup iff a^n = 1 and a^(n/r) != 1 for every
    prime r | n.  (For n = p - 1 the first condition is Fermat and the scan
    degenerates to the classic full-group generator search.)  n = 1 returns
    1, the only element of the trivial subgroup.
    """
    if n < 1 or (params.p - 1) % n != 0:
        raise NotADivisor(f"{n} does not divide p - 1 = {params.p - 1}")
    if n == 1:
        return 1
    prime_factors = factorize(n).primes
    full_group = n == params.p - 1
    for a in range(2, params.p):
        if not full_group and fp_pow(a, n, params) != 1:
            continue
        if all(fp_pow(a, n // r, params) != 1 for r in prime_factors):
            return a
    raise RuntimeError("unreachable: a cyclic group always has a generator")


@dataclass(frozen=True)
class SmoothPrimeRecord:
    """A prime p whose group order p - 1 factors over a small prime set."""

    p: int
    factorization: Factorization
    generator: FieldElement


def _smooth_numbers(lo: int, hi: int, primes: tuple[int, ...]) -> list[int]:
    """All products of powers of `primes` in the open interval (lo, hi)."""
    found: list[int] = []

    def extend(value: int, index: int) -> None:
        if index == len(primes):
            if lo < value < hi:
                found.append(value)
            return
        while value < hi:
            extend(value, index + 1)
            value *= primes[index]

    extend(1, 0)
    return sorted(found)


def prime_search(
    lo: int, hi: int, allowed_primes: set[int]
) -> list[SmoothPrimeRecord]:
    """Every prime p in (lo, hi) whose p - 1 factors entirely over allowed_primes.

    Candidates are enumerated directly as smooth numbers m = p - 1 (never by
    scanning the whole interval) and primality-tested.  Each record carries
    the factorization of p - 1 and the smallest full-group generator.
    """
    if lo >= hi:
        raise ValueError("need lo < hi")
    if not allowed_primes:
        raise ValueError("allowed_primes must be non-empty")
    if hi > FIELD_MODULUS_LIMIT + 1:
        raise InvalidField("search bound exceeds the 2**31 modulus limit")
    base = tuple(sorted(allowed_primes))
    for q in base:
        if not is_prime(q):
            raise ValueError(f"allowed factor {q} is not prime")
    records = []
    for m in _smooth_numbers(lo - 1, hi - 1, base):
        p = m + 1
        # p = 2 would need a generator of the trivial group; below FieldParams range.
        if p > 2 and is_prime(p):
            params = FieldParams(p)
            records.append(
                SmoothPrimeRecord(p, factorize(m), find_generator(params, m))
            )
    return records
