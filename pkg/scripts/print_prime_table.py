#!/usr/bin/env python3
"""Print the {2,3}-smooth field primes between 2^16 and 2^21, then two
larger examples showing the pattern continues."""

from smoothntt.numtheory import factorize, prime_search


def main() -> None:
    print(f"{'prime p':>10}  {'p-1':<12} generator")
    for rec in prime_search(2**16, 2**21, {2, 3}):
        print(f"{rec.p:>10}  {str(rec.factorization):<12} {rec.generator}")
    print()
    for p in (113246209, 725594113):
        print(f"{p:>10}  {factorize(p - 1)}")


if __name__ == "__main__":
    main()
