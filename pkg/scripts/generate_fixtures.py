#!/usr/bin/env python3
"""Regenerate the bundled OEIS b-file fixtures from first principles.

Each sequence is recomputed here with deliberately naive code (a plain
list-based sieve plus sympy for arbitrary-precision prime stepping) so the
fixtures act as an independent cross-check of the package rather than a copy
of its output.  Run from the repository root:

    python scripts/generate_fixtures.py

Known prefix values for every sequence are asserted before anything is
written; a mismatch aborts without touching the fixture directory.
"""

import pathlib
import sys

import sympy

FIXTURE_DIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "primefam" / "fixtures"
TERMS = 1000

# p_3000 = 27449 bounds every x the b104272/b080359 scans must visit.
SCAN_LIMIT = 30000

KNOWN_PREFIXES = {
    "A104272": [2, 11, 17, 29, 41, 47, 59, 67, 71, 97, 101, 107, 127, 149, 151, 167],
    "A080359": [2, 3, 13, 19, 31, 43, 53, 61, 71, 73, 101, 103, 109, 113, 139, 157, 173],
    "A006992": [2, 3, 5, 7, 13, 23, 43],
    "A055496": [2, 5, 11, 23, 47, 97],
}

HEADERS = {
    "A104272": "Ramanujan primes: a(n) is the smallest number R such that "
               "pi(x) - pi(x/2) >= n for all x >= R.",
    "A080359": "Labos primes: a(n) is the smallest number x with pi(x) - pi(x/2) = n.",
    "A006992": "Bertrand primes: a(n+1) is the largest prime below 2*a(n), starting from 2.",
    "A055496": "a(n+1) is the smallest prime above 2*a(n), starting from 2.",
}


def prime_flags(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            for q in range(p * p, limit + 1, p):
                flags[q] = False
    return flags


def interval_prime_counts(limit):
    """Return f where f[x] = pi(x) - pi(x // 2)."""
    flags = prime_flags(limit)
    pi = [0] * (limit + 1)
    running = 0
    for x in range(limit + 1):
        if flags[x]:
            running += 1
        pi[x] = running
    return [pi[x] - pi[x // 2] for x in range(limit + 1)]


def ramanujan_terms(count):
    f = interval_prime_counts(SCAN_LIMIT)
    last_below = {}
    for x, value in enumerate(f):
        last_below[value] = x
    terms = []
    for n in range(1, count + 1):
        # R_n is one past the last x where only n-1 primes fit in (x/2, x].
        terms.append(last_below[n - 1] + 1)
    return terms


def labos_terms(count):
    f = interval_prime_counts(SCAN_LIMIT)
    first_at = {}
    for x, value in enumerate(f):
        if value not in first_at:
            first_at[value] = x
    return [first_at[n] for n in range(1, count + 1)]


def bertrand_terms(count):
    terms = [2]
    while len(terms) < count:
        terms.append(int(sympy.prevprime(2 * terms[-1])))
    return terms


def ascending_terms(count):
    terms = [2]
    while len(terms) < count:
        terms.append(int(sympy.nextprime(2 * terms[-1])))
    return terms


def write_bfile(sequence_id, terms):
    path = FIXTURE_DIR / f"{sequence_id}.txt"
    lines = [
        f"# b-file for {sequence_id}: {HEADERS[sequence_id]}",
        f"# Generated locally by scripts/generate_fixtures.py ({len(terms)} terms,",
        "# recomputed from the definition; mirrors the oeis.org b-file layout).",
    ]
    lines.extend(f"{n} {value}" for n, value in enumerate(terms, start=1))
    path.write_text("\n".join(lines) + "\n")
    return path


def main():
    generators = {
        "A104272": ramanujan_terms,
        "A080359": labos_terms,
        "A006992": bertrand_terms,
        "A055496": ascending_terms,
    }
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for sequence_id, generator in generators.items():
        terms = generator(TERMS)
        expected = KNOWN_PREFIXES[sequence_id]
        if terms[: len(expected)] != expected:
            print(f"{sequence_id}: computed prefix {terms[:len(expected)]} does not match "
                  f"the published values {expected}", file=sys.stderr)
            return 1
        path = write_bfile(sequence_id, terms)
        print(f"{sequence_id}: wrote {len(terms)} terms to {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
