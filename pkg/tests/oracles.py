"""Deliberately naive reference implementations used to cross-check the package.

Everything here favors directness over speed: list-based sieves, literal
range scans, and dictionary bookkeeping.  Nothing imports from primefam.
"""

from bisect import bisect_left, bisect_right


def naive_primes(limit):
    """All primes <= limit by a plain boolean-list sieve."""
    if limit < 2:
        return []
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            for q in range(p * p, limit + 1, p):
                flags[q] = False
    return [x for x, is_p in enumerate(flags) if is_p]


def naive_pi_prefix(limit):
    """List a with a[x] = number of primes <= x."""
    primes = set(naive_primes(limit))
    counts = [0] * (limit + 1)
    running = 0
    for x in range(limit + 1):
        if x in primes:
            running += 1
        counts[x] = running
    return counts


def naive_interval_counts(limit):
    """List f with f[x] = pi(x) - pi(x // 2)."""
    counts = naive_pi_prefix(limit)
    return [counts[x] - counts[x // 2] for x in range(limit + 1)]


def naive_ramanujan(count, scan_limit):
    """First `count` Ramanujan primes; scan_limit must exceed every occurrence."""
    f = naive_interval_counts(scan_limit)
    last_at = {}
    for x, value in enumerate(f):
        last_at[value] = x
    return [last_at[n - 1] + 1 for n in range(1, count + 1)]


def naive_labos(count, scan_limit):
    """First `count` Labos primes."""
    f = naive_interval_counts(scan_limit)
    first_at = {}
    for x, value in enumerate(f):
        if value not in first_at:
            first_at[value] = x
    return [first_at[n] for n in range(1, count + 1)]


class NaiveConditions:
    """Literal per-prime condition checks against a fixed prime list."""

    def __init__(self, limit):
        self.primes = naive_primes(limit)
        self.prime_set = set(self.primes)

    def next_prime(self, x):
        return self.primes[bisect_right(self.primes, x)]

    def prev_prime(self, x):
        return self.primes[bisect_left(self.primes, x) - 1]

    def rank(self, p):
        return bisect_left(self.primes, p) + 1

    def cond1(self, p):
        q = self.next_prime(p)
        return all(y not in self.prime_set
                   for y in range((p + 1) // 2, (q - 1) // 2 + 1))

    def cond2(self, p):
        q = self.next_prime(p)
        after_half = self.next_prime(p // 2)
        return q < 2 * after_half

    def cond3(self, p):
        prev = self.prev_prime(p)
        return all(y not in self.prime_set
                   for y in range((prev + 1) // 2, (p - 1) // 2 + 1))

    def cond4(self, p):
        # largest prime strictly below p/2, i.e. <= floor(p/2) for odd p
        below_half = self.primes[bisect_right(self.primes, p // 2) - 1]
        return any(y in self.prime_set for y in range(2 * below_half + 1, p))
