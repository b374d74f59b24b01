"""Prime sets and deterministic primality, shared by localize and decompose."""

from sympy import factorint

# Witness set proving primality for all inputs below 2^64
# (Sorenson-Webster / Jaeschke bounds).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 2 ** 64


class PrimalityRangeError(ValueError):
    """Input too large for the deterministic witness set."""


def is_prime(n):
    """Deterministic Miller-Rabin, valid for n < 2^64."""
    n = int(n)
    if n >= _MR_LIMIT:
        raise PrimalityRangeError("primality test limited to inputs below 2^64")
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % p == 0 for p in small):
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_divisors(m):
    """Sorted prime divisors of |m|, m != 0."""
    m = abs(int(m))
    if m == 0:
        raise ValueError("0 has no prime divisors")
    return sorted(factorint(m))


class PrimeSet:
    """A finite set of primes, possibly empty, possibly containing 0.

    0 stands for the flexibilizing element: any set containing it behaves
    as trivializing in all queries.
    """

    __slots__ = ("contains_zero", "primes")

    def __init__(self, primes=(), contains_zero=False):
        ps = set()
        for p in primes:
            p = int(p)
            if p == 0:
                contains_zero = True
                continue
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            ps.add(p)
        self.contains_zero = bool(contains_zero)
        self.primes = tuple(sorted(ps))

    @classmethod
    def parse(cls, text):
        """Parse a comma-separated list such as "2,3,0"; "" is the empty set."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def is_empty(self):
        return not self.contains_zero and not self.primes

    def __contains__(self, p):
        if p == 0:
            return self.contains_zero
        return p in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __eq__(self, other):
        return (isinstance(other, PrimeSet)
                and self.contains_zero == other.contains_zero
                and self.primes == other.primes)

    def __hash__(self):
        return hash((self.contains_zero, self.primes))

    def __le__(self, other):
        """Subset, with 0 treated as an element."""
        if self.contains_zero and not other.contains_zero:
            return False
        return set(self.primes) <= set(other.primes)

    def union(self, other):
        return PrimeSet(self.primes + other.primes,
                        self.contains_zero or other.contains_zero)

    def __repr__(self):
        elems = (["0"] if self.contains_zero else []) + [str(p) for p in self.primes]
        return "PrimeSet({%s})" % ", ".join(elems)

    def to_json_list(self):
        return ([0] if self.contains_zero else []) + list(self.primes)
