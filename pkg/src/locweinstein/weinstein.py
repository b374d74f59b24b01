"""Handle-calculus layer: subdomain specs, P-handle replacement, the
embeddability lattice, and the end-to-end classification.

All geometry is forgotten; a subdomain is represented by the complexes of
its carved co-core disks, which is exactly the input the classification
consumes.
"""

from ._primes import PrimeSet
from .localize import CategoryClass, classify_disks
from .zcomplex import FreeComplex, elementary_complex, require_valid


class SubdomainSpec:
    """An ambient label plus the carved co-core disk complexes."""

    __slots__ = ("ambient", "carved")

    def __init__(self, ambient, carved=()):
        self.ambient = str(ambient)
        self.carved = list(carved)
        for c in self.carved:
            require_valid(c)

    def to_json_dict(self):
        return {"ambient": self.ambient,
                "carved": [c.to_json_dict() for c in self.carved]}

    @classmethod
    def from_json_dict(cls, data):
        return cls(data.get("ambient", ""),
                   [FreeComplex.from_json_dict(c) for c in data.get("carved", [])])


class HandlePresentation:
    """Subcritical part label plus critical handles, each optionally
    decorated with a prime set (empty decoration = standard handle)."""

    __slots__ = ("subcritical", "critical_handles")

    def __init__(self, subcritical, critical_handles=()):
        self.subcritical = str(subcritical)
        handles = []
        for h in critical_handles:
            if h is None:
                h = PrimeSet()
            if not isinstance(h, PrimeSet):
                h = PrimeSet(h)
            handles.append(h)
        self.critical_handles = handles

    @classmethod
    def standard(cls, label, n_handles):
        return cls(label, [PrimeSet() for _ in range(n_handles)])

    def to_json_dict(self):
        return {"subcritical": self.subcritical,
                "critical_handles": [h.to_json_list() for h in self.critical_handles]}

    @classmethod
    def from_json_dict(cls, data):
        return cls(data.get("subcritical", ""),
                   [PrimeSet(h) for h in data.get("critical_handles", [])])


def disk_complex_from_moore(m, d):
    """Complex of the shifted Moore-space disk with torsion parameter m.

    For m >= 1 this is the two-term complex Z[d+1] --m--> Z[d]; m = 1 is
    the zero object and m = 0 is the fiber representative with vanishing
    differential (two free classes).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return elementary_complex(m, d)


def p_handle_disks(P):
    """Disks carved by decorating one critical handle with P.

    One cone(p * Id) per prime p; a single free generator when 0 is
    present (that disk split-generates, so the result is trivial)."""
    if P.contains_zero:
        return [FreeComplex({0: 1})]
    return [elementary_complex(p, 0) for p in P.primes]


def replace_handles(H, P):
    """Decorate every critical handle of H with P."""
    return HandlePresentation(H.subcritical, [P for _ in H.critical_handles])


def induced_spec(H, ambient=None):
    """The subdomain spec carved by a decorated handle presentation."""
    carved = []
    for dec in H.critical_handles:
        carved.extend(p_handle_disks(dec))
    return SubdomainSpec(ambient if ambient is not None else H.subcritical, carved)


def subdomain_classify(S):
    return classify_disks(S.carved)


def classify_presentation(H):
    return subdomain_classify(induced_spec(H))


def embeddable(P, Q):
    """Whether the P-subdomain embeds in the Q-subdomain: Q subset of P,
    or 0 in P."""
    if P.contains_zero:
        return True
    return Q <= P


def embedding_witness(P, Q):
    """An obstruction prime when the embedding fails, else None.

    The returned q satisfies: the P-subdomain's category is nontrivial
    over F_q while the Q-subdomain's is trivial over F_q.  When Q brings
    only the element 0, any prime outside P works; the smallest is chosen.
    """
    if embeddable(P, Q):
        return None
    extra = sorted(set(Q.primes) - set(P.primes))
    if extra:
        return extra[0]
    # Here Q contains 0 but P does not: every F_q kills the Q-side.
    q = 2
    while q in P.primes:
        q = _next_prime(q)
    return q


def _next_prime(q):
    from ._primes import is_prime
    q += 1
    while not is_prime(q):
        q += 1
    return q


def connected_sum(P, Q):
    """Union of prime sets, with 0 absorbing."""
    return P.union(Q)


def lattice_chain(primes):
    """Prefix chain of prime sets for a list of distinct primes:
    empty set, {p1}, {p1, p2}, ..."""
    primes = [int(p) for p in primes]
    if len(set(primes)) != len(primes):
        raise ValueError("duplicate primes in chain")
    chain = [PrimeSet()]
    for i in range(1, len(primes) + 1):
        chain.append(PrimeSet(primes[:i]))
    return chain
