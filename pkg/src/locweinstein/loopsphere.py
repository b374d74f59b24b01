"""Twisted complexes over the graded ring Z[u], deg u = 1 - n.

This models the wrapped category of T*S^n generated by a cotangent fiber:
objects are finite sums of shifted copies of the fiber with a strictly
triangular degree-1 differential whose entries are integer multiples of
powers of u.  The zero-section is the cone on u.  Since deg u < 0, each
hom degree between two such objects is a finite free Z-module, so window
cohomology and the geometricity obstruction are exact computations.
"""

from .intlin import IntMatrix, kernel_basis, snf, solve
from .zcomplex import FreeComplex, homology, require_valid


class WindowError(ValueError):
    """The requested degree window cannot certify the computation."""


class InvalidTwisted(ValueError):
    """The data does not describe a twisted complex over the sphere ring."""


class SphereRing:
    """The graded ring Z[u] with deg u = 1 - n, n >= 2."""

    __slots__ = ("n",)

    def __init__(self, n):
        if n < 2:
            raise ValueError("sphere dimension must be >= 2")
        self.n = int(n)

    @property
    def deg_u(self):
        return 1 - self.n

    def __eq__(self, other):
        return isinstance(other, SphereRing) and self.n == other.n

    def __hash__(self):
        return hash(("SphereRing", self.n))

    def __repr__(self):
        return f"SphereRing(n={self.n})"


class TwistedComplexA:
    """Sum of shifted fiber copies A[s_i] with triangular differential.

    `delta` maps (target, source) index pairs to (coeff, power): the
    component from summand `source` into summand `target` is
    coeff * u^power, nonzero only for target > source.  Degree purity pins
    the power: power * (1 - n) + shifts[source] - shifts[target] = 1.
    """

    __slots__ = ("ring", "shifts", "delta")

    def __init__(self, ring, shifts, delta=None):
        self.ring = ring
        self.shifts = tuple(int(s) for s in shifts)
        clean = {}
        for (tgt, src), value in (delta or {}).items():
            coeff, power = int(value[0]), int(value[1])
            if coeff == 0:
                continue
            if not (0 <= src < len(self.shifts) and 0 <= tgt < len(self.shifts)):
                raise InvalidTwisted("delta index out of range")
            if power < 0:
                raise InvalidTwisted("negative power of u")
            clean[(tgt, src)] = (coeff, power)
        self.delta = clean

    def expected_power(self, tgt, src):
        """The unique power of u legal at this slot, or None."""
        num = 1 - self.shifts[src] + self.shifts[tgt]
        den = self.ring.deg_u
        if num % den != 0:
            return None
        p = num // den
        return p if p >= 0 else None

    def __eq__(self, other):
        return (isinstance(other, TwistedComplexA)
                and self.ring == other.ring and self.shifts == other.shifts
                and self.delta == other.delta)

    def __repr__(self):
        return f"TwistedComplexA(n={self.ring.n}, shifts={list(self.shifts)})"

    def to_json_dict(self):
        return {
            "n": self.ring.n,
            "shifts": list(self.shifts),
            "delta": [{"row": tgt, "col": src, "coeffs": [[power, coeff]]}
                      for (tgt, src), (coeff, power) in sorted(self.delta.items())],
        }

    @classmethod
    def from_json_dict(cls, data):
        ring = SphereRing(data["n"])
        delta = {}
        for ent in data.get("delta", []):
            tgt, src = int(ent["row"]), int(ent["col"])
            terms = {}
            for power, coeff in ent.get("coeffs", []):
                terms[int(power)] = terms.get(int(power), 0) + int(coeff)
            terms = {p: c for p, c in terms.items() if c}
            if not terms:
                continue
            if len(terms) > 1:
                raise InvalidTwisted("entry mixes distinct powers of u")
            ((power, coeff),) = terms.items()
            delta[(tgt, src)] = (coeff, power)
        return cls(ring, data.get("shifts", []), delta)


def validate_twisted(T):
    """True iff delta is strictly triangular, degree-pure, and squares to 0."""
    for (tgt, src), (coeff, power) in T.delta.items():
        if tgt <= src:
            return False
        if T.expected_power(tgt, src) != power:
            return False
    # delta * delta = 0, composing monomials in Z[u].
    n = len(T.shifts)
    for tgt in range(n):
        for src in range(n):
            acc = 0
            for mid in range(src + 1, tgt):
                a = T.delta.get((tgt, mid))
                b = T.delta.get((mid, src))
                if a and b:
                    acc += a[0] * b[0]
            if acc != 0:
                return False
    return True


def require_valid_twisted(T):
    if not validate_twisted(T):
        raise InvalidTwisted("not a valid twisted complex")


def from_zcomplex(C, ring):
    """Image of a finite cochain complex under tensoring with the fiber.

    One summand A[-k] per generator in degree k, delta entries the integer
    differential entries times u^0.
    """
    require_valid(C)
    shifts = []
    index = {}
    for k in C.support():
        for j in range(C.rank(k)):
            index[(k, j)] = len(shifts)
            shifts.append(-k)
    delta = {}
    for k, mat in C.differentials.items():
        for i in range(mat.rows):
            for j in range(mat.cols):
                v = mat.at(i, j)
                if v:
                    delta[(index[(k + 1, i)], index[(k, j)])] = (v, 0)
    return TwistedComplexA(ring, shifts, delta)


def zero_section(ring):
    """The cone on u: summands A[n], A[0] with delta = u."""
    return TwistedComplexA(ring, [ring.n, 0], {(1, 0): (1, 1)})


def fiber(ring):
    """The cotangent fiber itself: a single unshifted summand."""
    return TwistedComplexA(ring, [0])


class WindowProfile:
    """Hom-complex cohomology restricted to a degree window."""

    __slots__ = ("lo", "hi", "data")

    def __init__(self, lo, hi, data):
        self.lo = int(lo)
        self.hi = int(hi)
        self.data = {int(k): (int(f), tuple(t)) for k, (f, t) in data.items()
                     if (f or t)}

    def free_rank(self, k):
        return self.data.get(k, (0, ()))[0]

    def torsion(self, k):
        return self.data.get(k, (0, ()))[1]

    def support(self):
        return sorted(self.data)

    def __eq__(self, other):
        return (isinstance(other, WindowProfile) and self.lo == other.lo
                and self.hi == other.hi and self.data == other.data)

    def __repr__(self):
        return f"WindowProfile([{self.lo}, {self.hi}], {self.data})"

    def to_json_dict(self):
        return {"window": [self.lo, self.hi],
                "profile": {str(k): {"free": f, "torsion": list(t)}
                            for k, (f, t) in sorted(self.data.items())}}


def _hom_basis(T1, T2, d):
    """Basis of the degree-d hom group: triples (i, j, p) for a map
    u^p: summand i of T1 -> summand j of T2."""
    den = T1.ring.deg_u
    out = []
    for i, s in enumerate(T1.shifts):
        for j, t in enumerate(T2.shifts):
            num = d - s + t
            if num % den == 0 and num // den >= 0:
                out.append((i, j, num // den))
    return out


def _hom_differential(T1, T2, basis_d, basis_next, d):
    """Matrix of the hom differential delta2 o phi - (-1)^d phi o delta1."""
    pos = {b: r for r, b in enumerate(basis_next)}
    sign = -1 if d % 2 else 1
    rows = len(basis_next)
    cols = len(basis_d)
    out = [0] * (rows * cols)
    for c, (i, j, p) in enumerate(basis_d):
        for (tgt, src), (coeff, power) in T2.delta.items():
            if src == j:
                out[pos[(i, tgt, p + power)] * cols + c] += coeff
        for (tgt, src), (coeff, power) in T1.delta.items():
            if tgt == i:
                out[pos[(src, j, p + power)] * cols + c] -= sign * coeff
    return IntMatrix(rows, cols, out)


def _hom_complex(T1, T2, lo, hi):
    """The hom complex as a FreeComplex over [lo, hi], with basis lists.

    Each degree is finite rank (deg u < 0 pins at most one power per
    summand pair), so the computation is exact with no truncation.
    """
    bases = {d: _hom_basis(T1, T2, d) for d in range(lo, hi + 1)}
    degrees = {d: len(b) for d, b in bases.items() if b}
    diffs = {}
    for d in range(lo, hi):
        if degrees.get(d, 0) and degrees.get(d + 1, 0):
            diffs[d] = _hom_differential(T1, T2, bases[d], bases[d + 1], d)
    return FreeComplex(degrees, diffs), bases


def hom_cohomology(T1, T2, window):
    """Cohomology of hom(T1, T2) on the window, exact at every degree."""
    lo, hi = window
    if lo > hi:
        raise WindowError("empty window")
    if T1.ring != T2.ring:
        raise ValueError("objects live over different rings")
    require_valid_twisted(T1)
    require_valid_twisted(T2)
    cx, _ = _hom_complex(T1, T2, lo - 1, hi + 1)
    prof = homology(cx)
    data = {k: prof.data[k] for k in prof.data if lo <= k <= hi}
    return WindowProfile(lo, hi, data)


def _end_generator(ring):
    """A cocycle generating H^n(End(zero_section)) = Z, as a coefficient
    vector over the degree-n hom basis, normalized so that the
    inclusion-then-projection component has coefficient +1."""
    zs = zero_section(ring)
    n = ring.n
    cx, bases = _hom_complex(zs, zs, n - 1, n + 1)
    K = kernel_basis(cx.d(n))
    prev = cx.d(n - 1)
    coeff_cols = [solve(K, prev.column(j)) for j in range(prev.cols)]
    if any(c is None for c in coeff_cols):
        raise InvalidTwisted("hom complex is not a complex")  # unreachable
    z = K.cols
    B = (IntMatrix(z, len(coeff_cols),
                   [c[i] for i in range(z) for c in coeff_cols])
         if coeff_cols else IntMatrix(z, 0, []))
    res = snf(B)
    free_idx = [i for i in range(z)
                if i >= min(z, B.cols) or res.S.at(i, i) == 0]
    if len(free_idx) != 1:
        raise InvalidTwisted("H^n(End(zero_section)) is not free of rank 1")
    from .intlin import inverse_unimodular
    uinv = inverse_unimodular(res.U)
    gen = K.apply(uinv.column(free_idx[0]))
    # Fix the sign via the u^0 component A[n] -> A[0].
    marker = bases[n].index((0, 1, 0))
    if gen[marker] == 0:
        raise InvalidTwisted("generator misses the marker component")
    if gen[marker] < 0:
        gen = [-v for v in gen]
    return gen, bases[n]


def x_action_test(T, window):
    """Necessary geometricity condition from the zero-section action.

    Computes M = hom(zero_section, T) and the right action of a generator
    x of H^n(End(zero_section)); returns True ("pass") iff the induced map
    H^k(M) -> H^{k+n}(M) vanishes for every k with both degrees in the
    window.  Objects in the image of tensoring with the fiber must pass.
    """
    lo, hi = window
    n = T.ring.n
    if hi - lo < n:
        raise WindowError("window must span at least n degrees")
    require_valid_twisted(T)
    if not T.shifts:
        return True
    zs = zero_section(T.ring)
    x_vec, x_basis = _end_generator(T.ring)
    x_comps = {}
    for coeff, (i, j, p) in zip(x_vec, x_basis):
        if coeff:
            x_comps[(j, i)] = (coeff, p)  # keyed by (target, source)
    cx, bases = _hom_complex(zs, T, lo - 1, hi + 1)
    for k in range(lo, hi - n + 1):
        if not bases.get(k):
            continue
        basis_k = bases[k]
        basis_kn = bases[k + n]
        pos = {b: r for r, b in enumerate(basis_kn)}
        rows, cols = len(basis_kn), len(basis_k)
        act = [0] * (rows * cols)
        for c, (i, j, p) in enumerate(basis_k):
            # phi o x: precompose with components of x into zs summand i.
            for (tgt, src), (coeff, power) in x_comps.items():
                if tgt == i:
                    act[pos[(src, j, p + power)] * cols + c] += coeff
        X = IntMatrix(rows, cols, act)
        Z = kernel_basis(cx.d(k))
        target_d = cx.d(k + n - 1)
        for col in range(Z.cols):
            w = X.apply(Z.column(col))
            if any(w) and solve(target_d, w) is None:
                return False
    return True
