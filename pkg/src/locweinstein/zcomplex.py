"""Bounded cochain complexes of finitely generated free abelian groups.

Grading convention used throughout the package: Z[d] is a copy of Z placed
in cohomological degree -d, and differentials raise degree by 1.  Shifting
by k sends degree j to degree j - k and multiplies differentials by (-1)^k.
"""

from .intlin import IntMatrix, kernel_basis, snf, solve


class InvalidComplex(ValueError):
    """The data does not describe a cochain complex."""


class FreeComplex:
    """A bounded complex of free Z-modules.

    `degrees` maps degree k to rank(C^k) (only nonzero ranks stored);
    `differentials` maps k to the matrix of d^k: C^k -> C^{k+1}, of shape
    rank(C^{k+1}) x rank(C^k).
    """

    __slots__ = ("degrees", "differentials")

    def __init__(self, degrees, differentials=None):
        self.degrees = {int(k): int(r) for k, r in degrees.items() if r != 0}
        if any(r < 0 for r in self.degrees.values()):
            raise InvalidComplex("negative rank")
        diffs = {}
        for k, mat in (differentials or {}).items():
            k = int(k)
            if mat.rows != self.rank(k + 1) or mat.cols != self.rank(k):
                raise InvalidComplex(
                    f"differential at degree {k} has shape "
                    f"{mat.rows}x{mat.cols}, expected "
                    f"{self.rank(k + 1)}x{self.rank(k)}")
            if mat.rows and mat.cols and not mat.is_zero():
                diffs[k] = mat
        self.differentials = diffs

    def rank(self, k):
        return self.degrees.get(k, 0)

    def d(self, k):
        """Differential C^k -> C^{k+1}, a zero matrix when not stored."""
        return self.differentials.get(
            k, IntMatrix.zeros(self.rank(k + 1), self.rank(k)))

    def support(self):
        return sorted(self.degrees)

    def __eq__(self, other):
        return (isinstance(other, FreeComplex)
                and self.degrees == other.degrees
                and self.differentials == other.differentials)

    def __repr__(self):
        return f"FreeComplex(degrees={self.degrees})"

    def to_json_dict(self):
        return {
            "degrees": {str(k): r for k, r in sorted(self.degrees.items())},
            "differentials": {str(k): m.to_rows()
                              for k, m in sorted(self.differentials.items())},
        }

    @classmethod
    def from_json_dict(cls, data):
        degrees = {int(k): int(r) for k, r in data.get("degrees", {}).items()}
        diffs = {}
        for k, rows in data.get("differentials", {}).items():
            k = int(k)
            target = degrees.get(k + 1, 0)
            diffs[k] = IntMatrix.from_rows(rows, cols=degrees.get(k, 0)) \
                if rows else IntMatrix.zeros(target, degrees.get(k, 0))
        return cls(degrees, diffs)


class ChainMap:
    """A degree-0 cochain map between two FreeComplexes."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        comps = {}
        for k, mat in components.items():
            k = int(k)
            if mat.rows != target.rank(k) or mat.cols != source.rank(k):
                raise InvalidComplex(
                    f"component at degree {k} has wrong shape")
            if mat.rows and mat.cols and not mat.is_zero():
                comps[k] = mat
        self.components = comps

    def component(self, k):
        return self.components.get(
            k, IntMatrix.zeros(self.target.rank(k), self.source.rank(k)))

    def commutes(self):
        degrees = set(self.source.degrees) | set(self.target.degrees)
        for k in degrees:
            lhs = self.component(k + 1) * self.source.d(k)
            rhs = self.target.d(k) * self.component(k)
            if lhs != rhs:
                return False
        return True


class HomologyProfile:
    """Per-degree free rank plus invariant-factor torsion list.

    This is a complete quasi-isomorphism invariant for bounded complexes of
    free Z-modules, in canonical form: factors positive, each dividing the
    next, trivial degrees omitted.
    """

    __slots__ = ("data",)

    def __init__(self, data):
        clean = {}
        for k, (free, torsion) in data.items():
            torsion = tuple(int(t) for t in torsion)
            if any(t < 2 for t in torsion):
                raise ValueError("torsion invariant factors must be >= 2")
            for a, b in zip(torsion, torsion[1:]):
                if b % a != 0:
                    raise ValueError("torsion list must be a divisibility chain")
            if free or torsion:
                clean[int(k)] = (int(free), torsion)
        self.data = clean

    def free_rank(self, k):
        return self.data.get(k, (0, ()))[0]

    def torsion(self, k):
        return self.data.get(k, (0, ()))[1]

    def support(self):
        return sorted(self.data)

    def is_trivial(self):
        return not self.data

    def __eq__(self, other):
        return isinstance(other, HomologyProfile) and self.data == other.data

    def __repr__(self):
        return f"HomologyProfile({self.data})"

    def to_json_dict(self):
        return {str(k): {"free": f, "torsion": list(t)}
                for k, (f, t) in sorted(self.data.items())}


def validate(C):
    """True iff all shapes match and d o d = 0."""
    try:
        for k in set(C.degrees) | set(C.differentials):
            if not (C.d(k + 1) * C.d(k)).is_zero():
                return False
    except Exception:
        return False
    return True


def require_valid(C):
    if not validate(C):
        raise InvalidComplex("d o d != 0")


def elementary_complex(m, d):
    """The two-term complex Z[d+1] --m--> Z[d].

    Z in degrees -(d+1) and -d with differential (m).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    degrees = {-(d + 1): 1, -d: 1}
    diffs = {-(d + 1): IntMatrix(1, 1, [m])}
    return FreeComplex(degrees, diffs)


def homology(C):
    """Integral cohomology of C as a HomologyProfile, via SNF.

    H^k = ker d^k / im d^{k-1}: coordinates of the image inside a saturated
    kernel basis are integral, and their SNF gives the invariant factors.
    """
    require_valid(C)
    data = {}
    for k in C.support():
        K = kernel_basis(C.d(k))
        z = K.cols
        if z == 0:
            continue
        prev = C.d(k - 1)
        coeff_cols = []
        for j in range(prev.cols):
            y = solve(K, prev.column(j))
            if y is None:
                raise InvalidComplex("image does not lie in the kernel")
            coeff_cols.append(y)
        if coeff_cols:
            B = IntMatrix(z, len(coeff_cols),
                          [c[i] for i in range(z) for c in coeff_cols])
        else:
            B = IntMatrix(z, 0, [])
        factors = snf(B).invariant_factors()
        free = z - len(factors)
        torsion = tuple(f for f in factors if f >= 2)
        if free or torsion:
            data[k] = (free, torsion)
    return HomologyProfile(data)


def shift(C, k):
    """The shifted complex C[k]: degree j of C[k] is degree j + k of C,
    with differentials scaled by (-1)^k."""
    require_valid(C)
    sign = -1 if k % 2 else 1
    degrees = {j - k: r for j, r in C.degrees.items()}
    diffs = {j - k: mat.scaled(sign) for j, mat in C.differentials.items()}
    return FreeComplex(degrees, diffs)


def direct_sum(C, D):
    """Block-diagonal direct sum."""
    require_valid(C)
    require_valid(D)
    degrees = {}
    for k in set(C.degrees) | set(D.degrees):
        degrees[k] = C.rank(k) + D.rank(k)
    diffs = {}
    for k in set(C.differentials) | set(D.differentials):
        a, b = C.d(k), D.d(k)
        rows = a.rows + b.rows
        cols = a.cols + b.cols
        out = [0] * (rows * cols)
        for i in range(a.rows):
            for j in range(a.cols):
                out[i * cols + j] = a.at(i, j)
        for i in range(b.rows):
            for j in range(b.cols):
                out[(a.rows + i) * cols + (a.cols + j)] = b.at(i, j)
        diffs[k] = IntMatrix(rows, cols, out)
    return FreeComplex(degrees, diffs)


def cone(f):
    """Mapping cone of a chain map: cone(f)^k = source^{k+1} + target^k,
    differential [[-d_source, 0], [f, d_target]]."""
    if not f.commutes():
        raise InvalidComplex("chain map components do not commute with d")
    C, D = f.source, f.target
    require_valid(C)
    require_valid(D)
    degrees = {}
    for k in set(j - 1 for j in C.degrees) | set(D.degrees):
        r = C.rank(k + 1) + D.rank(k)
        if r:
            degrees[k] = r
    diffs = {}
    for k in degrees:
        rows = C.rank(k + 2) + D.rank(k + 1)
        cols = C.rank(k + 1) + D.rank(k)
        if rows == 0 or cols == 0:
            continue
        dc = C.d(k + 1)
        dd = D.d(k)
        fk = f.component(k + 1)
        out = [0] * (rows * cols)
        for i in range(dc.rows):
            for j in range(dc.cols):
                out[i * cols + j] = -dc.at(i, j)
        for i in range(fk.rows):
            for j in range(fk.cols):
                out[(dc.rows + i) * cols + j] = fk.at(i, j)
        for i in range(dd.rows):
            for j in range(dd.cols):
                out[(dc.rows + i) * cols + (dc.cols + j)] = dd.at(i, j)
        diffs[k] = IntMatrix(rows, cols, out)
    return FreeComplex(degrees, diffs)


def scalar_map(C, m):
    """The chain map m * Id_C."""
    comps = {k: IntMatrix(r, r, [m if i == j else 0
                                 for i in range(r) for j in range(r)])
             for k, r in C.degrees.items()}
    return ChainMap(C, C, comps)


def zero_map(C, D):
    return ChainMap(C, D, {})


def euler_characteristic(C):
    """Alternating sum of ranks."""
    require_valid(C)
    return sum((-1) ** (k % 2) * r for k, r in C.degrees.items())
