"""Exact integer linear algebra.

Smith normal form with unimodular change-of-basis certificates, saturated
kernel bases, and integer linear solving.  Everything runs on Python ints,
so intermediate entry growth is harmless.
"""

from fractions import Fraction


class DimensionError(ValueError):
    """Shapes of the operands do not match."""


class IntMatrix:
    """Immutable dense integer matrix, entries stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows, cols, entries):
        if rows < 0 or cols < 0:
            raise DimensionError("negative matrix dimension")
        entries = [int(e) for e in entries]
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows_data, cols=None):
        """Build from a list of rows; `cols` disambiguates the empty case."""
        rows = len(rows_data)
        if rows == 0:
            return cls(0, 0 if cols is None else cols, [])
        ncols = len(rows_data[0])
        if any(len(r) != ncols for r in rows_data):
            raise DimensionError("ragged rows")
        flat = [e for r in rows_data for e in r]
        return cls(rows, ncols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    def at(self, i, j):
        return self._entries[i * self.cols + j]

    def row(self, i):
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self._entries[j::self.cols] if self.cols else []

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self.at(i, j) for j in range(self.cols)
                          for i in range(self.rows)])

    def __eq__(self, other):
        return (isinstance(other, IntMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self._entries == other._entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._entries)))

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [0] * (self.rows * other.cols)
        for i in range(self.rows):
            srow = self.row(i)
            base = i * other.cols
            for k, a in enumerate(srow):
                if a == 0:
                    continue
                orow = other.row(k)
                for j in range(other.cols):
                    out[base + j] += a * orow[j]
        return IntMatrix(self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match column count")
        return [sum(self.at(i, j) * vec[j] for j in range(self.cols))
                for i in range(self.rows)]

    def scaled(self, s):
        return IntMatrix(self.rows, self.cols, [s * e for e in self._entries])

    def is_zero(self):
        return all(e == 0 for e in self._entries)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_rows()})"


class SnfResult:
    """Certified Smith normal form: U * M * V = S with U, V unimodular."""

    __slots__ = ("S", "U", "V")

    def __init__(self, S, U, V):
        self.S = S
        self.U = U
        self.V = V

    def diagonal(self):
        n = min(self.S.rows, self.S.cols)
        return [self.S.at(i, i) for i in range(n)]

    def invariant_factors(self):
        return [d for d in self.diagonal() if d != 0]

    def rank(self):
        return len(self.invariant_factors())


def _pivot(rows, r0, c0, nrows, ncols):
    """Smallest nonzero |entry| in the trailing submatrix, ties by (row, col)."""
    best = None
    for i in range(r0, nrows):
        ri = rows[i]
        for j in range(c0, ncols):
            v = ri[j]
            if v != 0:
                a = abs(v)
                if best is None or a < best[0]:
                    best = (a, i, j)
                    if a == 1:
                        return best
    return best


def snf(M):
    """Smith normal form with unimodular certificates.

    Returns SnfResult(S, U, V) with U*M*V = S, S diagonal with nonnegative
    entries in a divisibility chain (zeros last).
    """
    m, n = M.rows, M.cols
    S = M.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i1, i2):
        S[i1], S[i2] = S[i2], S[i1]
        U[i1], U[i2] = U[i2], U[i1]

    def swap_cols(j1, j2):
        for row in S:
            row[j1], row[j2] = row[j2], row[j1]
        for row in V:
            row[j1], row[j2] = row[j2], row[j1]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        Ss, Sd = S[src], S[dst]
        for j in range(n):
            Sd[j] += q * Ss[j]
        Us, Ud = U[src], U[dst]
        for j in range(m):
            Ud[j] += q * Us[j]

    def add_col(src, dst, q):
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def near_q(a, b):
        # Nearest-integer quotient keeps remainders at most |b| / 2.
        q, r = divmod(a, b)
        if 2 * abs(r) > abs(b):
            q += 1
        return q

    t = 0
    limit = min(m, n)
    while t < limit:
        if _pivot(S, t, t, m, n) is None:
            break
        while True:
            # Re-select the smallest pivot each pass to bound entry growth.
            _, pi, pj = _pivot(S, t, t, m, n)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            clean = True
            for i in range(t + 1, m):
                if S[i][t] != 0:
                    add_row(t, i, -near_q(S[i][t], S[t][t]))
                    if S[i][t] != 0:
                        clean = False
            for j in range(t + 1, n):
                if S[t][j] != 0:
                    add_col(t, j, -near_q(S[t][j], S[t][t]))
                    if S[t][j] != 0:
                        clean = False
            if not clean:
                continue
            # Pivot must divide every remaining entry for the chain to hold.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % S[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)

        if S[t][t] < 0:
            for j in range(n):
                S[t][j] = -S[t][j]
            for j in range(m):
                U[t][j] = -U[t][j]
        t += 1

    return SnfResult(IntMatrix.from_rows(S, cols=n),
                     IntMatrix.from_rows(U, cols=m),
                     IntMatrix.from_rows(V, cols=n))


def kernel_basis(M):
    """Saturated integer basis of ker M, one basis vector per column.

    The span is a direct summand of Z^cols, so coefficients of kernel
    elements in this basis are integral.
    """
    res = snf(M)
    r = res.rank()
    cols = [res.V.column(j) for j in range(r, M.cols)]
    if not cols:
        return IntMatrix(M.cols, 0, [])
    return IntMatrix(M.cols, len(cols),
                     [c[i] for i in range(M.cols) for c in cols])


def solve(M, b):
    """An integer solution x of M x = b, or None when none exists."""
    if len(b) != M.rows:
        raise DimensionError("right-hand side length does not match row count")
    res = snf(M)
    c = res.U.apply(list(b))
    diag = res.diagonal()
    y = [0] * M.cols
    for i in range(M.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return res.V.apply(y)


def det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(M):
    return M.rows == M.cols and abs(det(M)) == 1


def inverse_unimodular(M):
    """Exact inverse of a unimodular integer matrix."""
    if M.rows != M.cols:
        raise DimensionError("inverse of a non-square matrix")
    n = M.rows
    a = [[Fraction(M.at(i, j)) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [v * inv for v in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [vi - f * vk for vi, vk in zip(a[i], a[k])]
    out = []
    for i in range(n):
        for j in range(n):
            v = a[i][n + j]
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out.append(int(v))
    return IntMatrix(n, n, out)
