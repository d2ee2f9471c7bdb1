"""Core objects: sign matrices, magog/boolean triangles, validators, and
statistics.

The central family is the set of square sign matrices: {0,1,-1}-matrices
whose rows and columns sum to one, whose column prefix sums stay in {0,1},
and whose row prefix sums stay nonnegative.  Magog matrices additionally
satisfy the (i,j)-special inequalities; alternating sign matrices instead
bound the row prefix sums by one.  Magog matrices correspond one-to-one to
magog triangles through column partial sums (record, per row, the columns
whose prefix sum is one), and that map is invertible.

All indices in violation reports are 1-based to match the usual (i,j)
naming of the inequalities.  All objects are immutable after construction
and every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass


class ValidationFailure(ValueError):
    """An operation received input that breaks a named structural constraint."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator.

    ``violations`` holds (constraint-id, index-tuple) pairs; ``valid`` is
    true exactly when it is empty.  Indices are 1-based.
    """

    valid: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        if self.valid != (len(self.violations) == 0):
            raise ValueError("valid flag inconsistent with violation list")

    @staticmethod
    def ok() -> "ValidationReport":
        return ValidationReport(True, ())

    @staticmethod
    def of(violations) -> "ValidationReport":
        vs = tuple(violations)
        return ValidationReport(len(vs) == 0, vs)

    def first(self) -> str:
        if self.valid:
            return "valid"
        cid, idx = self.violations[0]
        return f"{cid} at {idx}"


@dataclass(frozen=True)
class SignMatrix:
    """An n x n integer matrix with entries in {-1, 0, 1}.

    This is the raw carrier; whether it is a square sign matrix, a magog
    matrix, or an ASM is decided by the validators below.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be positive")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must form an {self.n}x{self.n} matrix")
        for row in self.entries:
            for v in row:
                if v not in (-1, 0, 1):
                    raise ValueError(f"entry {v!r} outside {{-1,0,1}}")

    @staticmethod
    def from_rows(rows) -> "SignMatrix":
        t = tuple(tuple(int(v) for v in row) for row in rows)
        return SignMatrix(len(t), t)

    @staticmethod
    def identity(n: int) -> "SignMatrix":
        return SignMatrix(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def antidiagonal(n: int) -> "SignMatrix":
        return SignMatrix(n, tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class MagogTriangle:
    """Triangular array t[i][k] (row i has i entries, 1-based) with
    strictly increasing rows of values in 1..n, bottom row 1..n, and the
    diagonal step bound t[i+1][k+1] <= t[i][k] + 1.

    Construction enforces every invariant, so a held instance is always a
    genuine magog triangle.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, rows = self.n, self.rows
        if n < 1:
            raise ValueError("order must be positive")
        if len(rows) != n or any(len(r) != i + 1 for i, r in enumerate(rows)):
            raise ValueError("row i must hold exactly i entries")
        for i, row in enumerate(rows, start=1):
            for k, v in enumerate(row, start=1):
                if not 1 <= v <= n:
                    raise ValidationFailure(f"entry-range violated at ({i},{k}): {v}")
                if k > 1 and row[k - 2] >= v:
                    raise ValidationFailure(f"row-increase violated at ({i},{k})")
        for i in range(1, n):
            above, below = rows[i - 1], rows[i]
            for k in range(1, i + 1):
                if below[k] > above[k - 1] + 1:
                    raise ValidationFailure(f"diagonal-step violated at ({i + 1},{k + 1})")
        if rows[n - 1] != tuple(range(1, n + 1)):
            raise ValidationFailure("bottom-row must be 1..n")

    @staticmethod
    def from_rows(rows) -> "MagogTriangle":
        t = tuple(tuple(int(v) for v in row) for row in rows)
        return MagogTriangle(len(t), t)


@dataclass(frozen=True)
class BooleanTriangle:
    """Triangular {0,1} array with n-1 rows; row i holds i entries sitting
    in columns n-i .. n-1.

    Only shape and the binary entry domain are enforced here; the
    (i,j)-inequalities are checked by :func:`validate_boolean_triangle` so
    that non-examples can be represented and reported on.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be positive")
        if len(self.rows) != self.n - 1 or any(len(r) != i + 1 for i, r in enumerate(self.rows)):
            raise ValueError("boolean triangle of order n needs rows of lengths 1..n-1")
        for row in self.rows:
            for v in row:
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} outside {{0,1}}")

    @staticmethod
    def from_rows(n: int, rows) -> "BooleanTriangle":
        return BooleanTriangle(n, tuple(tuple(int(v) for v in row) for row in rows))

    def ones(self) -> frozenset[tuple[int, int]]:
        """Positions (row, column) of the one entries, both 1-based."""
        out = []
        for i, row in enumerate(self.rows, start=1):
            for k, v in enumerate(row):
                if v:
                    out.append((i, self.n - i + k))
        return frozenset(out)


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n; its matrix has a 1 at (i, pi_i)."""

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError("values must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.values)

    def matrix(self) -> SignMatrix:
        n = self.n
        return SignMatrix(n, tuple(
            tuple(1 if self.values[i] == j + 1 else 0 for j in range(n)) for i in range(n)
        ))


@dataclass(frozen=True)
class Classification:
    square_sign: bool
    magog: bool
    asm: bool


@dataclass(frozen=True)
class InversionStats:
    inv: int
    posinv: int
    neg_count: int


# ---------------------------------------------------------------------------
# raw-row helpers, shared with the enumeration engine


def _prefix_matrices(rows):
    """(column-prefix, row-prefix) matrices, both 0-based [i][j]."""
    n = len(rows)
    col = [[0] * n for _ in range(n)]
    rowp = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            col[i][j] = rows[i][j] + (col[i - 1][j] if i else 0)
            rowp[i][j] = rows[i][j] + (rowp[i][j - 1] if j else 0)
    return col, rowp


def _square_sign_violations(rows, collect_all=False):
    n = len(rows)
    out = []
    for j in range(n):
        s = 0
        for i in range(n):
            s += rows[i][j]
            if s < 0 or s > 1:
                out.append(("column-prefix", (i + 1, j + 1)))
                if not collect_all:
                    return out
        if s != 1:
            out.append(("column-sum", (j + 1,)))
            if not collect_all:
                return out
    for i in range(n):
        s = 0
        for j in range(n):
            s += rows[i][j]
            if s < 0:
                out.append(("row-prefix", (i + 1, j + 1)))
                if not collect_all:
                    return out
        if s != 1:
            out.append(("row-sum", (i + 1,)))
            if not collect_all:
                return out
    return out


def _special_violations(rows, collect_all=False):
    """Violated (i,j)-special inequalities, 1 <= i,j <= n-2."""
    n = len(rows)
    if n < 3:
        return []
    col, rowp = _prefix_matrices(rows)
    out = []
    for i in range(1, n - 1):
        for j in range(1, n - 1):
            # row i+1 prefix through column j, plus column j+1 prefix
            # through row i+1, minus column j prefix through row i
            lhs = rowp[i][j - 1] + col[i][j] - col[i - 1][j - 1]
            if lhs < 0:
                out.append(("special", (i, j)))
                if not collect_all:
                    return out
    return out


def _asm_extra_violations(rows, collect_all=False):
    n = len(rows)
    out = []
    for i in range(n):
        s = 0
        for j in range(n):
            s += rows[i][j]
            if s > 1:
                out.append(("row-prefix-upper", (i + 1, j + 1)))
                if not collect_all:
                    return out
    return out


def _is_square_sign(rows) -> bool:
    return not _square_sign_violations(rows)


def _is_magog(rows) -> bool:
    return _is_square_sign(rows) and not _special_violations(rows)


def _is_asm(rows) -> bool:
    return _is_square_sign(rows) and not _asm_extra_violations(rows)


def _neg_count(rows) -> int:
    return sum(1 for row in rows for v in row if v == -1)


def _nonzeros(rows):
    return [(i, j, rows[i][j]) for i in range(len(rows)) for j in range(len(rows)) if rows[i][j]]


def _inv(rows) -> int:
    """Sum of a_ij * a_kl over pairs with k < i and j < l."""
    nz = _nonzeros(rows)
    total = 0
    for i1, j1, v1 in nz:
        for i2, j2, v2 in nz:
            if i2 < i1 and j2 > j1:
                total += v1 * v2
    return total


def _one_position_in_row(rows, i) -> int:
    """1-based column of the unique one in row i (0-based); rows of a
    square sign matrix have exactly one 1 in rows 1 and n."""
    return rows[i].index(1) + 1


def _one_position_in_col(rows, j) -> int:
    for i in range(len(rows)):
        if rows[i][j] == 1:
            return i + 1
    raise ValueError("column holds no 1")


# ---------------------------------------------------------------------------
# validators


def validate_square_sign(m: SignMatrix, collect_all: bool = False) -> ValidationReport:
    """Check unit row/column sums, column prefixes in {0,1}, row prefixes >= 0."""
    return ValidationReport.of(_square_sign_violations(m.entries, collect_all))


def validate_magog(m: SignMatrix, collect_all: bool = False) -> ValidationReport:
    """Square sign conditions plus every (i,j)-special inequality."""
    viols = _square_sign_violations(m.entries, collect_all)
    if viols and not collect_all:
        return ValidationReport.of(viols)
    viols += _special_violations(m.entries, collect_all)
    return ValidationReport.of(viols)


def validate_asm(m: SignMatrix, collect_all: bool = False) -> ValidationReport:
    """Square sign conditions plus row prefix sums bounded by one."""
    viols = _square_sign_violations(m.entries, collect_all)
    if viols and not collect_all:
        return ValidationReport.of(viols)
    viols += _asm_extra_violations(m.entries, collect_all)
    return ValidationReport.of(viols)


def classify(m: SignMatrix) -> Classification:
    """Which of the three families the matrix belongs to."""
    sq = _is_square_sign(m.entries)
    if not sq:
        return Classification(False, False, False)
    return Classification(
        True,
        not _special_violations(m.entries),
        not _asm_extra_violations(m.entries),
    )


def validate_boolean_triangle(b: BooleanTriangle, collect_all: bool = False) -> ValidationReport:
    """Check every (i,j)-inequality
    1 + sum_{k=j+1..i} b[k][n-j-1] >= sum_{k=j..i} b[k][n-j]."""
    n = b.n
    pref = {}
    run = {}
    for i in range(1, n):
        for k, v in enumerate(b.rows[i - 1]):
            c = n - i + k
            run[c] = run.get(c, 0) + v
            pref[(i, c)] = run[c]
    out = []
    for i in range(2, n):
        for j in range(1, i):
            c = n - j
            if pref[(i, c)] > 1 + pref[(i, c - 1)]:
                out.append(("diagonal", (i, j)))
                if not collect_all:
                    return ValidationReport.of(out)
    return ValidationReport.of(out)


# ---------------------------------------------------------------------------
# the bijection between magog matrices and magog triangles


def column_partial_sums(m: SignMatrix) -> SignMatrix:
    """Matrix of column prefix sums; row i holds exactly i ones.

    Requires a valid square sign matrix (so all prefixes are 0 or 1).
    """
    report = validate_square_sign(m)
    if not report.valid:
        raise ValidationFailure(f"not a square sign matrix: {report.first()}", report)
    n = m.n
    out = []
    prev = (0,) * n
    for i in range(n):
        cur = tuple(prev[j] + m.entries[i][j] for j in range(n))
        out.append(cur)
        prev = cur
    return SignMatrix(n, tuple(out))


def column_one_positions(m: SignMatrix) -> tuple[tuple[int, ...], ...]:
    """Row i of the result lists, increasing, the columns whose prefix sum
    through row i equals one.  Defined for every square sign matrix; the
    result is a magog triangle exactly when the matrix is magog."""
    ps = column_partial_sums(m)
    return tuple(
        tuple(j + 1 for j in range(m.n) if ps.entries[i][j] == 1) for i in range(m.n)
    )


def matrix_to_magog_triangle(m: SignMatrix) -> MagogTriangle:
    """Map a magog matrix to its magog triangle (record per row of the
    column-partial-sum matrix the positions of the ones)."""
    report = validate_magog(m)
    if not report.valid:
        raise ValidationFailure(f"not a magog matrix: {report.first()}", report)
    return MagogTriangle(m.n, column_one_positions(m))


def magog_triangle_to_matrix(t: MagogTriangle) -> SignMatrix:
    """Inverse map: rebuild the 0/1 partial-sum matrix from the recorded
    positions, then difference consecutive rows."""
    n = t.n
    ps = []
    for row in t.rows:
        ind = [0] * n
        for v in row:
            ind[v - 1] = 1
        ps.append(ind)
    rows = []
    for i in range(n):
        if i == 0:
            rows.append(tuple(ps[0]))
        else:
            rows.append(tuple(ps[i][j] - ps[i - 1][j] for j in range(n)))
    return SignMatrix(n, tuple(rows))


# ---------------------------------------------------------------------------
# statistics


def inversion_stats(m: SignMatrix) -> InversionStats:
    """Inversion number, positive inversion number, and count of -1 entries."""
    inv = _inv(m.entries)
    neg = _neg_count(m.entries)
    return InversionStats(inv=inv, posinv=inv - neg, neg_count=neg)


def inversion_profile(m: SignMatrix, k: int, l: int) -> int:
    """Inversions involving the (k,l) entry and entries strictly southwest
    of it: a_kl * sum_{i>k, j<l} a_ij.  1-based."""
    if not (1 <= k <= m.n and 1 <= l <= m.n):
        raise ValueError("indices out of range")
    v = m.entries[k - 1][l - 1]
    if v == 0:
        return 0
    total = 0
    for i in range(k, m.n):
        for j in range(l - 1):
            total += m.entries[i][j]
    return v * total


def is_132_avoiding(p: Permutation) -> bool:
    """True when no i < j < k has pi_i < pi_k < pi_j."""
    vals = p.values
    n = len(vals)
    prefix_min = None
    for j in range(n):
        if prefix_min is not None:
            for k in range(j + 1, n):
                if prefix_min < vals[k] < vals[j]:
                    return False
        if prefix_min is None or vals[j] < prefix_min:
            prefix_min = vals[j]
    return True


def max_negative_ones_bound(n: int) -> int:
    """floor((n-1)/2) * ceil((n-1)/2), the sharp bound for all three families."""
    return ((n - 1) // 2) * (n // 2)


def max_negative_ones_matrix(n: int) -> SignMatrix:
    """Half-turn symmetric matrix attaining the maximum number of -1 entries.

    Row floor((n+1)/2) alternates 1,-1,...,1 across the full odd width
    (a trailing zero is appended when n is even); each row above gains one
    more zero at each end; the bottom half is the half-turn image.
    """
    if n < 1:
        raise ValueError("order must be positive")
    half = (n + 1) // 2
    odd = n if n % 2 == 1 else n - 1
    top = []
    for i in range(1, half + 1):
        z = half - i
        middle = [1 if t % 2 == 0 else -1 for t in range(odd - 2 * z)]
        row = [0] * z + middle + [0] * z
        if n % 2 == 0:
            row.append(0)
        top.append(row)
    rows = []
    for i in range(1, n + 1):
        if i <= half:
            rows.append(tuple(top[i - 1]))
        else:
            rows.append(tuple(reversed(top[n - i])))
    return SignMatrix(n, tuple(rows))
