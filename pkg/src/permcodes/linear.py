"""Linear block codes over GF(q): duality, exact minimum distance, search.

Matrices store field elements as their integer codes; the FieldSpec they
belong to rides along on the object.  All distance work is exact enumeration,
kept affordable by walking one representative per scalar class of messages
(first nonzero message coordinate pinned to 1) in odometer order so that each
successive codeword is obtained by adding a single precomputed row delta.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    NotFullWeight,
    NotInDual,
    ParameterError,
    ParseError,
    SpecMismatch,
)
from .gf import FieldElement, FieldSpec, field_make

DEFAULT_DISTANCE_BUDGET = 10**7
DEFAULT_SEARCH_BUDGET = 100_000


class MatrixGF:
    """Immutable matrix over a FieldSpec; entries kept as integer codes."""

    __slots__ = ("spec", "rows")

    def __init__(self, spec: FieldSpec, rows) -> None:
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix needs at least one row and column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise DimensionMismatch("ragged rows")
            for x in r:
                if not 0 <= x < spec.q:
                    raise ParameterError(f"entry {x} out of range for GF({spec.q})")
        self.spec = spec
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def at(self, i: int, j: int) -> FieldElement:
        return self.spec.element(self.rows[i][j])

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.spec == other.spec
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.rows))

    def __repr__(self) -> str:
        return f"MatrixGF(GF({self.spec.q}), {self.nrows}x{self.ncols})"


def _rref_rows(rows: list[list[int]], spec: FieldSpec) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    add, mul, neg, inv = spec.tables()
    m = len(rows)
    n = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][col]
        if pv != 1:
            s = inv[pv]
            srow = mul[s]
            rows[r] = [srow[x] for x in rows[r]]
        base = rows[r]
        for i in range(m):
            c = rows[i][col]
            if i != r and c:
                crow = mul[neg[c]]
                rows[i] = [add[x][crow[y]] for x, y in zip(rows[i], base)]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def rref(matrix: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row echelon form, rank, and 0-based pivot columns."""
    rows, pivots = _rref_rows([list(r) for r in matrix.rows], matrix.spec)
    return MatrixGF(matrix.spec, rows), len(pivots), tuple(pivots)


def _rank(rows: list[list[int]], spec: FieldSpec) -> int:
    _, pivots = _rref_rows([list(r) for r in rows], spec)
    return len(pivots)


class LinearCode:
    """An [n, k] linear code presented by a full-rank generator matrix."""

    __slots__ = ("spec", "n", "k", "generator", "_dmin")

    def __init__(self, spec: FieldSpec, generator) -> None:
        G = generator if isinstance(generator, MatrixGF) else MatrixGF(spec, generator)
        if G.spec != spec:
            raise SpecMismatch("generator matrix belongs to a different field spec")
        n = G.ncols
        k = G.nrows
        if not 0 < k < n:
            raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
        if _rank([list(r) for r in G.rows], spec) != k:
            raise ParameterError("generator matrix rows are not independent")
        self.spec = spec
        self.n = n
        self.k = k
        self.generator = G
        self._dmin: int | None = None

    @property
    def d(self) -> int | None:
        """Cached exact minimum distance, None until computed."""
        return self._dmin

    def __repr__(self) -> str:
        dtxt = f", d={self._dmin}" if self._dmin is not None else ""
        return f"LinearCode([{self.n},{self.k}{dtxt}]_{self.spec.q})"


def generator_matrix(code: LinearCode) -> MatrixGF:
    return code.generator


# ---------------------------------------------------------------------------
# Codeword enumeration


def codewords(code: LinearCode, budget: int = 10**6):
    """Yield all q^k codewords (zero included) as tuples of codes."""
    spec = code.spec
    q = spec.q
    if q**code.k > budget:
        raise BudgetExceeded(f"{q}^{code.k} codewords exceed budget {budget}")
    add, mul, _, _ = spec.tables()
    rows = code.generator.rows
    n = code.n
    scaled = [[[mul[c][x] for x in row] for c in range(q)] for row in rows]
    for msg in itertools.product(range(q), repeat=code.k):
        v = [0] * n
        for c, srow in zip(msg, scaled):
            if c:
                sc = srow[c]
                v = [add[x][y] for x, y in zip(v, sc)]
        yield tuple(v)


def _weight_scan(code: LinearCode, collect_set: bool) -> tuple[int, set[int]]:
    """Exact scan of all nonzero codewords up to scalar multiples.

    Returns (min weight, set of weights seen).  Weights of nonzero codewords
    are invariant under scalar multiplication, so scanning one representative
    per class (first nonzero message coordinate = 1) is exhaustive.
    """
    spec = code.spec
    q = spec.q
    n = code.n
    add, mul, neg, _ = spec.tables()
    rows = [list(r) for r in code.generator.rows]
    k = len(rows)

    # For row j, precompute the add-table row per position for the delta
    # vectors (a_{c+1} - a_c) * row  and the wraparound (a_0 - a_{q-1}) * row.
    step_maps = []
    wrap_maps = []
    for row in rows:
        scaled = [[mul[c][x] for x in row] for c in range(q)]
        steps = []
        for c in range(q - 1):
            steps.append(
                [add[add[y][neg[x]]] for x, y in zip(scaled[c], scaled[c + 1])]
            )
        step_maps.append(steps)
        wrap_maps.append([add[neg[x]] for x in scaled[q - 1]])

    best = n
    weights: set[int] = set()
    for lead in range(k):
        v = rows[lead][:]
        w = n - v.count(0)
        if collect_set:
            weights.add(w)
        if w < best:
            best = w
            if best <= 1 and not collect_set:
                return best, weights
        t = k - 1 - lead
        if t == 0:
            continue
        digits = [0] * t
        smaps = step_maps[lead + 1 :]
        wmaps = wrap_maps[lead + 1 :]
        qm1 = q - 1
        while True:
            i = t - 1
            while i >= 0 and digits[i] == qm1:
                v = [m[x] for m, x in zip(wmaps[i], v)]
                digits[i] = 0
                i -= 1
            if i < 0:
                break
            v = [m[x] for m, x in zip(smaps[i][digits[i]], v)]
            digits[i] += 1
            w = n - v.count(0)
            if collect_set:
                weights.add(w)
            if w < best:
                best = w
                if best <= 1 and not collect_set:
                    return best, weights
    return best, weights


def min_distance(code: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Exact minimum distance by full message enumeration; caches the result."""
    if code._dmin is not None:
        return code._dmin
    if code.spec.q**code.k > budget:
        raise BudgetExceeded(
            f"{code.spec.q}^{code.k} messages exceed budget {budget}"
        )
    best, _ = _weight_scan(code, collect_set=False)
    code._dmin = best
    return best


def nonzero_weight_set(code: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> set[int]:
    """Exact set of weights of nonzero codewords."""
    if code.spec.q**code.k > budget:
        raise BudgetExceeded(
            f"{code.spec.q}^{code.k} messages exceed budget {budget}"
        )
    best, weights = _weight_scan(code, collect_set=True)
    if code._dmin is None:
        code._dmin = best
    return weights


# ---------------------------------------------------------------------------
# Duality


def parity_check(code: LinearCode) -> MatrixGF:
    """An (n-k) x n full-rank matrix H with H c^T = 0 exactly on the code."""
    spec = code.spec
    _, _, neg, _ = spec.tables()
    rows, pivots = _rref_rows([list(r) for r in code.generator.rows], spec)
    pivot_set = set(pivots)
    n = code.n
    hrows = []
    for j in range(n):
        if j in pivot_set:
            continue
        h = [0] * n
        h[j] = 1
        for i, pc in enumerate(pivots):
            h[pc] = neg[rows[i][j]]
        hrows.append(h)
    return MatrixGF(spec, hrows)


def dual(code: LinearCode) -> LinearCode:
    """The dual code, generated by a parity check of the input."""
    return LinearCode(code.spec, parity_check(code))


def in_dual(code: LinearCode, vec: tuple[int, ...]) -> bool:
    """Is vec orthogonal to every generator row?"""
    if len(vec) != code.n:
        raise DimensionMismatch("vector length differs from code length")
    spec = code.spec
    add, mul, _, _ = spec.tables()
    for row in code.generator.rows:
        acc = 0
        for x, y in zip(row, vec):
            if x and y:
                acc = add[acc][mul[x][y]]
        if acc:
            return False
    return True


def check_columns_independent(matrix: MatrixGF, t: int) -> bool:
    """True iff every t-subset of columns is linearly independent."""
    if not 1 <= t <= matrix.nrows:
        raise ParameterError(f"need 1 <= t <= {matrix.nrows}, got {t}")
    spec = matrix.spec
    rows = matrix.rows
    n = matrix.ncols
    for cols in itertools.combinations(range(n), t):
        sub = [[row[c] for c in cols] for row in rows]
        if _rank(sub, spec) != t:
            return False
    return True


def parity_check_with_ones_row(code: LinearCode) -> MatrixGF:
    """Parity check matrix whose first row is all ones.

    Requires the all-ones vector to lie in the dual; raises NotInDual
    otherwise.
    """
    n = code.n
    ones = tuple([1] * n)
    if not in_dual(code, ones):
        raise NotInDual("all-ones vector is not in the dual code")
    spec = code.spec
    sel: list[list[int]] = [list(ones)]
    for row in parity_check(code).rows:
        cand = sel + [list(row)]
        if _rank(cand, spec) > len(sel):
            sel.append(list(row))
    assert len(sel) == n - code.k
    return MatrixGF(spec, sel)


# ---------------------------------------------------------------------------
# Equivalence and normalization


def normalize_first_row_ones(code: LinearCode, w: tuple[int, ...]) -> LinearCode:
    """Rescale coordinates by a full-weight dual codeword w.

    The returned code is monomially equivalent to the input (same length,
    dimension, and weight distribution) and its dual contains the all-ones
    vector, so parity_check_with_ones_row applies to it.
    """
    n = code.n
    if len(w) != n:
        raise DimensionMismatch("dual codeword length differs from code length")
    if any(x == 0 for x in w):
        raise NotFullWeight("dual codeword has a zero coordinate")
    if not in_dual(code, w):
        raise NotInDual("vector is not in the dual code")
    spec = code.spec
    _, mul, _, _ = spec.tables()
    newg = [
        [mul[w[j]][row[j]] for j in range(n)] for row in code.generator.rows
    ]
    return LinearCode(spec, newg)


def find_full_weight_dual_codeword(
    code: LinearCode, seed: int = 0, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[int, ...] | None:
    """Search for a dual codeword with no zero coordinate.

    Randomized route (valid when k <= q-2 and the systematic part has no zero
    row): sample the free dual message over nonzero scalars; each trial
    succeeds with probability at least 1 - k/(q-1).  Falls back to exhaustive
    dual enumeration when q^(n-k) <= budget.  Returns None when both routes
    come up empty.
    """
    spec = code.spec
    q = spec.q
    n, k = code.n, code.k
    add, mul, neg, _ = spec.tables()

    rows, pivots = _rref_rows([list(r) for r in code.generator.rows], spec)
    free = [j for j in range(n) if j not in set(pivots)]
    order = list(pivots) + free  # systematic column order
    A = [[rows[i][j] for j in free] for i in range(k)]

    if k <= q - 2 and all(any(x for x in arow) for arow in A):
        rng = random.Random(seed)
        for _ in range(budget):
            m = [rng.randrange(1, q) for _ in range(n - k)]
            head = []
            ok = True
            for arow in A:
                acc = 0
                for mj, aij in zip(m, arow):
                    if aij:
                        acc = add[acc][mul[mj][aij]]
                if not acc:
                    ok = False
                    break
                head.append(acc)
            if ok:
                wsys = head + [neg[x] for x in m]
                w = [0] * n
                for pos, col in enumerate(order):
                    w[col] = wsys[pos]
                wt = tuple(w)
                assert in_dual(code, wt)
                return wt

    if q ** (n - k) <= budget:
        for cw in codewords(dual(code), budget=budget):
            if all(cw):
                return cw
    return None


# ---------------------------------------------------------------------------
# Search and invariants


def random_code_search(
    n: int,
    k: int,
    d: int,
    q: int,
    seed: int,
    trials: int = 1000,
    budget: int = DEFAULT_DISTANCE_BUDGET,
) -> LinearCode | None:
    """Seeded random search for an [n, k] code of exact minimum distance d.

    Draws systematic generator matrices (I_k | A) with uniform A.  Returns the
    first hit with its distance verified exactly and cached, or None.  A
    Singleton-infeasible request (d > n-k+1) returns None immediately.
    """
    if not (0 < k < n and d >= 1):
        raise ParameterError("need 0 < k < n and d >= 1")
    if d > n - k + 1:
        return None
    spec = field_make(q)
    rng = random.Random(seed)
    for _ in range(trials):
        g = []
        for i in range(k):
            row = [0] * k
            row[i] = 1
            row += [rng.randrange(q) for _ in range(n - k)]
            g.append(row)
        cand = LinearCode(spec, g)
        if min_distance(cand, budget) == d:
            return cand
    return None


def singleton_defect(code: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """n - k + 1 - d, the gap to the Singleton bound (0 means MDS)."""
    return code.n - code.k + 1 - min_distance(code, budget)


# ---------------------------------------------------------------------------
# Code files.  Format: optional '#' comment lines, then a header line
# "q n k", then k generator rows of n integer codes.


def write_code_file(code: LinearCode, path) -> None:
    lines = [f"{code.spec.q} {code.n} {code.k}"]
    for row in code.generator.rows:
        lines.append(" ".join(str(x) for x in row))
    Path(path).write_text("\n".join(lines) + "\n")


def read_code_file(path) -> LinearCode:
    text = Path(path).read_text()
    rows: list[list[int]] = []
    header: tuple[int, int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parts = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer token") from None
        if header is None:
            if len(parts) != 3:
                raise ParseError(f"{path}:{lineno}: header must be 'q n k'")
            header = (parts[0], parts[1], parts[2])
            continue
        rows.append(parts)
    if header is None:
        raise ParseError(f"{path}: empty file")
    q, n, k = header
    if len(rows) != k:
        raise ParseError(f"{path}: expected {k} generator rows, found {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"{path}: row {i + 1} has {len(row)} entries, expected {n}")
        for x in row:
            if not 0 <= x < q:
                raise ParseError(f"{path}: row {i + 1} entry {x} out of range for GF({q})")
    return LinearCode(field_make(q), rows)
