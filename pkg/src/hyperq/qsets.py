"""Matrices over a quantale, projection objects, Q-sets and modular actions.

Matrices multiply by joining entrywise products,
(M N)[i, k] = join over j of M[i, j] N[j, k].  A projection object is a
square matrix P with P P = P and P* = P; a morphism (J, P') -> (I, P) is
an I x J matrix M absorbed on both sides (P M = M, M P' = M), and it is
functional when M M* <= P and P' <= M* M.

A Q-set is a carrier X with a bracket [x, y] subject to

    S1   [x, y] = [y, x]*
    S2   [x, y] [y, z] <= [x, z]

For brackets passing S1 and S2 the saturated transitivity

    S2'  [x, y] = join over t of [x, t] [t, y]

and the absorption identities [x, x] [x, y] = [x, y] = [x, y] [y, y]
follow; the checkers verify the consequences hold and report any
discrepancy.  Q-relations and Q-functions between Q-sets follow the same
pattern with the compatibility (R1, R2), single-valuedness (F1) and
totality (F2) laws and their primed saturated forms.

``check_modular_action`` verifies that a finite sup-lattice with a right
atom action is a module (join-bilinear, associative, unital) satisfying

    m & (n q)  <=  ((m q*) & n) q

and ``check_q_bilinear`` exposes the three bilinearity conditions for a
binary map of right modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import DimensionMismatch
from .quantale import AtomicQuantale, QElement, mask_to_element, q_mul, q_star, unit_element


@dataclass(frozen=True)
class QuantaleMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[QElement, ...], ...]

    def __post_init__(self):
        assert len(self.entries) == self.rows
        assert all(len(row) == self.cols for row in self.entries)

    def __getitem__(self, key) -> QElement:
        i, j = key
        return self.entries[i][j]


def qmatrix(entries) -> QuantaleMatrix:
    rows = tuple(tuple(frozenset(cell) for cell in row) for row in entries)
    return QuantaleMatrix(rows=len(rows), cols=len(rows[0]) if rows else 0, entries=rows)


def zero_matrix(rows: int, cols: int) -> QuantaleMatrix:
    empty = frozenset()
    return QuantaleMatrix(rows, cols, tuple(tuple(empty for _ in range(cols))
                                            for _ in range(rows)))


def identity_matrix(Q: AtomicQuantale, n: int) -> QuantaleMatrix:
    unit = unit_element(Q)
    empty = frozenset()
    return QuantaleMatrix(n, n, tuple(
        tuple(unit if i == j else empty for j in range(n)) for i in range(n)))


def matmul(Q: AtomicQuantale, M: QuantaleMatrix, N: QuantaleMatrix) -> QuantaleMatrix:
    if M.cols != N.rows:
        raise DimensionMismatch(f"cannot multiply {M.rows}x{M.cols} by {N.rows}x{N.cols}")
    out = []
    for i in range(M.rows):
        row = []
        for k in range(N.cols):
            acc: set[int] = set()
            for j in range(M.cols):
                acc |= q_mul(Q, M[i, j], N[j, k])
            row.append(frozenset(acc))
        out.append(tuple(row))
    return QuantaleMatrix(M.rows, N.cols, tuple(out))


def star_transpose(Q: AtomicQuantale, M: QuantaleMatrix) -> QuantaleMatrix:
    return QuantaleMatrix(M.cols, M.rows, tuple(
        tuple(q_star(Q, M[i, j]) for i in range(M.rows)) for j in range(M.cols)))


def entrywise_le(M: QuantaleMatrix, N: QuantaleMatrix) -> bool:
    assert (M.rows, M.cols) == (N.rows, N.cols)
    return all(M[i, j] <= N[i, j] for i in range(M.rows) for j in range(M.cols))


# ---------------------------------------------------------------------------
# projections


@dataclass(frozen=True)
class ProjObject:
    index: tuple
    matrix: QuantaleMatrix

    @property
    def size(self) -> int:
        return len(self.index)


def is_proj_object(Q: AtomicQuantale, index, P: QuantaleMatrix) -> bool:
    if P.rows != P.cols or P.rows != len(tuple(index)):
        return False
    return matmul(Q, P, P) == P and star_transpose(Q, P) == P


def proj_object(Q: AtomicQuantale, index, P: QuantaleMatrix) -> ProjObject:
    index = tuple(index)
    if not is_proj_object(Q, index, P):
        raise ValueError("matrix is not an idempotent self-adjoint projection")
    return ProjObject(index=index, matrix=P)


def is_proj_morphism(Q: AtomicQuantale, src: ProjObject, dst: ProjObject,
                     M: QuantaleMatrix) -> bool:
    """Absorption on both sides: dst.P M = M and M src.P = M."""
    if (M.rows, M.cols) != (dst.size, src.size):
        raise DimensionMismatch(
            f"morphism must be {dst.size}x{src.size}, got {M.rows}x{M.cols}")
    return matmul(Q, dst.matrix, M) == M and matmul(Q, M, src.matrix) == M


def is_functional(Q: AtomicQuantale, src: ProjObject, dst: ProjObject,
                  M: QuantaleMatrix) -> bool:
    """M M* <= dst.P (single-valued) and src.P <= M* M (total)."""
    if not is_proj_morphism(Q, src, dst, M):
        return False
    Mstar = star_transpose(Q, M)
    return (entrywise_le(matmul(Q, M, Mstar), dst.matrix)
            and entrywise_le(src.matrix, matmul(Q, Mstar, M)))


# ---------------------------------------------------------------------------
# Q-sets


@dataclass(frozen=True)
class QSet:
    carrier: tuple
    bracket: QuantaleMatrix


@dataclass(frozen=True)
class QsetResult:
    name: str
    passed: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class QsetReport:
    results: tuple[QsetResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> QsetResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _join(cells) -> QElement:
    acc: set[int] = set()
    for c in cells:
        acc |= c
    return frozenset(acc)


def check_qset(Q: AtomicQuantale, carrier, bracket: QuantaleMatrix) -> QsetReport:
    """Check S1 and S2 over the carrier; when they hold, the saturated
    form S2' and the absorption identities are consequences and any
    failure of them is reported as a derived-law discrepancy."""
    carrier = tuple(carrier)
    n = len(carrier)
    assert (bracket.rows, bracket.cols) == (n, n)
    results = []

    s1 = next((
        (carrier[x], carrier[y]) for x in range(n) for y in range(n)
        if bracket[x, y] != q_star(Q, bracket[y, x])), None)
    results.append(QsetResult("S1", s1 is None, s1))

    s2 = next((
        (carrier[x], carrier[y], carrier[z])
        for x in range(n) for y in range(n) for z in range(n)
        if not q_mul(Q, bracket[x, y], bracket[y, z]) <= bracket[x, z]), None)
    results.append(QsetResult("S2", s2 is None, s2))

    if s1 is None and s2 is None:
        s2p = next((
            (carrier[x], carrier[y]) for x in range(n) for y in range(n)
            if _join(q_mul(Q, bracket[x, t], bracket[t, y]) for t in range(n))
            != bracket[x, y]), None)
        results.append(QsetResult("S2'", s2p is None, s2p))
        absorb = next((
            (carrier[x], carrier[y]) for x in range(n) for y in range(n)
            if q_mul(Q, bracket[x, x], bracket[x, y]) != bracket[x, y]
            or q_mul(Q, bracket[x, y], bracket[y, y]) != bracket[x, y]), None)
        results.append(QsetResult("absorption", absorb is None, absorb))
    return QsetReport(results=tuple(results))


def qset(Q: AtomicQuantale, carrier, bracket: QuantaleMatrix) -> QSet:
    report = check_qset(Q, carrier, bracket)
    if not report.ok:
        bad = next(r for r in report.results if not r.passed)
        raise ValueError(f"bracket violates {bad.name} at {bad.counterexample}")
    return QSet(carrier=tuple(carrier), bracket=bracket)


def singleton_qset(Q: AtomicQuantale) -> QSet:
    """The one-point Q-set whose bracket is the unit element."""
    return QSet(carrier=("*",), bracket=qmatrix([[unit_element(Q)]]))


def check_qrelation(Q: AtomicQuantale, X: QSet, Y: QSet,
                    table: QuantaleMatrix) -> QsetReport:
    """Compatibility of a |Y| x |X| table with the two brackets:

        R1  [y, y']_Y R(y', x) <= R(y, x), equality when y = y'
        R2  R(y, x') [x', x]_X <= R(y, x), equality when x = x'

    and, when both hold, the saturated forms R1' and R2' (joins over the
    middle index equal the table) are consequences, checked the same way."""
    ny, nx = len(Y.carrier), len(X.carrier)
    if (table.rows, table.cols) != (ny, nx):
        raise DimensionMismatch(f"table must be {ny}x{nx}, got {table.rows}x{table.cols}")
    bx, by = X.bracket, Y.bracket
    results = []

    r1 = None
    for y, yp, x in iproduct(range(ny), range(ny), range(nx)):
        lhs = q_mul(Q, by[y, yp], table[yp, x])
        if not lhs <= table[y, x] or (y == yp and lhs != table[y, x]):
            r1 = (Y.carrier[y], Y.carrier[yp], X.carrier[x])
            break
    results.append(QsetResult("R1", r1 is None, r1))

    r2 = None
    for y, xp, x in iproduct(range(ny), range(nx), range(nx)):
        lhs = q_mul(Q, table[y, xp], bx[xp, x])
        if not lhs <= table[y, x] or (x == xp and lhs != table[y, x]):
            r2 = (Y.carrier[y], X.carrier[xp], X.carrier[x])
            break
    results.append(QsetResult("R2", r2 is None, r2))

    if r1 is None and r2 is None:
        r1p = next((
            (Y.carrier[y], X.carrier[x]) for y in range(ny) for x in range(nx)
            if _join(q_mul(Q, by[y, yp], table[yp, x]) for yp in range(ny))
            != table[y, x]), None)
        results.append(QsetResult("R1'", r1p is None, r1p))
        r2p = next((
            (Y.carrier[y], X.carrier[x]) for y in range(ny) for x in range(nx)
            if _join(q_mul(Q, table[y, xp], bx[xp, x]) for xp in range(nx))
            != table[y, x]), None)
        results.append(QsetResult("R2'", r2p is None, r2p))
    return QsetReport(results=tuple(results))


def check_qfunction(Q: AtomicQuantale, X: QSet, Y: QSet,
                    table: QuantaleMatrix) -> QsetReport:
    """Q-relation laws plus single-valuedness and totality:

        F1  R(y, x) R(y', x)* <= [y, y']_Y
        F2  [x, x]_X <= join over y of R(y, x)* R(y, x)

    with the strengthened F2' ([x, x'] bounded by the join of
    R(y, x)* R(y, x')) checked as a consequence when R2 holds."""
    rel = check_qrelation(Q, X, Y, table)
    results = list(rel.results)
    ny, nx = len(Y.carrier), len(X.carrier)
    bx, by = X.bracket, Y.bracket

    f1 = next((
        (Y.carrier[y], Y.carrier[yp], X.carrier[x])
        for y in range(ny) for yp in range(ny) for x in range(nx)
        if not q_mul(Q, table[y, x], q_star(Q, table[yp, x])) <= by[y, yp]), None)
    results.append(QsetResult("F1", f1 is None, f1))

    f2 = next((
        (X.carrier[x],) for x in range(nx)
        if not bx[x, x] <= _join(
            q_mul(Q, q_star(Q, table[y, x]), table[y, x]) for y in range(ny))), None)
    results.append(QsetResult("F2", f2 is None, f2))

    if rel.ok and f1 is None and f2 is None:
        f2p = next((
            (X.carrier[x], X.carrier[xp]) for x in range(nx) for xp in range(nx)
            if not bx[x, xp] <= _join(
                q_mul(Q, q_star(Q, table[y, x]), table[y, xp]) for y in range(ny))), None)
        results.append(QsetResult("F2'", f2p is None, f2p))
    return QsetReport(results=tuple(results))


# ---------------------------------------------------------------------------
# sup-lattices with a right action


@dataclass(frozen=True)
class FiniteLattice:
    """A finite sup-lattice given by its binary join table."""

    size: int
    join: tuple[tuple[int, ...], ...]
    bottom: int

    def le(self, a: int, b: int) -> bool:
        return self.join[a][b] == b

    def join_all(self, items) -> int:
        acc = self.bottom
        for m in items:
            acc = self.join[acc][m]
        return acc

    def meet(self, a: int, b: int) -> int:
        lower = [t for t in range(self.size) if self.le(t, a) and self.le(t, b)]
        m = self.join_all(lower)
        assert self.le(m, a) and self.le(m, b)
        return m


def build_lattice(join) -> FiniteLattice:
    join = tuple(tuple(row) for row in join)
    n = len(join)
    assert all(len(row) == n for row in join)
    for a in range(n):
        assert join[a][a] == a, "join must be idempotent"
        for b in range(n):
            assert join[a][b] == join[b][a], "join must be commutative"
            for c in range(n):
                assert join[join[a][b]][c] == join[a][join[b][c]], \
                    "join must be associative"
    bottoms = [b for b in range(n) if all(join[b][x] == x for x in range(n))]
    assert len(bottoms) == 1, "lattice needs a unique bottom"
    return FiniteLattice(size=n, join=join, bottom=bottoms[0])


@dataclass(frozen=True)
class RightAction:
    """Right action of the atoms on a finite sup-lattice, extended to
    elements by joins (the empty element acts as the constant bottom)."""

    lattice: FiniteLattice
    table: tuple[tuple[int, ...], ...]   # table[m][atom] -> element

    def act(self, m: int, q: QElement) -> int:
        return self.lattice.join_all(self.table[m][j] for j in sorted(q))


def quantale_lattice(Q: AtomicQuantale) -> RightAction:
    """The quantale acting on itself by right multiplication; lattice
    elements are the 2**n bitmask elements."""
    n = Q.n_atoms
    N = 1 << n
    join = tuple(tuple(a | b for b in range(N)) for a in range(N))
    lat = build_lattice(join)
    table = []
    for m in range(N):
        elem = mask_to_element(m)
        row = []
        for j in range(n):
            prod = q_mul(Q, elem, frozenset((j,)))
            acc = 0
            for k in prod:
                acc |= 1 << k
            row.append(acc)
        table.append(tuple(row))
    return RightAction(lattice=lat, table=tuple(table))


def _sample_elements(Q: AtomicQuantale, limit: int = 1 << 10):
    """All elements when small, otherwise atoms with a few fixed unions."""
    n = Q.n_atoms
    if (1 << n) <= limit:
        return [mask_to_element(m) for m in range(1 << n)]
    singles = [frozenset((i,)) for i in range(n)]
    doubles = [frozenset((i, (i * 7 + 1) % n)) for i in range(n)]
    return [frozenset()] + singles + doubles + [frozenset(range(n))]


def check_modular_action(Q: AtomicQuantale, action: RightAction) -> QsetReport:
    """Module laws and the modular inequality m & n q <= ((m q*) & n) q,
    with q over atoms and the element sample."""
    lat = action.lattice
    n = lat.size
    results = []

    bad = next(((m,) for m in range(n)
                if action.act(m, frozenset()) != lat.bottom), None)
    results.append(QsetResult("bottom", bad is None, bad))

    # sup-lattice morphisms preserve the empty join too
    bil = next((
        (lat.bottom, j) for j in range(Q.n_atoms)
        if action.table[lat.bottom][j] != lat.bottom), None)
    if bil is None:
        bil = next((
            (m, mp, j) for m in range(n) for mp in range(n) for j in range(Q.n_atoms)
            if action.table[lat.join[m][mp]][j]
            != lat.join[action.table[m][j]][action.table[mp][j]]), None)
    results.append(QsetResult("join-bilinear", bil is None, bil))

    assoc = next((
        (m, i, j) for m in range(n) for i in range(Q.n_atoms) for j in range(Q.n_atoms)
        if action.act(m, q_mul(Q, frozenset((i,)), frozenset((j,))))
        != action.table[action.table[m][i]][j]), None)
    results.append(QsetResult("assoc", assoc is None, assoc))

    unit = next((
        (m,) for m in range(n) if action.act(m, unit_element(Q)) != m), None)
    results.append(QsetResult("unit", unit is None, unit))

    mod = None
    sample = [q for q in _sample_elements(Q) if len(q) != 1]
    sample = [frozenset((j,)) for j in range(Q.n_atoms)] + sample
    for q in sample:
        qs = q_star(Q, q)
        for m in range(n):
            mq = action.act(m, qs)
            for nn in range(n):
                lhs = lat.meet(m, action.act(nn, q))
                rhs = action.act(lat.meet(mq, nn), q)
                if not lat.le(lhs, rhs):
                    mod = (m, nn, tuple(sorted(q)))
                    break
            if mod:
                break
        if mod:
            break
    results.append(QsetResult("modular", mod is None, mod))
    return QsetReport(results=tuple(results))


def check_q_bilinear(Q: AtomicQuantale, act_a: RightAction, act_b: RightAction,
                     act_c: RightAction, f) -> QsetReport:
    """The three conditions for a bilinear map of right modules
    f: A x B -> C (f given as a nested table):

        1.  f(a q, b)  <=  f(a, b q*) q
        2.  f(a, b q)  <=  f(a q*, b) q
        3.  f(a, b) q  <=  f(a q, b q)

    plus join-bilinearity of f itself in each argument."""
    A, B, C = act_a.lattice, act_b.lattice, act_c.lattice
    results = []

    bot = (all(f[A.bottom][b] == C.bottom for b in range(B.size))
           and all(f[a][B.bottom] == C.bottom for a in range(A.size)))
    results.append(QsetResult("bottom", bot))

    bil = next((
        (a, ap, b) for a in range(A.size) for ap in range(A.size) for b in range(B.size)
        if f[A.join[a][ap]][b] != C.join[f[a][b]][f[ap][b]]), None)
    if bil is None:
        bil = next((
            (a, b, bp) for a in range(A.size) for b in range(B.size) for bp in range(B.size)
            if f[a][B.join[b][bp]] != C.join[f[a][b]][f[a][bp]]), None)
    results.append(QsetResult("join-bilinear", bil is None, bil))

    sample = _sample_elements(Q)
    c1 = c2 = c3 = None
    for q in sample:
        qs = q_star(Q, q)
        for a in range(A.size):
            aq = act_a.act(a, q)
            aqs = act_a.act(a, qs)
            for b in range(B.size):
                bq = act_b.act(b, q)
                bqs = act_b.act(b, qs)
                if c1 is None and not C.le(f[aq][b], act_c.act(f[a][bqs], q)):
                    c1 = (a, b, tuple(sorted(q)))
                if c2 is None and not C.le(f[a][bq], act_c.act(f[aqs][b], q)):
                    c2 = (a, b, tuple(sorted(q)))
                if c3 is None and not C.le(act_c.act(f[a][b], q), f[aq][bq]):
                    c3 = (a, b, tuple(sorted(q)))
    results.append(QsetResult("cond-1", c1 is None, c1))
    results.append(QsetResult("cond-2", c2 is None, c2))
    results.append(QsetResult("cond-3", c3 is None, c3))
    return QsetReport(results=tuple(results))
