"""Finite atomic quantales presented by atom tables.

An element of the quantale is a subset of atoms (a ``frozenset`` of atom
ids); joins are unions, the order is inclusion.  The whole multiplicative
structure is determined by the atom table: a product of atoms is a set of
atoms, the product of two elements is the union of the atom products, so
bilinearity over joins holds by construction.  The involution acts
atomwise.

``check_axioms`` verifies the remaining laws: distributivity of binary
meets over joins, associativity, bilinearity, the unit law, the
involution laws, and the modular law

    x & (y z)  <=  y ((y* x) & z)

either exhaustively over all element triples (gated by atom count, the
table is lifted to bitmask arrays and checked with numpy) or on a seeded
sample of triples.  Elements are ordered by their bitmask value (atom 0
is the least significant bit); the reported counterexample is the first
failing triple in that order.

``is_grothendieck`` decides whether every atom factors as u v* with u, v
simple (an atom u is simple when u u* is a single unit atom), and
``site`` enumerates the category of elements below the unit, with
hom(q, q') = { f | 1 & f* f = q and f f* <= q' }.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import BoundExceeded

QElement = frozenset[int]

# Exhaustive mode enumerates 2**n elements per argument; past this many
# atoms the triple count leaves desk scale.
EXHAUSTIVE_ATOM_BOUND = 9

# site() enumerates every element once per object pair; gate separately.
SITE_ATOM_BOUND = 12


@dataclass(frozen=True)
class AtomicQuantale:
    """Atom table of a finite atomic quantale.

    atom_names   display names, index = atom id
    product      product[i][j] = set of atom ids in (atom i)(atom j)
    star         involution on atom ids
    units        atom ids whose join is the multiplicative unit
    """

    atom_names: tuple[str, ...]
    product: tuple[tuple[frozenset[int], ...], ...]
    star: tuple[int, ...]
    units: frozenset[int]

    def __post_init__(self):
        n = len(self.atom_names)
        assert len(self.product) == n and all(len(row) == n for row in self.product)
        assert len(self.star) == n
        for row in self.product:
            for cell in row:
                assert all(0 <= k < n for k in cell)
        for i in range(n):
            s = self.star[i]
            assert 0 <= s < n and self.star[s] == i, "star must be an involution"
        assert all(0 <= e < n for e in self.units)
        assert all(self.star[e] == e for e in self.units), "units must be self-adjoint"

    @property
    def n_atoms(self) -> int:
        return len(self.atom_names)

    def atom_id(self, name: str) -> int:
        return self.atom_names.index(name)


def bottom(Q: AtomicQuantale) -> QElement:
    return frozenset()


def top(Q: AtomicQuantale) -> QElement:
    return frozenset(range(Q.n_atoms))


def unit_element(Q: AtomicQuantale) -> QElement:
    return frozenset(Q.units)


def q_mul(Q: AtomicQuantale, a: QElement, b: QElement) -> QElement:
    """Product of two elements, the union of pairwise atom products."""
    out: set[int] = set()
    for i in a:
        row = Q.product[i]
        for j in b:
            out |= row[j]
    return frozenset(out)


def q_star(Q: AtomicQuantale, a: QElement) -> QElement:
    return frozenset(Q.star[i] for i in a)


def q_le(a: QElement, b: QElement) -> bool:
    return a <= b


# ---------------------------------------------------------------------------
# bitmask view, used by the checkers


def element_to_mask(a: QElement) -> int:
    m = 0
    for i in a:
        m |= 1 << i
    return m


def mask_to_element(m: int) -> QElement:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def _atom_masks(Q: AtomicQuantale) -> list[list[int]]:
    return [[element_to_mask(cell) for cell in row] for row in Q.product]


def _mask_mul(P: list[list[int]], a: int, b: int) -> int:
    """Product of two bitmask elements via the atom table P."""
    out = 0
    x = a
    i = 0
    while x:
        if x & 1:
            row = P[i]
            y = b
            j = 0
            while y:
                if y & 1:
                    out |= row[j]
                y >>= 1
                j += 1
        x >>= 1
        i += 1
    return out


def _mask_star(star: tuple[int, ...], a: int) -> int:
    out = 0
    i = 0
    while a:
        if a & 1:
            out |= 1 << star[i]
        a >>= 1
        i += 1
    return out


# ---------------------------------------------------------------------------
# axiom checking


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    counterexample: tuple[QElement, ...] | None = None
    note: str = ""


@dataclass(frozen=True)
class AxiomReport:
    mode: str
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failing(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.passed)


def _build_tables(Q: AtomicQuantale):
    """Lift the atom table to full element tables over 2**n bitmasks."""
    n = Q.n_atoms
    N = 1 << n
    P = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            P[i, j] = element_to_mask(Q.product[i][j])
    # rowprod[i, b] = product of atom i with element b
    rowprod = np.zeros((n, N), dtype=np.int64)
    for i in range(n):
        r = rowprod[i]
        for b in range(1, N):
            low = b & -b
            r[b] = r[b ^ low] | P[i, low.bit_length() - 1]
    mul = np.zeros((N, N), dtype=np.int64)
    for a in range(1, N):
        low = a & -a
        mul[a] = mul[a ^ low] | rowprod[low.bit_length() - 1]
    star = np.zeros(N, dtype=np.int64)
    for a in range(1, N):
        low = a & -a
        star[a] = star[a ^ low] | (1 << Q.star[low.bit_length() - 1])
    return mul, star


def _first_pair(diff: np.ndarray) -> tuple[int, int]:
    # diff is (N, N) boolean over (y, z); row-major argwhere is lexicographic
    idx = np.argwhere(diff)[0]
    return int(idx[0]), int(idx[1])


def _check_exhaustive_chunk(xs, mul, star, or_table, arange):
    """Check the triple axioms for x in xs.  Returns first failures by axiom."""
    fails: dict[str, tuple[int, int, int]] = {}

    def note(name, x, diff):
        if name not in fails and diff.any():
            y, z = _first_pair(diff)
            fails[name] = (x, y, z)

    for x in xs:
        mul_x = mul[x]
        col_x = mul[:, x]
        # Q3: binary meet distributes over join
        lhs = x & or_table
        rhs = (x & arange)[:, None] | (x & arange)[None, :]
        note("Q3", x, lhs != rhs)
        # Q4: associativity
        note("Q4", x, mul[mul_x][:, :] != mul_x[mul])
        # Q5: bilinearity over joins, both sides
        note("Q5", x, (mul_x[or_table] != (mul_x[:, None] | mul_x[None, :]))
             | (col_x[or_table] != (col_x[:, None] | col_x[None, :])))
        # Q9: modular law  x & yz <= y(y*x & z)
        ystar_x = mul[star, x]
        inner = ystar_x[:, None] & arange[None, :]
        rhs9 = mul[arange[:, None], inner]
        lhs9 = x & mul
        note("Q9", x, (lhs9 & ~rhs9) != 0)
        if len(fails) == 4:
            break
    return fails


def _merge_fails(parts: list[dict]) -> dict:
    merged: dict[str, tuple[int, int, int]] = {}
    for part in parts:
        for name, triple in part.items():
            if name not in merged or triple < merged[name]:
                merged[name] = triple
    return merged


def check_axioms(
    Q: AtomicQuantale,
    mode: str = "exhaustive",
    samples: int = 10_000,
    seed: int = 0,
    atom_bound: int = EXHAUSTIVE_ATOM_BOUND,
    max_workers: int = 1,
) -> AxiomReport:
    """Check the quantale laws on the element algebra of the atom table.

    mode "exhaustive" ranges over all 2**n element triples and requires
    n <= atom_bound (BoundExceeded otherwise); mode "sampled" draws
    ``samples`` seeded pseudo-random triples and works at any size.
    The join/order laws hold by construction for subsets and are
    reported as such.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    results = [
        AxiomResult("Q1", True, note="holds by construction: subsets ordered by inclusion"),
        AxiomResult("Q2", True, note="holds by construction: joins are unions"),
    ]
    if mode == "exhaustive":
        if Q.n_atoms > atom_bound:
            raise BoundExceeded(
                f"exhaustive mode gated at {atom_bound} atoms, table has {Q.n_atoms}"
            )
        results += _check_axioms_exhaustive(Q, max_workers)
    else:
        results += _check_axioms_sampled(Q, samples, seed)
    return AxiomReport(mode=mode, results=tuple(results))


def _check_axioms_exhaustive(Q: AtomicQuantale, max_workers: int) -> list[AxiomResult]:
    n = Q.n_atoms
    N = 1 << n
    mul, star = _build_tables(Q)
    arange = np.arange(N, dtype=np.int64)
    or_table = arange[:, None] | arange[None, :]
    unit = element_to_mask(unit_element(Q))

    results: list[AxiomResult] = []

    def triple(x, y, z):
        return (mask_to_element(x), mask_to_element(y), mask_to_element(z))

    # pair and single axioms first
    q6_bad = np.flatnonzero((mul[unit] != arange) | (mul[:, unit] != arange))
    results.append(AxiomResult(
        "Q6", q6_bad.size == 0,
        (mask_to_element(int(q6_bad[0])),) if q6_bad.size else None))

    inv_bad = star[star] != arange
    mono = star[or_table] != (star[:, None] | star[None, :])
    if inv_bad.any():
        x = int(np.flatnonzero(inv_bad)[0])
        results.append(AxiomResult("Q7", False, (mask_to_element(x),)))
    elif mono.any():
        y, z = _first_pair(mono)
        results.append(AxiomResult("Q7", False, (mask_to_element(y), mask_to_element(z))))
    else:
        results.append(AxiomResult("Q7", True))

    anti = star[mul] != mul[np.ix_(star, star)].T
    if anti.any():
        x, y = _first_pair(anti)
        results.append(AxiomResult("Q8", False, (mask_to_element(x), mask_to_element(y))))
    else:
        results.append(AxiomResult("Q8", True))

    # triple axioms, chunked over the first argument
    workers = max(1, int(max_workers))
    if workers == 1:
        fails = _check_exhaustive_chunk(range(N), mul, star, or_table, arange)
    else:
        chunks = np.array_split(np.arange(N), workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda xs: _check_exhaustive_chunk(xs, mul, star, or_table, arange),
                chunks))
        fails = _merge_fails(parts)

    for name in ("Q3", "Q4", "Q5", "Q9"):
        if name in fails:
            results.append(AxiomResult(name, False, triple(*fails[name])))
        else:
            results.append(AxiomResult(name, True))
    results.sort(key=lambda r: r.name)
    return results


def _check_axioms_sampled(Q: AtomicQuantale, samples: int, seed: int) -> list[AxiomResult]:
    n = Q.n_atoms
    P = _atom_masks(Q)
    star_atoms = Q.star
    unit = element_to_mask(unit_element(Q))
    rng = random.Random(seed)

    def mul(a, b):
        return _mask_mul(P, a, b)

    def star(a):
        return _mask_star(star_atoms, a)

    fails: dict[str, tuple[int, ...]] = {}

    def note(name, *masks):
        if name not in fails:
            fails[name] = masks

    checked = 0
    for _ in range(samples):
        x = rng.getrandbits(n)
        y = rng.getrandbits(n)
        z = rng.getrandbits(n)
        checked += 1
        if (x & (y | z)) != ((x & y) | (x & z)):
            note("Q3", x, y, z)
        xy = mul(x, y)
        yz = mul(y, z)
        if mul(xy, z) != mul(x, yz):
            note("Q4", x, y, z)
        if mul(x, y | z) != (xy | mul(x, z)) or mul(y | z, x) != (mul(y, x) | mul(z, x)):
            note("Q5", x, y, z)
        if mul(unit, x) != x or mul(x, unit) != x:
            note("Q6", x)
        sx, sy = star(x), star(y)
        if star(sx) != x:
            note("Q7", x)
        elif star(x | y) != (sx | sy):
            note("Q7", x, y)
        if star(xy) != mul(sy, sx):
            note("Q8", x, y)
        lhs = x & yz
        rhs = mul(y, (mul(star(y), x) & z))
        if lhs & ~rhs:
            note("Q9", x, y, z)

    results = []
    for name in ("Q3", "Q4", "Q5", "Q6", "Q7", "Q8", "Q9"):
        if name in fails:
            ce = tuple(mask_to_element(m) for m in fails[name])
            results.append(AxiomResult(name, False, ce, note=f"{checked} sampled triples"))
        else:
            results.append(AxiomResult(name, True, note=f"{checked} sampled triples"))
    return results


# ---------------------------------------------------------------------------
# semi-simplicity on the quantale side


def simple_atoms(Q: AtomicQuantale) -> tuple[int, ...]:
    """Atoms u with u u* a single unit atom (graphs of partial maps that
    cover their target)."""
    out = []
    for u in range(Q.n_atoms):
        prod = Q.product[u][Q.star[u]]
        if len(prod) == 1 and next(iter(prod)) in Q.units:
            out.append(u)
    return tuple(out)


def is_grothendieck(Q: AtomicQuantale) -> tuple[bool, dict[int, tuple[int, int]]]:
    """Whether every atom factors as u v* with u, v simple.

    Returns (flag, witness); the witness maps each factorable atom to the
    first (u, v) in id order with (atom u)(atom v*) = {atom}.  The flag is
    true iff the witness covers every atom, which is the top-decomposition
    axiom for the element algebra.
    """
    simples = simple_atoms(Q)
    witness: dict[int, tuple[int, int]] = {}
    ok = True
    for f in range(Q.n_atoms):
        found = None
        for u in simples:
            row = Q.product[u]
            for v in simples:
                if row[Q.star[v]] == frozenset((f,)):
                    found = (u, v)
                    break
            if found:
                break
        if found is None:
            ok = False
        else:
            witness[f] = found
    return ok, witness


# ---------------------------------------------------------------------------
# the site of elements below the unit


@dataclass(frozen=True)
class SiteDescription:
    """Objects are the subsets of the unit atoms; hom(q, q') collects the
    elements f with 1 & f*f = q and f f* <= q'.  Composition is the
    quantale product and the identity of q is q itself."""

    quantale: AtomicQuantale
    objects: tuple[QElement, ...]
    homs: dict[tuple[QElement, QElement], tuple[QElement, ...]]

    def hom(self, q: QElement, q2: QElement) -> tuple[QElement, ...]:
        return self.homs[(q, q2)]

    def compose(self, f: QElement, g: QElement) -> QElement:
        """Composite of g: q -> q' followed by f: q' -> q''."""
        return q_mul(self.quantale, f, g)

    def identity(self, q: QElement) -> QElement:
        return q

    def is_covering(self, q: QElement, family) -> bool:
        """Whether the join of f f* over the family equals q."""
        acc: set[int] = set()
        for f in family:
            acc |= q_mul(self.quantale, f, q_star(self.quantale, f))
        return frozenset(acc) == q


def site(Q: AtomicQuantale, atom_bound: int = SITE_ATOM_BOUND) -> SiteDescription:
    """Enumerate the site of Q.  Gated by atom count since every element
    is inspected once per object pair."""
    if Q.n_atoms > atom_bound:
        raise BoundExceeded(
            f"site enumeration gated at {atom_bound} atoms, table has {Q.n_atoms}")
    units = sorted(Q.units)
    unit = unit_element(Q)
    objects = []
    for m in range(1 << len(units)):
        objects.append(frozenset(units[i] for i in range(len(units)) if m >> i & 1))
    # one pass over all elements, bucketed by (domain, image bound)
    n = Q.n_atoms
    buckets: dict[QElement, list[tuple[QElement, QElement]]] = {}
    for m in range(1 << n):
        f = mask_to_element(m)
        dom = unit & q_mul(Q, q_star(Q, f), f)
        img = q_mul(Q, f, q_star(Q, f))
        buckets.setdefault(dom, []).append((f, img))
    homs: dict[tuple[QElement, QElement], tuple[QElement, ...]] = {}
    for q in objects:
        cands = buckets.get(q, [])
        for q2 in objects:
            homs[(q, q2)] = tuple(f for f, img in cands if img <= q2)
    return SiteDescription(quantale=Q, objects=tuple(objects), homs=homs)
