"""Finite hypergroupoids: multivalued composition over a set of units.

An arrow g has a source and a target unit; a composable pair (b, a) with
src(b) = tgt(a) has an inhabited composition set comp(b, a), read as
"a then b" so that comp(b, a) lands in hom(src(a), tgt(b)).  Every unit
carries an identity arrow, and the involution swaps sources and targets.

The defining laws checked by ``check_hg_axioms``:

  HG1  each unit has a unique two-sided identity arrow
  HG2  (x y) z = x (y z) as sets, over all composable triples
  HG3  x in y z  implies  z in y* x  and  y in x z*

Subsets of arrows under pointwise composition form an atomic modular
quantale; ``to_quantale`` builds its atom table and ``from_quantale``
inverts the construction by resolving, for every atom, the unique unit
atoms absorbing it on each side (NotModular when resolution fails).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotModular
from .quantale import AtomicQuantale


@dataclass(frozen=True, eq=False)
class Hypergroupoid:
    unit_names: tuple[str, ...]
    arrow_names: tuple[str, ...]
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    star: tuple[int, ...]
    unit_arrow: tuple[int, ...]
    # (b, a) -> composition set, present exactly for composable pairs
    comp: dict[tuple[int, int], frozenset[int]] = field(repr=False)

    def __post_init__(self):
        nu, na = len(self.unit_names), len(self.arrow_names)
        assert len(self.src) == len(self.tgt) == len(self.star) == na
        assert len(self.unit_arrow) == nu
        for g in range(na):
            s = self.star[g]
            assert self.star[s] == g, "star must be an involution"
            assert self.src[s] == self.tgt[g] and self.tgt[s] == self.src[g]
        for e, i in enumerate(self.unit_arrow):
            assert self.src[i] == e and self.tgt[i] == e
            assert self.star[i] == i
        for (b, a), cs in self.comp.items():
            assert self.composable(b, a), f"comp defined on non-composable pair ({b},{a})"
            assert cs, f"composition set of ({b},{a}) is empty"
            for c in cs:
                assert self.src[c] == self.src[a] and self.tgt[c] == self.tgt[b], \
                    f"composite {c} of ({b},{a}) lands outside hom({self.src[a]},{self.tgt[b]})"
        for b in range(na):
            for a in range(na):
                if self.composable(b, a):
                    assert (b, a) in self.comp, f"missing composition set for ({b},{a})"

    @property
    def n_units(self) -> int:
        return len(self.unit_names)

    @property
    def n_arrows(self) -> int:
        return len(self.arrow_names)

    def composable(self, b: int, a: int) -> bool:
        return self.src[b] == self.tgt[a]

    def compose(self, b: int, a: int) -> frozenset[int]:
        """Composition set, empty for non-composable pairs."""
        return self.comp.get((b, a), frozenset())

    def arrow_id(self, name: str) -> int:
        return self.arrow_names.index(name)


def same_structure(H1: Hypergroupoid, H2: Hypergroupoid) -> bool:
    """Structural equality on ids, ignoring display names."""
    return (H1.src == H2.src and H1.tgt == H2.tgt and H1.star == H2.star
            and H1.unit_arrow == H2.unit_arrow and H1.comp == H2.comp)


# ---------------------------------------------------------------------------
# axiom checking


@dataclass(frozen=True)
class HgResult:
    name: str
    passed: bool
    counterexample: tuple | None = None
    note: str = ""


@dataclass(frozen=True)
class HgReport:
    results: tuple[HgResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> HgResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _mul_sets(H: Hypergroupoid, left: frozenset[int], right: frozenset[int]) -> frozenset[int]:
    out: set[int] = set()
    for b in left:
        for a in right:
            out |= H.compose(b, a)
    return frozenset(out)


def check_hg_axioms(H: Hypergroupoid) -> HgReport:
    """Check HG1 (unique identities), HG2 (associativity) and HG3
    (the involution exchange law) over all composable tuples."""
    results = []

    # HG1: the declared identity absorbs, and no other arrow does
    hg1_ce = None
    for e in range(H.n_units):
        i = H.unit_arrow[e]
        for x in range(H.n_arrows):
            if H.tgt[x] == e and H.compose(i, x) != frozenset((x,)):
                hg1_ce = (e, x)
                break
            if H.src[x] == e and H.compose(x, i) != frozenset((x,)):
                hg1_ce = (e, x)
                break
        if hg1_ce:
            break
        for j in range(H.n_arrows):
            if j == i or H.src[j] != e or H.tgt[j] != e:
                continue
            absorbs = all(
                H.compose(j, x) == frozenset((x,))
                for x in range(H.n_arrows) if H.tgt[x] == e)
            if absorbs and all(
                    H.compose(x, j) == frozenset((x,))
                    for x in range(H.n_arrows) if H.src[x] == e):
                hg1_ce = (e, j)
                break
        if hg1_ce:
            break
    results.append(HgResult("HG1", hg1_ce is None, hg1_ce,
                            note="identity uniqueness included"))

    # HG2: associativity over composable triples
    hg2_ce = None
    by_src: dict[int, list[int]] = {}
    for g in range(H.n_arrows):
        by_src.setdefault(H.src[g], []).append(g)
    for y in range(H.n_arrows):
        for x in by_src.get(H.tgt[y], ()):
            xy = H.compose(x, y)
            for z in range(H.n_arrows):
                if H.tgt[z] != H.src[y]:
                    continue
                left = _mul_sets(H, xy, frozenset((z,)))
                right = _mul_sets(H, frozenset((x,)), H.compose(y, z))
                if left != right:
                    hg2_ce = (x, y, z)
                    break
            if hg2_ce:
                break
        if hg2_ce:
            break
    results.append(HgResult("HG2", hg2_ce is None, hg2_ce))

    # HG3: x in yz implies z in y*x and y in xz*
    hg3_ce = None
    for (y, z), xs in sorted(H.comp.items()):
        for x in sorted(xs):
            if z not in H.compose(H.star[y], x) or y not in H.compose(x, H.star[z]):
                hg3_ce = (x, y, z)
                break
        if hg3_ce:
            break
    results.append(HgResult("HG3", hg3_ce is None, hg3_ce))

    return HgReport(results=tuple(results))


# ---------------------------------------------------------------------------
# quantale round trip


def to_quantale(H: Hypergroupoid) -> AtomicQuantale:
    """Atom table on the arrows; non-composable products are empty."""
    n = H.n_arrows
    product = tuple(
        tuple(H.compose(b, a) for a in range(n))
        for b in range(n))
    return AtomicQuantale(
        atom_names=H.arrow_names,
        product=product,
        star=H.star,
        units=frozenset(H.unit_arrow),
    )


def from_quantale(Q: AtomicQuantale) -> Hypergroupoid:
    """Resolve each atom's source and target unit from the atom table.

    The source of g is the unique unit atom e with g in (g e), the target
    the unique e' with g in (e' g).  Raises NotModular when resolution is
    not unique or a product crosses non-matching units.
    """
    n = Q.n_atoms
    units = sorted(Q.units)
    unit_index = {e: k for k, e in enumerate(units)}
    src = []
    tgt = []
    for g in range(n):
        right = [e for e in units if g in Q.product[g][e]]
        left = [e for e in units if g in Q.product[e][g]]
        if len(right) != 1 or len(left) != 1:
            raise NotModular(
                f"atom {Q.atom_names[g]} has {len(right)} source and {len(left)} "
                f"target unit resolutions")
        src.append(unit_index[right[0]])
        tgt.append(unit_index[left[0]])
    comp: dict[tuple[int, int], frozenset[int]] = {}
    for b in range(n):
        for a in range(n):
            prod = Q.product[b][a]
            if src[b] == tgt[a]:
                if not prod:
                    raise NotModular(
                        f"composable pair ({Q.atom_names[b]},{Q.atom_names[a]}) "
                        f"has empty product")
                comp[(b, a)] = prod
            elif prod:
                raise NotModular(
                    f"non-composable pair ({Q.atom_names[b]},{Q.atom_names[a]}) "
                    f"has nonempty product")
    return Hypergroupoid(
        unit_names=tuple(Q.atom_names[e] for e in units),
        arrow_names=Q.atom_names,
        src=tuple(src),
        tgt=tuple(tgt),
        star=Q.star,
        unit_arrow=tuple(units),
        comp=comp,
    )


# ---------------------------------------------------------------------------
# simplicity


def is_simple(H: Hypergroupoid, g: int) -> bool:
    """Whether g g* is exactly the identity of tgt(g)."""
    return H.compose(g, H.star[g]) == frozenset((H.unit_arrow[H.tgt[g]],))


@lru_cache(maxsize=None)
def _simple_arrows(H: Hypergroupoid) -> tuple[int, ...]:
    return tuple(g for g in range(H.n_arrows) if is_simple(H, g))


@lru_cache(maxsize=None)
def _semisimple_cached(H: Hypergroupoid):
    simples = _simple_arrows(H)
    witness: dict[int, tuple[int, int]] = {}
    ok = True
    for f in range(H.n_arrows):
        found = None
        for u in simples:
            for v in simples:
                if H.compose(u, H.star[v]) == frozenset((f,)):
                    found = (u, v)
                    break
            if found:
                break
        if found is None:
            ok = False
        else:
            witness[f] = found
    return ok, witness


def is_semisimple(H: Hypergroupoid) -> tuple[bool, dict[int, tuple[int, int]]]:
    """Whether every arrow is u v* for simple u, v, meaning the singleton
    composition set comp(u, star(v)) == {arrow}.  Scans simple arrows in
    id order; the witness maps each factorable arrow to its first
    factorization."""
    ok, witness = _semisimple_cached(H)
    return ok, dict(witness)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class MorphismReport:
    typing_ok: bool
    unit_ok: bool
    comp_ok: bool
    star_ok: bool
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        # star preservation is a consequence for genuine hypergroupoids;
        # it is reported but does not decide the verdict
        return self.typing_ok and self.unit_ok and self.comp_ok

    def __bool__(self) -> bool:
        return self.ok


def check_morphism(
    H1: Hypergroupoid,
    H2: Hypergroupoid,
    unit_map: dict[int, int] | tuple[int, ...],
    arrow_map: dict[int, int] | tuple[int, ...],
) -> MorphismReport:
    """Check that the maps send identities to identities and satisfy
    f(x y) a subset of f(x) f(y) on every composable pair.  Star
    preservation is checked and reported separately."""
    umap = tuple(unit_map[e] for e in range(H1.n_units))
    amap = tuple(arrow_map[g] for g in range(H1.n_arrows))
    assert all(0 <= e < H2.n_units for e in umap)
    assert all(0 <= g < H2.n_arrows for g in amap)

    failures = []
    typing_ok = True
    for g in range(H1.n_arrows):
        if H2.src[amap[g]] != umap[H1.src[g]] or H2.tgt[amap[g]] != umap[H1.tgt[g]]:
            typing_ok = False
            failures.append(("typing", g))
    unit_ok = True
    for e in range(H1.n_units):
        if amap[H1.unit_arrow[e]] != H2.unit_arrow[umap[e]]:
            unit_ok = False
            failures.append(("unit", e))
    comp_ok = True
    if typing_ok:
        for (b, a), cs in sorted(H1.comp.items()):
            image = frozenset(amap[c] for c in cs)
            if not image <= H2.compose(amap[b], amap[a]):
                comp_ok = False
                failures.append(("comp", b, a))
    star_ok = all(amap[H1.star[g]] == H2.star[amap[g]] for g in range(H1.n_arrows))
    if not star_ok:
        failures.append(("star",))
    return MorphismReport(
        typing_ok=typing_ok, unit_ok=unit_ok, comp_ok=comp_ok, star_ok=star_ok,
        failures=tuple(failures))
