"""Convolution algebra of a weighted hypergroupoid.

Basis elements [g] are indexed by arrows; the product is

    [g] [g'] = sum over a in comp(g, g') of <a | g, g'> [a]

with integer structure constants (extended naturals in general).  An
algebra element is a dict {arrow id: coefficient} with no explicit
zeros; coefficients are exact Fractions or ints, and complex is allowed
where the one-parameter evolution needs it.

The weight identities tie the table together (e, e' the identities of
src(g), tgt(g), all in extended natural arithmetic):

    (1)  <a|g,g'> |a|_l  =  <g'|g*,a> |g'|_l
    (2)  <a|g,g'> |a|_r  =  <g|a,g'*> |g|_r
    (3)  |g|_l |g'|_l    =  sum_a <a|g,g'> |a|_l

``validate_weights`` checks them together with the left/right symmetry
laws.  On a locally finite table the modular ratio chi(g) = |g|_l/|g|_r
defines the involution [g]* = chi(g) [g*], the normalized idempotents
e_g = [g]/|g|_l, the evolution sigma_t([g]) = chi(g)^{it} [g], and the
weight eta reading off coefficients at the identity arrows; eta
satisfies the inverse temperature 1 boundary condition

    eta([q] sigma_i([q'])) = eta([q'] [q])

checked exactly by ``kms_check`` over all arrow pairs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InfiniteCoefficient, NotSemisimple, ZeroWeight
from .extnat import INF, ExtNat, check_extnat, is_finite
from .hypergroupoid import Hypergroupoid, _semisimple_cached, _simple_arrows, is_simple

Element = dict[int, object]


@dataclass(frozen=True, eq=False)
class WeightedHypergroupoid:
    """A hypergroupoid with its structure constant table.

    mu maps (a, g, g') to <a | g, g'> for every a in comp(g, g');
    left[g] and right[g] are the declared weights (normally the derived
    values <e|g*,g> and <e'|g,g*>, but imported tables may disagree,
    which validate_weights reports)."""

    base: Hypergroupoid
    mu: dict[tuple[int, int, int], ExtNat]
    left: tuple[ExtNat, ...]
    right: tuple[ExtNat, ...]

    def __post_init__(self):
        H = self.base
        assert len(self.left) == len(self.right) == H.n_arrows
        for v in self.left + self.right:
            check_extnat(v)
        for (a, g, gp), v in self.mu.items():
            check_extnat(v)
            assert a in H.compose(g, gp), \
                f"mu entry ({a},{g},{gp}) outside the composition table"
        for (g, gp), cs in H.comp.items():
            for a in cs:
                assert (a, g, gp) in self.mu, f"mu missing entry ({a},{g},{gp})"


def derived_weights(H: Hypergroupoid, mu) -> tuple[tuple[ExtNat, ...], tuple[ExtNat, ...]]:
    """Left/right weight vectors read off a mu table."""
    left = []
    right = []
    for g in range(H.n_arrows):
        e = H.unit_arrow[H.src[g]]
        ep = H.unit_arrow[H.tgt[g]]
        left.append(mu.get((e, H.star[g], g), 0))
        right.append(mu.get((ep, g, H.star[g]), 0))
    return tuple(left), tuple(right)


# ---------------------------------------------------------------------------
# weight identities


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    failures: tuple = ()


@dataclass(frozen=True)
class WeightReport:
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


_FAILURE_CAP = 20


def validate_weights(W: WeightedHypergroupoid) -> WeightReport:
    """Check the symmetry laws and the three weight identities, exactly,
    in extended natural arithmetic."""
    H = W.base
    star = H.star
    results = []

    def run(name, triples):
        failures = []
        checked = 0
        for key, lhs, rhs in triples:
            checked += 1
            if lhs != rhs:
                if len(failures) < _FAILURE_CAP:
                    failures.append((key, lhs, rhs))
        results.append(CheckResult(name, not failures, checked, tuple(failures)))

    dleft, dright = derived_weights(H, W.mu)
    run("left-def", ((g, W.left[g], dleft[g]) for g in range(H.n_arrows)))
    run("right-def", ((g, W.right[g], dright[g]) for g in range(H.n_arrows)))
    run("star-left", ((g, W.left[star[g]], W.right[g]) for g in range(H.n_arrows)))
    run("star-mu", (((a, g, gp), v, W.mu.get((star[a], star[gp], star[g]), 0))
                    for (a, g, gp), v in sorted(W.mu.items())))
    run("murel-1", (((a, g, gp), v * W.left[a], W.mu.get((gp, star[g], a), 0) * W.left[gp])
                    for (a, g, gp), v in sorted(W.mu.items())))
    run("murel-2", (((a, g, gp), v * W.right[a], W.mu.get((g, a, star[gp]), 0) * W.right[g])
                    for (a, g, gp), v in sorted(W.mu.items())))
    run("murel-3", (((g, gp), W.left[g] * W.left[gp],
                     sum(W.mu[(a, g, gp)] * W.left[a] for a in sorted(cs)))
                    for (g, gp), cs in sorted(H.comp.items())))
    return WeightReport(results=tuple(results))


def is_locally_finite(W: WeightedHypergroupoid) -> bool:
    """All weights finite; composition sets are finite by construction."""
    return all(is_finite(v) for v in W.left) and all(is_finite(v) for v in W.right)


# ---------------------------------------------------------------------------
# the convolution product


def mul(W: WeightedHypergroupoid, u: Element, v: Element) -> Element:
    """Convolution product, bilinear over the basis products."""
    H = W.base
    acc: dict[int, object] = {}
    for g, cg in u.items():
        if cg == 0:
            continue
        for gp, cp in v.items():
            if cp == 0 or not H.composable(g, gp):
                continue
            c = cg * cp
            for a in H.comp[(g, gp)]:
                m = W.mu[(a, g, gp)]
                if m is INF:
                    raise InfiniteCoefficient(
                        f"<{a}|{g},{gp}> is infinite; coefficient would diverge")
                acc[a] = acc.get(a, 0) + c * m
    return {a: c for a, c in acc.items() if c != 0}


def chi(W: WeightedHypergroupoid, g: int) -> Fraction:
    """Modular ratio |g|_l / |g|_r."""
    l, r = W.left[g], W.right[g]
    if not (is_finite(l) and is_finite(r)):
        raise InfiniteCoefficient(f"arrow {g} has an infinite weight")
    if r == 0:
        raise ZeroWeight(f"arrow {g} has zero right weight")
    if l == 0:
        raise ZeroWeight(f"arrow {g} has zero left weight")
    return Fraction(l, r)


def star(W: WeightedHypergroupoid, u: Element) -> Element:
    """Antilinear-free exact involution [g]* = chi(g) [g*]."""
    out: dict[int, object] = {}
    for g, c in u.items():
        if c == 0:
            continue
        out[W.base.star[g]] = c * chi(W, g)
    return {g: c for g, c in out.items() if c != 0}


def e_basis(W: WeightedHypergroupoid, g: int) -> Element:
    """Normalized basis element e_g = [g] / |g|_l, satisfying
    (e_g)* = e_{g*}."""
    l = W.left[g]
    if not is_finite(l):
        raise InfiniteCoefficient(f"arrow {g} has infinite left weight")
    if l == 0:
        raise ZeroWeight(f"arrow {g} has zero left weight")
    return {g: Fraction(1, l)}


def sigma_imag(W: WeightedHypergroupoid, u: Element) -> Element:
    """Evolution at imaginary time i: [g] -> chi(g)^{-1} [g], exact."""
    return {g: c / chi(W, g) for g, c in u.items() if c != 0}


def sigma(W: WeightedHypergroupoid, t: float, u: Element) -> Element:
    """One-parameter evolution sigma_t([g]) = chi(g)^{it} [g]."""
    out: dict[int, object] = {}
    for g, c in u.items():
        if c == 0:
            continue
        factor = cmath.exp(1j * t * math.log(chi(W, g)))
        out[g] = complex(c) * factor
    return out


def eta(W: WeightedHypergroupoid, u: Element):
    """Sum of the coefficients at identity arrows."""
    return sum((u.get(i, 0) for i in W.base.unit_arrow), start=0)


@dataclass(frozen=True)
class KmsReport:
    checked: int
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def kms_check(W: WeightedHypergroupoid) -> KmsReport:
    """Exact boundary condition eta([q] sigma_i([q'])) = eta([q'] [q])
    over all basis pairs.

    Only identity arrows contribute to eta, so both sides reduce to mu
    lookups: the left side is chi(q')^{-1} <e|q,q'> summed over identity
    arrows e in comp(q, q'), the right side the same with the pair
    swapped."""
    H = W.base
    units = set(H.unit_arrow)

    def unit_mass(x, y):
        if not H.composable(x, y):
            return 0
        return sum(W.mu[(a, x, y)] for a in H.comp[(x, y)] if a in units)

    failures = []
    checked = 0
    for q in range(H.n_arrows):
        for qp in range(H.n_arrows):
            checked += 1
            lhs = unit_mass(q, qp) / chi(W, qp)
            rhs = Fraction(unit_mass(qp, q))
            if lhs != rhs:
                if len(failures) < _FAILURE_CAP:
                    failures.append((q, qp, lhs, rhs))
    return KmsReport(checked=checked, failures=tuple(failures))


def convolve_ext(W: WeightedHypergroupoid, f: dict[int, ExtNat], h: dict[int, ExtNat]) -> dict[int, ExtNat]:
    """Convolution of extended natural valued functions,
    (f * h)(a) = sum over (g, g') of f(g) h(g') <a|g,g'>, with the
    convention 0 * INF = 0."""
    H = W.base
    for v in list(f.values()) + list(h.values()):
        check_extnat(v)
    acc: dict[int, ExtNat] = {}
    for g, fg in f.items():
        if fg == 0:
            continue
        for gp, hg in h.items():
            if hg == 0 or not H.composable(g, gp):
                continue
            w = fg * hg
            for a in H.comp[(g, gp)]:
                acc[a] = acc.get(a, 0) + w * W.mu[(a, g, gp)]
    return {a: v for a, v in acc.items() if v != 0}


# ---------------------------------------------------------------------------
# the regular representation (realized tables only)


def regular_rep(real, u: Element) -> np.ndarray:
    """Matrix of an element acting on functions on the points: [g] maps
    to its 0/1 incidence matrix.  Exact object dtype; use ``.dot`` for
    products."""
    n = real.n_points
    out = np.full((n, n), Fraction(0), dtype=object)
    for g, c in u.items():
        if c == 0:
            continue
        out[real.matrix(g)] += c
    return out


def decompose_matrix(real, M: np.ndarray) -> Element:
    """Inverse of regular_rep on its image: read coefficients at orbit
    representatives and verify the matrix is constant on orbits."""
    out: dict[int, object] = {}
    for g, (x, y) in enumerate(real.representative):
        c = M[x, y]
        if c != 0:
            out[g] = c
    check = np.full(M.shape, Fraction(0), dtype=object)
    for g, c in out.items():
        check[real.matrix(g)] += c
    if not (check == M).all():
        raise ValueError("matrix is not constant on pair orbits")
    return out


def adjoint_check(real) -> WeightReport:
    """Exact adjointness of the involution in the point pairing.

    For unit-indicator vectors v, v' (value 1 on one point orbit, the
    pairing of two orbit-constant vectors is the product of their values
    on a shared orbit, 0 across different orbits) and (v [g])(x) =
    sum of v(y) over (y, x) in g, the identity

        <v, v' [g]> = chi(g) <v [g*], v'>

    must hold for every arrow.  chi comes from the structure constant
    table; both pairings are recounted directly from the incidence
    matrices at every point, which also rechecks that v'[g] is constant
    on the source orbit."""
    H = real.hypergroupoid
    results = []
    failures_const = []
    failures_adj = []
    checked = 0
    for g in range(H.n_arrows):
        mat = real.matrix(g)
        src_pts = real.unit_points[H.src[g]]
        tgt_pts = real.unit_points[H.tgt[g]]
        col_counts = {int(mat[:, p].sum()) for p in src_pts}
        row_counts = {int(mat[q, :].sum()) for q in tgt_pts}
        if len(col_counts) != 1 or len(row_counts) != 1:
            failures_const.append((g, tuple(sorted(col_counts)), tuple(sorted(row_counts))))
            continue
        lhs = col_counts.pop()   # <v, v'[g]> with v = 1_src, v' = 1_tgt
        rhs_count = row_counts.pop()   # <v[g*], v'>
        e = H.unit_arrow[H.src[g]]
        ep = H.unit_arrow[H.tgt[g]]
        left_mu = dict(real.products[(H.star[g], g)]).get(e, 0)
        right_mu = dict(real.products[(g, H.star[g])]).get(ep, 0)
        checked += 1
        if right_mu == 0 or lhs != Fraction(left_mu, right_mu) * rhs_count:
            failures_adj.append((g, lhs, left_mu, right_mu, rhs_count))
    results.append(CheckResult("orbit-constant", not failures_const,
                               H.n_arrows, tuple(failures_const)))
    results.append(CheckResult("adjoint", not failures_adj, checked, tuple(failures_adj)))
    return WeightReport(results=tuple(results))


# ---------------------------------------------------------------------------
# semi-simple structure


def mu_semisimple(H: Hypergroupoid, a: int, g: int, gp: int) -> ExtNat:
    """Structure constant recovered from the composition table alone:

        <a|g,g'> = sup over simple (x, y) with a = x y* of |g* x  &  g' y|

    Defined for semi-simple hypergroupoids (NotSemisimple otherwise).
    The supremum over a finite table is a plain int."""
    ok, _ = _semisimple_cached(H)
    if not ok:
        raise NotSemisimple("some arrow has no simple factorization")
    simples = _simple_arrows(H)
    star = H.star
    best = 0
    target = frozenset((a,))
    for x in simples:
        for y in simples:
            if H.compose(x, star[y]) != target:
                continue
            size = len(H.compose(star[g], x) & H.compose(gp, y))
            if size > best:
                best = size
    return best


def left_finite_witness(W: WeightedHypergroupoid, g: int):
    """A simple arrow u with g u finite and all simple, certifying left
    finiteness; asserts |g|_l = |g u| and returns (u, comp(g, u)).
    Returns None when no witness exists among the arrows."""
    H = W.base
    for u in _simple_arrows(H):
        if not H.composable(g, u):
            continue
        gu = H.compose(g, u)
        if all(is_simple(H, c) for c in gu):
            assert W.left[g] == len(gu), \
                f"left weight {W.left[g]} differs from |g u| = {len(gu)}"
            return u, gu
    return None
