"""Hypergroupoid axioms, the quantale round trip, semi-simplicity and
morphism checking.

The three-arrow table in data/hg3_mutated.json is associative and unital
but composes by left projection, so the involution exchange law fails;
it pins down the checker's counterexample reporting.
"""

import pytest

from hyperq.errors import NotModular
from hyperq.fixtures import delta_quantale, delta_quantale_mutated, s3_generators
from hyperq.hypergroupoid import (
    Hypergroupoid,
    check_hg_axioms,
    check_morphism,
    from_quantale,
    is_semisimple,
    is_simple,
    same_structure,
    to_quantale,
)
from hyperq.io import load_input
from hyperq.quantale import AtomicQuantale, is_grothendieck
from hyperq.realization import coset_partition, enumerate_group, from_cycles

from conftest import DATA


def test_axioms_pass_on_realized_fixtures(all_realized):
    for real in all_realized.values():
        report = check_hg_axioms(real.hypergroupoid)
        assert report.ok, report.results


def test_axioms_pass_on_delta():
    H = from_quantale(delta_quantale())
    assert check_hg_axioms(H).ok


def test_left_projection_table_fails_exchange_law():
    spec, _ = load_input(DATA / "hg3_mutated.json")
    H = spec.weighted.base
    report = check_hg_axioms(H)
    assert report.result("HG1").passed
    assert report.result("HG2").passed
    hg3 = report.result("HG3")
    assert not hg3.passed
    # s in 1*s holds but 1 in s comp(s*) = {s} fails
    assert hg3.counterexample == (1, 0, 1)


def test_mutated_delta_fails_exchange_law():
    # d in d1 but 1 is not in d*d = {d}
    H = from_quantale(delta_quantale_mutated())
    report = check_hg_axioms(H)
    assert not report.result("HG3").passed


def test_round_trip_from_realized(all_realized):
    for real in all_realized.values():
        H = real.hypergroupoid
        assert same_structure(from_quantale(to_quantale(H)), H)


def test_round_trip_from_table():
    Q = delta_quantale()
    Q2 = to_quantale(from_quantale(Q))
    assert Q2.atom_names == Q.atom_names
    assert Q2.product == Q.product
    assert Q2.star == Q.star
    assert Q2.units == Q.units


def test_unit_resolution_requires_a_unit():
    empty = frozenset()
    Q = AtomicQuantale(
        atom_names=("e", "g"),
        product=((frozenset((0,)), empty), (empty, empty)),
        star=(0, 1),
        units=frozenset((0,)),
    )
    with pytest.raises(NotModular):
        from_quantale(Q)


def test_unit_resolution_must_be_unique():
    e1, e2, g = frozenset((0,)), frozenset((1,)), frozenset((2,))
    empty = frozenset()
    Q = AtomicQuantale(
        atom_names=("e1", "e2", "g"),
        product=(
            (e1, empty, g),
            (empty, e2, g),
            (g, g, g),
        ),
        star=(0, 1, 2),
        units=frozenset((0, 1)),
    )
    with pytest.raises(NotModular):
        from_quantale(Q)


def test_composable_pair_needs_nonempty_product():
    e, g = frozenset((0,)), frozenset((1,))
    empty = frozenset()
    Q = AtomicQuantale(
        atom_names=("e", "g"),
        product=((e, g), (g, empty)),
        star=(0, 1),
        units=frozenset((0,)),
    )
    with pytest.raises(NotModular):
        from_quantale(Q)


def test_composition_star_reversal(all_realized):
    # comp(b, a)* = comp(a*, b*) elementwise
    for real in all_realized.values():
        H = real.hypergroupoid
        for (b, a), cs in H.comp.items():
            swapped = H.compose(H.star[a], H.star[b])
            assert frozenset(H.star[c] for c in cs) == swapped


def test_simplicity_in_the_group_case(real_regular):
    H = real_regular.hypergroupoid
    assert all(is_simple(H, g) for g in range(H.n_arrows))


def test_simplicity_on_cosets(real_cosets):
    H = real_cosets.hypergroupoid
    assert is_simple(H, 0)
    assert not is_simple(H, 1)


def test_simplicity_on_the_mixed_fixture(real_mixed):
    H = real_mixed.hypergroupoid
    # quotient maps onto the small block are simple, their adjoints not
    assert is_simple(H, 9)
    assert not is_simple(H, 6)
    assert is_simple(H, 0)
    assert not is_simple(H, 13)


def test_semisimple_on_the_mixed_fixture(real_mixed):
    H = real_mixed.hypergroupoid
    ok, witness = is_semisimple(H)
    assert ok
    assert sorted(witness) == list(range(H.n_arrows))
    for a, (u, v) in witness.items():
        assert is_simple(H, u) and is_simple(H, v)
        assert H.compose(u, H.star[v]) == frozenset((a,))


def test_cosets_alone_are_not_semisimple(real_cosets):
    # d = u v* needs the quotient maps, which exist only in the union
    ok, witness = is_semisimple(real_cosets.hypergroupoid)
    assert not ok
    assert 0 in witness and 1 not in witness


def test_top_decomposition_matches_semisimplicity(all_realized):
    tables = [real.hypergroupoid for real in all_realized.values()]
    tables.append(from_quantale(delta_quantale()))
    tables.append(from_quantale(delta_quantale_mutated()))
    for H in tables:
        assert is_grothendieck(to_quantale(H))[0] == is_semisimple(H)[0]


# ---------------------------------------------------------------------------
# morphisms


def test_identity_morphism(real_regular):
    H = real_regular.hypergroupoid
    report = check_morphism(H, H, tuple(range(H.n_units)),
                            tuple(range(H.n_arrows)))
    assert report.ok and report.star_ok
    assert report.failures == ()


def _quotient_arrow_map(real_regular, real_cosets):
    """Arrow map of the projection onto the coset block: an arrow's
    representative pair maps to the orbit of its cosets."""
    elements = enumerate_group(s3_generators(), 3)
    _, cls = coset_partition(elements, (from_cycles(3, (0, 1)),))
    out = []
    for (x, y) in real_regular.representative:
        out.append(int(real_cosets.membership[cls[x], cls[y]]))
    return tuple(out)


def test_quotient_morphism(real_regular, real_cosets):
    amap = _quotient_arrow_map(real_regular, real_cosets)
    report = check_morphism(real_regular.hypergroupoid,
                            real_cosets.hypergroupoid, (0,), amap)
    assert report.ok
    assert report.star_ok


def test_collapsing_the_other_way_fails(real_regular, real_cosets):
    # send d to a transposition arrow: dd covers the unit and d, but the
    # image only reaches the unit
    elements = enumerate_group(s3_generators(), 3)
    t_arrow = int(real_regular.membership[
        elements.index(from_cycles(3, (0, 1))), 0])
    report = check_morphism(real_cosets.hypergroupoid,
                            real_regular.hypergroupoid, (0,), (0, t_arrow))
    assert report.typing_ok and report.unit_ok
    assert not report.comp_ok
    assert not report.ok
    assert ("comp", 1, 1) in report.failures


def _cyclic3() -> Hypergroupoid:
    one, s, t = frozenset((0,)), frozenset((1,)), frozenset((2,))
    return Hypergroupoid(
        unit_names=("e",),
        arrow_names=("1", "s", "t"),
        src=(0, 0, 0),
        tgt=(0, 0, 0),
        star=(0, 2, 1),
        unit_arrow=(0,),
        comp={
            (0, 0): one, (0, 1): s, (0, 2): t,
            (1, 0): s, (1, 1): t, (1, 2): one,
            (2, 0): t, (2, 1): one, (2, 2): s,
        },
    )


def test_star_preservation_is_reported_separately():
    # target absorbs every composition, so the inclusion always holds,
    # but its star fixes the arrows the source swaps
    everything = frozenset((0, 1, 2))
    chaotic = Hypergroupoid(
        unit_names=("e",),
        arrow_names=("1", "s", "t"),
        src=(0, 0, 0),
        tgt=(0, 0, 0),
        star=(0, 1, 2),
        unit_arrow=(0,),
        comp={(b, a): everything for b in range(3) for a in range(3)},
    )
    source = _cyclic3()
    assert check_hg_axioms(source).ok
    report = check_morphism(source, chaotic, (0,), (0, 1, 2))
    assert report.ok
    assert bool(report)
    assert not report.star_ok
    assert ("star",) in report.failures
