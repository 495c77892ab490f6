"""Families: generators, closure counts, counting formulas, presentations."""

import pytest

from framoid.diagrams import CapExceeded, GenSymbol, generator
from framoid.monoids import (
    RelationSchema,
    bell,
    binomial,
    catalan,
    check_relations,
    closure,
    family,
    fuss_catalan_41,
    generating_set,
    generating_symbols,
    odd_double_factorial,
    predicted_cardinality,
    presentation,
    stirling2,
)


class TestCombinatorics:
    def test_catalan(self):
        assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    def test_bell(self):
        assert [bell(n) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]

    def test_odd_double_factorial(self):
        assert [odd_double_factorial(n) for n in range(5)] == [1, 1, 3, 15, 105]

    def test_fuss_catalan(self):
        assert [fuss_catalan_41(n) for n in range(1, 5)] == [1, 4, 22, 140]

    def test_binomial(self):
        assert binomial(5, 2) == 10
        assert binomial(3, 5) == 0

    def test_stirling_sums_to_bell(self):
        for n in range(1, 8):
            assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)


class TestGeneratingSets:
    def test_framed_tangles(self):
        syms = generating_symbols(family("jdn", 3, 2))
        assert syms == (GenSymbol("t", 1), GenSymbol("t", 2), GenSymbol("o", 1),
                        GenSymbol("o", 2), GenSymbol("o", 3))

    def test_tied_symmetric(self):
        syms = generating_symbols(family("tsn", 3))
        kinds = [(s.kind, s.i) for s in syms]
        assert kinds == [("s", 1), ("s", 2), ("e", 1), ("e", 2)]

    def test_partition_needs_all_ties(self):
        syms = generating_symbols(family("pn", 3))
        assert [(s.i, s.j) for s in syms] == [(1, 2), (1, 3), (2, 3)]

    def test_diagrams_carry_family_tag(self):
        for diag in generating_set(family("jdn", 4, 2)):
            assert diag.family_tag == "planar-matching"


CARDINALITY_CASES = [
    ("cdn", 2, 4, 16),
    ("sdn", 2, 3, 48),
    ("pn", 1, 4, 15),
    ("pdn", 2, 3, 22),
    ("jn", 1, 5, 42),
    ("jdn", 2, 2, 8),
    ("jdn", 2, 3, 40),
    ("brn", 1, 3, 15),
    ("brdn", 2, 3, 120),
    ("rn", 1, 3, 34),
    ("rdn", 2, 2, 17),
    ("rprimedn", 2, 2, 56),
    ("tsn", 1, 3, 30),
    ("tjn", 1, 2, 4),
    ("tjn", 1, 3, 22),
    ("tbrn", 1, 3, 75),
    ("trn", 1, 3, 76),
    ("trprimen", 1, 2, 39),
]


@pytest.mark.parametrize("name,d,n,count", CARDINALITY_CASES)
def test_closure_matches_formula(name, d, n, count):
    fam = family(name, n, d)
    els = closure(fam)
    assert len(els) == count
    assert predicted_cardinality(fam) == count


def test_tied_planar_elements_at_n2():
    fam = family("tjn", 2)
    names = {x.encode() for x in closure(fam)}
    assert names == {
        "n=2;d=1;blocks=[{t1,b1}:0,{t2,b2}:0];ties=[[0],[1]]",
        "n=2;d=1;blocks=[{t1,b1}:0,{t2,b2}:0];ties=[[0,1]]",
        "n=2;d=1;blocks=[{t1,t2}:0,{b1,b2}:0];ties=[[0],[1]]",
        "n=2;d=1;blocks=[{t1,t2}:0,{b1,b2}:0];ties=[[0,1]]",
    }


def test_closure_cap_guard():
    with pytest.raises(CapExceeded):
        closure(family("sdn", 4, 2), cap=10)


def test_closure_is_sorted_and_deterministic():
    els = closure(family("brdn", 3, 2))
    codes = [x.encode() for x in els]
    assert codes == sorted(codes)


def test_closure_order_independent_of_generator_order():
    fam = family("brn", 3)
    els = set(closure(fam))
    # rebuild by hand with the generator list reversed
    from framoid.diagrams import compose, identity

    gens = list(generating_set(fam))[::-1]
    seen = {identity(3, 1, tag=fam.tag)}
    frontier = list(seen)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y, _ = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    assert seen == els


@pytest.mark.parametrize("sub,sup,d", [
    ("jn", "jdn", 3), ("brn", "brdn", 2), ("rn", "rdn", 2), ("rn", "rprimedn", 2),
])
def test_unframed_family_embeds(sub, sup, d):
    n = 3
    small = {x.reframed(d) for x in closure(family(sub, n))}
    big = set(closure(family(sup, n, d)))
    assert small <= big


def test_framed_rook_embeds_in_prime():
    n = 3
    first = set(closure(family("rdn", n, 2)))
    prime = set(closure(family("rprimedn", n, 2)))
    assert first <= prime


def test_printed_sequence_corrections():
    # two published sequence entries disagree with their own formulas; the
    # enumeration sides with the formulas (688, not 68; 18666, not 1866)
    fam = family("rprimedn", 3, 2)
    assert predicted_cardinality(fam) == 688
    assert len(closure(fam)) == 688
    assert predicted_cardinality(family("trn", 5)) == 18666


def test_tied_rook_sequence_at_n5_by_enumeration():
    fam = family("trn", 5)
    assert len(closure(fam)) == 18666


PRESENTATION_GRID = [
    ("cdn", 3, 3), ("sdn", 3, 3), ("pn", 1, 4), ("pdn", 3, 3),
    ("jn", 1, 4), ("jdn", 3, 4), ("brn", 1, 4), ("brdn", 2, 4),
    ("rn", 1, 4), ("rdn", 2, 4), ("rprimedn", 2, 4),
    ("tsn", 1, 4), ("tjn", 1, 4), ("tbrn", 1, 4), ("trn", 1, 4),
    ("trprimen", 1, 4),
]


@pytest.mark.parametrize("name,d,n", PRESENTATION_GRID)
def test_presentations_hold(name, d, n):
    report = check_relations(family(name, n, d))
    assert report.passed, report.failures()[:3]
    assert report.checked > 0


def test_negative_control_mutated_relation():
    bad = RelationSchema(
        "broken-absorb", "t_i o_i t_i = o_i t_i (false)",
        lambda d, n: (((GenSymbol("t", i), GenSymbol("o", i), GenSymbol("t", i)),
                       (GenSymbol("o", i), GenSymbol("t", i)))
                      for i in range(1, n)))
    report = check_relations(family("jdn", 2, 2), extra_schemas=[bad])
    assert not report.passed
    witnesses = report.failures()
    assert any("broken-absorb" in w for w in witnesses)
    # the genuine schemas still hold
    assert all(not e.failures for e in report.entries if e.name != "broken-absorb")


def test_presentation_object_shape():
    pres = presentation(family("trprimen", 3))
    names = {s.name for s in pres.schemas}
    assert "rook-tie-shift" in names
    assert all(sym.kind in "sreq" for sym in pres.generators)


def test_invalid_family_parameters():
    with pytest.raises(ValueError):
        family("tjn", 3, 2)  # tied families are unframed
    with pytest.raises(ValueError):
        family("nope", 3)
    with pytest.raises(ValueError):
        family("jdn", 0, 1)
