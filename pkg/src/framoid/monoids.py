"""Monoid families: generators, closure enumeration, counting, presentations.

Sixteen families of beaded/tied diagram monoids are registered here.  Each
family knows its generator diagrams, its structural tag, whether its elements
carry ties, and whether broken arcs shed beads and ties on composition (the
rook-style singleton policy).  ``closure`` enumerates a family breadth-first
from its generators; ``predicted_cardinality`` gives the exact count by
formula; ``check_relations`` instantiates every defining relation of the
family's presentation and compares both sides as diagrams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .diagrams import (
    MATCHING,
    PERMUTATION,
    PLANAR,
    BeadedDiagram,
    CapExceeded,
    GenSymbol,
    compose,
    generator,
    identity,
    render_word,
)
from .normalform import evaluate_word


# -- exact combinatorics ------------------------------------------------------

def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n == 0:
        return 1
    return sum(binomial(n - 1, k) * bell(k) for k in range(n))


def odd_double_factorial(n: int) -> int:
    """(2n-1)!! = 1 * 3 * ... * (2n-1); the number of perfect matchings of 2n points."""
    out = 1
    for m in range(1, 2 * n, 2):
        out *= m
    return out


def fuss_catalan_41(n: int) -> int:
    num = math.comb(4 * n + 1, n)
    assert num % (4 * n + 1) == 0
    return num // (4 * n + 1)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# -- family registry ----------------------------------------------------------

@dataclass(frozen=True)
class FamilyInfo:
    display: str
    tied: bool
    tag: str
    drop_rook: bool
    framed: bool  # admits d > 1


_INFO: dict[str, FamilyInfo] = {
    "cdn": FamilyInfo("C_d^n", False, PERMUTATION, False, True),
    "sdn": FamilyInfo("S_{d,n}", False, PERMUTATION, False, True),
    "pn": FamilyInfo("P_n", True, PERMUTATION, False, False),
    "pdn": FamilyInfo("P_{d,n}", True, PERMUTATION, False, True),
    "jn": FamilyInfo("J_n", False, PLANAR, False, False),
    "jdn": FamilyInfo("J_{d,n}", False, PLANAR, False, True),
    "brn": FamilyInfo("Br_n", False, MATCHING, False, False),
    "brdn": FamilyInfo("Br_{d,n}", False, MATCHING, False, True),
    "rn": FamilyInfo("R_n", False, MATCHING, False, False),
    "rdn": FamilyInfo("R_{d,n}", False, MATCHING, True, True),
    "rprimedn": FamilyInfo("R'_{d,n}", False, MATCHING, False, True),
    "tsn": FamilyInfo("tS_n", True, PERMUTATION, False, False),
    "tjn": FamilyInfo("tJ_n", True, PLANAR, False, False),
    "tbrn": FamilyInfo("tBr_n", True, MATCHING, False, False),
    "trn": FamilyInfo("tR_n", True, MATCHING, True, False),
    "trprimen": FamilyInfo("tR'_n", True, MATCHING, False, False),
}

FAMILY_NAMES = tuple(_INFO)


@dataclass(frozen=True)
class MonoidFamily:
    """A named diagram monoid at fixed parameters (d, n)."""

    name: str
    n: int
    d: int = 1

    def __post_init__(self):
        if self.name not in _INFO:
            raise ValueError(f"unknown family {self.name!r}")
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        if not _INFO[self.name].framed and self.d != 1:
            raise ValueError(f"family {self.name} has no framing parameter")

    @property
    def info(self) -> FamilyInfo:
        return _INFO[self.name]

    @property
    def tied(self) -> bool:
        return self.info.tied

    @property
    def tag(self) -> str:
        return self.info.tag

    @property
    def drop_rook(self) -> bool:
        return self.info.drop_rook

    def __str__(self):
        if self.info.framed:
            return f"{self.name}(d={self.d},n={self.n})"
        return f"{self.name}(n={self.n})"


def family(name: str, n: int, d: int = 1) -> MonoidFamily:
    return MonoidFamily(name.lower(), n, d)


def _sym_t(n):
    return [GenSymbol("t", i) for i in range(1, n)]


def _sym_s(n):
    return [GenSymbol("s", i) for i in range(1, n)]


def _sym_o(n):
    return [GenSymbol("o", i) for i in range(1, n + 1)]


def _sym_r(n):
    return [GenSymbol("r", i) for i in range(1, n + 1)]


def _sym_p(n):
    return [GenSymbol("p", i) for i in range(1, n + 1)]


def _sym_q(n):
    return [GenSymbol("q", i) for i in range(1, n + 1)]


def _sym_e_adj(n):
    return [GenSymbol("e", i, i + 1) for i in range(1, n)]


def _sym_e_all(n):
    return [GenSymbol("e", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def _sym_f(n):
    return [GenSymbol("f", i) for i in range(1, n)]


_GENSETS: dict[str, Callable[[int], list[GenSymbol]]] = {
    "cdn": lambda n: _sym_o(n),
    "sdn": lambda n: _sym_s(n) + _sym_o(n),
    "pn": lambda n: _sym_e_all(n),
    "pdn": lambda n: _sym_e_all(n) + _sym_o(n),
    "jn": lambda n: _sym_t(n),
    "jdn": lambda n: _sym_t(n) + _sym_o(n),
    "brn": lambda n: _sym_s(n) + _sym_t(n),
    "brdn": lambda n: _sym_s(n) + _sym_t(n) + _sym_o(n),
    "rn": lambda n: _sym_s(n) + _sym_r(n),
    "rdn": lambda n: _sym_s(n) + _sym_r(n) + _sym_o(n),
    "rprimedn": lambda n: _sym_s(n) + _sym_r(n) + _sym_o(n),
    "tsn": lambda n: _sym_s(n) + _sym_e_adj(n),
    "tjn": lambda n: _sym_t(n) + _sym_e_adj(n) + _sym_f(n),
    "tbrn": lambda n: _sym_s(n) + _sym_t(n) + _sym_e_adj(n) + _sym_f(n),
    "trn": lambda n: _sym_s(n) + _sym_p(n) + _sym_e_adj(n),
    "trprimen": lambda n: _sym_s(n) + _sym_r(n) + _sym_e_adj(n) + _sym_q(n),
}


def generating_symbols(fam: MonoidFamily) -> tuple[GenSymbol, ...]:
    return tuple(_GENSETS[fam.name](fam.n))


def generating_set(fam: MonoidFamily) -> tuple[BeadedDiagram, ...]:
    """The generator diagrams of the family, in declaration order."""
    return tuple(generator(sym, fam.n, fam.d, tied=fam.tied, tag=fam.tag)
                 for sym in generating_symbols(fam))


@lru_cache(maxsize=None)
def closure(fam: MonoidFamily, cap: int = 1_000_000) -> tuple[BeadedDiagram, ...]:
    """All elements of the family: breadth-first closure of the generators.

    Deterministic: the result is sorted by canonical encoding.  Raises
    :class:`CapExceeded` if more than ``cap`` elements appear.
    """
    gens = generating_set(fam)
    start = identity(fam.n, fam.d, tied=fam.tied, tag=fam.tag)
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y, _ = compose(x, g, drop_rook=fam.drop_rook)
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"closure of {fam} exceeded cap {cap}")
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return tuple(sorted(seen, key=BeadedDiagram.encode))


def predicted_cardinality(fam: MonoidFamily) -> int:
    """Exact element count of the family, by closed formula."""
    n, d = fam.n, fam.d
    name = fam.name
    if name == "cdn":
        return d ** n
    if name == "sdn":
        return d ** n * math.factorial(n)
    if name == "pn":
        return bell(n)
    if name == "pdn":
        return sum(stirling2(n, k) * d ** k for k in range(1, n + 1))
    if name == "jn":
        return catalan(n)
    if name == "jdn":
        return d ** n * catalan(n)
    if name == "brn":
        return odd_double_factorial(n)
    if name == "brdn":
        return d ** n * odd_double_factorial(n)
    if name == "rn":
        return sum(binomial(n, k) ** 2 * math.factorial(k) for k in range(n + 1))
    if name == "rdn":
        return sum(binomial(n, k) ** 2 * math.factorial(k) * d ** k
                   for k in range(n + 1))
    if name == "rprimedn":
        return sum(binomial(n, k) ** 2 * math.factorial(k) * d ** (2 * n - k)
                   for k in range(n + 1))
    if name == "tsn":
        return math.factorial(n) * bell(n)
    if name == "tjn":
        return fuss_catalan_41(n)
    if name == "tbrn":
        return odd_double_factorial(n) * bell(n)
    if name == "trn":
        return sum(binomial(n, k) ** 2 * math.factorial(k) * bell(k)
                   for k in range(n + 1))
    if name == "trprimen":
        return sum(binomial(n, k) ** 2 * math.factorial(k) * bell(2 * n - k)
                   for k in range(n + 1))
    raise ValueError(name)


# -- presentations ------------------------------------------------------------

Word = tuple[GenSymbol, ...]
Instance = tuple[Word, ...]  # two or more words asserted pairwise equal


@dataclass(frozen=True)
class RelationSchema:
    """One relation template; ``instances(d, n)`` yields tuples of equal words."""

    name: str
    display: str
    instances: Callable[[int, int], Iterable[Instance]]


@dataclass(frozen=True)
class Presentation:
    family: str
    generators: tuple[GenSymbol, ...]
    schemas: tuple[RelationSchema, ...]


@dataclass(frozen=True)
class SchemaResult:
    name: str
    display: str
    checked: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class RelationReport:
    family: MonoidFamily
    entries: tuple[SchemaResult, ...]

    @property
    def passed(self) -> bool:
        return all(not e.failures for e in self.entries)

    @property
    def checked(self) -> int:
        return sum(e.checked for e in self.entries)

    def failures(self) -> list[str]:
        out = []
        for e in self.entries:
            out.extend(f"{e.name}: {w}" for w in e.failures)
        return out


def T(i):
    return GenSymbol("t", i)


def S(i):
    return GenSymbol("s", i)


def O(i, k=1):
    return GenSymbol("o", i, 0, k)


def R(i):
    return GenSymbol("r", i)


def P(i):
    return GenSymbol("p", i)


def E(i, j=None):
    return GenSymbol("e", i, i + 1 if j is None else j)


def F(i):
    return GenSymbol("f", i)


def Q(i):
    return GenSymbol("q", i)


def _swap(i, j):
    """Image of strand j under the transposition (i, i+1)."""
    if j == i:
        return i + 1
    if j == i + 1:
        return i
    return j


def _schema(name, display, gen):
    return RelationSchema(name, display, gen)


def _coxeter():
    return (
        _schema("cross-involution", "s_i s_i = 1", lambda d, n: (
            ((S(i), S(i)), ()) for i in range(1, n))),
        _schema("cross-commute", "s_i s_j = s_j s_i, |i-j| > 1", lambda d, n: (
            ((S(i), S(j)), (S(j), S(i)))
            for i in range(1, n) for j in range(i + 2, n))),
        _schema("cross-braid", "s_i s_j s_i = s_j s_i s_j, |i-j| = 1", lambda d, n: (
            ((S(i), S(i + 1), S(i)), (S(i + 1), S(i), S(i + 1)))
            for i in range(1, n - 1))),
    )


def _beads():
    return (
        _schema("bead-order", "o_i^d = 1", lambda d, n: (
            ((O(i, d),), ()) for i in range(1, n + 1))),
        _schema("bead-commute", "o_i o_j = o_j o_i", lambda d, n: (
            ((O(i), O(j)), (O(j), O(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
    )


def _bead_cross():
    return (
        _schema("bead-cross", "o_j s_i = s_i o_{s_i(j)}", lambda d, n: (
            ((O(j), S(i)), (S(i), O(_swap(i, j))))
            for i in range(1, n) for j in range(1, n + 1))),
    )


def _tangles():
    return (
        _schema("tangle-idempotent", "t_i t_i = t_i", lambda d, n: (
            ((T(i), T(i)), (T(i),)) for i in range(1, n))),
        _schema("tangle-commute", "t_i t_j = t_j t_i, |i-j| > 1", lambda d, n: (
            ((T(i), T(j)), (T(j), T(i)))
            for i in range(1, n) for j in range(i + 2, n))),
        _schema("tangle-sandwich", "t_i t_j t_i = t_i, |i-j| = 1", lambda d, n: (
            ((T(i), T(j), T(i)), (T(i),))
            for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
    )


def _tangle_beads():
    return (
        _schema("bead-slide", "t_i o_i = t_i o_{i+1} and o_i t_i = o_{i+1} t_i",
                lambda d, n: (inst for i in range(1, n) for inst in (
                    ((T(i), O(i)), (T(i), O(i + 1))),
                    ((O(i), T(i)), (O(i + 1), T(i))),
                ))),
        _schema("bead-tangle-commute", "o_i t_j = t_j o_i, i != j, j+1", lambda d, n: (
            ((O(i), T(j)), (T(j), O(i)))
            for j in range(1, n) for i in range(1, n + 1) if i not in (j, j + 1))),
        _schema("tangle-loop-absorb", "t_i o_i^k t_i = t_i", lambda d, n: (
            ((T(i), O(i, k), T(i)), (T(i),))
            for i in range(1, n) for k in range(d))),
    )


def _brauer_mixed():
    return (
        _schema("cross-tangle-absorb", "t_i s_i = s_i t_i = t_i", lambda d, n: (
            ((T(i), S(i)), (S(i), T(i)), (T(i),)) for i in range(1, n))),
        _schema("cross-tangle-commute", "t_i s_j = s_j t_i, |i-j| > 1", lambda d, n: (
            inst for i in range(1, n) for j in range(1, n) if abs(i - j) > 1
            for inst in (((T(i), S(j)), (S(j), T(i))),))),
        _schema("cross-tangle-slide", "s_i t_j t_i = s_j t_i, |i-j| = 1", lambda d, n: (
            ((S(i), T(j), T(i)), (S(j), T(i)))
            for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
        _schema("tangle-cross-slide", "t_i t_j s_i = t_i s_j, |i-j| = 1", lambda d, n: (
            ((T(i), T(j), S(i)), (T(i), S(j)))
            for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
    )


def _partition_ties():
    def triples(d, n):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    yield ((E(i, j), E(i, k)), (E(i, j), E(j, k)), (E(i, k), E(j, k)))

    return (
        _schema("tie-idempotent", "e_{i,j} e_{i,j} = e_{i,j}", lambda d, n: (
            ((E(i, j), E(i, j)), (E(i, j),))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("tie-commute", "e_{i,j} e_{r,s} = e_{r,s} e_{i,j}", lambda d, n: (
            ((E(i, j), E(r, s)), (E(r, s), E(i, j)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1)
            for r in range(1, n + 1) for s in range(r + 1, n + 1)
            if (i, j) < (r, s))),
        _schema("tie-triple", "e_{i,j} e_{i,k} = e_{i,j} e_{j,k} = e_{i,k} e_{j,k}",
                triples),
    )


def _partition_beads():
    return (
        _schema("bead-tie-commute", "o_k e_{i,j} = e_{i,j} o_k", lambda d, n: (
            ((O(k), E(i, j)), (E(i, j), O(k)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1)
            for k in range(1, n + 1))),
        _schema("bead-tie-hop", "o_i e_{i,j} = o_j e_{i,j}", lambda d, n: (
            ((O(i), E(i, j)), (O(j), E(i, j)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
    )


def _rook_r():
    return (
        _schema("rook-idempotent", "r_i r_i = r_i", lambda d, n: (
            ((R(i), R(i)), (R(i),)) for i in range(1, n + 1))),
        _schema("rook-commute", "r_i r_j = r_j r_i", lambda d, n: (
            ((R(i), R(j)), (R(j), R(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("rook-cross-commute", "r_j s_i = s_i r_j, j != i, i+1", lambda d, n: (
            ((R(j), S(i)), (S(i), R(j)))
            for i in range(1, n) for j in range(1, n + 1) if j not in (i, i + 1))),
        _schema("rook-cross-shift", "r_i s_i = s_i r_{i+1} and r_{i+1} s_i = s_i r_i",
                lambda d, n: (inst for i in range(1, n) for inst in (
                    ((R(i), S(i)), (S(i), R(i + 1))),
                    ((R(i + 1), S(i)), (S(i), R(i))),
                ))),
        _schema("rook-sandwich", "r_i s_i r_i = r_i r_{i+1}", lambda d, n: (
            ((R(i), S(i), R(i)), (R(i), R(i + 1))) for i in range(1, n))),
    )


def _rook_p():
    return (
        _schema("product-idempotent", "p_i p_i = p_i", lambda d, n: (
            ((P(i), P(i)), (P(i),)) for i in range(1, n + 1))),
        _schema("product-commute", "p_i p_j = p_j p_i", lambda d, n: (
            ((P(i), P(j)), (P(j), P(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("product-cross-commute", "p_i s_j = s_j p_i, j > i", lambda d, n: (
            ((P(i), S(j)), (S(j), P(i)))
            for i in range(1, n + 1) for j in range(i + 1, n))),
        _schema("product-cross-absorb", "p_i s_j = p_i, j < i", lambda d, n: (
            ((P(i), S(j)), (P(i),))
            for i in range(1, n + 1) for j in range(1, min(i, n)))),
        _schema("product-step", "p_i s_i p_i = p_{i+1}", lambda d, n: (
            ((P(i), S(i), P(i)), (P(i + 1),)) for i in range(1, n))),
    )


def _rook_beads_first():
    return (
        _schema("bead-rook-commute", "r_i o_j = o_j r_i, i != j", lambda d, n: (
            ((R(i), O(j)), (O(j), R(i)))
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j)),
        _schema("bead-rook-absorb", "r_i o_i = o_i r_i = r_i", lambda d, n: (
            ((R(i), O(i)), (O(i), R(i)), (R(i),)) for i in range(1, n + 1))),
        _schema("bead-product-commute", "p_i o_j = o_j p_i, j > i", lambda d, n: (
            ((P(i), O(j)), (O(j), P(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("bead-product-absorb", "p_i o_j = o_j p_i = p_i, j <= i", lambda d, n: (
            ((P(i), O(j)), (O(j), P(i)), (P(i),))
            for i in range(1, n + 1) for j in range(1, i + 1))),
    )


def _rook_beads_prime():
    def sandwich(d, n):
        for i in range(1, n + 1):
            for k in range(d):
                yield ((R(i), O(i, k), R(i)), (R(i),))

    def product_sandwich(d, n):
        # p_i o_1^{m_1} .. o_i^{m_i} p_j = p_j o^m p_i = p_j for i <= j
        def exponent_tuples(i):
            if i == 0:
                yield ()
                return
            for rest in exponent_tuples(i - 1):
                for m in range(d):
                    yield rest + (m,)

        for i in range(1, n + 1):
            for j in range(i, n + 1):
                for ms in exponent_tuples(i):
                    beads = tuple(O(a + 1, m) for a, m in enumerate(ms) if m)
                    yield ((P(i),) + beads + (P(j),),
                           (P(j),) + beads + (P(i),),
                           (P(j),))

    return (
        _schema("bead-rook-commute", "r_i o_j = o_j r_i, i != j", lambda d, n: (
            ((R(i), O(j)), (O(j), R(i)))
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j)),
        _schema("rook-loop-absorb", "r_i o_i^k r_i = r_i", sandwich),
        _schema("bead-product-commute", "p_i o_j = o_j p_i, j > i", lambda d, n: (
            ((P(i), O(j)), (O(j), P(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("product-bead-sandwich",
                "p_i o_1^{m_1}..o_i^{m_i} p_j = p_j o^m p_i = p_j, i <= j",
                product_sandwich),
    )


def _tie_cross():
    return (
        _schema("tie-idempotent", "e_i e_i = e_i", lambda d, n: (
            ((E(i), E(i)), (E(i),)) for i in range(1, n))),
        _schema("tie-commute", "e_i e_j = e_j e_i", lambda d, n: (
            ((E(i), E(j)), (E(j), E(i)))
            for i in range(1, n) for j in range(i + 1, n))),
        _schema("tie-cross-commute", "s_i e_j = e_j s_i, |i-j| != 1", lambda d, n: (
            ((S(i), E(j)), (E(j), S(i)))
            for i in range(1, n) for j in range(1, n) if abs(i - j) != 1)),
        _schema("tie-cross-slide", "e_i s_j s_i = s_j s_i e_j, |i-j| = 1", lambda d, n: (
            ((E(i), S(j), S(i)), (S(j), S(i), E(j)))
            for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
        _schema("tie-cross-triple", "e_i e_j s_i = e_j s_i e_j = s_i e_i e_j, |i-j| = 1",
                lambda d, n: (
                    ((E(i), E(j), S(i)), (E(j), S(i), E(j)), (S(i), E(i), E(j)))
                    for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
    )


def _tied_jones():
    return (
        _schema("tiedtangle-idempotent", "f_i f_i = f_i", lambda d, n: (
            ((F(i), F(i)), (F(i),)) for i in range(1, n))),
        _schema("tiedtangle-commute", "f_i f_j = f_j f_i, |i-j| > 1", lambda d, n: (
            ((F(i), F(j)), (F(j), F(i)))
            for i in range(1, n) for j in range(i + 2, n))),
        _schema("tie-tangle-absorb", "e_i t_i = t_i e_i = t_i", lambda d, n: (
            ((E(i), T(i)), (T(i), E(i)), (T(i),)) for i in range(1, n))),
        _schema("tiedtangle-tie-absorb", "f_i e_i = f_i", lambda d, n: (
            ((F(i), E(i)), (F(i),)) for i in range(1, n))),
        _schema("tie-tiedtangle-commute", "e_i f_j = f_j e_i", lambda d, n: (
            ((E(i), F(j)), (F(j), E(i)))
            for i in range(1, n) for j in range(1, n))),
        _schema("tangle-tiedtangle-absorb", "t_i f_i = f_i t_i = t_i", lambda d, n: (
            ((T(i), F(i)), (F(i), T(i)), (T(i),)) for i in range(1, n))),
        _schema("tangle-tie-commute", "t_i e_j = e_j t_i, |i-j| > 1", lambda d, n: (
            ((T(i), E(j)), (E(j), T(i)))
            for i in range(1, n) for j in range(1, n) if abs(i - j) > 1)),
        _schema("tangle-tiedtangle-commute", "t_i f_j = f_j t_i, |i-j| > 1", lambda d, n: (
            ((T(i), F(j)), (F(j), T(i)))
            for i in range(1, n) for j in range(1, n) if abs(i - j) > 1)),
        _schema("tie-sandwich", "t_i e_j t_i = t_i, |i-j| = 1", lambda d, n: (
            ((T(i), E(j), T(i)), (T(i),))
            for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
        _schema("tiedtangle-hop", "f_i e_j = e_j t_i e_j, |i-j| = 1", lambda d, n: (
            ((F(i), E(j)), (E(j), T(i), E(j)))
            for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
    )


def _tied_brauer():
    return (
        _schema("tiedtangle-cross-commute", "f_i s_j = s_j f_i, |i-j| > 1", lambda d, n: (
            ((F(i), S(j)), (S(j), F(i)))
            for i in range(1, n) for j in range(1, n) if abs(i - j) > 1)),
        _schema("cross-tiedtangle-absorb", "f_i s_i = s_i f_i = f_i", lambda d, n: (
            ((F(i), S(i)), (S(i), F(i)), (F(i),)) for i in range(1, n))),
        _schema("tiedtangle-conjugate", "s_i f_j s_i = s_j f_i s_j, |i-j| = 1",
                lambda d, n: (
                    ((S(i), F(j), S(i)), (S(j), F(i), S(j)))
                    for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1)),
    )


def _tied_rook_first():
    return (
        _schema("tie-product-absorb", "e_i p_j = p_j e_i = p_j, i <= j", lambda d, n: (
            ((E(i), P(j)), (P(j), E(i)), (P(j),))
            for i in range(1, n) for j in range(i, n + 1))),
        _schema("tie-product-commute", "e_i p_j = p_j e_i, i > j", lambda d, n: (
            ((E(i), P(j)), (P(j), E(i)))
            for i in range(1, n) for j in range(1, i))),
    )


def _tied_rook_prime():
    return (
        _schema("rook-idempotent", "r_i r_i = r_i", lambda d, n: (
            ((R(i), R(i)), (R(i),)) for i in range(1, n + 1))),
        _schema("rook-commute", "r_i r_j = r_j r_i", lambda d, n: (
            ((R(i), R(j)), (R(j), R(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("cross-rook-slide", "s_i r_j = r_{s_i(j)} s_i", lambda d, n: (
            ((S(i), R(j)), (R(_swap(i, j)), S(i)))
            for i in range(1, n) for j in range(1, n + 1))),
        _schema("rook-sandwich", "r_i s_i r_i = r_i r_{i+1}", lambda d, n: (
            ((R(i), S(i), R(i)), (R(i), R(i + 1))) for i in range(1, n))),
        _schema("tiedrook-idempotent", "q_i q_i = q_i", lambda d, n: (
            ((Q(i), Q(i)), (Q(i),)) for i in range(1, n + 1))),
        _schema("tiedrook-commute", "q_i q_j = q_j q_i", lambda d, n: (
            ((Q(i), Q(j)), (Q(j), Q(i)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1))),
        _schema("tiedrook-tie-commute", "q_i e_j = e_j q_i", lambda d, n: (
            ((Q(i), E(j)), (E(j), Q(i)))
            for i in range(1, n + 1) for j in range(1, n))),
        _schema("cross-tiedrook-slide", "s_i q_j = q_{s_i(j)} s_i", lambda d, n: (
            ((S(i), Q(j)), (Q(_swap(i, j)), S(i)))
            for i in range(1, n) for j in range(1, n + 1))),
        _schema("tie-rook-sandwich", "e_i r_j e_i = e_i q_j, j = i, i+1", lambda d, n: (
            ((E(i), R(j), E(i)), (E(i), Q(j)))
            for i in range(1, n) for j in (i, i + 1))),
        _schema("tie-rook-commute", "e_i r_j = r_j e_i, j != i, i+1", lambda d, n: (
            ((E(i), R(j)), (R(j), E(i)))
            for i in range(1, n) for j in range(1, n + 1) if j not in (i, i + 1))),
        _schema("rook-tiedrook-commute", "r_i q_j = q_j r_i", lambda d, n: (
            ((R(i), Q(j)), (Q(j), R(i)))
            for i in range(1, n + 1) for j in range(1, n + 1))),
        _schema("tiedrook-absorb", "q_i r_i = r_i", lambda d, n: (
            ((Q(i), R(i)), (R(i),)) for i in range(1, n + 1))),
        _schema("rook-tie-collapse", "r_j e_i r_j = r_j, j = i, i+1", lambda d, n: (
            ((R(j), E(i), R(j)), (R(j),))
            for i in range(1, n) for j in (i, i + 1))),
        _schema("rook-tie-shift", "r_i e_i r_{i+1} = s_i q_i r_{i+1}", lambda d, n: (
            ((R(i), E(i), R(i + 1)), (S(i), Q(i), R(i + 1)))
            for i in range(1, n))),
    )


_PRESENTATIONS: dict[str, tuple] = {
    "cdn": _beads(),
    "sdn": _beads() + _coxeter() + _bead_cross(),
    "pn": _partition_ties(),
    "pdn": _partition_ties() + _beads() + _partition_beads(),
    "jn": _tangles(),
    "jdn": _tangles() + _beads() + _tangle_beads(),
    "brn": _tangles() + _coxeter() + _brauer_mixed(),
    "brdn": _tangles() + _coxeter() + _brauer_mixed() + _beads() + _tangle_beads()
            + _bead_cross(),
    "rn": _coxeter() + _rook_r() + _rook_p(),
    "rdn": _coxeter() + _rook_r() + _rook_p() + _beads() + _bead_cross()
           + _rook_beads_first(),
    "rprimedn": _coxeter() + _rook_r() + _rook_p() + _beads() + _bead_cross()
                + _rook_beads_prime(),
    "tsn": _coxeter() + _tie_cross(),
    "tjn": _tangles() + _tie_cross()[:2] + _tied_jones(),
    "tbrn": _tangles() + _coxeter() + _brauer_mixed() + _tie_cross() + _tied_jones()
            + _tied_brauer(),
    # ties here shed at free points; only the literal defining relations are
    # declared (adding the crossing-tie braid laws would let a broken arc
    # absorb every tie, collapsing the k!*Bell(k) count)
    "trn": _coxeter() + _rook_p() + _tie_cross()[:2] + _tied_rook_first(),
    "trprimen": _coxeter() + _tie_cross() + _tied_rook_prime(),
}


def presentation(fam: MonoidFamily) -> Presentation:
    return Presentation(fam.name, generating_symbols(fam), _PRESENTATIONS[fam.name])


def check_relations(fam: MonoidFamily,
                    extra_schemas: Iterable[RelationSchema] = ()) -> RelationReport:
    """Evaluate every relation instance of the family's presentation.

    Both sides of every instance are evaluated as diagrams (loop records are
    discarded at monoid level) and compared canonically.  Failing instances
    are reported with witness words; extra schemas can be injected, e.g. as
    negative controls.
    """
    pres = presentation(fam)
    entries = []
    for schema in tuple(pres.schemas) + tuple(extra_schemas):
        checked = 0
        failures = []
        for words in schema.instances(fam.d, fam.n):
            checked += 1
            base = evaluate_word(words[0], fam)[0]
            for other_word in words[1:]:
                other = evaluate_word(other_word, fam)[0]
                if other != base:
                    failures.append(
                        f"{render_word(words[0]) or '1'} -> {base.encode()}"
                        f"  !=  {render_word(other_word) or '1'} -> {other.encode()}")
        entries.append(SchemaResult(schema.name, schema.display, checked,
                                    tuple(failures)))
    return RelationReport(fam, tuple(entries))


def default_grid() -> list[MonoidFamily]:
    """The standard desk-scale test grid, largest jobs last."""
    grid: list[MonoidFamily] = []
    for n in range(1, 6):
        grid.append(family("pn", n))
        grid.append(family("jn", n))
        for d in (1, 2, 3):
            grid.append(family("cdn", n, d))
            grid.append(family("sdn", n, d))
            grid.append(family("pdn", n, d))
            grid.append(family("jdn", n, d))
    for n in range(1, 5):
        grid.append(family("brn", n))
        grid.append(family("rn", n))
        for d in (1, 2):
            grid.append(family("brdn", n, d))
            grid.append(family("rdn", n, d))
            grid.append(family("rprimedn", n, d))
    for n in range(1, 5):
        for name in ("tsn", "tjn", "tbrn", "trn", "trprimen"):
            grid.append(family(name, n))
    return grid
