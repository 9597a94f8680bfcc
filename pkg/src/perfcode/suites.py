"""Verification suites run over a built-in corpus of small groups.

Each suite checks one equivalence or implication between the decision
routes in :mod:`perfcode.perfectcode`, the graph-level oracle and the
PSL(2,q) classifier, and records every counterexample it meets.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .groupspec import GroupSpec, parse_generator_list
from .oracle import (
    DEFAULT_INDEX_BOUND,
    DEFAULT_SMALL_GROUP,
    ConnectionSet,
    find_admissible_connection_set,
    verify_witness,
)
from .perfectcode import (
    ABELIAN_SYLOW2,
    ELEMENTARY_ABELIAN_SYLOW2,
    NORMAL_SYLOW2,
    QNORMAL,
    PerfectCodeReport,
    _equivalent_hypothesis,
    _intersection_index_odd,
    applicable_shortcuts,
    basic_criterion,
    corollary_pair,
    double_coset,
    equivalent_criterion,
    every_subgroup_is_perfect_code,
    hxz_criterion,
    is_basic_witness,
    is_perfect_code,
    reduce_ngq,
    reduce_to_sylow2,
    two_element_witness,
)
from .permgroup import (
    DEFAULT_LATTICE_BOUND,
    PermutationGroup,
    Subgroup,
    all_subgroups,
    conjugate_subgroup,
    cyclic_subgroups,
    format_cycles,
    generated_subgroup,
    is_cyclic,
    is_dihedral,
    is_normal,
    is_power_of,
    sylow,
    two_part,
)
from .psl2 import (
    DEFAULT_SEED,
    classify_vs_checker,
    psl2,
    psl_order,
    sample_two_generated,
    theorem_psl_classify,
)

log = logging.getLogger(__name__)

QUATERNION_8 = "gens:8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"

CORPUS = (
    ["sym:3", "sym:4", "sym:5", "alt:4", "alt:5"]
    + [f"cyclic:{n}" for n in range(2, 17)]
    + [f"dihedral:{n}" for n in range(2, 9)]
    + [QUATERNION_8]
    + [f"psl2:{q}" for q in (4, 5, 7, 8, 9, 11, 13, 17)]
)

# The full lattice of S6 is out of reach; only the worked example pairs are used.
S6_EXAMPLE = {
    "G": "sym:6",
    "H": "(1 2)(3 5);(3 4 5)",
    "Q": "(1 2)(3 5)",
    "P": "(1 2);(3 5);(3 4 5 6)",
}

DEFAULT_MAX_ORDER = 120
ORACLE_MAX_ORDER = 48
PSL_ORDER_QS = (4, 5, 7, 8, 9, 11, 13, 16, 17)
PSL_DIHEDRAL_QS = (7, 9, 17)
PSL_ALL_PERFECT_QS = (4, 5, 8, 11, 13)
PSL_SAMPLE_COUNT = 200


@dataclass
class SuiteResult:
    name: str
    tested: list[tuple[str, str]] = field(default_factory=list)
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, group: str, subgroup: str, what: str, **detail) -> bool:
        self.checks += 1
        if not condition:
            self.failures.append({"group": group, "subgroup": subgroup, "check": what, **detail})
        return condition

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "pairs_tested": len(self.tested),
            "checks": self.checks,
            "failures": self.failures,
            "ok": self.ok,
        }


def subgroup_label(H: PermutationGroup) -> str:
    if H.order == 1:
        return "()"
    return ";".join(format_cycles(g) for g in H.generators)


@functools.lru_cache(maxsize=None)
def corpus_group(token: str) -> PermutationGroup:
    return GroupSpec.parse(token).build()


@functools.lru_cache(maxsize=None)
def corpus_lattice(token: str) -> tuple[Subgroup, ...]:
    return tuple(all_subgroups(corpus_group(token)))


def lattice_corpus(max_order: int) -> Iterator[tuple[str, PermutationGroup]]:
    """Corpus groups whose full subgroup lattice fits the bounds, in corpus order."""
    for token in CORPUS:
        if token.startswith("psl2:"):
            q = int(token.split(":")[1])
            if psl_order(q) > max_order:
                continue
        G = corpus_group(token)
        if G.order <= min(max_order, DEFAULT_LATTICE_BOUND):
            yield token, G


def _pairs(max_order: int) -> Iterator[tuple[str, PermutationGroup, Subgroup]]:
    for token, G in lattice_corpus(max_order):
        for H in corpus_lattice(token):
            yield token, G, H


@functools.lru_cache(maxsize=None)
def _basic_status(token: str, key: frozenset) -> bool:
    G = corpus_group(token)
    H = PermutationGroup(G.degree, key)
    return basic_criterion(G, H).is_perfect_code


def _status(token: str, H: PermutationGroup) -> bool:
    return _basic_status(token, H.element_set)


def check_witnesses(result: SuiteResult, token: str, G, H, report: PerfectCodeReport) -> None:
    """Both double-coset conditions and the 2-element refinement for a negative verdict."""
    if report.is_perfect_code:
        return
    label = subgroup_label(H)
    x = report.witness
    result.check(is_basic_witness(G, H, x), token, label, "witness-basic",
                 path=report.path.value, witness=format_cycles(x))
    y = two_element_witness(G, H)
    ok = (y is not None and y not in H and is_power_of(y.order(), 2) and y * y in H
          and _intersection_index_odd(H, y) and not double_coset(H, y).has_involution()
          and is_basic_witness(G, H, y))
    result.check(ok, token, label, "witness-two-element",
                 witness=None if y is None else format_cycles(y))


# -- suites -------------------------------------------------------------------

def suite_example(**_) -> SuiteResult:
    """The worked S6 example: Q and H fail in S6, Q succeeds in P."""
    r = SuiteResult("example")
    G = corpus_group(S6_EXAMPLE["G"])
    H, Q, P = (generated_subgroup(G, parse_generator_list(S6_EXAMPLE[k], 6)) for k in "HQP")
    tok = S6_EXAMPLE["G"]
    for name, sub in (("H", H), ("Q", Q)):
        r.tested.append((tok, subgroup_label(sub)))
        fast, basic = is_perfect_code(G, sub), basic_criterion(G, sub)
        r.check(not fast.is_perfect_code, tok, name, "fast-path-negative")
        r.check(not basic.is_perfect_code, tok, name, "basic-negative")
        check_witnesses(r, tok, G, sub, fast)
        check_witnesses(r, tok, G, sub, basic)
    r.check(not equivalent_criterion(G, Q), tok, "Q", "equivalent-negative")
    r.check(sylow(H, 2).order == 2 and Q.order == 2 and P.order == 16, tok, "H", "sylow-orders")
    ptok = "P16"
    r.tested.append((ptok, subgroup_label(Q)))
    r.check(basic_criterion(P, Q).is_perfect_code, ptok, "Q", "basic-positive-in-P")
    S = find_admissible_connection_set(P, Q)
    r.check(S is not None and verify_witness(P, Q, S), ptok, "Q", "oracle-positive-in-P")
    return r


def suite_sl2(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    """Every Sylow 2-subgroup / some Sylow 2-subgroup / H itself: one verdict."""
    r = SuiteResult("sl2")
    for token, G, H in _pairs(max_order):
        label = subgroup_label(H)
        r.tested.append((token, label))
        pc = _status(token, H)
        Q = reduce_to_sylow2(G, H)
        conjugates = {conjugate_subgroup(H, Q, h) for h in H.elements}
        statuses = [_status(token, Qc) for Qc in conjugates]
        r.check(all(statuses) == any(statuses) == pc, token, label, "sl2-three-way",
                every=all(statuses), some=any(statuses), h=pc)
        fast = is_perfect_code(G, H)
        r.check(fast.is_perfect_code == pc, token, label, "fast-vs-basic")
        check_witnesses(r, token, G, H, fast)
        check_witnesses(r, token, G, H, basic_criterion(G, H))
    return r


def suite_ngq(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    r = SuiteResult("ngq")
    for token, G, H in _pairs(max_order):
        label = subgroup_label(H)
        r.tested.append((token, label))
        Q, P = reduce_ngq(G, H)
        r.check(is_normal(P, Q), token, label, "q-normal-in-p")
        via_p = basic_criterion(P, Q).is_perfect_code
        r.check(is_perfect_code(G, H).is_perfect_code == via_p == _status(token, H),
                token, label, "ngq-reduction")
    return r


def suite_criteria(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    """The normal-subgroup test and the normalizer test agree with the double-coset scan."""
    r = SuiteResult("criteria")
    for token, G, H in _pairs(max_order):
        label = subgroup_label(H)
        r.tested.append((token, label))
        pc = _status(token, H)
        if is_normal(G, H):
            r.check(hxz_criterion(G, H) == pc, token, label, "hxz-vs-basic")
        if _equivalent_hypothesis(G, H):
            r.check(equivalent_criterion(G, H) == pc, token, label, "equivalent-vs-basic")
    return r


def suite_sub(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    """A perfect code of G stays a perfect code of every intermediate subgroup."""
    r = SuiteResult("sub")
    for token, G in lattice_corpus(max_order):
        lattice = corpus_lattice(token)
        for H in lattice:
            if not _status(token, H):
                continue
            label = subgroup_label(H)
            r.tested.append((token, label))
            for K in lattice:
                if K.order > H.order and K.order % H.order == 0 and H.element_set <= K.element_set:
                    r.check(basic_criterion(K, H).is_perfect_code, token, label, "sub-downward",
                            intermediate=subgroup_label(K))
    return r


def suite_conjugate(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    r = SuiteResult("conjugate")
    for token, G, H in _pairs(max_order):
        label = subgroup_label(H)
        r.tested.append((token, label))
        pc = _status(token, H)
        for g in G.elements:
            Hg = conjugate_subgroup(G, H, g)
            if Hg.element_set != H.element_set:
                r.check(_status(token, Hg) == pc, token, label, "conjugate-invariance",
                        conjugator=format_cycles(g))
    return r


def suite_ns(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    r = SuiteResult("ns")
    for token, G, H in _pairs(max_order):
        label = subgroup_label(H)
        r.tested.append((token, label))
        Q = reduce_to_sylow2(G, H)
        if basic_criterion(G, Q).is_perfect_code:
            r.check(basic_criterion(G, H).is_perfect_code, token, label, "ns-lift")
    return r


def suite_ele(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    """Elementary abelian Sylow 2-subgroup iff every subgroup is a perfect code."""
    r = SuiteResult("ele")
    for token, G in lattice_corpus(max_order):
        r.tested.append((token, "*"))
        sweep = all(_status(token, H) for H in corpus_lattice(token))
        r.check(every_subgroup_is_perfect_code(G) == sweep, token, "*", "ele-iff", sweep=sweep)
        P = sylow(G, 2)
        z = next((e for e in P.elements if e.order() == 4), None)
        if z is not None:
            Z = generated_subgroup(G, [z * z])
            r.check(not basic_criterion(G, Z).is_perfect_code, token, subgroup_label(Z),
                    "order-4-square-fails", z=format_cycles(z))
    return r


def suite_corollaries(max_order: int = DEFAULT_MAX_ORDER, **_) -> SuiteResult:
    r = SuiteResult("corollaries")
    for token, G, H in _pairs(max_order):
        label = subgroup_label(H)
        labels = applicable_shortcuts(G, H)
        if not labels:
            continue
        r.tested.append((token, label))
        pc = is_perfect_code(G, H).is_perfect_code
        if labels & {QNORMAL, NORMAL_SYLOW2, ABELIAN_SYLOW2}:
            Q, P0 = corollary_pair(G, H)
            r.check(pc == basic_criterion(P0, Q).is_perfect_code, token, label,
                    "corollary-pair", labels=sorted(labels))
        if ELEMENTARY_ABELIAN_SYLOW2 in labels:
            r.check(pc, token, label, "elementary-abelian-implies-perfect")
    return r


def suite_oracle_equivalence(max_order: int = ORACLE_MAX_ORDER,
                             oracle_bound: int = DEFAULT_INDEX_BOUND, **_) -> SuiteResult:
    """Exhaustive connection-set search against the double-coset scan."""
    r = SuiteResult("oracle-equivalence")
    for token, G, H in _pairs(max_order):
        if G.order // H.order > oracle_bound and G.order > DEFAULT_SMALL_GROUP:
            continue
        label = subgroup_label(H)
        r.tested.append((token, label))
        S = find_admissible_connection_set(G, H, index_bound=oracle_bound)
        r.check((S is not None) == _status(token, H), token, label, "oracle-vs-basic",
                oracle=S is not None)
        if S is None:
            continue
        r.check(len(S) == G.order // H.order - 1, token, label, "oracle-size")
        r.check(verify_witness(G, H, S), token, label, "oracle-witness")
        for g in G.elements:
            gi = g.inverse()
            Sg = ConnectionSet(G, (gi * s * g for s in S.elements))
            r.check(verify_witness(G, conjugate_subgroup(G, H, g), Sg), token, label,
                    "oracle-conjugation-transport", conjugator=format_cycles(g))
    return r


def _point_stabilizer(G: PermutationGroup, point: int) -> Subgroup:
    return Subgroup(G, [g for g in G.elements if g(point) == point])


def find_s4_in_psl27(G: PermutationGroup) -> Subgroup:
    """First ⟨a, b⟩ of order 24 with a of order 4 and b of order 3, in canonical order."""
    fours = [e for e in G.elements if e.order() == 4]
    threes = [e for e in G.elements if e.order() == 3]
    for a in fours:
        for b in threes:
            K = generated_subgroup(G, [a, b])
            if K.order == 24:
                return K
    raise LookupError("no subgroup of order 24 found")


def suite_psl(seed: int = DEFAULT_SEED, sample_count: int = PSL_SAMPLE_COUNT, **_) -> SuiteResult:
    r = SuiteResult("psl")
    for q in PSL_ORDER_QS:
        Gq = psl2(q)
        r.tested.append((f"psl2:{q}", "*"))
        r.check(Gq.order == psl_order(q), f"psl2:{q}", "*", "order-formula", order=Gq.order)
    for q in PSL_DIHEDRAL_QS:
        P = sylow(psl2(q).group, 2)
        r.check(is_dihedral(P) and P.order == two_part(psl_order(q)), f"psl2:{q}", "*",
                "sylow2-dihedral", sylow_order=P.order)
    for q in PSL_ALL_PERFECT_QS:
        r.check(every_subgroup_is_perfect_code(psl2(q).group), f"psl2:{q}", "*",
                "every-subgroup-perfect")

    def sweep(q: int, subgroups) -> None:
        Gq = psl2(q)
        for H in subgroups:
            label = subgroup_label(H)
            r.tested.append((f"psl2:{q}", label))
            case, _ = theorem_psl_classify(Gq, H)
            r.check(classify_vs_checker(Gq, H), f"psl2:{q}", label, "classify-vs-checker",
                    case=case.value)

    for q in (7, 9):
        sweep(q, cyclic_subgroups(psl2(q).group))
    G17 = psl2(17).group
    sweep(17, sample_two_generated(G17, sample_count, seed))

    G7 = psl2(7).group
    for K in (_point_stabilizer(G7, 8), find_s4_in_psl27(G7)):
        r.tested.append(("psl2:7", subgroup_label(K)))
        r.check(is_perfect_code(G7, K).is_perfect_code, "psl2:7", subgroup_label(K),
                "maximal-subgroup-perfect", order=K.order)
    for q in (9, 17):
        G = psl2(q).group
        K = _point_stabilizer(G, q + 1)
        r.check(is_perfect_code(G, K).is_perfect_code, f"psl2:{q}", subgroup_label(K),
                "maximal-subgroup-perfect", order=K.order)
    return r


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "example": suite_example,
    "sl2": suite_sl2,
    "ngq": suite_ngq,
    "criteria": suite_criteria,
    "sub": suite_sub,
    "conjugate": suite_conjugate,
    "ns": suite_ns,
    "ele": suite_ele,
    "corollaries": suite_corollaries,
    "oracle-equivalence": suite_oracle_equivalence,
    "psl": suite_psl,
}


def run_suite(name: str, **options) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    options = {k: v for k, v in options.items() if v is not None}
    log.info("running suite %s with %s", name, options)
    return SUITES[name](**options)
