import pytest

from perfcode.errors import HypothesisError
from perfcode.perfectcode import (
    ABELIAN_SYLOW2,
    ELEMENTARY_ABELIAN_SYLOW2,
    NORMAL_SYLOW2,
    Path,
    PerfectCodeReport,
    applicable_shortcuts,
    basic_criterion,
    double_coset_decomposition,
    equivalent_criterion,
    every_subgroup_is_perfect_code,
    hxz_criterion,
    is_basic_witness,
    is_perfect_code,
    odd_shortcut,
    reduce_ngq,
    reduce_to_sylow2,
    two_element_witness,
)
from perfcode.permgroup import (
    all_subgroups,
    conjugate_subgroup,
    is_normal,
    normalizer,
    parse_cycles,
    trivial_subgroup,
)

from conftest import group, sub, t_closure, t_from_cycles, t_mul, t_perfect_code_by_definition


def P(s, n=6):
    return parse_cycles(s, n)


class TestDoubleCosets:
    def test_whole_group(self):
        S4 = group("sym:4")
        (D,) = double_coset_decomposition(S4, S4)
        assert D.size == 24 and D.left_coset_count == 1

    def test_s3_transposition(self):
        S3 = group("sym:3")
        H = sub(S3, "(1 2)")
        sizes = sorted(D.size for D in double_coset_decomposition(S3, H))
        # oracle: H·(1 2 3)·H by brute force
        h = [tuple(range(3)), t_from_cycles([(1, 2)], 3)]
        x = t_from_cycles([(1, 2, 3)], 3)
        big = {t_mul(a, t_mul(x, b)) for a in h for b in h}
        assert sizes == [2, len(big)] == [2, 4]

    def test_partition_of_s6(self, paper_example):
        G, H = paper_example["G"], paper_example["H"]
        ds = double_coset_decomposition(G, H)
        assert sum(D.size for D in ds) == 720
        assert len({e for D in ds for e in D.elements}) == 720
        for D in ds:
            assert D.representative == D.elements[0]
            assert D.size == D.left_coset_count * H.order


class TestBasicCriterion:
    def test_paper_example(self, paper_example):
        G, H, Q, P16 = (paper_example[k] for k in "GHQP")
        assert not basic_criterion(G, Q).is_perfect_code
        assert not basic_criterion(G, H).is_perfect_code
        assert basic_criterion(P16, Q).is_perfect_code

    def test_odd_index(self):
        S3 = group("sym:3")
        assert basic_criterion(S3, sub(S3, "(1 2)")).is_perfect_code

    def test_witness_conditions(self, paper_example):
        G, Q = paper_example["G"], paper_example["Q"]
        r = basic_criterion(G, Q)
        assert r.path is Path.BASIC_CRITERION
        assert r.witness not in Q
        assert is_basic_witness(G, Q, r.witness)

    def test_whole_group_is_perfect(self):
        S4 = group("sym:4")
        assert basic_criterion(S4, S4).is_perfect_code

    @pytest.mark.parametrize("token", ["sym:3", "cyclic:4", "cyclic:8", "dihedral:4", "alt:4",
                                       "gens:8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"])
    def test_agrees_with_definition(self, token):
        G = group(token)
        n = G.degree
        Gt = {tuple(i - 1 for i in g.images) for g in G}
        for H in all_subgroups(G):
            Ht = {tuple(i - 1 for i in h.images) for h in H}
            assert basic_criterion(G, H).is_perfect_code == t_perfect_code_by_definition(Gt, Ht, n)


class TestTwoElementWitness:
    def test_paper_q(self, paper_example):
        G, Q = paper_example["G"], paper_example["Q"]
        x = two_element_witness(G, Q)
        assert x is not None and x not in Q
        assert x.order() in (2, 4, 8, 16)
        assert x * x in Q
        assert is_basic_witness(G, Q, x)

    def test_paper_witness_is_valid(self, paper_example):
        G, Q = paper_example["G"], paper_example["Q"]
        assert is_basic_witness(G, Q, P("(1 3 2 5)"))

    def test_none_when_perfect(self):
        S4 = group("sym:4")
        assert two_element_witness(S4, S4) is None


class TestHxz:
    def test_z4(self):
        Z4 = group("cyclic:4")
        assert not hxz_criterion(Z4, sub(Z4, "(1 3)(2 4)"))

    def test_whole_group(self):
        S4 = group("sym:4")
        assert hxz_criterion(S4, S4)

    def test_center_of_d8(self):
        D8 = group("gens:4:(1 2 3 4);(1 3)")
        assert D8.order == 8
        Z = sub(D8, "(1 3)(2 4)")
        assert not hxz_criterion(D8, Z)

    def test_requires_normal(self):
        S3 = group("sym:3")
        with pytest.raises(HypothesisError):
            hxz_criterion(S3, sub(S3, "(1 2)"))


class TestEquivalent:
    def test_paper_q(self, paper_example):
        assert not equivalent_criterion(paper_example["G"], paper_example["Q"])

    def test_trivial_subgroup(self):
        S4 = group("sym:4")
        assert equivalent_criterion(S4, trivial_subgroup(S4))

    def test_odd_order(self):
        S3 = group("sym:3")
        assert equivalent_criterion(S3, sub(S3, "(1 2 3)"))

    def test_hypothesis(self, paper_example):
        with pytest.raises(HypothesisError):
            equivalent_criterion(paper_example["G"], paper_example["H"])


class TestShortcutsAndReductions:
    def test_odd_shortcut(self, paper_example):
        S3 = group("sym:3")
        assert odd_shortcut(S3, sub(S3, "(1 2)")) is True
        assert odd_shortcut(S3, trivial_subgroup(S3)) is True
        assert odd_shortcut(paper_example["G"], paper_example["H"]) is None

    def test_reduce_to_sylow2(self, paper_example):
        G, H, Q = paper_example["G"], paper_example["H"], paper_example["Q"]
        Q1 = reduce_to_sylow2(G, H)
        assert Q1.order == 2
        assert any(conjugate_subgroup(H, Q1, h) == Q for h in H)
        A4 = group("alt:4")
        C3 = sub(A4, "(1 2 3)")
        assert reduce_to_sylow2(A4, C3).order == 1
        V = sub(A4, "(1 2)(3 4)", "(1 3)(2 4)")
        assert reduce_to_sylow2(A4, V) == V

    def test_reduce_ngq(self, paper_example):
        G, Q = paper_example["G"], paper_example["Q"]
        Q1, P1 = reduce_ngq(G, Q)
        assert Q1 == Q and P1.order == 16
        assert normalizer(G, Q).order == 16
        assert is_normal(P1, Q1)

    def test_reduce_ngq_odd_order(self):
        S4 = group("sym:4")
        Q, P0 = reduce_ngq(S4, sub(S4, "(1 2 3)"))
        assert Q.order == 1 and P0.order == 8


class TestIsPerfectCode:
    def test_paper_example(self, paper_example):
        G, H, Q = paper_example["G"], paper_example["H"], paper_example["Q"]
        r = is_perfect_code(G, H)
        assert not r.is_perfect_code and r.path is Path.NGQ_REDUCTION
        assert is_basic_witness(G, H, r.witness)
        assert dict(r.reduction_trace) == {"Q": 2, "N_G(Q)": 16, "P": 16}
        assert not is_perfect_code(G, Q).is_perfect_code

    def test_whole_group(self):
        S4 = group("sym:4")
        assert is_perfect_code(S4, S4) == PerfectCodeReport(True, Path.ODD_SHORTCUT)

    def test_a5_all_subgroups(self):
        A5 = group("alt:5")
        assert all(is_perfect_code(A5, H).is_perfect_code for H in all_subgroups(A5))

    def test_report_invariant(self):
        with pytest.raises(ValueError):
            PerfectCodeReport(False, Path.BASIC_CRITERION)
        with pytest.raises(ValueError):
            PerfectCodeReport(True, Path.BASIC_CRITERION, P("(1 2)"))

    @pytest.mark.parametrize("token", ["sym:4", "dihedral:8", "gens:8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"])
    def test_trace_divisibility(self, token):
        G = group(token)
        for H in all_subgroups(G):
            r = is_perfect_code(G, H)
            if r.reduction_trace:
                t = dict(r.reduction_trace)
                assert H.order % t["Q"] == 0 and t["P"] % t["Q"] == 0 and t["N_G(Q)"] % t["P"] == 0


class TestGlobal:
    def test_shortcut_labels(self, paper_example):
        A5 = group("alt:5")
        for H in all_subgroups(A5)[::7]:
            assert {ABELIAN_SYLOW2, ELEMENTARY_ABELIAN_SYLOW2} <= applicable_shortcuts(A5, H)
        Z4 = group("cyclic:4")
        assert NORMAL_SYLOW2 in applicable_shortcuts(Z4, sub(Z4, "(1 3)(2 4)"))
        assert ELEMENTARY_ABELIAN_SYLOW2 not in applicable_shortcuts(paper_example["G"], paper_example["H"])

    def test_every_subgroup(self, S6):
        assert every_subgroup_is_perfect_code(group("alt:5"))
        assert not every_subgroup_is_perfect_code(S6)
        assert every_subgroup_is_perfect_code(group("cyclic:15"))
