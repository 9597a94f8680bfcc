from hypothesis import given, settings
from hypothesis import strategies as st

from perfcode.oracle import find_admissible_connection_set, verify_witness
from perfcode.perfectcode import (
    basic_criterion,
    is_basic_witness,
    is_perfect_code,
    reduce_ngq,
    two_element_witness,
)
from perfcode.permgroup import (
    Permutation,
    conjugate_subgroup,
    generated_subgroup,
    is_normal,
    is_subgroup,
    left_cosets,
    normalizer,
    p_part,
    sylow,
)

from conftest import group

S5 = group("sym:5")
S4 = group("sym:4")

perms7 = st.permutations(range(1, 8)).map(Permutation)
s5_elements = st.sampled_from(S5.elements)
s4_elements = st.sampled_from(S4.elements)


@given(perms7, perms7, perms7)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms7)
def test_inverse_and_order(a):
    assert (a * a.inverse()).is_identity()
    assert (a ** a.order()).is_identity()
    assert all(not (a ** k).is_identity() for k in range(1, a.order()))


@settings(max_examples=60, deadline=None)
@given(st.lists(s5_elements, min_size=1, max_size=2))
def test_subgroup_invariants(gens):
    H = generated_subgroup(S5, gens)
    assert S5.order % H.order == 0
    assert is_subgroup(S5, H.elements)
    cosets = left_cosets(S5, H)
    assert len(cosets) * H.order == S5.order
    assert len({e for c in cosets for e in c.elements}) == S5.order
    N = normalizer(S5, H)
    assert H.element_set <= N.element_set
    for g in N.elements[:10]:
        assert conjugate_subgroup(S5, H, g) == H


@settings(max_examples=60, deadline=None)
@given(st.lists(s5_elements, min_size=1, max_size=2))
def test_fast_path_matches_basic(gens):
    H = generated_subgroup(S5, gens)
    fast, basic = is_perfect_code(S5, H), basic_criterion(S5, H)
    assert fast.is_perfect_code == basic.is_perfect_code
    for report in (fast, basic):
        if not report.is_perfect_code:
            assert is_basic_witness(S5, H, report.witness)
    if not basic.is_perfect_code:
        x = two_element_witness(S5, H)
        assert x is not None and is_basic_witness(S5, H, x)
    Q, P = reduce_ngq(S5, H)
    assert is_normal(P, Q)
    assert H.order % Q.order == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(s5_elements, min_size=1, max_size=2), st.sampled_from([2, 3, 5]))
def test_sylow_order(gens, p):
    H = generated_subgroup(S5, gens)
    Q = sylow(H, p)
    assert Q.order == p_part(H.order, p)
    assert Q.element_set <= H.element_set


@settings(max_examples=40, deadline=None)
@given(st.lists(s4_elements, min_size=1, max_size=2), s4_elements)
def test_oracle_matches_and_transports(gens, g):
    H = generated_subgroup(S4, gens)
    S = find_admissible_connection_set(S4, H)
    assert (S is not None) == basic_criterion(S4, H).is_perfect_code
    if S is not None:
        gi = g.inverse()
        assert verify_witness(S4, conjugate_subgroup(S4, H, g), [gi * s * g for s in S.elements])
