"""Deciding whether a subgroup H of G is a perfect code of some Cayley graph of G.

Several independent routes are provided so they can be cross-checked:

* ``basic_criterion``: scan the double cosets HxH (x outside H); H fails
  exactly when one of them is inverse-closed, is a union of an odd number
  of left cosets of H, and holds no involution.
* ``hxz_criterion``: for normal H, every x with x² ∈ H must have an
  involution (or the identity) in the coset xH.
* ``equivalent_criterion``: the same coset test restricted to N_G(H),
  valid when H is a 2-group or |H| or |G:H| is odd.
* ``is_perfect_code``: the fast path. Reduce H to a Sylow 2-subgroup Q,
  take a Sylow 2-subgroup P of N_G(Q) and run the coset test for Q ⊴ P.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import HypothesisError
from .permgroup import (
    Permutation,
    PermutationGroup,
    Subgroup,
    _require_subset,
    as_subgroup,
    index,
    is_abelian,
    is_elementary_abelian,
    is_normal,
    is_p_group,
    is_power_of,
    normalizer,
    sylow,
    sylow_containing,
)


class Path(str, enum.Enum):
    ODD_SHORTCUT = "OddShortcut"
    NGQ_REDUCTION = "NgqReduction"
    BASIC_CRITERION = "BasicCriterion"
    HXZ_CRITERION = "HxzCriterion"
    EQUIVALENT_CRITERION = "EquivalentCriterion"


@dataclass(frozen=True)
class PerfectCodeReport:
    is_perfect_code: bool
    path: Path
    witness: Permutation | None = None
    reduction_trace: list[tuple[str, int]] = field(default_factory=list)

    def __post_init__(self):
        if (self.witness is None) != self.is_perfect_code:
            raise ValueError("a witness is required exactly when the verdict is negative")


@dataclass(frozen=True)
class DoubleCoset:
    subgroup: PermutationGroup
    representative: Permutation
    elements: tuple[Permutation, ...]
    left_coset_count: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def is_inverse_closed(self) -> bool:
        # HxH is closed under inversion iff x⁻¹ ∈ HxH
        return self.representative.inverse() in set(self.elements)

    def has_involution(self) -> bool:
        return any(e.is_involution() for e in self.elements)


def double_coset(H: PermutationGroup, x: Permutation) -> DoubleCoset:
    elements: set[Permutation] = set()
    for h1 in H.elements:
        hx = h1 * x
        if hx in elements:
            continue  # the whole left coset h1·x·H is already in
        elements.update(hx * h2 for h2 in H.elements)
    ordered = tuple(sorted(elements))
    return DoubleCoset(H, ordered[0], ordered, len(ordered) // H.order)


def double_coset_decomposition(G: PermutationGroup, H: PermutationGroup) -> list[DoubleCoset]:
    _require_subset(G, H)
    seen: set[Permutation] = set()
    out = []
    for g in G.elements:
        if g in seen:
            continue
        D = double_coset(H, g)
        seen.update(D.elements)
        out.append(D)
    return out


def _is_basic_obstruction(D: DoubleCoset) -> bool:
    return D.left_coset_count % 2 == 1 and D.is_inverse_closed() and not D.has_involution()


def basic_criterion(G: PermutationGroup, H: PermutationGroup) -> PerfectCodeReport:
    """Decide by scanning double cosets of H outside H itself."""
    for D in double_coset_decomposition(G, H):
        if D.representative in H:
            continue
        if _is_basic_obstruction(D):
            return PerfectCodeReport(False, Path.BASIC_CRITERION, D.representative)
    return PerfectCodeReport(True, Path.BASIC_CRITERION)


def is_basic_witness(G: PermutationGroup, H: PermutationGroup, x: Permutation) -> bool:
    """x ∉ H, HxH = (HxH)⁻¹, |HxH|/|H| odd, and HxH holds no involution."""
    if x not in G or x in H:
        return False
    return _is_basic_obstruction(double_coset(H, x))


def _intersection_index_odd(H: PermutationGroup, x: Permutation) -> bool:
    xi = x.inverse()
    meet = sum(1 for h in H.elements if xi * h * x in H)  # |H ∩ xHx⁻¹|
    return (H.order // meet) % 2 == 1


def two_element_witness(G: PermutationGroup, H: PermutationGroup) -> Permutation | None:
    """A 2-element x ∈ G \\ H with x² ∈ H, |H : H ∩ xHx⁻¹| odd and HxH involution-free."""
    if basic_criterion(G, H).is_perfect_code:
        return None
    for x in G.elements:
        if x in H or not is_power_of(x.order(), 2) or x * x not in H:
            continue
        if _intersection_index_odd(H, x) and not double_coset(H, x).has_involution():
            return x
    raise AssertionError("negative verdict without a 2-element witness")  # pragma: no cover


def _coset_test_failure(scan, H: PermutationGroup) -> Permutation | None:
    """First x in ``scan`` with x² ∈ H whose coset xH has no element squaring to 1."""
    for x in scan:
        if x * x not in H:
            continue
        if not any((x * h * x * h).is_identity() for h in H.elements):
            return x
    return None


def hxz_failure(G: PermutationGroup, H: PermutationGroup) -> Permutation | None:
    if not is_normal(G, H):
        raise HypothesisError("the coset criterion over G needs H normal in G")
    return _coset_test_failure(G.elements, H)


def hxz_criterion(G: PermutationGroup, H: PermutationGroup) -> bool:
    """For normal H: every x with x² ∈ H has (xh)² = 1 for some h ∈ H."""
    return hxz_failure(G, H) is None


def _equivalent_hypothesis(G: PermutationGroup, H: PermutationGroup) -> bool:
    return is_p_group(H, 2) or H.order % 2 == 1 or index(G, H) % 2 == 1


def equivalent_criterion(G: PermutationGroup, H: PermutationGroup) -> bool:
    """The coset test over N_G(H); needs H a 2-group or |H| or |G:H| odd."""
    if not _equivalent_hypothesis(G, H):
        raise HypothesisError(
            f"|H| = {H.order} and |G:H| = {G.order // H.order} are both even and H is not a 2-group")
    return _coset_test_failure(normalizer(G, H).elements, H) is None


def odd_shortcut(G: PermutationGroup, H: PermutationGroup) -> bool | None:
    if H.order % 2 == 1 or index(G, H) % 2 == 1:
        return True
    return None


def reduce_to_sylow2(G: PermutationGroup, H: PermutationGroup) -> Subgroup:
    _require_subset(G, H)
    return as_subgroup(G, sylow(H, 2))


def reduce_ngq(G: PermutationGroup, H: PermutationGroup) -> tuple[Subgroup, Subgroup]:
    """(Q, P): Q a Sylow 2-subgroup of H, P a Sylow 2-subgroup of N_G(Q). Q ⊴ P."""
    Q, _, P = _reduce_ngq_full(G, H)
    return Q, P


def _reduce_ngq_full(G, H):
    Q = reduce_to_sylow2(G, H)
    N = normalizer(G, Q)
    P = as_subgroup(G, sylow(N, 2))
    return Q, N, P


def is_perfect_code(G: PermutationGroup, H: PermutationGroup) -> PerfectCodeReport:
    """Fast decision: odd shortcut, else the coset test for Q inside P.

    A failing x from the P-scan lies in N_G(Q) \\ Q with x² ∈ Q and xQ
    involution-free; such an x is also a double-coset witness for H in G.
    """
    _require_subset(G, H)
    if odd_shortcut(G, H):
        return PerfectCodeReport(True, Path.ODD_SHORTCUT)
    Q, N, P = _reduce_ngq_full(G, H)
    trace = [("Q", Q.order), ("N_G(Q)", N.order), ("P", P.order)]
    x = _coset_test_failure(P.elements, Q)
    return PerfectCodeReport(x is None, Path.NGQ_REDUCTION, x, trace)


# -- corollary hypotheses -----------------------------------------------------

QNORMAL = "qnormal"
NORMAL_SYLOW2 = "normal-sylow2"
ABELIAN_SYLOW2 = "abelian-sylow2"
ELEMENTARY_ABELIAN_SYLOW2 = "elementary-abelian-sylow2"


def corollary_pair(G: PermutationGroup, H: PermutationGroup) -> tuple[Subgroup, Subgroup]:
    """Q = Sylow 2-subgroup of H and a Sylow 2-subgroup P₀ of G containing it."""
    Q = reduce_to_sylow2(G, H)
    return Q, sylow_containing(G, 2, Q)


def applicable_shortcuts(G: PermutationGroup, H: PermutationGroup) -> set[str]:
    Q, P0 = corollary_pair(G, H)
    labels = set()
    N = normalizer(G, Q)
    meet = P0.element_set & N.element_set
    if (N.order // len(meet)) % 2 == 1:
        labels.add(QNORMAL)
    if is_normal(G, P0):
        labels.add(NORMAL_SYLOW2)
    if is_abelian(P0):
        labels.add(ABELIAN_SYLOW2)
    if is_elementary_abelian(P0):
        labels.add(ELEMENTARY_ABELIAN_SYLOW2)
    return labels


def every_subgroup_is_perfect_code(G: PermutationGroup) -> bool:
    return is_elementary_abelian(sylow(G, 2))
