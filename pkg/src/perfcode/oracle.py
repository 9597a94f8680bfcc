"""Ground truth straight from the graph definition.

In Cay(G, S) two vertices x, y are adjacent when y·x⁻¹ ∈ S. A subgroup H
is a perfect code of Cay(G, S) exactly when S ∩ H is empty and S meets
every other left coset gH once, i.e. S ∪ {1} is a left transversal of H.
The search below looks for such an inverse-closed S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BoundExceededError
from .permgroup import Permutation, PermutationGroup, format_cycles, left_cosets

DEFAULT_INDEX_BOUND = 24
DEFAULT_SMALL_GROUP = 48


@dataclass(frozen=True)
class ConnectionSet:
    parent: PermutationGroup
    elements: tuple[Permutation, ...]

    def __init__(self, parent: PermutationGroup, elements: Iterable[Permutation]):
        elements = tuple(sorted(set(elements)))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "elements", elements)
        problem = _connection_set_problem(parent, elements)
        if problem:
            raise ValueError(problem)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in set(self.elements)

    def to_strings(self) -> list[str]:
        return [format_cycles(s) for s in self.elements]


def _connection_set_problem(G: PermutationGroup, elements) -> str | None:
    es = set(elements)
    if not es <= G.element_set:
        return "connection set has elements outside the group"
    if G.identity in es:
        return "connection set contains the identity"
    if any(s.inverse() not in es for s in es):
        return "connection set is not closed under inverses"
    return None


def cayley_neighbors(S: Iterable[Permutation], x: Permutation) -> list[Permutation]:
    """Vertices y with y·x⁻¹ ∈ S."""
    return [s * x for s in S]


def cayley_perfect_code_check(G: PermutationGroup, S: ConnectionSet | Iterable[Permutation],
                              C: Iterable[Permutation]) -> bool:
    """Independence of C plus exactly one C-neighbour for each vertex outside C."""
    conn = S.elements if isinstance(S, ConnectionSet) else tuple(S)
    code = set(C)
    for v in G.elements:
        hits = sum(1 for y in cayley_neighbors(conn, v) if y in code)
        if v in code:
            if hits:
                return False
        elif hits != 1:
            return False
    return True


def find_admissible_connection_set(G: PermutationGroup, H: PermutationGroup,
                                   index_bound: int = DEFAULT_INDEX_BOUND,
                                   small_group: int = DEFAULT_SMALL_GROUP) -> ConnectionSet | None:
    """Backtracking search for an inverse-closed S with S ∪ {1} a left transversal of H.

    Choosing s for coset gH forces s⁻¹ as the choice for the coset s⁻¹H, so
    cosets are filled in inverse pairs; a coset that holds its own inverses
    needs an involution.
    """
    idx = G.order // H.order
    if idx > index_bound and G.order > small_group:
        raise BoundExceededError(
            f"oracle search needs index <= {index_bound} or |G| <= {small_group}; "
            f"got index {idx}, |G| = {G.order}")
    cosets = [c for c in left_cosets(G, H) if c.representative not in H]
    coset_of = {e: i for i, c in enumerate(cosets) for e in c.elements}
    candidates = [
        [e for e in c.elements if e.is_involution()] + [e for e in c.elements if not e.is_involution()]
        for c in cosets
    ]
    choice: list[Permutation | None] = [None] * len(cosets)

    def place(order: list[int], k: int) -> bool:
        while k < len(order) and choice[order[k]] is not None:
            k += 1
        if k == len(order):
            return True
        i = order[k]
        for s in candidates[i]:
            s_inv = s.inverse()
            j = coset_of[s_inv]
            if j == i:
                if s_inv != s:
                    continue
                choice[i] = s
                if place(order, k + 1):
                    return True
                choice[i] = None
            elif choice[j] is None:
                choice[i], choice[j] = s, s_inv
                if place(order, k + 1):
                    return True
                choice[i] = choice[j] = None
        return False

    # Choices only couple a coset with cosets holding inverses of its elements,
    # so each linked block is searched on its own and one dead block ends the search.
    for block in _linked_blocks(cosets, coset_of):
        if not place(block, 0):
            return None
    return ConnectionSet(G, choice)


def _linked_blocks(cosets, coset_of) -> list[list[int]]:
    parent = list(range(len(cosets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, c in enumerate(cosets):
        for e in c.elements:
            parent[find(coset_of[e.inverse()])] = find(i)
    blocks: dict[int, list[int]] = {}
    for i in range(len(cosets)):
        blocks.setdefault(find(i), []).append(i)
    return list(blocks.values())


def verify_witness(G: PermutationGroup, H: PermutationGroup,
                   S: ConnectionSet | Iterable[Permutation]) -> bool:
    """Check that S is a connection set, that S ∪ {1} is a left transversal of H, and the graph condition."""
    elements = S.elements if isinstance(S, ConnectionSet) else tuple(S)
    if _connection_set_problem(G, elements):
        return False
    if not H.element_set <= G.element_set:
        return False
    hits: dict[Permutation, int] = {}
    for c in left_cosets(G, H):
        hits[c.representative] = 0
    rep_of = {e: c.representative for c in left_cosets(G, H) for e in c.elements}
    for s in list(elements) + [G.identity]:
        hits[rep_of[s]] += 1
    if any(n != 1 for n in hits.values()):
        return False
    return cayley_perfect_code_check(G, elements, H.elements)
