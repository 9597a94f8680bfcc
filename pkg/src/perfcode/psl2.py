"""PSL(2,q) acting on the projective line, and the classification of its subgroup perfect codes."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import HypothesisError
from .gf import DEFAULT_FIELD_BOUND, FieldElement, FiniteField, build_field
from .perfectcode import is_perfect_code
from .permgroup import (
    Permutation,
    PermutationGroup,
    Subgroup,
    closure,
    generated_subgroup,
    is_cyclic,
    is_dihedral,
    sylow,
    two_part,
)


@dataclass(frozen=True)
class ProjectivePoint:
    """A point [x : y], stored normalized as [t : 1] or [1 : 0]."""

    x: FieldElement
    y: FieldElement

    @classmethod
    def normalized(cls, x: FieldElement, y: FieldElement) -> ProjectivePoint:
        if y.is_zero():
            if x.is_zero():
                raise ValueError("[0 : 0] is not a projective point")
            return cls(x.field.one, x.field.zero)
        return cls(x / y, x.field.one)

    def is_infinity(self) -> bool:
        return self.y.is_zero()


Matrix = tuple[tuple[FieldElement, FieldElement], tuple[FieldElement, FieldElement]]


def mobius(m: Matrix, pt: ProjectivePoint) -> ProjectivePoint:
    (a, b), (c, d) = m
    return ProjectivePoint.normalized(a * pt.x + b * pt.y, c * pt.x + d * pt.y)


def psl_order(q: int) -> int:
    d = 1 if q % 2 == 0 else 2
    return q * (q - 1) * (q + 1) // d


@dataclass(frozen=True, eq=False)
class Psl2Group:
    q: int
    d: int
    field: FiniteField
    group: PermutationGroup
    point_order: tuple[ProjectivePoint, ...]

    @property
    def order(self) -> int:
        return self.group.order


def projective_line(F: FiniteField) -> tuple[ProjectivePoint, ...]:
    """[t : 1] for t in canonical field order, then [1 : 0]."""
    return tuple(ProjectivePoint(t, F.one) for t in F.elements) + (ProjectivePoint(F.one, F.zero),)


def generator_matrices(F: FiniteField) -> list[Matrix]:
    """[[1, b], [0, 1]] for b in the basis 1, x, ..., x^(k-1), plus [[0, 1], [-1, 0]].

    Over a prime field this is the usual pair; over GF(p^k) the extra
    translations are needed to reach all of SL(2, q).
    """
    one, zero = F.one, F.zero
    mats: list[Matrix] = [((one, b), (zero, one)) for b in F.basis()]
    mats.append(((zero, one), (-one, zero)))
    return mats


def matrix_permutation(m: Matrix, points: tuple[ProjectivePoint, ...]) -> Permutation:
    position = {pt: i + 1 for i, pt in enumerate(points)}
    return Permutation([position[mobius(m, pt)] for pt in points])


def psl2(q: int, bound: int = DEFAULT_FIELD_BOUND, cap: int | None = None) -> Psl2Group:
    F = build_field(q, bound)
    points = projective_line(F)
    gens = [matrix_permutation(m, points) for m in generator_matrices(F)]
    G = closure(q + 1, gens, cap)
    d = 1 if q % 2 == 0 else 2
    if G.order != psl_order(q):
        raise RuntimeError(f"PSL(2,{q}) closure has order {G.order}, expected {psl_order(q)}")
    return Psl2Group(q, d, F, G, points)


def _require_pm1_mod8(q: int) -> None:
    if q % 8 not in (1, 7):
        raise HypothesisError(f"q = {q} is not congruent to ±1 mod 8")


def sylow2_is_dihedral_check(q: int) -> bool:
    _require_pm1_mod8(q)
    return is_dihedral(sylow(psl2(q).group, 2))


class PslCase(str, enum.Enum):
    TRIVIAL_Q = "TrivialQ"
    NONCYCLIC_Q = "NoncyclicQ"
    MAXIMAL_CYCLIC_Q = "MaximalCyclicQ"
    NONE = "None"


def max_cyclic_2_order(Gq: Psl2Group) -> int:
    """Largest order of a cyclic 2-subgroup; half the dihedral Sylow 2-subgroup."""
    return two_part(Gq.order) // 2


def theorem_psl_classify(Gq: Psl2Group, H: PermutationGroup) -> tuple[PslCase, bool]:
    _require_pm1_mod8(Gq.q)
    Q = sylow(H, 2)
    if Q.order == 1:
        case = PslCase.TRIVIAL_Q
    elif not is_cyclic(Q):
        case = PslCase.NONCYCLIC_Q
    elif Q.order == max_cyclic_2_order(Gq):
        case = PslCase.MAXIMAL_CYCLIC_Q
    else:
        case = PslCase.NONE
    return case, case is not PslCase.NONE


def classify_vs_checker(Gq: Psl2Group, H: PermutationGroup) -> bool:
    return theorem_psl_classify(Gq, H)[1] == is_perfect_code(Gq.group, H).is_perfect_code


# -- reproducible sampling ------------------------------------------------------

class Lcg:
    """x ← (1664525·x + 1013904223) mod 2³²; the same stream on every platform."""

    A = 1664525
    C = 1013904223
    M = 2 ** 32

    def __init__(self, seed: int):
        self.state = seed % self.M

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) % self.M
        return self.state

    def below(self, n: int) -> int:
        # the high bits of an LCG are the well-mixed ones
        return (self.next() >> 16) % n


DEFAULT_SEED = 20240917


def sample_two_generated(G: PermutationGroup, count: int, seed: int = DEFAULT_SEED) -> Iterator[Subgroup]:
    """``count`` subgroups ⟨a, b⟩ with a, b drawn by index from G.elements."""
    rng = Lcg(seed)
    for _ in range(count):
        a = G.elements[rng.below(G.order)]
        b = G.elements[rng.below(G.order)]
        yield generated_subgroup(G, [a, b])
