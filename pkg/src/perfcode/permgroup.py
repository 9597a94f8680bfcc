"""Permutation groups stored as fully enumerated, canonically sorted element sets.

Composition is right-to-left: ``p * q`` applies ``q`` first, then ``p``.
The canonical total order on permutations is lexicographic on image
sequences, and every "first element" tie-break in this package uses it.
"""

from __future__ import annotations

import math
import os
import re
from collections import deque
from operator import itemgetter
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    HypothesisError,
    NotInGroupError,
    ParseError,
)

DEFAULT_ORDER_CAP = 100_000
DEFAULT_LATTICE_BOUND = 300


def order_cap() -> int:
    """Closure cap; the ``PERFCODE_MAX_ORDER`` environment variable overrides the default."""
    raw = os.environ.get("PERFCODE_MAX_ORDER")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"PERFCODE_MAX_ORDER must be an integer, got {raw!r}") from None
    return DEFAULT_ORDER_CAP


class Permutation:
    """A bijection of {1..n}.

    ``images`` is exposed 1-based; internally a 0-based tuple is kept so
    that composition is a single ``itemgetter`` call.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(i - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
        if not img:
            raise ValueError("degree must be positive")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _from0(cls, img: tuple) -> Permutation:
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._from0(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> Permutation:
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self._img) != len(other._img):
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree} differ")
        if len(other._img) == 1:
            return self
        return Permutation._from0(itemgetter(*other._img)(self._img))

    def inverse(self) -> Permutation:
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._from0(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by that point."""
        seen = set()
        out = []
        for start in range(len(self._img)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self._img[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self._img[j]
            if len(cyc) > 1:
                out.append(tuple(c + 1 for c in cyc))
        return out

    def cycle_lengths(self) -> list[int]:
        return [len(c) for c in self.cycles()]

    def order(self) -> int:
        return math.lcm(*self.cycle_lengths()) if not self.is_identity() else 1

    def is_involution(self) -> bool:
        return self.order() == 2

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __le__(self, other: Permutation) -> bool:
        return self._img <= other._img

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


# -- cycle notation ---------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(1 2)(3 5)"``.

    Points are separated by whitespace or commas. A cycle written without
    separators, like ``(1325)``, is read digit by digit; that compact form
    is rejected when ``degree`` exceeds 9. Fixed points may be omitted and
    the empty string (or ``"()"``) is the identity.
    """
    stripped = text.strip()
    leftovers = _CYCLE_RE.sub("", stripped)
    if leftovers.strip():
        raise ParseError(f"unexpected text outside cycles in {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        tokens = [t for t in re.split(r"[\s,]+", body) if t]
        if len(tokens) == 1 and len(tokens[0]) > 1:
            if degree is not None and degree > 9:
                raise ParseError(f"compact cycle {body!r} is ambiguous at degree {degree}")
            tokens = list(tokens[0])
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"non-integer point in cycle ({body})") from None
        cycles.append(points)
    all_points = [pt for c in cycles for pt in c]
    if len(set(all_points)) != len(all_points):
        raise ParseError(f"point repeated in {text!r}")
    if any(pt < 1 for pt in all_points):
        raise ParseError(f"points are 1-based in {text!r}")
    top = max(all_points, default=1)
    if degree is None:
        degree = top
    elif top > degree:
        raise ParseError(f"point {top} exceeds degree {degree} in {text!r}")
    img = list(range(degree))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return Permutation._from0(tuple(img))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


# -- element-level operations -------------------------------------------------

def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``q`` first, then ``p``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def element_order(p: Permutation) -> int:
    return p.order()


def is_involution(p: Permutation) -> bool:
    return p.is_involution()


# -- groups -------------------------------------------------------------------

class PermutationGroup:
    """A finite permutation group with every element enumerated.

    ``elements`` is sorted in canonical order, so two groups on the same
    degree are equal exactly when their element tuples are equal.
    """

    def __init__(self, degree: int, elements: Iterable[Permutation],
                 generators: Sequence[Permutation] | None = None):
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(sorted(elements))
        self._set = frozenset(self.elements)
        self._gens = tuple(generators) if generators else None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        if self._gens is None:
            self._gens = _greedy_generators(self.degree, self.elements)
        return self._gens

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def element_set(self) -> frozenset:
        return self._set

    def __contains__(self, p) -> bool:
        return p in self._set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.degree, self._set))

    def issubgroup(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and self._set <= other._set

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators))
        return f"{type(self).__name__}(order={self.order}, gens=[{gens}])"


class Subgroup(PermutationGroup):
    """A subgroup carrying a reference to the group it was taken in."""

    def __init__(self, parent: PermutationGroup, elements: Iterable[Permutation],
                 generators: Sequence[Permutation] | None = None):
        super().__init__(parent.degree, elements, generators)
        self.parent = parent


def _closure_set(degree: int, gens: Sequence[Permutation], cap: int) -> set:
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    gens = [g for g in gens if not g.is_identity()]
    while queue:
        e = queue.popleft()
        for g in gens:
            n = g * e
            if n not in seen:
                seen.add(n)
                if len(seen) > cap:
                    raise BoundExceededError(f"group order exceeds the closure cap {cap}")
                queue.append(n)
    return seen


def _greedy_generators(degree: int, elements: Sequence[Permutation]) -> tuple[Permutation, ...]:
    gens: list[Permutation] = []
    span = {Permutation.identity(degree)}
    for e in elements:
        if e not in span:
            gens.append(e)
            span = _closure_set(degree, gens, len(elements))
            if len(span) == len(elements):
                break
    return tuple(gens) or (Permutation.identity(degree),)


def closure(degree: int, gens: Sequence[Permutation], cap: int | None = None) -> PermutationGroup:
    """Breadth-first product closure of ``gens``."""
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {degree}")
    cap = order_cap() if cap is None else cap
    elements = _closure_set(degree, gens, cap)
    return PermutationGroup(degree, elements, list(gens) or [Permutation.identity(degree)])


def _require_subset(G: PermutationGroup, H: PermutationGroup, what: str = "subgroup") -> None:
    if H.degree != G.degree:
        raise DegreeMismatchError(f"{what} has degree {H.degree}, group has degree {G.degree}")
    if not H.element_set <= G.element_set:
        raise NotInGroupError(f"{what} is not contained in the group")


def generated_subgroup(G: PermutationGroup, seed: Iterable[Permutation]) -> Subgroup:
    seed = list(seed)
    for s in seed:
        if s not in G:
            raise NotInGroupError(f"{s} is not an element of the group")
    elements = _closure_set(G.degree, seed, G.order)
    return Subgroup(G, elements, seed or None)


def trivial_subgroup(G: PermutationGroup) -> Subgroup:
    return Subgroup(G, [G.identity])


def as_subgroup(G: PermutationGroup, H: PermutationGroup) -> Subgroup:
    """Re-parent ``H`` inside ``G`` (checks containment)."""
    _require_subset(G, H)
    return Subgroup(G, H.elements, H._gens)


def is_subgroup(G: PermutationGroup, elements: Iterable[Permutation]) -> bool:
    """True when ``elements`` is a subgroup of ``G`` (closed, contains identity)."""
    es = set(elements)
    if G.identity not in es or not es <= G.element_set:
        return False
    return all(a * b in es for a in es for b in es)


class Coset(NamedTuple):
    representative: Permutation
    elements: tuple[Permutation, ...]


def left_cosets(G: PermutationGroup, H: PermutationGroup) -> list[Coset]:
    """Partition of G into left cosets gH, each represented by its minimal element."""
    _require_subset(G, H)
    assigned = set()
    out = []
    for g in G.elements:
        if g in assigned:
            continue
        coset = tuple(sorted(g * h for h in H.elements))
        assigned.update(coset)
        out.append(Coset(coset[0], coset))
    return out


def index(G: PermutationGroup, H: PermutationGroup) -> int:
    _require_subset(G, H)
    return G.order // H.order


def conjugate_subgroup(G: PermutationGroup, H: PermutationGroup, g: Permutation) -> Subgroup:
    """The subgroup g⁻¹Hg."""
    if g not in G:
        raise NotInGroupError(f"conjugator {g} is not in the group")
    gi = g.inverse()
    gens = [gi * h * g for h in H.generators]
    return Subgroup(G, (gi * h * g for h in H.elements), gens)


def normalizes(g: Permutation, H: PermutationGroup) -> bool:
    gi = g.inverse()
    return all(gi * h * g in H for h in H.generators)


def normalizer(G: PermutationGroup, H: PermutationGroup) -> Subgroup:
    """N_G(H) by scanning G; conjugating the generators of H is enough."""
    _require_subset(G, H)
    return Subgroup(G, [g for g in G.elements if normalizes(g, H)])


def is_normal(G: PermutationGroup, H: PermutationGroup) -> bool:
    _require_subset(G, H)
    return all(normalizes(g, H) for g in G.generators)


# -- arithmetic helpers ------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def two_part(n: int) -> int:
    return p_part(n, 2)


def is_power_of(n: int, p: int) -> bool:
    return p_part(n, p) == n


def is_p_group(H: PermutationGroup, p: int) -> bool:
    return is_power_of(H.order, p)


# -- Sylow subgroups ----------------------------------------------------------

def _extend_to_sylow(G: PermutationGroup, p: int, Q: Subgroup, target: int) -> Subgroup:
    while Q.order < target:
        N = normalizer(G, Q)
        for y in N.elements:
            if y in Q or not is_power_of(y.order(), p):
                continue
            gens = list(Q.generators) + [y]
            grown = _closure_set(G.degree, gens, G.order)
            if is_power_of(len(grown), p):
                Q = Subgroup(G, grown, gens)
                break
        else:  # pragma: no cover - impossible by Sylow's theorem
            raise RuntimeError("no p-element extends the p-subgroup; group data is inconsistent")
    return Q


def sylow(G: PermutationGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup of G, grown from the canonically first element of order p.

    Each step adjoins the canonically first p-element of N_G(Q) outside Q,
    so the result is deterministic.
    """
    if not is_prime(p):
        raise HypothesisError(f"{p} is not prime")
    target = p_part(G.order, p)
    if target == 1:
        return trivial_subgroup(G)
    x = next(e for e in G.elements if e.order() == p)
    start = Subgroup(G, _closure_set(G.degree, [x], G.order), [x])
    return _extend_to_sylow(G, p, start, target)


def sylow_containing(G: PermutationGroup, p: int, Q0: PermutationGroup) -> Subgroup:
    """A Sylow p-subgroup of G containing the p-subgroup ``Q0``."""
    if not is_prime(p):
        raise HypothesisError(f"{p} is not prime")
    _require_subset(G, Q0)
    if not is_p_group(Q0, p):
        raise HypothesisError(f"seed subgroup of order {Q0.order} is not a {p}-group")
    if Q0.order == 1:
        return sylow(G, p)
    return _extend_to_sylow(G, p, as_subgroup(G, Q0), p_part(G.order, p))


# -- subgroup lattice ---------------------------------------------------------

def cyclic_subgroups(G: PermutationGroup) -> list[Subgroup]:
    found: dict[frozenset, Subgroup] = {}
    for g in G.elements:
        powers = []
        x = G.identity
        while True:
            powers.append(x)
            x = g * x
            if x.is_identity():
                break
        key = frozenset(powers)
        if key not in found:
            found[key] = Subgroup(G, powers, [g])
    return sorted(found.values(), key=_lattice_key)


def _lattice_key(H: PermutationGroup):
    return (H.order, tuple(e._img for e in H.elements))


def all_subgroups(G: PermutationGroup, bound: int = DEFAULT_LATTICE_BOUND,
                  join_order: Sequence[int] | None = None) -> list[Subgroup]:
    """Every subgroup of G exactly once, sorted by (order, element list).

    Starts from the cyclic subgroups and closes under joins with cyclic
    subgroups until nothing new appears. ``join_order`` permutes the order
    in which cyclic subgroups are joined; the result must not depend on it.
    """
    if G.order > bound:
        raise BoundExceededError(f"group order {G.order} exceeds the lattice bound {bound}")
    cyclics = cyclic_subgroups(G)
    if join_order is not None:
        cyclics = [cyclics[i] for i in join_order]
    found: dict[frozenset, Subgroup] = {C.element_set: C for C in cyclics}
    frontier = list(cyclics)
    while frontier:
        fresh = []
        for A in frontier:
            for C in cyclics:
                c = C.generators[0]
                if c in A:
                    continue
                gens = list(A.generators) + [c]
                elements = _closure_set(G.degree, gens, G.order)
                key = frozenset(elements)
                if key not in found:
                    J = Subgroup(G, elements, gens)
                    found[key] = J
                    fresh.append(J)
        frontier = fresh
    return sorted(found.values(), key=_lattice_key)


# -- structure predicates -----------------------------------------------------

def is_abelian(H: PermutationGroup) -> bool:
    gens = H.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def is_cyclic(H: PermutationGroup) -> bool:
    return any(e.order() == H.order for e in H.elements)


def is_elementary_abelian(H: PermutationGroup) -> bool:
    if H.order == 1:
        return True
    orders = {e.order() for e in H.elements if not e.is_identity()}
    return len(orders) == 1 and is_prime(orders.pop()) and is_abelian(H)


def is_dihedral(H: PermutationGroup) -> bool:
    """Order 2m with a cyclic subgroup of order m inverted by an involution outside it.

    The Klein four group and the group of order 2 both qualify.
    """
    if H.order % 2:
        return False
    m = H.order // 2
    involutions = [e for e in H.elements if e.is_involution()]
    for a in H.elements:
        if a.order() != m:
            continue
        C = {a ** k for k in range(m)}
        a_inv = a.inverse()
        if any(t not in C and t * a * t == a_inv for t in involutions):
            return True
    return False
