"""Textual group specifications shared by the CLI and the verification corpus.

Family tokens::

    sym:<n>  alt:<n>  cyclic:<n>  dihedral:<n> (order 2n)  psl2:<q>

Explicit generators::

    gens:<degree>:<cycles>;<cycles>;...      e.g. gens:6:(1 2)(3 5);(3 4 5)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .permgroup import Permutation, PermutationGroup, closure, format_cycles, parse_cycles
from .psl2 import psl2

FAMILIES = ("sym", "alt", "cyclic", "dihedral", "psl2")


def parse_generator_list(text: str, degree: int | None = None) -> list[Permutation]:
    """Semicolon-separated cycle strings; blank entries are dropped."""
    parts = [t.strip() for t in text.split(";")]
    return [parse_cycles(t, degree) for t in parts if t]


def _cycle(points) -> str:
    return "(" + " ".join(map(str, points)) + ")"


def family_generators(family: str, n: int) -> tuple[int, list[str]]:
    """Degree and generator cycle strings for a named family (not psl2)."""
    if n < 1:
        raise ParseError(f"{family}:{n} needs a positive parameter")
    if family == "sym":
        gens = [] if n < 2 else ["(1 2)"] if n == 2 else ["(1 2)", _cycle(range(1, n + 1))]
        return n, gens
    if family == "alt":
        return n, [_cycle((1, 2, k)) for k in range(3, n + 1)]
    if family == "cyclic":
        return n, [_cycle(range(1, n + 1))] if n > 1 else []
    if family == "dihedral":
        if n == 1:
            return 2, ["(1 2)"]
        if n == 2:
            return 4, ["(1 2)", "(3 4)"]
        reflection = "".join(_cycle((i, n + 1 - i)) for i in range(1, n // 2 + 1))
        return n, [_cycle(range(1, n + 1)), reflection]
    raise ParseError(f"unknown family {family!r}")


@dataclass(frozen=True)
class GroupSpec:
    family: str | None
    param: int | None = None
    degree: int | None = None
    generators: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        text = text.strip()
        m = re.fullmatch(r"([a-z0-9]+)\s*:\s*(\d+)", text)
        if m and m.group(1) in FAMILIES:
            return cls(m.group(1), int(m.group(2)))
        m = re.fullmatch(r"(?:gens\s*:\s*)?(\d+)\s*:(.*)", text, re.S)
        if m:
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError("degree must be positive")
            gens = parse_generator_list(m.group(2), degree)
            return cls(None, None, degree, tuple(format_cycles(g) for g in gens))
        raise ParseError(f"cannot parse group specification {text!r}")

    def format(self) -> str:
        if self.family:
            return f"{self.family}:{self.param}"
        return f"gens:{self.degree}:" + ";".join(self.generators)

    def __str__(self) -> str:
        return self.format()

    def build(self, cap: int | None = None) -> PermutationGroup:
        if self.family == "psl2":
            return psl2(self.param, cap=cap).group
        if self.family:
            degree, gens = family_generators(self.family, self.param)
        else:
            degree, gens = self.degree, list(self.generators)
        return closure(degree, [parse_cycles(g, degree) for g in gens], cap)
