import itertools

import pytest

from perfcode.groupspec import GroupSpec
from perfcode.permgroup import generated_subgroup, parse_cycles

# -- independent brute-force helpers on plain 0-based tuples -----------------
# Deliberately free of perfcode imports so they can serve as oracles.


def t_mul(p, q):
    """Apply q, then p."""
    return tuple(p[i] for i in q)


def t_inv(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def t_closure(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    todo = [ident]
    while todo:
        e = todo.pop()
        for g in gens:
            x = t_mul(g, e)
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return frozenset(seen)


def t_sym(n):
    return frozenset(itertools.permutations(range(n)))


def t_from_cycles(cycles, n):
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def t_is_involution(p):
    return p != tuple(range(len(p))) and t_mul(p, p) == tuple(range(len(p)))


def t_subgroups_by_pairs(G, n):
    """Every subgroup generated by at most two elements."""
    return {t_closure([a, b], n) for a in G for b in G}


def t_perfect_code_by_definition(G, H, n):
    """Try every inverse-closed, identity-free S and test the graph condition directly."""
    ident = tuple(range(n))
    classes = []
    seen = set()
    for g in sorted(G):
        if g == ident or g in seen:
            continue
        pair = frozenset({g, t_inv(g)})
        seen |= pair
        classes.append(pair)
    for mask in range(2 ** len(classes)):
        S = set()
        for i, c in enumerate(classes):
            if mask >> i & 1:
                S |= c
        ok = True
        for v in G:
            hits = sum(1 for s in S if t_mul(s, v) in H)
            if (v in H and hits) or (v not in H and hits != 1):
                ok = False
                break
        if ok:
            return True
    return False


# -- shared fixtures ----------------------------------------------------------

def group(token):
    return GroupSpec.parse(token).build()


def sub(G, *cycle_strings):
    return generated_subgroup(G, [parse_cycles(s, G.degree) for s in cycle_strings])


@pytest.fixture(scope="session")
def S6():
    return group("sym:6")


@pytest.fixture(scope="session")
def paper_example(S6):
    return {
        "G": S6,
        "H": sub(S6, "(1 2)(3 5)", "(3 4 5)"),
        "Q": sub(S6, "(1 2)(3 5)"),
        "P": sub(S6, "(1 2)", "(3 5)", "(3 4 5 6)"),
    }


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
