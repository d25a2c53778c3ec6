"""Shared helpers for the test suite."""

from __future__ import annotations

import pytest

from treedepth import (Monomial, VariableSet, build_caterpillar, build_lobster,
                       edge_ideal, ideal_power, minimalize)


def mk_ideal(varnames, *gen_dicts):
    """Ideal from sparse exponent dicts over the named variables."""
    ambient = VariableSet(varnames)
    gens = [Monomial.from_dict(ambient, d) for d in gen_dicts]
    return minimalize(gens, ambient=ambient)


def family_ideal(family, params, t=1):
    if family == "caterpillar":
        graph = build_caterpillar(*params)
    else:
        graph = build_lobster(*params)
    ideal = edge_ideal(graph)
    return ideal_power(ideal, t) if t > 1 else ideal


def caterpillar_grid(n_max=4, k_max=3):
    """All (n, k, l) in the standard small verification grid."""
    out = []
    for n in range(2, n_max + 1):
        for k in range(2, k_max + 1):
            for l in range(1, k + 1):
                out.append((n, k, l))
    return out


def lobster_grid(r_max=4, p_max=2):
    out = []
    for r in range(2, r_max + 1):
        for p in range(1, p_max + 1):
            for q in range(0, p + 1):
                out.append((r, p, q))
    return out


@pytest.fixture(scope="session")
def p22_ideal():
    return family_ideal("caterpillar", (2, 2, 2))
