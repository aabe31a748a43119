"""Seeded random instances."""

from __future__ import annotations

import random

from .multigraph import MultiGraph
from .solver import Instance

CAP_CHOICES = (0, 1, 2, None)  # None stands for m


def random_multigraph(rng: random.Random, n: int, m: int) -> MultiGraph:
    """``m`` edges drawn independently and uniformly from the vertex pairs."""
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    return MultiGraph(n, edges)


def random_instance(
    rng: random.Random,
    max_n: int = 10,
    max_m: int = 20,
    max_k: int = 4,
    max_terminals: int = 3,
    min_n: int = 2,
    tight: float = 1.0,
) -> Instance:
    """Random instance within the given caps.

    Terminals are drawn first, then the edges.  Each degree cap is drawn
    from ``{0, 1, 2, m}`` with probability ``tight`` and is ``m`` otherwise.
    """
    n = rng.randint(min_n, max_n)
    order = rng.sample(range(n), n)
    na = rng.randint(1, min(max_terminals, n - 1))
    nb = rng.randint(1, min(max_terminals, n - na))
    a, b = order[:na], order[na:na + nb]
    m = rng.randint(0, max_m)
    g = random_multigraph(rng, n, m)

    def cap():
        if rng.random() >= tight:
            return m
        c = rng.choice(CAP_CHOICES)
        return m if c is None else min(c, m)

    u_a = [cap() for _ in range(n)]
    u_b = [cap() for _ in range(n)]
    return Instance(g, a, b, u_a, u_b, rng.randint(0, max_k))


def _tree_plus(rng, verts, extra):
    order = rng.sample(verts, len(verts))
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, len(order))]
    for _ in range(extra):
        edges.append(tuple(rng.sample(verts, 2)))
    return edges


def synthetic_instance(
    rng: random.Random,
    n: int = 60,
    m: int = 120,
    terminals: int = 3,
    k: int = 4,
    tight: float = 0.05,
    bridges: int | None = None,
    slack: int = 0,
) -> Instance:
    """Connected benchmark instance.

    Without ``bridges``: a random spanning tree plus uniform extra edges.
    With ``bridges``: two connected halves of ``n // 2`` vertices joined by
    that many edges, A drawn from the first half and B from the second, so
    that small cuts exist.  Caps are drawn as in :func:`random_instance`;
    a capped vertex then gets ``randint(0, slack)`` extra allowance.
    """
    if bridges is None:
        edges = _tree_plus(rng, list(range(n)), m - n + 1)
        picks = rng.sample(range(n), 2 * terminals)
        a, b = picks[:terminals], picks[terminals:]
    else:
        left, right = list(range(n // 2)), list(range(n // 2, n))
        inner = m - bridges - (n - 2)
        edges = _tree_plus(rng, left, inner // 2) + _tree_plus(rng, right, inner - inner // 2)
        edges += [(rng.choice(left), rng.choice(right)) for _ in range(bridges)]
        a, b = rng.sample(left, terminals), rng.sample(right, terminals)
    g = MultiGraph(n, edges)

    def cap():
        if rng.random() >= tight:
            return m
        c = rng.choice(CAP_CHOICES)
        return m if c is None else min(c + rng.randint(0, slack), m)
    u_a = [cap() for _ in range(n)]
    u_b = [cap() for _ in range(n)]
    return Instance(g, a, b, u_a, u_b, k)
