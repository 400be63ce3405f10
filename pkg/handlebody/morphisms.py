"""
Homomorphisms to C2 = {-1, +1} and automorphisms of a FiniteGroup.

Both are found the same way: fix a minimal generating tuple, choose images for
its entries, and extend along the Cayley graph (x -> x*g_i). An assignment
extends to a homomorphism exactly when every edge agrees with it.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import permutations, product

from .conf import resolve_cap
from .exceptions import CapExceeded
from .groups import subgroup_closure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Character:
    """A homomorphism G -> C2, stored as its value on every element index."""

    values: tuple

    def __call__(self, x):
        return self.values[x]

    @property
    def is_trivial(self):
        return all(v == 1 for v in self.values)

    @property
    def sort_key(self):
        # +1 sorts before -1, matching the marked-vector convention
        return tuple(0 if v == 1 else 1 for v in self.values)

    def matches(self, g, v):
        return all(self.values[x] == s for x, s in zip(g, v))

    def compose(self, automorphism):
        """The character x -> self(automorphism(x))."""
        return Character(tuple(self.values[y] for y in automorphism.images))

    def is_homomorphism(self, group):
        rows = group.rows
        values = self.values
        return all(
            values[rows[x][y]] == values[x] * values[y]
            for x in range(group.order)
            for y in range(group.order)
        )


@dataclass(frozen=True)
class Automorphism:
    images: tuple

    def __call__(self, x):
        return self.images[x]

    @property
    def is_identity(self):
        return all(i == x for x, i in enumerate(self.images))

    def inverse(self):
        inverse = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inverse[y] = x
        return Automorphism(tuple(inverse))

    def compose(self, other):
        """self after other."""
        return Automorphism(tuple(self.images[y] for y in other.images))

    def apply(self, elements):
        return tuple(self.images[x] for x in elements)

    def is_automorphism(self, group):
        images = self.images
        if sorted(images) != list(range(group.order)):
            return False
        rows = group.rows
        return all(
            images[rows[x][y]] == rows[images[x]][images[y]]
            for x in range(group.order)
            for y in range(group.order)
        )


def _extend(group, gens, images, combine, start):
    """
    Propagate x*g_i -> combine(value(x), image_i) from the identity.

    Returns the value list (None on elements outside <gens>), or None when two
    paths to the same element disagree.
    """
    rows = group.rows
    values = [None] * group.order
    values[group.identity] = start
    queue = deque([group.identity])
    while queue:
        x = queue.popleft()
        vx = values[x]
        for g, h in zip(gens, images):
            y = rows[x][g]
            want = combine(vx, h)
            if values[y] is None:
                values[y] = want
                queue.append(y)
            elif values[y] != want:
                return None
    return values


def homs_to_C2(group):
    """All characters G -> C2, trivial first; there are 2^rank of them."""
    gens = group.minimal_generators
    found = []
    for signs in product((1, -1), repeat=len(gens)):
        values = _extend(group, gens, signs, lambda a, b: a * b, 1)
        if values is not None:
            found.append(Character(tuple(values)))
    found.sort(key=lambda c: c.sort_key)
    logger.debug("%s has %d characters to C2", group, len(found))
    return tuple(found)


def h1_rank(group):
    """log2 |Hom(G, C2)|."""
    return len(homs_to_C2(group)).bit_length() - 1


def match_character(group, g, v, characters=None):
    """The character sending g_i to v_i, or None when no homomorphism does."""
    for character in characters if characters is not None else homs_to_C2(group):
        if character.matches(g, v):
            return character
    return None


def automorphisms(group, *, order_cap=None):
    """
    The full automorphism group, identity first.

    Images of a minimal generating tuple are chosen among elements of the same
    order, each outside the subgroup the earlier images generate, and the
    partial map is extended over the subgroup generated so far; inconsistent
    or non-injective partial maps are pruned.
    """
    cap = resolve_cap("ORDER_CAP", order_cap)
    if group.order > cap:
        raise CapExceeded("group order", group.order, cap)

    gens = group.minimal_generators
    orders = group.element_orders
    by_order = {}
    for x, o in enumerate(orders):
        by_order.setdefault(o, []).append(x)
    rows = group.rows

    def combine(a, b):
        return rows[a][b]

    found = []

    def search(images):
        depth = len(images)
        if depth == len(gens):
            values = _extend(group, gens, images, combine, group.identity)
            if values is not None and len(set(values)) == group.order:
                found.append(Automorphism(tuple(values)))
            return
        span = set(subgroup_closure(group, images))
        for candidate in by_order[orders[gens[depth]]]:
            if candidate in span:
                continue
            trial = images + (candidate,)
            partial = _extend(group, gens[: depth + 1], trial, combine, group.identity)
            if partial is None:
                continue
            reached = [y for y in partial if y is not None]
            if len(set(reached)) != len(reached):
                continue
            search(trial)

    search(())
    found.sort(key=lambda a: a.images)
    logger.debug("%s has %d automorphisms", group, len(found))
    return tuple(found)


def automorphisms_bruteforce(group):
    """All bijections that respect the table; only sensible for tiny groups."""
    others = [x for x in range(group.order) if x != group.identity]
    found = []
    for arrangement in permutations(others):
        images = [0] * group.order
        images[group.identity] = group.identity
        for x, y in zip(others, arrangement):
            images[x] = y
        candidate = Automorphism(tuple(images))
        if candidate.is_automorphism(group):
            found.append(candidate)
    found.sort(key=lambda a: a.images)
    return tuple(found)


def epi_orbits_under_aut(group, *, auts=None, characters=None):
    """
    Orbits of Epi(G, C2) under chi -> chi o alpha^-1, each sorted, ordered by
    their least member.
    """
    auts = automorphisms(group) if auts is None else auts
    characters = homs_to_C2(group) if characters is None else characters
    epis = [c for c in characters if not c.is_trivial]
    inverses = [a.inverse() for a in auts]
    placed = set()
    orbits = []
    for chi in epis:
        if chi in placed:
            continue
        orbit = {chi.compose(a_inv) for a_inv in inverses}
        placed |= orbit
        orbits.append(tuple(sorted(orbit, key=lambda c: c.sort_key)))
    orbits.sort(key=lambda orbit: orbit[0].sort_key)
    return tuple(orbits)
