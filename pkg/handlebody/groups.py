"""
Concrete finite groups stored as dense multiplication tables.

Elements are the indices ``0..order-1`` with the identity at index 0. Groups
are built from a small descriptor language shared by the CLI and the HTTP
API::

    cyclic:K            C_K
    abelian:D1,D2,...   C_D1 + C_D2 + ...
    dihedral:R          dihedral group of order 2R, generated by reflections s1, s2
    quaternion          Q_8 with elements 1, -1, i, -i, j, -j, k, -k
    perm:(1 2 3),(1 2)  closure of the listed permutations (1-based points)
"""

from __future__ import annotations

import logging
import re
import string
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import groupby

import numpy as np
from sympy import factorint, multiplicity

from .conf import get_setting, resolve_cap
from .exceptions import CapExceeded, DescriptorError, InvalidGroupError

logger = logging.getLogger(__name__)

FAMILIES = ("cyclic", "abelian", "dihedral", "quaternion", "perm")

_PERM_GENERATOR = re.compile(r"(?:\(\s*\d*(?:\s+\d+)*\s*\))+")


@dataclass(frozen=True)
class GroupDescriptor:
    family: str
    params: tuple = ()

    def __str__(self):
        if self.family == "quaternion":
            return "quaternion"
        if self.family == "perm":
            return "perm:" + ",".join(_format_permutation(p) for p in self.params)
        return f"{self.family}:" + ",".join(str(p) for p in self.params)


def parse_descriptor(text):
    """Parse the descriptor mini-language into a GroupDescriptor."""
    if isinstance(text, GroupDescriptor):
        return text
    raw = (text or "").strip()
    family, _, body = raw.partition(":")
    family = family.strip().lower()
    body = body.strip()

    if family == "quaternion":
        if body:
            raise DescriptorError("quaternion takes no parameters")
        return GroupDescriptor("quaternion")

    if family in ("cyclic", "dihedral"):
        value = _parse_int(body, family)
        if family == "cyclic" and value < 2:
            raise DescriptorError(f"cyclic order must be >= 2, got {value}")
        if family == "dihedral" and value < 3:
            raise DescriptorError(f"dihedral r must be >= 3, got {value}")
        return GroupDescriptor(family, (value,))

    if family == "abelian":
        if not body:
            raise DescriptorError("abelian needs at least one cyclic factor")
        factors = tuple(_parse_int(part, family) for part in body.split(","))
        if any(d < 2 for d in factors):
            raise DescriptorError(f"abelian factors must be >= 2, got {body}")
        return GroupDescriptor("abelian", factors)

    if family == "perm":
        return GroupDescriptor("perm", _parse_permutations(body))

    raise DescriptorError(
        f"unknown group family {family!r}; expected one of {', '.join(FAMILIES)}"
    )


def _parse_int(body, family):
    try:
        return int(body.strip())
    except ValueError:
        raise DescriptorError(f"{family} expects an integer, got {body!r}") from None


def _parse_permutations(body):
    generators = [part for part in re.split(r"(?<=\))\s*,\s*(?=\()", body) if part]
    if not generators or not all(_PERM_GENERATOR.fullmatch(g) for g in generators):
        raise DescriptorError(f"malformed permutation list {body!r}")

    cycle_lists = []
    degree = 1
    for generator in generators:
        cycles = []
        for cycle_text in re.findall(r"\(([^()]*)\)", generator):
            points = [int(p) for p in cycle_text.split()]
            if any(p < 1 for p in points):
                raise DescriptorError("permutation points are 1-based")
            if len(set(points)) != len(points):
                raise DescriptorError(f"repeated point in cycle ({cycle_text})")
            if points:
                degree = max(degree, max(points))
            cycles.append(points)
        cycle_lists.append(cycles)

    perms = []
    for cycles in cycle_lists:
        images = list(range(degree))
        # cycles compose right to left, as written
        for points in reversed(cycles):
            step = list(range(degree))
            for a, b in zip(points, points[1:] + points[:1]):
                step[a - 1] = b - 1
            images = [step[images[x]] for x in range(degree)]
        perms.append(tuple(images))
    if all(p == tuple(range(degree)) for p in perms):
        raise DescriptorError("permutation generators give the trivial group")
    return tuple(perms)


def _format_permutation(images):
    seen = set()
    cycles = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = images[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = images[x]
        cycles.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    A finite group with a total multiplication table.

    ``table[a, b]`` is the index of ``a*b``. ``generators`` are the canonical
    generators named by the descriptor (s, s1/s2, i/j, a/b/...).
    """

    spec: GroupDescriptor
    table: np.ndarray
    names: tuple
    generators: tuple
    identity: int = 0

    def __str__(self):
        return str(self.spec)

    @property
    def order(self):
        return len(self.names)

    @cached_property
    def rows(self):
        # plain nested lists; indexing them beats numpy scalars in tight loops
        return self.table.tolist()

    @cached_property
    def inverses(self):
        return tuple(int(np.flatnonzero(row == self.identity)[0]) for row in self.table)

    @cached_property
    def name_index(self):
        return {name: idx for idx, name in enumerate(self.names)}

    @cached_property
    def element_orders(self):
        rows = self.rows
        orders = []
        for x in range(self.order):
            power, k = x, 1
            while power != self.identity:
                power = rows[power][x]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self):
        return int(np.lcm.reduce(np.array(self.element_orders, dtype=np.int64)))

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def minimal_generators(self):
        return _search_minimal_generators(self)

    def mul(self, a, b):
        return self.rows[a][b]

    def inv(self, a):
        return self.inverses[a]

    def power(self, a, k):
        result = self.identity
        base = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            result = self.rows[result][base]
        return result

    def product(self, elements):
        result = self.identity
        for x in elements:
            result = self.rows[result][x]
        return result

    def index_of(self, name):
        try:
            return self.name_index[name.strip()]
        except KeyError:
            raise DescriptorError(f"unknown element {name!r} in {self.spec}") from None

    def check_elements(self, elements):
        for x in elements:
            if not (isinstance(x, (int, np.integer)) and 0 <= x < self.order):
                raise DescriptorError(f"element index {x!r} out of range for {self.spec}")


def build_group(spec, *, order_cap=None):
    """Build the FiniteGroup named by a descriptor (text or GroupDescriptor)."""
    descriptor = parse_descriptor(spec)
    cap = resolve_cap("ORDER_CAP", order_cap)
    group = _BUILDERS[descriptor.family](descriptor, cap)
    if get_setting("VALIDATE_GROUPS"):
        validate_group(group)
    logger.info("built %s of order %d", descriptor, group.order)
    return group


def validate_group(group):
    """Exhaustively check closure, identity, inverses, associativity and names."""
    table = np.asarray(group.table)
    n = group.order
    if table.shape != (n, n):
        raise InvalidGroupError(f"table shape {table.shape} does not match {n} names")
    if table.min() < 0 or table.max() >= n:
        raise InvalidGroupError("table entries outside the element range")
    span = np.arange(n)
    e = group.identity
    if not (np.array_equal(table[e], span) and np.array_equal(table[:, e], span)):
        raise InvalidGroupError("identity is not two-sided")
    if not np.all((table == e).sum(axis=1) == 1):
        raise InvalidGroupError("some element has no unique inverse")
    inverses = np.array(group.inverses)
    if not np.all(table[inverses, span] == e):
        raise InvalidGroupError("left and right inverses differ")
    left = table[table]  # left[a, b, c] = (ab)c
    right = table[span[:, None, None], table[None, :, :]]  # a(bc)
    if not np.array_equal(left, right):
        raise InvalidGroupError("multiplication is not associative")
    if len(set(group.names)) != n:
        raise InvalidGroupError("element names are not unique")


def subgroup_closure(group, gens):
    """Elements of the subgroup generated by ``gens``, in discovery order."""
    rows = group.rows
    gens = list(dict.fromkeys(gens))
    seen = {group.identity}
    found = [group.identity]
    queue = deque(found)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = rows[x][g]
            if y not in seen:
                seen.add(y)
                found.append(y)
                queue.append(y)
    return found


def generates(group, g):
    group.check_elements(g)
    return len(subgroup_closure(group, g)) == group.order


def mu(group):
    """Minimum number of generators; 0 only for the trivial group."""
    return len(group.minimal_generators)


def _search_minimal_generators(group):
    if group.order == 1:
        return ()
    canonical = group.generators
    # level k holds every subgroup generated by k elements, keyed by its element set
    level = {frozenset([group.identity]): ()}
    for size in range(1, group.order):
        next_level = {}
        for members, gens in level.items():
            for c in range(group.order):
                if c in members:
                    continue
                candidate = gens + (c,)
                closure = frozenset(subgroup_closure(group, candidate))
                if closure not in next_level:
                    next_level[closure] = candidate
        full = frozenset(range(group.order))
        if full in next_level:
            if len(canonical) == size and generates(group, canonical):
                return tuple(canonical)
            return next_level[full]
        level = next_level
    raise InvalidGroupError("generator search did not terminate")


def merge_to_invariant_factors(cyclic_orders):
    """
    Invariant factors d1 >= d2 >= ... (d_{i+1} | d_i) of a direct sum of cyclics,
    via the elementary divisors of each factor.
    """
    by_prime = {}
    for d in cyclic_orders:
        for p, e in factorint(int(d)).items():
            by_prime.setdefault(int(p), []).append(int(e))
    return _combine_elementary_divisors(by_prime)


def _combine_elementary_divisors(by_prime):
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for p, exponents in by_prime.items():
        for i, e in enumerate(sorted(exponents, reverse=True)):
            factors[i] *= p**e
    return [f for f in factors if f > 1]


def invariant_factors(group):
    """Invariant factors of an abelian group, read off its element orders."""
    if group.spec.family in ("cyclic", "abelian"):
        return merge_to_invariant_factors(group.spec.params)
    by_prime = {}
    orders = group.element_orders
    for p in factorint(group.order):
        p = int(p)
        # rank of the p^k-torsion: |G[p^k]| = p^(number of divisors with exponent >= 1..k)
        previous, k, counts = 0, 1, []
        while True:
            torsion = sum(1 for o in orders if (p**k) % o == 0)
            logp = multiplicity(p, torsion)
            if logp == previous:
                break
            counts.append(logp - previous)
            previous, k = logp, k + 1
        # counts[k-1] = number of cyclic p-parts of exponent >= k
        exponents = []
        for k, at_least in enumerate(counts, start=1):
            following = counts[k] if k < len(counts) else 0
            exponents.extend([k] * (at_least - following))
        by_prime[p] = exponents
    return _combine_elementary_divisors(by_prime)


def _from_closure(descriptor, identity, generators, mul, cap, namer=None, labels=None):
    """Close ``generators`` under ``mul`` and tabulate the result."""
    elements = [identity]
    index = {identity: 0}
    words = [()]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for gi, g in enumerate(generators):
            y = mul(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise CapExceeded("group order", f"> {cap}", cap)
                index[y] = len(elements)
                elements.append(y)
                words.append(words[index[x]] + (gi,))
                queue.append(y)

    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            table[a, b] = index[mul(x, y)]
    table.setflags(write=False)

    if namer is not None:
        names = tuple(namer(x) for x in elements)
    else:
        names = tuple(_word_name(w, labels) for w in words)
    return FiniteGroup(
        spec=descriptor,
        table=table,
        names=names,
        generators=tuple(index[g] for g in generators),
    )


def _word_name(word, labels):
    if not word:
        return "1"
    parts = []
    for gen, run in groupby(word):
        count = len(list(run))
        parts.append(labels[gen] if count == 1 else f"{labels[gen]}^{count}")
    return "*".join(parts)


def _power_name(label, k):
    return label if k == 1 else f"{label}^{k}"


def _build_cyclic(descriptor, cap):
    (k,) = descriptor.params
    return _from_closure(
        descriptor,
        0,
        [1 % k],
        lambda a, b: (a + b) % k,
        cap,
        namer=lambda a: "1" if a == 0 else _power_name("s", a),
    )


def _build_abelian(descriptor, cap):
    orders = descriptor.params
    m = len(orders)

    def mul(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, orders))

    def namer(a):
        parts = [_power_name(f"s{i + 1}", x) for i, x in enumerate(a) if x]
        return "*".join(parts) or "1"

    gens = [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    return _from_closure(descriptor, (0,) * m, gens, mul, cap, namer=namer)


def _build_dihedral(descriptor, cap):
    (r,) = descriptor.params

    # (f, k) stands for s1^f * rho^k with rho = s1*s2
    def mul(a, b):
        f1, k1 = a
        f2, k2 = b
        return (f1 ^ f2, ((-k1 if f2 else k1) + k2) % r)

    return _from_closure(
        descriptor, (0, 0), [(1, 0), (1, 1)], mul, cap, labels=("s1", "s2")
    )


_UNITS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}  # fmt: skip


def _build_quaternion(descriptor, cap):
    def mul(a, b):
        sign, unit = _UNITS[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    def namer(a):
        sign, unit = a
        if unit == "1":
            return "1" if sign > 0 else "-1"
        return unit if sign > 0 else f"-{unit}"

    return _from_closure(
        descriptor, (1, "1"), [(1, "i"), (1, "j")], mul, cap, namer=namer
    )


def _build_perm(descriptor, cap):
    perms = descriptor.params
    degree = len(perms[0])
    labels = [
        string.ascii_lowercase[i] if i < 26 else f"g{i + 1}" for i in range(len(perms))
    ]

    # apply a first, then b
    def mul(a, b):
        return tuple(b[a[x]] for x in range(degree))

    return _from_closure(
        descriptor, tuple(range(degree)), list(perms), mul, cap, labels=labels
    )


_BUILDERS = {
    "cyclic": _build_cyclic,
    "abelian": _build_abelian,
    "dihedral": _build_dihedral,
    "quaternion": _build_quaternion,
    "perm": _build_perm,
}
