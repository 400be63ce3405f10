"""
The extended Nielsen-move action on marked generating vectors.

A marked vector (g, v) pairs a generating n-vector of G with a sign vector in
V_n = {-1, +1}^n. Each move is an automorphism phi of F_n given by the words
phi^-1(x_k); it sends (g, v) to the evaluation of those words in G and in C2.
Orbits under the move set (and, in weak mode, under Aut(G) applied
coordinatewise) are enumerated by breadth-first closure over packed states.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

import numpy as np

from .conf import resolve_cap
from .exceptions import CapExceeded, MoveError, NotGeneratingError
from .groups import generates
from .morphisms import automorphisms
from .words import evaluate, evaluate_signs, letter

logger = logging.getLogger(__name__)

EQUIVALENCE = "equivalence"
WEAK = "weak"
MODES = (EQUIVALENCE, WEAK)


class MoveKind(str, Enum):
    T = "T"  # invert coordinate i
    U = "U"  # invert i and multiply j by i^e on one side
    V = "V"  # swap i and j
    W = "W"  # cyclic shift (g_n, g_1, ..., g_{n-1})


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    i: int = 0
    j: int = 1
    side: str = "left"
    exponent: int = 1

    @classmethod
    def t(cls, i=0):
        return cls(MoveKind.T, i=i, j=i)

    @classmethod
    def u(cls, i=0, j=1, side="left", exponent=1):
        return cls(MoveKind.U, i=i, j=j, side=side, exponent=exponent)

    @classmethod
    def v(cls, i=0, j=1):
        return cls(MoveKind.V, i=i, j=j)

    @classmethod
    def w(cls):
        return cls(MoveKind.W, i=0, j=0)

    def __str__(self):
        if self.kind is MoveKind.T:
            return f"T({self.i + 1})"
        if self.kind is MoveKind.U:
            power = "" if self.exponent == 1 else "^-1"
            return f"U({self.i + 1}->{self.j + 1},{self.side}{power})"
        if self.kind is MoveKind.V:
            return f"V({self.i + 1},{self.j + 1})"
        return "W"

    def validate(self, n):
        if n < 1:
            raise MoveError(f"vectors must have length >= 1, got {n}")
        if self.kind is not MoveKind.T and n < 2:
            raise MoveError(f"move {self.kind.value} needs n >= 2")
        if not 0 <= self.i < n:
            raise MoveError(f"coordinate {self.i + 1} out of range for n={n}")
        if self.kind in (MoveKind.U, MoveKind.V):
            if not 0 <= self.j < n or self.j == self.i:
                raise MoveError(f"coordinates {self.i + 1},{self.j + 1} must be distinct")
        if self.kind is MoveKind.U:
            if self.side not in ("left", "right") or self.exponent not in (1, -1):
                raise MoveError(f"bad side/exponent {self.side}/{self.exponent}")

    def basis_words(self, n):
        """The words phi^-1(x_k); coordinate k of the image is their value."""
        self.validate(n)
        words = [letter(k) for k in range(n)]
        if self.kind is MoveKind.T:
            words[self.i] = letter(self.i, -1)
        elif self.kind is MoveKind.U:
            words[self.i] = letter(self.i, -1)
            power = letter(self.i, self.exponent)
            if self.side == "left":
                words[self.j] = power + letter(self.j)
            else:
                words[self.j] = letter(self.j) + power
        elif self.kind is MoveKind.V:
            words[self.i], words[self.j] = words[self.j], words[self.i]
        else:
            words = [letter(n - 1)] + [letter(k - 1) for k in range(1, n)]
        return tuple(words)


@dataclass(frozen=True)
class MarkedVector:
    g: tuple
    v: tuple

    @classmethod
    def unmarked(cls, g):
        return cls(tuple(g), (1,) * len(g))

    @property
    def n(self):
        return len(self.g)

    @property
    def is_all_ones(self):
        return all(s == 1 for s in self.v)


def check_marked(group, x, *, require_generating=True):
    if len(x.g) != len(x.v) or len(x.g) < 1:
        raise MoveError(f"g and v must have equal length >= 1, got {len(x.g)}/{len(x.v)}")
    group.check_elements(x.g)
    if any(s not in (1, -1) for s in x.v):
        raise MoveError(f"signs must be +1 or -1, got {x.v}")
    if require_generating and not generates(group, x.g):
        raise NotGeneratingError(f"{x.g} does not generate {group}")


def apply_move(group, move, x):
    """Image of x under one move, by evaluating the move's basis words."""
    check_marked(group, x, require_generating=False)
    words = move.basis_words(x.n)
    return MarkedVector(
        tuple(evaluate(group, w, x.g) for w in words),
        tuple(evaluate_signs(w, x.v) for w in words),
    )


def apply_moves(group, moves, x):
    for move in moves:
        x = apply_move(group, move, x)
    return x


def slide(i, j):
    """The handle slide x_i -> x_i x_j, as U followed by T."""
    return (Move.u(j, i, side="right"), Move.t(j))


def literal_generators(n):
    """The four literal moves t, u, v, w (only t when n = 1)."""
    if n == 1:
        return (Move.t(0),)
    return (Move.t(0), Move.u(0, 1), Move.v(0, 1), Move.w())


def generalized_moves(n):
    """Every basic move: inversions, U in all variants, transpositions, shift."""
    moves = [Move.t(i) for i in range(n)]
    if n == 1:
        return tuple(moves)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for side in ("left", "right"):
                for exponent in (1, -1):
                    moves.append(Move.u(i, j, side, exponent))
    moves.extend(Move.v(i, j) for i in range(n) for j in range(i + 1, n))
    moves.append(Move.w())
    return tuple(moves)


class StateCodec:
    """
    Packs (g, v) into one integer: g read as base-|G| digits, then one bit per
    sign with -1 as 1, first coordinate most significant. Integer order is
    therefore lexicographic order on (g, v) with +1 < -1.
    """

    def __init__(self, order, n, signed=True):
        self.order = order
        self.n = n
        self.bits = n if signed else 0
        self.sectors = 1 << self.bits
        self.g_space = order**n
        self.size = self.g_space * self.sectors

    def encode(self, g, v):
        code = 0
        for x in g:
            code = code * self.order + x
        for s in v[: self.bits]:
            code = (code << 1) | (s < 0)
        return code

    def decode(self, code):
        v = [1] * self.n
        for k in range(self.bits - 1, -1, -1):
            if code & 1:
                v[k] = -1
            code >>= 1
        g = [0] * self.n
        for k in range(self.n - 1, -1, -1):
            code, g[k] = divmod(code, self.order)
        return tuple(g), tuple(v)

    def decode_many(self, codes):
        """
        Decode an array of codes into two (len(codes), n) arrays: the element
        indices and the sign bits (1 for -1; all zero when unsigned).
        """
        rest = np.asarray(codes, dtype=np.int64)
        g = np.empty((rest.size, self.n), dtype=np.int64)
        bits = np.zeros((rest.size, self.n), dtype=np.int64)
        for k in range(self.bits - 1, -1, -1):
            bits[:, k] = rest & 1
            rest = rest >> 1
        for k in range(self.n - 1, -1, -1):
            rest, g[:, k] = np.divmod(rest, self.order)
        return g, bits

    def encode_many(self, g, bits):
        codes = np.zeros(len(g), dtype=np.int64)
        for k in range(self.n):
            codes = codes * self.order + g[:, k]
        for k in range(self.bits):
            codes = (codes << 1) | bits[:, k]
        return codes


def _compile(group, move, n):
    """
    The move as a vectorized map on (element indices, sign bits) arrays, as
    produced by StateCodec.decode_many. Agrees with apply_move row by row.
    """
    table = group.table
    inverses = np.asarray(group.inverses, dtype=np.int64)
    changes = []
    for k, word in enumerate(move.basis_words(n)):
        if word == letter(k):
            continue
        if len(word) > 2:
            raise MoveError(f"move {move} has a basis word longer than 2 letters")
        changes.append((k, word))

    def run(g, bits):
        g2 = g.copy()
        bits2 = bits.copy()
        for k, word in changes:
            (a, ea) = word[0]
            x = g[:, a] if ea > 0 else inverses[g[:, a]]
            s = bits[:, a]
            if len(word) == 2:
                (b, eb) = word[1]
                x = table[x, g[:, b] if eb > 0 else inverses[g[:, b]]]
                s = s ^ bits[:, b]
            g2[:, k] = x
            bits2[:, k] = s
        return g2, bits2

    return run


def _automorphism_step(automorphism):
    images = np.asarray(automorphism.images, dtype=np.int64)

    def run(g, bits):
        return images[g], bits

    return run


@dataclass
class Orbit:
    """One orbit; kind and character are filled in by the classifier."""

    representative: MarkedVector
    code: int
    size: int
    kind: str | None = None
    character: object = None
    members: tuple = ()


@dataclass
class OrbitPartition:
    group: object
    n: int
    mode: str
    orbits: list
    labels: np.ndarray = field(repr=False)
    codec: StateCodec = field(repr=False)

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    @property
    def total_states(self):
        return sum(o.size for o in self.orbits)

    def orbit_index(self, x):
        label = int(self.labels[self.codec.encode(x.g, x.v)])
        return None if label < 0 else label

    def orbit_containing(self, x):
        index = self.orbit_index(x)
        return None if index is None else self.orbits[index]


def check_state_space(group, n, state_cap, signed=True):
    if n < 1:
        raise MoveError(f"n must be >= 1, got {n}")
    codec = StateCodec(group.order, n, signed=signed)
    cap = resolve_cap("STATE_CAP", state_cap)
    if codec.size > cap:
        raise CapExceeded("state space", codec.size, cap)
    return codec


def _label_closure(codec, transitions, seed, labels, oid):
    """Frontier-at-a-time closure of ``seed``; marks members with ``oid``, returns the size."""
    labels[seed] = oid
    frontier = np.array([seed], dtype=np.int64)
    size = 0
    while frontier.size:
        size += frontier.size
        g, bits = codec.decode_many(frontier)
        images = np.unique(np.concatenate([codec.encode_many(*step(g, bits)) for step in transitions]))
        frontier = images[labels[images] < 0]
        labels[frontier] = oid
    return size


def _close_all(group, n, codec, moves):
    """Label every generating state with the index of its move orbit."""
    transitions = [_compile(group, m, n) for m in moves]
    labels = np.full(codec.size, -1, dtype=np.int32)
    orbits = []
    sectors = codec.sectors
    for g_code in range(codec.g_space):
        base = g_code * sectors
        if (labels[base : base + sectors] >= 0).all():
            continue
        g, _ = codec.decode(base)
        if not generates(group, g):
            continue
        for offset in np.flatnonzero(labels[base : base + sectors] < 0):
            seed = base + int(offset)
            if labels[seed] >= 0:
                continue
            # seeds are visited in increasing code order, so each seed is
            # the least member of its orbit
            oid = len(orbits)
            size = _label_closure(codec, transitions, seed, labels, oid)
            orbits.append(Orbit(MarkedVector(*codec.decode(seed)), seed, size))
    return orbits, labels


def coarsen_by_automorphisms(partition, auts=None):
    """
    Merge the equivalence orbits of ``partition`` into weak orbits.

    Aut(G) commutes with the moves, so one image of each representative
    decides which orbits fuse.
    """
    group = partition.group
    auts = automorphisms(group) if auts is None else auts
    codec = partition.codec
    parent = list(range(len(partition.orbits)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for index, orbit in enumerate(partition.orbits):
        rep = orbit.representative
        for alpha in auts:
            image = int(partition.labels[codec.encode(alpha.apply(rep.g), rep.v)])
            a, b = find(index), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)

    # roots are the smallest index, hence the least representative, of each class
    roots = sorted({find(i) for i in range(len(parent))})
    new_index = {root: k for k, root in enumerate(roots)}
    merged = [Orbit(partition.orbits[root].representative, partition.orbits[root].code, 0) for root in roots]
    mapping = np.empty(max(len(parent), 1), dtype=np.int32)
    for i, orbit in enumerate(partition.orbits):
        k = new_index[find(i)]
        mapping[i] = k
        merged[k].size += orbit.size
    labels = np.where(partition.labels >= 0, mapping[np.maximum(partition.labels, 0)], -1)
    logger.info("%s n=%d: %d weak orbits", group, partition.n, len(merged))
    return OrbitPartition(group, partition.n, WEAK, merged, labels.astype(np.int32), codec)


def enumerate_orbits(group, n, mode=EQUIVALENCE, *, state_cap=None, auts=None):
    """
    Partition all marked generating n-vectors into orbits.

    ``mode`` is "equivalence" (moves only) or "weak" (moves and Aut(G)).
    n below mu(G) gives an empty partition.
    """
    if mode not in MODES:
        raise MoveError(f"mode must be one of {MODES}, got {mode!r}")
    codec = check_state_space(group, n, state_cap)
    orbits, labels = _close_all(group, n, codec, generalized_moves(n))
    partition = OrbitPartition(group, n, EQUIVALENCE, orbits, labels, codec)
    logger.info(
        "%s n=%d: %d equivalence orbits over %d states",
        group, n, len(orbits), partition.total_states,
    )
    if mode == WEAK:
        partition = coarsen_by_automorphisms(partition, auts)
    return partition


def nielsen_classes(group, n, *, state_cap=None):
    """Nielsen classes E_n: the orbits inside the all-ones sign sector."""
    codec = check_state_space(group, n, state_cap, signed=False)
    # the full marked space must also fit, as for enumerate_orbits
    check_state_space(group, n, state_cap)
    orbits, labels = _close_all(group, n, codec, generalized_moves(n))
    logger.info("%s n=%d: %d Nielsen classes", group, n, len(orbits))
    return OrbitPartition(group, n, EQUIVALENCE, orbits, labels, codec)


def orbit_of(group, x, mode=EQUIVALENCE, *, state_cap=None, auts=None):
    """Closure of the single marked vector x, members in canonical order."""
    if mode not in MODES:
        raise MoveError(f"mode must be one of {MODES}, got {mode!r}")
    check_marked(group, x)
    codec = check_state_space(group, x.n, state_cap)
    transitions = [_compile(group, m, x.n) for m in generalized_moves(x.n)]
    if mode == WEAK:
        auts = automorphisms(group) if auts is None else auts
        transitions.extend(_automorphism_step(a) for a in auts)

    labels = np.full(codec.size, -1, dtype=np.int32)
    size = _label_closure(codec, transitions, codec.encode(x.g, x.v), labels, 0)
    codes = np.flatnonzero(labels == 0)
    members = tuple(MarkedVector(*codec.decode(int(code))) for code in codes)
    return Orbit(members[0], int(codes[0]), size, members=members)


def dihedral_nielsen_representatives(group):
    """
    Minimal-genus Nielsen class representatives (s1, (s1 s2)^m) of D_r,
    1 <= m < r/2, gcd(m, r) = 1.
    """
    if group.spec.family != "dihedral":
        raise MoveError(f"{group} is not a dihedral group")
    (r,) = group.spec.params
    s1, s2 = group.generators
    rho = group.mul(s1, s2)
    return tuple(
        MarkedVector.unmarked((s1, group.power(rho, m)))
        for m in range(1, (r + 1) // 2)
        if gcd(m, r) == 1
    )
