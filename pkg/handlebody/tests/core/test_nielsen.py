"""
Tests for the marked Nielsen-move engine and orbit enumeration.

Exhaustive checks run on C2 with n = 2; the sampled checks draw marked
generating vectors at random from groups of order at most 16.
"""

from dataclasses import astuple
from itertools import product

import pytest

from handlebody.exceptions import CapExceeded, MoveError, NotGeneratingError
from handlebody.groups import generates
from handlebody.morphisms import automorphisms, match_character
from handlebody.nielsen import (
    EQUIVALENCE,
    WEAK,
    MarkedVector,
    Move,
    MoveKind,
    StateCodec,
    _compile,
    apply_move,
    apply_moves,
    coarsen_by_automorphisms,
    dihedral_nielsen_representatives,
    enumerate_orbits,
    generalized_moves,
    nielsen_classes,
    orbit_of,
    literal_generators,
    slide,
)
from handlebody.words import free_reduce, inverse, letter

SAMPLED_GROUPS = ["cyclic:6", "abelian:4,2", "dihedral:4", "dihedral:5", "quaternion", "perm:(1 2 3),(1 2)"]


def marked_vectors(group, n, generating=True):
    for g in product(range(group.order), repeat=n):
        if generating and not generates(group, g):
            continue
        for v in product((1, -1), repeat=n):
            yield MarkedVector(g, v)


def sample_marked(group, n, rng):
    while True:
        g = tuple(int(x) for x in rng.integers(0, group.order, size=n))
        if generates(group, g):
            v = tuple(int(s) for s in rng.choice([1, -1], size=n))
            return MarkedVector(g, v)


def forward_images(move, n):
    """phi(x_k) for each k, written out from the move's definition."""
    images = [letter(k) for k in range(n)]
    if move.kind is MoveKind.T:
        images[move.i] = letter(move.i, -1)
    elif move.kind is MoveKind.U:
        images[move.i] = letter(move.i, -1)
        power = letter(move.i, move.exponent)
        images[move.j] = power + letter(move.j) if move.side == "left" else letter(move.j) + power
    elif move.kind is MoveKind.V:
        images[move.i], images[move.j] = images[move.j], images[move.i]
    else:
        images = [letter((k + 1) % n) for k in range(n)]
    return images


class TestMoves:
    """Tests for single moves and their v-part."""

    def test_t_inverts_first_entry(self, d3):
        """Test T inverts g1 and leaves the signs alone."""
        s1, s2 = d3.generators
        rho = d3.mul(s1, s2)
        x = MarkedVector((rho, s2), (-1, 1))
        assert apply_move(d3, Move.t(0), x) == MarkedVector((d3.inv(rho), s2), (-1, 1))

    def test_slide_formula(self, quaternion):
        """Test the slide x1 -> x1 x2 multiplies both the element and the sign."""
        i, j = quaternion.generators
        for v1, v2 in product((1, -1), repeat=2):
            x = MarkedVector((i, j), (v1, v2))
            image = apply_moves(quaternion, slide(0, 1), x)
            assert image == MarkedVector((quaternion.mul(i, j), j), (v1 * v2, v2))

    def test_literal_u(self, quaternion):
        """Test u(g1, g2) = (g1^-1, g1 g2) with all-ones signs."""
        i, j = quaternion.generators
        x = MarkedVector.unmarked((i, j))
        image = apply_move(quaternion, Move.u(0, 1), x)
        assert image == MarkedVector((quaternion.inv(i), quaternion.mul(i, j)), (1, 1))

    def test_v_and_w(self, group):
        """Test V swaps two coordinates and W shifts cyclically."""
        c5 = group("cyclic:5")
        x = MarkedVector((1, 2, 3), (1, -1, 1))
        assert apply_move(c5, Move.v(0, 2), x) == MarkedVector((3, 2, 1), (1, -1, 1))
        assert apply_move(c5, Move.w(), x) == MarkedVector((3, 1, 2), (1, 1, -1))

    @pytest.mark.parametrize(
        "move",
        [Move.u(0, 1), Move.v(0, 1), Move.w()],
    )
    def test_only_t_at_n_equals_one(self, c2, move):
        """Test U, V and W are refused on vectors of length 1."""
        with pytest.raises(MoveError):
            apply_move(c2, move, MarkedVector((1,), (1,)))

    @pytest.mark.parametrize(
        "move",
        [Move.t(2), Move.u(0, 0), Move.v(1, 1), Move.u(0, 1, side="up"), Move.u(0, 1, exponent=2)],
    )
    def test_bad_parameters(self, c2, move):
        """Test out-of-range or repeated coordinates raise MoveError."""
        with pytest.raises(MoveError):
            apply_move(c2, move, MarkedVector((1, 1), (1, 1)))

    def test_generalized_move_count(self):
        """Test the generalized move set size for n = 1, 2, 3."""
        assert len(generalized_moves(1)) == 1
        assert len(generalized_moves(2)) == 2 + 8 + 1 + 1
        assert len(generalized_moves(3)) == 3 + 24 + 3 + 1

    def test_exhaustive_on_c2(self, c2):
        """Test involutions, W^n = id and generation preservation on every marked vector of C2."""
        for x in marked_vectors(c2, 2):
            for move in generalized_moves(2):
                image = apply_move(c2, move, x)
                assert generates(c2, image.g)
                if move.kind.value in "TUV":
                    assert apply_move(c2, move, image) == x
            assert apply_moves(c2, [Move.w()] * 2, x) == x

    @pytest.mark.slow
    @pytest.mark.parametrize("descriptor", SAMPLED_GROUPS)
    def test_sampled_properties(self, group, rng, descriptor):
        """Test involutions, W^n and generation on sampled vectors."""
        built = group(descriptor)
        for _ in range(2000):
            n = int(rng.integers(2, 4))
            x = sample_marked(built, n, rng)
            for move in generalized_moves(n):
                image = apply_move(built, move, x)
                assert generates(built, image.g)
                if move.kind.value in "TUV":
                    assert apply_move(built, move, image) == x
            assert apply_moves(built, [Move.w()] * n, x) == x

    def test_all_ones_sector_is_fixed(self, quaternion):
        """Test no move takes an all-ones vector out of the all-ones sector."""
        for x in marked_vectors(quaternion, 2):
            if not x.is_all_ones:
                continue
            for move in generalized_moves(2):
                assert apply_move(quaternion, move, x).is_all_ones

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_basis_words_invert_forward_images(self, n):
        """Test substituting the forward images into each basis word gives back x_k."""
        for move in generalized_moves(n):
            forward = forward_images(move, n)
            for k, word in enumerate(move.basis_words(n)):
                image = ()
                for a, e in word:
                    image += forward[a] if e > 0 else inverse(forward[a])
                assert free_reduce(image) == letter(k), f"{move} at x_{k + 1}"

    @pytest.mark.slow
    @pytest.mark.parametrize("descriptor", SAMPLED_GROUPS)
    def test_compiled_moves_agree_with_apply_move(self, group, rng, descriptor):
        """Test the batched move transitions match apply_move on sampled vectors."""
        built = group(descriptor)
        for n in (2, 3):
            codec = StateCodec(built.order, n)
            batch = [sample_marked(built, n, rng) for _ in range(300)]
            g, bits = codec.decode_many([codec.encode(x.g, x.v) for x in batch])
            for move in generalized_moves(n):
                codes = codec.encode_many(*_compile(built, move, n)(g, bits))
                expected = [codec.encode(*astuple(apply_move(built, move, x))) for x in batch]
                assert codes.tolist() == expected, str(move)


class TestStateCodec:
    """Tests for the packed state encoding."""

    def test_order_is_lexicographic(self):
        """Test integer order matches (g, v) order with +1 before -1."""
        codec = StateCodec(3, 2)
        states = [(g, v) for g in product(range(3), repeat=2) for v in product((1, -1), repeat=2)]
        codes = [codec.encode(g, v) for g, v in states]
        assert codes == sorted(codes)
        assert codes == list(range(codec.size))
        assert [codec.decode(code) for code in codes] == states

    @pytest.mark.parametrize("signed", [True, False])
    def test_batched_codec_matches_scalar(self, signed):
        """Test decode_many and encode_many agree with the scalar codec."""
        codec = StateCodec(5, 3, signed=signed)
        codes = list(range(0, codec.size, 7))
        g, bits = codec.decode_many(codes)
        for row, code in enumerate(codes):
            elements, signs = codec.decode(code)
            assert tuple(g[row].tolist()) == elements
            assert tuple(1 - 2 * b for b in bits[row].tolist()) == signs
        assert codec.encode_many(g, bits).tolist() == codes


class TestEnumerateOrbits:
    """Tests for the orbit partition."""

    def test_c2_pairs(self, c2):
        """Test C2 at n = 2 has 3 orbits over its 12 marked generating vectors."""
        partition = enumerate_orbits(c2, 2)
        assert len(partition) == 3
        assert partition.total_states == 12

    def test_quaternion_pairs(self, quaternion):
        """Test Q8 at n = 2 has 4 orbits."""
        assert len(enumerate_orbits(quaternion, 2)) == 4

    def test_d3_pairs(self, d3):
        """Test D3 at n = 2 has 3 orbits."""
        assert len(enumerate_orbits(d3, 2)) == 3

    def test_below_mu_is_empty(self, quaternion):
        """Test n < mu(G) gives an empty partition rather than an error."""
        partition = enumerate_orbits(quaternion, 1)
        assert len(partition) == 0
        assert partition.total_states == 0

    def test_state_cap(self, quaternion):
        """Test exceeding the state cap is an error, never a truncation."""
        with pytest.raises(CapExceeded):
            enumerate_orbits(quaternion, 2, state_cap=255)

    def test_bad_mode(self, c2):
        """Test an unknown mode is refused."""
        with pytest.raises(MoveError):
            enumerate_orbits(c2, 2, mode="strong")

    @pytest.mark.parametrize("descriptor, n", [("cyclic:2", 2), ("dihedral:3", 2), ("quaternion", 2), ("abelian:2,2", 3)])
    def test_soundness(self, group, descriptor, n):
        """Test orbits are closed under every move and their seeds are least members."""
        built = group(descriptor)
        partition = enumerate_orbits(built, n)
        members = {}
        for x in marked_vectors(built, n):
            index = partition.orbit_index(x)
            assert index is not None
            members.setdefault(index, []).append(x)
            for move in generalized_moves(n):
                assert partition.orbit_index(apply_move(built, move, x)) == index
        for index, orbit in enumerate(partition.orbits):
            assert len(members[index]) == orbit.size
            assert orbit.representative == min(members[index], key=lambda y: partition.codec.encode(y.g, y.v))

    @pytest.mark.parametrize("descriptor, n", [("dihedral:3", 2), ("quaternion", 2), ("abelian:4,2", 2)])
    def test_character_is_orbit_invariant(self, group, descriptor, n):
        """Test every member of an orbit matches the same character (or none)."""
        built = group(descriptor)
        partition = enumerate_orbits(built, n)
        seen = {}
        for x in marked_vectors(built, n):
            character = match_character(built, x.g, x.v)
            index = partition.orbit_index(x)
            assert seen.setdefault(index, character) == character

    @pytest.mark.parametrize("descriptor, n", [("dihedral:4", 2), ("quaternion", 2), ("abelian:4,2", 2)])
    def test_weak_coarsens_equivalence(self, group, descriptor, n):
        """Test each weak orbit is a union of equivalence orbits and is Aut(G)-closed."""
        built = group(descriptor)
        strong = enumerate_orbits(built, n)
        weak = enumerate_orbits(built, n, WEAK)
        assert len(weak) <= len(strong)
        assert weak.total_states == strong.total_states
        image = {}
        for x in marked_vectors(built, n):
            assert image.setdefault(strong.orbit_index(x), weak.orbit_index(x)) == weak.orbit_index(x)
        for alpha in automorphisms(built):
            for x in marked_vectors(built, n):
                y = MarkedVector(alpha.apply(x.g), x.v)
                assert weak.orbit_index(y) == weak.orbit_index(x)

    @pytest.mark.parametrize("descriptor, n", [("dihedral:4", 2), ("quaternion", 2), ("abelian:2,2", 3)])
    def test_coarsening_matches_weak_enumeration(self, group, descriptor, n):
        """Test coarsening an existing partition gives the weak partition."""
        built = group(descriptor)
        strong = enumerate_orbits(built, n)
        coarse = coarsen_by_automorphisms(strong)
        weak = enumerate_orbits(built, n, WEAK)
        assert coarse.mode == WEAK
        assert [(o.code, o.size) for o in coarse.orbits] == [(o.code, o.size) for o in weak.orbits]
        assert (coarse.labels == weak.labels).all()
        # the equivalence partition is left alone
        assert strong.mode == EQUIVALENCE

    @pytest.mark.slow
    @pytest.mark.parametrize("descriptor", ["dihedral:8", "abelian:4,4"])
    def test_sampled_orbit_invariants(self, group, rng, descriptor):
        """Test move closure, character invariance and weak coarsening on sampled order-16 vectors."""
        built = group(descriptor)
        strong = enumerate_orbits(built, 3)
        weak = coarsen_by_automorphisms(strong)
        auts = automorphisms(built)
        characters = {}
        weak_of = {}
        for _ in range(500):
            x = sample_marked(built, 3, rng)
            index = strong.orbit_index(x)
            assert index is not None
            character = match_character(built, x.g, x.v)
            assert characters.setdefault(index, character) == character
            assert weak_of.setdefault(index, weak.orbit_index(x)) == weak.orbit_index(x)
            move = generalized_moves(3)[int(rng.integers(len(generalized_moves(3))))]
            assert strong.orbit_index(apply_move(built, move, x)) == index
            alpha = auts[int(rng.integers(len(auts)))]
            assert weak.orbit_index(MarkedVector(alpha.apply(x.g), x.v)) == weak.orbit_index(x)

    def test_literal_generators_give_same_orbits(self, group):
        """Test closure under t, u, v, w alone reproduces the generalized partition."""
        for descriptor in ("dihedral:3", "quaternion", "abelian:4,2"):
            built = group(descriptor)
            partition = enumerate_orbits(built, 2)
            for orbit in partition.orbits:
                # breadth-first closure under the four literal moves
                frontier = [orbit.representative]
                seen = {orbit.representative}
                while frontier:
                    x = frontier.pop()
                    for move in literal_generators(2):
                        y = apply_move(built, move, x)
                        if y not in seen:
                            seen.add(y)
                            frontier.append(y)
                assert len(seen) == orbit.size

    def test_conjugation_stays_in_orbit(self, d3):
        """Test (h g h^-1, v) lies in the orbit of (g, v) for every h."""
        partition = enumerate_orbits(d3, 2)
        for x in marked_vectors(d3, 2):
            for h in range(d3.order):
                conjugate = tuple(d3.product([h, gi, d3.inv(h)]) for gi in x.g)
                assert partition.orbit_index(MarkedVector(conjugate, x.v)) == partition.orbit_index(x)


class TestNielsenClasses:
    """Tests for the Nielsen classes E_n."""

    def test_d5_pairs(self, group):
        """Test D5 has two Nielsen classes of generating pairs, matching the reference list."""
        d5 = group("dihedral:5")
        classes = nielsen_classes(d5, 2)
        assert len(classes) == 2
        references = dihedral_nielsen_representatives(d5)
        assert len(references) == 2
        partition = enumerate_orbits(d5, 2)
        assert len({partition.orbit_index(x) for x in references}) == 2

    def test_quaternion_triples(self, quaternion):
        """Test all generating triples of Q8 are Nielsen equivalent."""
        assert len(nielsen_classes(quaternion, 3)) == 1

    def test_c5_single_entries(self, group):
        """Test C5 at n = 1 splits into {s, s^4} and {s^2, s^3}."""
        c5 = group("cyclic:5")
        classes = nielsen_classes(c5, 1)
        assert len(classes) == 2
        names = sorted(
            sorted(c5.names[x.g[0]] for x in orbit_of(c5, orbit.representative).members)
            for orbit in classes
        )
        assert names == [["s", "s^4"], ["s^2", "s^3"]]

    def test_all_ones_representatives(self, d3):
        """Test Nielsen class representatives carry all-ones signs."""
        for orbit in nielsen_classes(d3, 2):
            assert orbit.representative.is_all_ones


class TestOrbitOf:
    """Tests for single-orbit closure."""

    def test_c2_all_ones(self, c2):
        """Test the orbit of ((s, s), (+, +)) holds all three generating pairs."""
        s = c2.index_of("s")
        orbit = orbit_of(c2, MarkedVector((s, s), (1, 1)))
        assert orbit.size == 3
        assert {x.g for x in orbit.members} == {(0, s), (s, 0), (s, s)}

    def test_c3_single(self, group):
        """Test the orbit of ((s), (+)) at n = 1 is {s, s^2}."""
        c3 = group("cyclic:3")
        orbit = orbit_of(c3, MarkedVector((1,), (1,)))
        assert orbit.members == (MarkedVector((1,), (1,)), MarkedVector((2,), (1,)))

    def test_d3_nonorientable_pair(self, d3):
        """Test ((s1, s2), (-, +)) and ((s1, s1 s2), (-, -)) share an orbit, one slide apart."""
        s1, s2 = d3.generators
        first = orbit_of(d3, MarkedVector((s1, s2), (-1, 1)))
        second = orbit_of(d3, MarkedVector((s1, d3.mul(s1, s2)), (-1, -1)))
        assert first.members == second.members

    def test_d3_reflection_pair_is_orientable(self, d3):
        """Test ((s1, s2), (-, -)) matches the sign character, so it is not in the nonorientable orbit."""
        s1, s2 = d3.generators
        reflections = orbit_of(d3, MarkedVector((s1, s2), (-1, -1)))
        nonorientable = orbit_of(d3, MarkedVector((s1, d3.mul(s1, s2)), (-1, -1)))
        assert reflections.members != nonorientable.members
        assert match_character(d3, (s1, s2), (-1, -1)) is not None

    @pytest.mark.parametrize("mode", [EQUIVALENCE, WEAK])
    def test_agrees_with_enumeration(self, quaternion, mode):
        """Test single-orbit closure reproduces the enumerated orbit."""
        partition = enumerate_orbits(quaternion, 2, mode)
        for orbit in partition.orbits:
            single = orbit_of(quaternion, orbit.representative, mode)
            assert single.size == orbit.size
            assert single.representative == orbit.representative

    def test_requires_generating_vector(self, d3):
        """Test a non-generating vector is refused."""
        s1, _ = d3.generators
        with pytest.raises(NotGeneratingError):
            orbit_of(d3, MarkedVector((s1, s1), (1, 1)))
