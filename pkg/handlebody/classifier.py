"""
Classification of free G-actions on handlebodies of genus 1 + |G|(n-1).

Orbits of marked generating vectors are tagged orientation-preserving,
orientation-reversing or nonorientable by matching their signs against the
characters G -> C2, then counted per kind and per weak-equivalence class.
Closed forms (abelian groups, genus spectra) live here too, as cross-checks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product

from sympy import totient

from .covering import covering_genus, schreier_graph
from .exceptions import ConsistencyError, NotAbelianError
from .groups import generates, invariant_factors, mu
from .morphisms import automorphisms, epi_orbits_under_aut, h1_rank, homs_to_C2, match_character
from .nielsen import (
    MarkedVector,
    check_state_space,
    coarsen_by_automorphisms,
    enumerate_orbits,
    nielsen_classes,
)

logger = logging.getLogger(__name__)

ORIENTATION_PRESERVING = "orientation_preserving"
ORIENTATION_REVERSING = "orientation_reversing"
NONORIENTABLE = "nonorientable"
KINDS = (ORIENTATION_PRESERVING, ORIENTATION_REVERSING, NONORIENTABLE)

ENUMERATION = "enumeration"
FORMULA = "formula"


@dataclass(frozen=True)
class ActionClass:
    representative: MarkedVector
    kind: str
    character: object
    orbit_size: int


@dataclass
class ClassificationReport:
    group: str
    order: int
    n: int
    genus: int
    mu: int
    h1_rank: int
    op_classes: int = 0
    or_classes: int = 0
    nonor_classes: int = 0
    op_weak: int = 0
    or_weak: int = 0
    nonor_weak: int = 0
    nielsen_classes: int | None = None
    epi_orbits: int | None = None
    source: str = ENUMERATION
    classes: list = field(default_factory=list)
    weak_classes: list = field(default_factory=list)

    @property
    def orientable_classes(self):
        return self.op_classes + self.or_classes


COUNT_FIELDS = (
    "genus",
    "mu",
    "h1_rank",
    "op_classes",
    "or_classes",
    "nonor_classes",
    "op_weak",
    "or_weak",
    "nonor_weak",
    "nielsen_classes",
    "epi_orbits",
)


@dataclass
class GenusSpectrum:
    group: str
    bound: int
    orientable_op: set
    orientable_or: set
    nonorientable: set


@dataclass(frozen=True)
class OracleRow:
    representative: MarkedVector
    algebraic: str
    covering_orientable: bool
    cycle_rank: int
    genus: int
    same_character: bool = True

    @property
    def orientability_agrees(self):
        return (self.algebraic != NONORIENTABLE) == self.covering_orientable

    @property
    def genus_agrees(self):
        return self.cycle_rank == self.genus

    @property
    def agrees(self):
        return self.orientability_agrees and self.genus_agrees and self.same_character


def orientability_class(group, x, characters=None):
    """The kind of the action x defines, and its character when orientable."""
    character = match_character(group, x.g, x.v, characters)
    if character is None:
        return NONORIENTABLE, None
    if character.is_trivial:
        return ORIENTATION_PRESERVING, character
    return ORIENTATION_REVERSING, character


def tag_orbits(group, orbits, characters=None):
    """Fill in kind and character on each orbit; returns the ActionClasses."""
    characters = homs_to_C2(group) if characters is None else characters
    tagged = []
    for orbit in orbits:
        kind, character = orientability_class(group, orbit.representative, characters)
        if (kind == ORIENTATION_PRESERVING) != orbit.representative.is_all_ones:
            raise ConsistencyError(
                f"orbit of {orbit.representative} is {kind} but its signs disagree"
            )
        orbit.kind = kind
        orbit.character = character
        tagged.append(ActionClass(orbit.representative, kind, character, orbit.size))
    return tagged


def _count(classes, kind):
    return sum(1 for c in classes if c.kind == kind)


def classify_actions(group, n, *, state_cap=None):
    characters = homs_to_C2(group)
    auts = automorphisms(group)
    report = ClassificationReport(
        group=str(group),
        order=group.order,
        n=n,
        genus=covering_genus(group, n),
        mu=mu(group),
        h1_rank=h1_rank(group),
        epi_orbits=len(epi_orbits_under_aut(group, auts=auts, characters=characters)),
    )
    partition = enumerate_orbits(group, n, state_cap=state_cap)
    report.classes = tag_orbits(group, partition.orbits, characters)
    weak = coarsen_by_automorphisms(partition, auts)
    report.weak_classes = tag_orbits(group, weak.orbits, characters)

    report.op_classes = _count(report.classes, ORIENTATION_PRESERVING)
    report.or_classes = _count(report.classes, ORIENTATION_REVERSING)
    report.nonor_classes = _count(report.classes, NONORIENTABLE)
    report.op_weak = _count(report.weak_classes, ORIENTATION_PRESERVING)
    report.or_weak = _count(report.weak_classes, ORIENTATION_REVERSING)
    report.nonor_weak = _count(report.weak_classes, NONORIENTABLE)
    # the all-ones sector is closed, so its orbits are exactly the Nielsen classes
    report.nielsen_classes = report.op_classes
    logger.info(
        "%s n=%d genus %d: op=%d or=%d (weak %d) nonor=%d (weak %d)",
        group, n, report.genus, report.op_classes, report.or_classes,
        report.or_weak, report.nonor_classes, report.nonor_weak,
    )
    return report


def abelian_normal_form(group):
    """
    Split the invariant factors into the even parts e_1..e_k and the odd parts
    d_1..d_l, each list in divisibility order (later entries divide earlier).
    """
    if not group.is_abelian:
        raise NotAbelianError(f"{group} is not abelian")
    factors = invariant_factors(group)
    evens = [f for f in factors if f % 2 == 0]
    odds = [f for f in factors if f % 2 == 1]
    return evens, odds


def abelian_formula(group, n):
    """Closed-form class counts for an abelian group, without enumeration."""
    evens, odds = abelian_normal_form(group)
    k, ell = len(evens), len(odds)
    rank = k + ell
    report = ClassificationReport(
        group=str(group),
        order=group.order,
        n=n,
        genus=covering_genus(group, n),
        mu=rank,
        h1_rank=k,
        source=FORMULA,
    )
    if n < rank:
        return report

    distinct_evens = len(set(evens))
    report.op_weak = 1
    report.or_weak = distinct_evens
    if n == rank:
        if k and evens[-1] == 2:
            count = 1
        elif ell == 0:
            count = int(totient(evens[-1])) // 2
        else:
            count = int(totient(odds[-1])) // 2
        report.op_classes = count
        report.or_classes = (2**k - 1) * count
        if ell:
            report.nonor_classes = count
            report.nonor_weak = 1
    else:
        report.op_classes = 1
        report.or_classes = 2**k - 1
        report.nonor_classes = 1
        report.nonor_weak = 1
    return report


def compare_reports(a, b):
    """Names of the count fields on which two reports disagree; None is unknown."""
    differing = []
    for name in COUNT_FIELDS:
        left, right = getattr(a, name), getattr(b, name)
        if left is None or right is None:
            continue
        if left != right:
            differing.append(name)
    return differing


def genus_spectrum(group, genus_bound):
    """
    Genera up to the bound at which G acts freely: orientation-preserving on
    every admissible genus, orientation-reversing only when G has a nontrivial
    character, nonorientable once n exceeds the rank of Hom(G, C2).
    """
    start = mu(group)
    rank = h1_rank(group)
    admissible = {}
    n = max(start, 1)
    while covering_genus(group, n) <= genus_bound:
        admissible[n] = covering_genus(group, n)
        n += 1
    genera = set(admissible.values())
    return GenusSpectrum(
        group=str(group),
        bound=genus_bound,
        orientable_op=genera,
        orientable_or=set(genera) if rank > 0 else set(),
        nonorientable={m for n, m in admissible.items() if n > rank},
    )


def spectrum_from_enumeration(group, genus_bound, *, state_cap=None):
    """The same spectrum, read off classify_actions at every admissible n."""
    spectrum = GenusSpectrum(str(group), genus_bound, set(), set(), set())
    n = max(mu(group), 1)
    while covering_genus(group, n) <= genus_bound:
        report = classify_actions(group, n, state_cap=state_cap)
        if report.op_classes:
            spectrum.orientable_op.add(report.genus)
        if report.or_classes:
            spectrum.orientable_or.add(report.genus)
        if report.nonor_classes:
            spectrum.nonorientable.add(report.genus)
        n += 1
    return spectrum


def single_class_check(group, n, *, state_cap=None):
    """
    Whether all generating n-vectors are Nielsen equivalent. When they are and
    n > mu(G), the classification is checked against its single-class shape.
    """
    single = len(nielsen_classes(group, n, state_cap=state_cap)) == 1
    if single and n > mu(group):
        report = classify_actions(group, n, state_cap=state_cap)
        expected = {
            "op_classes": 1,
            "op_weak": 1,
            "or_weak": report.epi_orbits,
            "nonor_classes": 1,
        }
        for name, value in expected.items():
            if getattr(report, name) != value:
                raise ConsistencyError(
                    f"{group} n={n}: single Nielsen class but {name}="
                    f"{getattr(report, name)}, expected {value}"
                )
    return single


def oracle_matrix(group, n, *, state_cap=None):
    """
    One row per marked generating vector, comparing the character criterion
    with the Schreier-graph cycle test. Graphs are built once per g-part.
    """
    check_state_space(group, n, state_cap)
    characters = homs_to_C2(group)
    genus = covering_genus(group, n)
    rows = []
    for g in product(range(group.order), repeat=n):
        if not generates(group, g):
            continue
        schreier = schreier_graph(group, g)
        for v in product((1, -1), repeat=n):
            x = MarkedVector(g, v)
            kind, character = orientability_class(group, x, characters)
            verdict = schreier.verdict(v)
            row = OracleRow(
                x,
                kind,
                verdict.orientable,
                schreier.cycle_rank,
                genus,
                same_character=character == verdict.character,
            )
            if not row.agrees:
                logger.warning("oracle mismatch for %s on %s: %s", group, x, row)
            rows.append(row)
    return rows
