"""
The six verbs behind both outer surfaces.

Each verb takes the cleaned parameters (``group``, ``n`` or ``genus``,
``weak``, ``bound``, ``vector``, caps) and returns a VerbResult holding the
human table and the serializer data; the management commands print one of
them and the API views return the data.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import classifier, formats
from .covering import export_edgelist, rank_for_genus, schreier_graph
from .exceptions import CapExceeded, MoveError
from .groups import build_group
from .nielsen import EQUIVALENCE, WEAK, enumerate_orbits, nielsen_classes, orbit_of
from .serializers import (
    ClassificationReportSerializer,
    FormulaComparisonSerializer,
    GenusSpectrumSerializer,
    NielsenClassesSerializer,
    OracleCheckSerializer,
    OrbitPartitionSerializer,
    SingleOrbitSerializer,
)

logger = logging.getLogger(__name__)

VERBS = ("classify", "spectrum", "orbits", "nielsen", "oracle-check", "formula")


@dataclass
class VerbResult:
    table: str
    data: dict

    def render(self, output_format):
        if output_format == formats.MACHINE:
            return formats.render_machine(self.data)
        return self.table


def _group(params):
    return build_group(params["group"], order_cap=params.get("order_cap"))


def resolve_n(group, params):
    """n from ``n`` or from ``genus`` = 1 + |G|(n-1)."""
    if params.get("genus") is not None:
        return rank_for_genus(group, params["genus"])
    n = params.get("n")
    if n is None or n < 1:
        raise MoveError(f"n must be a positive integer, got {n}")
    return n


def classify(params):
    group = _group(params)
    n = resolve_n(group, params)
    report = classifier.classify_actions(group, n, state_cap=params.get("state_cap"))
    context = {"group": group, "weak": params.get("weak", False)}
    return VerbResult(
        formats.report_table(group, report),
        ClassificationReportSerializer(report, context=context).data,
    )


def spectrum(params):
    group = _group(params)
    result = classifier.genus_spectrum(group, params["bound"])
    return VerbResult(formats.spectrum_table(result), GenusSpectrumSerializer(result).data)


def orbits(params):
    group = _group(params)
    mode = WEAK if params.get("weak") else EQUIVALENCE
    state_cap = params.get("state_cap")
    if params.get("vector"):
        x = formats.parse_marked_vector(group, params["vector"])
        orbit = orbit_of(group, x, mode, state_cap=state_cap)
        orbit.kind, orbit.character = classifier.orientability_class(group, orbit.representative)
        if params.get("export_graph"):
            export_edgelist(schreier_graph(group, x.g), params["export_graph"], x.v)
        table = "\n".join(
            [
                f"orbit of {formats.format_marked_vector(group, x)} ({mode})",
                f"size  {orbit.size}",
                f"kind  {orbit.kind}",
                f"representative  {formats.format_marked_vector(group, orbit.representative)}",
            ]
        )
        context = {"group": group, "mode": mode, "members": orbit.members}
        return VerbResult(table, SingleOrbitSerializer(orbit, context=context).data)

    n = resolve_n(group, params)
    partition = enumerate_orbits(group, n, mode, state_cap=state_cap)
    classifier.tag_orbits(group, partition.orbits)
    return VerbResult(
        formats.partition_table(group, partition),
        OrbitPartitionSerializer(partition, context={"group": group}).data,
    )


def nielsen(params):
    group = _group(params)
    n = resolve_n(group, params)
    partition = nielsen_classes(group, n, state_cap=params.get("state_cap"))
    return VerbResult(
        formats.partition_table(group, partition),
        NielsenClassesSerializer(partition, context={"group": group}).data,
    )


def oracle_check(params):
    group = _group(params)
    n = resolve_n(group, params)
    rows = classifier.oracle_matrix(group, n, state_cap=params.get("state_cap"))
    return VerbResult(
        formats.oracle_table(group, n, rows),
        OracleCheckSerializer(rows, context={"group": group, "n": n}).data,
    )


def formula(params):
    """Closed form for an abelian group, diffed against enumeration when it fits the cap."""
    group = _group(params)
    n = resolve_n(group, params)
    closed = classifier.abelian_formula(group, n)
    enumerated = None
    differing = []
    if params.get("compare", True):
        try:
            enumerated = classifier.classify_actions(group, n, state_cap=params.get("state_cap"))
        except CapExceeded as exc:
            logger.info("%s n=%d: skipping enumeration, %s", group, n, exc)
        else:
            differing = classifier.compare_reports(closed, enumerated)
        if differing:
            logger.warning("%s n=%d: formula and enumeration differ on %s", group, n, differing)
    table = formats.report_table(group, closed) + "\n\n" + formats.diff_table(differing, enumerated is not None)
    comparison = {"formula": closed, "enumeration": enumerated, "differing": differing}
    return VerbResult(table, FormulaComparisonSerializer(comparison, context={"group": group}).data)


_DISPATCH = {
    "classify": classify,
    "spectrum": spectrum,
    "orbits": orbits,
    "nielsen": nielsen,
    "oracle-check": oracle_check,
    "formula": formula,
}


def run(verb, params):
    if verb not in _DISPATCH:
        raise ValueError(f"unknown verb {verb!r}; expected one of {VERBS}")
    return _DISPATCH[verb](params)
