"""
Text forms shared by the management commands and the HTTP views.

Marked vectors are written ``g=(i,j);v=(+,-)`` with element names from the
group descriptor. Human output is a fixed-width table; machine output is the
serializer data rendered by DRF's JSONRenderer.
"""

from __future__ import annotations

import io
import re

from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .exceptions import DescriptorError
from .nielsen import MarkedVector

TABLE = "table"
MACHINE = "machine"
OUTPUT_FORMATS = (TABLE, MACHINE)

_MARKED = re.compile(r"^\s*g\s*=\s*\((?P<g>[^)]*)\)\s*(?:;\s*v\s*=\s*\((?P<v>[^)]*)\)\s*)?$")
_SIGNS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}


def sign_char(s):
    return "+" if s > 0 else "-"


def parse_marked_vector(group, text):
    """Parse ``g=(a,b,...);v=(+,-,...)``; a missing v part means all +."""
    match = _MARKED.match(text or "")
    if match is None:
        raise DescriptorError(f"cannot parse marked vector {text!r}; expected g=(...);v=(...)")
    names = [part for part in match["g"].split(",") if part.strip()]
    if not names:
        raise DescriptorError("marked vector needs at least one element")
    g = tuple(group.index_of(name) for name in names)
    if match["v"] is None:
        return MarkedVector.unmarked(g)
    signs = [part.strip() for part in match["v"].split(",")]
    try:
        v = tuple(_SIGNS[s] for s in signs)
    except KeyError as exc:
        raise DescriptorError(f"bad sign {exc.args[0]!r} in {text!r}") from None
    if len(v) != len(g):
        raise DescriptorError(f"g has {len(g)} entries but v has {len(v)}")
    return MarkedVector(g, v)


def format_marked_vector(group, x):
    g = ",".join(group.names[e] for e in x.g)
    v = ",".join(sign_char(s) for s in x.v)
    return f"g=({g});v=({v})"


def format_character(group, character):
    """Values of a character on the canonical generators, e.g. ``i:-,j:+``."""
    if character is None:
        return "-"
    return ",".join(
        f"{group.names[x]}:{sign_char(character(x))}" for x in group.generators
    )


def render_machine(data):
    return JSONRenderer().render(data).decode()


def parse_machine(text):
    return JSONParser().parse(io.BytesIO(text.encode()))


def _rows(header, rows):
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(str(c))) for w, c in zip(widths, row)]
    lines = ["  ".join(f"{h:<{w}}" for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(f"{str(c):<{w}}" for c, w in zip(row, widths)).rstrip())
    return lines


def _pairs(pairs):
    width = max(len(k) for k, _ in pairs)
    return [f"{k:<{width}}  {'-' if v is None else v}" for k, v in pairs]


def report_table(group, report):
    lines = _pairs(
        [
            ("group", report.group),
            ("order", report.order),
            ("n", report.n),
            ("genus", report.genus),
            ("mu", report.mu),
            ("h1_rank", report.h1_rank),
            ("source", report.source),
            ("op", report.op_classes),
            ("op_weak", report.op_weak),
            ("or", report.or_classes),
            ("or_weak", report.or_weak),
            ("nonor", report.nonor_classes),
            ("nonor_weak", report.nonor_weak),
            ("nielsen_classes", report.nielsen_classes),
            ("epi_orbits", report.epi_orbits),
        ]
    )
    if report.classes:
        lines.append("")
        lines.extend(
            _rows(
                ("kind", "size", "character", "representative"),
                [
                    (
                        c.kind,
                        c.orbit_size,
                        format_character(group, c.character),
                        format_marked_vector(group, c.representative),
                    )
                    for c in report.classes
                ],
            )
        )
    return "\n".join(lines)


def spectrum_table(spectrum):
    def genera(values):
        return ", ".join(str(m) for m in sorted(values)) or "-"

    return "\n".join(
        _pairs(
            [
                ("group", spectrum.group),
                ("bound", spectrum.bound),
                ("orientation_preserving", genera(spectrum.orientable_op)),
                ("orientation_reversing", genera(spectrum.orientable_or)),
                ("nonorientable", genera(spectrum.nonorientable)),
            ]
        )
    )


def partition_table(group, partition):
    lines = _pairs(
        [
            ("group", str(group)),
            ("n", partition.n),
            ("mode", partition.mode),
            ("orbits", len(partition)),
            ("states", partition.total_states),
        ]
    )
    if partition.orbits:
        lines.append("")
        lines.extend(
            _rows(
                ("size", "kind", "representative"),
                [
                    (o.size, o.kind or "-", format_marked_vector(group, o.representative))
                    for o in partition.orbits
                ],
            )
        )
    return "\n".join(lines)


def oracle_table(group, n, rows):
    mismatches = [row for row in rows if not row.agrees]
    lines = _pairs(
        [
            ("group", str(group)),
            ("n", n),
            ("vectors", len(rows)),
            ("orientable", sum(1 for row in rows if row.covering_orientable)),
            ("mismatches", len(mismatches)),
        ]
    )
    if mismatches:
        lines.append("")
        lines.extend(
            _rows(
                ("representative", "algebraic", "covering", "cycles"),
                [
                    (
                        format_marked_vector(group, row.representative),
                        row.algebraic,
                        "orientable" if row.covering_orientable else "nonorientable",
                        row.cycle_rank,
                    )
                    for row in mismatches
                ],
            )
        )
    return "\n".join(lines)


def diff_table(differing, compared=True):
    if not compared:
        return "enumeration skipped"
    if not differing:
        return "formula and enumeration agree"
    return "differing fields: " + ", ".join(differing)
