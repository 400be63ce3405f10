"""
Covering-graph oracle.

The Schreier graph of G on a generating vector g has an edge x -> x*g_i for
every element x and coordinate i. It is the 1-skeleton of the regular
covering of the rose R_n, so its independent cycles count the genus of the
covering handlebody and their omega-values decide its orientability,
independently of the character search in ``morphisms``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx

from .exceptions import GenusError, NotGeneratingError
from .morphisms import Character
from .words import evaluate, evaluate_signs, inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisCycle:
    """The cycle closed by the non-tree edge ``source -> source*g_coord``."""

    source: int
    target: int
    coord: int
    word: tuple

    def sign(self, v):
        return evaluate_signs(self.word, v)


@dataclass
class SchreierGraph:
    group: object
    g: tuple
    root: int
    graph: nx.MultiDiGraph = field(repr=False)
    tree_words: dict = field(repr=False)
    basis_cycles: tuple = field(repr=False)

    @property
    def n(self):
        return len(self.g)

    @property
    def vertex_count(self):
        return self.graph.number_of_nodes()

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    @property
    def cycle_rank(self):
        return len(self.basis_cycles)

    def verdict(self, v):
        """Orientability of the covering for sign vector v."""
        for cycle in self.basis_cycles:
            if cycle.sign(v) < 0:
                return OrientationVerdict(False, witness=cycle)
        group = self.group
        root_inverse = group.inv(self.root)
        values = [1] * group.order
        for x, word in self.tree_words.items():
            # the tree word of x evaluates to root^-1 * x
            values[group.mul(root_inverse, x)] = evaluate_signs(word, v)
        return OrientationVerdict(True, character=Character(tuple(values)))


@dataclass(frozen=True)
class OrientationVerdict:
    orientable: bool
    character: Character | None = None
    witness: BasisCycle | None = None


def schreier_graph(group, g, *, root=None):
    """
    Build the Schreier graph with a breadth-first spanning tree from ``root``
    (the identity by default), ties broken by coordinate order.
    """
    g = tuple(g)
    group.check_elements(g)
    root = group.identity if root is None else root
    rows = group.rows

    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(group.order))
    for x in range(group.order):
        for i, gi in enumerate(g):
            graph.add_edge(x, rows[x][gi], key=i, coord=i)

    tree_words = {root: ()}
    tree_edges = set()
    for u, w in nx.bfs_edges(graph, root):
        coord = min(graph[u][w])
        tree_edges.add((u, coord))
        tree_words[w] = tree_words[u] + ((coord, 1),)
    if len(tree_words) != group.order:
        raise NotGeneratingError(f"{g} does not generate {group}; Schreier graph is disconnected")

    cycles = []
    for x in range(group.order):
        for i, gi in enumerate(g):
            if (x, i) in tree_edges:
                continue
            y = rows[x][gi]
            word = tree_words[x] + ((i, 1),) + inverse(tree_words[y])
            cycles.append(BasisCycle(x, y, i, word))
    logger.debug("Schreier graph of %s on %s: %d basis cycles", group, g, len(cycles))
    return SchreierGraph(group, g, root, graph, tree_words, tuple(cycles))


def cycle_closes(group, schreier, cycle):
    """A basis cycle word is a loop: it evaluates to the identity in G."""
    return evaluate(group, cycle.word, schreier.g) == group.identity


def covering_genus(group, n):
    if n < 1:
        raise GenusError(f"n must be >= 1, got {n}")
    return 1 + group.order * (n - 1)


def rank_for_genus(group, genus):
    """The n with covering_genus(group, n) == genus."""
    if genus < 1 or (genus - 1) % group.order:
        raise GenusError(
            f"genus {genus} is not of the form 1 + {group.order}(n-1): "
            f"{genus - 1} is not divisible by {group.order}"
        )
    return 1 + (genus - 1) // group.order


def covering_orientable(group, x, *, root=None):
    return schreier_graph(group, x.g, root=root).verdict(x.v)


def export_edgelist(schreier, path, v=None):
    """Write one ``src dst coord sign`` line per edge, vertices by element name."""
    v = (1,) * schreier.n if v is None else tuple(v)
    names = schreier.group.names
    labelled = nx.relabel_nodes(schreier.graph, dict(enumerate(names)), copy=True)
    for _, _, data in labelled.edges(data=True):
        data["sign"] = "+" if v[data["coord"]] > 0 else "-"
        data["coord"] += 1
    nx.write_edgelist(labelled, path, data=["coord", "sign"])
    logger.info("wrote %d edges to %s", labelled.number_of_edges(), path)
