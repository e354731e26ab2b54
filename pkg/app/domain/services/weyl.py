"""Minuscule crystal graphs, Bruhat intervals and printed-table comparison."""

import logging
from collections import deque
from collections.abc import Sequence

import networkx as nx

from app.domain.errors import ValidationError
from app.domain.models.crystal import (
    MINUSCULE,
    CrystalGraph,
    CrystalVertex,
    RootDatum,
    Weight,
    WeightTableRow,
)
from app.domain.models.reports import AppendixReport, TableMismatch

logger = logging.getLogger(__name__)


def build_crystal(datum: RootDatum, weight_index: int) -> CrystalGraph:
    """Crystal graph of the minuscule representation with highest weight w_k.

    Every weight v with ``v_t > 0`` gets an edge ``v -> v - alpha_t`` labelled t.
    Each vertex keeps the least word ``t + word(pred)`` over its incoming edges;
    vertices are numbered by (length, word).

    Raises:
        ValidationError: If w_k is not minuscule for the type.
    """
    allowed = MINUSCULE.get(datum.label, frozenset())
    if weight_index not in allowed:
        options = ", ".join(f"w{k}" for k in sorted(allowed))
        raise ValidationError(
            f"w{weight_index} is not minuscule for {datum.label}; choose one of {options}"
        )

    top = datum.fundamental_weight(weight_index)
    words: dict[Weight, str] = {top: ""}
    edges: list[tuple[Weight, Weight, int]] = []
    queue: deque[Weight] = deque([top])
    while queue:
        v = queue.popleft()
        for t in range(1, datum.rank + 1):
            if v[t - 1] <= 0:
                continue
            w = datum.reflect_down(v, t)
            edges.append((v, w, t))
            candidate = str(t) + words[v]
            if w not in words:
                words[w] = candidate
                queue.append(w)
            elif len(candidate) == len(words[w]) and candidate < words[w]:
                words[w] = candidate

    ordered = sorted(words, key=lambda w: (len(words[w]), words[w]))
    index = {w: i for i, w in enumerate(ordered, start=1)}
    vertices = tuple(CrystalVertex(index[w], w, words[w]) for w in ordered)
    graph = nx.DiGraph()
    graph.add_nodes_from(index.values())
    graph.add_edges_from((index[v], index[w], {"label": t}) for v, w, t in edges)
    logger.debug("crystal %s/w%d: %d vertices", datum.label, weight_index, len(vertices))
    return CrystalGraph(datum, weight_index, vertices, graph)


def bruhat_interval(graph: CrystalGraph, vertex: CrystalVertex) -> frozenset[int]:
    """Indices of all vertices below ``vertex``, itself included."""
    return frozenset(nx.ancestors(graph.graph, vertex.index)) | {vertex.index}


def is_graded(graph: CrystalGraph) -> bool:
    """Every edge raises the length by one, so all maximal paths have the sink's length."""
    return all(
        graph.vertex(b).length == graph.vertex(a).length + 1 for a, b, _ in graph.edges()
    )


def has_unique_extremes(graph: CrystalGraph) -> bool:
    sources = [n for n in graph.graph if graph.graph.in_degree(n) == 0]
    sinks = [n for n in graph.graph if graph.graph.out_degree(n) == 0]
    return sources == [graph.source.index] and sinks == [graph.sink.index]


def is_self_dual(graph: CrystalGraph) -> bool:
    """Reversing every edge and negating every weight gives the graph back.

    Negation is composed with the diagram symmetry of the type, so an edge
    ``a -t-> b`` must come back as ``dual(b) -sigma(t)-> dual(a)`` with its
    label carried along.
    """
    datum = graph.datum
    by_weight = {v.weight: v.index for v in graph.vertices}
    dual: dict[int, int] = {}
    for v in graph.vertices:
        image = by_weight.get(datum.dual_weight(v.weight))
        if image is None:
            return False
        dual[v.index] = image
    if len(set(dual.values())) != len(dual):
        return False
    mirrored = nx.relabel_nodes(graph.graph.reverse(copy=True), dual)
    for _, _, data in mirrored.edges(data=True):
        data["label"] = datum.dual_node(data["label"])
    return bool(nx.utils.graphs_equal(mirrored, graph.graph))


def verify_appendix_tables(
    graph: CrystalGraph, rows: Sequence[WeightTableRow]
) -> AppendixReport:
    """Compare printed rows with the graph.

    A printed node is located by applying its word to the source. Its weight
    is compared only when every printed coordinate is 0 or ±1; the printed
    dimension is always compared with the length.
    """
    mismatches: list[TableMismatch] = []
    skipped: list[int] = []
    node_map: dict[int, int] = {}
    matched = 0
    for row in rows:
        found: list[TableMismatch] = []
        vertex = graph.apply_word(row.word)
        if vertex is None:
            found.append(TableMismatch(row.node, "word", row.word or "e", "not a path"))
        else:
            node_map[row.node] = vertex.index
            if row.dim != vertex.length:
                found.append(TableMismatch(row.node, "dim", str(row.dim), str(vertex.length)))
            if len(row.word) != vertex.length:
                found.append(
                    TableMismatch(row.node, "length", str(len(row.word)), str(vertex.length))
                )
            if row.is_anomalous:
                skipped.append(row.node)
            elif row.weight != vertex.weight:
                found.append(
                    TableMismatch(
                        row.node, "weight", _weight_text(row.weight), _weight_text(vertex.weight)
                    )
                )
        if found:
            logger.warning("%s node %d: %s", graph.label, row.node, [m.column for m in found])
        else:
            matched += 1
        mismatches += found
    return AppendixReport(
        label=graph.label,
        rows=len(rows),
        matched=matched,
        mismatches=tuple(mismatches),
        weights_skipped=tuple(skipped),
        node_map=node_map,
    )


def _weight_text(weight: Weight) -> str:
    return " ".join(str(c) for c in weight)


def crystal_for(type_label: str, weight: str) -> CrystalGraph:
    """Crystal graph named the way the command line names it, e.g. ``E6`` and ``w1``.

    Raises:
        NotFoundError: If the type is unknown.
        ValidationError: If the weight is malformed or not minuscule.
    """
    datum = RootDatum.of(type_label)
    text = weight.removeprefix("w")
    if not text.isdigit():
        raise ValidationError(f"Weight must look like w1, got {weight!r}")
    return build_crystal(datum, int(text))
