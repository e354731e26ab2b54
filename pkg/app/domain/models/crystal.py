"""Root data of E6/E7 and minuscule crystal graphs."""

from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from app.domain.errors import NotFoundError, ValidationError

Weight = tuple[int, ...]

# Bourbaki numbering; node 2 hangs off node 4.
DYNKIN_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "E6": ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    "E7": ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
}

MINUSCULE: dict[str, frozenset[int]] = {
    "E6": frozenset({1, 6}),
    "E7": frozenset({7}),
}

# Diagram symmetry induced by -w0; nodes not listed are fixed.
DIAGRAM_DUALITY: dict[str, dict[int, int]] = {
    "E6": {1: 6, 6: 1, 3: 5, 5: 3},
    "E7": {},
}


@dataclass(frozen=True)
class RootDatum:
    """Cartan data of a simply laced exceptional type.

    Attributes:
        label: ``E6`` or ``E7``.
        cartan: Cartan matrix, row t holds the simple root alpha_t in
            fundamental-weight coordinates.
    """

    label: str
    cartan: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.cartan)
        for i, row in enumerate(self.cartan):
            if len(row) != n or row[i] != 2:
                raise ValidationError(f"Bad Cartan matrix row {i + 1} for {self.label}")
            for j, a in enumerate(row):
                if a != self.cartan[j][i]:
                    raise ValidationError(f"Cartan matrix of {self.label} is not symmetric")

    @classmethod
    def of(cls, label: str) -> "RootDatum":
        """Root datum of type ``E6`` or ``E7``.

        Raises:
            NotFoundError: For any other label.
        """
        if label not in DYNKIN_EDGES:
            raise NotFoundError(f"Unknown type {label}; expected one of {sorted(DYNKIN_EDGES)}")
        rank = int(label[1:])
        rows = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            rows[i][i] = 2
        for a, b in DYNKIN_EDGES[label]:
            rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
        return cls(label, tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def simple_root(self, t: int) -> Weight:
        return self.cartan[t - 1]

    def dual_node(self, t: int) -> int:
        return DIAGRAM_DUALITY.get(self.label, {}).get(t, t)

    def dual_weight(self, weight: Weight) -> Weight:
        """Negated weight with coordinates permuted by the diagram symmetry."""
        return tuple(-weight[self.dual_node(i) - 1] for i in range(1, self.rank + 1))

    def reflect_down(self, weight: Weight, t: int) -> Weight:
        """``weight - alpha_t``, the step along an edge labelled t."""
        return tuple(w - a for w, a in zip(weight, self.simple_root(t), strict=True))

    def fundamental_weight(self, k: int) -> Weight:
        if not 1 <= k <= self.rank:
            raise ValidationError(f"No fundamental weight w{k} for {self.label}")
        return tuple(int(i == k - 1) for i in range(self.rank))


@dataclass(frozen=True)
class CrystalVertex:
    """A weight of the minuscule representation.

    Attributes:
        index: Canonical number, 1-based, ordered by length then word.
        weight: Fundamental-weight coordinates, node 1 first.
        word: Lexicographically least reduced word, last reflection first.
        length: Number of letters in ``word``.
    """

    index: int
    weight: Weight
    word: str

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class CrystalGraph:
    """Bruhat graph of ``W/W_P`` realised on the weights of a minuscule representation.

    Attributes:
        datum: Root datum.
        weight_index: k of the fundamental weight w_k.
        vertices: Vertices in canonical order.
        graph: Directed graph on vertex indices with ``label`` edge attributes.
    """

    datum: RootDatum
    weight_index: int
    vertices: tuple[CrystalVertex, ...]
    graph: nx.DiGraph = field(compare=False, hash=False, repr=False)

    @property
    def label(self) -> str:
        return f"{self.datum.label}/w{self.weight_index}"

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, index: int) -> CrystalVertex:
        """Vertex by canonical number.

        Raises:
            NotFoundError: If there is no such vertex.
        """
        if not 1 <= index <= len(self.vertices):
            raise NotFoundError(f"{self.label} has no vertex {index}")
        return self.vertices[index - 1]

    @property
    def source(self) -> CrystalVertex:
        return self.vertices[0]

    @property
    def sink(self) -> CrystalVertex:
        return self.vertices[-1]

    def step(self, vertex: CrystalVertex, t: int) -> CrystalVertex | None:
        """Follow the edge labelled t out of ``vertex``, if there is one."""
        for _, target, label in self.graph.out_edges(vertex.index, data="label"):
            if label == t:
                return self.vertex(target)
        return None

    def apply_word(self, word: str) -> CrystalVertex | None:
        """Vertex reached from the source reading the word right to left.

        Returns None if some letter has no outgoing edge.
        """
        current: CrystalVertex | None = self.source
        for letter in reversed(word):
            if current is None:
                return None
            current = self.step(current, int(letter))
        return current

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.graph.edges(data="label"))

    def to_dot(self) -> str:
        lines = [f'digraph "{self.label}" {{']
        for v in self.vertices:
            lines.append(f'  {v.index} [label="{v.index}\\n{v.word or "e"}"];')
        for a, b, t in self.edges():
            lines.append(f'  {a} -> {b} [label="{t}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "vertices": [
                {"index": v.index, "weight": list(v.weight), "word": v.word, "length": v.length}
                for v in self.vertices
            ],
            "edges": [{"from": a, "to": b, "label": t} for a, b, t in self.edges()],
        }


@dataclass(frozen=True)
class WeightTableRow:
    """One printed row of a weight table.

    Attributes:
        node: Printed node number.
        weight: Printed coordinates, node 1 first.
        word: Printed reduced word; empty for the identity.
        gorenstein: Printed Gorenstein flag.
        dim: Printed dimension.
    """

    node: int
    weight: Weight
    word: str
    gorenstein: bool
    dim: int

    @property
    def is_anomalous(self) -> bool:
        """True if a coordinate has magnitude above 1, which no minuscule weight has."""
        return any(abs(c) > 1 for c in self.weight)


@dataclass(frozen=True)
class WeightTable:
    """A printed weight table for one graph.

    Attributes:
        label: Graph label such as ``E7/w7``.
        rows: Rows in printed order.
        ledger: Notes on known printing slips keyed by (node, column). A mismatch
            is excused only when its own node and column carry a note.
    """

    label: str
    rows: tuple[WeightTableRow, ...]
    ledger: dict[tuple[int, str], str] = field(default_factory=dict, hash=False)

    def note(self, node: int, column: str) -> str:
        """Ledger note for one cell of the table, or the empty string."""
        return self.ledger.get((node, column), "")

    def row(self, node: int) -> WeightTableRow:
        """Row of a printed node.

        Raises:
            NotFoundError: If the node is not in the table.
        """
        for r in self.rows:
            if r.node == node:
                return r
        raise NotFoundError(f"Table {self.label} has no node {node}")
