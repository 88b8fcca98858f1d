"""Simple undirected graphs on vertices 1..n.

Generators for the graph families with known integer Laplacian spectra
(complete, complete multipartite, balanced bipartite minus a perfect
matching, threshold), Laplacian extraction, and an edge-list text format.

Vertex numbering is 1-based everywhere, including the file format, and
each generator fixes a specific vertex ordering: block order for
multipartite graphs, the i <-> n+i pairing for the removed matching, and
construction order for threshold graphs.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .linalg import IntMatrix

__all__ = [
    "DOMINATING",
    "Graph",
    "GraphParseError",
    "ISOLATED",
    "PartitionSpec",
    "ThresholdSequence",
    "bipartite_minus_matching",
    "complete_graph",
    "complete_multipartite",
    "laplacian",
    "parse_graph",
    "serialize_graph",
    "threshold_graph",
]

ISOLATED = "I"
DOMINATING = "D"


@dataclass(frozen=True)
class Graph:
    """Simple graph: no loops, no multi-edges, endpoints in 1..n.

    Edges are stored as (i, j) pairs with i < j; use `from_edges` to
    build from unnormalized pairs.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        object.__setattr__(self, "edges", frozenset(map(tuple, self.edges)))
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair")
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, normalizing each pair to (min, max).

        Rejects loops, duplicate edges (in either orientation), and
        out-of-range endpoints.
        """
        seen = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i > j:
                i, j = j, i
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        return cls(n, frozenset(seen))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges if i < j else (j, i) in self.edges

    def degree(self, v: int) -> int:
        """Number of edges incident to vertex v (1-based)."""
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return sum(1 for i, j in self.edges if v == i or v == j)

    def degrees(self) -> list[int]:
        """Degree of every vertex, indexed by vertex order."""
        degs = [0] * self.n
        for i, j in self.edges:
            degs[i - 1] += 1
            degs[j - 1] += 1
        return degs


@dataclass(frozen=True)
class ThresholdSequence:
    """Construction word for a threshold graph.

    Vertex 1 is the initial vertex and carries no tag; each later vertex
    is tagged "I" (adjacent to no earlier vertex) or "D" (adjacent to
    all earlier vertices), so a graph on n vertices has n - 1 steps.
    """

    steps: tuple[str, ...] = ()

    def __post_init__(self):
        for s in self.steps:
            if s not in (ISOLATED, DOMINATING):
                raise ValueError(f"threshold step must be 'I' or 'D', got {s!r}")

    @classmethod
    def from_word(cls, word: str) -> "ThresholdSequence":
        return cls(tuple(word.upper()))

    def word(self) -> str:
        return "".join(self.steps)

    @property
    def n(self) -> int:
        """Vertex count of the graph this sequence builds."""
        return len(self.steps) + 1


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes (n_1, ..., n_p) of a complete multipartite graph."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition needs at least one part")
        for p in self.parts:
            if p < 1:
                raise ValueError(f"part sizes must be positive, got {p}")

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)


def complete_graph(n: int) -> Graph:
    """Complete graph on n vertices: all C(n, 2) edges."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ))


def complete_multipartite(spec: PartitionSpec | Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Vertices come block by block (the first n_1 vertices form part 1,
    the next n_2 part 2, ...); an edge joins every pair of vertices in
    different parts and no pair within a part.
    """
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    block = []
    b = 0
    for size in spec.parts:
        block.extend([b] * size)
        b += 1
    n = spec.n
    return Graph(n, frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if block[i - 1] != block[j - 1]
    ))


def bipartite_minus_matching(n: int) -> Graph:
    """Balanced complete bipartite graph on sides {1..n}, {n+1..2n}
    with the perfect matching {i, n+i} removed.

    Every vertex has degree n - 1; there are n*(n-1) edges.
    """
    if n < 1:
        raise ValueError("matching size must be at least 1")
    return Graph(2 * n, frozenset(
        (i, n + j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ))


def threshold_graph(seq: ThresholdSequence | str) -> Graph:
    """Threshold graph built by the construction sequence.

    Vertex 1 comes first; vertex k >= 2 is joined to all of 1..k-1 when
    its step is "D" and to none when it is "I". The empty sequence gives
    the single-vertex graph.
    """
    if isinstance(seq, str):
        seq = ThresholdSequence.from_word(seq)
    edges = []
    for k, step in enumerate(seq.steps, start=2):
        if step == DOMINATING:
            edges.extend((i, k) for i in range(1, k))
    return Graph(seq.n, frozenset(edges))


def laplacian(g: Graph) -> IntMatrix:
    """Laplacian matrix: degree on the diagonal, -1 per edge off it.

    Symmetric with every row and column summing to zero.
    """
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        rows[i - 1][j - 1] = -1
        rows[j - 1][i - 1] = -1
        rows[i - 1][i - 1] += 1
        rows[j - 1][j - 1] += 1
    return IntMatrix(rows)


class GraphParseError(ValueError):
    """Edge-list text that violates the format, with its line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> Graph:
    """Parse edge-list text.

    Format: the first significant line is the vertex count n; every
    later nonempty line is "i j" with two whitespace-separated vertex
    numbers. '#' starts a comment to end of line. Loops, duplicate
    edges, and out-of-range vertices are errors.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(lineno, f"expected vertex count, got {line!r}") from None
            if n < 1:
                raise GraphParseError(lineno, f"vertex count must be positive, got {n}")
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphParseError(lineno, f"expected 'i j', got {line!r}")
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(lineno, f"expected 'i j', got {line!r}") from None
        if i == j:
            raise GraphParseError(lineno, f"loop at vertex {i}")
        if i > j:
            i, j = j, i
        if not (1 <= i and j <= n):
            raise GraphParseError(lineno, f"edge ({i}, {j}) out of range for n={n}")
        if (i, j) in seen:
            raise GraphParseError(lineno, f"duplicate edge ({i}, {j})")
        seen.add((i, j))
        edges.append((i, j))
    if n is None:
        raise GraphParseError(1, "missing vertex count line")
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Edge-list text for g: vertex count line, then sorted "i j" lines.

    parse_graph(serialize_graph(g)) == g for every valid graph.
    """
    lines = [str(g.n)]
    lines.extend(f"{i} {j}" for i, j in sorted(g.edges))
    return "\n".join(lines) + "\n"
