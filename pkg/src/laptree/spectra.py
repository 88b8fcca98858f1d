"""Rank-one perturbations of Laplacians and closed-form integer spectra.

The central fact: adding u * ones^T to a graph Laplacian keeps the n - 1
eigenvalues orthogonal to the all-ones vector and replaces the kernel
eigenvalue 0 with sum(u), so

    char_poly(L + u*ones^T) * (0 - x) == char_poly(L) * (sum(u) - x)

as an exact polynomial identity. `perturbed_charpoly` computes the left
side directly from the matrix; the family functions below give the
factored spectra that this identity yields for complete, complete
multipartite, matching-removed bipartite, and threshold graphs.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graphs import (
    DOMINATING,
    Graph,
    PartitionSpec,
    ThresholdSequence,
    laplacian,
    threshold_graph,
)
from .linalg import ExactDivisionError, IntMatrix, IntPolynomial

__all__ = [
    "Spectrum",
    "deflate",
    "identity_plus_ones_charpoly",
    "perturbed_charpoly",
    "spectrum_bipartite_minus_matching",
    "spectrum_complete",
    "spectrum_multipartite",
    "spectrum_threshold_hk",
    "spectrum_threshold_merris",
    "spectrum_to_charpoly",
    "threshold_perturbed_diagonal",
]


@dataclass(frozen=True)
class Spectrum:
    """Multiset of integer eigenvalues as sorted (value, multiplicity) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = None
        for v, m in self.pairs:
            if m < 1:
                raise ValueError(f"multiplicity of {v} must be positive, got {m}")
            if prev is not None and v <= prev:
                raise ValueError("pairs must be sorted by value with distinct values")
            prev = v

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Spectrum":
        """Merge (value, multiplicity) pairs; zero multiplicities drop out."""
        acc: dict[int, int] = {}
        for v, m in pairs:
            if m < 0:
                raise ValueError(f"negative multiplicity {m}")
            if m:
                acc[v] = acc.get(v, 0) + m
        return cls(tuple(sorted(acc.items())))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Spectrum":
        return cls.from_pairs((v, 1) for v in values)

    @property
    def n(self) -> int:
        """Total multiplicity."""
        return sum(m for _, m in self.pairs)

    def values(self) -> list[int]:
        """All eigenvalues expanded with multiplicity, ascending."""
        return [v for v, m in self.pairs for _ in range(m)]

    def multiplicity(self, value: int) -> int:
        for v, m in self.pairs:
            if v == value:
                return m
        return 0

    def text(self) -> str:
        """Sorted "value^multiplicity" terms, e.g. "0^1 3^4 5^4 8^1"."""
        return " ".join(f"{v}^{m}" for v, m in self.pairs)


def perturbed_charpoly(L: IntMatrix, u: Sequence[int]) -> IntPolynomial:
    """Characteristic polynomial of L + u*ones^T, computed directly.

    L is expected to be a graph Laplacian (symmetric, zero row sums);
    nothing here depends on that, but the factored form the result is
    known to take does.
    """
    u = tuple(u)
    if len(u) != L.n:
        raise ValueError("perturbation vector length must match matrix dimension")
    return L.add_outer(u, (1,) * L.n).char_poly()


def deflate(p: IntPolynomial, s: int) -> IntPolynomial:
    """Exact quotient p / (s - x) in the integer polynomial ring.

    Raises ExactDivisionError when (s - x) does not divide p, i.e. when
    p(s) != 0; for a perturbed Laplacian characteristic polynomial with
    perturbation sum s the division is always exact.
    """
    if not p:
        return IntPolynomial()
    d = p.degree
    if d < 1:
        raise ExactDivisionError(
            f"remainder {p.coefficient(0)} != 0 dividing a constant by ({s} - x)"
        )
    q = [0] * d
    q[d - 1] = -p.coefficient(d)
    for k in range(d - 1, 0, -1):
        q[k - 1] = s * q[k] - p.coefficient(k)
    rem = p.coefficient(0) - s * q[0]
    if rem != 0:
        raise ExactDivisionError(f"remainder {rem} != 0 dividing by ({s} - x)")
    return IntPolynomial(q)


def identity_plus_ones_charpoly(a: int, b: int, n: int) -> IntPolynomial:
    """Characteristic polynomial of a*I + b*ones(n, n), in closed form.

    The all-ones vector is an eigenvector with eigenvalue a + b*n and
    its orthogonal complement is an (n-1)-dimensional eigenspace for a,
    so the polynomial is (a - x)**(n-1) * (a + b*n - x).
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return IntPolynomial.linear(a) ** (n - 1) * IntPolynomial.linear(a + b * n)


def spectrum_complete(n: int) -> Spectrum:
    """Laplacian spectrum of the complete graph: 0 once, n with multiplicity n-1."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Spectrum.from_pairs([(0, 1), (n, n - 1)])


def spectrum_multipartite(spec: PartitionSpec | Sequence[int]) -> Spectrum:
    """Laplacian spectrum of the complete multipartite graph.

    0 once, n with multiplicity p - 1, and n - n_i with multiplicity
    n_i - 1 for each part, merged where values coincide.
    """
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    n = spec.n
    pairs = [(0, 1), (n, spec.p - 1)]
    pairs.extend((n - size, size - 1) for size in spec.parts)
    return Spectrum.from_pairs(pairs)


def spectrum_bipartite_minus_matching(n: int) -> Spectrum:
    """Laplacian spectrum of the bipartite graph minus a perfect matching.

    0 once, n-2 and n each with multiplicity n-1, and 2n-2 once; the
    degenerate sizes n = 1, 2 merge naturally (for n = 2 the value
    n - 2 = 0 joins the kernel eigenvalue).
    """
    if n < 1:
        raise ValueError("matching size must be at least 1")
    return Spectrum.from_pairs([(0, 1), (n - 2, n - 1), (n, n - 1), (2 * n - 2, 1)])


def _threshold_degrees(seq: ThresholdSequence) -> list[int]:
    """Vertex degrees of threshold_graph(seq), straight from the tags.

    A vertex gains one edge per later dominating vertex, and a
    dominating vertex is additionally joined to everything before it.
    """
    tags = (None,) + seq.steps  # tags[k-1] is the tag of vertex k
    n = seq.n
    degs = []
    dominating_after = seq.steps.count(DOMINATING)
    for k in range(1, n + 1):
        tag = tags[k - 1]
        if tag == DOMINATING:
            dominating_after -= 1
            degs.append(dominating_after + k - 1)
        else:
            degs.append(dominating_after)
    return degs


def spectrum_threshold_hk(seq: ThresholdSequence | str) -> Spectrum:
    """Threshold-graph spectrum in the Hammer-Kelmans form.

    The multiset {0}, plus deg(v) for every isolated vertex and
    deg(v) + 1 for every dominating vertex. The initial vertex is the
    one vertex whose degree does not appear.
    """
    if isinstance(seq, str):
        seq = ThresholdSequence.from_word(seq)
    if not seq.steps:
        raise ValueError("threshold spectrum needs a nonempty construction sequence")
    degs = _threshold_degrees(seq)
    values = [0]
    for k, tag in enumerate(seq.steps, start=2):
        d = degs[k - 1]
        values.append(d + 1 if tag == DOMINATING else d)
    return Spectrum.from_values(values)


def spectrum_threshold_merris(g: Graph) -> Spectrum:
    """Threshold-graph spectrum by the Merris conjugate-degree formula.

    The i-th eigenvalue is the number of vertices of degree >= i, for
    i = 1..n. Always contains 0 since no simple-graph degree reaches n.
    Only meaningful when g is a threshold graph; nothing is validated.
    """
    degs = g.degrees()
    return Spectrum.from_values(
        sum(1 for d in degs if d >= i) for i in range(1, g.n + 1)
    )


def threshold_perturbed_diagonal(seq: ThresholdSequence | str) -> list[int]:
    """Diagonal of L + u*ones^T for u the dominating-vertex indicator.

    Under the construction ordering this perturbed matrix is upper
    triangular (verified here; a failure would mean the ordering is not
    a threshold construction), so its diagonal is its whole spectrum:
    deg(j) + 1 at dominating vertices, deg(j) elsewhere. Replacing the
    initial vertex's entry deg(1) with 0 recovers the Laplacian
    spectrum.
    """
    if isinstance(seq, str):
        seq = ThresholdSequence.from_word(seq)
    if not seq.steps:
        raise ValueError("needs a nonempty construction sequence")
    g = threshold_graph(seq)
    u = (0,) + tuple(1 if tag == DOMINATING else 0 for tag in seq.steps)
    m = laplacian(g).add_outer(u, (1,) * g.n)
    for i in range(g.n):
        for j in range(i):
            if m.rows[i][j] != 0:
                raise RuntimeError(
                    f"perturbed matrix not upper triangular at ({i + 1}, {j + 1})"
                )
    return [m.rows[i][i] for i in range(g.n)]


def spectrum_to_charpoly(s: Spectrum) -> IntPolynomial:
    """Expand a spectrum into its characteristic polynomial.

    Product of (value - x)**multiplicity, so the leading coefficient is
    (-1)**n, matching the det(M - x*I) convention used everywhere here.
    """
    out = IntPolynomial((1,))
    for v, m in s.pairs:
        out = out * IntPolynomial.linear(v) ** m
    return out
