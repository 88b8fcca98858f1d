"""Spanning-tree counters.

Four independent routes to the same number: a Laplacian cofactor, a
rank-one determinant, the characteristic-polynomial coefficient, and a
brute-force subset enumeration that touches no linear algebra at all.
`compare_methods` runs whichever of them apply and reports agreement.
"""

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, laplacian
from .linalg import ExactDivisionError

__all__ = [
    "BRUTEFORCE_EDGE_LIMIT",
    "BruteForceBoundError",
    "METHOD_NAMES",
    "TreeCountReport",
    "compare_methods",
    "tau_bruteforce",
    "tau_cayley",
    "tau_charpoly",
    "tau_cofactor",
    "tau_rank_one",
]

METHOD_NAMES = ("cofactor", "rankone", "charpoly", "bruteforce")

# C(24, 12) ~ 2.7M subsets is the most the enumerator will attempt.
BRUTEFORCE_EDGE_LIMIT = 24


class BruteForceBoundError(ValueError):
    """The brute-force enumerator refuses graphs over its edge bound."""


def tau_cofactor(g: Graph, i: int = 1, j: int = 1) -> int:
    """Spanning trees via the Laplacian cofactor: (-1)**(i+j) times the
    determinant of the Laplacian with row i and column j deleted.

    The value is the same nonnegative count for every choice of (i, j).
    Needs at least two vertices.
    """
    if g.n < 2:
        raise ValueError("cofactor method needs at least 2 vertices")
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise IndexError(f"vertex pair ({i}, {j}) out of range for n={g.n}")
    sign = -1 if (i + j) % 2 else 1
    return sign * laplacian(g).minor_det(i, j)


def tau_rank_one(g: Graph, u=None, v=None) -> int:
    """Spanning trees via det(L + u*v^T) = sum(u) * sum(v) * tau.

    u and v default to all-ones. Both sums must be nonzero; the division
    is mathematically exact, so a nonzero remainder raises
    ExactDivisionError and means an internal bug.
    """
    n = g.n
    u = (1,) * n if u is None else tuple(u)
    v = (1,) * n if v is None else tuple(v)
    su, sv = sum(u), sum(v)
    if su == 0 or sv == 0:
        raise ValueError("perturbation vectors must have nonzero sum")
    d = laplacian(g).add_outer(u, v).det()
    q, r = divmod(d, su * sv)
    if r:
        raise ExactDivisionError(
            f"det {d} not divisible by sum(u)*sum(v) = {su * sv}"
        )
    return q


def tau_charpoly(g: Graph) -> int:
    """Spanning trees from the Laplacian characteristic polynomial.

    With char_poly = det(L - x*I) = (0 - x) * prod(nonzero eigenvalues - x),
    the degree-1 coefficient is -n * tau, so tau = -c1 / n exactly.
    """
    c1 = laplacian(g).char_poly().coefficient(1)
    q, r = divmod(-c1, g.n)
    if r:
        raise ExactDivisionError(f"coefficient {c1} not divisible by n = {g.n}")
    return q


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def tau_bruteforce(g: Graph) -> int:
    """Count spanning trees by enumerating every (n-1)-edge subset.

    A subset counts when it is acyclic (no edge joins two vertices the
    subset has already connected) and connected (one component covering
    all n vertices). Pure definition checking, no linear algebra.
    Refuses graphs with more than BRUTEFORCE_EDGE_LIMIT edges.
    """
    m = g.edge_count
    if m > BRUTEFORCE_EDGE_LIMIT:
        raise BruteForceBoundError(
            f"edge count {m} exceeds brute-force bound {BRUTEFORCE_EDGE_LIMIT}"
        )
    n = g.n
    k = n - 1
    if m < k:
        return 0
    count = 0
    edges = sorted(g.edges)
    for subset in combinations(edges, k):
        parent = list(range(n + 1))
        components = n
        for i, j in subset:
            ri, rj = _find(parent, i), _find(parent, j)
            if ri == rj:
                break  # cycle
            parent[ri] = rj
            components -= 1
        else:
            if components == 1:
                count += 1
    return count


def tau_cayley(n: int) -> int:
    """Spanning trees of the complete graph: n**(n-2), by Cayley's formula."""
    if n < 1:
        raise ValueError("needs at least one vertex")
    return 1 if n == 1 else n ** (n - 2)


@dataclass
class TreeCountReport:
    """Per-method spanning-tree counts for one graph.

    `counts` maps method name to its count, or None when the method was
    skipped; `skipped` holds the reasons. `agreement` is True iff every
    computed count is equal.
    """

    n: int
    edges: int
    counts: dict
    skipped: dict
    agreement: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "methods": {
                name: None if c is None else str(c)
                for name, c in self.counts.items()
            },
            "agreement": self.agreement,
        }

    def to_text(self) -> str:
        lines = [f"{'n':<11}{self.n}", f"{'edges':<11}{self.edges}"]
        for name, c in self.counts.items():
            val = f"skipped ({self.skipped[name]})" if c is None else str(c)
            lines.append(f"{name:<11}{val}")
        lines.append(f"{'agreement':<11}{'yes' if self.agreement else 'no'}")
        return "\n".join(lines) + "\n"


def compare_methods(g: Graph) -> TreeCountReport:
    """Run every applicable counter (u = v = all-ones, cofactor at (1, 1))
    and flag whether all computed counts agree.

    Methods whose preconditions fail are skipped with a reason instead
    of erroring: the cofactor needs two vertices, the brute-force
    enumerator has an edge bound.
    """
    counts: dict = {}
    skipped: dict = {}

    if g.n >= 2:
        counts["cofactor"] = tau_cofactor(g, 1, 1)
    else:
        counts["cofactor"] = None
        skipped["cofactor"] = "needs at least 2 vertices"

    counts["rankone"] = tau_rank_one(g)
    counts["charpoly"] = tau_charpoly(g)

    if g.edge_count <= BRUTEFORCE_EDGE_LIMIT:
        counts["bruteforce"] = tau_bruteforce(g)
    else:
        counts["bruteforce"] = None
        skipped["bruteforce"] = (
            f"edge count {g.edge_count} exceeds brute-force bound "
            f"{BRUTEFORCE_EDGE_LIMIT}"
        )

    computed = [c for c in counts.values() if c is not None]
    agreement = bool(computed) and len(set(computed)) == 1
    return TreeCountReport(
        n=g.n,
        edges=g.edge_count,
        counts=counts,
        skipped=skipped,
        agreement=agreement,
    )
