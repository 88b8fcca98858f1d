"""Seeded self-check suites behind the `verify` subcommand.

Each suite exercises one of the identities the library is built on, at
desk scale, with a deterministic seeded generator, and reports the first
counterexample it finds (there should never be one).
"""

import random
from dataclasses import dataclass

from .graphs import (
    Graph,
    PartitionSpec,
    ThresholdSequence,
    bipartite_minus_matching,
    complete_graph,
    complete_multipartite,
    laplacian,
    serialize_graph,
    threshold_graph,
)
from .linalg import IntMatrix, IntPolynomial
from .spectra import (
    Spectrum,
    deflate,
    identity_plus_ones_charpoly,
    perturbed_charpoly,
    spectrum_bipartite_minus_matching,
    spectrum_complete,
    spectrum_multipartite,
    spectrum_threshold_hk,
    spectrum_threshold_merris,
    spectrum_to_charpoly,
    threshold_perturbed_diagonal,
)
from .treecount import tau_bruteforce, tau_charpoly

__all__ = [
    "SUITE_NAMES",
    "SuiteResult",
    "random_graph",
    "run_suite",
]

_MINUS_X = IntPolynomial((0, -1))


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    failure: str | None = None


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Graph on n vertices with each possible edge present with probability p."""
    edges = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    )
    return Graph(n, edges)


def _random_vector(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> tuple:
    return tuple(rng.randint(lo, hi) for _ in range(n))


def _zero_sum_vector(rng: random.Random, n: int) -> tuple:
    """Vector summing to zero with entries in [-5, 5]."""
    if n < 2:
        return (0,) * n
    a = rng.randint(1, 5)
    i, j = rng.sample(range(n), 2)
    out = [0] * n
    out[i], out[j] = a, -a
    return tuple(out)


def _connected(g: Graph) -> bool:
    parent = list(range(g.n + 1))
    components = g.n
    for i, j in g.edges:
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj
            components -= 1
    return components == 1


def _find(parent: list, x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _counterexample(trial: int, g: Graph, **vectors) -> str:
    lines = [f"trial {trial}:", "graph:", serialize_graph(g).rstrip("\n")]
    lines.extend(f"{name} = {tuple(v)}" for name, v in vectors.items())
    return "\n".join(lines)


def check_perturbation_identity(seed: int, trials: int) -> SuiteResult:
    """char_poly(L + u*ones^T) * (0 - x) == char_poly(L) * (sum(u) - x).

    Stated multiplicatively so it covers every integer u, including
    sum(u) = 0 and sums colliding with an existing eigenvalue. For
    connected graphs also checks the all-ones specialization: deflating
    the perturbed polynomial by n recovers char_poly(L) / (0 - x).
    """
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(1, 10)
        if t % 7 == 3:
            # force sum(u) to collide with the eigenvalue n of the complete graph
            g = complete_graph(n)
            u = (min(n, 5), n - min(n, 5)) + (0,) * (n - 2) if n >= 2 else (1,)
        elif t % 5 == 2:
            g = random_graph(rng, n)
            u = _zero_sum_vector(rng, n)
        else:
            g = random_graph(rng, n)
            u = _random_vector(rng, n)
        L = laplacian(g)
        base = L.char_poly()
        lhs = perturbed_charpoly(L, u) * _MINUS_X
        rhs = base * IntPolynomial.linear(sum(u))
        if lhs != rhs:
            return SuiteResult(
                "thm1", False, t + 1, _counterexample(t, g, u=u)
            )
        if _connected(g):
            ones = (1,) * n
            quotient = deflate(perturbed_charpoly(L, ones), n)
            if quotient * _MINUS_X != base:
                return SuiteResult(
                    "thm1", False, t + 1, _counterexample(t, g, u=ones)
                )
    return SuiteResult("thm1", True, trials)


def check_rank_one_determinant(seed: int, trials: int) -> SuiteResult:
    """det(L + u*v^T) == sum(u) * sum(v) * tau, against the brute-force count.

    Zero-sum vectors are included; both sides are then zero.
    """
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        u = _zero_sum_vector(rng, n) if t % 4 == 1 else _random_vector(rng, n)
        v = _zero_sum_vector(rng, n) if t % 6 == 2 else _random_vector(rng, n)
        lhs = laplacian(g).add_outer(u, v).det()
        rhs = sum(u) * sum(v) * tau_bruteforce(g)
        if lhs != rhs:
            return SuiteResult(
                "eq1", False, t + 1, _counterexample(t, g, u=u, v=v)
            )
    return SuiteResult("eq1", True, trials)


def check_identity_plus_ones(seed: int = 0, trials: int = 0) -> SuiteResult:
    """Closed form for a*I + b*ones vs. the explicitly built matrix,
    for every (a, b) in [-3, 3]^2 and n in 1..6. Deterministic."""
    cases = 0
    for a in range(-3, 4):
        for b in range(-3, 4):
            for n in range(1, 7):
                cases += 1
                direct = (a * IntMatrix.identity(n) + b * IntMatrix.ones(n)).char_poly()
                if identity_plus_ones_charpoly(a, b, n) != direct:
                    return SuiteResult(
                        "eq3", False, cases, f"a={a} b={b} n={n}"
                    )
    return SuiteResult("eq3", True, cases)


def _random_partition(rng: random.Random, max_total: int = 12) -> PartitionSpec:
    remaining = rng.randint(1, max_total)
    parts = []
    while remaining:
        part = rng.randint(1, remaining)
        parts.append(part)
        remaining -= part
    return PartitionSpec(tuple(parts))


def random_threshold_sequence(rng: random.Random, max_len: int = 11) -> ThresholdSequence:
    word = "".join(rng.choice("ID") for _ in range(rng.randint(1, max_len)))
    return ThresholdSequence.from_word(word)


def check_families(seed: int, trials: int = 0) -> SuiteResult:
    """Each family's closed-form spectrum expands to exactly the
    characteristic polynomial of the generated graph's Laplacian.

    Runs complete graphs to n = 12, 50 random partitions (total <= 12),
    matching-removed bipartite to n = 6, 50 random threshold sequences
    (length <= 11), plus the 10-vertex matching-removed instance with
    its spanning-tree count cross-checked by brute force.
    """
    rng = random.Random(seed)
    cases = 0

    for n in range(1, 13):
        cases += 1
        if spectrum_to_charpoly(spectrum_complete(n)) != laplacian(complete_graph(n)).char_poly():
            return SuiteResult("families", False, cases, f"complete {n}")

    for _ in range(50):
        cases += 1
        spec = _random_partition(rng)
        expected = laplacian(complete_multipartite(spec)).char_poly()
        if spectrum_to_charpoly(spectrum_multipartite(spec)) != expected:
            return SuiteResult(
                "families", False, cases,
                f"multipartite {','.join(map(str, spec.parts))}"
            )

    for n in range(1, 7):
        cases += 1
        expected = laplacian(bipartite_minus_matching(n)).char_poly()
        if spectrum_to_charpoly(spectrum_bipartite_minus_matching(n)) != expected:
            return SuiteResult("families", False, cases, f"kxx-minus-matching {n}")

    for _ in range(50):
        cases += 1
        seq = random_threshold_sequence(rng)
        expected = laplacian(threshold_graph(seq)).char_poly()
        if spectrum_to_charpoly(spectrum_threshold_hk(seq)) != expected:
            return SuiteResult("families", False, cases, f"threshold {seq.word()}")

    # the showcase instance: 10 vertices, spectrum 0^1 3^4 5^4 8^1, 40500 trees
    cases += 1
    g = bipartite_minus_matching(5)
    spectrum = spectrum_bipartite_minus_matching(5)
    if spectrum.pairs != ((0, 1), (3, 4), (5, 4), (8, 1)):
        return SuiteResult("families", False, cases, "kxx-minus-matching 5 spectrum")
    if tau_charpoly(g) != 40500 or tau_bruteforce(g) != 40500:
        return SuiteResult("families", False, cases, "kxx-minus-matching 5 tree count")

    return SuiteResult("families", True, cases)


def check_threshold_spectra(seed: int = 0, trials: int = 0) -> SuiteResult:
    """Merris and Hammer-Kelmans spectra agree for every construction
    sequence of length 1..8, and the perturbed upper-triangular diagonal
    with the initial entry replaced by 0 reproduces the same multiset.
    Deterministic and exhaustive (510 sequences)."""
    cases = 0
    for length in range(1, 9):
        for bits in range(1 << length):
            cases += 1
            word = "".join("D" if bits >> i & 1 else "I" for i in range(length))
            seq = ThresholdSequence.from_word(word)
            hk = spectrum_threshold_hk(seq)
            merris = spectrum_threshold_merris(threshold_graph(seq))
            if hk != merris:
                return SuiteResult("merris-hk", False, cases, f"threshold {word}")
            diag = threshold_perturbed_diagonal(seq)
            from_diag = Spectrum.from_values([0] + diag[1:])
            if from_diag != hk:
                return SuiteResult(
                    "merris-hk", False, cases, f"threshold {word} (diagonal)"
                )
    return SuiteResult("merris-hk", True, cases)


SUITE_NAMES = ("thm1", "eq1", "eq3", "families", "merris-hk")

_SUITES = {
    "thm1": check_perturbation_identity,
    "eq1": check_rank_one_determinant,
    "eq3": check_identity_plus_ones,
    "families": check_families,
    "merris-hk": check_threshold_spectra,
}


def run_suite(name: str, seed: int, trials: int) -> SuiteResult:
    return _SUITES[name](seed, trials)
