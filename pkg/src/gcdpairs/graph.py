"""The graph on vertex set Z_n whose edge family is the gcd-pair set.

Simple edges and loops are stored separately: a loop sits at every a >= 1 with
a | n (gcd(a, a) = a), but coloring and planarity ignore loops. All
witness-returning searches break ties lexicographically so outputs are
deterministic and golden-testable.

Exact searches (maximum clique, chromatic number) carry configurable input
bounds and raise ExactSearchBoundError beyond them rather than approximating.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import networkx as nx

from .numtheory import prime_power_decompose, primes_below
from .pairs import iter_pairs

ENV_MAX_EXACT = "GCDPAIRS_MAX_EXACT"


@dataclass(frozen=True)
class SearchBounds:
    """Largest n each exact search accepts before raising."""

    clique_exact: int = 64
    chromatic_exact: int = 16

    @classmethod
    def from_env(cls) -> "SearchBounds":
        raw = os.environ.get(ENV_MAX_EXACT)
        if raw is None:
            return cls()
        limit = int(raw)
        return cls(clique_exact=limit, chromatic_exact=limit)


DEFAULT_BOUNDS = SearchBounds()


class ExactSearchBoundError(ValueError):
    """An exact search was asked to exceed its configured input bound."""


@dataclass(frozen=True)
class GcdGraph:
    n: int
    simple_edges: frozenset[tuple[int, int]]
    loops: frozenset[int]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.simple_edges)

    def to_json_dict(self, invariants: dict | None = None) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "edges": [[a, b] for a, b in self.sorted_edges()],
            "loops": sorted(self.loops),
            "invariants": invariants,
        }


def graph_from_json_dict(payload: dict) -> GcdGraph:
    edges = frozenset((int(a), int(b)) for a, b in payload["edges"])
    return GcdGraph(n=int(payload["n"]), simple_edges=edges, loops=frozenset(payload["loops"]))


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    closed: bool = False


@dataclass(frozen=True)
class StarWitness:
    center: int
    leaves: frozenset[int]


@dataclass(frozen=True)
class CliqueWitness:
    vertices: frozenset[int]
    maximal: bool
    maximum: bool

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class ColoringWitness:
    colors: dict[int, int]
    color_count: int
    exact: bool


@dataclass(frozen=True)
class HamiltonicityResult:
    """Either a validated Hamiltonian cycle or, for odd n, the independent set
    of even residues whose size (n+1)/2 > n/2 rules one out."""

    cycle: PathWitness | None
    obstruction: frozenset[int] | None


def build(n: int) -> GcdGraph:
    """Graph of Z_n: edge {a, b} for each pair with a != b, loop where a pairs
    with itself."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    edges = set()
    loops = set()
    for a, b in iter_pairs(n):
        if a == b:
            loops.add(a)
        else:
            edges.add((a, b))
    return GcdGraph(n=n, simple_edges=frozenset(edges), loops=frozenset(loops))


@lru_cache(maxsize=256)
def _adjacency(g: GcdGraph) -> tuple[frozenset[int], ...]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in g.simple_edges:
        adj[a].add(b)
        adj[b].add(a)
    return tuple(frozenset(s) for s in adj)


def _adjacency_masks(g: GcdGraph) -> list[int]:
    masks = [0] * g.n
    for a, b in g.simple_edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    return masks


def _has_edge(g: GcdGraph, a: int, b: int) -> bool:
    return (a, b) in g.simple_edges if a < b else (b, a) in g.simple_edges


def _validate_path(g: GcdGraph, witness: PathWitness) -> PathWitness:
    vs = witness.vertices
    if len(set(vs)) != len(vs):
        raise AssertionError(f"repeated vertex in path {vs}")
    for u, v in zip(vs, vs[1:]):
        if not _has_edge(g, u, v):
            raise AssertionError(f"missing edge {{{u},{v}}} in G_{g.n}")
    if witness.closed:
        if len(vs) < 3:
            raise AssertionError(f"cycle needs >= 3 vertices, got {vs}")
        if not _has_edge(g, vs[-1], vs[0]):
            raise AssertionError(f"missing closing edge {{{vs[-1]},{vs[0]}}} in G_{g.n}")
    return witness


def is_connected(g: GcdGraph) -> bool:
    if g.n == 1:
        return True
    adj = _adjacency(g)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def star_subgraph(g: GcdGraph) -> StarWitness:
    """Maximal star centered at 1: {1, a} is an edge for every other a."""
    if g.n < 2:
        raise ValueError(f"star_subgraph requires n >= 2, got {g.n}")
    leaves = frozenset(range(g.n)) - {1}
    for a in leaves:
        if not _has_edge(g, 1, a):
            raise AssertionError(f"missing star edge {{1,{a}}} in G_{g.n}")
    return StarWitness(center=1, leaves=leaves)


def embedding_check(m: int, n: int) -> tuple[bool, list[tuple[int, int]]]:
    """Does G_m embed identically (labels 0..m-1) into G_n? Requires m | n."""
    if m < 1 or n % m != 0:
        raise ValueError(f"{m} does not divide {n}")
    g_small, g_big = build(m), build(n)
    missing = [e for e in g_small.sorted_edges() if e not in g_big.simple_edges]
    missing += [(a, a) for a in sorted(g_small.loops) if a not in g_big.loops]
    return (not missing, missing)


def domination_number(g: GcdGraph) -> tuple[int, frozenset[int]]:
    """Exact domination number with witness.

    Vertex 1 neighbors everything, so {1} always dominates and is returned
    first (the distinguished construction); the generic ascending search below
    only runs if that construction ever failed.
    """
    if g.n < 2:
        raise ValueError(f"domination_number requires n >= 2, got {g.n}")
    adj = _adjacency(g)
    if adj[1] | {1} == set(range(g.n)):
        return (1, frozenset({1}))
    everyone = set(range(g.n))
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            covered = set(subset)
            for v in subset:
                covered |= adj[v]
            if covered == everyone:
                return (size, frozenset(subset))
    raise AssertionError("unreachable: the full vertex set dominates")


def has_triangle(g: GcdGraph) -> PathWitness | None:
    """A triangle if one exists: (1, 2, 3) is always one for n >= 4 (consecutive
    residues are coprime); otherwise an exhaustive lexicographic scan."""
    if g.n >= 4:
        return _validate_path(g, PathWitness(vertices=(1, 2, 3), closed=True))
    adj = _adjacency(g)
    for a in range(g.n):
        for b in sorted(adj[a]):
            if b <= a:
                continue
            for c in sorted(adj[a] & adj[b]):
                if c > b:
                    return PathWitness(vertices=(a, b, c), closed=True)
    return None


def hamiltonian_path(g: GcdGraph) -> PathWitness:
    """The canonical Hamiltonian path (0, 1, ..., n-1); consecutive residues
    are coprime so every edge exists."""
    if g.n < 2:
        raise ValueError(f"hamiltonian_path requires n >= 2, got {g.n}")
    return _validate_path(g, PathWitness(vertices=tuple(range(g.n)), closed=False))


def hamiltonian_cycle(g: GcdGraph) -> HamiltonicityResult:
    """Constructive Hamiltonian cycle for even n > 2; for odd n, no cycle exists
    and the even residues are returned as the obstruction (an independent set
    larger than n/2); n = 2 has no cycle at all."""
    if g.n < 2:
        raise ValueError(f"hamiltonian_cycle requires n >= 2, got {g.n}")
    n = g.n
    if n == 2:
        return HamiltonicityResult(cycle=None, obstruction=None)
    if n % 2 == 0:
        cycle = PathWitness(vertices=(0,) + tuple(range(2, n)) + (1,), closed=True)
        return HamiltonicityResult(cycle=_validate_path(g, cycle), obstruction=None)
    evens = frozenset(range(0, n, 2))
    adj = _adjacency(g)
    for v in evens:
        if adj[v] & evens:
            raise AssertionError(f"even residues not independent in G_{n}")
    return HamiltonicityResult(cycle=None, obstruction=evens)


def longest_cycle_constructive(g: GcdGraph) -> PathWitness:
    """For odd n >= 5 the cycle (1, 2, ..., n-1) has order n - 1, the maximum
    (no Hamiltonian cycle exists for odd n)."""
    if g.n % 2 == 0 or g.n < 5:
        raise ValueError(f"longest_cycle_constructive requires odd n >= 5, got {g.n}")
    return _validate_path(g, PathWitness(vertices=tuple(range(1, g.n)), closed=True))


def _greedy_color_count(adjmask: list[int], order: list[int]) -> int:
    classes: list[int] = []  # one occupancy mask per color class
    for v in order:
        for i, mask in enumerate(classes):
            if not adjmask[v] & mask:
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
    return len(classes)


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return out


def _clique_over(adjmask: list[int], cand: int, stop_at: int | None = None) -> int:
    """Largest clique size within the candidate mask, branch and bound with a
    greedy-coloring upper bound. Stops early once `stop_at` is reached."""
    best = 0

    def bb(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if stop_at is not None and best >= stop_at:
            return
        if not cand:
            return
        verts = _mask_to_list(cand)
        if size + _greedy_color_count(adjmask, verts) <= best:
            return
        rest = cand
        for v in verts:
            rest &= ~(1 << v)
            if size + 1 + bin(rest & adjmask[v]).count("1") <= best:
                continue
            bb(size + 1, adjmask[v] & rest)
            if stop_at is not None and best >= stop_at:
                return

    bb(0, cand)
    return best


def max_clique(g: GcdGraph, bounds: SearchBounds = DEFAULT_BOUNDS) -> CliqueWitness:
    """Exact maximum clique, certified by branch and bound; the witness is the
    lexicographically smallest maximum clique."""
    if g.n > bounds.clique_exact:
        raise ExactSearchBoundError(
            f"max_clique bounded at n <= {bounds.clique_exact}, got {g.n}"
        )
    adjmask = _adjacency_masks(g)
    everyone = (1 << g.n) - 1
    omega = _clique_over(adjmask, everyone)
    chosen: list[int] = []
    cand = everyone
    while len(chosen) < omega:
        needed = omega - len(chosen) - 1
        for v in _mask_to_list(cand):
            tail = adjmask[v] & cand & ~((1 << (v + 1)) - 1)
            if _clique_over(adjmask, tail, stop_at=needed) >= needed:
                chosen.append(v)
                cand = tail
                break
        else:
            raise AssertionError("lexicographic clique extraction lost the optimum")
    return CliqueWitness(vertices=frozenset(chosen), maximal=True, maximum=True)


def _is_clique_in_ring(n: int, vertices: list[int]) -> bool:
    for i, a in enumerate(vertices):
        for b in vertices[i + 1 :]:
            g = gcd(a, b)
            if g == 0 or n % g != 0:
                return False
    return True


def _extension_candidates(n: int, vertices: set[int]) -> list[int]:
    out = []
    for v in range(n):
        if v in vertices:
            continue
        ok = True
        for u in vertices:
            if u == v:
                continue
            g = gcd(u, v)
            if g == 0 or n % g != 0:
                ok = False
                break
        if ok:
            out.append(v)
    return out


def clique_construction(n: int) -> CliqueWitness:
    """The closed-form clique for n, adjacency-validated.

    - n = 2: {0, 1}.
    - prime powers p^k: {1} + primes below n other than p + {p, ..., p^(k-1)};
      order (number of other primes) + k, and provably maximal.
    - products of two distinct primes p < q: of the advertised vertex family
      {1, primes below pq, p^2, ..., p^k} only one power above p can be kept
      (two distinct powers p^i, p^j with 2 <= i < j collide: gcd = p^i does not
      divide pq), so the largest valid subset {1} + primes + {p^2} is returned.
    - anything else: {1} + primes below n, greedily extended to a maximal clique.

    The maximal flag reports an explicit single-vertex extension test; maximum
    is never claimed (use max_clique for that).
    """
    if n < 2:
        raise ValueError(f"clique_construction requires n >= 2, got {n}")
    if n == 2:
        vertices = {0, 1}
    else:
        pp = prime_power_decompose(n)
        primes = primes_below(n)
        if pp is not None:
            others = [r for r in primes if r != pp.p]
            vertices = {1, *others, *(pp.p**j for j in range(1, pp.k))}
        else:
            prime_factors = [p for p in primes if n % p == 0]
            if len(prime_factors) == 2 and prime_factors[0] * prime_factors[1] == n:
                p = prime_factors[0]
                vertices = {1, *primes, p * p}
            else:
                vertices = {1, *primes}
                for v in range(n):  # greedy lexicographic extension to maximality
                    if v not in vertices and all(
                        (g := gcd(u, v)) > 0 and n % g == 0 for u in vertices
                    ):
                        vertices.add(v)
    ordered = sorted(vertices)
    if not _is_clique_in_ring(n, ordered):
        raise AssertionError(f"construction for n={n} is not pairwise adjacent: {ordered}")
    maximal = not _extension_candidates(n, set(vertices))
    return CliqueWitness(vertices=frozenset(vertices), maximal=maximal, maximum=False)


def greedy_coloring(g: GcdGraph) -> ColoringWitness:
    """Upper bound: first-fit in natural vertex order; tagged non-exact."""
    adj = _adjacency(g)
    colors: dict[int, int] = {}
    for v in range(g.n):
        taken = {colors[u] for u in adj[v] if u in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    count = (max(colors.values()) + 1) if colors else 0
    return ColoringWitness(colors=colors, color_count=count, exact=False)


def chromatic_number(g: GcdGraph, bounds: SearchBounds = DEFAULT_BOUNDS) -> ColoringWitness:
    """Exact chromatic number (loops ignored) by backtracking between the
    max-clique lower bound and the greedy upper bound."""
    if g.n > bounds.chromatic_exact:
        raise ExactSearchBoundError(
            f"chromatic_number bounded at n <= {bounds.chromatic_exact}, got {g.n}"
        )
    if g.n == 0:
        return ColoringWitness(colors={}, color_count=0, exact=True)
    adj = _adjacency(g)
    adjmask = _adjacency_masks(g)
    lower = _clique_over(adjmask, (1 << g.n) - 1)
    greedy = greedy_coloring(g)
    if greedy.color_count <= lower:
        return ColoringWitness(colors=_canonical_colors(greedy.colors, g.n),
                               color_count=greedy.color_count, exact=True)
    order = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    for k in range(lower, greedy.color_count):
        assignment: dict[int, int] = {}

        def place(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            taken = {assignment[u] for u in adj[v] if u in assignment}
            for c in range(min(used + 1, k)):
                if c not in taken:
                    assignment[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
                    del assignment[v]
            return False

        if place(0, 0):
            return ColoringWitness(colors=_canonical_colors(assignment, g.n),
                                   color_count=k, exact=True)
    return ColoringWitness(colors=_canonical_colors(greedy.colors, g.n),
                           color_count=greedy.color_count, exact=True)


def _canonical_colors(colors: dict[int, int], n: int) -> dict[int, int]:
    """Relabel color classes by first appearance over vertices 0..n-1."""
    relabel: dict[int, int] = {}
    out: dict[int, int] = {}
    for v in range(n):
        c = colors[v]
        if c not in relabel:
            relabel[c] = len(relabel)
        out[v] = relabel[c]
    return out


def is_planar(g: GcdGraph) -> bool:
    """Exact planarity of the simple-edge graph (loops are irrelevant)."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.simple_edges)
    planar, _ = nx.check_planarity(graph)
    return planar


def export_dot(g: GcdGraph) -> str:
    """Undirected DOT text: loops first, then edges in lexicographic order."""
    lines = [f"graph G{g.n} {{"]
    lines += [f"{a} -- {a};" for a in sorted(g.loops)]
    lines += [f"{a} -- {b};" for a, b in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def analyze(g: GcdGraph, bounds: SearchBounds = DEFAULT_BOUNDS) -> tuple[dict, list[str]]:
    """Invariant summary for the CLI's graph report; exact fields outside the
    configured bounds come back None with an explanatory note."""
    notes: list[str] = []
    if g.n == 1:
        invariants = {
            "connected": True,
            "gamma": 1,
            "triangle": False,
            "traceable": True,
            "hamiltonian": False,
            "clique_number": 1,
            "chromatic_number": 1,
            "planar": True,
        }
        return invariants, notes
    clique_number: int | None = None
    if g.n <= bounds.clique_exact:
        clique_number = len(max_clique(g, bounds).vertices)
    else:
        notes.append(
            f"clique_number: exact search skipped (n > {bounds.clique_exact}); "
            f"construction gives a maximal clique of order "
            f"{len(clique_construction(g.n).vertices)}"
        )
    chromatic: int | None = None
    if g.n <= bounds.chromatic_exact:
        chromatic = chromatic_number(g, bounds).color_count
    else:
        notes.append(
            f"chromatic_number: exact search skipped (n > {bounds.chromatic_exact}); "
            f"greedy upper bound = {greedy_coloring(g).color_count}"
        )
    invariants = {
        "connected": is_connected(g),
        "gamma": domination_number(g)[0],
        "triangle": has_triangle(g) is not None,
        "traceable": _validate_path(g, hamiltonian_path(g)) is not None,
        "hamiltonian": hamiltonian_cycle(g).cycle is not None,
        "clique_number": clique_number,
        "chromatic_number": chromatic,
        "planar": is_planar(g),
    }
    return invariants, notes
