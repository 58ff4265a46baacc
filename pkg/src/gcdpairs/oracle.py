"""Independent brute-force reference implementations.

Everything in this module is ground truth for the optimized paths and shares
no code with them: the gcd loop, the adjacency build, and the searches are all
written from the definitions. Duplication here is deliberate. Performance is a
non-goal; each search carries a hard input bound instead.
"""

from __future__ import annotations

import itertools

import numpy as np

from .graph import CliqueWitness, GcdGraph, PathWitness
from .pairs import PairSet

MAX_CLIQUE_N = 26
MAX_CHROMATIC_N = 12
MAX_CYCLE_N = 15
MAX_DOMINATION_N = 20


class OracleBoundError(ValueError):
    """Raised when an exhaustive oracle is asked to exceed its input bound."""


def _gcd(a: int, b: int) -> int:
    # deliberately not math.gcd: the oracle keeps its own Euclid loop
    while b:
        a, b = b, a % b
    return a


def naive_enumerate(n: int) -> PairSet:
    """The definition, literally: every 0 <= a <= b < n with gcd(a, b) | n."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    pairs = []
    for a in range(n):
        for b in range(a, n):
            g = _gcd(a, b)
            if g > 0 and n % g == 0:
                pairs.append((a, b))
    return PairSet(n=n, pairs=tuple(pairs), label="full")


def naive_count(n: int) -> int:
    """Count of the same double loop, with the inner row vectorized so that
    sweeps over every prime power below 2048 stay inside the acceptance budget."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    total = 0
    for a in range(n):
        g = np.gcd(np.arange(a, n), a)
        g = g[g > 0]  # drops only gcd(0, 0)
        total += int(np.count_nonzero(n % g == 0))
    return total


def naive_restricted_count(n: int, elements) -> int:
    """Pairs with both endpoints in `elements`, by the definition."""
    chosen = sorted(set(elements))
    total = 0
    for i, a in enumerate(chosen):
        for b in chosen[i:]:
            g = _gcd(a, b)
            if g > 0 and n % g == 0:
                total += 1
    return total


def _adjacency(g: GcdGraph) -> list[set[int]]:
    # own adjacency build from the edge set; loops are not adjacency
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in g.simple_edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def exhaustive_max_clique(g: GcdGraph) -> CliqueWitness:
    """Maximum clique by unpruned recursion over all cliques (n <= 26).

    Cliques are visited in lexicographic order of their sorted vertex tuples,
    so keeping the first strictly larger one yields the lexicographically
    smallest maximum clique.
    """
    if g.n > MAX_CLIQUE_N:
        raise OracleBoundError(f"exhaustive_max_clique is bounded at n <= {MAX_CLIQUE_N}")
    adj = _adjacency(g)
    best: list[int] = []

    def extend(current: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = current[:]
        for v in candidates:
            current.append(v)
            extend(current, [u for u in candidates if u > v and u in adj[v]])
            current.pop()

    extend([], list(range(g.n)))
    return CliqueWitness(vertices=frozenset(best), maximal=True, maximum=True)


def exhaustive_chromatic(g: GcdGraph) -> int:
    """Smallest c admitting a proper coloring, by exhaustive assignment in
    natural vertex order with first-use symmetry pruning (n <= 12)."""
    if g.n > MAX_CHROMATIC_N:
        raise OracleBoundError(f"exhaustive_chromatic is bounded at n <= {MAX_CHROMATIC_N}")
    if g.n == 0:
        return 0
    adj = _adjacency(g)
    colors: dict[int, int] = {}

    def colorable(v: int, c: int, used: int) -> bool:
        if v == g.n:
            return True
        taken = {colors[u] for u in adj[v] if u in colors}
        for color in range(min(used + 1, c)):
            if color not in taken:
                colors[v] = color
                if colorable(v + 1, c, max(used, color + 1)):
                    return True
                del colors[v]
        return False

    for c in range(1, g.n + 1):
        colors.clear()
        if colorable(0, c, 0):
            return c
    return g.n


def exhaustive_hamiltonian(g: GcdGraph) -> tuple[PathWitness | None, int]:
    """(Hamiltonian cycle or None, maximum cycle order) for n <= 15.

    Exhaustive search over (visited subset, endpoint) states, run once per
    anchor vertex s with all other cycle vertices above s, so every cycle is
    examined exactly once up to rotation.
    """
    if g.n > MAX_CYCLE_N:
        raise OracleBoundError(f"exhaustive_hamiltonian is bounded at n <= {MAX_CYCLE_N}")
    n = g.n
    adjmask = [0] * n
    for a, b in g.simple_edges:
        adjmask[a] |= 1 << b
        adjmask[b] |= 1 << a

    best_order = 0
    ham: PathWitness | None = None
    for s in range(n):
        ends: dict[int, int] = {1 << s: 1 << s}
        frontier = [1 << s]
        i = 0
        while i < len(frontier):
            mask = frontier[i]
            i += 1
            size = bin(mask).count("1")
            endpoints = ends[mask]
            e = endpoints
            while e:
                vbit = e & -e
                e ^= vbit
                v = vbit.bit_length() - 1
                if size >= 3 and adjmask[v] >> s & 1 and size > best_order:
                    best_order = size
                    if size == n:
                        ham = PathWitness(
                            vertices=_reconstruct_cycle(n, v, ends, adjmask), closed=True
                        )
                above = adjmask[v] & ~mask & ~((1 << (s + 1)) - 1)
                w = above
                while w:
                    ubit = w & -w
                    w ^= ubit
                    nxt = mask | ubit
                    if nxt not in ends:
                        ends[nxt] = 0
                        frontier.append(nxt)
                    ends[nxt] |= ubit
        if ham is not None:
            break
    return ham, best_order


def _reconstruct_cycle(
    n: int, last: int, ends: dict[int, int], adjmask: list[int]
) -> tuple[int, ...]:
    """Walk the subset table backwards from (full vertex set, last) to the anchor.

    Only anchor 0 can reach a full-size subset (the search above an anchor s
    never touches vertices below s), so the walk starts from the full mask.
    """
    path = [last]
    mask = (1 << n) - 1
    v = last
    while bin(mask).count("1") > 1:
        prev_mask = mask & ~(1 << v)
        candidates = ends.get(prev_mask, 0) & adjmask[v]
        u = (candidates & -candidates).bit_length() - 1
        path.append(u)
        mask, v = prev_mask, u
    path.reverse()
    return tuple(path)


def exhaustive_domination(g: GcdGraph) -> int:
    """Minimum dominating set size by trying all vertex subsets, ascending (n <= 20)."""
    if g.n > MAX_DOMINATION_N:
        raise OracleBoundError(f"exhaustive_domination is bounded at n <= {MAX_DOMINATION_N}")
    adj = _adjacency(g)
    everyone = set(range(g.n))
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            covered = set(subset)
            for v in subset:
                covered |= adj[v]
            if covered == everyone:
                return size
    raise AssertionError("unreachable: the full vertex set always dominates")
