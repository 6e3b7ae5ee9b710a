"""Perfect and fractional matching decisions with verifiable certificates.

Maximum matchings come from Edmonds' blossom algorithm. A graph with no
perfect matching is explained by a Tutte certificate: a vertex set S with
o(G-S) > |S| (for even order, o(G-S) >= |S|+2 by parity). Fractional perfect
matchings are decided on the bipartite double cover and certified either by a
half-integral weighting or by a set S with more than |S| isolated vertices in
G-S. Exponential brute-force oracles back all of it at small order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .graphs import (
    Graph,
    ParameterError,
    _iter_bits,
    isolated_count,
    odd_components,
    universal_mask,
    vertices_from_mask,
)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges of a host graph."""

    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)

    def covered_mask(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << u | 1 << v
        return mask

    def is_valid_for(self, g: Graph) -> bool:
        seen = 0
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            pair = 1 << u | 1 << v
            if seen & pair:
                return False
            seen |= pair
        return True


@dataclass(frozen=True)
class TutteCertificate:
    """Vertex set S (as a mask) with o(G-S) >= |S| + 2; proof that no perfect matching exists."""

    vertex_mask: int
    odd_count: int

    @property
    def size(self) -> int:
        return self.vertex_mask.bit_count()

    @property
    def deficiency(self) -> int:
        return self.odd_count - self.size

    def vertices(self) -> list[int]:
        return vertices_from_mask(self.vertex_mask)

    def holds_for(self, g: Graph) -> bool:
        return odd_components(g, self.vertex_mask) == self.odd_count and self.deficiency >= 1


class _Unknown:
    """Sentinel: the search was inconclusive (too large for exhaustion, heuristics failed)."""

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self) -> bool:
        return False


UNKNOWN = _Unknown()


# ---------------------------------------------------------------------------
# maximum matching (blossom contraction)


def max_matching(g: Graph) -> Matching:
    """Maximum matching via repeated augmentation with blossom contraction, O(n^3)."""
    n = g.n
    match = [-1] * n
    # greedy warm start saves most augmentation rounds
    for v in range(n):
        if match[v] == -1:
            for u in _iter_bits(g.rows[v]):
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for root in range(n):
        if match[root] == -1:
            _augment_from(g, match, root)
    edges = frozenset((v, match[v]) for v in range(n) if match[v] > v)
    return Matching(edges)


def _augment_from(g: Graph, match: list[int], root: int) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = [root]

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, stop: int, child: int, flag: list[bool]):
        while base[v] != stop:
            flag[base[v]] = True
            flag[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for u in _iter_bits(g.rows[v]):
            if base[u] == base[v] or match[v] == u:
                continue
            if u == root or (match[u] != -1 and parent[match[u]] != -1):
                # odd cycle: contract the blossom at the common base
                stop = lowest_common_base(v, u)
                flag = [False] * n
                mark_path(v, stop, u, flag)
                mark_path(u, stop, v, flag)
                for w in range(n):
                    if flag[base[w]]:
                        base[w] = stop
                        if not in_tree[w]:
                            in_tree[w] = True
                            queue.append(w)
            elif parent[u] == -1 and u != root:
                parent[u] = v
                if match[u] == -1:
                    # augmenting path found; flip it
                    while u != -1:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                w = match[u]
                if not in_tree[w]:
                    in_tree[w] = True
                    queue.append(w)
    return False


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * len(max_matching(g)) == g.n


# ---------------------------------------------------------------------------
# brute-force oracles (independent of the blossom code path)


_BRUTE_CAP = 16


def has_pm_bruteforce(g: Graph) -> bool:
    """Perfect matching decision by subset dynamic programming; n <= 16."""
    n = g.n
    if n > _BRUTE_CAP:
        raise ParameterError(f"brute force capped at n={_BRUTE_CAP}, got {n}")
    if n % 2:
        return False
    full = g.full_mask
    reachable = {0}
    frontier = [0]
    while frontier:
        mask = frontier.pop()
        if mask == full:
            return True
        free = ~mask & full
        v = (free & -free).bit_length() - 1
        for u in _iter_bits(g.rows[v] & free):
            nxt = mask | 1 << v | 1 << u
            if nxt not in reachable:
                reachable.add(nxt)
                frontier.append(nxt)
    return full in reachable


def max_matching_size_bruteforce(g: Graph) -> int:
    """Matching number by memoized branch on the lowest uncovered vertex; n <= 16."""
    if g.n > _BRUTE_CAP:
        raise ParameterError(f"brute force capped at n={_BRUTE_CAP}, got {g.n}")
    rows = g.rows
    full = g.full_mask
    memo: dict[int, int] = {full: 0}

    def best(mask: int) -> int:
        if mask == full:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        free = ~mask & full
        v = (free & -free).bit_length() - 1
        result = best(mask | 1 << v)  # leave v uncovered
        for u in _iter_bits(rows[v] & free):
            result = max(result, 1 + best(mask | 1 << v | 1 << u))
        memo[mask] = result
        return result

    return best(0)


def tutte_deficiency_bruteforce(g: Graph) -> tuple[int, int]:
    """(max over S of o(G-S) - |S|, first maximizing S); exhaustive over 2^n subsets."""
    if g.n > _BRUTE_CAP:
        raise ParameterError(f"brute force capped at n={_BRUTE_CAP}, got {g.n}")
    best_def = -(g.n + 1)
    best_mask = 0
    for mask in range(1 << g.n):
        d = odd_components(g, mask) - mask.bit_count()
        if d > best_def:
            best_def = d
            best_mask = mask
    return best_def, best_mask


# ---------------------------------------------------------------------------
# Tutte certificates


def _gosper_masks(n: int, size: int) -> Iterator[int]:
    # all n-bit masks of the given popcount, in increasing numeric order
    if size == 0:
        yield 0
        return
    mask = (1 << size) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | ((mask ^ ripple) >> (low.bit_length() + 1))


_EXHAUSTIVE_CAP = 16
_HEURISTIC_SIZE_CAP = 3


def tutte_certificate(g: Graph, exhaustive_limit: int = _EXHAUSTIVE_CAP):
    """Certificate that G has no perfect matching, or None if one exists.

    For n <= exhaustive_limit the subsets are scanned by (size, mask), so the
    returned certificate is the smallest violating set, numerically first
    among those. Above the limit a bounded heuristic runs (subsets of size
    <= 3, closed neighborhoods, the universal-vertex hub); if it finds
    nothing, UNKNOWN is returned rather than an unsupported claim.
    """
    if has_perfect_matching(g):
        return None
    if g.n <= exhaustive_limit:
        for size in range(g.n + 1):
            for mask in _gosper_masks(g.n, size):
                odd = odd_components(g, mask)
                if odd > size:
                    return TutteCertificate(mask, odd)
        raise AssertionError("no perfect matching yet no violating set")
    candidates: list[int] = [0]
    candidates.extend(1 << v for v in range(g.n))
    if g.n <= 24:
        for size in range(2, _HEURISTIC_SIZE_CAP + 1):
            candidates.extend(_gosper_masks(g.n, size))
    for v in range(g.n):
        candidates.append(g.rows[v])
        candidates.append(g.rows[v] | 1 << v)
    hub = universal_mask(g)
    if hub:
        candidates.append(hub)
    candidates.sort(key=lambda m: (m.bit_count(), m))
    seen: set[int] = set()
    for mask in candidates:
        if mask in seen:
            continue
        seen.add(mask)
        odd = odd_components(g, mask)
        if odd > mask.bit_count():
            return TutteCertificate(mask, odd)
    return UNKNOWN


# ---------------------------------------------------------------------------
# fractional perfect matchings via the bipartite double cover


def _cover_matching(g: Graph) -> list[int]:
    """Maximum matching of the double cover (left u -- right v iff uv in E), Kuhn's algorithm."""
    n = g.n
    match_right = [-1] * n  # right vertex -> left vertex
    match_left = [-1] * n

    def try_augment(v: int, visited: list[bool]) -> bool:
        for u in _iter_bits(g.rows[v]):
            if not visited[u]:
                visited[u] = True
                if match_right[u] == -1 or try_augment(match_right[u], visited):
                    match_right[u] = v
                    match_left[v] = u
                    return True
        return False

    order = sorted(range(n), key=g.degree)
    for v in order:
        if match_left[v] == -1:
            try_augment(v, [False] * n)
    return match_left


def has_fractional_pm(g: Graph) -> bool:
    """True iff G admits edge weights in [0,1] summing to exactly 1 at every vertex.

    Equivalent to the bipartite double cover having a perfect matching, and to
    i(G-S) <= |S| for every vertex set S.
    """
    if g.n == 0:
        return True
    match_left = _cover_matching(g)
    return all(m != -1 for m in match_left)


@dataclass(frozen=True)
class FractionalWitness:
    """Half-integral edge weights certifying a fractional perfect matching."""

    weights: tuple[tuple[tuple[int, int], Fraction], ...]

    def weight_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.weights)

    def holds_for(self, g: Graph) -> bool:
        sums = [Fraction(0)] * g.n
        for (u, v), w in self.weights:
            if not g.has_edge(u, v) or not 0 <= w <= 1:
                return False
            sums[u] += w
            sums[v] += w
        return all(s == 1 for s in sums)


def fractional_pm_witness(g: Graph) -> FractionalWitness | None:
    """Half-integral witness from a perfect matching of the double cover, or None.

    Edge uv gets weight (1/2) * [sigma(u) = v] + (1/2) * [sigma(v) = u], which
    lands in {1/2, 1}: matched pairs that agree in both directions give weight
    1, and the disagreeing ones decompose into even cycles of weight 1/2.
    """
    if g.n == 0:
        return FractionalWitness(())
    match_left = _cover_matching(g)
    if any(m == -1 for m in match_left):
        return None
    half = Fraction(1, 2)
    acc: dict[tuple[int, int], Fraction] = {}
    for v, u in enumerate(match_left):
        key = (min(u, v), max(u, v))
        acc[key] = acc.get(key, Fraction(0)) + half
    return FractionalWitness(tuple(sorted(acc.items())))


def fractional_violator(g: Graph) -> int | None:
    """Mask S with i(G-S) > |S| when no fractional perfect matching exists, else None.

    Extracted from a maximum cover matching by alternating reachability: from
    the unmatched left vertices, walk non-matching edges left to right and
    matching edges right to left; S is the set of reached right vertices.
    """
    if g.n == 0:
        return None
    match_left = _cover_matching(g)
    exposed = [v for v in range(g.n) if match_left[v] == -1]
    if not exposed:
        return None
    match_right = [-1] * g.n
    for v, u in enumerate(match_left):
        if u != -1:
            match_right[u] = v
    left_reached = 0
    right_reached = 0
    stack = list(exposed)
    for v in exposed:
        left_reached |= 1 << v
    while stack:
        v = stack.pop()
        for u in _iter_bits(g.rows[v] & ~right_reached):
            right_reached |= 1 << u
            w = match_right[u]
            if w != -1 and not left_reached >> w & 1:
                left_reached |= 1 << w
                stack.append(w)
    # reached left vertices outside S are isolated in G-S; Koenig duality
    # guarantees strictly more of them than |S|
    violating = right_reached
    assert isolated_count(g, violating) > violating.bit_count()
    return violating


def has_fractional_pm_exhaustive(g: Graph) -> bool:
    """Oracle: check i(G-S) <= |S| over all 2^n subsets; n <= 16."""
    if g.n > _BRUTE_CAP:
        raise ParameterError(f"brute force capped at n={_BRUTE_CAP}, got {g.n}")
    for mask in range(1 << g.n):
        if isolated_count(g, mask) > mask.bit_count():
            return False
    return True


def parity_deficiency_ok(g: Graph, cert: TutteCertificate) -> bool:
    """Even order forces o(G-S) = |S| (mod 2), so a violating S has surplus >= 2."""
    if g.n % 2:
        return cert.deficiency >= 1
    return cert.deficiency >= 2 and (cert.odd_count - cert.size) % 2 == 0
