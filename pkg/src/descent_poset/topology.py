"""Order complexes of open intervals and their GF(2) homology.

The order complex of (sigma, pi) has the interior elements as vertices
and the chains of the interior as faces; intervals are graded by length,
so the complex is pure of dimension |pi| - |sigma| - 2.  Faces include
the empty chain, and homology is reduced: the empty complex {<>} has
Betti vector (1,) in dimension -1 and reduced Euler characteristic -1,
matching mu = -1 on rank-1 intervals.

Betti numbers are computed over the two-element field by Gaussian
elimination on boundary matrices packed into Python integers.  For
complexes that are wedges of spheres this agrees with the rational
Betti numbers; reports always label the field so that torsion ambiguity
in unproven cases stays visible.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import config
from .errors import PreconditionError
from .intervals import Interval, build_interval, closure_of, iter_bits
from .perms import (
    Embedding,
    Permutation,
    contains,
    descent_count,
    embeddings,
    parse_permutation,
)
from .mobius import mobius_same_descents

BOTTOM_ONE = Permutation((1,))
BOTTOM_21 = Permutation((2, 1))

OBSTRUCTION_PATTERNS = (parse_permutation("456123"), parse_permutation("356124"))


class OrderComplex:
    """Simplicial complex of chains in the open interval (bottom, top).

    Vertices are sorted by (length, letters); `down_adj[v]` / `up_adj[v]`
    are bitmasks of the vertices strictly below / above vertex v.  Facets
    (maximal chains) are enumerated lazily by depth-first traversal of the
    interior cover relation with lexicographic child order.
    """

    def __init__(self, interval: Interval):
        self.bottom = interval.bottom
        self.top = interval.top
        closure = interval.closure
        interior = interval.interior_indices()
        self.vertices = tuple(Permutation(closure.elements[i]) for i in interior)
        vmap = {ci: v for v, ci in enumerate(interior)}
        interior_mask_closure = 0
        for ci in interior:
            interior_mask_closure |= 1 << ci
        down_adj = []
        for ci in interior:
            mask = 0
            below = closure.down_masks[ci] & interior_mask_closure & ~(1 << ci)
            for cj in iter_bits(below):
                mask |= 1 << vmap[cj]
            down_adj.append(mask)
        self.down_adj = down_adj
        up_adj = [0] * len(interior)
        for v, mask in enumerate(down_adj):
            bit = 1 << v
            for u in iter_bits(mask):
                up_adj[u] |= bit
        self.up_adj = up_adj
        self.rank = interval.rank
        self.dim = max(self.rank - 2, -1)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def _vertex_levels(self) -> list[int]:
        return [len(v) for v in self.vertices]

    @cached_property
    def facets(self) -> tuple[tuple[Permutation, ...], ...]:
        """Maximal chains of the interior, DFS order with lex children."""
        if not self.vertices:
            return ((),)
        levels = self._vertex_levels()
        low = len(self.bottom) + 1
        high = len(self.top) - 1
        # Cover adjacency within the interior: one level up and comparable.
        cover_up = []
        for v, mask in enumerate(self.up_adj):
            cover_up.append([u for u in iter_bits(mask) if levels[u] == levels[v] + 1])
        out: list[tuple[int, ...]] = []
        chain: list[int] = []

        def walk(v: int) -> None:
            chain.append(v)
            if levels[v] == high:
                out.append(tuple(chain))
            else:
                for u in cover_up[v]:
                    walk(u)
            chain.pop()

        for v in range(len(self.vertices)):
            if levels[v] == low:
                walk(v)
        return tuple(tuple(self.vertices[v] for v in f) for f in out)

    def face_counts(self) -> list[int]:
        """(f_{-1}, f_0, ..., f_dim): chains counted by a level DP.

        Every subset of a chain is a chain, so counting all chains by size
        counts all faces by dimension without expanding facet subsets.
        """
        nv = len(self.vertices)
        counts = [1]
        paths = [1] * nv  # chains of the current size ending at each vertex
        while True:
            total = sum(paths)
            if total == 0:
                break
            counts.append(total)
            nxt = [0] * nv
            for v in range(nv):
                cv = paths[v]
                if cv:
                    for u in iter_bits(self.up_adj[v]):
                        nxt[u] += cv
            paths = nxt
        return counts

    def faces_by_dim(self) -> list[list[tuple[int, ...]]]:
        """All faces as ascending vertex-index tuples, grouped by dimension."""
        out: list[list[tuple[int, ...]]] = [[] for _ in range(self.dim + 1)]
        chain: list[int] = []

        def walk(v: int) -> None:
            chain.append(v)
            out[len(chain) - 1].append(tuple(chain))
            for u in iter_bits(self.up_adj[v]):
                walk(u)
            chain.pop()

        for v in range(len(self.vertices)):
            walk(v)
        return out


def order_complex(sigma: Permutation, pi: Permutation, size_limit: int | None = None) -> OrderComplex:
    """Order complex of the open interval (sigma, pi); requires sigma <= pi."""
    return OrderComplex(build_interval(sigma, pi, size_limit=size_limit))


def euler_characteristic(cx: OrderComplex) -> int:
    """Reduced Euler characteristic: alternating face count from dimension -1."""
    counts = cx.face_counts()
    total = 0
    sign = -1  # dimension -1 carries sign (-1)^(-1)
    for f in counts:
        total += sign * f
        sign = -sign
    return total


@dataclass(frozen=True)
class BettiVector:
    """Reduced GF(2) Betti numbers beta_{-1}..beta_dim plus the Euler characteristic."""

    reduced_betti: tuple[int, ...]
    euler: int

    @property
    def dim(self) -> int:
        return len(self.reduced_betti) - 2

    def beta(self, i: int) -> int:
        """beta_i with i counted from -1; zero outside the stored range."""
        j = i + 1
        if 0 <= j < len(self.reduced_betti):
            return self.reduced_betti[j]
        return 0

    def top_concentrated(self) -> bool:
        """All homology in the top dimension (trivially true when empty)."""
        return all(b == 0 for b in self.reduced_betti[:-1])


def _gf2_rank(columns: list[int]) -> int:
    """Rank of a GF(2) matrix given as column bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col & -col
            prev = pivots.get(low)
            if prev is None:
                pivots[low] = col
                rank += 1
                break
            col ^= prev
    return rank


def betti_gf2(cx: OrderComplex) -> BettiVector:
    """Reduced Betti numbers from boundary-matrix ranks over GF(2).

    The reduced chain complex includes the empty face in dimension -1, so
    beta_{-1} = 1 exactly for the empty complex.
    """
    faces = cx.faces_by_dim()
    f_counts = [1] + [len(fs) for fs in faces]
    # rank of each boundary map d_k: C_k -> C_{k-1}, k = 0..dim
    ranks = []
    prev_index: dict[tuple[int, ...], int] = {(): 0}
    for k, faces_k in enumerate(faces):
        columns = []
        for face in faces_k:
            col = 0
            for drop in range(len(face)):
                sub = face[:drop] + face[drop + 1 :]
                col |= 1 << prev_index[sub]
            columns.append(col)
        ranks.append(_gf2_rank(columns))
        prev_index = {face: i for i, face in enumerate(faces_k)}
    ranks.append(0)  # d_{dim+1} = 0
    betti = []
    for k in range(-1, cx.dim + 1):
        below = 0 if k < 0 else ranks[k]
        betti.append(f_counts[k + 1] - below - ranks[k + 1])
    euler = 0
    sign = -1
    for f in f_counts:
        euler += sign * f
        sign = -sign
    return BettiVector(tuple(betti), euler)


def zero_set_union(embs: list[Embedding]) -> frozenset[int]:
    """Union of the zero sets of a set of embeddings."""
    out: set[int] = set()
    for e in embs:
        out |= e.zero_set
    return frozenset(out)


def zero_set_partition_exists(alpha: Permutation, beta: Permutation) -> bool:
    """Whether the embeddings of alpha in beta split into two non-empty
    groups whose zero-set unions are disjoint.

    Embeddings are the vertices of a graph with an edge when two zero sets
    intersect; a valid split exists iff that graph is disconnected.
    """
    if not contains(beta, alpha):
        raise PreconditionError(f"{alpha} does not occur in {beta}")
    zsets = [e.zero_set for e in embeddings(alpha, beta)]
    m = len(zsets)
    if m < 2:
        return False
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if zsets[i] & zsets[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    visited = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= adj[i]
        frontier = nxt & ~visited
        visited |= frontier
    return visited != (1 << m) - 1


def is_connected_open(sigma: Permutation, pi: Permutation, size_limit: int | None = None) -> bool:
    """Connectivity of the comparability graph on the interior of [sigma, pi].

    Equals connectivity of the order complex.  Requires rank >= 2; a
    rank-1 interval has no interior to speak of.
    """
    interval = build_interval(sigma, pi, size_limit=size_limit)
    if interval.rank < 2:
        raise PreconditionError("open interval connectivity needs rank >= 2")
    closure = interval.closure
    interior = interval.member_mask & ~(1 << interval.bottom_idx) & ~(1 << interval.top_idx)
    return _connected_mask(closure.down_masks, closure.up_masks, interior)


def _connected_mask(downs: list[int], ups: list[int], interior: int) -> bool:
    if interior == 0:
        return True
    start = interior & -interior
    visited = start
    frontier = start
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= (downs[i] | ups[i]) & interior
        frontier = nxt & ~visited
        visited |= frontier
    return visited == interior


def scan_disconnected_subintervals(
    sigma: Permutation,
    pi: Permutation,
    min_rank: int = 3,
    size_limit: int | None = None,
) -> list[tuple[Permutation, Permutation, int]]:
    """All disconnected open subintervals (alpha, beta) of [sigma, pi] with
    rank >= min_rank, sorted by (|beta|, beta, alpha).

    The default min_rank of 3 excludes rank-2 antichains, which are
    disconnected whenever they have two or more interior points.
    """
    limit = config.DEFAULT_SCAN_TOP_LENGTH if size_limit is None else size_limit
    if len(pi) > limit:
        raise PreconditionError(
            f"top length {len(pi)} exceeds the scan size guard {limit} "
            "(pass an explicit size_limit to override)"
        )
    interval = build_interval(sigma, pi, size_limit=max(limit, len(pi)))
    closure = interval.closure
    downs = closure.down_masks
    ups = closure.up_masks
    member = interval.member_mask
    lengths = [len(t) for t in closure.elements]
    found: list[tuple[Permutation, Permutation, int]] = []
    for b in iter_bits(member):
        blen = lengths[b]
        if blen - len(sigma) < min_rank:
            continue
        alphas = downs[b] & member & ~(1 << b)
        for a in iter_bits(alphas):
            rank = blen - lengths[a]
            if rank < min_rank:
                continue
            interior = downs[b] & ups[a] & ~(1 << a) & ~(1 << b)
            if not _connected_mask(downs, ups, interior):
                found.append(
                    (Permutation(closure.elements[a]), Permutation(closure.elements[b]), rank)
                )
    found.sort(key=lambda t: (len(t[1]), t[1].letters, t[0].letters))
    return found


def shellability_obstruction(pi: Permutation) -> set[Permutation]:
    """Which of the two one-descent obstruction patterns occur in pi."""
    if descent_count(pi) != 1:
        raise PreconditionError(f"{pi} does not have exactly one descent")
    return {pat for pat in OBSTRUCTION_PATTERNS if contains(pi, pat)}


def suspension_betti_check(pi: Permutation, size_limit: int | None = None) -> bool:
    """Whether Betti numbers of (1, pi) are those of (21, pi) shifted up one.

    This is the homology signature of the order complex of (1, pi) being a
    suspension of the one of (21, pi).  The shift includes dimension -1:
    when (21, pi) is the empty complex (|pi| = 3) the suspension is a
    two-point sphere, so beta_0 of (1, pi) is 1, not 0.
    """
    if descent_count(pi) != 1:
        raise PreconditionError(f"{pi} does not have exactly one descent")
    if len(pi) < 3:
        raise PreconditionError("needs length >= 3")
    upper = betti_gf2(order_complex(BOTTOM_ONE, pi, size_limit=size_limit))
    lower = betti_gf2(order_complex(BOTTOM_21, pi, size_limit=size_limit))
    if upper.beta(-1) != 0:
        return False
    top = max(upper.dim, lower.dim + 1) + 1
    return all(upper.beta(k) == lower.beta(k - 1) for k in range(0, top + 1))


def wedge_check(sigma: Permutation, pi: Permutation, size_limit: int | None = None) -> bool:
    """Whether (sigma, pi) has the homology of a wedge of |mu| top spheres.

    Requires equal descent counts and sigma strictly below pi.  The top
    dimension is |pi| - |sigma| - 2; for rank-1 intervals the empty-face
    convention makes the check beta_{-1} = |mu| = 1.
    """
    if descent_count(sigma) != descent_count(pi):
        raise PreconditionError("descent counts differ")
    if sigma == pi or not contains(pi, sigma):
        raise PreconditionError(f"{sigma} is not strictly below {pi}")
    bv = betti_gf2(order_complex(sigma, pi, size_limit=size_limit))
    top_dim = max(len(pi) - len(sigma) - 2, -1)
    expected = abs(mobius_same_descents(sigma, pi))
    if bv.beta(top_dim) != expected:
        return False
    return all(bv.beta(k) == 0 for k in range(-1, top_dim))
