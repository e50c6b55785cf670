"""Bitmask model of the n-dimensional hypercube graph Q_n.

Vertices are ints in [0, 2**n); bit i-1 encodes coordinate i, so a vertex
doubles as a subset of {1, ..., n}. Directions are 1-based throughout. An
edge is identified by its bottom vertex (the endpoint with the direction
bit clear) and its direction index; the top vertex has that bit set. An
edge whose bottom vertex has j ones sits on level j + 1.

Cycles are canonical vertex tuples: the minimum vertex comes first and the
orientation is chosen so the second vertex is smaller than the last. Cycle
enumeration is a depth-first search from each candidate minimum vertex,
pruned by the Hamming distance back to the start; the start/orientation
rule makes every cycle appear exactly once, in a deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .errors import InternalError, UsageError

MAX_DIM = 32

Cycle = tuple  # canonical vertex tuple


class _SetBlocked:
    """Visited-vertex store for dimensions too large for a flat bytearray."""

    __slots__ = ("members",)

    def __init__(self):
        self.members = set()

    def __getitem__(self, i):
        return i in self.members

    def __setitem__(self, i, v):
        if v:
            self.members.add(i)
        else:
            self.members.discard(i)


def _blocked_store(n: int):
    return bytearray(1 << n) if n <= 24 else _SetBlocked()


def _check_dim(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise UsageError(f"dimension must be an int, got {n!r}")
    if not 1 <= n <= MAX_DIM:
        raise UsageError(f"dimension must be in [1, {MAX_DIM}], got {n}")


def _check_cycle_length(n: int, k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise UsageError(f"cycle length must be an int, got {k!r}")
    if k < 4 or k > 1 << n:
        raise UsageError(f"cycle length must be in [4, 2^{n}], got {k}")


@dataclass(frozen=True, order=True)
class Edge:
    """Edge of Q_n, stored as (bottom vertex, 1-based direction)."""

    bottom: int
    dir: int

    def __post_init__(self):
        if not 1 <= self.dir <= MAX_DIM:
            raise UsageError(f"direction must be in [1, {MAX_DIM}], got {self.dir}")
        if self.bottom < 0:
            raise UsageError(f"bottom vertex must be >= 0, got {self.bottom}")
        if self.bottom >> (self.dir - 1) & 1:
            raise UsageError(
                f"direction bit {self.dir} already set in bottom {self.bottom:#x}"
            )

    @property
    def top(self) -> int:
        return self.bottom | 1 << (self.dir - 1)

    def key(self) -> int:
        """Dense int key; cheaper dict key than the dataclass itself."""
        return self.bottom << 5 | self.dir - 1


def edge_from_key(key: int) -> Edge:
    return Edge(key >> 5, (key & 31) + 1)


def validate_edge(n: int, e: Edge) -> None:
    """Check that ``e`` fits inside Q_n."""
    _check_dim(n)
    if not isinstance(e, Edge):
        raise UsageError(f"expected an Edge, got {e!r}")
    if e.dir > n:
        raise UsageError(f"direction {e.dir} out of range for Q_{n}")
    if e.bottom >> n:
        raise UsageError(f"bottom {e.bottom:#x} has bits above position {n}")


def edge_between(u: int, v: int) -> Edge:
    """The edge joining two adjacent vertices."""
    d = u ^ v
    if d == 0 or d & (d - 1):
        raise UsageError(f"vertices {u:#x} and {v:#x} are not adjacent")
    return Edge(u & v, d.bit_length())


def edge_level(e: Edge) -> int:
    """Level of an edge: popcount of the bottom vertex plus one."""
    return e.bottom.bit_count() + 1


def count_level_edges(n: int, level: int) -> int:
    """Number of edges of Q_n on the given level: C(n, l-1) * (n - l + 1)."""
    _check_dim(n)
    if not 1 <= level <= n:
        raise UsageError(f"level must be in [1, {n}], got {level}")
    return comb(n, level - 1) * (n - level + 1)


def enumerate_edges(n: int) -> Iterator[Edge]:
    """All n * 2^(n-1) edges, bottom ascending then direction ascending."""
    _check_dim(n)
    return _edge_gen(n)


def _edge_gen(n: int) -> Iterator[Edge]:
    for bottom in range(1 << n):
        for d in range(1, n + 1):
            if not bottom >> (d - 1) & 1:
                yield Edge(bottom, d)


def complement_edge(n: int, e: Edge) -> Edge:
    """Image of an edge under complementing every vertex of Q_n."""
    validate_edge(n, e)
    full = (1 << n) - 1
    return Edge(full ^ e.top, e.dir)


def _bitmasks(mask: int) -> list[int]:
    """Single-bit masks of ``mask``, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b)
        mask ^= b
    return out


def _free_coord_masks(n: int, used: int) -> list[int]:
    return [1 << d for d in range(n) if not used >> d & 1]


def canonical_cycle(verts) -> Cycle:
    """Rotate to the minimum vertex, orient so second < last."""
    verts = tuple(verts)
    i = verts.index(min(verts))
    rot = verts[i:] + verts[:i]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = rot[:1] + rot[:0:-1]
    return rot


def edges_of_cycle(verts) -> tuple[Edge, ...]:
    verts = tuple(verts)
    return tuple(
        edge_between(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))
    )


def cycle_problem(n: int, verts) -> Optional[str]:
    """Why ``verts`` is not a valid canonical cycle of Q_n, or None if it is."""
    _check_dim(n)
    verts = tuple(verts)
    k = len(verts)
    if k < 4 or k % 2:
        return f"length {k} is not an even number >= 4"
    if k > 1 << n:
        return f"length {k} exceeds the vertex count of Q_{n}"
    if len(set(verts)) != k:
        return "repeated vertex"
    dir_counts = [0] * n
    for i, u in enumerate(verts):
        if not 0 <= u < 1 << n:
            return f"vertex {u:#x} outside Q_{n}"
        d = u ^ verts[(i + 1) % k]
        if d == 0 or d & (d - 1):
            return f"vertices {u:#x} and {verts[(i + 1) % k]:#x} not adjacent"
        dir_counts[d.bit_length() - 1] += 1
    if any(c % 2 for c in dir_counts):
        return "some direction used an odd number of times"
    if verts != canonical_cycle(verts):
        return "not in canonical form"
    return None


def enumerate_cycles(n: int, k: int) -> Iterator[Cycle]:
    """Every k-cycle of Q_n exactly once, canonical, deterministic order.

    Odd k yields nothing (Q_n is bipartite); k outside [4, 2^n] is an
    error.
    """
    _check_dim(n)
    _check_cycle_length(n, k)
    if k % 2:
        return iter(())
    return _cycle_gen(n, k)


def _cycle_gen(n: int, k: int) -> Iterator[Cycle]:
    bits = [1 << d for d in range(n)]
    blocked = _blocked_store(n)
    leaf = k - 1  # depth at which the only move left is closing to the start
    for start in range(1 << n):
        path = [start]
        nexts = [0]
        while path:
            v = path[-1]
            if len(path) - 1 == leaf:
                if (v ^ start).bit_count() == 1 and path[1] < v:
                    yield tuple(path)
                path.pop()
                nexts.pop()
                blocked[v] = 0
                continue
            d = nexts[-1]
            if d == n:
                path.pop()
                nexts.pop()
                blocked[v] = 0
                continue
            nexts[-1] = d + 1
            w = v ^ bits[d]
            if w <= start or blocked[w]:
                continue
            if (w ^ start).bit_count() > leaf - (len(path) - 1):
                continue
            blocked[w] = 1
            path.append(w)
            nexts.append(0)


def cycles_containing_pair(
    n: int, k: int, e1: Edge, e2: Edge
) -> tuple[bool, Optional[Cycle]]:
    """Whether some k-cycle of Q_n contains both edges.

    Returns (exists, witness); the witness is the canonically smallest
    such cycle. The search walks cycles through e1 (bottom to top first),
    pruning on the Hamming distance home and on the cheapest remaining
    detour through e2.
    """
    _check_dim(n)
    _check_cycle_length(n, k)
    validate_edge(n, e1)
    validate_edge(n, e2)
    if e1 == e2:
        raise UsageError("edges must be distinct")
    if k % 2:
        return False, None

    b1, t1 = e1.bottom, e1.top
    b2, t2 = e2.bottom, e2.top
    bits = [1 << d for d in range(n)]
    blocked = _blocked_store(n)
    blocked[b1] = 1
    blocked[t1] = 1
    path = [b1, t1]
    best: list[Optional[Cycle]] = [None]

    def rec(v: int, remaining: int, used2: bool) -> None:
        if remaining == 1:
            if (v ^ b1).bit_count() == 1 and (used2 or (v & b1, v | b1) == (b2, t2)):
                cand = canonical_cycle(path)
                if best[0] is None or cand < best[0]:
                    best[0] = cand
            return
        lim = remaining - 1
        for b in bits:
            w = v ^ b
            if blocked[w]:
                continue
            if (w ^ b1).bit_count() > lim:
                continue
            u2 = used2 or (v & w, v | w) == (b2, t2)
            if not u2:
                via_b = (w ^ b2).bit_count() + 1 + (t2 ^ b1).bit_count()
                via_t = (w ^ t2).bit_count() + 1 + (b2 ^ b1).bit_count()
                if min(via_b, via_t) > lim:
                    continue
            blocked[w] = 1
            path.append(w)
            rec(w, lim, u2)
            path.pop()
            blocked[w] = 0

    rec(t1, k - 1, False)
    return best[0] is not None, best[0]


def build_cycle_same_level(n: int, k: int, e1: Edge, e2: Edge) -> Cycle:
    """Construct a k-cycle through two distinct edges on a common level.

    Needs n > k. Incident pairs (shared bottom or shared top) are joined
    by two parallel chains over fresh coordinates. Disjoint pairs need
    k divisible by 4 and bottom vertices with |v xor x| <= k/2 - 2; they
    are joined by a bottom route of length k/2 - 2 between the bottoms
    and a top route of length k/2 between the tops. Fresh coordinates are
    always the smallest unused indices. When no unused coordinates remain
    above, the construction is applied to the complemented cube and
    mirrored back.
    """
    _check_dim(n)
    _check_cycle_length(n, k)
    if k % 2:
        raise UsageError(f"cycle length must be even, got {k}")
    if n <= k:
        raise UsageError(f"construction needs n > k, got n={n}, k={k}")
    validate_edge(n, e1)
    validate_edge(n, e2)
    if e1 == e2:
        raise UsageError("edges must be distinct")
    if edge_level(e1) != edge_level(e2):
        raise UsageError(
            f"edges must sit on the same level, got {edge_level(e1)} and {edge_level(e2)}"
        )
    if not {e1.bottom, e1.top} & {e2.bottom, e2.top}:
        if k % 4:
            raise UsageError(
                "disjoint same-level edges need k divisible by 4 (path parity)"
            )
        if (e1.bottom ^ e2.bottom).bit_count() > k // 2 - 2:
            raise UsageError(
                "bottom vertices too far apart: need |v xor x| <= k/2 - 2"
            )

    cyc = _same_level_cycle(n, k, e1, e2, may_flip=True)
    problem = cycle_problem(n, cyc)
    if problem is not None:
        raise InternalError(f"constructed cycle invalid: {problem}")
    edges = set(edges_of_cycle(cyc))
    if e1 not in edges or e2 not in edges:
        raise InternalError("constructed cycle misses a required edge")
    return cyc


def _same_level_cycle(n: int, k: int, e1: Edge, e2: Edge, may_flip: bool) -> Cycle:
    full = (1 << n) - 1
    v, x = e1.bottom, e2.bottom
    w, y = e1.top, e2.top
    bi = 1 << e1.dir - 1
    bj = 1 << e2.dir - 1

    def flipped() -> Cycle:
        if not may_flip:
            raise UsageError("not enough unused coordinates to route the cycle")
        mirror = _same_level_cycle(
            n, k, complement_edge(n, e1), complement_edge(n, e2), may_flip=False
        )
        return canonical_cycle(tuple(full ^ u for u in mirror))

    if v == x:
        # shared bottom: climb the e1 side, cross at the top, descend to e2
        r = k // 2 - 2
        pool = _free_coord_masks(n, w | y)
        if len(pool) < r:
            return flipped()
        fresh = pool[:r]
        up = [v, v | bi]
        cur = v | bi
        for b in fresh:
            cur |= b
            up.append(cur)
        top = cur | bj
        down = [v | bj]
        cur = v | bj
        for b in fresh:
            cur |= b
            down.append(cur)
        return canonical_cycle(tuple(up + [top] + down[::-1]))

    if w == y:
        # shared top: descend to both bottoms, rejoin above fresh coordinates
        r = k // 2 - 2
        if r == 0:
            return canonical_cycle((w, v, v & x, x))
        pool = _free_coord_masks(n, w)
        if len(pool) < r:
            return flipped()
        fresh = pool[:r]
        left = [v]
        cur = v
        for b in fresh:
            cur |= b
            left.append(cur)
        top = cur | bi
        right = [x]
        cur = x
        for b in fresh:
            cur |= b
            right.append(cur)
        return canonical_cycle(tuple([w] + left + [top] + right[::-1]))

    # disjoint: bottom route between v and x, top route between w and y
    dvx = (v ^ x).bit_count()
    m = (w ^ y).bit_count() // 2
    r = k // 4 - m
    pad = k // 4 - 1 - dvx // 2
    if r < 0 or pad < 0:
        raise InternalError("disjoint routing infeasible")
    inter = v & x
    pad_down = pad <= inter.bit_count()
    pool = _free_coord_masks(n, w | y)
    need = r + (0 if pad_down else pad)
    if len(pool) < need:
        return flipped()
    s_masks = pool[:r]

    path_vx = [v]
    cur = v
    if pad_down:
        pad_masks = _bitmasks(inter)[:pad]
        for b in _bitmasks(v & ~x):
            cur ^= b
            path_vx.append(cur)
        for b in pad_masks:
            cur ^= b
            path_vx.append(cur)
        for b in _bitmasks(x & ~v):
            cur |= b
            path_vx.append(cur)
        for b in pad_masks:
            cur |= b
            path_vx.append(cur)
    else:
        pad_masks = pool[r : r + pad]
        for b in pad_masks:
            cur |= b
            path_vx.append(cur)
        for b in _bitmasks(v & ~x):
            cur ^= b
            path_vx.append(cur)
        for b in _bitmasks(x & ~v):
            cur |= b
            path_vx.append(cur)
        for b in pad_masks:
            cur ^= b
            path_vx.append(cur)

    path_wy = [w]
    cur = w
    for b in s_masks:
        cur |= b
        path_wy.append(cur)
    for b in _bitmasks(y & ~w):
        cur |= b
        path_wy.append(cur)
    for b in reversed(_bitmasks(w & ~y)):
        cur ^= b
        path_wy.append(cur)
    for b in reversed(s_masks):
        cur ^= b
        path_wy.append(cur)

    return canonical_cycle(tuple(path_vx + path_wy[::-1]))
