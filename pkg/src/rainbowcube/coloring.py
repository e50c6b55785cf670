"""Edge-color assignment schemes for Q_n and color counting.

A color is a pair (d, p): an arithmetic component and a level congruence
class. The two schemes:

* ``construction1`` targets cycle lengths divisible by 4. With a B_t set
  S (t = k/4 - 1) aligned to the directions and M = (k/4) * max(S) + 1,
  an edge with bottom v and direction j on level p gets
  (a(v) + M * j, p mod k/2), where a(v) sums the S entries over the set
  bits of v. The d component is an unbounded integer.

* ``construction2`` targets 6-cycles. With a 3-AP-free set S inside
  [1, N], the edge gets ((a(v) + 2 * s_j) mod 2N, p mod 3), so at most
  6N colors appear.

Colorings derived from a scheme are recomputable from their parameters
and are not materialized eagerly; explicit colorings carry a full table.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .addsets import behrend_set, verify_3ap_free, verify_bt
from .errors import BudgetError, UsageError
from .hypercube import Edge, enumerate_edges, validate_edge, _check_dim

Color = tuple[int, int]

SCHEMES = ("construction1", "construction2", "explicit")
TABLE_DIM_LIMIT = 18


class EdgeColoring:
    """Total assignment of colors to the edges of Q_n.

    ``scheme`` is one of "construction1", "construction2" or "explicit".
    Scheme colorings compute colors on demand from ``params``; explicit
    colorings carry a table keyed by ``Edge.key()``.
    """

    __slots__ = ("n", "k", "scheme", "params", "_table")

    def __init__(self, n, k, scheme, params=None, table=None):
        _check_dim(n)
        if scheme not in SCHEMES:
            raise UsageError(f"unknown scheme {scheme!r}")
        if scheme == "explicit":
            if table is None:
                raise UsageError("explicit coloring needs a color table")
        elif table is not None:
            raise UsageError("scheme colorings are recomputed, not tabulated")
        self.n = n
        self.k = k
        self.scheme = scheme
        self.params = dict(params or {})
        self._table = dict(table) if table is not None else None

    def color_of(self, e: Edge) -> Color:
        validate_edge(self.n, e)
        if self._table is not None:
            try:
                return self._table[e.key()]
            except KeyError:
                raise UsageError(f"no color stored for edge {e}") from None
        return self._scheme_color(e.bottom, e.dir)

    def _scheme_color(self, bottom: int, direction: int) -> Color:
        level = bottom.bit_count() + 1
        s = self.params["S"]
        a = weight_a(bottom, s)
        if self.scheme == "construction1":
            return a + self.params["M"] * direction, level % (self.k // 2)
        mod = 2 * self.params["N"]
        return (a + 2 * s[direction - 1]) % mod, level % 3

    def items(self) -> Iterator[tuple[Edge, Color]]:
        """(edge, color) pairs in enumeration order, streamed."""
        if self._table is not None:
            for e in enumerate_edges(self.n):
                yield e, self.color_of(e)
            return
        weights = _weight_table(self.n, self.params["S"])
        for e in enumerate_edges(self.n):
            yield e, self._colored(e.bottom, e.dir, weights)

    def _colored(self, bottom: int, direction: int, weights) -> Color:
        level = bottom.bit_count() + 1
        if self.scheme == "construction1":
            return (
                weights[bottom] + self.params["M"] * direction,
                level % (self.k // 2),
            )
        mod = 2 * self.params["N"]
        return (weights[bottom] + 2 * self.params["S"][direction - 1]) % mod, level % 3

    def key_table(self) -> dict[int, Color]:
        """Full table keyed by Edge.key(); validates explicit totality."""
        if self.n > TABLE_DIM_LIMIT:
            raise BudgetError(
                f"refusing to materialize a color table for n={self.n}", kind="class"
            )
        if self._table is not None:
            expected = self.n << self.n - 1
            if len(self._table) != expected:
                raise UsageError(
                    f"coloring is not total: {len(self._table)} of {expected} edges"
                )
            for e in enumerate_edges(self.n):
                if e.key() not in self._table:
                    raise UsageError(f"coloring misses edge {e}")
            return dict(self._table)
        weights = _weight_table(self.n, self.params["S"])
        return {
            e.key(): self._colored(e.bottom, e.dir, weights)
            for e in enumerate_edges(self.n)
        }


def weight_a(v: int, s) -> int:
    """Sum of s_i over the set bits i of v (1-based alignment)."""
    if v < 0:
        raise UsageError(f"vertex must be >= 0, got {v}")
    if v >> len(s):
        raise UsageError(f"vertex {v:#x} has bits beyond the {len(s)} set elements")
    total = 0
    i = 0
    while v:
        if v & 1:
            total += s[i]
        v >>= 1
        i += 1
    return total


def _weight_table(n: int, s) -> list[int]:
    table = [0] * (1 << n)
    for v in range(1, 1 << n):
        low = v & -v
        table[v] = table[v ^ low] + s[low.bit_length() - 1]
    return table


def _checked_set(s, n: int) -> tuple[int, ...]:
    out = tuple(sorted(s))
    if len(out) < n:
        raise UsageError(f"set has {len(out)} elements, need at least n = {n}")
    return out[:n]


def construction1(n: int, k: int, s) -> EdgeColoring:
    """Coloring from a B_t set for cycle length k = 0 mod 4, k >= 8."""
    _check_dim(n)
    if not isinstance(k, int) or k % 4 or k < 8:
        raise UsageError(f"cycle length must be divisible by 4 and >= 8, got {k!r}")
    used = _checked_set(s, n)
    t = k // 4 - 1
    ok, witness = verify_bt(used, t)
    if not ok:
        raise UsageError(f"set is not B_{t}: {witness[0]} and {witness[1]} share a sum")
    m = (k // 4) * used[-1] + 1
    return EdgeColoring(n, k, "construction1", {"S": used, "M": m})


def construction2(n: int, s, cap: int) -> EdgeColoring:
    """Coloring from a 3-AP-free subset of [1, cap], for 6-cycles."""
    _check_dim(n)
    used = _checked_set(s, n)
    if not isinstance(cap, int) or cap < 1:
        raise UsageError(f"cap must be a positive int, got {cap!r}")
    if used[-1] > cap:
        raise UsageError(f"max element {used[-1]} exceeds the cap {cap}")
    ok, witness = verify_3ap_free(used)
    if not ok:
        raise UsageError(f"set has the 3-term progression {witness}")
    return EdgeColoring(n, 6, "construction2", {"S": used, "N": cap})


def _iroot(value: int, degree: int) -> int:
    """Floor of the degree-th root of a nonnegative int."""
    if value < 2:
        return value
    guess = int(round(value ** (1.0 / degree)))
    while guess**degree > value:
        guess -= 1
    while (guess + 1) ** degree <= value:
        guess += 1
    return guess


def derive_c2_params(n: int, eps: Union[Fraction, int, float, str]):
    """Pick (S, N) for construction2: N = ceil(n^(1+eps)), S generated.

    The exponent is handled as an exact rational so the ceiling is exact
    at integer boundaries. Fails with guidance when the generator cannot
    produce n progression-free elements below N. Accepts any positive n;
    the cube-model dimension cap only applies once a coloring is built.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise UsageError(f"n must be a positive int, got {n!r}")
    try:
        eps = Fraction(eps)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise UsageError(f"eps must be a rational number, got {eps!r}") from exc
    if eps <= 0:
        raise UsageError(f"eps must be positive, got {eps}")
    expo = 1 + eps
    power = n ** expo.numerator
    root = _iroot(power, expo.denominator)
    cap = root if root**expo.denominator == power else root + 1
    full = behrend_set(cap)
    if len(full) < n:
        raise UsageError(
            f"only {len(full)} progression-free elements found below {cap}; "
            f"retry with a larger eps"
        )
    return full[:n], cap, eps


def count_colors(coloring: EdgeColoring) -> int:
    """Number of distinct colors in the image of the coloring.

    Scheme colorings avoid materializing Q_n: construction2 counts the
    reachable (sum mod 2N, level mod 3) pairs by dynamic programming over
    the set elements, construction1 streams the edges.
    """
    if coloring.scheme == "construction2" and coloring._table is None:
        return _count_c2(coloring)
    if coloring._table is not None:
        return len(set(coloring.key_table().values()))
    if coloring.n > 20:
        raise BudgetError(
            f"refusing to stream {coloring.n << coloring.n - 1} edges", kind="class"
        )
    return len({color for _, color in coloring.items()})


def _count_c2(coloring: EdgeColoring) -> int:
    s = coloring.params["S"]
    mod = 2 * coloring.params["N"]
    n = coloring.n
    colors: set[Color] = set()
    for j in range(1, n + 1):
        reach = {(0, 0)}
        for i in range(1, n + 1):
            if i == j:
                continue
            step = s[i - 1] % mod
            reach |= {((a + step) % mod, (c + 1) % 3) for a, c in reach}
        off = (2 * s[j - 1]) % mod
        colors |= {((a + off) % mod, (c + 1) % 3) for a, c in reach}
    return len(colors)
