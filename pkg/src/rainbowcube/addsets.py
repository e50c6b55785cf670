"""Additive set constructions and predicates.

Covers B_t sets (all size-t multiset sums distinct), the Bose-Chowla
finite-field construction, progression-free sets (sphere shells in a
carry-free base plus a base-3 digit fallback), the genus of a linear
equation, trivial-solution detection, and solution-free subset search.

Integer sets are plain sorted tuples of distinct positive ints. Linear
equations are tuples of nonzero coefficients (a_1, ..., a_k) representing
a_1 x_1 + ... + a_k x_k = 0; an equation system is a nonempty sequence of
equations.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

from .errors import BudgetError, InternalError, UsageError

MAX_EQUATION_ARITY = 12
DEFAULT_SOLUTION_NODES = 5_000_000
DEFAULT_SEARCH_NODES = 20_000_000
EXHAUSTIVE_LIMIT = 30
GREEDY_LIMIT = 100_000


def _as_intset(elems, what: str = "set") -> tuple[int, ...]:
    out = tuple(sorted(elems))
    if any(not isinstance(e, int) or isinstance(e, bool) for e in out):
        raise UsageError(f"{what} must contain ints")
    if out and out[0] < 1:
        raise UsageError(f"{what} must contain positive ints")
    if len(set(out)) != len(out):
        raise UsageError(f"{what} must not contain repeats")
    return out


def _as_equation(coeffs, what: str = "equation") -> tuple[int, ...]:
    eq = tuple(coeffs)
    if len(eq) < 2:
        raise UsageError(f"{what} needs at least two coefficients")
    if any(not isinstance(a, int) or isinstance(a, bool) or a == 0 for a in eq):
        raise UsageError(f"{what} coefficients must be nonzero ints")
    return eq


def _as_system(eqs) -> tuple[tuple[int, ...], ...]:
    sys_ = tuple(_as_equation(eq) for eq in eqs)
    if not sys_:
        raise UsageError("equation system must be nonempty")
    return sys_


# ---------------------------------------------------------------------------
# B_t sets


def verify_bt(elems, t: int):
    """Check that all size-t multiset sums from the set are distinct.

    Returns (True, None) or (False, witness) where the witness is the
    lexicographically smallest pair of distinct size-t multisets with
    equal sums.
    """
    s = _as_intset(elems)
    if not isinstance(t, int) or t < 1:
        raise UsageError(f"t must be a positive int, got {t!r}")
    first: dict[int, tuple[int, ...]] = {}
    best: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    for multi in itertools.combinations_with_replacement(s, t):
        total = sum(multi)
        prev = first.get(total)
        if prev is None:
            first[total] = multi
        elif best is None or (prev, multi) < best:
            best = (prev, multi)
    if best is None:
        return True, None
    return False, best


def greedy_bt(t: int, size: int) -> tuple[int, ...]:
    """Greedy B_t set: start at 1, append the smallest int keeping B_t.

    For t = 2 this is the Mian-Chowla sequence 1, 2, 4, 8, 13, ...
    """
    if not isinstance(t, int) or t < 1:
        raise UsageError(f"t must be a positive int, got {t!r}")
    if not isinstance(size, int) or size < 1:
        raise UsageError(f"size must be a positive int, got {size!r}")
    elems = [1]
    # sums of r-multisets for r < t, and the full t-multiset sums
    subs: list[set[int]] = [{0}] + [{1 * r} for r in range(1, t)]
    full = {t}
    cand = 1
    while len(elems) < size:
        cand += 1
        fresh: set[int] = set()
        ok = True
        for r in range(t):  # r existing elements, t - r copies of cand
            mult = t - r
            for base in subs[r]:
                val = base + mult * cand
                if val in full or val in fresh:
                    ok = False
                    break
                fresh.add(val)
            if not ok:
                break
        if not ok:
            continue
        full |= fresh
        for r in range(t - 1, 0, -1):
            grown = set()
            for j in range(1, r + 1):
                grown |= {base + j * cand for base in subs[r - j]}
            subs[r] |= grown
        elems.append(cand)
    return tuple(elems)


# ---------------------------------------------------------------------------
# Bose-Chowla construction over GF(q^t)

BOSE_CHOWLA_TABLE_LIMIT = 2_000_000


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _poly_mul(a: tuple, b: tuple, modpoly: tuple, q: int, t: int) -> tuple:
    """Multiply field elements given as little-endian coefficient tuples."""
    prod = [0] * (2 * t - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % q
    for d in range(2 * t - 2, t - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(t):
                prod[d - t + i] = (prod[d - t + i] - c * modpoly[i]) % q
    return tuple(prod[:t])


def _poly_pow(a: tuple, e: int, modpoly: tuple, q: int, t: int) -> tuple:
    result = tuple([1] + [0] * (t - 1))
    base = a
    while e:
        if e & 1:
            result = _poly_mul(result, base, modpoly, q, t)
        base = _poly_mul(base, base, modpoly, q, t)
        e >>= 1
    return result


def _decode_element(m: int, q: int, t: int) -> tuple:
    coeffs = []
    for _ in range(t):
        coeffs.append(m % q)
        m //= q
    return tuple(coeffs)


def _poly_divides(div: tuple, poly: list, q: int) -> bool:
    """Whether the monic polynomial ``div`` divides ``poly`` over GF(q)."""
    rem = list(poly)
    dd = len(div) - 1
    while len(rem) - 1 >= dd:
        lead = rem[-1]
        if lead:
            shift = len(rem) - 1 - dd
            for i, c in enumerate(div):
                rem[shift + i] = (rem[shift + i] - lead * c) % q
        rem.pop()
    return all(c == 0 for c in rem)


def _smallest_irreducible(t: int, q: int) -> tuple:
    """Monic irreducible of degree t over GF(q), smallest by encoded value.

    Encoding: the lower coefficients read as a base-q integer, constant
    term least significant.
    """
    for m in range(q**t):
        low = _decode_element(m, q, t)
        poly = list(low) + [1]
        if any(
            sum(c * pow(a, i, q) for i, c in enumerate(poly)) % q == 0
            for a in range(q)
        ):
            continue
        if t >= 4:
            reducible = False
            for d in range(2, t // 2 + 1):
                for enc in range(q**d):
                    div = list(_decode_element(enc, q, d)) + [1]
                    if _poly_divides(tuple(div), poly, q):
                        reducible = True
                        break
                if reducible:
                    break
            if reducible:
                continue
        return tuple(low)
    raise InternalError(f"no irreducible of degree {t} over GF({q})")


def bose_chowla(t: int, q: int) -> tuple[int, ...]:
    """B_t set of size q inside [1, q^t - 1] from discrete logs in GF(q^t).

    With theta a primitive element of GF(q^t), the set is
    { log_theta(theta + a) : a in GF(q) }, lifted to integer
    representatives. Sums of t elements are distinct modulo q^t - 1,
    hence distinct over the integers.
    """
    if not isinstance(t, int) or t < 2:
        raise UsageError(f"t must be an int >= 2, got {t!r}")
    if not isinstance(q, int) or not _is_prime(q):
        raise UsageError(f"q must be prime, got {q!r}")
    order = q**t - 1
    if order + 1 > BOSE_CHOWLA_TABLE_LIMIT:
        raise BudgetError(
            f"q^t = {order + 1} exceeds the discrete-log table limit", kind="class"
        )
    modpoly = _smallest_irreducible(t, q)
    one = tuple([1] + [0] * (t - 1))
    factors = _prime_factors(order)
    theta = None
    for m in range(2, order + 1):
        el = _decode_element(m, q, t)
        if all(
            _poly_pow(el, order // p, modpoly, q, t) != one for p in factors
        ):
            theta = el
            break
    if theta is None:
        raise InternalError(f"no primitive element found in GF({q}^{t})")
    log: dict[tuple, int] = {}
    power = one
    for e in range(order):
        log[power] = e
        power = _poly_mul(power, theta, modpoly, q, t)
    out = []
    for a in range(q):
        shifted = (theta[0] + a) % q, *theta[1:]
        out.append(log[shifted])
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Progression-free sets


def verify_3ap_free(elems):
    """Check for three distinct elements with x + z = 2y.

    Returns (True, None) or (False, (x, y, z)) with the first witness in
    ascending (x, y) order.
    """
    s = _as_intset(elems)
    members = set(s)
    for i, xval in enumerate(s):
        for yval in s[i + 1 :]:
            if 2 * yval - xval in members:
                return False, (xval, yval, 2 * yval - xval)
    return True, None


def _digit_fallback(limit: int) -> list[int]:
    """{ m + 1 : base-3 digits of m are all 0 or 1, m + 1 <= limit }."""
    out = []
    powers = []
    p = 1
    while p <= limit:
        powers.append(p)
        p *= 3
    for mask in range(1 << len(powers)):
        val = 1
        rest = mask
        idx = 0
        while rest:
            if rest & 1:
                val += powers[idx]
            rest >>= 1
            idx += 1
        if val <= limit:
            out.append(val)
    return sorted(out)


def _best_sphere_shell(limit: int) -> list[int]:
    """Largest sphere shell over digit vectors in a carry-free base.

    Digits x_i in [0, d-1] are read in base 2d - 1, so adding two such
    numbers never carries; a shell of constant sum of squares then has no
    3-term progression. Scans 2 <= d <= 64 and every digit count whose
    base power stays within the limit.
    """
    best: list[int] = []
    for d in range(2, 65):
        base = 2 * d - 1
        digits = 1
        span = base
        while span <= limit:
            shells: dict[int, list[int]] = {}
            for vec in itertools.product(range(d), repeat=digits):
                norm = sum(c * c for c in vec)
                if norm == 0:
                    continue
                val = 0
                for c in reversed(vec):
                    val = val * base + c
                if val <= limit:
                    shells.setdefault(norm, []).append(val)
            for norm in sorted(shells):
                if len(shells[norm]) > len(best):
                    best = sorted(shells[norm])
            digits += 1
            span *= base
    return best


def behrend_set(limit: int) -> tuple[int, ...]:
    """A 3-AP-free subset of [1, limit].

    Takes the better of the sphere-shell construction and the base-3
    digit fallback; the fallback wins ties. The result always passes
    verify_3ap_free.
    """
    if not isinstance(limit, int) or limit < 1:
        raise UsageError(f"limit must be a positive int, got {limit!r}")
    fallback = _digit_fallback(limit)
    shell = _best_sphere_shell(limit)
    chosen = shell if len(shell) > len(fallback) else fallback
    return tuple(chosen)


# ---------------------------------------------------------------------------
# Genus, trivial solutions, solution-free sets


def genus(coeffs):
    """Largest m such that [k] splits into m parts each summing to zero.

    Returns (m, partition) with 1-based index parts, or (0, None) when no
    zero-sum partition exists at all.
    """
    eq = _as_equation(coeffs)
    k = len(eq)
    if k > MAX_EQUATION_ARITY:
        raise BudgetError(
            f"genus search supports up to {MAX_EQUATION_ARITY} variables, got {k}",
            kind="class",
        )
    full = (1 << k) - 1
    sums = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + eq[low.bit_length() - 1]

    best: dict[int, int] = {0: 0}

    def score(mask: int) -> int:
        cached = best.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        top = -1
        sub = mask
        while sub:
            if sub & low and sums[sub] == 0:
                rest = score(mask ^ sub)
                if rest >= 0 and rest + 1 > top:
                    top = rest + 1
            sub = (sub - 1) & mask
        best[mask] = top
        return top

    g = score(full)
    if g <= 0:
        return 0, None

    parts = []
    mask = full
    while mask:
        low = mask & -mask
        chosen = None
        sub = mask
        while sub:
            if sub & low and sums[sub] == 0 and score(mask ^ sub) == score(mask) - 1:
                ids = tuple(i + 1 for i in range(k) if sub >> i & 1)
                if chosen is None or ids < chosen[1]:
                    chosen = (sub, ids)
            sub = (sub - 1) & mask
        if chosen is None:
            raise InternalError("genus witness reconstruction failed")
        parts.append(chosen[1])
        mask ^= chosen[0]
    return g, tuple(parts)


def is_trivial_solution(coeffs, values) -> bool:
    """Whether a solution's value-equality classes all have zero coefficient sum."""
    eq = _as_equation(coeffs)
    vals = tuple(values)
    if len(vals) != len(eq):
        raise UsageError(f"expected {len(eq)} values, got {len(vals)}")
    if sum(a * v for a, v in zip(eq, vals)) != 0:
        raise UsageError("values do not satisfy the equation")
    classes: dict[int, int] = {}
    for a, v in zip(eq, vals):
        classes[v] = classes.get(v, 0) + a
    return all(total == 0 for total in classes.values())


def _is_trivial(eq: Sequence[int], vals: Sequence[int]) -> bool:
    classes: dict[int, int] = {}
    for a, v in zip(eq, vals):
        classes[v] = classes.get(v, 0) + a
    return all(total == 0 for total in classes.values())


def find_solutions(
    coeffs, elems, max_nodes: int = DEFAULT_SOLUTION_NODES
) -> Iterator[tuple[int, ...]]:
    """All nontrivial solutions with values from the set, lexicographic.

    Assignments may repeat values. Enumeration is a depth-first scan with
    interval pruning on the reachable partial sums; exceeding
    ``max_nodes`` raises BudgetError.
    """
    eq = _as_equation(coeffs)
    if len(eq) > MAX_EQUATION_ARITY:
        raise BudgetError(
            f"solution search supports up to {MAX_EQUATION_ARITY} variables",
            kind="class",
        )
    s = _as_intset(elems)
    return _solution_gen(eq, s, max_nodes)


def _solution_gen(
    eq: tuple[int, ...], s: tuple[int, ...], max_nodes: int
) -> Iterator[tuple[int, ...]]:
    if not s:
        return
    k = len(eq)
    lo, hi = s[0], s[-1]
    suffix_min = [0] * (k + 1)
    suffix_max = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        a = eq[i]
        suffix_min[i] = suffix_min[i + 1] + (a * lo if a > 0 else a * hi)
        suffix_max[i] = suffix_max[i + 1] + (a * hi if a > 0 else a * lo)
    assignment = [0] * k
    nodes = 0

    def rec(pos: int, partial: int) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        if pos == k:
            if partial == 0 and not _is_trivial(eq, assignment):
                yield tuple(assignment)
            return
        a = eq[pos]
        for val in s:
            nodes += 1
            if nodes > max_nodes:
                raise BudgetError(
                    f"solution enumeration exceeded {max_nodes} nodes"
                )
            nxt = partial + a * val
            if nxt + suffix_min[pos + 1] > 0 or nxt + suffix_max[pos + 1] < 0:
                continue
            assignment[pos] = val
            yield from rec(pos + 1, nxt)

    yield from rec(0, 0)


def _creates_solution(system, kept: list, cand: int, max_nodes: int) -> bool:
    """Whether adding ``cand`` to the kept set yields a nontrivial solution.

    Only assignments using ``cand`` at least once are searched; solutions
    avoiding it were ruled out when earlier elements were admitted.
    """
    values = sorted(kept + [cand])
    lo, hi = values[0], values[-1]
    for eq in system:
        k = len(eq)
        suffix_min = [0] * (k + 1)
        suffix_max = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            a = eq[i]
            suffix_min[i] = suffix_min[i + 1] + (a * lo if a > 0 else a * hi)
            suffix_max[i] = suffix_max[i + 1] + (a * hi if a > 0 else a * lo)
        assignment = [0] * k
        nodes = 0

        def rec(pos: int, partial: int, used: bool) -> bool:
            nonlocal nodes
            if pos == k:
                return partial == 0 and used and not _is_trivial(eq, assignment)
            a = eq[pos]
            for val in values:
                nodes += 1
                if nodes > max_nodes:
                    raise BudgetError(
                        f"solution check exceeded {max_nodes} nodes"
                    )
                nxt = partial + a * val
                if nxt + suffix_min[pos + 1] > 0 or nxt + suffix_max[pos + 1] < 0:
                    continue
                assignment[pos] = val
                if rec(pos + 1, nxt, used or val == cand):
                    return True
            return False

        if rec(0, 0, False):
            return True
    return False


def equation_free_subset(
    system,
    limit: int,
    mode: str = "greedy",
    max_nodes: int = DEFAULT_SEARCH_NODES,
):
    """Subset of [1, limit] with no nontrivial solution to any equation.

    Greedy mode scans 1..limit and keeps an element whenever it stays
    solution-free; exhaustive mode backtracks to a maximum-size subset.
    Returns (elements, optimal_flag). A blown node budget raises
    BudgetError carrying the best set found so far.
    """
    sys_ = _as_system(system)
    if not isinstance(limit, int) or limit < 1:
        raise UsageError(f"limit must be a positive int, got {limit!r}")
    if mode not in ("greedy", "exhaustive"):
        raise UsageError(f"mode must be 'greedy' or 'exhaustive', got {mode!r}")
    if mode == "exhaustive" and limit > EXHAUSTIVE_LIMIT:
        raise BudgetError(
            f"exhaustive search supports limit <= {EXHAUSTIVE_LIMIT}", kind="class"
        )
    if mode == "greedy" and limit > GREEDY_LIMIT:
        raise BudgetError(
            f"greedy scan supports limit <= {GREEDY_LIMIT}", kind="class"
        )

    if mode == "greedy":
        kept: list[int] = []
        for cand in range(1, limit + 1):
            try:
                conflict = _creates_solution(sys_, kept, cand, max_nodes)
            except BudgetError as exc:
                raise BudgetError(
                    str(exc), best=(tuple(kept), False), kind="budget"
                ) from exc
            if not conflict:
                kept.append(cand)
        return tuple(kept), False

    best: list[int] = []
    kept = []
    nodes = 0

    def rec(cand: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > max_nodes:
            raise BudgetError(
                f"exhaustive search exceeded {max_nodes} nodes",
                best=(tuple(best), False),
            )
        if cand > limit:
            if len(kept) > len(best):
                best = list(kept)
            return
        if len(kept) + (limit - cand + 1) <= len(best):
            return
        if not _creates_solution(sys_, kept, cand, max_nodes):
            kept.append(cand)
            rec(cand + 1)
            kept.pop()
        rec(cand + 1)

    try:
        rec(1)
    except BudgetError as exc:
        if exc.best is None:
            raise BudgetError(str(exc), best=(tuple(best), False)) from exc
        raise
    return tuple(best), True


def conjecture_system(k: int) -> tuple[tuple[int, ...], ...]:
    """Three-equation system tied to k-cycles with k = 2 mod 4, k >= 10.

    With m = k // 4 the equations are, as coefficient vectors:
    balanced m-vs-m sums, the (m+1)-vs-(m-1, double) variant, and the
    doubled-endpoint variant.
    """
    if not isinstance(k, int) or k % 4 != 2 or k < 10:
        raise UsageError(f"k must be 2 mod 4 and at least 10, got {k!r}")
    m = k // 4
    eq1 = (1,) * m + (-1,) * m
    eq2 = (1,) * (m + 1) + (-1,) * (m - 1) + (-2,)
    eq3 = (1,) * (m - 1) + (2,) + (-1,) * (m - 1) + (-2,)
    return eq1, eq2, eq3
