"""Exact minimum set cover by branch and bound over bitmasks."""

from dataclasses import dataclass, field

from .errors import Infeasible, TooLarge

DEFAULT_BUDGET = 10_000_000


@dataclass
class SetCoverInstance:
    """``n_elements`` elements, and a family of subsets (iterables of ints)."""

    n_elements: int
    sets: list
    labels: list = field(default=None)

    def __post_init__(self):
        self.sets = [frozenset(s) for s in self.sets]
        if self.labels is None:
            self.labels = list(range(len(self.sets)))
        if len(self.labels) != len(self.sets):
            raise ValueError("one label per set")

    @property
    def uncoverable(self):
        """Elements no set contains."""
        hit = set().union(*self.sets) if self.sets else set()
        return [e for e in range(self.n_elements) if e not in hit]


def _reduce(masks):
    """Drop duplicate and dominated sets; returns surviving set indices."""
    best = {}
    for k, m in enumerate(masks):
        if m and m not in best:
            best[m] = k
    items = sorted(best.items(), key=lambda kv: (-bin(kv[0]).count("1"), kv[1]))
    kept = []
    for m, k in items:
        if not any(m & ~km == 0 for km, _ in kept):
            kept.append((m, k))
    return [k for _, k in sorted(kept, key=lambda mk: mk[1])]


def exact_setcover(inst: SetCoverInstance, budget=DEFAULT_BUDGET, cap=None):
    """Labels of a minimum-cardinality subfamily covering every element.

    Branches on the uncovered element with the fewest candidate sets, trying
    larger sets first.  Prunes with a packing bound: elements whose candidate
    sets are pairwise disjoint each need their own set.  ``cap`` bounds the
    solution size from above; ValueError if no such solution exists.

    Raises Infeasible (with the first uncoverable element) or TooLarge when
    more than ``budget`` nodes are expanded.
    """
    bad = inst.uncoverable
    if bad:
        raise Infeasible(f"element {bad[0]} is in no set", bad[0])
    n = inst.n_elements
    if n == 0:
        return []
    masks = [sum(1 << e for e in s) for s in inst.sets]
    keep = _reduce(masks)
    kmasks = [masks[k] for k in keep]
    # bit j of cand[e]: the j-th kept set contains e
    cand = [0] * n
    for j, m in enumerate(kmasks):
        e = 0
        while m:
            if m & 1:
                cand[e] |= 1 << j
            m >>= 1
            e += 1
    full = (1 << n) - 1

    greedy = _greedy(kmasks, full)
    best = list(greedy)
    if cap is not None and len(best) > cap:
        best = None
    limit = [len(best) if best is not None else cap + 1]
    nodes = [0]

    def bound(uncovered):
        used = 0
        count = 0
        rest = uncovered
        elems = []
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            elems.append((bin(cand[e]).count("1"), e))
            rest ^= low
        elems.sort()
        for _, e in elems:
            if cand[e] & used == 0:
                used |= cand[e]
                count += 1
        return count

    def search(uncovered, chosen, banned):
        nonlocal best
        nodes[0] += 1
        if nodes[0] > budget:
            raise TooLarge(f"set cover search exceeded {budget} nodes", nodes[0])
        if not uncovered:
            if len(chosen) < limit[0]:
                best = list(chosen)
                limit[0] = len(chosen)
            return
        if len(chosen) + bound(uncovered) >= limit[0]:
            return
        pick, pick_count = -1, None
        rest = uncovered
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            c = bin(cand[e] & ~banned).count("1")
            if pick_count is None or c < pick_count:
                pick, pick_count = e, c
                if c <= 1:
                    break
            rest ^= low
        if pick_count == 0:
            return
        options = cand[pick] & ~banned
        js = []
        while options:
            low = options & -options
            js.append(low.bit_length() - 1)
            options ^= low
        js.sort(key=lambda j: (-bin(kmasks[j] & uncovered).count("1"), j))
        newly_banned = banned
        for j in js:
            chosen.append(j)
            search(uncovered & ~kmasks[j], chosen, newly_banned)
            chosen.pop()
            # sets already tried for this element are excluded in later branches
            newly_banned |= 1 << j
            if len(chosen) + 1 >= limit[0]:
                break

    search(full, [], 0)
    if best is None:
        raise ValueError(f"no cover of size <= {cap} exists")
    return [inst.labels[keep[j]] for j in sorted(best)]


def _greedy(kmasks, full):
    uncovered = full
    chosen = []
    while uncovered:
        j = max(range(len(kmasks)), key=lambda j: (bin(kmasks[j] & uncovered).count("1"), -j))
        chosen.append(j)
        uncovered &= ~kmasks[j]
    return chosen


def setcover_value(inst, budget=DEFAULT_BUDGET) -> int:
    return len(exact_setcover(inst, budget))
