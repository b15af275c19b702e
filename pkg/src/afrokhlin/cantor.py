"""Freeness tests and greedy Rokhlin towers for finite group actions.

Finite group actions on finite sets stand in for actions on clopen-partition
quotients of Cantor systems.  A tower is a base set whose group translates
partition the whole set; one exists exactly when the action is free, and the
greedy recursion below builds one from any cover by sets with pairwise
disjoint translates.  Cover order matters and is preserved, so outputs are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidGSet(ValueError):
    """The group table or action table violates the axioms."""


class NotFreeError(ValueError):
    """A tower was requested for an action with a fixed point."""

    def __init__(self, g: int, x: int, message: str):
        super().__init__(message)
        self.witness = (g, x)


class InvalidCover(ValueError):
    """A tower cover violates its preconditions."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class FiniteGSet:
    """A finite group acting on a finite set.

    The group is given by its multiplication table (table[g][h] = g*h); the
    action by one permutation row per group element (action[g][x] = g.x).
    Group and action axioms are checked at construction.
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.table)
        n = len(self.elements)
        if k < 1:
            raise InvalidGSet("group must have at least one element")
        if n < 1:
            raise InvalidGSet("the acted-on set must be nonempty")
        if any(len(row) != k for row in self.table):
            raise InvalidGSet("multiplication table must be square")
        if any(not (0 <= v < k) for row in self.table for v in row):
            raise InvalidGSet("multiplication table entries out of range")
        identity = None
        for e in range(k):
            if all(self.table[e][h] == h and self.table[h][e] == h for h in range(k)):
                identity = e
                break
        if identity is None:
            raise InvalidGSet("multiplication table has no identity element")
        for g in range(k):
            if sorted(self.table[g]) != list(range(k)):
                raise InvalidGSet(f"row {g} of the multiplication table is not a permutation")
        for g in range(k):
            for h in range(k):
                for l in range(k):
                    if self.table[self.table[g][h]][l] != self.table[g][self.table[h][l]]:
                        raise InvalidGSet("multiplication table is not associative")
        if len(self.action) != k or any(len(row) != n for row in self.action):
            raise InvalidGSet("action table must have one row of size |X| per group element")
        if any(not (0 <= v < n) for row in self.action for v in row):
            raise InvalidGSet("action table entries out of range")
        if list(self.action[identity]) != list(range(n)):
            raise InvalidGSet("identity must act trivially")
        for g in range(k):
            if sorted(self.action[g]) != list(range(n)):
                raise InvalidGSet(f"group element {g} does not act by a permutation")
            for h in range(k):
                for x in range(n):
                    if self.action[self.table[g][h]][x] != self.action[g][self.action[h][x]]:
                        raise InvalidGSet("action is not compatible with the group product")
        object.__setattr__(self, "_identity", identity)

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def size(self) -> int:
        return len(self.elements)

    def translate(self, g: int, subset: frozenset[int]) -> frozenset[int]:
        return frozenset(self.action[g][x] for x in subset)


@dataclass(frozen=True)
class Tower:
    """A base together with its translates, one per group element."""

    base: frozenset[int]
    translates: tuple[frozenset[int], ...]


def is_free(gs: FiniteGSet) -> tuple[bool, tuple[int, int] | None]:
    """Whether no nontrivial group element fixes a point; witness on failure."""
    for g in range(gs.order):
        if g == gs.identity:
            continue
        for x in range(gs.size):
            if gs.action[g][x] == x:
                return False, (g, x)
    return True, None


def default_cover(gs: FiniteGSet) -> list[frozenset[int]]:
    """One singleton per element, in element order.

    For a free action singleton translates are automatically disjoint and the
    union of their orbits is everything, so this is always a valid cover.
    """
    free, witness = is_free(gs)
    if not free:
        g, x = witness
        raise NotFreeError(g, x, _fixed_point_message(gs, g, x))
    return [frozenset({x}) for x in range(gs.size)]


def _fixed_point_message(gs: FiniteGSet, g: int, x: int) -> str:
    return (
        f"action is not free: group element {g} fixes "
        f"{gs.elements[x]!r} (index {x})"
    )


def greedy_tower(gs: FiniteGSet, cover) -> Tower:
    """Build a tower base by greedy accumulation along the given cover.

    Starting from the first cover set, each later set contributes only the
    points whose whole orbit is still uncovered.  Disjointness of the base
    translates is preserved at every step, and the final base covers because
    the cover does.
    """
    free, witness = is_free(gs)
    if not free:
        g, x = witness
        raise NotFreeError(g, x, _fixed_point_message(gs, g, x))
    cover = [frozenset(k) for k in cover]
    for idx, k in enumerate(cover):
        translates = [gs.translate(g, k) for g in range(gs.order)]
        total = sum(len(t) for t in translates)
        if len(frozenset().union(*translates)) != total:
            raise InvalidCover(
                f"cover set {idx} has colliding translates", index=idx
            )
    covered = frozenset().union(
        *(gs.translate(g, k) for k in cover for g in range(gs.order))
    ) if cover else frozenset()
    if covered != frozenset(range(gs.size)):
        raise InvalidCover("cover union insufficient: orbits of the cover miss the set")

    base: frozenset[int] = frozenset()
    for k in cover:
        saturation = frozenset().union(
            *(gs.translate(g, base) for g in range(gs.order))
        ) if base else frozenset()
        base = base | frozenset(x for x in k if x not in saturation)
    translates = tuple(gs.translate(g, base) for g in range(gs.order))
    return Tower(base=base, translates=translates)


def verify_tower(gs: FiniteGSet, tower: Tower) -> bool:
    """Exact check: translates pairwise disjoint and covering."""
    if len(tower.translates) != gs.order:
        return False
    seen: set[int] = set()
    for g, t in enumerate(tower.translates):
        if t != gs.translate(g, tower.base):
            return False
        if seen & t:
            return False
        seen |= t
    return seen == set(range(gs.size))


# ----------------------------------------------------------------------------
# JSON documents


def gset_from_json(obj) -> FiniteGSet:
    if not isinstance(obj, dict):
        raise InvalidGSet("G-set document must be a JSON object")
    elements = obj.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InvalidGSet("'elements' must be a list of strings")
    group = obj.get("group")
    if not isinstance(group, dict) or "table" not in group:
        raise InvalidGSet("'group' must be an object with a 'table'")
    table = group["table"]
    order = group.get("order", len(table))
    if not isinstance(table, list) or len(table) != order:
        raise InvalidGSet("'group.table' must be a list of rows matching 'order'")
    action = obj.get("action")
    if not isinstance(action, list):
        raise InvalidGSet("'action' must be a list of rows, one per group element")
    return FiniteGSet(
        elements=tuple(elements),
        table=tuple(tuple(row) for row in table),
        action=tuple(tuple(row) for row in action),
    )


def cover_from_json(obj, gs: FiniteGSet) -> list[frozenset[int]]:
    if not isinstance(obj, list):
        raise InvalidCover("cover document must be a list of element-name lists")
    index = {name: i for i, name in enumerate(gs.elements)}
    cover = []
    for i, entry in enumerate(obj):
        if not isinstance(entry, list):
            raise InvalidCover(f"cover entry {i} must be a list of element names", i)
        try:
            cover.append(frozenset(index[name] for name in entry))
        except KeyError as exc:
            raise InvalidCover(f"cover entry {i} names unknown element {exc}", i)
    return cover


def tower_to_json(gs: FiniteGSet, tower: Tower) -> dict:
    return {
        "base": sorted(gs.elements[x] for x in tower.base),
        "translates": [
            sorted(gs.elements[x] for x in t) for t in tower.translates
        ],
        "base_size": len(tower.base),
    }
