"""Sociable cycles of Heronian triangles.

Triangles are linked by the successor relation "area of one equals
perimeter of the next". An n-sociable cycle is a closed walk of length n
under that relation (members may repeat) that is not made of equable
triangles only, considered up to rotation. The relation is directed, so
rotation is the only equivalence; reversal is not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from heronian.core import Classification, Triangle, classify, heron_area
from heronian.enumeration import triangles_with_area, triangles_with_perimeter

__all__ = [
    "ChainDirection",
    "ChainEnd",
    "ChainTrace",
    "ConcreteCycle",
    "amicable_pairs",
    "canonical_rotation",
    "closed_walks",
    "find_cycles",
    "predecessors",
    "successors",
    "trace_chain",
]


def canonical_rotation(members: tuple[Triangle, ...]) -> tuple[Triangle, ...]:
    """Lexicographically least rotation of a member tuple."""
    return min(members[i:] + members[:i] for i in range(len(members)))


@dataclass(frozen=True)
class ConcreteCycle:
    """An n-sociable cycle, stored in canonical rotation.

    Construction checks the cyclic linking (each member's area is the
    next member's perimeter), rejects all-equable member lists, and
    normalizes to the lexicographically least rotation.
    """

    members: tuple[Triangle, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise ValueError("a cycle needs at least one member")
        n = len(members)
        for i, t in enumerate(members):
            area = heron_area(t)
            if area is None:
                raise ValueError(f"{t} is not Heronian")
            nxt = members[(i + 1) % n]
            if area != nxt.perimeter:
                raise ValueError(
                    f"broken link: area {area} of {t} != perimeter "
                    f"{nxt.perimeter} of {nxt}"
                )
        if all(classify(t) is Classification.EQUABLE for t in members):
            raise ValueError("all members are equable; not a sociable cycle")
        object.__setattr__(self, "members", canonical_rotation(members))

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "[" + ", ".join(str(t) for t in self.members) + "]"


class ChainDirection(enum.Enum):
    SUCCESSOR = "successor"
    PREDECESSOR = "predecessor"


class ChainEnd(enum.Enum):
    DEAD_END = "dead-end"        # the next step has no triangles at all
    CYCLE_CLOSED = "cycle-closed"  # the next step revisits a path member
    BOUND_HIT = "bound-hit"      # step budget exhausted with steps remaining


@dataclass(frozen=True)
class ChainTrace:
    """One root-to-leaf path of a chain exploration.

    Each step pairs a triangle with its linking value: the triangle's
    area when walking successor-ward, its perimeter predecessor-ward.
    The last step's linking value is the query that dead-ended, closed
    the cycle, or was left unexplored at the bound.
    """

    direction: ChainDirection
    steps: tuple[tuple[Triangle, int], ...]
    end: ChainEnd

    @property
    def members(self) -> tuple[Triangle, ...]:
        return tuple(t for t, _ in self.steps)

    @property
    def num_steps(self) -> int:
        """Transitions taken from the starting triangle."""
        return len(self.steps) - 1


def successors(t: Triangle) -> list[Triangle]:
    """Triangles whose perimeter equals the area of t."""
    area = heron_area(t)
    if area is None:
        raise ValueError(f"{t} is not Heronian")
    return triangles_with_perimeter(area)


def predecessors(t: Triangle) -> list[Triangle]:
    """Triangles whose area equals the perimeter of t."""
    if heron_area(t) is None:
        raise ValueError(f"{t} is not Heronian")
    return triangles_with_area(t.perimeter)


def trace_chain(
    start: Triangle, direction: ChainDirection, max_steps: int
) -> tuple[ChainTrace, ...]:
    """Follow the linking relation from a triangle, up to max_steps hops.

    Whenever a step yields several triangles the exploration branches;
    the result is one ChainTrace per root-to-leaf path, in depth-first
    order with branches sorted by side triple. A path ends dead-end when
    the next step is empty, cycle-closed when it would revisit one of
    its own members (the revisited member is appended as the final
    step), and bound-hit when the budget runs out first.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    if heron_area(start) is None:
        raise ValueError(f"{start} is not Heronian")
    step = successors if direction is ChainDirection.SUCCESSOR else predecessors

    def link(t: Triangle) -> int:
        if direction is ChainDirection.SUCCESSOR:
            area = heron_area(t)
            assert area is not None
            return area
        return t.perimeter

    traces: list[ChainTrace] = []

    def make(path: list[Triangle], end: ChainEnd) -> None:
        traces.append(
            ChainTrace(direction, tuple((t, link(t)) for t in path), end)
        )

    def walk(path: list[Triangle]) -> None:
        nxt = step(path[-1])
        if not nxt:
            make(path, ChainEnd.DEAD_END)
            return
        if len(path) - 1 >= max_steps:
            make(path, ChainEnd.BOUND_HIT)
            return
        for u in nxt:
            if u in path:
                make(path + [u], ChainEnd.CYCLE_CLOSED)
            else:
                walk(path + [u])

    walk([start])
    return tuple(traces)


@lru_cache(maxsize=8)
def _cycle_core(p_max: int) -> tuple[tuple[Triangle, ...], dict]:
    """Recurrent core of the successor graph on triangles with
    perimeter <= p_max and area <= p_max.

    Vertices come from the area enumerator (every triangle with area
    <= p_max), filtered by perimeter. Vertices with no successor or no
    predecessor inside the set are trimmed iteratively; that never
    removes a vertex lying on a closed walk, so walk enumeration over
    the core is complete.
    """
    vertices: set[Triangle] = set()
    for area in range(1, p_max + 1):
        for t in triangles_with_area(area):
            if t.perimeter <= p_max:
                vertices.add(t)

    by_perimeter: dict[int, list[Triangle]] = {}
    for t in sorted(vertices):
        by_perimeter.setdefault(t.perimeter, []).append(t)

    def succ_of(t: Triangle) -> list[Triangle]:
        area = heron_area(t)
        assert area is not None
        return by_perimeter.get(area, [])

    alive = set(vertices)
    while True:
        has_succ = {t for t in alive if any(u in alive for u in succ_of(t))}
        with_preds: set[Triangle] = set()
        for t in has_succ:
            with_preds.update(u for u in succ_of(t) if u in has_succ)
        if with_preds == alive:
            break
        alive = with_preds

    core = tuple(sorted(alive))
    succ = {t: tuple(u for u in succ_of(t) if u in alive) for t in core}
    return core, succ


def closed_walks(n: int, p_max: int) -> list[tuple[Triangle, ...]]:
    """All length-n closed walks of the successor graph, one canonical
    rotation per rotation class, members bounded by p_max in perimeter.

    This is the raw search result: all-equable walks (the constant walk
    on an equable triangle) are still included; find_cycles filters
    them out.
    """
    if n < 1:
        raise ValueError("cycle length must be at least 1")
    core, succ = _cycle_core(p_max)
    found: set[tuple[Triangle, ...]] = set()

    def extend(path: list[Triangle], v0: Triangle) -> None:
        if len(path) == n:
            if v0 in succ[path[-1]]:
                found.add(canonical_rotation(tuple(path)))
            return
        for u in succ[path[-1]]:
            if u >= v0:  # v0 is the minimal member of any walk it anchors
                extend(path + [u], v0)

    for v0 in core:
        extend([v0], v0)
    return sorted(found)


def find_cycles(n: int, p_max: int) -> list[ConcreteCycle]:
    """All n-sociable cycles whose members have perimeter <= p_max.

    Any member's area equals another member's perimeter, so members of
    such cycles automatically have area <= p_max as well; the search
    over that finite vertex set is therefore complete. Results are
    deduplicated under rotation and sorted.
    """
    cycles = []
    for walk in closed_walks(n, p_max):
        if all(classify(t) is Classification.EQUABLE for t in walk):
            continue
        cycles.append(ConcreteCycle(walk))
    return cycles


def amicable_pairs(p_max: int) -> list[ConcreteCycle]:
    """2-sociable cycles: pairs where each one's area is the other's perimeter."""
    return find_cycles(2, p_max)
