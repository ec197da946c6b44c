"""Brute-force ground truth for small groups.

Everything here works on plain element objects that support ``*``,
``.inverse()``, hashing and ordering (permutations and the gallery group
elements both do), and trades cleverness for certainty: breadth-first
element enumeration, exhaustive normal-subgroup and complement searches
with canonical-set deduplication, and scans of full symmetric groups for
centralizers.  Caps guard against accidentally enumerating something huge;
override them explicitly when a test really wants a bigger sweep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .perm import Perm

BFS_CAP = 2**15
SEARCH_CAP = 4096


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupSet:
    """A fully enumerated subgroup: its elements, generators and identity."""

    elements: frozenset
    gens: tuple
    identity: object

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def sorted_elements(self) -> list:
        return sorted(self.elements)

    def __le__(self, other: "GroupSet") -> bool:
        return self.elements <= other.elements


def _identity_of(gens: Sequence, identity):
    if identity is not None:
        return identity
    if not gens:
        raise ValueError("cannot infer the identity of an empty generating set")
    g = gens[0]
    return g * g.inverse()


def bfs_closure(gens: Sequence, cap: int = BFS_CAP, identity=None) -> GroupSet:
    """Multiplicative closure of the generators, breadth first."""
    e = _identity_of(gens, identity)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return GroupSet(frozenset(seen), tuple(gens), e)


def bfs_order(gens: Sequence[Perm], cap: int = 2**21) -> int:
    """Order of the closure, counting only; packs images to keep memory flat.

    For permutation groups too big to hold as GroupSets (the full tower at
    p=3, n=3 has 3^13 elements) but small enough to count.
    """
    if not gens:
        return 1
    degree = gens[0].degree
    gen_imgs = [g.images for g in gens]
    e = bytes(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for img in gen_imgs:
                y = bytes(x[k] for k in img)
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def element_order(g, identity) -> int:
    k, x = 1, g
    while x != identity:
        x = x * g
        k += 1
    return k


def normal_closure(gens: Sequence, ambient_gens: Sequence, cap: int = BFS_CAP, identity=None) -> GroupSet:
    """Smallest subgroup containing gens and closed under ambient conjugation.

    Single BFS whose moves are right multiplication by the given generators
    and conjugation by the ambient generators; both stay inside the normal
    closure, and every product of conjugates is reachable by inducting on
    its length.
    """
    e = _identity_of(tuple(gens) + tuple(ambient_gens), identity)
    conj = [(a, a.inverse()) for a in ambient_gens]
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            moves = [x * g for g in gens]
            moves.extend(a * x * ai for a, ai in conj)
            for y in moves:
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"normal closure exceeds cap {cap}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return GroupSet(frozenset(seen), tuple(gens), e)


def normal_closure_order(gens: Sequence[Perm], ambient_gens: Sequence[Perm], cap: int = 2**21) -> int:
    """Order of the normal closure, counting only (packed images, flat memory)."""
    if not gens:
        return 1
    degree = gens[0].degree
    gen_imgs = [g.images for g in gens]
    conj = [(a.images, a.inverse().images) for a in ambient_gens]
    e = bytes(range(degree))
    seen = {e}
    frontier = [e]
    rng = range(degree)
    while frontier:
        nxt = []
        for x in frontier:
            moves = [bytes(x[k] for k in img) for img in gen_imgs]
            for a, ai in conj:
                moves.append(bytes(a[x[ai[k]]] for k in rng))
            for y in moves:
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"normal closure exceeds cap {cap}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def is_normal_under(sub: GroupSet, ambient_gens: Sequence) -> bool:
    return all(
        a * x * a.inverse() in sub.elements for x in sub.elements for a in ambient_gens
    )


def derived_subgroup(group: GroupSet, cap: int = BFS_CAP) -> GroupSet:
    """Commutator subgroup of a fully enumerated group."""
    elems = group.sorted_elements()
    comms = set()
    for a in elems:
        ai = a.inverse()
        for b in elems:
            comms.add(a * b * ai * b.inverse())
    return bfs_closure(sorted(comms), cap=cap, identity=group.identity)


def derived_subgroup_from_gens(gens: Sequence, cap: int = BFS_CAP) -> GroupSet:
    """Commutator subgroup of <gens>: the normal closure of the generator commutators."""
    comms = []
    for a in gens:
        for b in gens:
            comms.append(a * b * a.inverse() * b.inverse())
    return normal_closure(comms, gens, cap=cap, identity=_identity_of(gens, None))


def center(group: GroupSet) -> GroupSet:
    elems = [
        x
        for x in group.sorted_elements()
        if all(x * g == g * x for g in group.gens)
    ]
    return GroupSet(frozenset(elems), tuple(elems), group.identity)


def all_normal_subgroups(group: GroupSet, cap: int = SEARCH_CAP) -> list[GroupSet]:
    """Every normal subgroup, as the join closure of cyclic normal closures."""
    if group.order > cap:
        raise CapExceeded(f"group order {group.order} exceeds cap {cap}")
    e = group.identity
    atoms: dict[frozenset, GroupSet] = {}
    classified: set = set()
    for x in group.sorted_elements():
        if x in classified or x == e:
            continue
        # conjugation orbit of x, then its multiplicative closure
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in group.gens:
                z = g * y * g.inverse()
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        classified |= orbit
        ncl = bfs_closure(sorted(orbit), identity=e)
        atoms.setdefault(ncl.elements, ncl)
    trivial = GroupSet(frozenset([e]), (), e)
    found: dict[frozenset, GroupSet] = {trivial.elements: trivial}
    for a in atoms.values():
        found.setdefault(a.elements, a)
    queue = list(found.values())
    while queue:
        cur = queue.pop()
        for a in atoms.values():
            if a.elements <= cur.elements:
                continue
            join = bfs_closure(tuple(set(cur.gens) | set(a.gens)) or (e,), identity=e)
            if join.elements not in found:
                found[join.elements] = join
                queue.append(join)
    return sorted(found.values(), key=lambda g: (g.order, sorted(g.elements)))


def exhaustive_complements(
    group: GroupSet,
    normal: GroupSet,
    cap: int = SEARCH_CAP,
    find_all: bool = True,
) -> list[GroupSet]:
    """All subgroups C with C meet N trivial and |C| * |N| = |G|.

    Backtracking over generator extensions with canonical-set memoization;
    with find_all=False, stops at the first complement.
    """
    if group.order > cap:
        raise CapExceeded(f"group order {group.order} exceeds cap {cap}")
    if group.order % normal.order:
        raise ValueError("normal subgroup order does not divide the group order")
    target = group.order // normal.order
    e = group.identity
    if target == 1:
        return [GroupSet(frozenset([e]), (), e)]
    if normal.order == 1:
        return [group]
    elems = group.sorted_elements()
    n_elems = normal.elements
    orders = {g: element_order(g, e) for g in elems}
    seen: set[frozenset] = set()
    results: list[GroupSet] = []

    def extend(current: GroupSet):
        for g in elems:
            if g in current.elements or g in n_elems:
                continue
            if target % orders[g]:
                continue
            grown = bfs_closure(tuple(current.gens) + (g,), identity=e)
            if (
                grown.order > target
                or target % grown.order
                or grown.elements in seen
            ):
                continue
            if len(grown.elements & n_elems) > 1:
                continue
            seen.add(grown.elements)
            if grown.order == target:
                results.append(grown)
                if not find_all:
                    raise _FoundOne
            else:
                extend(grown)

    try:
        extend(GroupSet(frozenset([e]), (), e))
    except _FoundOne:
        pass
    return sorted(results, key=lambda g: sorted(g.elements))


class _FoundOne(Exception):
    pass


def has_complement(group: GroupSet, normal: GroupSet, cap: int = SEARCH_CAP) -> bool:
    return bool(exhaustive_complements(group, normal, cap=cap, find_all=False))


def centralizer_in_sym(target_gens: Sequence[Perm], degree: int, cap_degree: int = 9) -> GroupSet:
    """Centralizer of the generated subgroup inside the full symmetric group.

    A plain scan of all degree! permutations; capped at degree 9 (which
    already takes a few seconds).
    """
    if degree > cap_degree:
        raise CapExceeded(f"degree {degree} exceeds scan cap {cap_degree}")
    gen_imgs = [g.images for g in target_gens]
    rng = range(degree)
    found = []
    for pi in itertools.permutations(rng):
        ok = True
        for img in gen_imgs:
            if any(pi[img[k]] != img[pi[k]] for k in rng):
                ok = False
                break
        if ok:
            found.append(Perm._raw(pi))
    return GroupSet(frozenset(found), tuple(target_gens), Perm.identity(degree))


def max_abelian_stats(group: GroupSet, p: int, cap: int = SEARCH_CAP) -> tuple[int, int]:
    """Largest abelian subgroup order as an exponent of p, and how many attain it.

    Depth-first growth of commuting sets with canonical-set memoization;
    every abelian subgroup arises by adding one centralizing generator at a
    time, so the sweep is exhaustive.
    """
    if group.order > cap:
        raise CapExceeded(f"group order {group.order} exceeds cap {cap}")
    e = group.identity
    elems = group.sorted_elements()
    seen: set[frozenset] = set()
    best = {"order": 1, "count": 1}  # the trivial subgroup

    def note(sub: GroupSet):
        if sub.order > best["order"]:
            best["order"] = sub.order
            best["count"] = 1
        elif sub.order == best["order"]:
            best["count"] += 1

    def extend(current: GroupSet):
        for g in elems:
            if g in current.elements:
                continue
            # commuting with the generators of an abelian group is enough
            if any(g * h != h * g for h in current.gens):
                continue
            grown = bfs_closure(tuple(current.gens) + (g,), identity=e)
            if grown.elements in seen:
                continue
            seen.add(grown.elements)
            note(grown)
            extend(grown)

    trivial = GroupSet(frozenset([e]), (), e)
    extend(trivial)
    exponent = 0
    order = best["order"]
    while order > 1:
        if order % p:
            raise ValueError("group order is not a p-power")
        order //= p
        exponent += 1
    return exponent, best["count"]


def all_abelian_subgroups_of_order(group: GroupSet, order: int, cap: int = SEARCH_CAP) -> list[GroupSet]:
    """Every abelian subgroup of the given order (same sweep as the stats)."""
    if group.order > cap:
        raise CapExceeded(f"group order {group.order} exceeds cap {cap}")
    e = group.identity
    elems = group.sorted_elements()
    seen: set[frozenset] = set()
    hits: list[GroupSet] = []

    def extend(current: GroupSet):
        for g in elems:
            if g in current.elements:
                continue
            if any(g * h != h * g for h in current.gens):
                continue
            grown = bfs_closure(tuple(current.gens) + (g,), identity=e)
            if grown.elements in seen or grown.order > order:
                continue
            seen.add(grown.elements)
            if grown.order == order:
                hits.append(grown)
            extend(grown)

    extend(GroupSet(frozenset([e]), (), e))
    return sorted(hits, key=lambda g: sorted(g.elements))


def commutator_chain(group: GroupSet, start: GroupSet, cap: int = SEARCH_CAP) -> list[GroupSet]:
    """The chain B, [G, B], [G, [G, B]], ... down to the trivial subgroup.

    Commutators are taken over all element pairs, so no generation subtlety
    can bite at these sizes.
    """
    chain = [start]
    cur = start
    while cur.order > 1:
        comms = set()
        for g in group.elements:
            gi = g.inverse()
            for b in cur.elements:
                comms.add(g * b * gi * b.inverse())
        nxt = bfs_closure(sorted(comms), cap=cap, identity=group.identity)
        if nxt.order >= cur.order:
            raise RuntimeError("commutator chain failed to descend")
        chain.append(nxt)
        cur = nxt
    return chain


def rotation_series_length(tw, cap: int = BFS_CAP) -> int:
    """Steps the rotation subgroup takes to reach the identity under repeated
    commutation with the whole tower (p = 2); each step has index 2.

    Works on the fully enumerated tower, so heights above 3 need a cap raise.
    """
    from .tower import rotation_subgroup_gens, shift_gens

    group = bfs_closure(shift_gens(tw), cap=cap)
    rot = bfs_closure(rotation_subgroup_gens(tw), cap=cap)
    chain = commutator_chain(group, rot, cap=cap)
    for a, b in zip(chain, chain[1:]):
        if a.order != 2 * b.order:
            raise RuntimeError("rotation series step is not index 2")
    return len(chain) - 1
