"""Module theory of the abelianized tail subgroups.

At level j the abelianized tail splits as a direct sum of n-j copies of the
natural block-permutation module F_p^(p^j) of the height-j prefix group,
one copy per digit level j..n-1.  Each copy is uniserial: its invariant
subspaces form a single chain of length p^j.  The helpers here answer the
questions the complement engine needs about an invariant subspace U of
this module:

- its *socle coordinates*: the fixed vectors of U are combinations of the
  per-level diagonal vectors, and reading off the diagonal multipliers
  drops U's socle into F_p^(n-j);
- whether U is a *direct summand* (the dimension of U modulo the
  augmentation subspace equals its socle dimension);
- a *level choice*: a set Z of digit levels whose full summands complement
  U, preferring choices that avoid level j itself.

The per-summand augmentation subspace is the sum-zero hyperplane and the
per-summand fixed space is the diagonal line, because the prefix group
permutes the blocks transitively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import Subspace, augmentation_subspace, fixed_subspace, spin
from .tower import TailVector, Tower, tail_action_matrices

# which complement the engine builds from a level choice
STYLE_CO_SHIFT = "co_shift"  # prefix gens plus co-shifts at the chosen levels
STYLE_PREFIX = "prefix_tower"  # the prefix tower one level deeper


@dataclass(frozen=True)
class LevelChoice:
    """Digit levels whose full summands complement the given subspace."""

    levels: tuple[int, ...]
    style: str


def level_sums(v: TailVector) -> tuple[int, ...]:
    """Per-level block sums: the map killing the augmentation subspace.

    On the quotient by the augmentation subspace this is an isomorphism onto
    F_p^(n-j); note that it kills the diagonal vectors themselves for j >= 1
    (a constant block row sums to p^j * c = 0), which is why socle vectors
    are coordinatized by their diagonal multipliers instead, see
    socle_coordinates.
    """
    return tuple(sum(v.summand(s)) % v.p for s in range(v.levels))


def _require_invariant(tower: Tower, j: int, u: Subspace, actions) -> None:
    if u.dim != (tower.n - j) * tower.p**j:
        raise ValueError(f"subspace dim {u.dim} does not match level {j}")
    if spin(u.p, u.dim, u.rows, actions) != u:
        raise ValueError("subspace is not invariant under the prefix action")


def socle_coordinates(tower: Tower, j: int, u: Subspace) -> Subspace:
    """Diagonal multipliers of the fixed vectors of u, as a subspace of F_p^(n-j).

    A fixed vector is constant on the blocks of each level; coordinate s of
    its image is that constant at level s.
    """
    actions = tail_action_matrices(tower, j)
    _require_invariant(tower, j, u, actions)
    blocks = tower.p**j
    fixed = u.intersect(fixed_subspace(u.p, u.dim, actions))
    return Subspace.span(
        u.p, tower.n - j, [row[::blocks] for row in fixed.rows]
    )


def summand_ranks(tower: Tower, j: int, u: Subspace) -> tuple[int, int]:
    """(rank of u modulo the augmentation subspace, rank of u's fixed part).

    The two numbers agree exactly on direct summands, where both count the
    full-length uniserial constituents.
    """
    actions = tail_action_matrices(tower, j)
    _require_invariant(tower, j, u, actions)
    aug = augmentation_subspace(u.p, u.dim, actions)
    mod_aug = u.sum_with(aug).rank - aug.rank
    soc = u.intersect(fixed_subspace(u.p, u.dim, actions)).rank
    return mod_aug, soc


def is_direct_summand(tower: Tower, j: int, u: Subspace) -> bool:
    """True iff u is a direct summand of the level-j module."""
    mod_aug, soc = summand_ranks(tower, j, u)
    return mod_aug == soc


def generates_uniserial(tower: Tower, v: TailVector) -> bool:
    """Does v generate a uniserial submodule of full length p^j?

    Equivalent conditions, checked per summand s:
    (a) projecting the module generated by v onto summand s is injective,
        tested as equal spin dimensions of v and of v cut down to s;
    (b) the summand-s part of v lies outside the augmentation subspace,
        i.e. its block sum is nonzero.
    True iff some summand passes both.
    """
    actions = tail_action_matrices(tower, v.j)
    if not any(x % v.p for x in v.coords):
        return False
    full = spin(v.p, v.dim, [v.coords], actions).rank
    for s in range(v.levels):
        if sum(v.summand(s)) % v.p == 0:
            continue
        alone = v.with_only_summand(s)
        if spin(v.p, v.dim, [alone.coords], actions).rank == full:
            return True
    return False


def summand_subspace(tower: Tower, j: int, levels) -> Subspace:
    """The direct sum of the full summands at the given digit levels."""
    blocks = tower.p**j
    dim = (tower.n - j) * blocks
    vecs = []
    for lvl in levels:
        s = lvl - j
        if not 0 <= s < tower.n - j:
            raise ValueError(f"level {lvl} out of range {j}..{tower.n - 1}")
        for b in range(blocks):
            row = [0] * dim
            row[s * blocks + b] = 1
            vecs.append(row)
    return Subspace.span(tower.p, dim, vecs)


def choose_levels(tower: Tower, j: int, u: Subspace) -> Optional[LevelChoice]:
    """Pick complementing levels for a direct summand u, or report that none work.

    With S the socle coordinates of u and E the span of the coordinates
    above level j:

    - S not inside E: there is a choice avoiding level j; return the
      lexicographically smallest Z in {j+1, ..., n-1} with span(e_i, i in Z)
      complementing S (style co_shift);
    - S == E: level j's summand is the complement; Z = {j} (style
      prefix_tower);
    - S strictly inside E: no full-summand complement respects the
      constraint, and the engine reports no complement at all.

    Requires is_direct_summand(u); on a non-summand the socle is too big
    and the returned levels would not complement.
    """
    m = tower.n - j
    soc = socle_coordinates(tower, j, u)
    in_e = all(row[0] == 0 for row in soc.rows)
    if not in_e:
        # greedy from the smallest index; S + E is everything, so this fills up
        ech = soc._ech()
        chosen = []
        for t in range(1, m):
            e_t = tuple(1 if k == t else 0 for k in range(m))
            if ech.insert(e_t):
                chosen.append(j + t)
        return LevelChoice(tuple(chosen), STYLE_CO_SHIFT)
    if soc.rank == m - 1:
        return LevelChoice((j,), STYLE_PREFIX)
    return None
