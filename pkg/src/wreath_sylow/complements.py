"""Decide and construct complements of normal subgroups of the tower.

Input is a list of tower elements; the subgroup under discussion is their
normal closure N.  With j the depth of the generators (the largest tail
level containing them all), N contains the commutator subgroup K of the
level-j tail, and N/K is the submodule of the abelianized tail spun from
the generators' tail images under the prefix block action.  That reduces
every question about N to small exact linear algebra:

- membership: x in N iff x fixes all j-prefixes and its tail image lies in
  the spun subspace;
- order: |N| = |K| * |N/K|, all tracked as exponents of p;
- complement existence: N has a complement iff N/K is a direct summand of
  the abelianized tail and the socle of N/K is not strictly below the span
  of the diagonals above level j.  When a complement exists the engine
  returns one of two explicit shapes and both are invariant under the
  scaling group:

  * co_shift style: the first j shift generators together with the
    co-shifts at the chosen levels Z (their prefix conjugates generate an
    elementary abelian normal-in-C factor whose tail image is the summand
    complement);
  * prefix_tower style: the shift generators 0..j, a copy of the height
    j+1 tower.

verify_complement certifies a positive answer from scratch: the order
equation, trivial intersection (via ranks of the conjugates' tail images
and commutation checks), and the scaling identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .linalg import Subspace, spin
from .perm import Perm, conjugate, format_cycles
from .tower import (
    Tower,
    block_conjugates,
    co_shift_gen,
    depth,
    in_tail,
    scale_gens,
    shift_gen,
    shift_gens,
    tail_action_matrices,
    tail_image,
)
from .uniserial import (
    STYLE_CO_SHIFT,
    choose_levels,
    socle_coordinates,
    summand_ranks,
)

REASON_NOT_SUMMAND = "not_direct_summand"
REASON_SOCLE_GAP = "socle_gap"


@dataclass(frozen=True)
class NormalClosure:
    """A normal subgroup presented by generators of its normal closure.

    order_exponent is log_p |N|; the tail commutator subgroup accounts for
    tail_commutator_exponent(tower, j) of it and the spun image for the rest.
    """

    tower: Tower
    gens: tuple[Perm, ...]
    j: int
    image: Subspace
    order_exponent: int


def tail_commutator_exponent(tower: Tower, j: int) -> int:
    """log_p of the commutator subgroup of the level-j tail."""
    p, n = tower.p, tower.n
    return p**j * tower.order_exponent(n - j) - (n - j) * p**j


def closure_handle(tower: Tower, gens: Iterable[Perm]) -> NormalClosure:
    gens = tuple(gens)
    j = depth(tower, gens)
    actions = tail_action_matrices(tower, j)
    dim = (tower.n - j) * tower.p**j
    seeds = [tail_image(tower, j, g).coords for g in gens]
    image = spin(tower.p, dim, seeds, actions)
    return NormalClosure(
        tower, gens, j, image, tail_commutator_exponent(tower, j) + image.rank
    )


def member(handle: NormalClosure, x: Perm) -> bool:
    """Membership in the normal closure."""
    if not in_tail(handle.tower, handle.j, x):
        return False
    return handle.image.contains(tail_image(handle.tower, handle.j, x).coords)


@dataclass(frozen=True)
class Decision:
    """Outcome of the complement decision, with construction data."""

    has_complement: bool
    style: Optional[str] = None
    levels: tuple[int, ...] = ()
    gens: tuple[Perm, ...] = ()
    reason: Optional[str] = None
    data: dict = field(default_factory=dict)


def decide(handle: NormalClosure) -> Decision:
    """Three-way decision: a complement of one of the two shapes, or none.

    The trivial subgroup (depth n) gets the whole tower as its complement,
    in co_shift shape with an empty level set; the whole tower flows
    through the generic path and gets the trivial complement the same way.
    """
    tw, j = handle.tower, handle.j
    if j == tw.n:
        return Decision(True, STYLE_CO_SHIFT, (), tuple(shift_gens(tw)))
    mod_aug, soc_rank = summand_ranks(tw, j, handle.image)
    if mod_aug != soc_rank:
        return Decision(
            False,
            reason=REASON_NOT_SUMMAND,
            data={
                "rank_mod_augmentation": mod_aug,
                "socle_rank": soc_rank,
                "image_rank": handle.image.rank,
            },
        )
    choice = choose_levels(tw, j, handle.image)
    if choice is None:
        soc = socle_coordinates(tw, j, handle.image)
        return Decision(
            False,
            reason=REASON_SOCLE_GAP,
            data={"socle_coordinates": [list(r) for r in soc.rows]},
        )
    if choice.style == STYLE_CO_SHIFT:
        gens = [shift_gen(tw, i) for i in range(j)]
        gens += [co_shift_gen(tw, i) for i in choice.levels]
    else:
        gens = [shift_gen(tw, i) for i in range(j + 1)]
    return Decision(True, choice.style, choice.levels, tuple(gens))


def complement_order_exponent(handle: NormalClosure, decision: Decision) -> int:
    """log_p of the constructed complement's order."""
    tw, j = handle.tower, handle.j
    if decision.style == STYLE_CO_SHIFT:
        return tw.order_exponent(j) + len(decision.levels) * tw.p**j
    return tw.order_exponent(j + 1)


@dataclass(frozen=True)
class Certificate:
    """Results of the three complement checks; all must hold for a sound run."""

    checks: dict
    numbers: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_complement(handle: NormalClosure, decision: Decision) -> Certificate:
    """Certify a positive decision.

    (i) order equation |C| * |N| = |tower| in exponents; (ii) trivial
    intersection: the prefix conjugates of the tail part of C have
    independent tail images (so the tail part maps isomorphically into the
    abelianized tail) meeting the closure image in 0, and they commute
    pairwise with order p (so the tail part is the expected elementary
    abelian group); (iii) invariance: conjugating any complement generator
    by any scale generator gives back the generator or its r-th power.
    """
    if not decision.has_complement:
        raise ValueError("nothing to verify for a negative decision")
    tw, j = handle.tower, handle.j
    checks: dict = {}
    numbers: dict = {}

    c_exp = complement_order_exponent(handle, decision)
    checks["order_equation"] = (
        c_exp + handle.order_exponent == tw.order_exponent()
    )
    numbers["complement_exponent"] = c_exp
    numbers["closure_exponent"] = handle.order_exponent
    numbers["tower_exponent"] = tw.order_exponent()

    # tail part of the complement: conjugates of the generators beyond the prefix
    if decision.style == STYLE_CO_SHIFT:
        tail_gens = [co_shift_gen(tw, i) for i in decision.levels]
        expected_rank = len(decision.levels) * tw.p**j
    else:
        tail_gens = [shift_gen(tw, j)]
        expected_rank = tw.p**j
    conjs: list[Perm] = []
    for g in tail_gens:
        conjs.extend(block_conjugates(tw, j, g))
    checks["tail_part_in_tail"] = all(in_tail(tw, j, d) for d in conjs)
    checks["tail_part_order_p"] = all(d.order() == tw.p for d in conjs)
    checks["tail_part_abelian"] = all(
        a * b == b * a for k, a in enumerate(conjs) for b in conjs[k + 1 :]
    )
    dim = (tw.n - j) * tw.p**j
    span = Subspace.span(
        tw.p, dim, [tail_image(tw, j, d).coords for d in conjs]
    )
    checks["tail_part_rank"] = span.rank == expected_rank
    checks["meets_closure_trivially"] = span.intersect(handle.image).rank == 0
    numbers["tail_part_rank"] = span.rank

    etas = scale_gens(tw)
    ok = True
    for eta in etas:
        for g in decision.gens:
            cg = conjugate(g, eta)
            if cg != g and cg != g**tw.r:
                ok = False
    checks["scale_invariance"] = ok
    return Certificate(checks, numbers)


def scale_orbit(handle: NormalClosure) -> list[tuple[int, NormalClosure, bool]]:
    """Conjugate the closure by each scale generator.

    Returns (k, conjugated handle, equal to the original) per digit level;
    the closure need not be invariant even when its complement is.
    """
    tw = handle.tower
    out = []
    for k, eta in enumerate(scale_gens(tw)):
        conj_handle = closure_handle(tw, [conjugate(g, eta) for g in handle.gens])
        same = conj_handle.j == handle.j and conj_handle.image == handle.image
        out.append((k, conj_handle, same))
    return out


def decision_json(handle: NormalClosure, decision: Decision) -> dict:
    """The decide report in its stable wire shape."""
    tw = handle.tower
    out = {
        "schema": 1,
        "p": tw.p,
        "n": tw.n,
        "r": tw.r,
        "depth": handle.j,
        "verdict": "HasComplement" if decision.has_complement else "NoComplement",
        "case": decision.style,
        "Z": list(decision.levels),
        "reason": decision.reason,
        "complement_generators": [format_cycles(g) for g in decision.gens],
        "orders": {
            "N": handle.order_exponent,
            "C": None,
            "Pn": tw.order_exponent(),
        },
        "checks": {},
    }
    if decision.has_complement:
        cert = verify_complement(handle, decision)
        out["orders"]["C"] = complement_order_exponent(handle, decision)
        out["checks"] = dict(cert.checks)
    else:
        out["checks"] = {"witness": decision.data}
    return out
