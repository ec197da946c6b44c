"""Partition subgroups: products of terms of the per-level module chains.

Level k of the tower carries an elementary abelian subgroup generated by
the p**k prefix conjugates of shift_gen(k); as a module for the height-k
prefix group it is the natural block-permutation module F_p^(p^k), and its
invariant subspaces form a single descending chain of length p**k (the
module is uniserial).  A partition subgroup is a product of one chain
member per level, recorded by the index tuple (i_0, ..., i_{n-1}) with
0 <= i_k <= p**k; index i_k = p**k means the level is absent.

Closed forms implemented here (cross-checked against the complement engine
and the brute-force oracle in the test suite): with j the depth (smallest
level whose term is nontrivial), the subgroup is normal iff i_k <= p**j
for every k >= j, and a normal one has a complement iff i_j = 0 and every
i_k is 0 or p**j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Subspace, lower_central_series, perm_action_matrix
from .perm import Perm, conjugate
from .tower import Tower, prefix_rep, shift_gen, tower


@dataclass(frozen=True)
class PartitionSpec:
    """Chain indices of a partition subgroup, one per digit level."""

    p: int
    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != self.n:
            raise ValueError(f"need {self.n} indices, got {len(self.indices)}")
        for k, i in enumerate(self.indices):
            if not 0 <= i <= self.p**k:
                raise ValueError(f"index {i} at level {k} out of range 0..{self.p**k}")

    @property
    def depth(self) -> int:
        """Smallest level with a nontrivial term; n if every term is trivial."""
        for k, i in enumerate(self.indices):
            if i < self.p**k:
                return k
        return self.n


def level_chain(tw: Tower, k: int) -> list[Subspace]:
    """The module chain at level k, from the full space down to zero.

    Computed as the lower central series of F_p^(p^k) under the height-k
    prefix group permuting the coordinates; it has p**k + 1 terms with
    codimension-1 steps.
    """
    if not 0 <= k <= tw.n - 1:
        raise ValueError(f"level {k} out of range")
    dim = tw.p**k
    if k == 0:
        actions = []
    else:
        prefix = tower(tw.p, k, tw.r)
        actions = [perm_action_matrix(g.images, tw.p) for g in _gens(prefix)]
    return lower_central_series(Subspace.full(tw.p, dim), actions)


def _gens(tw: Tower) -> list[Perm]:
    return [shift_gen(tw, i) for i in range(tw.n)]


def vector_to_element(tw: Tower, k: int, vec) -> Perm:
    """Map an exponent vector over the level-k blocks to the tower element.

    Coordinate b is the exponent of the conjugate of shift_gen(k) supported
    on prefix block b; the conjugates commute, so the order of factors does
    not matter.
    """
    out = Perm.identity(tw.degree)
    sk = shift_gen(tw, k)
    for b, e in enumerate(vec):
        if e % tw.p:
            out = out * conjugate(sk, prefix_rep(tw, k, b)) ** (e % tw.p)
    return out


def partition_generators(tw: Tower, spec: PartitionSpec) -> list[Perm]:
    """Tower elements generating the partition subgroup of the spec."""
    if (spec.p, spec.n) != (tw.p, tw.n):
        raise ValueError("spec does not match the tower")
    gens = []
    for k, i in enumerate(spec.indices):
        if i == tw.p**k:
            continue
        chain = level_chain(tw, k)
        for row in chain[i].rows:
            gens.append(vector_to_element(tw, k, row))
    return gens


def partition_is_normal(spec: PartitionSpec) -> bool:
    """Normal in the tower iff i_k <= p**depth for every level k >= depth."""
    j = spec.depth
    return all(spec.indices[k] <= spec.p**j for k in range(j, spec.n))


def partition_has_complement(spec: PartitionSpec) -> bool:
    """Closed form for normal specs: i_depth = 0 and each i_k in {0, p**depth}."""
    if not partition_is_normal(spec):
        raise ValueError("complement criterion applies to normal specs only")
    j = spec.depth
    if j == spec.n:
        return True
    if spec.indices[j] != 0:
        return False
    return all(spec.indices[k] in (0, spec.p**j) for k in range(j, spec.n))


def tail_commutator_spec(p: int, n: int, j: int) -> PartitionSpec:
    """The spec of the commutator subgroup of the level-j tail.

    Levels up to j absent, levels above j cut at chain index p**j.
    """
    indices = [p**k for k in range(j + 1)] + [p**j] * (n - j - 1)
    return PartitionSpec(p, n, tuple(indices))


def all_normal_specs(p: int, n: int) -> list[PartitionSpec]:
    """Every normal partition spec at the given parameters."""
    import itertools

    out = []
    ranges = [range(p**k + 1) for k in range(n)]
    for indices in itertools.product(*ranges):
        spec = PartitionSpec(p, n, indices)
        if partition_is_normal(spec):
            out.append(spec)
    return out
