"""The Sylow p-subgroup of Sym(p^n) as an iterated wreath tower.

A point ``0 <= a < p**n`` is identified with its base-p digit string
``(d_0, ..., d_{n-1})`` via ``a = sum(d_i * p**(n-1-i))``; ``d_0`` is the
most significant digit.  The tower group is generated by the *shift*
generators: ``shift_gen(i)`` adds 1 to digit i exactly on the points whose
digits 0..i-1 all vanish.  It is the full Sylow p-subgroup of the symmetric
group on p**n points, of order ``p**((p**n - 1) // (p - 1))``.

Three structural layers computed here are used by the complement engine:

- the *tail filtration*: ``in_tail(tower, j, x)`` holds when x fixes the
  first j digits of every point, i.e. x acts only inside the p**j blocks
  of points sharing a j-digit prefix (the tail subgroups are normal and
  descend from the whole group at j=0 to the trivial group at j=n);
- the *portrait* of an element: the recursive wreath coordinates (one
  translation amount per fiber over the last digit, plus a portrait of the
  induced action on the shorter prefix), whose existence is exactly
  membership in the tower;
- images in the abelianized tail: ``tail_image(tower, j, x)`` records, for
  each j-prefix block, the abelianization of the local action, giving the
  vector on which the complement criteria are checked.

The *scale* generators ``scale_gen(i)`` multiply digit i by a fixed
primitive root r; they normalize the tower and generate a Hall p'-subgroup
of its normalizer of order ``(p-1)**n``.  The *co-shift* ``co_shift_gen(i)``
is the product of the nonidentity ``shift_gen(i-1)``-power conjugates of
``shift_gen(i)``: it adds 1 to digit i exactly where digits 0..i-2 vanish
and digit i-1 does not.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .perm import Perm, conjugate


class NotInTower(ValueError):
    """Raised when a permutation is not an element of the wreath tower."""

    def __init__(self, msg: str, degree: int, block: int):
        super().__init__(f"{msg} (degree {degree}, block {block})")
        self.degree = degree
        self.block = block


class NotInTail(ValueError):
    """Raised when a permutation moves points across j-prefix blocks."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for r in range(2, p):
        x, k = r % p, 1
        while x != 1:
            x = x * r % p
            k += 1
        if k == p - 1:
            return r
    raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class Tower:
    """Parameters of the tower: prime p, height n, unit r scaling the digits."""

    p: int
    n: int
    r: int = 0  # 0 means "use the smallest primitive root mod p"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise ValueError(f"n = {self.n} must be >= 1")
        if self.r == 0:
            object.__setattr__(self, "r", smallest_primitive_root(self.p))
        if self.p == 2:
            if self.r % 2 != 1:
                raise ValueError("r must be 1 for p = 2")
            object.__setattr__(self, "r", 1)
        else:
            x, k = self.r % self.p, 1
            while x != 1:
                x = x * self.r % self.p
                k += 1
            if k != self.p - 1:
                raise ValueError(f"r = {self.r} does not generate the units mod {self.p}")

    @property
    def degree(self) -> int:
        return self.p**self.n

    def order_exponent(self, m: Optional[int] = None) -> int:
        """log_p of the tower order at height m (default: this tower's height)."""
        if m is None:
            m = self.n
        return (self.p**m - 1) // (self.p - 1)

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for i in range(self.n):
            out.append(a // self.p ** (self.n - 1 - i) % self.p)
        return tuple(out)

    def point(self, digits: Sequence[int]) -> int:
        a = 0
        for d in digits:
            a = a * self.p + d % self.p
        return a


def shift_gen(tower: Tower, i: int) -> Perm:
    """Add 1 to digit i on the points whose digits 0..i-1 all vanish."""
    if not 0 <= i <= tower.n - 1:
        raise ValueError(f"level {i} out of range 0..{tower.n - 1}")
    p, n = tower.p, tower.n
    step = p ** (n - 1 - i)  # weight of digit i
    span = step * p  # one full block of digit-i values
    images = list(range(tower.degree))
    # points with zero 0..i-1 prefix form the initial run of length span
    for a in range(span):
        images[a] = (a + step) % span
    return Perm(images)


def scale_gen(tower: Tower, i: int) -> Perm:
    """Multiply digit i by the unit r, fixing every other digit."""
    if not 0 <= i <= tower.n - 1:
        raise ValueError(f"level {i} out of range 0..{tower.n - 1}")
    p, n, r = tower.p, tower.n, tower.r
    step = p ** (n - 1 - i)
    images = []
    for a in range(tower.degree):
        d = a // step % p
        images.append(a + (r * d % p - d) * step)
    return Perm(images)


def co_shift_gen(tower: Tower, i: int) -> Perm:
    """Product of the nonidentity shift_gen(i-1)-power conjugates of shift_gen(i).

    Equals the identity on digit-(i-1) = 0 blocks and a digit-i increment on
    the rest of the zero 0..i-2 prefix region; defined for 1 <= i <= n-1.
    """
    if not 1 <= i <= tower.n - 1:
        raise ValueError(f"level {i} out of range 1..{tower.n - 1}")
    si, prev = shift_gen(tower, i), shift_gen(tower, i - 1)
    out = Perm.identity(tower.degree)
    for s in range(1, tower.p):
        out = out * conjugate(si, prev**s)
    return out


def shift_gens(tower: Tower) -> list[Perm]:
    return [shift_gen(tower, i) for i in range(tower.n)]


def scale_gens(tower: Tower) -> list[Perm]:
    return [scale_gen(tower, i) for i in range(tower.n)]


def co_shift_gens(tower: Tower) -> list[Perm]:
    return [co_shift_gen(tower, i) for i in range(1, tower.n)]


def prefix_rep(tower: Tower, j: int, block: int) -> Perm:
    """A shift word sending the zero j-prefix to the given block.

    The word shift_0^b0 * ... * shift_{j-1}^b_{j-1} (rightmost factor first)
    maps the all-zero prefix to (b0, ..., b_{j-1}), the digits of ``block``.
    """
    if not 0 <= j <= tower.n:
        raise ValueError(f"prefix length {j} out of range")
    if not 0 <= block < tower.p**j:
        raise ValueError(f"block {block} out of range for prefix length {j}")
    out = Perm.identity(tower.degree)
    for i in range(j):
        b_i = block // tower.p ** (j - 1 - i) % tower.p
        out = out * shift_gen(tower, i) ** b_i
    return out


def block_conjugates(tower: Tower, j: int, x: Perm) -> list[Perm]:
    """Conjugates of x by the p**j prefix representatives, in block order."""
    return [conjugate(x, prefix_rep(tower, j, b)) for b in range(tower.p**j)]


def base_translations(tower: Tower) -> list[Perm]:
    """The p**(n-1) disjoint p-cycles generating the bottom abelian layer.

    These are the conjugates of the top shift generator, indexed by the
    (n-1)-digit prefix of their support; they commute pairwise and their
    normal closure is the elementary abelian base group of the tower.
    """
    return block_conjugates(tower, tower.n - 1, shift_gen(tower, tower.n - 1))


def in_tail(tower: Tower, j: int, x: Perm) -> bool:
    """True iff x fixes the first j digits of every point."""
    if not 0 <= j <= tower.n:
        raise ValueError(f"tail level {j} out of range 0..{tower.n}")
    if x.degree != tower.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {tower.degree}")
    size = tower.p ** (tower.n - j)
    return all(y // size == a // size for a, y in enumerate(x.images))


@dataclass(frozen=True)
class Portrait:
    """Recursive wreath coordinates of a tower element.

    ``shifts[b]`` is the amount the last digit is translated by on the fiber
    over prefix b; ``inner`` is the portrait of the induced action on the
    prefixes.  A height-0 portrait (single point) has empty shifts and no
    inner portrait.
    """

    shifts: tuple[int, ...]
    inner: Optional["Portrait"]

    @property
    def height(self) -> int:
        return 0 if self.inner is None else self.inner.height + 1


def decompose(x: Perm, p: int) -> Portrait:
    """Wreath coordinates of x; raises NotInTower if there are none.

    Succeeds exactly on the elements of the tower: every fiber over a last
    digit prefix must map to a single fiber by a translation, and the induced
    prefix action must itself decompose.
    """
    d = x.degree
    if d == 1:
        return Portrait((), None)
    if d % p:
        raise ValueError(f"degree {d} is not a power of {p}")
    fibers = d // p
    shifts = []
    induced = []
    for b in range(fibers):
        target = x.images[b * p] // p
        c = x.images[b * p] % p
        for y in range(1, p):
            img = x.images[b * p + y]
            if img // p != target:
                raise NotInTower("fiber not preserved", d, b)
            if img % p != (y + c) % p:
                raise NotInTower("fiber action is not a translation", d, b)
        shifts.append(c)
        induced.append(target)
    return Portrait(tuple(shifts), decompose(Perm(induced), p))


def reconstruct(portrait: Portrait, p: int) -> Perm:
    """Inverse of decompose."""
    if portrait.inner is None:
        return Perm.identity(1)
    inner = reconstruct(portrait.inner, p)
    if len(portrait.shifts) != inner.degree:
        raise ValueError("shift table length disagrees with inner degree")
    images = [0] * (inner.degree * p)
    for b, c in enumerate(portrait.shifts):
        tb = inner.images[b] * p
        for y in range(p):
            images[b * p + y] = tb + (y + c) % p
    return Perm._raw(tuple(images))


def in_tower(x: Perm, p: int) -> bool:
    try:
        decompose(x, p)
    except NotInTower:
        return False
    return True


def random_element(tower: Tower, rng) -> Perm:
    """Uniformly random tower element, built from a random portrait."""

    def rand_portrait(height: int) -> Portrait:
        if height == 0:
            return Portrait((), None)
        fibers = tower.p ** (height - 1)
        shifts = tuple(rng.randrange(tower.p) for _ in range(fibers))
        return Portrait(shifts, rand_portrait(height - 1))

    return reconstruct(rand_portrait(tower.n), tower.p)


def abelianization(tower: Tower, x: Perm) -> tuple[int, ...]:
    """Image of x in the elementary abelian quotient of the tower.

    Coordinate i is the total digit-i translation amount: the shift
    generators map to the standard basis.  Raises NotInTower off the tower.
    """
    portrait = decompose(x, tower.p)
    coords = [0] * tower.n
    level = tower.n - 1
    while portrait.inner is not None:
        coords[level] = sum(portrait.shifts) % tower.p
        portrait = portrait.inner
        level -= 1
    return tuple(coords)


@dataclass(frozen=True)
class TailVector:
    """A vector in the abelianized level-j tail subgroup.

    The tail subgroup at level j is the direct product of p**j copies of the
    height n-j tower, one per j-prefix block; modulo its commutator subgroup
    it is an F_p-space of dimension (n-j) * p**j.  Coordinates are stored
    level-major: entry (s * p**j + b) is the digit-(j+s) translation total of
    the local action on block b.  Each level-s slice is one summand of the
    natural block-permutation module, and the diagonal vectors (a constant
    slice in one level) span the fixed subspace under prefix permutations.
    """

    p: int
    n: int
    j: int
    coords: tuple[int, ...]

    @property
    def levels(self) -> int:
        return self.n - self.j

    @property
    def blocks(self) -> int:
        return self.p**self.j

    @property
    def dim(self) -> int:
        return self.levels * self.blocks

    def summand(self, s: int) -> tuple[int, ...]:
        """The slice of coordinates at local level s (global digit j+s)."""
        return self.coords[s * self.blocks : (s + 1) * self.blocks]

    def with_only_summand(self, s: int) -> "TailVector":
        coords = [0] * self.dim
        coords[s * self.blocks : (s + 1) * self.blocks] = self.summand(s)
        return TailVector(self.p, self.n, self.j, tuple(coords))


def tail_image(tower: Tower, j: int, x: Perm) -> TailVector:
    """Image of x in the abelianized level-j tail.

    Requires x to be a tower element fixing all j-prefixes; the local action
    on each block is a height n-j tower element whose abelianization fills
    the block's column of the result.
    """
    p, n = tower.p, tower.n
    if not 0 <= j <= n:
        raise ValueError(f"tail level {j} out of range")
    size = p ** (n - j)
    blocks = p**j
    local_tower = Tower(p, n - j, tower.r) if j < n else None
    coords = [0] * ((n - j) * blocks)
    for b in range(blocks):
        base = b * size
        local = []
        for y in range(size):
            img = x.images[base + y]
            if img // size != b:
                raise NotInTail(f"moves block {b} (level {j})")
            local.append(img - base)
        if local_tower is not None:
            ab = abelianization(local_tower, Perm(local))
            for s in range(n - j):
                coords[s * blocks + b] = ab[s]
    return TailVector(p, n, j, tuple(coords))


def block_map(tower: Tower, j: int, g: Perm) -> tuple[int, ...]:
    """The permutation g induces on j-prefix blocks.

    Accepts either a degree p**j permutation (already acting on blocks) or a
    degree p**n one mapping each block onto a block.
    """
    blocks = tower.p**j
    if g.degree == blocks:
        return g.images
    if g.degree != tower.degree:
        raise ValueError(f"degree {g.degree} fits neither blocks nor points")
    size = tower.degree // blocks
    out = []
    for b in range(blocks):
        target = g.images[b * size] // size
        if any(g.images[b * size + y] // size != target for y in range(size)):
            raise ValueError(f"block action ill-defined: block {b} is split")
        out.append(target)
    return tuple(out)


def tail_action(tower: Tower, j: int, g: Perm, v: TailVector) -> TailVector:
    """Permute the block coordinates of v by the block action of g."""
    bm = block_map(tower, j, g)
    inv = [0] * len(bm)
    for b, t in enumerate(bm):
        inv[t] = b
    coords = []
    for s in range(v.levels):
        row = v.summand(s)
        coords.extend(row[inv[b]] for b in range(v.blocks))
    return TailVector(v.p, v.n, v.j, tuple(coords))


def tail_action_matrices(tower: Tower, j: int) -> list[tuple[tuple[int, ...], ...]]:
    """The first j shift generators as 0/1 matrices on tail-vector coordinates.

    Row k of a matrix is the image of basis vector k; suitable for the
    linalg helpers (spin, fixed and augmentation subspaces).
    """
    blocks = tower.p**j
    dim = (tower.n - j) * blocks
    mats = []
    for i in range(j):
        bm = block_map(tower, j, shift_gen(tower, i))
        rows = []
        for k in range(dim):
            s, b = divmod(k, blocks)
            row = [0] * dim
            row[s * blocks + bm[b]] = 1
            rows.append(tuple(row))
        mats.append(tuple(rows))
    return mats


def point_action_matrices(tower: Tower) -> list[tuple[tuple[int, ...], ...]]:
    """The shift generators as permutation matrices on F_p^(p^n).

    This is the natural permutation module of the tower; row k of each
    matrix is the basis vector indexed by the image of point k.
    """
    dim = tower.degree
    mats = []
    for g in shift_gens(tower):
        rows = []
        for k in range(dim):
            row = [0] * dim
            row[g.images[k]] = 1
            rows.append(tuple(row))
        mats.append(tuple(rows))
    return mats


def depth(tower: Tower, gens: Iterable[Perm]) -> int:
    """Largest j with every generator in the level-j tail; n for no/identity gens.

    Tail subgroups are normal, so the normal closure of the generators has
    the same depth.  Raises NotInTower if a generator is off the tower.
    """
    j = tower.n
    for g in gens:
        decompose(g, tower.p)
        while j > 0 and not in_tail(tower, j, g):
            j -= 1
    return j


def rotation_subgroup_gens(tower: Tower) -> list[Perm]:
    """p = 2 only: one order-4 rotation per dihedral block of the level n-2 tail.

    The conjugates of shift_gen(n-2) * shift_gen(n-1) under the first n-2
    shift generators; they generate the homocyclic abelian subgroup
    (C_4)^(2^(n-2)), which is characteristic in the tower.
    """
    if tower.p != 2:
        raise ValueError("rotation subgroup is defined for p = 2 only")
    if tower.n < 2:
        raise ValueError("needs height >= 2")
    rot = shift_gen(tower, tower.n - 2) * shift_gen(tower, tower.n - 1)
    return block_conjugates(tower, tower.n - 2, rot)


@functools.lru_cache(maxsize=None)
def _cached_tower(p: int, n: int, r: int) -> Tower:
    return Tower(p, n, r)


def tower(p: int, n: int, r: int = 0) -> Tower:
    """Cached Tower constructor."""
    return _cached_tower(p, n, r)
