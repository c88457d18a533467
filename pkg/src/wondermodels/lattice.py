"""Dowling-style intersection lattices for the groups G(r,p,n).

Elements of the braid-like arrangement lattice for G(r,p,n) are coded as a
zero set (coordinates forced to 0) plus disjoint weighted blocks: a block
with support {i1 < i2 < ...} and weights (0, a2, ...) is the subspace
x_{i1} = zeta^{a2} x_{i2} = ..., zeta a primitive r-th root of unity.
Weights live mod r and are normalized so the smallest support element
carries weight 0.

Three group families share this machinery, distinguished by which
one-component subspaces belong to the building set of the minimal
wonderful model:

  type A       G(1,1,n)   weighted blocks only (all weights 0)
  full         G(r,p,n), p < r, r >= 2   every zero set, every block
  rr           G(r,r,n)   blocks plus zero sets of size >= 2 (>= 3 if r = 2)
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field


class GuardExceeded(Exception):
    """Enumeration refused because the building set exceeds the size guard."""


class Variant(enum.Enum):
    TYPE_A = "A"
    FULL_MONOMIAL = "full"
    RR = "rr"


@dataclass(frozen=True)
class GroupId:
    r: int
    p: int
    n: int

    def __post_init__(self):
        if self.r < 1 or self.p < 1 or self.n < 2:
            raise ValueError(f"bad group parameters G({self.r},{self.p},{self.n})")
        if self.r % self.p:
            raise ValueError(f"p = {self.p} does not divide r = {self.r}")

    @property
    def variant(self) -> Variant:
        if self.r == 1:
            return Variant.TYPE_A
        if self.p == self.r:
            return Variant.RR
        return Variant.FULL_MONOMIAL

    def __str__(self):
        return f"G({self.r},{self.p},{self.n})"


@dataclass(frozen=True, order=True)
class BuildingElement:
    """One irreducible subspace: a zero set ('strong') or a weighted block ('weak').

    support is a sorted tuple of coordinates; weights align with support,
    are reduced mod r and normalized so weights[0] == 0.  Strong elements
    carry empty weights.
    """

    kind: str  # "strong" < "weak" alphabetically, giving strongs first in sort
    support: tuple[int, ...]
    weights: tuple[int, ...]
    r: int = field(compare=False)

    @classmethod
    def strong(cls, coords, r: int) -> "BuildingElement":
        support = tuple(sorted(set(coords)))
        if not support or support[0] < 1:
            raise ValueError("strong element needs a nonempty set of coordinates >= 1")
        return cls("strong", support, (), r)

    @classmethod
    def weak(cls, coords, weights, r: int) -> "BuildingElement":
        support = tuple(sorted(set(coords)))
        if len(support) < 2 or support[0] < 1:
            raise ValueError("weak element needs >= 2 coordinates >= 1")
        if isinstance(weights, dict):
            wlist = [weights[i] for i in support]
        else:
            wlist = list(weights)
        if len(wlist) != len(support):
            raise ValueError("weights do not match support")
        shift = wlist[0]
        return cls("weak", support, tuple((a - shift) % r for a in wlist), r)

    @property
    def is_strong(self) -> bool:
        return self.kind == "strong"

    def weight_of(self, i: int) -> int:
        return self.weights[self.support.index(i)]

    def dimension(self) -> int:
        # codimension-in-quotient convention: a zero set on t coordinates has
        # rank t, a block on t coordinates rank t-1
        return len(self.support) if self.is_strong else len(self.support) - 1

    def as_lattice(self) -> "LatticeElement":
        if self.is_strong:
            return LatticeElement(self.r, self.support, ())
        return LatticeElement(self.r, (), ((self.support, self.weights),))

    def text(self) -> str:
        if self.is_strong:
            return "{" + ",".join(str(i) for i in (0,) + self.support) + "}"
        items = [str(i) if a == 0 else f"{i}^{a}"
                 for i, a in zip(self.support, self.weights)]
        return "{" + ", ".join(items) + "}"

    def __str__(self):
        return self.text()


Block = tuple[tuple[int, ...], tuple[int, ...]]  # (support, weights)


@dataclass(frozen=True)
class LatticeElement:
    """General lattice element: zero set plus pairwise disjoint weighted blocks."""

    r: int
    zeros: tuple[int, ...]
    blocks: tuple[Block, ...]

    def __post_init__(self):
        seen = set(self.zeros)
        for support, _ in self.blocks:
            if seen & set(support):
                raise ValueError("blocks must be disjoint from each other and the zero set")
            seen |= set(support)

    @classmethod
    def bottom(cls, r: int) -> "LatticeElement":
        return cls(r, (), ())

    def dimension(self) -> int:
        return len(self.zeros) + sum(len(s) - 1 for s, _ in self.blocks)

    def component_count(self) -> int:
        return (1 if self.zeros else 0) + len(self.blocks)


def _normalize_block(wmap: dict[int, int], r: int) -> Block:
    support = tuple(sorted(wmap))
    shift = wmap[support[0]]
    return support, tuple((wmap[i] - shift) % r for i in support)


def join(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    """Lattice join: union the constraints, absorbing inconsistencies into zeros.

    Overlapping blocks merge when their weights agree up to one global mod-r
    shift on the overlap; otherwise x_i = zeta^u x_j = zeta^v x_j forces the
    whole merged component to zero.  Blocks touching the zero set are zeroed.
    """
    if a.r != b.r:
        raise ValueError("lattice elements from different r")
    r = a.r
    zeros = set(a.zeros) | set(b.zeros)
    blocks: list[dict[int, int]] = [dict(zip(s, w)) for s, w in a.blocks + b.blocks]

    changed = True
    while changed:
        changed = False
        for i, blk in enumerate(blocks):
            if zeros & blk.keys():
                zeros |= blk.keys()
                del blocks[i]
                changed = True
                break
        if changed:
            continue
        for i, j in itertools.combinations(range(len(blocks)), 2):
            bi, bj = blocks[i], blocks[j]
            shared = bi.keys() & bj.keys()
            if not shared:
                continue
            shifts = {(bi[x] - bj[x]) % r for x in shared}
            if len(shifts) == 1:
                shift = shifts.pop()
                merged = dict(bi)
                for x, wx in bj.items():
                    merged[x] = (wx + shift) % r
                blocks[j] = merged
                del blocks[i]
            else:
                zeros |= bi.keys() | bj.keys()
                del blocks[j]
                del blocks[i]
            changed = True
            break

    norm = tuple(sorted(_normalize_block(blk, r) for blk in blocks))
    return LatticeElement(r, tuple(sorted(zeros)), norm)


def join_all(elements, r: int) -> LatticeElement:
    out = LatticeElement.bottom(r)
    for e in elements:
        out = join(out, e.as_lattice() if isinstance(e, BuildingElement) else e)
    return out


def in_building(e: LatticeElement, g: GroupId) -> bool:
    """Whether a lattice element is itself a member of the building set."""
    if e.component_count() != 1:
        return False
    if e.blocks:
        return len(e.blocks[0][0]) >= 2
    size = len(e.zeros)
    v = g.variant
    if v is Variant.TYPE_A:
        return False
    if v is Variant.FULL_MONOMIAL:
        return size >= 1
    return size >= (3 if g.r == 2 else 2)


@functools.lru_cache(maxsize=None)
def building_set(g: GroupId) -> tuple[BuildingElement, ...]:
    """All irreducible subspaces for g, sorted (strongs first, then by support)."""
    n, r, v = g.n, g.r, g.variant
    out: list[BuildingElement] = []
    if v is not Variant.TYPE_A:
        min_strong = 1 if v is Variant.FULL_MONOMIAL else (3 if r == 2 else 2)
        for size in range(min_strong, n + 1):
            for coords in itertools.combinations(range(1, n + 1), size):
                out.append(BuildingElement.strong(coords, r))
    for size in range(2, n + 1):
        for coords in itertools.combinations(range(1, n + 1), size):
            for tail in itertools.product(range(r), repeat=size - 1):
                out.append(BuildingElement.weak(coords, (0,) + tail, r))
    return tuple(sorted(out))


def contains(outer: BuildingElement, inner: BuildingElement) -> bool:
    """Subspace containment inner <= outer (equality counts)."""
    if outer.is_strong:
        return set(inner.support) <= set(outer.support)
    if inner.is_strong:
        return False
    if not set(inner.support) <= set(outer.support):
        return False
    r = outer.r
    shift = (outer.weight_of(inner.support[0]) - inner.weights[0]) % r
    return all((outer.weight_of(i) - inner.weight_of(i)) % r == shift
               for i in inner.support)


def comparable(a: BuildingElement, b: BuildingElement) -> bool:
    return contains(a, b) or contains(b, a)


def element_in_building(e: BuildingElement, g: GroupId) -> bool:
    """Structural membership test, independent of the building set's size."""
    if e.r != g.r or not set(e.support) <= set(range(1, g.n + 1)):
        return False
    if not e.is_strong:
        return len(e.support) >= 2 and all(0 <= a < g.r for a in e.weights)
    v = g.variant
    if v is Variant.TYPE_A:
        return False
    if v is Variant.FULL_MONOMIAL:
        return True
    return len(e.support) >= (3 if g.r == 2 else 2)


def _check_membership(s, g: GroupId) -> tuple[BuildingElement, ...]:
    elems = tuple(sorted(set(s)))
    for e in elems:
        if not element_in_building(e, g):
            raise ValueError(f"{e} is not in the building set of {g}")
    return elems


def _pair_nested(a: BuildingElement, b: BuildingElement, g: GroupId) -> bool:
    if comparable(a, b):
        return True
    j = join(a.as_lattice(), b.as_lattice())
    if in_building(j, g):
        return False
    # incomparable members of a nested set span a direct sum
    return j.dimension() == a.dimension() + b.dimension()


def _antiparallel_supports(elems) -> list[tuple[int, ...]]:
    # supports carried by more than one weak element (same block, different
    # twist); only 2-element supports can survive the pairwise checks
    by_support: dict[tuple[int, ...], int] = {}
    for e in elems:
        if not e.is_strong:
            by_support[e.support] = by_support.get(e.support, 0) + 1
    return [s for s, k in by_support.items() if k > 1]


def is_nested(s, g: GroupId) -> bool:
    """Nestedness of a set of building elements, by local rules.

    Pairs must be comparable or span a direct sum whose join leaves the
    building set; strong elements must form a chain.  For G(2,2,n) one
    global rule is needed on top: at most one antiparallel block pair, and
    every strong element present must contain its support (any antichain
    through two antiparallel pairs, or one pair plus a disjoint zero set,
    joins into a single zero set of size >= 3, which is back in the
    building set even though every pair looks fine).
    """
    elems = _check_membership(s, g)
    strongs = sorted((e for e in elems if e.is_strong), key=lambda e: len(e.support))
    for small, big in zip(strongs, strongs[1:]):
        if not contains(big, small):
            return False
    for a, b in itertools.combinations(elems, 2):
        if not _pair_nested(a, b, g):
            return False
    if g.variant is Variant.RR and g.r == 2:
        anti = _antiparallel_supports(elems)
        if len(anti) > 1:
            return False
        if anti:
            need = set(anti[0])
            if any(not need <= set(e.support) for e in strongs):
                return False
    return True


def is_nested_def(s, g: GroupId) -> bool:
    """Nestedness straight from the definition: no antichain of two or more
    elements may join into a building set member.  Exponential; oracle use."""
    elems = _check_membership(s, g)

    def extend(start: int, chain: list[BuildingElement], acc: LatticeElement) -> bool:
        for i in range(start, len(elems)):
            e = elems[i]
            if any(comparable(e, f) for f in chain):
                continue
            j = join(acc, e.as_lattice())
            if chain and in_building(j, g):
                return False
            chain.append(e)
            if not extend(i + 1, chain, j):
                return False
            chain.pop()
        return True

    return extend(0, [], LatticeElement.bottom(g.r))


@dataclass(frozen=True)
class NestedSet:
    group: GroupId
    elements: tuple[BuildingElement, ...]

    def __len__(self):
        return len(self.elements)


class _NestedUniverse:
    """Precomputed pairwise data driving the backtracking enumerations."""

    def __init__(self, g: GroupId, elems: tuple[BuildingElement, ...]):
        self.group = g
        self.elems = elems
        nb = len(elems)
        self.dims = [e.dimension() for e in elems]
        self.ok = [0] * nb          # bit j: pair {i,j} passes _pair_nested
        self.below = [0] * nb       # bit j: elems[j] strictly inside elems[i]
        for i, j in itertools.combinations(range(nb), 2):
            if _pair_nested(elems[i], elems[j], g):
                self.ok[i] |= 1 << j
                self.ok[j] |= 1 << i
            if contains(elems[i], elems[j]):
                self.below[i] |= 1 << j
            elif contains(elems[j], elems[i]):
                self.below[j] |= 1 << i
        # data for the G(2,2,n) global rule
        self.rr2 = g.variant is Variant.RR and g.r == 2
        self.partner = [-1] * nb
        self.strong_mask = 0
        self.covers_anti = [0] * nb  # for weak i: strongs containing support(i)
        if self.rr2:
            by_support: dict[tuple[int, ...], list[int]] = {}
            for i, e in enumerate(elems):
                if e.is_strong:
                    self.strong_mask |= 1 << i
                else:
                    by_support.setdefault(e.support, []).append(i)
            for idxs in by_support.values():
                if len(idxs) == 2:
                    a, b = idxs
                    self.partner[a] = b
                    self.partner[b] = a
            for i, e in enumerate(elems):
                if not e.is_strong and self.partner[i] >= 0:
                    sup = set(e.support)
                    for jdx, f in enumerate(elems):
                        if f.is_strong and sup <= set(f.support):
                            self.covers_anti[i] |= 1 << jdx

    def nested_masks(self, veto=None):
        """All nested subsets as bitmasks, in lexicographic index order.

        veto(i, newmask), when given, may return True to cut the whole
        subtree rooted at extending the current set by element i; sound
        whenever the caller's reason to skip newmask persists under
        adding further elements.
        """
        nb = len(self.elems)

        def dfs(start: int, mask: int, anti: int):
            yield mask
            for i in range(start, nb):
                if mask & ~self.ok[i]:
                    continue
                new_anti = anti
                if self.rr2:
                    bit = 1 << i
                    if self.partner[i] >= 0 and mask >> self.partner[i] & 1:
                        # this addition completes an antiparallel pair
                        if anti or (mask & self.strong_mask & ~self.covers_anti[i]):
                            continue
                        new_anti = bit | 1 << self.partner[i]
                    if self.elems[i].is_strong and anti:
                        low = (anti & -anti).bit_length() - 1
                        if not self.covers_anti[low] >> i & 1:
                            continue
                newmask = mask | 1 << i
                if veto is not None and veto(i, newmask):
                    continue
                yield from dfs(i + 1, newmask, new_anti)

        yield from dfs(0, 0, 0)


def _universe(g: GroupId, elems=None) -> _NestedUniverse:
    if elems is None:
        elems = building_set(g)
    return _NestedUniverse(g, elems)


def enumerate_nested_sets(g: GroupId, max_building: int = 5000):
    """Yield every nested subset of the building set exactly once, the empty
    set first, in lexicographic order over the sorted building set."""
    elems = building_set(g)
    if len(elems) > max_building:
        raise GuardExceeded(
            f"building set of {g} has {len(elems)} elements (guard {max_building})")
    uni = _universe(g, elems)
    for mask in uni.nested_masks():
        members = tuple(elems[i] for i in range(len(elems)) if mask >> i & 1)
        yield NestedSet(g, members)


def d_value(h, b: BuildingElement, g: GroupId) -> int:
    """dim b minus the dimension of the join of h, for h strictly inside b."""
    helems = _check_membership(h, g)
    _check_membership([b], g)
    for x in helems:
        if x == b or not contains(b, x):
            raise ValueError(f"{x} is not strictly contained in {b}")
    return b.dimension() - join_all(helems, g.r).dimension()
