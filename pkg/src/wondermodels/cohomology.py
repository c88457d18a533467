"""Cohomology bases of wonderful models by direct enumeration.

The integer cohomology of the minimal wonderful model for G(r,p,n) has a
monomial basis indexed by pairs (nested set S, exponent function f) with
1 <= f(A) <= d(A) - 1 for every A in S, where d(A) is the dimension of A
minus the dimension of the join of the members of S strictly inside A.
Summing q^(total exponent) over all such pairs gives the Poincare
polynomial; this module computes it by brute force, independently of the
generating-series route in wondermodels.formulas.

The all-weak basis elements are also in bijection with weighted set
partitions (encode_partition / decode_partition below): the Hasse forest
of the nested set, vertices labeled by a level-then-minimum rule, turns
into one partition part per internal vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattice import (
    BuildingElement,
    GroupId,
    GuardExceeded,
    LatticeElement,
    NestedSet,
    _universe,
    building_set,
    contains,
    d_value,
    is_nested,
    join,
)
from .series import QPolynomial


class MalformedPartition(ValueError):
    """A weighted partition that does not decode to an admissible function."""


@dataclass(frozen=True)
class AdmissibleFunction:
    """Exponent function on a nested set: the index of one basis monomial.

    assignment maps each support element A to an exponent with
    1 <= f(A) <= d(A) - 1; elements outside the support carry 0 implicitly.
    """

    group: GroupId
    assignment: tuple[tuple[BuildingElement, int], ...]

    def __post_init__(self):
        elems = tuple(sorted(a for a, _ in self.assignment))
        if len(set(elems)) != len(elems):
            raise ValueError("repeated element in assignment")
        object.__setattr__(self, "assignment",
                           tuple((a, int(e)) for a, e in sorted(self.assignment)))
        if not is_nested(elems, self.group):
            raise ValueError("support is not nested")
        for a, e in self.assignment:
            inside = {c for c in elems if c != a and contains(a, c)}
            d = d_value(inside, a, self.group)
            if not 1 <= e <= d - 1:
                raise ValueError(f"exponent {e} for {a} outside 1..{d - 1}")

    @classmethod
    def from_dict(cls, group: GroupId, mapping) -> "AdmissibleFunction":
        return cls(group, tuple(mapping.items()))

    def as_dict(self) -> dict[BuildingElement, int]:
        return dict(self.assignment)

    def support(self) -> tuple[BuildingElement, ...]:
        return tuple(a for a, _ in self.assignment)

    def total(self) -> int:
        return sum(e for _, e in self.assignment)

    def to_obj(self) -> list[dict]:
        return [{"support": list(a.support),
                 "weights": list(a.weights),
                 "strong": a.is_strong,
                 "exponent": e} for a, e in self.assignment]


def _admissible_universe(g: GroupId, weak_only: bool, max_building: int):
    """Backtracking context over elements that can carry a positive exponent.

    Rank-1 elements always have d = 1, so no admissible support contains
    them; dropping them up front shrinks the search space a lot.
    """
    full = building_set(g)
    if len(full) > max_building:
        raise GuardExceeded(
            f"building set of {g} has {len(full)} elements (guard {max_building})")
    elems = tuple(e for e in full
                  if e.dimension() >= 2 and not (weak_only and e.is_strong))
    return _universe(g, elems)


class _DCalculator:
    """Memoized d-values over bitmask-coded subsets of a fixed element list."""

    def __init__(self, uni):
        self.uni = uni
        self.lat = [e.as_lattice() for e in uni.elems]
        self.joins: dict[int, LatticeElement] = {0: LatticeElement.bottom(uni.group.r)}

    def join_of(self, mask: int) -> LatticeElement:
        found = self.joins.get(mask)
        if found is None:
            low = mask & -mask
            found = join(self.join_of(mask ^ low), self.lat[low.bit_length() - 1])
            self.joins[mask] = found
        return found

    def dim_of(self, mask: int) -> int:
        dim = self.join_of(mask).dimension()
        if __debug__:
            # inside a nested set the maximal elements of any lower piece
            # span a direct sum; cheap independent cross-check of join()
            idxs = [i for i in range(mask.bit_length()) if mask >> i & 1]
            maximal = [i for i in idxs
                       if not any(self.uni.below[j] >> i & 1 for j in idxs)]
            assert dim == sum(self.uni.dims[i] for i in maximal), \
                f"join dimension {dim} vs additive {maximal}"
        return dim

    def d_of(self, i: int, mask: int) -> int:
        return self.uni.dims[i] - self.dim_of(mask & self.uni.below[i])


def _admissible_supports(g: GroupId, weak_only: bool = False,
                         max_building: int = 5000):
    """Yield (universe, dcalc, mask, d-list) for every nested set all of
    whose members admit a positive exponent (d >= 2 throughout)."""
    uni = _admissible_universe(g, weak_only, max_building)
    dc = _DCalculator(uni)

    def veto(i: int, newmask: int) -> bool:
        # d-values only shrink as the set grows, so a member stuck at
        # d <= 1 kills every extension as well
        m = newmask
        while m:
            low = m & -m
            if dc.d_of(low.bit_length() - 1, newmask) <= 1:
                return True
            m ^= low
        return False

    for mask in uni.nested_masks(veto):
        ds = []
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            ds.append((i, dc.d_of(i, mask)))
            m ^= low
        yield uni, mask, ds


def poincare_bruteforce(g: GroupId, max_building: int = 5000) -> QPolynomial:
    """Poincare polynomial by summing q^|f| over all admissible functions.

    Each support contributes the product over its members of
    q + q^2 + ... + q^(d-1).
    """
    total: dict[int, int] = {}
    for _, _, ds in _admissible_supports(g, max_building=max_building):
        poly = {0: 1}
        for _, d in ds:
            new: dict[int, int] = {}
            for e, c in poly.items():
                for k in range(1, d):
                    new[e + k] = new.get(e + k, 0) + c
            poly = new
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    return QPolynomial(total)


def enumerate_admissible(g: GroupId, weak_only: bool = False,
                         max_building: int = 5000):
    """Yield every admissible function, the zero function first.

    weak_only restricts supports to weighted blocks (the domain of the
    partition bijection); d-values of all-weak sets do not involve strong
    elements, so the restriction is sound.
    """
    for uni, _, ds in _admissible_supports(g, weak_only, max_building):
        elems = [uni.elems[i] for i, _ in ds]
        ranges = [range(1, d) for _, d in ds]
        for choice in itertools.product(*ranges):
            yield AdmissibleFunction(g, tuple(zip(elems, choice)))


def count_nested_sets(g: GroupId, max_building: int = 5000) -> int:
    uni = _universe(g)
    if len(uni.elems) > max_building:
        raise GuardExceeded(
            f"building set of {g} has {len(uni.elems)} elements (guard {max_building})")
    return sum(1 for _ in uni.nested_masks())


# ---------------------------------------------------------------------------
# weighted partition bijection for all-weak supports


@dataclass(frozen=True)
class Part:
    members: tuple[int, ...]
    weights: tuple[int, ...]  # aligned with members
    exponent: int

    def weight_of(self, m: int) -> int:
        return self.weights[self.members.index(m)]

    def text(self) -> str:
        items = [str(m) if a == 0 else f"{m}^{a}"
                 for m, a in zip(self.members, self.weights)]
        return "{" + ", ".join(items) + "}^" + str(self.exponent)


@dataclass(frozen=True)
class WeightedPartition:
    """Partition of {1..ground_size} into weighted parts with exponents.

    At most one part has exponent 0 (it then has >= 2 members, among them
    the top label); every other part has >= 3 members and an exponent
    between 1 and size - 2.
    """

    ground_size: int
    parts: tuple[Part, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts",
                           tuple(sorted(self.parts, key=lambda p: p.members)))

    def to_obj(self) -> dict:
        return {"ground_size": self.ground_size,
                "parts": [{"members": list(p.members), "weights": list(p.weights),
                           "exponent": p.exponent} for p in self.parts]}

    def text(self) -> str:
        return " ".join(p.text() for p in self.parts) if self.parts else "{}"


def encode_partition(f: AdmissibleFunction) -> WeightedPartition:
    """Map an all-weak admissible function to its weighted partition.

    Internal vertices of the Hasse forest of the support (plus an
    artificial top when the forest is disconnected) get labels above n,
    level by level, ties broken by smallest leaf; each vertex becomes a
    part holding its children, weighted by the twist between parent and
    child, and carrying the vertex's exponent.  The zero function maps to
    the empty partition of the empty set.
    """
    if any(a.is_strong for a, _ in f.assignment):
        raise ValueError("the partition bijection covers all-weak supports only")
    if not f.assignment:
        return WeightedPartition(0, ())
    g = f.group
    n, r = g.n, g.r
    elems = [a for a, _ in f.assignment]
    expo = f.as_dict()

    def parent_of(e):
        ups = [c for c in elems if c != e and contains(c, e)]
        return min(ups, key=lambda c: len(c.support)) if ups else None

    parent = {e: parent_of(e) for e in elems}
    kids = {e: [c for c in elems if parent[c] is e] for e in elems}
    leaf_owner = {}
    for i in range(1, n + 1):
        holders = [e for e in elems if i in e.support]
        if holders:
            leaf_owner[i] = min(holders, key=lambda c: len(c.support))

    level: dict[BuildingElement, int] = {}

    def level_of(e) -> int:
        if e not in level:
            level[e] = 1 + max((level_of(c) for c in kids[e]), default=0)
        return level[e]

    ordered = sorted(elems, key=lambda e: (level_of(e), e.support[0]))
    label = {e: n + 1 + i for i, e in enumerate(ordered)}

    roots = [e for e in elems if parent[e] is None]
    isolated = [i for i in range(1, n + 1) if i not in leaf_owner]
    connected = len(roots) == 1 and not isolated

    parts = []
    for e in elems:
        members: dict[int, int] = {}
        for i in e.support:
            if leaf_owner[i] is e:
                members[i] = e.weight_of(i)
        for c in kids[e]:
            # child weights are normalized with 0 on their smallest leaf,
            # so the twist is just the parent weight sitting there
            members[label[c]] = e.weight_of(c.support[0])
        ms = tuple(sorted(members))
        parts.append(Part(ms, tuple(members[m] for m in ms), expo[e]))
    if not connected:
        tops = sorted([label[e] for e in roots] + isolated)
        parts.append(Part(tuple(tops), (0,) * len(tops), 0))

    ground = n + len(parts) - 1
    covered = sorted(m for p in parts for m in p.members)
    assert covered == list(range(1, ground + 1)), "parts must partition the ground set"
    return WeightedPartition(ground, tuple(parts))


def decode_partition(p: WeightedPartition, g: GroupId) -> AdmissibleFunction:
    """Inverse of encode_partition; raises MalformedPartition when p is not
    in the image for the group g."""
    if not p.parts:
        if p.ground_size:
            raise MalformedPartition("no parts but a nonempty ground set")
        return AdmissibleFunction(g, ())
    m, k = p.ground_size, len(p.parts)
    n, r = g.n, g.r
    if m - k + 1 != n:
        raise MalformedPartition(f"ground size {m} with {k} parts encodes "
                                 f"{m - k + 1} points, group has {n}")
    covered = sorted(mm for part in p.parts for mm in part.members)
    if covered != list(range(1, m + 1)):
        raise MalformedPartition("parts do not partition the ground set")
    zero_parts = [part for part in p.parts if part.exponent == 0]
    if len(zero_parts) > 1:
        raise MalformedPartition("more than one exponent-0 part")
    for part in p.parts:
        if any(not 0 <= a < r for a in part.weights):
            raise MalformedPartition("weight outside 0..r-1")
        if part.exponent == 0:
            if len(part.members) < 2 or m not in part.members:
                raise MalformedPartition("bad exponent-0 part")
            if any(part.weights):
                raise MalformedPartition("exponent-0 part must be unweighted")
        elif not (len(part.members) >= 3
                  and 1 <= part.exponent <= len(part.members) - 2):
            raise MalformedPartition("part size or exponent out of range")

    # greedy relabeling: repeatedly give the next label to the ready part
    # (all members resolved) of smallest (level, least leaf); this replays
    # exactly the order encode_partition used
    part_of_label: dict[int, Part] = {}
    level: dict[Part, int] = {}
    least: dict[Part, int] = {}
    unassigned = list(p.parts)
    for lbl in range(n + 1, n + k + 1):
        ready = [part for part in unassigned
                 if all(mm <= n or mm in part_of_label for mm in part.members)]
        best = None
        for part in ready:
            lv = 1 + max((level[part_of_label[mm]] for mm in part.members if mm > n),
                         default=0)
            lf = min(mm if mm <= n else least[part_of_label[mm]]
                     for mm in part.members)
            if best is None or (lv, lf) < best[:2]:
                best = (lv, lf, part)
        if best is None:
            raise MalformedPartition("parts reference labels circularly")
        lv, lf, part = best
        level[part], least[part] = lv, lf
        part_of_label[lbl] = part
        unassigned.remove(part)

    top = part_of_label[n + k]
    if zero_parts and top is not zero_parts[0]:
        raise MalformedPartition("exponent-0 part is not the top vertex")

    support: dict[Part, dict[int, int]] = {}

    def resolve(part: Part) -> dict[int, int]:
        if part not in support:
            out: dict[int, int] = {}
            for mm, a in zip(part.members, part.weights):
                if mm <= n:
                    out[mm] = a % r
                else:
                    for x, w in resolve(part_of_label[mm]).items():
                        out[x] = (w + a) % r
            support[part] = out
        return support[part]

    mapping = {}
    for part in p.parts:
        if part.exponent:
            wmap = resolve(part)
            if wmap[min(wmap)] != 0:
                raise MalformedPartition("weights not normalized at the least leaf")
            mapping[BuildingElement.weak(tuple(wmap), wmap, r)] = part.exponent
    try:
        f = AdmissibleFunction.from_dict(g, mapping)
    except ValueError as err:
        raise MalformedPartition(str(err)) from None
    if encode_partition(f) != p:
        raise MalformedPartition("partition is not in canonical form")
    return f
