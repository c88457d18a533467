"""The weighted-partition coding of all-weak basis monomials, step by step.

Basis monomials whose support consists of weighted blocks alone are in
bijection with weighted partitions: every internal vertex of the Hasse
forest of the nested set becomes an extra ground-set point, and every
block becomes a part listing its children with the connecting weights,
tagged by the block's exponent.  This script encodes a few monomials by
hand, decodes them back, and shows what the decoder rejects.

Run:  python3 demos/partition_walkthrough.py
"""

from wondermodels.cohomology import (
    AdmissibleFunction,
    MalformedPartition,
    Part,
    WeightedPartition,
    decode_partition,
    encode_partition,
    enumerate_admissible,
)
from wondermodels.lattice import BuildingElement, GroupId


def weak(coords, weights, r):
    return BuildingElement.weak(coords, weights, r)


def roundtrip(f):
    wp = encode_partition(f)
    ground = f"{{1..{wp.ground_size}}}" if wp.ground_size else "the empty set"
    print(f"    partition of {ground}:  {wp.text()}")
    back = decode_partition(wp, f.group)
    print(f"    decode(encode(f)) == f:  {back == f}")
    return wp


def main():
    g = GroupId(4, 1, 13)
    blocks = {
        weak((4, 5, 12), {4: 0, 5: 3, 12: 2}, 4): 1,
        weak((2, 4, 5, 8, 11, 12), {2: 0, 4: 2, 5: 1, 8: 0, 11: 0, 12: 0}, 4): 2,
        weak((7, 9, 10), {7: 0, 9: 3, 10: 2}, 4): 1,
        weak((1, 3, 6, 7, 9, 10, 13),
             {1: 0, 3: 0, 6: 0, 7: 0, 9: 3, 10: 2, 13: 0}, 4): 3,
    }
    f = AdmissibleFunction.from_dict(g, blocks)
    print(f"A basis monomial for {g}, four nested blocks with exponents:")
    for a, e in f.assignment:
        print(f"    {a}  ^ {e}")
    print("encodes as")
    roundtrip(f)
    print("Labels 14..17 name the blocks, level by level, ties broken by")
    print("least leaf; 14 and 15 are the minimal blocks, and the part")
    print("{16, 17}^0 is the artificial top tying the two trees together.")

    print()
    print("The zero function carries an empty support:")
    roundtrip(AdmissibleFunction(g, ()))

    print()
    g2 = GroupId(2, 1, 5)
    print(f"Leaves outside every block still join the top part ({g2},")
    print("one block on {1,2,3}):")
    roundtrip(AdmissibleFunction.from_dict(
        g2, {weak((1, 2, 3), (0, 0, 0), 2): 1}))

    print()
    g3 = GroupId(2, 1, 4)
    fs = list(enumerate_admissible(g3, weak_only=True))
    codes = {encode_partition(f) for f in fs}
    back = all(decode_partition(encode_partition(f), g3) == f for f in fs)
    print(f"All {len(fs)} all-weak monomials for {g3} encode to "
          f"{len(codes)} distinct partitions; every one decodes back: {back}")

    print()
    print(f"What the decoder rejects (for {g3}):")
    bad = [
        WeightedPartition(5, (Part((1, 2), (0, 0), 1),
                              Part((3, 4, 5), (0, 0, 0), 0))),
        WeightedPartition(5, (Part((1, 2, 3), (0, 1, 3), 1),
                              Part((4, 5), (0, 0), 0))),
        WeightedPartition(4, (Part((1, 2, 3, 4), (0, 0, 0, 0), 0),)),
    ]
    for p in bad:
        try:
            decode_partition(p, g3)
            print(f"    {p.text()}  ACCEPTED, should not happen")
        except MalformedPartition as err:
            print(f"    {p.text()}  rejected: {err}")


if __name__ == "__main__":
    main()
