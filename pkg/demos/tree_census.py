"""Height census over every rooted labeling of every small tree.

For each tree shape on 3..6 vertices and each of its rooted labelings,
prints the height of the edge ideal next to the generator count.  Path
shapes rooted at a leaf or next to one reach the maximal height n - 1 and
are complete intersections; every other rooted tree stays at height
<= n - 2.
"""

from collections import Counter

from hankelideals import (
    enumerate_rooted_labelings,
    hankel_edge_ideal,
    height,
    tree_classes,
)


def shape_name(tree) -> str:
    degrees = sorted((tree.degree(v) for v in range(1, tree.n + 1)), reverse=True)
    if degrees[0] <= 2:
        return "path"
    if degrees[0] == tree.n - 1:
        return "star"
    return "deg " + "".join(map(str, degrees))


def main() -> None:
    for n in range(3, 7):
        print(f"\nn = {n}")
        for shape in tree_classes(n):
            rows = []
            for labeled in enumerate_rooted_labelings(shape):
                ideal = hankel_edge_ideal(labeled).ideal
                h = height(ideal)
                rows.append((h, len(ideal.generators)))
            tally = Counter(h for h, _ in rows)
            mu = rows[0][1]
            spread = ", ".join(f"height {h}: {k}x" for h, k in sorted(tally.items()))
            ci = sum(1 for h, m in rows if h == m)
            print(f"  {shape_name(shape):8}  {len(rows):3} rooted labelings, mu = {mu}:  "
                  f"{spread}  ({ci} complete intersections)")


if __name__ == "__main__":
    main()
