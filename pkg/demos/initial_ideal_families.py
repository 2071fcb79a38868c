"""Closed-form initial ideals of the three path-labeling families.

The standard path L_n has initial ideal generated by consecutive squares.
Rooting the path one or two steps in from the end (the T1 and T2 labelings)
adds a short list of extra leading monomials; the closed forms are compared
against the computed reduced Groebner bases for a range of n.
"""

from hankelideals import hankel_edge_ideal, initial_ideal, path_graph, t1_path, t2_path
from hankelideals.hankel import expected_t1_initial, expected_t2_initial


def show(label, graph, expected=None):
    got = initial_ideal(hankel_edge_ideal(graph).ideal)
    verdict = ""
    if expected is not None:
        verdict = "  matches closed form" if got == expected else "  MISMATCH"
    print(f"  {label:7} {got}{verdict}")


def main() -> None:
    print("standard path L_n:")
    for n in range(2, 9):
        show(f"L_{n}", path_graph(n))

    print("\npath rooted next to a leaf (T1):")
    for n in range(3, 9):
        show(f"T1({n})", t1_path(n), expected_t1_initial(n))

    print("\npath rooted two steps in (T2):")
    for n in range(4, 9):
        show(f"T2({n})", t2_path(n), expected_t2_initial(n))


if __name__ == "__main__":
    main()
