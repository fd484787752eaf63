#!/usr/bin/env python3
"""Tabulate classes of irreducible-polynomial varieties.

For each number of variables and degree, prints the class as a polynomial in
the affine-line class L, its Hodge realization in (u, v), and its Euler
characteristic (which is the variable count in degree 1 and 0 afterwards).

Usage: python scripts/irr_table.py [max_vars] [max_degree]
"""

import sys

from powerstruct import irreducible_class, irreducible_specialize


def main() -> None:
    max_vars = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    max_degree = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    for n_vars in range(1, max_vars + 1):
        print(f"# {n_vars} variable{'s' if n_vars > 1 else ''}")
        for degree in range(1, max_degree + 1):
            cls = irreducible_class(n_vars, degree)
            hodge = irreducible_specialize(n_vars, degree, "hodge_deligne")
            euler = irreducible_specialize(n_vars, degree, "euler")
            print(f"  degree {degree}: [Irr] = {cls}")
            print(f"            e(u,v) = {hodge}   chi = {euler}")
        print()


if __name__ == "__main__":
    main()
