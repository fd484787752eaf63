#!/usr/bin/env python3
"""Print the equivariant Euler-characteristic series of genus-2 moduli with
marked points, in the power-sum and Schur bases.

Usage: python scripts/genus2_series.py [order]
"""

import sys

from powerstruct import moduli_g2_series, p_to_schur
from powerstruct.symfunc import schur_expansion_str


def main() -> None:
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    series = moduli_g2_series(order)
    print(f"series to order {order}:")
    print(f"  {series}")
    print()
    print("coefficients in the Schur basis:")
    for n, coeff in enumerate(series.coeffs):
        if coeff == 0:
            print(f"  t^{n}: 0")
            continue
        print(f"  t^{n}: {schur_expansion_str(p_to_schur(coeff))}")


if __name__ == "__main__":
    main()
