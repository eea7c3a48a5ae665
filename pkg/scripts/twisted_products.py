"""Tabulate (M_i x N_j)_TOP for M = N = CP2 over a range of resolution indices.

Each row is computed twice: through the L^H product formula and through the
phi-coordinate group-ring product, and the two are compared.

    python scripts/twisted_products.py --range 3
"""

import argparse

from hmbordism import Coords, HClass, canonical_top_representative, cp_generator, h_product, star
from hmbordism.bordism import omega_coordinates
from hmbordism.exact import format_rational as fmt


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--range", type=int, default=2, help="indices run over [-R, R]")
    args = parser.parse_args()

    cp2 = cp_generator(2)
    print(f"{'i':>3} {'j':>3} {'i*j':>5} {'<p1^2>':>10} {'<p2>':>10} {'omega8':>24}  routes")
    for i in range(-args.range, args.range + 1):
        for j in range(-args.range, args.range + 1):
            canon = canonical_top_representative(cp2, i, cp2, j)
            phi = h_product(HClass.lift(cp2, i), HClass.lift(cp2, j)).to(Coords.PSI)
            agree = phi.terms.get(star(i, j)) == canon
            w = ", ".join(fmt(x) for x in omega_coordinates(canon))
            print(
                f"{i:>3} {j:>3} {star(i, j):>5} {fmt(canon.numbers[(1, 1)]):>10} "
                f"{fmt(canon.numbers[(2,)]):>10} {'(' + w + ')':>24}  {'agree' if agree else 'DIFFER'}"
            )


if __name__ == "__main__":
    main()
