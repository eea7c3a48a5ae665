"""Print the L-polynomials L_1 .. L_n and the signature of each CP^2k.

    python scripts/l_genus_table.py 6
"""

import sys
import time

from hmbordism import cp_generator, l_polynomial, signature


def main(n=5):
    t0 = time.perf_counter()
    for k in range(1, n + 1):
        print(f"L_{k} = {l_polynomial(k)}")
    print()
    for k in range(0, n + 1):
        cp = cp_generator(2 * k)
        print(f"sig(CP{2 * k}) = {signature(cp)}")
    print(f"\n{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
