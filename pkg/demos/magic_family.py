"""Certificates for the magic-family monodromies, with the curve-level check at small n."""
import sys

from curvedrift.braid import catalog
from curvedrift.curves import apply_braid, intersection_number, magic_family_witness, spread_interval
from curvedrift.occupancy import max_disjoint_exponent
from curvedrift.zcover import certified_bound, fiber_invariants

beta = catalog("beta_magic")
print("beta =", beta, " spread", spread_interval(beta, 1))
print(f"{'n':>3} {'fiber':>9} {'m':>3} {'r':>5} {'occupancy':>9}  bound")
for n in range(4, 13):
    c = certified_bound("magic", n)
    fd = fiber_invariants("magic", n)
    print(f"{n:>3} {fd.label():>9} {c.m:>3} {c.power:>5} {max_disjoint_exponent(n):>9}  {c.bound}")

top = int(sys.argv[1]) if len(sys.argv) > 1 else 4
for n in range(4, top + 1):
    psi, alpha = magic_family_witness(n)
    M = n * n - 4 * n + 2
    row = [intersection_number(alpha, apply_braid(alpha, psi ** j)) for j in range(1, M + 2)]
    print(f"n={n}: psi = {psi}")
    print(f"      i(alpha, psi^j alpha), j = 1..{M + 1}: {row}")
