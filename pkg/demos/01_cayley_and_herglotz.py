"""Cayley transforms and function families from atomic measures.

The toolkit works on two domains: the open unit disk and the open upper
half-plane, glued together by the Cayley transform T(z) = i(1+z)/(1-z).
Herglotz functions (positive real part on the disk) and Pick functions
(self-maps of the half-plane) are evaluated from finite atomic measures.
"""

import math

from loewnerkit import (
    AtomicMeasure,
    PickRepresentation,
    cayley_to_disk,
    cayley_to_halfplane,
    herglotz_eval,
    pick_atom,
    pick_eval,
)

print("== Cayley transform ==")
for z in (0.0, 0.5, 0.3 + 0.4j):
    w = cayley_to_halfplane(z)
    print(f"T({z}) = {w},  T^-1(T(z)) = {cayley_to_disk(w)}")

print()
print("== Herglotz functions ==")
# The Dirac measure at -1 gives (1-z)/(1+z), the Koebe driver.
dirac = AtomicMeasure.dirac(-1.0)
for z in (0.0, 0.5, 0.2 - 0.3j):
    print(f"phi_dirac({z}) = {herglotz_eval(dirac, z)}")

# A mixture of circle atoms is again Herglotz: positive real part, phi(0) = 1.
mixture = AtomicMeasure(((1.0, 0.25), (-1.0, 0.25), (1j, 0.5)))
print(f"mixture at 0: {herglotz_eval(mixture, 0.0)} (always 1)")
print(f"mixture at 0.4+0.3j: {herglotz_eval(mixture, 0.4 + 0.3j)} (Re >= 0)")

print()
print("== Pick functions from Nevanlinna data ==")
# (b, c, mu) realizes b + c z + (1/pi) sum w (1/(t - z) - t/(1 + t^2)).
identity = PickRepresentation(0.0, 1.0, AtomicMeasure(()))
single_pole = PickRepresentation(0.0, 0.0, AtomicMeasure.dirac(0.0, math.pi))
both = PickRepresentation(0.0, 1.0, AtomicMeasure.dirac(0.0, math.pi))
for name, rep in (("z", identity), ("-1/z", single_pole), ("z - 1/z", both)):
    print(f"phi(i) for {name:8s}: {pick_eval(rep, 1j)}")
print(f"elementary pick atom 1/(0 - z) at i: {pick_atom(0.0, 1j)}")
