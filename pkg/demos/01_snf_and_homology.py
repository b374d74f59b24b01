"""Exact integer linear algebra and homology profiles.

Every computation downstream rests on Smith normal form with certificates:
unimodular U, V with U*M*V = S, S diagonal with a divisibility chain.
"""

from locweinstein import (FreeComplex, IntMatrix, elementary_complex,
                          homology, snf)

M = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
res = snf(M)
print("M =", M.to_rows())
print("S =", res.S.to_rows())
print("U =", res.U.to_rows())
print("V =", res.V.to_rows())
print("U*M*V == S:", res.U * M * res.V == res.S)
print("invariant factors:", res.invariant_factors())

# A Moore disk: Z --m--> Z concentrated in degrees -(d+1), -d.
C = elementary_complex(6, 0)
print("\nMoore disk m=6, d=0:", C.degrees, {k: m.to_rows() for k, m in
                                            C.differentials.items()})
print("homology:", homology(C).to_json_dict())

# A complex with free and torsion parts mixed together.
D = FreeComplex({-1: 2, 0: 2}, {-1: IntMatrix.from_rows([[2, 2], [2, -2]])})
print("\nmixed complex homology:", homology(D).to_json_dict())
