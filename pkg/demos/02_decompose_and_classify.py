"""Elementary decomposition and prime-localized classification.

Every bounded free complex over Z splits into elementary pieces: free
generators, torsion blocks Z --m--> Z, and acyclic blocks (m = 1).  The
primes dividing the torsion blocks decide which localization of the
ambient category a disk collection carves out.
"""

from locweinstein import (FreeComplex, IntMatrix, PrimeSet, classify_disks,
                          elementary_complex, elementary_decomposition,
                          field_homology, localized_homology, prime_content,
                          verify_certificate)

C = FreeComplex({0: 2, 1: 2}, {0: IntMatrix.from_rows([[2, 0], [0, 3]])})
dec = elementary_decomposition(C)
print("summands:", [s.to_json_dict() for s in dec.summands])
print("certificate checks:", verify_certificate(C, dec))
print("prime content:", prime_content(dec).to_json_list())

# Classification: torsion disks localize, free homology trivializes,
# acyclic disks change nothing.
print("\n[Z/6 disk]        ->", classify_disks([elementary_complex(6, 0)]))
print("[acyclic disk]    ->", classify_disks([elementary_complex(1, 0)]))
print("[free disk]       ->", classify_disks([FreeComplex({0: 1})]))

# Localization strips P-primary torsion; field coefficients see the rest.
D = elementary_complex(12, 0)
print("\nH(Z/12 disk)         :", localized_homology(D, PrimeSet()).to_json_dict())
print("H(Z/12 disk)[1/2]    :", localized_homology(D, PrimeSet([2])).to_json_dict())
print("H(Z/12 disk; F_3)    :", field_homology(D, 3))
print("H(Z/12 disk; F_7)    :", field_homology(D, 7))
