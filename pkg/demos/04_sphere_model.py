"""The twisted-complex model of the fiber-generated category of T*S^n.

Objects are sums of shifted fibers over Z[u], deg u = 1 - n.  The
zero-section is cone(u); its endomorphism cohomology recovers H^*(S^n).
A necessary geometricity condition: the degree-n class x must act as zero
on hom(zero_section, T) for any T in the image of tensoring with the
fiber, and it fails on the zero-section itself.
"""

from locweinstein import (SphereRing, elementary_complex, fiber,
                          from_zcomplex, hom_cohomology, x_action_test,
                          zero_section)

ring = SphereRing(3)
zs = zero_section(ring)
print("zero-section:", zs.to_json_dict())

prof = hom_cohomology(zs, zs, (-6, 6))
print("End(zero-section) on [-6, 6]:", prof.to_json_dict())

prof = hom_cohomology(fiber(ring), fiber(ring), (-6, 6))
print("End(fiber) on [-6, 6]:      ", prof.to_json_dict())

T = from_zcomplex(elementary_complex(5, 0), ring)
print("\nZ/5 Moore disk as twisted complex:", T.to_json_dict())
print("x-action test, zero-section:", x_action_test(zs, (-4, 4)))
print("x-action test, Moore disk:  ", x_action_test(T, (-4, 4)))
