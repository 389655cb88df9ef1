# Twisted conjugacy classes of small groups
#
# Two elements x, y of G are phi-conjugate when x = g y phi(g)^-1 for some g.
# With phi the identity this is ordinary conjugacy.  The number of classes is
# the Reidemeister number R(phi).

from twconj import (
    cyclic,
    enumerate_automorphisms,
    identity_hom,
    quaternion8,
    reidemeister_partition,
    reidemeister_spectrum,
    symmetric,
    twisted_stabilizer,
)
from twconj.hom_engine import hom_from_generator_images

# ## Z5 and multiplication by 2
#
# On an abelian group the classes are cosets of the image of (phi - id).
# For x -> 2x on Z5 that map is x -> x, which is onto, so there is one class.

Z5 = cyclic(5)
double = hom_from_generator_images(Z5, Z5, [2])
print("R(x -> 2x on Z5) =", reidemeister_partition(Z5, double).number)
print("R(id on Z5)      =", reidemeister_partition(Z5, identity_hom(Z5)).number)

# ## S3 with the identity
#
# Here the classes are the usual conjugacy classes.

S3 = symmetric(3)
part = reidemeister_partition(S3, identity_hom(S3))
for cls in part.classes:
    print("class", [S3.name(x) for x in cls])

# The size of each class times the order of its twisted stabilizer is |G|.
for cls in part.classes:
    stab = twisted_stabilizer(S3, identity_hom(S3), cls[0])
    print(S3.name(cls[0]), len(cls), "x", stab.order, "=", len(cls) * stab.order)

# ## Spectra
#
# The spectrum collects R over all automorphisms.

for G in (cyclic(3), cyclic(12), S3, quaternion8()):
    print(G.label, "has", len(enumerate_automorphisms(G)), "automorphisms, spectrum", reidemeister_spectrum(G))
