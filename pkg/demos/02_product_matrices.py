# Endomorphisms of direct products as matrices
#
# An endomorphism of G1 x ... x Gn is a square matrix of homomorphisms
# Gj -> Gi whose entries in each row have commuting images.  Composition of
# endomorphisms is matrix multiplication with the pointwise product in place of
# addition.

import itertools

from twconj import (
    compose,
    cyclic,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    from_matrix,
    identity_hom,
    matrix_multiply,
    permuted_diag_endo,
    permuted_diag_reidemeister,
    reidemeister_number,
    symmetric,
    to_matrix,
)
from twconj.product_matrix import block_endo, cycle_compositions, product_of, sum_formula_reidemeister

P = product_of((symmetric(3), cyclic(2)))
endos = enumerate_endomorphisms(P.group)
print("End(S3 x Z2) has", len(endos), "elements")

f, g = endos[7], endos[23]
print(to_matrix(P, f), "*", to_matrix(P, g))
print("matrix of the composite equals the matrix product:",
      to_matrix(P, compose(f, g)) == matrix_multiply(to_matrix(P, f), to_matrix(P, g)))

# ## Diagonal maps after a coordinate permutation
#
# For (g_i) -> (phi_i(g_{sigma^-1(i)})) on G^n the Reidemeister number is a
# product over the cycles of sigma^-1, one composite per cycle.

S3 = symmetric(3)
auts = enumerate_automorphisms(S3)
homs = [auts[1], auts[4], auts[2]]
sigma = (1, 2, 0)
for cyc, composite in cycle_compositions(homs, sigma):
    print("cycle", cyc, "composite R =", reidemeister_number(S3, composite))
phi = permuted_diag_endo(homs, sigma)
print("formula", permuted_diag_reidemeister(homs, sigma), "direct", reidemeister_number(phi.domain, phi))

# ## Block upper-triangular maps on H x K
#
# (h, k) -> (alpha(h) beta(k), delta(k)); the number of classes is a sum over
# the delta-classes of orbit counts on the alpha-classes.

Z3 = cyclic(3)
for alpha, beta, delta in itertools.islice(
        ((a, b, d) for a in enumerate_endomorphisms(Z3) for b in enumerate_endomorphisms(Z3)
         for d in enumerate_endomorphisms(Z3)), 0, 27, 5):
    phi = block_endo(alpha, beta, delta)
    print(alpha.map.tolist(), beta.map.tolist(), delta.map.tolist(),
          "sum", sum_formula_reidemeister(alpha, beta, delta), "direct", reidemeister_number(phi.domain, phi))

print("identity round trip:", from_matrix(to_matrix(P, identity_hom(P.group))) == identity_hom(P.group))
