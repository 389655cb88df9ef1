# Spectra of direct products
#
# The spectrum of a product always contains the products of the factor
# spectra.  When the factors are centreless and directly indecomposable every
# automorphism permutes isomorphic factors, which pins the spectrum down
# exactly.  For abelian factors extra automorphisms appear and the spectrum
# can be larger.

from twconj import (
    check_product_containment,
    check_wreath_spectrum_equality,
    cyclic,
    johnson_decomposition_check,
    spectrum_of_centreless_product,
    symmetric,
)
from twconj.zdirectsum import FinSuppIntSeq, phi_example, solve_phi_minus_id

S3 = symmetric(3)

report = johnson_decomposition_check([S3], [2])
print("|Aut(S3 x S3)| =", report.computed_order, "predicted", report.expected_order)
print("spectrum of S3 x S3 from the factor:", spectrum_of_centreless_product([S3], [2]))

wreath = check_wreath_spectrum_equality(S3, 2)
print("direct computation:", wreath.details["spectrum"])

# Z2 x Z2 has the automorphism group GL(2, 2), larger than the wreath product.
small = check_product_containment([cyclic(2), cyclic(2)])
print("product of spectra", small.details["product_of_spectra"], "inside", small.details["spectrum"])

# ## An infinite example
#
# On the direct sum of countably many copies of Z the map below fixes e_1,
# yet phi - id is onto, so every element is phi-conjugate to 0.

e = FinSuppIntSeq.unit
print("phi(e_1) =", phi_example(e(1)).to_json())
target = e(2) + e(5) - e(6)
pre = solve_phi_minus_id(target)
print("preimage of", target.to_json(), "under phi - id:", pre.to_json())
