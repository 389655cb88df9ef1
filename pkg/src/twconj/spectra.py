"""Set algebra on Reidemeister spectra and the product-spectrum checks."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .extnat import ExtNat, Spectrum, ext_product
from .finite_group import FiniteGroup, direct_product
from .hom_engine import DEFAULT_BUDGET, enumerate_automorphisms
from .product_matrix import power_product, to_matrix
from .reports import Report
from .twisted import reidemeister_spectrum


def spectrum_product(sets: Sequence) -> Spectrum:
    """``{a_1 ... a_n : a_i in A_i}``; the empty product is ``{1}``."""
    sets = [s if isinstance(s, Spectrum) else Spectrum(s) for s in sets]
    return Spectrum(ext_product(choice) for choice in itertools.product(*sets))


def nfold_power(A, n: int) -> Spectrum:
    if n < 1:
        raise ValueError("n must be at least 1")
    return spectrum_product([A] * n)


def nfold_union(A, n: int) -> Spectrum:
    """``A^(1) U ... U A^(n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    A = A if isinstance(A, Spectrum) else Spectrum(A)
    out, power = set(A), A
    for _ in range(n - 1):
        power = spectrum_product([power, A])
        out.update(power)
    return Spectrum(out)


class SpectrumExpr:
    """Expression over spectra; ``evaluate`` returns a :class:`Spectrum`."""

    def evaluate(self) -> Spectrum:
        raise NotImplementedError

    def __mul__(self, other: "SpectrumExpr") -> "SpectrumExpr":
        return Product((self, other))


@dataclass(frozen=True)
class Literal(SpectrumExpr):
    value: Spectrum

    def evaluate(self) -> Spectrum:
        return self.value if isinstance(self.value, Spectrum) else Spectrum(self.value)


@dataclass(frozen=True)
class Product(SpectrumExpr):
    terms: tuple

    def evaluate(self) -> Spectrum:
        return spectrum_product([t.evaluate() for t in self.terms])


@dataclass(frozen=True)
class NfoldUnion(SpectrumExpr):
    term: SpectrumExpr
    n: int

    def evaluate(self) -> Spectrum:
        return nfold_union(self.term.evaluate(), self.n)


def check_product_containment(factors: Sequence[FiniteGroup], budget: int = DEFAULT_BUDGET) -> Report:
    """Product of the factor spectra against the spectrum of the product.

    The right-hand side is always recomputed from all automorphisms of the
    product.  When every automorphism is diagonal the two sets must agree.
    """
    factors = list(factors)
    P = direct_product(factors)
    factor_spectra = [reidemeister_spectrum(F, budget=budget) for F in factors]
    predicted = spectrum_product(factor_spectra)
    auts = enumerate_automorphisms(P.group, budget=budget)
    actual = reidemeister_spectrum(P.group, auts)
    all_diagonal = all(not (to_matrix(P, f).support() & ~np.eye(P.n, dtype=bool)).any() for f in auts)
    contained = predicted.issubset(actual)
    equal = predicted == actual
    passed = contained and (equal or not all_diagonal)
    counterexample = None
    if not contained:
        counterexample = {"missing": Spectrum(set(predicted) - set(actual))}
    elif all_diagonal and not equal:
        counterexample = {"extra": Spectrum(set(actual) - set(predicted))}
    expected = math.prod(len(enumerate_automorphisms(F, budget=budget)) for F in factors)
    return Report("product-containment", passed, "not_applicable", counterexample,
                  computed_order=len(auts), expected_order=expected,
                  details={"factor_spectra": factor_spectra, "product_of_spectra": predicted,
                           "spectrum": actual, "contained": contained, "equal": equal,
                           "automorphisms_diagonal": all_diagonal})


def in_wreath_image(M) -> bool:
    """Whether a matrix of ``G^n`` has exactly one automorphism entry per row and column."""
    support = M.support()
    if M.product.factors[0].order == 1:
        return True
    if not ((support.sum(axis=0) == 1).all() and (support.sum(axis=1) == 1).all()):
        return False
    return all(M.entries[i][j].is_automorphism for i, j in zip(*support.nonzero()))


def check_wreath_spectrum_equality(G: FiniteGroup, n: int, budget: int = DEFAULT_BUDGET) -> Report:
    """Compare ``Aut(G^n)`` with the wreath product and the spectra on both sides.

    The hypothesis is ``|Aut(G^n)| = |Aut(G)|^n n!`` plus every automorphism
    having the permutation-of-automorphisms shape.  When it holds the spectrum
    of ``G^n`` must equal the union of the ``i``-fold products,
    ``i = 1..n``; otherwise only containment is checked.
    """
    P = power_product(G, n)
    base = reidemeister_spectrum(G, budget=budget)
    predicted = nfold_union(base, n)
    auts = enumerate_automorphisms(P.group, budget=budget)
    actual = reidemeister_spectrum(P.group, auts)
    if G.order == 1:
        expected = 1  # the wreath product collapses onto the identity
    else:
        expected = len(enumerate_automorphisms(G, budget=budget)) ** n * math.factorial(n)
    members = all(in_wreath_image(to_matrix(P, f)) for f in auts)
    hypothesis = len(auts) == expected and members
    contained = predicted.issubset(actual)
    equal = predicted == actual
    passed = contained and (equal or not hypothesis)
    counterexample = None
    if not passed:
        counterexample = {"predicted": predicted, "spectrum": actual}
    return Report("wreath-spectrum", passed, "satisfied" if hypothesis else "fails", counterexample,
                  computed_order=len(auts), expected_order=expected,
                  details={"base_spectrum": base, "union_of_powers": predicted, "spectrum": actual,
                           "contained": contained, "equal": equal})
