"""Monomial bases and dense homogeneous forms.

Monomials are exponent tuples in variables x_1 > ... > x_n, listed in
lex-descending order; a form of degree d is its coefficient vector in that
basis.
"""

from __future__ import annotations

from functools import cache
from typing import Sequence

import numpy as np

from aci_betti.models import DenseForm

Monomial = tuple[int, ...]


@cache
def monomials(n: int, degree: int) -> tuple[Monomial, ...]:
    """All degree-``degree`` monomials in n variables, lex-largest first."""
    if degree < 0:
        return ()
    if n == 1:
        return ((degree,),)
    out: list[Monomial] = []
    for first in range(degree, -1, -1):
        out.extend((first, *rest) for rest in monomials(n - 1, degree - first))
    return tuple(out)


@cache
def monomial_index(n: int, degree: int) -> dict[Monomial, int]:
    return {u: k for k, u in enumerate(monomials(n, degree))}


@cache
def product_index(n: int, a: int, b: int) -> np.ndarray:
    """Entry [r, k]: index in degree a+b of monomials(n, a)[r] * monomials(n, b)[k]."""
    target = monomial_index(n, a + b)
    left, right = monomials(n, a), monomials(n, b)
    table = np.empty((len(left), len(right)), dtype=np.intp)
    for r, u in enumerate(left):
        for k, v in enumerate(right):
            table[r, k] = target[tuple(x + y for x, y in zip(u, v))]
    return table


def dimension(n: int, degree: int) -> int:
    return len(monomials(n, degree))


def multiplication_matrix(form: DenseForm, degree: int) -> np.ndarray:
    """Rows: form times each monomial of degree ``degree - form.degree``, in the degree basis."""
    shift = degree - form.degree
    out = np.zeros((dimension(form.n, shift), dimension(form.n, degree)), dtype=np.int64)
    if shift < 0:
        return out
    index = product_index(form.n, shift, form.degree)
    out[np.arange(index.shape[0])[:, None], index] = form.coeffs[None, :]
    return out


def macaulay_matrix(forms: Sequence[DenseForm], degree: int, n: int) -> np.ndarray:
    """Rows span the degree-``degree`` piece of the ideal the forms generate."""
    blocks = [multiplication_matrix(f, degree) for f in forms if f.degree <= degree]
    if not blocks:
        return np.zeros((0, dimension(n, degree)), dtype=np.int64)
    return np.vstack(blocks)


def random_form(n: int, degree: int, rng: np.random.Generator, prime: int) -> DenseForm:
    coeffs = rng.integers(0, prime, size=dimension(n, degree), dtype=np.int64)
    return DenseForm(n=n, degree=degree, coeffs=coeffs, prime=prime)


def form_from_terms(n: int, degree: int, terms: dict[Monomial, int], prime: int) -> DenseForm:
    """Build a form from explicit monomial coefficients (used for hand-made examples)."""
    coeffs = np.zeros(dimension(n, degree), dtype=np.int64)
    index = monomial_index(n, degree)
    for u, c in terms.items():
        coeffs[index[u]] = c % prime
    return DenseForm(n=n, degree=degree, coeffs=coeffs, prime=prime)
