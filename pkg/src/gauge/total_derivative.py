"""
Recognition of total D++ derivatives.

target = Dpp(W) is solved for W over the candidate words obtained by removing
one Dpp from a word of the target. The coefficients of the Dpp images are
rational, so the system is solved once over QQ with one right-hand side per
(parameter monomial, real/imaginary part) of the target.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import sympy

from ..algebra.element import Element, Monomial, apply_dpp
from ..algebra.scalars import I_UNIT, SCALAR_RING, Scalar, gaussian_parts, scalar
from ..exceptions import DepthError
from ..utils.constants import EXACTNESS_WORD_LENGTH

logger = logging.getLogger(__name__)


@dataclass
class Decomposition:
    """Outcome of a total-derivative solve; witness satisfies Dpp(witness) == target."""

    solvable: bool
    inconclusive: bool = False
    witness: Optional[Element] = None
    reason: Optional[str] = None


def _rational(value: Scalar) -> Fraction:
    if not value:
        return Fraction(0)
    if not value.is_ground:
        raise ValueError("derivative image with a parameter-dependent coefficient")
    real, imag = gaussian_parts(value.LC)
    if imag:
        raise ValueError("derivative image with a complex coefficient")
    return real


def candidate_words(target: Element) -> List[Element]:
    """Words W (one Dpp removed) whose derivative can reach a word of the target."""
    alphabet = target.alphabet
    seen = {}
    for monomial, _ in target:
        letters = monomial.letters
        for i, name in enumerate(letters):
            gen = alphabet[name]
            if not gen.is_derived:
                continue
            word = letters[:i] + (gen.derived_from,) + letters[i + 1:]
            candidate = Element(alphabet, {Monomial(word, monomial.traced): scalar(1)})
            if candidate.is_zero():
                continue
            key = candidate.monomials()[0]
            seen.setdefault(key, Element(alphabet, {key: scalar(1)}))
    return [seen[key] for key in sorted(seen, key=lambda m: m.sort_key())]


def decompose_total_derivative(target: Element,
                               max_length: int = EXACTNESS_WORD_LENGTH) -> Decomposition:
    """
    Decide whether target = Dpp(W) for W in the span of the candidate words.

    Args:
        target: Element to decompose
        max_length: longest word the search accepts

    Returns:
        Decomposition; inconclusive when a word exceeds max_length
    """
    alphabet = target.alphabet
    if target.is_zero():
        return Decomposition(True, witness=Element.zero(alphabet))
    longest = max(len(m.letters) for m in target.monomials())
    if longest > max_length:
        return Decomposition(False, inconclusive=True,
                             reason=f"word length {longest} exceeds bound {max_length}")

    candidates = candidate_words(target)
    images = []
    for candidate in candidates:
        try:
            images.append(apply_dpp(candidate))
        except DepthError as e:
            return Decomposition(False, inconclusive=True, reason=str(e))

    rows: List[Monomial] = []
    for element in [target] + images:
        for monomial in element.monomials():
            if monomial not in rows:
                rows.append(monomial)

    columns: List[Tuple[Tuple[int, ...], int]] = []
    for _, coeff in target:
        for exponents, value in coeff.items():
            real, imag = gaussian_parts(value)
            for part, amount in ((0, real), (1, imag)):
                if amount and (exponents, part) not in columns:
                    columns.append((exponents, part))

    n = len(candidates)
    matrix = []
    for monomial in rows:
        row = [_rational(image.coefficient(monomial)) for image in images]
        coeff = target.coefficient(monomial)
        for exponents, part in columns:
            value = coeff.get(exponents) if coeff else None
            parts = gaussian_parts(value) if value is not None else (Fraction(0), Fraction(0))
            row.append(parts[part])
        matrix.append([sympy.Rational(v.numerator, v.denominator) for v in row])

    reduced, pivots = sympy.Matrix(matrix).rref()
    if any(p >= n for p in pivots):
        logger.debug(f"No total-derivative decomposition over {n} candidate words")
        return Decomposition(False, reason="not a total Dpp derivative within the candidate span")

    witness = Element.zero(alphabet)
    for row_index, pivot in enumerate(pivots):
        coefficient = SCALAR_RING.zero
        for k, (exponents, part) in enumerate(columns):
            entry = reduced[row_index, n + k]
            if entry == 0:
                continue
            monomial_scalar = SCALAR_RING.from_dict({exponents: 1})
            amount = scalar(Fraction(int(entry.p), int(entry.q)))
            coefficient += amount * monomial_scalar * (I_UNIT if part else 1)
        witness = witness + candidates[pivot].scale(coefficient)

    if apply_dpp(witness) != target:
        return Decomposition(False, reason="candidate solution does not reproduce the target")
    return Decomposition(True, witness=witness)
