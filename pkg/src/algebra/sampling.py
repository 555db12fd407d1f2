"""Seeded random Elements for the property suites."""

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ..utils.constants import RANDOM_SEED
from .element import Element, Monomial
from .grading import Alphabet, Grading
from .scalars import I_UNIT, Scalar, param, scalar

_COEFFICIENTS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2))


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(RANDOM_SEED if seed is None else seed)


def random_scalar(rng: np.random.Generator, parameters: Sequence[str] = ()) -> Scalar:
    """Small Gaussian-rational coefficient, sometimes times a parameter."""
    value = scalar(_COEFFICIENTS[rng.integers(len(_COEFFICIENTS))])
    if rng.random() < 0.3:
        value = value * I_UNIT
    if parameters and rng.random() < 0.3:
        value = value * param(parameters[rng.integers(len(parameters))])
    return value


def random_element(alphabet: Alphabet, rng: np.random.Generator,
                   letters: Optional[Sequence[str]] = None, max_terms: int = 3,
                   max_length: int = 3, parameters: Sequence[str] = ()) -> Element:
    """Random linear combination of words over the chosen letters."""
    letters = list(letters or [g.name for g in alphabet.base_generators()])
    raw = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        length = int(rng.integers(0, max_length + 1))
        word = tuple(letters[int(i)] for i in rng.integers(len(letters), size=length))
        raw[Monomial(word)] = random_scalar(rng, parameters)
    return Element(alphabet, raw)


def random_homogeneous(alphabet: Alphabet, rng: np.random.Generator,
                       letters: Sequence[str], length: int, max_terms: int = 3) -> Element:
    """Random Element whose words all share the grading of the first drawn word."""
    letters = list(letters)
    first = tuple(letters[int(i)] for i in rng.integers(len(letters), size=length))
    target = _grading(alphabet, first)
    raw = {Monomial(first): random_scalar(rng)}
    attempts = 0
    while len(raw) < max_terms and attempts < 20 * max_terms:
        attempts += 1
        word = tuple(letters[int(i)] for i in rng.integers(len(letters), size=length))
        if _grading(alphabet, word) == target:
            raw[Monomial(word)] = random_scalar(rng)
    return Element(alphabet, raw)


def _grading(alphabet: Alphabet, word) -> Grading:
    total = Grading()
    for name in word:
        total = total + alphabet.grading(name)
    return total
