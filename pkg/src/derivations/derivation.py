"""
Graded derivations on the free algebra.

A Derivation is fixed by its images on generators and extended to words by
the graded Leibniz rule with sign (-1)^{e(d) e(prefix)}. Rigid derivations
(commutes_with_D) pass through formal D++ images: d(Dpp(X)) = Dpp(d(X)).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Union

from ..algebra.element import Element, Monomial, apply_dpp, grading_of
from ..algebra.grading import Alphabet, Grading
from ..algebra.scalars import ZERO, Scalar, ScalarLike, scalar
from ..algebra.element import substitute as substitute_element
from ..exceptions import ConfigurationError, GradingError, UndefinedActionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Derivation:
    """Named graded operator defined by its action on generators.

    Attributes:
        name: identifier used in expressions and reports
        alphabet: generator table the rules are written over
        grading: parity, ghost shift and harmonic-charge shift
        rules: generator name -> image Element
        commutes_with_D: derived generators are handled through D++
    """

    name: str
    alphabet: Alphabet
    grading: Grading
    rules: Mapping[str, Element] = field(default_factory=dict)
    commutes_with_D: bool = True

    def __post_init__(self):
        for generator, image in self.rules.items():
            if generator not in self.alphabet:
                raise ConfigurationError(
                    f"derivation '{self.name}' has a rule for unknown generator '{generator}'")
            if not self.alphabet.is_compatible(image.alphabet):
                raise ConfigurationError(f"rule {self.name}({generator}) uses a foreign alphabet")
            if any(m.traced for m in image.monomials()):
                raise ConfigurationError(f"rule {self.name}({generator}) contains a trace")

    @property
    def parity(self) -> int:
        return self.grading.parity

    def validate(self, waive_hcharge: bool = False) -> 'Derivation':
        """Check every nonzero image has grading(generator) + grading(d)."""
        offending = []
        for generator, image in self.rules.items():
            if image.is_zero():
                continue
            expected = self.alphabet.grading(generator) + self.grading
            try:
                actual = grading_of(image, waive_hcharge)
            except GradingError as e:
                offending.extend(e.offending)
                continue
            same = (actual.without_hcharge() == expected.without_hcharge()) if waive_hcharge \
                else actual == expected
            if not same:
                offending.append((f"{self.name}({generator})", f"{actual} expected {expected}"))
        if offending:
            raise GradingError(f"rule table for '{self.name}' is not homogeneous", offending)
        return self

    def image(self, generator: str) -> Element:
        """Image of a single generator, resolving derived generators through D++."""
        if generator in self.rules:
            return self.rules[generator]
        gen = self.alphabet[generator]
        if gen.is_derived and self.commutes_with_D:
            return apply_dpp(self.image(gen.derived_from))
        raise UndefinedActionError(self.name, generator)

    def apply(self, e: Element) -> Element:
        """Graded Leibniz extension of the generator rules."""
        if not self.alphabet.is_compatible(e.alphabet):
            raise ConfigurationError(f"derivation '{self.name}' applied over a foreign alphabet")
        alphabet = self.alphabet
        raw: Dict[Monomial, Scalar] = {}
        for monomial, coeff in e:
            letters = monomial.letters
            prefix_parity = 0
            for i, name in enumerate(letters):
                image = self.image(name)
                sign = -1 if self.parity and prefix_parity else 1
                for image_monomial, image_coeff in image:
                    key = Monomial(letters[:i] + image_monomial.letters + letters[i + 1:],
                                   monomial.traced)
                    raw[key] = raw.get(key, ZERO) + coeff * image_coeff * sign
                prefix_parity ^= alphabet.parity(name)
        return Element(alphabet, raw)

    __call__ = apply

    def specialize(self, assignments: Mapping[str, ScalarLike]) -> 'Derivation':
        """Same derivation with formal parameters evaluated in every image."""
        rules = {g: substitute_element(image, assignments) for g, image in self.rules.items()}
        return Derivation(self.name, self.alphabet, self.grading, rules, self.commutes_with_D)

    def with_rules(self, rules: Mapping[str, Element], name: Optional[str] = None) -> 'Derivation':
        merged = dict(self.rules)
        merged.update(rules)
        return Derivation(name or self.name, self.alphabet, self.grading, merged,
                          self.commutes_with_D)


def apply(d: Derivation, e: Element) -> Element:
    return d.apply(e)


def commutator_of_derivations(d1: Derivation, d2: Derivation,
                              target: Union[str, Element]) -> Element:
    """[d1, d2] = d1 d2 - (-1)^{e(d1) e(d2)} d2 d1 evaluated on a generator or Element."""
    if isinstance(target, str):
        target = Element.generator(d1.alphabet, target)
    sign = -1 if d1.parity and d2.parity else 1
    return d1.apply(d2.apply(target)) - d2.apply(d1.apply(target)).scale(sign)


def ghost_number_derivation(alphabet: Alphabet, scale: ScalarLike = 2,
                            name: str = 'dFP') -> Derivation:
    """Multiplication by scale * (ghost number), as rules on base generators."""
    factor = scalar(scale)
    rules = {}
    for gen in alphabet.base_generators():
        rules[gen.name] = Element.generator(alphabet, gen.name).scale(factor * gen.grading.ghost)
    return Derivation(name, alphabet, Grading(0, 0, 0), rules, True)


def formal_dpp(alphabet: Alphabet) -> Derivation:
    """D++ as a derivation object: g -> Dpp(g), even, harmonic charge +2."""
    rules = {}
    for gen in alphabet:
        if gen.depth < alphabet.depth_bound:
            rules[gen.name] = Element.generator(alphabet, alphabet.derived(gen.name).name)
    return Derivation('Dpp', alphabet, Grading(0, 0, 2), rules, False)
