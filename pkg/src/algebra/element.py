"""
Elements of the free graded algebra.

An Element is a finite map from Monomials (a word of generator names, possibly
wrapped in the graded cyclic trace) to exact Scalars. Words are never
reordered; the only normalization is coefficient collection and trace rotation.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from ..exceptions import ConfigurationError, GradingError
from .grading import Alphabet, Grading, ZERO_GRADING
from .scalars import (
    ONE, ZERO, Scalar, ScalarLike, conjugate_scalar, format_scalar,
    is_monomial_scalar, scalar, substitute as substitute_scalar,
)

logger = logging.getLogger(__name__)


class Monomial(NamedTuple):
    """A word of generator names; traced words live inside tr(...)."""

    letters: Tuple[str, ...]
    traced: bool = False

    def sort_key(self):
        return (self.traced, len(self.letters), self.letters)


EMPTY = Monomial(())


def word_parity(alphabet: Alphabet, letters: Iterable[str]) -> int:
    return sum(alphabet.parity(name) for name in letters) % 2


def word_grading(alphabet: Alphabet, letters: Iterable[str]) -> Grading:
    total = ZERO_GRADING
    for name in letters:
        total = total + alphabet.grading(name)
    return total


def canonical_trace(alphabet: Alphabet, letters: Tuple[str, ...]) -> Tuple[Tuple[str, ...], int]:
    """Minimal cyclic rotation of a traced word and its sign.

    tr(A B) = (-1)^{e(A) e(B)} tr(B A). Returns sign 0 when two rotations reach
    the minimal word with opposite signs (the trace vanishes, e.g. tr(c c) for
    odd c).
    """
    if not letters:
        return letters, 1
    best: Optional[Tuple[str, ...]] = None
    best_sign = 1
    conflict = False
    word, sign = letters, 1
    total_parity = word_parity(alphabet, letters)
    for _ in range(len(letters)):
        if best is None or word < best:
            best, best_sign, conflict = word, sign, False
        elif word == best and sign != best_sign:
            conflict = True
        head_parity = alphabet.parity(word[0])
        # moving the head letter to the back
        if head_parity and (total_parity - head_parity) % 2:
            sign = -sign
        word = word[1:] + word[:1]
    return best, (0 if conflict else best_sign)


def _collect(alphabet: Alphabet, raw: Iterable[Tuple[Monomial, Scalar]]) -> Dict[Monomial, Scalar]:
    terms: Dict[Monomial, Scalar] = {}
    for monomial, coeff in raw:
        if not coeff:
            continue
        if monomial.traced:
            letters, sign = canonical_trace(alphabet, monomial.letters)
            if sign == 0:
                continue
            monomial = Monomial(letters, True)
            coeff = coeff if sign > 0 else -coeff
        total = terms.get(monomial, ZERO) + coeff
        if total:
            terms[monomial] = total
        else:
            terms.pop(monomial, None)
    return terms


class Element:
    """Immutable linear combination of words over an alphabet."""

    __slots__ = ('alphabet', '_terms', '_key')

    def __init__(self, alphabet: Alphabet, terms: Optional[Mapping[Monomial, Scalar]] = None):
        raw = terms.items() if terms else ()
        for monomial, _ in raw:
            for name in monomial.letters:
                if name not in alphabet:
                    raise ConfigurationError(f"generator '{name}' not in alphabet {alphabet.name}")
        object.__setattr__(self, 'alphabet', alphabet)
        object.__setattr__(self, '_terms', _collect(alphabet, raw))
        object.__setattr__(self, '_key', None)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def __reduce__(self):
        return (Element, (self.alphabet, self._terms))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> 'Element':
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> 'Element':
        return cls(alphabet, {EMPTY: ONE})

    @classmethod
    def constant(cls, alphabet: Alphabet, value: ScalarLike) -> 'Element':
        return cls(alphabet, {EMPTY: scalar(value)})

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str) -> 'Element':
        return cls(alphabet, {Monomial((alphabet[name].name,)): ONE})

    @classmethod
    def word(cls, alphabet: Alphabet, *names: str, coeff: ScalarLike = 1,
             traced: bool = False) -> 'Element':
        return cls(alphabet, {Monomial(tuple(names), traced): scalar(coeff)})

    # -- access -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self._terms.get(monomial, ZERO)

    def generators(self) -> List[str]:
        seen = []
        for monomial in self.monomials():
            for name in monomial.letters:
                if name not in seen:
                    seen.append(name)
        return seen

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.items())

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: 'Element'):
        if not isinstance(other, Element):
            raise ConfigurationError(f"cannot combine Element with {type(other).__name__}")
        if not self.alphabet.is_compatible(other.alphabet):
            raise ConfigurationError(
                f"alphabet mismatch: {self.alphabet.name} vs {other.alphabet.name}")

    def __add__(self, other: 'Element') -> 'Element':
        self._check(other)
        return Element(self.alphabet, _merge(self._terms, other._terms, ONE))

    def __sub__(self, other: 'Element') -> 'Element':
        self._check(other)
        return Element(self.alphabet, _merge(self._terms, other._terms, -ONE))

    def __neg__(self) -> 'Element':
        return self.scale(-ONE)

    def scale(self, factor: ScalarLike) -> 'Element':
        factor = scalar(factor)
        return Element(self.alphabet, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- identity -----------------------------------------------------

    def _canonical_key(self):
        if self._key is None:
            key = tuple((m, format_scalar(c)) for m, c in self.items())
            object.__setattr__(self, '_key', key)
        return self._key

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        return self.alphabet.is_compatible(other.alphabet) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"


def _merge(left: Mapping[Monomial, Scalar], right: Mapping[Monomial, Scalar],
           factor: Scalar) -> Dict[Monomial, Scalar]:
    merged = dict(left)
    for monomial, coeff in right.items():
        merged[monomial] = merged.get(monomial, ZERO) + factor * coeff
    return merged


def _concatenate(left: Monomial, right: Monomial) -> Monomial:
    if left.traced and right.letters or right.traced and left.letters or left.traced and right.traced:
        raise ConfigurationError("traced words only multiply by scalars")
    return Monomial(left.letters + right.letters, left.traced or right.traced)


def multiply(a: Element, b: Element) -> Element:
    """Bilinear extension of word concatenation."""
    a._check(b)
    raw: Dict[Monomial, Scalar] = {}
    for left, lc in a._terms.items():
        for right, rc in b._terms.items():
            monomial = _concatenate(left, right)
            raw[monomial] = raw.get(monomial, ZERO) + lc * rc
    return Element(a.alphabet, raw)


def grading_of(e: Element, waive_hcharge: bool = False) -> Grading:
    """Common grading of every word of a nonzero Element.

    Args:
        e: Element to inspect
        waive_hcharge: compare only parity and ghost number

    Returns:
        Grading of the first word in canonical order

    Raises:
        GradingError: zero input, or words whose gradings differ
    """
    if e.is_zero():
        raise GradingError("grading of the zero element is undefined")
    gradings = [(m, word_grading(e.alphabet, m.letters)) for m in e.monomials()]
    reference = gradings[0][1]
    project = (lambda g: g.without_hcharge()) if waive_hcharge else (lambda g: g)
    if any(project(g) != project(reference) for _, g in gradings):
        raise GradingError(
            "inhomogeneous element",
            [(format_monomial(m), str(g)) for m, g in gradings],
        )
    return reference


def parity_of(e: Element) -> int:
    """Common Grassmann parity; zero counts as even."""
    if e.is_zero():
        return 0
    parities = {(m, word_parity(e.alphabet, m.letters)) for m in e.monomials()}
    values = {p for _, p in parities}
    if len(values) > 1:
        offending = sorted((format_monomial(m), f"parity {p}") for m, p in parities)
        raise GradingError("inhomogeneous parity", offending)
    return values.pop()


def graded_commutator(a: Element, b: Element) -> Element:
    """[A, B] = AB - (-1)^{e(A) e(B)} BA, with no 1/2."""
    a._check(b)
    sign = -1 if parity_of(a) and parity_of(b) else 1
    return multiply(a, b) - multiply(b, a).scale(sign)


def conjugate(e: Element) -> Element:
    """Order-reversing antiautomorphism through each generator's conj_image."""
    alphabet = e.alphabet
    raw: Dict[Monomial, Scalar] = {}
    for monomial, coeff in e._terms.items():
        letters = []
        for name in reversed(monomial.letters):
            image = alphabet[name].conj_image
            if image is None:
                raise ConfigurationError(f"generator '{name}' has no conj_image")
            letters.append(image)
        key = Monomial(tuple(letters), monomial.traced)
        raw[key] = raw.get(key, ZERO) + conjugate_scalar(coeff)
    return Element(alphabet, raw)


def trace(e: Element) -> Element:
    """Wrap every word in the graded cyclic trace."""
    raw: Dict[Monomial, Scalar] = {}
    for monomial, coeff in e._terms.items():
        if monomial.traced:
            raise ConfigurationError("nested trace")
        key = Monomial(monomial.letters, True)
        raw[key] = raw.get(key, ZERO) + coeff
    return Element(e.alphabet, raw)


def normal_form(e: Element) -> Element:
    return Element(e.alphabet, e._terms)


def substitute(e: Element, assignments: Mapping[str, ScalarLike]) -> Element:
    """Evaluate formal parameters in every coefficient."""
    return Element(e.alphabet, {m: substitute_scalar(c, assignments) for m, c in e._terms.items()})


def apply_dpp(e: Element) -> Element:
    """Formal D++: even derivation sending a generator g to Dpp(g)."""
    alphabet = e.alphabet
    raw: Dict[Monomial, Scalar] = {}
    for monomial, coeff in e._terms.items():
        letters = monomial.letters
        for i, name in enumerate(letters):
            derived = alphabet.derived(name).name
            key = Monomial(letters[:i] + (derived,) + letters[i + 1:], monomial.traced)
            raw[key] = raw.get(key, ZERO) + coeff
    return Element(alphabet, raw)


def format_monomial(monomial: Monomial) -> str:
    body = "*".join(monomial.letters) if monomial.letters else "1"
    return f"tr({body})" if monomial.traced else body


def _format_term(monomial: Monomial, coeff: Scalar) -> str:
    word = format_monomial(monomial)
    if monomial == EMPTY:
        text = format_scalar(coeff)
        return text if is_monomial_scalar(coeff) else f"({text})"
    if coeff == ONE:
        return word
    if coeff == -ONE:
        return f"-{word}"
    text = format_scalar(coeff)
    if not is_monomial_scalar(coeff):
        text = f"({text})"
    return f"{text}*{word}"


def format_element(e: Element) -> str:
    """Canonical text form, readable back by the expression parser."""
    if e.is_zero():
        return "0"
    pieces = [_format_term(m, c) for m, c in e.items()]
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


def replace_generator(e: Element, name: str, replacement: Element) -> Element:
    """Substitute every occurrence of a generator by an Element."""
    e._check(replacement)
    result = Element.zero(e.alphabet)
    for monomial, coeff in e:
        if monomial.traced and name in monomial.letters:
            raise ConfigurationError("cannot substitute inside a trace")
        term = Element.constant(e.alphabet, coeff)
        for letter in monomial.letters:
            factor = replacement if letter == name else Element.generator(e.alphabet, letter)
            term = multiply(term, factor)
        if monomial.traced:
            term = trace(term)
        result = result + term
    return result
