"""
Gradings, generators and alphabets.

Every generator carries a Grading (Grassmann parity, ghost number, harmonic
U(1) charge). Formal D++ images of generators are themselves generators
("derived" sector) so the free algebra never needs an operator node.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..exceptions import ConfigurationError, DepthError
from ..utils.constants import DERIVED_DEPTH_BOUND, SECTORS

logger = logging.getLogger(__name__)

DPP_TAG = "Dpp"
DPP_HCHARGE = 2


@dataclass(frozen=True, order=True)
class Grading:
    """Z2 parity, ghost number and harmonic charge; additive under products."""

    parity: int = 0
    ghost: int = 0
    hcharge: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'parity', self.parity % 2)

    def __add__(self, other: 'Grading') -> 'Grading':
        return Grading(self.parity + other.parity, self.ghost + other.ghost,
                       self.hcharge + other.hcharge)

    def __neg__(self) -> 'Grading':
        return Grading(self.parity, -self.ghost, -self.hcharge)

    def __sub__(self, other: 'Grading') -> 'Grading':
        return self + (-other)

    def without_hcharge(self) -> Tuple[int, int]:
        return (self.parity, self.ghost)

    def __str__(self) -> str:
        return f"(parity {self.parity}, ghost {self.ghost:+d}, hcharge {self.hcharge:+d})"


ZERO_GRADING = Grading()


@dataclass(frozen=True)
class Generator:
    """A graded symbol of the free algebra.

    derived_from/depth are set for D++ images: Dpp(x) has base x and depth
    depth(x) + 1.
    """

    name: str
    sector: str
    grading: Grading
    conj_image: Optional[str] = None
    derived_from: Optional[str] = None
    tag: Optional[str] = None
    depth: int = 0

    @property
    def parity(self) -> int:
        return self.grading.parity

    @property
    def is_derived(self) -> bool:
        return self.derived_from is not None


def derived_name(base: str, tag: str = DPP_TAG) -> str:
    return f"{tag}({base})"


def _with_derived(generators: Mapping[str, Generator], bound: int) -> Dict[str, Generator]:
    """Close a table of base generators under D++ up to the depth bound."""
    table = dict(generators)
    layer = [g for g in generators.values() if not g.is_derived]
    for depth in range(1, bound + 1):
        next_layer = []
        for base in layer:
            name = derived_name(base.name)
            conj = derived_name(base.conj_image) if base.conj_image else None
            gen = Generator(
                name=name,
                sector='derived',
                grading=base.grading + Grading(0, 0, DPP_HCHARGE),
                conj_image=conj,
                derived_from=base.name,
                tag=DPP_TAG,
                depth=depth,
            )
            table[name] = gen
            next_layer.append(gen)
        layer = next_layer
    return table


@dataclass(frozen=True)
class Alphabet:
    """Immutable, named generator table (base symbols plus their D++ closure)."""

    name: str
    generators: Tuple[Generator, ...]
    depth_bound: int = DERIVED_DEPTH_BOUND
    _index: Dict[str, Generator] = field(default_factory=dict, compare=False, repr=False,
                                         hash=False)

    def __post_init__(self):
        index: Dict[str, Generator] = {}
        for gen in self.generators:
            if gen.name in index:
                raise ConfigurationError(f"duplicate generator '{gen.name}' in alphabet {self.name}")
            if gen.sector not in SECTORS:
                raise ConfigurationError(f"generator '{gen.name}' has unknown sector '{gen.sector}'")
            index[gen.name] = gen
        object.__setattr__(self, '_index', index)

    @classmethod
    def build(cls, name: str, base: Iterable[Generator],
              depth_bound: int = DERIVED_DEPTH_BOUND) -> 'Alphabet':
        """Alphabet from base generators, closed under D++ to depth_bound."""
        base_table = {g.name: g for g in base}
        for gen in base_table.values():
            if gen.conj_image is not None and gen.conj_image not in base_table:
                raise ConfigurationError(
                    f"conj_image '{gen.conj_image}' of '{gen.name}' is not a generator")
        table = _with_derived(base_table, depth_bound)
        logger.debug(f"Alphabet {name}: {len(base_table)} base, {len(table)} total generators")
        return cls(name=name, generators=tuple(table.values()), depth_bound=depth_bound)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, name: str) -> Generator:
        try:
            return self._index[name]
        except KeyError:
            raise ConfigurationError(f"generator '{name}' not in alphabet {self.name}") from None

    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def base_generators(self) -> List[Generator]:
        return [g for g in self.generators if not g.is_derived]

    def grading(self, name: str) -> Grading:
        return self[name].grading

    def parity(self, name: str) -> int:
        return self[name].grading.parity

    def derived(self, name: str) -> Generator:
        """Generator for D++ applied to `name`; DepthError past the bound."""
        gen = self[name]
        if gen.depth + 1 > self.depth_bound:
            raise DepthError(
                f"D++ of '{name}' needs depth {gen.depth + 1}, bound is {self.depth_bound}")
        return self[derived_name(name)]

    def with_overrides(self, overrides: Mapping[str, Mapping]) -> 'Alphabet':
        """New alphabet with per-generator grading/sector/conj overrides on base symbols."""
        base = {g.name: g for g in self.base_generators()}
        for name, values in overrides.items():
            if name not in base:
                raise ConfigurationError(f"override for unknown generator '{name}'")
            gen = base[name]
            grading = Grading(
                values.get('parity', gen.grading.parity),
                values.get('ghost', gen.grading.ghost),
                values.get('hcharge', gen.grading.hcharge),
            )
            base[name] = replace(gen, grading=grading,
                                 sector=values.get('sector', gen.sector),
                                 conj_image=values.get('conj_image', gen.conj_image))
        return Alphabet.build(self.name, base.values(), self.depth_bound)

    def is_compatible(self, other: 'Alphabet') -> bool:
        return self is other or self.generators == other.generators


def _gen(name, sector, parity, ghost, hcharge, conj=None):
    return Generator(name, sector, Grading(parity, ghost, hcharge), conj or name)


# Default gradings: V, b, q, Lambda even; ghosts odd with gh(c) = +1, gh(cbar) = -1.
DEFAULT_BASE_GENERATORS = (
    _gen('V_L', 'L', 0, 0, 2),
    _gen('V_R', 'R', 0, 0, 2),
    _gen('c_L', 'L', 1, 1, 0),
    _gen('c_R', 'R', 1, 1, 0),
    _gen('cbar_L', 'L', 1, -1, 0),
    _gen('cbar_R', 'R', 1, -1, 0),
    _gen('b_L', 'L', 0, 0, 0),
    _gen('b_R', 'R', 0, 0, 0),
    _gen('q', 'matter', 0, 0, 1),
    _gen('qbar', 'matter', 0, 0, 1),
    _gen('Lam_L', 'L', 0, 0, 0),
    _gen('Lam_R', 'R', 0, 0, 0),
    _gen('Vmm_L', 'L', 0, 0, -2),
    _gen('Vmm_R', 'R', 0, 0, -2),
    _gen('Wpp_L', 'L', 0, 0, 2),
    _gen('Wpp_R', 'R', 0, 0, 2),
)

# Fields on which BRST-level relations are checked (ordering of reports).
FIELD_NAMES = ('V_L', 'V_R', 'c_L', 'c_R', 'cbar_L', 'cbar_R', 'b_L', 'b_R', 'q', 'qbar')


def default_alphabet(depth_bound: int = DERIVED_DEPTH_BOUND) -> Alphabet:
    return Alphabet.build('abj', DEFAULT_BASE_GENERATORS, depth_bound)
