"""
Constant deformation tensor A^{a mu} of the theta++ / x commutator.

Each entry is a Scalar prefactor times the Grassmann-odd constant A_a_mu.
With odd entries the printed symmetric exponent makes theta++ and x commute;
that literal reading stays available as star(f, g, A, symmetric=True) in
star.py.
"""

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Tuple, Union

from ..algebra.scalars import ONE, ZERO, Scalar, ScalarLike, format_scalar, scalar
from ..exceptions import ConfigurationError
from ..superspace.polynomial import CENTRAL, SuperPolynomial
from ..utils.constants import SPINOR_INDICES, VECTOR_INDICES

ENTRY_NAMES = tuple(f"A_{a}_{mu}" for a in SPINOR_INDICES for mu in VECTOR_INDICES)

Prefactors = Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class DeformationTensor:
    """2 x 3 prefactors, indexed by spinor a in (1, 2) and mu in (0, 1, 2)."""

    prefactors: Prefactors

    def __post_init__(self):
        if len(self.prefactors) != len(SPINOR_INDICES) or any(
                len(row) != len(VECTOR_INDICES) for row in self.prefactors):
            raise ConfigurationError("deformation tensor must be 2 x 3")

    @classmethod
    def symbolic(cls) -> 'DeformationTensor':
        """Generic tensor: every entry is its own odd constant."""
        return cls(tuple(tuple(ONE for _ in VECTOR_INDICES) for _ in SPINOR_INDICES))

    @classmethod
    def zero(cls) -> 'DeformationTensor':
        return cls(tuple(tuple(ZERO for _ in VECTOR_INDICES) for _ in SPINOR_INDICES))

    @classmethod
    def from_entries(cls, values: Union[Mapping[str, ScalarLike], Sequence[Sequence[ScalarLike]]]
                     ) -> 'DeformationTensor':
        """
        Build from a nested 2 x 3 list or a mapping {'A_a_mu': prefactor}.

        Absent mapping keys default to zero; strings go through the scalar
        reader, so 'k', '1/2' and 'i' are accepted.
        """
        if isinstance(values, Mapping):
            unknown = set(values) - set(ENTRY_NAMES)
            if unknown:
                raise ConfigurationError(f"unknown deformation entries: {sorted(unknown)}")
            return cls(tuple(tuple(scalar(values.get(f"A_{a}_{mu}", 0)) for mu in VECTOR_INDICES)
                             for a in SPINOR_INDICES))
        return cls(tuple(tuple(scalar(v) for v in row) for row in values))

    def prefactor(self, a: int, mu: int) -> Scalar:
        return self.prefactors[SPINOR_INDICES.index(a)][VECTOR_INDICES.index(mu)]

    def entry(self, a: int, mu: int, basis=CENTRAL) -> SuperPolynomial:
        """A^{a mu} as an odd constant polynomial."""
        return SuperPolynomial.deformation(a, mu, basis).scale(self.prefactor(a, mu))

    def spacelike(self) -> 'DeformationTensor':
        """Same tensor with the time components A^{a0} removed."""
        return DeformationTensor(tuple((ZERO,) + tuple(row[1:]) for row in self.prefactors))

    def is_zero(self) -> bool:
        return all(not v for row in self.prefactors for v in row)

    def nonzero(self) -> Iterator[Tuple[int, int, Scalar]]:
        for a in SPINOR_INDICES:
            for mu in VECTOR_INDICES:
                value = self.prefactor(a, mu)
                if value:
                    yield a, mu, value

    def to_dict(self):
        return {f"A_{a}_{mu}": format_scalar(self.prefactor(a, mu))
                for a in SPINOR_INDICES for mu in VECTOR_INDICES}
