"""Data models for aci-betti.

Defines the value types shared across the package: degree tuples and their
classification, Hilbert functions, graded free modules and resolutions, Betti
tables, predictions with per-entry exactness, the oracle's field settings and
dense forms, and the run report produced by ``compare``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

from aci_betti.errors import InvalidInput

if TYPE_CHECKING:
    import numpy as np


class Classification(StrEnum):
    COMPLETE_INTERSECTION = "complete-intersection"
    DEGENERATE = "degenerate"
    PROPER_ACI = "proper-aci"


class EntryStatus(StrEnum):
    EXACT = "exact"
    UPPER_BOUND = "bound"


class GhostReason(StrEnum):
    KOSZUL_VS_GENERATOR = "koszul-vs-generator"
    NON_SPLITTING_OVERLAP = "non-splitting-overlap"


class IndexConvention(StrEnum):
    """Internal-degree shift used when a linear generator is factored out."""

    TENSOR = "tensor"  # tor_{i-1} read at j-1
    AS_STATED = "as-stated"  # tor_{i-1} read at j+1


class Route(StrEnum):
    KOSZUL = "koszul"
    LINEAR_FORM_REDUCTION = "linear-form-reduction"
    TWO_VARIABLES = "two-variables"
    THREE_VARIABLES_COMPRESSED_ODD = "three-variables-compressed-odd"
    THREE_VARIABLES_COMPRESSED_EVEN = "three-variables-compressed-even"
    THREE_VARIABLES_ODD = "three-variables-odd"
    THREE_VARIABLES_EVEN = "three-variables-even"
    THREE_VARIABLES_EQUAL_DEGREES = "three-variables-equal-degrees"
    EQUAL_DEGREES = "equal-degrees"
    EQUAL_DEGREES_BOUND = "equal-degrees-bound"
    ONE_PEAK_COMPRESSED = "one-peak-compressed"
    FOUR_VARIABLES_EVEN_SUM = "four-variables-even-sum"
    TWO_PEAKS_COMPRESSED = "two-peaks-compressed"
    TWO_PEAKS_COMPRESSED_CONJECTURAL = "two-peaks-compressed-conjectural"
    TWO_PEAKS_COMPRESSED_ODD_BOUND = "two-peaks-compressed-odd-bound"
    LEX_BOUND = "lex-bound"
    GORENSTEIN = "gorenstein"


@dataclass(frozen=True)
class DegreeTuple:
    """n variables and the degrees d_1 <= ... <= d_{n+1} of n+1 generic forms.

    Build with :meth:`of` to accept unsorted input; the permutation that sorted
    the user's degrees is kept for echoing them back.
    """

    n: int
    degrees: tuple[int, ...]
    permutation: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidInput(f"need at least 2 variables, got n={self.n}")
        if len(self.degrees) != self.n + 1:
            raise InvalidInput(
                f"expected {self.n + 1} degrees for n={self.n}, got {len(self.degrees)}"
            )
        if any(d < 1 for d in self.degrees):
            raise InvalidInput(f"degrees must be positive: {self.degrees}")
        if list(self.degrees) != sorted(self.degrees):
            raise InvalidInput(f"degrees must be non-decreasing: {self.degrees}")
        if not self.permutation:
            object.__setattr__(self, "permutation", tuple(range(self.n + 1)))

    @classmethod
    def of(cls, n: int, degrees: Iterable[int]) -> DegreeTuple:
        raw = list(degrees)
        order = sorted(range(len(raw)), key=lambda k: raw[k])
        return cls(n=n, degrees=tuple(raw[k] for k in order), permutation=tuple(order))

    @property
    def regular(self) -> tuple[int, ...]:
        """Degrees of the first n forms (the complete intersection J)."""
        return self.degrees[: self.n]

    @property
    def last(self) -> int:
        return self.degrees[-1]

    @property
    def d(self) -> int:
        return sum(self.regular)

    @property
    def e(self) -> int:
        return self.d - self.last

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def f(self) -> int:
        return sum(self.degrees[:3])

    @property
    def classification(self) -> Classification:
        if self.last > self.d - self.n:
            return Classification.COMPLETE_INTERSECTION
        if self.degrees[0] == 1:
            return Classification.DEGENERATE
        return Classification.PROPER_ACI

    @property
    def is_equal_degree(self) -> bool:
        return len(set(self.degrees)) == 1

    @property
    def original_order(self) -> tuple[int, ...]:
        out = [0] * len(self.degrees)
        for pos, src in enumerate(self.permutation):
            out[src] = self.degrees[pos]
        return tuple(out)

    def __str__(self) -> str:
        return f"n={self.n} ({','.join(map(str, self.degrees))})"


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = list(self.values)
        if any(v < 0 for v in vals):
            raise InvalidInput(f"Hilbert function values must be non-negative: {vals}")
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def of(cls, values: Iterable[int]) -> HilbertFunction:
        return cls(values=tuple(int(v) for v in values))

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.values):
            return self.values[degree]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


@dataclass(frozen=True)
class GorensteinProfile:
    socle_degree: int
    first_peak: int
    peak_count: int
    maximal_growth: bool

    @property
    def alpha(self) -> int:
        """Initial degree of the annihilator of a general linear form."""
        return self.socle_degree - self.first_peak


@dataclass(frozen=True)
class GradedFreeModule:
    """F = sum over j of R(-j)^mult(j), stored as sorted (twist, mult) pairs."""

    twists: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: Counter[int] = Counter()
        for twist, mult in self.twists:
            if mult < 0:
                raise InvalidInput(f"negative multiplicity {mult} at twist {twist}")
            merged[twist] += mult
        object.__setattr__(
            self, "twists", tuple(sorted((j, m) for j, m in merged.items() if m > 0))
        )

    @classmethod
    def of(cls, twists: Mapping[int, int] | Iterable[tuple[int, int]]) -> GradedFreeModule:
        items = twists.items() if isinstance(twists, Mapping) else twists
        return cls(twists=tuple(items))

    @classmethod
    def free(cls, twist: int, mult: int = 1) -> GradedFreeModule:
        return cls(twists=((twist, mult),))

    def mult(self, twist: int) -> int:
        for j, m in self.twists:
            if j == twist:
                return m
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.twists)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.twists)

    @property
    def chern(self) -> int:
        return sum(j * m for j, m in self.twists)

    def __add__(self, other: GradedFreeModule) -> GradedFreeModule:
        return GradedFreeModule(twists=self.twists + other.twists)

    def shifted(self, by: int) -> GradedFreeModule:
        return GradedFreeModule(twists=tuple((j + by, m) for j, m in self.twists))

    def __str__(self) -> str:
        if not self.twists:
            return "0"
        parts = []
        for j, m in self.twists:
            base = "R" if j == 0 else f"R(-{j})" if j > 0 else f"R({-j})"
            parts.append(base if m == 1 else f"{base}^{m}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ResolutionShape:
    """Modules F_0 ... F_L of a free resolution of a cyclic quotient (F_0 = R)."""

    modules: tuple[GradedFreeModule, ...]

    @classmethod
    def of(cls, modules: Iterable[Mapping[int, int] | GradedFreeModule]) -> ResolutionShape:
        built = tuple(
            m if isinstance(m, GradedFreeModule) else GradedFreeModule.of(m) for m in modules
        )
        return cls(modules=built)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def __getitem__(self, i: int) -> GradedFreeModule:
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return GradedFreeModule()

    @property
    def rank_sum(self) -> int:
        return sum((-1) ** i * f.rank for i, f in enumerate(self.modules))

    @property
    def chern_sum(self) -> int:
        return sum((-1) ** i * f.chern for i, f in enumerate(self.modules))

    def table(self) -> BettiTable:
        return BettiTable.of(
            ((i, j), m) for i, f in enumerate(self.modules) for j, m in f.twists
        )

    def __str__(self) -> str:
        return " <- ".join(str(f) for f in self.modules)


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j} of a quotient, keyed by (homological degree, internal degree)."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[tuple[int, int], int] = {}
        for (i, j), m in sorted(self.entries.items()):
            if m < 0:
                raise InvalidInput(f"negative Betti number {m} at ({i},{j})")
            if m:
                clean[(i, j)] = m
        object.__setattr__(self, "entries", clean)

    @classmethod
    def of(cls, items: Iterable[tuple[tuple[int, int], int]]) -> BettiTable:
        acc: Counter[tuple[int, int]] = Counter()
        for key, m in items:
            acc[key] += m
        return cls(entries=dict(acc))

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def shape(self) -> ResolutionShape:
        modules: list[dict[int, int]] = [{} for _ in range(self.length + 1)]
        for (i, j), m in self.entries.items():
            modules[i][j] = m
        return ResolutionShape.of(modules)


@dataclass(frozen=True)
class GhostTerm:
    position: int  # twist shared by F_position and F_position+1
    twist: int
    multiplicity: int
    reason: GhostReason

    @property
    def positions(self) -> tuple[int, int]:
        return (self.position, self.position + 1)


@dataclass
class Prediction:
    shape: ResolutionShape
    route: Route
    n: int
    degrees: DegreeTuple | None = None
    bounds: frozenset[tuple[int, int]] = frozenset()
    default_status: EntryStatus = EntryStatus.EXACT
    ghosts: list[GhostTerm] = field(default_factory=list)
    conjectural: bool = False
    module: str = "R/I"
    gorenstein: Prediction | None = None
    inner: Prediction | None = None

    def status(self, i: int, j: int) -> EntryStatus:
        if (i, j) in self.bounds:
            return EntryStatus.UPPER_BOUND
        return self.default_status

    @property
    def entry_status(self) -> dict[tuple[int, int], EntryStatus]:
        return {key: self.status(*key) for key, _ in self.table()}

    @property
    def is_exact(self) -> bool:
        return not self.bounds and self.default_status is EntryStatus.EXACT

    @property
    def is_proven(self) -> bool:
        return self.is_exact and not self.conjectural

    def table(self) -> BettiTable:
        return self.shape.table()


@dataclass(frozen=True)
class SameDegParams:
    n: int
    a: int
    s: int
    ell: int
    t: int
    alpha: tuple[int, ...]  # alpha[0] is alpha_1

    def alpha_j(self, j: int) -> int:
        return self.alpha[j - 1]


@dataclass(frozen=True)
class MonomialIdeal:
    c: int
    generators: tuple[tuple[int, ...], ...]

    def degrees(self) -> list[int]:
        return [sum(u) for u in self.generators]

    def contains(self, monomial: tuple[int, ...]) -> bool:
        return any(all(a <= b for a, b in zip(g, monomial)) for g in self.generators)


@dataclass(frozen=True)
class FieldConfig:
    prime: int = 32003
    seed: int = 0


@dataclass(frozen=True)
class OracleSettings:
    """Resolved oracle options: field, number of seeds, resampling budget."""

    prime: int = 32003
    seed: int = 0
    seeds: int = 3
    retries: int = 5

    @property
    def field_config(self) -> FieldConfig:
        return FieldConfig(prime=self.prime, seed=self.seed)


@dataclass(eq=False)
class DenseForm:
    n: int
    degree: int
    coeffs: np.ndarray = field(repr=False)
    prime: int = 32003


@dataclass(frozen=True)
class TableDiff:
    i: int
    j: int
    predicted: int
    measured: int
    status: EntryStatus


@dataclass
class RunReport:
    degrees: DegreeTuple
    prediction: Prediction
    oracle: BettiTable | None = None
    diff: list[TableDiff] = field(default_factory=list)
    bound_violations: list[TableDiff] = field(default_factory=list)
    measured_bounds: dict[tuple[int, int], int] = field(default_factory=dict)
    cancellations: dict[tuple[int, int], int] | None = None
    seed_disagreements: list[int] = field(default_factory=list)
    seeds: list[int] = field(default_factory=list)
    prime: int = 32003
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.diff
