"""Exact ground truth over GF(p).

Random forms stand in for general ones. Quotients are built degree by degree
from Macaulay matrices: R/I directly, and R/G through the inverse system of
the complete intersection J. Graded Betti numbers come from the homology of
the Koszul complex on x_1..x_n tensored with the quotient.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from aci_betti import forms as fm
from aci_betti import gf, hilbert
from aci_betti.errors import (ClassificationError, InvalidInput, NotGeneric,
                              NonRegularSequence, TruncationTooSmall)
from aci_betti.models import (BettiTable, Classification, DegreeTuple,
                              DenseForm, FieldConfig, HilbertFunction)

logger = logging.getLogger(__name__)

MODULES = ("R/I", "R/J", "R/G")


def random_forms(n: int, degrees: Sequence[int], cfg: FieldConfig) -> list[DenseForm]:
    rng = np.random.default_rng(cfg.seed)
    return [fm.random_form(n, d, rng, cfg.prime) for d in degrees]


def random_linear_form(n: int, cfg: FieldConfig) -> np.ndarray:
    """Coefficients of L = sum c_v x_v; seeded apart from the forms themselves."""
    rng = np.random.default_rng([cfg.seed, 1])
    return rng.integers(1, cfg.prime, size=n, dtype=np.int64)


def ideal_hilbert(forms: Sequence[DenseForm], maxdeg: int) -> HilbertFunction:
    n, p = forms[0].n, forms[0].prime
    values = []
    for t in range(maxdeg + 1):
        m = fm.macaulay_matrix(forms, t, n)
        values.append(fm.dimension(n, t) - (gf.rank(m, p) if m.shape[0] else 0))
    return HilbertFunction.of(values)


def certify_generic(forms: Sequence[DenseForm], t: DegreeTuple) -> bool:
    expected = hilbert.aci_hilbert(t)
    measured = ideal_hilbert(forms, len(expected))
    if measured != expected:
        logger.warning("%s: sampled forms give %s, expected %s", t, measured, expected)
        return False
    return True


# ---------------------------------------------------------------------------
# colon ideal through the inverse system


def _require_regular(j_forms: Sequence[DenseForm]) -> int:
    n = j_forms[0].n
    degrees = [f.degree for f in j_forms]
    if len(j_forms) != n:
        raise InvalidInput(f"need {n} forms for a complete intersection, got {len(j_forms)}")
    expected = hilbert.ci_hilbert(degrees, n)
    if ideal_hilbert(j_forms, len(expected)) != expected:
        raise NonRegularSequence(f"forms of degrees {degrees} are not a regular sequence")
    return sum(degrees) - n


def inverse_system(j_forms: Sequence[DenseForm], g: DenseForm) -> np.ndarray | None:
    """psi(h) = phi(h * g), phi the functional on R_D that kills J_D.

    Returns the coefficient vector of psi on R_{D - deg g}, or None when g lies
    in J (the colon ideal is the whole ring).
    """
    n, p = g.n, g.prime
    socle = _require_regular(j_forms)
    kernel = gf.nullspace(fm.macaulay_matrix(j_forms, socle, n), p)
    if kernel.shape[0] != 1:
        raise NonRegularSequence(f"socle of R/J has dimension {kernel.shape[0]}")
    phi = kernel[0]
    if g.degree > socle:
        return None
    psi = gf.matmul(fm.multiplication_matrix(g, socle), phi, p)
    return None if not psi.any() else psi


def _catalecticant(psi: np.ndarray, n: int, top: int, t: int) -> np.ndarray:
    """Rows h of degree top-t, columns m of degree t, entry psi(m*h)."""
    index = fm.product_index(n, top - t, t)
    return psi[index]


def _colon_piece(psi: np.ndarray | None, n: int, top: int, t: int, p: int) -> np.ndarray:
    size = fm.dimension(n, t)
    if psi is None or t > top:
        return np.eye(size, dtype=np.int64)
    return gf.nullspace(_catalecticant(psi, n, top, t), p)


def colon_degreewise(j_forms: Sequence[DenseForm], g: DenseForm, t: int) -> np.ndarray:
    """Rows span G_t for G = J : g."""
    psi = inverse_system(j_forms, g)
    top = (sum(f.degree for f in j_forms) - g.n) - g.degree
    return _colon_piece(psi, g.n, top, t, g.prime)


# ---------------------------------------------------------------------------
# graded quotients


@dataclass(eq=False)
class GradedQuotient:
    """R/I truncated at ``top`` (which must already be zero).

    ``mult[t][v]`` maps the standard basis in degree t to degree t+1 by x_v.
    """

    n: int
    prime: int
    top: int
    standard: list[list[fm.Monomial]]
    mult: list[list[np.ndarray]] = field(repr=False)

    @classmethod
    def from_ideal_bases(cls, n: int, basis: Callable[[int], np.ndarray], top: int,
                         prime: int, check: bool = True) -> GradedQuotient:
        standard: list[list[fm.Monomial]] = []
        normal_forms: list[np.ndarray] = []
        for t in range(top + 1):
            size = fm.dimension(n, t)
            rows = basis(t)
            reduced, pivots = gf.row_reduce(rows, prime) if rows.shape[0] else (rows, [])
            taken = set(pivots)
            std = [k for k in range(size) if k not in taken]
            nf = np.zeros((len(std), size), dtype=np.int64)
            nf[np.arange(len(std)), std] = 1
            if pivots and std:
                nf[:, pivots] = (-reduced[:, std].T) % prime
            mons = fm.monomials(n, t)
            standard.append([mons[k] for k in std])
            normal_forms.append(nf)
            logger.debug("degree %d: %d standard monomials", t, len(std))

        mult: list[list[np.ndarray]] = []
        for t in range(top):
            index = fm.monomial_index(n, t + 1)
            per_var = []
            for v in range(n):
                cols = [index[tuple(e + (k == v) for k, e in enumerate(u))] for u in standard[t]]
                per_var.append(normal_forms[t + 1][:, cols])
            mult.append(per_var)

        q = cls(n=n, prime=prime, top=top, standard=standard, mult=mult)
        if check:
            q.check_commuting()
        return q

    @property
    def dims(self) -> list[int]:
        return [len(s) for s in self.standard]

    @property
    def hilbert(self) -> HilbertFunction:
        return HilbertFunction.of(self.dims)

    def dim(self, t: int) -> int:
        return len(self.standard[t]) if 0 <= t <= self.top else 0

    def check_commuting(self) -> None:
        p = self.prime
        for t in range(self.top - 1):
            for a, b in combinations(range(self.n), 2):
                ab = gf.matmul(self.mult[t + 1][a], self.mult[t][b], p)
                ba = gf.matmul(self.mult[t + 1][b], self.mult[t][a], p)
                if not np.array_equal(ab, ba):
                    raise InvalidInput(f"bases in degree {t} do not span an ideal")

    def linear_map(self, coeffs: np.ndarray, t: int) -> np.ndarray:
        """Multiplication by sum c_v x_v from degree t to t+1."""
        out = np.zeros((self.dim(t + 1), self.dim(t)), dtype=np.int64)
        if t < self.top:
            for c, m in zip(coeffs, self.mult[t]):
                out = (out + int(c) * m) % self.prime
        return out


def quotient_of_forms(forms: Sequence[DenseForm], top: int) -> GradedQuotient:
    n, p = forms[0].n, forms[0].prime
    return GradedQuotient.from_ideal_bases(n, lambda t: fm.macaulay_matrix(forms, t, n), top, p)


def linked_quotient(j_forms: Sequence[DenseForm], g: DenseForm) -> GradedQuotient:
    """R/G for G = J : g, truncated one past its socle degree."""
    n, p = g.n, g.prime
    psi = inverse_system(j_forms, g)
    socle = sum(f.degree for f in j_forms) - n - g.degree
    if psi is None:
        return GradedQuotient.from_ideal_bases(n, lambda t: np.eye(fm.dimension(n, t), dtype=np.int64),
                                               0, p)
    return GradedQuotient.from_ideal_bases(
        n, lambda t: _colon_piece(psi, n, socle, t, p), socle + 1, p
    )


# ---------------------------------------------------------------------------
# Betti numbers and Lefschetz ranks


def _koszul_differential(q: GradedQuotient, i: int, j: int) -> np.ndarray:
    """K_i (x) A_{j-i} -> K_{i-1} (x) A_{j-i+1}, e_S (x) a -> sum (-1)^k e_{S - s_k} (x) x_{s_k} a."""
    n, p = q.n, q.prime
    src_deg = j - i
    sources = list(combinations(range(n), i))
    targets = {s: k for k, s in enumerate(combinations(range(n), i - 1))}
    src_dim, tgt_dim = q.dim(src_deg), q.dim(src_deg + 1)
    out = np.zeros((len(targets) * tgt_dim, len(sources) * src_dim), dtype=np.int64)
    if not src_dim or not tgt_dim:
        return out
    for col, subset in enumerate(sources):
        for k, var in enumerate(subset):
            row = targets[subset[:k] + subset[k + 1 :]]
            block = q.mult[src_deg][var] if k % 2 == 0 else (-q.mult[src_deg][var]) % p
            out[row * tgt_dim:(row + 1) * tgt_dim, col * src_dim:(col + 1) * src_dim] = block
    return out


def graded_betti(q: GradedQuotient) -> BettiTable:
    """beta_{i,j} = dim H_i(K (x) A)_j by rank-nullity, degree by degree."""
    if q.dim(q.top):
        raise TruncationTooSmall(f"quotient is still nonzero in degree {q.top}")
    n, p = q.n, q.prime
    ranks: dict[tuple[int, int], int] = {}

    def rank_of(i: int, j: int) -> int:
        if i < 1 or i > n:
            return 0
        if (i, j) not in ranks:
            started = time.perf_counter()
            ranks[(i, j)] = gf.rank(_koszul_differential(q, i, j), p)
            logger.debug("rank d_%d in degree %d: %d (%.3fs)", i, j, ranks[(i, j)],
                         time.perf_counter() - started)
        return ranks[(i, j)]

    items = []
    for i in range(n + 1):
        for j in range(i, q.top + i):
            chains = hilbert.binom(n, i) * q.dim(j - i)
            if chains:
                items.append(((i, j), chains - rank_of(i, j) - rank_of(i + 1, j)))
    return BettiTable.of(items)


def lefschetz_check(q: GradedQuotient, power: int, cfg: FieldConfig) -> bool:
    """True iff L^power has maximal rank in every degree, for a random linear L."""
    if power < 1:
        raise InvalidInput(f"power must be positive, got {power}")
    coeffs = random_linear_form(q.n, cfg)
    p = q.prime
    maps = [q.linear_map(coeffs, t) for t in range(q.top)]
    for t in range(q.top - power + 1):
        product = maps[t]
        for k in range(1, power):
            product = gf.matmul(maps[t + k], product, p)
        expected = min(q.dim(t), q.dim(t + power))
        if expected and gf.rank(product, p) != expected:
            logger.info("multiplication by L^%d fails maximal rank in degree %d", power, t)
            return False
    return True


def linear_section_hilbert(q: GradedQuotient, cfg: FieldConfig) -> HilbertFunction:
    """Hilbert function of A/LA for a random linear L."""
    coeffs = random_linear_form(q.n, cfg)
    values = [q.dim(0)]
    for t in range(1, q.top + 1):
        image = q.linear_map(coeffs, t - 1)
        values.append(q.dim(t) - (gf.rank(image, q.prime) if image.size else 0))
    return HilbertFunction.of(values)


# ---------------------------------------------------------------------------
# end-to-end runs


def build_quotient(t: DegreeTuple, forms: Sequence[DenseForm], module: str = "R/I") -> GradedQuotient:
    if module == "R/I":
        return quotient_of_forms(forms, len(hilbert.aci_hilbert(t)))
    if module == "R/J":
        return quotient_of_forms(forms[: t.n], t.d - t.n + 1)
    if module == "R/G":
        if t.classification is not Classification.PROPER_ACI:
            raise ClassificationError(f"{t} has no linked Gorenstein algebra")
        return linked_quotient(forms[: t.n], forms[t.n])
    raise InvalidInput(f"unknown module {module!r}; expected one of {', '.join(MODULES)}")


def sample_generic(t: DegreeTuple, cfg: FieldConfig, retries: int) -> tuple[list[DenseForm], int]:
    """Forms whose ideal has the generic Hilbert function, and the seed that gave them."""
    for attempt in range(retries + 1):
        seed = cfg.seed + attempt
        forms = random_forms(t.n, t.degrees, FieldConfig(prime=cfg.prime, seed=seed))
        if certify_generic(forms, t):
            return forms, seed
        logger.info("%s: seed %d is not generic, resampling", t, seed)
    raise NotGeneric(f"{t}: no generic sample in {retries + 1} seeds from {cfg.seed}")


def oracle_betti(t: DegreeTuple, cfg: FieldConfig, module: str = "R/I",
                 retries: int = 5) -> tuple[BettiTable, int]:
    forms, seed = sample_generic(t, cfg, retries)
    started = time.perf_counter()
    table = graded_betti(build_quotient(t, forms, module))
    logger.info("%s: %s oracle with seed %d in %.2fs", t, module, seed, time.perf_counter() - started)
    return table, seed


@dataclass
class OracleRun:
    table: BettiTable
    seeds: list[int]
    disagreements: list[int] = field(default_factory=list)


def stable_betti(t: DegreeTuple, cfg: FieldConfig, seeds: int = 3, retries: int = 5,
                 module: str = "R/I") -> OracleRun:
    """Entrywise minimum over several generic samples; seeds that disagree are recorded."""
    if seeds < 1:
        raise InvalidInput(f"need at least one seed, got {seeds}")
    tables: list[tuple[int, BettiTable]] = []
    next_seed = cfg.seed
    for _ in range(seeds):
        table, used = oracle_betti(t, FieldConfig(prime=cfg.prime, seed=next_seed), module, retries)
        tables.append((used, table))
        next_seed = used + 1

    keys = {key for _, table in tables for key, _ in table}
    minimum = BettiTable.of((key, min(table.get(*key) for _, table in tables)) for key in keys)
    disagreements = [seed for seed, table in tables if table != minimum]
    if disagreements:
        logger.warning("%s: seeds %s gave larger Betti numbers than the minimum", t, disagreements)
    return OracleRun(table=minimum, seeds=[seed for seed, _ in tables], disagreements=disagreements)
