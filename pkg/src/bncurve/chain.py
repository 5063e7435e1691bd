"""Limit linear series of rank 1 on a chain of elliptic curves.

A chain of g elliptic components is glued Q_i ~ P_{i+1} at generic points.
A rank-1 limit series of degree d is pinned down, on all components but one,
to a line bundle of the shape O(u P + (d-u) Q); the remaining component
carries an arbitrary degree-d bundle.  Which bundle appears on each fixed
component is driven by a ballot sequence of 1s and 2s via the vanishing-order
propagation implemented in :func:`propagate`.

Since the glue points are generic, O(uP + (d-u)Q) == O(u'P + (d-u')Q) iff
u == u', so a single integer offset identifies each fixed bundle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .combinatorics import catalan, enumerate_ballot, generalized_catalan, is_admissible


class UnsupportedShapeError(ValueError):
    """Raised when (g, r, d) falls outside the modeled parameter shapes."""


@dataclass(frozen=True)
class ChainSpec:
    """Chain of g elliptic components carrying degree-d series of rank r."""

    g: int
    d: int
    r: int = 1

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("need at least 2 components")
        if self.d < 1:
            raise ValueError("degree must be positive")

    @property
    def a(self) -> int:
        """The parameter a for the rho = 1 shape g = 2a+1, d = a+2."""
        if self.r != 1 or self.g % 2 == 0 or self.d != (self.g - 1) // 2 + 2:
            raise UnsupportedShapeError(f"not a rho=1 chain: {self}")
        return (self.g - 1) // 2

    @classmethod
    def rho_one(cls, a: int) -> "ChainSpec":
        if a < 1:
            raise ValueError("a must be positive")
        return cls(g=2 * a + 1, d=a + 2, r=1)


@dataclass(frozen=True)
class Bundle:
    """Line bundle on one elliptic component: O(uP + (d-u)Q), or free.

    `u is None` means the bundle is arbitrary (the table entry "L").
    """

    u: int | None

    @classmethod
    def fixed(cls, u: int) -> "Bundle":
        if u < 0:
            raise ValueError("offset must be nonnegative")
        return cls(u)

    @classmethod
    def free(cls) -> "Bundle":
        return cls(None)

    @property
    def is_free(self) -> bool:
        return self.u is None

    def render(self, d: int) -> str:
        """Conventional name: "aP+bQ" with zero terms dropped, "L" if free."""
        if self.u is None:
            return "L"
        if not 0 <= self.u <= d:
            raise ValueError(f"offset {self.u} out of range for degree {d}")
        p, q = self.u, d - self.u
        if p == 0:
            return f"{q}Q"
        if q == 0:
            return f"{p}P"
        pp = "P" if p == 1 else f"{p}P"
        qq = "Q" if q == 1 else f"{q}Q"
        return f"{pp}+{qq}"


@dataclass(frozen=True)
class BNComponentId:
    """One component of the Brill-Noether curve: a ballot sequence of 1s and
    2s attached to the non-marked chain components, plus the marked component
    whose bundle varies freely."""

    sequence: tuple[int, ...]
    marked: int

    def __post_init__(self):
        n = len(self.sequence)
        if n % 2 or not is_admissible(self.sequence, n // 2, 2):
            raise ValueError(f"sequence {self.sequence} is not admissible")
        if not 1 <= self.marked <= n + 1:
            raise ValueError(f"marked index {self.marked} out of range")

    @property
    def label(self) -> str:
        return "".join(map(str, self.sequence)) + "|" + str(self.marked)

    def sort_key(self):
        return (self.sequence, self.marked)


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r+1)(g-d+r)."""
    if g < 0 or d < 0 or r < 1:
        raise ValueError("need g, d >= 0 and r >= 1")
    return g - (r + 1) * (g - d + r)


def propagate(chain: ChainSpec, comp: BNComponentId):
    """Walk the chain and resolve the bundle on every component.

    Returns (vanishing, bundles), both of length g.  vanishing[i] is the pair
    (u1, u2) of vanishing orders at the entry node of component i+1; bundles[i]
    is the resolved :class:`Bundle`.

    The walk starts from (u1, u2) = (0, 1).  On the marked component both
    orders step up by one and the bundle stays free.  On any other component
    the next sequence symbol picks the bundle O(u_sym P + (d-u_sym) Q) and the
    *other* vanishing order steps up by one.
    """
    chain.a  # validates the rho=1 shape
    if len(comp.sequence) != chain.g - 1:
        raise ValueError(
            f"sequence length {len(comp.sequence)} != g-1 = {chain.g - 1}"
        )
    u1, u2 = 0, 1
    vanishing: list[tuple[int, int]] = []
    bundles: list[Bundle] = []
    pos = 0
    for i in range(1, chain.g + 1):
        vanishing.append((u1, u2))
        if i == comp.marked:
            bundles.append(Bundle.free())
            u1, u2 = u1 + 1, u2 + 1
        else:
            sym = comp.sequence[pos]
            pos += 1
            if sym == 1:
                bundles.append(Bundle.fixed(u1))
                u2 += 1
            else:
                bundles.append(Bundle.fixed(u2))
                u1 += 1
        if not (u1 < u2 <= chain.d + 1):
            raise ValueError(f"vanishing orders left range at component {i}")
    if pos != len(comp.sequence):
        raise ValueError("sequence not fully consumed")
    for (u1, u2) in vanishing:
        assert u1 < u2 <= chain.d
    return vanishing, bundles


def all_components(chain: ChainSpec) -> list[BNComponentId]:
    """Every component id for the chain, ordered (sequence lex, marked)."""
    a = chain.a
    return [
        BNComponentId(seq.symbols, marked)
        for seq in enumerate_ballot(a, 2)
        for marked in range(1, chain.g + 1)
    ]


def component_tables(chain: ChainSpec) -> dict[BNComponentId, tuple[Bundle, ...]]:
    """Bundle tuple for every component, keyed in deterministic order."""
    return {comp: tuple(propagate(chain, comp)[1]) for comp in all_components(chain)}


def render_tables(chain: ChainSpec, fmt: str = "text") -> str:
    """Render the component tables, one row per chain component.

    fmt "csv" emits comma-separated values; "text" emits aligned columns.
    """
    tables = component_tables(chain)
    headers = ["C_i"] + [comp.label for comp in tables]
    rows = []
    for i in range(chain.g):
        rows.append([str(i + 1)] + [bs[i].render(chain.d) for bs in tables.values()])
    if fmt == "csv":
        return "\n".join(",".join(row) for row in [headers] + rows) + "\n"
    if fmt == "text":
        widths = [max(len(r[j]) for r in [headers] + rows) for j in range(len(headers))]
        lines = [
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
            for row in [headers] + rows
        ]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format: {fmt!r}")


def bn_bound_check(chain: ChainSpec, bundles) -> tuple[int, int, bool]:
    """Check the existence bound sum(eps_i) <= 2d - g - 2.

    eps_i is 0 on components carrying a pinned O(uP + (d-u)Q) bundle and 1
    otherwise.  Returns (epsilon_sum, bound, ok).
    """
    epsilon_sum = sum(1 for b in bundles if b.is_free)
    bound = 2 * chain.d - chain.g - 2
    return epsilon_sum, bound, epsilon_sum <= bound


def exhaustive_bound_search(g: int, r: int, d: int) -> list[tuple]:
    """Configuration classes passing the existence bound sum(eps) <= rho.

    A configuration assigns each of the g chain components either one of the
    r+1 pinned-bundle presentations or a free bundle; its epsilon sum is the
    number of free components, independent of which presentations are picked.
    Configurations are therefore enumerated by their free-component subset,
    each class standing for (r+1)^(g-k) symbol assignments.  Returns the
    passing classes as (free_positions, class_size) pairs; empty whenever
    rho < 0, since every class has epsilon sum >= 0.
    """
    bound = rho(g, r, d)
    passing = []
    for free in product((False, True), repeat=g):
        epsilon_sum = sum(free)
        if epsilon_sum <= bound:
            positions = tuple(i + 1 for i, f in enumerate(free) if f)
            passing.append((positions, (r + 1) ** (g - epsilon_sum)))
    return passing


@dataclass(frozen=True)
class Census:
    """Shape of the limit-series locus: empty, a finite count, or a curve
    with `count` irreducible components."""

    kind: str  # "empty" | "finite" | "curve"
    count: int = 0


def limit_series_census(g: int, r: int, d: int) -> Census:
    """Classify W^r_d on a chain of g elliptic curves, for supported shapes.

    Supported: rho < 0 (empty); rho = 0 with g = a(r+1), d = r(a+1) (finite,
    counted by the generalized Catalan number); rho = 1 with r = 1, g = 2a+1,
    d = a+2 (a curve with (2a+1) * catalan(a) components).
    """
    p = rho(g, r, d)
    if p < 0:
        return Census("empty")
    if p == 0:
        if g % (r + 1) == 0:
            a = g // (r + 1)
            if a >= 1 and d == r * (a + 1):
                return Census("finite", generalized_catalan(a, r + 1))
        raise UnsupportedShapeError(
            f"rho=0 shape (g={g}, r={r}, d={d}) is out of modeled range"
        )
    if p == 1 and r == 1 and g % 2 == 1 and g >= 3:
        a = (g - 1) // 2
        if d == a + 2:
            return Census("curve", (2 * a + 1) * catalan(a))
    raise UnsupportedShapeError(
        f"(g={g}, r={r}, d={d}) with rho={p} is out of modeled range"
    )
