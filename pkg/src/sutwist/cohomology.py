"""Low-degree cohomology of finite abelian groups with circle coefficients.

Cochains are dense tables of angles (Q/Z values) indexed by tuples of group
elements.  Whether a cocycle difference is a coboundary is decided exactly:
the bar differential is an integer matrix, Q/Z is divisible, so the system
d(b) = t is solvable iff t is orthogonal to the integer kernel of the
transposed differential, which Smith-style diagonalization computes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .scalars import UnitAngle, ZERO_ANGLE, HALF_ANGLE
from .smith import mat_vec, smith_normal_form

Element = tuple[int, ...]


class DegreeMismatch(ValueError):
    pass


class GroupMismatch(ValueError):
    pass


class NotCocycle(ValueError):
    pass


class NotCyclic(ValueError):
    pass


class FiniteAbelianGroup:
    """A direct sum of cyclic groups; elements are tuples of residues."""

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[int]) -> None:
        if any(k < 1 for k in factors):
            raise ValueError(f"cyclic orders must be >= 1, got {factors}")
        self.factors = tuple(int(k) for k in factors)

    def elements(self) -> list[Element]:
        return list(product(*(range(k) for k in self.factors)))

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % k for a, b, k in zip(g, h, self.factors))

    def neg(self, g: Element) -> Element:
        return tuple((-a) % k for a, k in zip(g, self.factors))

    @property
    def order(self) -> int:
        n = 1
        for k in self.factors:
            n *= k
        return n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup{self.factors}"


class Cochain:
    """A dense Q/Z-valued function on Gamma^degree."""

    __slots__ = ("group", "degree", "table")

    def __init__(
        self,
        group: FiniteAbelianGroup,
        degree: int,
        table: Mapping[tuple[Element, ...], UnitAngle],
    ) -> None:
        self.group = group
        self.degree = degree
        self.table = dict(table)
        expected = group.order**degree
        if len(self.table) != expected:
            raise ValueError(f"table has {len(self.table)} entries, domain has {expected}")

    @classmethod
    def from_function(cls, group: FiniteAbelianGroup, degree: int, fn) -> "Cochain":
        elems = group.elements()
        return cls(group, degree, {args: fn(*args) for args in product(elems, repeat=degree)})

    @classmethod
    def zero(cls, group: FiniteAbelianGroup, degree: int) -> "Cochain":
        return cls.from_function(group, degree, lambda *args: ZERO_ANGLE)

    def __call__(self, *args: Element) -> UnitAngle:
        return self.table[args]

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(self.group, self.degree, {k: v + other.table[k] for k, v in self.table.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(self.group, self.degree, {k: v - other.table[k] for k, v in self.table.items()})

    def __neg__(self) -> "Cochain":
        return Cochain(self.group, self.degree, {k: -v for k, v in self.table.items()})

    def _check_compatible(self, other: "Cochain") -> None:
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.table.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Cochain)
            and self.group == other.group
            and self.degree == other.degree
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.group, self.degree, frozenset(self.table.items())))

    def to_json(self) -> dict:
        elems = self.group.elements()
        flat = [str(self.table[args]) for args in product(elems, repeat=self.degree)]
        return {"factors": list(self.group.factors), "degree": self.degree, "values": flat}

    @classmethod
    def from_json(cls, data: dict) -> "Cochain":
        group = FiniteAbelianGroup(data["factors"])
        degree = data["degree"]
        elems = group.elements()
        values = [UnitAngle.parse(v) for v in data["values"]]
        keys = list(product(elems, repeat=degree))
        if len(keys) != len(values):
            raise ValueError("value count does not match the domain")
        return cls(group, degree, dict(zip(keys, values)))

    def __repr__(self) -> str:
        return f"Cochain({self.group}, degree={self.degree})"


def _bar_terms(args: tuple[Element, ...], group: FiniteAbelianGroup) -> list[tuple[tuple[Element, ...], int]]:
    """Faces of the bar differential applied at `args`, with signs."""
    d = len(args)
    terms = [(args[1:], 1)]
    for i in range(d - 1):
        merged = args[:i] + (group.add(args[i], args[i + 1]),) + args[i + 2 :]
        terms.append((merged, -1 if i % 2 == 0 else 1))
    terms.append((args[:-1], -1 if (d - 1) % 2 == 0 else 1))
    return terms


def coboundary(c: Cochain) -> Cochain:
    """The bar-complex differential, raising degree by one."""
    group = c.group
    elems = group.elements()
    table = {}
    for args in product(elems, repeat=c.degree + 1):
        val = ZERO_ANGLE
        for face, sign in _bar_terms(args, group):
            val = val + c.table[face] if sign > 0 else val - c.table[face]
        table[args] = val
    return Cochain(group, c.degree + 1, table)


def is_cocycle(c: Cochain) -> bool:
    return coboundary(c).is_zero


@lru_cache(maxsize=None)
def _solver_data(factors: tuple[int, ...], target_degree: int):
    """Diagonalized bar-differential matrix C^(d-1) -> C^d for a group.

    Returns (S, U, V, column keys) with S = U * D * V; D has one row per
    degree-d tuple and one column per (d-1)-tuple.
    """
    group = FiniteAbelianGroup(factors)
    elems = group.elements()
    rows = list(product(elems, repeat=target_degree))
    cols = list(product(elems, repeat=target_degree - 1))
    col_index = {k: i for i, k in enumerate(cols)}
    d_matrix = [[0] * len(cols) for _ in rows]
    for r, args in enumerate(rows):
        for face, sign in _bar_terms(args, group):
            d_matrix[r][col_index[face]] += sign
    s, u, v = smith_normal_form(d_matrix)
    return s, u, v, rows, cols


def cohomologous(phi: Cochain, psi: Cochain) -> Cochain | None:
    """Solve d(b) = phi - psi for a cochain b one degree lower, or return None.

    Both inputs must be cocycles on the same group and degree.
    """
    phi._check_compatible(psi)
    if not is_cocycle(phi):
        raise NotCocycle("first argument is not a cocycle")
    if not is_cocycle(psi):
        raise NotCocycle("second argument is not a cocycle")
    s, u, v, rows, cols = _solver_data(phi.group.factors, phi.degree)
    diff = phi - psi
    t = [diff.table[args].value for args in rows]
    ut = mat_vec(u, t)
    rank = min(len(rows), len(cols))
    y = [Fraction(0)] * len(cols)
    for i, ti in enumerate(ut):
        pivot = s[i][i] if i < rank else 0
        if pivot == 0:
            if ti.denominator != 1:
                return None
        else:
            y[i] = ti / pivot
    x = mat_vec(v, y)
    witness = Cochain(phi.group, phi.degree - 1, {k: UnitAngle(val) for k, val in zip(cols, x)})
    assert (coboundary(witness) - diff).is_zero
    return witness


def standard_cyclic_3cocycle(k: int, j: int) -> Cochain:
    """The standard degree-3 representative on Z/k indexed by j.

    With canonical lifts a, b, c in {0, ..., k-1} the angle is
    (j/k) * floor((a+b)/k) * c.
    """
    if not 0 <= j < k:
        raise ValueError(f"need 0 <= j < k, got j={j}, k={k}")
    group = FiniteAbelianGroup([k])
    return Cochain.from_function(
        group,
        3,
        lambda a, b, c: UnitAngle(Fraction(j, k) * ((a[0] + b[0]) // k) * c[0]),
    )


def klein_cocycles() -> tuple[Cochain, Cochain, Cochain]:
    """The three generating 3-cocycles on Z/2 + Z/2.

    phi1 = (-1)^(a*b*c) on the first coordinates, phi2 likewise on the second,
    phi3 = (-1)^(a*b*c') mixing both.
    """
    group = FiniteAbelianGroup([2, 2])

    def sign(e: int) -> UnitAngle:
        return HALF_ANGLE if e % 2 else ZERO_ANGLE

    phi1 = Cochain.from_function(group, 3, lambda g, h, l: sign(g[0] * h[0] * l[0]))
    phi2 = Cochain.from_function(group, 3, lambda g, h, l: sign(g[1] * h[1] * l[1]))
    phi3 = Cochain.from_function(group, 3, lambda g, h, l: sign(g[0] * h[0] * l[1]))
    return phi1, phi2, phi3


def aut_pullback(phi: Cochain) -> Cochain:
    """Precompose a degree-3 cochain with negation in every argument."""
    if phi.degree != 3:
        raise DegreeMismatch(f"expected degree 3, got {phi.degree}")
    g = phi.group
    return Cochain(
        g, 3, {(a, b, c): phi.table[(g.neg(a), g.neg(b), g.neg(c))] for (a, b, c) in phi.table}
    )


def cyclic_class_invariant(phi: Cochain) -> int:
    """The index of the cohomologous standard representative on a cyclic group.

    Computed as k * sum_j phi(1, j, 1) mod k; validated against the
    cohomologous-based classification in the test suite, not assumed.
    """
    if len(phi.group.factors) != 1:
        raise NotCyclic(f"group {phi.group} is not a single cyclic factor")
    if phi.degree != 3 or not is_cocycle(phi):
        raise NotCocycle("need a degree-3 cocycle")
    k = phi.group.factors[0]
    total = sum((phi.table[((1 % k,), (j,), (1 % k,))].value for j in range(k)), Fraction(0))
    scaled = k * total
    if scaled.denominator != 1:
        raise NotCocycle("summed class is not k-torsion")
    return int(scaled) % k


def aut_witness_cochain(k: int, j: int) -> Cochain:
    """The explicit degree-2 witness for the pullback of the standard cocycle.

    On canonical lifts: b(a, b) = (j/k) * (floor(a/k) + floor(-a/k)) * (-b),
    whose coboundary equals standard - pullback(standard).
    """
    group = FiniteAbelianGroup([k])
    return Cochain.from_function(
        group,
        2,
        lambda a, b: UnitAngle(Fraction(j, k) * ((a[0] // k) + ((-a[0]) // k)) * (-b[0])),
    )
