"""Burnside rings of finite groups via tables of marks.

Basis classes are conjugacy classes of subgroups in the canonical order of
`classify_subgroups`; the table of marks is lower triangular with the mark
m[H][K] counting K-fixed cosets in G/H.  Multiplication runs through the
ghost (marks) ring and back-substitutes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InternalCheckError
from .groups import FiniteGroup, SubgroupClassification, classify_subgroups, weyl_group
from .modules import FiniteModule, coset_module, group_monoid, wedge

__all__ = [
    "BurnsideRing", "BurnsideElement", "build_burnside",
    "decompose", "marks_of", "marks_to_csv",
]


class BurnsideRing:
    """The Burnside ring of one finite group, with cached tables."""

    def __init__(self, group: FiniteGroup) -> None:
        self.group = group
        self.classification: SubgroupClassification = classify_subgroups(group)
        self.rank = self.classification.rank
        reps = self.classification.representatives
        self.labels = tuple(
            f"order{len(rep.elements)}_rep{'-'.join(str(x) for x in rep.elements)}"
            for rep in reps
        )
        self.cosets: Tuple[FiniteModule, ...] = tuple(
            coset_module(group, rep.elements) for rep in reps
        )
        self.marks = self._build_marks()
        self._series_cache: Dict[Tuple[Tuple[int, ...], int], object] = {}

    def _build_marks(self) -> Tuple[Tuple[int, ...], ...]:
        reps = self.classification.representatives
        table = []
        for i, coset in enumerate(self.cosets):
            row = []
            for j, k_rep in enumerate(reps):
                count = 0
                for x in range(1, coset.size):
                    if all(coset.action[x][g + 1] == x for g in k_rep.elements):
                        count += 1
                row.append(count)
            table.append(row)
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if table[i][j] != 0:
                    raise InternalCheckError("table of marks is not lower triangular")
            w = weyl_group(self.group, self.classification.representatives[i])
            if table[i][i] != w.order:
                raise InternalCheckError("diagonal mark disagrees with the Weyl group order")
        return tuple(tuple(r) for r in table)

    # -- elements ---------------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> "BurnsideElement":
        if len(coeffs) != self.rank:
            raise ValueError(f"need {self.rank} coefficients, got {len(coeffs)}")
        return BurnsideElement(self, tuple(int(c) for c in coeffs))

    def zero(self) -> "BurnsideElement":
        return self.element([0] * self.rank)

    def one(self) -> "BurnsideElement":
        """The class of the one-point G-set, i.e. G/G."""
        coeffs = [0] * self.rank
        coeffs[self.rank - 1] = 1
        return self.element(coeffs)

    def basis_element(self, i: int) -> "BurnsideElement":
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return self.element(coeffs)

    def class_of_subgroup(self, elements: Sequence[int]) -> int:
        return self.classification.class_index(elements)

    # -- decomposition and multiplication ---------------------------------

    def decompose(self, module: FiniteModule) -> "BurnsideElement":
        """Coefficients of a finite module over this group's monoid."""
        if module.monoid != group_monoid(self.group):
            raise ValueError("module lives over a different group")
        coeffs = [0] * self.rank
        for orb in module.orbits():
            stab = module.stabilizer_elements(orb[0])
            coeffs[self.classification.class_index(stab)] += 1
        return self.element(coeffs)

    def marks_of(self, x: "BurnsideElement") -> Tuple[int, ...]:
        return tuple(
            sum(c * self.marks[i][j] for i, c in enumerate(x.coeffs))
            for j in range(self.rank)
        )

    def from_marks(self, ghost: Sequence[int]) -> "BurnsideElement":
        """Invert the marks homomorphism; integrality is checked, not assumed."""
        coeffs = [0] * self.rank
        for i in range(self.rank - 1, -1, -1):
            residue = ghost[i] - sum(coeffs[k] * self.marks[k][i] for k in range(i + 1, self.rank))
            if residue % self.marks[i][i] != 0:
                raise InternalCheckError("ghost vector is not in the image of marks")
            coeffs[i] = residue // self.marks[i][i]
        return self.element(coeffs)

    def mul(self, a: "BurnsideElement", b: "BurnsideElement") -> "BurnsideElement":
        ga = self.marks_of(a)
        gb = self.marks_of(b)
        return self.from_marks([x * y for x, y in zip(ga, gb)])

    def realize(self, x: "BurnsideElement") -> FiniteModule:
        """An explicit module with the classes of an effective element."""
        if any(c < 0 for c in x.coeffs):
            raise ValueError("only effective elements can be realized")
        parts: List[FiniteModule] = []
        for i, c in enumerate(x.coeffs):
            parts.extend([self.cosets[i]] * c)
        if not parts:
            from .modules import zero_module
            return zero_module(group_monoid(self.group))
        return wedge(parts)

    # -- reporting --------------------------------------------------------

    def marks_rows(self) -> List[List[int]]:
        return [list(r) for r in self.marks]

    def to_json(self) -> Dict:
        return {
            "group": self.group.name or "custom",
            "order": self.group.order,
            "classes": list(self.labels),
            "marks": self.marks_rows(),
        }


@lru_cache(maxsize=None)
def build_burnside(group: FiniteGroup) -> BurnsideRing:
    return BurnsideRing(group)


@dataclass(frozen=True)
class BurnsideElement:
    """A virtual sum of subgroup classes with integer coefficients."""

    ring: BurnsideRing = field(compare=False)
    coeffs: Tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self.ring.group == other.ring.group and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.group, self.coeffs))

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._check_ring(other)
        return self.ring.element([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._check_ring(other)
        return self.ring.element([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BurnsideElement":
        return self.ring.element([-a for a in self.coeffs])

    def __mul__(self, other) -> "BurnsideElement":
        if isinstance(other, int):
            return self.ring.element([a * other for a in self.coeffs])
        self._check_ring(other)
        return self.ring.mul(self, other)

    def __rmul__(self, other) -> "BurnsideElement":
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def _check_ring(self, other: "BurnsideElement") -> None:
        if self.ring.group != other.ring.group:
            raise ValueError("elements live in Burnside rings of different groups")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def positive_part(self) -> "BurnsideElement":
        return self.ring.element([max(c, 0) for c in self.coeffs])

    def negative_part(self) -> "BurnsideElement":
        """The effective element subtracted, so self == positive - negative."""
        return self.ring.element([max(-c, 0) for c in self.coeffs])

    def marks(self) -> Tuple[int, ...]:
        return self.ring.marks_of(self)

    def to_json(self) -> Dict:
        return {"basis": list(self.ring.labels), "coeffs": list(self.coeffs)}

    def pretty(self) -> str:
        terms = []
        for c, label in zip(self.coeffs, self.ring.labels):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"[{label}]")
            elif c == -1:
                terms.append(f"-[{label}]")
            else:
                terms.append(f"{c}*[{label}]")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def decompose(module: FiniteModule) -> BurnsideElement:
    """Decompose a module over a group monoid in its Burnside ring."""
    group = module.monoid.group
    if group is None:
        raise ValueError("decomposition needs a module over a group monoid")
    return build_burnside(group).decompose(module)


def marks_of(x: BurnsideElement) -> Tuple[int, ...]:
    return x.marks()


def marks_to_csv(ring: BurnsideRing) -> str:
    lines = ["class," + ",".join(ring.labels)]
    for label, row in zip(ring.labels, ring.marks):
        lines.append(label + "," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
