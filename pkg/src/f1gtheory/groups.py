"""Finite groups as dense Cayley tables: construction, subgroups, quotients.

Elements are 0-based indices into the table.  Every group produced by the
constructors in this module has its identity at index 0.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ResourceLimitError
from .snf import cokernel_invariants

DEFAULT_ORDER_CAP = 1024
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64
SUBGROUP_ENUMERATION_LIMIT = 64
_ASSOCIATIVITY_SAMPLES = 4096


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table."""

    order: int
    cayley: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise ValueError(f"group order must be >= 1, got {n}")
        if len(self.cayley) != n or any(len(row) != n for row in self.cayley):
            raise ValueError("cayley table must be an order x order square")
        for row in self.cayley:
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"cayley entry {v} out of range 0..{n - 1}")
        full = tuple(range(n))
        for i, row in enumerate(self.cayley):
            if tuple(sorted(row)) != full:
                raise ValueError(f"row {i} is not a permutation")
        for j in range(n):
            col = tuple(sorted(self.cayley[i][j] for i in range(n)))
            if col != full:
                raise ValueError(f"column {j} is not a permutation")
        e = self.identity
        if not 0 <= e < n:
            raise ValueError(f"identity index {e} out of range")
        for x in range(n):
            if self.cayley[e][x] != x or self.cayley[x][e] != x:
                raise ValueError(f"index {e} is not a two-sided identity")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length must equal order")
        self._check_associativity()

    def _check_associativity(self) -> None:
        n = self.order
        t = self.cayley
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
            triples: Iterable[Tuple[int, int, int]] = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOCIATIVITY_SAMPLES)
            )
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError(f"associativity fails at ({a}, {b}, {c})")

    @cached_property
    def inverse(self) -> Tuple[int, ...]:
        inv = [0] * self.order
        for a in range(self.order):
            inv[a] = self.cayley[a].index(self.identity)
        return tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.cayley[self.cayley[g][x]][self.inverse[g]]

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != self.identity:
            acc = self.cayley[acc][x]
            k += 1
        return k

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def to_json(self) -> Dict:
        out: Dict = {"order": self.order, "cayley": [list(r) for r in self.cayley]}
        if self.name:
            out["name"] = self.name
        return out


@dataclass(frozen=True)
class Subgroup:
    """A subgroup recorded as a sorted tuple of parent element indices."""

    parent: FiniteGroup
    elements: Tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.parent
        elems = self.elements
        if tuple(sorted(set(elems))) != elems:
            raise ValueError("subgroup elements must be sorted and distinct")
        if g.identity not in elems:
            raise ValueError("subgroup must contain the identity")
        member = set(elems)
        for a in elems:
            if g.inv(a) not in member:
                raise ValueError(f"subgroup not closed under inverse at {a}")
            for b in elems:
                if g.mul(a, b) not in member:
                    raise ValueError(f"subgroup not closed at ({a}, {b})")
        if g.order % len(elems):
            raise ValueError("subgroup order must divide the group order")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elements)


def closure_of(group: FiniteGroup, seed: Iterable[int]) -> Tuple[int, ...]:
    """Smallest subgroup of `group` containing `seed`, as a sorted tuple."""
    members = {group.identity}
    frontier = [group.identity]
    for s in seed:
        if s not in members:
            members.add(s)
            frontier.append(s)
    while frontier:
        x = frontier.pop()
        for y in tuple(members):
            for z in (group.mul(x, y), group.mul(y, x)):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return tuple(sorted(members))


# --- permutation helpers -------------------------------------------------

def parse_cycles(text: str, degree: int) -> Tuple[int, ...]:
    """Parse cycle notation like "(1 2)(3 4)" into a 0-based image tuple.

    Points are written 1-based.  "()" and the empty string denote the
    identity permutation.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    perm = list(range(degree))
    body = text.strip()
    if body in ("", "()"):
        return tuple(perm)
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", body):
        raise ValueError(f"malformed cycle notation: {text!r}")
    moved = set()
    for cyc in re.findall(r"\(([^()]*)\)", body):
        points = [int(p) for p in re.split(r"[\s,]+", cyc.strip()) if p]
        if not points:
            continue
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} outside 1..{degree}")
            if p - 1 in moved:
                raise ValueError(f"point {p} repeated in {text!r}")
            moved.add(p - 1)
        for i, p in enumerate(points):
            perm[p - 1] = points[(i + 1) % len(points)] - 1
    return tuple(perm)


def _compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    # (p * q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def _perm_closure(perms: Sequence[Tuple[int, ...]], degree: int, cap: int) -> List[Tuple[int, ...]]:
    identity = tuple(range(degree))
    seen = {identity}
    order_list = [identity]
    frontier = [identity]
    gens = sorted(set(perms))
    while frontier:
        x = frontier.pop(0)
        for g in gens:
            y = _compose(x, g)
            if y not in seen:
                if len(seen) >= cap:
                    raise ResourceLimitError(
                        f"generated group exceeds order cap {cap}"
                    )
                seen.add(y)
                order_list.append(y)
                frontier.append(y)
    return order_list


def _group_from_perms(perms: Sequence[Tuple[int, ...]], degree: int, cap: int,
                      name: Optional[str] = None,
                      labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    elems = _perm_closure(perms, degree, cap)
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(
        tuple(index[_compose(a, b)] for b in elems) for a in elems
    )
    if labels is None:
        labels = tuple(_cycle_string(p) for p in elems)
    return FiniteGroup(len(elems), table, 0, tuple(labels), name)


def _cycle_string(perm: Tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"


# --- named library -------------------------------------------------------

def _cyclic(n: int) -> FiniteGroup:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple("e" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(n))
    return FiniteGroup(n, table, 0, labels, f"C{n}")


def _dihedral(n: int) -> FiniteGroup:
    # indices 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i
    def mul(a: int, b: int) -> int:
        ra, fa = a % n, a >= n
        rb, fb = b % n, b >= n
        if not fa and not fb:
            return (ra + rb) % n
        if not fa and fb:
            return n + (rb - ra) % n
        if fa and not fb:
            return n + (ra + rb) % n
        return (rb - ra) % n

    size = 2 * n
    table = tuple(tuple(mul(a, b) for b in range(size)) for a in range(size))
    labels = tuple(
        ("e" if i == 0 else f"r^{i}") if i < n else ("s" if i == n else f"sr^{i - n}")
        for i in range(size)
    )
    return FiniteGroup(size, table, 0, labels, f"D{n}")


def _symmetric(n: int, cap: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(1, ((0,),), 0, ("e",), "S1")
    gens = [parse_cycles("(1 2)", n)]
    if n >= 3:
        gens.append(parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n))
    return _group_from_perms(gens, n, cap, name=f"S{n}")


def _alternating4(cap: int) -> FiniteGroup:
    gens = [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 2 3)", 4)]
    return _group_from_perms(gens, 4, cap, name="A4")


def _klein4() -> FiniteGroup:
    table = (
        (0, 1, 2, 3),
        (1, 0, 3, 2),
        (2, 3, 0, 1),
        (3, 2, 1, 0),
    )
    return FiniteGroup(4, table, 0, ("e", "a", "b", "ab"), "V4")


def _quaternion8() -> FiniteGroup:
    # 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    base = {"1": 0, "-1": 1, "i": 2, "-i": 3, "j": 4, "-j": 5, "k": 6, "-k": 7}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def q_mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        pairs = {
            ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
            ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
            ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
        }
        prod = pairs[(a, b)]
        if prod.startswith("-"):
            sign, prod = -sign, prod[1:]
        return prod if sign > 0 else "-" + prod

    table = tuple(
        tuple(base[q_mul(names[a], names[b])] for b in range(8)) for a in range(8)
    )
    return FiniteGroup(8, table, 0, tuple(names), "Q8")


_NAME_RE = re.compile(r"^([A-Za-z])_?(\d+)$")
_LIBRARY_CAPS = {"C": 24, "D": 12, "S": 4}


def library_names() -> List[str]:
    names = [f"C{n}" for n in range(1, 25)]
    names += [f"D{n}" for n in range(1, 13)]
    names += [f"S{n}" for n in range(2, 5)]
    names += ["A4", "V4", "Q8"]
    return names


def _build_named(name: str, cap: int) -> FiniteGroup:
    canon = name.strip()
    upper = canon.upper()
    group = None
    if upper == "A4":
        group = _alternating4(cap)
    elif upper == "V4":
        group = _klein4()
    elif upper == "Q8":
        group = _quaternion8()
    else:
        m = _NAME_RE.match(canon)
        if not m:
            raise ValueError(f"unknown group name {name!r}")
        family, n_str = m.group(1).upper(), m.group(2)
        n = int(n_str)
        if family not in _LIBRARY_CAPS:
            raise ValueError(f"unknown group family {family!r} in {name!r}")
        if n < 1 or n > _LIBRARY_CAPS[family]:
            raise ValueError(
                f"{family}{n} outside the library range (max {family}{_LIBRARY_CAPS[family]})"
            )
        if family == "C":
            group = _cyclic(n)
        elif family == "D":
            group = _dihedral(n)
        else:
            group = _symmetric(n, cap)
    if group.order > cap:
        raise ResourceLimitError(
            f"order {group.order} exceeds cap {cap}")
    return group


def build_group(*, name: Optional[str] = None,
                cayley: Optional[Sequence[Sequence[int]]] = None,
                generators: Optional[Sequence[str]] = None,
                degree: Optional[int] = None,
                labels: Optional[Sequence[str]] = None,
                order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a library name, an explicit table, or generators.

    Exactly one of `name`, `cayley`, `generators` must be given.  Generator
    strings use 1-based cycle notation and require `degree`.  The result of
    generator closure lists the identity at index 0 and the remaining
    elements in breadth-first discovery order.
    """
    sources = [s is not None for s in (name, cayley, generators)]
    if sum(sources) != 1:
        raise ValueError("exactly one of name, cayley, generators is required")
    if name is not None:
        return _build_named(name, order_cap)
    if cayley is not None:
        table = tuple(tuple(int(v) for v in row) for row in cayley)
        order = len(table)
        if order > order_cap:
            raise ResourceLimitError(f"order {order} exceeds cap {order_cap}")
        identity = None
        for e in range(order):
            if all(table[e][x] == x and table[x][e] == x for x in range(order)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no two-sided identity")
        if identity != 0:
            # relabel so the identity sits at index 0; downstream code relies on it
            perm = [identity] + [x for x in range(order) if x != identity]
            pos = {x: i for i, x in enumerate(perm)}
            table = tuple(
                tuple(pos[table[perm[i]][perm[j]]] for j in range(order))
                for i in range(order)
            )
            if labels is not None:
                labels = [labels[p] for p in perm]
        return FiniteGroup(order, table, 0,
                           tuple(labels) if labels is not None else None, None)
    if degree is None:
        raise ValueError("generators require a degree")
    perms = [parse_cycles(s, degree) for s in generators]
    return _group_from_perms(perms, degree, order_cap)


def group_from_json(obj: Dict, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from its JSON object form.

    Accepted shapes: {"name": ...}, {"order": n, "cayley": [[...]]},
    {"generators": ["(1 2)", ...], "degree": n}.
    """
    if not isinstance(obj, dict):
        raise ValueError("group JSON must be an object")
    if "cayley" in obj:
        table = obj["cayley"]
        if "order" in obj and int(obj["order"]) != len(table):
            raise ValueError("declared order disagrees with the table size")
        g = build_group(cayley=table, order_cap=order_cap)
        if obj.get("name"):
            g = FiniteGroup(g.order, g.cayley, g.identity, g.labels, str(obj["name"]))
        return g
    if "generators" in obj:
        return build_group(generators=obj["generators"],
                           degree=int(obj.get("degree", 0)),
                           order_cap=order_cap)
    if "name" in obj:
        return build_group(name=obj["name"], order_cap=order_cap)
    raise ValueError("group JSON needs one of cayley, generators, name")


def load_group(path: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_json(json.load(fh), order_cap=order_cap)


# --- subgroup structure --------------------------------------------------

@lru_cache(maxsize=None)
def all_subgroups(group: FiniteGroup) -> Tuple[Subgroup, ...]:
    """All subgroups, sorted by (order, element tuple).

    Enumeration is by cyclic extension: grow each known subgroup by one
    extra generator until nothing new appears.  Exhaustive only up to order
    64; larger groups are refused rather than silently truncated.
    """
    if group.order > SUBGROUP_ENUMERATION_LIMIT:
        raise ResourceLimitError(
            f"subgroup enumeration supports order <= {SUBGROUP_ENUMERATION_LIMIT}, "
            f"got {group.order}"
        )
    trivial = (group.identity,)
    found = {trivial}
    frontier = [trivial]
    while frontier:
        h = frontier.pop()
        members = set(h)
        for x in range(group.order):
            if x in members:
                continue
            k = closure_of(group, h + (x,))
            if k not in found:
                found.add(k)
                frontier.append(k)
    ordered = sorted(found, key=lambda t: (len(t), t))
    return tuple(Subgroup(group, t) for t in ordered)


@dataclass(frozen=True)
class SubgroupClassification:
    """Conjugacy classes of subgroups in a fixed canonical order.

    Classes are sorted by (subgroup order, least member's element tuple);
    each class lists its members sorted by element tuple, the first member
    being the canonical representative.
    """

    group: FiniteGroup
    classes: Tuple[Tuple[Subgroup, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> Tuple[Subgroup, ...]:
        return tuple(cls[0] for cls in self.classes)

    @cached_property
    def class_of(self) -> Dict[Tuple[int, ...], int]:
        out: Dict[Tuple[int, ...], int] = {}
        for i, cls in enumerate(self.classes):
            for sub in cls:
                out[sub.elements] = i
        return out

    def class_index(self, elements: Iterable[int]) -> int:
        key = tuple(sorted(elements))
        try:
            return self.class_of[key]
        except KeyError:
            raise ValueError(f"{key} is not a subgroup of the classified group") from None


@lru_cache(maxsize=None)
def classify_subgroups(group: FiniteGroup) -> SubgroupClassification:
    subs = all_subgroups(group)
    remaining = {s.elements for s in subs}
    classes: List[Tuple[Subgroup, ...]] = []
    for s in subs:  # ascending canonical order, so reps come out least-first
        if s.elements not in remaining:
            continue
        orbit = set()
        for g in range(group.order):
            orbit.add(tuple(sorted(group.conj(g, x) for x in s.elements)))
        members = sorted(orbit)
        for m in members:
            remaining.discard(m)
        classes.append(tuple(Subgroup(group, m) for m in members))
    classes.sort(key=lambda cls: (cls[0].order, cls[0].elements))
    return SubgroupClassification(group, tuple(classes))


def normalizer(group: FiniteGroup, sub: Subgroup) -> Subgroup:
    target = set(sub.elements)
    members = [
        g for g in range(group.order)
        if {group.conj(g, x) for x in sub.elements} == target
    ]
    return Subgroup(group, tuple(sorted(members)))


def subgroup_as_group(group: FiniteGroup, elements: Sequence[int]) -> Tuple[FiniteGroup, Tuple[int, ...]]:
    """Reindex a subgroup as a standalone group.

    Returns (group, embedding) where embedding[i] is the parent element for
    index i.  Elements are taken in ascending parent order, which keeps the
    parent identity (index 0) at index 0.
    """
    elems = tuple(sorted(elements))
    pos = {x: i for i, x in enumerate(elems)}
    table = tuple(
        tuple(pos[group.mul(a, b)] for b in elems) for a in elems
    )
    labels = tuple(group.label(x) for x in elems)
    sub_group = FiniteGroup(len(elems), table, pos[group.identity], labels, None)
    return sub_group, elems


def quotient_group(group: FiniteGroup, normal_elements: Sequence[int]) -> FiniteGroup:
    """Quotient by a normal subgroup; cosets are labeled by their least element."""
    n_set = tuple(sorted(normal_elements))
    sub = Subgroup(group, n_set)
    for g in range(group.order):
        if tuple(sorted(group.conj(g, x) for x in n_set)) != n_set:
            raise ValueError("subgroup is not normal")
    coset_of: Dict[int, int] = {}
    reps: List[int] = []
    for x in range(group.order):
        if x in coset_of:
            continue
        coset = sorted(group.mul(h, x) for h in sub.elements)
        idx = len(reps)
        reps.append(coset[0])
        for y in coset:
            coset_of[y] = idx
    table = tuple(
        tuple(coset_of[group.mul(reps[i], reps[j])] for j in range(len(reps)))
        for i in range(len(reps))
    )
    labels = tuple(f"[{r}]" for r in reps)
    return FiniteGroup(len(reps), table, 0, labels, None)


def weyl_group(group: FiniteGroup, sub: Subgroup) -> FiniteGroup:
    """N_G(H)/H for a subgroup H, as a standalone group."""
    norm = normalizer(group, sub)
    n_group, embedding = subgroup_as_group(group, norm.elements)
    pos = {x: i for i, x in enumerate(embedding)}
    inner = tuple(sorted(pos[x] for x in sub.elements))
    return quotient_group(n_group, inner)


# --- abelian invariants and isomorphism ----------------------------------

def commutator_subgroup(group: FiniteGroup) -> Tuple[int, ...]:
    gens = set()
    for a in range(group.order):
        for b in range(group.order):
            c = group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b))
            gens.add(c)
    current = closure_of(group, gens)
    while True:
        extra = {group.conj(g, x) for g in range(group.order) for x in current}
        if extra <= set(current):
            return current
        current = closure_of(group, set(current) | extra)


def abelianization(group: FiniteGroup) -> List[int]:
    """Invariant factors of G made abelian, smallest first; [] for perfect or trivial."""
    comm = commutator_subgroup(group)
    q = quotient_group(group, comm)
    rows = []
    for a in range(q.order):
        for b in range(q.order):
            row = [0] * q.order
            row[a] += 1
            row[b] += 1
            row[q.mul(a, b)] -= 1
            rows.append(row)
    free, torsion = cokernel_invariants(rows, q.order)
    if free:
        raise RuntimeError("finite group produced a free abelian quotient")
    return torsion


def _generating_sequence(group: FiniteGroup) -> List[int]:
    gens: List[int] = []
    current = (group.identity,)
    while len(current) < group.order:
        for x in range(group.order):
            if x not in current:
                gens.append(x)
                current = closure_of(group, gens)
                break
    return gens


def find_isomorphism(g1: FiniteGroup, g2: FiniteGroup) -> Optional[Tuple[int, ...]]:
    """An isomorphism g1 -> g2 as an image tuple, or None.

    Backtracking on generator images, pruned by element orders.
    """
    if g1.order != g2.order:
        return None
    orders1 = sorted(g1.element_order(x) for x in range(g1.order))
    orders2 = sorted(g2.element_order(x) for x in range(g2.order))
    if orders1 != orders2:
        return None
    gens = _generating_sequence(g1)
    by_order: Dict[int, List[int]] = {}
    for y in range(g2.order):
        by_order.setdefault(g2.element_order(y), []).append(y)

    def words_map(images: Sequence[int]) -> Optional[Tuple[int, ...]]:
        # grow the partial map as the closure of identity and the generators
        phi: Dict[int, int] = {g1.identity: g2.identity}
        frontier = [g1.identity]
        for g, img in zip(gens, images):
            if phi.get(g, img) != img:
                return None
            if g not in phi:
                phi[g] = img
                frontier.append(g)
        pending = list(phi)
        while pending:
            nxt: List[int] = []
            for x in pending:
                for g, img in zip(gens, images):
                    y = g1.mul(x, g)
                    v = g2.mul(phi[x], img)
                    if y in phi:
                        if phi[y] != v:
                            return None
                    else:
                        phi[y] = v
                        nxt.append(y)
            pending = nxt
        if len(phi) != g1.order:
            return None
        image = [0] * g1.order
        seen = set()
        for x, y in phi.items():
            image[x] = y
            seen.add(y)
        if len(seen) != g1.order:
            return None
        for a in range(g1.order):
            for b in range(g1.order):
                if image[g1.mul(a, b)] != g2.mul(image[a], image[b]):
                    return None
        return tuple(image)

    def backtrack(i: int, chosen: List[int]) -> Optional[Tuple[int, ...]]:
        if i == len(gens):
            return words_map(chosen)
        want = g1.element_order(gens[i])
        for cand in by_order.get(want, ()):
            chosen.append(cand)
            # cheap partial consistency: the chosen images must generate enough
            result = backtrack(i + 1, chosen)
            if result is not None:
                return result
            chosen.pop()
        return None

    return backtrack(0, [])


def is_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> bool:
    return find_isomorphism(g1, g2) is not None


@lru_cache(maxsize=None)
def conjugacy_classes_of_elements(group: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    """Conjugacy classes of elements, each sorted, ordered by least member."""
    seen = set()
    classes = []
    for x in range(group.order):
        if x in seen:
            continue
        orbit = sorted({group.conj(g, x) for g in range(group.order)})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return tuple(classes)
