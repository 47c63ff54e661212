"""Lambda operations on Burnside rings via unordered subset modules.

The k-th operation sends an effective class to the decomposition of the
module of k-element subsets of any realization; virtual classes go through
truncated multiplicative series.  The diamond module of ordered distinct
tuples is the combinatorial engine behind the subset construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .burnside import BurnsideElement, BurnsideRing
from .errors import InternalCheckError
from .modules import FiniteModule, ModuleHom, submodule_inclusion, zero_module
from .polynomials import universal_polynomial
from .reports import CheckReport

__all__ = [
    "diamond", "diamond_filtered", "subset_module", "lambda_k",
    "lambda_series", "TruncatedSeries", "verify_pre_lambda",
    "verify_lambda_ring",
]


def _distinct_tuples(size: int, k: int) -> List[Tuple[int, ...]]:
    """Ordered k-tuples of distinct indices from 1..size-1, lexicographic."""
    tuples: List[Tuple[int, ...]] = []

    def grow(prefix: Tuple[int, ...]) -> None:
        if len(prefix) == k:
            tuples.append(prefix)
            return
        for x in range(1, size):
            if x not in prefix:
                grow(prefix + (x,))

    grow(())
    return tuples


def diamond(s: FiniteModule, k: int) -> FiniteModule:
    """Ordered k-tuples of distinct nonzero elements with the diagonal action."""
    if not s.monoid.is_group_monoid:
        raise ValueError("the diamond construction needs a group monoid")
    if k <= 0:
        raise ValueError("diamond needs k >= 1")
    n = s.size - 1
    if k > n:
        return zero_module(s.monoid)
    tuples = _distinct_tuples(s.size, k)
    index = {t: 1 + i for i, t in enumerate(tuples)}
    action = [[0] * s.monoid.size]
    for t in tuples:
        row = [0]
        for m in range(1, s.monoid.size):
            image = tuple(s.action[x][m] for x in t)
            if 0 in image or len(set(image)) < k:
                row.append(0)
            else:
                row.append(index[image])
        action.append(row)
    return FiniteModule(s.monoid, 1 + len(tuples), tuple(tuple(r) for r in action))


def diamond_filtered(chain: Sequence[ModuleHom]) -> FiniteModule:
    """The submodule of diamond(S_k, k) of tuples compatible with a chain.

    `chain` holds the k-1 cofibrations of a string of k modules; the i-th
    tuple coordinate is constrained to the composite image of the i-th
    module in the last one.
    """
    from .modules import is_cofibration
    if not chain:
        raise ValueError("diamond_filtered needs at least one chain map")
    k = len(chain) + 1
    for i, f in enumerate(chain):
        ok, _ = is_cofibration(f)
        if not ok:
            raise ValueError(f"chain step {i} is not a cofibration")
        if i + 1 < len(chain) and f.target != chain[i + 1].source:
            raise ValueError(f"chain steps {i} and {i + 1} do not compose")
    top = chain[-1].target
    images: List[set] = []
    for i in range(k - 1):
        img = set(range(chain[i].source.size))
        for f in chain[i:]:
            img = {f.map[x] for x in img}
        images.append(img - {0})
    images.append(set(range(1, top.size)))
    full = diamond(top, k)
    if full.size == 1:
        return full
    tuples = _distinct_tuples(top.size, k)
    members = [
        1 + i for i, t in enumerate(tuples)
        if all(x in images[j] for j, x in enumerate(t))
    ]
    if not members:
        return zero_module(top.monoid)
    incl = submodule_inclusion(full, members)
    return incl.source


def subset_module(s: FiniteModule, k: int) -> FiniteModule:
    """Unordered k-subsets of nonzero elements; subsets that collapse die."""
    if k <= 0:
        raise ValueError("subset module needs k >= 1")
    subsets = [tuple(c) for c in combinations(range(1, s.size), k)]
    index = {c: 1 + i for i, c in enumerate(subsets)}
    action = [[0] * s.monoid.size]
    for c in subsets:
        row = [0]
        for m in range(1, s.monoid.size):
            image = {s.action[x][m] for x in c}
            if 0 in image or len(image) < k:
                row.append(0)
            else:
                row.append(index[tuple(sorted(image))])
        action.append(row)
    return FiniteModule(s.monoid, 1 + len(subsets), tuple(tuple(r) for r in action))


def _subset_decompose(ring: BurnsideRing, s: FiniteModule, k: int) -> BurnsideElement:
    """Decompose the k-subset module of a module over a group monoid directly.

    Group actions permute nonzero elements, so subsets never collapse and the
    orbit walk can run on subset tuples without materializing the module.
    """
    group = ring.group
    coeffs = [0] * ring.rank
    seen: set = set()
    for c in combinations(range(1, s.size), k):
        if c in seen:
            continue
        orbit = set()
        stack = [c]
        while stack:
            cur = stack.pop()
            if cur in orbit:
                continue
            orbit.add(cur)
            for g in range(group.order):
                nxt = tuple(sorted(s.action[x][g + 1] for x in cur))
                if nxt not in orbit:
                    stack.append(nxt)
        seen |= orbit
        stab = tuple(g for g in range(group.order)
                     if tuple(sorted(s.action[x][g + 1] for x in c)) == c)
        coeffs[ring.classification.class_index(stab)] += 1
    return ring.element(coeffs)


def lambda_k(ring: BurnsideRing, x: BurnsideElement, k: int) -> BurnsideElement:
    """The k-th subset operation, extended to virtual classes by series."""
    if k < 0:
        raise ValueError("lambda needs k >= 0")
    if k == 0:
        return ring.one()
    if k == 1:
        return x
    if x.is_effective:
        realization = ring.realize(x)
        return _subset_decompose(ring, realization, k)
    return lambda_series(ring, x, k).coeffs[k]


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series over a Burnside ring, kept exactly up to a degree cap."""

    ring: BurnsideRing
    cap: int
    coeffs: Tuple[BurnsideElement, ...]

    def __post_init__(self) -> None:
        if self.cap < 0 or len(self.coeffs) != self.cap + 1:
            raise ValueError("series needs cap + 1 coefficients")

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.cap != other.cap:
            raise ValueError("series caps must agree")
        out = []
        for n in range(self.cap + 1):
            acc = self.ring.zero()
            for i in range(n + 1):
                acc = acc + self.ring.mul(self.coeffs[i], other.coeffs[n - i])
            out.append(acc)
        return TruncatedSeries(self.ring, self.cap, tuple(out))

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] != self.ring.one():
            raise ValueError("series inversion needs constant coefficient 1")
        inv = [self.ring.one()]
        for n in range(1, self.cap + 1):
            acc = self.ring.zero()
            for i in range(1, n + 1):
                acc = acc + self.ring.mul(self.coeffs[i], inv[n - i])
            inv.append(self.ring.zero() - acc)
        return TruncatedSeries(self.ring, self.cap, tuple(inv))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.cap, self.coeffs))


def _basis_series(ring: BurnsideRing, i: int, cap: int) -> TruncatedSeries:
    """Geometric series of a single basis class, from its coset module."""
    key = ("basis", i, cap)
    cached = ring._series_cache.get(key)
    if cached is not None:
        return cached
    module = ring.cosets[i]
    coeffs = [ring.one()]
    for k in range(1, cap + 1):
        if k > module.size - 1:
            coeffs.append(ring.zero())
        else:
            coeffs.append(_subset_decompose(ring, module, k))
    series = TruncatedSeries(ring, cap, tuple(coeffs))
    ring._series_cache[key] = series
    return series


def _effective_series(ring: BurnsideRing, x: BurnsideElement, cap: int) -> TruncatedSeries:
    """Series of an effective class as a product of basis class series.

    Splitting along the basis keeps large multiplicities cheap; the addition
    theorem behind the splitting is checked independently against the direct
    subset computation.
    """
    key = (x.coeffs, cap)
    cached = ring._series_cache.get(key)
    if cached is not None:
        return cached
    one = ring.one()
    series = TruncatedSeries(ring, cap,
                             (one,) + (ring.zero(),) * cap)
    for i, c in enumerate(x.coeffs):
        if c < 0:
            raise ValueError("effective series needs nonnegative coefficients")
        base = _basis_series(ring, i, cap)
        for _ in range(c):
            series = series.mul(base)
    ring._series_cache[key] = series
    return series


def lambda_series(ring: BurnsideRing, x: BurnsideElement, cap: int) -> TruncatedSeries:
    """The generating series of the operations applied to x, up to the cap."""
    if cap < 0:
        raise ValueError("series cap must be >= 0")
    pos = x.positive_part()
    neg = x.negative_part()
    if neg.is_zero:
        return _effective_series(ring, pos, cap)
    series = _effective_series(ring, pos, cap).mul(
        _effective_series(ring, neg, cap).inverse())
    return series


def _geometric_values(ring: BurnsideRing, x: BurnsideElement,
                      cap: int) -> List[BurnsideElement]:
    """Operations 0..cap computed directly on subsets of one realization."""
    realization = ring.realize(x)
    values = [ring.one()]
    for k in range(1, cap + 1):
        if k > realization.size - 1:
            values.append(ring.zero())
        else:
            values.append(_subset_decompose(ring, realization, k))
    return values


def verify_pre_lambda(ring: BurnsideRing, cap: int, trials: int,
                      rng: Optional[random.Random] = None) -> CheckReport:
    """Check the unit, identity, and addition axioms on random effective pairs.

    The left side of the addition axiom is computed on subsets of an actual
    realization of x + y, so the check is independent of the multiplicative
    construction used for series of virtual classes.
    """
    from .sampling import random_effective
    rng = rng or random.Random(0)
    report = CheckReport("pre-lambda axioms")
    for _ in range(trials):
        x = random_effective(ring, rng, max_size=8)
        y = random_effective(ring, rng, max_size=8)
        gx = _geometric_values(ring, x, cap)
        gy = _geometric_values(ring, y, cap)
        gxy = _geometric_values(ring, x + y, cap)
        ok0 = gx[0] == ring.one()
        ok1 = cap < 1 or gx[1] == x
        okadd = all(
            gxy[k] == sum((ring.mul(gx[i], gy[k - i]) for i in range(k + 1)),
                          ring.zero())
            for k in range(cap + 1))
        report.record(ok0 and ok1 and okadd, {
            "x": list(x.coeffs), "y": list(y.coeffs),
            "unit": ok0, "identity": ok1, "addition": okadd,
        })
    return report


def verify_lambda_ring(ring: BurnsideRing, k_cap: int, l_cap: int, trials: int,
                       rng: Optional[random.Random] = None) -> List[CheckReport]:
    """Evaluate the three ring-axiom families; failures are reported, not raised.

    Families: vanishing on the unit, the product rule against P_k, and the
    composition rule against P_{k,l}.
    """
    from .sampling import random_element
    rng = rng or random.Random(0)
    unit_report = CheckReport("lambda of the unit vanishes")
    product_report = CheckReport("product rule")
    composition_report = CheckReport("composition rule")

    for k in range(2, k_cap + 1):
        value = lambda_k(ring, ring.one(), k)
        unit_report.record(value.is_zero, {"k": k, "value": list(value.coeffs)})

    for _ in range(trials):
        x = random_element(ring, rng)
        y = random_element(ring, rng)
        lam_x = lambda_series(ring, x, k_cap).coeffs
        lam_y = lambda_series(ring, y, k_cap).coeffs
        lam_xy = lambda_series(ring, x * y, k_cap).coeffs
        for k in range(2, k_cap + 1):
            lhs = lam_xy[k]
            rhs = universal_polynomial("product", k).evaluate(ring, lam_x, lam_y)
            product_report.record(lhs == rhs, {
                "k": k, "x": list(x.coeffs), "y": list(y.coeffs),
                "lhs": list(lhs.coeffs), "rhs": list(rhs.coeffs),
            })
        for l in range(2, l_cap + 1):
            lam_deep = lambda_series(ring, x, k_cap * l).coeffs
            inner = lam_deep[l]
            lam_inner = lambda_series(ring, inner, k_cap).coeffs
            for k in range(2, k_cap + 1):
                lhs = lam_inner[k]
                rhs = universal_polynomial("composition", k, l).evaluate(ring, lam_deep)
                composition_report.record(lhs == rhs, {
                    "k": k, "l": l, "x": list(x.coeffs),
                    "lhs": list(lhs.coeffs), "rhs": list(rhs.coeffs),
                })
    return [unit_report, product_report, composition_report]
