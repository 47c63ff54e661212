"""Universal polynomials for the lambda-ring product and composition rules.

P_k rewrites e_k of the pairwise products x_i y_j in the elementary symmetric
polynomials of each variable family; P_{k,l} rewrites e_k of the l-fold
products of one family.  Both are computed symbolically by leading-term
elimination over exact integers and verified by integer specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InternalCheckError

__all__ = ["UniversalPolynomial", "universal_polynomial", "MAX_PRODUCT_K",
           "MAX_COMPOSITION_K", "MAX_COMPOSITION_L"]

MAX_PRODUCT_K = 4
MAX_COMPOSITION_K = 4
MAX_COMPOSITION_L = 3

# A polynomial is a dict from exponent tuples to nonzero int coefficients.
Poly = Dict[Tuple[int, ...], int]


def _p_const(nvars: int, c: int) -> Poly:
    return {(0,) * nvars: c} if c else {}


def _p_monomial(nvars: int, exps: Sequence[int], c: int = 1) -> Poly:
    return {tuple(exps): c} if c else {}


def _p_add_into(acc: Poly, other: Poly, scale: int = 1) -> None:
    for mono, c in other.items():
        v = acc.get(mono, 0) + c * scale
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)


def _p_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(mono, 0) + ca * cb
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def _elementary_of(items: Sequence[Poly], k: int, nvars: int) -> Poly:
    """e_k of a list of polynomials, by the one-item-at-a-time recurrence."""
    e: List[Poly] = [_p_const(nvars, 1)] + [{} for _ in range(k)]
    for item in items:
        for j in range(k, 0, -1):
            _p_add_into(e[j], _p_mul(e[j - 1], item))
    return e[k]


def _elementary_basis(nvars: int, block: Sequence[int], upto: int) -> List[Poly]:
    """e_1..e_upto of the plain variables in one block; index 0 holds 1."""
    items = [_p_monomial(nvars, [1 if v == i else 0 for v in range(nvars)])
             for i in block]
    e: List[Poly] = [_p_const(nvars, 1)] + [{} for _ in range(upto)]
    for item in items:
        for j in range(upto, 0, -1):
            _p_add_into(e[j], _p_mul(e[j - 1], item))
    return e


def _express_in_elementary(p: Poly, nvars: int,
                           blocks: Sequence[Sequence[int]]) -> Dict[Tuple[Tuple[int, ...], ...], int]:
    """Rewrite a per-block-symmetric polynomial in elementary symmetric terms.

    Result keys are one exponent tuple per block, position i holding the
    exponent of e_{i+1} of that block's variables.
    """
    bases = [_elementary_basis(nvars, b, len(b)) for b in blocks]
    work: Poly = dict(p)
    result: Dict[Tuple[Tuple[int, ...], ...], int] = {}
    while work:
        lead = max(work)
        coeff = work[lead]
        key_parts: List[Tuple[int, ...]] = []
        for b in blocks:
            exps = [lead[v] for v in b]
            for i in range(len(exps) - 1):
                if exps[i] < exps[i + 1]:
                    raise InternalCheckError("leading term violates per-block symmetry")
            key_parts.append(tuple(
                exps[i] - (exps[i + 1] if i + 1 < len(exps) else 0)
                for i in range(len(exps))
            ))
        key = tuple(key_parts)
        term = _p_const(nvars, 1)
        for base, degs in zip(bases, key_parts):
            for i, d in enumerate(degs):
                for _ in range(d):
                    term = _p_mul(term, base[i + 1])
        _p_add_into(work, term, -coeff)
        if max(work, default=None) == lead:
            raise InternalCheckError("leading-term elimination failed to make progress")
        result[key] = result.get(key, 0) + coeff
    return {k: v for k, v in result.items() if v}


def _eval_poly_at_ints(p: Poly, values: Sequence[int]) -> int:
    total = 0
    for mono, c in p.items():
        v = c
        for e, x in zip(mono, values):
            v *= x ** e
        total += v
    return total


def _elementary_values(values: Sequence[int]) -> List[int]:
    e = [1] + [0] * len(values)
    for x in values:
        for j in range(len(values), 0, -1):
            e[j] += e[j - 1] * x
    return e


@dataclass(frozen=True)
class UniversalPolynomial:
    """An integer polynomial in formal lambda values.

    Product kind: terms are keyed by a pair of exponent tuples, one for the
    operations applied to x and one for y.  Composition kind: a single tuple
    for x.  Position i of a tuple holds the exponent of the (i+1)-st
    operation.
    """

    kind: str
    k: int
    l: Optional[int]
    terms: Tuple[Tuple[Tuple[Tuple[int, ...], ...], int], ...]

    def evaluate(self, ring, lam_x: Sequence, lam_y: Optional[Sequence] = None):
        """Substitute ring elements; lam[i] must hold the i-th operation's value."""
        families = [lam_x] if self.kind == "composition" else [lam_x, lam_y]
        if self.kind == "product" and lam_y is None:
            raise ValueError("the product rule needs lambda values for both arguments")
        total = ring.zero()
        for key, coeff in self.terms:
            term = ring.one()
            for fam, degs in zip(families, key):
                for i, d in enumerate(degs):
                    for _ in range(d):
                        term = term * fam[i + 1]
            total = total + term * coeff
        return total

    def pretty(self) -> str:
        names = ["x"] if self.kind == "composition" else ["x", "y"]
        chunks = []
        for key, coeff in self.terms:
            factors = []
            for name, degs in zip(names, key):
                for i, d in enumerate(degs):
                    if d == 0:
                        continue
                    f = f"L{i + 1}({name})"
                    factors.append(f if d == 1 else f + f"^{d}")
            body = "*".join(factors) if factors else "1"
            if coeff == 1:
                chunks.append(body)
            elif coeff == -1:
                chunks.append(f"-{body}")
            else:
                chunks.append(f"{coeff}*{body}")
        out = chunks[0]
        for ch in chunks[1:]:
            out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
        return out


def _verify_by_specialization(kind: str, k: int, l: Optional[int], nvars: int,
                              blocks: Sequence[Sequence[int]], target: Poly,
                              terms: Dict[Tuple[Tuple[int, ...], ...], int]) -> None:
    # a few fixed integer points; enough to catch any wiring slip
    samples = [
        [i + 2 for i in range(nvars)],
        [(i % 3) + 1 for i in range(nvars)],
        [((7 * i + 3) % 5) + 1 for i in range(nvars)],
    ]
    for values in samples:
        direct = _eval_poly_at_ints(target, values)
        evalues = [_elementary_values([values[v] for v in b]) for b in blocks]
        total = 0
        for key, coeff in terms.items():
            v = coeff
            for e_vals, degs in zip(evalues, key):
                for i, d in enumerate(degs):
                    v *= e_vals[i + 1] ** d
            total += v
        if total != direct:
            raise InternalCheckError("elementary-symmetric rewrite fails specialization")


@lru_cache(maxsize=None)
def universal_polynomial(kind: str, k: int, l: Optional[int] = None) -> UniversalPolynomial:
    """The product rule P_k or the composition rule P_{k,l}."""
    if kind == "product":
        if l is not None:
            raise ValueError("the product rule takes no second index")
        if not 1 <= k <= MAX_PRODUCT_K:
            raise ValueError(f"product rule supports 1 <= k <= {MAX_PRODUCT_K}")
        nvars = 2 * k
        blocks = [list(range(k)), list(range(k, 2 * k))]
        items = []
        for i in range(k):
            for j in range(k):
                exps = [0] * nvars
                exps[i] = 1
                exps[k + j] = 1
                items.append(_p_monomial(nvars, exps))
    elif kind == "composition":
        if l is None:
            raise ValueError("the composition rule needs both indices")
        if not 1 <= k <= MAX_COMPOSITION_K or not 1 <= l <= MAX_COMPOSITION_L:
            raise ValueError(
                f"composition rule supports k <= {MAX_COMPOSITION_K}, l <= {MAX_COMPOSITION_L}")
        nvars = k * l
        blocks = [list(range(nvars))]
        items = []
        for subset in combinations(range(nvars), l):
            exps = [0] * nvars
            for v in subset:
                exps[v] = 1
            items.append(_p_monomial(nvars, exps))
    else:
        raise ValueError(f"unknown polynomial kind {kind!r}")

    target = _elementary_of(items, k, nvars)
    terms = _express_in_elementary(target, nvars, blocks)
    _verify_by_specialization(kind, k, l, nvars, blocks, target, terms)
    ordered = tuple(sorted(terms.items()))
    return UniversalPolynomial(kind, k, l, ordered)
