"""Exact integer matrix reduction for finitely generated abelian groups."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g == a*x + b*y."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(rows: Sequence[Sequence[int]], ncols: int | None = None) -> List[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the full diagonal of length min(nrows, ncols), entries nonnegative
    and satisfying d[i] | d[i+1].  Only the diagonal is produced; the
    transforms are not tracked.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    if ncols is None:
        n = len(a[0]) if a else 0
    else:
        n = ncols
    for r in a:
        if len(r) != n:
            raise ValueError("ragged matrix")
    diag: List[int] = []
    t = 0
    while t < min(m, n):
        # locate a pivot of smallest absolute value in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        while True:
            # clear the pivot column with row operations
            restart = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        # remainder is smaller than the pivot: promote it
                        a[t], a[i] = a[i], a[t]
                        restart = True
                        break
            if restart:
                continue
            # clear the pivot row with column operations
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        restart = True
                        break
            if restart:
                continue
            # enforce divisibility of the remaining block by the pivot
            witness = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            for j in range(t, n):
                a[t][j] += a[witness][j]
        diag.append(abs(a[t][t]))
        t += 1
    while len(diag) < min(m, n):
        diag.append(0)
    return diag


def cokernel_invariants(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[int, List[int]]:
    """Free rank and invariant factors of Z^ncols modulo the row span.

    The torsion list keeps only factors > 1, in divisibility order.
    """
    if not rows:
        return ncols, []
    diag = smith_normal_form(rows, ncols)
    nonzero = [d for d in diag if d]
    free = ncols - len(nonzero)
    torsion = [d for d in nonzero if d > 1]
    return free, torsion


def cokernel_invariants_sparse(rows: Sequence[Dict[int, int]], ncols: int) -> Tuple[int, List[int]]:
    """Like cokernel_invariants for rows given as {column: coefficient} dicts.

    Unit-pivot elimination first: a +-1 pivot lets the row and column be
    removed without changing the cokernel, which keeps large but shallow
    relation systems cheap.  Whatever remains is handed to the dense routine.
    """
    live: Dict[int, Dict[int, int]] = {}
    col_rows: Dict[int, set] = {}
    for idx, row in enumerate(rows):
        cleaned = {c: v for c, v in row.items() if v}
        if not cleaned:
            continue
        live[idx] = cleaned
        for c in cleaned:
            col_rows.setdefault(c, set()).add(idx)
    dead_cols: set = set()
    unit_rank = 0
    while True:
        pivot = None
        for rid in sorted(live):
            row = live[rid]
            units = [c for c, v in row.items() if abs(v) == 1]
            if units:
                pivot = (rid, min(units))
                break
        if pivot is None:
            break
        rid, c = pivot
        prow = live[rid]
        val = prow[c]
        for other in sorted(col_rows.get(c, ()) - {rid}):
            orow = live.get(other)
            if orow is None or c not in orow:
                continue
            factor = orow[c] * val  # val in {1, -1}
            for pc, pv in prow.items():
                nv = orow.get(pc, 0) - factor * pv
                if nv:
                    orow[pc] = nv
                    col_rows.setdefault(pc, set()).add(other)
                else:
                    orow.pop(pc, None)
                    col_rows.get(pc, set()).discard(other)
            if not orow:
                del live[other]
        for pc in prow:
            col_rows.get(pc, set()).discard(rid)
        del live[rid]
        dead_cols.add(c)
        unit_rank += 1
    if live:
        remaining = sorted(set(range(ncols)) - dead_cols)
        colmap = {c: i for i, c in enumerate(remaining)}
        dense = []
        for rid in sorted(live):
            row = [0] * len(remaining)
            for c, v in live[rid].items():
                row[colmap[c]] = v
            dense.append(row)
        free, torsion = cokernel_invariants(dense, len(remaining))
    else:
        free, torsion = ncols - unit_rank, []
    return free, torsion


def factorize(n: int) -> Dict[int, int]:
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def merge_cyclic_factors(orders: Sequence[int]) -> List[int]:
    """Invariant factors of a direct sum of cyclic groups Z/d, d in orders.

    Returns the divisibility chain d1 | d2 | ... with every entry > 1.
    """
    primary: Dict[int, List[int]] = {}
    for d in orders:
        if d < 1:
            raise ValueError(f"cyclic order must be positive, got {d}")
        for p, e in factorize(d).items():
            primary.setdefault(p, []).append(e)
    depth = max((len(v) for v in primary.values()), default=0)
    factors = []
    for slot in range(depth):
        f = 1
        for p, exps in primary.items():
            exps_sorted = sorted(exps, reverse=True)
            if slot < len(exps_sorted):
                f *= p ** exps_sorted[slot]
        factors.append(f)
    return sorted(factors)
