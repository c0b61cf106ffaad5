"""Exact rank of integer matrices over the rationals.

Sparse elimination that pivots on +-1 entries for as long as possible
(keeps everything integral, which suits boundary matrices well), with a
dense fraction-free Bareiss pass on whatever small core remains.  Row
scaling by the row gcd keeps entries from blowing up; rank is invariant
under it.
"""

from math import gcd


def bareiss_rank(rows):
    """Rank of a dense integer matrix (list of lists), fraction-free."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f == 0 and prev == 1:
                continue
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                row_i[j] = (row_i[j] * p - f * row_r[j]) // prev
        prev = p
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _row_gcd_reduce(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def sparse_rank(columns):
    """Rank of a sparse integer matrix given as columns: dicts row->value."""
    # store by rows for elimination
    rows = {}
    for c, col in enumerate(columns):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
    rows = list(rows.values())
    col_index = {}
    for ri, row in enumerate(rows):
        for c in row:
            col_index.setdefault(c, set()).add(ri)

    active = set(range(len(rows)))
    rank = 0
    while True:
        # choose a +-1 pivot with a cheap Markowitz-style fill estimate
        best = None
        best_cost = None
        for ri in active:
            row = rows[ri]
            rlen = len(row)
            for c, v in row.items():
                if v == 1 or v == -1:
                    cost = (rlen - 1) * (len(col_index[c]) - 1)
                    if best_cost is None or cost < best_cost:
                        best, best_cost = (ri, c), cost
                        if cost == 0:
                            break
            if best_cost == 0:
                break
        if best is None:
            break
        ri, c = best
        pivot_row = rows[ri]
        pv = pivot_row[c]
        active.discard(ri)
        rank += 1
        for rj in list(col_index[c]):
            if rj == ri or rj not in active:
                continue
            row = rows[rj]
            f = row[c] * pv  # pv is +-1, so f/pv = f*pv
            for pc, pvv in pivot_row.items():
                nv = row.get(pc, 0) - f * pvv
                if nv:
                    if pc not in row:
                        col_index.setdefault(pc, set()).add(rj)
                    row[pc] = nv
                else:
                    if pc in row:
                        del row[pc]
                        col_index[pc].discard(rj)
            if not row:
                active.discard(rj)
            else:
                _row_gcd_reduce(row)
        for pc in pivot_row:
            col_index[pc].discard(ri)

    # dense fallback on the residue (no +-1 entries left)
    residue = [rows[ri] for ri in active if rows[ri]]
    if residue:
        cols = sorted({c for row in residue for c in row})
        remap = {c: j for j, c in enumerate(cols)}
        dense = [[0] * len(cols) for _ in residue]
        for i, row in enumerate(residue):
            for c, v in row.items():
                dense[i][remap[c]] = v
        rank += bareiss_rank(dense)
    return rank
