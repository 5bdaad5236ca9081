# linalg.py - exact sparse Gaussian elimination
#
# Rows are dicts {column: scalar}. Scalars are any exact field elements with
# + - * / and truthiness (CycNumber, Fraction, QSqrt2).
from typing import Dict, Iterable, List, Optional

from .scalars import ONE, DomainError

Row = Dict[int, object]


def _axpy(row: Row, factor, other: Row) -> Row:
    """row - factor * other, dropping zeros."""
    out = dict(row)
    for c, v in other.items():
        nv = out.get(c, 0) - factor * v if c in out else -(factor * v)
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def rref(rows: Iterable[Row]) -> Dict[int, Row]:
    """Fully reduced echelon form as {pivot column: row with 1 at the pivot}."""
    pivots: Dict[int, Row] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        for pc in [c for c in row if c in pivots]:
            f = row.get(pc)
            if f:
                row = _axpy(row, f, pivots[pc])
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for pc, prow in list(pivots.items()):
            f = prow.get(p)
            if f:
                pivots[pc] = _axpy(prow, f, row)
        pivots[p] = row
    return pivots


def rank(rows: Iterable[Row]) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable[Row], ncols: int, one=ONE) -> List[Row]:
    """Basis of {x : M x = 0}, one vector per free column (that entry set to one)."""
    piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        vec = {f: one}
        for p, prow in piv.items():
            v = prow.get(f)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


def solve_columns(rows: List[Row], rhs_columns: List[Row], ncols: int) -> Optional[List[Row]]:
    """Solve M x_t = b_t for every right-hand side; None if any system is inconsistent.

    rows are the rows of M (indexed by row number), each b_t is a sparse column {row: value}.
    """
    aug = [dict(r) for r in rows]
    for t, col in enumerate(rhs_columns):
        for r, v in col.items():
            if r >= len(aug):
                raise DomainError(f"right-hand side row {r} outside a {len(aug)}-row system")
            if v:
                aug[r][ncols + t] = v
    piv = rref(aug)
    if any(p >= ncols for p in piv):
        return None
    out = []
    for t in range(len(rhs_columns)):
        sol = {}
        for p, prow in piv.items():
            v = prow.get(ncols + t)
            if v:
                sol[p] = v
        out.append(sol)
    return out


def solve(rows: List[Row], rhs: Row, ncols: int) -> Optional[Row]:
    res = solve_columns(rows, [rhs], ncols)
    return None if res is None else res[0]


def inverse(rows: List[Row], n: int, one=ONE) -> List[Row]:
    """Gauss-Jordan on [M | I]; rows of the inverse. Raises DomainError if M is singular."""
    aug = []
    for r in range(n):
        row = {c: v for c, v in (rows[r] if r < len(rows) else {}).items() if v}
        row[n + r] = one
        aug.append(row)
    piv = rref(aug)
    if sorted(p for p in piv if p < n) != list(range(n)):
        raise DomainError("matrix is singular")
    return [{c - n: v for c, v in piv[r].items() if c >= n} for r in range(n)]


def components(vectors: List[Row]) -> List[List[int]]:
    """Indices of vectors grouped into classes connected through shared coordinates."""
    parent = list(range(len(vectors)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: Dict = {}
    for k, vec in enumerate(vectors):
        for coord in vec:
            if coord in owner:
                ra, rb = find(owner[coord]), find(k)
                if ra != rb:
                    parent[ra] = rb
            else:
                owner[coord] = k
    groups: Dict[int, List[int]] = {}
    for k in range(len(vectors)):
        groups.setdefault(find(k), []).append(k)
    return list(groups.values())


def block_rank(vectors: List[Row]) -> int:
    """Rank of a family of sparse vectors; classes with disjoint supports are ranked separately."""
    return sum(rank([vectors[k] for k in comp]) for comp in components(vectors))
