from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import sympy

from src.errors import DomainError
from src.symfun.partitions import Partition, SchurVector, partitions_of


def lr_coefficient(outer: Partition, inner: Partition, content: Partition) -> int:
    """Number of LR tableaux of skew shape outer/inner with the given content."""
    if outer.size != inner.size + content.size or not outer.contains(inner):
        return 0
    return _lr_count(outer.parts, inner.parts, content.parts)


@lru_cache(maxsize=None)
def _lr_count(outer: Tuple[int, ...], inner: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if outer == inner else 0
    inner = inner + (0,) * (len(outer) - len(inner))
    # reading order: rows top to bottom, each row right to left
    cells = [(i, j) for i in range(len(outer)) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * len(content)

    def place(index: int) -> int:
        if index == len(cells):
            return 1
        i, j = cells[index]
        upper = len(content)
        right = filling.get((i, j + 1))
        if right is not None:
            upper = min(upper, right)
        lower = 1
        above = filling.get((i - 1, j))
        if above is not None:
            lower = above + 1
        total = 0
        for v in range(lower, upper + 1):
            k = v - 1
            if counts[k] >= content[k]:
                continue
            if k > 0 and counts[k] + 1 > counts[k - 1]:
                continue
            counts[k] += 1
            filling[(i, j)] = v
            total += place(index + 1)
            del filling[(i, j)]
            counts[k] -= 1
        return total

    return place(0)


def schur_product(a: SchurVector, b: SchurVector, rows: Optional[int] = None,
                  cols: Optional[int] = None) -> SchurVector:
    terms: Dict[Partition, int] = {}
    for mu, cmu in a.items():
        for nu, cnu in b.items():
            for lam, c in _product_terms(mu, nu, rows, cols):
                terms[lam] = terms.get(lam, 0) + c * cmu * cnu
    return SchurVector(terms)


@lru_cache(maxsize=None)
def _product_terms(mu: Partition, nu: Partition, rows: Optional[int],
                   cols: Optional[int]) -> Tuple[Tuple[Partition, int], ...]:
    out = []
    n = mu.size + nu.size
    max_length = mu.length + nu.length if rows is None else min(rows, mu.length + nu.length)
    max_part = mu[0] + nu[0] if cols is None else min(cols, mu[0] + nu[0])
    for lam in partitions_of(n, max_length=max_length, max_part=max_part):
        if not lam.contains(mu) or not lam.contains(nu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def vertical_strips(partition: Partition, size: int, rows: int, cols: int) -> List[Partition]:
    """Partitions obtained by adding a vertical strip of `size` boxes inside the box."""
    padded = list(partition.padded(rows)) if partition.length <= rows else None
    if padded is None:
        return []
    out = []

    def extend(i: int, remaining: int, current: List[int]):
        if i == rows:
            if remaining == 0:
                out.append(Partition(tuple(current)))
            return
        for add in (0, 1):
            if add > remaining:
                continue
            value = padded[i] + add
            if value > cols:
                continue
            if i > 0 and value > current[i - 1]:
                continue
            extend(i + 1, remaining - add, current + [value])

    extend(0, size, [])
    return out


@lru_cache(maxsize=None)
def column_class_integral(exponents: Tuple[int, ...], rows: int, cols: int) -> int:
    """Degree of prod_i s_(1^i)^exponents[i-1] in the rows x cols Schubert box."""
    state: Dict[Partition, int] = {Partition(): 1}
    for i, e in enumerate(exponents, start=1):
        for _ in range(e):
            nxt: Dict[Partition, int] = {}
            for lam, c in state.items():
                for mu in vertical_strips(lam, i, rows, cols):
                    nxt[mu] = nxt.get(mu, 0) + c
            state = nxt
            if not state:
                return 0
    return state.get(Partition((cols,) * rows), 0)


_E_SYMBOLS: Dict[int, Tuple[sympy.Symbol, ...]] = {}


def elementary_symbols(n: int) -> Tuple[sympy.Symbol, ...]:
    if n not in _E_SYMBOLS:
        _E_SYMBOLS[n] = sympy.symbols(f"e1:{n + 1}") if n > 0 else ()
    return _E_SYMBOLS[n]


def schur_in_elementary(partition: Partition, n: int) -> sympy.Expr:
    """Dual Jacobi-Trudi determinant in the symbols e1..en (e_i = 0 for i > n)."""
    if partition.size == 0:
        return sympy.Integer(1)
    symbols = elementary_symbols(n)
    conj = partition.conjugate()
    size = conj.length

    def e(i: int):
        if i == 0:
            return sympy.Integer(1)
        if i < 0 or i > n:
            return sympy.Integer(0)
        return symbols[i - 1]

    matrix = sympy.Matrix(size, size, lambda i, j: e(conj[i] - i + j))
    return sympy.expand(matrix.det(method='berkowitz'))


def to_schur_basis(expr: sympy.Expr, n: int) -> SchurVector:
    """Expand a homogeneous polynomial in e1..en in the Schur basis."""
    symbols = elementary_symbols(n)
    expr = sympy.expand(expr)
    if expr == 0:
        return SchurVector()
    poly = sympy.Poly(expr, *symbols)
    weights = list(range(1, n + 1))
    degrees = {sum(w * m for w, m in zip(weights, monom)) for monom in poly.monoms()}
    if len(degrees) != 1:
        raise DomainError("expression is not homogeneous in the weighted grading")
    degree = degrees.pop()
    basis = [lam for lam in partitions_of(degree) if lam.length <= n]
    polys = [sympy.Poly(schur_in_elementary(lam, n), *symbols) for lam in basis]
    monoms = sorted({m for p in polys for m in p.monoms()} | set(poly.monoms()))
    matrix = sympy.Matrix([[p.coeff_monomial(m) for p in polys] for m in monoms])
    target = sympy.Matrix([poly.coeff_monomial(m) for m in monoms])
    solution, params = matrix.gauss_jordan_solve(target)
    if params.shape[0]:
        raise DomainError("Schur expansion is not unique")
    terms = {}
    for lam, c in zip(basis, solution):
        if c != 0:
            if not c.is_integer:
                raise DomainError(f"non-integral Schur coefficient {c} at {lam}")
            terms[lam] = int(c)
    return SchurVector(terms)
