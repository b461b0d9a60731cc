"""Exact polynomials and rational functions in t over the integers.

Polynomials are stored as tuples of Python ints in ascending powers of t,
without trailing zeros; the zero polynomial is ``()``. The raw tuple
functions (``p_add``, ``p_mul``...) are what the elimination code uses;
:class:`IntPolynomial` and :class:`RationalFunction` wrap them for callers.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

ZERO = ()
ONE = (1,)


def p_norm(coeffs: Iterable[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def p_add(p: tuple, q: tuple) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return p_norm(out)


def p_neg(p: tuple) -> tuple:
    return tuple(-c for c in p)


def p_sub(p: tuple, q: tuple) -> tuple:
    return p_add(p, p_neg(q))


def p_scale(p: tuple, c: int) -> tuple:
    if c == 0:
        return ZERO
    return tuple(c * a for a in p)


def p_mul(p: tuple, q: tuple) -> tuple:
    if not p or not q:
        return ZERO
    if len(p) == 1:
        return p_scale(q, p[0])
    if len(q) == 1:
        return p_scale(p, q[0])
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return p_norm(out)


def p_truncate(p: tuple, n: int) -> tuple:
    return p_norm(p[:n])


def p_divexact(p: tuple, q: tuple) -> tuple:
    """p / q when q divides p in Z[t]; raises ArithmeticError otherwise."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return ZERO
    if len(q) == 1:
        c = q[0]
        if any(a % c for a in p):
            raise ArithmeticError("inexact polynomial division")
        return tuple(a // c for a in p)
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(rem) - 1 < dq:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (len(rem) - dq)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dq]
        if c:
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            m = c // lead
            quot[k] = m
            for j, b in enumerate(q):
                rem[k + j] -= m * b
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return p_norm(quot)


def p_content(p: tuple) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def p_primitive(p: tuple) -> tuple:
    c = p_content(p)
    if c in (0, 1):
        return p
    return tuple(a // c for a in p)


def p_prem(p: tuple, q: tuple) -> tuple:
    """Pseudo-remainder of p by q."""
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) - 1 >= dq and rem:
        c = rem[-1]
        shift = len(rem) - 1 - dq
        rem = [lead * a for a in rem]
        for j, b in enumerate(q):
            rem[shift + j] -= c * b
        rem = list(p_norm(rem))
    return tuple(rem)


def _low_positive(p: tuple) -> tuple:
    for c in p:
        if c:
            return p if c > 0 else p_neg(p)
    return p


def p_gcd(p: tuple, q: tuple) -> tuple:
    """Greatest common divisor over Q, scaled to a primitive integer polynomial.

    Normalized so that the lowest-degree nonzero coefficient is positive,
    which matches the constant-term convention used for Hilbert series.
    """
    p, q = p_primitive(p), p_primitive(q)
    if not p:
        return _low_positive(q)
    if not q:
        return _low_positive(p)
    if len(p) < len(q):
        p, q = q, p
    while q:
        r = p_prem(p, q)
        p, q = q, p_primitive(r)
    return _low_positive(p_primitive(p))


def p_eval(p: tuple, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def p_render(p: tuple, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = p_norm(int(c) for c in coeffs)

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(x) -> tuple:
        if isinstance(x, IntPolynomial):
            return x.coeffs
        if isinstance(x, int):
            return p_norm((x,))
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")

    def __add__(self, other):
        return IntPolynomial(p_add(self.coeffs, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPolynomial(p_sub(self.coeffs, self._coerce(other)))

    def __rsub__(self, other):
        return IntPolynomial(p_sub(self._coerce(other), self.coeffs))

    def __neg__(self):
        return IntPolynomial(p_neg(self.coeffs))

    def __mul__(self, other):
        return IntPolynomial(p_mul(self.coeffs, self._coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ONE
        for _ in range(k):
            out = p_mul(out, self.coeffs)
        return IntPolynomial(out)

    def __call__(self, x):
        return p_eval(self.coeffs, x)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return p_render(self.coeffs)


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(p_gcd(p.coeffs, q.coeffs))


class RationalFunction:
    """A reduced quotient of integer polynomials.

    The numerator and denominator are coprime, share no integer content,
    and the lowest nonzero coefficient of the denominator is positive (for
    every Hilbert series this makes the constant term exactly 1).
    """

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE):
        num = num.coeffs if isinstance(num, IntPolynomial) else p_norm(num)
        den = den.coeffs if isinstance(den, IntPolynomial) else p_norm(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        g = p_gcd(num, den)
        if g != ONE:
            num, den = p_divexact(num, g), p_divexact(den, g)
        c = gcd(p_content(num), p_content(den))
        if c > 1:
            num = tuple(a // c for a in num)
            den = tuple(a // c for a in den)
        low = next(a for a in den if a)
        if low < 0:
            num, den = p_neg(num), p_neg(den)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, int):
            return cls((x,))
        if isinstance(x, IntPolynomial):
            return cls(x.coeffs)
        raise TypeError(f"cannot use {type(x).__name__} as a rational function")

    @property
    def numerator(self) -> IntPolynomial:
        return IntPolynomial(self.num)

    @property
    def denominator(self) -> IntPolynomial:
        return IntPolynomial(self.den)

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(p_add(self.num, other.num), self.den)
        return RationalFunction(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(p_neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(p_mul(self.num, other.num), p_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(p_mul(self.num, other.den), p_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __repr__(self):
        return f"RationalFunction({list(self.num)}, {list(self.den)})"

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {"numerator": list(self.num), "denominator": list(self.den)}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(tuple(data["numerator"]), tuple(data["denominator"]))


def render(r: RationalFunction) -> str:
    """Human-readable ``num/den`` form with explicit ``*`` and ``^``."""
    num = p_render(r.num)
    if r.den == ONE:
        return num
    if sum(1 for c in r.num if c) > 1:
        num = f"({num})"
    den = p_render(r.den)
    if sum(1 for c in r.den if c) > 1:
        den = f"({den})"
    return f"{num}/{den}"


# linear algebra over Z[t]


def _strongly_connected(m: int, succ: Sequence[Iterable[int]]) -> list:
    """Tarjan's algorithm, iterative. Components are returned in reverse topological order."""
    index = [-1] * m
    low = [0] * m
    on_stack = [False] * m
    stack: list = []
    comps: list = []
    counter = 0
    for root in range(m):
        if index[root] >= 0:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def _perm_sign(perm: dict) -> int:
    sign = 1
    seen = set()
    for start in perm:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def bareiss_det(rows: dict, size: int) -> tuple:
    """Determinant of a sparse square matrix over Z[t] by fraction-free elimination.

    ``rows`` maps row index -> {column index: polynomial}; indices run over
    the same ``size`` labels 0..size-1. Pivots are chosen by minimum
    Markowitz cost (fewest fill-ins), ties broken by lowest degree.
    The input is consumed.
    """
    if size == 0:
        return ONE
    col_count = {}
    for r in rows.values():
        for c in r:
            col_count[c] = col_count.get(c, 0) + 1
    active_rows = set(rows)
    prev = ONE
    pivot_of = {}
    last = ONE
    for _ in range(size):
        best = None
        for i in active_rows:
            row = rows[i]
            rc = len(row) - 1
            for j, v in row.items():
                cost = (rc * (col_count[j] - 1), len(v), i, j)
                if best is None or cost < best:
                    best = cost
        if best is None:
            return ZERO
        _, _, pi, pj = best
        prow = rows.pop(pi)
        active_rows.discard(pi)
        p = prow.pop(pj)
        pivot_of[pi] = pj
        for c in prow:
            col_count[c] -= 1
        col_count[pj] -= 1
        for k in active_rows:
            row = rows[k]
            a = row.pop(pj, None)
            if a is not None:
                col_count[pj] -= 1
            if p == prev and a is None:
                continue
            # columns present before the update; entries cancelling to zero are deleted below
            present = set(row)
            for c, v in list(row.items()):
                nv = p_mul(p, v)
                if a is not None and c in prow:
                    nv = p_sub(nv, p_mul(a, prow[c]))
                nv = p_divexact(nv, prev) if prev != ONE else nv
                if nv:
                    row[c] = nv
                else:
                    del row[c]
                    col_count[c] -= 1
            if a is not None:
                neg_a = p_neg(a)
                for c, v in prow.items():
                    if c in present or c == pj:
                        continue
                    nv = p_mul(neg_a, v)
                    nv = p_divexact(nv, prev) if prev != ONE else nv
                    if nv:
                        row[c] = nv
                        col_count[c] = col_count.get(c, 0) + 1
        prev = p
        last = p
    return last if _perm_sign(pivot_of) > 0 else p_neg(last)


def _i_minus_t_rows(A: Sequence[Sequence[int]], idx: Sequence[int]) -> dict:
    pos = {g: l for l, g in enumerate(idx)}
    rows = {}
    for l, g in enumerate(idx):
        row = {}
        for g2, a in enumerate(A[g]):
            if a and g2 in pos:
                row[pos[g2]] = (0, -a)
        diag = row.get(l, ZERO)
        row[l] = p_add(ONE, diag)
        if not row[l]:
            del row[l]
        rows[l] = row
    return rows


def det_i_minus_tA(A: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(Id - t*A) for an integer square matrix.

    The matrix is split into strongly connected blocks first (the
    determinant of a block-triangular matrix is the product of its diagonal
    blocks), then each block goes through :func:`bareiss_det`.
    """
    r = len(A)
    if any(len(row) != r for row in A):
        raise ValueError("matrix must be square")
    succ = [[j for j, a in enumerate(A[i]) if a] for i in range(r)]
    det = ONE
    for comp in _strongly_connected(r, succ):
        det = p_mul(det, bareiss_det(_i_minus_t_rows(A, comp), len(comp)))
    return IntPolynomial(det)


def power_series_first_component(A, C, terms: int) -> list:
    """Coefficients h_0..h_{terms-1} of the first entry of (Id - tA)^-1 C = sum_d t^d A^d C."""
    r = len(A)
    sparse = [[(j, a) for j, a in enumerate(A[i]) if a] for i in range(r)]
    v = list(C)
    out = []
    for _ in range(terms):
        out.append(v[0] if r else 0)
        v = [sum(a * v[j] for j, a in sparse[i]) for i in range(r)]
    return out


def assemble_first_component(det: tuple, series: Sequence[int], r: int) -> RationalFunction:
    """H = f/g from g = det(Id - tA) and the first r series coefficients.

    The Cramer numerator has degree below r, so it equals g*H truncated at t^r.
    """
    f = p_truncate(p_mul(det, tuple(series[:r])), r)
    return RationalFunction(f, det)


def solve_first_component(A: Sequence[Sequence[int]], C: Sequence[int]) -> RationalFunction:
    """First entry H_1 of the unique solution of (Id - tA) H = C, reduced."""
    r = len(A)
    if len(C) != r:
        raise ValueError("dimension mismatch between matrix and constant vector")
    if r == 0:
        raise ValueError("empty system")
    g = det_i_minus_tA(A).coeffs
    return assemble_first_component(g, power_series_first_component(A, C, r), r)


def cramer_numerator(A: Sequence[Sequence[int]], C: Sequence[int]) -> IntPolynomial:
    """det of (Id - tA) with column 0 replaced by C, by fraction-free elimination."""
    r = len(A)
    rows = _i_minus_t_rows(A, list(range(r)))
    for i in range(r):
        rows[i].pop(0, None)
        if C[i]:
            rows[i][0] = (C[i],)
    return IntPolynomial(bareiss_det(rows, r))


def expand(r: RationalFunction, degree: int) -> list:
    """Series coefficients h_0..h_degree of a rational function with den(0) = 1."""
    den = r.den
    if not den or den[0] != 1:
        raise ValueError("series expansion needs a denominator with constant term 1")
    num = r.num
    out = []
    for d in range(degree + 1):
        acc = num[d] if d < len(num) else 0
        for k in range(1, min(d, len(den) - 1) + 1):
            acc -= den[k] * out[d - k]
        out.append(acc)
    return out


ONE_MINUS_T = (1, -1)


def affine_of(r: RationalFunction) -> RationalFunction:
    """HS_a = HS / (1 - t)."""
    return RationalFunction(r.num, p_mul(r.den, ONE_MINUS_T))


def from_string(text: str) -> RationalFunction:
    """Parse a rational function written with t, + - * ^ / and parentheses (test helper)."""
    import ast

    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return RationalFunction((node.value,))
        if isinstance(node, ast.Name) and node.id == "t":
            return RationalFunction((0, 1))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.BinOp):
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                k = node.right.value
                out = RationalFunction(ONE)
                for _ in range(k):
                    out = out * a
                return out
            b = ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        raise ValueError(f"unsupported expression: {text!r}")

    return ev(tree)
