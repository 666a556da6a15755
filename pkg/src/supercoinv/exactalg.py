"""Exact arithmetic substrate: rationals, sparse multivariate polynomials,
and matrices over Q or over polynomial rings.

Every computation in this package is exact.  No floating point appears
anywhere; coefficients are arbitrary-precision rationals and eliminations
use deterministic first-nonzero pivoting so that repeated runs produce
identical pivot sets.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction


def _as_rational(c):
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class MPoly:
    """Sparse multivariate polynomial over Q.

    Terms are stored as a dict mapping exponent tuples (length ``nvars``)
    to nonzero rational coefficients.  Variables are 1-indexed in the
    public interface: ``MPoly.var(n, i)`` is x_i.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _as_rational(c)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        """The variable x_i, 1 <= i <= nvars."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = out
        return r

    def __neg__(self):
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = out
        return r

    __rmul__ = __mul__

    def scale(self, c):
        c = _as_rational(c)
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = {} if not c else {e: c * v for e, v in self.terms.items()}
        return r

    def __pow__(self, k):
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def partial(self, i):
        """Partial derivative with respect to x_i (1-indexed)."""
        out = {}
        idx = i - 1
        for exp, c in self.terms.items():
            a = exp[idx]
            if a:
                e = exp[:idx] + (a - 1,) + exp[idx + 1:]
                s = out.get(e, 0) + c * a
                if s:
                    out[e] = s
                else:
                    del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = out
        return r

    def rename_vars(self, mapping):
        """Substitute x_i -> x_{mapping[i]} (dict of 1-indexed variables).

        Unmapped variables are left in place.  The image polynomial lives
        in the same number of variables.
        """
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for pos, a in enumerate(exp):
                if not a:
                    continue
                tgt = mapping.get(pos + 1, pos + 1)
                new[tgt - 1] += a
            e = tuple(new)
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = out
        return r

    def substitute(self, assignment):
        """Substitute variables by polynomials.

        ``assignment`` maps 1-indexed variable numbers to MPoly values (in
        the same variable count).  Variables not mentioned stay fixed.
        """
        result = MPoly.zero(self.nvars)
        for exp, c in self.terms.items():
            term = MPoly.const(self.nvars, c)
            for pos, a in enumerate(exp):
                if not a:
                    continue
                i = pos + 1
                if i in assignment:
                    term = term * (assignment[i] ** a)
                else:
                    term = term * (MPoly.var(self.nvars, i) ** a)
            result = result + term
        return result

    def lex_leading(self):
        """(exponent, coefficient) of the lex-largest term (x_1 > x_2 > ...)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def try_div(self, d):
        """Exact division by ``d``; returns the quotient or None."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.terms)
        quot = {}
        dexp, dc = d.lex_leading()
        while rem:
            exp = max(rem)
            c = rem[exp]
            q = tuple(a - b for a, b in zip(exp, dexp))
            if any(a < 0 for a in q):
                return None
            qc = c / dc
            quot[q] = qc
            for e2, c2 in d.terms.items():
                e = tuple(a + b for a, b in zip(q, e2))
                s = rem.get(e, 0) - qc * c2
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MPoly(self.nvars, quot)

    def exact_div(self, d):
        q = self.try_div(d)
        if q is None:
            raise ValueError("inexact polynomial division")
        return q

    @classmethod
    def elementary(cls, nvars, d, variables=None):
        """Elementary symmetric polynomial e_d in the given variables.

        ``variables`` is an iterable of 1-indexed variable numbers;
        defaults to all of them.
        """
        vs = sorted(variables) if variables is not None else list(range(1, nvars + 1))
        if d < 0 or d > len(vs):
            return cls.zero(nvars)
        # coefficients of prod (1 + x_v t), built degree by degree
        layers = [cls.const(nvars, 1)] + [cls.zero(nvars)] * d
        for v in vs:
            xv = cls.var(nvars, v)
            for j in range(min(d, len(layers) - 1), 0, -1):
                layers[j] = layers[j] + layers[j - 1] * xv
        return layers[d]

    @classmethod
    def complete_homogeneous(cls, nvars, d, variables=None):
        """Complete homogeneous symmetric polynomial h_d in the given variables."""
        vs = sorted(variables) if variables is not None else list(range(1, nvars + 1))
        if d < 0:
            return cls.zero(nvars)
        out = {}

        def rec(pos, remaining, exp):
            if remaining == 0:
                out[tuple(exp)] = out.get(tuple(exp), 0) + 1
                return
            if pos == len(vs):
                return
            v = vs[pos] - 1
            for a in range(remaining + 1):
                exp[v] = a
                rec(pos + 1, remaining - a, exp)
            exp[v] = 0

        rec(0, d, [0] * nvars)
        return cls(nvars, {e: Fraction(c) for e, c in out.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def render(self, varname="x"):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for i, a in enumerate(exp):
                if a == 1:
                    factors.append(f"{varname}{i + 1}")
                elif a > 1:
                    factors.append(f"{varname}{i + 1}^{a}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            elif c == -1:
                body = "-" + "*".join(factors)
            else:
                body = str(c) + "*" + "*".join(factors)
            parts.append(body)
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s

    def __repr__(self):
        return f"MPoly({self.render()})"

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [[list(e), str(c)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["nvars"],
                   {tuple(e): Fraction(c) for e, c in data["terms"]})


def _int_row(row):
    """Scale a dict row of Fractions to coprime integers."""
    if not row:
        return {}
    denom = 1
    for c in row.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = {j: int(c * denom) for j, c in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {j: v // g for j, v in ints.items()}
    return ints


class _IntEchelon:
    """Incremental sparse echelon form over Z, for rank computations.

    Rows are dicts mapping column index to a nonzero integer.  Each stored
    row has a distinct pivot (its smallest column), and rows are combined
    by cross-multiplication so all arithmetic stays in Z.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = dict(row)
        while row:
            j = min(row)
            if j not in self.pivots:
                return row
            prow = self.pivots[j]
            a = row[j]
            b = prow[j]
            g = gcd(a, b)
            ma = b // g
            mb = a // g
            new = {}
            for k, v in row.items():
                new[k] = v * ma
            for k, v in prow.items():
                s = new.get(k, 0) - v * mb
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            row = new
        return row

    def add(self, row):
        """Reduce ``row`` against the echelon; store and return True if nonzero."""
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True


class QMatrix:
    """Matrix over Q with exact elimination.

    Rows are stored sparsely as dicts mapping column index to a nonzero
    Fraction.  All eliminations pick as pivot the first nonzero column of
    the first usable row, so results are deterministic.
    """

    def __init__(self, nrows, ncols, rows):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_rows(cls, rows, ncols=None):
        """Build from a list of dense rows (lists) or sparse dict rows."""
        sparse = []
        width = ncols or 0
        for r in rows:
            if isinstance(r, dict):
                d = {j: _as_rational(c) for j, c in r.items() if c}
                if d and ncols is None:
                    width = max(width, max(d) + 1)
            else:
                d = {j: _as_rational(c) for j, c in enumerate(r) if c}
                if ncols is None:
                    width = max(width, len(r))
            sparse.append(d)
        return cls(len(sparse), ncols if ncols is not None else width, sparse)

    def entry(self, i, j):
        return self.rows[i].get(j, Fraction(0))

    def dense(self):
        return [[self.entry(i, j) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def rank(self):
        ech = _IntEchelon()
        for r in self.rows:
            if r:
                ech.add(_int_row(r))
        return ech.rank

    def independent_rows(self):
        """Indices of the lexicographically first maximal independent row subset."""
        ech = _IntEchelon()
        keep = []
        for i, r in enumerate(self.rows):
            if r and ech.add(_int_row(r)):
                keep.append(i)
        return keep

    def _echelon_fractions(self):
        """Reduced echelon rows of the row space, as (pivot -> row) dict."""
        pivots = {}
        for r in self.rows:
            row = dict(r)
            # eliminate every known pivot column; each step only introduces
            # columns to the right, so scanning smallest-first terminates
            while True:
                hit = None
                for k in sorted(row):
                    if k in pivots:
                        hit = k
                        break
                if hit is None:
                    break
                prow = pivots[hit]
                f = row[hit]
                for k, v in prow.items():
                    s = row.get(k, 0) - f * v
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
            if not row:
                continue
            j = min(row)
            c = row[j]
            row = {k: v / c for k, v in row.items()}
            for prow in pivots.values():
                if j in prow:
                    f = prow.pop(j)
                    for k, v in row.items():
                        if k == j:
                            continue
                        s = prow.get(k, 0) - f * v
                        if s:
                            prow[k] = s
                        else:
                            prow.pop(k, None)
            pivots[j] = row
        return pivots

    def kernel_basis(self):
        """Basis of the right kernel {v : M v = 0}, as dense Fraction vectors.

        One basis vector per free column, in increasing column order; the
        vector for free column f has a 1 in position f.
        """
        pivots = self._echelon_fractions()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for pj, prow in pivots.items():
                c = prow.get(f)
                if c:
                    v[pj] = -c
            basis.append(v)
        return basis

    def solve(self, b):
        """Solve M x = b exactly; returns a dense solution vector or None.

        When the system is underdetermined the free variables are set to 0.
        """
        aug = []
        for i, r in enumerate(self.rows):
            row = dict(r)
            bi = _as_rational(b[i])
            if bi:
                row[self.ncols] = bi
            aug.append(row)
        M = QMatrix(self.nrows, self.ncols + 1, aug)
        pivots = M._echelon_fractions()
        if self.ncols in pivots:
            return None
        x = [Fraction(0)] * self.ncols
        for pj, prow in pivots.items():
            x[pj] = prow.get(self.ncols, Fraction(0))
        return x

    def transpose(self):
        rows = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, c in r.items():
                rows[j][i] = c
        return QMatrix(self.ncols, self.nrows, rows)

    def to_json(self):
        return {
            "nrows": self.nrows,
            "ncols": self.ncols,
            "rows": [sorted([[j, str(c)] for j, c in r.items()])
                     for r in self.rows],
        }

    @classmethod
    def from_json(cls, data):
        rows = [{j: Fraction(c) for j, c in r} for r in data["rows"]]
        return cls(data["nrows"], data["ncols"], rows)


class PolyMatrix:
    """Dense matrix with MPoly entries."""

    def __init__(self, grid):
        self.grid = [list(row) for row in grid]
        self.nrows = len(self.grid)
        self.ncols = len(self.grid[0]) if self.grid else 0

    def entry(self, i, j):
        return self.grid[i][j]

    def mul(self, other):
        nv = self.grid[0][0].nvars
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = MPoly.zero(nv)
                for k in range(self.ncols):
                    s = s + self.grid[i][k] * other.grid[k][j]
                row.append(s)
            out.append(row)
        return PolyMatrix(out)

    def transpose(self):
        return PolyMatrix([[self.grid[i][j] for i in range(self.nrows)]
                           for j in range(self.ncols)])

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix([[self.grid[i][j] for j in col_idx] for i in row_idx])

    def minor(self, row_idx, col_idx):
        return self.submatrix(row_idx, col_idx).det()

    def det(self):
        """Determinant: cofactor expansion up to 4x4, Bareiss beyond."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            raise ValueError("determinant of an empty matrix")
        nv = self.grid[0][0].nvars
        if n <= 4:
            return self._det_cofactor(self.grid, nv)
        return self._det_bareiss(nv)

    @staticmethod
    def _det_cofactor(grid, nv):
        n = len(grid)
        if n == 1:
            return grid[0][0]
        total = MPoly.zero(nv)
        for j in range(n):
            a = grid[0][j]
            if a.is_zero():
                continue
            sub = [[grid[i][k] for k in range(n) if k != j] for i in range(1, n)]
            cof = PolyMatrix._det_cofactor(sub, nv)
            term = a * cof
            total = total + term if j % 2 == 0 else total - term
        return total

    def _det_bareiss(self, nv):
        n = self.nrows
        m = [[self.grid[i][j] for j in range(n)] for i in range(n)]
        sign = 1
        prev = MPoly.const(nv, 1)
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return MPoly.zero(nv)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    m[i][j] = num.exact_div(prev)
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return d.scale(sign) if sign < 0 else d


def poly_eval_substitute(matrix, assignment):
    """Apply a variable substitution to every entry of a PolyMatrix.

    ``assignment`` maps 1-indexed variables to either variable numbers
    (fast monomial rename) or MPoly values.
    """
    rename = all(isinstance(v, int) for v in assignment.values())
    out = []
    for row in matrix.grid:
        if rename:
            out.append([p.rename_vars(assignment) for p in row])
        else:
            out.append([p.substitute(assignment) for p in row])
    return PolyMatrix(out)
