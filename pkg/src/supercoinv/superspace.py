"""The superspace ring: polynomials in commuting variables x_1..x_n tensored
with an exterior algebra on theta_1..theta_n.

Monomials are stored canonically as (exponent tuple, increasing theta tuple);
products pick up the sign of sorting the theta factors.  The superderivative
action f (.) g substitutes x_i -> d/dx_i and theta_i -> the contraction
operator, with theta operators applied in the canonical monomial order.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from .exactalg import MPoly, _as_rational
from .combinatorics import mu_blocks


def _sort_sign(seq):
    """(sorted tuple, sign) for a sequence of distinct integers; sign 0 if repeats."""
    seq = list(seq)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return tuple(seq), 0
    return tuple(seq), sign


def _merge_thetas(t1, t2):
    """Concatenate two canonical theta tuples; returns (tuple, sign)."""
    if not t1:
        return t2, 1
    if not t2:
        return t1, 1
    return _sort_sign(t1 + t2)


class SuperElement:
    """An element of superspace: dict from (exps, thetas) to rational coeffs."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for (exps, thetas), c in terms.items():
                c = _as_rational(c)
                if c:
                    clean[(tuple(exps), tuple(thetas))] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {((0,) * nvars, ()): 1})

    @classmethod
    def from_mpoly(cls, p):
        return cls(p.nvars, {(e, ()): c for e, c in p.terms.items()})

    @classmethod
    def monomial(cls, nvars, exps, thetas=(), c=1):
        thetas, sign = _sort_sign(thetas)
        return cls(nvars, {(tuple(exps), thetas): _as_rational(c) * sign})

    @classmethod
    def theta(cls, nvars, i):
        return cls(nvars, {((0,) * nvars, (i,)): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, SuperElement) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        r = SuperElement.__new__(SuperElement)
        r.nvars = self.nvars
        r.terms = out
        return r

    def __neg__(self):
        r = SuperElement.__new__(SuperElement)
        r.nvars = self.nvars
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _as_rational(c)
        r = SuperElement.__new__(SuperElement)
        r.nvars = self.nvars
        r.terms = {} if not c else {k: c * v for k, v in self.terms.items()}
        return r

    def __mul__(self, other):
        if not isinstance(other, SuperElement):
            return self.scale(other)
        out = {}
        for (e1, t1), c1 in self.terms.items():
            for (e2, t2), c2 in other.terms.items():
                thetas, sign = _merge_thetas(t1, t2)
                if sign == 0:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                key = (e, thetas)
                s = out.get(key, 0) + sign * c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        r = SuperElement.__new__(SuperElement)
        r.nvars = self.nvars
        r.terms = out
        return r

    __rmul__ = __mul__

    def bidegrees(self):
        return {(sum(e), len(t)) for (e, t) in self.terms}

    def component(self, i, j):
        """The bihomogeneous piece of bosonic degree i and fermionic degree j."""
        return SuperElement(self.nvars,
                            {k: c for k, c in self.terms.items()
                             if sum(k[0]) == i and len(k[1]) == j})

    def bosonic_part(self):
        """The fermionic-degree-zero part, as an MPoly."""
        return MPoly(self.nvars,
                     {e: c for (e, t), c in self.terms.items() if not t})

    def as_mpoly(self):
        if any(t for (_, t) in self.terms):
            raise ValueError("element has theta terms")
        return self.bosonic_part()

    def theta_coefficient(self, thetas):
        """The MPoly coefficient of the canonical theta monomial."""
        thetas = tuple(sorted(thetas))
        return MPoly(self.nvars,
                     {e: c for (e, t), c in self.terms.items() if t == thetas})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]),
                      reverse=True)

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (exp, thetas), c in self.sorted_terms():
            factors = []
            for i, a in enumerate(exp):
                if a == 1:
                    factors.append(f"x{i + 1}")
                elif a > 1:
                    factors.append(f"x{i + 1}^{a}")
            for t in thetas:
                factors.append(f"t{t}")
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
        return f"SuperElement({self.render()})"

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [[list(e), list(t), str(c)]
                      for (e, t), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["nvars"],
                   {(tuple(e), tuple(t)): Fraction(c)
                    for e, t, c in data["terms"]})


def act(w, f):
    """Diagonal action of a permutation: x_i -> x_{w(i)}, theta_i -> theta_{w(i)}.

    ``w`` is a tuple with w[i-1] = w(i).
    """
    out = {}
    for (exp, thetas), c in f.terms.items():
        new_exp = [0] * f.nvars
        for i, a in enumerate(exp):
            new_exp[w[i] - 1] = a
        new_t, sign = _sort_sign(tuple(w[t - 1] for t in thetas))
        key = (tuple(new_exp), new_t)
        s = out.get(key, 0) + sign * c
        if s:
            out[key] = s
        else:
            del out[key]
    r = SuperElement.__new__(SuperElement)
    r.nvars = f.nvars
    r.terms = out
    return r


def partial_x(i, f):
    """d/dx_i acting on a superspace element."""
    out = {}
    idx = i - 1
    for (exp, thetas), c in f.terms.items():
        a = exp[idx]
        if a:
            key = (exp[:idx] + (a - 1,) + exp[idx + 1:], thetas)
            s = out.get(key, 0) + c * a
            if s:
                out[key] = s
            else:
                del out[key]
    r = SuperElement.__new__(SuperElement)
    r.nvars = f.nvars
    r.terms = out
    return r


def contract_theta(i, f):
    """The contraction d/dtheta_i: kills terms without theta_i, otherwise
    removes it with sign (-1)^(position - 1) in the canonical order."""
    out = {}
    for (exp, thetas), c in f.terms.items():
        if i not in thetas:
            continue
        pos = thetas.index(i)
        sign = -1 if pos % 2 else 1
        key = (exp, thetas[:pos] + thetas[pos + 1:])
        s = out.get(key, 0) + sign * c
        if s:
            out[key] = s
        else:
            del out[key]
    r = SuperElement.__new__(SuperElement)
    r.nvars = f.nvars
    r.terms = out
    return r


def _falling(b, a):
    """b (b-1) ... (b-a+1)."""
    out = 1
    for i in range(a):
        out *= b - i
    return out


def odot(f, g):
    """The superderivative action f (.) g: substitute x_i -> d/dx_i and
    theta_i -> contraction, reading each canonical monomial of f as a
    composition with the rightmost factor applied first."""
    if f.nvars != g.nvars:
        raise ValueError("mismatched variable counts")
    n = f.nvars
    out = {}
    for (a, S), c in f.terms.items():
        h = g
        for s in sorted(S, reverse=True):
            h = contract_theta(s, h)
            if not h.terms:
                break
        if not h.terms:
            continue
        for (b, T), d in h.terms.items():
            coeff = c * d
            ok = True
            new = [0] * n
            for i in range(n):
                if b[i] < a[i]:
                    ok = False
                    break
                if a[i]:
                    coeff *= _falling(b[i], a[i])
                new[i] = b[i] - a[i]
            if not ok or not coeff:
                continue
            key = (tuple(new), T)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                del out[key]
    r = SuperElement.__new__(SuperElement)
    r.nvars = f.nvars
    r.terms = out
    return r


def euler_d(j, f):
    """The higher Euler derivative d_j: sum_i theta_i (d/dx_i)^j, with the
    theta factor multiplied on the left."""
    n = f.nvars
    total = SuperElement.zero(n)
    for i in range(1, n + 1):
        h = f
        for _ in range(j):
            h = partial_x(i, h)
            if not h.terms:
                break
        if h.terms:
            total = total + SuperElement.theta(n, i) * h
    return total


def euler_chain(K, f):
    """Compose d_k over k in K, smallest index applied first, so the
    operator with the largest index sits leftmost in the composition."""
    for k in sorted(K):
        f = euler_d(k, f)
    return f


def star_set(K, n):
    """K* = {n - k + 1 : k in K}."""
    return tuple(sorted(n - k + 1 for k in K))


def antisymmetrize(mu, f):
    """Apply eps_mu = sum over the Young subgroup S_mu of sign(w) w."""
    n = f.nvars
    blocks = mu_blocks(mu)
    total = SuperElement.zero(n)

    def rec(bi, w, sign):
        nonlocal total
        if bi == len(blocks):
            total = total + act(tuple(w), f).scale(sign)
            return
        block = blocks[bi]
        for perm in permutations(block):
            s = _perm_sign(block, perm)
            for src, tgt in zip(block, perm):
                w[src - 1] = tgt
            rec(bi + 1, w, sign * s)
        for src in block:
            w[src - 1] = src

    rec(0, list(range(1, n + 1)), 1)
    return total


def _perm_sign(domain, image):
    """Sign of the permutation sending domain[i] -> image[i]."""
    _, sign = _sort_sign(image)
    return sign


def young_subgroup_order(mu):
    out = 1
    for m in mu:
        out *= factorial(m)
    return out


def vandermonde(n):
    """The Vandermonde determinant prod_{i<j} (x_i - x_j), as a SuperElement."""
    p = MPoly.const(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = p * (MPoly.var(n, i) - MPoly.var(n, j))
    return SuperElement.from_mpoly(p)


def super_vandermonde(n, k):
    """The superspace Vandermonde: antisymmetrization of
    x_1^0 ... x_k^(k-1) times prod_{i>k} x_i^(k-1) theta_i.

    At k = n this is the classical Vandermonde up to sign.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    exps = [0] * n
    for i in range(1, k + 1):
        exps[i - 1] = i - 1
    for i in range(k + 1, n + 1):
        exps[i - 1] = k - 1
    thetas = tuple(range(k + 1, n + 1))
    base = SuperElement.monomial(n, tuple(exps), thetas)
    return antisymmetrize((n,), base)


def f_J(j_subset):
    """The ideal shift polynomial: prod over j in J of x_j prod_{i>j} (x_j - x_i)."""
    n = j_subset.n
    p = MPoly.const(n, 1)
    for j in j_subset.elems:
        p = p * MPoly.var(n, j)
        for i in range(j + 1, n + 1):
            p = p * (MPoly.var(n, j) - MPoly.var(n, i))
    return SuperElement.from_mpoly(p)


def coinvariant_generators(n, superspace=True):
    """Generators of the coinvariant ideal: e_1..e_n and, in superspace,
    their Euler derivatives de_1..de_n."""
    gens = []
    for d in range(1, n + 1):
        e = SuperElement.from_mpoly(MPoly.elementary(n, d))
        gens.append(e)
    if superspace:
        for d in range(1, n + 1):
            e = SuperElement.from_mpoly(MPoly.elementary(n, d))
            gens.append(euler_d(1, e))
    return gens
