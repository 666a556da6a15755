"""Combinatorial objects and enumerations: partitions, subsets in Gale order,
staircases, signed partitions, ordered (multi)set partitions, standard
tableaux, and polynomials in q and z.

All enumerations return results in a fixed deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial


class QZPolynomial:
    """Polynomial in q and z with integer coefficients.

    q tracks bosonic (polynomial) degree, z tracks fermionic degree.
    Stored sparsely as {(q_exp, z_exp): coeff}.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for key, c in coeffs.items():
                if c:
                    clean[tuple(key)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, qe, ze, c=1):
        return cls({(qe, ze): c})

    @classmethod
    def q_int(cls, k):
        """[k]_q = 1 + q + ... + q^(k-1)."""
        return cls({(i, 0): 1 for i in range(k)})

    @classmethod
    def q_factorial(cls, k):
        out = cls.one()
        for i in range(1, k + 1):
            out = out * cls.q_int(i)
        return out

    @classmethod
    def q_binomial(cls, n, k):
        """Gaussian binomial [n choose k]_q; zero when k < 0 or k > n."""
        if k < 0 or k > n:
            return cls.zero()
        num = cls.one()
        for i in range(n - k + 1, n + 1):
            num = num * cls.q_int(i)
        den = cls.q_factorial(k)
        q, r = _qz_divmod(num, den)
        assert r.is_zero()
        return q

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, QZPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return QZPolynomial(out)

    def __neg__(self):
        return QZPolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out = {}
        for (a, b), c1 in self.coeffs.items():
            for (d, e), c2 in other.coeffs.items():
                k = (a + d, b + e)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return QZPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return QZPolynomial()
        return QZPolynomial({k: c * v for k, v in self.coeffs.items()})

    def coefficient(self, qe, ze=0):
        return self.coeffs.get((qe, ze), 0)

    def eval_ones(self):
        """Value at q = z = 1."""
        return sum(self.coeffs.values())

    def q_degree(self):
        return max((k[0] for k in self.coeffs), default=-1)

    def z_degree(self):
        return max((k[1] for k in self.coeffs), default=-1)

    def z_coefficient(self, ze):
        """The coefficient of z^ze, as a polynomial in q."""
        return QZPolynomial({(qe, 0): c for (qe, z), c in self.coeffs.items()
                             if z == ze})

    def render(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (qe, ze) in sorted(self.coeffs, key=lambda k: (k[1], k[0])):
            c = self.coeffs[(qe, ze)]
            factors = []
            if qe == 1:
                factors.append("q")
            elif qe > 1:
                factors.append(f"q^{qe}")
            if ze == 1:
                factors.append("z")
            elif ze > 1:
                factors.append(f"z^{ze}")
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
            s += p if p.startswith("-") else " + " + p
        return s

    def __repr__(self):
        return f"QZPolynomial({self.render()})"

    def to_json(self):
        return {"coeffs": sorted([qe, ze, c] for (qe, ze), c in self.coeffs.items())}

    @classmethod
    def from_json(cls, data):
        return cls({(qe, ze): c for qe, ze, c in data["coeffs"]})


def _qz_divmod(num, den):
    """Exact division of QZPolynomials (used for Gaussian binomials)."""
    rem = dict(num.coeffs)
    quot = {}
    dkey = max(den.coeffs)
    dc = den.coeffs[dkey]
    while rem:
        key = max(rem)
        qk = (key[0] - dkey[0], key[1] - dkey[1])
        if qk[0] < 0 or qk[1] < 0 or rem[key] % dc:
            break
        c = rem[key] // dc
        quot[qk] = c
        for k2, c2 in den.coeffs.items():
            k = (qk[0] + k2[0], qk[1] + k2[1])
            s = rem.get(k, 0) - c * c2
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return QZPolynomial(quot), QZPolynomial(rem)


@dataclass(frozen=True)
class Partition:
    """A partition: weakly decreasing tuple of positive integers."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for i in range(len(self.parts) - 1):
            if self.parts[i] < self.parts[i + 1]:
                raise ValueError(f"parts {self.parts} not weakly decreasing")
        if self.parts and self.parts[-1] <= 0:
            raise ValueError("parts must be positive")

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > i)
                               for i in range(self.parts[0])))

    def contains(self, other):
        """Young-diagram containment: other fits inside self."""
        if other.length() > self.length():
            return False
        return all(o <= s for s, o in zip(self.parts, other.parts))

    def dominance_leq(self, other):
        """True if self is dominated by other (partial sums comparison)."""
        if self.size() != other.size():
            raise ValueError("dominance needs equal sizes")
        s = t = 0
        for i in range(max(self.length(), other.length())):
            s += self.parts[i] if i < self.length() else 0
            t += other.parts[i] if i < other.length() else 0
            if s > t:
                return False
        return True

    def to_json(self):
        return {"parts": list(self.parts)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["parts"]))


def partitions(n, max_part=None):
    """All partitions of n, largest part first, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [Partition(())]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


@dataclass(frozen=True)
class SubsetOfN:
    """A subset of {1, ..., n}, stored as a sorted tuple."""

    n: int
    elems: tuple

    def __post_init__(self):
        elems = tuple(sorted(self.elems))
        object.__setattr__(self, "elems", elems)
        if len(set(elems)) != len(elems):
            raise ValueError("repeated elements")
        if elems and not (1 <= elems[0] and elems[-1] <= self.n):
            raise ValueError(f"elements {elems} outside 1..{self.n}")

    def __len__(self):
        return len(self.elems)

    def __contains__(self, x):
        return x in self.elems

    def __iter__(self):
        return iter(self.elems)

    def complement(self):
        present = set(self.elems)
        return SubsetOfN(self.n, tuple(i for i in range(1, self.n + 1)
                                       if i not in present))

    def to_json(self):
        return {"n": self.n, "elems": list(self.elems)}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], tuple(data["elems"]))


def subsets(n, size=None):
    """All subsets of {1..n}, optionally of a fixed size, in lex order."""
    out = []
    sizes = [size] if size is not None else range(n + 1)
    for k in sizes:
        for c in combinations(range(1, n + 1), k):
            out.append(SubsetOfN(n, c))
    return out


def gale_leq(a, b):
    """Gale order on equal-size subsets: elementwise <= after sorting."""
    if len(a.elems) != len(b.elems):
        raise ValueError("Gale order compares equal-size subsets")
    return all(x <= y for x, y in zip(a.elems, b.elems))


def staircase(j_subset):
    """The staircase attached to a subset J of {1..n}.

    st_1 is 0 if 1 is in J else 1; thereafter st_i repeats the previous
    value when i is in J and increments it when i is not.
    """
    n = j_subset.n
    present = set(j_subset.elems)
    st = []
    prev = 0
    for i in range(1, n + 1):
        prev = prev if i in present else prev + 1
        st.append(prev)
    return tuple(st)


@dataclass(frozen=True)
class SignedPartition:
    """A pair (mu, gamma) with mu a partition of n and 0 <= gamma_i <= mu_i."""

    mu: tuple
    gamma: tuple

    def __post_init__(self):
        mu = tuple(self.mu)
        gamma = tuple(self.gamma)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "gamma", gamma)
        Partition(mu)
        if len(gamma) != len(mu):
            raise ValueError("gamma must have the same length as mu")
        for m, g in zip(mu, gamma):
            if not 0 <= g <= m:
                raise ValueError(f"gamma {gamma} not within mu {mu}")

    def n(self):
        return sum(self.mu)

    def to_json(self):
        return {"mu": list(self.mu), "gamma": list(self.gamma)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["mu"]), tuple(data["gamma"]))


def signed_partitions(n):
    """All signed partitions (mu, gamma) with mu a partition of n."""
    out = []
    for mu in partitions(n):
        ranges = [range(m + 1) for m in mu.parts]
        def rec(i, acc):
            if i == len(mu.parts):
                out.append(SignedPartition(mu.parts, tuple(acc)))
                return
            for g in ranges[i]:
                rec(i + 1, acc + [g])
        rec(0, [])
    return out


@dataclass(frozen=True)
class TranslationSequence:
    """A list of sets T_j, one per part of mu, with T_j inside the j-th
    mu-interval of {1..n}."""

    mu: tuple
    sets: tuple

    def __post_init__(self):
        mu = tuple(self.mu)
        sets = tuple(tuple(sorted(s)) for s in self.sets)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sets", sets)
        Partition(mu)
        if len(sets) != len(mu):
            raise ValueError("one set per part of mu required")
        start = 1
        for m, s in zip(mu, sets):
            block = set(range(start, start + m))
            if not set(s) <= block:
                raise ValueError(f"set {s} escapes its mu-interval")
            start += m

    def gamma(self):
        return tuple(len(s) for s in self.sets)

    def union_set(self):
        return tuple(sorted(x for s in self.sets for x in s))

    def to_json(self):
        return {"mu": list(self.mu), "sets": [list(s) for s in self.sets]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["mu"]), tuple(tuple(s) for s in data["sets"]))


def all_translation_sequences(mu):
    """Every mu-translation sequence, in a fixed deterministic order."""
    mu = tuple(mu)
    per_block = []
    for block in mu_blocks(mu):
        per_block.append([c for k in range(len(block) + 1)
                          for c in combinations(block, k)])
    out = []
    def rec(i, acc):
        if i == len(per_block):
            out.append(TranslationSequence(mu, tuple(acc)))
            return
        for s in per_block[i]:
            rec(i + 1, acc + [s])
    rec(0, [])
    return out


def mu_blocks(mu):
    """The consecutive intervals of {1..n} cut out by mu, as lists."""
    blocks = []
    start = 1
    for m in mu:
        blocks.append(list(range(start, start + m)))
        start += m
    return blocks


def j_of_signed(sp):
    """The subset J(mu, gamma): the top gamma_j entries of each mu-interval."""
    elems = []
    for block, g in zip(mu_blocks(sp.mu), sp.gamma):
        if g:
            elems.extend(block[-g:])
    return SubsetOfN(sum(sp.mu), tuple(elems))


def enumerate_artin(j_subset):
    """Exponent tuples of the substaircase monomials for J: 0 <= a_i < st_i.

    Returned in lexicographic order.  Empty when 1 is in J (st_1 = 0).
    """
    st = staircase(j_subset)
    if any(s == 0 for s in st):
        return []
    out = []
    def rec(i, acc):
        if i == len(st):
            out.append(tuple(acc))
            return
        for a in range(st[i]):
            acc.append(a)
            rec(i + 1, acc)
            acc.pop()
    rec(0, [])
    return out


def enumerate_signed_artin(sp):
    """Substaircase exponent tuples for J(mu, gamma) with the block shuffle
    conditions: within each mu-interval the first mu_j - gamma_j exponents
    strictly increase and the last gamma_j weakly increase.
    """
    st = staircase(j_of_signed(sp))
    blocks = mu_blocks(sp.mu)
    per_block = []
    for block, g in zip(blocks, sp.gamma):
        m = len(block)
        bounds = [st[p - 1] for p in block]
        choices = []
        def rec(i, acc):
            if i == m:
                choices.append(tuple(acc))
                return
            lo = 0
            if i > 0:
                if i < m - g:
                    lo = acc[-1] + 1
                elif i > m - g:
                    lo = acc[-1]
            for a in range(lo, bounds[i]):
                acc.append(a)
                rec(i + 1, acc)
                acc.pop()
        rec(0, [])
        per_block.append(choices)
    out = []
    def assemble(i, acc):
        if i == len(per_block):
            out.append(tuple(acc))
            return
        for c in per_block[i]:
            assemble(i + 1, acc + list(c))
    assemble(0, [])
    return out


def count_signed_artin_product(sp):
    """Closed product formula for the number of signed substaircase monomials."""
    total = 1
    s_prev = 0
    for m, g in zip(sp.mu, sp.gamma):
        total *= comb(s_prev + (m - g), m - g) * comb(s_prev + m - 1, g)
        s_prev += m - g
    return total


@lru_cache(maxsize=None)
def q_stirling(n, k):
    """q-Stirling number of the second kind, Stir_q(n, k)."""
    if n == 0:
        return QZPolynomial.one() if k == 0 else QZPolynomial.zero()
    if k < 0 or k > n:
        return QZPolynomial.zero()
    return q_stirling(n - 1, k - 1) + QZPolynomial.q_int(k) * q_stirling(n - 1, k)


def fields1_formula(n):
    """The closed bigraded Hilbert series: sum_k z^(n-k) [k]!_q Stir_q(n, k)."""
    total = QZPolynomial.zero()
    for k in range(1, n + 1):
        total = total + (QZPolynomial.monomial(0, n - k)
                         * QZPolynomial.q_factorial(k) * q_stirling(n, k))
    return total


@dataclass(frozen=True)
class OrderedSetPartition:
    """An ordered set partition of {1..n}: a sequence of disjoint nonempty
    blocks (sorted tuples) whose union is {1..n}."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen = [x for b in blocks for x in b]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError("blocks must partition 1..n")
        if any(not b for b in blocks):
            raise ValueError("empty block")

    def k(self):
        return len(self.blocks)

    def to_json(self):
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], tuple(tuple(b) for b in data["blocks"]))


DEFAULT_OSP_CAP = 8


class ResourceRefused(Exception):
    """Raised when a request exceeds the configured enumeration caps."""


def enumerate_osp(n, k=None, batch_mu=None, cap=DEFAULT_OSP_CAP):
    """Ordered set partitions of {1..n}, optionally with exactly k blocks
    and/or compatible with a batch order mu.

    Compatibility with mu: elements of each mu-interval appear in weakly
    increasing block positions, read along the interval.
    """
    if n > cap:
        raise ResourceRefused(f"enumerate_osp: n={n} exceeds cap {cap}")
    results = []
    elems = list(range(1, n + 1))

    def rec(remaining, blocks):
        if not remaining:
            if k is None or len(blocks) == k:
                results.append(OrderedSetPartition(n, tuple(blocks)))
            return
        if k is not None and len(blocks) >= k:
            return
        rest = sorted(remaining)
        m = len(rest)
        for size in range(1, m + 1):
            for chosen in combinations(rest, size):
                rec(remaining - set(chosen), blocks + [chosen])

    rec(set(elems), [])
    if batch_mu is not None:
        pos_of = {}
        results2 = []
        for osp in results:
            pos = {}
            for bi, b in enumerate(osp.blocks):
                for x in b:
                    pos[x] = bi
            ok = True
            for block in mu_blocks(batch_mu):
                for a, b in zip(block, block[1:]):
                    if pos[a] > pos[b]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                results2.append(osp)
        results = results2
    return results


def count_osp(n, mu=None, cap=DEFAULT_OSP_CAP):
    """Number of ordered set partitions of {1..n}, optionally mu-compatible."""
    return len(enumerate_osp(n, batch_mu=mu, cap=cap))


@dataclass(frozen=True)
class OrderedMultisetPartition:
    """A sequence of nonempty sets of positive integers (letters may repeat
    across blocks but not within a block)."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if len(set(b)) != len(b):
                raise ValueError("repeated letter within a block")

    def size(self):
        return sum(len(b) for b in self.blocks)

    def k(self):
        return len(self.blocks)

    def content(self, max_letter):
        """Exponent vector of the content monomial over letters 1..max_letter."""
        out = [0] * max_letter
        for b in self.blocks:
            for x in b:
                out[x - 1] += 1
        return tuple(out)

    def to_json(self):
        return {"blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(b) for b in data["blocks"]))


def enumerate_omp(n, k, max_letter, cap=DEFAULT_OSP_CAP):
    """Ordered multiset partitions: k blocks, n letters total, letters
    drawn from 1..max_letter with no repeats inside a block."""
    if n > cap:
        raise ResourceRefused(f"enumerate_omp: n={n} exceeds cap {cap}")
    block_choices = {}
    results = []

    def rec(remaining, blocks_left, acc):
        if blocks_left == 0:
            if remaining == 0:
                results.append(OrderedMultisetPartition(tuple(acc)))
            return
        lo = max(1, remaining - (blocks_left - 1) * max_letter)
        hi = min(max_letter, remaining - (blocks_left - 1))
        for size in range(lo, hi + 1):
            if size not in block_choices:
                block_choices[size] = list(combinations(range(1, max_letter + 1), size))
            for b in block_choices[size]:
                acc.append(b)
                rec(remaining - size, blocks_left - 1, acc)
                acc.pop()

    rec(n, k, [])
    return results


def _word_maj(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def omp_minimaj(m):
    """Minimum major index over all words obtained by ordering each block."""
    best = None
    def rec(i, prefix):
        nonlocal best
        if i == len(m.blocks):
            v = _word_maj(prefix)
            if best is None or v < best:
                best = v
            return
        for perm in permutations(m.blocks[i]):
            rec(i + 1, prefix + list(perm))
    rec(0, [])
    return best


def omp_inv(m):
    """Inversions: pairs (a, b) with a in an earlier block, b the minimum
    of a later block, and a > b."""
    total = 0
    mins = [min(b) for b in m.blocks]
    for i, b in enumerate(m.blocks):
        for a in b:
            for j in range(i + 1, len(m.blocks)):
                if a > mins[j]:
                    total += 1
    return total


def omp_maj(m):
    """Major index: blocks are read in decreasing order; each descent of the
    resulting word contributes the number of blocks whose final letter sits
    weakly left of the descent position."""
    word = []
    block_end = []
    for b in m.blocks:
        word.extend(sorted(b, reverse=True))
        block_end.append(len(word))
    total = 0
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            total += sum(1 for e in block_end if e <= i + 1)
    return total


def omp_dinv(m):
    """Diagonal inversions: blocks as columns with entries decreasing upward
    from the base row; count same-row pairs a > b (a left of b) and
    adjacent-row pairs a < b with a one row above b."""
    cols = [sorted(b, reverse=True) for b in m.blocks]
    total = 0
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            for ra, a in enumerate(cols[i]):
                for rb, b in enumerate(cols[j]):
                    if ra == rb and a > b:
                        total += 1
                    elif ra == rb + 1 and a < b:
                        total += 1
    return total


OMP_STATISTICS = {
    "inv": omp_inv,
    "maj": omp_maj,
    "dinv": omp_dinv,
    "minimaj": omp_minimaj,
}


def omp_statistic(m, stat):
    try:
        fn = OMP_STATISTICS[stat]
    except KeyError:
        raise ValueError(f"unknown statistic {stat!r}") from None
    return fn(m)


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau, stored as a tuple of rows."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = sum(len(r) for r in rows)
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError("entries must be 1..n exactly once")
        for r in rows:
            for a, b in zip(r, r[1:]):
                if a >= b:
                    raise ValueError("rows must increase")
        for r1, r2 in zip(rows, rows[1:]):
            if len(r2) > len(r1):
                raise ValueError("shape must be a partition")
            for a, b in zip(r1, r2):
                if a >= b:
                    raise ValueError("columns must increase")

    def n(self):
        return sum(len(r) for r in self.rows)

    def shape(self):
        return Partition(tuple(len(r) for r in self.rows))

    def row_of(self, x):
        for i, r in enumerate(self.rows):
            if x in r:
                return i
        raise ValueError(f"{x} not in tableau")

    def descents(self):
        """Entries i such that i+1 lies in a strictly lower row."""
        return tuple(i for i in range(1, self.n())
                     if self.row_of(i + 1) > self.row_of(i))

    def des(self):
        return len(self.descents())

    def maj(self):
        return sum(self.descents())

    def to_json(self):
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(r) for r in data["rows"]))


def enumerate_syt(shape):
    """All standard Young tableaux of the given shape (Partition or tuple)."""
    parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
    n = sum(parts)
    results = []
    grid = [[0] * p for p in parts]

    def rec(v):
        if v > n:
            results.append(StandardTableau(tuple(tuple(r) for r in grid)))
            return
        for i, row in enumerate(grid):
            for j in range(len(row)):
                if row[j] == 0:
                    if (j == 0 or row[j - 1] != 0) and (i == 0 or grid[i - 1][j] != 0):
                        row[j] = v
                        rec(v + 1)
                        row[j] = 0
                    break

    rec(1)
    return results


def enumerate_syt_all(n):
    """All standard Young tableaux with n boxes, grouped by shape order."""
    out = []
    for lam in partitions(n):
        out.extend(enumerate_syt(lam))
    return out


def enumerate_ssyt(shape, max_entry):
    """Semistandard tableaux of a shape with entries in 1..max_entry."""
    parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
    results = []
    grid = [[0] * p for p in parts]
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]

    def rec(idx):
        if idx == len(cells):
            results.append(tuple(tuple(r) for r in grid))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            grid[i][j] = v
            rec(idx + 1)
        grid[i][j] = 0

    rec(0)
    return results


def kostka(lam, mu):
    """Kostka number: semistandard tableaux of shape lam and content mu."""
    lam_p = lam.parts if isinstance(lam, Partition) else tuple(lam)
    mu_p = mu.parts if isinstance(mu, Partition) else tuple(mu)
    if sum(lam_p) != sum(mu_p):
        return 0
    count = 0
    for t in enumerate_ssyt(lam_p, len(mu_p)):
        content = [0] * len(mu_p)
        for row in t:
            for v in row:
                content[v - 1] += 1
        if tuple(content) == mu_p:
            count += 1
    return count


def count_I(m, k, t):
    """Closed count of bounded shuffle sequences: binom(m+t-k, t) * binom(m+t-1, k)."""
    return comb(m + t - k, t) * comb(m + t - 1, k)


def count_L(m, k, t):
    """Closed count of the spanning-label set for parameters (m, k, t)."""
    return (comb(m + t - 1, m) * comb(m, k)
            + comb(m + t - 1, m - 1) * comb(m - 1, k))


def sequence_bound(m, k, t):
    """The entrywise bound (t, t+1, ..., t+m-k-1, repeated top) of length m."""
    top = t + m - k - 1
    return tuple(list(range(t, t + m - k)) + [top] * k)


def enumerate_I(m, k, t):
    """Sequences c_1 < ... < c_{m-k}, c_{m-k+1} <= ... <= c_m of nonnegative
    integers under the entrywise bound for (m, k, t)."""
    bound = sequence_bound(m, k, t)
    strict_part = list(combinations(range(0, t + m - k), m - k))
    top = t + m - k - 1
    weak_part = []
    def rec(i, lo, acc):
        if i == k:
            weak_part.append(tuple(acc))
            return
        for v in range(lo, top + 1):
            acc.append(v)
            rec(i + 1, v, acc)
            acc.pop()
    rec(0, 0, [])
    out = []
    for s in strict_part:
        for w in weak_part:
            seq = s + w
            assert all(c <= b for c, b in zip(seq, bound))
            out.append(seq)
    return out
