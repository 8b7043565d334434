"""Exact sparse polynomials in q and x_1..x_n, and the generating functions.

Terms map (q exponent, sparse x exponent vector) to integer coefficients;
all identity checks are structural equalities of canonical forms.
"""

import json
from itertools import permutations

from .charge import charge
from .core import conjugate, partitions, sort_to_partition
from .errors import SizeMismatch, VariableCountMismatch
from .fillings import enumerate_coquinv_free, maj_filling
from .mlq import (
    MultilineQueue,
    column_word,
    enumerate_gmlq,
    enumerate_mlq,
    is_nonwrapping,
    maj,
    maj_g,
)
from .collapse import maj_of_rotation
from .core import is_lattice
from .mlq import row_word
from .tableaux import Tableau, enumerate_skew_ssyt, enumerate_ssyt, tableau_charge


class QXPolynomial:
    """Polynomial in q and x_1..x_n with integer coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for key, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if coeff:
                    self.terms[key] = self.terms.get(key, 0) + coeff
            self.terms = {k: v for k, v in self.terms.items() if v}

    @staticmethod
    def zero(n: int):
        return QXPolynomial(n)

    @staticmethod
    def one(n: int):
        return QXPolynomial(n, {(0, ()): 1})

    @staticmethod
    def monomial(n: int, q_exp=0, x_exps=(), coeff=1):
        """x_exps is a map or item list {variable (1-based): exponent}."""
        items = x_exps.items() if isinstance(x_exps, dict) else x_exps
        key = tuple(sorted((i, e) for i, e in items if e))
        return QXPolynomial(n, {(q_exp, key): coeff})

    def _check(self, other):
        if self.n != other.n:
            raise VariableCountMismatch(f"{self.n} != {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return QXPolynomial(self.n, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) - coeff
        return QXPolynomial(self.n, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return QXPolynomial(self.n, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out = {}
        for (q1, x1), c1 in self.terms.items():
            e1 = dict(x1)
            for (q2, x2), c2 in other.terms.items():
                merged = dict(e1)
                for i, e in x2:
                    merged[i] = merged.get(i, 0) + e
                key = (q1 + q2, tuple(sorted(merged.items())))
                out[key] = out.get(key, 0) + c1 * c2
        return QXPolynomial(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, QXPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def num_terms(self):
        return len(self.terms)

    def substitute_q(self, value: int):
        """Evaluate q at an integer, keeping the x variables."""
        out = {}
        for (qe, xs), coeff in self.terms.items():
            key = (0, xs)
            out[key] = out.get(key, 0) + coeff * value**qe
        return QXPolynomial(self.n, out)

    def swap_vars(self, i: int, j: int):
        out = {}
        for (qe, xs), coeff in self.terms.items():
            swapped = tuple(
                sorted((j if v == i else i if v == j else v, e) for v, e in xs)
            )
            out[(qe, swapped)] = out.get((qe, swapped), 0) + coeff
        return QXPolynomial(self.n, out)

    def _sorted_terms(self):
        def grade(item):
            (qe, xs), _ = item
            total = qe + sum(e for _, e in xs)
            return (total, qe, xs)

        return sorted(self.terms.items(), key=grade)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (qe, xs), coeff in self._sorted_terms():
            factors = []
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            for i, e in xs:
                factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts)

    def to_json(self) -> str:
        items = [
            {"coeff": coeff, "q": qe, "x": {str(i): e for i, e in xs}}
            for (qe, xs), coeff in self._sorted_terms()
        ]
        return json.dumps({"n": self.n, "terms": items})

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"QXPolynomial({self.n}, {self.to_text()!r})"


def x_monomial(n: int, counts, q_exp=0) -> QXPolynomial:
    """Monomial q^q_exp * prod x_i^counts[i-1] from a content vector."""
    return QXPolynomial.monomial(
        n, q_exp, {i + 1: e for i, e in enumerate(counts) if e}
    )


def _mlq_weight(n, m: MultilineQueue, q_exp) -> QXPolynomial:
    return x_monomial(n, m.column_content(), q_exp)


def schur(lam, n: int) -> QXPolynomial:
    """Schur polynomial as the weight sum over nonwrapping queues."""
    out = QXPolynomial.zero(n)
    if conjugate(lam) and conjugate(lam)[0] > n:
        return out
    for m in enumerate_mlq(lam, n):
        if is_nonwrapping(m):
            out = out + _mlq_weight(n, m, 0)
    return out


def schur_by_ssyt(lam, n: int) -> QXPolynomial:
    """Independent oracle: content sum over semistandard tableaux."""
    out = QXPolynomial.zero(n)
    for t in enumerate_ssyt(lam, max_entry=n):
        out = out + x_monomial(n, t.content())
    return out


def q_whittaker_mlq(lam, n: int) -> QXPolynomial:
    """Weight generating function q^maj x^M over all queues of shape lam."""
    out = QXPolynomial.zero(n)
    if conjugate(lam) and conjugate(lam)[0] > n:
        return out
    for m in enumerate_mlq(lam, n):
        out = out + _mlq_weight(n, m, maj(m))
    return out


def q_whittaker_gmlq(alpha, n: int) -> QXPolynomial:
    """The generalized-queue form over row sizes alpha."""
    out = QXPolynomial.zero(n)
    if any(a > n for a in alpha):
        return out
    for m in enumerate_gmlq(alpha, n):
        out = out + _mlq_weight(n, m, maj_g(m))
    return out


def kostka_foulkes_charge(lam, mu) -> QXPolynomial:
    """K_{lam,mu}(q) as the charge sum over SSYT(lam, mu)."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    out = QXPolynomial.zero(0)
    for t in enumerate_ssyt(lam, weight=mu):
        out = out + QXPolynomial.monomial(0, tableau_charge(t))
    return out


def kostka_foulkes_lattice(lam, mu) -> QXPolynomial:
    """The same via queues with row content mu, column content lam',
    and lattice row word."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    target = conjugate(lam)
    n = lam[0] if lam else 1
    out = QXPolynomial.zero(0)
    if mu and mu[0] > n:
        return out
    for m in enumerate_gmlq(tuple(mu), n):
        if m.column_content()[: len(target)] != target:
            continue
        if any(c for c in m.column_content()[len(target):]):
            continue
        if not is_lattice(row_word(m)):
            continue
        out = out + QXPolynomial.monomial(0, maj(m))
    return out


def kostka_foulkes_rotated(lam, mu) -> QXPolynomial:
    """The same via nonwrapping queues of shape lam with column content mu,
    each weighted by the major index of its quarter turn."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    n = len(mu) if mu else 1
    out = QXPolynomial.zero(0)
    if conjugate(lam) and conjugate(lam)[0] > n:
        return out
    for m in enumerate_mlq(lam, n):
        if m.column_content()[: len(mu)] != tuple(mu):
            continue
        if not is_nonwrapping(m):
            continue
        out = out + QXPolynomial.monomial(0, maj_of_rotation(m))
    return out


def kostka_foulkes(lam, mu) -> QXPolynomial:
    """Kostka-Foulkes polynomial, computed three ways and cross-checked."""
    a = kostka_foulkes_charge(lam, mu)
    b = kostka_foulkes_lattice(lam, mu)
    c = kostka_foulkes_rotated(lam, mu)
    assert a == b == c, f"Kostka paths disagree for {lam}, {mu}"
    return a


def q_whittaker_charge_expansion(mu, n: int) -> QXPolynomial:
    """Schur expansion: sum over lam of K_{lam',mu'}(q) times s_lam."""
    out = QXPolynomial.zero(n)
    mu_conj = conjugate(mu)
    for lam in partitions(sum(mu)):
        coeff = kostka_foulkes_charge(conjugate(lam), mu_conj)
        if coeff.is_zero():
            continue
        s = schur(lam, n)
        if s.is_zero():
            continue
        out = out + QXPolynomial(n, dict(coeff.terms)) * s
    return out


def q_whittaker_coquinv(lam, n: int) -> QXPolynomial:
    """Weight sum over coquinv-free fillings."""
    out = QXPolynomial.zero(n)
    if conjugate(lam) and conjugate(lam)[0] > n:
        return out
    for tau in enumerate_coquinv_free(lam, n):
        counts = [0] * n
        for row in tau.rows:
            for v in row:
                counts[v - 1] += 1
        out = out + x_monomial(n, counts, maj_filling(tau))
    return out


def is_symmetric(p: QXPolynomial) -> bool:
    """Invariance under every adjacent swap of the x variables."""
    for i in range(1, p.n):
        if p.swap_vars(i, i + 1) != p:
            return False
    return True


def dual_cauchy_check(n: int, length: int):
    """Both sides of the dual Cauchy identity in n + length variables.

    Returns (left, right); x variables are 1..n and y variables are
    n+1..n+length.
    """
    total = n + length
    left = QXPolynomial.zero(total)
    for size in range(0, n * length + 1):
        for lam in partitions(size):
            if len(lam) > n or (lam and lam[0] > length):
                continue
            s_x = _shift_schur(lam, n, total, 0)
            s_y = _shift_schur(conjugate(lam), length, total, n)
            left = left + s_x * s_y
    right = QXPolynomial.one(total)
    for i in range(1, n + 1):
        for j in range(n + 1, total + 1):
            right = right * QXPolynomial(
                total, {(0, ()): 1, (0, ((i, 1), (j, 1))): 1}
            )
    return left, right


def _shift_schur(lam, vars_inner, total, offset) -> QXPolynomial:
    """Schur polynomial in vars offset+1..offset+vars_inner, in a larger ring."""
    inner = schur(lam, vars_inner)
    out = {}
    for (qe, xs), coeff in inner.terms.items():
        shifted = tuple(sorted((i + offset, e) for i, e in xs))
        out[(qe, shifted)] = coeff
    return QXPolynomial(total, out)


def rearrangements(parts):
    seen = set()
    for p in permutations(parts):
        if p not in seen:
            seen.add(p)
            yield p


def q_whittaker_all_ways(lam, n: int):
    """The four q-Whittaker computations, as a dict keyed by route name."""
    ways = {
        "mlq": q_whittaker_mlq(lam, n),
        "charge": q_whittaker_charge_expansion(lam, n),
        "coquinv": q_whittaker_coquinv(lam, n),
    }
    gm = None
    for alpha in rearrangements(conjugate(lam)):
        p = q_whittaker_gmlq(alpha, n)
        if gm is None:
            gm = p
        elif gm != p:
            raise AssertionError(f"rearrangement {alpha} disagrees")
    ways["gmlq"] = gm if gm is not None else QXPolynomial.one(n)
    return ways


def skew_schur(outer, inner, n: int) -> QXPolynomial:
    """Content sum over skew semistandard tableaux with entries at most n."""
    out = QXPolynomial.zero(n)
    if sum(outer) == sum(inner):
        return QXPolynomial.one(n)
    for t in enumerate_skew_ssyt(outer, inner, max_entry=n):
        out = out + x_monomial(n, t.content())
    return out
