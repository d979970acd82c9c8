"""Exact integer polynomials and evaluation at primitive roots of unity.

A primitive k-th root of unity is represented by the residue class of ``q`` in
``Z[q]/(Phi_k(q))``.  Everything here is exact Python-integer arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping


class IntPoly:
    """Dense univariate polynomial with integer coefficients (index = exponent)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> IntPoly:
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> IntPoly:
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return ((e, c) for e, c in enumerate(self.coeffs) if c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> IntPoly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> IntPoly:
        return _lift(other) - self

    def __mul__(self, other) -> IntPoly:
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division; the leading coefficient of ``divisor`` must be ±1."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dd] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * d
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor: IntPoly) -> IntPoly:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quot

    def __mod__(self, divisor: IntPoly) -> IntPoly:
        return self.divmod(divisor)[1]

    def truncate(self, order: int) -> IntPoly:
        """Drop every term of degree above ``order``."""
        return IntPoly(self.coeffs[: order + 1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[dict]:
        return [{"exp": e, "coeff": c} for e, c in self.items()]

    def format(self, var: str = "t") -> str:
        return _format_terms(((e, c) for e, c in self.items()), var)

    def __str__(self) -> str:
        return self.format("t")

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _lift(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot combine IntPoly with {type(x).__name__}")


def _monomial_str(e: int, var: str) -> str:
    return "1" if e == 0 else var if e == 1 else f"{var}^{e}"


def _format_terms(terms, var: str) -> str:
    """Highest degree first: ``t^4 - 2*t^3 + t^2``."""
    parts = []
    for e, c in sorted(terms, key=lambda ec: -ec[0]):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _monomial_str(e, var)
        else:
            body = f"{a}*{_monomial_str(e, var)}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


def one_minus_t_power(k: int) -> IntPoly:
    """``1 - t^k``."""
    return IntPoly([1]) - IntPoly.monomial(k)


def series_power_of_one_minus(k: int, e: int, order: int) -> IntPoly:
    """``(1 - t^k)^e`` as a power series truncated at degree ``order``; ``e`` may be negative."""
    if e >= 0:
        return (one_minus_t_power(k) ** e).truncate(order)
    m = -e
    return IntPoly.from_dict({k * j: comb(j + m - 1, m - 1) for j in range(order // k + 1)})


class BiPoly:
    """Sparse polynomial in ``q`` and ``t``: ``{(q_exp, t_exp): coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {key: c for key, c in (terms or {}).items() if c}

    @classmethod
    def from_t_coeffs(cls, coeffs: Mapping[int, IntPoly]) -> BiPoly:
        return cls({(a, j): c for j, poly in coeffs.items() for a, c in poly.items()})

    def t_coefficient(self, j: int) -> IntPoly:
        """Coefficient of ``t^j`` as a polynomial in ``q``."""
        return IntPoly.from_dict({a: c for (a, b), c in self.terms.items() if b == j})

    def t_degrees(self) -> list[int]:
        return sorted({b for _, b in self.terms})

    @property
    def t_degree(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def __neg__(self) -> BiPoly:
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({key: c * other for key, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def truncate_t(self, order: int) -> BiPoly:
        return BiPoly({(a, b): c for (a, b), c in self.terms.items() if b <= order})

    def at_q_equals_one(self) -> IntPoly:
        out: dict[int, int] = {}
        for (_, b), c in self.terms.items():
            out[b] = out.get(b, 0) + c
        return IntPoly.from_dict(out)

    def __call__(self, q, t):
        return sum(c * q ** a * t ** b for (a, b), c in self.terms.items())

    def to_json(self) -> list[dict]:
        return [{"q": a, "t": b, "coeff": c} for (a, b), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))]

    @classmethod
    def from_json(cls, records: list[dict]) -> BiPoly:
        return cls({(r["q"], r["t"]): r["coeff"] for r in records})

    def __str__(self) -> str:
        """``q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2``."""
        if not self.terms:
            return "0"
        chunks = []
        for j in sorted(self.t_degrees(), reverse=True):
            qpoly = self.t_coefficient(j)
            inner = qpoly.format("q")
            single = len(list(qpoly.items())) == 1
            negative = single and inner.startswith("-")
            if single:
                coeff = inner[1:] if negative else inner
            else:
                coeff = "(" + inner.replace(" ", "") + ")"
            if j == 0:
                body = coeff
            elif coeff == "1":
                body = _monomial_str(j, "t")
            else:
                body = f"{coeff}*{_monomial_str(j, 't')}"
            chunks.append(("-" if negative else "+", body))
        head = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        return head + "".join(f" {s} {b}" for s, b in chunks[1:])

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def q_pochhammer(n_plus_one: int) -> BiPoly:
    """``(t; q)_{n+1} = (1 - t)(1 - tq)...(1 - tq^n)`` as a polynomial in ``q`` and ``t``."""
    out = BiPoly({(0, 0): 1})
    for i in range(n_plus_one):
        out = out * BiPoly({(0, 0): 1, (i, 1): -1})
    return out


# -- cyclotomic ring ---------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> IntPoly:
    """``Phi_k``: divide ``q^k - 1`` by ``Phi_d`` for every proper divisor ``d``."""
    if k < 1:
        raise ValueError("k must be positive")
    poly = IntPoly.monomial(k) - 1
    for d in range(1, k):
        if k % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


class CycElem:
    """Element of ``Z[q]/(Phi_k)``; ``q`` itself is a primitive k-th root of unity."""

    __slots__ = ("k", "residue")

    def __init__(self, k: int, poly: IntPoly | int | Iterable[int] = 0):
        if isinstance(poly, int):
            poly = IntPoly([poly])
        elif not isinstance(poly, IntPoly):
            poly = IntPoly(poly)
        self.k = k
        self.residue = poly % cyclotomic_poly(k)

    @classmethod
    def root(cls, k: int) -> CycElem:
        return cls(k, IntPoly([0, 1]))

    def _check(self, other) -> CycElem:
        if isinstance(other, int):
            return CycElem(self.k, other)
        if other.k != self.k:
            raise ValueError("elements of different cyclotomic rings")
        return other

    def __add__(self, other) -> CycElem:
        return CycElem(self.k, self.residue + self._check(other).residue)

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem(self.k, -self.residue)

    def __sub__(self, other) -> CycElem:
        return self + (-self._check(other))

    def __mul__(self, other) -> CycElem:
        return CycElem(self.k, self.residue * self._check(other).residue)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycElem:
        result, base = CycElem(self.k, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def as_integer(self) -> int | None:
        """The integer this element equals, or None if it is not in the image of Z."""
        if self.residue.degree <= 0:
            return self.residue[0]
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycElem(self.k, other)
        return isinstance(other, CycElem) and self.k == other.k and self.residue == other.residue

    def __hash__(self):
        return hash((self.k, self.residue))

    def __str__(self) -> str:
        text = self.residue.format("q")
        return text if len(list(self.residue.items())) <= 1 else f"({text})"

    def __repr__(self) -> str:
        return f"CycElem(k={self.k}, {self.residue.format('q')})"


def reduce_mod_cyclotomic(poly: IntPoly, k: int) -> CycElem:
    return CycElem(k, poly)


class CycPolyT:
    """Polynomial in ``t`` with coefficients in ``Z[q]/(Phi_k)``."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Mapping[int, CycElem] | None = None):
        self.k = k
        self.coeffs = {j: c for j, c in (coeffs or {}).items() if not c.is_zero()}

    def __eq__(self, other) -> bool:
        return isinstance(other, CycPolyT) and self.k == other.k and self.coeffs == other.coeffs

    def __mul__(self, other: CycPolyT) -> CycPolyT:
        out: dict[int, CycElem] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, CycElem(self.k)) + a * b
        return CycPolyT(self.k, out)

    def __add__(self, other: CycPolyT) -> CycPolyT:
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out.get(j, CycElem(self.k)) + c
        return CycPolyT(self.k, out)

    def __str__(self) -> str:
        lifted = as_integer_poly(self)
        if lifted is not None:
            return lifted.format("t")
        parts = []
        for j in sorted(self.coeffs, reverse=True):
            c = self.coeffs[j]
            mono = _monomial_str(j, "t")
            if j == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CycPolyT(k={self.k}, {self})"


def eval_at_root(f: BiPoly, k: int) -> CycPolyT:
    """Substitute a primitive k-th root of unity for ``q``, collecting by powers of ``t``."""
    if k < 1:
        raise ValueError("k must be positive")
    phi = cyclotomic_poly(k)
    # q^a only matters modulo k since q^k = 1 in the quotient ring
    by_t: dict[int, dict[int, int]] = {}
    for (a, b), c in f.terms.items():
        row = by_t.setdefault(b, {})
        row[a % k] = row.get(a % k, 0) + c
    return CycPolyT(k, {b: CycElem(k, IntPoly.from_dict(row) % phi) for b, row in by_t.items()})


def as_integer_poly(p: CycPolyT) -> IntPoly | None:
    """The integer polynomial in ``t`` equal to ``p``, or None if some coefficient is not an integer."""
    out = {}
    for j, c in p.coeffs.items():
        v = c.as_integer()
        if v is None:
            return None
        out[j] = v
    return IntPoly.from_dict(out)


def pochhammer(k: int, n: int) -> IntPoly:
    """``(t; xi)_{n+1} = (1 - t)(1 - t^k)^{n/k}`` for ``k | n``."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if n % k:
        raise ValueError(f"k={k} does not divide n={n}")
    return one_minus_t_power(1) * one_minus_t_power(k) ** (n // k)
