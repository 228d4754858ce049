"""Sparse multivariate polynomials with arbitrary-precision integer coefficients.

Two variable sets are supported: torus variables ``y1..yd`` (all of degree 1)
and generic coefficients ``c1..cn`` where ``ci`` has degree ``i``.  A
polynomial is a map from exponent vectors to nonzero ints; values are
immutable and hashable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping


class VarSpecMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VarSpec:
    kind: str  # "y" (torus) or "c" (generic)
    count: int

    def __post_init__(self):
        if self.kind not in ("y", "c"):
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.count < 1:
            raise ValueError("a variable set needs at least one variable")

    @property
    def degrees(self) -> tuple[int, ...]:
        if self.kind == "y":
            return (1,) * self.count
        return tuple(range(1, self.count + 1))

    def name(self, i: int) -> str:
        return f"{self.kind}{i + 1}"

    def var(self, i: int) -> "Poly":
        """The i-th variable, 1-based (``var(2)`` is y2 or c2)."""
        if not 1 <= i <= self.count:
            raise IndexError(f"{self.kind}{i} is not in {self}")
        exp = [0] * self.count
        exp[i - 1] = 1
        return Poly(self, {tuple(exp): 1})

    def const(self, c: int) -> "Poly":
        return Poly(self, {(0,) * self.count: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def __str__(self):
        return f"{self.kind}1..{self.kind}{self.count}"


def torus_vars(d: int) -> VarSpec:
    return VarSpec("y", d)


def generic_vars(n: int) -> VarSpec:
    return VarSpec("c", n)


def _pack(exp, width: int) -> int:
    key = 0
    for x in exp:
        key = (key << width) | x
    return key


def _unpack(key: int, width: int, mask: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & mask
        key >>= width
    return tuple(out)


class Poly:
    """Immutable sparse polynomial over the integers.

    >>> S = torus_vars(3)
    >>> y1, y2, y3 = (S.var(i) for i in (1, 2, 3))
    >>> str((y3 - y1) * (y3 - y2))
    'y3^2 - y2*y3 - y1*y3 + y1*y2'
    """

    __slots__ = ("spec", "terms", "_hash")

    def __init__(self, spec: VarSpec, terms: Mapping[tuple[int, ...], int] | None = None):
        self.spec = spec
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    if len(exp) != spec.count:
                        raise ValueError(f"exponent vector {exp} does not match {spec}")
                    clean[exp] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, spec, terms):
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.spec = spec
        p.terms = terms
        p._hash = None
        return p

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise VarSpecMismatch(f"cannot combine polynomials over {self.spec} and {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.const(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                del out[exp]
        return Poly._raw(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.spec, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly._raw(self.spec, {})
            return Poly._raw(self.spec, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly._raw(self.spec, {})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return Poly._raw(self.spec, {tuple([x + y for x, y in zip(ea, eb)]): ca * cb
                                         for ea, ca in a.items()})
        # exponent vectors packed into one int so that monomial products are int additions
        width = max(max(map(max, a)), max(map(max, b))).bit_length() + 1
        pa = [(_pack(e, width), c) for e, c in a.items()]
        out: dict[int, int] = {}
        get = out.get
        for eb, cb in b.items():
            kb = _pack(eb, width)
            for ka, ca in pa:
                key = ka + kb
                out[key] = get(key, 0) + ca * cb
        n = self.spec.count
        mask = (1 << width) - 1
        return Poly._raw(self.spec, {_unpack(key, width, mask, n): c
                                     for key, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        """Integer value of a constant polynomial; raises if not constant."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return sum(self.terms.values())

    def monomial_degree(self, exp) -> int:
        return sum(d * e for d, e in zip(self.spec.degrees, exp))

    def degrees(self) -> set[int]:
        return {self.monomial_degree(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def substitute(self, values: Mapping[int, "Poly | int"]) -> "Poly":
        """Replace variable i (1-based) by ``values[i]``; other variables stay."""
        spec = self.spec
        vals = {i: (v if isinstance(v, Poly) else spec.const(v)) for i, v in values.items()}
        out = spec.zero()
        for exp, c in self.terms.items():
            kept = list(exp)
            term = spec.const(c)
            for i, v in vals.items():
                e = exp[i - 1]
                if e:
                    kept[i - 1] = 0
                    term = term * v**e
            out = out + term * Poly._raw(spec, {tuple(kept): 1})
        return out

    def rename(self, src: int, dst: int) -> "Poly":
        """Substitute variable ``src`` by variable ``dst`` (1-based)."""
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[dst - 1] += e[src - 1]
            e[src - 1] = 0
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return Poly(self.spec, out)

    # -- display ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lex order, largest first (y1 < y2 < ...)."""
        return sorted(self.terms.items(),
                      key=lambda t: (self.monomial_degree(t[0]), t[0][::-1]),
                      reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({str(self)!r}, {self.spec.kind}{self.spec.count})"


def _monomial_str(spec: VarSpec, exp) -> str:
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(spec.name(i))
        elif e:
            parts.append(f"{spec.name(i)}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical string, e.g. ``2*y2*y3 - y1^2 + 1``."""
    if not p.terms:
        return "0"
    out = []
    for exp, c in p.sorted_terms():
        mono = _monomial_str(p.spec, exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_poly(text: str, spec: VarSpec) -> Poly:
    """Parse the canonical format (whitespace-insensitive, any term order)."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial string")
    pos = 0
    terms: dict[tuple[int, ...], int] = {}
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        exp = [0] * spec.count
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            base, _, power = factor.partition("^")
            if not power:
                power = "1"
            if (len(base) < 2 or base[0] != spec.kind or not base[1:].isdigit()
                    or not power.isdigit()):
                raise ValueError(f"bad factor {factor!r} in {text!r} for {spec}")
            idx = int(base[1:])
            if not 1 <= idx <= spec.count:
                raise ValueError(f"variable {base} out of range for {spec}")
            exp[idx - 1] += int(power)
        e = tuple(exp)
        terms[e] = terms.get(e, 0) + sign * coeff
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return Poly(spec, terms)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def _spec_of(vars: Iterable[Poly], spec: VarSpec | None) -> VarSpec:
    if spec is not None:
        return spec
    for v in vars:
        return v.spec
    raise ValueError("need a VarSpec when the argument list is empty")


def complete_h(m: int, vars: list[Poly], spec: VarSpec | None = None) -> Poly:
    """Complete homogeneous symmetric polynomial h_m evaluated at ``vars``."""
    if m < 0:
        raise ValueError("h_m needs m >= 0")
    spec = _spec_of(vars, spec)
    # row[j] = h_j(first r arguments); h_j(v1..vr) = h_j(v1..v_{r-1}) + v_r h_{j-1}(v1..vr)
    row = [spec.one()] + [spec.zero()] * m
    for v in vars:
        for j in range(1, m + 1):
            row[j] = row[j] + v * row[j - 1]
    return row[m]


def elementary_e(m: int, vars: list[Poly], spec: VarSpec | None = None) -> Poly:
    """Elementary symmetric polynomial e_m evaluated at ``vars`` (0 if m > len)."""
    if m < 0:
        raise ValueError("e_m needs m >= 0")
    spec = _spec_of(vars, spec)
    if m > len(vars):
        return spec.zero()
    row = [spec.one()] + [spec.zero()] * m
    for v in vars:
        for j in range(m, 0, -1):
            row[j] = row[j] + v * row[j - 1]
    return row[m]


def _as_linear_difference(d: Poly):
    """Return (sign, a, b) with d = sign*(x_a - x_b), b may be None for d = sign*x_a."""
    lin = {}
    for exp, c in d.terms.items():
        if sum(exp) != 1 or abs(c) != 1:
            return None
        lin[exp.index(1) + 1] = c
    if len(lin) == 1:
        (a, c), = lin.items()
        return c, a, None
    if len(lin) == 2:
        (a, ca), (b, cb) = lin.items()
        if ca == -cb:
            return (ca, a, b)
    return None


def divides(d: Poly, p: Poly) -> bool:
    """Exact divisibility of ``p`` by ``d``.

    Supported divisors are nonzero integer constants, ``±x_a`` and
    ``±(x_a - x_b)``; the last case is decided by substituting x_a := x_b.
    """
    if d.spec != p.spec:
        raise VarSpecMismatch(f"{d.spec} vs {p.spec}")
    if d.is_zero():
        raise ZeroDivisionError("divisibility by the zero polynomial")
    if not p.terms:
        return True
    if d.is_constant():
        c = d.constant_value()
        return all(v % c == 0 for v in p.terms.values())
    shape = _as_linear_difference(d)
    if shape is None:
        raise ValueError(f"divisibility test only supports variable differences, got {d}")
    _, a, b = shape
    if b is None:
        return p.substitute({a: 0}).is_zero()
    return p.rename(a, b).is_zero()

