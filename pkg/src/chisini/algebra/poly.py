"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a mapping from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients.  The canonical monomial order is
graded lexicographic with respect to the variable list as given, so

    >>> str(parse("v^2 - 4*z^3", ["z", "v"]))
    '-4*z^3 + v^2'

Instances are immutable; binary operations on polynomials over different
variable lists act on the union of the lists (left operand's variables
first).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

Exponent = tuple


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated variable in {vs}")
        clean: dict = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(vs):
                raise ValueError(f"exponent {exp} does not match variables {vs}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = c
        self._vars = vs
        self._terms = clean
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, c, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            variables = variables + (name,)
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def from_univariate(cls, coeffs: Sequence, var: str) -> "MultiPoly":
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, "MultiPoly"], var: str,
                    variables: Sequence[str]) -> "MultiPoly":
        """Rebuild ``sum c_k * var^k`` from coefficient polynomials."""
        x = cls.var(var, variables)
        out = cls(x.variables)
        for k, c in coeffs.items():
            out = out + c * x ** k
        return out.with_variables(variables) if var in variables else out

    # -- basic accessors ----------------------------------------------
    @property
    def variables(self) -> tuple:
        return self._vars

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self._vars), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self._vars), Fraction(0))

    def used_variables(self) -> tuple:
        used = set()
        for exp in self._terms:
            used.update(i for i, e in enumerate(exp) if e)
        return tuple(v for i, v in enumerate(self._vars) if i in used)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if omitted); ``-1`` for zero."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        if var not in self._vars:
            return 0
        i = self._vars.index(var)
        return max(e[i] for e in self._terms)

    def order(self) -> int:
        """Lowest total degree of a term; ``-1`` for zero."""
        if not self._terms:
            return -1
        return min(sum(e) for e in self._terms)

    def free_of(self, var: str) -> bool:
        return self.degree(var) <= 0

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly(self._vars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def leading_exponent(self) -> Exponent:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=_grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_exponent()]

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # -- variable management ------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if variables == self._vars:
            return self
        pos = []
        for v in variables:
            pos.append(self._vars.index(v) if v in self._vars else None)
        for i, v in enumerate(self._vars):
            if v not in variables and any(e[i] for e in self._terms):
                raise ValueError(f"variable {v} is used and cannot be dropped")
        terms = {tuple(e[p] if p is not None else 0 for p in pos): c
                 for e, c in self._terms.items()}
        return MultiPoly(variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        new = tuple(mapping.get(v, v) for v in self._vars)
        return MultiPoly(new, self._terms)

    def _coerce(self, other) -> tuple["MultiPoly", "MultiPoly"]:
        if not isinstance(other, MultiPoly):
            return self, MultiPoly.constant(other, self._vars)
        if other._vars == self._vars:
            return self, other
        union = self._vars + tuple(v for v in other._vars if v not in self._vars)
        return self.with_variables(union), other.with_variables(union)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = MultiPoly.constant(other, self._vars)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._coerce(other)
        terms = dict(a._terms)
        for e, c in b._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(a._vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly(self._vars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._coerce(other)
        terms: dict = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(a._vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.is_constant() and other:
                other = other.constant_value()
            else:
                return self.divexact(other)
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self * (1 / other)

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._coerce(other)
        return a._terms == b._terms

    def __hash__(self) -> int:
        if self._hash is None:
            used = self.used_variables()
            p = self.with_variables(used)
            self._hash = hash((p._vars, frozenset(p._terms.items())))
        return self._hash

    # -- calculus and substitution ------------------------------------
    def derivative(self, var: str) -> "MultiPoly":
        if var not in self._vars:
            return MultiPoly(self._vars)
        i = self._vars.index(var)
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(self._vars, terms)

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute polynomials or numbers for variables.

        The result keeps the original variable list (plus any new variables
        introduced by substituted polynomials).
        """
        values = {k: v for k, v in values.items() if k in self._vars}
        if not values:
            return self
        out_vars = list(self._vars)
        for v in values.values():
            if isinstance(v, MultiPoly):
                out_vars += [x for x in v.variables if x not in out_vars]
        out_vars = tuple(out_vars)
        idx = {v: self._vars.index(v) for v in values}
        power_cache: dict = {}

        def power(name, k):
            key = (name, k)
            if key not in power_cache:
                val = values[name]
                if not isinstance(val, MultiPoly):
                    val = MultiPoly.constant(val, out_vars)
                power_cache[key] = val.with_variables(out_vars) ** k
            return power_cache[key]

        acc: dict = {}
        for e, c in self._terms.items():
            rest = tuple(0 if v in values else e[i] for i, v in enumerate(self._vars))
            mono = MultiPoly(self._vars, {rest: c}).with_variables(out_vars)
            for name, i in idx.items():
                if e[i]:
                    mono = mono * power(name, e[i])
            for ee, cc in mono._terms.items():
                acc[ee] = acc.get(ee, 0) + cc
        result = MultiPoly(out_vars, acc)
        return result

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        p = self.subs(values)
        if not p.is_constant():
            raise ValueError("evaluation left free variables")
        return p.constant_value()

    def translate(self, shifts: Mapping[str, object]) -> "MultiPoly":
        """Return ``p(x + a, ...)`` for the given shifts ``{x: a}``."""
        vals = {v: MultiPoly.var(v, self._vars) + a for v, a in shifts.items()}
        return self.subs(vals).with_variables(self._vars)

    # -- univariate views ---------------------------------------------
    def coeffs_in(self, var: str) -> dict:
        """Coefficients as polynomials in the remaining variables."""
        rest = tuple(v for v in self._vars if v != var)
        if var not in self._vars:
            return {0: self} if self else {}
        i = self._vars.index(var)
        groups: dict = {}
        for e, c in self._terms.items():
            k = e[i]
            groups.setdefault(k, {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly(rest, t) for k, t in groups.items()}

    def is_univariate_in(self, var: str) -> bool:
        return all(v == var for v in self.used_variables())

    def to_univariate(self, var: str) -> tuple:
        """Dense coefficient tuple (low degree first); requires univariate."""
        if not self.is_univariate_in(var):
            raise ValueError(f"{self} is not univariate in {var}")
        if not self._terms:
            return ()
        i = self._vars.index(var) if var in self._vars else None
        d = self.degree(var)
        out = [Fraction(0)] * (d + 1)
        for e, c in self._terms.items():
            out[e[i] if i is not None else 0] += c
        return tuple(out)

    # -- normalization and division -----------------------------------
    def monic(self) -> "MultiPoly":
        """Scale so that the grlex-leading coefficient is 1."""
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient())

    def divmod(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by a single divisor in grlex order."""
        a, b = self._coerce(other)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        lead = b.leading_exponent()
        lc = b._terms[lead]
        rem_terms = dict(a._terms)
        quo: dict = {}
        out_rem: dict = {}
        bt = list(b._terms.items())
        while rem_terms:
            e = max(rem_terms, key=_grlex_key)
            c = rem_terms[e]
            if all(x >= y for x, y in zip(e, lead)):
                qe = tuple(x - y for x, y in zip(e, lead))
                qc = c / lc
                quo[qe] = quo.get(qe, 0) + qc
                for be, bc in bt:
                    te = tuple(x + y for x, y in zip(qe, be))
                    nv = rem_terms.get(te, 0) - qc * bc
                    if nv:
                        rem_terms[te] = nv
                    else:
                        rem_terms.pop(te, None)
            else:
                out_rem[e] = c
                del rem_terms[e]
        return MultiPoly(a._vars, quo), MultiPoly(a._vars, out_rem)

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "MultiPoly") -> bool:
        return not other.divmod(self)[1]

    # -- printing -----------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self._vars, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({list(self._vars)!r}, {str(self)!r})"


# -- text grammar ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9]*)|(\S))")


class PolySyntaxError(ValueError):
    pass


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if op not in "+-*^/()":
                raise PolySyntaxError(f"unexpected character {op!r} at offset {m.start(3)}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.toks = tokens
        self.i = 0
        self.vars = variables

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}, got {val!r}")

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    raise PolySyntaxError("division only by nonzero constants")
                acc = acc / rhs.constant_value()
        return acc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer literal")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return MultiPoly.constant(val, self.vars)
        if kind == "name":
            if val not in self.vars:
                raise PolySyntaxError(f"unknown variable {val!r}")
            return MultiPoly.var(val, self.vars)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolySyntaxError(f"unexpected token {val!r}")


def parse(text: str, variables: Sequence[str] | None = None) -> MultiPoly:
    """Parse the polynomial text grammar.

    Integer literals, names ``[a-zA-Z][a-zA-Z0-9]*``, ``+ - * ^``,
    parentheses, and division by constants (so that printed rationals
    round-trip).  Implicit multiplication is rejected.  Without an explicit
    variable list the variables are the names used, sorted.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty polynomial")
    if variables is None:
        variables = sorted({v for k, v in tokens if k == "name"})
    p = _Parser(tokens, tuple(variables))
    result = p.expr()
    if p.i != len(tokens):
        raise PolySyntaxError(f"unexpected token {p.peek()[1]!r} (implicit multiplication is not allowed)")
    return result.with_variables(tuple(variables))
