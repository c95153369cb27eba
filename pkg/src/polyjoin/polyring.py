"""Multivariate polynomials with integer coefficients, Laurent in ``s``.

A :class:`MultiPoly` carries a declared variable list and a map from
exponent vectors to nonzero integer coefficients.  Only variables in
:data:`LAURENT` may carry negative exponents.

Canonical rendering sorts terms lexicographically by exponent vector, with
the Laurent variable placed last in the comparison key, e.g.
``1 + s*t1*t2*t3`` or ``1 - s^-1*t^4``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError

LAURENT = frozenset({"s"})


def _merge(a: tuple[str, ...], b: Iterable[str]) -> tuple[str, ...]:
    out = list(a)
    for v in b:
        if v not in out:
            out.append(v)
    return tuple(out)


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise DomainError(f"repeated variable in {self.vars}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise DomainError("exponent vector length does not match the variable list")
            for v, e in zip(self.vars, exps):
                if e < 0 and v not in LAURENT:
                    raise DomainError(f"negative exponent for non-Laurent variable {v}")
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction --------------------------------------------------------

    @classmethod
    def const(cls, c: int, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        return cls.monomial({name: 1}, 1, variables)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1,
                 variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else tuple(exps)
        variables = _merge(variables, exps)
        return cls(variables, {tuple(exps.get(v, 0) for v in variables): coeff})

    @classmethod
    def univariate(cls, coeffs: Iterable[int], name: str = "t") -> "MultiPoly":
        """``sum(c_i * name^i)`` from the coefficient list ``c_0, c_1, ...``."""
        return cls((name,), {(i,): c for i, c in enumerate(coeffs)})

    # structure -----------------------------------------------------------

    def aligned(self, variables: Iterable[str]) -> "MultiPoly":
        """Same polynomial over a variable list that contains all used variables."""
        variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.vars, exps):
                if e:
                    if v not in pos:
                        raise DomainError(f"variable {v} is used but missing from {variables}")
                    new[pos[v]] = e
            out[tuple(new)] = c
        return MultiPoly(variables, out)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def _key(self) -> frozenset:
        return frozenset(
            (frozenset((v, e) for v, e in zip(self.vars, exps) if e), c)
            for exps, c in self.terms.items()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coefficients(self, name: str = "t") -> list[int]:
        """Coefficient list of a univariate polynomial in ``name``."""
        p = self.aligned((name,)) if self.vars != (name,) else self
        out = [0] * (p.degree(name) + 1)
        for (e,), c in p.terms.items():
            if e < 0:
                raise DomainError("negative exponent in coefficient list")
            out[e] = c
        return out

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.const(other)
        if isinstance(other, MultiPoly):
            return other
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        variables = _merge(self.vars, other.vars)
        a, b = self.aligned(variables), other.aligned(variables)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        variables = _merge(self.vars, other.vars)
        a, b = self.aligned(variables), other.aligned(variables)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(variables, out)

    __rmul__ = __mul__

    def is_invertible_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (exps, c), = self.terms.items()
        return c in (1, -1) and all(e == 0 or v in LAURENT for v, e in zip(self.vars, exps))

    def inverse(self) -> "MultiPoly":
        if not self.is_invertible_monomial():
            raise DomainError(f"{self} is not an invertible monomial")
        (exps, c), = self.terms.items()
        return MultiPoly(self.vars, {tuple(-e for e in exps): c})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            return self.inverse() ** (-k)
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # substitution and evaluation -----------------------------------------

    def substitute(self, bindings: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Simultaneous substitution; unbound variables stay as they are.

        A variable that occurs with a negative exponent must be bound to an
        invertible monomial.
        """
        images = {}
        for v in self.vars:
            img = bindings.get(v, MultiPoly.var(v))
            images[v] = self._coerce(img)
        powers: dict[tuple[str, int], MultiPoly] = {}
        result = MultiPoly(())
        for exps, c in self.terms.items():
            term = MultiPoly.const(c)
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                if (v, e) not in powers:
                    if e < 0 and not images[v].is_invertible_monomial():
                        raise DomainError(
                            f"{v} occurs with exponent {e} but is bound to non-invertible {images[v]}"
                        )
                    powers[v, e] = images[v] ** e
                term = term * powers[v, e]
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, "int | Fraction"]) -> "Fraction | MultiPoly":
        """Value at ``point``; a polynomial in the unbound variables if some remain.

        Partial evaluation must keep coefficients integral.
        """
        missing = [v for v in self.used_vars() if v not in point]
        if not missing:
            total = Fraction(0)
            for exps, c in self.terms.items():
                val = Fraction(c)
                for v, e in zip(self.vars, exps):
                    if e:
                        x = Fraction(point[v])
                        if x == 0 and e < 0:
                            raise ZeroDivisionError(f"{v} = 0 with negative exponent {e}")
                        val *= x ** e
                total += val
            return total
        bound = {}
        for v, x in point.items():
            x = Fraction(x)
            if x.denominator != 1:
                raise DomainError("partial evaluation needs integer values")
            bound[v] = MultiPoly.const(int(x))
        for v, x in bound.items():
            if x.is_zero() and any(e[self.vars.index(v)] < 0 for e in self.terms if v in self.vars):
                raise ZeroDivisionError(f"{v} = 0 with a negative exponent")
        out = self.substitute(bound)
        return out.aligned(tuple(v for v in self.vars if v not in point))

    def __call__(self, **point):
        return self.evaluate(point)

    # rendering -----------------------------------------------------------

    def _sort_key(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        plain = [e for v, e in zip(self.vars, exps) if v not in LAURENT]
        laurent = [e for v, e in zip(self.vars, exps) if v in LAURENT]
        return tuple(plain + laurent)

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, key=self._sort_key):
            c = self.terms[exps]
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            mag = abs(c)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            pieces.append((c < 0, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r}, vars={self.vars})"


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly | int]) -> MultiPoly:
    return p.substitute(bindings)


def specialize_b(p: MultiPoly, s: str = "s", t: str = "t") -> MultiPoly:
    """``s -> s^-1`` and every other variable ``-> t^2``."""
    tt = MultiPoly.monomial({t: 2})
    bindings: dict[str, MultiPoly] = {v: tt for v in p.vars if v != s}
    bindings[s] = MultiPoly.monomial({s: -1})
    out = p.substitute(bindings)
    order = (s, t)
    return out.aligned(order)


def evaluate(p: MultiPoly, point: Mapping[str, int | Fraction]):
    return p.evaluate(point)
