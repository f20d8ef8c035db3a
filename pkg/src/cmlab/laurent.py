"""Exact multivariate Laurent polynomials with integer coefficients.

A polynomial lives over a :class:`VarTable`, an ordered tuple of variable
names.  Exponent vectors are packed into a single integer (one biased
fixed-width field per variable, first variable most significant), so
monomial multiplication is integer addition and the numeric order of the
packed keys is the lexicographic order of the exponent vectors.
"""
from __future__ import annotations

import ast
import heapq
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

Exponent = Tuple[int, ...]

_WIDTH = 24
_BIAS = 1 << (_WIDTH - 1)
_FIELD = (1 << _WIDTH) - 1
# stored exponents stay below this so that a sum of two never leaves its field
_LIMIT = 1 << (_WIDTH - 2)


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


class VarTableMismatch(ValueError):
    pass


class VarTable:
    """Ordered variable names.  Tables are interned: equal names give the same object."""

    __slots__ = ("names", "index", "_zero", "__weakref__")
    _interned: Dict[Tuple[str, ...], "VarTable"] = {}

    def __new__(cls, names: Iterable[str]) -> "VarTable":
        key = tuple(names)
        table = cls._interned.get(key)
        if table is not None:
            return table
        if len(set(key)) != len(key):
            raise ValueError(f"duplicate variable names in {key}")
        table = super().__new__(cls)
        table.names = key
        table.index = {name: i for i, name in enumerate(key)}
        table._zero = table._pack_raw((0,) * len(key))
        cls._interned[key] = table
        return table

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)})"

    def __reduce__(self):
        return (VarTable, (self.names,))

    def _pack_raw(self, exp: Sequence[int]) -> int:
        key = 0
        for e in exp:
            key = (key << _WIDTH) | (e + _BIAS)
        return key

    def pack(self, exp: Sequence[int]) -> int:
        if len(exp) != len(self.names):
            raise ValueError(f"exponent vector of length {len(exp)} for {len(self.names)} variables")
        for e in exp:
            if not -_LIMIT < e < _LIMIT:
                raise OverflowError(f"exponent {e} out of range")
        return self._pack_raw(exp)

    def unpack(self, key: int) -> Exponent:
        out = []
        for _ in self.names:
            out.append((key & _FIELD) - _BIAS)
            key >>= _WIDTH
        return tuple(reversed(out))

    def gens(self) -> Tuple["LaurentPoly", ...]:
        return tuple(LaurentPoly.var(self, name) for name in self.names)

    def extend(self, names: Iterable[str]) -> "VarTable":
        extra = [n for n in names if n not in self.index]
        return VarTable(self.names + tuple(extra))


Scalar = int


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    ``terms()`` exposes the mapping exponent tuple -> coefficient.  The zero
    polynomial has no terms.
    """

    __slots__ = ("table", "_t", "_span")

    def __init__(self, table: VarTable, terms: Optional[Mapping[Sequence[int], int]] = None):
        self.table = table
        self._span: Optional[int] = None
        t: Dict[int, int] = {}
        if terms:
            for exp, c in terms.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficients must be integers, got {c!r}")
                if c:
                    k = table.pack(tuple(exp))
                    c = t.get(k, 0) + c
                    if c:
                        t[k] = c
                    else:
                        t.pop(k, None)
        self._t = t

    @classmethod
    def _raw(cls, table: VarTable, t: Dict[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.table = table
        p._t = t
        p._span = None
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, table: VarTable, c: int) -> "LaurentPoly":
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be integers, got {c!r}")
        return cls._raw(table, {table._zero: c} if c else {})

    @classmethod
    def var(cls, table: VarTable, name: str) -> "LaurentPoly":
        return cls.monomial(table, {name: 1})

    @classmethod
    def monomial(cls, table: VarTable, exps: Union[Mapping[str, int], Sequence[int]], coeff: int = 1) -> "LaurentPoly":
        if isinstance(exps, Mapping):
            vec = [0] * len(table)
            for name, e in exps.items():
                if name not in table.index:
                    raise KeyError(f"unknown variable {name!r}")
                vec[table.index[name]] += e
        else:
            vec = list(exps)
        if not coeff:
            return cls._raw(table, {})
        return cls._raw(table, {table.pack(vec): coeff})

    @classmethod
    def parse(cls, text: str, table: VarTable) -> "LaurentPoly":
        """Parse an expression such as ``(x1*x3 + 2*z2^2)/(x2*x3)``.

        Supports ``+ - * /``, ``^`` or ``**`` with integer exponents,
        parentheses and integer literals.  Division is exact division.
        """
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        return _Evaluator(table).visit(tree.body)

    # -- inspection --------------------------------------------------------

    def terms(self) -> Dict[Exponent, int]:
        unpack = self.table.unpack
        return {unpack(k): c for k, c in self._t.items()}

    def items_sorted(self) -> List[Tuple[Exponent, int]]:
        """Terms in decreasing lexicographic order of exponents."""
        unpack = self.table.unpack
        return [(unpack(k), self._t[k]) for k in sorted(self._t, reverse=True)]

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and self.table._zero in self._t)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._t.get(self.table._zero, 0)

    def leading_term(self) -> Tuple[Exponent, int]:
        k = max(self._t)
        return self.table.unpack(k), self._t[k]

    def coefficients(self) -> List[int]:
        return list(self._t.values())

    def degree_bounds(self) -> List[Tuple[int, int]]:
        """Per variable (min exponent, max exponent); empty list for zero."""
        if not self._t:
            return []
        exps = [self.table.unpack(k) for k in self._t]
        return [(min(col), max(col)) for col in zip(*exps)]

    def span(self) -> int:
        if self._span is None:
            self._span = max((max(abs(lo), abs(hi)) for lo, hi in self.degree_bounds()), default=0)
        return self._span

    def is_polynomial(self) -> bool:
        return all(lo >= 0 for lo, _ in self.degree_bounds())

    def variables(self) -> List[str]:
        """Names of variables that occur with a nonzero exponent."""
        bounds = self.degree_bounds()
        return [n for n, (lo, hi) in zip(self.table.names, bounds) if lo or hi]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.table is not self.table:
                raise VarTableMismatch(f"{self.table!r} vs {other.table!r}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.const(self.table, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for k, c in b.items():
            c = t.get(k, 0) + c
            if c:
                t[k] = c
            else:
                del t[k]
        return LaurentPoly._raw(self.table, t)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.table, {k: -c for k, c in self._t.items()})

    def __pos__(self) -> "LaurentPoly":
        return self

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._t or not other._t:
            return LaurentPoly._raw(self.table, {})
        if self.span() + other.span() >= _LIMIT:
            raise OverflowError("exponent range exceeded")
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        zero = self.table._zero
        if len(b) == 1:
            ((kb, cb),) = b.items()
            shift = kb - zero
            return LaurentPoly._raw(self.table, {ka + shift: ca * cb for ka, ca in a.items()})
        t: Dict[int, int] = {}
        get = t.get
        b_items = [(kb - zero, cb) for kb, cb in b.items()]
        for ka, ca in a.items():
            for kb, cb in b_items:
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw(self.table, {k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse_monomial() ** (-e)
        if len(self._t) == 1:
            ((k, c),) = self._t.items()
            if self.span() * e >= _LIMIT:
                raise OverflowError("exponent range exceeded")
            zero = self.table._zero
            return LaurentPoly._raw(self.table, {zero + e * (k - zero): c ** e})
        result = LaurentPoly.const(self.table, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse_monomial(self) -> "LaurentPoly":
        """Inverse of a unit (a monomial with coefficient ±1)."""
        if len(self._t) != 1:
            raise NotDivisibleError("only monomials are invertible")
        ((k, c),) = self._t.items()
        if c not in (1, -1):
            raise NotDivisibleError(f"coefficient {c} is not a unit")
        zero = self.table._zero
        return LaurentPoly._raw(self.table, {2 * zero - k: c})

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * other == self, or raise NotDivisibleError."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("divisor must be a LaurentPoly or int")
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return self
        zero = self.table._zero
        if len(other._t) == 1:
            ((kb, cb),) = other._t.items()
            t = {}
            for k, c in self._t.items():
                q, r = divmod(c, cb)
                if r:
                    raise NotDivisibleError(f"coefficient {c} not divisible by {cb}")
                t[k - kb + zero] = q
            return LaurentPoly._raw(self.table, t)

        # Exponent box the quotient must lie in: per-variable degrees are
        # additive in a domain, so q's min/max degree in each variable is forced.
        a_bounds = self.degree_bounds()
        b_bounds = other.degree_bounds()
        box = [(alo - blo, ahi - bhi) for (alo, ahi), (blo, bhi) in zip(a_bounds, b_bounds)]
        if any(lo > hi for lo, hi in box):
            raise NotDivisibleError("degree bounds incompatible")
        unpack = self.table.unpack

        lead_b = max(other._t)
        lead_c = other._t[lead_b]
        rest_b = [(k - zero, c) for k, c in other._t.items() if k != lead_b]
        rem = dict(self._t)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        q: Dict[int, int] = {}
        while rem:
            k = -heapq.heappop(heap)
            c = rem.get(k)
            if c is None:
                continue
            qc, r = divmod(c, lead_c)
            if r:
                raise NotDivisibleError("leading coefficient does not divide")
            qk = k - lead_b + zero
            exp = unpack(qk)
            for e, (lo, hi) in zip(exp, box):
                if e < lo or e > hi:
                    raise NotDivisibleError("quotient term leaves the admissible degree box")
            q[qk] = qc
            del rem[k]
            for kb, cb in rest_b:
                kk = qk + kb
                v = rem.get(kk, 0) - qc * cb
                if v:
                    if kk not in rem:
                        heapq.heappush(heap, -kk)
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return LaurentPoly._raw(self.table, q)

    def __truediv__(self, other) -> "LaurentPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly.const(self.table, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.div_exact(other)

    def __rtruediv__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.div_exact(self)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.table is other.table and self._t == other._t
        if isinstance(other, int) and not isinstance(other, bool):
            return self._t == ({self.table._zero: other} if other else {})
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.table.names, frozenset(self._t.items())))

    def __reduce__(self):
        return (LaurentPoly, (self.table, self.terms()))

    # -- structural operations ---------------------------------------------

    def coeff(self, name: str, d: int) -> "LaurentPoly":
        """Coefficient of ``name^d``: the terms of that degree with ``name`` removed."""
        i = self.table.index[name]
        shift = _WIDTH * (len(self.table) - 1 - i)
        offset = d << shift
        out = {}
        for k, c in self._t.items():
            if ((k >> shift) & _FIELD) - _BIAS == d:
                out[k - offset] = c
        return LaurentPoly._raw(self.table, out)

    def coeff_z(self, d: int, name: str = "z") -> "LaurentPoly":
        return self.coeff(name, d)

    def degrees_in(self, name: str) -> List[int]:
        i = self.table.index[name]
        return sorted({self.table.unpack(k)[i] for k in self._t})

    def substitute(self, mapping: Mapping[str, Union["LaurentPoly", int]], target: Optional[VarTable] = None) -> "LaurentPoly":
        """Apply the ring homomorphism sending each variable to its image.

        Variables not in ``mapping`` are sent to the variable of the same
        name in ``target`` (which defaults to the table of the images, or
        this polynomial's own table).  A variable occurring with a negative
        exponent must map to a unit.
        """
        if target is None:
            target = next((v.table for v in mapping.values() if isinstance(v, LaurentPoly)), self.table)
        images: List[Optional[LaurentPoly]] = []
        bounds = self.degree_bounds()
        for pos, name in enumerate(self.table.names):
            used = bool(bounds) and bounds[pos] != (0, 0)
            if name in mapping:
                img = mapping[name]
                if isinstance(img, int):
                    img = LaurentPoly.const(target, img)
                if img.table is not target:
                    raise VarTableMismatch(f"image of {name} lives over another table")
                images.append(img)
            elif name in target.index:
                images.append(LaurentPoly.var(target, name))
            elif used:
                raise KeyError(f"variable {name!r} is not mapped")
            else:
                images.append(None)
        cache: Dict[Tuple[int, int], LaurentPoly] = {}

        def power(pos: int, e: int) -> LaurentPoly:
            key = (pos, e)
            val = cache.get(key)
            if val is None:
                img = images[pos]
                if e < 0 and not img.is_monomial():
                    raise NotDivisibleError(f"non-unit image of {self.table.names[pos]} raised to {e}")
                val = img ** e
                cache[key] = val
            return val

        total: Dict[int, int] = {}
        one = LaurentPoly.const(target, 1)
        for exp, c in self.terms().items():
            term = one * c
            for pos, e in enumerate(exp):
                if e:
                    term = term * power(pos, e)
            for k, v in term._t.items():
                total[k] = total.get(k, 0) + v
        return LaurentPoly._raw(target, {k: v for k, v in total.items() if v})

    def convert(self, target: VarTable) -> "LaurentPoly":
        """Re-express over another table that contains every used variable."""
        return self.substitute({}, target)

    def evaluate(self, values: Mapping[str, object], one: object = 1):
        """Evaluate in any commutative ring whose elements support + * and ``**`` (negative powers for units)."""
        vals = [values.get(n) for n in self.table.names]
        total = one * 0
        for exp, c in self.terms().items():
            term = one * c
            for v, e in zip(vals, exp):
                if e:
                    if v is None:
                        raise KeyError("missing value for a used variable")
                    term = term * (v ** e)
            total = total + term
        return total

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Canonical text: terms in decreasing lex order, ``var^k`` with ``^1`` elided."""
        if not self._t:
            return "0"
        names = self.table.names
        pieces = []
        for exp, c in self.items_sorted():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    __str__ = render

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"


class _Evaluator(ast.NodeVisitor):
    def __init__(self, table: VarTable):
        self.table = table

    def generic_visit(self, node):
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")

    def visit_Constant(self, node):
        if not isinstance(node.value, int) or isinstance(node.value, bool):
            raise ValueError(f"only integer literals are allowed, got {node.value!r}")
        return LaurentPoly.const(self.table, node.value)

    def visit_Name(self, node):
        if node.id not in self.table.index:
            raise KeyError(f"unknown variable {node.id!r}")
        return LaurentPoly.var(self.table, node.id)

    def visit_UnaryOp(self, node):
        val = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        return self.generic_visit(node)

    def visit_BinOp(self, node):
        if isinstance(node.op, ast.Pow):
            base = self.visit(node.left)
            e = self.visit(node.right)
            return base ** e.constant_value()
        left, right = self.visit(node.left), self.visit(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left.div_exact(right)
        return self.generic_visit(node)


def lp_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def product(factors: Iterable[LaurentPoly], table: VarTable) -> LaurentPoly:
    out = LaurentPoly.const(table, 1)
    for f in factors:
        out = out * f
    return out
