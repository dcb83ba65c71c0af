# -*- coding: utf-8 -*-
"""
services/ring_core.py
Aritmética exata nos três domínios de integridade suportados e janelas finitas
enumeradas em ordem canônica.

Anéis:
  - Z          inteiros (precisão arbitrária do próprio int do Python)
  - Zi         inteiros gaussianos, valor = (re, im)
  - GF(q)[x]   polinômios sobre o corpo primo GF(q), valor = tupla de
               coeficientes do grau 0 para cima, sem zeros à direita

Ordens canônicas das janelas:
  - Z:         1..N crescente (ou -N..N com `signed`)
  - Zi:        (norma, re, im)
  - GF(q)[x]:  (grau, vetor de coeficientes lido como inteiro na base q),
               o que coincide com a ordem do próprio inteiro na base q
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, Optional, Tuple, Union

from services.errors import InvalidParams, NotDivisible, ParseError, SpecMismatch

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class RingKind(str, Enum):
    INTEGERS = "Z"
    GAUSSIAN = "Zi"
    POLY = "GF"


# ============================================================
# ESPECIFICAÇÃO DO ANEL
# ============================================================

@dataclass(frozen=True)
class RingSpec:
    kind: RingKind
    q: Optional[int] = None

    def __post_init__(self):
        if self.kind is RingKind.POLY:
            if self.q is None or not is_prime(self.q):
                raise InvalidParams(f"GF(q)[x] exige q primo, recebido {self.q}")
        elif self.q is not None:
            raise InvalidParams(f"q só existe para GF(q)[x] (anel {self.kind.value})")

    def __str__(self) -> str:
        if self.kind is RingKind.POLY:
            return f"GF({self.q})[x]"
        return self.kind.value

    # --- construção de elementos ---

    def normalize(self, value: Any) -> Any:
        if self.kind is RingKind.INTEGERS:
            return int(value)
        if self.kind is RingKind.GAUSSIAN:
            if isinstance(value, int):
                return (value, 0)
            re_, im = value
            return (int(re_), int(im))
        if isinstance(value, int):
            value = (value,)
        coeffs = [int(c) % self.q for c in value]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def element(self, value: Any) -> "RingElement":
        return RingElement(self, self.normalize(value))

    @property
    def zero(self) -> "RingElement":
        return self.element(0)

    @property
    def one(self) -> "RingElement":
        return self.element(1)

    def gen(self) -> "RingElement":
        """x em GF(q)[x]; i em Z[i]."""
        if self.kind is RingKind.POLY:
            return self.element((0, 1))
        if self.kind is RingKind.GAUSSIAN:
            return self.element((0, 1))
        raise InvalidParams("Z não tem gerador além de 1")

    # --- aritmética sobre valores canônicos ---

    def add_values(self, a, b):
        if self.kind is RingKind.INTEGERS:
            return a + b
        if self.kind is RingKind.GAUSSIAN:
            return (a[0] + b[0], a[1] + b[1])
        q = self.q
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = (out[k] + c) % q
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def neg_value(self, a):
        if self.kind is RingKind.INTEGERS:
            return -a
        if self.kind is RingKind.GAUSSIAN:
            return (-a[0], -a[1])
        return tuple((-c) % self.q for c in a)

    def mul_values(self, a, b):
        if self.kind is RingKind.INTEGERS:
            return a * b
        if self.kind is RingKind.GAUSSIAN:
            return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])
        if not a or not b:
            return ()
        q = self.q
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        out = [c % q for c in out]
        # q primo: produto de líderes não nulos nunca zera
        return tuple(out)

    def divide_values(self, a, b):
        """Divisão exata; levanta NotDivisible se b não divide a."""
        if self.kind is RingKind.INTEGERS:
            if b == 0:
                raise InvalidParams("divisão por zero")
            qt, rem = divmod(a, b)
            if rem:
                raise NotDivisible(f"{b} não divide {a}")
            return qt
        if self.kind is RingKind.GAUSSIAN:
            norm = b[0] * b[0] + b[1] * b[1]
            if norm == 0:
                raise InvalidParams("divisão por zero")
            # a * conj(b) / N(b)
            re_ = a[0] * b[0] + a[1] * b[1]
            im = a[1] * b[0] - a[0] * b[1]
            if re_ % norm or im % norm:
                raise NotDivisible("divisor gaussiano não divide o dividendo")
            return (re_ // norm, im // norm)
        if not b:
            raise InvalidParams("divisão por zero")
        q = self.q
        rem = list(a)
        inv_lead = pow(b[-1], q - 2, q)
        quot = [0] * max(len(a) - len(b) + 1, 0)
        for shift in range(len(a) - len(b), -1, -1):
            c = (rem[shift + len(b) - 1] * inv_lead) % q
            if c == 0:
                continue
            quot[shift] = c
            for k, cb in enumerate(b):
                rem[shift + k] = (rem[shift + k] - c * cb) % q
        if any(rem):
            raise NotDivisible("divisor polinomial deixa resto")
        while quot and quot[-1] == 0:
            quot.pop()
        return tuple(quot)

    def order_key(self, value) -> Tuple:
        if self.kind is RingKind.INTEGERS:
            return (value,)
        if self.kind is RingKind.GAUSSIAN:
            return (value[0] * value[0] + value[1] * value[1], value[0], value[1])
        return (poly_to_int(value, self.q),)


def poly_to_int(coeffs: Tuple[int, ...], q: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = total * q + c
    return total


def int_to_poly(n: int, q: int) -> Tuple[int, ...]:
    out = []
    while n:
        n, c = divmod(n, q)
        out.append(c)
    return tuple(out)


# ============================================================
# ELEMENTO
# ============================================================

class RingElement:
    """Elemento imutável em forma canônica. Igualdade = igualdade estrutural."""

    __slots__ = ("spec", "value", "_hash")

    def __init__(self, spec: RingSpec, value: Any):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "_hash", hash(value))

    def __setattr__(self, name, value):
        raise AttributeError("RingElement é imutável")

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"esperado RingElement, recebido {type(other).__name__}")
        if other.spec is not self.spec and other.spec != self.spec:
            raise SpecMismatch(f"anéis diferentes: {self.spec} e {other.spec}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.spec, self.spec.add_values(self.value, other.value))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        spec = self.spec
        return RingElement(spec, spec.add_values(self.value, spec.neg_value(other.value)))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.spec, self.spec.mul_values(self.value, other.value))

    def __neg__(self) -> "RingElement":
        return RingElement(self.spec, self.spec.neg_value(self.value))

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise InvalidParams("expoente negativo")
        result = self.spec.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "RingElement") -> bool:
        self._check(other)
        return self.spec.order_key(self.value) < self.spec.order_key(other.value)

    def __repr__(self) -> str:
        return f"RingElement({self.spec}, {format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)

    def is_zero(self) -> bool:
        return self.value == self.spec.zero.value

    def is_one(self) -> bool:
        return self.value == self.spec.one.value


def ring_arith(op: str, a: RingElement, b: Optional[RingElement] = None) -> RingElement:
    """Operação de anel por nome: add, mul, neg, sub."""
    if op == "neg":
        return -a
    if b is None:
        raise InvalidParams(f"operação {op!r} exige dois operandos")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    raise InvalidParams(f"operação desconhecida: {op!r}")


def exact_divide(a: RingElement, b: RingElement) -> RingElement:
    """c com b*c = a (único por cancelamento). NotDivisible se não existir."""
    a._check(b)
    if b.is_zero():
        raise InvalidParams("divisão por zero")
    return RingElement(a.spec, a.spec.divide_values(a.value, b.value))


def try_divide(a: RingElement, b: RingElement) -> Optional[RingElement]:
    try:
        return exact_divide(a, b)
    except NotDivisible:
        return None


# ============================================================
# LITERAIS
# ============================================================

_GF_RE = re.compile(r"^GF\((\d+)\)\[x\]$")


def parse_ring_spec(text: str) -> RingSpec:
    token = (text or "").strip()
    if token == "Z":
        return RingSpec(RingKind.INTEGERS)
    if token == "Zi":
        return RingSpec(RingKind.GAUSSIAN)
    m = _GF_RE.match(token)
    if m:
        q = int(m.group(1))
        if not is_prime(q):
            raise ParseError("q deve ser primo", token)
        return RingSpec(RingKind.POLY, q)
    raise ParseError("anel desconhecido (use Z, Zi ou GF(q)[x])", token)


def split_signed_terms(text: str) -> Iterator[str]:
    """Quebra 'a+b-c' em termos com sinal, respeitando parênteses."""
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and k > start and text[k - 1] not in "^(":
            yield text[start:k]
            start = k
    yield text[start:]


def parse_element(spec: RingSpec, literal: str) -> RingElement:
    text = (literal or "").replace(" ", "")
    if not text:
        raise ParseError("literal vazio", literal)
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        if spec.kind is RingKind.INTEGERS:
            return spec.element(int(text))
        if spec.kind is RingKind.GAUSSIAN:
            re_ = im = 0
            for term in split_signed_terms(text):
                if term.endswith("i"):
                    coef = term[:-1]
                    if coef in ("", "+"):
                        im += 1
                    elif coef == "-":
                        im -= 1
                    else:
                        im += int(coef)
                else:
                    re_ += int(term)
            return spec.element((re_, im))
        q = spec.q
        coeffs: Dict[int, int] = {}
        for term in split_signed_terms(text):
            sign = 1
            if term[:1] in "+-":
                sign = -1 if term[0] == "-" else 1
                term = term[1:]
            if "x" in term:
                coef_txt, _, power_txt = term.partition("x")
                coef_txt = coef_txt.rstrip("*")
                coef = int(coef_txt) if coef_txt else 1
                degree = int(power_txt[1:]) if power_txt.startswith("^") else 1
                if power_txt and not power_txt.startswith("^"):
                    raise ValueError(term)
            else:
                coef, degree = int(term), 0
            coeffs[degree] = coeffs.get(degree, 0) + sign * coef
        size = max(coeffs) + 1 if coeffs else 0
        return spec.element(tuple(coeffs.get(k, 0) % q for k in range(size)))
    except ValueError:
        raise ParseError(f"literal inválido para {spec}", literal) from None


def format_element(e: RingElement) -> str:
    spec, v = e.spec, e.value
    if spec.kind is RingKind.INTEGERS:
        return str(v)
    if spec.kind is RingKind.GAUSSIAN:
        re_, im = v
        if im == 0:
            return str(re_)
        if im == 1:
            im_txt = "i"
        elif im == -1:
            im_txt = "-i"
        else:
            im_txt = f"{im}i"
        if re_ == 0:
            return im_txt
        return f"{re_}{im_txt}" if im < 0 else f"{re_}+{im_txt}"
    if not v:
        return "0"
    parts = []
    for degree in range(len(v) - 1, -1, -1):
        c = v[degree]
        if c == 0:
            continue
        if degree == 0:
            parts.append(str(c))
        else:
            coef = "" if c == 1 else str(c)
            power = "x" if degree == 1 else f"x^{degree}"
            parts.append(coef + power)
    return "+".join(parts)


def random_element(spec: RingSpec, rng, size: int) -> RingElement:
    """Elemento pseudoaleatório 'pequeno': |n| <= size, |re|,|im| <= size ou grau < size."""
    if spec.kind is RingKind.INTEGERS:
        return spec.element(rng.between(-size, size))
    if spec.kind is RingKind.GAUSSIAN:
        return spec.element((rng.between(-size, size), rng.between(-size, size)))
    return spec.element(tuple(rng.below(spec.q) for _ in range(size)))


# ============================================================
# JANELAS
# ============================================================

@dataclass(frozen=True)
class WindowParams:
    name: str  # "N", "B" ou "d"
    value: int
    signed: bool = False

    def __str__(self) -> str:
        txt = f"{self.name}={self.value}"
        return txt + ",signed" if self.signed else txt


_EXPECTED_PARAM = {RingKind.INTEGERS: "N", RingKind.GAUSSIAN: "B", RingKind.POLY: "d"}


def parse_window_params(text: str) -> WindowParams:
    token = (text or "").replace(" ", "")
    head, _, flag = token.partition(",")
    name, eq, value = head.partition("=")
    if not eq or name not in ("N", "B", "d") or flag not in ("", "signed"):
        raise ParseError("parâmetro de janela inválido (use N=<int>, B=<int> ou d=<int>)", text)
    if flag and name != "N":
        raise ParseError("'signed' só vale para janelas de Z", text)
    try:
        return WindowParams(name, int(value), signed=bool(flag))
    except ValueError:
        raise ParseError("valor inteiro esperado", value) from None


@dataclass(frozen=True)
class Window:
    spec: RingSpec
    params: WindowParams
    elements: Tuple[RingElement, ...] = field(compare=False, repr=False)
    index: Dict[RingElement, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self.elements)

    def __contains__(self, e: RingElement) -> bool:
        return e in self.index

    def __hash__(self) -> int:
        return hash((self.spec, self.params))

    def position(self, e: RingElement) -> Optional[int]:
        return self.index.get(e)

    def describe(self) -> str:
        return f"{self.spec} {self.params}"


def window_enumerate(spec: RingSpec, params: Union[str, WindowParams]) -> Window:
    if isinstance(params, str):
        params = parse_window_params(params)
    expected = _EXPECTED_PARAM[spec.kind]
    if params.name != expected:
        raise InvalidParams(f"janela de {spec} usa {expected}=..., recebido {params.name}")

    n = params.value
    if spec.kind is RingKind.INTEGERS:
        if n < 1:
            raise InvalidParams("N deve ser >= 1")
        values = range(-n, n + 1) if params.signed else range(1, n + 1)
        elements = tuple(RingElement(spec, v) for v in values)
    elif spec.kind is RingKind.GAUSSIAN:
        if n < 0:
            raise InvalidParams("B deve ser >= 0")
        pairs = [(a, b) for a in range(-n, n + 1) for b in range(-n, n + 1)]
        pairs.sort(key=lambda p: (p[0] * p[0] + p[1] * p[1], p[0], p[1]))
        elements = tuple(RingElement(spec, p) for p in pairs)
    else:
        if n < 1:
            raise InvalidParams("d deve ser >= 1")
        elements = tuple(RingElement(spec, int_to_poly(k, spec.q)) for k in range(spec.q ** n))

    index = {e: k for k, e in enumerate(elements)}
    logger.debug(f"[ring] janela {spec} {params}: {len(elements)} elementos")
    return Window(spec, params, elements, index)
