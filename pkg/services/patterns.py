# -*- coding: utf-8 -*-
"""
services/patterns.py
A família de configurações {xy} ∪ {x + f(y) : f ∈ F}, com F ⊆ xR[x] finito:
avaliação, teste de monocromaticidade, varredura de testemunhas e perfis de
abundância por y. Com F = {0, t} a configuração é a tripla {x, xy, x+y}.

Sintaxe de F (CLI/config): polinômios em t separados por ';', por exemplo
"t; 0; 2t^2+t". Coeficientes não inteiros vão entre parênteses:
"(1+i)t^2", "(x+1)t".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

import pandas as pd

from services.coloring import Coloring
from services.errors import InvalidParams, ParseError, SpecMismatch, WitnessError
from services.ring_core import (
    RingElement,
    RingKind,
    RingSpec,
    exact_divide,
    format_element,
    parse_element,
    split_signed_terms,
)
from services.workers import run_chunks, split_range

logger = logging.getLogger(__name__)


# ============================================================
# POLINÔMIOS COM TERMO CONSTANTE NULO
# ============================================================

@dataclass(frozen=True)
class ZeroConstPoly:
    """f(t) = Σ_{j>=1} c_j t^j. O polinômio nulo (sem termos) é permitido."""

    spec: RingSpec
    terms: Tuple[Tuple[int, RingElement], ...] = ()

    def __post_init__(self):
        clean: Dict[int, RingElement] = {}
        for degree, coef in self.terms:
            if degree < 1:
                raise InvalidParams("F ⊆ xR[x]: termo de grau 0 não é permitido")
            if coef.spec != self.spec:
                raise SpecMismatch(f"coeficiente de {coef.spec} em polinômio sobre {self.spec}")
            clean[degree] = clean[degree] + coef if degree in clean else coef
        terms = tuple(sorted((d, c) for d, c in clean.items() if not c.is_zero()))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_coeffs(cls, spec: RingSpec, coeffs: Dict[int, object]) -> "ZeroConstPoly":
        return cls(spec, tuple((d, c if isinstance(c, RingElement) else spec.element(c)) for d, c in coeffs.items()))

    @property
    def coeffs(self) -> Dict[int, RingElement]:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def is_zero(self) -> bool:
        return not self.terms

    def sort_key(self) -> Tuple:
        vector = tuple(
            self.spec.order_key(self.coeffs[j].value) if j in self.coeffs else (0,)
            for j in range(1, self.degree + 1)
        )
        return (self.degree, vector)

    def __str__(self) -> str:
        return format_poly(self)


def eval_poly(f: ZeroConstPoly, y: RingElement) -> RingElement:
    if y.spec != f.spec:
        raise SpecMismatch(f"f sobre {f.spec}, y em {y.spec}")
    total = f.spec.zero
    power = f.spec.one
    last = 0
    for degree, coef in f.terms:
        power = power * y ** (degree - last)
        last = degree
        total = total + coef * power
    return total


@dataclass(frozen=True)
class PolyFamily:
    polys: Tuple[ZeroConstPoly, ...]

    def __post_init__(self):
        if not self.polys:
            raise InvalidParams("F não pode ser vazio")
        specs = {f.spec for f in self.polys}
        if len(specs) != 1:
            raise SpecMismatch("polinômios de F sobre anéis diferentes")
        unique = {f.terms: f for f in self.polys}
        ordered = tuple(sorted(unique.values(), key=lambda f: f.sort_key()))
        object.__setattr__(self, "polys", ordered)

    @property
    def spec(self) -> RingSpec:
        return self.polys[0].spec

    @property
    def degree(self) -> int:
        return max(f.degree for f in self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[ZeroConstPoly]:
        return iter(self.polys)

    def __str__(self) -> str:
        return "; ".join(format_poly(f) for f in self.polys)


def _format_coef(c: RingElement) -> str:
    txt = format_element(c)
    if c.spec.kind is RingKind.INTEGERS:
        return txt
    if txt.lstrip("-").isdigit():
        return txt
    return f"({txt})"


def format_poly(f: ZeroConstPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for degree, coef in reversed(f.terms):
        power = "t" if degree == 1 else f"t^{degree}"
        if coef.is_one():
            parts.append(power)
        elif coef == -coef.spec.one and coef.spec.kind is not RingKind.POLY:
            parts.append("-" + power)
        else:
            parts.append(_format_coef(coef) + power)
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def parse_poly(spec: RingSpec, text: str) -> ZeroConstPoly:
    body = (text or "").replace(" ", "")
    if not body:
        raise ParseError("polinômio vazio", text)
    coeffs: Dict[int, RingElement] = {}
    for term in split_signed_terms(body):
        sign = 1
        if term[:1] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        depth = 0
        t_pos = None
        for k, ch in enumerate(term):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "t" and depth == 0:
                t_pos = k
                break
        if t_pos is None:
            constant = parse_element(spec, term)
            if not constant.is_zero():
                raise ParseError("F ⊆ xR[x]: termo constante não nulo", term)
            continue
        coef_txt = term[:t_pos].rstrip("*")
        power_txt = term[t_pos + 1:]
        coef = parse_element(spec, coef_txt) if coef_txt else spec.one
        if power_txt == "":
            degree = 1
        elif power_txt.startswith("^") and power_txt[1:].isdigit():
            degree = int(power_txt[1:])
        else:
            raise ParseError("expoente inválido", term)
        if degree < 1:
            raise ParseError("F ⊆ xR[x]: t^0 não é permitido", term)
        if sign < 0:
            coef = -coef
        coeffs[degree] = coeffs[degree] + coef if degree in coeffs else coef
    return ZeroConstPoly(spec, tuple(coeffs.items()))


def parse_poly_family(spec: RingSpec, text: str) -> PolyFamily:
    pieces = [p for p in (text or "").split(";") if p.strip()]
    if not pieces:
        raise ParseError("família F vazia", text)
    return PolyFamily(tuple(parse_poly(spec, p) for p in pieces))


# ============================================================
# INSTÂNCIAS
# ============================================================

@dataclass(frozen=True)
class PatternInstance:
    x: RingElement
    y: RingElement
    elements: Tuple[RingElement, ...]

    @property
    def degenerate(self) -> bool:
        return len(self.elements) == 1


class PatternStatus(str, Enum):
    NOT_MONOCHROMATIC = "not_monochromatic"
    OUT_OF_WINDOW = "out_of_window"


def _dedupe(items: Iterable[RingElement]) -> Tuple[RingElement, ...]:
    seen: Set[RingElement] = set()
    out = []
    for e in items:
        if e not in seen:
            seen.add(e)
            out.append(e)
    return tuple(out)


def instance_from_values(x: RingElement, y: RingElement, f_values: Sequence[RingElement]) -> PatternInstance:
    return PatternInstance(x, y, _dedupe([x * y] + [x + v for v in f_values]))


def pattern_elements(x: RingElement, y: RingElement, F: PolyFamily) -> PatternInstance:
    if x.spec != y.spec or x.spec != F.spec:
        raise SpecMismatch("x, y e F precisam estar no mesmo anel")
    return instance_from_values(x, y, [eval_poly(f, y) for f in F])


def _color_of_elements(c: Coloring, elements: Sequence[RingElement]) -> Union[int, PatternStatus]:
    index = c.window.index
    colors = c.colors
    color = None
    status: Union[int, PatternStatus, None] = None
    for e in elements:
        k = index.get(e)
        if k is None:
            return PatternStatus.OUT_OF_WINDOW
        ck = int(colors[k])
        if color is None:
            color = ck
        elif ck != color:
            status = PatternStatus.NOT_MONOCHROMATIC
    return status if status is not None else color


def pattern_color(c: Coloring, x: RingElement, y: RingElement, F: PolyFamily) -> Union[int, PatternStatus]:
    """Cor i se toda a instância está na janela com cor i; senão OUT_OF_WINDOW ou NOT_MONOCHROMATIC."""
    if x.spec != c.window.spec:
        raise SpecMismatch(f"coloração sobre {c.window.spec}, x em {x.spec}")
    return _color_of_elements(c, pattern_elements(x, y, F).elements)


# ============================================================
# RESTRIÇÕES DE VARREDURA
# ============================================================

@dataclass(frozen=True)
class ScanConstraints:
    """Literais excluídos (resolvidos no anel da coloração) e flags."""

    exclude_y: FrozenSet[str] = frozenset({"0", "1"})
    exclude_x: FrozenSet[str] = frozenset({"0"})
    require_in_window: bool = True
    forbid_degenerate: bool = True

    def bind(self, spec: RingSpec) -> "BoundConstraints":
        return BoundConstraints(
            self,
            frozenset(parse_element(spec, lit) for lit in self.exclude_y),
            frozenset(parse_element(spec, lit) for lit in self.exclude_x),
        )


@dataclass(frozen=True)
class BoundConstraints:
    source: ScanConstraints
    exclude_y: FrozenSet[RingElement]
    exclude_x: FrozenSet[RingElement]

    def clip(self, c: Coloring, inst: PatternInstance) -> Optional[Tuple[RingElement, ...]]:
        """
        Elementos que entram no teste de cor, ou None se a instância é descartada.
        Com require_in_window=False, elementos fora da janela são descartados
        (configuração truncada); com True, a instância inteira precisa caber.
        """
        elements = inst.elements
        if not self.source.require_in_window:
            elements = tuple(e for e in elements if e in c.window.index)
            if not elements:
                return None
        if self.source.forbid_degenerate and len(elements) == 1:
            return None
        return elements


DEFAULT_CONSTRAINTS = ScanConstraints()


@dataclass(frozen=True)
class Witness:
    x: RingElement
    y: RingElement
    color: int
    elements: Tuple[RingElement, ...]

    def as_dict(self) -> Dict[str, object]:
        return {
            "x": format_element(self.x),
            "y": format_element(self.y),
            "color": self.color,
            "elements": [format_element(e) for e in self.elements],
        }


def _scan_y_range(c: Coloring, F: PolyFamily, bound: BoundConstraints, y_range: range, limit: Optional[int]) -> List[Witness]:
    out: List[Witness] = []
    elements = c.window.elements
    for iy in y_range:
        y = elements[iy]
        if y in bound.exclude_y:
            continue
        f_values = [eval_poly(f, y) for f in F]
        for x in elements:
            if x in bound.exclude_x:
                continue
            inst = instance_from_values(x, y, f_values)
            clipped = bound.clip(c, inst)
            if clipped is None:
                continue
            color = _color_of_elements(c, clipped)
            if isinstance(color, int):
                out.append(Witness(x, y, color, clipped))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def witness_scan(
    c: Coloring,
    F: PolyFamily,
    k: ScanConstraints = DEFAULT_CONSTRAINTS,
    limit: Optional[int] = None,
    jobs: int = 1,
) -> Iterator[Witness]:
    """
    Todas as testemunhas monocromáticas (x, y) da janela, na ordem
    (índice de y, índice de x). Com jobs > 1 as faixas de y rodam em paralelo
    e o merge preserva a ordem canônica.
    """
    if F.spec != c.window.spec:
        raise SpecMismatch(f"F sobre {F.spec}, coloração sobre {c.window.spec}")
    if limit is not None and limit < 0:
        raise InvalidParams("limit deve ser >= 0")
    if limit == 0:
        return
    bound = k.bind(c.window.spec)
    n = len(c.window)

    if jobs <= 1:
        emitted = 0
        for iy in range(n):
            for w in _scan_y_range(c, F, bound, range(iy, iy + 1), None):
                yield w
                emitted += 1
                if limit is not None and emitted >= limit:
                    return
        return

    chunks = split_range(n, jobs * 4)
    results = run_chunks(lambda ys: _scan_y_range(c, F, bound, ys, limit), chunks, jobs=jobs)
    emitted = 0
    for part in results:
        for w in part or []:
            yield w
            emitted += 1
            if limit is not None and emitted >= limit:
                return


# ============================================================
# ABUNDÂNCIA
# ============================================================

def abundance_profile(
    c: Coloring, F: PolyFamily, y: RingElement, k: ScanConstraints = DEFAULT_CONSTRAINTS
) -> Dict[int, Set[RingElement]]:
    """
    X_y^i = {x na janela : pattern_color(c, x, y, F) = i}, para i = 1..r.
    As restrições entram só como exclusões de y e de x: a instância
    degenerada conta (é monocromática de fato).
    """
    if y.spec != c.window.spec:
        raise SpecMismatch(f"y em {y.spec}, coloração sobre {c.window.spec}")
    bound = k.bind(c.window.spec)
    if y in bound.exclude_y:
        raise InvalidParams(f"y = {format_element(y)} excluído pelas restrições")
    profile: Dict[int, Set[RingElement]] = {i: set() for i in range(1, c.r + 1)}
    f_values = [eval_poly(f, y) for f in F]
    for x in c.window:
        if x in bound.exclude_x:
            continue
        color = _color_of_elements(c, instance_from_values(x, y, f_values).elements)
        if isinstance(color, int):
            profile[color].add(x)
    return profile


def abundance_sweep(
    c: Coloring, F: PolyFamily, ys: Optional[Iterable[RingElement]] = None, k: ScanConstraints = DEFAULT_CONSTRAINTS
) -> pd.DataFrame:
    """Tabela (y, color, count) para cada y não excluído (default: toda a janela)."""
    bound = k.bind(c.window.spec)
    rows = []
    for y in (ys if ys is not None else c.window):
        if y in bound.exclude_y:
            continue
        profile = abundance_profile(c, F, y, k)
        for color, xs in profile.items():
            rows.append({"y": format_element(y), "color": color, "count": len(xs)})
    return pd.DataFrame(rows, columns=["y", "color", "count"])


# ============================================================
# CONJUNTOS DE RECORRÊNCIA E FAMÍLIAS DILATADAS
# ============================================================

def recurrence_set(
    c: Coloring, F: PolyFamily, i: int, k: ScanConstraints = DEFAULT_CONSTRAINTS
) -> Dict[RingElement, RingElement]:
    """
    n ↦ menor a (ordem canônica) com a + f(n) ∈ C_i para toda f ∈ F, para cada
    n da janela não excluído como y. Sombra finita de {n : ⋂_f (−f(n) + C_i) ≠ ∅}.
    """
    if not 1 <= i <= c.r:
        raise InvalidParams(f"cor {i} fora de 1..{c.r}")
    bound = k.bind(c.window.spec)
    out: Dict[RingElement, RingElement] = {}
    for n in c.window:
        if n in bound.exclude_y:
            continue
        shifts = [eval_poly(f, n) for f in F]
        for a in c.window:
            if all(c.color_of(a + s) == i for s in shifts):
                out[n] = a
                break
    return out


@dataclass(frozen=True)
class WitnessFamily:
    z: RingElement
    color: int
    members: Tuple[Tuple[RingElement, RingElement], ...]  # (w, x) com w = x·z

    @property
    def elements(self) -> FrozenSet[RingElement]:
        return frozenset(w for w, _ in self.members)


def dilated_witness_family(
    c: Coloring, F: PolyFamily, z: RingElement, i: int, k: ScanConstraints = DEFAULT_CONSTRAINTS
) -> WitnessFamily:
    """
    E = z·X_z^i. Cada w ∈ E é divisível por z e x = w/z dá
    {xz} ∪ {x + f(z)} ⊆ C_i; as duas coisas são conferidas aqui.
    """
    if not 1 <= i <= c.r:
        raise InvalidParams(f"cor {i} fora de 1..{c.r}")
    xs = sorted(abundance_profile(c, F, z, k)[i], key=lambda e: c.window.index[e])
    members = []
    for x in xs:
        w = x * z
        back = exact_divide(w, z)
        if back != x or pattern_color(c, back, z, F) != i:
            raise WitnessError(f"w = {format_element(w)} não reproduz a configuração de cor {i}")
        members.append((w, x))
    logger.debug(f"[scan] família dilatada z={format_element(z)} cor {i}: {len(members)} membros")
    return WitnessFamily(z, i, tuple(members))
