"""The placement-constraint DSL and its two evaluation backends.

Grammar (version 1, the stable public surface)::

    expr   := term (("or" | "|") term)*
    term   := factor (("and" | "&") factor)*
    factor := ("not" | "!") factor | "(" expr ")" | atom | "true" | "false"
    atom   := DIST "(" ID "," ID ")" (CMP NUMBER | "->" "min")
    DIST   := gamma1 gamma2 eta1 eta2 delta1 delta2 mu hdir haus d1 d2 dstar
    CMP    := < <= = != >= >

(`true`/`false` literals are an additive extension so normalized expressions
containing the certain/impossible constants still print and re-parse.)

An atom ``dist(X, Y) cmp n`` constrains the distance from the movable object X
(translated by the query point) to Y. ``-> min`` asks for the translations
attaining the distance's minimal possible value.

Backends: `eval_point` computes actual distances at one translation;
`eval_region` builds the full feasible region by mapping each atom to a slice
of its parametric family (closed slice for <=, interior for <, boundary for =,
complements for >=, >, !=) and folding the Boolean tree with the non-regular
region algebra. Distances whose erosion base is empty make their atoms false
and leave a diagnostic rather than failing the whole evaluation.
"""

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Union

import numpy as np
import shapely

from .distances import (
    DistanceKind,
    farthest_vertex_batch,
    mu as _mu_pair,
    region_samples,
    signed_distance_batch,
    signed_point_distance,
)
from .errors import (
    CspaceError,
    MixedSubjectsError,
    ParseError,
    UndefinedDistanceError,
    UnknownGroupError,
    UnknownObjectError,
)
from .families import DiskConfig, FamilyKind, PairCache
from .geom import EPS, MultiPolygon, Point, extreme_points, inflate_bounds, merge_bounds
from .region import (
    Bounds,
    Flag,
    RegionNR,
    empty_region,
    full_region,
    nr_complement,
    nr_difference,
    nr_intersect,
    nr_union,
    region_from_polygon,
)
from .scene import Scene


# ---------------------------------------------------------------------------
# AST


class Cmp:
    LT = "<"
    LE = "<="
    EQ = "="
    NE = "!="
    GE = ">="
    GT = ">"
    TO_MIN = "->min"


_COMPLEMENT = {Cmp.LT: Cmp.GE, Cmp.LE: Cmp.GT, Cmp.EQ: Cmp.NE,
               Cmp.NE: Cmp.EQ, Cmp.GE: Cmp.LT, Cmp.GT: Cmp.LE}

_DIST_NAMES = {k.value: k for k in DistanceKind}

_KIND_TO_FAMILY = {
    DistanceKind.GAMMA1: FamilyKind.GAMMA1_F,
    DistanceKind.GAMMA2: FamilyKind.GAMMA2_F,
    DistanceKind.ETA1: FamilyKind.H1_F,
    DistanceKind.ETA2: FamilyKind.H2_F,
    DistanceKind.DELTA1: FamilyKind.DELTA1_F,
    DistanceKind.DELTA2: FamilyKind.DELTA2_F,
    DistanceKind.MU_BA: FamilyKind.M1_F,
    DistanceKind.MU_AB: FamilyKind.M2_F,
    DistanceKind.HAUS: FamilyKind.M3_F,
}


@dataclass(frozen=True)
class Atom:
    dist: DistanceKind
    subject: str
    reference: str
    cmp: str
    lam: float | None = None  # None exactly for TO_MIN
    span: tuple[int, int] = field(default=(0, 0), compare=False)

    def __post_init__(self):
        if self.subject == self.reference:
            raise ValueError("atom subject and reference must differ")
        if self.cmp == Cmp.TO_MIN:
            if self.lam is not None:
                raise ValueError("'-> min' atoms take no threshold")
        elif self.lam is None or not math.isfinite(self.lam):
            raise ValueError("comparison atoms need a finite threshold")

    def key(self) -> tuple:
        return (self.dist, self.subject, self.reference)


@dataclass(frozen=True)
class Not:
    child: "TgsExpr"


@dataclass(frozen=True)
class And:
    items: tuple["TgsExpr", ...]


@dataclass(frozen=True)
class Or:
    items: tuple["TgsExpr", ...]


@dataclass(frozen=True)
class Const:
    value: bool


TRUE_I = Const(True)
FALSE_0 = Const(False)

TgsExpr = Union[Atom, Not, And, Or, Const]


# ---------------------------------------------------------------------------
# Lexer / parser


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "(),":
            toks.append(_Token({"(": "LPAREN", ")": "RPAREN", ",": "COMMA"}[c], c, i))
            i += 1
        elif c in "<>!=":
            two = text[i:i + 2]
            if two in ("<=", ">=", "!="):
                toks.append(_Token("CMP", two, i))
                i += 2
            elif c == "!":
                toks.append(_Token("NOT", c, i))
                i += 1
            elif c == "=":
                toks.append(_Token("CMP", c, i))
                i += 1
            else:
                toks.append(_Token("CMP", c, i))
                i += 1
        elif c == "&":
            toks.append(_Token("AND", c, i))
            i += 1
        elif c == "|":
            toks.append(_Token("OR", c, i))
            i += 1
        elif c == "-":
            if text[i:i + 2] == "->":
                toks.append(_Token("ARROW", "->", i))
                i += 2
            elif i + 1 < n and (text[i + 1].isdigit() or text[i + 1] == "."):
                j = _scan_number(text, i + 1)
                toks.append(_Token("NUMBER", text[i:j], i))
                i = j
            else:
                raise ParseError("stray '-'", i, ("'->'", "number"))
        elif c.isdigit() or c == ".":
            j = _scan_number(text, i)
            toks.append(_Token("NUMBER", text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = {"and": "AND", "or": "OR", "not": "NOT",
                    "true": "TRUE", "false": "FALSE"}.get(word, "ID")
            toks.append(_Token(kind, word, i))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    toks.append(_Token("EOF", "", n))
    return toks


def _scan_number(text: str, i: int) -> int:
    n = len(text)
    j = i
    while j < n and (text[j].isdigit() or text[j] == "."):
        j += 1
    if j < n and text[j] in "eE":
        k = j + 1
        if k < n and text[k] in "+-":
            k += 1
        if k < n and text[k].isdigit():
            j = k
            while j < n and text[j].isdigit():
                j += 1
    return j


class _Parser:
    def __init__(self, toks: list[_Token]):
        self.toks = toks
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def take(self, kind: str, expected: str) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != kind:
            raise ParseError(f"unexpected {tok.text!r}", tok.pos, (expected,))
        self.i += 1
        return tok

    def parse(self) -> TgsExpr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos,
                             ("'and'", "'or'", "end of input"))
        return e

    def expr(self) -> TgsExpr:
        items = [self.term()]
        while self.peek().kind == "OR":
            self.i += 1
            items.append(self.term())
        if len(items) == 1:
            return items[0]
        return Or(tuple(_flatten(items, Or)))  # canonical n-ary form

    def term(self) -> TgsExpr:
        items = [self.factor()]
        while self.peek().kind == "AND":
            self.i += 1
            items.append(self.factor())
        if len(items) == 1:
            return items[0]
        return And(tuple(_flatten(items, And)))

    def factor(self) -> TgsExpr:
        tok = self.peek()
        if tok.kind == "NOT":
            self.i += 1
            return Not(self.factor())
        if tok.kind == "LPAREN":
            self.i += 1
            e = self.expr()
            self.take("RPAREN", "')'")
            return e
        if tok.kind == "TRUE":
            self.i += 1
            return TRUE_I
        if tok.kind == "FALSE":
            self.i += 1
            return FALSE_0
        return self.atom()

    def atom(self) -> Atom:
        tok = self.take("ID", "distance name")
        if tok.text not in _DIST_NAMES:
            raise ParseError(f"unknown distance {tok.text!r}", tok.pos,
                             tuple(sorted(_DIST_NAMES)))
        dist = _DIST_NAMES[tok.text]
        self.take("LPAREN", "'('")
        subject = self.take("ID", "object name").text
        self.take("COMMA", "','")
        reference = self.take("ID", "object name").text
        rp = self.take("RPAREN", "')'")
        nxt = self.peek()
        if nxt.kind == "ARROW":
            self.i += 1
            word = self.take("ID", "'min'")
            if word.text != "min":
                raise ParseError(f"expected 'min', got {word.text!r}", word.pos, ("'min'",))
            end = word.pos + len(word.text)
            return Atom(dist, subject, reference, Cmp.TO_MIN, None, (tok.pos, end))
        if nxt.kind == "CMP":
            self.i += 1
            num = self.take("NUMBER", "number")
            try:
                lam = float(num.text)
            except ValueError:
                raise ParseError(f"bad number {num.text!r}", num.pos, ("number",))
            end = num.pos + len(num.text)
            return Atom(dist, subject, reference, nxt.text, lam, (tok.pos, end))
        raise ParseError(f"unexpected {nxt.text!r} after atom", nxt.pos,
                         ("comparison", "'->'"))


def parse(text: str) -> TgsExpr:
    """Parse constraint text into an AST (with source spans on atoms)."""
    return _Parser(_tokenize(text)).parse()


def print_expr(e: TgsExpr) -> str:
    """Canonical text form; parse(print_expr(e)) is structurally e."""
    return _print(e, 0)


def _print(e: TgsExpr, level: int) -> str:
    # level: 0 or-context, 1 and-context, 2 not-context
    if isinstance(e, Const):
        return "true" if e.value else "false"
    if isinstance(e, Atom):
        core = f"{e.dist.value}({e.subject},{e.reference})"
        if e.cmp == Cmp.TO_MIN:
            return f"{core} -> min"
        return f"{core} {e.cmp} {_fmt_num(e.lam)}"
    if isinstance(e, Not):
        inner = _print(e.child, 2)
        if isinstance(e.child, (And, Or)):
            inner = f"({inner})"
        return f"!{inner}"
    if isinstance(e, And):
        parts = []
        for item in e.items:
            s = _print(item, 1)
            if isinstance(item, Or):
                s = f"({s})"
            parts.append(s)
        s = " & ".join(parts)
        return s
    if isinstance(e, Or):
        s = " | ".join(_print(item, 0) for item in e.items)
        return s
    raise TypeError(f"not a TgsExpr: {e!r}")


def _fmt_num(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


# ---------------------------------------------------------------------------
# Normalization


def normalize(e: TgsExpr) -> TgsExpr:
    """Negation normal form plus chain folding.

    Negations move onto atoms through the comparison complements (not < is >=,
    not = is !=, and so on; a negated '-> min' atom has no primitive form and
    keeps its negation). Within one conjunction or disjunction, threshold
    chains over the same atom collapse through monotonicity: the tightest
    upper and lower bounds survive in a conjunction, the loosest in a
    disjunction; an upper bound meeting a lower bound exactly becomes an
    equality, and crossing bounds collapse to the impossible constant.
    """
    return _fold(_nnf(e, negate=False))


def _nnf(e: TgsExpr, negate: bool) -> TgsExpr:
    if isinstance(e, Const):
        return Const(e.value ^ negate)
    if isinstance(e, Atom):
        if not negate:
            return e
        if e.cmp == Cmp.TO_MIN:
            return Not(e)
        return replace(e, cmp=_COMPLEMENT[e.cmp])
    if isinstance(e, Not):
        return _nnf(e.child, not negate)
    if isinstance(e, And):
        items = tuple(_nnf(x, negate) for x in e.items)
        return Or(items) if negate else And(items)
    if isinstance(e, Or):
        items = tuple(_nnf(x, negate) for x in e.items)
        return And(items) if negate else Or(items)
    raise TypeError(f"not a TgsExpr: {e!r}")


def _flatten(items: Iterable[TgsExpr], cls) -> list[TgsExpr]:
    out: list[TgsExpr] = []
    for item in items:
        if isinstance(item, cls):
            out.extend(item.items)
        else:
            out.append(item)
    return out


def _fold(e: TgsExpr) -> TgsExpr:
    if isinstance(e, (Const, Atom)):
        return e
    if isinstance(e, Not):
        return Not(_fold(e.child))
    is_and = isinstance(e, And)
    items = [_fold(x) for x in _flatten(e.items, And if is_and else Or)]
    items = _flatten(items, And if is_and else Or)

    kept: list[TgsExpr] = []
    for item in items:
        if isinstance(item, Const):
            if item.value != is_and:
                return Const(item.value)  # FALSE kills a conjunction, TRUE a disjunction
            continue  # neutral element
        kept.append(item)

    atoms = [x for x in kept if isinstance(x, Atom) and x.cmp != Cmp.TO_MIN]
    rest = [x for x in kept if not (isinstance(x, Atom) and x.cmp != Cmp.TO_MIN)]
    groups: dict[tuple, list[Atom]] = {}
    for a in atoms:
        groups.setdefault(a.key(), []).append(a)

    folded_atoms: list[TgsExpr] = []
    for key in groups:
        chain = groups[key]
        result = _fold_chain(chain, conj=is_and)
        if isinstance(result, Const):
            if result.value != is_and:
                return result
            continue
        folded_atoms.extend(result)

    out = folded_atoms + rest
    if not out:
        return Const(is_and)  # empty conjunction is certain, empty disjunction impossible
    if len(out) == 1:
        return out[0]
    return And(tuple(out)) if is_and else Or(tuple(out))


def _fold_chain(chain: list[Atom], conj: bool) -> Union[Const, list[Atom]]:
    """Collapse same-key comparison atoms inside one And (conj) or Or."""
    proto = chain[0]
    uppers = [(a.lam, a.cmp == Cmp.LE) for a in chain if a.cmp in (Cmp.LE, Cmp.LT)]
    lowers = [(a.lam, a.cmp == Cmp.GE) for a in chain if a.cmp in (Cmp.GE, Cmp.GT)]
    eqs = sorted({a.lam for a in chain if a.cmp == Cmp.EQ})
    nes = sorted({a.lam for a in chain if a.cmp == Cmp.NE})

    def mk(cmp, lam):
        return replace(proto, cmp=cmp, lam=lam)

    if not conj:
        # disjunction: loosest bound wins within each direction
        out: list[Atom] = []
        if uppers:
            lam = max(u[0] for u in uppers)
            inclusive = any(u[1] for u in uppers if u[0] == lam)
            out.append(mk(Cmp.LE if inclusive else Cmp.LT, lam))
        if lowers:
            lam = min(l[0] for l in lowers)
            inclusive = any(l[1] for l in lowers if l[0] == lam)
            out.append(mk(Cmp.GE if inclusive else Cmp.GT, lam))
        out.extend(mk(Cmp.EQ, v) for v in eqs)
        out.extend(mk(Cmp.NE, v) for v in nes)
        return out

    # conjunction: tightest bounds; detect contradictions
    upper = None  # (lam, inclusive)
    for lam, inc in uppers:
        if upper is None or lam < upper[0] or (lam == upper[0] and not inc):
            upper = (lam, inc)
    lower = None
    for lam, inc in lowers:
        if lower is None or lam > lower[0] or (lam == lower[0] and not inc):
            lower = (lam, inc)

    if len(eqs) > 1:
        return FALSE_0
    if eqs:
        v = eqs[0]
        if v in nes:
            return FALSE_0
        if upper and (v > upper[0] or (v == upper[0] and not upper[1])):
            return FALSE_0
        if lower and (v < lower[0] or (v == lower[0] and not lower[1])):
            return FALSE_0
        return [mk(Cmp.EQ, v)]
    if upper and lower:
        if upper[0] < lower[0]:
            return FALSE_0
        if upper[0] == lower[0]:
            if upper[1] and lower[1]:
                if upper[0] in nes:
                    return FALSE_0
                return [mk(Cmp.EQ, upper[0])]
            return FALSE_0
    out = []
    if upper is not None:
        out.append(mk(Cmp.LE if upper[1] else Cmp.LT, upper[0]))
    if lower is not None:
        out.append(mk(Cmp.GE if lower[1] else Cmp.GT, lower[0]))
    for v in nes:
        inside = True
        if upper and (v > upper[0] or (v == upper[0] and not upper[1])):
            inside = False
        if lower and (v < lower[0] or (v == lower[0] and not lower[1])):
            inside = False
        if inside:
            out.append(mk(Cmp.NE, v))
    if not out:
        return TRUE_I
    return out


# ---------------------------------------------------------------------------
# Group expansion


def multi_obstacle_expand(e: TgsExpr, scene: Scene) -> TgsExpr:
    """Rewrite atoms whose reference names a declared group into per-member
    Boolean combinations.

    The nearest-obstacle distance is the member minimum, so its sublevel
    constraints expand as disjunctions and superlevel ones as conjunctions;
    the farthest-point distance is the member maximum and expands dually.
    Only gamma1/gamma2 atoms support groups, with non-negative thresholds.
    """
    def walk(node: TgsExpr) -> TgsExpr:
        if isinstance(node, Atom):
            if node.subject in scene.groups:
                raise UnknownGroupError(
                    f"group {node.subject!r} cannot be the moving subject")
            if node.reference in scene.groups:
                return _expand_atom(node, scene.groups[node.reference])
            return node
        if isinstance(node, Not):
            return Not(walk(node.child))
        if isinstance(node, And):
            return And(tuple(walk(x) for x in node.items))
        if isinstance(node, Or):
            return Or(tuple(walk(x) for x in node.items))
        return node

    return walk(e)


def _expand_atom(a: Atom, members: tuple[str, ...]) -> TgsExpr:
    if a.dist not in (DistanceKind.GAMMA1, DistanceKind.GAMMA2):
        raise UnknownGroupError(
            f"distance {a.dist.value!r} has no group expansion rule")
    if a.cmp == Cmp.TO_MIN:
        raise UnknownGroupError("'-> min' atoms cannot reference a group")
    if a.lam is not None and a.lam < 0:
        raise UnknownGroupError(
            "group expansion identities need a non-negative threshold")

    def per(member: str, cmp: str, lam: float) -> Atom:
        return Atom(a.dist, a.subject, member, cmp, lam, a.span)

    is_min = a.dist is DistanceKind.GAMMA1  # nearest-obstacle = member minimum
    if a.cmp in (Cmp.LE, Cmp.LT):
        items = tuple(per(m, a.cmp, a.lam) for m in members)
        return Or(items) if is_min else And(items)
    if a.cmp in (Cmp.GE, Cmp.GT):
        items = tuple(per(m, a.cmp, a.lam) for m in members)
        return And(items) if is_min else Or(items)
    if a.cmp == Cmp.EQ:
        hit = Or(tuple(per(m, Cmp.EQ, a.lam) for m in members))
        if is_min:
            floor = And(tuple(per(m, Cmp.GE, a.lam) for m in members))
        else:
            floor = And(tuple(per(m, Cmp.LE, a.lam) for m in members))
        return And((hit, floor))
    # NE: complement of the EQ expansion
    return _nnf(_expand_atom(replace(a, cmp=Cmp.EQ), members), negate=True)


# ---------------------------------------------------------------------------
# Shared evaluation plumbing


TRUE, FALSE, AMB = 1, 0, 2


class _EvalContext:
    """Per-evaluation cache of pair bases and diagnostics."""

    def __init__(self, scene: Scene):
        self.scene = scene
        self.disk = DiskConfig(scene.config.disk_segments)
        self.caches: dict[tuple[str, str], PairCache] = {}
        self.diagnostics: list[str] = []

    def cache_for(self, atom: Atom) -> PairCache:
        key = (atom.subject, atom.reference)
        if key not in self.caches:
            for name in key:
                if name not in self.scene.objects:
                    raise UnknownObjectError(f"unknown object {name!r}")
            B = self.scene.objects[atom.subject]
            A = self.scene.objects[atom.reference]
            self.caches[key] = PairCache(B, A, self.disk)
        return self.caches[key]

    def note(self, msg: str):
        if msg not in self.diagnostics:
            self.diagnostics.append(msg)


def _extreme_for_atom(cache: PairCache, dist: DistanceKind) -> float:
    """Minimal attainable value of the distance over all translations."""
    if dist in (DistanceKind.D1, DistanceKind.DSTAR):
        return 0.0  # clamped-at-zero distances bottom out at 0
    if dist is DistanceKind.D2:
        return cache.extreme_lambda(FamilyKind.GAMMA2_F)
    return cache.extreme_lambda(_KIND_TO_FAMILY[dist])


def _atoms_of(e: TgsExpr) -> list[Atom]:
    if isinstance(e, Atom):
        return [e]
    if isinstance(e, Not):
        return _atoms_of(e.child)
    if isinstance(e, (And, Or)):
        out = []
        for x in e.items:
            out.extend(_atoms_of(x))
        return out
    return []


def configuration_window(e: TgsExpr, scene: Scene, ctx: _EvalContext | None = None
                         ) -> Bounds:
    """Window covering every family base, inflated by the largest threshold
    magnitude plus one."""
    if scene.config.window:
        return scene.config.window
    ctx = ctx or _EvalContext(scene)
    e = multi_obstacle_expand(e, scene)
    bounds = None
    max_lam = 0.0
    for atom in _atoms_of(e):
        if atom.lam is not None:
            max_lam = max(max_lam, abs(atom.lam))
        cache = ctx.cache_for(atom)
        bases = [cache.co.region]
        fam = _KIND_TO_FAMILY.get(atom.dist)
        if fam in (FamilyKind.H1_F, FamilyKind.H2_F, FamilyKind.M1_F, FamilyKind.M3_F) \
                or atom.dist in (DistanceKind.DSTAR,):
            if not cache.containment.is_empty:
                bases.append(cache.containment)
        if fam in (FamilyKind.DELTA1_F, FamilyKind.DELTA2_F, FamilyKind.M2_F,
                   FamilyKind.M3_F):
            if not cache.covering.is_empty:
                bases.append(cache.covering)
        for b in bases:
            if b.is_empty:
                continue
            bounds = b.bounds if bounds is None else merge_bounds(bounds, b.bounds)
    if bounds is None:
        bounds = (-1.0, -1.0, 1.0, 1.0)
    return inflate_bounds(bounds, max_lam + 1.0)


# ---------------------------------------------------------------------------
# Point backend


def _atom_value(atom: Atom, ctx: _EvalContext, p: Point) -> float:
    """Exact distance of the atom at translation p, via the cached bases."""
    cache = ctx.cache_for(atom)
    kind = atom.dist
    if kind is DistanceKind.GAMMA1 or kind is DistanceKind.D1:
        co = cache.co
        # transported query: distance from p to the obstacle boundary
        val = signed_point_distance(co.region, p).value
        for feat in co.degenerate_features:
            fd = shapely.LineString(feat.points).distance(shapely.Point(p.x, p.y)) \
                if len(feat.points) > 1 else math.hypot(feat.points[0][0] - p.x,
                                                        feat.points[0][1] - p.y)
            if fd + EPS < abs(val):
                val = math.copysign(fd, val) if fd > EPS else 0.0
                ctx.note("query point nearest to a degenerate contact feature")
        if kind is DistanceKind.D1:
            return max(val, 0.0)
        return val
    if kind is DistanceKind.GAMMA2 or kind is DistanceKind.D2:
        verts = np.array([q.as_tuple() for q in extreme_points(cache.co.region)])
        return float(np.max(np.hypot(verts[:, 0] - p.x, verts[:, 1] - p.y)))
    if kind in (DistanceKind.ETA1, DistanceKind.ETA2, DistanceKind.DSTAR):
        base = cache.containment
        if base.is_empty:
            raise UndefinedDistanceError(
                f"{kind.value}({atom.subject},{atom.reference}) undefined: "
                "subject cannot fit inside reference")
        if kind is DistanceKind.ETA2:
            verts = base.vertex_array()
            return float(np.max(np.hypot(verts[:, 0] - p.x, verts[:, 1] - p.y)))
        val = signed_point_distance(base, p).value
        if kind is DistanceKind.DSTAR:
            return max(0.0, -val)
        return val
    if kind in (DistanceKind.DELTA1, DistanceKind.DELTA2):
        base = cache.covering
        if base.is_empty:
            raise UndefinedDistanceError(
                f"{kind.value}({atom.subject},{atom.reference}) undefined: "
                "subject cannot cover reference")
        if kind is DistanceKind.DELTA2:
            verts = base.vertex_array()
            return float(np.max(np.hypot(verts[:, 0] - p.x, verts[:, 1] - p.y)))
        return signed_point_distance(base, p).value
    # Hausdorff kinds: full dual computation at the translated position
    B_moved = cache.B.translated(p)
    if kind is DistanceKind.MU_BA:
        return _mu_pair(B_moved, cache.A, ctx.disk.segments).value
    if kind is DistanceKind.MU_AB:
        return _mu_pair(cache.A, B_moved, ctx.disk.segments).value
    if kind is DistanceKind.HAUS:
        return max(_mu_pair(B_moved, cache.A, ctx.disk.segments).value,
                   _mu_pair(cache.A, B_moved, ctx.disk.segments).value)
    raise TypeError(f"unhandled kind {kind}")  # pragma: no cover


def _compare(value: float, cmp: str, lam: float, eps_cmp: float,
             min_tol: float = 0.0) -> int:
    if cmp == Cmp.TO_MIN:
        tol = max(eps_cmp, min_tol)
        if abs(value - lam) <= tol:
            return TRUE
        if abs(value - lam) <= 2 * tol:
            return AMB
        return FALSE
    near = abs(value - lam) <= eps_cmp
    if cmp == Cmp.EQ:
        if near:
            return TRUE
        return AMB if abs(value - lam) <= 2 * eps_cmp else FALSE
    if cmp == Cmp.NE:
        if near:
            return FALSE
        return AMB if abs(value - lam) <= 2 * eps_cmp else TRUE
    if near:
        return AMB
    if cmp in (Cmp.LE, Cmp.LT):
        return TRUE if value < lam else FALSE
    return TRUE if value > lam else FALSE


def _combine_codes(op: str, codes: list[int]) -> int:
    if op == "and":
        if any(c == FALSE for c in codes):
            return FALSE
        if any(c == AMB for c in codes):
            return AMB
        return TRUE
    if any(c == TRUE for c in codes):
        return TRUE
    if any(c == AMB for c in codes):
        return AMB
    return FALSE


@dataclass(frozen=True)
class EvalOutcome:
    code: int  # TRUE / FALSE / AMB
    diagnostics: tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        return {TRUE: "TRUE", FALSE: "FALSE", AMB: "AMBIGUOUS"}[self.code]


def eval_point(e: TgsExpr, scene: Scene, p: Point,
               ctx: _EvalContext | None = None) -> EvalOutcome:
    """Evaluate the constraint at one translation of the moving object.

    Atoms within eps_cmp of their threshold report AMBIGUOUS rather than
    picking a side; undefined distances make their atom false and leave a
    diagnostic.
    """
    ctx = ctx or _EvalContext(scene)
    expr = normalize(multi_obstacle_expand(e, scene))
    code = _eval_node(expr, ctx, p)
    return EvalOutcome(code, tuple(ctx.diagnostics))


def _eval_node(e: TgsExpr, ctx: _EvalContext, p: Point) -> int:
    if isinstance(e, Const):
        return TRUE if e.value else FALSE
    if isinstance(e, Not):
        inner = _eval_node(e.child, ctx, p)
        return {TRUE: FALSE, FALSE: TRUE, AMB: AMB}[inner]
    if isinstance(e, And):
        return _combine_codes("and", [_eval_node(x, ctx, p) for x in e.items])
    if isinstance(e, Or):
        return _combine_codes("or", [_eval_node(x, ctx, p) for x in e.items])
    atom: Atom = e
    try:
        if atom.cmp == Cmp.TO_MIN:
            cache = ctx.cache_for(atom)
            lam_min = _extreme_for_atom(cache, atom.dist)
            value = _atom_value(atom, ctx, p)
            return _compare(value, Cmp.TO_MIN, lam_min, ctx.scene.config.eps_cmp,
                            min_tol=2e-4)
        value = _atom_value(atom, ctx, p)
    except UndefinedDistanceError as exc:
        ctx.note(str(exc))
        return FALSE
    return _compare(value, atom.cmp, atom.lam, ctx.scene.config.eps_cmp)


# ---------------------------------------------------------------------------
# Grid backend (vectorized point evaluation; used by the map oracle)


def _atom_field(atom: Atom, ctx: _EvalContext, pts: np.ndarray) -> np.ndarray | None:
    """Distance values of the atom at every translation, or None when the
    distance is undefined for the pair. Hausdorff kinds use a dense-sample
    supremum whose covering error is folded into the ambiguity band."""
    cache = ctx.cache_for(atom)
    kind = atom.dist
    if kind in (DistanceKind.GAMMA1, DistanceKind.D1):
        vals = signed_distance_batch(cache.co.region, pts)
        return np.maximum(vals, 0.0) if kind is DistanceKind.D1 else vals
    if kind in (DistanceKind.GAMMA2, DistanceKind.D2):
        verts = np.array([q.as_tuple() for q in extreme_points(cache.co.region)])
        return farthest_vertex_batch(verts, pts)
    if kind in (DistanceKind.ETA1, DistanceKind.ETA2, DistanceKind.DSTAR):
        base = cache.containment
        if base.is_empty:
            return None
        if kind is DistanceKind.ETA2:
            verts = np.array([q.as_tuple() for q in extreme_points(base)])
            return farthest_vertex_batch(verts, pts)
        vals = signed_distance_batch(base, pts)
        return np.maximum(0.0, -vals) if kind is DistanceKind.DSTAR else vals
    if kind in (DistanceKind.DELTA1, DistanceKind.DELTA2):
        base = cache.covering
        if base.is_empty:
            return None
        if kind is DistanceKind.DELTA2:
            verts = np.array([q.as_tuple() for q in extreme_points(base)])
            return farthest_vertex_batch(verts, pts)
        return signed_distance_batch(base, pts)
    # sampled directed-Hausdorff fields
    if kind is DistanceKind.MU_BA:
        return _mu_field(cache.B, cache.A, pts, subtract=False)
    if kind is DistanceKind.MU_AB:
        return _mu_field(cache.A, cache.B, pts, subtract=True)
    if kind is DistanceKind.HAUS:
        return np.maximum(_mu_field(cache.B, cache.A, pts, subtract=False),
                          _mu_field(cache.A, cache.B, pts, subtract=True))
    raise TypeError(f"unhandled kind {kind}")  # pragma: no cover


def _mu_field(X: MultiPolygon, Y: MultiPolygon, pts: np.ndarray,
              subtract: bool, chunk: int = 2048) -> np.ndarray:
    """sup over samples x of X of the signed distance from (x +- p) to Y."""
    x0, y0, x1, y1 = X.bounds
    diam = math.hypot(x1 - x0, y1 - y0)
    samples = region_samples(X, max(diam / 64, 1e-3), max(diam / 24, 1e-3))
    out = np.empty(len(pts))
    sign = -1.0 if subtract else 1.0
    for i in range(0, len(pts), chunk):
        block = pts[i:i + chunk]
        q = (samples[None, :, :] + sign * block[:, None, :]).reshape(-1, 2)
        vals = signed_distance_batch(Y, q).reshape(len(block), -1)
        out[i:i + chunk] = vals.max(axis=1)
    return out


def eval_grid(e: TgsExpr, scene: Scene, pts: np.ndarray,
              ctx: _EvalContext | None = None,
              with_margin: bool = False):
    """Vectorized eval_point over an (N, 2) array of translations.

    Returns int8 codes (1 true, 0 false, 2 ambiguous), plus, when asked, the
    per-point minimum |value - threshold| margin over all atoms (useful for
    excluding near-threshold cells from backend comparisons).
    """
    ctx = ctx or _EvalContext(scene)
    expr = normalize(multi_obstacle_expand(e, scene))
    margins = np.full(len(pts), np.inf) if with_margin else None
    codes = _grid_node(expr, ctx, pts, margins)
    if with_margin:
        return codes, margins, tuple(ctx.diagnostics)
    return codes, tuple(ctx.diagnostics)


def _grid_node(e: TgsExpr, ctx: _EvalContext, pts: np.ndarray,
               margins: np.ndarray | None) -> np.ndarray:
    n = len(pts)
    if isinstance(e, Const):
        return np.full(n, TRUE if e.value else FALSE, dtype=np.int8)
    if isinstance(e, Not):
        inner = _grid_node(e.child, ctx, pts, margins)
        out = np.where(inner == TRUE, FALSE,
                       np.where(inner == FALSE, TRUE, AMB)).astype(np.int8)
        return out
    if isinstance(e, (And, Or)):
        parts = [_grid_node(x, ctx, pts, margins) for x in e.items]
        acc = parts[0]
        for nxt in parts[1:]:
            if isinstance(e, And):
                acc = np.where((acc == FALSE) | (nxt == FALSE), FALSE,
                               np.where((acc == AMB) | (nxt == AMB), AMB, TRUE))
            else:
                acc = np.where((acc == TRUE) | (nxt == TRUE), TRUE,
                               np.where((acc == AMB) | (nxt == AMB), AMB, FALSE))
        return acc.astype(np.int8)
    atom: Atom = e
    eps_cmp = ctx.scene.config.eps_cmp
    try:
        field_vals = _atom_field(atom, ctx, pts)
    except UndefinedDistanceError as exc:  # pragma: no cover - fields return None
        ctx.note(str(exc))
        field_vals = None
    if field_vals is None:
        ctx.note(
            f"{atom.dist.value}({atom.subject},{atom.reference}) undefined: atom is false")
        return np.full(n, FALSE, dtype=np.int8)
    if atom.cmp == Cmp.TO_MIN:
        cache = ctx.cache_for(atom)
        lam = _extreme_for_atom(cache, atom.dist)
        tol = max(eps_cmp, 2e-4)
        diff = np.abs(field_vals - lam)
        out = np.where(diff <= tol, TRUE, np.where(diff <= 2 * tol, AMB, FALSE))
        if margins is not None:
            np.minimum(margins, diff, out=margins)
        return out.astype(np.int8)
    lam = atom.lam
    diff = np.abs(field_vals - lam)
    if margins is not None:
        np.minimum(margins, diff, out=margins)
    near = diff <= eps_cmp
    if atom.cmp == Cmp.EQ:
        out = np.where(near, TRUE, np.where(diff <= 2 * eps_cmp, AMB, FALSE))
    elif atom.cmp == Cmp.NE:
        out = np.where(near, FALSE, np.where(diff <= 2 * eps_cmp, AMB, TRUE))
    elif atom.cmp in (Cmp.LE, Cmp.LT):
        out = np.where(near, AMB, np.where(field_vals < lam, TRUE, FALSE))
    else:
        out = np.where(near, AMB, np.where(field_vals > lam, TRUE, FALSE))
    return out.astype(np.int8)


# ---------------------------------------------------------------------------
# Region backend


def _lower_standard_atom(atom: Atom) -> TgsExpr:
    """Rewrite d1/d2/dstar atoms into family-backed ones.

    d1 is the positive part of gamma1 and d2 equals gamma2 exactly; dstar is
    the positive part of -eta1. Threshold signs fall out as constants.
    """
    kind, lam, cmp = atom.dist, atom.lam, atom.cmp
    if kind is DistanceKind.D2:
        return replace(atom, dist=DistanceKind.GAMMA2)
    if kind is DistanceKind.D1:
        g = replace(atom, dist=DistanceKind.GAMMA1)
        if cmp == Cmp.TO_MIN:
            # minimal d1 is 0, attained on the whole overlap region
            return replace(g, cmp=Cmp.LE, lam=0.0)
        if lam > 0:
            return g
        if lam < 0:
            return FALSE_0 if cmp in (Cmp.LE, Cmp.LT, Cmp.EQ) else TRUE_I
        # lam == 0: d1 = 0 iff gamma1 <= 0
        table = {
            Cmp.LE: replace(g, cmp=Cmp.LE, lam=0.0),
            Cmp.EQ: replace(g, cmp=Cmp.LE, lam=0.0),
            Cmp.LT: FALSE_0,
            Cmp.GE: TRUE_I,
            Cmp.GT: replace(g, cmp=Cmp.GT, lam=0.0),
            Cmp.NE: replace(g, cmp=Cmp.GT, lam=0.0),
        }
        return table[cmp]
    if kind is DistanceKind.DSTAR:
        # dstar = max(0, -eta1): flip threshold and comparison direction
        h = replace(atom, dist=DistanceKind.ETA1)
        flipped = {Cmp.LE: Cmp.GE, Cmp.LT: Cmp.GT, Cmp.GE: Cmp.LE, Cmp.GT: Cmp.LT,
                   Cmp.EQ: Cmp.EQ, Cmp.NE: Cmp.NE}
        if cmp == Cmp.TO_MIN:
            # minimum of dstar is 0, attained wherever containment lacks margin
            return replace(h, cmp=Cmp.GE, lam=0.0)
        if lam > 0:
            return replace(h, cmp=flipped[cmp], lam=-lam)
        if lam < 0:
            return FALSE_0 if cmp in (Cmp.LE, Cmp.LT, Cmp.EQ) else TRUE_I
        table = {
            Cmp.LE: replace(h, cmp=Cmp.GE, lam=0.0),
            Cmp.EQ: replace(h, cmp=Cmp.GE, lam=0.0),
            Cmp.LT: FALSE_0,
            Cmp.GE: TRUE_I,
            Cmp.GT: replace(h, cmp=Cmp.LT, lam=0.0),
            Cmp.NE: replace(h, cmp=Cmp.LT, lam=0.0),
        }
        return table[cmp]
    return atom


def _lower_tree(e: TgsExpr) -> TgsExpr:
    if isinstance(e, Atom):
        return _lower_standard_atom(e)
    if isinstance(e, Not):
        return Not(_lower_tree(e.child))
    if isinstance(e, And):
        return And(tuple(_lower_tree(x) for x in e.items))
    if isinstance(e, Or):
        return Or(tuple(_lower_tree(x) for x in e.items))
    return e


def _atom_region(atom: Atom, ctx: _EvalContext, window: Bounds) -> RegionNR:
    cache = ctx.cache_for(atom)
    fam = _KIND_TO_FAMILY[atom.dist]
    eps = ctx.scene.config.eps
    try:
        if atom.cmp == Cmp.TO_MIN:
            return _min_region(atom, cache, fam, window, ctx)
        closed_slice = cache.slice(fam, atom.lam)
    except UndefinedDistanceError as exc:
        ctx.note(f"{str(exc)}; atom treated as impossible")
        return empty_region(window, (str(exc),))

    closed = region_from_polygon(closed_slice.region, Flag.INCLUDED, window)
    if atom.cmp == Cmp.LE:
        return closed
    if atom.cmp == Cmp.LT:
        return region_from_polygon(closed_slice.region, Flag.EXCLUDED, window)
    if atom.cmp == Cmp.GT:
        return nr_complement(closed, window, eps)
    if atom.cmp == Cmp.GE:
        opened = region_from_polygon(closed_slice.region, Flag.EXCLUDED, window)
        return nr_complement(opened, window, eps)
    # EQ / NE: the equality locus, kept as the difference of the closed slice
    # and its interior so any 2D residue of the Hausdorff kinds survives
    opened = region_from_polygon(closed_slice.region, Flag.EXCLUDED, window)
    eq_region = nr_difference(closed, opened, window, eps)
    if fam in (FamilyKind.M1_F, FamilyKind.M2_F, FamilyKind.M3_F):
        eq_region = replace(
            eq_region,
            diagnostics=eq_region.diagnostics + (
                "equality region of a Hausdorff-type distance may have interior "
                "in non-collapsed cases",))
    if atom.cmp == Cmp.EQ:
        return eq_region
    return nr_complement(eq_region, window, eps)


def _min_region(atom: Atom, cache: PairCache, fam: FamilyKind, window: Bounds,
                ctx: _EvalContext) -> RegionNR:
    """Region attaining the distance's minimum: a thin erosion witness for
    min-type kinds, the tiny lens at the circumradius for max-type kinds."""
    lam_min = cache.extreme_lambda(fam)
    if fam in (FamilyKind.GAMMA2_F, FamilyKind.H2_F, FamilyKind.DELTA2_F):
        slice_at_min = cache.slice(fam, lam_min)
        ctx.note(
            f"minimum of {atom.dist.value} is the enclosing-circle center; region "
            "is a lens of disk-approximation width")
        return region_from_polygon(slice_at_min.region, Flag.INCLUDED, window,
                                   diagnostics=tuple(ctx.diagnostics[-1:]))
    meta = cache.meta_for(fam)
    if fam is FamilyKind.M3_F or (fam in (FamilyKind.M1_F, FamilyKind.M2_F)
                                  and cache.base_for(fam).is_empty):
        region = cache.slice(fam, lam_min + 1e-3).region
        ctx.note(f"minimum of {atom.dist.value} found by emptiness bisection")
        return region_from_polygon(region, Flag.INCLUDED, window,
                                   diagnostics=tuple(ctx.diagnostics[-1:]))
    witness = meta.inradius_witness
    ctx.note(
        f"minimum locus of {atom.dist.value} approximated by the erosion witness "
        f"at tolerance {1e-6:g}")
    return region_from_polygon(witness, Flag.INCLUDED, window,
                               diagnostics=tuple(ctx.diagnostics[-1:]))


def eval_region(e: TgsExpr, scene: Scene,
                window: Bounds | None = None) -> RegionNR:
    """Construct the explicit feasible region of the constraint.

    All atoms must share one moving subject. Atom regions follow the
    general-position table (<= closed slice, < interior, = boundary, >=
    closed complement, > open complement, != punctured plane) and the Boolean
    tree folds with the non-regular region operations.
    """
    ctx = _EvalContext(scene)
    expr = multi_obstacle_expand(e, scene)
    expr = normalize(expr)
    expr = _lower_tree(expr)
    expr = normalize(expr)

    atoms = _atoms_of(expr)
    subjects = {a.subject for a in atoms}
    if len(subjects) > 1:
        raise MixedSubjectsError(
            f"region construction needs a single moving subject, got {sorted(subjects)}")

    win = window or configuration_window(expr, scene, ctx)
    _note_extreme_threshold_collisions(expr, ctx)
    result = _region_node(expr, ctx, win)
    extra = tuple(d for d in ctx.diagnostics if d not in result.diagnostics)
    return replace(result, diagnostics=result.diagnostics + extra, window=win)


def _region_node(e: TgsExpr, ctx: _EvalContext, window: Bounds) -> RegionNR:
    eps = ctx.scene.config.eps
    if isinstance(e, Const):
        return full_region(window) if e.value else empty_region(window)
    if isinstance(e, Not):
        return nr_complement(_region_node(e.child, ctx, window), window, eps)
    if isinstance(e, And):
        parts = [_region_node(x, ctx, window) for x in e.items]
        acc = parts[0]
        for nxt in parts[1:]:
            acc = nr_intersect(acc, nxt, eps)
        return acc
    if isinstance(e, Or):
        parts = [_region_node(x, ctx, window) for x in e.items]
        acc = parts[0]
        for nxt in parts[1:]:
            acc = nr_union(acc, nxt, eps)
        return acc
    return _atom_region(e, ctx, window)


def _note_extreme_threshold_collisions(e: TgsExpr, ctx: _EvalContext):
    atoms = _atoms_of(e)
    if not any(a.cmp == Cmp.TO_MIN for a in atoms):
        return
    from .geom import inradius as _inradius

    for a in atoms:
        if a.cmp == Cmp.TO_MIN or a.lam is None:
            continue
        try:
            cache = ctx.cache_for(a)
            fam = _KIND_TO_FAMILY[a.dist]
            base = cache.base_for(fam)
            if base.is_empty:
                continue
            # coarse inradius: the check is advisory, no need for 1e-6
            r, _ = _inradius(base, 1e-4)
        except (UndefinedDistanceError, CspaceError):
            continue
        if abs(abs(a.lam) - r) < 1e-3:
            ctx.note(
                f"threshold {a.lam:g} of {a.dist.value} lies at the extreme "
                "parameter of its family; the minimum locus may touch this slice")


# ---------------------------------------------------------------------------
# Problem presets


def _named(params: dict[str, float], key: str, default: float | None = None) -> float:
    if key in params:
        return params[key]
    if default is not None:
        return default
    raise KeyError(f"preset needs parameter {key!r} (pass --lambda {key}=...)")


def _members(scene: Scene, params: dict[str, float]) -> tuple[str, ...]:
    if not scene.groups:
        raise UnknownGroupError("preset needs a declared obstacle group")
    if len(scene.groups) > 1:
        raise UnknownGroupError(
            f"scene declares several groups {sorted(scene.groups)}; presets use one")
    return next(iter(scene.groups.values()))


def _group_name(scene: Scene) -> str:
    return next(iter(scene.groups))


def preset_expression(name: str, scene: Scene, params: dict[str, float],
                      subject: str = "B") -> str:
    """Expand a named placement problem into constraint text.

    findspace: inside the container, clear of every obstacle.
    problem1:  band constraints on d1, d2, dstar against one reference.
    problem2:  gamma bands or eta bands (disjunction of two conjunctions).
    problem3:  container clearance lamR <= 0, per-obstacle clearance > lam_i.
    problem4:  group band on gamma_l1 vs gamma_l2.
    problem5:  simultaneous covering of every group member (delta1 bands).
    """
    if name == "findspace":
        if not scene.container:
            raise UnknownObjectError("findspace needs a scene container")
        grp = _group_name(scene)
        return f"eta1({subject},{scene.container}) <= 0 & gamma1({subject},{grp}) > 0"
    if name == "problem1":
        ref = next(n for n in scene.objects if n != subject)
        o1 = "|" if params.get("odot1", 0) else "&"
        o2 = "|" if params.get("odot2", 0) else "&"
        l1, l2 = _named(params, "l1"), _named(params, "l2")
        l3, l4 = _named(params, "l3"), _named(params, "l4")
        l5, l6 = _named(params, "l5"), _named(params, "l6")
        return (f"(d1({subject},{ref}) <= {l1} {o1} d1({subject},{ref}) >= {l2}) {o2} "
                f"(d2({subject},{ref}) <= {l3} {o1} d2({subject},{ref}) >= {l4}) {o2} "
                f"(dstar({subject},{ref}) <= {l5} {o1} dstar({subject},{ref}) >= {l6})")
    if name == "problem2":
        ref = next(n for n in scene.objects if n != subject)
        l = [None] + [_named(params, f"l{i}") for i in range(1, 9)]
        return (f"(gamma1({subject},{ref}) >= {l[1]} & gamma1({subject},{ref}) <= {l[2]}"
                f" & gamma2({subject},{ref}) >= {l[3]} & gamma2({subject},{ref}) <= {l[4]})"
                f" | (eta1({subject},{ref}) >= {l[5]} & eta1({subject},{ref}) <= {l[6]}"
                f" & eta2({subject},{ref}) >= {l[7]} & eta2({subject},{ref}) <= {l[8]})")
    if name == "problem3":
        if not scene.container:
            raise UnknownObjectError("problem3 needs a scene container")
        members = _members(scene, params)
        lam_r = _named(params, "lamR", 0.0)
        if lam_r > 0:
            raise ValueError("problem3 needs lamR <= 0")
        terms = [f"eta1({subject},{scene.container}) <= {lam_r}"]
        for m in members:
            lam_i = _named(params, m, _named(params, "lam", 0.0))
            if lam_i < 0:
                raise ValueError(f"problem3 needs lambda >= 0 for obstacle {m}")
            terms.append(f"gamma1({subject},{m}) > {lam_i}")
        return " & ".join(terms)
    if name == "problem4":
        grp = _group_name(scene)
        l1, l2 = _named(params, "l1"), _named(params, "l2")
        k1 = int(params.get("form1", params.get("form", 1)))
        k2 = int(params.get("form2", params.get("form", 1)))
        return (f"gamma{k1}({subject},{grp}) <= {l1} & "
                f"gamma{k2}({subject},{grp}) > {l2}")
    if name == "problem5":
        members = _members(scene, params)
        terms = []
        full_form = any(f"eps_{m}" in params for m in members)
        for m in members:
            hi = _named(params, m, _named(params, "lam", 0.0))
            if hi > 0:
                raise ValueError(f"problem5 needs lambda <= 0 for {m}")
            if full_form:
                lo = _named(params, f"lo_{m}", -1e9)
                terms.append(f"(delta1({subject},{m}) <= {hi} & "
                             f"delta1({subject},{m}) >= {lo})")
            else:
                terms.append(f"delta1({subject},{m}) <= {hi}")
        expr = " & ".join(terms)
        if full_form:
            disj = " | ".join(
                f"delta2({subject},{m}) <= {_named(params, f'eps_{m}')}"
                for m in members if f"eps_{m}" in params)
            expr = f"({disj}) & {expr}"
        return expr
    raise KeyError(f"unknown preset {name!r}; have findspace, problem1..problem5")


PRESET_NAMES = ("findspace", "problem1", "problem2", "problem3", "problem4", "problem5")
