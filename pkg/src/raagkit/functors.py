"""Graph groups, their homomorphisms, and the commutation-symbol construction.

``GroupHandle`` wraps a presentation graph together with a chosen generating
set (by default, the vertices themselves) and answers element queries: words
over the graph are multiplied, inverted, canonicalized and compared here.

On top of a handle sits the free commutation-symbol group: words whose letters
are formal symbols ``[g]``, one per group element, where ``[g]`` and ``[h]``
commute exactly when ``g`` and ``h`` commute in the base group.  That group is
never materialized; every computation is localized to the finite commutation
graph spanned by the symbols actually in play.  ``ACGroupHandle`` makes the
construction iterable, so symbol words over symbol words (as needed by the
coassociativity diagnostics) run through the same code path.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Union

from . import words as W
from .errors import (
    BaseMismatch,
    IdentitySymbolWarning,
    NotAHomomorphism,
    SearchSpaceTooLarge,
    UnknownGenerator,
    WordSyntaxError,
    ZeroExponent,
)
from .graphs import Graph, GraphHom, validate_graph, validate_hom
from .words import Word

_EXPRESSION_RADIUS_CAP = 8
_EXPRESSION_STATE_CAP = 200_000


@dataclass(frozen=True)
class GroupHandle:
    """A graph group with a distinguished generating set.

    ``exposed`` lists (name, element) pairs.  The default handle exposes each
    vertex under its own name; an obfuscated handle may expose any generating
    set of non-identity elements, with generation asserted by the caller and
    verified here only by bounded search when an expression is first needed.
    """

    graph: Graph
    exposed: tuple[tuple[str, Word], ...]

    # -- structure ----------------------------------------------------------

    @property
    def is_default(self) -> bool:
        flag = self.__dict__.get("_is_default")
        if flag is None:
            flag = tuple(name for name, _ in self.exposed) == self.graph.vertices and all(
                w.syllables == (W.Syllable(name, 1),) for name, w in self.exposed
            )
            object.__setattr__(self, "_is_default", flag)
        return flag

    def generator_items(self) -> tuple[tuple[str, Word], ...]:
        return self.exposed

    def generator_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.exposed)

    # -- element operations -------------------------------------------------

    def identity(self) -> Word:
        return Word(self.graph, ())

    def canonical(self, el: Word) -> Word:
        return W.canonical_form(el)

    def key(self, el: Word):
        return W.canonical_key(el)

    def text(self, el: Word) -> str:
        return W.word_text(el)

    def equal(self, a: Word, b: Word) -> bool:
        return W.equals(a, b)

    def is_identity(self, el: Word) -> bool:
        return W.is_identity(el)

    def multiply(self, a: Word, b: Word) -> Word:
        return W.multiply(a, b)

    def invert(self, el: Word) -> Word:
        return W.invert(el)

    def power(self, el: Word, k: int) -> Word:
        return W.power(el, k)

    def commutes(self, a: Word, b: Word) -> bool:
        return W.commutes(a, b)

    def sort_key(self, el: Word):
        return W.sort_key(el)

    def parse_element(self, text: str) -> Word:
        return W.parse_word(self.graph, text)

    def rewrite_in_generators(self, el: Word) -> tuple[tuple[str, int], ...]:
        """Express an element as a sequence of (exposed name, exponent) factors."""
        if self.is_default:
            return tuple((s.gen, s.exp) for s in el.syllables)
        out: list[tuple[str, int]] = []
        exprs = _vertex_expressions(self)
        for s in el.syllables:
            expr = exprs[s.gen]
            if s.exp >= 0:
                chunk = expr * s.exp
            else:
                chunk = tuple((n, -e) for n, e in reversed(expr)) * (-s.exp)
            out.extend(chunk)
        return tuple(out)


def raag_of_graph(graph: Graph) -> GroupHandle:
    """The default handle: one exposed generator per vertex."""
    exposed = tuple((v, Word(graph, (W.Syllable(v, 1),))) for v in graph.vertices)
    return GroupHandle(graph, exposed)


def handle_with_generators(graph: Graph,
                           generators: Mapping[str, Union[Word, str]]) -> GroupHandle:
    """A handle exposing the given named generating set.

    Generator elements must be non-identity; the caller asserts that they
    generate the whole group.
    """
    exposed = []
    for name in generators:
        if not re.match(r"[A-Za-z0-9_]+\Z", name):
            raise WordSyntaxError(f"bad generator name {name!r}")
        el = generators[name]
        if isinstance(el, str):
            el = W.parse_word(graph, el)
        el = W.canonical_form(el)
        if el.is_identity_word():
            raise ZeroExponent(f"exposed generator {name!r} is the identity")
        exposed.append((name, el))
    if len({n for n, _ in exposed}) != len(exposed):
        raise WordSyntaxError("duplicate exposed generator name")
    return GroupHandle(graph, tuple(exposed))


# Vertex-expression cache: handle -> {vertex name: factor sequence over exposed
# names}.  Filled by bounded breadth-first search over exposed products.
_VEXPR: dict[GroupHandle, dict[str, tuple[tuple[str, int], ...]]] = {}


def _vertex_expressions(handle: GroupHandle) -> dict[str, tuple[tuple[str, int], ...]]:
    got = _VEXPR.get(handle)
    if got is not None:
        return got
    graph = handle.graph
    wanted = {W.canonical_key(Word(graph, (W.Syllable(v, 1),))): v
              for v in graph.vertices}
    found: dict[str, tuple[tuple[str, int], ...]] = {}
    seen = {W.canonical_key(handle.identity())}
    frontier: list[tuple[Word, tuple[tuple[str, int], ...]]] = [(handle.identity(), ())]
    steps = [(name, el, 1) for name, el in handle.exposed]
    steps += [(name, W.invert(el), -1) for name, el in handle.exposed]
    radius = 0
    while frontier and len(found) < len(wanted):
        radius += 1
        if radius > _EXPRESSION_RADIUS_CAP or len(seen) > _EXPRESSION_STATE_CAP:
            missing = sorted(set(graph.vertices) - set(found))
            raise SearchSpaceTooLarge(
                f"could not express vertices {missing} in the exposed generators"
            )
        nxt: list[tuple[Word, tuple[tuple[str, int], ...]]] = []
        for el, expr in frontier:
            for name, gel, sgn in steps:
                nel = W.multiply(el, gel)
                k = W.canonical_key(nel)
                if k in seen:
                    continue
                seen.add(k)
                nexpr = expr + ((name, sgn),)
                nxt.append((nel, nexpr))
                v = wanted.get(k)
                if v is not None and v not in found:
                    found[v] = nexpr
        frontier = nxt
    if len(found) < len(wanted):
        missing = sorted(set(graph.vertices) - set(found))
        raise SearchSpaceTooLarge(
            f"could not express vertices {missing} in the exposed generators"
        )
    _VEXPR[handle] = found
    return found


# ---------------------------------------------------------------------------
# Group homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by images of the source's exposed generators."""

    source: GroupHandle
    target: GroupHandle
    images: tuple[tuple[str, Word], ...]
    _img: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_img", dict(self.images))

    def image_of(self, name: str) -> Word:
        try:
            return self._img[name]
        except KeyError:
            raise UnknownGenerator(f"no exposed generator {name!r}") from None

    def apply(self, el: Word) -> Word:
        acc = self.target.identity()
        for name, exp in self.source.rewrite_in_generators(el):
            acc = W.multiply(acc, W.power(self._img[name], exp))
        return acc

    __call__ = apply


def group_hom(source: GroupHandle, target: GroupHandle,
              images: Mapping[str, Union[Word, str]]) -> GroupHom:
    """Validate generator images against the source's defining relations."""
    names = source.generator_names()
    if set(images) != set(names):
        raise UnknownGenerator("images must cover exactly the exposed generators")
    pairs = []
    for name in names:
        img = images[name]
        if isinstance(img, str):
            img = W.parse_word(target.graph, img)
        pairs.append((name, W.canonical_form(img)))
    f = GroupHom(source, target, tuple(pairs))
    for u, v in source.graph.sorted_edges():
        fu = f.apply(Word(source.graph, (W.Syllable(u, 1),)))
        fv = f.apply(Word(source.graph, (W.Syllable(v, 1),)))
        if not W.commutes(fu, fv):
            raise NotAHomomorphism(
                f"images of commuting generators ({u},{v}) do not commute",
                witness=(u, v),
            )
    return f


def a_on_hom(phi: GraphHom) -> GroupHom:
    """The induced homomorphism of graph groups: each vertex to one letter."""
    src = raag_of_graph(phi.source)
    dst = raag_of_graph(phi.target)
    images = tuple(
        (v, Word(dst.graph, (W.Syllable(phi(v), 1),))) for v in phi.source.vertices
    )
    return GroupHom(src, dst, images)


# ---------------------------------------------------------------------------
# Commutation-symbol words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ACSymbol:
    """A formal symbol [g] wrapping a canonical base-group element."""

    element: object

    def __repr__(self):
        return f"ACSymbol({self.element!r})"


@dataclass(frozen=True)
class ACWord:
    """A word in commutation symbols over a base group handle.

    Structural equality is syntactic; group equality is ``ac_equals``.
    """

    base: object
    letters: tuple[tuple[ACSymbol, int], ...]

    def is_identity_word(self) -> bool:
        return not self.letters


@dataclass(frozen=True)
class ACGroupHandle:
    """The commutation-symbol group over a base handle, as a handle itself.

    Elements are ``ACWord`` values whose ``base`` is the wrapped handle.
    """

    base: object

    def identity(self) -> ACWord:
        return ACWord(self.base, ())

    def canonical(self, el: ACWord) -> ACWord:
        return ac_canonical(el)

    def key(self, el: ACWord):
        return ac_key(el)

    def text(self, el: ACWord) -> str:
        return ac_text(el)

    def equal(self, a: ACWord, b: ACWord) -> bool:
        return ac_equals(a, b)

    def is_identity(self, el: ACWord) -> bool:
        return not ac_canonical(el).letters

    def multiply(self, a: ACWord, b: ACWord) -> ACWord:
        return ac_concat(a, b)

    def invert(self, el: ACWord) -> ACWord:
        return ac_invert(el)

    def power(self, el: ACWord, k: int) -> ACWord:
        return ac_power(el, k)

    def commutes(self, a: ACWord, b: ACWord) -> bool:
        return ac_equals(ac_concat(a, b), ac_concat(b, a))


def _normalize_letters(letters: Iterable[tuple[ACSymbol, int]]) -> tuple:
    out: list[tuple[ACSymbol, int]] = []
    for sym, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == sym:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (sym, merged)
        else:
            out.append((sym, exp))
    return tuple(out)


def ac_word(base, letters: Iterable[tuple[object, int]]) -> ACWord:
    """Build a symbol word from (element, exponent) pairs.

    Elements are canonicalized; a zero exponent is rejected; using the group
    identity as a symbol is legal but flagged with a warning.
    """
    prepared = []
    for el, exp in letters:
        if isinstance(el, ACSymbol):
            el = el.element
        if exp == 0:
            raise ZeroExponent("zero exponent in a symbol word")
        canon = base.canonical(el)
        if base.is_identity(canon):
            warnings.warn("symbol word uses the identity as a symbol",
                          IdentitySymbolWarning, stacklevel=2)
        prepared.append((ACSymbol(canon), exp))
    return ACWord(base, _normalize_letters(prepared))


def ac_concat(a: ACWord, b: ACWord) -> ACWord:
    if a.base != b.base:
        raise BaseMismatch("symbol words live over different bases")
    return ACWord(a.base, _normalize_letters(a.letters + b.letters))


def ac_invert(a: ACWord) -> ACWord:
    flipped = tuple((sym, -exp) for sym, exp in reversed(a.letters))
    return ACWord(a.base, flipped)


def ac_power(a: ACWord, k: int) -> ACWord:
    if k == 0:
        return ACWord(a.base, ())
    chunk = a.letters if k > 0 else ac_invert(a).letters
    return ACWord(a.base, _normalize_letters(chunk * abs(k)))


def ac_map_symbols(a: ACWord, fn: Callable, new_base) -> ACWord:
    """Apply fn to every symbol's element, keeping outer exponents."""
    letters = [(ACSymbol(new_base.canonical(fn(sym.element))), exp)
               for sym, exp in a.letters]
    return ACWord(new_base, _normalize_letters(letters))


# ---------------------------------------------------------------------------
# Commutation graphs and equality
# ---------------------------------------------------------------------------

def _sanitize(text: str) -> str:
    name = re.sub(r"[^A-Za-z0-9_]", "_", text)
    return name or "e"


# Cache of localized commutation graphs keyed by (base, canonical keys).
_CGRAPH: dict[tuple, tuple[Graph, dict, dict]] = {}


def _commutation_graph(base, elements) -> tuple[Graph, dict, dict]:
    canon: dict = {}
    for el in elements:
        c = base.canonical(el)
        canon.setdefault(base.key(c), c)
    cache_key = (base, tuple(sorted(canon, key=repr)))
    got = _CGRAPH.get(cache_key)
    if got is not None:
        return got
    if len(_CGRAPH) > 30_000:
        _CGRAPH.clear()
    items = sorted(((base.text(c), k, c) for k, c in canon.items()),
                   key=lambda t: (t[0], repr(t[1])))
    used: set[str] = set()
    named = []
    for text, k, c in items:
        name = _sanitize(text)
        while name in used:
            name += "_"
        used.add(name)
        named.append((name, k, c))
    vertices = [name for name, _, _ in named]
    edges = []
    for i in range(len(named)):
        for j in range(i + 1, len(named)):
            if base.commutes(named[i][2], named[j][2]):
                edges.append((named[i][0], named[j][0]))
    graph = validate_graph(vertices, edges)
    labeling = {name: c for name, _, c in named}
    name_by_key = {k: name for name, k, _ in named}
    out = (graph, labeling, name_by_key)
    _CGRAPH[cache_key] = out
    return out


def commutation_graph(base, elements) -> tuple[Graph, dict]:
    """The commutation graph on the given elements, deduplicated.

    Returns the graph together with a labeling from vertex names back to the
    canonical elements.
    """
    graph, labeling, _ = _commutation_graph(base, elements)
    return graph, labeling


def _interpret(a: ACWord, graph: Graph, name_by_key: dict, base) -> Word:
    sylls = tuple(W.Syllable(name_by_key[base.key(sym.element)], exp)
                  for sym, exp in a.letters)
    return Word(graph, sylls)


def ac_equals(a: ACWord, b: ACWord) -> bool:
    """Group equality of symbol words, decided on the joint commutation graph."""
    if a.base != b.base:
        raise BaseMismatch("symbol words live over different bases")
    base = a.base
    symbols = [sym.element for sym, _ in a.letters] + \
              [sym.element for sym, _ in b.letters]
    if not symbols:
        return True
    graph, _, name_by_key = _commutation_graph(base, symbols)
    return W.equals(_interpret(a, graph, name_by_key, base),
                    _interpret(b, graph, name_by_key, base))


def ac_canonical(a: ACWord) -> ACWord:
    """A canonical representative, computed on the word's own symbol graph."""
    if not a.letters:
        return a
    base = a.base
    graph, labeling, name_by_key = _commutation_graph(
        base, [sym.element for sym, _ in a.letters])
    canon = W.canonical_form(_interpret(a, graph, name_by_key, base))
    letters = tuple((ACSymbol(labeling[s.gen]), s.exp) for s in canon.syllables)
    return ACWord(base, letters)


def ac_key(a: ACWord) -> tuple:
    base = a.base
    return tuple((base.key(sym.element), exp)
                 for sym, exp in ac_canonical(a).letters)


# ---------------------------------------------------------------------------
# The comonad operations
# ---------------------------------------------------------------------------

def epsilon(a: ACWord):
    """Multiply the symbols out in the base group."""
    base = a.base
    acc = base.identity()
    for sym, exp in a.letters:
        acc = base.multiply(acc, base.power(sym.element, exp))
    return acc


def delta(a: ACWord) -> ACWord:
    """Rewrap every symbol: [g] becomes [[g]], exponents unchanged."""
    outer = ACGroupHandle(a.base)
    letters = tuple(
        (ACSymbol(ACWord(a.base, ((sym, 1),))), exp) for sym, exp in a.letters
    )
    return ACWord(outer, letters)


def ac_on_hom(f: GroupHom, a: ACWord) -> ACWord:
    """The induced map on symbol words: each symbol [g] to [f(g)]."""
    if a.base != f.source:
        raise BaseMismatch("word base does not match the hom's source")
    return ac_map_symbols(a, f.apply, f.target)


def eta(graph: Graph) -> GraphHom:
    """Embed a graph into the commutation graph of its one-letter generators."""
    handle = raag_of_graph(graph)
    gens = [Word(graph, (W.Syllable(v, 1),)) for v in graph.vertices]
    cg, _, name_by_key = _commutation_graph(handle, gens)
    mapping = {v: name_by_key[W.canonical_key(g)] for v, g in zip(graph.vertices, gens)}
    return validate_hom(graph, cg, mapping)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def ac_text(a: ACWord) -> str:
    """Render a symbol word; the identity renders as the empty string."""
    base = a.base
    parts = []
    for sym, exp in a.letters:
        body = f"[{base.text(sym.element)}]"
        parts.append(body if exp == 1 else f"{body}^{exp}")
    return " ".join(parts)


def parse_ac_word(base, text: str) -> ACWord:
    """Parse bracketed symbol-word text like ``[a b^2]^-1 [c]``."""
    if isinstance(base, ACGroupHandle):
        raise WordSyntaxError("nested symbol words have no text format")
    letters: list[tuple[Word, int]] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "[":
            raise WordSyntaxError(f"expected '[' at position {pos}")
        close = text.find("]", pos)
        if close < 0:
            raise WordSyntaxError("unbalanced '['")
        inner = text[pos + 1:close]
        pos = close + 1
        exp = 1
        if pos < n and text[pos] == "^":
            m = re.match(r"\^(-?\d+)", text[pos:])
            if not m:
                raise WordSyntaxError(f"bad exponent at position {pos}")
            exp = int(m.group(1))
            pos += m.end()
        if pos < n and not text[pos].isspace():
            raise WordSyntaxError(f"unexpected character at position {pos}")
        letters.append((base.parse_element(inner), exp))
    return ac_word(base, letters)
