"""Graph homomorphisms and the group homomorphisms they induce.

A vertex map between graphs that carries edges to edges sends each
generator of the target's group to the product of its preimage fiber;
fibers are independent sets, so the product order only matters for
determinism and is fixed to the canonical vertex order.
"""

from __future__ import annotations

import os

from .errors import GraphParseError
from .graphs import load_graph
from .words import (
    Letter,
    canonical_words,
    commute_elements,
    format_word,
    inverse,
    is_trivial,
    reduced_words,
    support,
)


class GraphHom:
    """Vertex map source -> target."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source, target, mapping):
        for v in source.vertices:
            if v not in mapping:
                raise ValueError(f"no image for source vertex {v!r}")
        for v, w in mapping.items():
            if v not in source:
                raise ValueError(f"unknown source vertex {v!r}")
            if w not in target:
                raise ValueError(f"unknown target vertex {w!r}")
        self.source = source
        self.target = target
        self.mapping = dict(mapping)

    def __call__(self, v):
        return self.mapping[v]

    def fiber(self, w):
        """Preimage of a target vertex, in canonical source order."""
        return tuple(v for v in self.source.vertices if self.mapping[v] == w)


def check_graph_hom(h):
    """True iff every source edge maps to a target edge."""
    return all(h.target.adjacent(h(u), h(v)) for u, v in h.source.edges)


class GroupMap:
    """Group homomorphism described by generator images.

    ``domain`` is the graph presenting the domain group; each of its
    vertices maps to a word over ``codomain``'s vertices. ``apply`` is
    literal substitution and never reduces.
    """

    __slots__ = ("domain", "codomain", "images")

    def __init__(self, domain, codomain, images):
        for v in domain.vertices:
            if v not in images:
                raise ValueError(f"no image word for generator {v!r}")
        for v, w in images.items():
            for lt in w:
                if lt.base not in codomain:
                    raise ValueError(
                        f"image of {v!r} uses unknown vertex {lt.base!r}"
                    )
        self.domain = domain
        self.codomain = codomain
        self.images = {v: tuple(w) for v, w in images.items()}

    def apply(self, w):
        out = []
        for lt in w:
            img = self.images[lt.base]
            out.extend(img if lt.sign > 0 else inverse(img))
        return tuple(out)


class InducedHom(GroupMap):
    """The group homomorphism induced by a graph homomorphism: each
    generator of the target graph's group maps to the ordered product of
    its fiber (the identity when the fiber is empty)."""

    __slots__ = ("hom", "fiber_order")

    def __init__(self, hom):
        if not check_graph_hom(hom):
            raise ValueError("vertex map does not carry edges to edges")
        fiber_order = {w: hom.fiber(w) for w in hom.target.vertices}
        images = {
            w: tuple(Letter(v, 1) for v in fiber)
            for w, fiber in fiber_order.items()
        }
        super().__init__(hom.target, hom.source, images)
        self.hom = hom
        self.fiber_order = fiber_order


def induced_hom(h):
    return InducedHom(h)


def apply_induced(m, w):
    return m.apply(w)


def kill_generators(g, kill):
    """Retraction onto the group of the graph minus ``kill``: those
    generators map to the identity, everything else to itself."""
    from .graphs import remove

    sub = remove(g, kill)
    incl = GraphHom(sub, g, {v: v for v in sub.vertices})
    return induced_hom(incl)


def compose(outer, inner):
    """outer after inner, as generator images."""
    if inner.codomain != outer.domain:
        raise ValueError("maps do not compose")
    return GroupMap(
        inner.domain,
        outer.codomain,
        {v: outer.apply(w) for v, w in inner.images.items()},
    )


def check_relator_preservation(m):
    """Well-definedness: images of generators that commute in the domain
    group (non-adjacent vertices) must commute in the codomain group."""
    vs = m.domain.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if not m.domain.adjacent(vs[i], vs[j]):
                if not commute_elements(
                    m.codomain, m.images[vs[i]], m.images[vs[j]]
                ):
                    return False
    return True


def bounded_injectivity(m, max_len):
    """Check that no nontrivial domain element of length <= max_len maps
    to the identity; one canonical word per element is enumerated."""
    checked = 0
    violations = []
    for w in canonical_words(m.domain, max_len):
        if not w:
            continue
        checked += 1
        if is_trivial(m.codomain, m.apply(w)):
            violations.append(format_word(w))
    return {"bound": max_len, "checked": checked, "violations": violations}


def has_innermost_cancellation_of(g, w, v):
    """Whether the literal word contains an inverse pair of the one base v
    with nothing from v's link and no occurrence of v strictly between."""
    nbrs = g.neighbors(v)
    for i, lt in enumerate(w):
        if lt.base != v:
            continue
        for j in range(i + 1, len(w)):
            m = w[j]
            if m.base == v:
                if m.sign == -lt.sign:
                    return True
                break
            if m.base in nbrs:
                break
    return False


def check_surviving(m, v_prime, max_len):
    """Bounded check that the literal image of every reduced domain word
    keeps the letter v_prime alive (no innermost cancellation of it).

    Every reduced word is enumerated, not one per element: distinct
    representatives have distinct literal images.
    """
    if v_prime not in m.codomain:
        raise ValueError(f"unknown vertex {v_prime!r}")
    checked = 0
    violations = []
    for w in reduced_words(m.domain, max_len):
        checked += 1
        if has_innermost_cancellation_of(m.codomain, m.apply(w), v_prime):
            violations.append(format_word(w))
    return {
        "vertex": v_prime,
        "bound": max_len,
        "checked": checked,
        "violations": violations,
    }


def check_support_propagation(m, trigger, required, max_len):
    """Bounded check: every element whose support contains ``trigger``
    has an image whose support meets ``required``."""
    required = frozenset(required)
    checked = 0
    violations = []
    for w in canonical_words(m.domain, max_len):
        if trigger not in support(m.domain, w):
            continue
        checked += 1
        if not (support(m.codomain, m.apply(w)) & required):
            violations.append(format_word(w))
    return {
        "trigger": trigger,
        "required": sorted(required),
        "bound": max_len,
        "checked": checked,
        "violations": violations,
    }


# ---------------------------------------------------------------------------
# Hom file format: two graph file references plus `map:` lines.


def _load_referenced(fragment, directory, name, lineno):
    path = os.path.join(directory, fragment.strip())
    try:
        return load_graph(path)
    except OSError as exc:
        raise GraphParseError(f"{name}:{lineno}: cannot read {path!r}: {exc}") from None


def format_hom_file(h, source_path, target_path):
    lines = [f"source: {source_path}", f"target: {target_path}"]
    for v in h.source.vertices:
        lines.append(f"map: {v} -> {h(v)}")
    return "\n".join(lines) + "\n"


def parse_hom_file(text, name="<hom>", directory="."):
    source = target = None
    mapping = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("source:"):
            source = _load_referenced(line[len("source:"):], directory, name, lineno)
        elif line.startswith("target:"):
            target = _load_referenced(line[len("target:"):], directory, name, lineno)
        elif line.startswith("map:"):
            body = line[len("map:"):]
            if "->" not in body:
                raise GraphParseError(f"{name}:{lineno}: map line needs '->'")
            src, _, dst = body.partition("->")
            mapping[src.strip()] = dst.strip()
        else:
            raise GraphParseError(f"{name}:{lineno}: unrecognized line {line!r}")
    if source is None or target is None:
        raise GraphParseError(f"{name}: needs 'source:' and 'target:' graph references")
    try:
        return GraphHom(source, target, mapping)
    except ValueError as exc:
        raise GraphParseError(f"{name}: {exc}") from None


def load_hom(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hom_file(
            fh.read(), name=str(path), directory=os.path.dirname(path) or "."
        )
