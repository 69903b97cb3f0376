"""Vertices and finite induced subgraphs of the extension graph: the
conjugates of generators, with adjacency given by non-commutation.

The whole extension graph is usually infinite; everything here works on
the finite part reachable within a conjugator-length radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphParseError, InvariantViolation
from .graphs import make_path
from .words import (
    Letter,
    canonical_words,
    commute_elements,
    equal,
    format_word,
    inverse,
    is_reduced,
    letter_key,
    letters_commute,
    normal_form,
    parse_word,
)


class ExtVertex:
    """A conjugate of a generator, stored canonically.

    ``key`` is the normal form of the whole element and is the equality
    key; ``conjugator`` is a shortest word w with the conjugate of base by
    w reduced and equal to the element. ``support`` is the element's
    support (the key is reduced, so its letter bases are exactly that).
    """

    __slots__ = ("base", "conjugator", "key", "support")

    def __init__(self, base, conjugator, key):
        self.base = base
        self.conjugator = conjugator
        self.key = key
        self.support = frozenset(lt.base for lt in key)

    @property
    def radius(self):
        return len(self.conjugator)

    def __eq__(self, other):
        if not isinstance(other, ExtVertex):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return format_ext_vertex(self)

    def __repr__(self):
        return f"ExtVertex({format_ext_vertex(self)!r})"


def ext_vertex(g, base, w=()):
    """Canonical extension-graph vertex for the conjugate of ``base`` by w.

    Letters of w that can shuffle to the front and commute with the base
    contribute nothing to the conjugate and are stripped, which leaves the
    stored conjugate expression reduced.
    """
    if base not in g:
        raise ValueError(f"unknown vertex {base!r}")
    u = list(normal_form(g, w))
    while True:
        for j, lt in enumerate(u):
            if (lt.base == base or not g.adjacent(lt.base, base)) and all(
                letters_commute(g, u[i], lt) for i in range(j)
            ):
                del u[j]
                break
        else:
            break
    conj = normal_form(g, tuple(u))
    key = normal_form(g, inverse(conj) + (Letter(base, 1),) + conj)
    if len(key) != 2 * len(conj) + 1 or not is_reduced(
        g, inverse(conj) + (Letter(base, 1),) + conj
    ):
        raise InvariantViolation(
            f"conjugate of {base!r} by {format_word(conj)!r} failed to canonicalize"
        )
    return ExtVertex(base, conj, key)


def conjugate_ext(g, v, w):
    """The vertex for v conjugated by a further word w."""
    return ext_vertex(g, v.base, v.conjugator + tuple(w))


def ext_element(v):
    """The group element of the vertex, as its canonical word."""
    return v.key


def format_ext_vertex(v):
    if not v.conjugator:
        return v.base
    return f"{v.base}^({format_word(v.conjugator)})"


def parse_ext_vertex(text, g, name="<ext-vertex>"):
    """Parse ``a^(w)`` or a bare generator name."""
    text = text.strip()
    if "^" not in text:
        return ext_vertex(g, text) if text in g else _bad_ext(name, text)
    base, _, rest = text.partition("^")
    rest = rest.strip()
    if not (rest.startswith("(") and rest.endswith(")")):
        return _bad_ext(name, text)
    if base not in g:
        return _bad_ext(name, text)
    w = parse_word(rest[1:-1], g, name=name)
    return ext_vertex(g, base, w)


def _bad_ext(name, text):
    raise GraphParseError(f"{name}: cannot parse extension vertex {text!r}")


def _supports_interact(g, su, sv):
    """Whether some generator pair across the two supports fails to commute."""
    for s in su:
        if s in sv or (g.neighbors(s) & sv):
            return True
    return False


def ext_adjacent(g, u, v):
    """Adjacent iff the two conjugates do not commute.

    When the supports share no vertex and no edge, every letter pair
    commutes, so the elements commute without running a reduction.
    """
    if u.key == v.key:
        return False
    if not _supports_interact(g, u.support, v.support):
        return False
    return not commute_elements(g, u.key, v.key)


def enumerate_vertices(g, radius):
    """All distinct vertices with conjugator length <= radius, sorted by
    (radius, base, conjugator)."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    seen = {}
    for w in canonical_words(g, radius):
        for a in g.vertices:
            v = ext_vertex(g, a, w)
            if v.key not in seen:
                seen[v.key] = v
    return sorted(
        seen.values(),
        key=lambda v: (
            v.radius,
            g.index(v.base),
            tuple(letter_key(g, lt) for lt in v.conjugator),
        ),
    )


@dataclass(frozen=True)
class ExtSubgraphView:
    """Pairwise adjacency of a finite vertex set, plus the abstract image."""

    vertices: tuple
    edges: frozenset  # index pairs (i, j), i < j
    graph: object  # SimplicialGraph on the textual labels

    def adjacent(self, i, j):
        return (min(i, j), max(i, j)) in self.edges


def induced_ext_subgraph(g, S):
    from .graphs import SimplicialGraph

    S = list(S)
    keys = [v.key for v in S]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate extension vertices")
    edges = set()
    for i in range(len(S)):
        for j in range(i + 1, len(S)):
            if ext_adjacent(g, S[i], S[j]):
                edges.add((i, j))
    labels = [format_ext_vertex(v) for v in S]
    image = SimplicialGraph(
        labels, [(labels[i], labels[j]) for i, j in edges]
    )
    return ExtSubgraphView(vertices=tuple(S), edges=frozenset(edges), graph=image)


def push_to_base(g, items):
    """Conjugate an independent vertex set into the base generators.

    Returns (w, bases): conjugating every element by w on the left and its
    inverse on the right lands item i on bases[i]. Each step fixes the
    vertices already placed, so the set is moved one vertex at a time.
    """
    items = list(items)
    for u, v in combinations(items, 2):
        if ext_adjacent(g, u, v):
            raise ValueError(
                f"set is not independent: {format_ext_vertex(u)} and "
                f"{format_ext_vertex(v)} do not commute"
            )
    total = ()
    current = list(items)
    placed = []
    for k, v in enumerate(current):
        w = v.conjugator
        if w:
            for b in placed:
                if not equal(g, w + (Letter(b, 1),) + inverse(w), (Letter(b, 1),)):
                    raise InvariantViolation(
                        f"conjugation by {format_word(w)} moved the placed vertex {b}"
                    )
            if not equal(g, w + v.key + inverse(w), (Letter(v.base, 1),)):
                raise InvariantViolation(
                    f"conjugation by {format_word(w)} missed the base of "
                    f"{format_ext_vertex(v)}"
                )
            for j in range(k + 1, len(current)):
                current[j] = ext_vertex(
                    g, current[j].base, current[j].conjugator + inverse(w)
                )
            total = w + total
        placed.append(v.base)
    total = normal_form(g, total)
    for v, b in zip(items, placed):
        if not equal(g, total + v.key + inverse(total), (Letter(b, 1),)):
            raise InvariantViolation("final conjugator verification failed")
    return total, placed


def lex_first_max_independent_set(g):
    """Lexicographically first maximum independent set (canonical order)."""
    from .graphs import is_independent

    vs = g.vertices
    for size in range(len(vs), 0, -1):
        for combo in combinations(vs, size):
            if is_independent(g, combo):
                return combo
    return ()


def search_induced_embedding_ext(pattern, g, radius):
    """Backtracking search for an induced copy of ``pattern`` among the
    extension-graph vertices of conjugator length <= radius.

    A maximum independent set of the pattern is assigned only to base
    generators: any witness can be conjugated so that those images are
    base vertices, and conjugation preserves adjacency throughout the
    extension graph. 'None' therefore means no witness within the radius;
    it is not a proof that no embedding exists at all.
    """
    pool = enumerate_vertices(g, radius)
    anchor_set = set(lex_first_max_independent_set(pattern))
    anchor_order = [v for v in pattern.vertices if v in anchor_set]
    rest = [v for v in pattern.vertices if v not in anchor_set]
    key_to_idx = {v.key: i for i, v in enumerate(pool)}
    base_domain = [key_to_idx[(Letter(b, 1),)] for b in g.vertices]
    memo = {}

    def eadj(i, j):
        if i == j:
            return False
        pair = (i, j) if i < j else (j, i)
        got = memo.get(pair)
        if got is None:
            got = memo[pair] = ext_adjacent(g, pool[pair[0]], pool[pair[1]])
        return got

    def anchor_assignments(level, chosen):
        if level == len(anchor_order):
            yield dict(chosen)
            return
        pv = anchor_order[level]
        for cand in base_domain:
            if cand in chosen.values():
                continue
            if all(
                eadj(cand, ci) == pattern.adjacent(pv, pu)
                for pu, ci in chosen.items()
            ):
                chosen[pv] = cand
                yield from anchor_assignments(level + 1, chosen)
                del chosen[pv]

    pool_range = range(len(pool))
    for amap in anchor_assignments(0, {}):
        taken = set(amap.values())
        domains = {}
        for rv in rest:
            wanted = [(amap[au], pattern.adjacent(rv, au)) for au in anchor_order]
            domains[rv] = [
                c
                for c in pool_range
                if c not in taken
                and all(eadj(c, ai) == adj for ai, adj in wanted)
            ]
        if any(not d for d in domains.values()):
            continue
        order = sorted(rest, key=lambda v: (len(domains[v]), pattern.index(v)))
        assignment = {}
        used = set(taken)

        def extend(level):
            if level == len(order):
                return dict(assignment)
            pv = order[level]
            for cand in domains[pv]:
                if cand in used:
                    continue
                if all(
                    eadj(cand, ci) == pattern.adjacent(pv, pu)
                    for pu, ci in assignment.items()
                ):
                    assignment[pv] = cand
                    used.add(cand)
                    found = extend(level + 1)
                    if found is not None:
                        return found
                    del assignment[pv]
                    used.discard(cand)
            return None

        found = extend(0)
        if found is not None:
            full = dict(amap)
            full.update(found)
            return {pv: pool[i] for pv, i in full.items()}
    return None


def verify_witness(pattern, g, witness):
    """Check that a label->vertex map realizes the pattern as an induced
    subgraph of the extension graph."""
    if set(witness) != set(pattern.vertices):
        return False
    keys = [witness[v].key for v in pattern.vertices]
    if len(set(keys)) != len(keys):
        return False
    for u, v in combinations(pattern.vertices, 2):
        if ext_adjacent(g, witness[u], witness[v]) != pattern.adjacent(u, v):
            return False
    return True


def verify_lemma_path(n, radius):
    """Exhaustively confirm, over the path on n vertices: whenever an
    extension vertex (radius-bounded) commutes with the middle vertex of
    an independent triple, it commutes with one of the two outer ones.

    Returns a count report; a violation raises InvariantViolation since it
    would mean the implementation (not the statement) is broken.
    """
    if n < 5:
        raise ValueError("need a path on at least five vertices")
    g = make_path(n)
    vs = g.vertices
    pool = enumerate_vertices(g, radius)
    triples = [
        (vs[i], vs[j], vs[k])
        for i in range(n)
        for j in range(i + 2, n)
        for k in range(j + 2, n)
    ]
    checks = 0
    violations = []
    for x, p, q in triples:
        px = (Letter(x, 1),)
        pp = (Letter(p, 1),)
        pq = (Letter(q, 1),)
        for v in pool:
            if not commute_elements(g, v.key, pp):
                continue
            checks += 1
            if not (
                commute_elements(g, v.key, px) or commute_elements(g, v.key, pq)
            ):
                violations.append(
                    {"vertex": format_ext_vertex(v), "triple": [x, p, q]}
                )
    report = {
        "n": n,
        "radius": radius,
        "triples": len(triples),
        "pool": len(pool),
        "checks": checks,
        "violations": violations,
    }
    if violations:
        raise InvariantViolation(f"middle-vertex commutation failed: {violations[:3]}")
    return report
