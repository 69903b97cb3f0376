"""Command-line front end: batch verifications and certificate emission.

Exit status: 0 for a completed run (including negative mathematical
answers), 1 for a failed verification, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import acceptance
from .constructions import (
    build_t2_pipeline,
    certify_non_embeddability,
    counterexample_check,
    hairy_witness,
    move_deg1k,
    move_deg3,
)
from .errors import GraphParseError, InvariantViolation
from .extgraph import (
    enumerate_vertices,
    ext_adjacent,
    format_ext_vertex,
    induced_ext_subgraph,
    parse_ext_vertex,
    push_to_base,
    search_induced_embedding_ext,
    verify_lemma_path,
)
from .graphs import complement, format_graph, graph_to_json, is_tree, load_graph
from .words import (
    commute_elements,
    format_word,
    iterated_commutator,
    normal_form,
    parse_word,
    reduce,
    support,
)


@dataclass
class RunConfig:
    command: str
    graph: str = None
    pattern: str = None
    convention: str = "opposite"
    radius: int = None
    length: int = None
    out: str = None
    seed: int = 0
    vertex: str = None
    n: int = None
    tokens: list = field(default_factory=list)
    criteria: list = field(default_factory=list)


def _require_graph(config):
    if not config.graph:
        raise GraphParseError(f"{config.command}: needs --graph FILE")
    g = load_graph(config.graph)
    if config.convention == "raag":
        g = complement(g)
    return g


def _split_words(tokens, g, expected=None):
    parts = []
    current = []
    for tok in tokens:
        if tok == ";":
            parts.append(current)
            current = []
        else:
            current.append(tok)
    parts.append(current)
    if expected is not None and len(parts) != expected:
        raise GraphParseError(
            f"expected {expected} ';'-separated words, got {len(parts)}"
        )
    return [parse_word(" ".join(p), g) for p in parts]


def _word_arg(config, g):
    return parse_word(" ".join(config.tokens), g)


def _cmd_reduce(config):
    g = _require_graph(config)
    w = _word_arg(config, g)
    r = reduce(g, w)
    print(format_word(r) if r else "(identity)")
    return {"input": format_word(w), "reduced": format_word(r), "length": len(r)}, 0


def _cmd_nf(config):
    g = _require_graph(config)
    w = _word_arg(config, g)
    nf = normal_form(g, w)
    print(format_word(nf) if nf else "(identity)")
    return {"input": format_word(w), "normal_form": format_word(nf)}, 0


def _cmd_support(config):
    g = _require_graph(config)
    w = _word_arg(config, g)
    sup = sorted(support(g, w), key=g.index)
    print(" ".join(sup) if sup else "(empty)")
    return {"input": format_word(w), "support": sup}, 0


def _cmd_commute(config):
    g = _require_graph(config)
    u, w = _split_words(config.tokens, g, expected=2)
    ans = commute_elements(g, u, w)
    print("commute" if ans else "do not commute")
    return {"left": format_word(u), "right": format_word(w), "commute": ans}, 0


def _cmd_comm(config):
    g = _require_graph(config)
    args = _split_words(config.tokens, g)
    if len(args) < 2:
        raise GraphParseError("comm: needs at least two ';'-separated words")
    bracket = iterated_commutator(g, args)
    nf = normal_form(g, bracket)
    trivial = not nf
    print(format_word(nf) if nf else "(identity)")
    return {
        "arguments": [format_word(a) for a in args],
        "reduced": format_word(nf),
        "trivial": trivial,
    }, 0


def _cmd_ext_adjacent(config):
    g = _require_graph(config)
    if len(config.tokens) != 2:
        raise GraphParseError("ext-adjacent: needs exactly two vertices")
    u = parse_ext_vertex(config.tokens[0], g)
    v = parse_ext_vertex(config.tokens[1], g)
    ans = ext_adjacent(g, u, v)
    print("adjacent" if ans else "not adjacent")
    return {
        "left": format_ext_vertex(u),
        "right": format_ext_vertex(v),
        "adjacent": ans,
    }, 0


def _cmd_ext_enumerate(config):
    g = _require_graph(config)
    radius = 1 if config.radius is None else config.radius
    vs = enumerate_vertices(g, radius)
    print(f"{len(vs)} vertices within radius {radius}")
    for v in vs:
        print(" ", format_ext_vertex(v))
    return {
        "radius": radius,
        "count": len(vs),
        "vertices": [format_ext_vertex(v) for v in vs],
    }, 0


def _cmd_ext_induced(config):
    g = _require_graph(config)
    S = [parse_ext_vertex(t, g) for t in config.tokens]
    if not S:
        raise GraphParseError("ext-induced: needs at least one vertex")
    view = induced_ext_subgraph(g, S)
    print(format_graph(view.graph), end="")
    return {
        "vertices": [format_ext_vertex(v) for v in view.vertices],
        "image": graph_to_json(view.graph),
    }, 0


def _cmd_embed_search(config):
    g = _require_graph(config)
    if not config.pattern:
        raise GraphParseError("embed-search: needs --pattern FILE")
    pattern = load_graph(config.pattern)
    if config.convention == "raag":
        pattern = complement(pattern)
    radius = 2 if config.radius is None else config.radius
    witness = search_induced_embedding_ext(pattern, g, radius)
    if witness is None:
        print(f"no witness within radius {radius}")
        found = None
    else:
        print(f"witness within radius {radius}:")
        found = {v: format_ext_vertex(e) for v, e in witness.items()}
        for v in pattern.vertices:
            print(f"  {v} -> {found[v]}")
    return {
        "pattern": config.pattern,
        "graph": config.graph,
        "radius": radius,
        "witness": found,
    }, 0


def _cmd_push_to_base(config):
    g = _require_graph(config)
    items = [parse_ext_vertex(t, g) for t in config.tokens]
    if not items:
        raise GraphParseError("push-to-base: needs at least one vertex")
    w, bases = push_to_base(g, items)
    print("conjugator:", format_word(w) if w else "(identity)")
    print("images:", " ".join(bases))
    return {
        "input": [format_ext_vertex(v) for v in items],
        "conjugator": format_word(w),
        "images": bases,
    }, 0


def _cmd_move_deg1k(config):
    g = _require_graph(config)
    if not config.vertex:
        raise GraphParseError("move-deg1k: needs --vertex LABEL")
    move = move_deg1k(g, config.vertex)
    print(f"replaced {config.vertex} (k={move.k}); new graph:")
    print(format_graph(move.new_graph), end="")
    print("witness:")
    for v in g.vertices:
        print(f"  {v} -> {format_ext_vertex(move.ext_witness[v])}")
    report = move.to_json()
    report["verified"] = True
    return report, 0


def _cmd_move_deg3(config):
    g = _require_graph(config)
    if not config.vertex:
        raise GraphParseError("move-deg3: needs --vertex LABEL")
    move = move_deg3(g, config.vertex)
    print(f"replaced the tripod at {config.vertex}; new graph:")
    print(format_graph(move.new_graph), end="")
    print("generator images:")
    for v, w in move.induced.images.items():
        print(f"  {v} -> {format_word(w)}")
    report = move.to_json()
    report["relators_preserved"] = True
    return report, 0


def _cmd_pipeline_t2(config):
    length = 5 if config.length is None else config.length
    pipe = build_t2_pipeline(length=length)
    for line in pipe.chain_description():
        print(line)
    inj = pipe.injectivity
    print(
        f"composite: relators preserved; injectivity clean on {inj['checked']} "
        f"elements up to length {inj['bound']}"
    )
    ok = pipe.ends_in_cycle12 and pipe.relators_preserved and not inj["violations"]
    return pipe.to_json(), 0 if ok else 1


def _cmd_hairy(config):
    g = _require_graph(config)
    if not is_tree(g):
        raise GraphParseError("hairy: input graph is not a tree")
    try:
        hw = hairy_witness(g)
    except ValueError:
        cert = certify_non_embeddability(g)
        print("not a hairy path graph; induced two-legged tripod found")
        if cert is not None:
            print(json.dumps(cert["roles"]))
        return {"hairy": False, "certificate": cert}, 0
    dec = hw.decomposition
    print(
        f"hairy path graph: spine {' '.join(dec.spine)}, "
        f"{dec.total_hairs} hairs, embeds in the path on {hw.n} vertices"
    )
    for v in g.vertices:
        print(f"  {v} -> {format_ext_vertex(hw.assignment[v])}")
    report = hw.to_json()
    report["hairy"] = True
    return report, 0


def _cmd_obstruct(config):
    g = _require_graph(config)
    cert = certify_non_embeddability(g)
    if cert is None:
        print("no obstruction tuple found")
        return {"certificate": None}, 0
    print("obstruction tuple:", json.dumps(cert["roles"]))
    return {"certificate": cert}, 0


def _cmd_verify_lemma_path(config):
    n = 5 if config.n is None else config.n
    radius = 3 if config.radius is None else config.radius
    try:
        report = verify_lemma_path(n, radius)
    except InvariantViolation as exc:
        print(f"FAILED: {exc}")
        return {"error": str(exc)}, 1
    print(
        f"clean: n={n} radius={radius}, {report['checks']} checks over "
        f"{report['triples']} triples and {report['pool']} vertices"
    )
    return report, 0


def _cmd_counterexample(config):
    try:
        report = counterexample_check()
    except InvariantViolation as exc:
        print(f"FAILED: {exc}")
        return {"error": str(exc)}, 1
    print("bracket [x2 x4, x3, x1, x5] is nontrivial:")
    print(" ", report["main_reduced_word"])
    print("single-generator brackets [x2,...] and [x4,...] are trivial")
    return report, 0


def _cmd_verify_all(config):
    ids = [int(t) for t in config.criteria] if config.criteria else None

    def announce(report):
        mark = "PASS" if report["passed"] else "FAIL"
        print(f"{mark}  #{report['id']:<2} {report['name']} ({report['seconds']}s)")

    reports = acceptance.run_all(ids=ids, seed=config.seed, progress=announce)
    ok = all(r["passed"] for r in reports)
    print("all criteria passed" if ok else "SOME CRITERIA FAILED")
    return {"criteria": reports, "passed": ok}, 0 if ok else 1


_HANDLERS = {
    "reduce": _cmd_reduce,
    "nf": _cmd_nf,
    "support": _cmd_support,
    "commute": _cmd_commute,
    "comm": _cmd_comm,
    "ext-adjacent": _cmd_ext_adjacent,
    "ext-enumerate": _cmd_ext_enumerate,
    "ext-induced": _cmd_ext_induced,
    "embed-search": _cmd_embed_search,
    "push-to-base": _cmd_push_to_base,
    "move-deg1k": _cmd_move_deg1k,
    "move-deg3": _cmd_move_deg3,
    "pipeline-t2": _cmd_pipeline_t2,
    "hairy": _cmd_hairy,
    "obstruct": _cmd_obstruct,
    "verify-lemma-path": _cmd_verify_lemma_path,
    "counterexample": _cmd_counterexample,
    "verify-all": _cmd_verify_all,
}


def run(config):
    """Execute one command; returns the process exit status."""
    handler = _HANDLERS.get(config.command)
    if handler is None:
        print(f"unknown command {config.command!r}", file=sys.stderr)
        return 2
    for bound in (config.radius, config.length):
        if bound is not None and bound < 0:
            print("error: bounds must be nonnegative", file=sys.stderr)
            return 2
    try:
        report, status = handler(config)
    except (GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return status


def _build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--graph", help="graph file (text or JSON form)")
    shared.add_argument(
        "--convention",
        choices=("raag", "opposite"),
        default="opposite",
        help="input convention; 'raag' complements input graphs at the boundary",
    )
    shared.add_argument("--radius", type=int, help="conjugator length bound")
    shared.add_argument("--length", type=int, help="word length bound")
    shared.add_argument("--out", help="write a JSON report here")
    shared.add_argument(
        "--seed", type=int, default=0, help="seed for randomized sampling only"
    )

    parser = argparse.ArgumentParser(
        prog="raagembed",
        description="words, extension graphs and embedding certificates for "
        "groups presented on graph complements (generators commute iff "
        "non-adjacent); outputs stay in that internal convention",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, tokens=None, **extra):
        p = sub.add_parser(name, parents=[shared], help=help_)
        if tokens:
            p.add_argument("tokens", nargs=tokens[0], metavar=tokens[1])
        for flag, kw in extra.items():
            p.add_argument(flag, **kw)
        return p

    add("reduce", "reduce a word", tokens=("*", "LETTER"))
    add("nf", "canonical normal form of a word", tokens=("*", "LETTER"))
    add("support", "support of a word", tokens=("*", "LETTER"))
    add("commute", "do two words commute (separate with ';')", tokens=("*", "TOKEN"))
    add("comm", "left-normed iterated commutator (';'-separated)", tokens=("*", "TOKEN"))
    add("ext-adjacent", "adjacency of two extension vertices", tokens=("*", "VERTEX"))
    add("ext-enumerate", "list extension vertices within --radius")
    add("ext-induced", "induced extension subgraph on listed vertices", tokens=("*", "VERTEX"))
    add(
        "embed-search",
        "search the extension graph for an induced copy of --pattern",
        **{"--pattern": {"help": "pattern graph file"}},
    )
    add("push-to-base", "conjugate an independent set into the base", tokens=("*", "VERTEX"))
    add("move-deg1k", "leaf-path replacement move", **{"--vertex": {"help": "replaced vertex"}})
    add("move-deg3", "tripod-to-hexagon move", **{"--vertex": {"help": "replaced vertex"}})
    add("pipeline-t2", "tripod to 12-cycle chain with cited final hop")
    add("hairy", "hairy-path decomposition and witness for a tree")
    add("obstruct", "tripod-style non-embeddability certificate")
    add("verify-lemma-path", "middle-vertex commutation check on a path", **{"--n": {"type": int, "help": "path length"}})
    add("counterexample", "iterated-commutator refutation over the 5-vertex path")
    add("verify-all", "run acceptance criteria (optionally a subset of ids)", tokens=("*", "ID"))
    return parser


def main(argv=None):
    parser = _build_parser()
    ns = parser.parse_args(argv)
    config = RunConfig(
        command=ns.command,
        graph=getattr(ns, "graph", None),
        pattern=getattr(ns, "pattern", None),
        convention=getattr(ns, "convention", "opposite"),
        radius=getattr(ns, "radius", None),
        length=getattr(ns, "length", None),
        out=getattr(ns, "out", None),
        seed=getattr(ns, "seed", 0),
        vertex=getattr(ns, "vertex", None),
        n=getattr(ns, "n", None),
        tokens=list(getattr(ns, "tokens", []) or []),
        criteria=list(getattr(ns, "tokens", []) or []) if ns.command == "verify-all" else [],
    )
    sys.exit(run(config))


if __name__ == "__main__":
    main()
