"""Command-line front end.

Exit codes: 0 success (or contained under --assert), 1 avoided under
--assert, 2 parse error, 3 invariant violation, 4 feasibility-bound
refusal.  Big integers are rendered as full decimal strings in JSON.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import FeasibilityError, ParseError, StructureError
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    Partition,
    PatternClass,
    Permutation,
    hypergraph_of_partition,
    incidence_matrix,
    make_g,
    make_h_of_pi,
)
from .containment import (
    hg_contains,
    hg_contains_perm,
    is_induced_sub,
    is_sub_hypergraph,
    matrix_contains,
    matrix_contains_class,
    perm_contains,
)
from .transforms import (
    BracketSeq,
    DegreeSequence,
    block_compress,
    contract_pairs,
    corner_pattern,
    extract_independent_matching,
    incidence_reduction,
    pair_graph_reduction,
    phi_deg1,
    phi_triple,
    psi_brackets,
    reconstruct_deg1,
    reconstruct_triple,
    sigma_double,
)
from .formulas import constants
from .enumeration import (
    PropertySpec,
    count_structures,
    enumerate_structures,
    extremal_ones,
    extremal_ones_oracle,
    g_family_speed,
    max_weight_avoiding,
    speed_table,
)


# ---------------------------------------------------------------------------
# parsing


def parse_structure(text, kind):
    """Parse ``text`` in the documented file format for ``kind``.

    Syntax problems raise ParseError with line/column; well-formed text
    that violates a structural invariant (e.g. a repeated edge) raises
    StructureError instead.
    """
    if kind in ("perm", "permutation"):
        return _parse_permutation(text)
    if kind == "matrix":
        return _parse_matrix(text)
    if kind in ("graph", "hypergraph"):
        return _parse_hypergraph(text)
    if kind == "partition":
        return _parse_partition(text)
    raise StructureError(f"unknown structure kind {kind!r}")


def _parse_int(tok, line, col):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def _parse_permutation(text):
    line = text.strip()
    if not line:
        return Permutation(())
    toks = line.replace(",", " ").split()
    vals = [_parse_int(t, 1, i + 1) for i, t in enumerate(toks)]
    return Permutation(vals)


def _parse_matrix(text):
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        entries = []
        for col, ch in enumerate(raw, start=1):
            if ch in " \t":
                continue
            if ch in "01":
                entries.append(int(ch))
            else:
                raise ParseError(f"bad matrix character {ch!r}", lineno, col)
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise ParseError(
                f"row has {len(entries)} entries, expected {width}", lineno, 1
            )
        rows.append(entries)
    return BinaryMatrix(rows, ncols=width or 0)


def _parse_hypergraph(text):
    lines = [l for l in text.splitlines()]
    n = None
    edges = []
    first = True
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if first:
            if not stripped.startswith("n="):
                raise ParseError("first line must be n=<int>", lineno, 1)
            n = _parse_int(stripped[2:].strip(), lineno, 3)
            first = False
            continue
        verts = [_parse_int(t.strip(), lineno, 1) for t in stripped.split(",")]
        for a, b in zip(verts, verts[1:]):
            if a >= b:
                raise ParseError("edge vertices must be strictly increasing", lineno, 1)
        edges.append(tuple(verts))
    if n is None:
        raise ParseError("missing n=<int> header", 1, 1)
    if len(set(edges)) != len(edges):
        raise StructureError("duplicate edge in hypergraph input")
    return OrderedHypergraph(n, edges)


def _parse_partition(text):
    line = text.strip()
    if not line:
        return Partition(0, ())
    blocks = []
    maxv = 0
    for part in line.split("|"):
        verts = [_parse_int(t.strip(), 1, 1) for t in part.split(",") if t.strip()]
        if not verts:
            raise ParseError("empty block in partition", 1, 1)
        blocks.append(tuple(verts))
        maxv = max(maxv, max(verts))
    return Partition(maxv, blocks)


def render_structure_text(obj):
    """Canonical file-format text; parse(render(parse(x))) == parse(x)."""
    if isinstance(obj, Permutation):
        return " ".join(str(v) for v in obj.values)
    if isinstance(obj, BinaryMatrix):
        return "\n".join(
            " ".join(str(x) for x in obj.row_tuple(i)) for i in range(1, obj.m + 1)
        )
    if isinstance(obj, OrderedHypergraph):
        lines = [f"n={obj.n}"]
        lines.extend(",".join(str(v) for v in e) for e in obj.edges)
        return "\n".join(lines)
    if isinstance(obj, Partition):
        return "|".join(",".join(str(v) for v in b) for b in obj.blocks)
    if isinstance(obj, BracketSeq):
        return str(obj)
    raise StructureError(f"cannot render {type(obj).__name__}")


def structure_json(obj):
    if isinstance(obj, Permutation):
        return {"kind": "permutation", "values": list(obj.values)}
    if isinstance(obj, BinaryMatrix):
        return {
            "kind": "matrix",
            "rows": [obj.row_string(i) for i in range(1, obj.m + 1)],
            "cols": obj.n,
        }
    if isinstance(obj, OrderedHypergraph):
        return {"kind": "hypergraph", "n": obj.n, "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, Partition):
        return {"kind": "partition", "n": obj.n, "blocks": [list(b) for b in obj.blocks]}
    if isinstance(obj, BracketSeq):
        return {"kind": "brackets", "symbols": str(obj)}
    raise StructureError(f"cannot render {type(obj).__name__}")


def _witness_json(wit, hypergraph=False):
    out = {}
    if hypergraph:
        if wit.cols:
            out["vertices"] = list(wit.cols)
        if wit.row_assignment:
            out["edges"] = list(wit.row_assignment)
        elif wit.rows:
            out["edges"] = list(wit.rows)
    else:
        if wit.rows:
            out["rows"] = list(wit.rows)
        if wit.cols:
            out["cols"] = list(wit.cols)
        if wit.row_assignment:
            out["row_assignment"] = list(wit.row_assignment)
    return out


def render(result, fmt):
    """Render a result dict: text is human-readable, json keeps stable field
    names with big integers as decimal strings, tsv is one value per column."""
    if fmt == "json":
        return json.dumps(result["json"])
    if fmt == "tsv":
        return "\t".join(str(x) for x in result["tsv"])
    return result["text"]


def _emit(result, fmt):
    print(render(result, fmt))


# ---------------------------------------------------------------------------
# argument helpers


def _read_value(value):
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return value.replace(";", "\n")


def _arg_structure(value, kind):
    return parse_structure(_read_value(value), kind)


def _spec_from_args(args):
    forbidden = []
    for s in args.avoid_perm or ():
        forbidden.append(("perm", _arg_structure(s, "perm")))
    for s in args.avoid_sub or ():
        forbidden.append(("sub", _arg_structure(s, "hypergraph")))
    for s in args.avoid_induced or ():
        kind = "partition" if args.universe == "partition" else "hypergraph"
        forbidden.append(("induced", _arg_structure(s, kind)))
    for s in args.avoid_contain or ():
        forbidden.append(("contain", _arg_structure(s, "hypergraph")))
    for s in args.avoid_class or ():
        forbidden.append(("class", PatternClass(_arg_structure(s, "perm"))))
    return PropertySpec(
        universe=args.universe,
        forbidden=tuple(forbidden),
        degree_cap=args.degree_cap,
        edge_size_cap=args.edge_size_cap,
        edge_count_cap=args.max_edges,
    )


def _add_avoid_flags(sub):
    sub.add_argument("--avoid-perm", action="append", default=[])
    sub.add_argument("--avoid-sub", action="append", default=[])
    sub.add_argument("--avoid-induced", action="append", default=[])
    sub.add_argument("--avoid-contain", action="append", default=[])
    sub.add_argument("--avoid-class", action="append", default=[])
    sub.add_argument("--degree-cap", type=int, default=None)
    sub.add_argument("--edge-size-cap", type=int, default=None)
    sub.add_argument("--max-edges", type=int, default=None)


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    sub.add_argument("--force", action="store_true")
    sub.add_argument("--jobs", type=int, default=1)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_contains(args):
    kind = args.kind
    contained_hg = False
    if kind == "perm":
        host = _arg_structure(args.host, "perm")
        pattern = _arg_structure(args.pattern, "perm")
        wit = perm_contains(host, pattern)
    elif kind == "matrix":
        host = _arg_structure(args.host, "matrix")
        if args.pattern_perm:
            cls = PatternClass(_arg_structure(args.pattern_perm, "perm"))
            wit = matrix_contains_class(host, cls)
        else:
            pattern = _arg_structure(args.pattern, "matrix")
            wit = matrix_contains(host, pattern)
    elif kind in ("graph", "hypergraph"):
        host = _arg_structure(args.host, "hypergraph")
        contained_hg = True
        if args.pattern_perm:
            wit = hg_contains_perm(host, _arg_structure(args.pattern_perm, "perm"))
        else:
            pattern = _arg_structure(args.pattern, "hypergraph")
            mode = args.mode or "contain"
            fn = {
                "sub": is_sub_hypergraph,
                "induced": is_induced_sub,
                "contain": hg_contains,
            }[mode]
            wit = fn(pattern, host)
    elif kind == "partition":
        host = _arg_structure(args.host, "partition")
        contained_hg = True
        if not args.pattern_perm:
            raise StructureError("partition hosts take --pattern-perm")
        wit = hg_contains_perm(
            hypergraph_of_partition(host), _arg_structure(args.pattern_perm, "perm")
        )
    else:
        raise StructureError(f"unknown kind {kind!r}")

    if wit is None:
        result = {
            "json": {"contained": False},
            "text": "avoided",
            "tsv": ["avoided"],
        }
    else:
        wj = _witness_json(wit, hypergraph=contained_hg)
        parts = []
        if contained_hg:
            if wit.cols:
                parts.append("vertices " + " ".join(map(str, wit.cols)))
            if wit.row_assignment:
                parts.append("edges " + " ".join(map(str, wit.row_assignment)))
        else:
            if wit.rows:
                parts.append("rows " + " ".join(map(str, wit.rows)))
            if wit.cols:
                parts.append(
                    ("positions " if kind == "perm" else "cols ")
                    + " ".join(map(str, wit.cols))
                )
            if wit.row_assignment:
                parts.append("assignment " + " ".join(map(str, wit.row_assignment)))
        result = {
            "json": {"contained": True, "witness": wj},
            "text": "contained: " + "; ".join(parts) if parts else "contained",
            "tsv": [x for seq in (wit.rows, wit.cols) for x in seq],
        }
    _emit(result, args.format)
    if args.assert_mode:
        return 0 if wit is not None else 1
    return 0


def _cmd_enumerate(args):
    spec = _spec_from_args(args)
    if args.list:
        structures = list(
            enumerate_structures(
                spec, args.n, force=args.force, jobs=args.jobs, method=args.method
            )
        )
        count = len(structures)
        result = {
            "json": {
                "n": args.n,
                "count": str(count),
                "structures": [structure_json(s) for s in structures],
            },
            "text": f"count {count}\n"
            + "\n\n".join(render_structure_text(s) for s in structures),
            "tsv": [_tsv_structure(s) for s in structures],
        }
    else:
        count = count_structures(
            spec, args.n, force=args.force, jobs=args.jobs, method=args.method
        )
        result = {
            "json": {"n": args.n, "count": str(count)},
            "text": f"count {count}",
            "tsv": [count],
        }
    _emit(result, args.format)
    return 0


def _tsv_structure(s):
    if isinstance(s, Permutation):
        return " ".join(map(str, s.values))
    if isinstance(s, OrderedHypergraph):
        return " ".join(",".join(map(str, e)) for e in s.edges) or "-"
    if isinstance(s, Partition):
        return "|".join(",".join(map(str, b)) for b in s.blocks)
    return str(s)


def _cmd_speed(args):
    if args.g_family:
        counts = g_family_speed(args.upto)
        label = "g-family"
    else:
        spec = _spec_from_args(args)
        counts = speed_table(
            spec, args.upto, force=args.force, jobs=args.jobs, method=args.method
        ).counts
        label = args.universe
    result = {
        "json": {
            "universe": label,
            "upto": args.upto,
            "table": [str(c) for c in counts],
        },
        "text": "\n".join(f"{n}\t{c}" for n, c in enumerate(counts, start=1)),
        "tsv": list(counts),
    }
    _emit(result, args.format)
    return 0


def _cmd_extremal(args):
    if args.target == "weight":
        pi = _arg_structure(args.avoid_perm[0], "perm") if args.avoid_perm else None
        if pi is None:
            raise StructureError("extremal weight needs --avoid-perm")
        value, wit = max_weight_avoiding(args.n, pi, force=args.force, jobs=args.jobs)
        result = {
            "json": {
                "n": args.n,
                "value": str(value),
                "witness": structure_json(wit),
            },
            "text": f"value {value}\n{render_structure_text(wit)}",
            "tsv": [value],
        }
        _emit(result, args.format)
        return 0
    patterns = [
        _arg_structure(s, "matrix") for s in (args.avoid_matrix or ())
    ] + [PatternClass(_arg_structure(s, "perm")) for s in (args.avoid_class or ())]
    solver = extremal_ones_oracle if args.oracle else extremal_ones
    kwargs = dict(
        patterns=patterns,
        distinct_rows=args.distinct_rows,
        max_row_weight=args.max_row_weight,
        square=args.square,
        force=args.force,
    )
    if not args.oracle:
        kwargs["jobs"] = args.jobs
    value, wit = solver(args.n, args.m, **kwargs)
    result = {
        "json": {
            "n": args.n,
            "value": str(value),
            "witness": structure_json(wit),
        },
        "text": f"value {value}\n{render_structure_text(wit)}",
        "tsv": [value],
    }
    _emit(result, args.format)
    return 0


def _cmd_transform(args):
    op = args.op
    if op == "h-of-pi":
        out = make_h_of_pi(_arg_structure(args.pi, "perm"), args.to_kind)
    elif op == "g":
        support = [int(t) for t in args.support.replace(",", " ").split()]
        out = make_g(args.n, support, _arg_structure(args.pi, "perm"))
    elif op == "incidence":
        out = incidence_matrix(_arg_structure(args.hypergraph, "hypergraph"))
    elif op == "hypergraph-of-partition":
        out = hypergraph_of_partition(_arg_structure(args.partition, "partition"))
    elif op == "phi-deg1":
        out = phi_deg1(_arg_structure(args.graph, "hypergraph"))
    elif op == "psi":
        out = psi_brackets(_arg_structure(args.graph, "hypergraph"))
    elif op == "reconstruct-deg1":
        support = [int(t) for t in args.support.replace(",", " ").split()]
        out = reconstruct_deg1(
            args.n,
            _arg_structure(args.phi, "perm"),
            BracketSeq.from_string(args.psi),
            support,
        )
    elif op == "phi-triple":
        p, l, r = phi_triple(_arg_structure(args.graph, "hypergraph"))
        result = {
            "json": {
                "kind": "triple",
                "phi_p": list(p.values),
                "phi_l": list(l.entries),
                "phi_r": list(r.entries),
            },
            "text": "phi_p {}\nphi_l {}\nphi_r {}".format(
                " ".join(map(str, p.values)),
                " ".join(map(str, l.entries)),
                " ".join(map(str, r.entries)),
            ),
            "tsv": list(p.values),
        }
        _emit(result, args.format)
        return 0
    elif op == "reconstruct-triple":
        left = [int(t) for t in args.left_degrees.replace(",", " ").split()]
        right = [int(t) for t in args.right_degrees.replace(",", " ").split()]
        out = reconstruct_triple(
            args.n,
            _arg_structure(args.phi, "perm"),
            DegreeSequence(left),
            DegreeSequence(right),
        )
        if out is None:
            result = {
                "json": {"realizable": False},
                "text": "unrealizable",
                "tsv": ["unrealizable"],
            }
            _emit(result, args.format)
            return 0
    elif op == "contract":
        out = contract_pairs(_arg_structure(args.hypergraph, "hypergraph"))
    elif op == "block-compress":
        out = block_compress(_arg_structure(args.matrix, "matrix"), args.t)
    elif op == "incidence-reduction":
        out = incidence_reduction(_arg_structure(args.matrix, "matrix"))
    elif op == "pair-graph":
        out = pair_graph_reduction(_arg_structure(args.matrix, "matrix"))
    elif op == "corner":
        out = corner_pattern(PatternClass(_arg_structure(args.pi, "perm")))
    elif op == "sigma-double":
        out = sigma_double(_arg_structure(args.pi, "perm"))
    elif op == "extract-matching":
        out = extract_independent_matching(
            _arg_structure(args.graph, "hypergraph"), _arg_structure(args.pi, "perm")
        )
    else:
        raise StructureError(f"unknown transform op {op!r}")
    result = {
        "json": structure_json(out),
        "text": render_structure_text(out),
        "tsv": [_tsv_structure(out)] if not isinstance(out, (BinaryMatrix, BracketSeq))
        else [render_structure_text(out).replace("\n", " / ")],
    }
    _emit(result, args.format)
    return 0


def _cmd_constants(args):
    rec = constants(args.k)
    result = {
        "json": {
            "k": rec.k,
            "C_bound": str(rec.C_bound),
            "C_1": str(rec.C_1),
            "c_k": str(rec.c_k),
            "threshold_2_pow": str(rec.threshold_2_pow),
        },
        "text": "C_bound {}\nC_1 {}\nc_k {}\nthreshold_2_pow {}".format(
            rec.C_bound, rec.C_1, rec.c_k, rec.threshold_2_pow
        ),
        "tsv": [rec.C_bound, rec.C_1, rec.c_k, rec.threshold_2_pow],
    }
    _emit(result, args.format)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser():
    p = argparse.ArgumentParser(
        prog="ordpat",
        description="pattern containment and avoidance enumeration on ordered structures",
    )
    subs = p.add_subparsers(dest="command", required=True)

    c = subs.add_parser("contains", help="containment queries with witnesses")
    c.add_argument("--kind", required=True,
                   choices=("perm", "matrix", "graph", "hypergraph", "partition"))
    c.add_argument("--host", required=True)
    c.add_argument("--pattern")
    c.add_argument("--pattern-perm")
    c.add_argument("--mode", choices=("sub", "induced", "contain"))
    c.add_argument("--assert", dest="assert_mode", action="store_true")
    _add_common(c)
    c.set_defaults(handler=_cmd_contains)

    e = subs.add_parser("enumerate", help="enumerate/count structures in a property")
    e.add_argument("--universe", required=True,
                   choices=("perm", "graph", "hypergraph", "partition"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--list", action="store_true")
    e.add_argument("--method", choices=("pruned", "naive"), default="pruned")
    _add_avoid_flags(e)
    _add_common(e)
    e.set_defaults(handler=_cmd_enumerate)

    s = subs.add_parser("speed", help="speed table |P_1| .. |P_N|")
    s.add_argument("--universe", default="graph",
                   choices=("perm", "graph", "hypergraph", "partition"))
    s.add_argument("--upto", type=int, required=True)
    s.add_argument("--g-family", action="store_true")
    s.add_argument("--method", choices=("pruned", "naive"), default="pruned")
    _add_avoid_flags(s)
    _add_common(s)
    s.set_defaults(handler=_cmd_speed)

    x = subs.add_parser("extremal", help="exact extremal solvers")
    x.add_argument("--target", choices=("ones", "weight"), default="ones")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--m", type=int, default=None)
    x.add_argument("--square", action="store_true")
    x.add_argument("--distinct-rows", action="store_true")
    x.add_argument("--max-row-weight", type=int, default=None)
    x.add_argument("--avoid-matrix", action="append", default=[])
    x.add_argument("--avoid-class", action="append", default=[])
    x.add_argument("--avoid-perm", action="append", default=[])
    x.add_argument("--oracle", action="store_true")
    _add_common(x)
    x.set_defaults(handler=_cmd_extremal)

    t = subs.add_parser("transform", help="constructive maps between structures")
    t.add_argument("--op", required=True, choices=(
        "h-of-pi", "g", "incidence", "hypergraph-of-partition", "phi-deg1", "psi",
        "reconstruct-deg1", "phi-triple", "reconstruct-triple", "contract",
        "block-compress", "incidence-reduction", "pair-graph", "corner",
        "sigma-double", "extract-matching"))
    t.add_argument("--pi")
    t.add_argument("--graph")
    t.add_argument("--hypergraph")
    t.add_argument("--matrix")
    t.add_argument("--partition")
    t.add_argument("--n", type=int)
    t.add_argument("--t", type=int)
    t.add_argument("--support")
    t.add_argument("--phi")
    t.add_argument("--psi")
    t.add_argument("--left-degrees")
    t.add_argument("--right-degrees")
    t.add_argument("--as", dest="to_kind", default="graph",
                   choices=("graph", "hypergraph", "partition"))
    _add_common(t)
    t.set_defaults(handler=_cmd_transform)

    k = subs.add_parser("constants", help="the explicit constant pipeline")
    k.add_argument("--k", type=int, required=True)
    _add_common(k)
    k.set_defaults(handler=_cmd_constants)

    return p


def run(args):
    """Dispatch a parsed request; exceptions map to documented exit codes."""
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except StructureError as exc:
        print(f"invalid structure: {exc}", file=sys.stderr)
        return 3
    except FeasibilityError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 4


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
