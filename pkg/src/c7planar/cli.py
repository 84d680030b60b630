"""Command-line front end.

Exit status: 0 when every applicable check passes (an inapplicable audit
is not a violation), 1 on an audited violation, 2 on usage or parse
errors.  Input files are either edge lists (header ``n m``) or rotation
systems (header ``n``); the header decides.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .audit import dual_count_audit, final_inequality_check
from .blocks import (
    PreconditionViolation,
    analyze,
    audit_no_8face_inequality,
    audit_small_block_inequality,
    block_breakdown,
    check_8plus_t3_incidence,
    check_t3_face_sizes,
)
from .embedding import Embedding, embed, embedding_to_dot, graph_to_dot, test_planarity
from .extremal import build_g0, expand_to_g, verify_extremal
from .graph import Graph, GraphError
from .reduce import block_lower_bound, peel, theorem_bound_check
from .report import Finding, Report
from .search import exhaustive_ex_p
from .transform import ledger_text, normalize

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _header_tokens(text: str) -> list[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()
    return []


def load_graph(path: str) -> tuple[Graph, Optional[Embedding]]:
    """Read an edge list or a rotation system; the second item is the
    embedding when the file carries one."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        if len(_header_tokens(text)) == 1:
            emb = Embedding.from_text(text)
            return emb.graph, emb
        return Graph.from_edge_list(text), None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def load_embedding(path: str) -> tuple[Optional[Embedding], Report]:
    """Embedding from a file, embedding edge lists when they are planar."""
    g, emb = load_graph(path)
    rep = Report("input")
    if emb is None:
        if not test_planarity(g).planar:
            return None, rep.inapplicable(["nonplanar"])
        emb = embed(g)
    return emb, rep


def _write(out: Optional[str], text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _emit(reports: Sequence[Report]) -> int:
    for r in reports:
        sys.stdout.write(r.to_text())
    return EXIT_OK if all(r.passed or not r.applicable for r in reports) else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# Subcommands


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        sk = build_g0(args.k)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    emb = sk.embedding if args.skeleton else expand_to_g(sk).embedding
    _write(args.out, emb.to_text())
    if args.dot:
        _write(args.dot, embedding_to_dot(emb))
    if args.skeleton:
        hist = sorted(emb.graph.degree_histogram().items())
        lengths = sorted({f.length for f in emb.faces})
        ok = lengths == [8]
        line = (f"n={emb.graph.order} e={emb.graph.size} faces={len(emb.faces)} "
                f"face_lengths={','.join(map(str, lengths))} "
                f"degrees={','.join(f'{d}:{c}' for d, c in hist)}")
    else:
        cert = verify_extremal(emb)
        ok, line = cert.all_ok, cert.to_line()
    print(line, file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_verify(args: argparse.Namespace) -> int:
    g, emb = load_graph(args.file)
    cert = verify_extremal(emb if emb is not None else g, cycle=args.cycle)
    print(cert.to_line())
    return EXIT_OK if cert.all_ok else EXIT_VIOLATION


def cmd_decompose(args: argparse.Namespace) -> int:
    emb, rep = load_embedding(args.file)
    if emb is None:
        return _emit([rep])
    an = analyze(emb)
    table = Report("blocks")
    for b in an.blocks:
        bd = b.boundary_cycle_length
        table.add(Finding(
            f"block {b.id} {an.labels[b.id]} {'large' if an.large[b.id] else 'small'} "
            f"v={b.vertex_count} boundary={bd if bd is not None else '-'} e",
            len(b.edges), emb.graph.size, None))
    s = an.summary
    table.add(Finding("k1", s.k1, 0, None, cmp=">="))
    table.add(Finding("k2", s.k2, 0, None, cmp=">="))
    table.add(Finding("f_k", s.f_k, 0, None, cmp=">="))
    return _emit([table, block_breakdown(emb, an), check_t3_face_sizes(emb, an), check_8plus_t3_incidence(emb, an)])


def cmd_normalize(args: argparse.Namespace) -> int:
    emb, rep = load_embedding(args.file)
    if emb is None:
        return _emit([rep])
    try:
        out, records = normalize(emb)
    except PreconditionViolation as exc:
        return _emit([Report("normalize").inapplicable([str(exc)])])
    if args.out:
        _write(args.out, out.to_text())
    sys.stdout.write(ledger_text(records))
    rep = Report("normalize")
    for i, r in enumerate(records):
        rep.add(Finding(f"step {i} {r.case_id} 7de-18dv", r.excess, 0, r.ratio_ok and r.nominal_ok, cmp=">="))
    rep.add(Finding("steps", len(records), 0, None, cmp=">="))
    return _emit([rep])


def cmd_audit(args: argparse.Namespace) -> int:
    emb, rep = load_embedding(args.file)
    if emb is None:
        return _emit([rep])
    aud = dual_count_audit(emb, normalize_first=True)
    return _emit([
        audit_small_block_inequality(emb),
        audit_no_8face_inequality(emb),
        aud.report,
        final_inequality_check(emb, aud),
        theorem_bound_check(emb.graph),
    ])


def cmd_peel(args: argparse.Namespace) -> int:
    g, _ = load_graph(args.file)
    trace = peel(g)
    sys.stdout.write(trace.to_text())
    rep = Report("peel")
    rep.add(Finding("steps ok", int(trace.all_steps_ok), 1, trace.all_steps_ok, cmp="=="))
    agg = trace.aggregate_ok()
    rep.add(Finding("aggregate ok", int(agg), 1, agg, cmp="=="))
    fin = trace.final_graph
    if fin.order:
        rep.add(Finding("survivor block bound", block_lower_bound(fin), 18 * fin.order - 7 * fin.size, None))
    return _emit([rep, theorem_bound_check(g)])


def cmd_search(args: argparse.Namespace) -> int:
    try:
        res = exhaustive_ex_p(args.n, args.cycle, jobs=args.jobs)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(res.to_text())
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g, emb = load_graph(args.file)
    _write(args.out, embedding_to_dot(emb) if emb is not None else graph_to_dot(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="c7planar", description="C7-free planar graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build the extremal construction")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--skeleton", action="store_true", help="emit the skeleton instead")
    c.add_argument("--out", help="rotation-system output file (default stdout)")
    c.add_argument("--dot", help="also write a DOT file")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify an instance")
    v.add_argument("file")
    v.add_argument("--cycle", type=int, default=7)
    v.set_defaults(func=cmd_verify)

    for name, func, helptext in (
        ("decompose", cmd_decompose, "triangular-block partition and face checks"),
        ("audit", cmd_audit, "counting inequalities and final bound"),
        ("peel", cmd_peel, "peeling trace and global bound"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file")
        s.set_defaults(func=func)

    n = sub.add_parser("normalize", help="replace targets and print the ledger")
    n.add_argument("file")
    n.add_argument("--out", help="write the normalized rotation system here")
    n.set_defaults(func=cmd_normalize)

    s = sub.add_parser("search", help="exhaustive planar Turan number")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cycle", type=int, default=7)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_search)

    d = sub.add_parser("export-dot", help="DOT rendering of a graph or embedding")
    d.add_argument("file")
    d.add_argument("--out")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
