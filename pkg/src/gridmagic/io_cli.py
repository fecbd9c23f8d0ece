"""Serialization, figure emission, and the command-line surface.

Labelings travel as a single JSON document holding the caller's axis
order, the permutation into canonical order, and the label arrays in
canonical rank order. Serialization is canonical (sorted keys, compact
separators, newline-terminated), so identical documents are identical
bytes and everything downstream can be diffed.

Renderers emit TikZ pictures mimicking the usual grid figures (2d plain,
3d oblique), Graphviz dot, or a flat CSV with one row per element. The
CLI ties it together: generate, verify, predict, search, render, cover.
Exit codes: 0 ok (and magic+bijective for verify), 1 verification or
search refusal, 2 I/O or parse failure, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BudgetExceeded,
    DimensionOrderViolation,
    DimensionTooSmall,
    GridMagicError,
    Overflow,
    ParseError,
    UnsupportedDimension,
    UsageError,
    VersionMismatch,
)
from .grid_core import (
    EdgeId,
    GridSpec,
    canonicalize,
    edge_endpoints,
    enumerate_edges,
    enumerate_vertices,
    check_h_covering,
)
from .labeling_2d import (
    EdgeLabeling,
    VertexLabeling,
    edge_labeling_from_flat,
    vertex_labeling_from_flat,
)
from .labeling_nd import (
    TotalLabeling,
    build_labelings,
    combine_supermagic,
    total_labeling_from_flats,
)
from .oracle import DEFAULT_MAX_ASSIGNMENTS, MODES, SearchBudget, exhaustive_search
from .verifier import MagicReport, closed_form_sums, verify_edge_magic, verify_supermagic, verify_vertex_magic

FORMAT_VERSION = "1"
KINDS = ("vertex", "edge", "total")
STYLES = ("tikz2d", "tikz3d", "dot", "csv")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_USAGE = 64


@dataclass(frozen=True)
class LabelingDocument:
    """On-disk form of a labeling: caller axis order plus canonical arrays."""

    format_version: str
    dims: tuple[int, ...]  # caller order
    axis_permutation: tuple[int, ...]  # caller axis i sits at canonical slot perm[i-1]
    kind: str
    vertex_labels: tuple[int, ...]  # canonical rank order; empty for kind="edge"
    edge_labels: tuple[int, ...]  # enumeration order; empty for kind="vertex"


def save(doc: LabelingDocument) -> bytes:
    """Canonical byte serialization: sorted keys, compact, newline-terminated."""
    payload = {
        "format_version": doc.format_version,
        "dims": list(doc.dims),
        "axis_permutation": list(doc.axis_permutation),
        "kind": doc.kind,
        "vertex_labels": list(doc.vertex_labels),
        "edge_labels": list(doc.edge_labels),
    }
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()


def _int_list(raw: object, key: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in raw
    ):
        raise ParseError(f"{key} must be a list of integers")
    return tuple(raw)


def load(data: bytes | str) -> LabelingDocument:
    """Parse and validate a document produced by `save`."""
    text = data.decode() if isinstance(data, bytes) else data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(payload, dict):
        raise ParseError("document root must be an object")
    expected = {"format_version", "dims", "axis_permutation", "kind", "vertex_labels", "edge_labels"}
    if set(payload) != expected:
        missing = expected - set(payload)
        extra = set(payload) - expected
        raise ParseError(f"bad document keys: missing {sorted(missing)}, unknown {sorted(extra)}")
    version = payload["format_version"]
    if not isinstance(version, str) or version != FORMAT_VERSION:
        raise VersionMismatch(f"format_version {version!r}, supported {FORMAT_VERSION!r}")
    dims = _int_list(payload["dims"], "dims")
    try:
        spec, perm = canonicalize(dims)
    except GridMagicError as e:
        raise ParseError(f"bad dims {list(dims)}: {e}") from e
    if _int_list(payload["axis_permutation"], "axis_permutation") != perm:
        raise ParseError(f"axis_permutation inconsistent with dims, want {list(perm)}")
    kind = payload["kind"]
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {KINDS}, got {kind!r}")
    vertex_labels = _int_list(payload["vertex_labels"], "vertex_labels")
    edge_labels = _int_list(payload["edge_labels"], "edge_labels")
    want_v = spec.vertex_count if kind in ("vertex", "total") else 0
    want_e = spec.edge_count if kind in ("edge", "total") else 0
    if len(vertex_labels) != want_v:
        raise ParseError(f"vertex_labels length mismatch: got {len(vertex_labels)}, want {want_v}")
    if len(edge_labels) != want_e:
        raise ParseError(f"edge_labels length mismatch: got {len(edge_labels)}, want {want_e}")
    return LabelingDocument(version, dims, perm, kind, vertex_labels, edge_labels)


def generate_document(dims: Sequence[int], kind: str) -> LabelingDocument:
    """Build the constructed labeling of the given kind for caller dims."""
    if kind not in KINDS:
        raise UsageError(f"kind must be one of {KINDS}, got {kind!r}")
    spec, perm = canonicalize(dims)
    f, g = build_labelings(spec)
    if kind == "vertex":
        vertex_labels, edge_labels = tuple(int(v) for v in f.flat), ()
    elif kind == "edge":
        vertex_labels, edge_labels = (), tuple(int(v) for v in g.flat)
    else:
        total = combine_supermagic(f, g)
        vertex_labels = tuple(int(v) for v in total.vertex_flat)
        edge_labels = tuple(int(v) for v in total.edge_flat)
    return LabelingDocument(
        FORMAT_VERSION, tuple(int(n) for n in dims), perm, kind, vertex_labels, edge_labels
    )


def document_spec(doc: LabelingDocument) -> GridSpec:
    return canonicalize(doc.dims)[0]


def document_labeling(doc: LabelingDocument) -> VertexLabeling | EdgeLabeling | TotalLabeling:
    """Materialize the document's labeling over the canonical spec."""
    spec = document_spec(doc)
    if doc.kind == "vertex":
        return vertex_labeling_from_flat(spec, doc.vertex_labels)
    if doc.kind == "edge":
        return edge_labeling_from_flat(spec, doc.edge_labels)
    return total_labeling_from_flats(spec, doc.vertex_labels, doc.edge_labels)


def verify_document(doc: LabelingDocument) -> MagicReport:
    """Run the verifier matching the document's kind."""
    spec = document_spec(doc)
    labeling = document_labeling(doc)
    if doc.kind == "vertex":
        return verify_vertex_magic(spec, labeling)
    if doc.kind == "edge":
        return verify_edge_magic(spec, labeling)
    return verify_supermagic(spec, labeling)


def _to_canonical_coord(doc: LabelingDocument, coord: Sequence[int]) -> tuple[int, ...]:
    if len(coord) != len(doc.dims):
        raise UsageError(f"coordinate {tuple(coord)} has wrong arity for dims {doc.dims}")
    out = [0] * len(coord)
    for caller_axis, c in enumerate(coord):
        out[doc.axis_permutation[caller_axis] - 1] = int(c)
    return tuple(out)


def document_vertex_label(doc: LabelingDocument, coord: Sequence[int]) -> int:
    """Label of a vertex given in the caller's axis order."""
    if doc.kind == "edge":
        raise UsageError("edge-only document carries no vertex labels")
    labeling = document_labeling(doc)
    canonical = _to_canonical_coord(doc, coord)
    if doc.kind == "total":
        return labeling.vertex_label(canonical)
    return labeling.label(canonical)


def document_edge_label(doc: LabelingDocument, base: Sequence[int], axis: int) -> int:
    """Label of an edge given by base vertex and 1-based axis, caller order."""
    if doc.kind == "vertex":
        raise UsageError("vertex-only document carries no edge labels")
    labeling = document_labeling(doc)
    edge = EdgeId(_to_canonical_coord(doc, base), doc.axis_permutation[axis - 1])
    if doc.kind == "total":
        return labeling.edge_label(edge)
    return labeling.label(edge)


# --- renderers ---------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:g}"


def _vertex_texts(doc: LabelingDocument, spec: GridSpec) -> dict[tuple[int, ...], str]:
    if doc.kind == "edge":
        return {v: "" for v in enumerate_vertices(spec)}
    labels = doc.vertex_labels
    return {v: str(labels[i]) for i, v in enumerate(enumerate_vertices(spec))}


def _edge_texts(doc: LabelingDocument, spec: GridSpec) -> dict[EdgeId, str]:
    if doc.kind == "vertex":
        return {e: "" for e in enumerate_edges(spec)}
    labels = doc.edge_labels
    return {e: str(labels[i]) for i, e in enumerate(enumerate_edges(spec))}


def _render_tikz(doc: LabelingDocument, style: str) -> str:
    spec = document_spec(doc)
    if style == "tikz2d" and spec.dim != 2:
        raise UnsupportedDimension(f"tikz2d needs a 2-dimensional grid, got {spec.dim}")
    if style == "tikz3d" and spec.dim != 3:
        raise UnsupportedDimension(f"tikz3d needs a 3-dimensional grid, got {spec.dim}")

    def place(v: tuple[int, ...]) -> tuple[float, float]:
        if spec.dim == 2:
            i, j = v
            return 3.0 * (i - 1), 3.0 * (spec.dims[1] - j)
        i, j, k = v  # oblique projection: axis 2 drawn at a slant
        return 3.0 * (i - 1) + 1.9 * (j - 1), 3.0 * (spec.dims[2] - k) + 1.15 * (j - 1)

    def name(v: tuple[int, ...]) -> str:
        return "v" + "_".join(str(c) for c in v)

    vertex_texts = _vertex_texts(doc, spec)
    edge_texts = _edge_texts(doc, spec)
    lines = [
        "\\begin{tikzpicture}[every node/.style={draw,shape=circle,inner sep=1pt,minimum size=.6cm}]"
    ]
    for v, text in vertex_texts.items():
        x, y = place(v)
        lines.append(f"  \\node ({name(v)}) at ({_fmt(x)},{_fmt(y)}) {{{text}}};")
    for e, text in edge_texts.items():
        a, b = edge_endpoints(e)
        if text:
            placement = "midway,right" if e.axis == spec.dim else "midway,above,sloped"
            lines.append(
                f"  \\draw ({name(a)}) -- ({name(b)}) node[draw=none,{placement}] {{{text}}};"
            )
        else:
            lines.append(f"  \\draw ({name(a)}) -- ({name(b)});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _render_dot(doc: LabelingDocument) -> str:
    spec = document_spec(doc)
    vertex_texts = _vertex_texts(doc, spec)
    edge_texts = _edge_texts(doc, spec)
    lines = ["graph gridmagic {", "  node [shape=circle];"]
    for v, text in vertex_texts.items():
        node = ",".join(str(c) for c in v)
        attr = f' [label="{text}"]' if text else ""
        lines.append(f'  "{node}"{attr};')
    for e, text in edge_texts.items():
        a, b = edge_endpoints(e)
        left = ",".join(str(c) for c in a)
        right = ",".join(str(c) for c in b)
        attr = f' [label="{text}"]' if text else ""
        lines.append(f'  "{left}" -- "{right}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_csv(doc: LabelingDocument) -> str:
    spec = document_spec(doc)
    header = ["kind"] + [f"x{i}" for i in range(1, spec.dim + 1)] + ["axis", "label"]
    rows = [",".join(header)]
    if doc.kind in ("vertex", "total"):
        for i, v in enumerate(enumerate_vertices(spec)):
            rows.append(",".join(["vertex", *map(str, v), "", str(doc.vertex_labels[i])]))
    if doc.kind in ("edge", "total"):
        for i, e in enumerate(enumerate_edges(spec)):
            rows.append(
                ",".join(["edge", *map(str, e.base), str(e.axis), str(doc.edge_labels[i])])
            )
    return "\n".join(rows) + "\n"


def render(doc: LabelingDocument, style: str) -> str:
    """Deterministic text rendering of a document in the given style."""
    if style not in STYLES:
        raise UsageError(f"style must be one of {STYLES}, got {style!r}")
    if style in ("tikz2d", "tikz3d"):
        return _render_tikz(doc, style)
    if style == "dot":
        return _render_dot(doc)
    return _render_csv(doc)


# --- command line ------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 64 instead of argparse's 2
        raise UsageError(message)


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--dims expects a comma-separated integer list, got {text!r}")
    if len(dims) < 2:
        raise UsageError("--dims needs at least two side lengths")
    return dims


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gridmagic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="construct a labeling document")
    p.add_argument("--dims", required=True)
    p.add_argument("--kind", choices=KINDS, default="total")
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="check a labeling document")
    p.add_argument("file", help="document path, or - for stdin")

    p = sub.add_parser("predict", help="closed-form magic sums")
    p.add_argument("--dims", required=True)

    p = sub.add_parser("search", help="exhaustive brute-force scan")
    p.add_argument("--dims", required=True)
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_MAX_ASSIGNMENTS)

    p = sub.add_parser("render", help="emit a figure for a document")
    p.add_argument("file", help="document path, or - for stdin")
    p.add_argument("--style", choices=STYLES, required=True)

    p = sub.add_parser("cover", help="check the cube-covering condition")
    p.add_argument("--dims", required=True)
    return parser


def _read_document(path: str) -> LabelingDocument:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return load(data)


def _print_report(report: MagicReport, dims: tuple[int, ...]) -> None:
    def low(x) -> str:
        return "none" if x is None else str(x).lower()

    print(
        f"kind={report.kind} dims={','.join(map(str, dims))} "
        f"bijective={low(report.bijective)}"
    )
    print(f"cube_sums distinct={report.distinct_count} values={list(report.cube_sum_values)}")
    print(f"predicted_sum={report.predicted_sum} matches_prediction={low(report.matches_prediction)}")
    if report.magic:
        print(f"MAGIC sum={report.magic_sum}")
    else:
        print(f"NOT_MAGIC distinct={report.distinct_count}")


def _cmd_generate(args) -> int:
    doc = generate_document(_parse_dims(args.dims), args.kind)
    payload = save(doc) if args.format == "json" else render(doc, "csv").encode()
    if args.out == "-":
        sys.stdout.write(payload.decode())
    else:
        with open(args.out, "wb") as handle:
            handle.write(payload)
    return EXIT_OK


def _cmd_verify(args) -> int:
    doc = _read_document(args.file)
    report = verify_document(doc)
    _print_report(report, doc.dims)
    return EXIT_OK if report.magic and report.bijective else EXIT_FAIL


def _cmd_predict(args) -> int:
    spec, _ = canonicalize(_parse_dims(args.dims))
    sums = closed_form_sums(spec)
    print(f"c_vertex={sums.c_vertex} c_edge={sums.c_edge} c_total={sums.c_total}")
    return EXIT_OK


def _cmd_search(args) -> int:
    spec, _ = canonicalize(_parse_dims(args.dims))
    budget = SearchBudget(mode=args.mode, max_assignments=args.budget)
    result = exhaustive_search(spec, budget)
    print(
        f"mode={args.mode} dims={args.dims} examined={result.examined} "
        f"found={result.found_count}"
    )
    for magic_sum in sorted(result.sum_histogram):
        print(f"sum={magic_sum} count={result.sum_histogram[magic_sum]}")
    return EXIT_OK


def _cmd_render(args) -> int:
    doc = _read_document(args.file)
    sys.stdout.write(render(doc, args.style))
    return EXIT_OK


def _cmd_cover(args) -> int:
    spec, _ = canonicalize(_parse_dims(args.dims))
    print("COVERED" if check_h_covering(spec) else "NOT_COVERED")
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "predict": _cmd_predict,
    "search": _cmd_search,
    "render": _cmd_render,
    "cover": _cmd_cover,
}


def cli(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DimensionTooSmall, DimensionOrderViolation, Overflow, UnsupportedDimension) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, VersionMismatch, OSError) as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
