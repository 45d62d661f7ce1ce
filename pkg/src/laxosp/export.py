"""Deterministic text serialization of built objects.

A document is JSON with sorted keys.  Matrix entries are
``[row, col, [[s_exponent, numerator, denominator], ...]]`` with 1-based,
row-major indices.  Specialized documents (``at_q`` set) use the same layout;
their scalars only carry exponents 0 and 1, the latter standing for sqrt(q).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .graded import GradedMatrix, basis_info
from .qscalar import EvalPoint, LaurentScalar
from .sigma import build_vector_R, build_vector_RT, closed_form_sigma, sigma_table
from .vector_rep import vector_rep

TOOL_VERSION = "0.1.0"
FORMAT_VERSION = 1

OBJECTS = ("vector-R", "vector-RT", "sigma-table")
MODES = {
    "vector-R": ("closed-form", "recursion"),
    "vector-RT": ("closed-form", "dagger", "opposite-lax"),
    "sigma-table": ("closed-form", "recursion"),
}


@dataclass
class BuildConfig:
    n: int
    object: str = "vector-R"
    mode: str = "closed-form"
    at_q: Fraction | None = None

    def __post_init__(self):
        if self.object not in OBJECTS:
            raise ValueError(f"unknown object {self.object!r}")
        if self.mode not in MODES[self.object]:
            raise ValueError(f"mode {self.mode!r} not available for {self.object}")


@dataclass
class ExportDocument:
    header: dict
    matrix: GradedMatrix | None = None
    pairs: dict[tuple[int, int], GradedMatrix] = field(default_factory=dict)


def build_object(cfg: BuildConfig) -> ExportDocument:
    n = cfg.n
    table = basis_info(n)
    header = {
        "n": n,
        "dim": table.dim,
        "object": cfg.object,
        "mode": cfg.mode,
        "tool_version": TOOL_VERSION,
        "format": FORMAT_VERSION,
        "at_q": None if cfg.at_q is None else str(cfg.at_q),
    }
    point = None if cfg.at_q is None else EvalPoint(cfg.at_q)
    spec = (lambda m: m) if point is None else (lambda m: m.at(point))
    if cfg.object == "sigma-table":
        header["arity"] = 1
        if cfg.mode == "closed-form":
            pairs = {p: closed_form_sigma(n, *p) for p in table.strict_pairs()}
        else:
            pairs = sigma_table(n).evaluate(vector_rep(n))
        return ExportDocument(header, pairs={p: spec(m) for p, m in pairs.items()})
    header["arity"] = 2
    builder = build_vector_R if cfg.object == "vector-R" else build_vector_RT
    return ExportDocument(header, matrix=spec(builder(n, cfg.mode)))


def _entries(M: GradedMatrix) -> list:
    return [[r + 1, c + 1, v.to_triples()] for r, c, v in M.sorted_entries()]


def to_json(doc: ExportDocument) -> str:
    body: dict = {"header": doc.header}
    if doc.matrix is not None:
        body["entries"] = _entries(doc.matrix)
    else:
        table = basis_info(doc.header["n"])
        body["pairs"] = [
            {"b": b, "a": a, "b_name": table.position_name(b), "a_name": table.position_name(a),
             "entries": _entries(m)}
            for (b, a), m in sorted(doc.pairs.items())
        ]
    return json.dumps(body, sort_keys=True, separators=(",", ":")) + "\n"


def _matrix_from(entries, n: int, arity: int) -> GradedMatrix:
    table = basis_info(n)
    out = {}
    for r, c, triples in entries:
        v = LaurentScalar.from_triples(triples)
        if v:
            out[r - 1, c - 1] = v
    return GradedMatrix(table, arity, out)


def parse_json(text: str) -> ExportDocument:
    body = json.loads(text)
    header = body["header"]
    n, arity = header["n"], header["arity"]
    if "entries" in body:
        return ExportDocument(header, matrix=_matrix_from(body["entries"], n, arity))
    pairs = {(p["b"], p["a"]): _matrix_from(p["entries"], n, arity) for p in body["pairs"]}
    return ExportDocument(header, pairs=pairs)


def to_dense_text(doc: ExportDocument) -> str:
    lines = ["# " + " ".join(f"{k}={doc.header[k]}" for k in sorted(doc.header))]

    def dump(M: GradedMatrix) -> None:
        for row in M.to_dense():
            lines.append("\t".join(str(v) for v in row))

    if doc.matrix is not None:
        dump(doc.matrix)
    else:
        table = basis_info(doc.header["n"])
        for (b, a), m in sorted(doc.pairs.items()):
            lines.append(f"## sigma[{table.position_name(b)},{table.position_name(a)}]")
            dump(m)
    return "\n".join(lines) + "\n"
