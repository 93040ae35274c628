"""Report documents (plain dicts) and their text / CSV renderings.

Text and CSV are rendered from the same dict that is serialised to JSON, so
``render_text(json.loads(dumps(doc))) == render_text(doc)``.
"""
from __future__ import annotations

import csv
import io
import json

from . import __version__
from .tables import BoundTable

MARK = "≠paper"


def base_document(command: str, **inputs) -> dict:
    return {"tool": "agtrellis", "version": __version__, "command": command, "input": inputs}


def table_document(table: BoundTable) -> dict:
    doc = base_document("tables", curve=table.curve, semigroup=list(table.semigroup))
    doc.update(n=table.n, genus=table.genus, columns=["m", *table.columns])
    doc["rows"] = [
        {"m": r.m, "computed": list(r.computed), "paper": list(r.printed), "best": r.best,
         "discrepancies": [table.columns[c] for c in r.discrepancies()]}
        for r in table.rows
    ]
    return doc


def _cell(computed: int, printed: int) -> str:
    return str(computed) if computed == printed else f"{computed} {MARK}({printed})"


def table_cells(doc: dict) -> list[list[str]]:
    return [[str(row["m"])] + [_cell(c, p) for c, p in zip(row["computed"], row["paper"])]
            for row in doc["rows"]]


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def render_table_text(doc: dict) -> str:
    header = doc["columns"]
    cells = table_cells(doc)
    widths = [max(len(h), *(len(r[c]) for r in cells)) for c, h in enumerate(header)]

    def line(items):
        return "  ".join(s.rjust(w) for s, w in zip(items, widths)).rstrip()

    sg = ",".join(map(str, doc["input"]["semigroup"]))
    out = [f"# {doc['input']['curve']} curve: n={doc['n']}, g={doc['genus']}, semigroup ⟨{sg}⟩",
           line(header), line(["-" * w for w in widths])]
    out += [line(r) for r in cells]
    return "\n".join(out) + "\n"


def render_table_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(doc["columns"])
    writer.writerows(table_cells(doc))
    return buf.getvalue()


def _fmt(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(_fmt(v) for v in value) + ")"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    return str(value)


def render_report_text(doc: dict) -> str:
    """Generic ``key: value`` rendering for analyze / curve / decode."""
    out = [f"# agtrellis {doc['command']}"]
    for key, value in doc.items():
        if key in ("tool", "version", "command"):
            continue
        if isinstance(value, dict) and key in ("bounds", "distance", "ordering", "input", "code"):
            out.append(f"{key}:")
            out += [f"  {k}: {_fmt(v)}" for k, v in value.items()]
        else:
            out.append(f"{key}: {_fmt(value)}")
    return "\n".join(out) + "\n"


def render_report_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in doc.items():
        if isinstance(value, dict):
            for k, v in value.items():
                writer.writerow([f"{key}.{k}", _fmt(v)])
        else:
            writer.writerow([key, _fmt(value)])
    return buf.getvalue()


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(doc)
    if doc["command"] == "tables":
        return render_table_csv(doc) if fmt == "csv" else render_table_text(doc)
    return render_report_csv(doc) if fmt == "csv" else render_report_text(doc)
