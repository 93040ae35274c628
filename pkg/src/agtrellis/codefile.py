"""Plain-text generator-matrix files.

Line 1 is ``q k n`` with ``q`` written ``p^m``; then ``k`` lines of ``n``
element codes.  Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

from .code import LinearCode, code_from_matrix
from .gf import FieldError, parse_field
from .matrix import rank


class CodeFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_code(text: str) -> LinearCode:
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise CodeFileError("empty code file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3:
        raise CodeFileError("header must be 'q k n'", no)
    try:
        F = parse_field(parts[0])
        k, n = int(parts[1]), int(parts[2])
    except (FieldError, ValueError) as exc:
        raise CodeFileError(str(exc), no) from None
    if k < 1 or n < 1:
        raise CodeFileError("k and n must be positive", no)
    body = lines[1:]
    if len(body) != k:
        raise CodeFileError(f"expected {k} matrix rows, found {len(body)}", body[-1][0] if body else no)
    rows = []
    for no, ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise CodeFileError("non-integer entry", no) from None
        if len(row) != n:
            raise CodeFileError(f"expected {n} entries, found {len(row)}", no)
        if any(not 0 <= x < F.q for x in row):
            raise CodeFileError(f"entry outside 0..{F.q - 1}", no)
        rows.append(row)
    r = rank(F, rows)
    if r != k:
        raise CodeFileError(f"rank-deficient generator: computed rank {r}, declared k = {k}")
    return code_from_matrix(F, rows)


def read_code(path) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def format_code(C: LinearCode) -> str:
    lines = [f"{C.field} {C.k} {C.n}"]
    lines += [" ".join(str(int(x)) for x in row) for row in C.generator]
    return "\n".join(lines) + "\n"


def write_code(C: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(C))
