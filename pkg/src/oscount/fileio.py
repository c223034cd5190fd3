"""Text formats for arrangements and matrix groups.

One directive per line, `#` starts a comment.  Arrangements:

    field rational | field cyclotomic N
    dim L
    hyperplane c1 c2 ... cL          (central)
    hyperplane c1 c2 ... cL = c0     (affine)

Groups:

    field ... / dim 2n
    symplectic_form   followed by 2n rows of 2n scalar tokens
    generator         followed by 2n rows, repeated per generator

Scalar tokens use the syntax of the exact-arithmetic layer: `p/q`, `p`,
or `(a0,a1,...)`.  Round-trip is stable: serialize(parse(f)) parses to an
equal object.
"""

from __future__ import annotations

from .arrangement import Arrangement, build_arrangement
from .errors import InvalidInputError
from .fields import FieldDescriptor, cyclotomic_field, parse_scalar, rational_field
from .groups import MatrixGroup
from .linalg import ExactMatrix

__all__ = [
    "parse_arrangement_text",
    "parse_arrangement_file",
    "serialize_arrangement",
    "parse_group_text",
    "parse_group_file",
    "serialize_group",
]


def _logical_lines(text: str):
    """(line_number, tokens) for nonblank, noncomment lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _parse_field_directive(tokens: list[str], lineno: int) -> FieldDescriptor:
    if tokens[1] == "rational" and len(tokens) == 2:
        return rational_field()
    if tokens[1] == "cyclotomic" and len(tokens) == 3:
        try:
            n = int(tokens[2])
        except ValueError:
            raise InvalidInputError(f"line {lineno}: bad conductor {tokens[2]!r}") from None
        return cyclotomic_field(n)
    raise InvalidInputError(
        f"line {lineno}: expected `field rational` or `field cyclotomic N`"
    )


def parse_arrangement_text(text: str) -> Arrangement:
    field: FieldDescriptor | None = None
    dim: int | None = None
    raw = []
    count = 0
    for lineno, tokens in _logical_lines(text):
        head = tokens[0]
        if head == "field":
            field = _parse_field_directive(tokens, lineno)
        elif head == "dim":
            if len(tokens) != 2:
                raise InvalidInputError(f"line {lineno}: expected `dim L`")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise InvalidInputError(f"line {lineno}: bad dimension {tokens[1]!r}") from None
        elif head == "hyperplane":
            if field is None or dim is None:
                raise InvalidInputError(
                    f"line {lineno}: `field` and `dim` must precede hyperplanes"
                )
            count += 1
            body = tokens[1:]
            if "=" in body:
                eq = body.index("=")
                coeff_tokens, rest = body[:eq], body[eq + 1 :]
                if len(rest) != 1:
                    raise InvalidInputError(
                        f"line {lineno}: hyperplane {count}: expected one offset after `=`"
                    )
                offset = parse_scalar(rest[0], field)
            else:
                coeff_tokens, offset = body, field.zero()
            if len(coeff_tokens) != dim:
                raise InvalidInputError(
                    f"line {lineno}: hyperplane {count} has {len(coeff_tokens)} "
                    f"coefficients; dim is {dim}"
                )
            try:
                normal = tuple(parse_scalar(tok, field) for tok in coeff_tokens)
            except InvalidInputError as exc:
                raise InvalidInputError(f"line {lineno}: hyperplane {count}: {exc}") from None
            raw.append((normal, offset))
        else:
            raise InvalidInputError(f"line {lineno}: unknown directive {head!r}")
    if field is None or dim is None:
        raise InvalidInputError("missing `field` or `dim` directive")
    return build_arrangement(field, dim, raw)


def parse_arrangement_file(path: str) -> Arrangement:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read arrangement file {path}: {exc}") from None
    return parse_arrangement_text(text)


def _field_directive(field: FieldDescriptor) -> str:
    if field.is_rational:
        return "field rational"
    return f"field cyclotomic {field.conductor}"


def serialize_arrangement(arrangement: Arrangement) -> str:
    lines = [_field_directive(arrangement.field), f"dim {arrangement.ambient_dim}"]
    for h in arrangement.hyperplanes:
        body = " ".join(str(x) for x in h.normal)
        if h.offset.is_zero():
            lines.append(f"hyperplane {body}")
        else:
            lines.append(f"hyperplane {body} = {h.offset}")
    return "\n".join(lines) + "\n"


def parse_group_text(text: str) -> MatrixGroup:
    field: FieldDescriptor | None = None
    dim: int | None = None
    form_rows: list[list] = []
    generators: list[ExactMatrix] = []
    pending: list[list] = []
    mode: str | None = None  # None | "form" | "generator"

    def finish_block(lineno: int):
        nonlocal mode, pending, form_rows
        if mode is None:
            return
        if len(pending) != dim:
            raise InvalidInputError(
                f"line {lineno}: {mode} block has {len(pending)} rows; expected {dim}"
            )
        if mode == "form":
            form_rows = pending
        else:
            generators.append(ExactMatrix(field, pending))
        pending = []
        mode = None

    last_lineno = 0
    for lineno, tokens in _logical_lines(text):
        last_lineno = lineno
        head = tokens[0]
        if head == "field":
            field = _parse_field_directive(tokens, lineno)
        elif head == "dim":
            if len(tokens) != 2:
                raise InvalidInputError(f"line {lineno}: expected `dim 2n`")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise InvalidInputError(f"line {lineno}: bad dimension {tokens[1]!r}") from None
        elif head in ("symplectic_form", "generator"):
            finish_block(lineno)
            if field is None or dim is None:
                raise InvalidInputError(
                    f"line {lineno}: `field` and `dim` must precede matrix blocks"
                )
            mode = "form" if head == "symplectic_form" else "generator"
        else:
            if mode is None:
                raise InvalidInputError(f"line {lineno}: unexpected row outside a matrix block")
            if len(tokens) != dim:
                raise InvalidInputError(
                    f"line {lineno}: matrix row has {len(tokens)} entries; expected {dim}"
                )
            pending.append([parse_scalar(tok, field) for tok in tokens])
            if len(pending) == dim:
                finish_block(lineno)
    finish_block(last_lineno)
    if field is None or dim is None:
        raise InvalidInputError("missing `field` or `dim` directive")
    if not form_rows:
        raise InvalidInputError("missing `symplectic_form` block")
    if not generators:
        raise InvalidInputError("missing `generator` blocks")
    return MatrixGroup(field, dim, generators, ExactMatrix(field, form_rows))


def parse_group_file(path: str) -> MatrixGroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read group file {path}: {exc}") from None
    return parse_group_text(text)


def serialize_group(group: MatrixGroup) -> str:
    lines = [_field_directive(group.field), f"dim {group.dim}", "symplectic_form"]
    for row in group.symplectic_form.rows:
        lines.append(" ".join(str(x) for x in row))
    for g in group.generators:
        lines.append("generator")
        for row in g.rows:
            lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
