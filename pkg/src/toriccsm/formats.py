"""Text formats: the fan file and the polynomial rendering of classes.

Fan files are plain line-oriented text.  ``#`` starts a comment, blank
lines are ignored, and the sections are::

    name: optional-label
    dim: 2
    rays:
      1 0
      0 1
      -1 5
      0 -1
    max_cones:
      0 1
      1 2
      2 3
      3 0

Ray indices are 0-based everywhere.  Parsing reports the offending line;
fan validation errors are surfaced verbatim.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .chow import GradedClass, Monomial, monomial_degree
from .errors import ValidationError
from .fan import Fan, build_fan

__all__ = [
    "parse_fan_file",
    "parse_fan_text",
    "render_fan",
    "render_class",
    "parse_class",
    "monomial_sort_key",
]

_SECTION = re.compile(r"^(name|dim|rays|max_cones)\s*:\s*(.*)$")


def parse_fan_text(text: str, source: str = "<string>", validate: bool = True) -> tuple[Fan, str | None]:
    """Parse a fan document; returns the fan and its optional name."""
    name: str | None = None
    dim: int | None = None
    rays: list[list[int]] = []
    cones: list[list[int]] = []
    section: str | None = None

    def fail(lineno: int, msg: str) -> None:
        raise ValidationError(f"{source}, line {lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            key, rest = m.group(1), m.group(2).strip()
            if key == "name":
                name = rest or None
            elif key == "dim":
                try:
                    dim = int(rest)
                except ValueError:
                    fail(lineno, f"field 'dim' needs an integer, got {rest!r}")
            else:
                if rest:
                    fail(lineno, f"field '{key}' takes no inline value")
                section = key
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            fail(lineno, f"expected whitespace-separated integers, got {line!r}")
        if section == "rays":
            rays.append(values)
        elif section == "max_cones":
            cones.append(values)
        else:
            fail(lineno, "data line outside a 'rays:' or 'max_cones:' section")

    if dim is None:
        raise ValidationError(f"{source}: missing 'dim' field")
    if not rays:
        raise ValidationError(f"{source}: missing or empty 'rays' section")
    if not cones:
        raise ValidationError(f"{source}: missing or empty 'max_cones' section")
    return build_fan(dim, rays, cones, validate=validate), name


def parse_fan_file(path: str, validate: bool = True) -> tuple[Fan, str | None]:
    """Read and parse a fan file; returns the validated fan and its name."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_fan_text(text, source=path, validate=validate)


def render_fan(fan: Fan, name: str | None = None) -> str:
    """Serialize a fan in the file format; round-trips through the parser."""
    lines = []
    if name:
        lines.append(f"name: {name}")
    lines.append(f"dim: {fan.ambient_dim}")
    lines.append("rays:")
    lines.extend("  " + " ".join(str(x) for x in r) for r in fan.rays)
    lines.append("max_cones:")
    lines.extend("  " + " ".join(str(i) for i in c.ray_indices) for c in fan.max_cones)
    return "\n".join(lines) + "\n"


def monomial_sort_key(mono: Monomial):
    """Rendering order: ascending degree, then the fixed monomial order
    (smaller ray index more significant, higher exponent first)."""
    return (monomial_degree(mono), tuple((ray, -e) for ray, e in mono))


def _coeff_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_class(c: GradedClass) -> str:
    """Render a class as a polynomial string, e.g. ``1 + 2*x1 + 4*x1*x2``."""
    if not c:
        return "0"
    parts: list[str] = []
    for mono in sorted(c, key=monomial_sort_key):
        q = c[mono]
        mag = abs(q)
        vars_part = "*".join(
            f"x{ray}" if e == 1 else f"x{ray}^{e}" for ray, e in mono
        )
        if not mono:
            body = _coeff_str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{_coeff_str(mag)}*{vars_part}"
        if not parts:
            parts.append(body if q > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if q > 0 else '-'} {body}")
    return " ".join(parts)


_TERM = re.compile(r"[+-]?[^+-]+")
_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NUM = re.compile(r"^\d+(?:/\d+)?$")


def parse_class(s: str) -> GradedClass:
    """Parse a polynomial string back into a class (inverse of
    ``render_class``)."""
    s = s.replace(" ", "")
    if not s:
        raise ValidationError("empty polynomial string")
    if s == "0":
        return {}
    out: GradedClass = {}
    consumed = 0
    for tok in _TERM.findall(s):
        consumed += len(tok)
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        if not tok:
            raise ValidationError(f"dangling sign in polynomial string {s!r}")
        coeff = Fraction(sign)
        exps: dict[int, int] = {}
        for factor in tok.split("*"):
            if _NUM.match(factor):
                coeff *= Fraction(factor)
                continue
            vm = _VAR.match(factor)
            if not vm:
                raise ValidationError(f"cannot parse term factor {factor!r}")
            ray = int(vm.group(1))
            exps[ray] = exps.get(ray, 0) + int(vm.group(2) or 1)
        mono = tuple(sorted((ray, e) for ray, e in exps.items()))
        total = out.get(mono, Fraction(0)) + coeff
        if total:
            out[mono] = total
        else:
            out.pop(mono, None)
    if consumed != len(s):
        raise ValidationError(f"cannot parse polynomial string {s!r}")
    return out
