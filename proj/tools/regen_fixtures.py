#!/usr/bin/env python3
"""Fill the "source" and "expected" fields of data/fixtures.json.

The LaTeX cells are kept verbatim. "source" is a mechanical transcription
into the text grammar and "expected" is the canonical record computed by the
astheno binary (untruncated, no ring reduction) from that source.

usage: regen_fixtures.py path/to/astheno [path/to/fixtures.json]
"""

import json
import re
import subprocess
import sys
from pathlib import Path

SYMBOLS = {
    r"\alpha_1": ("a1", "scalar"),
    r"\alpha_2": ("a2", "scalar"),
    r"\beta_1": ("b1", "scalar"),
    r"\beta_2": ("b2", "scalar"),
    r"\eta_1": ("eta1", "form"),
    r"\eta_2": ("eta2", "form"),
    r"\Phi_1": ("Phi1", "form"),
    r"\Phi_2": ("Phi2", "form"),
}

OPEN = {r"\left(", r"\{", "(", "["}
CLOSE = {r"\right)", r"\}", ")", "]"}

TOKEN = re.compile(
    r"\\left\(|\\right\)|\\\{|\\\}|\\wedge|\\,|\\(?:alpha|beta|eta|Phi)_[12]"
    r"|\^\{\d+\}|\^\d|\d+|[-+()\[\]]|\s+"
)

NOTES = {
    (1, 4): "closing brace missing in print; closed at the end",
    (2, 1): "term -4 a2^2 Phi2^2 has degree 4 next to degree-6 terms",
}


def tokens(latex):
    pos = 0
    while pos < len(latex):
        m = TOKEN.match(latex, pos)
        if not m:
            raise ValueError(f"cannot read {latex[pos:pos + 20]!r}")
        pos = m.end()
        yield m.group(0)


def transcribe(latex):
    """Returns (source, unclosed_groups)."""
    out = []
    depth = 0
    prev = None  # kind of the last operand: "scalar", "form", "group" or None
    for tok in tokens(latex):
        if tok.isspace() or tok == r"\,":
            continue
        if tok.startswith("^"):
            out.append("^" + tok.strip("^{}"))
            continue
        if tok in ("+", "-"):
            out.append(f" {tok} ")
            prev = None
            continue
        if tok == r"\wedge":
            out.append(" /\\ ")
            prev = None
            continue
        if tok in CLOSE:
            out.append(")")
            depth -= 1
            prev = "group"
            continue
        if tok in OPEN:
            kind = "group"
            text = "("
            depth += 1
        elif tok.isdigit():
            kind, text = "scalar", tok
        else:
            text, kind = SYMBOLS[tok]
        if prev is not None:
            out.append("*" if "scalar" in (prev, kind) else " /\\ ")
        out.append(text)
        prev = None if tok in OPEN else kind
    if depth < 0:
        raise ValueError("unbalanced closing bracket")
    out.append(")" * depth)
    source = re.sub(r"\s+", " ", "".join(out)).strip()
    if source.startswith("+ "):
        source = source[2:]
    if source.startswith("- "):
        source = "-" + source[2:]
    return source, depth


def expected_record(binary, source):
    proc = subprocess.run(
        [binary, "eval", "--expr", source, "--format", "json", "--ring-reduction", "off"],
        check=True,
        capture_output=True,
        text=True,
    )
    return json.loads(proc.stdout)["result"]["record"]


def fill(entry, binary, note=None):
    source, unclosed = transcribe(entry["latex"])
    entry["source"] = source
    entry["expected"] = expected_record(binary, source)
    if note:
        entry["note"] = note
    elif unclosed:
        entry["note"] = "unbalanced group in print; closed at the end"


def main():
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    binary = sys.argv[1]
    path = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).parent.parent / "data/fixtures.json"
    doc = json.loads(path.read_text())
    for eq in doc["equations"]:
        fill(eq, binary)
    for table in doc["tables"]:
        for row in table["rows"]:
            fill(row, binary, NOTES.get((table["table"], row["row"])))
    path.write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
