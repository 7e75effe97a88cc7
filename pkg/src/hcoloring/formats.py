"""graph6 / sparse6 codecs and the plain edge-list fixture format.

The nauty formats are implemented bit-exactly: printable bytes 63..126 carry
six bits each, and trailing bytes beyond the payload are rejected.
"""

from __future__ import annotations

import re
from typing import Iterator, TextIO

from .graph import Edge, GraphError, Multigraph


class ParseError(ValueError):
    def __init__(self, msg: str, offset: int | None = None, line: int | None = None):
        self.offset = offset
        self.line = line
        where = ""
        if offset is not None:
            where = f" at byte {offset}"
        if line is not None:
            where = f" at line {line}"
        super().__init__(msg + where)


class UnsupportedGraphError(ParseError):
    """Input decodes to something outside the loopless model (a loop)."""


# --------------------------------------------------------------------------
# shared pieces

def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative n")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6/sparse6")


def _payload(s: str, start: int) -> list[int]:
    vals = []
    for i in range(start, len(s)):
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise ParseError(f"invalid character {s[i]!r}", offset=i)
        vals.append(c - 63)
    return vals


def _decode_n(s: str, start: int) -> tuple[int, int]:
    """Return (n, offset of first payload byte)."""
    data = _payload(s, start)
    if not data:
        raise ParseError("missing vertex count", offset=start)
    if data[0] != 63:
        return data[0], start + 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 36-bit vertex count", offset=start + len(data))
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, start + 8
    if len(data) < 4:
        raise ParseError("truncated 18-bit vertex count", offset=start + len(data))
    n = 0
    for x in data[1:4]:
        n = (n << 6) | x
    return n, start + 4


def _bits_to_chars(bits: list[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i:i + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def _strip(line: str, header: str) -> str:
    line = line.strip()
    if line.startswith(header):
        line = line[len(header):]
    return line


# --------------------------------------------------------------------------
# graph6

def parse_graph6(line: str) -> Multigraph:
    """Decode one graph6 line; edge ids follow the format's bit order."""
    s = _strip(line, ">>graph6<<")
    n, pos = _decode_n(s, 0)
    need = (n * (n - 1) // 2 + 5) // 6
    data = _payload(s, pos)
    if len(data) < need:
        raise ParseError(f"truncated payload: {len(data)} of {need} bytes", offset=pos + len(data))
    if len(data) > need:
        raise ParseError("trailing bytes after payload", offset=pos + need)
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                pairs.append((i, j))
            k += 1
    nbits = n * (n - 1) // 2
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", offset=pos + need - 1)
    return Multigraph.from_pairs(n, pairs)


def write_graph6(G: Multigraph) -> str:
    if not G.is_simple():
        raise GraphError("graph6 cannot encode parallel edges")
    adj = {(min(e.a, e.b), max(e.a, e.b)) for e in G.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    return _encode_n(G.n) + _bits_to_chars(bits)


# --------------------------------------------------------------------------
# sparse6

def parse_sparse6(line: str) -> Multigraph:
    """Decode one sparse6 line; edge ids follow encounter order."""
    s = _strip(line, ">>sparse6<<")
    if not s.startswith(":"):
        raise ParseError("sparse6 must start with ':'", offset=0)
    n, pos = _decode_n(s, 1)
    data = _payload(s, pos)
    k = max(1, (n - 1).bit_length())
    bits = [(x >> (5 - i)) & 1 for x in data for i in range(6)]
    pairs = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in bits[i + 1:i + 1 + k]:
            x = (x << 1) | t
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x == v:
            raise UnsupportedGraphError(f"loop at vertex {x}", offset=pos + (i - 1) // 6)
        else:
            pairs.append((x, v))
    return Multigraph.from_pairs(n, pairs)


def write_sparse6(G: Multigraph) -> str:
    n = G.n
    k = max(1, (n - 1).bit_length())

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    order = sorted((max(e.a, e.b), min(e.a, e.b)) for e in G.edges)
    bits: list[int] = []
    cur = 0
    for v, u in order:
        if v == cur:
            bits += [0] + enc(u)
        elif v == cur + 1:
            cur = v
            bits += [1] + enc(u)
        else:
            cur = v
            bits += [1] + enc(v) + [0] + enc(u)
    # a 0 bit keeps the padding from decoding as an edge to vertex n-1
    if k < 6 and n == (1 << k) and (-len(bits) % 6) >= k and cur < n - 1:
        bits.append(0)
    bits += [1] * (-len(bits) % 6)
    return ":" + _encode_n(n) + _bits_to_chars(bits)


# --------------------------------------------------------------------------
# edge list

_HEADER = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def parse_edge_list(text: str) -> Multigraph:
    """Parse ``"n m"`` followed by ``m`` lines ``"a b"``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge list", line=1)
    head = _HEADER.match(lines[0])
    if not head:
        raise ParseError(f"bad header {lines[0]!r}", line=1)
    n, m = int(head.group(1)), int(head.group(2))
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edges, found {len(lines) - 1}", line=len(lines))
    pairs = []
    for ln, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"bad edge {raw!r}", line=ln)
        a, b = int(parts[0]), int(parts[1])
        if a >= n or b >= n:
            raise ParseError(f"vertex out of range in {raw!r}", line=ln)
        if a == b:
            raise ParseError(f"loop at vertex {a}", line=ln)
        pairs.append((a, b))
    return Multigraph.from_pairs(n, pairs)


def write_edge_list(G: Multigraph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{e.a} {e.b}" for e in G.edges])


# --------------------------------------------------------------------------
# streams

def parse_any(text: str) -> Multigraph:
    """Dispatch a single graph record on its leading characters."""
    s = text.strip()
    if s.startswith(":") or s.startswith(">>sparse6<<"):
        return parse_sparse6(s)
    if _HEADER.match(s.splitlines()[0] if s else ""):
        return parse_edge_list(s)
    return parse_graph6(s)


def write_any(G: Multigraph) -> str:
    """graph6 for simple graphs, sparse6 otherwise."""
    return write_graph6(G) if G.is_simple() else write_sparse6(G)


def read_records(stream: TextIO, fmt: str = "auto") -> Iterator[str]:
    """Yield raw graph records: one line each, or a whole block for edge lists.

    Blank lines and ``#`` comments between records are skipped. An edge-list
    block with a malformed header is yielded as-is so the caller can report it.
    """
    it = iter(stream)
    for raw in it:
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        head = _HEADER.match(line)
        if fmt == "el" or (fmt == "auto" and head):
            if not head:
                yield line
                continue
            block = [line]
            for _ in range(int(head.group(2))):
                nxt = next(it, None)
                if nxt is None:
                    break
                block.append(nxt.rstrip("\r\n"))
            yield "\n".join(block)
        else:
            yield line


def parse_record(record: str, fmt: str = "auto") -> Multigraph:
    if fmt == "g6":
        return parse_graph6(record)
    if fmt == "s6":
        return parse_sparse6(record)
    if fmt == "el":
        return parse_edge_list(record)
    return parse_any(record)
