"""graph6 / digraph6 encodings and a plain edge-list format.

Edge-list files look like::

    n m [directed]
    u v
    ...

with exactly ``m`` edge lines, ``0 <= u, v < n`` and ``u != v``. Blank
lines and lines starting with ``#`` are ignored. Only the single-byte size
form of graph6/digraph6 is supported (``n <= 62``).
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Digraph, Graph

MAX_G6_N = 62


def _pack(bits: list[int]) -> bytes:
    bits = bits + [0] * (-len(bits) % 6)
    out = bytearray()
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i:i + 6]:
            chunk = chunk << 1 | b
        out.append(chunk + 63)
    return bytes(out)


def _unpack(body: bytes, nbits: int) -> list[int]:
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    bits = []
    for ch in body:
        if not 63 <= ch <= 126:
            raise ParseError(f"byte {ch!r} outside the printable 63..126 range")
        chunk = ch - 63
        bits.extend(chunk >> (5 - i) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits")
    return bits[:nbits]


def _as_bytes(data: bytes | str) -> bytes:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError:
            raise ParseError("non-ASCII input") from None
    return data.strip()


def _size_byte(n: int) -> bytes:
    if not 1 <= n <= MAX_G6_N:
        raise ValueError(f"graph6 size form supports 1 <= n <= {MAX_G6_N}, got {n}")
    return bytes([n + 63])


def _read_size(data: bytes) -> int:
    if not data:
        raise ParseError("empty input")
    n = data[0] - 63
    if not 1 <= n <= MAX_G6_N:
        raise ParseError(f"bad size byte {data[0]!r} (supported n is 1..{MAX_G6_N})")
    return n


def write_graph6(g: Graph) -> bytes:
    """graph6: upper triangle in column order, six bits per byte offset by 63."""
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    return _size_byte(g.n) + _pack(bits)


def parse_graph6(data: bytes | str) -> Graph:
    data = _as_bytes(data)
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    n = _read_size(data)
    bits = iter(_unpack(data[1:], n * (n - 1) // 2))
    edges = [(i, j) for j in range(1, n) for i in range(j) if next(bits)]
    return Graph.from_edges(n, edges)


def write_digraph6(d: Digraph) -> bytes:
    """digraph6: ``&``, size byte, then the full adjacency matrix row by row."""
    bits = [d.out_adj[i] >> j & 1 for i in range(d.n) for j in range(d.n)]
    return b"&" + _size_byte(d.n) + _pack(bits)


def parse_digraph6(data: bytes | str) -> Digraph:
    data = _as_bytes(data)
    if data.startswith(b">>digraph6<<"):
        data = data[len(b">>digraph6<<"):]
    if not data.startswith(b"&"):
        raise ParseError("digraph6 data must start with '&'")
    n = _read_size(data[1:])
    bits = _unpack(data[2:], n * n)
    arcs = []
    for i in range(n):
        for j in range(n):
            if bits[i * n + j]:
                if i == j:
                    raise ParseError(f"loop at vertex {i}")
                arcs.append((i, j))
    return Digraph.from_arcs(n, arcs)


def parse_edge_list(data: bytes | str) -> Graph | Digraph:
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    except UnicodeDecodeError:
        raise ParseError("input is not valid UTF-8") from None
    lines = [(no, line.split()) for no, line in enumerate(text.splitlines(), start=1)
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise ParseError("missing header line", 1)
    head_no, head = lines[0]
    directed = False
    if len(head) == 3 and head[2] == "directed":
        directed = True
        head = head[:2]
    if len(head) != 2:
        raise ParseError("header must be 'n m' or 'n m directed'", head_no)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", head_no) from None
    if n < 1 or m < 0:
        raise ParseError(f"need n >= 1 and m >= 0, got n={n}, m={m}", head_no)
    body = lines[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else head_no
        raise ParseError(f"header declares {m} edges but {len(body)} follow", line)
    seen: set[tuple[int, int]] = set()
    for no, tokens in body:
        if len(tokens) != 2:
            raise ParseError("edge line must be 'u v'", no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError("vertex labels must be integers", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", no)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", no)
        seen.add(key)
    if directed:
        return Digraph.from_arcs(n, seen)
    return Graph.from_edges(n, seen)


def write_edge_list(g: Graph | Digraph) -> bytes:
    if isinstance(g, Graph):
        pairs, header = g.edges(), f"{g.n} {g.num_edges}"
    else:
        pairs, header = g.arcs(), f"{g.n} {g.num_arcs} directed"
    return ("\n".join([header] + [f"{u} {v}" for u, v in pairs]) + "\n").encode("ascii")
