"""Bit-exact graph6 encoding and decoding."""
from wsat.core.base import CapacityError, Graph6Error
from wsat.graph.base import MAX_VERTICES, Graph

GRAPH6_HEADER = ">>graph6<<"
_OFFSET = 63
_LONG_MARKER = 126


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + _OFFSET)
    return chr(_LONG_MARKER) + "".join(
        chr(((n >> shift) & 0x3F) + _OFFSET) for shift in (12, 6, 0)
    )


def graph6_encode(G: Graph) -> str:
    """Encode `G` as graph6 text (no header, no trailing newline)."""
    chunks = []
    value = 0
    width = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            width += 1
            if width == 6:
                chunks.append(chr(value + _OFFSET))
                value = 0
                width = 0
    if width:
        chunks.append(chr((value << (6 - width)) + _OFFSET))
    return _encode_order(G.n) + "".join(chunks)


def _sextet(text: str, position: int) -> int:
    code = ord(text[position]) - _OFFSET
    if not 0 <= code <= 63:
        raise Graph6Error(
            f"Invalid graph6 byte {text[position]!r} at position {position}."
        )
    return code


def graph6_decode(text: str) -> Graph:
    """Decode graph6 text; rejects bad headers, truncation and padding."""
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise Graph6Error("Empty graph6 string.")

    if ord(text[0]) == _LONG_MARKER:
        if len(text) < 4 or ord(text[1]) == _LONG_MARKER:
            raise Graph6Error("Malformed graph6 header.")
        n = 0
        for position in range(1, 4):
            n = (n << 6) | _sextet(text, position)
        offset = 4
    else:
        n = _sextet(text, 0)
        if n > 62:
            raise Graph6Error(f"Malformed graph6 header byte {text[0]!r}.")
        offset = 1
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(
            f"capacity exceeded: graph6 declares {n} vertices, supported 1..{MAX_VERTICES}"
        )

    n_bits = n * (n - 1) // 2
    n_chunks = (n_bits + 5) // 6
    payload = text[offset:]
    if len(payload) < n_chunks:
        raise Graph6Error(
            f"Truncated graph6 payload: expected {n_chunks} bytes, got {len(payload)}."
        )
    if len(payload) > n_chunks:
        raise Graph6Error(
            f"Trailing data after graph6 payload: expected {n_chunks} bytes, got {len(payload)}."
        )

    bits = 0
    for position in range(n_chunks):
        bits = (bits << 6) | _sextet(payload, position)
    padding = n_chunks * 6 - n_bits
    if bits & ((1 << padding) - 1):
        raise Graph6Error("Nonzero padding bits in graph6 payload.")
    bits >>= padding

    adj = [0] * n
    position = n_bits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> position & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            position -= 1
    return Graph(n, tuple(adj))
