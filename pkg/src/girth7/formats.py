"""graph6 and multigraph-JSON readers/writers."""

from __future__ import annotations

import json
from typing import Any

from .errors import DanglingArcReference, LoopRejected, MalformedGraph6, SchemaViolation, VertexOutOfRange
from .graph import MultiGraph, SimpleGraph, new_graph
from .schemes import DihedralScheme

_HEADER = ">>graph6<<"
_MAX_N = (1 << 18) - 1


def _encode_n(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise ValueError(f"graph6 supports 0 <= n < 2^18, got {n}")
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def write_graph6(g: SimpleGraph) -> str:
    """Encode ``g`` as a header-free graph6 string (no trailing newline)."""
    bits = []
    adj = [set(a) for a in g.adjacency]
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if i in adj[j] else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return _encode_n(g.n) + "".join(chars)


def parse_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise MalformedGraph6("byte outside the graph6 range 63..126")
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise MalformedGraph6("graph6 orders >= 2^18 are not supported")
        if len(data) < 4:
            raise MalformedGraph6("truncated order field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        if n <= 62:
            raise MalformedGraph6("non-canonical long order field")
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    for pad in range(nbits, 6 * len(body)):
        if (body[pad // 6] >> (5 - pad % 6)) & 1:
            raise MalformedGraph6("non-zero padding bits")
    return new_graph(n, edges)


def write_multigraph_json(base: MultiGraph, scheme: DihedralScheme | None = None) -> str:
    payload: dict[str, Any] = {"n": base.n, "edges": [list(e) for e in base.edges]}
    if scheme is not None:
        payload["scheme"] = {str(v): list(scheme.rotation[v]) for v in range(base.n)}
    return json.dumps(payload, sort_keys=True)


def _as_int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaViolation(f"{what} must be an integer, got {x!r}")
    return x


def parse_multigraph_json(text: str | dict) -> tuple[MultiGraph, DihedralScheme | None]:
    try:
        obj = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise SchemaViolation('expected an object with "n" and "edges"')
    n = _as_int(obj["n"], "n")
    if n < 0:
        raise SchemaViolation("n must be non-negative")
    if not isinstance(obj["edges"], list):
        raise SchemaViolation('"edges" must be a list')
    edges = []
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise SchemaViolation(f"edge {e!r} is not a pair")
        edges.append((_as_int(e[0], "endpoint"), _as_int(e[1], "endpoint")))
    try:
        base = MultiGraph(n, tuple(edges))
    except (VertexOutOfRange, LoopRejected) as exc:
        raise SchemaViolation(str(exc)) from exc
    raw = obj.get("scheme")
    if raw is None:
        return base, None
    if not isinstance(raw, dict):
        raise SchemaViolation('"scheme" must be an object keyed by vertex')
    rotation: list[tuple[int, ...] | None] = [None] * n
    for key, arcs in raw.items():
        try:
            v = int(key)
        except ValueError as exc:
            raise SchemaViolation(f"scheme key {key!r} is not a vertex") from exc
        if not 0 <= v < n:
            raise SchemaViolation(f"scheme key {key!r} out of range")
        if not isinstance(arcs, list):
            raise SchemaViolation(f"scheme entry for {v} must be a list")
        arcs = tuple(_as_int(a, "arc id") for a in arcs)
        for a in arcs:
            if not 0 <= a < 2 * base.m:
                raise DanglingArcReference(f"arc {a} at vertex {v} does not exist")
        rotation[v] = arcs
    if any(r is None for r in rotation):
        missing = [v for v, r in enumerate(rotation) if r is None]
        raise SchemaViolation(f"scheme is missing vertices {missing}")
    return base, DihedralScheme.for_base(base, rotation)  # type: ignore[arg-type]
