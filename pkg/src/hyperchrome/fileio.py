"""HypergraphFile: DIMACS-style text format.

    c optional comment lines
    p h <k> <n> <m>
    e v1 ... vk        (m lines, 1-based vertex indices)

Serialization is normalized (sorted edges, sorted vertices, no comments), so
parse-serialize-parse round-trips byte-identically.
"""

from .core import new_hypergraph


def parse_hypergraph(text):
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(fields) != 5 or fields[1] != "h":
                raise ValueError(f"line {lineno}: header must be 'p h <k> <n> <m>'")
            header = (int(fields[2]), int(fields[3]), int(fields[4]))
        elif fields[0] == "e":
            if header is None:
                raise ValueError(f"line {lineno}: edge before header")
            try:
                verts = [int(x) for x in fields[1:]]
            except ValueError:
                raise ValueError(f"line {lineno}: bad vertex index") from None
            if any(v < 1 for v in verts):
                raise ValueError(f"line {lineno}: vertex indices are 1-based")
            edges.append(tuple(v - 1 for v in verts))
        else:
            raise ValueError(f"line {lineno}: unknown line type {fields[0]!r}")
    if header is None:
        raise ValueError("missing 'p h' header")
    k, n, m = header
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, found {len(edges)}")
    return new_hypergraph(n, k, edges)


def serialize_hypergraph(G):
    lines = [f"p h {G.k} {G.n} {len(G.edges)}"]
    for e in G.edges:
        lines.append("e " + " ".join(str(v + 1) for v in e))
    return "\n".join(lines) + "\n"
