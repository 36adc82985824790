"""Line-oriented cache for extremal search results.

One record per line, tab-separated:

    kind <TAB> key <TAB> param <TAB> value <TAB> status <TAB> witness

where kind is "ex" or "ramsey", key is the canonical encoding of H, param is
n (ex) or t (ramsey), status is "exact" or "lower_bound", and witness encodes
a hypergraph as n:k:v1,v2,v3/v4,v5,v6 with 1-based vertices.  Unparseable
lines are evicted on load; semantic revalidation happens at lookup time in
the extremal module.  Writes replace the whole file atomically.
"""

import os
import tempfile
from dataclasses import dataclass

from .core import Hypergraph, new_hypergraph


@dataclass(frozen=True)
class ResultRecord:
    kind: str       # "ex" | "ramsey"
    key: str        # canonical encoding of H
    param: int      # n for ex, t for ramsey
    value: int
    status: str     # "exact" | "lower_bound"
    witness: Hypergraph


def encode_graph(G):
    body = "/".join(",".join(str(v + 1) for v in e) for e in G.edges)
    return f"{G.n}:{G.k}:{body}"


def decode_graph(text):
    head_n, head_k, body = text.split(":")
    n, k = int(head_n), int(head_k)
    edges = []
    if body:
        for part in body.split("/"):
            edges.append(tuple(int(v) - 1 for v in part.split(",")))
    return new_hypergraph(n, k, edges)


class ResultCache:
    """Single-writer cache; the whole file is rewritten on every put."""

    def __init__(self, path):
        self.path = path
        self.records = {}
        self._load()

    def _load(self):
        if not self.path or not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                try:
                    kind, key, param, value, status, witness = line.split("\t")
                    if kind not in ("ex", "ramsey"):
                        raise ValueError(kind)
                    if status not in ("exact", "lower_bound"):
                        raise ValueError(status)
                    rec = ResultRecord(kind, key, int(param), int(value),
                                       status, decode_graph(witness))
                except (ValueError, IndexError):
                    continue  # corrupt line: evict by not loading it
                self.records[(rec.kind, rec.key, rec.param)] = rec

    def get(self, kind, key, param):
        return self.records.get((kind, key, param))

    def put(self, rec):
        self.records[(rec.kind, rec.key, rec.param)] = rec
        self._write()

    def evict(self, kind, key, param):
        if (kind, key, param) in self.records:
            del self.records[(kind, key, param)]
            self._write()

    def _write(self):
        if not self.path:
            return
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cache-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                for rec in sorted(self.records.values(),
                                  key=lambda r: (r.kind, r.key, r.param)):
                    fh.write("\t".join((rec.kind, rec.key, str(rec.param),
                                        str(rec.value), rec.status,
                                        encode_graph(rec.witness))) + "\n")
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
