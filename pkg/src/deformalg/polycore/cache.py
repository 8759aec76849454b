"""On-disk cache of reduced Groebner bases.

One text file per (ring, order, generator-content) key; polynomials are
stored in the canonical ASCII format so entries are human-auditable and
round-trip through the parser.  Writes go through a temp file + rename so
concurrent writers never expose a partial entry; reads are lock-free.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

from .orders import MonomialOrder
from .parse import parse_poly
from .ring import Ring


class GBCache:
    def __init__(self, directory):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(ring: Ring, order: MonomialOrder, gens) -> str:
        h = hashlib.sha256()
        h.update(ring.signature().encode())
        h.update(b"|")
        h.update(order.tag().encode())
        for s in sorted(str(g) for g in gens):
            h.update(b"|")
            h.update(s.encode())
        return h.hexdigest()

    def _path(self, key: str) -> Path:
        return self.dir / f"gb_{key}.txt"

    def get(self, ring: Ring, order: MonomialOrder, gens):
        path = self._path(self.key(ring, order, gens))
        if not path.exists():
            self.misses += 1
            return None
        lines = path.read_text().splitlines()
        if not lines or lines[0] != ring.signature():
            self.misses += 1
            return None
        self.hits += 1
        return [parse_poly(s, ring) for s in lines[1:] if s.strip()]

    def put(self, ring: Ring, order: MonomialOrder, gens, basis):
        path = self._path(self.key(ring, order, gens))
        text = "\n".join([ring.signature()] + [str(g) for g in basis]) + "\n"
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
