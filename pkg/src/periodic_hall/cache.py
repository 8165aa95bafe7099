"""On-disk JSON cache for computed tables.

Entries are keyed by a SHA-256 of the quiver, q, the table name, any extra
parameters and :data:`CODE_VERSION`.  Writes go through a temporary file and
``os.replace`` so readers never see a partial blob.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

CODE_VERSION = "periodic-hall/1"

log = logging.getLogger(__name__)


class Cache:
    def __init__(self, root):
        self.root = Path(root)
        self.hits = 0
        self.misses = 0

    def key(self, quiver, q, table, extra=None):
        material = json.dumps({"quiver": quiver.to_text(), "q": q, "table": table,
                               "extra": extra, "version": CODE_VERSION}, sort_keys=True)
        return hashlib.sha256(material.encode()).hexdigest()

    def path(self, key):
        return self.root / f"{key}.json"

    def load(self, quiver, q, table, extra=None):
        key = self.key(quiver, q, table, extra)
        p = self.path(key)
        if not p.exists():
            self.misses += 1
            return None
        try:
            blob = json.loads(p.read_text())
            if blob.get("version") != CODE_VERSION or blob.get("key") != key:
                self.misses += 1
                return None
            data = blob["data"]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("discarding corrupt cache entry %s (%s); recomputing", p.name, exc)
            try:
                p.unlink()
            except OSError:
                pass
            self.misses += 1
            return None
        self.hits += 1
        return data

    def store(self, quiver, q, table, data, extra=None):
        key = self.key(quiver, q, table, extra)
        self.root.mkdir(parents=True, exist_ok=True)
        blob = json.dumps({"version": CODE_VERSION, "key": key, "data": data}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(blob)
            os.replace(tmp, self.path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, quiver, q, table, compute, extra=None):
        data = self.load(quiver, q, table, extra)
        if data is None:
            data = compute()
            self.store(quiver, q, table, data, extra)
        return data
