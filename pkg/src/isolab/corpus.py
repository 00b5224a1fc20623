"""Access to the bundled corpus of named graphs (data/named.g6).

Lookup is case- and punctuation-insensitive: 'Moebius-Kantor', 'moebius
kantor' and 'MoebiusKantor' all resolve to the same entry.
"""

from __future__ import annotations

import importlib.resources

from .graph6 import iter_graph6_file

__all__ = ["corpus_names", "load_named", "load_all"]

_cache = None


def _normalize(name):
    return "".join(c for c in name.lower() if c.isalnum())


def _load():
    global _cache
    if _cache is None:
        ref = importlib.resources.files("isolab").joinpath("data/named.g6")
        text = ref.read_text(encoding="ascii")
        entries = {}
        order = []
        for name, g in iter_graph6_file(text.splitlines()):
            if not name:
                raise ValueError("corpus entry without a name comment")
            key = _normalize(name)
            if key in entries:
                raise ValueError(f"duplicate corpus entry {name!r}")
            entries[key] = g
            order.append(g.name)
        _cache = (entries, order)
    return _cache


def corpus_names():
    """Display names of all bundled graphs, in file order."""
    return list(_load()[1])


def load_named(name):
    """Load a bundled graph by (fuzzy) name; raises KeyError if unknown.

    Exact normalized match wins; otherwise a unique prefix match (so
    'petersen' finds 'Petersen graph') is accepted.
    """
    entries, order = _load()
    key = _normalize(name)
    if key in entries:
        return entries[key]
    hits = [k for k in entries if k.startswith(key)]
    if len(hits) == 1:
        return entries[hits[0]]
    raise KeyError(
        f"no corpus graph named {name!r}; available: {', '.join(order)}"
    )


def load_all():
    """All bundled graphs as a name -> Graph dict (display names)."""
    entries, order = _load()
    return {g.name: g for g in entries.values()}
