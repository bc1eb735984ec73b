"""Bundled graph files (the small ADE and affine examples)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .errors import GraphError
from .graph_core import Graph, parse_graph


def graphs_dir() -> Path:
    return Path(resources.files("pathhopf") / "graphs")


def available_fixtures() -> list[str]:
    return sorted(p.stem for p in graphs_dir().glob("*.json"))


def fixture_path(name: str) -> Path:
    """Resolve a bundled graph by stem ("a3") or filename ("a3.json")."""
    stem = name[:-5] if name.endswith(".json") else name
    path = graphs_dir() / f"{stem}.json"
    if not path.is_file():
        raise GraphError(
            f"no bundled graph {name!r}; available: {', '.join(available_fixtures())}"
        )
    return path


def load_fixture(name: str) -> Graph:
    return parse_graph(fixture_path(name).read_text())
