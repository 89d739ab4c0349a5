"""Follower network over users who repeatedly shared scored links.

Edges point follower -> followee.  The graph keeps users with at least
``min_links`` scored shares and is restricted to the largest connected
component of its undirected projection; exports carry follower_count so
external tools can size nodes by audience.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape, quoteattr

from .errors import DataError
from .exposure import UserProfile

DEFAULT_MIN_LINKS = 2

HIGH_SHARER = "high_sharer"
LOW_SHARER = "low_sharer"
UNCLASSIFIED = "unclassified"


@dataclass
class GraphNode:
    user_id: str
    follower_count: int
    profile: UserProfile
    node_class: str = UNCLASSIFIED


@dataclass
class FollowerGraph:
    nodes: dict[str, GraphNode] = field(default_factory=dict)
    edges: list[tuple[str, str]] = field(default_factory=list)
    dropped_edges: int = 0

    def __post_init__(self):
        for follower, followee in self.edges:
            if follower not in self.nodes or followee not in self.nodes:
                raise DataError(
                    f"edge {follower}->{followee} references a missing node"
                )


def read_followers_csv(path: str | Path) -> list[tuple[str, str]]:
    """Edge list follower_id,followee_id; a header row is detected and
    skipped when its cells are exactly those column names."""
    edges: list[tuple[str, str]] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if not row:
                continue
            if len(row) != 2:
                raise DataError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            if lineno == 1 and [v.strip().lower() for v in row] == [
                "follower_id",
                "followee_id",
            ]:
                continue
            edges.append((row[0], row[1]))
    return edges


def _components(
    members: Iterable[str], adjacency: dict[str, set[str]]
) -> list[list[str]]:
    seen: set[str] = set()
    components: list[list[str]] = []
    for start in sorted(members):
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        component = []
        while queue:
            node = queue.popleft()
            component.append(node)
            for neighbor in sorted(adjacency.get(node, ())):
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
        components.append(sorted(component))
    return components


def build_follower_graph(
    edges: Sequence[tuple[str, str]],
    profiles: dict[str, UserProfile],
    min_links: int = DEFAULT_MIN_LINKS,
) -> FollowerGraph:
    """Filter to users with >= min_links scored shares, then keep the
    largest connected component of the undirected projection.

    Edges touching excluded or unknown users are dropped and counted.
    Component-size ties keep the component whose smallest user_id sorts
    first.  An empty result is a valid empty graph.
    """
    eligible = {
        user_id
        for user_id, profile in profiles.items()
        if profile.scored_shares >= min_links
    }
    kept: list[tuple[str, str]] = []
    dropped = 0
    for follower, followee in edges:
        if follower in eligible and followee in eligible and follower != followee:
            kept.append((follower, followee))
        else:
            dropped += 1
    if not eligible:
        return FollowerGraph(nodes={}, edges=[], dropped_edges=dropped)
    adjacency: dict[str, set[str]] = {u: set() for u in eligible}
    for follower, followee in kept:
        adjacency[follower].add(followee)
        adjacency[followee].add(follower)
    # _components discovers components in order of their smallest member,
    # so keeping the first strictly-largest one applies the tie rule.
    components = _components(eligible, adjacency)
    best = components[0]
    for component in components[1:]:
        if len(component) > len(best):
            best = component
    in_lcc = set(best)
    nodes = {
        u: GraphNode(
            user_id=u,
            follower_count=profiles[u].follower_count,
            profile=profiles[u],
        )
        for u in best
    }
    lcc_edges = [
        (follower, followee)
        for follower, followee in kept
        if follower in in_lcc and followee in in_lcc
    ]
    return FollowerGraph(nodes=nodes, edges=lcc_edges, dropped_edges=dropped)


def classify_nodes(graph: FollowerGraph) -> FollowerGraph:
    """Assign each node's sharing class in place.

    high_sharer: >= 2 high-bucket shares and no low-bucket shares.
    low_sharer: >= 2 low-bucket shares and no high-bucket shares.
    Everyone else stays unclassified.
    """
    for node in graph.nodes.values():
        counts = node.profile.bucket_counts
        is_high = counts["high"] >= 2 and counts["low"] == 0
        is_low = counts["low"] >= 2 and counts["high"] == 0
        assert not (is_high and is_low)
        if is_high:
            node.node_class = HIGH_SHARER
        elif is_low:
            node.node_class = LOW_SHARER
        else:
            node.node_class = UNCLASSIFIED
    return graph


def _graphml(graph: FollowerGraph) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="d0" for="node" attr.name="user_id" attr.type="string"/>',
        '  <key id="d1" for="node" attr.name="follower_count" attr.type="long"/>',
        '  <key id="d2" for="node" attr.name="class" attr.type="string"/>',
        '  <graph id="followers" edgedefault="directed">',
    ]
    for user_id in sorted(graph.nodes):
        node = graph.nodes[user_id]
        lines.append(f"    <node id={quoteattr(user_id)}>")
        lines.append(f"      <data key=\"d0\">{escape(user_id)}</data>")
        lines.append(f"      <data key=\"d1\">{node.follower_count}</data>")
        lines.append(f"      <data key=\"d2\">{escape(node.node_class)}</data>")
        lines.append("    </node>")
    for follower, followee in sorted(graph.edges):
        lines.append(
            f"    <edge source={quoteattr(follower)} target={quoteattr(followee)}/>"
        )
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def _dot_quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(graph: FollowerGraph) -> str:
    lines = ["digraph followers {"]
    for user_id in sorted(graph.nodes):
        node = graph.nodes[user_id]
        lines.append(
            f"  {_dot_quote(user_id)} [follower_count={node.follower_count}, "
            f"class={_dot_quote(node.node_class)}];"
        )
    for follower, followee in sorted(graph.edges):
        lines.append(f"  {_dot_quote(follower)} -> {_dot_quote(followee)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(graph: FollowerGraph, format: str) -> str:
    """Serialize to "graphml" or "dot"; nodes carry user_id,
    follower_count (the size attribute), and class."""
    if format == "graphml":
        return _graphml(graph)
    if format == "dot":
        return _dot(graph)
    raise DataError(f"unknown graph format {format!r} (expected graphml or dot)")
