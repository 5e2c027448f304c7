"""Canonical file formats.

The JSON graph format is the interchange unit for every CLI command:

    {"vertex_count": N,
     "edges": [[u, v], ...],          # each ascending, sorted lexicographically
     "coords": {"0": {"i": 1, "j": 7}, ...}}   # optional

Serialization is canonical (sorted keys, fixed separators, trailing
newline) so identical values produce identical bytes and files round-trip
exactly.  DOT and GraphML exports carry the same vertex/edge multiset plus
coordinates and labels as attributes; they are write-only formats here.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from typing import Any

from .certificate import SnarkCertificate
from .graph import Graph, GraphError, VertexCoord
from .labeling import CordialityReport, Labeling

_COORD_KEYS = ("i", "j", "k", "l", "m")


def canonical_dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def coord_to_dict(coord: VertexCoord) -> dict[str, Any]:
    if coord.apex:
        return {"apex": True}
    return {key: value for key in _COORD_KEYS if (value := getattr(coord, key)) is not None}


def coord_from_dict(data: dict[str, Any]) -> VertexCoord:
    if data.get("apex"):
        return VertexCoord(apex=True)
    return VertexCoord(**{key: data[key] for key in _COORD_KEYS if key in data})


def graph_to_dict(g: Graph, include_coords: bool = False) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "vertex_count": g.vertex_count,
        "edges": [list(e) for e in g.edges],
    }
    if include_coords and g.coords:
        payload["coords"] = {
            str(v): coord_to_dict(g.coords[v]) for v in sorted(g.coords)
        }
    return payload


def graph_to_json(g: Graph, include_coords: bool = False) -> str:
    return canonical_dumps(graph_to_dict(g, include_coords))


def graph_from_dict(data: dict[str, Any]) -> Graph:
    try:
        vertex_count = data["vertex_count"]
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph payload: {exc}") from exc
    coords = None
    if "coords" in data:
        coords = {
            int(v): coord_from_dict(c) for v, c in data["coords"].items()
        }
    return Graph(vertex_count, edges, coords)


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


def labeling_to_dict(labeling: Labeling) -> dict[str, Any]:
    return {
        "vertex_labels": list(labeling.vertex_labels),
        "edge_labels": list(labeling.edge_labels),
    }


def labeling_to_json(labeling: Labeling) -> str:
    return canonical_dumps(labeling_to_dict(labeling))


def labeling_from_dict(data: dict[str, Any]) -> Labeling:
    try:
        return Labeling(
            tuple(int(x) for x in data["vertex_labels"]),
            tuple(int(x) for x in data["edge_labels"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed labeling payload: {exc}") from exc


def labeling_from_json(text: str) -> Labeling:
    return labeling_from_dict(json.loads(text))


def report_to_dict(report: CordialityReport) -> dict[str, Any]:
    return asdict(report)


def report_to_json(report: CordialityReport) -> str:
    return canonical_dumps(report_to_dict(report))


def certificate_to_dict(cert: SnarkCertificate) -> dict[str, Any]:
    """Deterministic certificate payload.

    Wall-clock time is deliberately left out so repeated runs are
    byte-identical; callers wanting timings read ``search_stats`` directly.
    """
    return {
        "is_cubic": cert.is_cubic,
        "is_connected": cert.is_connected,
        "bridge_edges": [list(e) for e in cert.bridge_edges],
        "girth": None if cert.girth == float("inf") else cert.girth,
        "cyclic_edge_connectivity_ge_4": cert.cyclic_edge_connectivity_ge_4,
        "three_edge_colorable": cert.three_edge_colorable,
        "is_snark": cert.is_snark,
        "unchecked": list(cert.unchecked),
        "search_stats": {
            "coloring_decisions": cert.search_stats.coloring_decisions,
            "coloring_forced": cert.search_stats.coloring_forced,
            "cut_candidates": cert.search_stats.cut_candidates,
        },
    }


def certificate_to_json(cert: SnarkCertificate) -> str:
    return canonical_dumps(certificate_to_dict(cert))


def _dot_vertex_attrs(g: Graph, v: int, labeling: Labeling | None) -> str:
    attrs: list[str] = []
    if labeling is not None:
        fill = "black" if labeling.vertex_labels[v] == 1 else "white"
        font = "white" if fill == "black" else "black"
        attrs.append(f'style=filled fillcolor={fill} fontcolor={font}')
    coord = (g.coords or {}).get(v)
    if coord is not None:
        if coord.apex:
            attrs.append('apex="1"')
        else:
            attrs.append(f'block="{coord.i}" slot="{coord.j}"')
    return (" [" + " ".join(attrs) + "]") if attrs else ""


def _copy_cluster_key(coord: VertexCoord | None) -> tuple[int, ...] | None:
    if coord is None or coord.apex:
        return None
    if coord.l is not None and coord.m is not None:
        return (coord.l, coord.m)
    if coord.k is not None:
        return (coord.k,)
    return None


def graph_to_dot(g: Graph, labeling: Labeling | None = None, name: str = "g") -> str:
    """DOT text: label 0 renders white, label 1 black; copies become clusters."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    clusters: dict[tuple[int, ...], list[int]] = {}
    loose: list[int] = []
    for v in range(g.vertex_count):
        key = _copy_cluster_key((g.coords or {}).get(v))
        if key is None:
            loose.append(v)
        else:
            clusters.setdefault(key, []).append(v)
    for v in loose:
        lines.append(f"  {v}{_dot_vertex_attrs(g, v, labeling)};")
    for key in sorted(clusters):
        tag = "_".join(str(x) for x in key)
        lines.append(f"  subgraph cluster_{tag} {{")
        lines.append(f'    label="copy {tag}";')
        for v in clusters[key]:
            lines.append(f"    {v}{_dot_vertex_attrs(g, v, labeling)};")
        lines.append("  }")
    edge_map = labeling.edge_label_map(g) if labeling is not None else None
    for u, v in g.edges:
        if edge_map is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{edge_map[(u, v)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_GRAPHML_KEYS = (
    ("d_block", "node", "block", "int"),
    ("d_slot", "node", "slot", "int"),
    ("d_copy", "node", "copy", "int"),
    ("d_arm", "node", "arm", "int"),
    ("d_pos", "node", "position", "int"),
    ("d_apex", "node", "apex", "boolean"),
    ("d_vlabel", "node", "vertex_label", "int"),
    ("d_elabel", "edge", "edge_label", "int"),
)


def graph_to_graphml(g: Graph, labeling: Labeling | None = None) -> str:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
    ]
    for key_id, domain, name, kind in _GRAPHML_KEYS:
        out.append(
            f'  <key id="{key_id}" for="{domain}" attr.name="{name}" attr.type="{kind}"/>'
        )
    out.append('  <graph id="G" edgedefault="undirected">')
    for v in range(g.vertex_count):
        data = []
        coord = (g.coords or {}).get(v)
        if coord is not None:
            if coord.apex:
                data.append('<data key="d_apex">true</data>')
            else:
                data.append(f'<data key="d_block">{coord.i}</data>')
                data.append(f'<data key="d_slot">{coord.j}</data>')
                if coord.l is not None:
                    data.append(f'<data key="d_arm">{coord.l}</data>')
                    data.append(f'<data key="d_pos">{coord.m}</data>')
                elif coord.k is not None:
                    data.append(f'<data key="d_copy">{coord.k}</data>')
        if labeling is not None:
            data.append(f'<data key="d_vlabel">{labeling.vertex_labels[v]}</data>')
        if data:
            out.append(f'    <node id="n{v}">' + "".join(data) + "</node>")
        else:
            out.append(f'    <node id="n{v}"/>')
    edge_map = labeling.edge_label_map(g) if labeling is not None else None
    for idx, (u, v) in enumerate(g.edges):
        if edge_map is None:
            out.append(f'    <edge id="e{idx}" source="n{u}" target="n{v}"/>')
        else:
            out.append(
                f'    <edge id="e{idx}" source="n{u}" target="n{v}">'
                f'<data key="d_elabel">{edge_map[(u, v)]}</data></edge>'
            )
    out.append("  </graph>")
    out.append("</graphml>")
    return "\n".join(out) + "\n"
