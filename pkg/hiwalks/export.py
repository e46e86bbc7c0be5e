# coding=utf-8
"""Text, JSON and DOT renderings of walk trees.

Contents
--------

:node_id: DOT identifier of an address.
:signed_label: ``+(w,w*2)`` style rendering of a node.
:tree_to_text: Indented listing, one node per line.
:tree_to_dict: JSON-ready dictionary.
:tree_to_json: Serialized ``tree_to_dict``.
:tree_to_dot: Graphviz digraph.
:write_tree: Render a tree in a named format to a file.

"""

import json

from . import ordinal as ords
from .walks import classify_nodes, format_address

FORMATS = ("text", "json", "dot")


def node_id(x):
    return "r" + "".join("_%i" % i for i in x)


def signed_label(sign, label):
    return "%s%s" % ("+" if sign > 0 else "-", ords.format_tuple(label))


def tree_to_text(tree):
    """One line per node in preorder, indented by depth.

    Terminal nodes end with ``*``.
    """
    lines = []
    for x, (sign, label) in tree.nodes.items():
        line = "%s%s %s" % ("  " * len(x), format_address(x),
                            signed_label(sign, label))
        if tree.is_terminal(x):
            line += " *"
        lines.append(line)
    return "\n".join(lines) + "\n"


def tree_to_dict(tree, classes=None):
    if classes is None:
        classes = classify_nodes(tree)
    sign, root = tree.root
    return {
        "n": tree.n,
        "sign": sign,
        "root": [str(x) for x in root],
        "truncated": tree.truncated,
        "nodes": [{
            "address": list(x),
            "sign": node_sign,
            "label": [str(v) for v in label],
            "flags": sorted(classes[x]),
        } for x, (node_sign, label) in tree.nodes.items()],
    }


def tree_to_json(tree, classes=None):
    return json.dumps(tree_to_dict(tree, classes), indent=4,
                      separators=(",", ": "))


def tree_to_dot(tree, name="walk"):
    """Render ``tree`` as a Graphviz digraph.

    Positive nodes are blue and negative ones red; terminal nodes are boxes.
    """
    lines = ["digraph %s {" % name]
    for x, (sign, label) in tree.nodes.items():
        lines.append('  %s[label="%s", color=%s, shape=%s];' % (
            node_id(x), signed_label(sign, label),
            "blue" if sign > 0 else "red",
            "box" if tree.is_terminal(x) else "ellipse"))
    for x in tree.nodes:
        if x:
            lines.append("  %s -> %s;" % (node_id(x[:-1]), node_id(x)))
    lines.append("}")
    return "\n".join(lines) + "\n"


RENDERERS = {
    "text": tree_to_text,
    "json": lambda tree: tree_to_json(tree) + "\n",
    "dot": tree_to_dot,
}


def render(tree, fmt="text"):
    if fmt not in RENDERERS:
        raise ValueError("unknown format %r" % fmt)
    return RENDERERS[fmt](tree)


def write_tree(tree, path, fmt="text"):
    with open(path, "w") as handle:
        handle.write(render(tree, fmt))
