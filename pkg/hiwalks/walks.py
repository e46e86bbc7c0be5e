# coding=utf-8
"""Higher-dimensional walks and the machinery on their trees.

A walk starts from a signed tuple ``(α, γ0, ..., γ(n-1))`` and builds a
finite full n-tree. At a node labeled ``β`` the tuple is split as
``ι + τ`` where ``τ`` is the longest final segment that is a valid index.
With ``j = len(ι) - 1`` and ``μ = min(C(τ) ∖ β[j])`` the node is terminal
when ``μ`` does not exist; otherwise child ``i`` drops position ``ℓ(i)`` of
``ι + (μ,) + τ``, where ``ℓ`` enumerates ``{1, ..., n+1} ∖ {j+1}`` in
increasing order, and flips the sign by ``(-1)^(j+ℓ(i))``.

Addresses are tuples over ``range(n)``; labels are tuples of ordinals whose
first entry is always ``α``. Signs are ``+1`` and ``-1``.

Contents
--------

:tau_iota: Split a tuple into ``ι``, ``τ`` and ``j``.
:walk: Build the signed trace tree of a tuple.
:truncated_walk: The walk that also stops once ``α ∈ C(τ)`` and ``τ`` is
    the whole tail.
:SignedTraceTree: The labeled tree of a walk.
:TreeShape: An unlabeled tree with terminal marks.
:NodeClass: Per-node flags.
:extreme_set: Nodes whose ``τ`` has full length.
:lower_trace: The lower trace of a node.
:lower_traces: The lower trace of every node.
:stretch_address: Shift every entry of an address.
:stretch_tree: Stretch an m-tree into an n-tree.
:boundary: Signed terminal nodes.
:pair_boundaries: Cancel the boundaries of a family of walks in pairs.
:classify_nodes: Flag terminal, splitting, spectacled, bad and extreme nodes.

"""

import collections
import logging

from . import ordinal as ords
from .errors import ResourceCapError, TupleError
from .matching import maximum_matching
from .ordinal import ZERO

LOG = logging.getLogger("hiwalks.walks")

DEFAULT_CAP = 1000000

TERMINAL = "terminal"
SPLITTING = "splitting"
SPECTACLED = "spectacled"
BAD = "bad"
EXTREME = "extreme"
FLAGS = (BAD, EXTREME, SPECTACLED, SPLITTING, TERMINAL)


def _decompose(seq, labels):
    k = len(labels)
    club = seq.domain
    while k > 1 and club.member(labels[k - 1]):
        k -= 1
        club = seq.club_of(labels[k:])
    return labels[:k], labels[k:], k - 1, club


def tau_iota(seq, labels):
    """Split ``labels`` as ``ι + τ``.

    Returns:
        Tuple[tuple, tuple, int]: ``(ι, τ, j)`` with ``j = len(ι) - 1``.
    """
    iota, tau, j, _ = _decompose(seq, tuple(labels))
    return iota, tau, j


def format_address(x):
    return "<%s>" % ",".join(str(i) for i in x)


class TreeShape(object):
    """An unlabeled full tree.

    Attributes:
        arity (int): Children per splitting node.
        addresses (FrozenSet[tuple]): Every node.
        terminals (FrozenSet[tuple]): The leaves.
    """

    def __init__(self, arity, addresses, terminals):
        self.arity = arity
        self.addresses = frozenset(addresses)
        self.terminals = frozenset(terminals)

    def splitting(self):
        return self.addresses - self.terminals

    def __len__(self):
        return len(self.addresses)

    def __contains__(self, x):
        return x in self.addresses

    def __eq__(self, other):
        if not isinstance(other, TreeShape):
            return NotImplemented
        return (self.arity, self.addresses, self.terminals) == \
            (other.arity, other.addresses, other.terminals)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.arity, self.addresses, self.terminals))

    def __repr__(self):
        return "TreeShape(arity=%i, nodes=%i, terminals=%i)" % (
            self.arity, len(self.addresses), len(self.terminals))


class SignedTraceTree(object):
    """The tree of a walk with its signed labels.

    Attributes:
        seq (NCSequence): The sequence walked on.
        n (int): Arity; the length of the root's ``γ``.
        nodes (OrderedDict): ``address -> (sign, label)`` in preorder.
        truncated (bool): Built by ``truncated_walk``.
        lower_bound (Ordinal): ``L⁻`` of a truncated walk, else ``None``.
    """

    def __init__(self, seq, n, nodes, terminals, tau_lengths,
                 truncated=False):
        self.seq = seq
        self.n = n
        self.nodes = collections.OrderedDict(sorted(nodes.items()))
        self._terminals = frozenset(terminals)
        self._tau_lengths = dict(tau_lengths)
        self.truncated = truncated
        self.lower_bound = None

    @property
    def root(self):
        return self.nodes[()]

    @property
    def alpha(self):
        return self.nodes[()][1][0]

    def sign(self, x):
        return self.nodes[x][0]

    def label(self, x):
        return self.nodes[x][1]

    def addresses(self):
        return list(self.nodes)

    def is_terminal(self, x):
        return x in self._terminals

    def terminals(self):
        return sorted(self._terminals)

    def tau_length(self, x):
        return self._tau_lengths[x]

    def children(self, x):
        if x not in self.nodes or self.is_terminal(x):
            return []
        return [x + (i,) for i in range(self.n)]

    def parent(self, x):
        """The parent address, or ``None`` at the root."""
        return x[:-1] if x else None

    def prefixes(self, x, proper=False):
        """Addresses from the root down to ``x``."""
        end = len(x) if proper else len(x) + 1
        return [x[:k] for k in range(end)]

    def subtree(self, x):
        """Nodes at or below ``x``, re-addressed relative to ``x``."""
        k = len(x)
        return collections.OrderedDict(
            (y[k:], value) for y, value in self.nodes.items() if y[:k] == x)

    def shape(self):
        return TreeShape(self.n, self.nodes, self._terminals)

    def is_end_extended_by(self, other, signed=False):
        """True if every node of this tree is a node of ``other``; with
        ``signed`` the signs must agree too."""
        for x, (sign, _) in self.nodes.items():
            if x not in other.nodes:
                return False
            if signed and other.sign(x) != sign:
                return False
        return True

    def signed_labels(self):
        return [(sign, label) for sign, label in self.nodes.values()]

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, x):
        return x in self.nodes

    def __iter__(self):
        return iter(self.nodes)

    def __repr__(self):
        sign, label = self.root
        return "SignedTraceTree(%s%s, nodes=%i)" % (
            "+" if sign > 0 else "-", ords.format_tuple(label), len(self.nodes))


def _check_input(seq, sign, labels):
    if sign not in (1, -1):
        raise TupleError("sign must be +1 or -1, got %r" % (sign,))
    n = len(labels) - 1
    if n < 1:
        raise TupleError("a walk needs at least one entry after alpha")
    if n > seq.n:
        raise TupleError("expected at most %i entries after alpha, got %i"
                         % (seq.n, n))
    ords.check_tuple(labels, ords.WEAK)
    if labels[-1] >= seq.window:
        raise TupleError("%s is not below %s" % (labels[-1], seq.window))


def walk(seq, sign, alpha, gammas, cap=DEFAULT_CAP, truncated=False):
    """Walk down from ``(α,) + γ`` with root sign ``sign``.

    The arity is ``len(gammas)``; when it is below ``seq.n`` only indices
    of that length or shorter are used.

    Args:
        seq (NCSequence): The sequence.
        sign (int): ``+1`` or ``-1``.
        alpha (Ordinal): The fixed first entry.
        gammas (Sequence[Ordinal]): The rest of the root tuple.
        cap (int): Maximal number of nodes.
        truncated (bool): Also stop at nodes ``(α,) + β`` with ``τ = β``
            and ``α ∈ C(β)``.

    Raises:
        TupleError: If the root tuple is malformed.
        ResourceCapError: If the tree grows past ``cap`` nodes.
    """
    labels = (ords.ordinal(alpha),) + tuple(ords.ordinal(g) for g in gammas)
    _check_input(seq, sign, labels)
    n = len(labels) - 1
    ells = [[l for l in range(1, n + 2) if l != j + 1] for j in range(n + 1)]

    nodes = {}
    terminals = set()
    tau_lengths = {}
    stack = [((), sign, labels)]
    while stack:
        x, node_sign, beta = stack.pop()
        nodes[x] = (node_sign, beta)
        if len(nodes) > cap:
            LOG.warning("walk from %s stopped at %i nodes",
                        ords.format_tuple(labels), cap)
            raise ResourceCapError(cap)
        iota, tau, j, club = _decompose(seq, beta)
        tau_lengths[x] = len(tau)
        mu = club.min_above(beta[j])
        if mu is None or (truncated and j == 0 and club.member(beta[0])):
            terminals.add(x)
            continue
        full = iota + (mu,) + tau
        children = []
        for i, l in enumerate(ells[j]):
            child_sign = node_sign if (j + l) % 2 == 0 else -node_sign
            children.append((x + (i,), child_sign, full[:l] + full[l + 1:]))
        stack.extend(reversed(children))

    LOG.debug("walk from %s: %i nodes, %i terminal", ords.format_tuple(labels),
              len(nodes), len(terminals))
    return SignedTraceTree(seq, n, nodes, terminals, tau_lengths, truncated)


def extreme_set(tree, seq=None):
    """Addresses whose label has a ``τ`` of length ``tree.n``."""
    if seq is None or seq is tree.seq:
        return set(x for x in tree if tree.tau_length(x) == tree.n)
    return set(x for x in tree
               if len(tau_iota(seq, tree.label(x))[1]) == tree.n)


def lower_traces(tree, seq=None):
    """The lower trace of every node.

    ``L(x)`` is the largest ``sup(α ∩ C(label(y)[1:]))`` over extreme ``y``
    on the path from the root to ``x``, ``x`` included; 0 when there is
    none.
    """
    seq = tree.seq if seq is None else seq
    alpha = tree.alpha
    extreme = extreme_set(tree, seq)
    values = {}
    for x in tree:
        value = values[x[:-1]] if x else ZERO
        if x in extreme:
            own = seq.club_of(tree.label(x)[1:]).sup_below(alpha)
            if own > value:
                value = own
        values[x] = value
    return values


def lower_trace(tree, x, seq=None):
    return lower_traces(tree, seq)[x]


def truncated_walk(seq, alpha, gammas, sign=1, cap=DEFAULT_CAP):
    """The truncated walk, with ``lower_bound`` set to the largest lower
    trace below ``α`` (0 if there is none)."""
    tree = walk(seq, sign, alpha, gammas, cap, truncated=True)
    below = [v for v in lower_traces(tree).values() if v < tree.alpha]
    tree.lower_bound = max(below) if below else ZERO
    return tree


def stretch_address(x, shift):
    return tuple(i + shift for i in x)


def stretch_tree(tree, n):
    """Stretch a full m-tree into a full n-tree.

    Every address ``x`` moves to ``x`` shifted by ``n - m`` and keeps its
    terminal mark; below every splitting image the children ``0`` to
    ``n - m - 1`` are fresh terminals.

    Args:
        tree (Union[TreeShape, SignedTraceTree]): The m-tree.
        n (int): The new arity, above ``m``.
    """
    shape = tree.shape() if isinstance(tree, SignedTraceTree) else tree
    shift = n - shape.arity
    if shift < 1:
        raise TupleError("cannot stretch a %i-tree to arity %i"
                         % (shape.arity, n))
    addresses = set()
    terminals = set()
    for x in shape.addresses:
        image = stretch_address(x, shift)
        addresses.add(image)
        if x in shape.terminals:
            terminals.add(image)
            continue
        for i in range(shift):
            addresses.add(image + (i,))
            terminals.add(image + (i,))
    return TreeShape(n, addresses, terminals)


def boundary(tree):
    """The set of ``(address, sign)`` over terminal nodes."""
    return set((x, tree.sign(x)) for x in tree.terminals())


BoundaryItem = collections.namedtuple("BoundaryItem",
                                      ["walk", "address", "sign", "label"])


class Pairing(object):
    """Outcome of ``pair_boundaries``.

    Attributes:
        trees (List[SignedTraceTree]): Walk ``i`` starts from ``γ`` without
            entry ``i``, with sign ``(-1)^i``.
        items (List[BoundaryItem]): Every terminal node of every walk.
        pairs (List[Tuple[BoundaryItem, BoundaryItem]]): Matched
            ``(positive, negative)`` items with equal labels.
        certificate (tuple): When the matching is not perfect, a label that
            occurs with different positive and negative counts.
    """

    def __init__(self, trees, items, pairs, certificate=None):
        self.trees = trees
        self.items = items
        self.pairs = pairs
        self.certificate = certificate

    @property
    def perfect(self):
        return 2 * len(self.pairs) == len(self.items)

    def unmatched(self):
        matched = set()
        for plus, minus in self.pairs:
            matched.add(plus)
            matched.add(minus)
        return [item for item in self.items if item not in matched]

    def __repr__(self):
        return "Pairing(items=%i, pairs=%i, perfect=%s)" % (
            len(self.items), len(self.pairs), self.perfect)


def pair_boundaries(seq, alpha, gammas, cap=DEFAULT_CAP):
    """Match the signed terminal nodes of the walks from
    ``(α,) + γ`` without ``γ[i]`` into opposite-sign pairs with equal
    labels.

    Args:
        gammas (Sequence[Ordinal]): ``n + 1`` entries for n-walks.
    """
    gammas = tuple(ords.ordinal(g) for g in gammas)
    if len(gammas) < 2:
        raise TupleError("pairing needs at least two entries after alpha")
    trees = []
    items = []
    for i in range(len(gammas)):
        tree = walk(seq, 1 if i % 2 == 0 else -1, alpha,
                    ords.remove_index(gammas, i), cap)
        trees.append(tree)
        items.extend(BoundaryItem(i, x, tree.sign(x), tree.label(x))
                     for x in tree.terminals())

    plus = [item for item in items if item.sign > 0]
    minus = [item for item in items if item.sign < 0]
    by_label = collections.defaultdict(list)
    for k, item in enumerate(minus):
        by_label[item.label].append(k)
    graph = collections.OrderedDict(
        (k, by_label.get(item.label, [])) for k, item in enumerate(plus))
    _, matching = maximum_matching(graph)
    pairs = [(plus[k], minus[m]) for k, m in sorted(matching.items())]

    certificate = None
    if 2 * len(pairs) != len(items):
        counts = collections.Counter()
        for item in items:
            counts[item.label] += item.sign
        certificate = min(label for label, total in counts.items() if total)
        LOG.info("boundary of %s does not cancel at %s",
                 ords.format_tuple((alpha,) + gammas),
                 ords.format_tuple(certificate))
    return Pairing(trees, items, pairs, certificate)


class NodeClass(object):
    """Flags of every node of a tree.

    Attributes:
        flags (Dict[tuple, FrozenSet[str]]): Flags per address, drawn from
            ``FLAGS``.
    """

    def __init__(self, flags):
        self.flags = dict(flags)

    def __getitem__(self, x):
        return self.flags[x]

    def has(self, x, flag):
        return flag in self.flags[x]

    def having(self, flag):
        return sorted(x for x, found in self.flags.items() if flag in found)


def is_bad(seq, label):
    """True if ``label[1:]`` is a valid index and ``label[0]`` is an
    accumulation point of its club."""
    tail = label[1:]
    return seq.index_valid(tail) and seq.club_of(tail).is_acc_point(label[0])


def is_spectacled(label):
    return label[0] == label[1]


def classify_nodes(tree, seq=None):
    seq = tree.seq if seq is None else seq
    extreme = extreme_set(tree, seq)
    flags = {}
    for x in tree:
        label = tree.label(x)
        found = set([TERMINAL if tree.is_terminal(x) else SPLITTING])
        if is_spectacled(label):
            found.add(SPECTACLED)
        if is_bad(seq, label):
            found.add(BAD)
        if x in extreme:
            found.add(EXTREME)
        flags[x] = frozenset(found)
    return NodeClass(flags)
