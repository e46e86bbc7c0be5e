# coding=utf-8
"""Maximum bipartite matching.

Used to cancel the positive boundary nodes of a family of walks against the
negative ones.

Contents
--------

:HopcroftKarp: Maximum matching on a bipartite graph.
:maximum_matching: Convenience wrapper returning ``(size, matching)``.

"""

import collections

FAKE_INFINITY = -1


class HopcroftKarp(object):
    """The Hopcroft-Karp algorithm on a bipartite graph.

    Left vertices are visited in the order of ``graph_left`` and right
    vertices in the order of each adjacency list, so results do not depend on
    hashing.

    Args:
        graph_left (Dict[Hashable, List[Hashable]]): Maps each left vertex to
            its right neighbours, without duplicates.
    """

    def __init__(self, graph_left):
        self.graph_left = graph_left
        self.left = list(graph_left.keys())
        self.pair_left = {}
        self.pair_right = {}
        self.dist_left = {}
        self.reference_distance = FAKE_INFINITY

    def maximum_matching(self):
        """Return ``(size, matching)``; ``matching`` maps left to right."""
        self.pair_left.clear()
        self.pair_right.clear()
        self.dist_left = dict((left, FAKE_INFINITY) for left in self.left)
        size = 0
        while self._bfs():
            for left in self.left:
                if left not in self.pair_left and self._dfs(left):
                    size += 1
        return size, dict(self.pair_left)

    def _bfs(self):
        queue = collections.deque()
        for left in self.left:
            if left not in self.pair_left:
                queue.append(left)
                self.dist_left[left] = 0
            else:
                self.dist_left[left] = FAKE_INFINITY
        self.reference_distance = FAKE_INFINITY
        while queue:
            left = queue.popleft()
            dist = self.dist_left[left]
            if self.reference_distance != FAKE_INFINITY and \
                    dist >= self.reference_distance:
                continue
            for right in self.graph_left[left]:
                if right not in self.pair_right:
                    if self.reference_distance == FAKE_INFINITY:
                        self.reference_distance = dist + 1
                else:
                    other = self.pair_right[right]
                    if self.dist_left[other] == FAKE_INFINITY:
                        self.dist_left[other] = dist + 1
                        queue.append(other)
        return self.reference_distance != FAKE_INFINITY

    def _swap(self, left, right):
        self.pair_left[left] = right
        self.pair_right[right] = left

    def _dfs(self, left):
        for right in self.graph_left[left]:
            if right not in self.pair_right:
                if self.reference_distance == self.dist_left[left] + 1:
                    self._swap(left, right)
                    return True
            else:
                other = self.pair_right[right]
                if self.dist_left[other] == self.dist_left[left] + 1 and \
                        self._dfs(other):
                    self._swap(left, right)
                    return True
        self.dist_left[left] = FAKE_INFINITY
        return False


def maximum_matching(graph_left):
    return HopcroftKarp(graph_left).maximum_matching()
