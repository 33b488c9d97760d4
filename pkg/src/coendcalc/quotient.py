"""Quotients of tagged disjoint unions by generated equivalence relations."""

from .setfun import FinSet


class QuotientSet:
    """A partition of ``⊔_tag part`` grown by :meth:`relate`.

    Elements are pairs ``(tag, x)`` kept in stored order (tags in the order
    given, then elements in FinSet order). Unions always keep the smaller
    position as root, so the root of a class is its least member and
    serves as the representative.
    """

    def __init__(self, parts):
        self.elements = []
        for tag, part in parts:
            self.elements.extend((tag, x) for x in part)
        self._pos = {e: i for i, e in enumerate(self.elements)}
        if len(self._pos) != len(self.elements):
            raise ValueError("tagged elements must be distinct")
        self._parent = list(range(len(self.elements)))
        self.relations = []
        self._carrier = None

    def __len__(self):
        return len(self.carrier())

    def __contains__(self, e):
        return e in self._pos

    def _find(self, i):
        parent = self._parent
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def relate(self, x, y):
        """Declare x ∼ y; both are tagged elements."""
        i, j = self._find(self._pos[x]), self._find(self._pos[y])
        self.relations.append((x, y))
        if i != j:
            if j < i:
                i, j = j, i
            self._parent[j] = i
            self._carrier = None

    def rep(self, e):
        """The least member of the class of ``e``."""
        return self.elements[self._find(self._pos[e])]

    def same_class(self, x, y):
        return self._find(self._pos[x]) == self._find(self._pos[y])

    def carrier(self):
        if self._carrier is None:
            self._carrier = FinSet(e for i, e in enumerate(self.elements)
                                   if self._find(i) == i)
        return self._carrier

    def classes(self):
        """Mapping representative -> members in stored order."""
        out = {r: [] for r in self.carrier()}
        for i, e in enumerate(self.elements):
            out[self.elements[self._find(i)]].append(e)
        return out
