"""Pure-Python dynamic orthogonal ray-shooting index.

Static segment tree over the x-domain [1, x_max]; each tree node keeps the
ys values of the segments assigned to it in a sorted list (owners in a
parallel list).  A horizontal segment lands on the O(log x_max) canonical
nodes covering its x-range; an upward ray at abscissa x walks the
root-to-leaf path for x and takes, per node, the largest ys not above the
ray origin.  Insert and delete cost O(log x_max * (log n + shift)),
queries O(log x_max * log n).

Callers guarantee pairwise-distinct ys values for live segments, which the
exact-integer perturbation of the geometry layer provides.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

BACKEND = "pure"


class RayShootIndex:
    """Insert/delete horizontal segments; shoot vertical rays upward.

    Segments are identified by an owner id in 1..capacity.  ``shoot``
    returns the owner of the first segment hit (the one with maximum ys
    at or below the ray origin) or None on a miss.
    """

    __slots__ = ("x_max", "capacity", "_half", "_ys", "_owners", "_live")

    def __init__(self, x_max: int, capacity: int):
        if x_max < 1:
            raise ValueError(f"x_max must be positive, got {x_max}")
        if capacity < 0:
            raise ValueError(f"capacity must be non-negative, got {capacity}")
        self.x_max = x_max
        self.capacity = capacity
        half = 1
        while half < x_max:
            half <<= 1
        self._half = half
        self._ys: list[list[int]] = [[] for _ in range(2 * half)]
        self._owners: list[list[int]] = [[] for _ in range(2 * half)]
        # owner -> (x_lo, x_hi, ys) for live segments
        self._live: dict[int, tuple[int, int, int]] = {}

    def __len__(self) -> int:
        return len(self._live)

    def is_live(self, owner: int) -> bool:
        return owner in self._live

    def insert(self, owner: int, x_lo: int, x_hi: int, ys: int) -> None:
        if not 1 <= owner <= self.capacity:
            raise ValueError(f"owner {owner} out of range 1..{self.capacity}")
        if owner in self._live:
            raise ValueError(f"segment for owner {owner} is already live")
        if not (1 <= x_lo <= x_hi <= self.x_max):
            raise ValueError(
                f"segment x-range [{x_lo}, {x_hi}] invalid for domain [1, {self.x_max}]"
            )
        self._live[owner] = (x_lo, x_hi, ys)
        lo = x_lo - 1 + self._half
        hi = x_hi + self._half
        while lo < hi:
            if lo & 1:
                self._node_add(lo, ys, owner)
                lo += 1
            if hi & 1:
                hi -= 1
                self._node_add(hi, ys, owner)
            lo >>= 1
            hi >>= 1

    def delete(self, owner: int) -> None:
        seg = self._live.pop(owner, None)
        if seg is None:
            raise ValueError(f"no live segment for owner {owner}")
        x_lo, x_hi, ys = seg
        lo = x_lo - 1 + self._half
        hi = x_hi + self._half
        while lo < hi:
            if lo & 1:
                self._node_remove(lo, ys)
                lo += 1
            if hi & 1:
                hi -= 1
                self._node_remove(hi, ys)
            lo >>= 1
            hi >>= 1

    def shoot(self, x: int, y_origin: int) -> int | None:
        """Owner of the live segment with maximum ys <= y_origin whose
        x-range contains x, or None."""
        if not 1 <= x <= self.x_max:
            return None
        best_ys = -1
        best_owner = None
        node = x - 1 + self._half
        ys_lists = self._ys
        owner_lists = self._owners
        while node >= 1:
            ys = ys_lists[node]
            pos = bisect_right(ys, y_origin)
            if pos and ys[pos - 1] > best_ys:
                best_ys = ys[pos - 1]
                best_owner = owner_lists[node][pos - 1]
            node >>= 1
        return best_owner

    def _node_add(self, node: int, ys: int, owner: int) -> None:
        lst = self._ys[node]
        pos = bisect_left(lst, ys)
        lst.insert(pos, ys)
        self._owners[node].insert(pos, owner)

    def _node_remove(self, node: int, ys: int) -> None:
        lst = self._ys[node]
        pos = bisect_left(lst, ys)
        del lst[pos]
        del self._owners[node][pos]
