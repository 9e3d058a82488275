# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dynamic orthogonal ray-shooting index.

Same layout and semantics as the pure-Python backend: a static segment
tree over [1, x_max] with a sorted C array of (ys, owner) pairs per tree
node.  Hot kernel of the matching loop; see the package __init__ for how
the backend is selected.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memmove

ctypedef long long i64

BACKEND = "cython"

cdef struct Bucket:
    i64* ys
    i64* owner
    int size
    int cap


cdef inline int _lower_bound(i64* a, int n, i64 key) noexcept nogil:
    cdef int lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline int _upper_bound(i64* a, int n, i64 key) noexcept nogil:
    cdef int lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] <= key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef class RayShootIndex:
    """Insert/delete horizontal segments; shoot vertical rays upward.

    Owners are ids in 1..capacity; live segments must have pairwise
    distinct ys.  ``shoot`` returns the owner of the hit segment or None.
    """

    cdef Bucket* _tree
    cdef int _half
    cdef int _n_buckets
    cdef readonly int x_max
    cdef readonly int capacity
    cdef int _n_live
    cdef i64* _seg_ys
    cdef int* _seg_xlo
    cdef int* _seg_xhi
    cdef char* _is_live

    def __cinit__(self, int x_max, int capacity):
        if x_max < 1:
            raise ValueError(f"x_max must be positive, got {x_max}")
        if capacity < 0:
            raise ValueError(f"capacity must be non-negative, got {capacity}")
        self.x_max = x_max
        self.capacity = capacity
        self._n_live = 0
        cdef int half = 1
        while half < x_max:
            half <<= 1
        self._half = half
        self._n_buckets = 2 * half
        self._tree = <Bucket*> malloc(self._n_buckets * sizeof(Bucket))
        if self._tree == NULL:
            raise MemoryError()
        cdef int i
        for i in range(self._n_buckets):
            self._tree[i].ys = NULL
            self._tree[i].owner = NULL
            self._tree[i].size = 0
            self._tree[i].cap = 0
        self._seg_ys = <i64*> malloc((capacity + 1) * sizeof(i64))
        self._seg_xlo = <int*> malloc((capacity + 1) * sizeof(int))
        self._seg_xhi = <int*> malloc((capacity + 1) * sizeof(int))
        self._is_live = <char*> malloc(capacity + 1)
        if (self._seg_ys == NULL or self._seg_xlo == NULL
                or self._seg_xhi == NULL or self._is_live == NULL):
            raise MemoryError()
        for i in range(capacity + 1):
            self._is_live[i] = 0

    def __dealloc__(self):
        cdef int i
        if self._tree != NULL:
            for i in range(self._n_buckets):
                if self._tree[i].ys != NULL:
                    free(self._tree[i].ys)
                if self._tree[i].owner != NULL:
                    free(self._tree[i].owner)
            free(self._tree)
        if self._seg_ys != NULL:
            free(self._seg_ys)
        if self._seg_xlo != NULL:
            free(self._seg_xlo)
        if self._seg_xhi != NULL:
            free(self._seg_xhi)
        if self._is_live != NULL:
            free(self._is_live)

    def __len__(self):
        return self._n_live

    def is_live(self, int owner):
        return 1 <= owner <= self.capacity and self._is_live[owner] != 0

    cdef int _bucket_add(self, int node, i64 ys, i64 owner) except -1:
        cdef Bucket* b = &self._tree[node]
        cdef int new_cap, pos
        if b.size == b.cap:
            new_cap = 4 if b.cap == 0 else b.cap * 2
            b.ys = <i64*> realloc(b.ys, new_cap * sizeof(i64))
            b.owner = <i64*> realloc(b.owner, new_cap * sizeof(i64))
            if b.ys == NULL or b.owner == NULL:
                raise MemoryError()
            b.cap = new_cap
        pos = _lower_bound(b.ys, b.size, ys)
        if pos < b.size:
            memmove(b.ys + pos + 1, b.ys + pos, (b.size - pos) * sizeof(i64))
            memmove(b.owner + pos + 1, b.owner + pos, (b.size - pos) * sizeof(i64))
        b.ys[pos] = ys
        b.owner[pos] = owner
        b.size += 1
        return 0

    cdef int _bucket_remove(self, int node, i64 ys) except -1:
        cdef Bucket* b = &self._tree[node]
        cdef int pos = _lower_bound(b.ys, b.size, ys)
        if pos >= b.size or b.ys[pos] != ys:
            raise ValueError(f"internal: ys {ys} missing from bucket {node}")
        if pos + 1 < b.size:
            memmove(b.ys + pos, b.ys + pos + 1, (b.size - pos - 1) * sizeof(i64))
            memmove(b.owner + pos, b.owner + pos + 1, (b.size - pos - 1) * sizeof(i64))
        b.size -= 1
        return 0

    def insert(self, int owner, int x_lo, int x_hi, i64 ys):
        if not 1 <= owner <= self.capacity:
            raise ValueError(f"owner {owner} out of range 1..{self.capacity}")
        if self._is_live[owner]:
            raise ValueError(f"segment for owner {owner} is already live")
        if not (1 <= x_lo <= x_hi <= self.x_max):
            raise ValueError(
                f"segment x-range [{x_lo}, {x_hi}] invalid for domain [1, {self.x_max}]"
            )
        self._is_live[owner] = 1
        self._seg_ys[owner] = ys
        self._seg_xlo[owner] = x_lo
        self._seg_xhi[owner] = x_hi
        self._n_live += 1
        cdef int lo = x_lo - 1 + self._half
        cdef int hi = x_hi + self._half
        while lo < hi:
            if lo & 1:
                self._bucket_add(lo, ys, owner)
                lo += 1
            if hi & 1:
                hi -= 1
                self._bucket_add(hi, ys, owner)
            lo >>= 1
            hi >>= 1

    def delete(self, int owner):
        if not 1 <= owner <= self.capacity or not self._is_live[owner]:
            raise ValueError(f"no live segment for owner {owner}")
        cdef i64 ys = self._seg_ys[owner]
        cdef int lo = self._seg_xlo[owner] - 1 + self._half
        cdef int hi = self._seg_xhi[owner] + self._half
        self._is_live[owner] = 0
        self._n_live -= 1
        while lo < hi:
            if lo & 1:
                self._bucket_remove(lo, ys)
                lo += 1
            if hi & 1:
                hi -= 1
                self._bucket_remove(hi, ys)
            lo >>= 1
            hi >>= 1

    def shoot(self, int x, i64 y_origin):
        if x < 1 or x > self.x_max:
            return None
        cdef i64 best_ys = -1
        cdef i64 best_owner = -1
        cdef int node = x - 1 + self._half
        cdef Bucket* b
        cdef int pos
        while node >= 1:
            b = &self._tree[node]
            pos = _upper_bound(b.ys, b.size, y_origin)
            if pos > 0 and b.ys[pos - 1] > best_ys:
                best_ys = b.ys[pos - 1]
                best_owner = b.owner[pos - 1]
            node >>= 1
        if best_owner < 0:
            return None
        return best_owner
