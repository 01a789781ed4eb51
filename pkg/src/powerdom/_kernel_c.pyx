# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled propagation/canonical-form kernels (word-parallel bitsets)."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

BACKEND_NAME = "cython"

# 8 words * 64 bits = 512-vertex cap, matching graph.MAX_VERTICES

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define pd_popcount64(x) __builtin_popcountll(x)
    #  define pd_ctz64(x) __builtin_ctzll(x)
    #else
    static int pd_popcount64(unsigned long long v) {
        int c = 0;
        while (v) { v &= v - 1; c++; }
        return c;
    }
    static int pd_ctz64(unsigned long long v) {
        int c = 0;
        while (!(v & 1ULL)) { v >>= 1; c++; }
        return c;
    }
    #endif
    """
    int pd_popcount64(uint64_t x) noexcept nogil
    int pd_ctz64(uint64_t x) noexcept nogil


cdef int _closure_words(const uint64_t* rows, int words,
                        uint64_t* black) noexcept nogil:
    """Iterate the color change rule to fixpoint, in place over ``black``."""
    cdef uint64_t add[8]
    cdef uint64_t chunk, low, wbits
    cdef int v, base, k, j, cnt, changed
    while True:
        for k in range(words):
            add[k] = 0
        changed = 0
        for j in range(words):
            chunk = black[j]
            base = j << 6
            while chunk:
                low = chunk & (~chunk + 1)
                chunk ^= low
                v = base + pd_ctz64(low)
                # count white neighbors of v; bail once more than one
                cnt = 0
                for k in range(words):
                    wbits = rows[v * words + k] & ~black[k]
                    cnt += pd_popcount64(wbits)
                    if cnt > 1:
                        break
                if cnt == 1:
                    for k in range(words):
                        add[k] |= rows[v * words + k] & ~black[k]
        for k in range(words):
            if add[k]:
                black[k] |= add[k]
                changed = 1
        if not changed:
            return 0


cdef class ClosureKernel:
    """Coverage checks for one fixed graph, given as raw adjacency masks."""

    cdef int n, words
    cdef uint64_t* rows    # n*words, open rows
    cdef uint64_t* closed  # n*words, rows | self bit
    cdef uint64_t full[8]

    def __cinit__(self, rows, n):
        cdef int v, k, nn = n
        if nn < 0 or nn > 512:
            raise ValueError("kernel supports 0..512 vertices")
        self.n = nn
        self.words = ((nn + 63) >> 6) if nn else 1
        self.rows = <uint64_t*> malloc(nn * self.words * sizeof(uint64_t))
        self.closed = <uint64_t*> malloc(nn * self.words * sizeof(uint64_t))
        if (self.rows == NULL or self.closed == NULL) and nn:
            raise MemoryError()
        for v in range(nn):
            mask = rows[v]
            for k in range(self.words):
                self.rows[v * self.words + k] = <uint64_t> (
                    (mask >> (64 * k)) & 0xFFFFFFFFFFFFFFFF)
                self.closed[v * self.words + k] = self.rows[v * self.words + k]
            self.closed[v * self.words + (v >> 6)] |= (<uint64_t> 1) << (v & 63)
        for k in range(8):
            self.full[k] = 0
        for v in range(nn):
            self.full[v >> 6] |= (<uint64_t> 1) << (v & 63)

    def __dealloc__(self):
        if self.rows != NULL:
            free(self.rows)
        if self.closed != NULL:
            free(self.closed)

    cdef bint _is_full(self, uint64_t* black) noexcept nogil:
        cdef int k
        for k in range(self.words):
            if black[k] != self.full[k]:
                return False
        return True

    def closure(self, mask):
        """Fixpoint of the color change rule from initial black set ``mask``."""
        cdef uint64_t black[8]
        cdef int k
        for k in range(self.words):
            black[k] = <uint64_t> ((mask >> (64 * k)) & 0xFFFFFFFFFFFFFFFF)
            black[k] &= self.full[k]
        with nogil:
            _closure_words(self.rows, self.words, black)
        out = 0
        for k in range(self.words):
            out |= int(black[k]) << (64 * k)
        return out

    def zf_covers(self, seed):
        cdef uint64_t black[8]
        cdef int k, v
        for k in range(self.words):
            black[k] = 0
        for v in seed:
            black[v >> 6] |= (<uint64_t> 1) << (v & 63)
        with nogil:
            _closure_words(self.rows, self.words, black)
        return self._is_full(black)

    def pd_covers(self, seed):
        cdef uint64_t black[8]
        cdef int k, v
        for k in range(self.words):
            black[k] = 0
        for v in seed:
            for k in range(self.words):
                black[k] |= self.closed[v * self.words + k]
        with nogil:
            _closure_words(self.rows, self.words, black)
        return self._is_full(black)

    def dominates(self, seed):
        cdef uint64_t black[8]
        cdef int k, v
        for k in range(self.words):
            black[k] = 0
        for v in seed:
            for k in range(self.words):
                black[k] |= self.closed[v * self.words + k]
        return self._is_full(black)


def make_perm_table(n):
    """Permutations of range(n) flattened into a C-friendly byte table."""
    from itertools import permutations
    if n > 10:
        raise ValueError("permutation table capped at n=10")
    flat = bytearray()
    count = 0
    for perm in permutations(range(n)):
        flat.extend(perm)
        count += 1
    return (n, count, bytes(flat))


def canonical_code(rows, n, table):
    """Minimum upper-triangle encoding over the permutations in ``table``.

    Bit order matches graph6 (pair (0,1) most significant); agrees bit for
    bit with the pure backend.
    """
    cdef int tn, count, cn = n
    tn, count, flat = table
    if tn != cn:
        raise ValueError("permutation table built for a different order")
    if cn < 2:
        return 0
    cdef int nbits = cn * (cn - 1) // 2
    if nbits > 62:
        raise ValueError("canonical code supports n <= 11")
    cdef const unsigned char[::1] perms = flat
    cdef uint64_t adj[12]
    cdef uint64_t weight[12][12]
    cdef int i, j, u, v, t, p
    cdef uint64_t code, best
    for u in range(cn):
        adj[u] = <uint64_t> rows[u]
    t = 0
    for j in range(1, cn):
        for i in range(j):
            weight[i][j] = (<uint64_t> 1) << (nbits - 1 - t)
            weight[j][i] = weight[i][j]
            t += 1
    best = 0
    best -= 1  # wraps to max uint64
    with nogil:
        for p in range(count):
            code = 0
            for u in range(cn):
                for v in range(u + 1, cn):
                    if (adj[u] >> v) & 1:
                        code += weight[perms[p * cn + u]][perms[p * cn + v]]
            if code < best:
                best = code
    return int(best)
