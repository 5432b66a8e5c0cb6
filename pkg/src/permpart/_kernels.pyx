# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels.

Twin of permpart._kernels_py: the same six functions, the same pruning, the
same search order (so witnesses and counts are bit-identical), with the
inner loops in C.  See the pure module for the algorithm notes.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from .errors import SearchCancelled

cdef Py_ssize_t _POLL_MASK = (1 << 14) - 1
cdef Py_ssize_t _TABLE_LIMIT = 4_000_000


cdef int* _copy_ints(seq, Py_ssize_t n) except? NULL:
    cdef int* arr = <int*> PyMem_Malloc(n * sizeof(int) if n else sizeof(int))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = seq[i]
    return arr


cdef int* _zero_ints(Py_ssize_t n) except? NULL:
    cdef int* arr = <int*> PyMem_Malloc(n * sizeof(int) if n else sizeof(int))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = 0
    return arr


cdef inline int _max_of(int* arr, Py_ssize_t n) noexcept:
    cdef int best = 0
    cdef Py_ssize_t i
    for i in range(n):
        if arr[i] > best:
            best = arr[i]
    return best


cdef int* _suffix_table(int* word, Py_ssize_t n, int width) except? NULL:
    # Flat (n+1) x width suffix counts; caller checked the size limit.
    cdef int* table = _zero_ints((n + 1) * width)
    cdef Py_ssize_t i, t, base, nxt
    for i in range(n - 1, -1, -1):
        base = i * width
        nxt = base + width
        for t in range(width):
            table[base + t] = table[nxt + t]
        table[base + word[i] - 1] += 1
    return table


cdef bint _sizes_dominate(int* text_counts, int tw, int* pat_counts, int pw):
    # Descending-sorted text block sizes must dominate the pattern's.
    cdef Py_ssize_t i
    cdef list ts = []
    cdef list ps = []
    for i in range(tw):
        if text_counts[i]:
            ts.append(text_counts[i])
    for i in range(pw):
        if pat_counts[i]:
            ps.append(pat_counts[i])
    if len(ps) > len(ts):
        return False
    ts.sort(reverse=True)
    ps.sort(reverse=True)
    for i in range(len(ps)):
        if ps[i] > ts[i]:
            return False
    return True


cdef inline bint _poll(object cancel, Py_ssize_t ticks) except -1:
    if cancel is not None and (ticks & _POLL_MASK) == 0:
        if cancel():
            raise SearchCancelled("search aborted by cancellation signal")
    return 0


def perm_find(text, pattern, cancel=None):
    """Lexicographically least occurrence of the pattern permutation in the
    text permutation, as 1-based index tuple, or None."""
    cdef Py_ssize_t n = len(text), k = len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    cdef int* tv = NULL
    cdef int* pv = NULL
    cdef int* lo = NULL
    cdef int* hi = NULL
    cdef int* chosen = NULL
    cdef Py_ssize_t i, j, a, ticks = 0
    cdef int v
    try:
        tv = _copy_ints(text, n)
        pv = _copy_ints(pattern, k)
        lo = _zero_ints(k)
        hi = _zero_ints(k)
        chosen = _zero_ints(k)
        for j in range(k):
            lo[j] = -1
            hi[j] = -1
            for a in range(j):
                if pv[a] < pv[j] and (lo[j] < 0 or pv[a] > pv[lo[j]]):
                    lo[j] = a
                if pv[a] > pv[j] and (hi[j] < 0 or pv[a] < pv[hi[j]]):
                    hi[j] = a
        j = 0
        i = 0
        while True:
            ticks += 1
            _poll(cancel, ticks)
            if i > n - (k - j):
                if j == 0:
                    return None
                j -= 1
                i = chosen[j] + 1
                continue
            v = tv[i]
            if (lo[j] < 0 or tv[chosen[lo[j]]] < v) and (hi[j] < 0 or v < tv[chosen[hi[j]]]):
                chosen[j] = i
                if j == k - 1:
                    result = [0] * k
                    for a in range(k):
                        result[a] = chosen[a] + 1
                    return tuple(result)
                j += 1
            i += 1
    finally:
        PyMem_Free(tv)
        PyMem_Free(pv)
        PyMem_Free(lo)
        PyMem_Free(hi)
        PyMem_Free(chosen)


def perm_count(text, pattern, cancel=None):
    """Exact number of occurrences of the pattern permutation in the text."""
    cdef Py_ssize_t n = len(text), k = len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    cdef int* tv = NULL
    cdef int* pv = NULL
    cdef int* lo = NULL
    cdef int* hi = NULL
    cdef int* chosen = NULL
    cdef Py_ssize_t i, j, a, ticks = 0
    cdef int v
    cdef unsigned long long count = 0
    try:
        tv = _copy_ints(text, n)
        pv = _copy_ints(pattern, k)
        lo = _zero_ints(k)
        hi = _zero_ints(k)
        chosen = _zero_ints(k)
        for j in range(k):
            lo[j] = -1
            hi[j] = -1
            for a in range(j):
                if pv[a] < pv[j] and (lo[j] < 0 or pv[a] > pv[lo[j]]):
                    lo[j] = a
                if pv[a] > pv[j] and (hi[j] < 0 or pv[a] < pv[hi[j]]):
                    hi[j] = a
        j = 0
        i = 0
        while True:
            ticks += 1
            _poll(cancel, ticks)
            if i > n - (k - j):
                if j == 0:
                    return count
                j -= 1
                i = chosen[j] + 1
                continue
            v = tv[i]
            if (lo[j] < 0 or tv[chosen[lo[j]]] < v) and (hi[j] < 0 or v < tv[chosen[hi[j]]]):
                if j == k - 1:
                    count += 1
                else:
                    chosen[j] = i
                    j += 1
            i += 1
    finally:
        PyMem_Free(tv)
        PyMem_Free(pv)
        PyMem_Free(lo)
        PyMem_Free(hi)
        PyMem_Free(chosen)


def part_find(text, pattern, cancel=None):
    """Lexicographically least subset whose restriction equals the pattern
    partition, or None; both partitions arrive as block-index words."""
    cdef Py_ssize_t n = len(text), k = len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    cdef int* tw = NULL
    cdef int* pw = NULL
    cdef int* tcounts = NULL
    cdef int* pcounts = NULL
    cdef int* avail = NULL
    cdef int* need = NULL
    cdef int* is_new = NULL
    cdef int* assigned = NULL
    cdef int* used = NULL
    cdef int* chosen = NULL
    cdef Py_ssize_t i, j, a, ticks = 0
    cdef int nb, npat, t, block, peak
    cdef bint ok
    try:
        tw = _copy_ints(text, n)
        pw = _copy_ints(pattern, k)
        nb = _max_of(tw, n)
        npat = _max_of(pw, k)
        tcounts = _zero_ints(nb)
        for i in range(n):
            tcounts[tw[i] - 1] += 1
        pcounts = _zero_ints(npat)
        for j in range(k):
            pcounts[pw[j] - 1] += 1
        if not _sizes_dominate(tcounts, nb, pcounts, npat):
            return None
        if (n + 1) * nb <= _TABLE_LIMIT:
            avail = _suffix_table(tw, n, nb)
        need = _suffix_table(pw, k, npat)
        is_new = _zero_ints(k)
        peak = 0
        for j in range(k):
            is_new[j] = pw[j] > peak
            if pw[j] > peak:
                peak = pw[j]
        assigned = _zero_ints(npat + 1)
        used = _zero_ints(nb + 1)
        chosen = _zero_ints(k)
        j = 0
        i = 0
        while True:
            ticks += 1
            _poll(cancel, ticks)
            if i > n - (k - j):
                if j == 0:
                    return None
                j -= 1
                block = pw[j]
                if is_new[j]:
                    used[assigned[block]] = 0
                    assigned[block] = 0
                i = chosen[j] + 1
                continue
            t = tw[i]
            block = pw[j]
            if is_new[j]:
                ok = not used[t]
            else:
                ok = t == assigned[block]
            if ok and avail != NULL and avail[(i + 1) * nb + t - 1] < need[(j + 1) * npat + block - 1]:
                ok = False
            if ok:
                chosen[j] = i
                if j == k - 1:
                    result = [0] * k
                    for a in range(k):
                        result[a] = chosen[a] + 1
                    return tuple(result)
                if is_new[j]:
                    assigned[block] = t
                    used[t] = 1
                j += 1
            i += 1
    finally:
        PyMem_Free(tw)
        PyMem_Free(pw)
        PyMem_Free(tcounts)
        PyMem_Free(pcounts)
        PyMem_Free(avail)
        PyMem_Free(need)
        PyMem_Free(is_new)
        PyMem_Free(assigned)
        PyMem_Free(used)
        PyMem_Free(chosen)


def part_count(text, pattern, cancel=None):
    """Exact number of subsets whose restriction equals the pattern."""
    cdef Py_ssize_t n = len(text), k = len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    cdef int* tw = NULL
    cdef int* pw = NULL
    cdef int* tcounts = NULL
    cdef int* pcounts = NULL
    cdef int* avail = NULL
    cdef int* need = NULL
    cdef int* is_new = NULL
    cdef int* assigned = NULL
    cdef int* used = NULL
    cdef int* chosen = NULL
    cdef Py_ssize_t i, j, a, ticks = 0
    cdef int nb, npat, t, block, peak
    cdef bint ok
    cdef unsigned long long count = 0
    try:
        tw = _copy_ints(text, n)
        pw = _copy_ints(pattern, k)
        nb = _max_of(tw, n)
        npat = _max_of(pw, k)
        tcounts = _zero_ints(nb)
        for i in range(n):
            tcounts[tw[i] - 1] += 1
        pcounts = _zero_ints(npat)
        for j in range(k):
            pcounts[pw[j] - 1] += 1
        if not _sizes_dominate(tcounts, nb, pcounts, npat):
            return 0
        if (n + 1) * nb <= _TABLE_LIMIT:
            avail = _suffix_table(tw, n, nb)
        need = _suffix_table(pw, k, npat)
        is_new = _zero_ints(k)
        peak = 0
        for j in range(k):
            is_new[j] = pw[j] > peak
            if pw[j] > peak:
                peak = pw[j]
        assigned = _zero_ints(npat + 1)
        used = _zero_ints(nb + 1)
        chosen = _zero_ints(k)
        j = 0
        i = 0
        while True:
            ticks += 1
            _poll(cancel, ticks)
            if i > n - (k - j):
                if j == 0:
                    return count
                j -= 1
                block = pw[j]
                if is_new[j]:
                    used[assigned[block]] = 0
                    assigned[block] = 0
                i = chosen[j] + 1
                continue
            t = tw[i]
            block = pw[j]
            if is_new[j]:
                ok = not used[t]
            else:
                ok = t == assigned[block]
            if ok and avail != NULL and avail[(i + 1) * nb + t - 1] < need[(j + 1) * npat + block - 1]:
                ok = False
            if ok:
                if j == k - 1:
                    count += 1
                else:
                    chosen[j] = i
                    if is_new[j]:
                        assigned[block] = t
                        used[t] = 1
                    j += 1
            i += 1
    finally:
        PyMem_Free(tw)
        PyMem_Free(pw)
        PyMem_Free(tcounts)
        PyMem_Free(pcounts)
        PyMem_Free(avail)
        PyMem_Free(need)
        PyMem_Free(is_new)
        PyMem_Free(assigned)
        PyMem_Free(used)
        PyMem_Free(chosen)


cdef inline bint _between_bounds(int* bound, int rank, int m, int t) noexcept:
    # A newly bound letter must sit strictly between its rank neighbors.
    cdef int r
    for r in range(rank - 1, 0, -1):
        if bound[r]:
            if t <= bound[r]:
                return False
            break
    for r in range(rank + 1, m + 1):
        if bound[r]:
            if t >= bound[r]:
                return False
            break
    return True


def rgf_find(text, pattern, cancel=None):
    """Lexicographically least position set at which the text word's
    subsequence value-standardizes to the pattern word, or None."""
    cdef Py_ssize_t n = len(text), k = len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    cdef int* tw = NULL
    cdef int* pw = NULL
    cdef int* avail = NULL
    cdef int* need = NULL
    cdef int* is_new = NULL
    cdef int* bound = NULL
    cdef int* chosen = NULL
    cdef Py_ssize_t i, j, a, ticks = 0
    cdef int m, maxt, t, rank, peak
    cdef bint ok
    try:
        tw = _copy_ints(text, n)
        pw = _copy_ints(pattern, k)
        m = _max_of(pw, k)
        maxt = _max_of(tw, n)
        if (n + 1) * maxt <= _TABLE_LIMIT:
            avail = _suffix_table(tw, n, maxt)
        need = _suffix_table(pw, k, m)
        is_new = _zero_ints(k)
        peak = 0
        for j in range(k):
            is_new[j] = pw[j] > peak
            if pw[j] > peak:
                peak = pw[j]
        bound = _zero_ints(m + 1)
        chosen = _zero_ints(k)
        j = 0
        i = 0
        while True:
            ticks += 1
            _poll(cancel, ticks)
            if i > n - (k - j):
                if j == 0:
                    return None
                j -= 1
                if is_new[j]:
                    bound[pw[j]] = 0
                i = chosen[j] + 1
                continue
            t = tw[i]
            rank = pw[j]
            if is_new[j]:
                ok = _between_bounds(bound, rank, m, t)
            else:
                ok = t == bound[rank]
            if ok and avail != NULL and avail[(i + 1) * maxt + t - 1] < need[(j + 1) * m + rank - 1]:
                ok = False
            if ok:
                chosen[j] = i
                if j == k - 1:
                    result = [0] * k
                    for a in range(k):
                        result[a] = chosen[a] + 1
                    return tuple(result)
                if is_new[j]:
                    bound[rank] = t
                j += 1
            i += 1
    finally:
        PyMem_Free(tw)
        PyMem_Free(pw)
        PyMem_Free(avail)
        PyMem_Free(need)
        PyMem_Free(is_new)
        PyMem_Free(bound)
        PyMem_Free(chosen)


def rgf_count(text, pattern, cancel=None):
    """Exact number of position sets whose subsequence value-standardizes to
    the pattern word."""
    cdef Py_ssize_t n = len(text), k = len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    cdef int* tw = NULL
    cdef int* pw = NULL
    cdef int* avail = NULL
    cdef int* need = NULL
    cdef int* is_new = NULL
    cdef int* bound = NULL
    cdef int* chosen = NULL
    cdef Py_ssize_t i, j, a, ticks = 0
    cdef int m, maxt, t, rank, peak
    cdef bint ok
    cdef unsigned long long count = 0
    try:
        tw = _copy_ints(text, n)
        pw = _copy_ints(pattern, k)
        m = _max_of(pw, k)
        maxt = _max_of(tw, n)
        if (n + 1) * maxt <= _TABLE_LIMIT:
            avail = _suffix_table(tw, n, maxt)
        need = _suffix_table(pw, k, m)
        is_new = _zero_ints(k)
        peak = 0
        for j in range(k):
            is_new[j] = pw[j] > peak
            if pw[j] > peak:
                peak = pw[j]
        bound = _zero_ints(m + 1)
        chosen = _zero_ints(k)
        j = 0
        i = 0
        while True:
            ticks += 1
            _poll(cancel, ticks)
            if i > n - (k - j):
                if j == 0:
                    return count
                j -= 1
                if is_new[j]:
                    bound[pw[j]] = 0
                i = chosen[j] + 1
                continue
            t = tw[i]
            rank = pw[j]
            if is_new[j]:
                ok = _between_bounds(bound, rank, m, t)
            else:
                ok = t == bound[rank]
            if ok and avail != NULL and avail[(i + 1) * maxt + t - 1] < need[(j + 1) * m + rank - 1]:
                ok = False
            if ok:
                if j == k - 1:
                    count += 1
                else:
                    chosen[j] = i
                    if is_new[j]:
                        bound[rank] = t
                    j += 1
            i += 1
    finally:
        PyMem_Free(tw)
        PyMem_Free(pw)
        PyMem_Free(avail)
        PyMem_Free(need)
        PyMem_Free(is_new)
        PyMem_Free(bound)
        PyMem_Free(chosen)
