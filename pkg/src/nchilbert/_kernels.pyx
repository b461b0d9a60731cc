# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same signatures as ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libc.limits cimport LLONG_MAX


def hopcroft_classes(Py_ssize_t n_states, Py_ssize_t n_letters, table, accepting):
    if n_states == 0:
        return []
    cdef Py_ssize_t n = n_states, k = n_letters
    cdef Py_ssize_t i, s, t, a, a2, b, c, p, q, tmp, nb, pick, n_touched, n_buf
    cdef long *trans = <long *> malloc(n * k * sizeof(long))
    cdef long *inv_start = <long *> malloc((k * (n + 1) + 1) * sizeof(long))
    cdef long *inv_list = <long *> malloc(n * k * sizeof(long))
    cdef long *elems = <long *> malloc(n * sizeof(long))
    cdef long *loc = <long *> malloc(n * sizeof(long))
    cdef long *blk = <long *> malloc(n * sizeof(long))
    cdef long *first = <long *> malloc(n * sizeof(long))
    cdef long *end = <long *> malloc(n * sizeof(long))
    cdef long *mid = <long *> malloc(n * sizeof(long))
    cdef long *touched = <long *> malloc(n * sizeof(long))
    cdef long *buf = <long *> malloc(n * sizeof(long))
    cdef char *in_work = <char *> malloc(n * k)
    cdef long *work = <long *> malloc(2 * n * k * sizeof(long))
    cdef Py_ssize_t n_work = 0
    try:
        for i in range(n * k):
            trans[i] = table[i]
        # CSR inverse transitions: for letter a, predecessors of t are
        # inv_list[inv_start[a*(n+1)+t] : inv_start[a*(n+1)+t+1]]
        memset(inv_start, 0, (k * (n + 1) + 1) * sizeof(long))
        for s in range(n):
            for a in range(k):
                inv_start[a * (n + 1) + trans[s * k + a] + 1] += 1
        for a in range(k):
            for t in range(n):
                inv_start[a * (n + 1) + t + 1] += inv_start[a * (n + 1) + t]
            if a + 1 < k:
                inv_start[(a + 1) * (n + 1)] = inv_start[a * (n + 1) + n]
        # fill using a moving cursor copied into touched[] per letter
        for a in range(k):
            for t in range(n):
                touched[t] = inv_start[a * (n + 1) + t]
            for s in range(n):
                t = trans[s * k + a]
                inv_list[touched[t]] = s
                touched[t] += 1

        # initial partition: accepting first, then rejecting
        nb = 0
        p = 0
        for s in range(n):
            if accepting[s]:
                elems[p] = s
                p += 1
        q = p
        for s in range(n):
            if not accepting[s]:
                elems[q] = s
                q += 1
        if p > 0:
            first[nb] = 0
            end[nb] = p
            nb += 1
        if p < n:
            first[nb] = p
            end[nb] = n
            nb += 1
        for b in range(nb):
            mid[b] = first[b]
            for i in range(first[b], end[b]):
                blk[elems[i]] = b
                loc[elems[i]] = i
        memset(in_work, 0, n * k)
        if nb == 2:
            pick = 0 if end[0] - first[0] <= end[1] - first[1] else 1
            for a in range(k):
                work[2 * n_work] = pick
                work[2 * n_work + 1] = a
                n_work += 1
                in_work[pick * k + a] = 1

        while n_work > 0:
            n_work -= 1
            b = work[2 * n_work]
            a = work[2 * n_work + 1]
            in_work[b * k + a] = 0
            n_buf = 0
            for i in range(first[b], end[b]):
                buf[n_buf] = elems[i]
                n_buf += 1
            n_touched = 0
            for i in range(n_buf):
                t = buf[i]
                for p in range(inv_start[a * (n + 1) + t], inv_start[a * (n + 1) + t + 1]):
                    s = inv_list[p]
                    c = blk[s]
                    if loc[s] >= mid[c]:
                        if mid[c] == first[c]:
                            touched[n_touched] = c
                            n_touched += 1
                        q = mid[c]
                        tmp = elems[q]
                        elems[q] = s
                        elems[loc[s]] = tmp
                        loc[tmp] = loc[s]
                        loc[s] = q
                        mid[c] += 1
            for i in range(n_touched):
                c = touched[i]
                if mid[c] == end[c]:
                    mid[c] = first[c]
                    continue
                # marked part [first, mid) becomes the new block
                first[nb] = first[c]
                end[nb] = mid[c]
                mid[nb] = first[nb]
                first[c] = mid[c]
                for p in range(first[nb], end[nb]):
                    blk[elems[p]] = nb
                for a2 in range(k):
                    if in_work[c * k + a2]:
                        pick = nb
                    elif end[nb] - first[nb] <= end[c] - first[c]:
                        pick = nb
                    else:
                        pick = c
                    work[2 * n_work] = pick
                    work[2 * n_work + 1] = a2
                    n_work += 1
                    in_work[pick * k + a2] = 1
                nb += 1
        return [blk[s] for s in range(n)]
    finally:
        free(trans); free(inv_start); free(inv_list); free(elems); free(loc)
        free(blk); free(first); free(end); free(mid); free(touched); free(buf)
        free(in_work); free(work)


def count_walks(Py_ssize_t n_states, Py_ssize_t n_letters, table, Py_ssize_t start,
                Py_ssize_t blocked, Py_ssize_t max_degree):
    """int64 walk counter; returns None as soon as a count could overflow."""
    cdef Py_ssize_t n = n_states, k = n_letters, s, a, d, t
    cdef long *trans = <long *> malloc(n * k * sizeof(long))
    cdef long long *cur = <long long *> malloc(n * sizeof(long long))
    cdef long long *nxt = <long long *> malloc(n * sizeof(long long))
    cdef long long *swap
    cdef long long total, c
    cdef long long limit = LLONG_MAX // (k if k > 0 else 1)
    out = []
    try:
        for s in range(n * k):
            trans[s] = table[s]
        memset(cur, 0, n * sizeof(long long))
        if start != blocked:
            cur[start] = 1
        total = 1 if start != blocked else 0
        out.append(total)
        for d in range(max_degree):
            # the next total is at most k times this one
            if total > limit:
                return None
            memset(nxt, 0, n * sizeof(long long))
            for s in range(n):
                c = cur[s]
                if c:
                    for a in range(k):
                        nxt[trans[s * k + a]] += c
            if blocked >= 0:
                nxt[blocked] = 0
            total = 0
            for s in range(n):
                total += nxt[s]
            out.append(total)
            swap = cur
            cur = nxt
            nxt = swap
        return out
    finally:
        free(trans); free(cur); free(nxt)
