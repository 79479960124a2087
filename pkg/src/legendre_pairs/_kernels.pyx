# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.  Signatures mirror ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, free


def correlation(re_a, im_a, re_b, im_b):
    """Periodic cross-correlation R_{a,b}(u) for every shift u.

    Sequences come as parallel integer lists of real and imaginary parts.
    Returns two lists (real, imaginary) of length N.
    """
    cdef Py_ssize_t n = len(re_a)
    if len(im_a) != n or len(re_b) != n or len(im_b) != n:
        raise ValueError("length mismatch")
    cdef long *ar = <long *> malloc(4 * n * sizeof(long))
    if ar == NULL:
        raise MemoryError()
    cdef long *ai = ar + n
    cdef long *br = ar + 2 * n
    cdef long *bi = ar + 3 * n
    cdef Py_ssize_t k, u, m
    cdef long sr, si
    out_re = [0] * n
    out_im = [0] * n
    try:
        for k in range(n):
            ar[k] = re_a[k]
            ai[k] = im_a[k]
            br[k] = re_b[k]
            bi[k] = im_b[k]
        for u in range(n):
            sr = 0
            si = 0
            m = u
            for k in range(n):
                # a_k * conj(b_m)
                sr += ar[k] * br[m] + ai[k] * bi[m]
                si += ai[k] * br[m] - ar[k] * bi[m]
                m += 1
                if m == n:
                    m = 0
            out_re[u] = sr
            out_im[u] = si
    finally:
        free(ar)
    return out_re, out_im


cdef void _decode(long index, int n, int base, long *re, long *im):
    # most significant digit is entry 0
    cdef int k, d
    for k in range(n - 1, -1, -1):
        d = index % base
        index //= base
        if base == 2:
            re[k] = 1 - 2 * d
            im[k] = 0
        else:
            re[k] = 1 if d == 0 else (-1 if d == 2 else 0)
            im[k] = 1 if d == 1 else (-1 if d == 3 else 0)


def brute_force_range(int n, int base, long start, long stop, max_exemplars=None):
    """Count ordered pairs (a, b) with R_a(u) + R_b(u) = -2 for all u != 0.

    Candidates are indexed by base-``base`` digit strings (entry 0 most
    significant); digit d encodes +1/-1 (base 2) or i**d (base 4).  Only
    first sequences with index in [start, stop) are enumerated.
    Returns (count, [(index_a, index_b), ...]) with exemplars ascending.
    """
    if base != 2 and base != 4:
        raise ValueError("base must be 2 or 4")
    cdef long total = 1
    cdef int k, u, m
    for k in range(n):
        total *= base
    if start < 0 or stop > total or start > stop:
        raise ValueError("index range out of bounds")
    cdef long cap = -1 if max_exemplars is None else max_exemplars
    cdef long *sre = <long *> malloc(total * n * sizeof(long))
    cdef long *sim = <long *> malloc(total * n * sizeof(long))
    cdef long *re = <long *> malloc(n * sizeof(long))
    cdef long *im = <long *> malloc(n * sizeof(long))
    if sre == NULL or sim == NULL or re == NULL or im == NULL:
        free(sre); free(sim); free(re); free(im)
        raise MemoryError()
    cdef long idx, a, b, count = 0
    cdef long r_re, r_im
    cdef bint ok
    exemplars = []
    try:
        for idx in range(total):
            _decode(idx, n, base, re, im)
            for u in range(n):
                r_re = 0
                r_im = 0
                for k in range(n):
                    m = (k + u) % n
                    r_re += re[k] * re[m] + im[k] * im[m]
                    r_im += im[k] * re[m] - re[k] * im[m]
                sre[idx * n + u] = r_re
                sim[idx * n + u] = r_im
        for a in range(start, stop):
            for b in range(total):
                ok = True
                for u in range(1, n):
                    if sre[a * n + u] + sre[b * n + u] != -2 or sim[a * n + u] + sim[b * n + u] != 0:
                        ok = False
                        break
                if ok:
                    count += 1
                    if cap < 0 or len(exemplars) < cap:
                        exemplars.append((a, b))
    finally:
        free(sre); free(sim); free(re); free(im)
    return count, exemplars


def chi_shift_sums(chi, int p, int n):
    """S[d] = sum_h chi[h] * chi[h + d] over the additive group (Z_p)^n.

    ``chi`` is indexed by element code (base-p digits, constant first).
    """
    cdef long q = len(chi)
    cdef long *c = <long *> malloc(q * sizeof(long))
    cdef int *digits = <int *> malloc(q * n * sizeof(int))
    cdef long *weights = <long *> malloc(n * sizeof(long))
    if c == NULL or digits == NULL or weights == NULL:
        free(c); free(digits); free(weights)
        raise MemoryError()
    cdef long h, d, code, s, t, w
    cdef int k, x
    out = [0] * q
    try:
        w = 1
        for k in range(n):
            weights[k] = w
            w *= p
        for h in range(q):
            c[h] = chi[h]
            t = h
            for k in range(n):
                digits[h * n + k] = t % p
                t //= p
        for d in range(q):
            s = 0
            for h in range(q):
                if c[h] == 0:
                    continue
                code = 0
                for k in range(n):
                    x = digits[h * n + k] + digits[d * n + k]
                    if x >= p:
                        x -= p
                    code += x * weights[k]
                s += c[h] * c[code]
            out[d] = s
    finally:
        free(c); free(digits); free(weights)
    return out
