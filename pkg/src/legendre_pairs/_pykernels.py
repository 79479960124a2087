"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""

_QUAT = ((1, 0), (0, 1), (-1, 0), (0, -1))


def correlation(re_a, im_a, re_b, im_b):
    n = len(re_a)
    if len(im_a) != n or len(re_b) != n or len(im_b) != n:
        raise ValueError("length mismatch")
    out_re = [0] * n
    out_im = [0] * n
    for u in range(n):
        sr = si = 0
        for k in range(n):
            m = (k + u) % n
            sr += re_a[k] * re_b[m] + im_a[k] * im_b[m]
            si += im_a[k] * re_b[m] - re_a[k] * im_b[m]
        out_re[u] = sr
        out_im[u] = si
    return out_re, out_im


def _decode(index, n, base):
    digits = []
    for _ in range(n):
        index, d = divmod(index, base)
        digits.append(d)
    digits.reverse()
    if base == 2:
        return [1 - 2 * d for d in digits], [0] * n
    return [_QUAT[d][0] for d in digits], [_QUAT[d][1] for d in digits]


def brute_force_range(n, base, start, stop, max_exemplars=None):
    if base not in (2, 4):
        raise ValueError("base must be 2 or 4")
    total = base**n
    if start < 0 or stop > total or start > stop:
        raise ValueError("index range out of bounds")
    spectra = []
    for idx in range(total):
        re, im = _decode(idx, n, base)
        spec = []
        for u in range(1, n):
            r_re = r_im = 0
            for k in range(n):
                m = (k + u) % n
                r_re += re[k] * re[m] + im[k] * im[m]
                r_im += im[k] * re[m] - re[k] * im[m]
            spec.append((r_re, r_im))
        spectra.append(spec)
    # a pair passes iff spec_b == target(spec_a) termwise
    count = 0
    exemplars = []
    for a in range(start, stop):
        target = [(-2 - r, -i) for r, i in spectra[a]]
        for b in range(total):
            if spectra[b] == target:
                count += 1
                if max_exemplars is None or len(exemplars) < max_exemplars:
                    exemplars.append((a, b))
    return count, exemplars


def chi_shift_sums(chi, p, n):
    q = len(chi)
    digits = []
    for h in range(q):
        ds = []
        for _ in range(n):
            h, d = divmod(h, p)
            ds.append(d)
        digits.append(ds)
    weights = [p**k for k in range(n)]
    support = [h for h in range(q) if chi[h]]
    out = [0] * q
    for d in range(q):
        dd = digits[d]
        s = 0
        for h in support:
            hd = digits[h]
            code = 0
            for k in range(n):
                code += ((hd[k] + dd[k]) % p) * weights[k]
            s += chi[h] * chi[code]
        out[d] = s
    return out
