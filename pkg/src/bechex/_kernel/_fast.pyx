# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
# cython: initializedcheck=False
"""Compiled kernel backend: canonical cell keys, one-cell growth, the
hole filter and boundary tracing.

Mirrors bechex._kernel.pure; bechex._kernel picks a backend at import.
Shapes arrive as byte-packed keys (see bechex._kernel.common).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.string cimport memset

BACKEND = "cython"

DEF MAXC = 256      # cells per shape
DEF MAXG = 4624     # flood/occupancy grid slots (68 * 68)
DEF MAXPER = 1024   # boundary edges per trace

# Neighbour offsets of a cell, CCW; while tracing, NQ/NR[k] is also the
# offset of the hexagon faced when the edge walked in direction k ends.
cdef int NQ[6]
cdef int NR[6]
# Offset of the cell across edge j (edge j is walked in direction j with
# the cell on the left).
cdef int EQ[6]
cdef int ER[6]
# The 12 point symmetries as row-major 2x2 integer matrices on (q, r).
cdef int MAT[12][4]


def _init_tables():
    nbr = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
    edge = ((1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1))
    for j in range(6):
        NQ[j] = nbr[j][0]
        NR[j] = nbr[j][1]
        EQ[j] = edge[j][0]
        ER[j] = edge[j][1]

    def mul(a, b):
        return (
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        )

    rot = (0, -1, 1, 1)    # (q, r) -> (-r, q + r)
    ref = (1, 0, -1, -1)   # (q, r) -> (q, -q - r)
    mats = []
    m = (1, 0, 0, 1)
    for _ in range(6):
        mats.append(m)
        m = mul(rot, m)
    m = ref
    for _ in range(6):
        mats.append(m)
        m = mul(rot, m)
    for i in range(12):
        for j in range(4):
            MAT[i][j] = mats[i][j]


_init_tables()


cdef int _canon(const int* q, const int* r, int n, unsigned char* out) except -1:
    """Write the canonical packed form of n cells into out (2n bytes)."""
    cdef int tq[MAXC]
    cdef int tr[MAXC]
    cdef int enc[MAXC]
    cdef int best[MAXC]
    cdef int t, i, j, a0, a1, a2, a3, minq, minr, key
    cdef bint have = False
    for t in range(12):
        a0 = MAT[t][0]
        a1 = MAT[t][1]
        a2 = MAT[t][2]
        a3 = MAT[t][3]
        minq = 1 << 28
        minr = 1 << 28
        for i in range(n):
            tq[i] = a0 * q[i] + a1 * r[i]
            tr[i] = a2 * q[i] + a3 * r[i]
            if tq[i] < minq:
                minq = tq[i]
            if tr[i] < minr:
                minr = tr[i]
        for i in range(n):
            enc[i] = ((tq[i] - minq) << 8) | (tr[i] - minr)
        for i in range(1, n):
            key = enc[i]
            j = i - 1
            while j >= 0 and enc[j] > key:
                enc[j + 1] = enc[j]
                j -= 1
            enc[j + 1] = key
        if not have:
            for i in range(n):
                best[i] = enc[i]
            have = True
        else:
            for i in range(n):
                if enc[i] != best[i]:
                    if enc[i] < best[i]:
                        for j in range(n):
                            best[j] = enc[j]
                    break
    for i in range(n):
        out[2 * i] = <unsigned char> (best[i] >> 8)
        out[2 * i + 1] = <unsigned char> (best[i] & 0xFF)
    return 0


cdef inline int _decode(bytes key, int* q, int* r, int* maxq, int* maxr) except -1:
    cdef Py_ssize_t length = len(key)
    cdef int n = <int> (length // 2)
    if length == 0 or length != 2 * n or n > 250:
        raise ValueError("malformed or oversized cell key")
    cdef const unsigned char* src = key
    cdef int i
    maxq[0] = 0
    maxr[0] = 0
    for i in range(n):
        q[i] = src[2 * i]
        r[i] = src[2 * i + 1]
        if q[i] > maxq[0]:
            maxq[0] = q[i]
        if r[i] > maxr[0]:
            maxr[0] = r[i]
    return n


def canonical_key(bytes key):
    cdef int q[MAXC]
    cdef int r[MAXC]
    cdef unsigned char out[512]
    cdef int maxq, maxr
    cdef int n = _decode(key, q, r, &maxq, &maxr)
    _canon(q, r, n, out)
    return PyBytes_FromStringAndSize(<char*> out, 2 * n)


cdef int _grow_one(bytes key, set out) except -1:
    cdef int q[MAXC]
    cdef int r[MAXC]
    cdef int cq[MAXC]
    cdef int cr[MAXC]
    cdef unsigned char occ[MAXG]
    cdef unsigned char buf[512]
    cdef int maxq, maxr, w, hgt, i, j, nq, nr
    cdef int n = _decode(key, q, r, &maxq, &maxr)
    w = maxq + 3
    hgt = maxr + 3
    if w * hgt > MAXG:
        raise ValueError("shape too large for the compiled kernel")
    memset(occ, 0, w * hgt)
    for i in range(n):
        occ[(q[i] + 1) * hgt + (r[i] + 1)] = 1
        cq[i] = q[i]
        cr[i] = r[i]
    for i in range(n):
        for j in range(6):
            nq = q[i] + NQ[j]
            nr = r[i] + NR[j]
            if occ[(nq + 1) * hgt + (nr + 1)]:
                continue
            occ[(nq + 1) * hgt + (nr + 1)] = 2  # tried
            cq[n] = nq
            cr[n] = nr
            _canon(cq, cr, n + 1, buf)
            out.add(PyBytes_FromStringAndSize(<char*> buf, 2 * (n + 1)))
    return 0


def grow(parents):
    """Canonical keys of every one-cell extension of the given shapes."""
    cdef set out = set()
    cdef bytes key
    for key in parents:
        _grow_one(key, out)
    return out


def simply_connected(bytes key):
    cdef int q[MAXC]
    cdef int r[MAXC]
    cdef unsigned char occ[MAXG]
    cdef int stack[MAXG]
    cdef int maxq, maxr, w, hgt, i, top, idx, gq, gr, nq, nr
    cdef int n = _decode(key, q, r, &maxq, &maxr)
    w = maxq + 3
    hgt = maxr + 3
    if w * hgt > MAXG:
        raise ValueError("shape too large for the compiled kernel")
    memset(occ, 0, w * hgt)
    for i in range(n):
        occ[(q[i] + 1) * hgt + (r[i] + 1)] = 1
    # flood the complement from the margin corner (-1, -1)
    occ[0] = 2
    stack[0] = 0
    top = 1
    while top:
        top -= 1
        idx = stack[top]
        gq = idx // hgt
        gr = idx - gq * hgt
        for i in range(6):
            nq = gq + NQ[i]
            nr = gr + NR[i]
            if 0 <= nq < w and 0 <= nr < hgt and not occ[nq * hgt + nr]:
                occ[nq * hgt + nr] = 2
                stack[top] = nq * hgt + nr
                top += 1
    for idx in range(w * hgt):
        if not occ[idx]:
            return False
    return True


def trace_code(bytes key):
    """Canonical boundary code of a connected hole-free packed shape."""
    cdef int q[MAXC]
    cdef int r[MAXC]
    cdef unsigned char occ[MAXG]
    cdef unsigned char turns[MAXPER]
    cdef int sym[MAXPER]
    cdef int dbl[MAXPER]
    cdef int best[MAXPER]
    cdef unsigned char digits[MAXPER]
    cdef int maxq, maxr, w, hgt, i, j, m, k, j0
    cdef int cq, cr, aq, ar, f, ns, run, s, rev, better
    cdef int n = _decode(key, q, r, &maxq, &maxr)
    if n == 1:
        return "6"
    w = maxq + 3
    hgt = maxr + 3
    if w * hgt > MAXG:
        raise ValueError("shape too large for the compiled kernel")
    memset(occ, 0, w * hgt)
    for i in range(n):
        occ[(q[i] + 1) * hgt + (r[i] + 1)] = 1
    # keys are sorted, so cell 0 is the least cell, always on the boundary
    j0 = -1
    for j in range(6):
        if not occ[(q[0] + EQ[j] + 1) * hgt + (r[0] + ER[j] + 1)]:
            j0 = j
            break
    if j0 < 0:
        raise ValueError("start cell has no boundary edge")
    cq = q[0]
    cr = r[0]
    k = j0
    m = 0
    while True:
        aq = cq + NQ[k]
        ar = cr + NR[k]
        if occ[(aq + 1) * hgt + (ar + 1)]:
            turns[m] = 1
            cq = aq
            cr = ar
            k = (k + 5) % 6
        else:
            turns[m] = 0
            k = (k + 1) % 6
        m += 1
        if cq == q[0] and cr == r[0] and k == j0:
            break
        if m >= MAXPER:
            raise ValueError("perimeter walk failed to terminate")
    # cut the cyclic turn sequence right after a right turn, then read the
    # symbols off as run lengths ending at right turns
    f = 0
    while turns[f] == 0:
        f += 1
    ns = 0
    run = 0
    for i in range(m):
        run += 1
        if turns[(f + 1 + i) % m]:
            if run > 5:
                raise ValueError("run longer than 5: input is not a benzenoid")
            sym[ns] = run
            ns += 1
            run = 0
    # canonical form: the greatest word over all rotations, both readings
    for i in range(ns):
        best[i] = sym[i]
    for rev in range(2):
        if rev:
            for i in range(ns):
                dbl[i] = sym[ns - 1 - i]
                dbl[ns + i] = sym[ns - 1 - i]
        else:
            for i in range(ns):
                dbl[i] = sym[i]
                dbl[ns + i] = sym[i]
        for s in range(ns):
            better = 0
            for i in range(ns):
                if dbl[s + i] != best[i]:
                    better = 1 if dbl[s + i] > best[i] else -1
                    break
            if better > 0:
                for i in range(ns):
                    best[i] = dbl[s + i]
    for i in range(ns):
        digits[i] = <unsigned char> (48 + best[i])
    return PyBytes_FromStringAndSize(<char*> digits, ns).decode("ascii")


def code_deficit(str code):
    """Convexity deficit of a digit string; -1 when undefined."""
    cdef int syms[MAXPER]
    cdef int n = len(code)
    cdef int i, width, acc, least
    if code == "6":
        return 0
    if n == 0 or n >= MAXPER:
        raise ValueError("code length out of range")
    for i in range(n):
        syms[i] = ord(code[i]) - 48
        if syms[i] < 1 or syms[i] > 5:
            raise ValueError(f"bad symbol in code: {code!r}")
    for width in range(1, n + 1):
        acc = 0
        for i in range(width):
            acc += syms[i]
        least = acc
        for i in range(1, n):
            acc += syms[(i + width - 1) % n] - syms[i - 1]
            if acc < least:
                least = acc
        if least >= 2 * width:
            return width - 1
    return -1
