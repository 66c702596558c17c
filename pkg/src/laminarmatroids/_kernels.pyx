# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over bitmask-encoded set families.

Twin of _kernels_py with identical semantics and identical enumeration
order; that module holds the reference text for every function here.
Ground sets are limited to 16 elements, so masks, Gosper successor
arithmetic, and composite sort keys all fit comfortably in 64 bits.
"""

from libc.stdlib cimport calloc, free, malloc, qsort

BACKEND = "compiled"

_MAX_N = 16

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _pc(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline u64 _low(u64 x) noexcept nogil:
    return x & (~x + 1)


cdef inline u64 _gosper(u64 v) noexcept nogil:
    cdef u64 u = _low(v)
    cdef u64 t = v + u
    return t | (((v ^ t) // u) >> 2)


cdef u64* _arr(list masks) except NULL:
    cdef Py_ssize_t m = len(masks), i
    cdef u64* a = <u64*> malloc((m if m else 1) * sizeof(u64))
    if a == NULL:
        raise MemoryError()
    for i in range(m):
        a[i] = masks[i]
    return a


cdef bint _contains(u64* fam, Py_ssize_t m, u64 x) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(m):
        if fam[i] & x == fam[i]:
            return True
    return False


cdef bint _in_arr(u64* a, Py_ssize_t m, u64 x) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(m):
        if a[i] == x:
            return True
    return False


cdef int _rank(u64* circuits, Py_ssize_t m, u64 x, int n) noexcept nogil:
    cdef u64 cur = 0, b, t
    cdef int i
    for i in range(n):
        b = (<u64>1) << i
        if x & b:
            t = cur | b
            if not _contains(circuits, m, t):
                cur = t
    return _pc(cur)


cdef int _cmp_u64(const void* pa, const void* pb) noexcept nogil:
    cdef u64 a = (<u64*> pa)[0]
    cdef u64 b = (<u64*> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


cdef Py_ssize_t _minimal_into(u64* src, Py_ssize_t m, u64* dst) noexcept nogil:
    """Inclusion-minimal members of src into dst, ascending; returns count.

    Matches minimal_sets: dedupe, visit in (size, value) order so kept
    members only need checking against earlier kept ones, sort ascending.
    """
    cdef Py_ssize_t i, j, u = 0, k = 0
    cdef u64 key, mask
    cdef bint keep
    for i in range(m):
        dst[i] = ((<u64> _pc(src[i])) << 16) | src[i]
    qsort(dst, m, sizeof(u64), _cmp_u64)
    for i in range(m):
        if i == 0 or dst[i] != dst[i - 1]:
            dst[u] = dst[i]
            u += 1
    for i in range(u):
        mask = dst[i] & 0xFFFF
        keep = True
        for j in range(k):
            if dst[j] & mask == dst[j]:
                keep = False
                break
        if keep:
            dst[k] = mask
            k += 1
    qsort(dst, k, sizeof(u64), _cmp_u64)
    return k


def popcount(x):
    return _pc(<u64> x)


def submasks_of_size(universe, k):
    """Yield the size-k submasks of `universe` in ascending numeric order."""
    positions = []
    u = universe
    while u:
        b = u & -u
        positions.append(b.bit_length() - 1)
        u ^= b
    m = len(positions)
    if k < 0 or k > m:
        return
    if k == 0:
        yield 0
        return
    v = (1 << k) - 1
    limit = 1 << m
    while v < limit:
        x = v
        out = 0
        while x:
            b = x & -x
            out |= 1 << positions[b.bit_length() - 1]
            x ^= b
        yield out
        u = v & -v
        t = v + u
        v = t | (((v ^ t) // u) >> 2)


def contains_member(family, x):
    """True when some mask in `family` is a subset of x."""
    cdef list fam = list(family)
    cdef u64* a = _arr(fam)
    try:
        return _contains(a, len(fam), <u64> x)
    finally:
        free(a)


def minimal_sets(masks):
    """Inclusion-minimal members, deduplicated, ascending numeric order."""
    cdef list ms = list(masks)
    cdef Py_ssize_t m = len(ms), i, k
    cdef u64* src = _arr(ms)
    cdef u64* dst = <u64*> malloc((m if m else 1) * sizeof(u64))
    if dst == NULL:
        free(src)
        raise MemoryError()
    try:
        k = _minimal_into(src, m, dst)
        return [dst[i] for i in range(k)]
    finally:
        free(src)
        free(dst)


def greedy_rank(circuits, x, n):
    """Rank of x: grow an independent set in ascending index order."""
    cdef list cs = list(circuits)
    cdef u64* a = _arr(cs)
    try:
        return _rank(a, len(cs), <u64> x, <int> n)
    finally:
        free(a)


def closure_mask(circuits, x, n):
    cdef list cs = list(circuits)
    cdef Py_ssize_t m = len(cs)
    cdef u64* a = _arr(cs)
    cdef u64 xm = <u64> x, out, b
    cdef int nn = <int> n, i, r
    try:
        r = _rank(a, m, xm, nn)
        out = xm
        for i in range(nn):
            b = (<u64>1) << i
            if not (xm & b) and _rank(a, m, xm | b, nn) == r:
                out |= b
        return out
    finally:
        free(a)


def verify_antichain(circuits):
    """Index pair (i, j) with circuit i inside circuit j, or None."""
    cdef list cs = list(circuits)
    cdef Py_ssize_t m = len(cs), i, j
    cdef u64* a = _arr(cs)
    try:
        for i in range(m):
            for j in range(m):
                if i != j and a[i] & a[j] == a[i]:
                    return (i, j)
        return None
    finally:
        free(a)


def verify_elimination(circuits, n):
    """First elimination-axiom violation as (i, j, element index), or None.

    The memo is a flat table over all 2**n masks: 0 unseen, 1 dependent,
    2 independent.
    """
    cdef list cs = list(circuits)
    cdef Py_ssize_t m = len(cs), i, j
    cdef int nn = <int> n
    cdef u64* a = _arr(cs)
    cdef char* memo = <char*> calloc((<size_t>1) << nn, 1)
    if memo == NULL:
        free(a)
        raise MemoryError()
    cdef u64 ci, cj, inter, uni, rest, b, x
    cdef char dep
    try:
        for i in range(m):
            ci = a[i]
            for j in range(i + 1, m):
                cj = a[j]
                inter = ci & cj
                if not inter:
                    continue
                uni = ci | cj
                rest = inter
                while rest:
                    b = _low(rest)
                    rest ^= b
                    x = uni & ~b
                    dep = memo[x]
                    if dep == 0:
                        dep = 1 if _contains(a, m, x) else 2
                        memo[x] = dep
                    if dep == 2:
                        return (i, j, _ctz(b))
        return None
    finally:
        free(a)
        free(memo)


def laminar_circuit_masks(n, set_masks, caps):
    """Circuits of the matroid in which x is dependent iff it overfills a set."""
    cdef list sm = list(set_masks)
    cdef list cp = list(caps)
    cdef Py_ssize_t q = len(sm), fi, nf = 0, i
    cdef int nn = <int> n, k
    cdef u64* am = _arr(sm)
    cdef int* ac = <int*> malloc((q if q else 1) * sizeof(int))
    cdef u64* found = <u64*> malloc(((<size_t>1) << nn if nn else 1) * sizeof(u64))
    if ac == NULL or found == NULL:
        free(am)
        free(ac)
        free(found)
        raise MemoryError()
    cdef u64 v, limit = (<u64>1) << nn, x
    cdef bint dep
    try:
        for fi in range(q):
            ac[fi] = cp[fi]
        for k in range(1, nn + 1):
            v = ((<u64>1) << k) - 1
            while v < limit:
                x = v
                v = _gosper(v)
                if _contains(found, nf, x):
                    continue
                dep = False
                for fi in range(q):
                    if _pc(am[fi] & x) > ac[fi]:
                        dep = True
                        break
                if dep:
                    found[nf] = x
                    nf += 1
        return [found[i] for i in range(nf)]
    finally:
        free(am)
        free(ac)
        free(found)


def cocircuit_masks(n, circuits, rank):
    """Minimal masks whose removal drops the rank (circuits of the dual)."""
    cdef list cs = list(circuits)
    cdef Py_ssize_t m = len(cs), nf = 0, i
    cdef int nn = <int> n, rk = <int> rank, k
    cdef u64* a = _arr(cs)
    cdef u64* found = <u64*> malloc(((<size_t>1) << nn if nn else 1) * sizeof(u64))
    if found == NULL:
        free(a)
        raise MemoryError()
    cdef u64 full = ((<u64>1) << nn) - 1
    cdef u64 v, limit = (<u64>1) << nn, x
    try:
        for k in range(1, nn + 1):
            v = ((<u64>1) << k) - 1
            while v < limit:
                x = v
                v = _gosper(v)
                if _contains(found, nf, x):
                    continue
                if _rank(a, m, full & ~x, nn) < rk:
                    found[nf] = x
                    nf += 1
        return [found[i] for i in range(nf)]
    finally:
        free(a)
        free(found)


def truncation_circuits(n, circuits, rank):
    """Circuit masks after one truncation: small circuits plus rank-size
    independent sets (none contains another, so the union is an antichain)."""
    cdef list cs = list(circuits)
    cdef Py_ssize_t m = len(cs)
    cdef int nn = <int> n, rk = <int> rank
    cdef u64* a = _arr(cs)
    cdef u64 v, limit = (<u64>1) << nn
    out = [c for c in cs if _pc(<u64> c) <= rk]
    try:
        if rk == 0:
            if not _contains(a, m, 0):
                out.append(0)
        elif rk <= nn:
            v = ((<u64>1) << rk) - 1
            while v < limit:
                if not _contains(a, m, v):
                    out.append(v)
                v = _gosper(v)
        out.sort()
        return out
    finally:
        free(a)


def minor_circuits(circuits, delete_mask, contract_mask):
    """Circuit masks of (M delete D) contract T for disjoint masks D, T."""
    cand = []
    for c in circuits:
        if c & delete_mask:
            continue
        c &= ~contract_mask
        if c:
            cand.append(c)
    return minimal_sets(cand)


def cyclic_flat_masks(n, circuits):
    """Masks that are flats and are unions of the circuits inside them."""
    cdef list cs = list(circuits)
    cdef Py_ssize_t m = len(cs), j
    cdef int nn = <int> n, i, r
    cdef u64* a = _arr(cs)
    cdef u64 f, uni, b
    cdef bint flat
    out = []
    try:
        for f in range((<u64>1) << nn):
            uni = 0
            for j in range(m):
                if a[j] & f == a[j]:
                    uni |= a[j]
            if uni != f:
                continue
            r = _rank(a, m, f, nn)
            flat = True
            for i in range(nn):
                b = (<u64>1) << i
                if not (f & b) and _rank(a, m, f | b, nn) == r:
                    flat = False
                    break
            if flat:
                out.append(f)
        return out
    finally:
        free(a)


def _element_signatures(n, circuits):
    sigs = []
    for i in range(n):
        b = 1 << i
        sizes = sorted(_pc(<u64> c) for c in circuits if c & b)
        sigs.append(tuple(sizes))
    return sigs


cdef bint _place(int i, int n, u64 used, u64 assigned, int* perm,
                 bint* compat, u64* through, Py_ssize_t* th_off,
                 u64* targ, Py_ssize_t tm) noexcept nogil:
    cdef int j
    cdef Py_ssize_t k
    cdef u64 bj, na, c, img, rest, b
    cdef bint ok
    if i == n:
        return True
    for j in range(n):
        bj = (<u64>1) << j
        if used & bj or not compat[i * n + j]:
            continue
        perm[i] = j
        na = assigned | ((<u64>1) << i)
        ok = True
        for k in range(th_off[i], th_off[i + 1]):
            c = through[k]
            if c & ~na:
                continue
            img = 0
            rest = c
            while rest:
                b = _low(rest)
                rest ^= b
                img |= (<u64>1) << perm[_ctz(b)]
            if not _in_arr(targ, tm, img):
                ok = False
                break
        if ok and _place(i + 1, n, used | bj, na, perm, compat,
                         through, th_off, targ, tm):
            return True
    perm[i] = -1
    return False


def iso_bijection(n1, circuits1, n2, circuits2):
    """Index permutation mapping circuits1 onto circuits2, or None.

    Backtracking over element images, pruned by per-element signatures
    (multiset of sizes of the circuits through the element); a completed
    circuit must map onto a circuit.  First witness in index order wins.
    """
    if n1 != n2:
        return None
    cdef list c1 = list(circuits1), c2 = list(circuits2)
    if len(c1) != len(c2):
        return None
    if sorted(_pc(<u64> c) for c in c1) != sorted(_pc(<u64> c) for c in c2):
        return None
    cdef int n = <int> n1, i, j
    cdef Py_ssize_t m = len(c1), k, pos
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* a1 = _arr(c1)
    cdef u64* a2 = _arr(c2)
    if _rank(a1, m, full, n) != _rank(a2, m, full, n):
        free(a1)
        free(a2)
        return None
    sig1 = _element_signatures(n, c1)
    sig2 = _element_signatures(n, c2)
    if sorted(sig1) != sorted(sig2):
        free(a1)
        free(a2)
        return None
    cdef bint* compat = <bint*> malloc((n * n if n else 1) * sizeof(bint))
    cdef int* perm = <int*> malloc((n if n else 1) * sizeof(int))
    cdef u64* through = <u64*> malloc((n * m if n * m else 1) * sizeof(u64))
    cdef Py_ssize_t* th_off = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    if compat == NULL or perm == NULL or through == NULL or th_off == NULL:
        free(a1)
        free(a2)
        free(compat)
        free(perm)
        free(through)
        free(th_off)
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                compat[i * n + j] = sig1[i] == sig2[j]
            perm[i] = -1
        pos = 0
        th_off[0] = 0
        for i in range(n):
            for k in range(m):
                if a1[k] & ((<u64>1) << i):
                    through[pos] = a1[k]
                    pos += 1
            th_off[i + 1] = pos
        if _place(0, n, 0, 0, perm, compat, through, th_off, a2, m):
            return [perm[i] for i in range(n)]
        return None
    finally:
        free(a1)
        free(a2)
        free(compat)
        free(perm)
        free(through)
        free(th_off)


def find_minor(n, circuits, rank, n_target, circuits_target, rank_target):
    """First (delete_mask, contract_mask, bijection) presenting the target
    as a minor, or None.

    Contract sets T are independent, delete sets D are coindependent; any
    minor admits such a representation.  T ascends over bit patterns, then
    D ascends over bit patterns disjoint from T; the bijection maps the
    kept elements (compressed in ascending index order) onto the target.
    """
    cdef int t = <int> rank - <int> rank_target
    cdef int d = <int> n - <int> n_target - t
    if t < 0 or d < 0:
        return None
    cdef list cs = list(circuits)
    cdef list ct = list(circuits_target)
    cdef Py_ssize_t m = len(cs), mt = len(ct), nc, na, i
    cdef int nn = <int> n, rk = <int> rank, nt = <int> n_target, s
    cdef u64* a = _arr(cs)
    cdef u64* contracted = <u64*> malloc((m if m else 1) * sizeof(u64))
    cdef u64* scratch = <u64*> malloc((m if m else 1) * sizeof(u64))
    cdef u64* cand = <u64*> malloc((m if m else 1) * sizeof(u64))
    cdef int* tsizes = <int*> malloc((mt if mt else 1) * sizeof(int))
    cdef int* csizes = <int*> malloc((mt if mt else 1) * sizeof(int))
    if (contracted == NULL or scratch == NULL or cand == NULL
            or tsizes == NULL or csizes == NULL):
        free(a)
        free(contracted)
        free(scratch)
        free(cand)
        free(tsizes)
        free(csizes)
        raise MemoryError()
    cdef u64 full = ((<u64>1) << nn) - 1
    cdef u64 tm_, dm, rest_univ, v, limit, x, kept, rest, b, img
    cdef int positions[16]
    cdef int slot[16]
    cdef int np_, swap, p, q
    cdef bint more_t, more_d, sizes_ok
    tsorted = sorted(_pc(<u64> c) for c in ct)
    try:
        for i in range(mt):
            tsizes[i] = tsorted[i]
        if t > nn:
            return None
        tm_ = ((<u64>1) << t) - 1
        more_t = True
        while more_t:
            if t == 0:
                more_t = False
            x = tm_
            if t > 0:
                tm_ = _gosper(tm_)
                if tm_ >= ((<u64>1) << nn):
                    more_t = False
            if _contains(a, m, x):
                continue
            # circuits of the contraction by x, minimal and ascending
            nc = 0
            for i in range(m):
                if a[i] & ~x:
                    scratch[nc] = a[i] & ~x
                    nc += 1
            nc = _minimal_into(scratch, nc, contracted)
            rest_univ = full & ~x
            np_ = 0
            rest = rest_univ
            while rest:
                b = _low(rest)
                positions[np_] = _ctz(b)
                np_ += 1
                rest ^= b
            if d > np_:
                continue
            v = ((<u64>1) << d) - 1
            limit = (<u64>1) << np_
            more_d = True
            while more_d:
                if d == 0:
                    more_d = False
                    dm = 0
                else:
                    if v >= limit:
                        break
                    dm = 0
                    rest = v
                    while rest:
                        b = _low(rest)
                        rest ^= b
                        dm |= (<u64>1) << positions[_ctz(b)]
                    v = _gosper(v)
                if _rank(a, m, full & ~dm, nn) < rk:
                    continue
                na = 0
                for i in range(nc):
                    if not (contracted[i] & dm):
                        cand[na] = contracted[i]
                        na += 1
                if na != mt:
                    continue
                kept = full & ~x & ~dm
                rest = kept
                s = 0
                while rest:
                    b = _low(rest)
                    slot[_ctz(b)] = s
                    s += 1
                    rest ^= b
                sizes_ok = True
                for i in range(na):
                    csizes[i] = _pc(cand[i])
                # insertion sort; candidate counts match the target count
                for p in range(1, <int> na):
                    swap = csizes[p]
                    q = p - 1
                    while q >= 0 and csizes[q] > swap:
                        csizes[q + 1] = csizes[q]
                        q -= 1
                    csizes[q + 1] = swap
                for i in range(na):
                    if csizes[i] != tsizes[i]:
                        sizes_ok = False
                        break
                if not sizes_ok:
                    continue
                compressed = []
                for i in range(na):
                    img = 0
                    rest = cand[i]
                    while rest:
                        b = _low(rest)
                        rest ^= b
                        img |= (<u64>1) << slot[_ctz(b)]
                    compressed.append(img)
                perm = iso_bijection(nt, compressed, nt, ct)
                if perm is not None:
                    return (dm, x, perm)
        return None
    finally:
        free(a)
        free(contracted)
        free(scratch)
        free(cand)
        free(tsizes)
        free(csizes)
