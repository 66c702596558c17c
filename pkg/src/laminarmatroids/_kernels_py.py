"""Pure-Python kernels over bitmask-encoded set families.

Every function here has a compiled twin in _kernels.pyx with identical
semantics and identical enumeration order (subsets of a fixed size are
visited in ascending bit-pattern order), so results match bit for bit
whichever backend is active.  Ground sets are limited to 16 elements;
masks are plain ints with bit i standing for the i-th ground element.
"""

from __future__ import annotations

BACKEND = "python"

_MAX_N = 16


def popcount(x):
    return x.bit_count()


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
    for f in family:
        if f & x == f:
            return True
    return False


def minimal_sets(masks):
    """Inclusion-minimal members, deduplicated, ascending numeric order."""
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept = []
    for m in uniq:
        ok = True
        for f in kept:
            if f & m == f:
                ok = False
                break
        if ok:
            kept.append(m)
    kept.sort()
    return kept


def greedy_rank(circuits, x, n):
    """Rank of x: grow an independent set in ascending index order."""
    cur = 0
    for i in range(n):
        b = 1 << i
        if x & b:
            t = cur | b
            if not contains_member(circuits, t):
                cur = t
    return popcount(cur)


def closure_mask(circuits, x, n):
    r = greedy_rank(circuits, x, n)
    out = x
    for i in range(n):
        b = 1 << i
        if not (x & b) and greedy_rank(circuits, x | b, n) == r:
            out |= b
    return out


def verify_antichain(circuits):
    """Index pair (i, j) with circuit i inside circuit j, or None."""
    for i, ci in enumerate(circuits):
        for j, cj in enumerate(circuits):
            if i != j and ci & cj == ci:
                return (i, j)
    return None


def verify_elimination(circuits, n):
    """First elimination-axiom violation as (i, j, element index), or None.

    Dependence results are memoised per mask; distinct union masks are
    bounded by 2**n, which keeps the pair loop tractable.
    """
    memo = {}
    for i, ci in enumerate(circuits):
        for j in range(i + 1, len(circuits)):
            cj = circuits[j]
            inter = ci & cj
            if not inter:
                continue
            union = ci | cj
            rest = inter
            while rest:
                b = rest & -rest
                rest ^= b
                x = union & ~b
                dep = memo.get(x)
                if dep is None:
                    dep = contains_member(circuits, x)
                    memo[x] = dep
                if not dep:
                    return (i, j, b.bit_length() - 1)
    return None


def _minimal_dependent(n, universe, dep):
    """Size-ordered pruned search for the minimal masks satisfying `dep`.

    `dep` must be monotone (supersets of dependent sets are dependent).
    Any mask strictly containing an already-found minimal mask is skipped,
    so every dependent mask reached is itself minimal.
    """
    found = []
    m = popcount(universe)
    for k in range(1, m + 1):
        for x in submasks_of_size(universe, k):
            if contains_member(found, x):
                continue
            if dep(x):
                found.append(x)
    return found


def laminar_circuit_masks(n, set_masks, caps):
    """Circuits of the matroid in which x is dependent iff it overfills a set."""

    def dep(x):
        for a, c in zip(set_masks, caps):
            if popcount(a & x) > c:
                return True
        return False

    return _minimal_dependent(n, (1 << n) - 1, dep)


def cocircuit_masks(n, circuits, rank):
    """Minimal masks whose removal drops the rank (circuits of the dual)."""
    full = (1 << n) - 1

    def dep(x):
        return greedy_rank(circuits, full & ~x, n) < rank

    return _minimal_dependent(n, full, dep)


def truncation_circuits(n, circuits, rank):
    """Circuit masks after one truncation: small circuits plus rank-size
    independent sets (none contains another, so the union is an antichain)."""
    out = [c for c in circuits if popcount(c) <= rank]
    full = (1 << n) - 1
    for x in submasks_of_size(full, rank):
        if not contains_member(circuits, x):
            out.append(x)
    out.sort()
    return out


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
    out = []
    for f in range(1 << n):
        union = 0
        for c in circuits:
            if c & f == c:
                union |= c
        if union != f:
            continue
        r = greedy_rank(circuits, f, n)
        flat = True
        for i in range(n):
            b = 1 << i
            if not (f & b) and greedy_rank(circuits, f | b, n) == r:
                flat = False
                break
        if flat:
            out.append(f)
    return out


def _element_signatures(n, circuits):
    sigs = []
    for i in range(n):
        b = 1 << i
        sizes = sorted(popcount(c) for c in circuits if c & b)
        sigs.append(tuple(sizes))
    return sigs


def iso_bijection(n1, circuits1, n2, circuits2):
    """Index permutation mapping circuits1 onto circuits2, or None.

    Backtracking over element images, pruned by per-element signatures
    (multiset of sizes of the circuits through the element); a completed
    circuit must map onto a circuit.  First witness in index order wins.
    """
    if n1 != n2:
        return None
    if len(circuits1) != len(circuits2):
        return None
    if sorted(popcount(c) for c in circuits1) != sorted(
        popcount(c) for c in circuits2
    ):
        return None
    n = n1
    full = (1 << n) - 1
    if greedy_rank(circuits1, full, n) != greedy_rank(circuits2, full, n):
        return None
    sig1 = _element_signatures(n, circuits1)
    sig2 = _element_signatures(n, circuits2)
    if sorted(sig1) != sorted(sig2):
        return None
    through = [[c for c in circuits1 if c & (1 << i)] for i in range(n)]
    target = set(circuits2)
    perm = [-1] * n

    def place(i, used, assigned):
        if i == n:
            return True
        si = sig1[i]
        for j in range(n):
            bj = 1 << j
            if used & bj or sig2[j] != si:
                continue
            perm[i] = j
            na = assigned | (1 << i)
            ok = True
            for c in through[i]:
                if c & ~na:
                    continue
                img = 0
                rest = c
                while rest:
                    b = rest & -rest
                    rest ^= b
                    img |= 1 << perm[b.bit_length() - 1]
                if img not in target:
                    ok = False
                    break
            if ok and place(i + 1, used | bj, na):
                return True
        perm[i] = -1
        return False

    if place(0, 0, 0):
        return list(perm)
    return None


def find_minor(n, circuits, rank, n_target, circuits_target, rank_target):
    """First (delete_mask, contract_mask, bijection) presenting the target
    as a minor, or None.

    Contract sets T are independent, delete sets D are coindependent; any
    minor admits such a representation.  T ascends over bit patterns, then
    D ascends over bit patterns disjoint from T; the bijection maps the
    kept elements (compressed in ascending index order) onto the target.
    """
    t = rank - rank_target
    d = n - n_target - t
    if t < 0 or d < 0:
        return None
    full = (1 << n) - 1
    target_sizes = sorted(popcount(c) for c in circuits_target)
    for tm in submasks_of_size(full, t):
        if contains_member(circuits, tm):
            continue
        contracted = minor_circuits(circuits, 0, tm)
        for dm in submasks_of_size(full & ~tm, d):
            if greedy_rank(circuits, full & ~dm, n) < rank:
                continue
            cand = [c for c in contracted if not (c & dm)]
            if len(cand) != len(circuits_target):
                continue
            kept = full & ~tm & ~dm
            positions = []
            rest = kept
            while rest:
                b = rest & -rest
                positions.append(b.bit_length() - 1)
                rest ^= b
            slot = {p: s for s, p in enumerate(positions)}
            compressed = []
            for c in cand:
                x = 0
                r = c
                while r:
                    b = r & -r
                    r ^= b
                    x |= 1 << slot[b.bit_length() - 1]
                compressed.append(x)
            if sorted(popcount(c) for c in compressed) != target_sizes:
                continue
            perm = iso_bijection(n_target, compressed, n_target, circuits_target)
            if perm is not None:
                return (dm, tm, perm)
    return None
