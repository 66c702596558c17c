"""Builders and the construction calculus.

Scripts combine four primitives: EMPTY, COLOOP (free extension by a
coloop), TRUNCATE, and DSUM.  Together they generate exactly the laminar
matroids; DSUM-free scripts generate the nested ones.  deconstruct
inverts run_script up to matroid equality on the same labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    BadParams,
    EmptyMemberSet,
    MatroidError,
    NotAChain,
    NotCanonical,
    UndefinedName,
)
from .matroid import (
    DESK_CAP,
    ExplicitMatroid,
    GroundSet,
    build_matroid,
    parallel_connection,
    two_sum,
)
from .presentation import (
    CanonicalPresentation,
    LaminarPresentation,
    canonical_from_matroid,
    canonicalize,
)


def _default_names(n):
    return tuple(f"e{i}" for i in range(1, n + 1))


def uniform(r, n, names=None):
    """U(r, n): every (r+1)-subset is a circuit."""
    if not (0 <= r <= n):
        raise BadParams(f"uniform needs 0 <= r <= n, got r={r}, n={n}")
    names = _default_names(n) if names is None else tuple(names)
    if len(names) != n:
        raise BadParams(f"expected {n} names, got {len(names)}")
    gs = GroundSet(names)
    masks = []
    if r < n:
        for combo in combinations(range(n), r + 1):
            m = 0
            for i in combo:
                m |= 1 << i
            masks.append(m)
    out = ExplicitMatroid._from_masks(gs, masks)
    out._rank = r
    return out


def circuit(n, names=None):
    """The n-element circuit U(n-1, n)."""
    if n < 1:
        raise BadParams(f"circuit needs n >= 1, got {n}")
    return uniform(n - 1, n, names)


def free(n, names=None):
    """n coloops: U(n, n)."""
    if n < 0:
        raise BadParams(f"free needs n >= 0, got {n}")
    return uniform(n, n, names)


def empty():
    return ExplicitMatroid._from_masks(GroundSet(()), [])


_FANO_LINES = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)


def fano():
    """The seven-point rank-3 matroid whose lines are the Fano triples."""
    names = _default_names(7)
    circuits = [frozenset(names[i] for i in line) for line in _FANO_LINES]
    all_names = frozenset(names)
    circuits += [all_names - c for c in circuits[:7]]
    return build_matroid(names, circuits)


def fano_dual():
    return fano().dual()


def excluded_minor(r):
    """The rank-r excluded minor for laminarity.

    Truncation to rank r of the parallel connection of two r-element
    circuits; ground is p, 1, ..., 2r-2 with the two circuit sides
    {p, 1..r-1} and {p, r..2r-2}.
    """
    if r < 3:
        raise BadParams(f"excluded minors start at rank 3, got {r}")
    left = circuit(r, ("p",) + tuple(str(i) for i in range(1, r)))
    right = circuit(r, ("q",) + tuple(str(i) for i in range(r, 2 * r - 1)))
    m = parallel_connection(left, right, "p", "q")
    for _ in range(r - 3):
        m = m.truncate()
    return m


def standard_matroid(kind, *params):
    """Dispatch by name: uniform, circuit, free, empty, fano, fanoDual."""
    table = {
        "uniform": uniform,
        "circuit": circuit,
        "free": free,
        "empty": empty,
        "fano": fano,
        "fanoDual": fano_dual,
    }
    if kind not in table:
        raise BadParams(f"unknown matroid kind {kind!r}")
    try:
        return table[kind](*params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {kind}: {exc}") from None


def nested_from_chain(ground, chain):
    """Presentation from an inclusion chain B1 <= B2 <= ... <= Bn.

    Distinct chain members get capacity equal to their position in the
    deduplicated chain; the complement of the last member, when nonempty,
    joins as a capacity-0 member (its elements are loops).
    """
    gs = ground if isinstance(ground, GroundSet) else GroundSet(ground)
    chain = [frozenset(b) for b in chain]
    if not chain or not chain[0]:
        raise EmptyMemberSet("the chain must start with a nonempty set")
    masks = [gs.mask_of(b) for b in chain]
    for prev, cur in zip(masks, masks[1:]):
        if prev & cur != prev:
            raise NotAChain(gs.set_of(prev), gs.set_of(cur))
    caps = []
    seen = set()
    for m in masks:
        if m not in seen:
            seen.add(m)
            caps.append((gs.set_of(m), len(seen)))
    rest = gs.full_mask & ~masks[-1]
    if rest:
        caps.append((gs.set_of(rest), 0))
    return LaminarPresentation(gs, caps)


@dataclass(frozen=True)
class ConstructionScript:
    """A straight-line program over EMPTY / COLOOP / TRUNCATE / DSUM.

    Steps are tuples: ("empty", name), ("coloop", name, src, element),
    ("truncate", name, src), ("dsum", name, left, right).  Names are
    single-assignment and each is consumed at most once.
    """

    steps: tuple
    result: str


def run_script(script):
    """Interpret a script into a laminar presentation.

    Operands are consumed; referencing a missing or spent name raises
    UndefinedName, reassignment raises BadParams.  TRUNCATE propagates
    RankZero from the presentation layer.
    """
    live = {}
    defined = set()

    def take(name):
        if name not in live:
            raise UndefinedName(name)
        return live.pop(name)

    for step in script.steps:
        op, name = step[0], step[1]
        if name in defined:
            raise BadParams(f"name {name!r} assigned twice")
        if op == "empty":
            value = LaminarPresentation(GroundSet(()), {})
        elif op == "coloop":
            value = take(step[2]).add_coloop(step[3])
        elif op == "truncate":
            value = take(step[2]).truncate()
        elif op == "dsum":
            value = take(step[2]).direct_sum(take(step[3]))
        else:
            raise BadParams(f"unknown op {op!r}")
        defined.add(name)
        live[name] = value
    if script.result not in live:
        raise UndefinedName(script.result)
    return live[script.result]


class _Emitter:
    def __init__(self):
        self.steps = []
        self.counter = 0

    def fresh(self):
        self.counter += 1
        return f"m{self.counter}"

    def emit(self, op, *args):
        name = self.fresh()
        self.steps.append((op, name) + args)
        return name


def _cyclic_flat_chain(m):
    """The cyclic flats sorted by inclusion, or None if incomparable."""
    flats = sorted(m.cyclic_flats(), key=len)
    for small, large in zip(flats, flats[1:]):
        if not small <= large:
            return None
    return flats


def _emit_chain(m, out, flats):
    """Script for a matroid whose cyclic flats form a chain.

    Walk the chain outward: the new elements of each flat arrive as
    coloops, then truncations pull the rank down to the flat's rank.
    Elements beyond the last flat are genuine coloops.  No dsum needed.
    """
    name = out.emit("empty")
    rank = 0
    done = frozenset()
    for f in flats:
        for e in sorted(f - done, key=m.ground.index):
            name = out.emit("coloop", name, e)
            rank += 1
        for _ in range(rank - m.rank(f)):
            name = out.emit("truncate", name)
        rank = m.rank(f)
        done = f
    for e in sorted(frozenset(m.elements) - done, key=m.ground.index):
        name = out.emit("coloop", name, e)
    return name


def _deconstruct(m, out, max_n):
    if m.n == 0:
        return out.emit("empty")
    chain = _cyclic_flat_chain(m)
    if chain is not None:
        return _emit_chain(m, out, chain)
    blocks = m.components()
    if len(blocks) > 1:
        names = [_deconstruct(m.restrict(b), out, max_n) for b in blocks]
        acc = names[0]
        for nm in names[1:]:
            acc = out.emit("dsum", acc, nm)
        return acc
    if m.n == 1:
        e = m.elements[0]
        base = out.emit("empty")
        name = out.emit("coloop", base, e)
        if m.rank() == 0:
            name = out.emit("truncate", name)
        return name
    canon = canonical_from_matroid(m, max_n)
    whole = frozenset(m.elements)
    if whole not in set(canon.members):
        raise MatroidError("internal: connected matroid without a spanning member")
    loose = canon.free_part(whole)
    if loose:
        e = min(loose, key=m.ground.index)
        name = _deconstruct(m.minor(delete=(e,)), out, max_n)
        name = out.emit("coloop", name, e)
        return out.emit("truncate", name)
    kids = sorted(
        canon.children_of(whole),
        key=lambda a: min(m.ground.index(x) for x in a),
    )
    names = [_deconstruct(m.restrict(a), out, max_n) for a in kids]
    acc = names[0]
    for nm in names[1:]:
        acc = out.emit("dsum", acc, nm)
    depth = sum(m.rank(a) for a in kids) - m.rank()
    for _ in range(depth):
        acc = out.emit("truncate", acc)
    return acc


def deconstruct(p, max_n=DESK_CAP):
    """Script that rebuilds the matroid of a canonical presentation.

    Free elements peel off first (delete, then COLOOP + TRUNCATE);
    otherwise the matroid splits as a truncated direct sum over the
    top-level members.  Components and free elements are taken in
    identifier order, so output is deterministic.
    """
    if not isinstance(p, CanonicalPresentation):
        raise NotCanonical("deconstruct expects a canonical presentation")
    m = p.to_explicit(max_n)
    out = _Emitter()
    result = _deconstruct(m, out, max_n)
    return ConstructionScript(steps=tuple(out.steps), result=result)


def binary_component(n, plan=(), max_n=DESK_CAP):
    """A circuit with parallel-extended elements.

    `plan` lists elements of the base circuit (e1..en, repeats allowed);
    each entry clones that element by a fresh parallel copy.
    """
    if n < 1:
        raise BadParams(f"binary_component needs n >= 1, got {n}")
    base = circuit(n)
    names = set(base.elements)
    for b in plan:
        if b not in names:
            raise BadParams(f"plan entry {b!r} is not a base circuit element")
    pres = canonical_from_matroid(base, max_n)
    nxt = n + 1
    for b in plan:
        pres = canonicalize(pres.parallel_extend(b, f"e{nxt}"), max_n)
        nxt += 1
    return pres.to_explicit(max_n)


def ternary_component(n, k, max_n=DESK_CAP):
    """An n-circuit 2-summed with k copies of U(2, 4) at distinct elements."""
    if n < 3:
        raise BadParams(f"ternary_component needs n >= 3, got {n}")
    if not (0 <= k <= n):
        raise BadParams(f"need 0 <= k <= n, got k={k}")
    m = circuit(n)
    nxt = n + 1
    for i in range(1, k + 1):
        names = tuple(f"e{j}" for j in range(nxt, nxt + 4))
        nxt += 4
        gadget = uniform(2, 4, names)
        m = two_sum(m, gadget, f"e{i}", names[0])
    return m
