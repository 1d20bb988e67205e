"""Similarity kernels between terms: weighted Levenshtein distance on
symbol sequences, ordered tree edit distance, structural
generalization/instantiation distance, and longest shared prefix.

All kernels use exact arithmetic: with integer costs every distance is an
int, with Fraction costs a Fraction.  No floating point enters the
kernels, so clause selection orders are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .related import RelatedSet
from .terms import VARIABLE, Symbol, Term, symbol_sequence

Cost = int | Fraction

# Minimum distance over an empty related set: a large finite constant so
# downstream weights stay ordered and finite on problems with no conjecture.
EMPTY_RELATED_DISTANCE = 2**20

LEV = "lev"
TED = "ted"
STRUC = "struc"
KERNELS = (LEV, TED, STRUC)


def _check_costs(*costs: Cost) -> None:
    for c in costs:
        if not isinstance(c, Rational):
            raise TypeError(f"costs must be exact rationals, got {type(c).__name__}")
        if c < 0:
            raise ValueError(f"costs must be non-negative, got {c}")


@dataclass(frozen=True)
class EditCosts:
    """Costs for insertion, deletion, and relabeling of one symbol/node."""

    c_ins: Cost = 1
    c_del: Cost = 1
    c_ch: Cost = 1

    def __post_init__(self) -> None:
        _check_costs(self.c_ins, self.c_del, self.c_ch)


@dataclass(frozen=True)
class StructCosts:
    """Penalties for variable mismatch, instantiation, and generalization."""

    c_miss: Cost = 1
    c_inst: Cost = 1
    c_gen: Cost = 1

    def __post_init__(self) -> None:
        _check_costs(self.c_miss, self.c_inst, self.c_gen)


def levenshtein(a: list[Symbol], b: list[Symbol], costs: EditCosts) -> Cost:
    """Minimum cost of transforming sequence ``a`` into ``b``.

    Deleting a symbol of ``a`` costs c_del, inserting a symbol of ``b``
    costs c_ins, changing one symbol into another costs c_ch; equal
    symbols substitute for free.
    """
    c_ins, c_del, c_ch = costs.c_ins, costs.c_del, costs.c_ch
    prev = [j * c_ins for j in range(len(b) + 1)]
    for i in range(1, len(a) + 1):
        ai = a[i - 1]
        cur = [i * c_del]
        for j in range(1, len(b) + 1):
            change = prev[j - 1] + (0 if ai == b[j - 1] else c_ch)
            cur.append(min(prev[j] + c_del, cur[-1] + c_ins, change))
        prev = cur
    return prev[-1]


class _PostorderTree:
    """Postorder node labels, leftmost-leaf-descendants, and keyroots."""

    __slots__ = ("labels", "lmds", "keyroots")

    def __init__(self, root: Term):
        self.labels: list[Symbol] = []
        self.lmds: list[int] = []

        def walk(node: Term) -> int:
            lmd = -1
            for child in node.args:
                child_lmd = walk(child)
                if lmd == -1:
                    lmd = child_lmd
            index = len(self.labels)
            self.labels.append(node.head)
            self.lmds.append(index if lmd == -1 else lmd)
            return self.lmds[index]

        walk(root)
        last_for_lmd: dict[int, int] = {}
        for i, lmd in enumerate(self.lmds):
            last_for_lmd[lmd] = i
        self.keyroots = sorted(last_for_lmd.values())


def tree_edit_distance(a: Term, b: Term, costs: EditCosts) -> Cost:
    """Ordered tree edit distance between the terms ``a`` and ``b``.

    Zhang-Shasha dynamic program over keyroot subforests.  Operations are
    node insertion (c_ins), node deletion with children reconnected in
    place (c_del), and node relabeling (c_ch, free between equal labels).
    """
    ta, tb = _PostorderTree(a), _PostorderTree(b)
    c_ins, c_del, c_ch = costs.c_ins, costs.c_del, costs.c_ch
    al, bl = ta.lmds, tb.lmds
    alab, blab = ta.labels, tb.labels
    td = [[0] * len(blab) for _ in range(len(alab))]

    for i in ta.keyroots:
        for j in tb.keyroots:
            m = i - al[i] + 2
            n = j - bl[j] + 2
            fd = [[0] * n for _ in range(m)]
            ioff = al[i] - 1
            joff = bl[j] - 1
            for x in range(1, m):
                fd[x][0] = fd[x - 1][0] + c_del
            for y in range(1, n):
                fd[0][y] = fd[0][y - 1] + c_ins
            for x in range(1, m):
                fdx = fd[x]
                fdx1 = fd[x - 1]
                whole_left = al[i] == al[x + ioff]
                for y in range(1, n):
                    if whole_left and bl[j] == bl[y + joff]:
                        rename = 0 if alab[x + ioff] == blab[y + joff] else c_ch
                        fdx[y] = min(
                            fdx1[y] + c_del,
                            fdx[y - 1] + c_ins,
                            fdx1[y - 1] + rename,
                        )
                        td[x + ioff][y + joff] = fdx[y]
                    else:
                        p = al[x + ioff] - 1 - ioff
                        q = bl[y + joff] - 1 - joff
                        fdx[y] = min(
                            fdx1[y] + c_del,
                            fdx[y - 1] + c_ins,
                            fd[p][q] + td[x + ioff][y + joff],
                        )
    return td[-1][-1]


def struct_distance(a: Term, b: Term, costs: StructCosts) -> Cost:
    """Distance by generalization and instantiation steps.

    A variable instantiates to a non-variable term t at cost c_inst*|t|,
    and symmetrically a term generalizes to a variable at c_gen*|t|.
    Distinct variables mismatch at c_miss.  Terms sharing a head recurse
    over argument pairs; different heads pay for generalizing one side to
    a fresh variable and instantiating it to the other.
    """
    a_var = a.head.kind == VARIABLE
    b_var = b.head.kind == VARIABLE
    if a_var and b_var:
        return 0 if a.head == b.head else costs.c_miss
    if a_var:
        return costs.c_inst * b.size
    if b_var:
        return costs.c_gen * a.size
    if a.head == b.head:
        total: Cost = 0
        for x, y in zip(a.args, b.args):
            total += struct_distance(x, y, costs)
        return total
    return costs.c_gen * a.size + costs.c_inst * b.size


def longest_related_prefix(t: Term, related: RelatedSet) -> int:
    """Length of the longest prefix that ``t``'s symbol sequence shares
    with the sequence of some related-set member; 0 for an empty set."""
    seq = symbol_sequence(t)
    best = 0
    for member in related.base:
        other = symbol_sequence(member)
        k = 0
        limit = min(len(seq), len(other))
        while k < limit and seq[k] == other[k]:
            k += 1
        if k > best:
            best = k
    return best


def min_distance_to_related(
    t: Term,
    related: RelatedSet,
    kernel: str,
    costs: EditCosts | StructCosts,
) -> Cost:
    """Minimum kernel distance from ``t`` to a member of the related set.

    Returns EMPTY_RELATED_DISTANCE when the set is empty.  ``t`` must be
    normalized under the set's norm.
    """
    if kernel not in KERNELS:
        raise ValueError(f"unknown distance kernel: {kernel!r}")
    if not related.base:
        return EMPTY_RELATED_DISTANCE
    best: Cost | None = None
    if kernel == LEV:
        seq = symbol_sequence(t)
        for member in related.base:
            d = levenshtein(seq, symbol_sequence(member), costs)
            if best is None or d < best:
                best = d
            if best == 0:
                break
    elif kernel == TED:
        for member in related.base:
            d = tree_edit_distance(t, member, costs)
            if best is None or d < best:
                best = d
            if best == 0:
                break
    else:
        for member in related.base:
            d = struct_distance(t, member, costs)
            if best is None or d < best:
                best = d
            if best == 0:
                break
    return best
