"""Two closure operators on systems of subsets of {1..n}.

Both closures contain the generators and all supersets of members.  The
delta closure additionally adds X ^ Y whenever members X, Y of at least two
elements meet in exactly one element.  The delta-prime closure instead adds
X - {a} whenever a in X, |X| >= 2, and every X - {l} for l in X - {a} is
already a member; it always contains the delta closure.

Systems are materialized as one flag per subset, so the ground set must stay
under the element cap.
"""

from __future__ import annotations

from collections import deque

from .bitsets import elements, size, subwords, word_key
from .errors import GroundMismatchError, GroundTooLargeError, InputError
from .matroid import DEFAULT_MAX_ELEMENTS


class SetSystem:
    """Membership flags over the full powerset of the ground set."""

    __slots__ = ("ground", "flags")

    def __init__(self, ground, flags):
        self.ground = ground
        self.flags = flags

    def __contains__(self, word):
        return bool(self.flags[word])

    def __len__(self):
        return sum(self.flags)

    def __eq__(self, other):
        return (isinstance(other, SetSystem) and self.ground == other.ground
                and self.flags == other.flags)

    def members(self):
        """All member words in canonical order (cardinality, then elements)."""
        return sorted((w for w in range(len(self.flags)) if self.flags[w]),
                      key=word_key)

    def is_subsystem_of(self, other):
        if self.ground != other.ground:
            raise GroundMismatchError("set systems live on different ground sets")
        return all(not a or b for a, b in zip(self.flags, other.flags))

    def minimal_members(self):
        """Members none of whose one-element deletions is a member.

        For up-closed systems (both closures are) these generate the system.
        """
        out = []
        for w in range(len(self.flags)):
            if not self.flags[w]:
                continue
            if any(self.flags[w ^ (1 << (i - 1))] for i in elements(w)):
                continue
            out.append(w)
        return sorted(out, key=word_key)


def _check_generators(generators, ground, max_n):
    if ground.n > max_n:
        raise GroundTooLargeError(ground.n, max_n)
    gens = []
    for g in generators:
        if g & ~ground.full:
            raise InputError(f"generator {elements(g)} leaves the ground set")
        gens.append(g)
    return gens


def delta_closure(generators, ground, max_n=DEFAULT_MAX_ELEMENTS):
    """Least system containing the generators, closed upward and under the
    one-point-overlap symmetric difference rule."""
    gens = _check_generators(generators, ground, max_n)
    nflags = 1 << ground.n
    flags = bytearray(nflags)
    queue = deque()
    paired = []  # popped members with >= 2 elements, scanned against new ones

    def add(word, expand_up):
        if not flags[word]:
            flags[word] = 1
            queue.append((word, expand_up))

    for g in gens:
        add(g, True)
    while queue:
        word, expand_up = queue.popleft()
        if expand_up:
            # supersets of supersets are covered by this same loop, so
            # members added here do not need their own expansion pass
            rest = ground.full & ~word
            for extra in subwords(rest):
                if extra:
                    add(word | extra, False)
        if size(word) >= 2:
            for other in paired:
                if size(word & other) == 1:
                    add(word ^ other, True)
            paired.append(word)
    return SetSystem(ground, flags)


def delta_prime_closure(generators, ground, max_n=DEFAULT_MAX_ELEMENTS):
    """Least system containing the generators, closed upward and under the
    facet rule: if a in X, |X| >= 2, and all X - {l} with l in X - {a} are
    members, then X - {a} is a member.

    Equivalently, a non-member Y joins when for some a outside Y every set
    obtained from Y by swapping one element for a is a member.  Swaps keep
    cardinality, so levels are finished bottom-up with an inner fixpoint per
    level; upward closure needs only one step from the finished level below.
    """
    gens = _check_generators(generators, ground, max_n)
    n = ground.n
    flags = bytearray(1 << n)
    for g in gens:
        flags[g] = 1
    by_size = [[] for _ in range(n + 1)]
    for w in range(1 << n):
        by_size[size(w)].append(w)
    outside = [ground.full & ~w for w in range(1 << n)]
    for k in range(n + 1):
        pending = []
        for w in by_size[k]:
            if flags[w]:
                continue
            if k and any(flags[w ^ (1 << (i - 1))] for i in elements(w)):
                flags[w] = 1  # one-step up-closure from level k-1
            else:
                pending.append(w)
        if k == 0:
            continue
        changed = True
        while changed and pending:
            changed = False
            still = []
            for w in pending:
                hit = False
                for a in elements(outside[w]):
                    abit = 1 << (a - 1)
                    if all(flags[(w ^ (1 << (i - 1))) | abit] for i in elements(w)):
                        hit = True
                        break
                if hit:
                    flags[w] = 1
                    changed = True
                else:
                    still.append(w)
            pending = still
    return SetSystem(ground, flags)


def circuits_covered(family, system):
    """(True, ()) if every circuit is a member, else (False, missing tuple)."""
    if family.ground != system.ground:
        raise GroundMismatchError("family and system live on different ground sets")
    missing = tuple(c for c in family.circuits if c not in system)
    return (len(missing) == 0, missing)
