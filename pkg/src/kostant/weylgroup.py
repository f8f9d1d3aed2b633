"""Finite Weyl group arithmetic on reduced words.

Elements are stored in ShortLex normal form (the lexicographically smallest
reduced word, letters being 1-based simple indices), which makes equality a
word comparison and sorted output stable. Words act on weights in
fundamental-weight coordinates; root images are tracked in simple-root
coordinates where positivity is a sign test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceededError
from .rootdata import check_subset, rho, simple_root, wadd, wsub

DEFAULT_WEYL_CAP = 10**6


@dataclass(frozen=True)
class WeylElement:
    word: tuple

    @property
    def length(self):
        return len(self.word)

    def __str__(self):
        return " ".join(f"s{i}" for i in self.word) if self.word else "e"


IDENTITY = WeylElement(())


def _reflect_weight(rs, i, weight):
    # s_i(w) = w - <w, alpha_i_vee> alpha_i
    c = weight[i - 1]
    if c == 0:
        return weight
    alpha = simple_root(rs, i).weight_coords
    return tuple(w - c * a for w, a in zip(weight, alpha))


def act(rs, w, weight):
    """Linear action of w on a weight (fundamental-weight coordinates)."""
    for i in reversed(w.word):
        weight = _reflect_weight(rs, i, weight)
    return weight


def dot_act(rs, w, weight):
    """Shifted action w . weight = w(weight + rho) - rho."""
    return wsub(act(rs, w, wadd(weight, rho(rs))), rho(rs))


def _act_root_coords(rs, word, coords):
    # action on simple-root coordinates, applying letters right to left
    coords = list(coords)
    for i in reversed(word):
        t = sum(rs.cartan[i - 1][j] * coords[j] for j in range(rs.rank))
        coords[i - 1] -= t
    return tuple(coords)


def _root_sign(coords):
    pos = any(c > 0 for c in coords)
    neg = any(c < 0 for c in coords)
    assert not (pos and neg), f"image {coords} is not a root"
    return 1 if pos else -1


def normalize_word(rs, letters):
    """ShortLex normal form of an arbitrary word in the simple reflections."""
    letters = tuple(int(i) for i in letters)
    for i in letters:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"letter s{i} out of range for rank {rs.rank}")
    # columns[i] = w^{-1}(alpha_i) in simple-root coordinates
    inv_word = tuple(reversed(letters))
    columns = []
    for i in range(1, rs.rank + 1):
        e_i = tuple(1 if j == i - 1 else 0 for j in range(rs.rank))
        columns.append(_act_root_coords(rs, inv_word, e_i))
    out = []
    while True:
        i = next((k for k in range(rs.rank) if _root_sign(columns[k]) < 0), None)
        if i is None:
            break
        out.append(i + 1)
        # w <- s_i w, so w^{-1} <- w^{-1} s_i; update columns of the inverse
        base = columns[i]
        for k in range(rs.rank):
            t = rs.cartan[i][k]
            if t:
                columns[k] = tuple(c - t * b for c, b in zip(columns[k], base))
    return WeylElement(tuple(out))


def from_word(rs, letters):
    return normalize_word(rs, letters)


def simple_reflection(rs, i):
    if not 1 <= i <= rs.rank:
        raise ValueError(f"no simple reflection s{i} at rank {rs.rank}")
    return WeylElement((i,))


def multiply(rs, u, v):
    return normalize_word(rs, u.word + v.word)


def inverse(rs, w):
    return normalize_word(rs, tuple(reversed(w.word)))


def length(rs, w):
    return len(w.word)


@lru_cache(maxsize=None)
def _enumerate_cached(rs, letters, cap):
    # BFS on rho-images (faithful since rho is regular). Words extend on the
    # left, matching the left-descent normal form: candidates within a length
    # class are generated in lexicographic order, so the first word reaching
    # an element is its ShortLex normal form.
    base = rho(rs)
    seen = {base}
    order = [WeylElement(())]
    frontier = [((), base)]
    while frontier:
        nxt = []
        for i in letters:
            for word, image in frontier:
                img = _reflect_weight(rs, i, image)
                if img not in seen:
                    if len(seen) >= cap:
                        raise CapExceededError(
                            f"Weyl group enumeration exceeds the cap of {cap} elements"
                        )
                    seen.add(img)
                    nxt.append(((i,) + word, img))
        nxt.sort(key=lambda t: t[0])
        order.extend(WeylElement(w) for w, _ in nxt)
        frontier = nxt
    return tuple(order)


def enumerate_weyl(rs, J=None, cap=DEFAULT_WEYL_CAP):
    """All elements of W (or of the parabolic W_J), sorted by (length, lex).

    Each element's stored word is its ShortLex normal form. Raises
    CapExceededError if the group has more than ``cap`` elements.
    """
    if J is None:
        letters = tuple(range(1, rs.rank + 1))
    else:
        letters = tuple(sorted(check_subset(rs, J)))
    return list(_enumerate_cached(rs, letters, cap))


def min_coset_reps(rs, J, cap=DEFAULT_WEYL_CAP):
    """Minimal-length representatives of W_J \\ W: all w with w^{-1}(J) > 0."""
    J = check_subset(rs, J)
    reps = []
    for w in enumerate_weyl(rs, cap=cap):
        inv = tuple(reversed(w.word))
        ok = True
        for j in J:
            img = _act_root_coords(
                rs, inv, tuple(1 if k == j - 1 else 0 for k in range(rs.rank))
            )
            if _root_sign(img) < 0:
                ok = False
                break
        if ok:
            reps.append(w)
    return reps


def inversion_set(rs, w):
    """N(w) = positive roots sent negative by w."""
    out = []
    for r in rs.positive_roots:
        if _root_sign(_act_root_coords(rs, w.word, r.simple_coords)) < 0:
            out.append(r)
    return out


def longest_element(rs, J):
    """The longest element of the parabolic W_J (greedy ascent, then normalized)."""
    J = sorted(check_subset(rs, J))
    target = sum(
        1
        for r in rs.positive_roots
        if all(r.simple_coords[k] == 0 for k in range(rs.rank) if (k + 1) not in J)
    )
    word = []
    while len(word) < target:
        for j in J:
            # ascend while w(alpha_j) > 0
            img = _act_root_coords(
                rs, tuple(word), tuple(1 if k == j - 1 else 0 for k in range(rs.rank))
            )
            if _root_sign(img) > 0:
                word.append(j)  # w <- w s_j acts first by s_j
                break
        else:
            raise AssertionError("no ascent found below the longest element")
    # note: appended letters multiply on the right; length grew by 1 each step
    return normalize_word(rs, tuple(word))


def parse_word(rs, text):
    """Parse "s2 s1" or "e"; non-reduced words are accepted and canonicalized."""
    text = text.strip()
    if text in ("", "e"):
        return IDENTITY
    letters = []
    for tok in text.split():
        if not (tok.startswith("s") and tok[1:].isdigit()):
            raise ValueError(f"bad Weyl word token {tok!r}; expected e.g. 's1'")
        letters.append(int(tok[1:]))
    return normalize_word(rs, letters)
