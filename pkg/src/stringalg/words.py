"""Walk combinatorics for the fixed two-vertex quiver.

The quiver has vertices 0, 1 and arrows alpha: 0->0, beta: 0->1,
gamma: 1->0, eta: 1->1.  Letters of a word are arrows or formal inverses;
consecutive letters must compose (s(w_i) = e(w_{i+1})), so the rightmost
letter of a word acts first.  Strings avoid the forbidden path set J both
in the word and in its formal inverse; bands are primitive cyclic words
all of whose powers are strings.

Letters are small ints: arrow index 0..3, with bit 2 set for an inverse.
The canonical representative of a string class is the lexicographically
smaller of the word and its inverse under alpha < beta < gamma < eta <
alpha- < beta- < gamma- < eta-; band classes are minimized over all
rotations of both orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    Ambiguous,
    EmptyString,
    ForbiddenSubword,
    InDeep,
    LimitExceeded,
    NotComposable,
    OnPeak,
    ParseError,
)

ALPHA, BETA, GAMMA, ETA = 0, 1, 2, 3
INV = 4

ARROW_NAMES = ("alpha", "beta", "gamma", "eta")
_ARROW_S = (0, 0, 1, 1)
_ARROW_E = (0, 1, 0, 1)

# Forbidden paths (as textual arrow tuples: leftmost composes last).
J_SET = {
    (ALPHA, ALPHA),
    (ETA, BETA),
    (BETA, GAMMA),
    (GAMMA, ETA),
    (ETA, ETA),
    (GAMMA, BETA, ALPHA),
    (ALPHA, GAMMA, BETA),
    (BETA, ALPHA, GAMMA),
}

# Maximal directed strings, as arrow tuples.
MAXIMAL_DIRECT = ((GAMMA, BETA), (BETA, ALPHA), (ALPHA, GAMMA), (ETA,))

# Legal top-socle pieces of a band (inverse-letter words).
TOP_SOCLE_PIECES = {
    (ALPHA | INV,),
    (BETA | INV,),
    (GAMMA | INV,),
    (ETA | INV,),
    (ALPHA | INV, BETA | INV),
    (BETA | INV, GAMMA | INV),
    (GAMMA | INV, ALPHA | INV),
}


def inv_letter(letter: int) -> int:
    return letter ^ INV


def is_inverse(letter: int) -> bool:
    return bool(letter & INV)


def s_of(letter: int) -> int:
    a = letter & 3
    return _ARROW_E[a] if letter & INV else _ARROW_S[a]


def e_of(letter: int) -> int:
    a = letter & 3
    return _ARROW_S[a] if letter & INV else _ARROW_E[a]


def letter_text(letter: int) -> str:
    return ARROW_NAMES[letter & 3] + ("-" if letter & INV else "")


@dataclass(frozen=True)
class Word:
    """A composable walk; empty walks carry the vertex they sit at."""

    letters: tuple[int, ...]
    vertex: int | None = None

    def __post_init__(self):
        if not self.letters and self.vertex is None:
            raise ParseError("empty word needs a vertex tag")

    def __len__(self):
        return len(self.letters)

    @property
    def source(self) -> int:
        return s_of(self.letters[-1]) if self.letters else self.vertex

    @property
    def end(self) -> int:
        return e_of(self.letters[0]) if self.letters else self.vertex

    def inverse(self) -> "Word":
        if not self.letters:
            return self
        return Word(tuple(inv_letter(l) for l in reversed(self.letters)))

    def vertices(self) -> tuple[int, ...]:
        """v(0..n): v(i) = e(w_{i+1}) for i < n, v(n) = s(w_n)."""
        if not self.letters:
            return (self.vertex,)
        vs = [e_of(l) for l in self.letters]
        vs.append(s_of(self.letters[-1]))
        return tuple(vs)

    def text(self) -> str:
        if not self.letters:
            return f"1_{self.vertex}"
        return " ".join(letter_text(l) for l in self.letters)

    def __repr__(self):
        return f"Word({self.text()!r})"


def empty_word(vertex: int) -> Word:
    return Word((), vertex)


def _runs(letters):
    """Maximal same-direction runs as (start, length, inverted)."""
    out = []
    i = 0
    n = len(letters)
    while i < n:
        j = i
        invflag = is_inverse(letters[i])
        while j + 1 < n and is_inverse(letters[j + 1]) == invflag:
            j += 1
        out.append((i, j - i + 1, invflag))
        i = j + 1
    return out


def _run_forbidden(letters, start, length, invflag) -> bool:
    """Does the run contain a subpath (after orienting) lying in J?"""
    arrows = tuple(l & 3 for l in letters[start : start + length])
    if invflag:
        arrows = tuple(reversed(arrows))
    for ln in (2, 3):
        for k in range(len(arrows) - ln + 1):
            if arrows[k : k + ln] in J_SET:
                return True
    return False


def word_flaw(letters) -> str | None:
    """None if the letter sequence is a valid string word, else a reason."""
    n = len(letters)
    for i in range(n - 1):
        if s_of(letters[i]) != e_of(letters[i + 1]):
            return "not composable"
    for i in range(n - 1):
        if letters[i + 1] == inv_letter(letters[i]):
            return "letter followed by its inverse"
    for start, length, invflag in _runs(letters):
        if _run_forbidden(letters, start, length, invflag):
            return "forbidden subword"
    return None


def is_valid_string_word(word: Word) -> bool:
    return word_flaw(word.letters) is None


def validate_string_word(word: Word) -> Word:
    flaw = word_flaw(word.letters)
    if flaw == "not composable":
        raise NotComposable(word.text())
    if flaw is not None:
        raise ForbiddenSubword(f"{word.text()}: {flaw}")
    return word


@dataclass(frozen=True)
class String:
    """Canonical representative of a string class (word vs its inverse)."""

    letters: tuple[int, ...]
    vertex: int | None = None

    @classmethod
    def from_word(cls, word: Word) -> "String":
        validate_string_word(word)
        if not word.letters:
            return cls((), word.vertex)
        rev = word.inverse().letters
        return cls(min(word.letters, rev))

    @property
    def word(self) -> Word:
        return Word(self.letters, self.vertex)

    def __len__(self):
        return len(self.letters)

    def text(self) -> str:
        return self.word.text()

    def __repr__(self):
        return f"String({self.text()!r})"


@dataclass(frozen=True)
class Band:
    """Canonical representative of a band class (rotations of both
    orientations)."""

    letters: tuple[int, ...]

    @classmethod
    def from_word(cls, word: Word) -> "Band":
        flaw = band_flaw(word)
        if flaw is not None:
            raise ForbiddenSubword(f"{word.text()}: {flaw}")
        return cls(_band_canonical(word.letters))

    @property
    def word(self) -> Word:
        return Word(self.letters)

    def __len__(self):
        return len(self.letters)

    def text(self) -> str:
        return self.word.text()

    def rotation(self, i: int) -> Word:
        n = len(self.letters)
        i %= n
        return Word(self.letters[i:] + self.letters[:i])

    def __repr__(self):
        return f"Band({self.text()!r})"


def _band_canonical(letters):
    n = len(letters)
    best = None
    for seq in (letters, tuple(inv_letter(l) for l in reversed(letters))):
        for i in range(n):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def band_flaw(word: Word) -> str | None:
    """None if the word satisfies every band condition, else a reason.

    The "every power is a string" condition is finite: J has no member of
    length > 3, so all windows of w^3 of length <= 3 are checked.
    """
    letters = word.letters
    n = len(letters)
    if n == 0:
        return "empty"
    for i in range(n):
        a, b = letters[i], letters[(i + 1) % n]
        if s_of(a) != e_of(b):
            return "not cyclically composable"
        if b == inv_letter(a):
            return "letter followed by its inverse"
    for d in range(1, n):
        if n % d == 0 and letters == letters[:d] * (n // d):
            return "proper power"
    tripled = letters * 3
    for start, length, invflag in _runs(tripled):
        if _run_forbidden(tripled, start, length, invflag):
            return "forbidden subword in a power"
    return None


def is_band(word: Word) -> bool:
    return band_flaw(word) is None


# -- parsing -------------------------------------------------------------

_TOKEN = {name: i for i, name in enumerate(ARROW_NAMES)}


def parse_word(text: str) -> Word:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty input")
    if len(tokens) == 1 and tokens[0] in ("1_0", "1_1"):
        return empty_word(int(tokens[0][-1]))
    letters = []
    for tok in tokens:
        name = tok[:-1] if tok.endswith("-") else tok
        if name not in _TOKEN:
            raise ParseError(f"unknown letter {tok!r}")
        letters.append(_TOKEN[name] | (INV if tok.endswith("-") else 0))
    word = Word(tuple(letters))
    for i in range(len(letters) - 1):
        if s_of(letters[i]) != e_of(letters[i + 1]):
            raise NotComposable(f"{letter_text(letters[i])} then {letter_text(letters[i+1])}")
    return word


def make_string(text: str) -> String:
    return String.from_word(parse_word(text))


def make_band(text: str) -> Band:
    return Band.from_word(parse_word(text))


# -- enumeration ----------------------------------------------------------

_ENUM_LIMIT = 24


def _extensions(letters):
    """Letters that may be appended on the right keeping validity."""
    out = []
    last = letters[-1]
    src = s_of(last)
    for a in range(4):
        for cand in (a, a | INV):
            if e_of(cand) != src or cand == inv_letter(last):
                continue
            tail = letters[-3:] + (cand,)
            bad = False
            for start, length, invflag in _runs(tail):
                if _run_forbidden(tail, start, length, invflag):
                    bad = True
                    break
            if not bad:
                out.append(cand)
    return out


@lru_cache(maxsize=None)
def _all_words_upto(max_len: int):
    """All valid nonempty string words of length <= max_len (both
    orientations)."""
    words = []
    frontier = [(l,) for l in range(8)]
    length = 1
    while frontier and length <= max_len:
        words.extend(frontier)
        if length == max_len:
            break
        nxt = []
        for w in frontier:
            for l in _extensions(w):
                nxt.append(w + (l,))
        frontier = nxt
        length += 1
    return words


def enumerate_strings(max_len: int) -> list[String]:
    """All canonical string classes of length <= max_len, sorted."""
    if max_len > _ENUM_LIMIT:
        raise LimitExceeded(f"string length bound {max_len} > {_ENUM_LIMIT}")
    classes = {String((), 0), String((), 1)}
    for w in _all_words_upto(max_len) if max_len >= 1 else []:
        rev = tuple(inv_letter(l) for l in reversed(w))
        if w <= rev:
            classes.add(String(w))
    return sorted(classes, key=lambda s: (len(s.letters), s.vertex or 0, s.letters))


def enumerate_bands(max_len: int) -> list[Band]:
    """All canonical band classes of length in 1..max_len, sorted."""
    if max_len > _ENUM_LIMIT:
        raise LimitExceeded(f"band length bound {max_len} > {_ENUM_LIMIT}")
    classes = set()
    for w in _all_words_upto(max_len):
        word = Word(w)
        if is_band(word):
            canon = _band_canonical(w)
            if w == canon:
                classes.add(Band(w))
    return sorted(classes, key=lambda b: (len(b.letters), b.letters))


# -- hooks and cohooks ------------------------------------------------------


def _trailing_run(letters):
    """(start index, arrows tuple oriented as a path, inverted flag) of the
    trailing same-direction run, or None for empty words."""
    if not letters:
        return None
    start, length, invflag = _runs(letters)[-1]
    arrows = tuple(l & 3 for l in letters[start:])
    if invflag:
        arrows = tuple(reversed(arrows))
    return start, arrows, invflag


def starts_on_peak(word: Word) -> bool:
    run = _trailing_run(word.letters)
    return run is not None and not run[2] and run[1] in MAXIMAL_DIRECT


def starts_in_deep(word: Word) -> bool:
    run = _trailing_run(word.letters)
    return run is not None and run[2] and run[1] in MAXIMAL_DIRECT


def ends_on_peak(word: Word) -> bool:
    return starts_in_deep(word.inverse())


def ends_in_deep(word: Word) -> bool:
    return starts_on_peak(word.inverse())


def _attach_right(word: Word, tail: tuple[int, ...]) -> Word | None:
    """word followed by tail, or None if not a valid string word."""
    if word.letters:
        letters = word.letters + tail
    else:
        if e_of(tail[0]) != word.vertex:
            return None
        letters = tail
    if word_flaw(letters) is None:
        return Word(letters)
    return None


def _hook_right_candidates(word: Word) -> list[Word]:
    out = []
    for zeta in range(4):
        for m_arrows in MAXIMAL_DIRECT:
            tail = (zeta,) + tuple(a | INV for a in reversed(m_arrows))
            cand = _attach_right(word, tail)
            if cand is not None:
                out.append(cand)
    return out


def _cohook_right_candidates(word: Word) -> list[Word]:
    out = []
    for zeta in range(4):
        for m_arrows in MAXIMAL_DIRECT:
            tail = (zeta | INV,) + m_arrows
            cand = _attach_right(word, tail)
            if cand is not None:
                out.append(cand)
    return out


def modify_candidates(word: Word, op: str, side: str) -> list[Word]:
    """All legal results of adding a hook/cohook on the given side."""
    if side == "left":
        mirrored = modify_candidates(word.inverse(), op, "right")
        return [w.inverse() for w in mirrored]
    if op == "hook":
        if starts_on_peak(word):
            return []
        return _hook_right_candidates(word)
    if op == "cohook":
        if starts_in_deep(word):
            return []
        return _cohook_right_candidates(word)
    raise ValueError(f"unknown op {op!r}")


def modify(word: Word, op: str, side: str) -> Word:
    """Add a hook or cohook per the defining search; unique for nonempty
    strings, Ambiguous for empty ones (two legal extensions exist)."""
    cands = modify_candidates(word, op, side)
    if not cands:
        if op == "hook":
            raise OnPeak(f"{word.text()} {'starts' if side == 'right' else 'ends'} on a peak")
        raise InDeep(f"{word.text()} {'starts' if side == 'right' else 'ends'} in a deep")
    if len(cands) > 1:
        raise Ambiguous(f"{len(cands)} legal extensions of {word.text()}", cands)
    return cands[0]


def removal_candidates(word: Word, op: str, side: str) -> list[Word]:
    """Words T such that adding a hook/cohook on the given side of T gives
    back this word (confirmed by re-adding)."""
    if side == "left":
        mirrored = removal_candidates(word.inverse(), op, "right")
        return [w.inverse() for w in mirrored]
    run = _trailing_run(word.letters)
    if run is None:
        return []
    start, arrows, invflag = run
    # hooks end with zeta M^{-1} (zeta direct), cohooks with zeta^{-1} M
    want_inverted_tail = op == "hook"
    if invflag != want_inverted_tail or arrows not in MAXIMAL_DIRECT:
        return []
    if start == 0:
        return []
    zeta = word.letters[start - 1]
    if is_inverse(zeta) == (op == "hook"):
        return []
    rest = word.letters[: start - 1]
    if rest:
        base = Word(rest)
    else:
        base = empty_word(e_of(zeta))
    if word_flaw(base.letters) is not None:
        return []
    if any(c.letters == word.letters for c in modify_candidates(base, op, "right")):
        return [base]
    return []


# -- the arrow-swap mirror symmetry -----------------------------------------

_MIRROR_ARROW = (ALPHA, GAMMA, BETA, ETA)


def mirror_string(s: String) -> String:
    """Letterwise symmetry: swap beta/gamma, keep alpha/eta, invert each
    letter in place.  A length-preserving involution on nonempty strings."""
    if not s.letters:
        raise EmptyString("mirror of an empty string")
    letters = tuple(_MIRROR_ARROW[l & 3] | ((l & INV) ^ INV) for l in s.letters)
    return String.from_word(Word(letters))


# -- top-socle pieces of bands -----------------------------------------------


def top_socle_decomposition(band: Band) -> list[Word]:
    """Pieces C_0, ..., C_s (s odd): rotate the band to start on an
    inverse run; inverse runs are pieces as-is, direct runs contribute
    their formal inverses."""
    letters = band.letters
    n = len(letters)
    starts = [
        i
        for i in range(n)
        if is_inverse(letters[i]) and not is_inverse(letters[i - 1])
    ]
    if not starts:
        raise ForbiddenSubword(f"{band.text()}: no inverse run")
    rotations = [letters[i:] + letters[:i] for i in starts]
    rot = min(rotations)
    pieces = []
    for start, length, invflag in _runs(rot):
        chunk = Word(rot[start : start + length])
        piece = chunk if invflag else chunk.inverse()
        if piece.letters not in TOP_SOCLE_PIECES:
            raise ForbiddenSubword(f"{band.text()}: run {piece.text()} is not a legal piece")
        pieces.append(piece)
    if len(pieces) % 2 != 0:
        raise ForbiddenSubword(f"{band.text()}: odd run count")
    return pieces
