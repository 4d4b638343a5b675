"""The braid action on the free group, curve classes, and the
periodic / reducible / pseudo-Anosov classification predicate.

The fundamental group of the n-times punctured disc is free on
``x_1, ..., x_n``, one loop per puncture. A braid acts on it by the
substitution

    sigma_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i

(all other generators fixed), letters applied left to right. The action
is faithful, which makes it the package's independent equality oracle
for braid words.

An isotopy class of simple closed curves around punctures is modelled as
the conjugacy class of an unoriented cyclic free-group word. That is
exact arithmetic and supports the two predicates the rest of the package
needs, image and preservation of curve classes, at the cost that only
explicitly named curves can be tested.

Free-group letters are signed 1-based generator indices (``-i`` is
``x_i^-1``). Canonical forms order letters by ``(index, sign)`` with the
positive letter first, so ``x_1 < x_1^-1 < x_2 < ...``.
"""

from __future__ import annotations

import dataclasses
import functools

from .garside import (
    DEFAULT_SSS_LIMIT,
    ResourceLimitError,
    _key_of_nf,
    _mul,
    _pow,
    _simple_letters,
    is_delta_power,
    super_summit_set,
)
from .words import BraidWord, concat, permutation_of_word

__all__ = [
    "ClassificationResult",
    "CurveClass",
    "DEFAULT_IMAGE_LIMIT",
    "FreeWord",
    "artin_action",
    "classify",
    "curve_class_round",
    "image_curve_class",
    "is_periodic",
    "preserves_curve_class",
    "round_span",
]

# Image words longer than this abort the computation; see artin_action.
DEFAULT_IMAGE_LIMIT = 2_000_000


def _free_reduce(letters) -> tuple[int, ...]:
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group of the given rank.

    Construction reduces: adjacent inverse pairs cancel, so the stored
    letter sequence is always reduced.
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.rank:
                raise ValueError(f"letter {letter} is not a generator of F_{self.rank}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-letter for letter in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{letter}" if letter > 0 else f"x{-letter}^-1" for letter in self.letters)


def _apply_letter(letter: int, word: list[int], limit: int | None) -> list[int]:
    """Substitute one braid letter into a reduced letter list, reducing as
    it goes. Raises ResourceLimitError past ``limit`` letters."""
    i = abs(letter)
    j = i + 1
    out: list[int] = []
    push = out.append
    if letter > 0:
        # x_i -> x_i x_{i+1} x_i^-1 ; x_{i+1} -> x_i
        subs = {i: (i, j, -i), -i: (i, -j, -i), j: (i,), -j: (-i,)}
    else:
        # x_i -> x_{i+1} ; x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        subs = {i: (j,), -i: (-j,), j: (-j, i, j), -j: (-j, -i, j)}
    for g in word:
        for image in subs.get(g, (g,)):
            if out and out[-1] == -image:
                out.pop()
            else:
                push(image)
    if limit is not None and len(out) > limit:
        raise ResourceLimitError("free-group image exceeded the letter limit", len(out))
    return out


def artin_action(w: BraidWord, g: FreeWord, max_letters: int | None = None) -> FreeWord:
    """Image of ``g`` under the braid ``w``, letters applied left to right.

    ``artin_action(concat(u, v), g) == artin_action(v, artin_action(u, g))``.
    ``max_letters`` guards against the exponential growth that long
    pseudo-Anosov words cause; exceeding it raises ResourceLimitError.
    """
    if g.rank != w.strands:
        raise ValueError(f"rank mismatch: word on {w.strands} strands, rank {g.rank}")
    current = list(g.letters)
    for letter in w.letters:
        current = _apply_letter(letter, current, max_letters)
    return FreeWord(w.strands, tuple(current))


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return letters[lo:hi]


def _letter_rank(letter: int) -> int:
    # x_1 < x_1^-1 < x_2 < x_2^-1 < ...
    return 2 * abs(letter) + (0 if letter > 0 else 1)


def _least_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Booth's least-rotation algorithm under the letter order above."""
    enc = [_letter_rank(letter) for letter in seq] * 2
    fail = [-1] * len(enc)
    k = 0
    for j in range(1, len(enc)):
        sj = enc[j]
        i = fail[j - k - 1]
        while i != -1 and sj != enc[k + i + 1]:
            if sj < enc[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != enc[k + i + 1]:
            if sj < enc[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    k %= len(seq)
    return seq[k:] + seq[:k]


def _canonical_cycle(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation of the cyclic word or of its inverse, whichever is
    smaller; this is the unoriented-curve canonical form."""
    reduced = _cyclic_reduce(letters)
    if not reduced:
        return ()
    forward = _least_rotation(reduced)
    backward = _least_rotation(tuple(-letter for letter in reversed(reduced)))
    fkey = tuple(_letter_rank(letter) for letter in forward)
    bkey = tuple(_letter_rank(letter) for letter in backward)
    return forward if fkey <= bkey else backward


@dataclasses.dataclass(frozen=True)
class CurveClass:
    """An unoriented conjugacy class of a cyclically reduced free word;
    the model for isotopy classes of curves around punctures.

    The stored representative is canonical: cyclically reduced and least,
    under the module's letter order, among all rotations of itself and of
    its inverse.
    """

    rank: int
    representative: FreeWord

    def __post_init__(self):
        if self.representative.rank != self.rank:
            raise ValueError("representative rank mismatch")
        canonical = _canonical_cycle(self.representative.letters)
        if not canonical:
            raise ValueError("the trivial loop does not define a curve class")
        object.__setattr__(self, "representative", FreeWord(self.rank, canonical))

    def __str__(self) -> str:
        return str(self.representative)


def curve_class_round(i: int, j: int, n: int) -> CurveClass:
    """The round curve enclosing punctures i..j: the class of x_i ... x_j.

    Curves enclosing fewer than 2 or all n punctures are degenerate
    (isotopic to a puncture or to the boundary) and are rejected.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if j - i + 1 > n - 1:
        raise ValueError(f"curve around punctures {i}..{j} of {n} is degenerate")
    return CurveClass(n, FreeWord(n, tuple(range(i, j + 1))))


def round_span(c: CurveClass) -> tuple[int, int] | None:
    """(i, j) when the class is the round curve around punctures i..j."""
    letters = c.representative.letters
    expected = tuple(range(letters[0], letters[0] + len(letters)))
    if letters == expected and letters[0] >= 1:
        return letters[0], letters[-1]
    return None


def preserves_curve_class(w: BraidWord, c: CurveClass, max_letters: int | None = None) -> bool:
    """True iff the image of the class under ``w`` is the class itself,
    as unoriented curves (the image may match the inverse)."""
    if w.strands != c.rank:
        raise ValueError(f"rank mismatch: word on {w.strands} strands, curve rank {c.rank}")
    image = artin_action(w, c.representative, max_letters=max_letters)
    reduced = _cyclic_reduce(image.letters)
    if len(reduced) != len(c.representative.letters):
        return False
    return _canonical_cycle(reduced) == c.representative.letters


def image_curve_class(w: BraidWord, c: CurveClass, max_letters: int | None = None) -> CurveClass:
    """The curve class of the image of ``c`` under ``w``."""
    if w.strands != c.rank:
        raise ValueError(f"rank mismatch: word on {w.strands} strands, curve rank {c.rank}")
    return CurveClass(c.rank, artin_action(w, c.representative, max_letters=max_letters))


def _word_power(w: BraidWord, k: int) -> BraidWord:
    return concat(*([w] * k)) if k > 0 else BraidWord(w.strands)


def is_periodic(w: BraidWord) -> bool:
    """True iff some power of ``w`` is a power of Delta.

    Checking w^n and w^(n-1) suffices: periodic braids are conjugates of
    powers of the two rotation braids, whose n-th resp. (n-1)-th powers
    are full twists. Accepting odd Delta powers is sound, since
    w^N = Delta^j gives the central w^(2N) = Delta^(2j).
    """
    n = w.strands
    if n == 1:
        return True
    for k in (n, n - 1):
        if k >= 1 and is_delta_power(_word_power(w, k)) is not None:
            return True
    return False


@dataclasses.dataclass(frozen=True)
class ClassificationResult:
    """Outcome of :func:`classify`.

    ``kind`` is one of ``"periodic"``, ``"reducible"``,
    ``"pseudo_anosov"``. Reducible results carry a verified witness: a
    round curve class, the power of the summit conjugate that preserves
    it, and the conjugator from the input to that summit conjugate.
    """

    kind: str
    curve: CurveClass | None = None
    power: int | None = None
    conjugator: BraidWord | None = None


def _round_curves(n: int) -> list[tuple[CurveClass, tuple[int, int]]]:
    return [
        (curve_class_round(i, j, n), (i, j))
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        if j - i + 1 <= n - 1
    ]


def _puncture_orbit_period(perm, punctures: set[int], n: int) -> int | None:
    """Smallest k <= n with perm^k fixing the puncture set, else None."""
    current = punctures
    for k in range(1, n + 1):
        current = {perm(p) for p in current}
        if current == punctures:
            return k
    return None


@functools.lru_cache(maxsize=None)
def _round_spans(n: int) -> dict[tuple[int, ...], tuple[int, int]]:
    """Canonical letters of every round class, mapped to its span."""
    return {curve.representative.letters: span for curve, span in _round_curves(n)}


@functools.lru_cache(maxsize=None)
def _factor_round_image(n: int, factor: bytes, i: int, j: int) -> tuple[int, int] | None:
    """Span of the image of the round curve i..j under one canonical
    factor, or None when the image is not round.

    A factor has at most n(n-1)/2 letters and each letter scales a curve
    word by at most 3 in either direction, so when the final image is
    round (at most n letters) no intermediate can exceed n * 3^(half the
    factor length); words past that bound are provably not round.
    """
    word = BraidWord(n, _simple_letters(n, factor))
    base = curve_class_round(i, j, n)
    cap = n * 3 ** (n * (n - 1) // 4 + 2)
    try:
        image = artin_action(word, base.representative, max_letters=cap)
    except ResourceLimitError:
        return None
    return _round_spans(n).get(_canonical_cycle(_cyclic_reduce(image.letters)))


def _preserves_round_curve(n: int, key: tuple[int, bytes], i: int, j: int) -> bool:
    """Whether the braid with normal-form key ``key`` maps the round curve
    i..j to itself, walking the factors and demanding round images
    throughout.

    The walk is exact: a braid sending a round curve to a round curve
    sends it to a round curve after every normal-form prefix, so an
    intermediate non-round image already refutes preservation. The full
    twist acts trivially on curve classes and the half twist flips spans,
    which handles the Delta power.
    """
    p, flat = key
    span = (i, j)
    if p % 2:
        span = (n + 1 - span[1], n + 1 - span[0])
    for off in range(0, len(flat), n):
        span = _factor_round_image(n, flat[off : off + n], *span)
        if span is None:
            return False
    return span == (i, j)


def classify(
    w: BraidWord,
    max_sss: int = DEFAULT_SSS_LIMIT,
    max_letters: int = DEFAULT_IMAGE_LIMIT,
) -> ClassificationResult:
    """Nielsen-Thurston type of a braid: periodic, reducible, or
    pseudo-Anosov (by elimination).

    Reducibility scan: some super-summit conjugate of a reducible braid
    preserves a round curve, so (round curve, summit element, power <= n)
    triples are tested in that lexicographic order (curves by (i, j),
    elements in canonical summit order, powers ascending) and the first
    hit is the witness, re-verified through the raw free-group action
    before returning. Two prunes keep the scan exact but cheap: a power k
    can only preserve a curve whose puncture set the element's
    permutation fixes at power k, and preservation itself is decided by
    the factor walk of :func:`_preserves_round_curve`, which never builds
    large free-group words.

    Raises ResourceLimitError if the summit set outgrows ``max_sss``.
    ``max_letters`` only guards the final witness re-verification.
    """
    n = w.strands
    if n < 2:
        raise ValueError("classification needs at least 2 strands")
    if is_periodic(w):
        return ClassificationResult("periodic")
    sss = super_summit_set(w, max_size=max_sss)
    keys = [_key_of_nf(element) for element in sss.elements]
    perms = [permutation_of_word(element.word()) for element in sss.elements]
    for curve, (i, j) in _round_curves(n):
        punctures = set(range(i, j + 1))
        for element, key, perm in zip(sss.elements, keys, perms):
            period = _puncture_orbit_period(perm, punctures, n)
            if period is None:
                continue
            base = _pow(n, key, period)
            power_key = base
            for k in range(period, n + 1, period):
                if _preserves_round_curve(n, power_key, i, j):
                    conjugator = sss.conjugators[element]
                    witness_word = _word_power(element.word(), k)
                    if not preserves_curve_class(witness_word, curve, max_letters=max_letters):
                        raise RuntimeError("internal error: witness failed re-verification")
                    return ClassificationResult("reducible", curve, k, conjugator)
                if k + period <= n:
                    power_key = _mul(n, power_key, base)
    return ClassificationResult("pseudo_anosov")
