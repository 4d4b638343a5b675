"""Garside normal forms and the conjugacy machinery of braid groups.

Every braid has a unique left normal form ``Delta^p A_1 ... A_l`` where
Delta is the positive half twist (every pair of strands crosses exactly
once), each ``A_k`` is a simple element (a permutation braid: every pair
of strands crosses at most once, positively) that is neither trivial nor
Delta, and consecutive factors are left-weighted: the starting set of
``A_{k+1}`` is contained in the finishing set of ``A_k``. Equality of
braids is identity of normal forms.

``inf = p`` and ``sup = p + l`` become conjugacy invariants once
maximized resp. minimized over a conjugacy class by cycling and
decycling; the conjugates realizing both extremes at once form the super
summit set, a finite canonically-ordered set that decides conjugacy: two
braids are conjugate iff their super summit sets coincide.

Simple elements are stored as permutations, never as words; reduced
words are produced on demand by front-stripping descents. The hot loops
run in the kernel backend selected by :mod:`braidkit._kernel`, on the
flat byte layout documented in :mod:`braidkit._native`.

Conjugation convention used everywhere: ``c`` conjugates ``a`` to
``c * a * c^-1``.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from collections import deque
from typing import Iterator

from . import _kernel
from .words import (
    BraidWord,
    Permutation,
    concat,
    exponent_sum,
    invert_word,
    permutation_of_word,
)

__all__ = [
    "ConjugacyCertificate",
    "DEFAULT_SSS_LIMIT",
    "NormalForm",
    "ResourceLimitError",
    "SimpleElement",
    "SuperSummitSet",
    "are_conjugate",
    "cycling",
    "delta_simple",
    "divisor_sets",
    "equal_words",
    "is_delta_power",
    "normal_form",
    "super_summit_set",
]

DEFAULT_SSS_LIMIT = 100_000

_NfKey = tuple[int, bytes]


class ResourceLimitError(Exception):
    """A summit-set computation outgrew its configured cardinality cap."""

    def __init__(self, message: str, partial_count: int):
        super().__init__(f"{message} (partial count: {partial_count})")
        self.partial_count = partial_count


# -- permutation helpers on the 0-based flat layout ---------------------------


@functools.lru_cache(maxsize=None)
def _id_flat(n: int) -> bytes:
    return bytes(range(n))


@functools.lru_cache(maxsize=None)
def _w0_flat(n: int) -> bytes:
    return bytes(n - 1 - t for t in range(n))


def _inv_flat(perm: bytes) -> bytes:
    inv = bytearray(len(perm))
    for k, v in enumerate(perm):
        inv[v] = k
    return bytes(inv)


def _tau_one(n: int, perm: bytes) -> bytes:
    """Flip automorphism on one factor: tau(A)(k) = n-1-A(n-1-k)."""
    return bytes(n - 1 - perm[n - 1 - t] for t in range(n))


def _descents(perm: bytes) -> frozenset[int]:
    """1-based generator indices i with perm(i) > perm(i+1)."""
    return frozenset(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def _simple_letters(n: int, perm: bytes) -> tuple[int, ...]:
    """Reduced word for a permutation braid: repeatedly strip the
    smallest descent from the front."""
    arr = bytearray(perm)
    letters = []
    while True:
        for i in range(n - 1):
            if arr[i] > arr[i + 1]:
                letters.append(i + 1)
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                break
        else:
            return tuple(letters)


@functools.lru_cache(maxsize=None)
def _delta_letters(n: int) -> tuple[int, ...]:
    return _simple_letters(n, _w0_flat(n))


def _flat_of_perm(perm: Permutation) -> bytes:
    return bytes(v - 1 for v in perm.images)


def _perm_of_flat(n: int, flat: bytes) -> Permutation:
    return Permutation(n, tuple(v + 1 for v in flat))


# -- public types --------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SimpleElement:
    """A permutation braid, the positive lift of its permutation."""

    perm: Permutation

    @property
    def strands(self) -> int:
        return self.perm.size

    def is_trivial(self) -> bool:
        return self.perm.images == tuple(range(1, self.perm.size + 1))

    def is_delta(self) -> bool:
        return self.perm.images == tuple(range(self.perm.size, 0, -1))

    def starting_set(self) -> frozenset[int]:
        """Indices i such that sigma_i left-divides this element."""
        return _descents(_flat_of_perm(self.perm))

    def finishing_set(self) -> frozenset[int]:
        """Indices i such that sigma_i right-divides this element."""
        return _descents(_inv_flat(_flat_of_perm(self.perm)))

    def word(self) -> BraidWord:
        """Canonical reduced word, stripping the smallest descent first."""
        n = self.perm.size
        return BraidWord(n, _simple_letters(n, _flat_of_perm(self.perm)))

    def __str__(self) -> str:
        return str(self.perm)


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Left normal form ``Delta^delta_power * factors``; inf, sup and
    canonical length read off the fields directly."""

    strands: int
    delta_power: int
    factors: tuple[SimpleElement, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        for factor in factors:
            if factor.perm.size != self.strands:
                raise ValueError("factor strand count mismatch")
            if factor.is_trivial() or factor.is_delta():
                raise ValueError(f"{factor} may not appear as a canonical factor")
        for left, right in zip(factors, factors[1:]):
            if not right.starting_set() <= left.finishing_set():
                raise ValueError(f"factors {left} | {right} are not left-weighted")

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def word(self) -> BraidWord:
        """A braid word for this element: Delta-power letters followed by
        one reduced word per factor."""
        return BraidWord(self.strands, _word_of_key(self.strands, _key_of_nf(self)))

    def __str__(self) -> str:
        parts = [f"D^{self.delta_power}"]
        parts.extend(str(f.perm) for f in self.factors)
        return " | ".join(parts)


@dataclasses.dataclass(frozen=True)
class ConjugacyCertificate:
    """A conjugating element ``c`` with ``c * a * c^-1 = b`` for the pair
    it certifies, plus the result of re-checking that equation."""

    conjugator: BraidWord
    verified: bool

    def verifies(self, a: BraidWord, b: BraidWord) -> bool:
        """Re-run the conjugation equation through equal_words."""
        return equal_words(concat(self.conjugator, a, invert_word(self.conjugator)), b)


@dataclasses.dataclass(frozen=True)
class SuperSummitSet:
    """All conjugates with maximal inf and minimal sup, canonically
    ordered, plus one verified conjugating word per element."""

    strands: int
    elements: tuple[NormalForm, ...]
    conjugators: dict[NormalForm, BraidWord]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[NormalForm]:
        return iter(self.elements)


# -- words to normal forms ------------------------------------------------------


def _assemble(n: int, items: list[tuple[int, bytes]], tail_shift: int = 0) -> tuple[int, bytes]:
    """Collect ``prod(Delta^s_j * F_j) * Delta^tail`` into ``(p, flat)`` by
    pushing every Delta power to the front; a factor picks up one flip
    per Delta passing through it."""
    acc = tail_shift
    out: list[bytes] = []
    for shift, perm in reversed(items):
        out.append(_tau_one(n, perm) if acc % 2 else perm)
        acc += shift
    out.reverse()
    return acc, b"".join(out)


def _letters_to_factors(n: int, letters: tuple[int, ...]) -> tuple[int, bytes]:
    """Rewrite each negative letter via sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)
    and assemble; the result still needs kernel normalization."""
    items: list[tuple[int, bytes]] = []
    for letter in letters:
        i = abs(letter) - 1
        if letter > 0:
            perm = bytearray(_id_flat(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            items.append((0, bytes(perm)))
        else:
            # (Delta sigma_i^-1)(k) = swap_{i,i+1}(n-1-k)
            perm = bytearray(n)
            for k in range(n):
                v = n - 1 - k
                if v == i:
                    v = i + 1
                elif v == i + 1:
                    v = i
                perm[k] = v
            items.append((-1, bytes(perm)))
    return _assemble(n, items)


def _nf_of_word(w: BraidWord) -> _NfKey:
    p, flat = _letters_to_factors(w.strands, w.letters)
    return _kernel.normalize(w.strands, p, flat)


def _key_of_nf(nf: NormalForm) -> _NfKey:
    return nf.delta_power, b"".join(_flat_of_perm(f.perm) for f in nf.factors)


def _nf_public(n: int, key: _NfKey) -> NormalForm:
    p, flat = key
    factors = tuple(
        SimpleElement(_perm_of_flat(n, flat[off : off + n])) for off in range(0, len(flat), n)
    )
    return NormalForm(n, p, factors)


def _word_of_key(n: int, key: _NfKey) -> tuple[int, ...]:
    p, flat = key
    letters: list[int] = []
    if p >= 0:
        letters.extend(_delta_letters(n) * p)
    else:
        inverse_delta = tuple(-i for i in reversed(_delta_letters(n)))
        letters.extend(inverse_delta * (-p))
    for off in range(0, len(flat), n):
        letters.extend(_simple_letters(n, flat[off : off + n]))
    return tuple(letters)


# -- normal-form arithmetic on keys ---------------------------------------------


def _mul(n: int, x: _NfKey, y: _NfKey) -> _NfKey:
    return _kernel.multiply(n, x[0], x[1], y[0], y[1])


def _inv(n: int, x: _NfKey) -> _NfKey:
    """(Delta^p A_1..A_l)^-1 = prod over reversed factors of
    Delta^-1 (Delta A_j^-1), times the trailing Delta^-p."""
    p, flat = x
    items = []
    for off in range(len(flat) - n, -n, -n):
        factor_inv = _inv_flat(flat[off : off + n])
        items.append((-1, bytes(factor_inv[n - 1 - t] for t in range(n))))
    dp, dflat = _assemble(n, items, tail_shift=-p)
    return _kernel.normalize(n, dp, dflat)


def _pow(n: int, x: _NfKey, k: int) -> _NfKey:
    if k < 0:
        return _pow(n, _inv(n, x), -k)
    acc: _NfKey = (0, b"")
    base = x
    while k:
        if k & 1:
            acc = _mul(n, acc, base)
        k >>= 1
        if k:
            base = _mul(n, base, base)
    return acc


@functools.lru_cache(maxsize=None)
def _simple_nf(n: int, s: bytes) -> _NfKey:
    return _kernel.normalize(n, 0, s)


@functools.lru_cache(maxsize=None)
def _simple_inv_nf(n: int, s: bytes) -> _NfKey:
    """Normal form of s^-1 = Delta^-1 * (Delta s^-1)."""
    inv = _inv_flat(s)
    return _kernel.normalize(n, -1, bytes(inv[n - 1 - t] for t in range(n)))


# -- public operations -----------------------------------------------------------


def delta_simple(n: int) -> SimpleElement:
    """The half twist: the simple element with permutation i -> n+1-i."""
    if n < 1:
        raise ValueError(f"strand count must be >= 1, got {n}")
    return SimpleElement(Permutation(n, tuple(range(n, 0, -1))))


def divisor_sets(s: SimpleElement) -> tuple[frozenset[int], frozenset[int]]:
    """(starting set, finishing set) of a simple element."""
    return s.starting_set(), s.finishing_set()


def normal_form(w: BraidWord) -> NormalForm:
    """The unique left normal form of the braid represented by ``w``."""
    return _nf_public(w.strands, _nf_of_word(w))


def equal_words(u: BraidWord, v: BraidWord) -> bool:
    """True iff the words represent the same braid (identical normal forms)."""
    if u.strands != v.strands:
        raise ValueError(f"strand count mismatch: {u.strands} != {v.strands}")
    return _nf_of_word(u) == _nf_of_word(v)


def is_delta_power(w: BraidWord) -> int | None:
    """The exponent j if w equals Delta^j, else None."""
    p, flat = _nf_of_word(w)
    return p if not flat else None


def _cycle_key(n: int, key: _NfKey) -> tuple[_NfKey, bytes]:
    """One cycling step: returns the new key and the simple element u the
    input was conjugated by (result = u^-1 x u, u = tau^-p(A_1))."""
    p, flat = key
    first = flat[:n]
    u = _tau_one(n, first) if p % 2 else first
    new = _kernel.normalize(n, p, flat[n:] + u)
    return new, u


def _decycle_key(n: int, key: _NfKey) -> tuple[_NfKey, bytes]:
    """One decycling step: returns the new key and the simple element u
    with result = u x u^-1 (u = A_l, the last factor)."""
    p, flat = key
    last = flat[-n:]
    twisted = _tau_one(n, last) if p % 2 else last
    new = _kernel.normalize(n, p, twisted + flat[:-n])
    return new, last


def cycling(x: NormalForm, direction: str = "front") -> tuple[NormalForm, BraidWord]:
    """Cycling ("front") or decycling ("back") of a normal form.

    Returns the renormalized result together with a word ``c`` such that
    ``c * x * c^-1`` equals the result. Cycling conjugates by the
    twisted first factor tau^-p(A_1), moving it to the end; decycling
    conjugates by the inverse of the last factor, moving it to the
    front. With no factors either direction is a no-op with identity
    conjugator.
    """
    if direction not in ("front", "back"):
        raise ValueError(f"direction must be 'front' or 'back', got {direction!r}")
    n = x.strands
    key = _key_of_nf(x)
    if not key[1]:
        return x, BraidWord(n)
    if direction == "front":
        new, u = _cycle_key(n, key)
        conj = invert_word(BraidWord(n, _simple_letters(n, u)))
    else:
        new, u = _decycle_key(n, key)
        conj = BraidWord(n, _simple_letters(n, u))
    return _nf_public(n, new), conj


_IDENTITY_TRACK: _NfKey = (0, b"")


def _drive_to_summit(n: int, key: _NfKey, track: _NfKey) -> tuple[_NfKey, _NfKey]:
    """Cycle until inf stops rising, then decycle until sup stops falling.

    Stop rule: n(n-1)/2 consecutive steps without improvement declare the
    current value extremal. Both moves are conjugations; ``track`` keeps
    track * w * track^-1 equal to the current element throughout.
    """
    bound = max(1, n * (n - 1) // 2)
    fails = 0
    while key[1] and fails < bound:
        old_inf = key[0]
        key, u = _cycle_key(n, key)
        track = _mul(n, _simple_inv_nf(n, u), track)
        fails = 0 if key[0] > old_inf else fails + 1
    fails = 0
    while key[1] and fails < bound:
        old_sup = key[0] + len(key[1])
        key, u = _decycle_key(n, key)
        track = _mul(n, _simple_nf(n, u), track)
        fails = 0 if key[0] + len(key[1]) < old_sup else fails + 1
    return key, track


@functools.lru_cache(maxsize=None)
def _all_simples(n: int) -> tuple[bytes, ...]:
    """Every nontrivial simple element of B_n, in lexicographic order."""
    return tuple(bytes(p) for p in itertools.permutations(range(n)) if bytes(p) != _id_flat(n))


def _summit_closure(
    n: int,
    seed: _NfKey,
    seed_track: _NfKey,
    max_size: int,
    target: _NfKey | None = None,
) -> dict[_NfKey, _NfKey] | _NfKey | None:
    """Breadth-first closure of the summit set under conjugation by every
    simple element, keeping conjugates that preserve the seed's (inf, sup).

    With a ``target``, returns that element's track as soon as it is
    reached, or None if the closure completes without meeting it;
    without one, returns the complete {element: track} map.
    """
    inf0 = seed[0]
    len0 = len(seed[1])
    simples = _all_simples(n)
    if target is not None and seed == target:
        return seed_track
    seen: dict[_NfKey, _NfKey] = {seed: seed_track}
    queue: deque[_NfKey] = deque([seed])
    while queue:
        key = queue.popleft()
        track = seen[key]
        for s, result in zip(simples, _kernel.conjugate_batch(n, key[0], key[1], simples)):
            if result[0] != inf0 or len(result[1]) != len0 or result in seen:
                continue
            new_track = _mul(n, _simple_inv_nf(n, s), track)
            if target is not None and result == target:
                return new_track
            if len(seen) >= max_size:
                raise ResourceLimitError("super summit set exceeded its cap", len(seen))
            seen[result] = new_track
            queue.append(result)
    if target is not None:
        return None
    return seen


def super_summit_set(w: BraidWord, max_size: int = DEFAULT_SSS_LIMIT) -> SuperSummitSet:
    """The full super summit set of ``w`` with one conjugator per element.

    Elements come back in canonical order (delta power, factor count,
    lexicographic factor images) and every conjugator ``c`` satisfies
    ``c * w * c^-1 = element``; each one is re-verified before returning.

    Raises ResourceLimitError when the set would exceed ``max_size``.
    """
    n = w.strands
    w_key = _nf_of_word(w)
    seed, seed_track = _drive_to_summit(n, w_key, _IDENTITY_TRACK)
    seen = _summit_closure(n, seed, seed_track, max_size)
    assert isinstance(seen, dict)
    ordered = sorted(seen, key=lambda k: (k[0], len(k[1]), k[1]))
    elements = []
    conjugators: dict[NormalForm, BraidWord] = {}
    for key in ordered:
        track = seen[key]
        check = _mul(n, _mul(n, track, w_key), _inv(n, track))
        if check != key:
            raise RuntimeError("internal error: summit conjugator failed verification")
        element = _nf_public(n, key)
        elements.append(element)
        conjugators[element] = BraidWord(n, _word_of_key(n, track))
    return SuperSummitSet(n, tuple(elements), conjugators)


def are_conjugate(
    a: BraidWord, b: BraidWord, max_sss: int = DEFAULT_SSS_LIMIT
) -> ConjugacyCertificate | None:
    """Decide conjugacy; on success return a verified certificate ``c``
    with ``c * a * c^-1 = b``, otherwise None.

    Cheap invariants (exponent sum, permutation cycle type) are checked
    first; then both words are driven to their summits, whose (inf, sup)
    must agree; the verdict is membership of b's summit representative in
    the summit closure of a's, which doubles as the conjugator search.
    """
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    n = a.strands
    if exponent_sum(a) != exponent_sum(b):
        return None
    if permutation_of_word(a).cycle_type() != permutation_of_word(b).cycle_type():
        return None
    a_summit, a_track = _drive_to_summit(n, _nf_of_word(a), _IDENTITY_TRACK)
    b_summit, b_track = _drive_to_summit(n, _nf_of_word(b), _IDENTITY_TRACK)
    if a_summit[0] != b_summit[0] or len(a_summit[1]) != len(b_summit[1]):
        return None
    found = _summit_closure(n, a_summit, a_track, max_sss, target=b_summit)
    if found is None:
        return None
    assert isinstance(found, tuple)
    conj_key = _mul(n, _inv(n, b_track), found)
    conjugator = BraidWord(n, _word_of_key(n, conj_key))
    certificate = ConjugacyCertificate(conjugator, verified=True)
    if not certificate.verifies(a, b):
        raise RuntimeError("internal error: conjugacy certificate failed verification")
    return certificate
