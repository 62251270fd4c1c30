"""Truth-table and ANF representations of Boolean functions.

Inputs are encoded little-endian in the variable index: the input vector
``x`` corresponds to the integer ``u`` with ``x_i = (u >> i) & 1``.  Truth
tables are packed 64 bits per ``uint64`` word, bit ``j`` of word ``w``
holding the value at index ``64*w + j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

MAX_VARS = 28

__all__ = [
    "MAX_VARS",
    "Anf",
    "BooleanFunction",
    "anf_from_tt",
    "apply_affine_substitution",
    "degree",
    "evaluate",
    "is_rotation_symmetric",
    "mobius",
    "parse_anf",
    "rotate",
    "rotation_index_map",
    "tt_from_anf",
]


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"variable count must satisfy 1 <= n <= {MAX_VARS}, got {n}")


def _pack(bits: np.ndarray) -> np.ndarray:
    packed = np.packbits(bits.astype(np.uint8, copy=False), bitorder="little")
    nwords = max(1, (packed.size + 7) // 8)
    buf = np.zeros(nwords * 8, dtype=np.uint8)
    buf[: packed.size] = packed
    return buf.view("<u8").astype(np.uint64)


class BooleanFunction:
    """An ``n``-variable Boolean function stored as a packed truth table.

    Instances are immutable.  Addition over GF(2) is ``f ^ g`` (or ``f + g``).
    """

    __slots__ = ("_n", "_words", "_bits")

    def __init__(self, n: int, words: np.ndarray):
        _check_n(n)
        words = np.ascontiguousarray(words, dtype=np.uint64)
        expected = max(1, (1 << n) // 64)
        if words.shape != (expected,):
            raise ValueError(f"expected {expected} words for n={n}, got shape {words.shape}")
        if n < 6 and int(words[0]) >> (1 << n):
            raise ValueError("truth table has bits set beyond 2**n")
        words = words.copy()
        words.flags.writeable = False
        self._n = n
        self._words = words
        self._bits = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_bits(cls, n: int, bits) -> BooleanFunction:
        """Build from a length-``2**n`` sequence of 0/1 values."""
        _check_n(n)
        bits = np.asarray(bits)
        if bits.shape != (1 << n,):
            raise ValueError(f"truth table must have length {1 << n}, got {bits.shape}")
        f = cls(n, _pack(bits & 1))
        return f

    @classmethod
    def from_int(cls, n: int, value: int) -> BooleanFunction:
        """Build from the integer whose bit ``u`` is ``f(u)``."""
        _check_n(n)
        if value < 0 or value >> (1 << n):
            raise ValueError("integer truth table out of range")
        nbytes = max(8, (1 << n) // 8)
        raw = value.to_bytes(nbytes, "little")
        return cls(n, np.frombuffer(raw, dtype="<u8").astype(np.uint64))

    @classmethod
    def from_hex(cls, text: str, n: int) -> BooleanFunction:
        """Parse the lowercase hex truth-table format.

        The string has ``2**(n-2)`` digits (one digit for ``n = 1``); the
        least significant digit holds indices 0..3.
        """
        _check_n(n)
        ndigits = max(1, (1 << n) // 4)
        text = text.strip()
        if len(text) != ndigits:
            raise ValueError(f"hex truth table for n={n} needs {ndigits} digits, got {len(text)}")
        if not re.fullmatch(r"[0-9a-fA-F]+", text):
            raise ValueError("malformed hex truth table")
        if ndigits == 1:
            return cls.from_int(n, int(text, 16))
        raw = bytes.fromhex(text if ndigits % 2 == 0 else "0" + text)[::-1]
        buf = np.zeros(max(8, len(raw)), dtype=np.uint8)
        buf[: len(raw)] = np.frombuffer(raw, dtype=np.uint8)
        return cls(n, buf.view("<u8").astype(np.uint64))

    @classmethod
    def constant(cls, n: int, value: int) -> BooleanFunction:
        return cls.from_bits(n, np.full(1 << n, value & 1, dtype=np.uint8))

    @classmethod
    def variable(cls, n: int, i: int) -> BooleanFunction:
        """The coordinate function ``x_i``."""
        u = np.arange(1 << n, dtype=np.int64)
        return cls.from_bits(n, (u >> i) & 1)

    # -- views ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def bits(self) -> np.ndarray:
        """Read-only ``uint8`` array of the ``2**n`` truth-table values."""
        if self._bits is None:
            raw = self._words.astype("<u8").view(np.uint8)
            bits = np.unpackbits(raw, bitorder="little")[: 1 << self._n]
            bits.flags.writeable = False
            self._bits = bits
        return self._bits

    def to_int(self) -> int:
        return int.from_bytes(self._words.astype("<u8").tobytes(), "little")

    def to_hex(self) -> str:
        ndigits = max(1, (1 << self._n) // 4)
        if self._n < 6:
            return format(int(self._words[0]), f"0{ndigits}x")
        return self._words.astype("<u8").tobytes()[::-1].hex()

    def weight(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    def __call__(self, u: int) -> int:
        return evaluate(self, u)

    # -- algebra ----------------------------------------------------------

    def __xor__(self, other: BooleanFunction) -> BooleanFunction:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("cannot add functions on different variable counts")
        return BooleanFunction(self.n, self._words ^ other._words)

    __add__ = __xor__

    def __and__(self, other: BooleanFunction) -> BooleanFunction:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("cannot multiply functions on different variable counts")
        return BooleanFunction(self.n, self._words & other._words)

    __mul__ = __and__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self._n, self._words.tobytes()))

    def __repr__(self) -> str:
        body = self.to_hex()
        if len(body) > 32:
            body = body[:14] + "..." + body[-14:]
        return f"BooleanFunction(n={self._n}, tt=0x{body})"


@dataclass(frozen=True)
class Anf:
    """Algebraic normal form: the set of monomials with coefficient 1.

    Each monomial is a bitmask over the ``n`` variables.
    """

    n: int
    monomials: frozenset[int]

    def __post_init__(self):
        _check_n(self.n)
        monos = frozenset(int(m) for m in self.monomials)
        limit = 1 << self.n
        for mono in monos:
            if not 0 <= mono < limit:
                raise ValueError(f"monomial mask {mono:#x} does not fit in {self.n} bits")
        object.__setattr__(self, "monomials", monos)

    @classmethod
    def from_terms(cls, n: int, terms) -> Anf:
        """Sum the given monomial masks over GF(2); repeated masks cancel."""
        acc: set[int] = set()
        for mono in terms:
            acc ^= {int(mono)}
        return cls(n, frozenset(acc))

    @property
    def degree(self) -> int:
        return max((m.bit_count() for m in self.monomials), default=0)

    def __add__(self, other: Anf) -> Anf:
        if self.n != other.n:
            raise ValueError("cannot add ANFs on different variable counts")
        return Anf(self.n, self.monomials ^ other.monomials)

    def to_text(self, var: str = "x") -> str:
        """Render as ``x0*x2+x1+1``; terms ordered by degree then mask."""
        if not self.monomials:
            return "0"
        terms = []
        for mono in sorted(self.monomials, key=lambda m: (-m.bit_count(), _index_key(m))):
            if mono == 0:
                terms.append("1")
            else:
                terms.append("*".join(f"{var}{i}" for i in range(self.n) if mono >> i & 1))
        return "+".join(terms)

    def __str__(self) -> str:
        return self.to_text()


def _index_key(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


_TERM_RE = re.compile(r"^([A-Za-z]+)(\d+)$")


def parse_anf(text: str, n: int, var: str = "x") -> Anf:
    """Parse ANF text such as ``x0*x1+x2+1``.

    Indices within a term must be strictly increasing.  ``0`` denotes the
    zero polynomial.
    """
    text = "".join(text.split())
    if text in ("", "0"):
        return Anf(n, frozenset())
    terms = []
    for term in text.split("+"):
        if term == "1":
            terms.append(0)
            continue
        if not term:
            raise ValueError(f"empty term in ANF text {text!r}")
        mask = 0
        last = -1
        for factor in term.split("*"):
            match = _TERM_RE.match(factor)
            if not match or match.group(1) != var:
                raise ValueError(f"bad factor {factor!r}; expected {var}<index>")
            i = int(match.group(2))
            if i >= n:
                raise ValueError(f"variable {factor} out of range for n={n}")
            if i <= last:
                raise ValueError(f"indices in term {term!r} must be strictly increasing")
            last = i
            mask |= 1 << i
        terms.append(mask)
    return Anf.from_terms(n, terms)


def mobius(bits: np.ndarray, n: int) -> np.ndarray:
    """Binary Moebius transform of a 0/1 array of length ``2**n``.

    The transform is its own inverse; a new array is returned.
    """
    a = np.array(bits, dtype=np.uint8, copy=True)
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return a


def evaluate(f: BooleanFunction, u: int) -> int:
    """Value of ``f`` at input index ``u``."""
    if not 0 <= u < (1 << f.n):
        raise IndexError(f"input index {u} out of range for n={f.n}")
    return int(f.words[u >> 6]) >> (u & 63) & 1


def anf_from_tt(f: BooleanFunction) -> Anf:
    coeffs = mobius(f.bits, f.n)
    return Anf(f.n, frozenset(np.flatnonzero(coeffs).tolist()))


def tt_from_anf(a: Anf) -> BooleanFunction:
    coeffs = np.zeros(1 << a.n, dtype=np.uint8)
    if a.monomials:
        coeffs[np.fromiter(a.monomials, dtype=np.int64)] = 1
    return BooleanFunction.from_bits(a.n, mobius(coeffs, a.n))


def degree(f: BooleanFunction) -> int:
    """Algebraic degree; both constant functions have degree 0."""
    support = np.flatnonzero(mobius(f.bits, f.n))
    if support.size == 0:
        return 0
    return int(np.bitwise_count(support.astype(np.uint64)).max())


def rotation_index_map(n: int, s: int) -> np.ndarray:
    """Index array ``p`` with ``rotate(f, s).bits == f.bits[p]``."""
    s %= n
    u = np.arange(1 << n, dtype=np.int64)
    if s == 0:
        return u
    mask = (1 << n) - 1
    return ((u >> s) | (u << (n - s))) & mask


def rotate(f: BooleanFunction, s: int) -> BooleanFunction:
    """Return ``g`` with ``g(x_0, ..., x_{n-1}) = f(x_s, x_{s+1}, ...)``.

    Indices are taken mod ``n``; in the ANF every variable ``x_i`` becomes
    ``x_{i+s}``.
    """
    if not 0 <= s < f.n:
        raise ValueError(f"shift must satisfy 0 <= s < n, got {s}")
    if s == 0:
        return f
    return BooleanFunction.from_bits(f.n, f.bits[rotation_index_map(f.n, s)])


def is_rotation_symmetric(f: BooleanFunction) -> bool:
    return f.n == 1 or rotate(f, 1) == f


def apply_affine_substitution(f: BooleanFunction, A, b) -> BooleanFunction:
    """Compose ``f`` with ``sigma(x) = xA + b`` over GF(2).

    ``x`` is a row vector, so coordinate ``j`` of ``sigma(x)`` is
    ``sum_i x_i A[i, j] + b_j``.  ``A`` need not be invertible.
    """
    n = f.n
    A = np.asarray(A, dtype=np.int64) & 1
    b = np.asarray(b, dtype=np.int64) & 1
    if A.shape != (n, n):
        raise ValueError(f"matrix must be {n}x{n}, got {A.shape}")
    if b.shape != (n,):
        raise ValueError(f"offset must have length {n}, got {b.shape}")
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    rows = (A * weights).sum(axis=1)
    offset = int((b * weights).sum())
    image = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        half = 1 << i
        image[half : 2 * half] = image[:half] ^ rows[i]
    return BooleanFunction.from_bits(n, f.bits[image ^ offset])
