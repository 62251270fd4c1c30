"""Exact Walsh-Hadamard analysis of Boolean functions."""

from __future__ import annotations

import json
import os
import warnings
from dataclasses import dataclass

import numpy as np

from .boolfn import MAX_VARS, BooleanFunction

__all__ = [
    "DEFAULT_SPECTRAL_CAP",
    "NotBentError",
    "SpectralCapError",
    "WalshSpectrum",
    "dual",
    "fwht",
    "is_bent",
    "nonlinearity",
    "spectral_cap",
    "walsh_spectrum",
]

DEFAULT_SPECTRAL_CAP = 24


class SpectralCapError(ValueError):
    """Raised when a spectrum is requested above the configured size cap."""


class NotBentError(ValueError):
    pass


def spectral_cap(cap: int | None = None) -> int:
    """Resolve the cap: explicit argument, else ``RSBENT_SPECTRAL_CAP``, else 24."""
    if cap is None:
        env = os.environ.get("RSBENT_SPECTRAL_CAP")
        cap = int(env) if env else DEFAULT_SPECTRAL_CAP
    return min(cap, MAX_VARS)


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    n: int
    values: np.ndarray

    def __eq__(self, other) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def __len__(self) -> int:
        return self.values.size

    def __getitem__(self, b):
        return self.values[b]

    def max_abs(self) -> int:
        return int(np.abs(self.values).max())

    def parseval_ok(self) -> bool:
        return int(np.dot(self.values, self.values)) == 1 << (2 * self.n)

    def to_json(self) -> str:
        return json.dumps(self.values.tolist(), separators=(",", ":"))


def fwht(values: np.ndarray) -> np.ndarray:
    """In-place fast Walsh-Hadamard transform of a length ``2**n`` array."""
    size = values.size
    h = 1
    while h < size:
        view = values.reshape(-1, 2, h)
        lo = view[:, 0, :].copy()
        view[:, 0, :] += view[:, 1, :]
        lo -= view[:, 1, :]
        view[:, 1, :] = lo
        h <<= 1
    return values


def walsh_spectrum(f: BooleanFunction, cap: int | None = None) -> WalshSpectrum:
    """``W_f(b) = sum_x (-1)^(f(x) + <b, x>)`` for every ``b``."""
    limit = spectral_cap(cap)
    if f.n > limit:
        raise SpectralCapError(f"n={f.n} exceeds spectral cap {limit}")
    signs = 1 - 2 * f.bits.astype(np.int64)
    values = fwht(signs)
    values.flags.writeable = False
    return WalshSpectrum(f.n, values)


def is_bent(f: BooleanFunction, cap: int | None = None) -> bool:
    """True iff every Walsh value has absolute value ``2**(n/2)``.

    Odd ``n`` admits no bent functions; the answer is then ``False`` and a
    ``RuntimeWarning`` is issued.
    """
    if f.n % 2:
        warnings.warn(f"bentness queried for odd n={f.n}", RuntimeWarning, stacklevel=2)
        return False
    spec = walsh_spectrum(f, cap)
    return bool(np.all(np.abs(spec.values) == 1 << (f.n // 2)))


def nonlinearity(f: BooleanFunction, cap: int | None = None) -> int:
    spec = walsh_spectrum(f, cap)
    return (1 << (f.n - 1)) - spec.max_abs() // 2


def dual(f: BooleanFunction, cap: int | None = None) -> BooleanFunction:
    """The dual ``g`` of a bent ``f``: ``W_f(b) = 2**(n/2) (-1)^g(b)``."""
    if f.n % 2:
        raise NotBentError(f"no bent functions exist on odd n={f.n}")
    spec = walsh_spectrum(f, cap)
    scale = 1 << (f.n // 2)
    if not np.all(np.abs(spec.values) == scale):
        raise NotBentError("dual is only defined for bent functions")
    return BooleanFunction.from_bits(f.n, (spec.values < 0).astype(np.uint8))
