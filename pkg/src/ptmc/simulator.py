"""
Chip-level SAC-OCDMA channel with a unit-power direct correlator receiver.

Each active user puts power 1 on every chip of its codeword; the channel
adds the spectra of all active users. Receiver ``u`` sums received power over
its own chips and decides 1 when that sum reaches half its code weight.

For a zero cross-correlation code the sum is exactly ``bit * W`` in a
noiseless channel; any excess is multiple-access interference (MAI).

Randomness comes from ``numpy.random.Generator`` with the PCG64 bit
generator seeded by ``SimConfig.seed``; trials are drawn in a fixed
sequential order, so a (matrix, config) pair always yields the same report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

MAX_EXHAUSTIVE_USERS = 20
_PATTERN_CHUNK = 1 << 14
_TRIAL_CHUNK = 4096


@dataclass(frozen=True)
class SimConfig:
    trials: int
    seed: int
    activity: float = 0.5
    noise_sigma: float = 0.0

    def __post_init__(self):
        if isinstance(self.trials, bool) or not isinstance(self.trials, (int, np.integer)):
            raise TypeError(f"trials must be an integer, got {self.trials!r}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0.0 <= self.activity <= 1.0:
            raise ValueError(f"activity must be in [0, 1], got {self.activity}")
        if not self.noise_sigma >= 0.0:
            raise ValueError(f"noise_sigma must be >= 0, got {self.noise_sigma}")
        if not -(2**63) <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class SimReport:
    trials: int
    bit_errors: int
    bits_total: int
    max_interference_observed: int

    @property
    def error_rate(self) -> Fraction:
        return Fraction(self.bit_errors, self.bits_total)

    def to_json(self) -> str:
        # error_rate is written with fixed 6 decimals so reports diff cleanly
        body = ",\n".join([
            f'  "trials": {self.trials}',
            f'  "bit_errors": {self.bit_errors}',
            f'  "bits_total": {self.bits_total}',
            f'  "error_rate": {float(self.error_rate):.6f}',
            f'  "max_interference_observed": {self.max_interference_observed}',
        ])
        return "{\n" + body + "\n}\n"

    @classmethod
    def from_json(cls, text: str) -> "SimReport":
        d = json.loads(text)
        return cls(
            trials=d["trials"],
            bit_errors=d["bit_errors"],
            bits_total=d["bits_total"],
            max_interference_observed=d["max_interference_observed"],
        )


def _as_code(matrix) -> np.ndarray:
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] == 0:
        raise ValueError("code matrix must be a non-empty 2-D array")
    return m.astype(np.int64)


def encode(matrix, bits) -> np.ndarray:
    """Aggregate chip powers when user ``u`` sends ``bits[u]``."""
    code = _as_code(matrix)
    b = np.asarray(bits, dtype=np.int64)
    if b.shape != (code.shape[0],):
        raise ValueError(f"expected {code.shape[0]} user bits, got shape {b.shape}")
    return b @ code


def correlate(matrix, spectrum, user: int):
    """Correlator output of receiver ``user`` (1-based)."""
    code = _as_code(matrix)
    n_users, length = code.shape
    if not 1 <= user <= n_users:
        raise ValueError(f"user must be in 1..{n_users}, got {user}")
    s = np.asarray(spectrum)
    if s.shape != (length,):
        raise ValueError(f"spectrum must have {length} chips, got shape {s.shape}")
    value = s @ code[user - 1]
    return value.item()


def detect_direct(matrix, spectrum, user: int) -> int:
    code = _as_code(matrix)
    value = correlate(code, spectrum, user)
    weight = int(code[user - 1].sum())
    return int(2 * value >= weight)


def _decode_block(code: np.ndarray, weights: np.ndarray, spectra: np.ndarray):
    corr = spectra @ code.T
    return corr, (2 * corr >= weights).astype(np.int64)


def _check_exhaustive(code: np.ndarray) -> None:
    if code.shape[0] > MAX_EXHAUSTIVE_USERS:
        raise ValueError(
            f"exhaustive mode supports at most {MAX_EXHAUSTIVE_USERS} users, "
            f"got {code.shape[0]}"
        )


def traffic_patterns(n_users: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows are the binary expansions of ``start..stop-1``; user 1 = bit 0."""
    stop = (1 << n_users) if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    return (idx[:, None] >> np.arange(n_users, dtype=np.int64)) & 1


def run_exhaustive(matrix) -> SimReport:
    """Decode every user under all 2^N on/off patterns, noiseless."""
    code = _as_code(matrix)
    _check_exhaustive(code)
    n_users = code.shape[0]
    weights = code.sum(axis=1)
    total = 1 << n_users
    errors = 0
    worst = 0
    for start in range(0, total, _PATTERN_CHUNK):
        bits = traffic_patterns(n_users, start, min(total, start + _PATTERN_CHUNK))
        corr, decoded = _decode_block(code, weights, bits @ code)
        errors += int((decoded != bits).sum())
        worst = max(worst, int((corr - bits * weights).max()))
    return SimReport(
        trials=total,
        bit_errors=errors,
        bits_total=total * n_users,
        max_interference_observed=worst,
    )


def run_monte_carlo(matrix, config: SimConfig) -> SimReport:
    code = _as_code(matrix)
    n_users, length = code.shape
    weights = code.sum(axis=1)
    rng = np.random.Generator(np.random.PCG64(config.seed % 2**64))
    errors = 0
    worst = 0
    done = 0
    while done < config.trials:
        batch = min(_TRIAL_CHUNK, config.trials - done)
        bits = (rng.random((batch, n_users)) < config.activity).astype(np.int64)
        clean = bits @ code
        worst = max(worst, int((clean @ code.T - bits * weights).max()))
        if config.noise_sigma > 0:
            noise = rng.normal(0.0, config.noise_sigma, size=(batch, length))
            spectra = clean + noise
        else:
            spectra = clean
        _, decoded = _decode_block(code, weights, spectra)
        errors += int((decoded != bits).sum())
        done += batch
    return SimReport(
        trials=config.trials,
        bit_errors=errors,
        bits_total=config.trials * n_users,
        max_interference_observed=worst,
    )
