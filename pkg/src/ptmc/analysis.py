"""
Code property checks and the SAC-OCDMA family comparison.

Families compared (users K, weight, cross-correlation, length):

    MFH       K = Q^2    Q+1        1          Q^2 + Q
    MDW       K = n      even       1          3n + (8/3) sin^2(n pi/3)
    ZCC_ref11 K = 2^m    2^(m-1)    0          2^m
    Hadamard  2^M - 1    2^(M-1)    2^(M-2)    2^M
    PTMC      N          W          0          N * W
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

FAMILIES = ("MFH", "MDW", "ZCC_ref11", "Hadamard", "PTMC")

MAX_HADAMARD_ORDER = 20
# compare_table builds the Hadamard code up to this order and measures it
_MEASURED_HADAMARD_ORDER = 10

# sin^2(k*pi/3) for k mod 3
_SIN2_THIRD_PI = (Fraction(0), Fraction(3, 4), Fraction(3, 4))


@dataclass
class CorrelationReport:
    users: int
    length: int
    weights: list[int]
    lambda_max: int
    is_zcc: bool
    violations: list[tuple[tuple[int, int], int]]
    expected_weight: int | None = None
    weight_mismatches: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_zcc and not self.weight_mismatches

    def to_dict(self) -> dict:
        return {
            "users": self.users,
            "length": self.length,
            "weights": list(self.weights),
            "lambda_max": self.lambda_max,
            "is_zcc": self.is_zcc,
            "violations": [
                {"users": [i, j], "value": v} for (i, j), v in self.violations
            ],
            "expected_weight": self.expected_weight,
            "weight_mismatches": list(self.weight_mismatches),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


@dataclass
class FamilyRow:
    family: str
    params: dict[str, int]
    users: int
    weight: int
    lam: int
    length: int
    requested_users: int
    requested_weight: int
    notes: str = ""

    @property
    def param_label(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params.items())

    def to_dict(self) -> dict:
        d = asdict(self)
        return {
            "family": d["family"],
            "params": d["params"],
            "users": d["users"],
            "weight": d["weight"],
            "lambda": d["lam"],
            "length": d["length"],
            "requested_users": d["requested_users"],
            "requested_weight": d["requested_weight"],
            "notes": d["notes"],
        }


def cross_correlation(a, b) -> int:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"codeword lengths differ: {a.shape} vs {b.shape}")
    return int(a @ b)


def verify(matrix, expected_weight: int | None = None) -> CorrelationReport:
    """Weights, length and every pairwise cross-correlation of a code matrix.

    Users in the report are 1-based. With ``expected_weight`` set, rows of any
    other weight are listed in ``weight_mismatches``.
    """
    m = np.asarray(matrix)
    if m.ndim != 2 or m.size == 0:
        raise ValueError("cannot verify an empty matrix")
    if not np.isin(m, (0, 1)).all():
        raise ValueError("matrix entries must be 0 or 1")
    m = m.astype(np.int64)
    gram = m @ m.T
    n_users = m.shape[0]
    weights = [int(gram[i, i]) for i in range(n_users)]
    violations = [
        ((i + 1, j + 1), int(gram[i, j]))
        for i, j in combinations(range(n_users), 2)
        if gram[i, j]
    ]
    lambda_max = max((v for _, v in violations), default=0)
    mismatches = []
    if expected_weight is not None:
        mismatches = [u + 1 for u, w in enumerate(weights) if w != expected_weight]
    return CorrelationReport(
        users=n_users,
        length=m.shape[1],
        weights=weights,
        lambda_max=lambda_max,
        is_zcc=not violations,
        violations=violations,
        expected_weight=expected_weight,
        weight_mismatches=mismatches,
    )


def sylvester_hadamard(order: int) -> np.ndarray:
    """The 2^order x 2^order Sylvester matrix over {+1, -1}."""
    h = np.ones((1, 1), dtype=np.int8)
    for _ in range(order):
        h = np.block([[h, h], [h, -h]])
    return h


def generate_hadamard_code(M: int) -> np.ndarray:
    """Unipolar Hadamard SAC code: 2^M - 1 codewords of length 2^M.

    +1 maps to 1 and -1 to 0; the all-ones first row is discarded.
    """
    if not 2 <= M <= MAX_HADAMARD_ORDER:
        raise ValueError(f"M must be in 2..{MAX_HADAMARD_ORDER}, got {M}")
    h = sylvester_hadamard(M)
    return (h[1:] > 0).astype(np.uint8)


def _require_int(name: str, value, lo: int) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < lo:
        raise ValueError(f"{name} must be >= {lo}, got {value}")
    return int(value)


def mdw_length(n: int) -> int:
    exact = 3 * n + Fraction(8, 3) * _SIN2_THIRD_PI[n % 3]
    assert exact.denominator == 1
    return int(exact)


def family_length(family: str, **params) -> int:
    """Code length of ``family`` from its closed-form expression.

    Parameters by family: MFH ``Q``, MDW ``n``, ZCC_ref11 ``m``,
    Hadamard ``M``, PTMC ``N`` and ``W``.
    """
    def get(name, lo):
        if name not in params:
            raise ValueError(f"{family} needs parameter {name!r}")
        return _require_int(name, params[name], lo)

    if family == "MFH":
        q = get("Q", 2)
        return q * q + q
    if family == "MDW":
        return mdw_length(get("n", 1))
    if family == "ZCC_ref11":
        return 2 ** get("m", 1)
    if family == "Hadamard":
        return 2 ** get("M", 2)
    if family == "PTMC":
        return get("N", 2) * get("W", 2)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _smallest(predicate, start: int) -> int:
    k = start
    while not predicate(k):
        k += 1
    return k


def _mismatch_note(users, weight, req_users, req_weight) -> str:
    if users == req_users and weight == req_weight:
        return ""
    return f"requested users={req_users} weight={req_weight}"


def _join(*parts: str) -> str:
    return "; ".join(p for p in parts if p)


def compare_table(users: int, weight: int) -> list[FamilyRow]:
    """One row per family at the smallest parameter covering ``users``.

    PTMC is evaluated at exactly (users, weight). MDW has a free even weight
    that does not enter its length; it is reported as the smallest even
    weight >= the requested one.
    """
    users = _require_int("users", users, 2)
    weight = _require_int("weight", weight, 2)
    rows = []

    q = _smallest(lambda k: k * k >= users, 2)
    rows.append(FamilyRow(
        "MFH", {"Q": q}, q * q, q + 1, 1, family_length("MFH", Q=q),
        users, weight, _mismatch_note(q * q, q + 1, users, weight),
    ))

    n = users
    mdw_weight = weight + (weight % 2)
    rows.append(FamilyRow(
        "MDW", {"n": n}, n, mdw_weight, 1, family_length("MDW", n=n),
        users, weight, _mismatch_note(n, mdw_weight, users, weight),
    ))

    m = _smallest(lambda k: 2 ** k >= users, 1)
    rows.append(FamilyRow(
        "ZCC_ref11", {"m": m}, 2 ** m, 2 ** (m - 1), 0,
        family_length("ZCC_ref11", m=m),
        users, weight, _mismatch_note(2 ** m, 2 ** (m - 1), users, weight),
    ))

    big_m = _smallest(lambda k: 2 ** k - 1 >= users, 2)
    if big_m <= _MEASURED_HADAMARD_ORDER:
        rep = verify(generate_hadamard_code(big_m))
        h_users, h_weight, h_lam, h_len = (
            rep.users, rep.weights[0], rep.lambda_max, rep.length,
        )
        source = "measured from construction"
    else:
        h_users, h_weight = 2 ** big_m - 1, 2 ** (big_m - 1)
        h_lam, h_len = 2 ** (big_m - 2), 2 ** big_m
        source = "closed form"
    rows.append(FamilyRow(
        "Hadamard", {"M": big_m}, h_users, h_weight, h_lam, h_len,
        users, weight,
        _join(
            _mismatch_note(h_users, h_weight, users, weight),
            f"users 2^M-1 {source} (table form 2^(M-1) = {2 ** (big_m - 1)})",
        ),
    ))

    rows.append(FamilyRow(
        "PTMC", {"N": users, "W": weight}, users, weight, 0,
        family_length("PTMC", N=users, W=weight), users, weight,
    ))
    return rows


CSV_FIELDS = ("family", "param", "users", "weight", "lambda", "length", "notes")


def rows_to_csv(rows: list[FamilyRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow(
            [r.family, r.param_label, r.users, r.weight, r.lam, r.length, r.notes]
        )
    return buf.getvalue()


def rows_to_json(rows: list[FamilyRow]) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"


def rows_to_table(rows: list[FamilyRow]) -> str:
    header = ["family", "param", "users", "weight", "lambda", "length", "notes"]
    body = [
        [r.family, r.param_label, str(r.users), str(r.weight), str(r.lam),
         str(r.length), r.notes]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
             for row in [header, *body]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
