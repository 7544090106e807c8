"""
Pascal-pattern blocks and the PTMC zero cross-correlation code generator.

A PTMC code for N users and weight W is an N x (N*W) binary matrix laid
out left to right as

    [ left block ] * ceil(W/2)  [ centre run ]  [ right block ] * floor(W/2)

Every block is N-1 chips wide. User 1 owns the W-chip centre run; users
2..N own exactly one chip in each left block (anti-diagonal placement) and
one chip in each right block (diagonal placement). Columns partition among
users, so distinct codewords never overlap.

Matrices are plain 2-D ``numpy.uint8`` arrays (row = user, column = chip).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

# Largest n whose binomial row fits in a signed 64-bit integer with margin.
MAX_BINOMIAL_ROW = 60


@dataclass(frozen=True)
class PascalRow:
    n: int
    entries: tuple[int, ...]


@dataclass(frozen=True)
class CodeSpec:
    """Requested PTMC parameters: ``users`` (N) and code ``weight`` (W)."""

    users: int
    weight: int

    def __post_init__(self):
        for name in ("users", "weight"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 2:
                raise ValueError(f"{name} must be >= 2, got {value}")


@dataclass(frozen=True)
class BlockPlan:
    left_blocks: int
    right_blocks: int
    block_width: int
    center_start: int
    parity_param: int

    @property
    def weight(self) -> int:
        return self.left_blocks + self.right_blocks

    @property
    def length(self) -> int:
        return (self.left_blocks + self.right_blocks) * self.block_width + self.weight


def binomial_row(n: int) -> PascalRow:
    """Row ``n`` of Pascal's triangle built by the additive recurrence."""
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    if n > MAX_BINOMIAL_ROW:
        raise ValueError(
            f"row index {n} exceeds the 64-bit safe bound {MAX_BINOMIAL_ROW}"
        )
    row = [1]
    for _ in range(n):
        row = [1] + [row[k - 1] + row[k] for k in range(1, len(row))] + [1]
    return PascalRow(n, tuple(row))


def block_plan(spec: CodeSpec) -> BlockPlan:
    w, n_users = spec.weight, spec.users
    left = (w + 1) // 2
    right = w // 2
    return BlockPlan(
        left_blocks=left,
        right_blocks=right,
        block_width=n_users - 1,
        center_start=left * (n_users - 1),
        parity_param=w // 2,
    )


def _check_user(users: int, user: int) -> None:
    if users < 2:
        raise ValueError(f"users must be >= 2, got {users}")
    if not 2 <= user <= users:
        raise ValueError(f"user must be in 2..{users}, got {user}")


def left_block(users: int, user: int) -> int:
    """Chip offset of ``user`` inside a left (anti-diagonal) block."""
    _check_user(users, user)
    return users - user


def right_block(users: int, user: int) -> int:
    """Chip offset of ``user`` inside a right (diagonal) block."""
    _check_user(users, user)
    return user - 2


def pascal_type_matrix(users: int, run: int) -> np.ndarray:
    """Binary Pascal pattern: a ``run``-wide apex over two diagonal legs.

    Shape is users x (2*(users-1) + run); this is the PTMC layout with a
    single left and a single right block.
    """
    if users < 2 or run < 1:
        raise ValueError(f"need users >= 2 and run >= 1, got {users}, {run}")
    width = users - 1
    bits = np.zeros((users, 2 * width + run), dtype=np.uint8)
    bits[0, width : width + run] = 1
    for user in range(2, users + 1):
        bits[user - 1, left_block(users, user)] = 1
        bits[user - 1, width + run + right_block(users, user)] = 1
    return bits


def generate_ptmc(spec: CodeSpec) -> np.ndarray:
    plan = block_plan(spec)
    n_users, w = spec.users, spec.weight
    width = plan.block_width
    bits = np.zeros((n_users, plan.length), dtype=np.uint8)

    p = plan.center_start
    bits[0, p : p + w] = 1

    right_start = p + w
    for user in range(2, n_users + 1):
        row = bits[user - 1]
        lo = left_block(n_users, user)
        ro = right_block(n_users, user)
        row[lo : plan.left_blocks * width : width] = 1
        row[right_start + ro :: width] = 1
    return bits


def canonicalize(matrix: np.ndarray) -> np.ndarray:
    """Drop all-zero columns, keeping row and column order."""
    m = np.asarray(matrix, dtype=np.uint8)
    return m[:, m.any(axis=0)]


def codeword(matrix: np.ndarray, user: int) -> list[int]:
    """Sorted chip indices occupied by ``user`` (1-based)."""
    n_users = matrix.shape[0]
    if not 1 <= user <= n_users:
        raise ValueError(f"user must be in 1..{n_users}, got {user}")
    return np.flatnonzero(matrix[user - 1]).tolist()


# --- text / JSON matrix formats -------------------------------------------


class MatrixFormatError(ValueError):
    pass


def header_line(n_users: int, weight: int, length: int) -> str:
    return f"# ptmc N={n_users} W={weight} L={length}"


def format_matrix(matrix: np.ndarray, header: str | None = None) -> str:
    lines = [] if header is None else [header]
    lines.extend(" ".join("1" if b else "0" for b in row) for row in matrix)
    return "".join(line + "\n" for line in lines)


def parse_matrix(text: str) -> np.ndarray:
    """Parse the whitespace-separated 0/1 text format; ``#`` lines are ignored.

    A document starting with ``{`` is read as the JSON form written by
    :func:`matrix_to_json`.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json_matrix(stripped)

    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        tokens = line.split()
        bad = [t for t in tokens if t not in ("0", "1")]
        if bad:
            raise MatrixFormatError(f"line {lineno}: non-binary entry {bad[0]!r}")
        if rows and len(tokens) != len(rows[0]):
            raise MatrixFormatError(
                f"line {lineno}: expected {len(rows[0])} entries, got {len(tokens)}"
            )
        rows.append([int(t) for t in tokens])
    if not rows:
        raise MatrixFormatError("no matrix rows found")
    return np.array(rows, dtype=np.uint8)


def _parse_json_matrix(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
        rows = doc["rows"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise MatrixFormatError(f"bad JSON matrix: {exc}") from None
    if not isinstance(rows, list) or not rows or not isinstance(rows[0], list):
        raise MatrixFormatError("JSON matrix has no rows")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != width:
            raise MatrixFormatError(f"JSON row {i} is ragged")
        if any(v not in (0, 1) or isinstance(v, bool) for v in row):
            raise MatrixFormatError(f"JSON row {i} has non-binary entries")
    return np.array(rows, dtype=np.uint8)


def matrix_to_json(matrix: np.ndarray, weight: int | None = None) -> str:
    doc = {"users": int(matrix.shape[0])}
    if weight is not None:
        doc["weight"] = weight
    doc["length"] = int(matrix.shape[1])
    doc["rows"] = matrix.astype(int).tolist()
    return json.dumps(doc) + "\n"
