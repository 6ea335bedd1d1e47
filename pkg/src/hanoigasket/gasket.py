"""The discrete Sierpinski gasket graph SG_n and its reference distance."""

from __future__ import annotations

import enum

from .core import GasketWord, HanoiError, SYMBOLS, check_lengths


class PqrFunction(enum.Enum):
    P = "P"
    Q = "Q"
    R = "R"


# str.translate tables mapping alpha -> '0', others -> '1'
_BIT_TABLES = {
    a: str.maketrans({s: ("0" if s == a else "1") for s in SYMBOLS}) for a in SYMBOLS
}


def f_alpha(u: GasketWord, alpha: str) -> int:
    """Distance from ``u`` to the corner ``alpha * len(u)``.

    Sum of ``2**k`` over positions ``k`` (0 = rightmost) where ``u`` differs
    from ``alpha``.
    """
    if not u:
        return 0
    return int(u.translate(_BIT_TABLES[alpha]), 2)


def tail_length(u: GasketWord) -> int:
    """Length of the maximal constant suffix of ``u``."""
    if not u:
        return 0
    last = u[-1]
    return len(u) - len(u.rstrip(last))


def sg_neighbors(u: GasketWord) -> set[GasketWord]:
    n = len(u)
    if n == 0:
        raise HanoiError("EmptyWord: SG_0 is a single vertex with no edges")
    head, last = u[:-1], u[-1]
    out = {head + b for b in SYMBOLS if b != last}
    t = tail_length(u)
    if t < n:
        beta = u[n - t - 1]
        out.add(u[: n - t - 1] + last + beta * t)
    return out


def _sums(u: GasketWord, v: GasketWord) -> tuple[int, int]:
    alt1 = f_alpha(u, "R") + f_alpha(v, "T")
    alt2 = f_alpha(u, "L") + f_alpha(v, "L")
    return alt1, alt2


def pqr_eval(kind: PqrFunction, u: GasketWord, v: GasketWord) -> int:
    """Closed-form p, q or r: the minimum of the two alternative sums."""
    m = check_lengths(u, v)
    alt1, alt2 = _sums(u, v)
    if kind is PqrFunction.P:
        return min(alt1, (1 << m) + alt2)
    if kind is PqrFunction.Q:
        return min((1 << m) + alt1, alt2)
    return min(alt1, alt2)


# (kind, c, d) -> ("alt1" | "alt2") for terminal cases, or (next kind, exponent shift)
# where the weight added is 2**(m + shift), m = current length.
PQR_CASES: dict[tuple[PqrFunction, str, str], object] = {}


def _fill_cases() -> None:
    P, Q, R = PqrFunction.P, PqrFunction.Q, PqrFunction.R
    rows = {
        P: {
            "alt1": ["RT", "RL", "RR", "LT", "TT", "TR"],
            (P, 0): ["TL", "LR"],
            (R, 0): ["LL"],
        },
        Q: {
            "alt2": ["LL", "LT", "LR", "RL", "TL", "TR"],
            (Q, 0): ["TT", "RR"],
            (R, 0): ["RT"],
        },
        R: {
            "alt1": ["RT"],
            "alt2": ["LL"],
            (R, -1): ["LT", "RL"],
            (R, 0): ["TR"],
            (P, -1): ["RR", "TT"],
            (Q, -1): ["TL", "LR"],
        },
    }
    for kind, row in rows.items():
        for action, pairs in row.items():
            for c, d in pairs:
                PQR_CASES[kind, c, d] = action
    assert len(PQR_CASES) == 27


_fill_cases()


def pqr_recurse(kind: PqrFunction, u: GasketWord, v: GasketWord) -> int:
    """The same function as :func:`pqr_eval`, via the one-pair-at-a-time case table."""
    m = check_lengths(u, v)
    total = 0
    i = 0
    while m > 0:
        action = PQR_CASES[kind, u[i], v[i]]
        if action == "alt1":
            return total + f_alpha(u[i:], "R") + f_alpha(v[i:], "T")
        if action == "alt2":
            return total + f_alpha(u[i:], "L") + f_alpha(v[i:], "L")
        kind, shift = action
        total += 1 << (m + shift)
        m -= 1
        i += 1
    return total


def canonical_table(a: str, b: str) -> dict[int, int]:
    """``str.translate`` table sending a -> T, b -> R and the third symbol -> L."""
    (third,) = set(SYMBOLS) - {a, b}
    return str.maketrans({a: "T", b: "R", third: "L"})


CANONICAL = {(a, b): canonical_table(a, b) for a in SYMBOLS for b in SYMBOLS if a != b}


def common_prefix_length(x, y) -> int:
    i = 0
    n = len(x)
    while i < n and x[i] == y[i]:
        i += 1
    return i


def sg_distance_reference(x: GasketWord, y: GasketWord) -> int:
    """Shortest-path length in SG_n from the top-level min decomposition."""
    n = check_lengths(x, y)
    i = common_prefix_length(x, y)
    if i == n:
        return 0
    table = CANONICAL[x[i], y[i]]
    xs = x[i + 1 :].translate(table)
    ys = y[i + 1 :].translate(table)
    return 1 + pqr_eval(PqrFunction.P, xs, ys)


def alternative_sums(x: GasketWord, y: GasketWord) -> tuple[int, int]:
    """Lengths ``(alt1, alt2)`` of the best path crossing the largest differing
    level once or twice.  ``x`` and ``y`` must differ.
    """
    n = check_lengths(x, y)
    i = common_prefix_length(x, y)
    if i == n:
        raise HanoiError("IdenticalStates: words are equal")
    table = CANONICAL[x[i], y[i]]
    xs = x[i + 1 :].translate(table)
    ys = y[i + 1 :].translate(table)
    s1, s2 = _sums(xs, ys)
    return 1 + s1, 1 + (1 << len(xs)) + s2
