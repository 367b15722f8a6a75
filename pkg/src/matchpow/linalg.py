"""Exact rank of sparse integer matrices over QQ or a prime field."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Either the rationals (``p == 0``) or the prime field ``GF(p)``."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "prime-field" if self.p else "exact-rationals"

    @classmethod
    def parse(cls, text: str) -> "CoefficientField":
        """``"q"`` for the rationals, ``"fp:P"`` (or ``"fp"``) for GF(P)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t == "fp":
            return cls(DEFAULT_PRIME)
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:P'")

    def __str__(self):
        return f"fp:{self.p}" if self.p else "q"


QQ = CoefficientField(0)


def _reduce_q(row, piv, c):
    a, b = piv[c], row[c]
    out = {}
    for k, v in row.items():
        out[k] = v * a
    for k, v in piv.items():
        w = out.get(k, 0) - v * b
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    out.pop(c, None)
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


def _reduce_p(row, piv, c, p):
    # pivot rows are normalized to have leading coefficient 1
    b = row[c]
    out = dict(row)
    for k, v in piv.items():
        w = (out.get(k, 0) - v * b) % p
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def rank(rows, field: CoefficientField = QQ) -> int:
    """Rank of the matrix whose rows are ``{column: int}`` dicts.

    Over QQ the elimination is fraction-free (integer row combinations
    divided by their content); over GF(p) pivots are normalized to 1.
    """
    p = field.p
    pivots = {}
    for r in rows:
        if p:
            row = {k: v % p for k, v in r.items() if v % p}
        else:
            row = {k: v for k, v in r.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                if p:
                    inv = pow(row[c], p - 2, p)
                    row = {k: v * inv % p for k, v in row.items()}
                pivots[c] = row
                break
            row = _reduce_p(row, piv, c, p) if p else _reduce_q(row, piv, c)
    return len(pivots)
