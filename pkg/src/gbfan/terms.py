"""Power products as exponent tuples, one entry per ring variable."""

from __future__ import annotations


def tmul(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(s, t))


def tdiv(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    """s / t; caller guarantees divisibility."""
    return tuple(a - b for a, b in zip(s, t))


def tdivides(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    """True when the power product s divides t."""
    return all(a <= b for a, b in zip(s, t))


def tlcm(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(a, b) for a, b in zip(s, t))


def tgcd(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(min(a, b) for a, b in zip(s, t))


def tdeg(t: tuple[int, ...]) -> int:
    return sum(t)


def tcoprime(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(s, t))


def is_one(t: tuple[int, ...]) -> bool:
    return not any(t)


def divisor_count(t: tuple[int, ...]) -> int:
    n = 1
    for e in t:
        n *= e + 1
    return n


def term_str(t: tuple[int, ...], varnames) -> str:
    parts = []
    for name, e in zip(varnames, t):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
