"""Independent brute-force oracles the tests check the package against.

Nothing here imports the package's search code paths: areas come from
the 16*area^2 product form and stdlib math.isqrt, so agreement between
these scans and the library is meaningful.
"""

from __future__ import annotations

import math


def naive_integer_area(a: int, b: int, c: int) -> int | None:
    """Integer area of the triangle, or None, with no parity assumption.

    16*area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c) is integral for any
    integer sides; the area is an integer exactly when that product is
    a perfect square whose root is divisible by 4.
    """
    q = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    if q <= 0:
        return None
    r = math.isqrt(q)
    if r * r != q or r % 4:
        return None
    return r // 4


def naive_triangle_scan(p_max: int) -> list[tuple[int, int, int, int]]:
    """All (a, b, c, area) with a <= b <= c, a+b > c, perimeter <= p_max
    and integer area, by direct scan over side triples."""
    out = []
    for a in range(1, p_max // 3 + 1):
        for b in range(a, (p_max - a) // 2 + 1):
            for c in range(b, min(a + b - 1, p_max - a - b) + 1):
                area = naive_integer_area(a, b, c)
                if area is not None:
                    out.append((a, b, c, area))
    out.sort()
    return out


def words_oracle(n: int) -> set[str]:
    """All valid cycle words of length n, one canonical rotation each,
    by filtering all 3^n raw words."""
    import itertools

    classes = set()
    for raw in itertools.product("UVW", repeat=n):
        if "U" not in raw:
            continue
        ok = True
        for i, ch in enumerate(raw):
            if ch == "U" and raw[(i + 1) % n] != "V":
                ok = False
                break
            if ch == "V" and raw[(i - 1) % n] != "U":
                ok = False
                break
        if ok:
            word = "".join(raw)
            classes.add(min(word[i:] + word[:i] for i in range(n)))
    return classes
