"""Construction, normalization, and certification of Hadamard matrices,
plus extraction of the discrepancy hypergraph their rows define.

Matrix text format::

    line 1:          the order m
    next m lines:    m space-separated entries, each "1" or "-1"

Lines starting with '#' and blank lines are ignored on input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import (CertificationError, ParseError, UnsupportedOrderError,
                     UsageError)
from .setsys import Hypergraph, VertexSet


@dataclass(frozen=True)
class SignMatrix:
    """A square matrix with entries strictly in {+1, -1}."""

    order: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise UsageError("order must be positive")
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != self.order:
            raise UsageError(f"expected {self.order} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.order:
                raise UsageError(f"row {i} has {len(row)} entries")
            if any(x not in (1, -1) for x in row):
                raise UsageError(f"row {i} has entries outside {{+1, -1}}")

    @property
    def is_normalized(self) -> bool:
        """True iff the first row and first column are all +1."""
        return (all(x == 1 for x in self.rows[0])
                and all(r[0] == 1 for r in self.rows))


def verify_hadamard(m: SignMatrix) -> bool:
    """Exact check that M * M^T = order * I, i.e. rows pairwise orthogonal."""
    n = m.order
    rows = m.rows
    for i in range(n):
        for j in range(i, n):
            dot = sum(a * b for a, b in zip(rows[i], rows[j]))
            if dot != (n if i == j else 0):
                return False
    return True


def sylvester(m: int) -> SignMatrix:
    """The order-m Sylvester matrix; m must be a power of two."""
    if m < 1 or m & (m - 1):
        raise UnsupportedOrderError(f"Sylvester order must be a power of 2, got {m}")
    rows = [[1]]
    while len(rows) < m:
        rows = [r + r for r in rows] + [r + [-x for x in r] for r in rows]
    return SignMatrix(m, tuple(tuple(r) for r in rows))


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, a) with q = p**a for prime p and a >= 1, else None."""
    if q < 2:
        return None
    p = None
    d = 2
    x = q
    while d * d <= x:
        if x % d == 0:
            p = d
            break
        d += 1
    if p is None:
        p = q
    a = 0
    while x % p == 0:
        x //= p
        a += 1
    return (p, a) if x == 1 else None


def _irreducible_poly(p: int, a: int) -> tuple[int, ...]:
    """Coefficients (low to high) of a monic degree-a irreducible over GF(p)."""

    def poly_mod(num: list[int], den: tuple[int, ...]) -> list[int]:
        # den is monic
        num = list(num)
        dd = len(den) - 1
        for i in range(len(num) - 1, dd - 1, -1):
            f = num[i]
            if f:
                for j in range(dd + 1):
                    num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
        return num[:dd]

    def monic_polys(deg: int) -> Iterator[tuple[int, ...]]:
        for coeffs in product(range(p), repeat=deg):
            yield coeffs + (1,)

    for cand in monic_polys(a):
        ok = True
        for d in range(1, a // 2 + 1):
            for div in monic_polys(d):
                if not any(poly_mod(list(cand), div)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {a} over GF({p})")


def _field_tables(q: int) -> tuple:
    """(sub, chi) for GF(q): exact subtraction and the quadratic character.

    Elements are encoded as ints 0..q-1; for q = p**a with a > 1 the
    encoding is base-p digit vectors of the polynomial coefficients.
    chi(d) is +1 on nonzero squares, -1 on nonsquares, and is undefined
    (never asked) at 0.
    """
    pp = prime_power(q)
    if pp is None:
        raise UnsupportedOrderError(f"{q} is not a prime power")
    p, a = pp
    if a == 1:
        def sub(x, y):
            return (x - y) % p

        squares = {x * x % p for x in range(1, p)}
    else:
        modpoly = _irreducible_poly(p, a)

        def decode(x):
            digits = []
            for _ in range(a):
                digits.append(x % p)
                x //= p
            return digits

        def encode(digits):
            x = 0
            for d in reversed(digits):
                x = x * p + d
            return x

        def sub(x, y):
            dx, dy = decode(x), decode(y)
            return encode([(u - v) % p for u, v in zip(dx, dy)])

        def mul(x, y):
            dx, dy = decode(x), decode(y)
            prod = [0] * (2 * a - 1)
            for i, u in enumerate(dx):
                if u:
                    for j, v in enumerate(dy):
                        prod[i + j] = (prod[i + j] + u * v) % p
            for i in range(len(prod) - 1, a - 1, -1):
                f = prod[i]
                if f:
                    for j in range(a + 1):
                        prod[i - a + j] = (prod[i - a + j] - f * modpoly[j]) % p
            return encode(prod[:a])

        squares = {mul(x, x) for x in range(1, q)}

    def chi(d):
        return 1 if d in squares else -1

    return sub, chi


def paley(m: int) -> SignMatrix:
    """Paley-I matrix of order m = q + 1, q a prime power with q = 3 mod 4.

    Rows and columns are indexed by {infinity} followed by the field
    elements; entry conventions follow the skew conference-matrix core, so
    the result certifies under verify_hadamard but is not normalized.
    """
    q = m - 1
    if q < 3 or q % 4 != 3:
        raise UnsupportedOrderError(
            f"Paley-I order must be q + 1 with q = 3 mod 4, got {m}")
    if prime_power(q) is None:
        raise UnsupportedOrderError(f"{q} is not a prime power")
    sub, chi = _field_tables(q)
    rows = [tuple([1] * m)]
    for x in range(q):
        row = [-1]
        for y in range(q):
            row.append(1 if x == y else chi(sub(x, y)))
        rows.append(tuple(row))
    return SignMatrix(m, tuple(rows))


def is_supported_order(m: int) -> bool:
    """True iff build(m) succeeds: Sylvester or Paley-I order."""
    if m >= 1 and not (m & (m - 1)):
        return True
    q = m - 1
    return q >= 3 and q % 4 == 3 and prime_power(q) is not None


def supported_orders(limit: int) -> list[int]:
    """All catalogued Hadamard orders up to limit, ascending."""
    return [m for m in range(1, limit + 1) if is_supported_order(m)]


def build(m: int) -> SignMatrix:
    """Construct a certified Hadamard matrix of order m from the catalogue.

    Powers of two use Sylvester; other supported orders use Paley-I.
    Unavailable orders are an error rather than a fallback so that color
    counts downstream stay predictable.
    """
    if m >= 1 and not (m & (m - 1)):
        return sylvester(m)
    if is_supported_order(m):
        return paley(m)
    raise UnsupportedOrderError(f"no catalogued construction for order {m}")


def normalize(m: SignMatrix) -> SignMatrix:
    """Equivalent matrix with all-ones first row and column.

    Negates every column whose first entry is -1, then every row whose
    first entry is -1.  Requires a certified Hadamard input.
    """
    if not verify_hadamard(m):
        raise CertificationError(
            f"order-{m.order} matrix is not Hadamard; refusing to normalize")
    col_sign = m.rows[0]
    rows = [tuple(x * s for x, s in zip(row, col_sign)) for row in m.rows]
    rows = [row if row[0] == 1 else tuple(-x for x in row) for row in rows]
    return SignMatrix(m.order, tuple(rows))


def to_hypergraph(m: SignMatrix) -> Hypergraph:
    """The row-support hypergraph of a normalized Hadamard matrix.

    Edge i is {j : entry(i, j) = +1}, in row order.  Edge 0 is the whole
    universe (the all-ones row); every other edge has size order/2.  The
    all-ones edge is included deliberately: dropping it breaks the shifted
    discrepancy floor the downstream colorings rely on (a single-element
    blue set balances every half-size edge).
    """
    if not m.is_normalized:
        raise UsageError("matrix must be normalized before extracting edges")
    edges = []
    for row in m.rows:
        mask = 0
        for j, x in enumerate(row):
            if x == 1:
                mask |= 1 << j
        edges.append(VertexSet(m.order, mask))
    return Hypergraph(m.order, tuple(edges))


def parse_matrix(text: str) -> SignMatrix:
    """Parse the matrix text format (see module docstring)."""
    order = None
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise ParseError(line_no, f"expected order, got {line!r}")
            if order < 1:
                raise ParseError(line_no, f"order must be positive, got {order}")
            continue
        entries = []
        for tok in line.split():
            if tok == "1":
                entries.append(1)
            elif tok == "-1":
                entries.append(-1)
            else:
                raise ParseError(line_no, f"entry must be 1 or -1, got {tok!r}")
        if len(entries) != order:
            raise ParseError(line_no, f"expected {order} entries, got {len(entries)}")
        rows.append(tuple(entries))
    if order is None:
        raise ParseError(1, "missing order line")
    if len(rows) != order:
        raise ParseError(1, f"expected {order} rows, got {len(rows)}")
    return SignMatrix(order, tuple(rows))


def serialize_matrix(m: SignMatrix) -> str:
    lines = [str(m.order)]
    for row in m.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
