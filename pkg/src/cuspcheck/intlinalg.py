"""Exact linear algebra over Z and Q for small matrices.

Everything here works on plain ``list[list[int]]`` in row-major order with
Python's arbitrary-precision integers; rational steps use ``fractions.Fraction``.
The normal forms (Hermite, Smith) carry their transformation matrices so that
kernels, saturations and quotient presentations are canonical: two runs on the
same input produce byte-identical output.

The matrices in this project are tiny (rank <= 11), so the implementations
favor clarity and determinism over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(a: list[list[int]]) -> IntMatrix:
    return [list(row) for row in a]


def transpose(a: list[list[int]]) -> IntMatrix:
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def matmul(a: list[list[int]], b: list[list[int]]) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matmul: inner dimensions differ")
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: list[list[int]], v: list[int]) -> list[int]:
    if a and len(a[0]) != len(v):
        raise ValueError("matvec: dimension mismatch")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def matrices_equal(a: list[list[int]], b: list[list[int]]) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def is_zero_matrix(a: list[list[int]]) -> bool:
    return all(all(x == 0 for x in row) for row in a)


def hnf_transform(a: list[list[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.  Returns (H, U) with U*a = H, det U = +-1.

    H is the canonical row-style HNF: pivots positive, entries above each
    pivot reduced into [0, pivot), zero rows at the bottom.
    """
    m = len(a)
    h = copy_matrix(a)
    u = identity_matrix(m)
    n = len(a[0]) if a else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if h[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            g, x, y = xgcd(h[r][c], h[i][c])
            p, q = h[r][c] // g, h[i][c] // g
            row_r = [x * rr + y * ri for rr, ri in zip(h[r], h[i])]
            row_i = [-q * rr + p * ri for rr, ri in zip(h[r], h[i])]
            h[r], h[i] = row_r, row_i
            urow_r = [x * rr + y * ri for rr, ri in zip(u[r], u[i])]
            urow_i = [-q * rr + p * ri for rr, ri in zip(u[r], u[i])]
            u[r], u[i] = urow_r, urow_i
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [hi - q * hr for hi, hr in zip(h[i], h[r])]
                u[i] = [ui - q * ur for ui, ur in zip(u[i], u[r])]
        r += 1
        if r == m:
            break
    return h, u


def row_hnf(a: list[list[int]]) -> IntMatrix:
    return hnf_transform(a)[0]


def nonzero_rows(a: list[list[int]]) -> IntMatrix:
    return [list(row) for row in a if any(x != 0 for x in row)]


def rank_int(a: list[list[int]]) -> int:
    return len(nonzero_rows(row_hnf(a)))


def left_kernel(a: list[list[int]]) -> IntMatrix:
    """Basis (canonical HNF rows) of {v : v * a = 0} as a lattice in Z^m.

    Kernels of integer matrices are saturated sublattices, so this basis
    spans the full kernel, not a finite-index subgroup.
    """
    h, u = hnf_transform(a)
    ker = [u[i] for i in range(len(h)) if all(x == 0 for x in h[i])]
    return row_hnf(ker) if ker else []


def right_kernel(a: list[list[int]]) -> IntMatrix:
    """Basis rows v with a * v^T = 0 (i.e. kernel of the column action)."""
    return left_kernel(transpose(a))


def saturation(rows: list[list[int]], n: int | None = None) -> IntMatrix:
    """Saturation of the row span inside Z^n: (Q-span) intersect Z^n.

    Computed as the kernel of the kernel, both of which are saturated.
    """
    if n is None:
        if not rows:
            raise ValueError("saturation of empty span needs explicit ambient dimension")
        n = len(rows[0])
    if not rows:
        return []
    perp = right_kernel(rows)
    if not perp:
        return identity_matrix(n)
    return right_kernel(perp)


def is_saturated(rows: list[list[int]], n: int | None = None) -> bool:
    if not rows:
        return True
    return row_hnf(saturation(rows, n)) == row_hnf(rows) or nonzero_rows(
        row_hnf(saturation(rows, n))
    ) == nonzero_rows(row_hnf(rows))


def snf_transform(a: list[list[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.  Returns (D, U, V) with U*a*V = D.

    D is diagonal with nonnegative entries d_1 | d_2 | ... ; U, V unimodular.
    """
    d = copy_matrix(a)
    m = len(d)
    n = len(d[0]) if d else 0
    u = identity_matrix(m)
    v = identity_matrix(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                    best = abs(d[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // d[t][t]))
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // d[t][t]))
            col_clean = all(d[i][t] == 0 for i in range(t + 1, m))
            row_clean = all(d[t][j] == 0 for j in range(t + 1, n))
            if col_clean and row_clean:
                break
            # a remainder became the new, strictly smaller pivot candidate
            piv = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                        best = abs(d[i][j])
                        piv = (i, j)
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
        # divisibility: pivot must divide every remaining entry
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def solve_int(a: list[list[int]], b: list[int]) -> list[int] | None:
    """One integer solution x of a @ x = b (column convention), or None."""
    m = len(a)
    n = len(a[0]) if a else 0
    if len(b) != m:
        raise ValueError("solve_int: dimension mismatch")
    d, u, v = snf_transform(a)
    y = matvec(u, b)
    x_new = [0] * n
    for i in range(m):
        di = d[i][i] if i < min(m, n) else 0
        if di == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % di != 0:
                return None
            x_new[i] = y[i] // di
    return matvec(v, x_new)


def solve_rational(a: list[list[int]], b: list[int]) -> list[Fraction] | None:
    """One rational solution of a @ x = b, or None if inconsistent."""
    m = len(a)
    n = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for (i, c) in pivots:
        x[c] = aug[i][n]
    return x


def det_int(a: list[list[int]]) -> int:
    """Determinant via Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def invert_unimodular(a: list[list[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    n = len(a)
    h, u = hnf_transform(a)
    if h != identity_matrix(n):
        raise ValueError("matrix is not unimodular")
    return u


def charpoly(a: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(xI - a), coefficients lowest degree first.

    Faddeev-LeVerrier over Fractions; the result is integral for integer input.
    """
    n = len(a)
    af = [[Fraction(x) for x in row] for row in a]
    coeffs: list[Fraction] = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    b = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # b <- a @ (b + c_{n-k+1} I)  (matrix from the previous step)
        if k == 1:
            b = [row[:] for row in af]
        else:
            prev = coeffs[n - k + 1]
            shifted = [
                [b[i][j] + (prev if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
            b = [
                [sum(af[i][t] * shifted[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
        tr = sum(b[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("characteristic polynomial came out non-integral")
        out.append(int(c))
    return out


# ---------------------------------------------------------------------------
# integer polynomials, lowest-degree-first coefficient lists


def poly_degree(p: list[int]) -> int:
    d = len(p) - 1
    while d > 0 and p[d] == 0:
        d -= 1
    return d


def poly_trim(p: list[int]) -> list[int]:
    return p[: poly_degree(p) + 1]


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod_monic(p: list[int], q: list[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic q over Z; returns (quotient, remainder)."""
    q = poly_trim(q)
    if q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(q) - 1
    quot = [0] * max(1, len(p) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - dq] = c
        for j, b in enumerate(q):
            rem[i - dq + j] -= c * b
    return poly_trim(quot), poly_trim(rem)


def euler_phi(d: int) -> int:
    result = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


_CYCLOTOMIC_CACHE: dict[int, list[int]] = {}


def cyclotomic_polynomial(d: int) -> list[int]:
    """d-th cyclotomic polynomial, lowest-degree-first integer coefficients."""
    if d in _CYCLOTOMIC_CACHE:
        return list(_CYCLOTOMIC_CACHE[d])
    if d == 1:
        poly = [-1, 1]
    else:
        poly = [0] * (d + 1)
        poly[0] = -1
        poly[d] = 1  # x^d - 1
        for e in range(1, d):
            if d % e == 0:
                poly, rem = poly_divmod_monic(poly, cyclotomic_polynomial(e))
                if rem != [0]:
                    raise ArithmeticError("cyclotomic recursion left a remainder")
    _CYCLOTOMIC_CACHE[d] = list(poly)
    return poly


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else abs(a or b)
