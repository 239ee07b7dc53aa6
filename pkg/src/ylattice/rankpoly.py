"""Exact rank generating polynomials of partition intervals.

The polynomial of [mu, lam] collects y^{rank(nu)} over all partitions nu in
the interval.  It is computed by a two-rule recursion: slice off a prefix
whenever mu and lam agree in some row (the interval is then a product), and
otherwise split on whether a removable corner row of lam is full.  Results
are memoized on the exact (mu, lam) pair.

Memo caches are plain module-level dicts: entries are immutable and
idempotent, so concurrent readers/writers (under the GIL's atomic dict ops)
always observe identical values.
"""

from .partitions import Partition, EMPTY, contains, rho


class YPoly:
    """Dense univariate polynomial in y with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,) * degree + (coeff,))

    def degree(self):
        """Highest exponent with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = YPoly((other,))
        return isinstance(other, YPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = YPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return YPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return YPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = YPoly((other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return YPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return YPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return YPoly(out)

    __rmul__ = __mul__

    def shift(self, d):
        """Multiply by y^d."""
        if not self.coeffs:
            return self
        return YPoly((0,) * d + self.coeffs)

    def __call__(self, v):
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def stretch(self, factor):
        """Substitute y -> y^factor."""
        if not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * factor + 1)
        for i, c in enumerate(self.coeffs):
            out[i * factor] = c
        return YPoly(out)

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]

    def to_json(self):
        """Coefficient list as decimal strings, index = degree."""
        return [str(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                chunks.append(str(c))
            else:
                var = "y" if i == 1 else f"y^{i}"
                mag = abs(c)
                body = var if mag == 1 else f"{mag}*{var}"
                chunks.append(body if c > 0 else f"-{body}")
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"YPoly({list(self.coeffs)})"


YP_ZERO = YPoly()
YP_ONE = YPoly((1,))


def _choose_split(mu, lam):
    """Pick the next recursion step for the interval [mu, lam].

    Returns ('leaf', 0) when mu == lam; ('product', r) for the smallest
    r < len(lam) with mu_r == lam_r; otherwise ('sum', r) for the smallest
    removable corner row of lam that mu has not filled (always exists).
    """
    if mu == lam:
        return "leaf", 0
    k = len(lam)
    nmu = len(mu)
    for r in range(1, k):
        if r <= nmu and mu[r - 1] == lam[r - 1]:
            return "product", r
    for r in range(1, k + 1):
        nxt = lam[r] if r < k else 0
        mur = mu[r - 1] if r <= nmu else 0
        if lam[r - 1] > nxt and mur < lam[r - 1]:
            return "sum", r
    raise AssertionError(f"no split for {mu!r}, {lam!r}")  # unreachable for mu <= lam


def _split_children(mu, lam, kind, r):
    if kind == "product":
        return (
            (Partition(mu[:r]), Partition(lam[:r])),
            (Partition(mu[r:]), Partition(lam[r:])),
        )
    k = len(lam)
    top = Partition(lam[i] - 1 if i == r - 1 else lam[i] for i in range(k))
    lam_r = lam[r - 1]
    raised = Partition(
        tuple(max(mu[i] if i < len(mu) else 0, lam_r) for i in range(r))
        + tuple(mu[r:])
    )
    return (mu, top), (raised, lam)


def _eval_interval(mu, lam, memo, leaf, add, mul):
    """Iterative post-order evaluation of the interval recursion DAG.

    Explicit stack instead of recursion: chains of single-box removals make
    the recursion depth grow with the rank of lam.
    """
    goal = (mu, lam)
    if goal in memo:
        return memo[goal]
    stack = [goal]
    while stack:
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        kind, r = _choose_split(*key)
        if kind == "leaf":
            memo[key] = leaf(key[1])
            stack.pop()
            continue
        children = _split_children(*key, kind, r)
        pending = [c for c in children if c not in memo]
        if pending:
            stack.extend(pending)
            continue
        a, b = memo[children[0]], memo[children[1]]
        memo[key] = add(a, b) if kind == "sum" else mul(a, b)
        stack.pop()
    return memo[goal]


_POLY_MEMO = {}
_COUNT_MEMO = {}


def rank_gen_poly(mu, lam=None):
    """The polynomial collecting y^{rank(nu)} over all nu in [mu, lam].

    With a single argument, mu defaults to the empty partition.  Exact: the
    lowest term is y^{rank(mu)}, the top term y^{rank(lam)}, and evaluating
    at 1 gives the number of partitions in the interval.
    """
    if lam is None:
        mu, lam = EMPTY, mu
    mu = Partition(mu)
    lam = Partition(lam)
    if not contains(mu, lam):
        raise ValueError(f"{mu!r} not contained in {lam!r}")
    return _eval_interval(
        mu, lam, _POLY_MEMO,
        leaf=lambda l: YPoly.monomial(sum(l)),
        add=YPoly.__add__,
        mul=YPoly.__mul__,
    )


def skew_interval_count(mu, lam):
    """Number of partitions in [mu, lam]; the y = 1 shadow of rank_gen_poly."""
    mu = Partition(mu)
    lam = Partition(lam)
    if not contains(mu, lam):
        raise ValueError(f"{mu!r} not contained in {lam!r}")
    return _eval_interval(
        mu, lam, _COUNT_MEMO,
        leaf=lambda l: 1,
        add=int.__add__,
        mul=int.__mul__,
    )


def interval_count(lam):
    """Number of partitions contained in lam (integer dynamic program)."""
    return skew_interval_count(EMPTY, Partition(lam))


def _divide_exact(num, den):
    """Exact polynomial division; raises ArithmeticError on a nonzero remainder."""
    num = list(num.coeffs)
    den = den.coeffs
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    out = [0] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        q, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("polynomial division left a remainder")
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("polynomial division left a remainder")
    return YPoly(out)


def gaussian_poly(n, k):
    """The y-binomial coefficient of n + k over k.

    Built as the product of (1 - y^{n+j}) for j = 1..k divided exactly by
    the product of (1 - y^j); a nonzero remainder would mean an arithmetic
    bug and raises.  Equals rank_gen_poly of the k x n rectangle.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    poly = YP_ONE
    for j in range(1, k + 1):
        poly = poly * (YP_ONE - YPoly.monomial(n + j))
    for j in range(1, k + 1):
        poly = _divide_exact(poly, YP_ONE - YPoly.monomial(j))
    return poly


def poincare_poly(lam):
    """rank_gen_poly of [empty, lam] with every exponent doubled (y -> y^2)."""
    return rank_gen_poly(EMPTY, Partition(lam)).stretch(2)


def filled_prefix_expansion(lam):
    """The k + 1 exact summands of rank_gen_poly(lam) used by the series recursion.

    Summand r (r = 0..k) covers the partitions below lam whose first full-width
    prefix has length exactly r: the r = 0 piece is the polynomial of the
    all-parts-decremented partition, the r = k piece is the skew polynomial
    above the bottom-row rectangle, and each middle piece factors as a
    rectangle-to-prefix polynomial times a decremented-suffix polynomial.
    """
    lam = Partition(lam)
    k = len(lam)
    if k == 0:
        return [YP_ONE]
    pieces = [rank_gen_poly(rho(lam))]
    for r in range(1, k):
        prefix = rank_gen_poly(Partition((lam[r - 1],) * r), Partition(lam[:r]))
        suffix = rank_gen_poly(rho(Partition(lam[r:])))
        pieces.append(prefix * suffix)
    pieces.append(rank_gen_poly(Partition((lam[k - 1],) * k), lam))
    return pieces
