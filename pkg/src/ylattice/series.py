"""Truncated multivariate series over y-polynomials.

A MultiSeries keeps the terms of a power series in x_1..x_k up to a fixed
total x-degree N; coefficients are exact YPoly values, so every identity
checked here is an identity of integers.  Division never happens: factors
like 1/(1 - y^j x_1..x_m) only ever enter as explicitly truncated geometric
series, and the verification helpers also re-check identities in multiplied
form with no inverse at all.
"""

from .partitions import Partition, enumerate_partitions
from .rankpoly import YPoly, YP_ONE, rank_gen_poly, interval_count


class MultiSeries:
    """Sparse truncated series: exponent vectors of length nvars -> YPoly.

    Terms beyond total x-degree `trunc` are discarded; two series compare
    equal when their term maps agree after both are cut to the smaller
    truncation order.
    """

    __slots__ = ("nvars", "trunc", "terms")

    def __init__(self, nvars, trunc, terms=None):
        if trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        self.nvars = nvars
        self.trunc = trunc
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong arity")
                if sum(exps) <= trunc and coeff:
                    self.terms[exps] = coeff

    @classmethod
    def one(cls, nvars, trunc):
        return cls(nvars, trunc, {(0,) * nvars: YP_ONE})

    @classmethod
    def monomial(cls, nvars, trunc, exps, coeff=YP_ONE):
        return cls(nvars, trunc, {tuple(exps): coeff})

    def _require_same_vars(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts; call extend() first")

    def cut(self, trunc):
        """Drop terms of total degree above `trunc`."""
        if trunc >= self.trunc:
            return MultiSeries(self.nvars, min(trunc, self.trunc), self.terms)
        return MultiSeries(self.nvars, trunc, self.terms)

    def extend(self, nvars):
        """View in a larger variable set; new variables get exponent zero."""
        if nvars < self.nvars:
            raise ValueError("cannot drop variables")
        pad = (0,) * (nvars - self.nvars)
        return MultiSeries(
            nvars, self.trunc, {exps + pad: c for exps, c in self.terms.items()}
        )

    def __add__(self, other):
        self._require_same_vars(other)
        trunc = min(self.trunc, other.trunc)
        out = {}
        for exps, c in self.terms.items():
            if sum(exps) <= trunc:
                out[exps] = c
        for exps, c in other.terms.items():
            if sum(exps) > trunc:
                continue
            acc = out.get(exps)
            c = c if acc is None else acc + c
            if c:
                out[exps] = c
            elif acc is not None:
                del out[exps]
        return MultiSeries(self.nvars, trunc, out)

    def __sub__(self, other):
        return self + other.scale(YPoly((-1,)))

    def __mul__(self, other):
        self._require_same_vars(other)
        trunc = min(self.trunc, other.trunc)
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > trunc:
                continue
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > trunc:
                    continue
                exps = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                acc = out.get(exps)
                prod = prod if acc is None else acc + prod
                if prod:
                    out[exps] = prod
                elif acc is not None:
                    del out[exps]
        return MultiSeries(self.nvars, trunc, out)

    def scale(self, coeff):
        """Multiply every term by a fixed YPoly."""
        return MultiSeries(
            self.nvars, self.trunc,
            {exps: c * coeff for exps, c in self.terms.items()},
        )

    def shift(self, exps, coeff=YP_ONE):
        """Multiply by a single monomial coeff * x^exps."""
        exps = tuple(exps)
        out = {}
        for e, c in self.terms.items():
            new = tuple(a + b for a, b in zip(e, exps))
            if sum(new) <= self.trunc:
                prod = c * coeff
                if prod:
                    out[new] = prod
        return MultiSeries(self.nvars, self.trunc, out)

    def coefficient(self, exps):
        """YPoly coefficient of x^exps (zero polynomial if absent)."""
        return self.terms.get(tuple(exps), YPoly())

    def max_degree(self):
        """Largest total degree carrying a nonzero term, or None if zero."""
        return max((sum(e) for e in self.terms), default=None)

    def constant_part(self):
        """Replace every coefficient by its y-constant term."""
        out = {}
        for exps, c in self.terms.items():
            c0 = c.coefficient(0)
            if c0:
                out[exps] = YPoly((c0,))
        return MultiSeries(self.nvars, self.trunc, out)

    def collapse(self, weights=None):
        """Specialize x_i -> x^{w_i} and y -> 1, returning dense int coefficients.

        Default weights are all 1 (total-degree collapse).  Coefficients of
        x^n for n = 0..trunc.
        """
        if weights is None:
            weights = (1,) * self.nvars
        out = [0] * (self.trunc + 1)
        for exps, c in self.terms.items():
            n = sum(w * e for w, e in zip(weights, exps))
            if n <= self.trunc:
                out[n] += c(1)
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiSeries) or self.nvars != other.nvars:
            return NotImplemented if not isinstance(other, MultiSeries) else False
        trunc = min(self.trunc, other.trunc)
        a = {e: c for e, c in self.terms.items() if sum(e) <= trunc}
        b = {e: c for e, c in other.terms.items() if sum(e) <= trunc}
        return a == b

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        """Terms in graded lexicographic order (deterministic output)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def to_json(self):
        return [
            {"exponents": list(exps), "coeff": coeff.to_json()}
            for exps, coeff in self.sorted_terms()
        ]

    def __repr__(self):
        return f"MultiSeries(nvars={self.nvars}, trunc={self.trunc}, {len(self.terms)} terms)"


def prefix_monomial(nvars, m):
    """Exponent vector of x_1 x_2 .. x_m inside nvars variables."""
    if not 0 <= m <= nvars:
        raise ValueError(f"prefix length {m} out of range for {nvars} variables")
    return (1,) * m + (0,) * (nvars - m)


def geometric_factor(exps, y_power, trunc, nvars=None):
    """Truncated expansion of 1 / (1 - y^{y_power} * x^exps).

    The monomial must have positive total degree, otherwise the expansion
    would not terminate.
    """
    exps = tuple(exps)
    if nvars is None:
        nvars = len(exps)
    deg = sum(exps)
    if deg <= 0:
        raise ValueError("geometric factor needs a monomial of positive degree")
    terms = {}
    for t in range(trunc // deg + 1):
        terms[tuple(e * t for e in exps)] = YPoly.monomial(y_power * t)
    return MultiSeries(nvars, trunc, terms)


def qk_direct(k, trunc, last_part=None):
    """Sum of rank_gen_poly(lam) * x^lam over length-k partitions, by definition.

    Restricting `last_part` keeps only partitions whose smallest part has
    that value.  k = 0 gives the constant series 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return MultiSeries.one(0, trunc)
    terms = {}
    for n in range(k, trunc + 1):
        for lam in enumerate_partitions(k, n):
            if last_part is not None and lam[-1] != last_part:
                continue
            terms[tuple(lam)] = rank_gen_poly(lam)
    return MultiSeries(k, trunc, terms)


def qk_substituted(k_minus_r, r, trunc, last_part=None):
    """The length-(k-r) series with its variables rebased for the recursion.

    Each length-(k-r) partition lam contributes
    rank_gen_poly(lam) * y^{r*lam_1} * (x_1..x_{r+1})^{lam_1}
    * x_{r+2}^{lam_2} .. x_k^{lam_{k-r}} inside k = k_minus_r + r variables.
    Built by direct enumeration (the x-degree of a term is
    (r+1)*lam_1 + lam_2 + .. + lam_{k-r}, which bounds the sweep).
    """
    if r < 1:
        raise ValueError("r must be positive")
    nvars = k_minus_r + r
    if k_minus_r == 0:
        return MultiSeries.one(nvars, trunc)
    terms = {}
    for n in range(k_minus_r, trunc + 1):
        for lam in enumerate_partitions(k_minus_r, n):
            if last_part is not None and lam[-1] != last_part:
                continue
            if n + r * lam[0] > trunc:
                continue
            exps = tuple(
                lam[0] if i <= r else lam[i - r - 1]
                for i in range(1, nvars + 1)
            )
            terms[exps] = rank_gen_poly(lam).shift(r * lam[0])
    return MultiSeries(nvars, trunc, terms)


def qk_recursion_rhs(k, trunc, q_lower=None):
    """Right side of the rational recursion for (1 - x_1..x_k) * Q_k.

    `q_lower` optionally supplies the lower-order series Q_0..Q_{k-1}
    (defaults to direct enumeration).  No division is involved beyond the
    explicitly truncated geometric factors inside the sum.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if q_lower is None:
        q_lower = [qk_direct(i, trunc) for i in range(k)]
    p_k = prefix_monomial(k, k)
    x_k = tuple(0 if i < k - 1 else 1 for i in range(k))
    rhs = q_lower[k - 1].extend(k).shift(x_k)
    partial = MultiSeries(k, trunc)  # running sum of Q_0 .. Q_{r-1}
    for r in range(1, k + 1):
        partial = partial + q_lower[r - 1].extend(k)
        block = qk_substituted(k - r, r, trunc) * geometric_factor(
            prefix_monomial(k, r), r, trunc
        )
        rhs = rhs + block.shift(p_k, YPoly.monomial(r)) * partial
    return rhs


def qk_recursive(k, trunc):
    """Q_k computed purely through the rational recursion.

    Lower orders are built the same way, so nothing here depends on the
    defining enumeration; must agree with qk_direct exactly.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    series = [MultiSeries.one(0, trunc)]
    for j in range(1, k + 1):
        rhs = qk_recursion_rhs(j, trunc, q_lower=series)
        series.append(geometric_factor(prefix_monomial(j, j), 0, trunc) * rhs)
    return series[k]


def denominator_product(k, trunc):
    """The truncated product of Q_k with its conjectural denominator.

    The denominator is the polynomial product of (1 - y^j x_1..x_m) over
    m = 1..k, j = 0..m; multiplying factor by factor keeps the work linear
    in the number of retained terms.
    """
    out = qk_direct(k, trunc)
    for m in range(1, k + 1):
        pm = prefix_monomial(k, m)
        for j in range(m + 1):
            out = out - out.shift(pm, YPoly.monomial(j))
    return out


def dk_product_check(k, trunc):
    """Check that the denominator product turns Q_k into a polynomial.

    Reports the largest degree carrying a nonzero term; `stabilized` is
    true when that degree sits strictly below the truncation order, i.e.
    the retained tail is identically zero.
    """
    product = denominator_product(k, trunc)
    top = product.max_degree()
    return {
        "k": k,
        "trunc": trunc,
        "product": product,
        "max_degree": top,
        "stabilized": top is not None and top < trunc,
    }


# Closed-form numerators of the k = 1 and k = 2 series over the standard
# denominator product, used as reference data by tests and `verify`.
CLOSED_FORM_NUMERATORS = {
    1: {
        (1,): YPoly((1, 1)),       # x1 * (1 + y)
        (2,): YPoly((0, -1)),      # -x1^2 * y
    },
    2: {
        (1, 1): YPoly((1, 1, 1)),        # x1 x2 * (1 + y + y^2)
        (2, 1): YPoly((0, -1)),          # -x1^2 x2 * y
        (2, 2): YPoly((0, -1, -1, -1)),  # -x1^2 x2^2 * (y + y^2 + y^3)
        (3, 3): YPoly((0, 0, 0, 1)),     # x1^3 x2^3 * y^3
    },
}


def closed_form_series(k, trunc):
    """Expansion of the printed k = 1, 2 closed forms to the given order."""
    try:
        numerator_terms = CLOSED_FORM_NUMERATORS[k]
    except KeyError:
        raise ValueError("closed forms are recorded for k = 1 and k = 2 only")
    out = MultiSeries(k, trunc, numerator_terms)
    for m in range(1, k + 1):
        pm = prefix_monomial(k, m)
        for j in range(m + 1):
            out = out * geometric_factor(pm, j, trunc)
    return out


def specialize_y0(k, trunc):
    """Q_k at y = 0: the plain generating series of length-k partitions."""
    return qk_direct(k, trunc).constant_part()


def partition_monomial_series(k, trunc):
    """Truncated expansion of x_1..x_k times the product of 1/(1 - x_1..x_m)."""
    if k == 0:
        return MultiSeries.one(0, trunc)
    out = MultiSeries.monomial(k, trunc, prefix_monomial(k, k))
    for m in range(1, k + 1):
        out = out * geometric_factor(prefix_monomial(k, m), 0, trunc)
    return out


def qk_xm(k, m, trunc):
    """Integer coefficients of Q_k under x_1 -> x^{m+1}, x_i -> x, y -> 1.

    The coefficient of x^n collects interval_count(lam) over length-k
    partitions with rank(lam) + m * lam_1 = n.  Returned as a dense list
    indexed by n = 0..trunc.
    """
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    out = [0] * (trunc + 1)
    if k == 0:
        out[0] = 1
        return out
    for n in range(k, trunc + 1):
        for lam in enumerate_partitions(k, n):
            w = n + m * lam[0]
            if w <= trunc:
                out[w] += interval_count(lam)
    return out


def _useries_mul(a, b, trunc):
    out = [0] * (trunc + 1)
    for i, ca in enumerate(a[: trunc + 1]):
        if ca:
            for j, cb in enumerate(b[: trunc - i + 1]):
                if cb:
                    out[i + j] += ca * cb
    return out


def _useries_shift(a, d, trunc):
    out = [0] * (trunc + 1)
    for i, c in enumerate(a):
        if c and i + d <= trunc:
            out[i + d] = c
    return out


def _useries_geom(j, trunc):
    """Expansion of 1 / (1 - x^j)."""
    return [1 if n % j == 0 else 0 for n in range(trunc + 1)]


def verify_xm_recursion(k, m, trunc):
    """Check the single-variable recursion for the x_1 -> x^{m+1} collapse.

    Both sides are expanded to the truncation order with exact integers;
    the image of x_k is x^{m+1} when k = 1 (x_1 is the rescaled variable)
    and x otherwise.  Returns a report dict with `ok` and the first
    mismatching exponent, if any.
    """
    if k < 1:
        raise ValueError("k must be positive")
    lhs = qk_xm(k, m, trunc)
    geom_km = _useries_geom(k + m, trunc)
    xk_degree = m + 1 if k == 1 else 1
    rhs = _useries_mul(
        _useries_shift(qk_xm(k - 1, m, trunc), xk_degree, trunc), geom_km, trunc
    )
    for r in range(1, k + 1):
        geom_rm = _useries_geom(r + m, trunc)
        outer = _useries_mul(geom_km, geom_rm, trunc)
        sub = qk_xm(k - r, r + m, trunc)
        for i in range(r):
            q_i = qk_xm(i, m, trunc)
            term = _useries_shift(_useries_mul(sub, q_i, trunc), k + m, trunc)
            rhs = [a + b for a, b in zip(rhs, _useries_mul(term, outer, trunc))]
    mismatch = next((n for n in range(trunc + 1) if lhs[n] != rhs[n]), None)
    return {
        "k": k,
        "m": m,
        "trunc": trunc,
        "ok": mismatch is None,
        "first_mismatch": mismatch,
        "lhs": lhs,
        "rhs": rhs,
    }
