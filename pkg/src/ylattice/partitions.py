"""Integer partitions, containment order, and interval splitting.

Partitions are stored canonically as tuples of weakly decreasing positive
integers (no trailing zeros).  All functions here are pure; partitions and
skew intervals are immutable, so everything is safe to share across threads.
"""

from math import comb


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zero parts are dropped on construction, so there is exactly one stored
    form per partition (important: these are used as memo keys).

    >>> Partition([3, 1, 0])
    Partition(3,1)
    >>> Partition([]).rank
    0
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def rank(self):
        """Sum of the parts."""
        return sum(self)

    @property
    def length(self):
        """Number of (positive) parts."""
        return len(self)

    def part(self, i):
        """The i-th part, 1-indexed, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @classmethod
    def parse(cls, text):
        """Parse a comma-separated part list; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def __str__(self):
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return f"Partition({','.join(str(p) for p in self)})"


EMPTY = Partition()


def contains(mu, lam):
    """True iff mu fits inside lam row by row (mu padded with zeros)."""
    if not isinstance(mu, Partition):
        mu = Partition(mu)
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


class SkewInterval:
    """An ordered pair of nested partitions mu <= lam, i.e. the interval [mu, lam]."""

    __slots__ = ("mu", "lam")

    def __init__(self, mu, lam):
        mu = Partition(mu)
        lam = Partition(lam)
        if not contains(mu, lam):
            raise ValueError(f"{mu!r} is not contained in {lam!r}")
        self.mu = mu
        self.lam = lam

    def __eq__(self, other):
        return (
            isinstance(other, SkewInterval)
            and self.mu == other.mu
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.mu, self.lam))

    def __repr__(self):
        return f"SkewInterval({self.mu!r}, {self.lam!r})"

    def enumerate(self):
        return enumerate_interval(self.mu, self.lam)


def rho(lam, power=1):
    """Subtract `power` from every part, dropping parts that reach zero.

    Raises if `power` exceeds the largest part (the image would not be a
    diagram at all); parts <= power simply vanish.
    """
    lam = Partition(lam)
    if power < 0:
        raise ValueError("power must be nonnegative")
    if power > (lam[0] if lam else 0):
        raise ValueError(f"cannot remove {power} from every part of {lam!r}")
    return Partition(p - power for p in lam if p > power)


def slice_at(lam, r):
    """Split lam into its first r parts and the rest; concatenation recovers lam."""
    lam = Partition(lam)
    if not 0 <= r <= len(lam):
        raise IndexError(f"row index {r} out of range for {lam!r}")
    return Partition(lam[:r]), Partition(lam[r:])


def interval_split_top(mu, lam, r):
    """Split [mu, lam] by whether the r-th part equals lam_r.

    Requires lam_r > lam_{r+1} and mu_r < lam_r.  Returns the pair of
    intervals ([mu, lam with one box removed in row r],
    [mu raised to lam_r in rows 1..r, lam]); they are disjoint and their
    union is [mu, lam].
    """
    mu = Partition(mu)
    lam = Partition(lam)
    k = len(lam)
    if not contains(mu, lam):
        raise ValueError(f"{mu!r} not contained in {lam!r}")
    if not 1 <= r <= k:
        raise IndexError(f"row index {r} out of range for {lam!r}")
    if lam.part(r) <= lam.part(r + 1):
        raise ValueError(f"row {r} of {lam!r} is not a removable corner row")
    if mu.part(r) >= lam.part(r):
        raise ValueError(f"row {r} already fixed: mu_r = lam_r = {lam.part(r)}")
    top = Partition(
        lam[i] - 1 if i == r - 1 else lam[i] for i in range(k)
    )
    raised = Partition(
        tuple(max(mu.part(i), lam[r - 1]) for i in range(1, r + 1))
        + tuple(mu.part(i) for i in range(r + 1, k + 1))
    )
    return SkewInterval(mu, top), SkewInterval(raised, lam)


def interval_split_bottom(mu, lam, r):
    """Split [mu, lam] by whether the r-th part equals mu_r.

    Requires mu_r < mu_{r-1} (with mu_0 infinite) and mu_r < lam_r.  Returns
    ([mu with one box added in row r, lam],
    [mu, lam capped at mu_r from row r on]); disjoint union is [mu, lam].
    The cap is min(lam_i, mu_r), not plain mu_r: rows past r may already sit
    below mu_r, and the capped bound must stay inside lam.
    """
    mu = Partition(mu)
    lam = Partition(lam)
    k = len(lam)
    if not contains(mu, lam):
        raise ValueError(f"{mu!r} not contained in {lam!r}")
    if not 1 <= r <= k:
        raise IndexError(f"row index {r} out of range for {lam!r}")
    if r > 1 and mu.part(r) >= mu.part(r - 1):
        raise ValueError(f"row {r} of {mu!r} is not an addable corner row")
    if mu.part(r) >= lam.part(r):
        raise ValueError(f"row {r} already fixed: mu_r = lam_r = {lam.part(r)}")
    grown = Partition(
        tuple(mu.part(i) for i in range(1, r)) + (mu.part(r) + 1,)
        + tuple(mu.part(i) for i in range(r + 1, max(len(mu), r) + 1))
    )
    capped = Partition(
        lam[: r - 1] + tuple(min(lam[i], mu.part(r)) for i in range(r - 1, k))
    )
    return SkewInterval(grown, lam), SkewInterval(mu, capped)


def enumerate_partitions(k, n):
    """All partitions of rank n with exactly k parts, in descending lex order."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    out = []

    def rec(parts_left, total, max_part, prefix):
        if parts_left == 0:
            if total == 0:
                out.append(Partition(prefix))
            return
        lo = max(1, -(-total // parts_left))  # ceil: weakly decreasing, positive
        hi = min(max_part, total - (parts_left - 1))
        for v in range(hi, lo - 1, -1):
            rec(parts_left - 1, total - v, v, prefix + (v,))

    rec(k, n, n, ())
    return out


def enumerate_interval(mu, lam):
    """All partitions nu with mu <= nu <= lam, in descending lex order."""
    mu = Partition(mu)
    lam = Partition(lam)
    if not contains(mu, lam):
        raise ValueError(f"{mu!r} not contained in {lam!r}")
    k = len(lam)
    out = []

    def rec(i, prev, prefix):
        if i == k:
            out.append(Partition(prefix))
            return
        for v in range(min(lam[i], prev), mu.part(i + 1) - 1, -1):
            rec(i + 1, v, prefix + (v,))

    rec(0, lam[0] if lam else 0, ())
    return out


def catalan(k):
    """The k-th Catalan number C(2k, k) / (k + 1)."""
    return comb(2 * k, k) // (k + 1)


def staircase_rectangle(k, m):
    """Bounds of the k-row staircase-to-rectangle interval at offset m.

    Returns the shifted staircase (m+k, m+k-1, ..., m+1) and the rectangle
    ((m+k)^k); the interval between them has Catalan(k) elements.
    """
    bottom = Partition(m + k - i for i in range(k))
    top = Partition((m + k,) * k)
    return bottom, top


def staircase_block_bounds(k, m, r):
    """Bounds (lower, upper) of the r-th block in the staircase interval split.

    The k blocks, r = 1..k, are pairwise disjoint and their union is the
    whole staircase-to-rectangle interval at offset m.
    """
    if not 1 <= r <= k:
        raise IndexError(f"block index {r} out of range for k={k}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    lower = []
    for i in range(1, k + 1):
        if i == 1:
            lower.append(m + k)
        elif i <= k - r + 1:
            lower.append(m + k + 2 - i)
        else:
            lower.append(m + k + 1 - i)
    upper = [m + k if i <= k - r + 1 else m + r - 1 for i in range(1, k + 1)]
    return Partition(lower), Partition(upper)


def enumerate_staircase_interval(k, m):
    """All partitions between the shifted staircase and the rectangle."""
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    if k == 0:
        return [EMPTY]
    bottom, top = staircase_rectangle(k, m)
    return enumerate_interval(bottom, top)


def decompose_staircase_interval(k, m):
    """The k disjoint blocks whose union is the staircase-to-rectangle interval."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    return [
        SkewInterval(*staircase_block_bounds(k, m, r)) for r in range(1, k + 1)
    ]


def staircase_concat(k, m, r, lam, lam2):
    """Glue a pair of smaller staircase-interval elements into the r-th block.

    `lam` comes from the (k-r)-row interval at offset r+m and `lam2` from the
    (r-1)-row interval at offset m; the image is
    (k+m, lam_1, ..., lam_{k-r}, lam2_1, ..., lam2_{r-1}).  Over the full
    domain the map is a bijection onto the r-th block at (k, m).
    """
    lam = Partition(lam)
    lam2 = Partition(lam2)
    lo1, hi1 = staircase_rectangle(k - r, r + m)
    lo2, hi2 = staircase_rectangle(r - 1, m)
    if not (contains(lo1, lam) and contains(lam, hi1)):
        raise ValueError(f"{lam!r} not in the {k - r}-row interval at offset {r + m}")
    if not (contains(lo2, lam2) and contains(lam2, hi2)):
        raise ValueError(f"{lam2!r} not in the {r - 1}-row interval at offset {m}")
    return Partition((k + m,) + tuple(lam) + tuple(lam2))
