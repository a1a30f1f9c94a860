"""Exact DFTs over F_p: a direct-definition oracle plus staged mixed-radix FFTs.

A length-n transform needs an element omega of multiplicative order exactly
n, which exists iff n | p - 1.  When n factors as r_1 * r_2 * ... * r_s the
transform decomposes into s stages of r_k-point butterflies.

Layout used by the staged kernels: before stage k the buffer is viewed as a
(block, digit, tail) array of shape (jw_k, r_k, iw_k), where
jw_k = r_1*...*r_{k-1} and iw_k = r_{k+1}*...*r_s.  Stage k consumes the
input digit at stride iw_k and writes the k-th output digit in its place, so
after the last stage output digits sit at the input strides: the result is
in digit-reversed slot order and a final permutation restores natural
coefficient order (`digit_reverse` maps slots to coefficient indices).

Two kernel variants are provided.  `fft_recursive` multiplies every butterfly
term by a full twiddle-table entry, exponent zero included: exactly
n * (r_1 + ... + r_s) multiplications and n * (r_1 + ... + r_s - s)
additions.  `fft_twiddle` rearranges the twiddles so a radix-2 stage applies
one input twiddle per element and then adds/subtracts: since an order-n
omega with even n satisfies omega^(n/2 + t) = -omega^t, the second butterfly
row reuses the negated product, and the stage costs n multiplications
instead of 2n.  Stages of radix >= 3 are unchanged.  Operation counters
tally exactly these performed multiplications and additions; the
subtractions realizing the negation are counted as additions, the negation
itself costs nothing.

All kernels run on int64 numpy arrays.  Residues and twiddles are below
2**31, so single products never overflow and butterfly sums are reduced
before they can grow past 63 bits; results are bit-exact field values.
"""

from dataclasses import dataclass, field as _field

import numpy as np

from .errors import (
    BadRadices,
    LengthMismatch,
    NotADivisor,
    OutOfRange,
    WrongOrder,
)
from .field import FieldElement, FieldParams, fp_inv, fp_pow
from .numtheory import factorize, find_generator

RECURSIVE = "recursive"
TWIDDLE = "twiddle"
VARIANTS = (RECURSIVE, TWIDDLE)

# Largest n for which dft_naive caches the full n x n twiddle matrix
# (int64: 128 MiB at 4096); larger transforms evaluate row blocks.
_NAIVE_MATRIX_LIMIT = 4096
_NAIVE_BLOCK_ELEMS = 1 << 22


@dataclass
class OpCounts:
    """Exact tallies of field multiplications and additions."""

    multiplications: int = 0
    additions: int = 0


def digit_reverse(radices: list[int] | tuple[int, ...], slot: int) -> int:
    """Map a storage slot to its natural coefficient index.

    The slot is decomposed into digits (d_1, ..., d_s) under the input
    strides iw_k = r_{k+1}*...*r_s and reassembled under the output weights
    jw_k = r_1*...*r_{k-1}.  For an all-2 schedule this is bit reversal; for
    a single radix it is the identity.
    """
    n = 1
    for r in radices:
        n *= r
    if not 0 <= slot < n:
        raise OutOfRange(f"slot {slot} outside [0, {n})")
    index = 0
    jw = 1
    iw = n
    for r in radices:
        iw //= r
        index += (slot // iw) % r * jw
        jw *= r
    return index


@dataclass(frozen=True, eq=False)
class DigitPermutation:
    """Bijection from digit-reversed storage slots to coefficient indices."""

    n: int
    radices: tuple[int, ...]
    forward: np.ndarray  # forward[slot] = coefficient index

    @classmethod
    def from_radices(cls, radices: tuple[int, ...]) -> "DigitPermutation":
        n = 1
        for r in radices:
            n *= r
        slots = np.arange(n, dtype=np.int64)
        forward = np.zeros(n, dtype=np.int64)
        rem = slots.copy()
        jw = 1
        iw = n
        for r in radices:
            iw //= r
            digit = rem // iw
            rem -= digit * iw
            forward += digit * jw
            jw *= r
        return cls(n, radices, forward)

    def apply(self, values: np.ndarray) -> np.ndarray:
        """Scatter digit-reversed values into natural order."""
        out = np.empty_like(values)
        out[self.forward] = values
        return out


@dataclass(frozen=True, eq=False)
class TransformPlan:
    """Precomputed description of one length-n transform over F_p.

    Immutable after construction; safe to share across threads.  Twiddle
    tables hold omega^k for k in [0, n); stage exponent tables drive the
    kernels and double as the inverse-transform tables through the reversed
    twiddle array.
    """

    params: FieldParams
    n: int
    omega: FieldElement
    radices: tuple[int, ...]
    twiddles: np.ndarray
    inv_n: FieldElement
    jweights: tuple[int, ...]
    iweights: tuple[int, ...]
    permutation: DigitPermutation
    inv_twiddles: np.ndarray
    stage_exponents: tuple[np.ndarray, ...]
    _naive_cache: dict = _field(default_factory=dict, repr=False)

    @property
    def p(self) -> int:
        return self.params.p

    def _naive_matrix(self, inverse: bool) -> np.ndarray:
        """Cached n x n matrix M[j, i] = omega^(+-ij), built on first use."""
        key = "inv" if inverse else "fwd"
        cached = self._naive_cache.get(key)
        if cached is None:
            table = self.inv_twiddles if inverse else self.twiddles
            n = self.n
            cached = np.empty((n, n), dtype=np.int64)
            i = np.arange(n, dtype=np.int64)
            rows = max(1, _NAIVE_BLOCK_ELEMS // n)
            for j0 in range(0, n, rows):
                j = np.arange(j0, min(j0 + rows, n), dtype=np.int64)
                cached[j0 : j0 + len(j)] = table[(j[:, None] * i[None, :]) % n]
            self._naive_cache[key] = cached
        return cached


def build_twiddle_table(
    params: FieldParams, omega: FieldElement, n: int
) -> np.ndarray:
    """Table of omega^k for k in [0, n) as an int64 array.

    Built by repeated doubling (log n vectorized passes), never by n calls
    to modular exponentiation.
    """
    p = params.p
    table = np.empty(n, dtype=np.int64)
    table[0] = 1
    filled = 1
    step = omega % p
    while filled < n:
        chunk = min(filled, n - filled)
        table[filled : filled + chunk] = table[:chunk] * step % p
        filled *= 2
        step = step * step % p
    return table


def _default_radices(n: int) -> tuple[int, ...]:
    """Nondecreasing prime factors of n with multiplicity."""
    out: list[int] = []
    for prime, exp in factorize(n).factors:
        out.extend([prime] * exp)
    return tuple(out)


def _check_order(params: FieldParams, omega: int, n: int) -> None:
    if not 1 <= omega < params.p:
        raise WrongOrder(f"omega {omega} is not a reduced nonzero residue")
    if fp_pow(omega, n, params) != 1:
        raise WrongOrder(f"omega^{n} != 1, order does not divide {n}")
    for r in factorize(n).primes:
        if fp_pow(omega, n // r, params) == 1:
            raise WrongOrder(f"omega^({n}//{r}) == 1, order below {n}")


def plan_transform(
    params: FieldParams,
    n: int,
    omega: FieldElement | None = None,
    radices: list[int] | tuple[int, ...] | None = None,
) -> TransformPlan:
    """Validate and precompute everything needed to run length-n transforms.

    omega defaults to the smallest order-n element; radices default to the
    nondecreasing prime factors of n.  Raises NotADivisor, WrongOrder or
    BadRadices when an argument breaks its contract.
    """
    if n < 1 or (params.p - 1) % n != 0:
        raise NotADivisor(f"{n} does not divide p - 1 = {params.p - 1}")
    if radices is None:
        sched = _default_radices(n)
    else:
        sched = tuple(int(r) for r in radices)
        prod = 1
        for r in sched:
            if r < 2:
                raise BadRadices(f"radix {r} < 2")
            prod *= r
        if prod != n:
            raise BadRadices(f"radices multiply to {prod}, not {n}")
    if omega is None:
        omega = find_generator(params, n)
    else:
        _check_order(params, omega, n)

    s = len(sched)
    iweights = [1] * s
    for k in range(s - 2, -1, -1):
        iweights[k] = iweights[k + 1] * sched[k + 1]
    jweights = [1] * s
    for k in range(1, s):
        jweights[k] = jweights[k - 1] * sched[k - 1]

    twiddles = build_twiddle_table(params, omega, n)
    # omega^-k table: reverse and rotate so index k holds omega^(n-k).
    inv_twiddles = np.roll(twiddles[::-1], 1).copy()

    # Stage exponent tables E_k[q, jo, i] = (jo*jw_k + J'(q)) * i * iw_k mod n,
    # where J'(q) is the output index accumulated by stages 1..k-1 for block q.
    exponents: list[np.ndarray] = []
    jprime = np.zeros(1, dtype=np.int64)
    for k in range(s):
        r, iw, jw = sched[k], iweights[k], jweights[k]
        jo = np.arange(r, dtype=np.int64)
        left = (jo[None, :, None] * jw + jprime[:, None, None]) % n
        right = (jo[None, None, :] * iw) % n
        exponents.append(left * right % n)
        jprime = (jprime[:, None] + jo[None, :] * jw).reshape(-1)

    return TransformPlan(
        params=params,
        n=n,
        omega=omega,
        radices=sched,
        twiddles=twiddles,
        inv_n=fp_inv(n % params.p, params),
        jweights=tuple(jweights),
        iweights=tuple(iweights),
        permutation=DigitPermutation.from_radices(sched),
        inv_twiddles=inv_twiddles,
        stage_exponents=tuple(exponents),
    )


def _coerce_vector(v, n: int) -> np.ndarray:
    arr = np.asarray(v, dtype=None)
    if arr.ndim != 1 or len(arr) != n:
        raise LengthMismatch(f"expected a length-{n} vector, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("vector entries must be integer residues")
    return arr.astype(np.int64, copy=True)


def _run_stages(
    plan: TransformPlan,
    x: np.ndarray,
    table: np.ndarray,
    variant: str,
    counter: OpCounts | None,
) -> np.ndarray:
    p, n = plan.p, plan.n
    for k, r in enumerate(plan.radices):
        jw, iw = plan.jweights[k], plan.iweights[k]
        block = x.reshape(jw, r, iw)
        exps = plan.stage_exponents[k]
        if variant == TWIDDLE and r == 2:
            # Input twiddles on both butterfly legs (the first is omega^0),
            # then the multiplication-free 2-point transform: the second
            # output row is the negated product, realized by subtraction.
            t0 = block[:, 0, :] * table[exps[:, 0, 0]][:, None] % p
            t1 = block[:, 1, :] * table[exps[:, 0, 1]][:, None] % p
            x = np.stack(((t0 + t1) % p, (t0 - t1) % p), axis=1).reshape(n)
            if counter is not None:
                counter.multiplications += n
                counter.additions += n
        else:
            weights = table[exps]  # (jw, r_out, r_in)
            prods = block[:, None, :, :] * weights[:, :, :, None] % p
            x = (prods.sum(axis=2) % p).reshape(n)
            if counter is not None:
                counter.multiplications += n * r
                counter.additions += n * (r - 1)
    return x


def _transform(
    plan: TransformPlan,
    v,
    table: np.ndarray,
    variant: str,
    counter: OpCounts | None,
    raw_order: bool,
    scale: int | None = None,
) -> np.ndarray:
    x = _run_stages(plan, _coerce_vector(v, plan.n), table, variant, counter)
    if scale is not None:
        x = x * scale % plan.p
    if raw_order:
        return x
    return plan.permutation.apply(x)


def fft_recursive(
    plan: TransformPlan,
    v,
    counter: OpCounts | None = None,
    *,
    raw_order: bool = False,
) -> np.ndarray:
    """Staged transform multiplying by every scheduled twiddle, omega^0 included."""
    return _transform(plan, v, plan.twiddles, RECURSIVE, counter, raw_order)


def fft_twiddle(
    plan: TransformPlan,
    v,
    counter: OpCounts | None = None,
    *,
    raw_order: bool = False,
) -> np.ndarray:
    """Staged transform with multiplication-free radix-2 butterflies."""
    return _transform(plan, v, plan.twiddles, TWIDDLE, counter, raw_order)


def ifft(
    plan: TransformPlan,
    V,
    variant: str = TWIDDLE,
    *,
    raw_order: bool = False,
) -> np.ndarray:
    """Inverse transform: forward kernel with omega^-1, scaled by n^-1 mod p."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    return _transform(
        plan, V, plan.inv_twiddles, variant, None, raw_order, scale=plan.inv_n
    )


def _naive(plan: TransformPlan, v, inverse: bool) -> np.ndarray:
    """Direct evaluation of sum_i omega^(+-ij) v_i for every j."""
    p, n = plan.p, plan.n
    x = _coerce_vector(v, n)
    # Reduced products summed over n terms stay below n*p < 2**62, so the
    # elementwise reduction may be skipped whenever raw products already fit.
    safe_products = n * (p - 1) * (p - 1) < 2**63
    if safe_products and n <= _NAIVE_MATRIX_LIMIT:
        return plan._naive_matrix(inverse) @ x % p
    table = plan.inv_twiddles if inverse else plan.twiddles
    out = np.empty(n, dtype=np.int64)
    i = np.arange(n, dtype=np.int64)
    rows = max(1, _NAIVE_BLOCK_ELEMS // n)
    for j0 in range(0, n, rows):
        j = np.arange(j0, min(j0 + rows, n), dtype=np.int64)
        terms = table[(j[:, None] * i[None, :]) % n] * x[None, :]
        if not safe_products:
            terms %= p
        out[j0 : j0 + len(j)] = terms.sum(axis=1) % p
    return out


def dft_naive(plan: TransformPlan, v) -> np.ndarray:
    """The O(n^2) transform straight from the definition; oracle for the FFTs."""
    return _naive(plan, v, inverse=False)


def idft_naive(plan: TransformPlan, V) -> np.ndarray:
    """Direct inverse: n^-1 times the definition sum with omega^-1."""
    return _naive(plan, V, inverse=True) * plan.inv_n % plan.p


def predicted_counts(
    n: int, radices: list[int] | tuple[int, ...], variant: str
) -> OpCounts:
    """Closed-form operation counts for a staged length-n transform.

    recursive: n * sum(r_k) multiplications, n * (sum(r_k) - s) additions.
    twiddle:   each radix-2 stage drops from 2n to n multiplications;
               other stages and all addition counts are unchanged.  For a
               schedule of v1 twos and v2 threes this is n*(v1 + 3*v2)
               multiplications and n*(v1 + 2*v2) additions.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    sched = tuple(int(r) for r in radices)
    prod = 1
    for r in sched:
        if r < 2:
            raise BadRadices(f"radix {r} < 2")
        prod *= r
    if prod != n:
        raise BadRadices(f"radices multiply to {prod}, not {n}")
    total = sum(sched)
    mults = n * total
    if variant == TWIDDLE:
        mults -= n * sum(1 for r in sched if r == 2)
    return OpCounts(multiplications=mults, additions=n * (total - len(sched)))


def cyclic_convolve_via_fft(plan: TransformPlan, u, v) -> np.ndarray:
    """Cyclic convolution of u and v through forward transforms and one inverse."""
    U = fft_twiddle(plan, u)
    V = fft_twiddle(plan, v)
    return ifft(plan, U * V % plan.p, TWIDDLE)
