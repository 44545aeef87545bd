"""Pure-Python dense polynomial kernel over integer coefficients.

A polynomial is a list of Python ints, index = power of q, with no
trailing zeros; [] is the zero polynomial.  Rational coefficients are
handled one level up (``qgen.exact``) by keeping a single positive
denominator next to the integer array, so everything hot lives here as
bigint array arithmetic.

``qgen._kernel_c`` is a compiled drop-in replacement; both modules must
stay behaviorally identical (same results, same exceptions).
"""

from math import gcd as _igcd

BACKEND_NAME = "python"

# 31-bit primes for the modular gcd; products of two residues fit in 62 bits,
# which the C backend exploits.  Order matters for determinism.
_PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
    2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
    2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
    2147482819, 2147482817, 2147482811, 2147482801, 2147482763, 2147482739,
    2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
)

# Below this degree the content-normalized Euclidean loop beats the modular
# machinery; above it, intermediate coefficient swell makes modular win.
_PRS_CUTOFF = 12


def ztrim(c):
    """Strip trailing zeros in place and return the list."""
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return ztrim(out)


def zsub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] -= b[i]
    return ztrim(out)


def zneg(a):
    return [-c for c in a]


def zscale(a, k):
    if not k:
        return []
    return [c * k for c in a]


def zshift(a, k):
    """Multiply by q**k."""
    if not a:
        return []
    return [0] * k + list(a)


def zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return ztrim(out)


def zcontent(a):
    """gcd of the absolute coefficients; 0 for the zero polynomial."""
    g = 0
    for c in a:
        if c:
            g = _igcd(g, c)
            if g == 1:
                return 1
    return g


def zdiv_scalar(a, k):
    """Divide every coefficient by k (must be exact)."""
    return [c // k for c in a]


def zprimitive(a):
    """Return (content, primitive part with positive leading coefficient)."""
    if not a:
        return 0, []
    g = zcontent(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return 1, list(a)
    return g, [c // g for c in a]


def zdivexact(a, b):
    """Exact quotient of a by b over the integers, or None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    r = list(a)
    lb = b[-1]
    quot = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = r[i + db]
        if not c:
            continue
        if c % lb:
            return None
        t = c // lb
        quot[i] = t
        for j in range(db + 1):
            r[i + j] -= t * b[j]
    if any(r):
        return None
    return quot


def zprem(a, b):
    """Pseudo-remainder: lc(b)^(da-db+1) * a modulo b."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lb = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        if top:
            for j in range(i + db):
                r[j] *= lb
            for j in range(db):
                r[i + j] -= top * b[j]
            r[i + db] = 0
            # entries above i+db were already cleared; scale them too
            for j in range(i + db + 1, da + 1):
                r[j] *= lb
        else:
            # keep the scaling uniform so the loop invariant holds
            pass
    return ztrim(r)


def _prs_gcd(a, b):
    """Primitive-PRS gcd of primitive a, b; result primitive, lc > 0."""
    f, g = a, b
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = zprem(f, g)
        _, r = zprimitive(r)
        f, g = g, r
    _, f = zprimitive(f)
    return f


def _gcd_mod_p(a, b, p):
    """Monic gcd of a, b over GF(p); coefficients reduced into [0, p)."""
    f = [c % p for c in a]
    g = [c % p for c in b]
    ztrim(f)
    ztrim(g)
    while g:
        # f <- f mod g (monic reduction)
        inv = pow(g[-1], p - 2, p)
        dg = len(g) - 1
        while len(f) - 1 >= dg and f:
            t = f[-1] * inv % p
            off = len(f) - 1 - dg
            for j in range(dg):
                f[off + j] = (f[off + j] - t * g[j]) % p
            del f[-1]
            ztrim(f)
        f, g = g, f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def zgcd(a, b):
    """gcd of the primitive parts of a and b: primitive, lc > 0.

    Small degrees go through the content-normalized Euclidean loop;
    larger ones use a modular image gcd (Brown) whose candidate is
    certified by exact trial division, so the result is always exact.
    """
    if not a and not b:
        return []
    _, pa = zprimitive(a)
    _, pb = zprimitive(b)
    if not pa:
        return pb
    if not pb:
        return pa
    if len(pa) == 1 or len(pb) == 1:
        return [1]
    if pa == pb:
        return pa
    if min(len(pa), len(pb)) - 1 <= _PRS_CUTOFF:
        return _prs_gcd(pa, pb)
    return _modular_gcd(pa, pb)


def _modular_gcd(pa, pb):
    la, lb = pa[-1], pb[-1]
    gamma = _igcd(la, lb)
    best_deg = -1
    images = None  # list of residues per coefficient
    moduli = 1
    prev_candidate = None
    for p in _PRIMES:
        if la % p == 0 or lb % p == 0:
            continue
        gp = _gcd_mod_p(pa, pb, p)
        d = len(gp) - 1
        if d == 0:
            return [1]
        if best_deg == -1 or d < best_deg:
            best_deg = d
            scaled = [c * gamma % p for c in gp]
            images = scaled
            moduli = p
        elif d == best_deg:
            scaled = [c * gamma % p for c in gp]
            images = _crt_merge(images, moduli, scaled, p)
            moduli *= p
        else:
            continue  # unlucky prime
        candidate = _symmetric(images, moduli)
        _, candidate = zprimitive(candidate)
        if candidate == prev_candidate or moduli > (abs(gamma) << 1):
            qa = zdivexact(pa, candidate)
            if qa is not None and zdivexact(pb, candidate) is not None:
                return candidate
        prev_candidate = candidate
    # The prime pool is ample for this library's coefficient sizes, but
    # fall back to the always-correct slow path rather than fail.
    return _prs_gcd(pa, pb)


def _crt_merge(res_a, mod_a, res_b, mod_b):
    """Combine residue vectors via the Chinese remainder theorem."""
    inv = pow(mod_a, mod_b - 2, mod_b)
    out = []
    n = max(len(res_a), len(res_b))
    for i in range(n):
        ra = res_a[i] if i < len(res_a) else 0
        rb = res_b[i] if i < len(res_b) else 0
        t = (rb - ra) * inv % mod_b
        out.append(ra + mod_a * t)
    return out


def _symmetric(residues, modulus):
    half = modulus >> 1
    out = [r - modulus if r > half else r for r in residues]
    ztrim(out)
    return out


def zsubst_qpow(a, m):
    """Substitute q -> q**m (m >= 1)."""
    if not a or m == 1:
        return list(a)
    out = [0] * ((len(a) - 1) * m + 1)
    for i, c in enumerate(a):
        out[i * m] = c
    return out


def zeval_frac(a, pn, pd):
    """Evaluate at the rational pn/pd; returns the unreduced pair
    (sum a_i * pn^i * pd^(deg-i), pd^deg)."""
    if not a:
        return 0, 1
    deg = len(a) - 1
    acc = 0
    # Horner in pn with a trailing power of pd
    for i in range(deg, -1, -1):
        acc = acc * pn + a[i] * pd ** (deg - i)
    return acc, pd ** deg
