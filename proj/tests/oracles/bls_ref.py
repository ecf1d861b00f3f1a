#!/usr/bin/env python3
"""Reference implementation of the BLS12-381 multi-signature scheme.

Independent oracle used to generate the frozen test vectors under
tests/golden/.  Everything here is written from textbook formulas with
plain integers: affine curve arithmetic, a polynomial-basis Fp12, a
naive Miller loop and a full-exponent final exponentiation.  It shares
no code or structural shortcuts with the C++ implementation it checks.

Run gen_vectors.py to (re)generate the golden files.
"""

import hashlib
import hmac
from math import isqrt

# ---------------------------------------------------------------------------
# Curve family parameters
# ---------------------------------------------------------------------------

Z_PARAM = -0xD201000000010000

P = 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAAAB
R = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001

assert P == (Z_PARAM - 1) ** 2 * (Z_PARAM**4 - Z_PARAM**2 + 1) // 3 + Z_PARAM
assert R == Z_PARAM**4 - Z_PARAM**2 + 1
assert P % 4 == 3

H1_COFACTOR = (P + 1 - (Z_PARAM + 1)) // R

# ---------------------------------------------------------------------------
# Fp
# ---------------------------------------------------------------------------


def fp_inv(a):
    return pow(a, P - 2, P)


def fp_legendre(a):
    if a % P == 0:
        return 0
    return 1 if pow(a, (P - 1) // 2, P) == 1 else -1


def fp_sqrt(a):
    a %= P
    c = pow(a, (P + 1) // 4, P)
    return c if c * c % P == a else None


# ---------------------------------------------------------------------------
# Fp2 = Fp[u] / (u^2 + 1), elements as (a0, a1) = a0 + a1*u
# ---------------------------------------------------------------------------

FP2_ZERO = (0, 0)
FP2_ONE = (1, 0)
XI = (1, 1)  # u + 1, the sextic non-residue used by the tower


def fp2_add(a, b):
    return ((a[0] + b[0]) % P, (a[1] + b[1]) % P)


def fp2_sub(a, b):
    return ((a[0] - b[0]) % P, (a[1] - b[1]) % P)


def fp2_neg(a):
    return ((-a[0]) % P, (-a[1]) % P)


def fp2_mul(a, b):
    t0 = a[0] * b[0] % P
    t1 = a[1] * b[1] % P
    t2 = (a[0] + a[1]) * (b[0] + b[1]) % P
    return ((t0 - t1) % P, (t2 - t0 - t1) % P)


def fp2_sq(a):
    return fp2_mul(a, a)


def fp2_mul_scalar(a, k):
    return (a[0] * k % P, a[1] * k % P)


def fp2_inv(a):
    norm = (a[0] * a[0] + a[1] * a[1]) % P
    ninv = fp_inv(norm)
    return (a[0] * ninv % P, (-a[1]) * ninv % P)


def fp2_conj(a):
    return (a[0], (-a[1]) % P)


def fp2_pow(a, e):
    result = FP2_ONE
    base = a
    while e > 0:
        if e & 1:
            result = fp2_mul(result, base)
        base = fp2_sq(base)
        e >>= 1
    return result


def fp2_is_zero(a):
    return a[0] % P == 0 and a[1] % P == 0


def fp2_is_square(a):
    if fp2_is_zero(a):
        return True
    norm = (a[0] * a[0] + a[1] * a[1]) % P
    return fp_legendre(norm) == 1


def fp2_sqrt(a):
    """Square root in Fp2 for p = 3 mod 4, via the norm trick."""
    if fp2_is_zero(a):
        return FP2_ZERO
    a0, a1 = a[0] % P, a[1] % P
    if a1 == 0:
        s = fp_sqrt(a0)
        if s is not None:
            return (s, 0)
        s = fp_sqrt((-a0) % P)
        assert s is not None
        return (0, s)
    norm = (a0 * a0 + a1 * a1) % P
    n = fp_sqrt(norm)
    if n is None:
        return None
    inv2 = fp_inv(2)
    t = (a0 + n) * inv2 % P
    x0 = fp_sqrt(t)
    if x0 is None:
        t = (a0 - n) * inv2 % P
        x0 = fp_sqrt(t)
        if x0 is None:
            return None
    x1 = a1 * fp_inv(2 * x0 % P) % P
    cand = (x0, x1)
    if fp2_sq(cand) != (a0, a1):
        return None
    return cand


def fp2_sgn0(a):
    """RFC 9380 sgn0 for an extension of degree 2."""
    sign_0 = a[0] % 2
    zero_0 = 1 if a[0] % P == 0 else 0
    sign_1 = a[1] % 2
    return sign_0 | (zero_0 & sign_1)


# ---------------------------------------------------------------------------
# Curves.  E / Fp : y^2 = x^3 + 4        (points: (x, y) or None)
#          E'/ Fp2: y^2 = x^3 + 4(u+1)
# ---------------------------------------------------------------------------

B1 = 4
B2 = (4, 4)

G1_GEN = (
    0x17F1D3A73197D7942695638C4FA9AC0FC3688C4F9774B905A14E3A3F171BAC586C55E83FF97A1AEFFB3AF00ADB22C6BB,
    0x08B3F481E3AAA0F1A09E30ED741D8AE4FCF5E095D5D00AF600DB18CB2C04B3EDD03CC744A2888AE40CAA232946C5E7E1,
)

G2_GEN = (
    (
        0x024AA2B2F08F0A91260805272DC51051C6E47AD4FA403B02B4510B647AE3D1770BAC0326A805BBEFD48056C8C121BDB8,
        0x13E02B6052719F607DACD3A088274F65596BD0D09920B61AB5DA61BBDC7F5049334CF11213945D57E5AC7D055D042B7E,
    ),
    (
        0x0CE5D527727D6E118CC9CDC6DA2E351AADFD9BAA8CBDD3A76D429A695160D12C923AC9CC3BACA289E193548608B82801,
        0x0606C4A02EA734CC32ACD2B02BC28B99CB3E287E85A763AF267492AB572E99AB3F370D275CEC1DA1AAA9075FF05F79BE,
    ),
)


def g1_is_on_curve(pt):
    if pt is None:
        return True
    x, y = pt
    return (y * y - (x * x * x + B1)) % P == 0


def g1_add(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2:
        if (y1 + y2) % P == 0:
            return None
        lam = 3 * x1 * x1 * fp_inv(2 * y1 % P) % P
    else:
        lam = (y2 - y1) * fp_inv((x2 - x1) % P) % P
    x3 = (lam * lam - x1 - x2) % P
    y3 = (lam * (x1 - x3) - y1) % P
    return (x3, y3)


def g1_neg(pt):
    if pt is None:
        return None
    return (pt[0], (-pt[1]) % P)


def g1_mul(pt, k):
    if k < 0:
        return g1_mul(g1_neg(pt), -k)
    acc = None
    add = pt
    while k > 0:
        if k & 1:
            acc = g1_add(acc, add)
        add = g1_add(add, add)
        k >>= 1
    return acc


def g2_is_on_curve(pt):
    if pt is None:
        return True
    x, y = pt
    return fp2_sub(fp2_sq(y), fp2_add(fp2_mul(fp2_sq(x), x), B2)) == FP2_ZERO


def g2_add(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2:
        if fp2_is_zero(fp2_add(y1, y2)):
            return None
        lam = fp2_mul(fp2_mul_scalar(fp2_sq(x1), 3), fp2_inv(fp2_mul_scalar(y1, 2)))
    else:
        lam = fp2_mul(fp2_sub(y2, y1), fp2_inv(fp2_sub(x2, x1)))
    x3 = fp2_sub(fp2_sub(fp2_sq(lam), x1), x2)
    y3 = fp2_sub(fp2_mul(lam, fp2_sub(x1, x3)), y1)
    return (x3, y3)


def g2_neg(pt):
    if pt is None:
        return None
    return (pt[0], fp2_neg(pt[1]))


def g2_mul(pt, k):
    if k < 0:
        return g2_mul(g2_neg(pt), -k)
    acc = None
    add = pt
    while k > 0:
        if k & 1:
            acc = g2_add(acc, add)
        add = g2_add(add, add)
        k >>= 1
    return acc


assert g1_is_on_curve(G1_GEN) and g1_mul(G1_GEN, R) is None
assert g2_is_on_curve(G2_GEN) and g2_mul(G2_GEN, R) is None


# ---------------------------------------------------------------------------
# Order of E'(Fp2) and the G2 cofactor, recovered from the CM relation
# rather than quoted.
# ---------------------------------------------------------------------------


def g2_random_point(seed):
    ctr = 0
    while True:
        h = hashlib.sha256(seed + ctr.to_bytes(4, "big")).digest()
        x0 = int.from_bytes(h + b"\x00" * 16, "big") % P
        for x in [(x0, 1), (x0, 0), (1, x0)]:
            rhs = fp2_add(fp2_mul(fp2_sq(x), x), B2)
            y = fp2_sqrt(rhs)
            if y is not None:
                return (x, y)
        ctr += 1


def discover_twist_order():
    t = Z_PARAM + 1
    t2 = t * t - 2 * P
    v2 = (4 * P * P - t2 * t2) // 3
    assert (4 * P * P - t2 * t2) % 3 == 0
    v = isqrt(v2)
    assert v * v == v2
    candidates = [
        P * P + 1 - t2,
        P * P + 1 + t2,
        P * P + 1 - (t2 + 3 * v) // 2,
        P * P + 1 - (t2 - 3 * v) // 2,
        P * P + 1 + (t2 + 3 * v) // 2,
        P * P + 1 + (t2 - 3 * v) // 2,
    ]
    probes = [g2_random_point(b"twist-order-%d" % i) for i in range(4)]
    orders = [n for n in candidates if all(g2_mul(q, n) is None for q in probes)]
    assert len(orders) == 1, orders
    return orders[0]


TWIST_ORDER = discover_twist_order()
assert TWIST_ORDER % R == 0
H2_COFACTOR = TWIST_ORDER // R


# ---------------------------------------------------------------------------
# Fp12 in the polynomial basis Fp2[w] / (w^6 - (u+1)): 6-tuples of Fp2.
# Used only by the pairing below.
# ---------------------------------------------------------------------------

FP12_ONE = (FP2_ONE,) + (FP2_ZERO,) * 5


def fp12_mul(a, b):
    acc = [FP2_ZERO] * 11
    for i in range(6):
        if fp2_is_zero(a[i]):
            continue
        for j in range(6):
            acc[i + j] = fp2_add(acc[i + j], fp2_mul(a[i], b[j]))
    for k in range(10, 5, -1):
        acc[k - 6] = fp2_add(acc[k - 6], fp2_mul(acc[k], XI))
    return tuple(acc[:6])


def fp12_conj(a):
    """Conjugation over Fp6, i.e. x -> x^(p^6): negates odd w-powers."""
    return tuple(fp2_neg(c) if i % 2 else c for i, c in enumerate(a))


def fp12_inv(a):
    """Extended Euclid in Fp2[w] modulo w^6 - xi."""
    modulus = [fp2_neg(XI)] + [FP2_ZERO] * 5 + [FP2_ONE]

    def deg(poly):
        for i in range(len(poly) - 1, -1, -1):
            if not fp2_is_zero(poly[i]):
                return i
        return -1

    def scale(poly, c):
        return [fp2_mul(x, c) for x in poly]

    def sub_shift(p1, p2, c, k):
        out = list(p1)
        for i, x in enumerate(p2):
            if i + k < len(out):
                out[i + k] = fp2_sub(out[i + k], fp2_mul(x, c))
        return out

    r0, r1 = modulus, list(a)
    s0, s1 = [FP2_ZERO] * 7, [FP2_ONE] + [FP2_ZERO] * 6
    while deg(r1) > 0:
        d0, d1 = deg(r0), deg(r1)
        if d0 < d1:
            r0, r1, s0, s1 = r1, r0, s1, s0
            continue
        lead = fp2_mul(r0[d0], fp2_inv(r1[d1]))
        r0 = sub_shift(r0, r1, lead, d0 - d1)
        s0 = sub_shift(s0, s1, lead, d0 - d1)
    assert deg(r1) == 0
    inv_lead = fp2_inv(r1[0])
    res = scale(s1, inv_lead)[:6]
    res = tuple(res + [FP2_ZERO] * (6 - len(res)))
    assert fp12_mul(res, tuple(a)) == FP12_ONE
    return res


def fp12_pow(a, e):
    result = FP12_ONE
    base = a
    while e > 0:
        if e & 1:
            result = fp12_mul(result, base)
        base = fp12_mul(base, base)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Pairing.  Textbook Miller loop over untwisted affine points in E(Fp12),
# full-exponent final exponentiation.
# ---------------------------------------------------------------------------


def untwist(q):
    """E'(Fp2) -> E(Fp12): (x, y) -> (x * xi^-1 * w^4, y * xi^-1 * w^3)."""
    x, y = q
    xi_inv = fp2_inv(XI)
    xc = fp2_mul(x, xi_inv)
    yc = fp2_mul(y, xi_inv)
    gx = (FP2_ZERO,) * 4 + (xc,) + (FP2_ZERO,)
    gy = (FP2_ZERO,) * 3 + (yc,) + (FP2_ZERO,) * 2
    return (gx, gy)


def embed_fp(v):
    return ((v % P, 0),) + (FP2_ZERO,) * 5


def ate_pairing(p1, q2):
    """e(P, Q) for P in G1, Q in G2; returns an element of Fp12."""
    if p1 is None or q2 is None:
        return FP12_ONE
    px, py = embed_fp(p1[0]), embed_fp(p1[1])
    qx, qy = untwist(q2)

    def line(tx, ty, sx, sy, tangent):
        if tangent:
            num = fp12_mul(fp12_mul(tx, tx), embed_fp(3))
            den = fp12_mul(ty, embed_fp(2))
        else:
            num = [fp2_sub(a, b) for a, b in zip(sy, ty)]
            den = [fp2_sub(a, b) for a, b in zip(sx, tx)]
        lam = fp12_mul(tuple(num), fp12_inv(tuple(den)))
        # l(P) = (Py - Ty) - lam * (Px - Tx)
        d1 = tuple(fp2_sub(a, b) for a, b in zip(py, ty))
        d2 = tuple(fp2_sub(a, b) for a, b in zip(px, tx))
        return tuple(fp2_sub(a, b) for a, b in zip(d1, fp12_mul(lam, d2))), lam

    def add12(t, s, lam):
        x3 = fp12_mul(lam, lam)
        x3 = tuple(fp2_sub(fp2_sub(a, b), c) for a, b, c in zip(x3, t[0], s[0]))
        y3 = fp12_mul(lam, tuple(fp2_sub(a, b) for a, b in zip(t[0], x3)))
        y3 = tuple(fp2_sub(a, b) for a, b in zip(y3, t[1]))
        return (x3, y3)

    n = abs(Z_PARAM)
    bits = bin(n)[3:]
    t = (qx, qy)
    f = FP12_ONE
    for bit in bits:
        ell, lam = line(t[0], t[1], None, None, True)
        f = fp12_mul(fp12_mul(f, f), ell)
        t = add12(t, t, lam)
        if bit == "1":
            ell, lam = line(t[0], t[1], qx, qy, False)
            f = fp12_mul(f, ell)
            t = add12(t, (qx, qy), lam)
    if Z_PARAM < 0:
        f = fp12_conj(f)
    return fp12_pow(f, (P**12 - 1) // R)


# ---------------------------------------------------------------------------
# Serialization (compressed, big-endian, 3 flag bits in the top byte)
# ---------------------------------------------------------------------------


def _fp_is_larger(v):
    return v > (P - 1) // 2


def g1_compress(pt):
    if pt is None:
        return bytes([0xC0]) + bytes(47)
    x, y = pt
    body = bytearray(x.to_bytes(48, "big"))
    body[0] |= 0x80
    if _fp_is_larger(y):
        body[0] |= 0x20
    return bytes(body)


def g2_compress(pt):
    if pt is None:
        return bytes([0xC0]) + bytes(95)
    (x0, x1), (y0, y1) = pt
    body = bytearray(x1.to_bytes(48, "big") + x0.to_bytes(48, "big"))
    body[0] |= 0x80
    y_large = _fp_is_larger(y1) or (y1 == 0 and _fp_is_larger(y0))
    if y_large:
        body[0] |= 0x20
    return bytes(body)


# ---------------------------------------------------------------------------
# Hashing: expand_message_xmd (SHA-256) and hash_to_field for Fp2
# ---------------------------------------------------------------------------


def expand_message_xmd(msg, dst, length):
    assert len(dst) <= 255 and length <= 255 * 32
    dst_prime = dst + bytes([len(dst)])
    z_pad = bytes(64)
    l_i_b = length.to_bytes(2, "big")
    b0 = hashlib.sha256(z_pad + msg + l_i_b + b"\x00" + dst_prime).digest()
    ell = (length + 31) // 32
    blocks = []
    prev = hashlib.sha256(b0 + b"\x01" + dst_prime).digest()
    blocks.append(prev)
    for i in range(2, ell + 1):
        x = bytes(a ^ b for a, b in zip(b0, prev))
        prev = hashlib.sha256(x + bytes([i]) + dst_prime).digest()
        blocks.append(prev)
    return b"".join(blocks)[:length]


def hash_to_field_fp2(msg, dst, count):
    ell = 64
    data = expand_message_xmd(msg, dst, count * 2 * ell)
    out = []
    for i in range(count):
        comps = []
        for j in range(2):
            off = ell * (j + i * 2)
            comps.append(int.from_bytes(data[off : off + ell], "big") % P)
        out.append(tuple(comps))
    return out


# ---------------------------------------------------------------------------
# Shallue–van de Woestijne map to E'(Fp2)
# ---------------------------------------------------------------------------


def _g2p(x):
    return fp2_add(fp2_mul(fp2_sq(x), x), B2)


def find_svdw_z():
    """Smallest Z (by a fixed small search order) meeting the SvdW criteria."""
    cands = []
    for mag in range(1, 9):
        for a0, a1 in [(mag, 0), (0, mag), (mag, mag)]:
            cands.append((a0 % P, a1 % P))
            cands.append(((-a0) % P, (-a1) % P))
    inv2 = fp_inv(2)
    for zc in cands:
        gz = _g2p(zc)
        if fp2_is_zero(gz):
            continue
        three_z2 = fp2_mul_scalar(fp2_sq(zc), 3)
        if fp2_is_zero(three_z2):
            continue
        hz = fp2_mul(fp2_neg(three_z2), fp2_inv(fp2_mul_scalar(gz, 4)))
        if fp2_is_zero(hz) or not fp2_is_square(hz):
            continue
        neg_half_z = fp2_mul_scalar(fp2_neg(zc), inv2)
        if fp2_is_square(gz) or fp2_is_square(_g2p(neg_half_z)):
            return zc
    raise AssertionError("no svdw Z found")


SVDW_Z = find_svdw_z()


def svdw_constants():
    zc = SVDW_Z
    c1 = _g2p(zc)
    c2 = fp2_mul_scalar(fp2_neg(zc), fp_inv(2))
    three_z2 = fp2_mul_scalar(fp2_sq(zc), 3)
    arg = fp2_mul(fp2_neg(c1), three_z2)
    c3 = fp2_sqrt(arg)
    assert c3 is not None
    if fp2_sgn0(c3) == 1:
        c3 = fp2_neg(c3)
    c4 = fp2_mul(fp2_mul_scalar(fp2_neg(c1), 4), fp2_inv(three_z2))
    return c1, c2, c3, c4


SVDW_C1, SVDW_C2, SVDW_C3, SVDW_C4 = svdw_constants()


def map_to_curve_svdw(u):
    c1, c2, c3, c4 = SVDW_C1, SVDW_C2, SVDW_C3, SVDW_C4
    tv1 = fp2_mul(fp2_sq(u), c1)
    tv2 = fp2_add(FP2_ONE, tv1)
    tv1 = fp2_sub(FP2_ONE, tv1)
    tv3 = fp2_mul(tv1, tv2)
    tv3 = fp2_inv(tv3) if not fp2_is_zero(tv3) else FP2_ZERO
    tv4 = fp2_mul(fp2_mul(u, tv1), fp2_mul(tv3, c3))
    x1 = fp2_sub(c2, tv4)
    x2 = fp2_add(c2, tv4)
    x3 = fp2_add(SVDW_Z, fp2_mul(c4, fp2_sq(fp2_mul(fp2_sq(tv2), tv3))))
    if fp2_is_square(_g2p(x1)):
        x = x1
    elif fp2_is_square(_g2p(x2)):
        x = x2
    else:
        x = x3
    y = fp2_sqrt(_g2p(x))
    assert y is not None
    if fp2_sgn0(u) != fp2_sgn0(y):
        y = fp2_neg(y)
    return (x, y)


def hash_to_curve_g2(msg, dst):
    u0, u1 = hash_to_field_fp2(msg, dst, 2)
    q0 = map_to_curve_svdw(u0)
    q1 = map_to_curve_svdw(u1)
    return g2_mul(g2_add(q0, q1), H2_COFACTOR)


# ---------------------------------------------------------------------------
# Signature scheme
# ---------------------------------------------------------------------------

DST_SIG = b"BLS_SIG_BLS12381G2_XMD:SHA-256_SVDW_RO_POP_"
DST_POP = b"BLS_POP_BLS12381G2_XMD:SHA-256_SVDW_RO_POP_"
KEYGEN_SALT = b"BLS-SIG-KEYGEN-SALT-"


def hkdf_extract(salt, ikm):
    return hmac.new(salt, ikm, hashlib.sha256).digest()


def hkdf_expand(prk, info, length):
    out = b""
    prev = b""
    i = 1
    while len(out) < length:
        prev = hmac.new(prk, prev + info + bytes([i]), hashlib.sha256).digest()
        out += prev
        i += 1
    return out[:length]


def keygen(seed):
    salt = KEYGEN_SALT
    sk = 0
    while sk == 0:
        salt = hashlib.sha256(salt).digest()
        prk = hkdf_extract(salt, seed + b"\x00")
        okm = hkdf_expand(prk, (48).to_bytes(2, "big"), 48)
        sk = int.from_bytes(okm, "big") % R
    return sk


def sk_to_pk(sk):
    return g1_mul(G1_GEN, sk)


def sign(sk, msg, dst=DST_SIG):
    return g2_mul(hash_to_curve_g2(msg, dst), sk)


def verify(pk, msg, sig, dst=DST_SIG):
    h = hash_to_curve_g2(msg, dst)
    return ate_pairing(G1_GEN, sig) == ate_pairing(pk, h)


def pop_prove(sk):
    return sign(sk, g1_compress(sk_to_pk(sk)), DST_POP)
