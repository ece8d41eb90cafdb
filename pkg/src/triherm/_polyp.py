"""Dense univariate polynomials over F_p as coefficient lists (lowest degree first)."""


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a, b, p):
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        a = trim(a)
    return trim(q), a


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def powmod(base, e, m, p):
    result = [1]
    base = mod(base, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def derivative(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def roots(a, p):
    """Distinct roots in F_p of ``a`` (found from gcd with x^p - x, then by search)."""
    a = trim([c % p for c in a])
    if len(a) <= 1:
        return []
    g = gcd(a, sub(powmod([0, 1], p, a, p), [0, 1], p), p)
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0]) % p]
    if p < 5000:
        return [r for r in range(p) if evaluate(g, r, p) == 0]
    # deg g <= 3 here; peel off roots via random splitting
    return sorted(_split_roots(g, p))


def _split_roots(g, p):
    import random

    rng = random.Random(p)
    if len(g) == 1:
        return []
    if len(g) == 2:
        return [(-g[0] * pow(g[1], -1, p)) % p]
    while True:
        c = rng.randrange(p)
        h = gcd(g, sub(powmod([c, 1], (p - 1) // 2, g, p), [1], p), p)
        if 1 < len(h) < len(g):
            return _split_roots(h, p) + _split_roots(divmod_(g, h, p)[0], p)


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc
