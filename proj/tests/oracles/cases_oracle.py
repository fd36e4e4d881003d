"""Brute-force reference values for the finite case analyses."""
from sympy import factorint, isprime


def prime_power(x):
    if x < 2:
        return None
    f = factorint(x)
    return next(iter(f.items())) if len(f) == 1 else None


def sp_case(dmin, dmax, variant=False):
    out = set()
    for d in range(dmin, dmax + 1):
        for sign in (1, -1):
            prod = 2 ** d + sign
            for x in range(1, prod + 1):
                if prod % x:
                    continue
                y = prod // x
                if not variant:
                    t = 2 * x + 1
                    ok = t + 1 == 2 ** (d - 2) * y and ((y + 1) % 2 ** (d - 3) == 0 or (y - 1) % 2 ** (d - 3) == 0)
                else:
                    t = 2 * y - 1
                    ok = t - 1 == 2 ** (d - 2) * x and ((x + 1) % 2 ** (d - 3) == 0 or (x - 1) % 2 ** (d - 3) == 0)
                if ok and t >= 6:
                    out.add((t, d))
    return sorted(out)


def coprime6_part(x):
    while x % 2 == 0:
        x //= 2
    while x % 3 == 0:
        x //= 3
    return x


def linear31(qmax):
    out = []
    for q in range(2, qmax + 1):
        if not prime_power(q):
            continue
        for d in range(6, 9):
            num = q ** d - 1
            if num % (q - 1):
                continue
            s = num // (q - 1) + 1
            t = int(round(s ** 0.5))
            for tt in (t - 1, t, t + 1):
                if tt >= 2 and tt * tt == s:
                    r = coprime6_part(tt - 1)
                    if r >= 2:
                        out.append((q, d, tt, r))
    return sorted(out)


def claim4(target):
    out = []
    for t in range(2, 4 * target + 1):
        v = t * t - 1
        if v % target:
            continue
        pp = prime_power(v // target)
        if not pp:
            continue
        if coprime6_part(t - 1) < 2:
            continue
        p, e = pp
        out.append((t, p, 2 * e))
    return out


def twin(tmax):
    out = []
    for t in range(6, tmax + 1, 2):
        a, b = prime_power(t - 1), prime_power(t + 1)
        if a and b and a[0] >= 5:
            out.append(t)
    return out


def odd_twin(tmax):
    return [t for t in range(7, tmax + 1, 2) if prime_power(t - 1) and prime_power(t + 1)]


def sporadic():
    out = []
    for m in (11, 12, 22, 23, 24, 15, 28, 176, 276):
        for t in range(2, 16):
            n = (t * t - 1) ** 2
            if n % m == 0 and prime_power(n // m):
                out.append((m, t))
    return out


if __name__ == "__main__":
    print("sp(3,6)", sp_case(3, 6))
    print("sp(3,3)", sp_case(3, 3))
    print("sp variant(3,6)", sp_case(3, 6, True))
    print("linear31(16)", linear31(16))
    print("linear31(2)", linear31(2))
    print("claim4(11)", claim4(11))
    print("claim4(20)", claim4(20))
    print("twin(20)", twin(20), "twin(6)", twin(6), "twin(1000)", twin(1000))
    print("odd twin(1000)", odd_twin(1000))
    print("sporadic", sporadic())
