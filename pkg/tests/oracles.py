"""High-precision reference values, independent of the package's summation code."""

import mpmath as mp

DPS = 60


def _entire_sum(term):
    """Sum term(0) + term(1) + ... until the terms fall below the working precision."""
    total, n, eps = mp.mpf(0), 0, mp.mpf(2) ** (-mp.mp.prec)
    while True:
        t = term(n)
        total += t
        # terms of these entire series decay monotonically once they start to shrink
        if n > 10 and abs(t) <= eps * abs(total) and abs(term(n + 1)) <= abs(t):
            return total
        n += 1


def mlf(alpha, y):
    """E_alpha(y) by direct summation at raised precision."""
    with mp.workdps(DPS + int(abs(y)) // 2):
        y, alpha = mp.mpf(y), mp.mpf(alpha)
        return +_entire_sum(lambda n: y**n * mp.rgamma(1 + alpha * n))


def wright(alpha, beta, x):
    """W_{alpha,beta}(x) = sum x^k / (k! Gamma(alpha + beta k))."""
    with mp.workdps(DPS + int(abs(x)) // 2):
        x, alpha, beta = mp.mpf(x), mp.mpf(alpha), mp.mpf(beta)
        return +_entire_sum(lambda k: x**k * mp.rgamma(k + 1) * mp.rgamma(alpha + beta * k))


def central(f, x, order, h=mp.mpf("1e-4")):
    """Second-order central difference of the given derivative order."""
    with mp.workdps(DPS):
        x = mp.mpf(x)
        if order == 1:
            return (f(x + h) - f(x - h)) / (2 * h)
        if order == 2:
            return (f(x + h) - 2 * f(x) + f(x - h)) / h**2
        if order == 3:
            return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h**3)
    raise ValueError(order)


def heat(n, alpha, x, y):
    with mp.workdps(DPS):
        return mp.factorial(n) * mp.fsum(
            mp.mpf(x) ** (n - 2 * m) * mp.mpf(y) ** m / (mp.factorial(n - 2 * m) * mp.gamma(1 + mp.mpf(alpha) * m))
            for m in range(n // 2 + 1)
        )


def laguerre(n, alpha, x, y):
    with mp.workdps(DPS):
        x, y = mp.mpf(x), mp.mpf(y)
        return mp.fsum(
            (-1) ** k * mp.binomial(n, k) * (x ** (mp.mpf(alpha) * k) if k else 1) * y ** (n - k) * mp.rgamma(1 + mp.mpf(alpha) * k)
            for k in range(n + 1)
        )
