"""Pure-Python profile kernels, used when the compiled extension is unavailable.

Both functions take the out-degrees in display order and return the
left-hand sides ``X(1), ..., X(n)`` as a list.
"""


def _column_counts(b, n):
    # counts[j] = |{i : b_i >= j}| for j in 0..n+1
    hist = [0] * (n + 2)
    for v in b:
        hist[v if v <= n else n + 1] += 1
    counts = [0] * (n + 2)
    run = 0
    for j in range(n + 1, -1, -1):
        run += hist[j]
        counts[j] = run
    return counts


def noloop_profile(b):
    n = len(b)
    counts = _column_counts(b, n)
    # seen[v]: number of positions i <= k whose (clipped) b equals v
    seen = [0] * (n + 2)
    x = [0] * n
    xk = 0
    p = 0  # |{i <= k : b_i >= k}|
    for k in range(n):
        v = b[k]
        if v > n:
            v = n + 1
        p_next = p - (seen[k] if k else 0) + (1 if v >= k + 1 else 0)
        seen[v] += 1
        xk += p + counts[k + 1] - p_next
        x[k] = xk
        p = p_next
    return x


def loop_profile(b):
    n = len(b)
    counts = _column_counts(b, n)
    x = [0] * n
    xk = 0
    for k in range(n):
        xk += counts[k + 1]
        x[k] = xk
    return x
