"""Independent reference answers, written without the package's search code."""

import itertools


def hamilton_cycles(g):
    """Edge sets of all Hamilton cycles, by enumerating vertex permutations."""
    edges = set(g.edges)
    if g.n == 1:
        return []  # a cycle through one vertex needs a self-loop
    out = set()
    for perm in itertools.permutations(range(2, g.n + 1)):
        tour = (1,) + perm + (1,)
        cyc = frozenset(zip(tour, tour[1:]))
        if cyc <= edges:
            out.add(cyc)
    return sorted(out, key=sorted)


def queens_count(n):
    """Permutation oracle: columns per row, reject shared diagonals."""
    count = 0
    for perm in itertools.permutations(range(n)):
        if len({r + c for r, c in enumerate(perm)}) == n and len({r - c for r, c in enumerate(perm)}) == n:
            count += 1
    return count


def queens_count_backtrack(n):
    def place(r, cols, d1, d2):
        if r == n:
            return 1
        total = 0
        for c in range(n):
            if c not in cols and r + c not in d1 and r - c not in d2:
                total += place(r + 1, cols | {c}, d1 | {r + c}, d2 | {r - c})
        return total
    return place(0, frozenset(), frozenset(), frozenset())


def colorings(g, k):
    """All proper k-colorings as tuples, by brute force over k**n assignments."""
    out = []
    for col in itertools.product(range(1, k + 1), repeat=g.n):
        if all(col[u - 1] != col[v - 1] for u, v in g.edges):
            out.append(col)
    return out


def schur_pairs(n):
    return sum(1 for x in range(1, n + 1) for y in range(x, n + 1) if x + y <= n)


def schur_partition_exists(b, n):
    """Plain backtracking over bin assignments of 1..n."""
    bins = [set() for _ in range(b)]

    def place(x):
        if x > n:
            return True
        for s in bins:
            if any(x - y in s for y in s):  # y + (x - y) = x, including y = x/2
                continue
            s.add(x)
            if place(x + 1):
                return True
            s.remove(x)
            if not s:
                break  # bins are interchangeable
        return False

    return place(1)


def naive_least_model(rules, seed):
    """Iterate all rules until nothing changes."""
    model = set(seed)
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in model and all(b in model for b in r.body):
                model.add(r.head)
                changed = True
    return model
