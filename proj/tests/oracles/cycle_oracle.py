#!/usr/bin/env python3
"""Brute-force simple-cycle enumeration in the gr^1 successor graph.

Independent of the C++ explorer; used to freeze cycle counts for tests.
"""
import itertools
import sys

from formula_oracle import e_of, ev, g_pow, mu, s_dual, chain


def generic(p, d):
    return not (all(x == 0 for x in d) or all(x == p - 1 for x in d))


def succ(p, f, w):
    d, m = w
    q = p ** f - 1
    out = set()
    for i in range(f):
        lam = g_pow(mu(p, f), i)
        nd = tuple(ev(lam, list(d)))
        if all(0 <= x <= p - 1 for x in nd) and generic(p, nd):
            out.add((nd, (m + e_of(lam, list(d), p)) % q))
    return sorted(out)


def cycles(p, f, start, max_len):
    res = []

    def dfs(path, seen):
        for nx in succ(p, f, path[-1]):
            if nx == start:
                res.append(list(path))
            elif nx not in seen and len(path) < max_len:
                seen.add(nx)
                path.append(nx)
                dfs(path, seen)
                path.pop()
                seen.discard(nx)

    dfs([start], {start})
    return sorted(res)


def mult_free(p, f, cyc):
    n = len(cyc)
    labels = list(cyc) + [s_dual(p, f, cyc[i - 1]) for i in range(n)]
    return len(set(labels)) == 2 * n


def main():
    for p in (5, 7):
        f = 2
        total = extras = 0
        lens = {}
        for r in itertools.product(range(1, p - 2), repeat=f):
            start = (tuple(r), 0)
            cs = cycles(p, f, start, 2 * f)
            canon = []
            for j in range(f):
                ch = chain(p, f, list(r), 0, seed=j)
                canon.append([(w[0], w[1]) for w in ch[:-1]])
            for c in cs:
                lens[len(c)] = lens.get(len(c), 0) + 1
                if mult_free(p, f, c) and c not in canon:
                    extras += 1
                    print("extra", p, r, c)
            assert all(c in cs for c in canon)
            total += len(cs)
            if p == 5 and r == (1, 1):
                for c in cs:
                    print("  p=5 r=(1,1) cycle", c, "mf", mult_free(p, f, c))
        print(f"p={p} f=2 cycles={total} extras={extras} lengths={lens}")
    # length-1 and length-2 cycles over all generic weights, p=5 f=2
    p, f = 5, 2
    n1 = n2 = 0
    for d in itertools.product(range(p), repeat=f):
        if not generic(p, d):
            continue
        for m in range(p ** f - 1):
            w = (d, m)
            s = succ(p, f, w)
            n1 += w in s
            for v in s:
                if w in succ(p, f, v) and v != w:
                    n2 += 1
    print("p=5 f=2 self-loops:", n1, "2-cycles (ordered):", n2)


if __name__ == "__main__":
    sys.exit(main())
