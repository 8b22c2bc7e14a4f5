#!/usr/bin/env python3
"""Brute-force oracle for the locale-lab test suite.

Everything here is computed directly from definitions on tiny frames, with no
shared code or shortcuts from the C++ library: meets and joins by scanning
bounds, Heyting arrows by scanning {c : c & a <= b}, cp-ideals by scanning all
subsets of L x M, fittings by intersecting every open sublocale. The output is
committed as tests/golden/oracle_values.json and the C++ tests compare against
that file.

    python3 frame_oracle.py --data ../data --out ../golden/oracle_values.json
    python3 frame_oracle.py --data ../data --check ../golden/oracle_values.json
"""

import argparse
import itertools
import json
import sys
from pathlib import Path


class Frame:
    def __init__(self, labels, leq, with_arrow=True):
        self.labels = list(labels)
        self.n = len(labels)
        self.le = leq  # le[a][b] == a <= b
        n = self.n
        r = range(n)
        self.bot = next(x for x in r if all(leq[x][y] for y in r))
        self.top = next(x for x in r if all(leq[y][x] for y in r))
        self.meet = [[self._glb(a, b) for b in r] for a in r]
        self.join = [[self._lub(a, b) for b in r] for a in r]
        if with_arrow:
            self.arrow = [[self._arrow(a, b) for b in r] for a in r]

    def _glb(self, a, b):
        lower = [c for c in range(self.n) if self.le[c][a] and self.le[c][b]]
        best = [c for c in lower if all(self.le[d][c] for d in lower)]
        assert len(best) == 1
        return best[0]

    def _lub(self, a, b):
        upper = [c for c in range(self.n) if self.le[a][c] and self.le[b][c]]
        best = [c for c in upper if all(self.le[c][d] for d in upper)]
        assert len(best) == 1
        return best[0]

    def _arrow(self, a, b):
        cands = [c for c in range(self.n) if self.le[self._glb(c, a)][b]]
        best = [c for c in cands if all(self.le[d][c] for d in cands)]
        assert len(best) == 1
        return best[0]

    def join_all(self, xs):
        r = self.bot
        for x in xs:
            r = self.join[r][x]
        return r

    def meet_all(self, xs):
        r = self.top
        for x in xs:
            r = self.meet[r][x]
        return r

    def star(self, a):
        return self.arrow[a][self.bot]

    def lt(self, a, b):
        return a != b and self.le[a][b]


# ---------------------------------------------------------------- input


def closure(n, pairs):
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        le[a][b] = True
    for k in range(n):
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    return le


def classify(n, le):
    r = range(n)
    for a in r:
        for b in r:
            if a != b and le[a][b] and le[b][a]:
                return "NotAPartialOrder"
    if not any(all(le[x][y] for y in r) for x in r):
        return "NoBoundedLattice"
    if not any(all(le[y][x] for y in r) for x in r):
        return "NoBoundedLattice"
    for a in r:
        for b in r:
            lower = [c for c in r if le[c][a] and le[c][b]]
            if not any(all(le[d][c] for d in lower) for c in lower):
                return "NoBoundedLattice"
            upper = [c for c in r if le[a][c] and le[b][c]]
            if not any(all(le[c][d] for d in upper) for c in upper):
                return "NoBoundedLattice"
    f = Frame([str(i) for i in r], le, with_arrow=False)
    for a, b, c in itertools.product(r, r, r):
        if f.meet[a][f.join[b][c]] != f.join[f.meet[a][b]][f.meet[a][c]]:
            return "NotDistributive"
    return None


def load(path):
    doc = json.loads(Path(path).read_text())
    labels = doc["elements"]
    idx = {s: i for i, s in enumerate(labels)}
    pairs = [(idx[a], idx[b]) for a, b in doc["leq"]]
    le = closure(len(labels), pairs)
    err = classify(len(labels), le)
    if err:
        return None, err
    return Frame(labels, le), None


def downset_frame_of_poset(k, rel):
    """Lattice of downsets of a poset given by rel[i][j] == i <= j."""
    sets = []
    for mask in range(1 << k):
        ok = all(not (mask >> j & 1) or all((mask >> i & 1) or not rel[i][j] for i in range(k))
                 for j in range(k))
        if ok:
            sets.append(mask)
    le = [[(a & b) == a for b in sets] for a in sets]
    return Frame([str(s) for s in sets], le)


# ---------------------------------------------------------------- basics


def primes(f):
    out = []
    for p in range(f.n):
        if p == f.top:
            continue
        if all(f.le[x][p] or f.le[y][p]
               for x in range(f.n) for y in range(f.n) if f.le[f.meet[x][y]][p]):
            out.append(p)
    return out


def booleanization(f):
    a = sorted({f.star(x) for x in range(f.n)})
    b = sorted(x for x in range(f.n) if f.star(f.star(x)) == x)
    assert a == b
    return a


def homs(f, g):
    """Maps preserving 0, 1 and binary meets and joins, by backtracking over element indices."""
    out = []
    img = [None] * f.n

    def consistent(upto):
        for x in range(upto + 1):
            for y in range(upto + 1):
                m, j = f.meet[x][y], f.join[x][y]
                if m <= upto and img[m] != g.meet[img[x]][img[y]]:
                    return False
                if j <= upto and img[j] != g.join[img[x]][img[y]]:
                    return False
        return True

    def go(i):
        if i == f.n:
            if img[f.bot] == g.bot and img[f.top] == g.top:
                out.append(tuple(img))
            return
        choices = range(g.n)
        if i == f.bot:
            choices = [g.bot]
        elif i == f.top:
            choices = [g.top]
        for c in choices:
            img[i] = c
            if consistent(i):
                go(i + 1)
        img[i] = None

    go(0)
    return out


# ---------------------------------------------------------------- sublocales


def is_sublocale(f, s):
    if f.top not in s:
        return False
    if any(f.meet[x][y] not in s for x in s for y in s):
        return False
    return all(f.arrow[a][x] in s for a in range(f.n) for x in s)


def all_sublocales(f):
    out = []
    for bits in range(1 << f.n):
        s = frozenset(i for i in range(f.n) if bits >> i & 1)
        if is_sublocale(f, s):
            out.append(s)
    return out


def open_sub(f, a):
    return frozenset(f.arrow[a][b] for b in range(f.n))


def closed_sub(f, a):
    return frozenset(b for b in range(f.n) if f.le[a][b])


def fitting(f, s):
    out = frozenset(range(f.n))
    for a in range(f.n):
        o = open_sub(f, a)
        if s <= o:
            out = out & o
    return out


# ---------------------------------------------------------------- axioms


def first(iterable):
    for x in iterable:
        return x
    return None


def w_regular(f):
    return first(a for a in range(f.n)
                 if f.join_all(b for b in range(f.n) if f.join[f.star(b)][a] == f.top) != a)


def nle_pairs(f):
    return ((a, b) for a in range(f.n) for b in range(f.n) if not f.le[a][b])


def w_fit(f):
    return first((a, b) for a, b in nle_pairs(f)
                 if not any(f.join[a][c] == f.top and not f.le[f.arrow[c][b]][b] for c in range(f.n)))


def w_subfit(f):
    return first((a, b) for a, b in nle_pairs(f)
                 if not any(f.join[a][c] == f.top and f.join[b][c] != f.top for c in range(f.n)))


def w_weakly_subfit(f):
    return first(a for a in range(f.n) if f.lt(f.bot, a)
                 and not any(f.lt(c, f.top) and f.join[a][c] == f.top for c in range(f.n)))


def w_prefit(f):
    return first(a for a in range(f.n) if f.lt(f.bot, a)
                 and not any(f.lt(f.bot, c) and f.join[a][f.star(c)] == f.top for c in range(f.n)))


def w_t1(f):
    return first((p, a) for p in primes(f) for a in range(f.n) if f.lt(p, a) and a != f.top)


def w_pt_fit(f):
    for p in primes(f):
        if fitting(f, frozenset({p, f.top})) != frozenset({p, f.top}):
            return p
    return None


def hf_pairs(f):
    return ((a, b) for a in range(f.n) for b in range(f.n) if a != f.top and not f.le[a][b])


def w_h(f):
    return first((a, b) for a, b in hf_pairs(f)
                 if not any(not f.le[u][a] and not f.le[v][b] and f.meet[u][v] == f.bot
                            for u in range(f.n) for v in range(f.n)))


def cond(f, i, a, b, u, v):
    ar, le, top = f.arrow, f.le, f.top
    if i == 1:
        return not le[u][a] and not le[v][b] and f.join[ar[u][a]][ar[v][b]] == top
    if i == 2:
        return f.lt(a, u) and f.lt(b, v) and f.join[ar[u][a]][ar[v][b]] == top
    if i == 3:
        return le[v][a] and f.lt(a, u) and not le[v][b] and f.join[ar[u][a]][ar[v][b]] == top
    if i == 4:
        return ar[u][a] != a and ar[v][b] != b and f.join[u][v] == top
    if i == 5:
        return (le[a][u] and le[b][v] and ar[u][a] != a and ar[v][b] != b
                and f.join[u][v] == top)
    if i == 6:
        return (le[a][u] and ar[u][a] != a and not le[f.meet[a][ar[v][b]]][b]
                and f.join[u][v] == top)
    raise ValueError(i)


def w_cond(f, i):
    return first((a, b) for a, b in hf_pairs(f)
                 if not any(cond(f, i, a, b, u, v) for u in range(f.n) for v in range(f.n)))


def w_anti_urysohn(f):
    return first((a, b) for a in range(f.n) for b in range(f.n)
                 if a != f.bot and b != f.bot and f.join[f.star(a)][f.star(b)] == f.top)


def t_u(f, targets):
    for g in targets:
        hs = homs(f, g)
        for h in hs:
            for k in hs:
                if h != k and all(g.le[h[x]][k[x]] for x in range(f.n)):
                    return False
    return True


# ---------------------------------------------------------------- tensor


def cp_ideals(f, g):
    """Every subset of L x M that is a downset and join-closed in each coordinate."""
    cells = [(a, b) for a in range(f.n) for b in range(g.n)]
    out = []
    for bits in range(1 << len(cells)):
        d = {cells[i] for i in range(len(cells)) if bits >> i & 1}
        # empty index set: (0, b) and (a, 0) always present
        if not all((f.bot, b) in d for b in range(g.n)):
            continue
        if not all((a, g.bot) in d for a in range(f.n)):
            continue
        if not all((x, y) in d for (a, b) in d for x in range(f.n) for y in range(g.n)
                   if f.le[x][a] and g.le[y][b]):
            continue
        # empty index set: (0, b) and (a, 0) always present
        if not all((f.bot, b) in d for b in range(g.n)):
            continue
        if not all((a, g.bot) in d for a in range(f.n)):
            continue
        ok = True
        for b in range(g.n):
            col = [a for a in range(f.n) if (a, b) in d]
            if (f.join_all(col), b) not in d:
                ok = False
                break
        if ok:
            for a in range(f.n):
                row = [b for b in range(g.n) if (a, b) in d]
                if (a, g.join_all(row)) not in d:
                    ok = False
                    break
        if ok:
            out.append(frozenset(d))
    return out


def tensor_frame(f, g):
    ideals = cp_ideals(f, g)
    le = [[x <= y for y in ideals] for x in ideals]
    return ideals, Frame([str(i) for i in range(len(ideals))], le)


def diagonal_checks(f):
    ideals, t = tensor_frame(f, f)
    index = {d: i for i, d in enumerate(ideals)}
    diag = set()
    for a in range(f.n):
        d = frozenset((u, v) for u in range(f.n) for v in range(f.n) if f.le[f.meet[u][v]][a])
        diag.add(index[d])
    diag = frozenset(diag)
    assert len(diag) == f.n
    assert is_sublocale(t, diag)
    d_l = frozenset((u, v) for u in range(f.n) for v in range(f.n) if f.meet[u][v] == f.bot)
    d_idx = index[d_l]
    assert t.meet_all(diag) == d_idx
    strongly_hausdorff = closed_sub(t, d_idx) == diag
    f_separated = fitting(t, diag) == diag
    return len(ideals), strongly_hausdorff, f_separated


def iso_exists(f, g):
    if f.n != g.n:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(f.le[a][b] == g.le[perm[a]][perm[b]] for a in range(f.n) for b in range(f.n)):
            return True
    return False


# ---------------------------------------------------------------- posets


def posets_raw(k):
    """All partial orders on k labelled points, deduplicated by brute-force isomorphism."""
    off = [(i, j) for i in range(k) for j in range(k) if i != j]
    classes = []
    for bits in range(1 << len(off)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for t, (i, j) in enumerate(off):
            if bits >> t & 1:
                rel[i][j] = True
        if any(rel[i][j] and rel[j][i] for i, j in off):
            continue
        if any(rel[i][j] and rel[j][l] and not rel[i][l]
               for i in range(k) for j in range(k) for l in range(k)):
            continue
        key = min(tuple(rel[p[i]][p[j]] for i in range(k) for j in range(k))
                  for p in itertools.permutations(range(k)))
        if key not in classes:
            classes.append(key)
    return classes


def posets_natural(k):
    """Posets on k points whose natural order 0..k-1 is a linear extension."""
    up = [(i, j) for i in range(k) for j in range(i + 1, k)]
    classes = set()
    for bits in range(1 << len(up)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for t, (i, j) in enumerate(up):
            if bits >> t & 1:
                rel[i][j] = True
        if any(rel[i][j] and rel[j][l] and not rel[i][l]
               for i in range(k) for j in range(k) for l in range(k)):
            continue
        key = min(tuple(rel[p[i]][p[j]] for i in range(k) for j in range(k))
                  for p in itertools.permutations(range(k)))
        classes.add(key)
    return classes


# ---------------------------------------------------------------- driver


def labels_of(f, xs):
    return [f.labels[x] for x in xs]


def fixture_report(f, targets):
    r = {}
    r["size"] = f.n
    r["arrow"] = {f"{f.labels[a]}->{f.labels[b]}": f.labels[f.arrow[a][b]]
                  for a in range(f.n) for b in range(f.n)}
    r["pseudocomplement"] = {f.labels[a]: f.labels[f.star(a)] for a in range(f.n)}
    r["primes"] = labels_of(f, primes(f))
    r["booleanization"] = labels_of(f, booleanization(f))
    r["irreducible"] = booleanization(f) == sorted({f.bot, f.top}) and f.bot != f.top
    subs = all_sublocales(f)
    r["sublocale_count"] = len(subs)
    r["sublocales"] = sorted(sorted(labels_of(f, sorted(s))) for s in subs)

    def verdict(w):
        if w is None:
            return {"value": True}
        if isinstance(w, tuple):
            return {"value": False, "witness": labels_of(f, w)}
        return {"value": False, "witness": [f.labels[w]]}

    ax = {}
    ax["regular"] = verdict(w_regular(f))
    ax["fit"] = verdict(w_fit(f))
    ax["subfit"] = verdict(w_subfit(f))
    ax["weakly_subfit"] = verdict(w_weakly_subfit(f))
    ax["prefit"] = verdict(w_prefit(f))
    ax["T1"] = verdict(w_t1(f))
    ax["pt_fit"] = verdict(w_pt_fit(f))
    ax["H"] = verdict(w_h(f))
    ax["F"] = verdict(w_cond(f, 4))
    for i in range(1, 7):
        ax[f"F_{i}"] = verdict(w_cond(f, i))
    ax["anti_urysohn"] = verdict(w_anti_urysohn(f))
    ax["T_U"] = {"value": t_u(f, targets)}
    if f.n * f.n <= 16:
        size, sh, fsep = diagonal_checks(f)
        r["self_tensor_size"] = size
        ax["sH"] = {"value": sh}
        ax["F_sep"] = {"value": fsep}
    r["axioms"] = ax
    return r


def compute(data_dir):
    data_dir = Path(data_dir)
    out = {"fixtures": {}, "invalid": {}, "tensor_sizes": {}, "homs": {}, "extra": {}}
    frames = {}
    for name in ["one", "two", "C3", "C4", "B4", "B8", "M3", "N5", "not_antisymmetric", "no_top"]:
        f, err = load(data_dir / f"{name}.json")
        if err:
            out["invalid"][name] = err
        else:
            frames[name] = f
    targets = [g for g in frames.values() if g.n <= 8]
    for name, f in frames.items():
        out["fixtures"][name] = fixture_report(f, targets)

    names = ["one", "two", "C3", "C4", "B4"]
    for x in names:
        for y in names:
            f, g = frames[x], frames[y]
            if f.n * g.n <= 16:
                out["tensor_sizes"][f"{x}+{y}"] = len(cp_ideals(f, g))
            out["homs"][f"{x}->{y}"] = len(homs(f, g))
    out["homs"]["two->B8"] = len(homs(frames["two"], frames["B8"]))
    out["homs"]["B8->B4"] = len(homs(frames["B8"], frames["B4"]))

    c3 = frames["C3"]
    m = c3.labels.index("m")
    out["extra"]["C3_fitting_m1"] = sorted(labels_of(c3, fitting(c3, frozenset({m, c3.top}))))
    b4 = frames["B4"]
    a = b4.labels.index("a")
    out["extra"]["B4_is_sublocale_1a"] = is_sublocale(b4, frozenset({a, b4.top}))
    out["extra"]["B4_fitting_b_a"] = sorted(labels_of(b4, fitting(b4, frozenset({a, b4.top}))))

    # Sierpinski square: downsets of the 2x2 grid, versus the cp-ideals of C3 (+) C3.
    grid = [[(i & ~j) == 0 for j in range(4)] for i in range(4)]  # i <= j componentwise on bits
    omega_sq = downset_frame_of_poset(4, grid)
    _, c3c3 = tensor_frame(c3, c3)
    out["extra"]["C3+C3_iso_omega_sierpinski_sq"] = iso_exists(c3c3, omega_sq)
    out["extra"]["omega_sierpinski_sq_size"] = omega_sq.n

    out["poset_counts_raw"] = {str(k): len(posets_raw(k)) for k in range(1, 5)}
    out["poset_counts_natural"] = {str(k): len(posets_natural(k)) for k in range(1, 6)}
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", required=True)
    ap.add_argument("--out")
    ap.add_argument("--check")
    args = ap.parse_args()
    values = compute(args.data)
    text = json.dumps(values, indent=1, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    if args.check:
        frozen = json.loads(Path(args.check).read_text())
        if frozen != json.loads(text):
            print("oracle values differ from the frozen golden file", file=sys.stderr)
            return 1
        print("oracle values match the frozen golden file")
    if not args.out and not args.check:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
