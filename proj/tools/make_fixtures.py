#!/usr/bin/env python3
"""Generates test fixtures that are not shipped as presets.

double_sweedler: the Drinfeld double D(H4) of the four-dimensional Sweedler
algebra H4 = <g, x | g^2 = 1, x^2 = 0, xg = -gx>. It is a 16-dimensional,
non-commutative, non-semisimple factorisable Hopf algebra, so it exercises
code paths that the commutative presets cannot. It has no ribbon element:
u^-1 S(u) is a group-like of order 2 without a square root among the
group-likes {1, g, alpha, alpha g}. Sign conventions are selected by
`qhopf check`, as in make_presets.py.

Usage: tools/make_fixtures.py [--qhopf build/qhopf] [--out tests/data]
"""

import argparse
import itertools
import subprocess
import tempfile
from fractions import Fraction
from pathlib import Path

# H4 basis: e_{2b+a} = g^a x^b, i.e. [1, g, x, gx].
N = 4


def h_mult(i, j):
    a, b = i % 2, i // 2
    c, d = j % 2, j // 2
    if b + d > 1:
        return {}
    sign = -1 if (b and c) else 1
    return {(a + c) % 2 + 2 * (b + d): Fraction(sign)}


def h_mul_vec(u, v):
    out = {}
    for i, ci in u.items():
        for j, cj in v.items():
            for k, c in h_mult(i, j).items():
                out[k] = out.get(k, 0) + ci * cj * c
    return {k: c for k, c in out.items() if c != 0}


def h_mul_pair(u, v):
    """Product in H (x) H of dicts keyed by index pairs."""
    out = {}
    for (i1, i2), ci in u.items():
        for (j1, j2), cj in v.items():
            for k1, c1 in h_mult(i1, j1).items():
                for k2, c2 in h_mult(i2, j2).items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + ci * cj * c1 * c2
    return {k: c for k, c in out.items() if c != 0}


def h_coproduct(i):
    a, b = i % 2, i // 2
    out = {(a, a): Fraction(1)}
    if b:
        out = h_mul_pair(out, {(2, 0): Fraction(1), (1, 2): Fraction(1)})
    return out


def h_counit(i):
    return Fraction(1) if i in (0, 1) else Fraction(0)


# S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x, and S^-1 = S^3; here S^2(x) = -x.
H_S = {0: {0: Fraction(1)}, 1: {1: Fraction(1)}, 2: {3: Fraction(-1)}, 3: {2: Fraction(1)}}
H_S_INV = {0: {0: Fraction(1)}, 1: {1: Fraction(1)}, 2: {3: Fraction(1)}, 3: {2: Fraction(-1)}}


def h_coproduct2(i):
    """(Delta (x) id) Delta(e_i) as a dict of index triples."""
    out = {}
    for (p, q), c in h_coproduct(i).items():
        for (r, s), d in h_coproduct(p).items():
            out[(r, s, q)] = out.get((r, s, q), 0) + c * d
    return {k: c for k, c in out.items() if c != 0}


def dual_mult(f, g):
    """Convolution of functionals given as index -> value on the H basis: (fg)(h) = f(h')g(h'')."""
    return {h: sum(f.get(p, 0) * g.get(q, 0) * c for (p, q), c in h_coproduct(h).items()) for h in range(N)}


def dual_basis(i):
    return {h: Fraction(1 if h == i else 0) for h in range(N)}


def functional_coords(f):
    return {i: c for i, c in f.items() if c != 0}


def build_double(cross_variant):
    """D(H) on H* (x) H, basis index 4*i + j for e^i (x) e_j."""
    dim = N * N

    def idx(i, j):
        return N * i + j

    def cross(a, fp):
        """a . f' as a sum over (functional, element of H) for a = e_a, f' = e^fp."""
        out = {}
        for (a1, a2, a3), c in h_coproduct2(a).items():
            left, right = (a3, a1) if cross_variant == 0 else (a1, a3)
            sl = H_S_INV[left]
            # h |-> e^fp(S^-1(left) h right)
            func = {}
            for h in range(N):
                val = Fraction(0)
                for s, cs in sl.items():
                    for k, ck in h_mul_vec(h_mul_vec({s: cs}, {h: Fraction(1)}), {right: Fraction(1)}).items():
                        if k == fp:
                            val += ck
                func[h] = val
            for fi, fc in functional_coords(func).items():
                out[(fi, a2)] = out.get((fi, a2), 0) + c * fc
        return out

    mult = {}
    for i, j, k, l in itertools.product(range(N), repeat=4):
        res = {}
        for (fi, a2), c in cross(j, k).items():
            prod_f = dual_mult(dual_basis(i), dual_basis(fi))
            for m, cm in functional_coords(prod_f).items():
                for b, cb in h_mult(a2, l).items():
                    res[idx(m, b)] = res.get(idx(m, b), 0) + c * cm * cb
        for t, c in res.items():
            if c != 0:
                mult[(idx(i, j), idx(k, l), t)] = c

    # Delta^cop on H*: e^i |-> sum over (p, q) with Delta(e_?) ... via dual of mult.
    def dual_coproduct(i):
        out = {}
        for p, q in itertools.product(range(N), repeat=2):
            c = h_mult(p, q).get(i, 0)
            if c:
                out[(q, p)] = out.get((q, p), 0) + c  # opposite coproduct
        return out

    cop = {}
    for i, j in itertools.product(range(N), repeat=2):
        for (f1, f2), cf in dual_coproduct(i).items():
            for (a1, a2), ca in h_coproduct(j).items():
                key = (idx(i, j), idx(f1, a1), idx(f2, a2))
                cop[key] = cop.get(key, 0) + cf * ca
    counit = {idx(i, j): (1 if i == 0 else 0) * h_counit(j) for i in range(N) for j in range(N)}
    counit = {k: v for k, v in counit.items() if v != 0}
    # e^i (x) 1 evaluated at 1 is delta_{i0}; the unit of H* is the counit of H.

    mult_table = {}
    for (a, b, t), c in mult.items():
        mult_table.setdefault((a, b), {})[t] = c

    def dmul(u, v):
        out = {}
        for p, cp in u.items():
            for q, cq in v.items():
                for t, c in mult_table.get((p, q), {}).items():
                    out[t] = out.get(t, 0) + cp * cq * c
        return {k: c for k, c in out.items() if c != 0}

    # S(f (x) a) = (1 (x) S(a)) (f o S^-1... ) ; on H*^cop the antipode is f |-> f o S^-1.
    def dual_antipode(i):
        f = {h: sum(c for k, c in H_S_INV[h].items() if k == i) for h in range(N)}
        return functional_coords(f)

    unit_f = {h: h_counit(h) for h in range(N)}  # counit of H = unit of H*
    unit_f = functional_coords(unit_f)
    antipode = {}
    for i, j in itertools.product(range(N), repeat=2):
        left = {idx(f, s): cf * cs for f, cf in unit_f.items() for s, cs in H_S[j].items()}
        right = {idx(f, 0): cf for f, cf in dual_antipode(i).items()}
        for t, c in dmul(left, right).items():
            antipode[(idx(i, j), t)] = c
    R = {}
    for i in range(N):
        for f, cf in unit_f.items():
            R[(idx(f, i), idx(i, 0))] = cf
    return dim, mult, counit, cop, antipode, R, dmul, unit_f


def change_basis(dim, unit_vec):
    """Returns (P, P_inv) with new basis vector 0 = unit and the rest natural."""
    pivot = next(i for i in range(dim) if unit_vec.get(i, 0) != 0)
    order = [pivot] + [i for i in range(dim) if i != pivot]
    # new_k in natural coordinates
    new = []
    for k, nat in enumerate(order):
        new.append(dict(unit_vec) if k == 0 else {nat: Fraction(1)})
    # natural_i in new coordinates
    inv = {}
    for i in range(dim):
        if i == pivot:
            v = {0: Fraction(1) / unit_vec[pivot]}
            for j, c in unit_vec.items():
                if j != pivot:
                    v[order.index(j)] = v.get(order.index(j), 0) - c / unit_vec[pivot]
            inv[i] = {k: c for k, c in v.items() if c != 0}
        else:
            inv[i] = {order.index(i): Fraction(1)}
    return new, inv


def to_new_vec(v, inv):
    out = {}
    for i, c in v.items():
        for k, d in inv[i].items():
            out[k] = out.get(k, 0) + c * d
    return {k: c for k, c in out.items() if c != 0}


def literal(c):
    return str(c)


def render(name, dim, data, comment, flags):
    lines = [f"# {line}" for line in comment.strip().splitlines()]
    lines += ["qha 1", f"name {name}", f"dim {dim}", "order 1", f"flags {flags}", "expect hopf factorisable"]
    for section in ("mult", "counit", "coproduct", "antipode", "phi", "alpha", "beta", "R", "ribbon"):
        entries = data.get(section, {})
        if not entries:
            continue
        lines += ["", f"[{section}]"]
        for key in sorted(entries):
            lines.append(" ".join(map(str, key)) + " = " + literal(entries[key]))
    return "\n".join(lines) + "\n"


def passes(qhopf, text):
    with tempfile.NamedTemporaryFile("w", suffix=".qha", delete=False) as f:
        f.write(text)
        path = f.name
    r = subprocess.run([qhopf, "check", path], capture_output=True, text=True)
    Path(path).unlink()
    return r.returncode == 0


def sweedler_double(qhopf):
    comment = (
        "Drinfeld double D(H4) of the Sweedler algebra H4 = <g, x | g^2 = 1, x^2 = 0,\n"
        "xg = -gx>, Delta(x) = x (x) 1 + g (x) x (Drinfeld 1986; Kassel, Quantum\n"
        "Groups, IX.4). Natural basis e^i (x) e_j of H4* (x) H4 with H4 basis\n"
        "1, g, x, gx, re-indexed so that the unit comes first. Not ribbon.")
    for cross_variant, r_flip in ((0, False), (0, True), (1, False), (1, True)):
        dim, mult, counit, cop, antipode, R, dmul, unit_f = build_double(cross_variant)
        unit = {4 * f + 0: c for f, c in unit_f.items()}
        new, inv = change_basis(dim, unit)

        def nv(v):
            return to_new_vec(v, inv)

        data = {}
        m = {}
        for a, b in itertools.product(range(dim), repeat=2):
            prod = {}
            for (p, cp), (q, cq) in itertools.product(new[a].items(), new[b].items()):
                for t, c in dmul({p: Fraction(1)}, {q: Fraction(1)}).items():
                    prod[t] = prod.get(t, 0) + cp * cq * c
            for t, c in nv(prod).items():
                m[(a, b, t)] = c
        data["mult"] = m
        data["counit"] = {(a,): sum(c * counit.get(p, 0) for p, c in new[a].items()) for a in range(dim)}
        data["counit"] = {k: v for k, v in data["counit"].items() if v != 0}
        cp_new = {}
        for a in range(dim):
            acc = {}
            for p, c in new[a].items():
                for (s, x, y), d in cop.items():
                    if s != p:
                        continue
                    for k1, c1 in inv[x].items():
                        for k2, c2 in inv[y].items():
                            acc[(k1, k2)] = acc.get((k1, k2), 0) + c * d * c1 * c2
            for (k1, k2), c in acc.items():
                if c != 0:
                    cp_new[(a, k1, k2)] = c
        data["coproduct"] = cp_new
        ant = {}
        for a in range(dim):
            acc = {}
            for p, c in new[a].items():
                for (s, t), d in antipode.items():
                    if s == p:
                        acc[t] = acc.get(t, 0) + c * d
            for t, c in nv(acc).items():
                ant[(a, t)] = c
        data["antipode"] = ant
        data["phi"] = {(0, 0, 0): Fraction(1)}
        data["alpha"] = {(0,): Fraction(1)}
        data["beta"] = {(0,): Fraction(1)}
        Rn = {}
        for (x, y), c in R.items():
            if r_flip:
                x, y = y, x
            for k1, c1 in inv[x].items():
                for k2, c2 in inv[y].items():
                    Rn[(k1, k2)] = Rn.get((k1, k2), 0) + c * c1 * c2
        data["R"] = {k: v for k, v in Rn.items() if v != 0}
        text = render("double_sweedler", dim, data, comment, "char0")
        if passes(qhopf, text):
            return text
    raise SystemExit("no convention for double_sweedler passes the checker")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qhopf", default="build/qhopf")
    ap.add_argument("--out", default="tests/data")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "double_sweedler.qha").write_text(sweedler_double(args.qhopf))


if __name__ == "__main__":
    main()
