#!/usr/bin/env python3
"""Generates data/presets/*.qha.

The two doubles are built in the delta_x g^a basis of the (twisted) quantum
double of Z/2 and rewritten in the basis e_{2a+s} = g^a (delta_0 + (-1)^s delta_1),
whose first element is the unit. Where the literature admits several sign
conventions, and for the ribbon element, every candidate is written out and
the first one accepted by `qhopf check` is kept.

Usage: tools/make_presets.py [--qhopf build/qhopf] [--out data/presets]
"""

import argparse
import itertools
import subprocess
import sys
import tempfile
from pathlib import Path

import sympy as sp

I = sp.I
G = (0, 1)


def literal(c, order):
    c = sp.nsimplify(sp.expand(c))
    re, im = sp.re(c), sp.im(c)
    if im != 0 and order % 4 != 0:
        raise ValueError(f"{c} needs order divisible by 4")
    parts = []
    if re != 0:
        parts.append(str(re))
    if im != 0:
        zi = f"z^{order // 4}" if order != 4 else "z"
        parts.append(zi if im == 1 else f"-{zi}" if im == -1 else f"{im}*{zi}")
    if not parts:
        return "0"
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


def add(d, key, val):
    val = sp.nsimplify(sp.expand(val))
    if val == 0:
        return
    v = sp.expand(d.get(key, 0) + val)
    if v == 0:
        d.pop(key, None)
    else:
        d[key] = v


# DPR basis: index 2x+a <-> delta_x g^a. New basis: index 2a+s.
def to_new(idx):
    """delta_x g^a = 1/2 sum_s (-1)^{sx} e_{2a+s}."""
    x, a = divmod(idx, 2)
    return [(2 * a + s, sp.Rational(1, 2) * (-1) ** (s * x)) for s in (0, 1)]


def from_new(idx):
    """e_{2a+s} = sum_x (-1)^{sx} delta_x g^a."""
    a, s = divmod(idx, 2)
    return [(2 * x + a, (-1) ** (s * x)) for x in G]


def convert_element(elem):
    """Rewrites a dict {tuple of DPR indices: c} in the new basis."""
    out = {}
    for key, c in elem.items():
        for combo in itertools.product(*[to_new(k) for k in key]):
            coeff = c
            for _, f in combo:
                coeff *= f
            add(out, tuple(i for i, _ in combo), coeff)
    return out


def dpr_double(omega):
    """Twisted double D^omega(Z/2) in the DPR basis delta_x g^a."""
    w = omega
    omega = lambda x, y, z: sp.Integer(w(x, y, z))  # noqa: E731

    def theta(x, g, h):
        return omega(x, g, h) * omega(g, h, x) / omega(g, x, h)

    def gamma(g, y, z):
        return omega(y, z, g) * omega(g, y, z) / omega(y, g, z)

    def b(x, a):
        return 2 * x + a

    mult, cop, ant = {}, {}, {}
    for x, a, c in itertools.product(G, G, G):
        mult[(b(x, a), b(x, c))] = {b(x, (a + c) % 2): theta(x, a, c)}
    counit = {b(0, a): 1 for a in G}
    for x, a in itertools.product(G, G):
        for y in G:
            z = (x + y) % 2
            add(cop, (b(x, a), b(y, a), b(z, a)), gamma(a, y, z))
    for x, a in itertools.product(G, G):
        add(ant, (b(x, a), b(x, a)), 1 / (theta(x, a, a) * gamma(x, a, a)))
    # Units in the DPR basis.
    one = {(b(x, 0),): 1 for x in G}
    phi = {}
    for x, y, z in itertools.product(G, G, G):
        add(phi, (b(x, 0), b(y, 0), b(z, 0)), sp.Integer(1) / omega(x, y, z))
    beta = {(b(x, 0),): omega(x, x, x) for x in G}
    R = {}
    for x, y in itertools.product(G, G):
        add(R, (b(x, 0), b(y, x)), 1)
    return dict(mult=mult, counit=counit, coproduct=cop, antipode=ant, phi=phi, alpha=one, beta=beta, R=R)


def mult_to_new(mult):
    """mult maps (i, j) -> {k: c} in the DPR basis; returns (i, j, k) -> c in the new basis."""
    out = {}
    for i, j in itertools.product(range(4), range(4)):
        for (p, cp), (q, cq) in itertools.product(from_new(i), from_new(j)):
            for k, c in mult.get((p, q), {}).items():
                for kk, ck in to_new(k):
                    add(out, (i, j, kk), cp * cq * c * ck)
    return out


def linear_map_to_new(mapping):
    """mapping: {(source, target legs...): c} in the DPR basis."""
    out = {}
    for i in range(4):
        for p, cp in from_new(i):
            for key, c in mapping.items():
                if key[0] != p:
                    continue
                for combo in itertools.product(*[to_new(k) for k in key[1:]]):
                    coeff = cp * c
                    for _, f in combo:
                        coeff *= f
                    add(out, (i,) + tuple(k for k, _ in combo), coeff)
    return out


def counit_to_new(counit):
    out = {}
    for i in range(4):
        for p, cp in from_new(i):
            add(out, (i,), cp * counit.get(p, 0))
    return out


def double_file(name, omega, order, antipode_sign, r_flip, ribbon, comment):
    d = dpr_double(omega)
    R = d["R"]
    if r_flip:
        R = {(j, i): c for (i, j), c in R.items()}
    ant = d["antipode"]
    if antipode_sign:
        ant = {k: c * (-1) ** ((k[0] // 2) * (k[0] % 2)) for k, c in ant.items()}
    data = dict(
        mult=mult_to_new(d["mult"]),
        counit=counit_to_new(d["counit"]),
        coproduct=linear_map_to_new(d["coproduct"]),
        antipode=linear_map_to_new(ant),
        phi=convert_element(d["phi"]),
        alpha=convert_element(d["alpha"]),
        beta=convert_element(d["beta"]),
        R=convert_element(R),
        ribbon={(k,): c for k, c in enumerate(ribbon) if c != 0},
    )
    return render(name, 4, order, data, comment)


def render(name, dim, order, data, comment, flags="char0", expect="", simples=()):
    lines = [f"# {line}" if line else "#" for line in comment.strip().splitlines()]
    lines += ["qha 1", f"name {name}", f"dim {dim}", f"order {order}", f"flags {flags}"]
    if expect:
        lines.append(f"expect {expect}")
    for section in ("mult", "counit", "coproduct", "antipode", "phi", "alpha", "beta", "R", "ribbon"):
        entries = data.get(section, {})
        if not entries:
            continue
        lines.append("")
        lines.append(f"[{section}]")
        for key in sorted(entries):
            lines.append(" ".join(map(str, key)) + " = " + literal(entries[key], order))
    if simples:
        lines.append("")
        lines.append("[simples]")
        for label, chars in simples:
            lines.append(f"module {label} 1")
            for i, c in enumerate(chars):
                if c != 0:
                    lines.append(f"{i} 0 0 = {literal(c, order)}")
    return "\n".join(lines) + "\n"


def group_data():
    """Q[Z/2] in the group basis e_0 = 1, e_1 = g."""
    return dict(
        mult={(i, j, (i + j) % 2): 1 for i in G for j in G},
        counit={(0,): 1, (1,): 1},
        coproduct={(i, i, i): 1 for i in G},
        antipode={(i, i): 1 for i in G},
        phi={(0, 0, 0): 1},
        alpha={(0,): 1},
        beta={(0,): 1},
        R={(0, 0): 1},
        ribbon={(0,): 1},
    )


def passes(qhopf, text):
    with tempfile.NamedTemporaryFile("w", suffix=".qha", delete=False) as f:
        f.write(text)
        path = f.name
    r = subprocess.run([qhopf, "check", path], capture_output=True, text=True)
    Path(path).unlink()
    return r.returncode == 0


def search_double(qhopf, name, omega, order, comment, idempotent_values, expect, simples):
    """Tries sign conventions and ribbon elements until the checker accepts."""
    chars = [c for _, c in simples]
    for antipode_sign, r_flip in itertools.product((False, True), (False, True)):
        for values in itertools.product(idempotent_values, repeat=len(chars)):
            if values[0] != 1:
                continue
            ribbon = ribbon_from_values(chars, values)
            if ribbon is None:
                continue
            text = double_file(name, omega, order, antipode_sign, r_flip, ribbon, comment)
            text = add_tail(text, expect, simples, order)
            if passes(qhopf, text):
                return text
    raise SystemExit(f"no convention for {name} passes the checker")


def ribbon_from_values(chars, values):
    """Solves sum_V values[V] p_V for the central element acting by values[V] on V."""
    n = len(chars)
    M = sp.Matrix([[chars[v][i] for i in range(n)] for v in range(n)])
    if M.det() == 0:
        return None
    coeffs = M.solve(sp.Matrix(values))
    return [sp.nsimplify(sp.expand(c)) for c in coeffs]


def add_tail(text, expect, simples, order):
    lines = text.rstrip("\n").split("\n")
    head_end = next(i for i, l in enumerate(lines) if l.startswith("flags"))
    lines.insert(head_end + 1, f"expect {expect}")
    lines += ["", "[simples]"]
    for label, ch in simples:
        lines.append(f"module {label} 1")
        for i, c in enumerate(ch):
            if c != 0:
                lines.append(f"{i} 0 0 = {literal(c, order)}")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qhopf", default="build/qhopf")
    ap.add_argument("--out", default="data/presets")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    trivial = dict(
        mult={(0, 0, 0): 1}, counit={(0,): 1}, coproduct={(0, 0, 0): 1}, antipode={(0, 0): 1},
        phi={(0, 0, 0): 1}, alpha={(0,): 1}, beta={(0,): 1}, R={(0, 0): 1}, ribbon={(0,): 1},
    )
    (out / "trivial.qha").write_text(render(
        "trivial", 1, 1, trivial,
        "The ground field Q as a Hopf algebra with R = 1 (x) 1.",
        expect="hopf factorisable semisimple", simples=[("one", [1])]))

    (out / "group_Z2_trivialR.qha").write_text(render(
        "group_Z2_trivialR", 2, 1, group_data(),
        "Group algebra Q[Z/2] in the basis e_0 = 1, e_1 = g, with the trivial\n"
        "R-matrix 1 (x) 1 and ribbon element 1. Rep is symmetric, hence not\n"
        "factorisable.",
        expect="hopf semisimple", simples=[("one", [1, 1]), ("sign", [1, -1])]))

    # Characters on e_{2a+s} = g^a K^s from (image of g, image of K).
    def chars(g, k):
        return [g ** a * k ** s for a in G for s in G]

    plain = lambda x, y, z: 1
    cocycle = lambda x, y, z: -1 if x == y == z == 1 else 1

    double_comment = (
        "Drinfeld double D(Q[Z/2]) (Drinfeld 1986; Kassel, Quantum Groups, IX.4).\n"
        "Basis e_{2a+s} = g^a (delta_0 + (-1)^s delta_1) with g the group\n"
        "generator and delta_x the dual basis. R = sum_x delta_x (x) g^x.\n"
        "Simples: one, e (g = -1), m (flux, delta_1), em.")
    double_simples = [("one", chars(1, 1)), ("e", chars(-1, 1)), ("m", chars(1, -1)), ("em", chars(-1, -1))]
    text = search_double(args.qhopf, "double_Z2", plain, 1, double_comment, (1, -1),
                         "hopf factorisable semisimple", double_simples)
    (out / "double_Z2.qha").write_text(text)

    twisted_comment = (
        "Twisted double D^omega(Z/2) with omega(x,y,z) = (-1)^{xyz}\n"
        "(Dijkgraaf, Pasquier, Roche 1990), over Q(zeta_4). Basis\n"
        "e_{2a+s} = g^a (delta_0 + (-1)^s delta_1); the algebra is Q[Z/4]\n"
        "generated by g with g^2 = delta_0 - delta_1. Phi = sum omega(x,y,z)^-1\n"
        "delta_x (x) delta_y (x) delta_z, beta = sum omega(x,x,x) delta_x.\n"
        "Simples: one, b (g = -1), s (g = zeta_4), sbar (g = -zeta_4).")
    tw_simples = [("one", chars(1, 1)), ("b", chars(-1, 1)), ("s", chars(I, -1)), ("sbar", chars(-I, -1))]
    text = search_double(args.qhopf, "twisted_double_Z2", cocycle, 4, twisted_comment, (1, -1, I, -I),
                         "factorisable semisimple", tw_simples)
    (out / "twisted_double_Z2.qha").write_text(text)


if __name__ == "__main__":
    sys.exit(main())
