"""Regenerate the JSON fixtures shipped inside the package.

Everything is seeded and deterministic.  The curated null-surgery sequences
are found by a bounded search at generation time; the shipped artifact only
ever verifies them.  Run from the repository root:

    python3 tools/make_fixtures.py
"""

from __future__ import annotations

import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from surgery_algebra import (  # noqa: E402
    complexes as cx,
    formations as fm,
    forms,
    matrices as mx,
    plumbing as pl,
    rings,
    serialize as sz,
    unitary as un,
)

Z = rings.integers()
FIXDIR = os.path.join(os.path.dirname(__file__), "..", "src", "surgery_algebra", "fixtures")

E8_ROWS = [
    [2, 0, 0, 1, 0, 0, 0, 0],
    [0, 2, 1, 0, 0, 0, 0, 0],
    [0, 1, 2, 1, 0, 0, 0, 0],
    [1, 0, 1, 2, 1, 0, 0, 0],
    [0, 0, 0, 1, 2, 1, 0, 0],
    [0, 0, 0, 0, 1, 2, 1, 0],
    [0, 0, 0, 0, 0, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 1, 2],
]


def write(name: str, obj) -> None:
    path = os.path.join(FIXDIR, name)
    sz.write_json(path, obj)
    print("wrote", os.path.relpath(path))


def random_word(rng: random.Random, eps: int, k: int, length: int) -> un.UnitaryAutomorphism:
    u = un.identity_unitary(Z, eps, k)
    for _ in range(length):
        kind = rng.randrange(4)
        if kind == 0:
            a = mx.identity_matrix(Z, k)
            for _ in range(2):
                i, j = rng.randrange(k), rng.randrange(k)
                if i != j:
                    rows = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
                    rows[i][j] = rng.randint(-2, 2)
                    a = a.mul(mx.matrix(Z, rows))
            g = un.elementary_diag(a, eps)
        elif kind == 1:
            t = mx.matrix(Z, [[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)])
            g = un.elementary_lower(t.sub(t.star().scale_int(eps)), eps)
        elif kind == 2:
            t = mx.matrix(Z, [[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)])
            g = un.elementary_upper(t.sub(t.star().scale_int(eps)), eps)
        else:
            g = un.sigma_eps(Z, eps, k)
        u = un.compose(u, g)
    return u


def find_null_surgery(rng: random.Random, c: cx.OddComplex, budget: int = 6000):
    """Bounded search for surgery data whose effect is contractible."""
    k = c.rank_top
    for trial in range(budget):
        m = rng.choice([max(1, k - 1), k, k, k + 1, k + 2])
        j = mx.matrix(Z, [[rng.randint(-2, 2) for _ in range(k)] for _ in range(m)])
        delta = mx.matrix(Z, [[rng.randint(-1, 1) for _ in range(m)] for _ in range(m)])
        s = cx.SurgeryData(j, delta)
        if not cx.surgery_admissible(c, s):
            continue
        effect, cob = cx.surgery_on_complex(c, s)
        if not cx.validate_cobordism(c, effect, cob):
            continue
        if cx.is_contractible(effect):
            return s
    return None


def random_valid_surgery(rng: random.Random, c: cx.OddComplex, budget: int = 2000):
    k = c.rank_top
    for trial in range(budget):
        m = rng.choice([1, k])
        j = mx.matrix(Z, [[rng.randint(-1, 1) for _ in range(k)] for _ in range(m)])
        delta = mx.matrix(Z, [[rng.randint(-1, 1) for _ in range(m)] for _ in range(m)])
        s = cx.SurgeryData(j, delta)
        if not cx.surgery_admissible(c, s):
            continue
        effect, cob = cx.surgery_on_complex(c, s)
        if cx.validate_cobordism(c, effect, cob) and not cx.is_contractible(effect):
            return s
    return None


def make_null_sequences(count: int = 20):
    made = 0
    seed = 0
    while made < count:
        seed += 1
        rng = random.Random(500 + seed)
        parity = made % 2
        eps = 1 if parity == 0 else -1
        k = 1 + made % 3
        u = random_word(rng, eps, k, rng.randint(3, 7))
        phi = fm.formation_from_automorphism(u)
        c = fm.formation_to_complex(phi)
        steps = []
        current = c
        if made % 5 == 4:
            pre = random_valid_surgery(rng, current)
            if pre is None:
                continue
            steps.append(pre)
            current, _ = cx.surgery_on_complex(current, pre)
        s = find_null_surgery(rng, current)
        if s is None:
            continue
        steps.append(s)
        # verify the whole sequence end to end before freezing it
        check = c
        for st in steps:
            effect, cob = cx.surgery_on_complex(check, st)
            assert cx.validate_cobordism(check, effect, cob)
            check = effect
        assert cx.is_contractible(check)
        obj = {
            "complex": sz.complex_to_obj(c),
            "automorphism": sz.unitary_to_obj(u),
            "surgeries": [sz.surgery_to_obj(st) for st in steps],
        }
        write(f"null-sequence-{made:02d}.json", obj)
        made += 1


def main():
    os.makedirs(FIXDIR, exist_ok=True)

    e8 = forms.quadratic_form(Z, 1, E8_ROWS, [1] * 8)
    write("e8.json", sz.form_to_obj(e8))

    arf = forms.quadratic_form(Z, -1, [[0, 1], [-1, 0]], [1, 1])
    write("arf.json", sz.form_to_obj(arf))

    for k in (1, 2):
        write(f"hyperbolic-plus-{k}.json", sz.form_to_obj(forms.hyperbolic_quadratic(Z, 1, k)))
        write(f"hyperbolic-minus-{k}.json", sz.form_to_obj(forms.hyperbolic_quadratic(Z, -1, k)))

    write("e8-graph.json", sz.graph_to_obj(pl.e8_graph()))
    write("empty-graph.json", sz.graph_to_obj(pl.plumbing_graph(0, (), ())))
    write("i-graph-untwisted.json", sz.graph_to_obj(pl.plumbing_graph(1, (0, 0), ((0, 1),))))
    write("i-graph-twisted.json", sz.graph_to_obj(pl.plumbing_graph(1, (1, 1), ((0, 1),))))

    # surgeries on the empty complex: the sphere stays a product for
    # delta = 0 and becomes the unit tangent bundle for delta = 1
    for parity in (0, 1):
        zero = cx.zero_complex(Z, parity)
        for delta in (0, 1):
            s = cx.SurgeryData(mx.zero_matrix(Z, 1, 0), mx.matrix(Z, [[delta]]))
            effect, cob = cx.surgery_on_complex(zero, s)
            assert cx.validate_cobordism(zero, effect, cob)
            obj = {
                "complex": sz.complex_to_obj(zero),
                "surgeries": [sz.surgery_to_obj(s)],
                "effect": sz.complex_to_obj(effect),
            }
            write(f"zero-surgery-p{parity}-d{delta}.json", obj)

    make_null_sequences()


if __name__ == "__main__":
    main()
