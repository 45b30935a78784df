"""Smoke test for the tinvariant_py extension.

Build first with `cargo build -p tinvariant-py` (or `--release`), then run
`python3 python/smoke_test.py`. If `tinvariant_py` is not importable the
script loads the library straight from target/.
"""

import importlib.machinery
import importlib.util
import pathlib
import sys


def load():
    try:
        import tinvariant_py

        return tinvariant_py
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libtinvariant_py.so"
        if lib.exists():
            loader = importlib.machinery.ExtensionFileLoader("tinvariant_py", str(lib))
            spec = importlib.util.spec_from_loader("tinvariant_py", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("tinvariant_py not built; run `cargo build -p tinvariant-py`")


def main():
    t = load()
    G = t.GoldenNum

    eps = G(0, 1)
    assert eps * eps == eps + G(1)
    assert t.GoldenNum.eps_pow(-7) == G(0, 0, 5, -3)
    assert abs(float(eps) - 1.6180339887) < 1e-9

    assert t.t_invariant("-1; (2,1) (2,1) (2,1)") == G(3, 1)
    assert t.t_invariant("-1; (5,2) (0,1) (1,1)") == G(0)
    p = t.SeifertPresentation.parse("-1; (2,1) (2,1) (3,2)")
    assert p.t_invariant() == p.t_closed() == G(3, 2)
    assert p.h1() == ([8], 0) and p.h1_str() == "Z_8"
    assert p.normalize() == p
    assert t.SeifertPresentation(0, [(2, 1), (2, 1), (1, 0)]).b == 0

    try:
        t.SeifertPresentation.parse("-1; (2,2) (2,1) (3,2)")
    except ValueError as e:
        assert "fiber 1 not coprime" in str(e)
    else:
        raise AssertionError("expected ValueError")

    assert t.fiber_word(7, 3) == "AABB"
    assert t.class_of(7, 3) == t.FiberClass(2, 3)
    assert t.fiber_vector(7, 3) == t.FiberClass(2, 3).vector()
    assert t.lens_t(2, 1) == G(1, 1)

    assert len(t.orbit()) == 12
    assert len(t.FiberClass.all()) == 12
    c = t.constants()
    assert set(c) == {"phi_e", "phi_j", "phi_t", "phi_23", "phi_13"}

    rows = t.sweep()
    assert len(rows) == 364
    values = t.distinct_values()
    assert len(values) == 12
    assert all(r[1].t_invariant() == r[2] for r in rows[:20])
    assert "L(5,2)" in t.reconcile()

    checks = t.selfcheck(3)
    assert len(checks) == 10 and all(passed for _, _, passed, _ in checks), checks

    print("distinct values:", ", ".join(str(v) for v in values))
    print("smoke test ok")


if __name__ == "__main__":
    main()
