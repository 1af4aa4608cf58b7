"""Constructors for the small algebras used by the commands and the tests."""

from opcalc.model.endop import AlgebraSpec, make_operation, tabulate


def scalar_model(m=1):
    """K with multiplication x·y = m x y."""
    return AlgebraSpec(1, make_operation(1, 2, [m]), "scalar")


def dual_numbers():
    """K[x]/(x²) on the basis e1 = 1, e2 = x."""
    return AlgebraSpec(2, make_operation(2, 2, [1, 0, 0, 1, 0, 1, 0, 0]), "dual_numbers")


def dual_numbers_derivation():
    """D(e1) = 0, D(e2) = e2, spanning the outer derivations of the dual numbers."""
    return make_operation(2, 1, [0, 0, 0, 1])


def matrix_algebra(n=2):
    """n×n matrices on the basis E_ab (index a·n + b), E_ab E_cd = δ_bc E_ad."""
    d = n * n

    def product(inputs):
        (a, b), (c, e) = divmod(inputs[0], n), divmod(inputs[1], n)
        values = [0] * d
        if b == c:
            values[a * n + e] = 1
        return values

    return AlgebraSpec(d, tabulate(d, 2, product), f"mat{n}")


def diagonal_algebra():
    """K × K with componentwise multiplication."""
    return AlgebraSpec(2, make_operation(2, 2, [1, 0, 0, 0, 0, 0, 0, 1]), "diagonal")


def zero_algebra(d=2):
    return AlgebraSpec(d, make_operation(d, 2, [0] * d**3), "zero")


def nonassociative_demo():
    """e1e1 = e2, e1e2 = e1, e2e1 = 0, e2e2 = e1; (e1e1)e1 = 0 while e1(e1e1) = e1."""
    return AlgebraSpec(2, make_operation(2, 2, [0, 1, 1, 0, 0, 0, 1, 0]), "nonassoc_demo")
