"""The junction product and its three-way splitting.

The product of two basis words is computed by a recursion on how the
words meet at the junction: letter runs merge into one run, a letter
against a bracket juxtaposes, and two brackets expand by the rewriting
rule that also defines the bracket operator N.  On top of the product
sit four derived operations: prec, succ, bullet, and their sum star.
"""

from nijenhuis import (
    OpSymbol,
    LinComb,
    derived_op,
    generators,
    letter_word,
    operator_n,
    product,
)


def show(label: str, value: LinComb) -> None:
    print(f"  {label} = {value}")


def main() -> None:
    x, y = generators("x", "y")
    wx = letter_word(x)
    wy = letter_word(y)
    nx = operator_n(LinComb.from_word(wx))
    ny = operator_n(LinComb.from_word(wy))
    ax = LinComb.from_word(wx)
    ay = LinComb.from_word(wy)

    print("junction cases")
    show("x * y", product(ax, ay))
    show("x * [y]", product(ax, ny))
    show("[x] * y", product(nx, ay))
    # the bracket-bracket case is where all the structure lives
    show("[x] * [y]", product(nx, ny))

    print()
    print("derived splitting operations on x, y")
    for op in OpSymbol:
        show(f"x {op.value} y", derived_op(op, ax, ay))

    print()
    print("N is multiplicative over star:")
    star = derived_op(OpSymbol.STAR, ax, ay)
    show("N(x star y)", operator_n(star))
    show("N(x) * N(y)", product(nx, ny))
    assert operator_n(star) == product(nx, ny)

    print()
    print("deeper nesting still cancels exactly:")
    nnx = operator_n(nx)
    show("[[x]] * [y]", product(nnx, ny))


if __name__ == "__main__":
    main()
