"""Linear tree equations ``aX + C = 1`` and ``aX + bY + C = 1``.

Both reduce to integer problems on the multiplicities of each distinct root
subtree of ``C`` (its shape classes).  Every returned solution is checked by
evaluating the equation with the tree operations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd, isqrt

from .arith import SignedTree, UndefinedOperation, add, scalar_mul, signed
from .core import ONE, CanonTree

__all__ = [
    "ClassAssignment",
    "LinearSolution",
    "NoSolution",
    "ShapeClass",
    "check_eq4_necessary",
    "ext_gcd",
    "min_positive_solution",
    "quasi_pythagorean",
    "shape_classes",
    "solve_eq2",
    "solve_eq3",
]


class NoSolution(ValueError):
    def __init__(self, message: str, diagnosis: list[str] | None = None):
        super().__init__(message)
        self.diagnosis = diagnosis or []


@dataclass(frozen=True)
class ShapeClass:
    shape: CanonTree
    cardinality: int


@dataclass(frozen=True)
class ClassAssignment:
    shape: CanonTree
    c: int
    x: int
    y: int = 0


@dataclass(frozen=True)
class LinearSolution:
    a: int
    b: int | None
    c: SignedTree
    x: SignedTree
    y: SignedTree | None
    classes: tuple[ClassAssignment, ...]
    condition: str  # "eq2", "1", "2"
    split: bool = False
    degenerate: bool = False
    notes: tuple[str, ...] = field(default=())

    def residual(self) -> SignedTree:
        """``aX (+ bY) + C``; equals the single vertex for a valid solution."""
        lhs = scalar_mul(self.a, self.x)
        if self.y is not None:
            lhs = add(lhs, scalar_mul(self.b, self.y))
        return add(lhs, self.c)

    def is_valid(self) -> bool:
        try:
            return self.residual().is_one
        except UndefinedOperation:
            return False

    def vertex_relation(self) -> bool:
        """Vertex count identity with signs: ``a m_X + b m_Y + m_C = 0``, ``m = sign (n - 1)``."""

        def m(t: SignedTree) -> int:
            return t.sign * (t.size - 1)

        total = self.a * m(self.x) + m(self.c)
        if self.y is not None:
            total += self.b * m(self.y)
        return total == 0

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "C": str(self.c),
            "X": str(self.x),
            "Y": None if self.y is None else str(self.y),
            "condition": self.condition,
            "split": self.split,
            "degenerate": self.degenerate,
            "classes": [
                {"shape": k.shape.code, "c": k.c, "x": k.x, "y": k.y} for k in self.classes
            ],
            "notes": list(self.notes),
        }


def shape_classes(c: SignedTree | CanonTree) -> list[ShapeClass]:
    c = signed(c)
    return [ShapeClass(s, m) for s, m in sorted(Counter(c.tree.children).items())]


def _build(counts: dict[CanonTree, int], sign: int) -> SignedTree:
    kids = [s for s, m in counts.items() for _ in range(m)]
    return SignedTree(CanonTree(kids), sign)


def _finish(sol: LinearSolution) -> LinearSolution:
    if not sol.is_valid():
        raise AssertionError(f"solver produced an invalid solution: {sol.to_dict()}")
    return sol


def solve_eq2(a: int, c: SignedTree | CanonTree) -> LinearSolution:
    """The unique ``X`` with ``aX + C = 1``."""
    if a < 1:
        raise ValueError("a must be >= 1")
    c = signed(c)
    classes = shape_classes(c)
    bad = [f"{k.shape.code}: {k.cardinality} copies, not divisible by {a}"
           for k in classes if k.cardinality % a]
    if bad:
        raise NoSolution(f"aX + C = 1 has no solution for a = {a}", bad)
    x = _build({k.shape: k.cardinality // a for k in classes}, -c.sign)
    return _finish(LinearSolution(
        a=a, b=None, c=c, x=x, y=None,
        classes=tuple(ClassAssignment(k.shape, k.cardinality, k.cardinality // a) for k in classes),
        condition="eq2",
        degenerate=x.is_one,
    ))


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, u, v)`` with ``a u + b v = g = gcd(a, b)``."""
    u0, v0, u1, v1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return a, u0, v0


def min_positive_solution(a: int, b: int, c: int) -> tuple[int, int] | None:
    """Smallest ``(x, y)`` with ``x, y >= 1`` and ``a x - b y = c``, or None."""
    g, u, v = ext_gcd(a, b)
    if c % g:
        return None
    x0, y0 = u * (c // g), -v * (c // g)
    sx, sy = b // g, a // g
    # -((-n) // d) is ceil(n / d)
    t = max(-((x0 - 1) // sx), -((y0 - 1) // sy))
    return x0 + sx * t, y0 + sy * t


def _two_coin_options(c: int, a: int, b: int) -> list[tuple[int, int]]:
    return [(g, (c - g * a) // b) for g in range(c // a, -1, -1) if (c - g * a) % b == 0]


def _condition1(a: int, b: int, c: SignedTree, classes: list[ShapeClass]):
    options = [_two_coin_options(k.cardinality, a, b) for k in classes]
    bad = [f"{k.shape.code}: {k.cardinality} is not g*{a} + h*{b}"
           for k, opt in zip(classes, options) if not opt]
    if bad:
        return None, bad

    def default(opt):
        for pick in opt:
            if pick[1] == 0:
                return pick
        for pick in opt:
            if pick[0] == 0:
                return pick
        return opt[0]

    choice = [default(opt) for opt in options]

    def has_x(ch):
        return any(g for g, _ in ch)

    def has_y(ch):
        return any(h for _, h in ch)

    if not has_y(choice):
        for i in reversed(range(len(choice))):
            pure_y = [p for p in options[i] if p[0] == 0]
            trial = choice[:i] + pure_y[:1] + choice[i + 1:]
            if pure_y and has_x(trial):
                choice = trial
                break
        else:
            for i in reversed(range(len(choice))):
                mixed = [p for p in options[i] if p[0] and p[1]]
                if mixed:
                    choice[i] = mixed[0]
                    break

    x = _build({k.shape: g for k, (g, _) in zip(classes, choice)}, -c.sign)
    y = _build({k.shape: h for k, (_, h) in zip(classes, choice)}, -c.sign)
    split = any(g and h for g, h in choice)
    notes = []
    if split:
        notes.append("a shape class is shared between X and Y")
    sol = LinearSolution(
        a=a, b=b, c=c, x=x, y=y,
        classes=tuple(ClassAssignment(k.shape, k.cardinality, g, h)
                      for k, (g, h) in zip(classes, choice)),
        condition="1", split=split, degenerate=x.is_one or y.is_one,
        notes=tuple(notes),
    )
    return sol, []


def _condition2(a: int, b: int, classes: list[ShapeClass]):
    """Per-class (x_i, y_i) with ``a x_i - b y_i = c_i`` on shared classes, ``a x_i = c_i`` elsewhere."""
    shared = [i for i, k in enumerate(classes) if k.cardinality % a]
    if not shared:
        # at least one class must be shared for Y to be non-trivial
        shared = [0]
    bad = []
    picks = {}
    for i in shared:
        sol = min_positive_solution(a, b, classes[i].cardinality)
        if sol is None:
            bad.append(f"{classes[i].shape.code}: {classes[i].cardinality} "
                       f"not divisible by gcd({a}, {b}) = {gcd(a, b)}")
        else:
            picks[i] = sol
    if bad:
        return None, bad
    out = []
    for i, k in enumerate(classes):
        out.append(picks.get(i, (k.cardinality // a, 0)))
    return out, []


def solve_eq3(a: int, b: int, c: SignedTree | CanonTree) -> LinearSolution:
    """Some ``X, Y`` with ``aX + bY + C = 1``; same-sign solutions are preferred."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    c = signed(c)
    classes = shape_classes(c)
    if not classes:
        return _finish(LinearSolution(a=a, b=b, c=c, x=SignedTree(ONE), y=SignedTree(ONE),
                                      classes=(), condition="1", degenerate=True))
    sol, diag1 = _condition1(a, b, c, classes)
    if sol is not None:
        return _finish(sol)

    diag2 = []
    for swap in (False, True):
        p, q = (b, a) if swap else (a, b)
        mults, bad = _condition2(p, q, classes)
        if mults is None:
            diag2 += [f"({'Y' if swap else 'X'} extra) {d}" for d in bad]
            continue
        extra = _build({k.shape: m[0] for k, m in zip(classes, mults)}, -c.sign)
        other = _build({k.shape: m[1] for k, m in zip(classes, mults)}, c.sign)
        x, y = (other, extra) if swap else (extra, other)
        assigns = tuple(
            ClassAssignment(k.shape, k.cardinality, *((m[1], m[0]) if swap else m))
            for k, m in zip(classes, mults)
        )
        return _finish(LinearSolution(
            a=a, b=b, c=c, x=x, y=y, classes=assigns, condition="2",
            degenerate=x.is_one or y.is_one,
            notes=("Y carries the extra groups",) if swap else (),
        ))
    raise NoSolution(
        f"aX + bY + C = 1 has no solution for a = {a}, b = {b}",
        [f"condition 1: {d}" for d in diag1] + [f"condition 2: {d}" for d in diag2],
    )


def check_eq4_necessary(a: int, b: int, c: SignedTree | CanonTree) -> tuple[bool, list[tuple[int, int]]]:
    """Integer pairs ``n_X, n_Y >= 1`` with ``a n_X^2 + b n_Y = n_C + a + b - 1``."""
    c = signed(c)
    rhs = c.size + a + b - 1
    witnesses = []
    nx = 1
    while a * nx * nx + b <= rhs:
        rest = rhs - a * nx * nx
        if rest % b == 0:
            witnesses.append((nx, rest // b))
        nx += 1
    return bool(witnesses), witnesses


def quasi_pythagorean(limit: int) -> list[tuple[int, int, int]]:
    """Triples ``x <= y <= z <= limit`` with ``x^2 + y^2 - 1 = z^2``.

    ``x = 1`` gives the degenerate family ``(1, k, k)``; otherwise ``y < z``.
    """
    out = []
    for x in range(1, limit + 1):
        for y in range(x, limit + 1):
            z2 = x * x + y * y - 1
            z = isqrt(z2)
            if z * z == z2 and y <= z <= limit:
                out.append((x, y, z))
    return out
