"""The three specializations of symmetric functions used here.

Each is fixed by the images of the complete homogeneous functions ``h_i``;
(skew) Schur images follow from the Jacobi-Trudi determinant, and the
straight-shape images also have closed hook-content products.

* ``phi-t``     : ``h_i -> binomial(t + i - 1, i)`` in ``Q[t]``.
* ``q-hat``     : principal specialization with ``y = q**t``, in ``Q(q)[y]``.
* ``q-diamond`` : the rescaled substitution ``q**t -> 1/((1 - q) y + 1)``,
  ``h_i -> prod_j (y + [j-1]_q)/[j]_q`` in ``Q(q)[y]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_arith import QQ, QQ_q, Poly, RationalFunction, q_integer
from .linalg import bareiss_determinant
from .shapes import BorderStrip, Partition, SkewShape, hook_lengths, ribbon_to_skew


@dataclass(frozen=True)
class Specialization:
    name: str
    var: str
    field: object

    def __repr__(self) -> str:
        return f"Specialization({self.name!r})"

    @property
    def is_q_analogue(self) -> bool:
        return self.field is QQ_q

    def zero(self) -> Poly:
        return Poly((), self.field, self.var)

    def one(self) -> Poly:
        return Poly((1,), self.field, self.var)

    def h(self, i: int) -> Poly:
        return specialized_h(self, i)

    def linear_factor(self, content: int) -> Poly:
        """The factor a cell of the given content contributes to a hook-content
        product: ``t + c``, ``1 - q**c y`` or ``y + [c]_q``."""
        return _linear_factor(self, content)

    def hook_factor(self, hook: int):
        """Field element a hook length contributes to the denominator."""
        if self.name == "phi-t":
            return Fraction(hook)
        if self.name == "q-hat":
            return RationalFunction.constant(1) - RationalFunction.q_power(hook)
        return q_integer(hook)


PHI_T = Specialization("phi-t", "t", QQ)
Q_HAT = Specialization("q-hat", "y", QQ_q)
Q_DIAMOND = Specialization("q-diamond", "y", QQ_q)

SPECIALIZATIONS = {s.name: s for s in (PHI_T, Q_HAT, Q_DIAMOND)}


def get_specialization(name: str | Specialization) -> Specialization:
    if isinstance(name, Specialization):
        return name
    try:
        return SPECIALIZATIONS[name]
    except KeyError:
        raise ValueError(
            f"unknown specialization {name!r}; choose from {', '.join(SPECIALIZATIONS)}"
        ) from None


@lru_cache(maxsize=None)
def _linear_factor(s: Specialization, c: int) -> Poly:
    if s.name == "phi-t":
        return Poly((c, 1), QQ, s.var)
    if s.name == "q-hat":
        return Poly((1, -RationalFunction.q_power(c)), QQ_q, s.var)
    return Poly((q_integer(c), 1), QQ_q, s.var)


@lru_cache(maxsize=None)
def specialized_h(s: Specialization, i: int) -> Poly:
    """Image of ``h_i``; zero for ``i < 0`` and one for ``i = 0``."""
    if i < 0:
        return s.zero()
    if i == 0:
        return s.one()
    prev = specialized_h(s, i - 1)
    if s.name == "phi-t":
        return (prev * Poly((i - 1, 1), QQ, s.var)).scale(Fraction(1, i))
    if s.name == "q-hat":
        step = Poly((1, -RationalFunction.q_power(i - 1)), QQ_q, s.var)
        return (prev * step).scale((RationalFunction.constant(1) - RationalFunction.q_power(i)).inverse())
    step = Poly((q_integer(i - 1), 1), QQ_q, s.var)
    return (prev * step).scale(q_integer(i).inverse())


def jacobi_trudi_rows(s: Specialization, outer, inner=()) -> list[list[Poly]]:
    """``(h_{outer_i - inner_j - i + j})`` specialized; ``outer`` may be any
    integer sequence, ``inner`` is padded with zeros."""
    outer = list(outer)
    n = len(outer)
    inner = list(inner) + [0] * (n - len(inner))
    return [[specialized_h(s, outer[i] - inner[j] - i + j) for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _skew_schur(s: Specialization, outer: tuple[int, ...], inner: tuple[int, ...]) -> Poly:
    if not outer:
        return s.one()
    return bareiss_determinant(jacobi_trudi_rows(s, outer, inner))


def specialized_skew_schur(s: Specialization, shape: SkewShape | Partition) -> Poly:
    """Image of ``s_{outer/inner}`` by the skew Jacobi-Trudi determinant."""
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    return _skew_schur(s, shape.outer.parts, shape.inner.parts)


def hook_content_eval(s: Specialization, p: Partition) -> Poly:
    """Closed-form image of ``s_p`` as a product over cells."""
    result = s.one()
    denom = s.field.one
    for cell, h in hook_lengths(p).items():
        result = result * s.linear_factor(cell.content)
        denom = denom * s.hook_factor(h)
    if s.is_q_analogue:
        denom = denom / RationalFunction.q_power(p.weighted_size)
    return result.scale(s.field.one / denom)


def ribbon_schur(s: Specialization, seg: BorderStrip | None) -> Poly:
    """Image of the Schur function of a cutting-strip segment: 0 when
    undefined (``None``), 1 for the empty strip."""
    if seg is None:
        return s.zero()
    if not seg:
        return s.one()
    shape, _ = ribbon_to_skew(seg)
    return specialized_skew_schur(s, shape)


def back_substitute(image: Poly, t: int) -> RationalFunction:
    """Evaluate a ``Q(q)[y]`` image at ``y = q**t``."""
    return image(RationalFunction.q_power(t))


def at_q_equal_one(image: Poly, var: str = "t") -> Poly:
    """Set ``q = 1`` in every coefficient of a ``Q(q)[y]`` element."""
    return image.map_coeffs(lambda c: c.evaluate(1), QQ, var)
