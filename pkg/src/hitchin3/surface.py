from enum import Enum


class SurfaceKind(Enum):
    """The two parabolic base surfaces, both of genus 0.

    AFFINE_LINE is (P^1, {inf}) with differentials written against dz;
    PUNCTURED_LINE is (P^1, {0, inf}) with differentials against dz/z.
    """

    AFFINE_LINE = "affine_line"
    PUNCTURED_LINE = "punctured_line"

    @property
    def genus(self) -> int:
        return 0

    @property
    def punctures(self) -> tuple["Puncture", ...]:
        if self is SurfaceKind.AFFINE_LINE:
            return (Puncture.INFINITY,)
        return (Puncture.ZERO, Puncture.INFINITY)


class Puncture(Enum):
    ZERO = "0"
    INFINITY = "inf"
