"""Exact rational tensors stored as an integer array over one denominator."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import kernels


class QTensor:
    __slots__ = ("num", "den")

    def __init__(self, num: np.ndarray, den: int = 1, normalize: bool = True):
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.num = num
        self.den = den
        if normalize and den != 1:
            self._reduce()

    def _reduce(self):
        g = self.den
        for v in self.num.flat:
            if v:
                g = math.gcd(g, v)
                if g == 1:
                    return
        if g > 1:
            self.num = self.num // g
            self.den //= g

    @classmethod
    def zeros(cls, shape) -> "QTensor":
        return cls(np.zeros(shape, dtype=object), 1, normalize=False)

    @classmethod
    def from_fractions(cls, arr) -> "QTensor":
        a = np.asarray(arr, dtype=object)
        den = 1
        for v in a.flat:
            den = math.lcm(den, Fraction(v).denominator)
        num = np.empty(a.shape, dtype=object)
        for idx, v in np.ndenumerate(a):
            f = Fraction(v)
            num[idx] = f.numerator * (den // f.denominator)
        return cls(num, den, normalize=False)

    @classmethod
    def identity(cls, n: int) -> "QTensor":
        num = np.zeros((n, n), dtype=object)
        for i in range(n):
            num[i, i] = 1
        return cls(num, 1, normalize=False)

    def to_fractions(self) -> np.ndarray:
        out = np.empty(self.num.shape, dtype=object)
        for idx, v in np.ndenumerate(self.num):
            out[idx] = Fraction(v, self.den)
        return out

    def __getitem__(self, idx) -> Fraction:
        return Fraction(self.num[idx], self.den)

    @property
    def shape(self):
        return self.num.shape

    def is_zero(self) -> bool:
        return not any(self.num.flat)

    def reshape(self, *shape) -> "QTensor":
        return QTensor(self.num.reshape(*shape), self.den, normalize=False)

    def transpose(self, *axes) -> "QTensor":
        return QTensor(np.ascontiguousarray(self.num.transpose(*axes)), self.den, normalize=False)

    def __neg__(self) -> "QTensor":
        return QTensor(-self.num, self.den, normalize=False)

    def __add__(self, other: "QTensor") -> "QTensor":
        if self.den == other.den:
            return QTensor(self.num + other.num, self.den)
        d = math.lcm(self.den, other.den)
        return QTensor(self.num * (d // self.den) + other.num * (d // other.den), d)

    def __sub__(self, other: "QTensor") -> "QTensor":
        return self + (-other)

    def scale(self, c) -> "QTensor":
        c = Fraction(c)
        if c == 1:
            return self
        return QTensor(self.num * c.numerator, self.den * c.denominator)

    def mul_elementwise_int(self, signs: np.ndarray) -> "QTensor":
        return QTensor(self.num * signs, self.den, normalize=False)

    def matmul(self, other: "QTensor") -> "QTensor":
        return QTensor(kernels.matmul(self.num, other.num), self.den * other.den)

    def equals(self, other: "QTensor") -> bool:
        return self.shape == other.shape and not (self - other).num.any()

    def mismatch_mask(self, other: "QTensor") -> np.ndarray:
        """Boolean array over all axes but the last: True where vectors differ."""
        diff = (self - other).num
        if diff.ndim == 0:
            return np.asarray(bool(diff))
        return (diff != 0).any(axis=-1)
