#pragma once

namespace twistderiv {

// 2x2 matrix [[a, b], [c, d]] over any ring (double, complex, Jet).
template <typename T>
struct Mat2 {
    T a, b, c, d;

    [[nodiscard]] T trace() const { return a + d; }
    [[nodiscard]] T det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

    template <typename S>
    friend Mat2 operator*(const S& s, const Mat2& x)
    {
        return {s * x.a, s * x.b, s * x.c, s * x.d};
    }
};

} // namespace twistderiv
