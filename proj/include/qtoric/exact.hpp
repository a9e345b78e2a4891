#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace qtoric {

/// Exact integer scalar used throughout; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Vec3I = Eigen::Matrix<Int, 3, 1>;

/// The field with two elements. Distinct type so mod-2 and integral
/// polynomials cannot be mixed silently.
struct Z2 {
    std::uint8_t v = 0;

    constexpr Z2() = default;
    constexpr explicit Z2(int x) : v(static_cast<std::uint8_t>(x & 1)) {}
    explicit Z2(const Int& x) : v(static_cast<std::uint8_t>(x % 2 != 0)) {}

    friend constexpr Z2 operator+(Z2 a, Z2 b) { return Z2(a.v ^ b.v); }
    friend constexpr Z2 operator-(Z2 a, Z2 b) { return Z2(a.v ^ b.v); }
    friend constexpr Z2 operator*(Z2 a, Z2 b) { return Z2(a.v & b.v); }
    constexpr Z2 operator-() const { return *this; }
    Z2& operator+=(Z2 o) { v ^= o.v; return *this; }
    Z2& operator-=(Z2 o) { v ^= o.v; return *this; }
    Z2& operator*=(Z2 o) { v &= o.v; return *this; }
    friend constexpr bool operator==(Z2 a, Z2 b) { return a.v == b.v; }
    friend constexpr bool operator!=(Z2 a, Z2 b) { return a.v != b.v; }

    bool is_zero() const { return v == 0; }
    std::string str() const { return v ? "1" : "0"; }
};

inline bool is_zero(const Int& x) { return x == 0; }
inline bool is_zero(Z2 x) { return x.is_zero(); }
inline std::string coeff_str(const Int& x) { return x.str(); }
inline std::string coeff_str(Z2 x) { return x.str(); }

// Matrix operator== is unusable with cpp_int scalars (Boost/Eigen overload
// clash), so equality and products go through free functions.
template <class DerivedA, class DerivedB>
bool matrices_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    return a.lazyProduct(b);
}

}  // namespace qtoric
