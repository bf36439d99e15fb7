#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt(D)), plus 3-vectors and
// 3x3 matrices over it. Every geometric decision in the library (incidence,
// planarity, angular order) goes through these types.

#include <array>
#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace regpoly {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// a + b*sqrt(D). Arithmetic between different radicands throws; a
// default-constructed zero (radicand 0) adopts the radicand of its partner.
class ExactNumber {
public:
    ExactNumber() = default;
    explicit ExactNumber(int radicand);
    ExactNumber(Rational a, Rational b, int radicand);

    static ExactNumber rational(Rational a, int radicand) { return {std::move(a), 0, radicand}; }
    // sqrt(D) itself
    static ExactNumber root(int radicand) { return {0, 1, radicand}; }
    // (1 + sqrt(5)) / 2
    static ExactNumber golden_ratio();

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int radicand() const { return radicand_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    ExactNumber inverse() const;

    ExactNumber operator-() const { return {-a_, -b_, radicand_}; }
    ExactNumber& operator+=(const ExactNumber& o);
    ExactNumber& operator-=(const ExactNumber& o);
    ExactNumber& operator*=(const ExactNumber& o);
    ExactNumber& operator/=(const ExactNumber& o);

    friend ExactNumber operator+(ExactNumber x, const ExactNumber& y) { return x += y; }
    friend ExactNumber operator-(ExactNumber x, const ExactNumber& y) { return x -= y; }
    friend ExactNumber operator*(ExactNumber x, const ExactNumber& y) { return x *= y; }
    friend ExactNumber operator/(ExactNumber x, const ExactNumber& y) { return x /= y; }

    friend bool operator==(const ExactNumber& x, const ExactNumber& y);

    long double to_long_double() const;
    // Round-to-nearest decimal rendering with the given significant digits.
    std::string to_decimal(int significant_digits = 17) const;
    // "a + b*sqrt(D)" with reduced fractions, e.g. "1/2 + 1/2*sqrt(5)".
    std::string to_string() const;

private:
    void require_same_field(const ExactNumber& o) const;

    Rational a_{0};
    Rational b_{0};
    int radicand_ = 0;
};

int sign(const ExactNumber& x);
// Total order on real values. Throws std::invalid_argument on mismatched radicands.
std::strong_ordering compare(const ExactNumber& x, const ExactNumber& y);

inline bool operator<(const ExactNumber& x, const ExactNumber& y) { return compare(x, y) < 0; }
inline bool operator>(const ExactNumber& x, const ExactNumber& y) { return compare(x, y) > 0; }

struct ExactVec3 {
    std::array<ExactNumber, 3> c;

    ExactVec3() = default;
    ExactVec3(ExactNumber x, ExactNumber y, ExactNumber z) : c{std::move(x), std::move(y), std::move(z)} {}

    const ExactNumber& operator[](std::size_t i) const { return c[i]; }
    ExactNumber& operator[](std::size_t i) { return c[i]; }
    int radicand() const { return c[0].radicand(); }

    ExactVec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
    friend ExactVec3 operator+(const ExactVec3& u, const ExactVec3& v);
    friend ExactVec3 operator-(const ExactVec3& u, const ExactVec3& v);
    friend ExactVec3 operator*(const ExactNumber& s, const ExactVec3& v);
    friend bool operator==(const ExactVec3& u, const ExactVec3& v) = default;

    std::string to_string() const;
};

ExactNumber dot(const ExactVec3& u, const ExactVec3& v);
ExactVec3 cross(const ExactVec3& u, const ExactVec3& v);
ExactNumber norm2(const ExactVec3& v);
// u . (v x w)
ExactNumber det3(const ExactVec3& u, const ExactVec3& v, const ExactVec3& w);

struct ExactMat3 {
    std::array<ExactVec3, 3> rows;

    static ExactMat3 identity(int radicand);
    static ExactMat3 from_rows(ExactVec3 r0, ExactVec3 r1, ExactVec3 r2) { return {{std::move(r0), std::move(r1), std::move(r2)}}; }

    const ExactNumber& at(std::size_t i, std::size_t j) const { return rows[i][j]; }
    ExactVec3 operator*(const ExactVec3& v) const;
    ExactMat3 operator*(const ExactMat3& m) const;
    ExactMat3 transpose() const;
    ExactNumber determinant() const;
    ExactNumber trace() const;
    bool is_orthogonal() const;
    friend bool operator==(const ExactMat3& a, const ExactMat3& b) = default;
};

}  // namespace regpoly
