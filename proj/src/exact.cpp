#include "regpoly/exact.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace regpoly {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

bool square_free(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

int rational_sign(const Rational& r) {
    return r.sign();
}

Decimal to_decimal_value(const Rational& r) {
    Decimal num(boost::multiprecision::numerator(r));
    Decimal den(boost::multiprecision::denominator(r));
    return num / den;
}

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace

ExactNumber::ExactNumber(int radicand) : ExactNumber(0, 0, radicand) {}

ExactNumber::ExactNumber(Rational a, Rational b, int radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
    if (radicand < 2 || !square_free(radicand))
        throw std::invalid_argument("radicand must be a square-free integer >= 2");
}

ExactNumber ExactNumber::golden_ratio() {
    return {Rational(1, 2), Rational(1, 2), 5};
}

void ExactNumber::require_same_field(const ExactNumber& o) const {
    if (radicand_ != 0 && o.radicand_ != 0 && radicand_ != o.radicand_)
        throw std::invalid_argument("mismatched radicands: sqrt(" + std::to_string(radicand_) + ") vs sqrt(" +
                                    std::to_string(o.radicand_) + ")");
}

int ExactNumber::sign() const {
    int sa = rational_sign(a_);
    int sb = rational_sign(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: the larger of a^2 and D*b^2 wins; equality is impossible for square-free D
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * radicand_;
    return lhs > rhs ? sa : sb;
}

ExactNumber ExactNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational norm = a_ * a_ - b_ * b_ * radicand_;
    ExactNumber r;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    r.radicand_ = radicand_;
    return r;
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& o) {
    require_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    if (radicand_ == 0) radicand_ = o.radicand_;
    return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& o) {
    require_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (radicand_ == 0) radicand_ = o.radicand_;
    return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& o) {
    require_same_field(o);
    if (radicand_ == 0) radicand_ = o.radicand_;
    Rational na = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) na += b_ * o.b_ * radicand_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const ExactNumber& x, const ExactNumber& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_.is_zero() || x.radicand_ == y.radicand_;
}

long double ExactNumber::to_long_double() const {
    return static_cast<long double>(to_decimal_value(a_) +
                                    to_decimal_value(b_) * boost::multiprecision::sqrt(Decimal(radicand_ == 0 ? 1 : radicand_)));
}

std::string ExactNumber::to_decimal(int significant_digits) const {
    Decimal v = to_decimal_value(a_);
    if (!b_.is_zero()) v += to_decimal_value(b_) * boost::multiprecision::sqrt(Decimal(radicand_));
    if (v.is_zero()) return "0";
    return v.str(significant_digits);
}

std::string ExactNumber::to_string() const {
    if (b_.is_zero()) return rational_text(a_);
    std::string root = "sqrt(" + std::to_string(radicand_) + ")";
    std::string bpart = b_ == 1 ? root : b_ == -1 ? "-" + root : rational_text(b_) + "*" + root;
    if (a_.is_zero()) return bpart;
    if (b_ < 0) return rational_text(a_) + " - " + bpart.substr(1);
    return rational_text(a_) + " + " + bpart;
}

int sign(const ExactNumber& x) {
    return x.sign();
}

std::strong_ordering compare(const ExactNumber& x, const ExactNumber& y) {
    if (x.radicand() != 0 && y.radicand() != 0 && x.radicand() != y.radicand())
        throw std::invalid_argument("compare: mismatched radicands");
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExactVec3 operator+(const ExactVec3& u, const ExactVec3& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

ExactVec3 operator-(const ExactVec3& u, const ExactVec3& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

ExactVec3 operator*(const ExactNumber& s, const ExactVec3& v) {
    return {s * v[0], s * v[1], s * v[2]};
}

std::string ExactVec3::to_string() const {
    return "(" + c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string() + ")";
}

ExactNumber dot(const ExactVec3& u, const ExactVec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

ExactVec3 cross(const ExactVec3& u, const ExactVec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

ExactNumber norm2(const ExactVec3& v) {
    return dot(v, v);
}

ExactNumber det3(const ExactVec3& u, const ExactVec3& v, const ExactVec3& w) {
    return dot(u, cross(v, w));
}

ExactMat3 ExactMat3::identity(int radicand) {
    ExactNumber one = ExactNumber::rational(1, radicand);
    ExactNumber zero(radicand);
    return from_rows({one, zero, zero}, {zero, one, zero}, {zero, zero, one});
}

ExactVec3 ExactMat3::operator*(const ExactVec3& v) const {
    return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v)};
}

ExactMat3 ExactMat3::operator*(const ExactMat3& m) const {
    ExactMat3 t = m.transpose();
    ExactMat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.rows[i][j] = dot(rows[i], t.rows[j]);
    return r;
}

ExactMat3 ExactMat3::transpose() const {
    ExactMat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.rows[i][j] = rows[j][i];
    return r;
}

ExactNumber ExactMat3::determinant() const {
    return det3(rows[0], rows[1], rows[2]);
}

ExactNumber ExactMat3::trace() const {
    return rows[0][0] + rows[1][1] + rows[2][2];
}

bool ExactMat3::is_orthogonal() const {
    ExactMat3 p = *this * transpose();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational expected = i == j ? 1 : 0;
            if (!(p.rows[i][j].a() == expected && p.rows[i][j].b().is_zero())) return false;
        }
    return true;
}

}  // namespace regpoly
