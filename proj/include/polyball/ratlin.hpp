#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyball/errors.hpp"

namespace polyball {

/**
 * Arbitrary-precision rational scalar, always in canonical form: the
 * denominator is positive, gcd(|numerator|, denominator) = 1, and the sign
 * lives in the numerator. Every constructor and operation re-canonicalizes,
 * so two Rationals compare equal iff they are the same value.
 *
 * Backed by GMP's mpq_class; this wrapper only enforces the canonical-form
 * invariant and the "p/q" string format used in all JSON payloads.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d);
    explicit Rational(mpq_class q);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q" or a bare integer "p" (optional leading '-').
    /// Throws ValidationError on any other shape or a zero denominator.
    static Rational parse(std::string_view text);

    /// Renders as "p/q", or "p" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

/// A vector of exact rationals; dim = size().
using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b);
RatVec negated(const RatVec& v);
bool is_zero_vec(const RatVec& v);
bool lex_less(const RatVec& a, const RatVec& b);
std::string to_string(const RatVec& v);  // "(1, -1/2, 3)"

struct RatVecLexLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

/// Dense rational matrix, stored as a non-empty rectangular list of rows.
class RatMat {
  public:
    RatMat(std::size_t rows, std::size_t cols);
    static RatMat from_rows(std::vector<RatVec> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const RatVec& row(std::size_t i) const { return rows_[i]; }
    RatVec column(std::size_t j) const;
    RatMat transposed() const;

  private:
    std::vector<RatVec> rows_;
    std::size_t cols_ = 0;
};

/// Exact rank via fraction-free (Bareiss) elimination over the integers.
int rank(const RatMat& m);

/// Exact solution of a square system Mx = b, or nullopt when M is singular.
/// Fraction-free forward elimination, rational back substitution.
std::optional<RatVec> solve_square(const RatMat& m, const RatVec& b);

}  // namespace polyball
