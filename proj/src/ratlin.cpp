#include "polyball/ratlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyball {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw ValidationError("rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (sgn(v_.get_den()) == 0) throw ValidationError("rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw ValidationError("rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -(*this) : *this;
}

Rational Rational::parse(std::string_view text) {
    // Accepted shapes: [-]digits  or  [-]digits/digits
    auto bad = [&] {
        return ValidationError("rational: cannot parse \"" + std::string(text) +
                               "\" (expected \"p\" or \"p/q\" with q > 0)");
    };
    if (text.empty()) throw bad();
    std::size_t i = 0;
    if (text[0] == '-') i = 1;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw bad();
    std::size_t den_digits = 0;
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size()) throw bad();
    }
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) throw bad();
    if (sgn(q.get_den()) == 0) throw ValidationError("rational: zero denominator in \"" + std::string(text) + "\"");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ValidationError("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec negated(const RatVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(-x);
    return r;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const RatVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ')';
    return os.str();
}

RatMat::RatMat(std::size_t rows, std::size_t cols) : cols_(cols) {
    if (rows == 0 || cols == 0) throw ValidationError("matrix: shape must be at least 1x1");
    rows_.assign(rows, RatVec(cols));
}

RatMat RatMat::from_rows(std::vector<RatVec> rows) {
    if (rows.empty() || rows[0].empty()) throw ValidationError("matrix: shape must be at least 1x1");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("matrix: rows have unequal lengths");
    RatMat m(rows.size(), cols);
    m.rows_ = std::move(rows);
    return m;
}

RatVec RatMat::column(std::size_t j) const {
    RatVec c;
    c.reserve(rows());
    for (const auto& r : rows_) c.push_back(r[j]);
    return c;
}

RatMat RatMat::transposed() const {
    RatMat t(cols(), rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// Scale each row by the lcm of its denominators; row scaling preserves rank
// and (for augmented systems) the solution set.
std::vector<std::vector<mpz_class>> integerize_rows(const RatMat& m, const RatVec* rhs) {
    std::vector<std::vector<mpz_class>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[i].denominator().get_mpz_t());
        a[i].reserve(m.cols() + (rhs ? 1 : 0));
        for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j).numerator() * (lcm / m.at(i, j).denominator()));
        if (rhs) a[i].push_back((*rhs)[i].numerator() * (lcm / (*rhs)[i].denominator()));
    }
    return a;
}

// Fraction-free elimination in place. Pivot = first nonzero entry in the
// column at or below the current pivot row (deterministic, no magnitude
// heuristics needed in exact arithmetic). Returns the pivot columns.
std::vector<std::size_t> bareiss_eliminate(std::vector<std::vector<mpz_class>>& a, std::size_t ncols) {
    const std::size_t nrows = a.size();
    std::vector<std::size_t> pivot_cols;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t piv = r;
        while (piv < nrows && sgn(a[piv][col]) == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[piv], a[r]);
        const std::size_t width = a[r].size();
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < width; ++j) {
                mpz_class t = a[i][j] * a[r][col] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivot_cols.push_back(col);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int rank(const RatMat& m) {
    auto a = integerize_rows(m, nullptr);
    return static_cast<int>(bareiss_eliminate(a, m.cols()).size());
}

std::optional<RatVec> solve_square(const RatMat& m, const RatVec& b) {
    if (m.rows() != m.cols()) throw ValidationError("solve_square: matrix is not square");
    if (b.size() != m.rows()) throw ValidationError("solve_square: right-hand side has wrong dimension");
    const std::size_t n = m.rows();
    auto a = integerize_rows(m, &b);
    auto pivots = bareiss_eliminate(a, n);
    if (pivots.size() != n) return std::nullopt;  // singular
    RatVec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s(mpz_class(a[ii][n]), mpz_class(1));
        for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(mpz_class(a[ii][j]), mpz_class(1)) * x[j];
        x[ii] = s / Rational(mpz_class(a[ii][ii]), mpz_class(1));
    }
    return x;
}

}  // namespace polyball
