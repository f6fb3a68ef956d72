#include "nakayama/exact.hpp"

#include <numeric>
#include <stdexcept>

namespace nakayama {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (add)");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (mul)");
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = mul_checked(n, -1);
        d = mul_checked(d, -1);
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g > 1 ? n / g : n;
    den_ = g > 1 ? d / g : d;
}

Rational Rational::operator-() const { return Rational(mul_checked(num_, -1), den_); }

Rational Rational::operator+(const Rational& o) const {
    if (num_ == 0) return o;
    if (o.num_ == 0) return *this;
    if (den_ == 1 && o.den_ == 1) return Rational(add_checked(num_, o.num_));
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t l = den_ / g;
    return Rational(add_checked(mul_checked(num_, o.den_ / g), mul_checked(o.num_, l)), mul_checked(l, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    if (num_ == 0 || o.num_ == 0) return Rational();
    if (den_ == 1 && o.den_ == 1) return Rational(mul_checked(num_, o.num_));
    // cross-cancel first to keep intermediates small
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    return Rational(mul_checked(num_ / g1, o.num_ / g2), mul_checked(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (!v[k].is_zero() && !(*this)(i, k).is_zero()) r[i] += (*this)(i, k) * v[k];
    return r;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> kernel(Matrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!m(r, free).is_zero()) v[pivots[r]] = -m(r, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t bareiss_rank(std::vector<std::vector<std::int64_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // exact division: Sylvester's identity guarantees divisibility by prev
                const std::int64_t v =
                    add_checked(mul_checked(m[r][c], m[i][j]), -mul_checked(m[i][c], m[r][j]));
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector does not live in the ambient space");
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Rational f = v[pivots_[b]];
        if (f.is_zero()) continue;
        const Vector& row = basis_[b];
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool Subspace::insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const Rational inv = Rational(1) / r[p];
    for (auto& x : r)
        if (!x.is_zero()) x *= inv;
    // keep the basis reduced: clear the new pivot from older vectors
    for (auto& row : basis_) {
        const Rational f = row[p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!r[j].is_zero()) row[j] -= f * r[j];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
    Vector c(basis_.size());
    for (std::size_t b = 0; b < basis_.size(); ++b) c[b] = v[pivots_[b]];
    return c;
}

}  // namespace nakayama
