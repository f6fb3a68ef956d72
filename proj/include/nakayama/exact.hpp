#pragma once

// Exact rational linear algebra used by the matrix oracle and the
// structure-constant layer. Entries are small, so a checked 64-bit fraction is
// enough; any overflow throws instead of silently wrapping.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nakayama {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

using Vector = std::vector<Rational>;

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(std::size_t n);
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of the right null space. Each vector has a 1 at its free column.
std::vector<Vector> kernel(Matrix m);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<std::vector<std::int64_t>> m);

bool is_zero(const Vector& v);

/// A subspace of k^ambient kept as a reduced echelon basis: each basis vector
/// has a 1 at its pivot and every other basis vector vanishes there. The
/// coordinates of a member vector are therefore its entries at the pivots.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after clearing every pivot; zero iff v is in the span.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }
    /// Adds v if it is independent of the current span; reports whether it was.
    bool insert(const Vector& v);
    /// Coordinates of a member vector in basis(). Throws if v is not a member.
    Vector coordinates(const Vector& v) const;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nakayama
