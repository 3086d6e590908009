// Exact rational linear algebra: LDL^T, fraction-free determinants,
// Sylvester-style definiteness tests, the positive-vector certificate
// criterion for symmetric matrices with non-positive off-diagonals, and
// exact linear solves. No floating point anywhere.

#ifndef RESGRAPH_LINALG_HPP
#define RESGRAPH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/rational.hpp"

namespace resgraph {

/// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (at(i, j) != at(j, i)) return false;
            }
        }
        return true;
    }

    bool has_positive_off_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i != j && at(i, j) > 0) return true;
            }
        }
        return false;
    }

    QMatrix negated() const {
        QMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
        return m;
    }

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    QVector entries_;
};

inline QMatrix to_rational_matrix(const IntersectionMatrix& a) {
    QMatrix m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) m.at(i, j) = Rational(a.at(i, j));
    }
    return m;
}

inline QVector matrix_vector_product(const QMatrix& a, const QVector& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matrix/vector sizes differ");
    QVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (v[j] != 0) r[i] += a.at(i, j) * v[j];
        }
    }
    return r;
}

/// A = L D L^T with L unit lower-triangular. Produced only when every
/// leading pivot is nonzero.
struct Ldlt {
    QMatrix lower;
    QVector diag;
};

/// First zero pivot met by the (pivot-free) elimination, 0-based.
struct PivotFailure {
    std::size_t index;
};

using LdltResult = std::variant<Ldlt, PivotFailure>;

/// Exact LDL^T factorization without pivoting. A zero pivot is a value-level
/// outcome (PivotFailure), not an error: for definiteness testing it simply
/// means the leading principal submatrix chain degenerates.
inline LdltResult ldlt(const QMatrix& a) {
    if (!a.is_symmetric()) throw HypothesisViolation("ldlt requires a symmetric matrix");
    const std::size_t n = a.rows();
    QMatrix lower = QMatrix::identity(n);
    QVector diag(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = a.at(j, j);
        for (std::size_t k = 0; k < j; ++k) {
            d -= lower.at(j, k) * lower.at(j, k) * diag[k];
        }
        if (d == 0) return PivotFailure{j};
        diag[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= lower.at(i, k) * lower.at(j, k) * diag[k];
            }
            lower.at(i, j) = s / d;
        }
    }
    return Ldlt{std::move(lower), std::move(diag)};
}

namespace detail {

/// Fraction-free Bareiss determinant of an integer matrix given as rows.
/// Consumes its argument. All interior divisions are exact.
inline Int bareiss_determinant(std::vector<IntVector> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Determinant of the leading k x k block, via row-wise denominator clearing
/// followed by integer Bareiss. Independent of the LDL^T code path.
inline Rational leading_minor(const QMatrix& a, std::size_t k) {
    std::vector<IntVector> rows(k, IntVector(k));
    Int scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
        Int mult = 1;
        for (std::size_t j = 0; j < k; ++j) {
            mult = boost::multiprecision::lcm(mult, boost::multiprecision::denominator(a.at(i, j)));
        }
        for (std::size_t j = 0; j < k; ++j) {
            const Rational scaled = a.at(i, j) * Rational(mult);
            rows[i][j] = boost::multiprecision::numerator(scaled);
        }
        scale *= mult;
    }
    return make_rational(bareiss_determinant(std::move(rows)), scale);
}

}  // namespace detail

/// Exact determinant (fraction-free).
inline Rational determinant(const QMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    return detail::leading_minor(a, a.rows());
}

/// Determinants of the leading principal blocks, sizes 1..n.
inline QVector leading_principal_minors(const QMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("minors of non-square matrix");
    QVector minors(a.rows());
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        minors[k - 1] = detail::leading_minor(a, k);
    }
    return minors;
}

/// Sylvester's criterion: positive definite iff all leading principal minors
/// are positive.
inline bool is_positive_definite(const QMatrix& a) {
    if (!a.is_symmetric()) {
        throw HypothesisViolation("definiteness test requires a symmetric matrix");
    }
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        if (detail::leading_minor(a, k) <= 0) return false;
    }
    return true;
}

inline bool is_negative_definite(const QMatrix& a) {
    return is_positive_definite(a.negated());
}

inline bool is_negative_definite(const IntersectionMatrix& a) {
    return is_negative_definite(to_rational_matrix(a));
}

/// Certificate check for the criterion: a symmetric matrix with non-positive
/// off-diagonal entries is positive definite iff some v > 0 has A v > 0
/// (both strictly, entrywise). Returns that predicate's value for this v.
inline bool verify_certificate(const QMatrix& a, const QVector& v) {
    if (!a.is_symmetric()) {
        throw HypothesisViolation("certificate criterion requires a symmetric matrix");
    }
    if (a.has_positive_off_diagonal()) {
        throw HypothesisViolation("certificate criterion requires non-positive off-diagonals");
    }
    if (v.size() != a.rows()) throw DimensionMismatch("matrix/vector sizes differ");
    for (const Rational& x : v) {
        if (x <= 0) return false;
    }
    for (const Rational& x : matrix_vector_product(a, v)) {
        if (x <= 0) return false;
    }
    return true;
}

/// Exact Gaussian elimination with deterministic pivoting: the pivot row is
/// always the first one with a nonzero entry in the pivot column.
inline std::optional<QVector> solve_linear(QMatrix a, QVector b) {
    if (!a.is_square()) throw DimensionMismatch("solve requires a square matrix");
    if (b.size() != a.rows()) throw DimensionMismatch("matrix/vector sizes differ");
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            const Rational factor = a.at(i, k) / a.at(k, k);
            a.at(i, k) = 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) -= factor * a.at(k, j);
            }
            b[i] -= factor * b[k];
        }
    }
    QVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a.at(ii, j) * x[j];
        x[ii] = s / a.at(ii, ii);
    }
    return x;
}

/// Outcome of searching for a positivity certificate by solving A v = 1.
struct CertificateSearch {
    enum class Status { found, singular, not_positive };

    Status status = Status::singular;
    /// The solution of A v = (1,...,1) when one exists; for not_positive it
    /// is kept as a diagnostic showing which entries fail.
    QVector vector;

    bool found() const { return status == Status::found; }
};

/// Searches for a certificate as v = A^{-1} (1,...,1). For positive definite
/// A (under the sign hypothesis) this v is entrywise positive and A v = 1 is
/// entrywise positive, so the search succeeds exactly on definite inputs.
inline CertificateSearch find_certificate(const QMatrix& a) {
    if (!a.is_symmetric()) {
        throw HypothesisViolation("certificate criterion requires a symmetric matrix");
    }
    if (a.has_positive_off_diagonal()) {
        throw HypothesisViolation("certificate criterion requires non-positive off-diagonals");
    }
    auto v = solve_linear(a, QVector(a.rows(), Rational(1)));
    if (!v) return {CertificateSearch::Status::singular, {}};
    for (const Rational& x : *v) {
        if (x <= 0) return {CertificateSearch::Status::not_positive, std::move(*v)};
    }
    return {CertificateSearch::Status::found, std::move(*v)};
}

}  // namespace resgraph

#endif  // RESGRAPH_LINALG_HPP
