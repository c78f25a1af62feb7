#ifndef WCP_MAT_HPP
#define WCP_MAT_HPP

#include <wcp/error.hpp>
#include <wcp/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wcp {

/// Dense row-major matrix over an exact field.
///
/// A morphism X -> Y is a dim(Y) x dim(X) matrix acting on column vectors, so
/// composition g o f is the product g * f. The basis vector e_i (x) e_j of
/// X (x) Y has flat index i * dim(Y) + j, which makes tensor() the ordinary
/// Kronecker product.
class Mat {
public:
    Mat() = default;

    Mat(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

    Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("matrix " + shape_string(rows_, cols_) + " given " +
                                 std::to_string(data_.size()) + " entries");
        for (const auto& s : data_)
            if (s.characteristic() != field_.characteristic())
                throw FieldError("entry from " + s.field().describe() + " in a matrix over " +
                                 field_.describe());
    }

    /// Small integer literal, e.g. Mat::of(f, {{0, 1}, {1, 0}}).
    static Mat of(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Mat m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionError("ragged matrix literal");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = Scalar(field, v);
            ++i;
        }
        return m;
    }

    static Mat identity(Field field, std::size_t n) {
        Mat m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
        return m;
    }

    static Mat zero(Field field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }

    /// Column vector with a single 1 at `index`.
    static Mat basis(Field field, std::size_t n, std::size_t index) {
        Mat m(field, n, 1);
        m(index, 0) = Scalar(field, 1);
        return m;
    }

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Scalar>& entries() const noexcept { return data_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Mat column(std::size_t c) const {
        Mat m(field_, rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r) m(r, 0) = (*this)(r, c);
        return m;
    }

    Mat columns(const std::vector<std::size_t>& idx) const {
        Mat m(field_, rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
        return m;
    }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    Mat scaled(const Scalar& s) const {
        Mat m(*this);
        for (auto& e : m.data_) e *= s;
        return m;
    }

    Mat operator+(const Mat& o) const {
        same_shape(o, "+");
        Mat m(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
        return m;
    }

    Mat operator-(const Mat& o) const {
        same_shape(o, "-");
        Mat m(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
        return m;
    }

    std::string shape() const { return shape_string(rows_, cols_); }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            os << (r ? ", [" : "[");
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
            os << "]";
        }
        os << "]";
        return os.str();
    }

    static std::string shape_string(std::size_t r, std::size_t c) {
        return std::to_string(r) + "x" + std::to_string(c);
    }

private:
    void same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("operator") + op + " on " + shape() + " and " + o.shape());
        if (field_ != o.field_) throw FieldError("matrices over different fields");
    }

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

namespace detail {

inline std::vector<std::uint64_t> residues(const Mat& m) {
    std::vector<std::uint64_t> out(m.entries().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = m.entries()[k].residue();
    return out;
}

inline Mat from_residues(Field f, std::size_t r, std::size_t c, const std::vector<std::uint64_t>& v) {
    std::vector<Scalar> e;
    e.reserve(v.size());
    for (auto x : v) e.push_back(Scalar::residue(f, x));
    return Mat(f, r, c, std::move(e));
}

inline void same_field(const Mat& a, const Mat& b) {
    if (a.field() != b.field())
        throw FieldError("matrices over " + a.field().describe() + " and " + b.field().describe());
}

} // namespace detail

/// g o f, i.e. the matrix product g * f.
inline Mat compose(const Mat& g, const Mat& f) {
    if (g.cols() != f.rows())
        throw DimensionError("cannot compose " + g.shape() + " after " + f.shape());
    detail::same_field(g, f);
    const Field field = g.field();
    const std::size_t n = g.rows(), k = g.cols(), m = f.cols();
    if (!field.is_rational()) {
        const std::uint64_t p = field.characteristic();
        auto a = detail::residues(g);
        auto b = detail::residues(f);
        std::vector<std::uint64_t> c(n * m, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < k; ++t) {
                std::uint64_t x = a[i * k + t];
                if (!x) continue;
                const std::uint64_t* brow = &b[t * m];
                std::uint64_t* crow = &c[i * m];
                for (std::size_t j = 0; j < m; ++j)
                    if (brow[j]) crow[j] = (crow[j] + x * brow[j]) % p;
            }
        return detail::from_residues(field, n, m, c);
    }
    Mat out(field, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            const Scalar& x = g(i, t);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                const Scalar& y = f(t, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

/// Kronecker product f (x) g.
inline Mat tensor(const Mat& f, const Mat& g) {
    detail::same_field(f, g);
    const Field field = f.field();
    const std::size_t r = f.rows() * g.rows(), c = f.cols() * g.cols();
    if (!field.is_rational()) {
        const std::uint64_t p = field.characteristic();
        auto a = detail::residues(f);
        auto b = detail::residues(g);
        std::vector<std::uint64_t> out(r * c, 0);
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) {
                std::uint64_t x = a[i * f.cols() + j];
                if (!x) continue;
                for (std::size_t k = 0; k < g.rows(); ++k)
                    for (std::size_t l = 0; l < g.cols(); ++l) {
                        std::uint64_t y = b[k * g.cols() + l];
                        if (y) out[(i * g.rows() + k) * c + j * g.cols() + l] = x * y % p;
                    }
            }
        return detail::from_residues(field, r, c, out);
    }
    Mat out(field, r, c);
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& x = f(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& y = g(k, l);
                    if (!y.is_zero()) out(i * g.rows() + k, j * g.cols() + l) = x * y;
                }
        }
    return out;
}

struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// First (row, col) in row-major order where f and g disagree; nullopt when equal.
/// Both operands must have the same shape.
inline std::optional<Cell> first_difference(const Mat& f, const Mat& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw DimensionError("comparing " + f.shape() + " with " + g.shape());
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (!(f(r, c) == g(r, c))) return Cell{r, c};
    return std::nullopt;
}

inline bool mat_eq(const Mat& f, const Mat& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols() || f.field() != g.field()) return false;
    return !first_difference(f, g).has_value();
}

inline bool operator==(const Mat& f, const Mat& g) { return mat_eq(f, g); }

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry at or
/// below the current row, scanning columns left to right.
struct Echelon {
    Mat reduced;
    std::vector<std::size_t> pivot_cols;
};

inline Echelon row_reduce(Mat m, std::size_t limit_cols = static_cast<std::size_t>(-1)) {
    std::vector<std::size_t> pivots;
    const std::size_t ncols = std::min(limit_cols, m.cols());
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c).is_zero()) continue;
                m(r, c) -= factor * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return row_reduce(m).pivot_cols.size(); }

/// Solves a * x = b. Free variables are set to zero, so the answer is the unique
/// one whenever `a` has full column rank.
inline Mat solve_right(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw DimensionError("solve_right: " + a.shape() + " against right-hand side " + b.shape());
    detail::same_field(a, b);
    const Field f = a.field();
    Mat aug(f, a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
    }
    Echelon e = row_reduce(std::move(aug), a.cols());
    const std::size_t rk = e.pivot_cols.size();
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t r = rk; r < a.rows(); ++r)
            if (!e.reduced(r, a.cols() + c).is_zero())
                throw InconsistentSystem(c, "solve_right: column " + std::to_string(c) +
                                                " of the right-hand side is not in the column space");
    Mat x(f, a.cols(), b.cols());
    for (std::size_t k = 0; k < rk; ++k)
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivot_cols[k], c) = e.reduced(k, a.cols() + c);
    return x;
}

inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square " + m.shape());
    if (rank(m) != m.rows()) throw InconsistentSystem(0, "inverse of a singular matrix");
    return solve_right(m, Mat::identity(m.field(), m.rows()));
}

/// Factorization E = inj * proj with proj * inj = id of size rank(E).
struct Splitting {
    std::size_t rank = 0;
    Mat inj;  // n x r
    Mat proj; // r x n
};

/// Thrown by split_idempotent when its input is not a square idempotent.
class NotIdempotent : public Error {
public:
    NotIdempotent(std::string check, std::optional<Cell> where, const std::string& what)
        : Error(what), check_(std::move(check)), where_(where) {}
    const std::string& check() const noexcept { return check_; }
    const std::optional<Cell>& where() const noexcept { return where_; }

private:
    std::string check_;
    std::optional<Cell> where_;
};

/// Splits an idempotent. The injection's columns are the pivot columns of E
/// (first-nonzero pivoting), and the projection solves inj * proj = E.
inline Splitting split_idempotent(const Mat& e) {
    if (e.rows() != e.cols())
        throw NotIdempotent("square", std::nullopt, "split_idempotent: " + e.shape() + " is not square");
    Mat sq = compose(e, e);
    if (auto d = first_difference(sq, e))
        throw NotIdempotent("idempotent", d,
                            "split_idempotent: E*E differs from E at (" + std::to_string(d->row) + "," +
                                std::to_string(d->col) + "): " + sq(d->row, d->col).to_string() + " vs " +
                                e(d->row, d->col).to_string());
    Echelon ech = row_reduce(e);
    Splitting s;
    s.rank = ech.pivot_cols.size();
    s.inj = e.columns(ech.pivot_cols);
    s.proj = solve_right(s.inj, e);
    return s;
}

} // namespace wcp

#endif
