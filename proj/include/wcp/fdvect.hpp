#ifndef WCP_FDVECT_HPP
#define WCP_FDVECT_HPP

#include <wcp/mat.hpp>

#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace wcp {

struct Factor {
    std::string name;
    std::size_t dim = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Object of FinVect as an ordered list of named factors. The unit object K
/// is the empty list, and tensoring concatenates, so the monoidal structure
/// is strict.
class FObj {
public:
    FObj() = default;
    FObj(std::string name, std::size_t dim) {
        if (dim == 0) throw DimensionError("object '" + name + "' of dimension 0");
        factors_.push_back({std::move(name), dim});
    }
    explicit FObj(std::vector<Factor> fs) : factors_(std::move(fs)) {
        for (const auto& f : factors_)
            if (f.dim == 0) throw DimensionError("object '" + f.name + "' of dimension 0");
    }

    static FObj unit() { return FObj(); }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }

    std::size_t dim() const {
        std::size_t d = 1;
        for (const auto& f : factors_) d *= f.dim;
        return d;
    }

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& f : factors_) d.push_back(f.dim);
        return d;
    }

    /// Flat index -> one coordinate per factor (row-major).
    std::vector<std::size_t> unflatten(std::size_t index) const {
        std::vector<std::size_t> out(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            out[k] = index % factors_[k].dim;
            index /= factors_[k].dim;
        }
        return out;
    }

    FObj operator*(const FObj& o) const {
        FObj r(*this);
        r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
        return r;
    }

    std::string to_string() const {
        if (factors_.empty()) return "K";
        std::string s;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) s += "(x)";
            s += factors_[k].name + ":" + std::to_string(factors_[k].dim);
        }
        return s;
    }

    friend bool operator==(const FObj&, const FObj&) = default;

private:
    std::vector<Factor> factors_;
};

/// Morphism of FinVect. Composition checks factor names and dimensions, so a
/// mis-wired composite fails loudly instead of yielding a wrong matrix.
struct FMor {
    FObj dom;
    FObj cod;
    Mat mat;

    FMor() = default;
    FMor(FObj d, FObj c, Mat m) : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
        if (mat.rows() != cod.dim() || mat.cols() != dom.dim())
            throw DimensionError("morphism " + dom.to_string() + " -> " + cod.to_string() +
                                 " needs a " + Mat::shape_string(cod.dim(), dom.dim()) + " matrix, got " +
                                 mat.shape());
    }

    Field field() const { return mat.field(); }

    /// Same matrix with relabelled domain and codomain of equal total dimension.
    FMor as(FObj d, FObj c) const { return FMor(std::move(d), std::move(c), mat); }

    FMor scaled(const Scalar& s) const { return FMor(dom, cod, mat.scaled(s)); }

    FMor operator+(const FMor& o) const { return FMor(dom, cod, mat + o.mat); }
    FMor operator-(const FMor& o) const { return FMor(dom, cod, mat - o.mat); }

    std::string signature() const { return dom.to_string() + " -> " + cod.to_string(); }
};

inline bool operator==(const FMor& a, const FMor& b) {
    return a.dom == b.dom && a.cod == b.cod && mat_eq(a.mat, b.mat);
}

inline FMor identity(const FObj& x, Field f) { return FMor(x, x, Mat::identity(f, x.dim())); }

inline FObj unit_object() { return FObj::unit(); }

inline FMor zero_mor(const FObj& d, const FObj& c, Field f) { return FMor(d, c, Mat::zero(f, c.dim(), d.dim())); }

/// The symmetry X (x) Y -> Y (x) X, e_i (x) e_j |-> e_j (x) e_i.
inline FMor swap(const FObj& x, const FObj& y, Field f) {
    const std::size_t m = x.dim(), n = y.dim();
    Mat s(f, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) s(j * m + i, i * n + j) = Scalar(f, 1);
    return FMor(x * y, y * x, std::move(s));
}

inline FMor compose2(const FMor& g, const FMor& f) {
    if (!(g.dom == f.cod))
        throw DimensionError("cannot compose (" + g.signature() + ") after (" + f.signature() + ")");
    return FMor(f.dom, g.cod, compose(g.mat, f.mat));
}

/// comp(a, b, c) = a o b o c.
template <class... Rest>
FMor comp(const FMor& first, const Rest&... rest) {
    if constexpr (sizeof...(rest) == 0) {
        return first;
    } else {
        return compose2(first, comp(rest...));
    }
}

namespace detail {

template <class T>
constexpr bool is_mor_v = std::is_same_v<std::decay_t<T>, FMor>;

template <class... Ts>
Field field_of(const Ts&... xs) {
    Field out;
    bool found = false;
    auto pick = [&](const auto& x) {
        if constexpr (is_mor_v<decltype(x)>) {
            if (!found) {
                out = x.field();
                found = true;
            }
        }
    };
    (pick(xs), ...);
    return out;
}

inline FMor lift(const FMor& m, Field) { return m; }
inline FMor lift(const FObj& x, Field f) { return identity(x, f); }

inline FMor tensor2(const FMor& a, const FMor& b) {
    return FMor(a.dom * b.dom, a.cod * b.cod, tensor(a.mat, b.mat));
}

} // namespace detail

/// Tensor product of morphisms; objects stand for their identities, so
/// tensor(A, psi, V) is A (x) psi (x) V. At least one argument must be a morphism.
template <class... Ts>
FMor tensor(const Ts&... xs) {
    static_assert((detail::is_mor_v<Ts> || ...), "tensor() needs at least one morphism");
    const Field f = detail::field_of(xs...);
    FMor acc = FMor(FObj::unit(), FObj::unit(), Mat::identity(f, 1));
    ((acc = detail::tensor2(acc, detail::lift(xs, f))), ...);
    return acc;
}

/// Tensor product of objects.
template <class... Ts>
FObj join(const Ts&... xs) {
    FObj acc;
    ((acc = acc * xs), ...);
    return acc;
}

} // namespace wcp

#endif
