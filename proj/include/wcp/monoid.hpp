#ifndef WCP_MONOID_HPP
#define WCP_MONOID_HPP

#include <wcp/report.hpp>

namespace wcp {

/// Algebra (A, eta_A, mu_A) given by its structure constants.
struct MonoidData {
    FObj carrier;
    FMor unit; // K -> A
    FMor mul;  // A (x) A -> A

    MonoidData() = default;
    MonoidData(FObj a, FMor eta, FMor mu) : carrier(std::move(a)), unit(std::move(eta)), mul(std::move(mu)) {
        if (!(unit.dom == FObj::unit()) || !(unit.cod == carrier))
            throw DimensionError("unit must be K -> " + carrier.to_string() + ", got " + unit.signature());
        if (!(mul.dom == carrier * carrier) || !(mul.cod == carrier))
            throw DimensionError("product must be A(x)A -> A, got " + mul.signature());
    }

    /// unit: dim x 1, mul: dim x dim^2.
    static MonoidData make(const std::string& name, const Mat& unit, const Mat& mul) {
        FObj a(name, unit.rows());
        return MonoidData(a, FMor(FObj::unit(), a, unit), FMor(a * a, a, mul));
    }

    Field field() const { return mul.field(); }
    std::size_t dim() const { return carrier.dim(); }
    const std::string& name() const { return carrier.factors().front().name; }
};

inline bool operator==(const MonoidData& a, const MonoidData& b) {
    return a.carrier == b.carrier && a.unit == b.unit && a.mul == b.mul;
}

/// Left module (M, phi_M) over an algebra.
struct ModuleData {
    MonoidData algebra;
    FObj carrier;
    FMor action; // A (x) M -> M
};

inline Report check_monoid(const MonoidData& m) {
    const FObj& a = m.carrier;
    Report r;
    auto id = identity(a, m.field());
    check_equal(r, "monoid-unit-left", comp(m.mul, tensor(m.unit, a)), id);
    check_equal(r, "monoid-unit-right", comp(m.mul, tensor(a, m.unit)), id);
    check_equal(r, "monoid-assoc", comp(m.mul, tensor(a, m.mul)), comp(m.mul, tensor(m.mul, a)));
    return r;
}

inline Report check_left_module(const ModuleData& d) {
    const auto& alg = d.algebra;
    if (!(d.action.dom == alg.carrier * d.carrier) || !(d.action.cod == d.carrier))
        throw DimensionError("action must be A(x)M -> M, got " + d.action.signature());
    Report r;
    check_equal(r, "module-unit", comp(d.action, tensor(alg.unit, d.carrier)), identity(d.carrier, alg.field()));
    check_equal(r, "module-assoc", comp(d.action, tensor(alg.carrier, d.action)),
                comp(d.action, tensor(alg.mul, d.carrier)));
    return r;
}

/// A (x) A (x) ... as used by the regular action phi = mu_A (x) X.
inline ModuleData regular_module(const MonoidData& a, const FObj& x = FObj::unit()) {
    return {a, a.carrier * x, tensor(a.mul, x)};
}

} // namespace wcp

#endif
