#ifndef WCP_PREUNIT_HPP
#define WCP_PREUNIT_HPP

#include <wcp/wcp_core.hpp>

namespace wcp {

/// nu: K -> A (x) V.
using Preunit = FMor;

inline Preunit make_preunit(const Quadruple& q, const Mat& column) {
    return FMor(FObj::unit(), q.av(), column);
}

/// m o (X (x) nu) = m o (nu (x) X) = m o (X (x) (m o (nu (x) nu))).
inline Report check_preunit(const FMor& m, const Preunit& nu) {
    const FObj& x = nu.cod;
    if (!(m.dom == x * x) || !(m.cod == x))
        throw DimensionError("check_preunit: product " + m.signature() + " does not match preunit " + nu.signature());
    Report r;
    FMor left = comp(m, tensor(nu, x));
    check_equal(r, "preunit", comp(m, tensor(x, nu)), left, "1");
    check_equal(r, "preunit", left, comp(m, tensor(x, comp(m, tensor(nu, nu)))), "2");
    return r;
}

inline FMor nabla_nu(const FMor& m, const Preunit& nu) {
    require(check_preunit(m, nu), "nabla_nu");
    FMor n = comp(m, tensor(nu.cod, nu));
    Report r;
    check_equal(r, "nabla-nu-idempotent", comp(n, n), n);
    ensure(r, "nabla_nu");
    return n;
}

/// beta_nu = (mu_A (x) V) o (A (x) nu).
inline FMor beta_nu(const Quadruple& q, const Preunit& nu) { return comp(q.mu_v(), tensor(q.a(), nu)); }

inline Report check_pre_system(const CrossedProduct& cp, const Preunit& nu) {
    const Quadruple& q = cp.quadruple;
    const FObj& A = q.a();
    const FObj& V = q.v;
    if (!(nu.cod == q.av()) || !nu.dom.is_unit())
        throw DimensionError("preunit must be K -> " + q.av().to_string() + ", got " + nu.signature());
    FMor rhs = comp(cp.nabla, tensor(q.algebra.unit, V));
    Report r;
    check_equal(r, "pre1-wcp", comp(q.mu_v(), tensor(A, q.sigma), tensor(q.psi, V), tensor(V, nu)), rhs);
    check_equal(r, "pre2-wcp", comp(q.mu_v(), tensor(A, q.sigma), tensor(nu, V)), rhs);
    check_equal(r, "pre3-wcp", comp(q.mu_v(), tensor(A, q.psi), tensor(nu, A)), beta_nu(q, nu));
    check_equal(r, "preunit-idemp", comp(cp.nabla, nu), nu);
    return r;
}

struct UnitalCrossedProduct {
    CrossedProduct base;
    Preunit nu;
    FMor unit_small; // p o nu
    FMor beta;
    MonoidData small_monoid;
    Report verification;
};

inline UnitalCrossedProduct build_unital(const CrossedProduct& cp, const Preunit& nu) {
    require(check_pre_system(cp, nu), "build_unital");
    const Quadruple& q = cp.quadruple;
    const FObj& A = q.a();
    UnitalCrossedProduct u;
    u.base = cp;
    u.nu = nu;
    u.unit_small = comp(cp.proj, nu);
    u.beta = beta_nu(q, nu);
    u.small_monoid = MonoidData(cp.small, u.unit_small, cp.mu_small);

    Report& r = u.verification;
    r.merge(check_monoid(u.small_monoid));
    r.merge(check_preunit(cp.mu_big, nu));
    check_equal(r, "nabla-nu", comp(cp.mu_big, tensor(q.av(), nu)), cp.nabla);
    const FMor& b = u.beta;
    const FMor& muA = q.algebra.mul;
    check_equal(r, "beta-nu", comp(cp.mu_big, tensor(b, b)), comp(b, muA));
    check_equal(r, "beta-nu-linear", comp(b, muA), comp(q.mu_v(), tensor(A, b)));
    check_equal(r, "beta-nu-unit", comp(b, q.algebra.unit), nu);
    FMor bbar = comp(cp.proj, b);
    check_equal(r, "beta-bar-mult", comp(bbar, muA), comp(cp.mu_small, tensor(bbar, bbar)));
    check_equal(r, "beta-bar-unit", comp(bbar, q.algebra.unit), u.unit_small);
    ensure(r, "build_unital");
    return u;
}

/// Hypotheses on a product m: A(x)V(x)A(x)V -> A(x)V with preunit nu:
/// associative, left A-linear for mu_A (x) V, preunital, normalized.
inline Report check_product_hypotheses(const MonoidData& a, const FObj& v, const FMor& m, const Preunit& nu) {
    const FObj av = a.carrier * v;
    if (!(m.dom == av * av) || !(m.cod == av))
        throw DimensionError("product must be " + (av * av).to_string() + " -> " + av.to_string() + ", got " +
                             m.signature());
    Report r = check_associative(av, m, "mu-assoc");
    check_equal(r, "m-left-linear", comp(m, tensor(a.mul, v, av)), comp(tensor(a.mul, v), tensor(a.carrier, m)));
    Report pre = check_preunit(m, nu);
    r.merge(pre);
    if (pre.ok()) {
        FMor n = comp(m, tensor(av, nu));
        check_equal(r, "m-normalized", comp(n, m), m, "1");
        check_equal(r, "m-normalized", comp(m, tensor(n, n)), m, "2");
    } else {
        r.skip("m-normalized", "preunit fails");
    }
    return r;
}

/// Recovers psi = m o (eta_A (x) V (x) beta_nu) and
/// sigma = m o (eta_A (x) V (x) eta_A (x) V) from a preunital product.
/// Only the product is asserted to round-trip; psi itself need not match
/// whatever psi produced m.
inline Quadruple derive_psi_sigma(const MonoidData& a, const FObj& v, const FMor& m, const Preunit& nu,
                                  Report* log = nullptr) {
    require(check_product_hypotheses(a, v, m, nu), "derive_psi_sigma");
    const FObj& A = a.carrier;
    FMor beta = comp(tensor(a.mul, v), tensor(A, nu));
    FMor psi = comp(m, tensor(a.unit, v, beta));
    FMor sigma = comp(m, tensor(a.unit, v, a.unit, v));
    Quadruple q(a, v, psi, sigma);
    Report r = check_quadruple(q);
    if (r.passed("wmeas-wcp")) check_equal(r, "round-trip", product_mu(q), m);
    else r.skip("round-trip", "recovered psi fails wmeas-wcp");
    if (log) log->merge(r);
    ensure(r, "derive_psi_sigma");
    return q;
}

} // namespace wcp

#endif
