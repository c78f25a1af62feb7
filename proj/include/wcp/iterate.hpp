#ifndef WCP_ITERATE_HPP
#define WCP_ITERATE_HPP

#include <wcp/preunit.hpp>

namespace wcp {

namespace detail {

inline void common_algebra(const Quadruple& qv, const Quadruple& qw, const char* where) {
    if (!(qv.algebra == qw.algebra))
        throw DimensionError(std::string(where) + ": quadruples over different algebras '" + qv.algebra.name() +
                             "' and '" + qw.algebra.name() + "'");
}

inline void endo_of(const FMor& f, const FObj& x, const char* what) {
    if (!(f.dom == x) || !(f.cod == x))
        throw DimensionError(std::string(what) + " must be an endomorphism of " + x.to_string() + ", got " +
                             f.signature());
}

inline void tau_shape(const Quadruple& qv, const Quadruple& qw, const FMor& tau) {
    if (!(tau.dom == qw.v * qv.v) || !(tau.cod == qv.v * qw.v))
        throw DimensionError("tau must be " + (qw.v * qv.v).to_string() + " -> " + (qv.v * qw.v).to_string() +
                             ", got " + tau.signature());
}

} // namespace detail

/// psi_{V(x)W} = (psi_V (x) W) o (V (x) psi_W) o (Delta (x) A).
inline FMor psi_iter(const Quadruple& qv, const Quadruple& qw, const FMor& delta) {
    detail::common_algebra(qv, qw, "psi_iter");
    detail::endo_of(delta, qv.v * qw.v, "link");
    return comp(tensor(qv.psi, qw.v), tensor(qv.v, qw.psi), tensor(delta, qv.a()));
}

/// nabla_{A(x)V(x)W} = (mu_A (x) V (x) W) o (A (x) psi_{V(x)W}) o (A (x) V (x) W (x) eta_A).
inline FMor nabla_iter(const Quadruple& qv, const Quadruple& qw, const FMor& delta) {
    const MonoidData& a = qv.algebra;
    const FObj vw = qv.v * qw.v;
    return comp(tensor(a.mul, vw), tensor(a.carrier, psi_iter(qv, qw, delta)), tensor(a.carrier, vw, a.unit));
}

inline Report check_link(const Quadruple& qv, const Quadruple& qw, const FMor& delta) {
    const FObj& A = qv.a();
    FMor psi = psi_iter(qv, qw, delta);
    Report r;
    check_equal(r, "falso-idemp", psi, comp(tensor(A, delta), psi));
    check_equal(r, "falso-idemp2", psi,
                comp(nabla_iter(qv, qw, delta), tensor(qv.psi, qw.v), tensor(qv.v, qw.psi)));
    return r;
}

inline Report check_twisting(const Quadruple& qv, const Quadruple& qw, const FMor& tau) {
    detail::common_algebra(qv, qw, "check_twisting");
    detail::tau_shape(qv, qw, tau);
    const FObj& A = qv.a();
    const FObj& V = qv.v;
    const FObj& W = qw.v;
    const FMor& mu = qv.algebra.mul;
    Report r;
    check_equal(r, "twisting-i", comp(tensor(qv.psi, W), tensor(V, qw.psi), tensor(tau, A)),
                comp(tensor(A, tau), tensor(qw.psi, V), tensor(W, qv.psi)));
    // The right-hand factor acting on W(x)V(x)V(x)W is W (x) sigma_V (x) W.
    check_equal(r, "twisting-ii",
                comp(tensor(mu, V, W), tensor(A, qv.sigma, W), tensor(qv.psi, tau), tensor(V, qw.sigma, V),
                     tensor(tau, W, V)),
                comp(tensor(mu, V, W), tensor(A, qv.psi, W), tensor(A, V, qw.sigma), tensor(A, tau, W),
                     tensor(qw.psi, V, W), tensor(W, qv.sigma, W), tensor(W, V, tau)));
    return r;
}

/// sigma_{V(x)W} = (mu_A (x) V (x) W) o (A (x) psi_V (x) W) o (sigma_V (x) sigma_W) o (V (x) tau (x) W).
inline FMor sigma_iter(const Quadruple& qv, const Quadruple& qw, const FMor& tau) {
    detail::common_algebra(qv, qw, "sigma_iter");
    detail::tau_shape(qv, qw, tau);
    const FObj& V = qv.v;
    const FObj& W = qw.v;
    return comp(tensor(qv.algebra.mul, V, W), tensor(qv.a(), qv.psi, W), tensor(qv.sigma, qw.sigma),
                tensor(V, tau, W));
}

inline Report check_sigma_conditions(const Quadruple& qv, const Quadruple& qw, const FMor& delta, const FMor& tau) {
    detail::endo_of(delta, qv.v * qw.v, "link");
    const FObj vw = qv.v * qw.v;
    FMor s = sigma_iter(qv, qw, tau);
    Report r;
    check_equal(r, "sigma1", comp(s, tensor(delta, vw)), s);
    check_equal(r, "sigma2", comp(s, tensor(vw, delta)), s);
    check_equal(r, "sigma3", comp(tensor(qv.a(), delta), s), s);
    return r;
}

struct IterSetup {
    Quadruple qv;
    Quadruple qw;
    FMor delta;
    FMor tau;
    FMor psi_iter;
    FMor sigma_iter;
    FMor nabla_iter;
    Quadruple qvw;
    CrossedProduct cp_v;
    CrossedProduct cp_w;
    CrossedProduct cp_vw;
    Report verification;
};

/// Every hypothesis of the iteration theorem, scoped by structure.
inline Report check_iteration_hypotheses(const Quadruple& qv, const Quadruple& qw, const FMor& delta,
                                         const FMor& tau) {
    detail::common_algebra(qv, qw, "build_iterated");
    Report r;
    r.merge(check_quadruple(qv), "A_V");
    r.merge(check_quadruple(qw), "A_W");
    r.merge(check_link(qv, qw, delta), "link");
    r.merge(check_twisting(qv, qw, tau), "twisting");
    r.merge(check_sigma_conditions(qv, qw, delta, tau), "sigma_VW");
    return r;
}

inline IterSetup build_iterated(const Quadruple& qv, const Quadruple& qw, const FMor& delta, const FMor& tau) {
    require(check_iteration_hypotheses(qv, qw, delta, tau), "build_iterated");
    IterSetup s;
    s.qv = qv;
    s.qw = qw;
    s.delta = delta;
    s.tau = tau;
    s.psi_iter = psi_iter(qv, qw, delta);
    s.sigma_iter = sigma_iter(qv, qw, tau);
    s.nabla_iter = nabla_iter(qv, qw, delta);
    s.qvw = Quadruple(qv.algebra, qv.v * qw.v, s.psi_iter, s.sigma_iter);
    s.cp_v = build_crossed_product(qv);
    s.cp_w = build_crossed_product(qw);

    Report& r = s.verification;
    Report lemma = check_wmeas(s.qvw);
    lemma.merge(check_nabla(s.qvw));
    check_equal(lemma, "falso-idemp-link", comp(s.nabla_iter, s.psi_iter), s.psi_iter);
    r.merge(lemma, "A_VW");
    r.merge(check_twisted(s.qvw), "A_VW");
    r.merge(check_cocycle(s.qvw), "A_VW");
    r.merge(check_sigma_normalized(s.qvw), "A_VW");
    ensure(r, "build_iterated");
    s.cp_vw = build_crossed_product(s.qvw);
    r.merge(s.cp_vw.verification, "A_VW");
    return s;
}

struct IteratedPreunit {
    Preunit nu_vw;
    Report verification;
};

inline Report check_iterated_preunit_hypotheses(const IterSetup& s, const Preunit& nu_v, const Preunit& nu_w) {
    const Quadruple& qv = s.qv;
    const Quadruple& qw = s.qw;
    const FObj& A = qv.a();
    const FObj& V = qv.v;
    const FObj& W = qw.v;
    const FMor& mu = qv.algebra.mul;
    FMor rhs = comp(s.nabla_iter, tensor(qv.algebra.unit, V, W));
    Report r;
    r.merge(check_pre_system(s.cp_v, nu_v), "A_V");
    r.merge(check_pre_system(s.cp_w, nu_w), "A_W");
    check_equal(r, "pre-1",
                comp(tensor(mu, V, W), tensor(A, qv.sigma, W), tensor(qv.psi, s.tau), tensor(V, qw.psi, V),
                     tensor(s.delta, nu_v)),
                rhs);
    check_equal(r, "pre-2",
                comp(tensor(mu, V, W), tensor(A, qv.psi, W), tensor(A, V, qw.sigma), tensor(A, s.tau, W),
                     tensor(nu_w, V, W)),
                rhs);
    return r;
}

/// nu_{V(x)W} = nabla o (mu_A (x) V (x) W) o (A (x) psi_V (x) W) o (nu_V (x) nu_W).
inline IteratedPreunit iterated_preunit(const IterSetup& s, const Preunit& nu_v, const Preunit& nu_w) {
    require(check_iterated_preunit_hypotheses(s, nu_v, nu_w), "iterated_preunit");
    const Quadruple& qv = s.qv;
    IteratedPreunit out;
    out.nu_vw = comp(s.nabla_iter, tensor(qv.algebra.mul, qv.v, s.qw.v), tensor(qv.a(), qv.psi, s.qw.v),
                     tensor(nu_v, nu_w));
    Report& r = out.verification;
    r.merge(check_pre_system(s.cp_vw, out.nu_vw), "A_VW");
    r.merge(check_preunit(s.cp_vw.mu_big, out.nu_vw), "A_VW");
    Report n;
    check_equal(n, "nabla-nu", comp(s.cp_vw.mu_big, tensor(s.qvw.av(), out.nu_vw)), s.nabla_iter);
    r.merge(n, "A_VW");
    ensure(r, "iterated_preunit");
    return out;
}

/// W = K must give back mu_{A(x)V}, and V = W = K must give back mu_A.
inline Report check_degenerate(const Quadruple& qv) {
    const Field f = qv.field();
    Quadruple qk = unit_quadruple(qv.algebra);
    Report r;
    IterSetup w = build_iterated(qv, qk, identity(qv.v, f), identity(qv.v, f));
    check_equal(r, "degenerate-w", w.cp_vw.mu_big, product_mu(qv));
    const FMor id_k = identity(FObj::unit(), f);
    IterSetup vw = build_iterated(qk, qk, id_k, id_k);
    check_equal(r, "degenerate-vw", vw.cp_vw.mu_big, qv.algebra.mul);
    return r;
}

} // namespace wcp

#endif
