#ifndef WCP_ISO3_HPP
#define WCP_ISO3_HPP

#include <wcp/iterate.hpp>

namespace wcp {

inline Report check_newit(const IterSetup& s, const Preunit& nu_v, const Preunit& nu_w) {
    const Quadruple& qv = s.qv;
    const Quadruple& qw = s.qw;
    const FObj& A = qv.a();
    const FObj& V = qv.v;
    const FObj& W = qw.v;
    const FMor& n = s.nabla_iter;
    (void)nu_v;
    FMor mv = qv.mu_v();
    FMor twist_part = comp(mv, tensor(A, qv.psi), tensor(qv.sigma, A));
    FMor sig_part = comp(mv, tensor(A, qv.sigma));
    FMor psi_part = comp(mv, tensor(A, qv.psi));
    Report r;
    check_equal(r, "new-it-1", comp(n, tensor(twist_part, W), tensor(V, V, nu_w)),
                comp(n, tensor(sig_part, W), tensor(qv.psi, s.tau), tensor(V, nu_w, V)));
    check_equal(r, "new-it-2", comp(n, tensor(qv.sigma, W)),
                comp(tensor(psi_part, W), tensor(qv.sigma, qw.psi), tensor(V, s.delta, qv.algebra.unit)));
    FMor pw = comp(tensor(qv.psi, W), tensor(V, qw.sigma));
    check_equal(r, "new-it-3", comp(n, pw), comp(pw, tensor(s.delta, W)));
    return r;
}

struct IsoBundle {
    IterSetup setup;
    Preunit nu_v;
    Preunit nu_w;
    Preunit nu_vw;
    UnitalCrossedProduct ucp_v;
    UnitalCrossedProduct ucp_w;
    UnitalCrossedProduct ucp_vw;
    FMor i_axv;        // A x V -> A x (V (x) W)
    FMor i_w;          // W -> A x (V (x) W)
    FMor nabla_axv_w;  // on (A x V) (x) W
    FMor inj_outer;    // (A x V) x W -> (A x V) (x) W
    FMor proj_outer;
    FMor omega;        // (A x V) x W -> A x (V (x) W)
    FMor omega_inv;
    Report verification;
};

/// Assembles i_{AxV}, i_W and nabla_{(AxV)(x)W}, and checks the claims that
/// hold for them under new-it-1 and new-it-2.
inline IsoBundle build_embeddings(const IterSetup& s, const Preunit& nu_v, const Preunit& nu_w) {
    Report pre = check_iterated_preunit_hypotheses(s, nu_v, nu_w);
    pre.merge(check_newit(s, nu_v, nu_w));
    require(pre, "build_embeddings");

    IsoBundle b;
    b.setup = s;
    b.nu_v = nu_v;
    b.nu_w = nu_w;
    IteratedPreunit ip = iterated_preunit(s, nu_v, nu_w);
    b.nu_vw = ip.nu_vw;
    b.ucp_v = build_unital(s.cp_v, nu_v);
    b.ucp_w = build_unital(s.cp_w, nu_w);
    b.ucp_vw = build_unital(s.cp_vw, b.nu_vw);

    const Quadruple& qv = s.qv;
    const FObj& A = qv.a();
    const FObj& W = s.qw.v;
    const CrossedProduct& cv = s.cp_v;
    const CrossedProduct& cvw = s.cp_vw;
    b.i_axv = comp(cvw.proj, tensor(qv.algebra.mul, qv.v, W), tensor(A, qv.psi, W), tensor(cv.inj, nu_w));
    b.i_w = comp(cvw.proj, tensor(nu_v, W));
    b.nabla_axv_w = comp(tensor(cv.proj, W), s.nabla_iter, tensor(cv.inj, W));

    const MonoidData& B = b.ucp_v.small_monoid;
    const MonoidData& T = b.ucp_vw.small_monoid;
    const FMor& n = b.nabla_axv_w;
    Report& r = b.verification;
    r.merge(ip.verification);
    check_equal(r, "i-axv-mult", comp(b.i_axv, B.mul), comp(T.mul, tensor(b.i_axv, b.i_axv)));
    check_equal(r, "i-axv-unit", comp(b.i_axv, B.unit), T.unit);
    check_equal(r, "nabla-axv-w-idempotent", comp(n, n), n);
    check_equal(r, "nabla-axv-w-linear", comp(n, tensor(B.mul, W)), comp(tensor(B.mul, W), tensor(B.carrier, n)));
    ensure(r, "build_embeddings");
    return b;
}

/// omega = p_{A(x)V(x)W} o (i_{A(x)V} (x) W) o i_{(AxV)(x)W} and its inverse
/// p_{(AxV)(x)W} o (p_{A(x)V} (x) W) o i_{A(x)V(x)W}.
inline void build_omega(IsoBundle& b) {
    const IterSetup& s = b.setup;
    const FObj& W = s.qw.v;
    const CrossedProduct& cv = s.cp_v;
    const CrossedProduct& cvw = s.cp_vw;
    auto [i, p] = split_mor(b.nabla_axv_w, cross_name(cv.small.factors().front().name, W));
    b.inj_outer = i;
    b.proj_outer = p;
    b.omega = comp(cvw.proj, tensor(cv.inj, W), i);
    b.omega_inv = comp(p, tensor(cv.proj, W), cvw.inj);

    const MonoidData& T = b.ucp_vw.small_monoid;
    Report r;
    r.flag("nabla-rank", rank(b.nabla_axv_w.mat) == rank(s.nabla_iter.mat),
           "rank " + std::to_string(rank(b.nabla_axv_w.mat)) + " vs " + std::to_string(rank(s.nabla_iter.mat)));
    check_equal(r, "omega-inverse-left", comp(b.omega_inv, b.omega), identity(i.dom, T.field()));
    check_equal(r, "omega-inverse-right", comp(b.omega, b.omega_inv), identity(T.carrier, T.field()));
    check_equal(r, "omega-p", comp(b.omega, p), comp(T.mul, tensor(b.i_axv, b.i_w)));
    b.verification.merge(r);
    ensure(r, "build_omega");
}

struct OuterProduct {
    Quadruple quadruple; // (A x V, W, psi, sigma) obtained by transport
    Preunit nu;
    UnitalCrossedProduct ucp;
};

/// The weak crossed product structure on (A x V) (x) W. With T = A x (V (x) W)
/// and i' the injection of nabla_{(AxV)(x)W}:
///   psi   = i' o omega^-1 o mu_T o (i_W (x) i_{AxV})
///   sigma = i' o omega^-1 o mu_T o (i_W (x) i_W)
///   nu    = i' o omega^-1 o eta_T
/// Its idempotent must come out as nabla_{(AxV)(x)W}; that and associativity
/// are checked, not assumed.
inline OuterProduct outer_product(const IsoBundle& b, Report& r) {
    const MonoidData& B = b.ucp_v.small_monoid;
    const MonoidData& T = b.ucp_vw.small_monoid;
    const FObj& W = b.setup.qw.v;
    FMor back = comp(b.inj_outer, b.omega_inv);
    OuterProduct o;
    FMor psi = comp(back, T.mul, tensor(b.i_w, b.i_axv));
    FMor sigma = comp(back, T.mul, tensor(b.i_w, b.i_w));
    o.quadruple = Quadruple(B, W, psi, sigma);
    o.nu = comp(back, T.unit);
    Report q = check_quadruple(o.quadruple);
    r.merge(q, "outer");
    if (!q.ok()) return o;
    Report n;
    check_equal(n, "outer-nabla", o.quadruple.nabla_cache, b.nabla_axv_w);
    r.merge(n, "outer");
    if (!n.ok()) return o;
    CrossedProduct cp = build_crossed_product(o.quadruple);
    Report pre = check_pre_system(cp, o.nu);
    r.merge(pre, "outer");
    if (!pre.ok()) return o;
    o.ucp = build_unital(cp, o.nu);
    r.merge(cp.verification, "outer").merge(o.ucp.verification, "outer");
    return o;
}

/// omega o mu_{(AxV)xW} = mu_T o (omega (x) omega) and omega o eta = eta_T.
inline Report verify_monoid_iso(const IsoBundle& b) {
    Report r;
    OuterProduct o = outer_product(b, r);
    if (!r.ok()) {
        r.skip("monoid-iso-mult", "outer structure invalid");
        r.skip("monoid-iso-unit", "outer structure invalid");
        return r;
    }
    const MonoidData& T = b.ucp_vw.small_monoid;
    const MonoidData& P = o.ucp.small_monoid;
    if (!(P.carrier == b.inj_outer.dom))
        throw InternalError("verify_monoid_iso: outer splitting differs from nabla_{(AxV)(x)W}'s", r);
    check_equal(r, "monoid-iso-mult", comp(b.omega, P.mul), comp(T.mul, tensor(b.omega, b.omega)));
    check_equal(r, "monoid-iso-unit", comp(b.omega, P.unit), T.unit);
    return r;
}

} // namespace wcp

#endif
