#include "shared.hpp"

#include <gtest/gtest.h>

using namespace wcp;
using testing_support::bump;
using testing_support::fixture;
using testing_support::fixtures;

TEST(Iterate, StandardFixturesBuild) {
    for (const auto& fx : fixtures()) {
        const TripleData& d = fx.data;
        Report h = check_iteration_hypotheses(d.qv, d.qw, d.delta, d.tau);
        EXPECT_TRUE(h.ok()) << fx.name;
        IterSetup s = build_iterated(d.qv, d.qw, d.delta, d.tau);
        EXPECT_TRUE(s.verification.ok()) << fx.name;
        EXPECT_EQ(s.qvw.v, d.qv.v * d.qw.v);
        EXPECT_EQ(s.cp_vw.split.rank, rank(s.nabla_iter.mat)) << fx.name;
        IteratedPreunit p = iterated_preunit(s, d.nu_v, d.nu_w);
        EXPECT_TRUE(p.verification.ok()) << fx.name;
        EXPECT_TRUE(check_monoid(build_unital(s.cp_vw, p.nu_vw).small_monoid).ok()) << fx.name;
    }
}

TEST(Iterate, ScopesNameTheStructure) {
    const TripleData& d = fixture("skew-double").data;
    Report h = check_iteration_hypotheses(d.qv, d.qw, d.delta, d.tau);
    bool saw_link = false, saw_v = false;
    for (const auto& c : h.checks()) {
        saw_link |= c.scope == "link";
        saw_v |= c.scope == "A_V";
    }
    EXPECT_TRUE(saw_link);
    EXPECT_TRUE(saw_v);
}

TEST(Iterate, ZeroDeltaBreaksSigmaConditions) {
    for (const char* name : {"skew-double", "mined-wdl-GF2"}) {
        const TripleData& d = fixture(name).data;
        FMor zero = zero_mor(d.delta.dom, d.delta.cod, d.delta.field());
        Report r = check_sigma_conditions(d.qv, d.qw, zero, d.tau);
        EXPECT_FALSE(r.passed("sigma1")) << name;
        EXPECT_THROW(build_iterated(d.qv, d.qw, zero, d.tau), PreconditionError) << name;
    }
}

TEST(Iterate, BumpedTauBreaksTwisting) {
    const TripleData& d = fixture("skew-double").data;
    FMor tau = bump(d.tau, 0, 0);
    Report r = check_twisting(d.qv, d.qw, tau);
    EXPECT_FALSE(r.ok());
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_TRUE(r.first_failure()->witness.has_value());
}

TEST(Iterate, ShapeErrors) {
    const TripleData& d = fixture("skew-double").data;
    EXPECT_THROW(check_twisting(d.qv, d.qw, d.delta), DimensionError);
    EXPECT_THROW(check_link(d.qv, d.qw, d.tau), DimensionError);
    const TripleData& other = fixture("flip-GF3").data;
    EXPECT_THROW(build_iterated(d.qv, other.qw, d.delta, d.tau), Error);
}

TEST(Iterate, DegenerateCases) {
    for (const auto& fx : fixtures()) {
        Report r = check_degenerate(fx.data.qv);
        EXPECT_TRUE(r.passed("degenerate-w")) << fx.name;
        EXPECT_TRUE(r.passed("degenerate-vw")) << fx.name;
    }
}

TEST(Iterate, UnitQuadrupleIsTheAlgebra) {
    MonoidData a = dual_numbers("A", Field::prime(7));
    Quadruple q = unit_quadruple(a);
    EXPECT_TRUE(check_quadruple(q).ok());
    EXPECT_EQ(product_mu(q).mat, a.mul.mat);
}

TEST(Iso, StandardFixtures) {
    for (const auto& fx : fixtures()) {
        const TripleData& d = fx.data;
        IterSetup s = build_iterated(d.qv, d.qw, d.delta, d.tau);
        EXPECT_TRUE(check_newit(s, d.nu_v, d.nu_w).ok()) << fx.name;
        IsoBundle b = build_embeddings(s, d.nu_v, d.nu_w);
        build_omega(b);
        EXPECT_TRUE(b.verification.passed("nabla-rank")) << fx.name;
        Report r = verify_monoid_iso(b);
        EXPECT_TRUE(r.ok()) << fx.name;
        EXPECT_TRUE(r.passed("monoid-iso-mult")) << fx.name;
        EXPECT_TRUE(r.passed("monoid-iso-unit")) << fx.name;
        EXPECT_TRUE(r.passed("outer-nabla")) << fx.name;
    }
}

TEST(Iso, OmegaIsBijective) {
    const TripleData& d = fixture("mined-wdl-GF2").data;
    IterSetup s = build_iterated(d.qv, d.qw, d.delta, d.tau);
    IsoBundle b = build_embeddings(s, d.nu_v, d.nu_w);
    build_omega(b);
    EXPECT_EQ(rank(b.omega.mat), b.omega.mat.rows());
    EXPECT_EQ(b.omega.mat.rows(), b.omega.mat.cols());
    EXPECT_EQ(b.omega.dom.factors().front().name, "(SxT)xD");
}
