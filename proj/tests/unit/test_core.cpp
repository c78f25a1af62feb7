#include "shared.hpp"

#include <gtest/gtest.h>

using namespace wcp;
using testing_support::bump;
using testing_support::fixture;
using testing_support::fixtures;

namespace {

Quadruple ordinary(Field f) {
    MonoidData A = group_algebra("A", f, 2);
    MonoidData B = dual_numbers("B", f);
    return quadruple_from_twisting_map(A, B, swap(B.carrier, A.carrier, f));
}

Quadruple broken_cocycle() {
    const Quadruple& q = fixture("skew-double").data.qv;
    for (std::size_t r = 0; r < q.sigma.mat.rows(); ++r)
        for (std::size_t c = 0; c < q.sigma.mat.cols(); ++c) {
            Quadruple b(q.algebra, q.v, q.psi, bump(q.sigma, r, c));
            if (!check_cocycle(b).ok()) return b;
        }
    throw std::logic_error("no cocycle-breaking entry");
}

} // namespace

TEST(Quadruple, ShapeIsChecked) {
    const Quadruple& q = fixture("skew-double").data.qv;
    EXPECT_THROW(Quadruple(q.algebra, q.v, q.sigma, q.sigma), DimensionError);
    EXPECT_THROW(Quadruple(q.algebra, FObj("V", 3), q.psi, q.sigma), DimensionError);
}

TEST(Quadruple, StandardFixturesPass) {
    for (const auto& fx : fixtures()) {
        EXPECT_TRUE(check_quadruple(fx.data.qv).ok()) << fx.name;
        EXPECT_TRUE(check_quadruple(fx.data.qw).ok()) << fx.name;
        EXPECT_TRUE(check_derived_identities(fx.data.qv).ok()) << fx.name;
    }
}

TEST(Quadruple, CorruptedSigmaHasWitness) {
    Quadruple q = broken_cocycle();
    Report r = check_quadruple(q);
    EXPECT_TRUE(r.passed("wmeas-wcp"));
    EXPECT_FALSE(r.passed("cocy2-wcp"));
    const Check* c = r.first_failure();
    ASSERT_NE(c, nullptr);
    ASSERT_TRUE(c->witness.has_value());
    EXPECT_EQ(c->witness->input.size(), 3u); // A, V, V
    EXPECT_NE(c->witness->lhs, c->witness->rhs);
    try {
        build_crossed_product(q);
        FAIL();
    } catch (const InternalError&) {
        FAIL() << "hypothesis failure reported as internal";
    } catch (const PreconditionError& e) {
        EXPECT_FALSE(e.report().ok());
        EXPECT_NE(std::string(e.what()).find("build_crossed_product"), std::string::npos);
    }
}

TEST(Quadruple, OrdinaryTensorProductIsComponentwise) {
    for (Field f : {Field::rationals(), Field::prime(3)}) {
        Quadruple q = ordinary(f);
        EXPECT_EQ(nabla(q), identity(q.av(), f));
        MonoidData A = group_algebra("A", f, 2);
        MonoidData B = dual_numbers("B", f);
        FMor mu = product_mu(q);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t v = 0; v < 2; ++v)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t w = 0; w < 2; ++w)
                        for (std::size_t k = 0; k < 2; ++k)
                            for (std::size_t l = 0; l < 2; ++l) {
                                Scalar want = A.mul.mat(k, a * 2 + b) * B.mul.mat(l, v * 2 + w);
                                EXPECT_EQ(mu.mat(k * 2 + l, ((a * 2 + v) * 2 + b) * 2 + w), want);
                            }
    }
}

TEST(Quadruple, SkewProductFrozenValue) {
    FMor mu = product_mu(fixture("skew-double").data.qv);
    // (1 (x) g)(x (x) e) = 2x (x) g over GF(3); input (a,v,b,w) = (1,g,x,e)
    const std::size_t col = ((0 * 2 + 1) * 2 + 1) * 2 + 0;
    for (std::size_t row = 0; row < 4; ++row)
        EXPECT_EQ(mu.mat(row, col).to_string(), row == 3 ? "2" : "0") << row;
    // cocycle twist: (1 (x) g)(1 (x) g) = 2 (1 (x) e)
    FMor mu_c = product_mu(fixture("dp-cocycle").data.qv);
    const std::size_t gg = ((0 * 2 + 1) * 2 + 0) * 2 + 1;
    EXPECT_EQ(mu_c.mat(0, gg).to_string(), "2");
}

TEST(Quadruple, WmeasOnlyGetsFiNab) {
    const Quadruple& base = fixture("skew-double").data.qv;
    FMor sigma = base.sigma;
    for (std::size_t r = 0; r < sigma.mat.rows(); ++r)
        for (std::size_t c = 0; c < sigma.mat.cols(); ++c) sigma.mat(r, c) = Scalar(sigma.field(), 1);
    Quadruple q(base.algebra, base.v, base.psi, sigma);
    ASSERT_TRUE(check_wmeas(q).ok());
    ASSERT_FALSE(check_twisted(q).ok());
    Report r = check_derived_identities(q);
    EXPECT_TRUE(r.passed("fi-nab"));
    EXPECT_FALSE(r.has("c1"));
    std::vector<std::string> skipped;
    for (const auto& s : r.skipped()) skipped.push_back(s.label);
    EXPECT_EQ(skipped, (std::vector<std::string>{"c1", "aw", "c11", "aw1"}));
}

TEST(Quadruple, WeakFixtureHasProperIdempotent) {
    const Quadruple& q = fixture("mined-wdl-GF2").data.qv;
    CrossedProduct cp = build_crossed_product(q);
    EXPECT_LT(cp.split.rank, q.av().dim());
    EXPECT_GT(cp.split.rank, 0u);
    EXPECT_EQ(cp.small.dim(), cp.split.rank);
    EXPECT_TRUE(cp.verification.ok());
    EXPECT_EQ(comp(cp.proj, cp.inj), identity(cp.small, q.field()));
}

TEST(Quadruple, NormalizeSigma) {
    const Quadruple& q = fixture("mined-wdl-GF2").data.qv;
    Quadruple n = normalize_sigma(q);
    EXPECT_TRUE(check_sigma_normalized(n).ok());
    EXPECT_EQ(product_mu(n), product_mu(q));
}

TEST(Preunit, UnitalProducts) {
    for (const auto& fx : fixtures()) {
        CrossedProduct cp = build_crossed_product(fx.data.qv);
        EXPECT_TRUE(check_pre_system(cp, fx.data.nu_v).ok()) << fx.name;
        UnitalCrossedProduct u = build_unital(cp, fx.data.nu_v);
        EXPECT_TRUE(u.verification.ok()) << fx.name;
        EXPECT_TRUE(check_monoid(u.small_monoid).ok()) << fx.name;
        EXPECT_EQ(nabla_nu(cp.mu_big, fx.data.nu_v), cp.nabla) << fx.name;
    }
}

TEST(Preunit, ZeroPreunitFails) {
    const Quadruple& q = fixture("skew-double").data.qv;
    CrossedProduct cp = build_crossed_product(q);
    Preunit zero = make_preunit(q, Mat::zero(q.field(), 4, 1));
    Report r = check_pre_system(cp, zero);
    EXPECT_FALSE(r.passed("pre1-wcp"));
    // every side of the preunit identities vanishes at 0; only the idempotent tells
    EXPECT_TRUE(check_preunit(cp.mu_big, zero).ok());
    EXPECT_FALSE(nabla_nu(cp.mu_big, zero) == cp.nabla);
    EXPECT_THROW(build_unital(cp, zero), PreconditionError);
    EXPECT_THROW(check_pre_system(cp, FMor(FObj::unit(), FObj("V", 2), Mat::zero(q.field(), 2, 1))),
                 DimensionError);
}

TEST(Preunit, RoundTrip) {
    for (const auto& fx : fixtures()) {
        const Quadruple& q = fx.data.qv;
        FMor mu = product_mu(q);
        Report log;
        Quadruple back = derive_psi_sigma(q.algebra, q.v, mu, fx.data.nu_v, &log);
        EXPECT_TRUE(log.passed("round-trip")) << fx.name;
        EXPECT_EQ(product_mu(back), mu) << fx.name;
    }
}

TEST(Preunit, DeriveRejectsNonAssociative) {
    const Fixture& fx = fixture("skew-double");
    const Quadruple& q = fx.data.qv;
    FMor mu = bump(product_mu(q), 0, 0);
    try {
        derive_psi_sigma(q.algebra, q.v, mu, fx.data.nu_v);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_FALSE(e.report().ok());
    }
}
