#ifndef WCP_FIXTURES_HPP
#define WCP_FIXTURES_HPP

#include <wcp/miner.hpp>

#include <functional>
#include <optional>

namespace wcp {

/// Algebra from a product rule: prod(i, j) lists the coefficients of e_i e_j.
inline MonoidData algebra_from(const std::string& name, Field f, std::size_t n,
                               const std::function<std::vector<long long>(std::size_t, std::size_t)>& prod,
                               const std::vector<long long>& unit) {
    Mat u(f, n, 1);
    Mat m(f, n, n * n);
    for (std::size_t k = 0; k < n; ++k) u(k, 0) = Scalar(f, unit.at(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto c = prod(i, j);
            for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = Scalar(f, c.at(k));
        }
    return MonoidData::make(name, u, m);
}

/// k[Z/n], basis the group elements.
inline MonoidData group_algebra(const std::string& name, Field f, std::size_t n) {
    std::vector<long long> unit(n, 0);
    unit[0] = 1;
    return algebra_from(name, f, n,
                        [n](std::size_t i, std::size_t j) {
                            std::vector<long long> c(n, 0);
                            c[(i + j) % n] = 1;
                            return c;
                        },
                        unit);
}

/// k[x]/(x^2), basis 1, x.
inline MonoidData dual_numbers(const std::string& name, Field f) {
    return algebra_from(name, f, 2,
                        [](std::size_t i, std::size_t j) {
                            std::vector<long long> c(2, 0);
                            if (i + j < 2) c[i + j] = 1;
                            return c;
                        },
                        {1, 0});
}

/// A linear map B(x)A -> A(x)B from its values on basis tensors;
/// value(b, a) lists coefficients of e_a2 (x) e_b2 at a2 * dim B + b2.
inline FMor law_from(const MonoidData& A, const MonoidData& B,
                     const std::function<std::vector<long long>(std::size_t, std::size_t)>& value) {
    Field f = A.field();
    const std::size_t na = A.dim(), nb = B.dim();
    FMor out = zero_mor(B.carrier * A.carrier, A.carrier * B.carrier, f);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t a = 0; a < na; ++a) {
            auto c = value(b, a);
            for (std::size_t k = 0; k < na * nb; ++k) out.mat(k, b * na + a) = Scalar(f, c.at(k));
        }
    return out;
}

/// lambda(y^b (x) x^a) = q^(ab) x^a (x) y^b on truncated polynomial algebras.
inline FMor quantum_law(const MonoidData& A, const MonoidData& B, long long q) {
    return law_from(A, B, [&](std::size_t b, std::size_t a) {
        std::vector<long long> c(A.dim() * B.dim(), 0);
        c[a * B.dim() + b] = (a && b) ? q : 1;
        return c;
    });
}

inline FMor flip_law(const MonoidData& A, const MonoidData& B) {
    return swap(B.carrier, A.carrier, A.field());
}

/// Fixture with everything the iteration and isomorphism pipelines need.
struct Fixture {
    std::string name;
    std::string kind; // "dl", "wdl" or "brz"
    TripleData data;
    std::optional<LawTriple> triple;
    std::optional<BrzezinskiData> brz_v, brz_w;
};

inline Fixture triple_fixture(std::string name, const LawTriple& x) {
    Fixture fx;
    fx.name = std::move(name);
    fx.kind = x.weak ? "wdl" : "dl";
    fx.data = triple_data(x);
    fx.triple = x;
    return fx;
}

/// S = k[Z/2], T = k[x]/(x^2), D = k x k, all entwinings the flip.
inline LawTriple flip_triple(Field f) {
    MonoidData S = group_algebra("S", f, 2);
    MonoidData T = dual_numbers("T", f);
    MonoidData D = diagonal_algebra("D", f, 2);
    return LawTriple{S, T, D, flip_law(S, T), flip_law(T, D), flip_law(S, D), false};
}

/// k[x]/(x^2), k[y]/(y^2), k[z]/(z^2) over GF(5), q-commuting pairwise.
inline LawTriple quantum_triple(long long q1 = 2, long long q2 = 3, long long q3 = 4) {
    Field f = Field::prime(5);
    MonoidData S = dual_numbers("S", f);
    MonoidData T = dual_numbers("T", f);
    MonoidData D = dual_numbers("D", f);
    return LawTriple{S, T, D, quantum_law(S, T, q1), quantum_law(T, D, q2), quantum_law(S, D, q3), false};
}

/// (A, k[Z/2]) with g acting on A by `act` (an involutive automorphism, n x n)
/// and sigma(g^i (x) g^j) = c^(ij) 1 (x) g^(i+j). eta_V is the identity element.
inline BrzezinskiData skew_z2(const MonoidData& A, const std::string& v, const Mat& act, long long c = 1) {
    Field f = A.field();
    const std::size_t n = A.dim();
    FObj V(v, 2);
    FMor psi = zero_mor(V * A.carrier, A.carrier * V, f);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k)
                psi.mat(k * 2 + g, g * n + a) = g ? act(k, a) : Scalar(f, k == a ? 1 : 0);
    FMor sigma = zero_mor(V * V, A.carrier * V, f);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t h = 0; h < 2; ++h)
            for (std::size_t k = 0; k < n; ++k)
                sigma.mat(k * 2 + (g ^ h), g * 2 + h) = A.unit.mat(k, 0) * Scalar(f, g && h ? c : 1);
    FMor eta(FObj::unit(), V, Mat::basis(f, 2, 0));
    return BrzezinskiData{Quadruple(A, V, psi, sigma), eta};
}

/// GF(3)[x]/(x^2 - 1), basis 1, x.
inline MonoidData skew_base(Field f = Field::prime(3)) { return group_algebra("A", f, 2); }

/// x -> -x
inline Mat sign_action(Field f) { return Mat::of(f, {{1, 0}, {0, -1}}); }

inline Fixture brz_fixture(std::string name, BrzezinskiData bv, BrzezinskiData bw) {
    Fixture fx;
    fx.name = std::move(name);
    fx.kind = "brz";
    Field f = bv.quadruple.field();
    const FObj& V = bv.quadruple.v;
    const FObj& W = bw.quadruple.v;
    fx.data.qv = bv.quadruple;
    fx.data.qw = bw.quadruple;
    fx.data.delta = identity(V * W, f);
    fx.data.tau = swap(W, V, f);
    fx.data.nu_v = tensor(bv.quadruple.algebra.unit, bv.eta_v);
    fx.data.nu_w = tensor(bw.quadruple.algebra.unit, bw.eta_v);
    fx.brz_v = std::move(bv);
    fx.brz_w = std::move(bw);
    return fx;
}

/// Z/2 x Z/2 acting on GF(3)[x]/(x^2 - 1), both generators by x -> -x.
inline Fixture skew_double() {
    MonoidData A = skew_base();
    Mat act = sign_action(A.field());
    return brz_fixture("skew-double", skew_z2(A, "V", act), skew_z2(A, "W", act));
}

/// V twisted by the scalar cocycle c(g, g) = 2, W acting trivially.
inline Fixture dp_cocycle() {
    MonoidData A = skew_base();
    Field f = A.field();
    return brz_fixture("dp-cocycle", skew_z2(A, "V", sign_action(f), 2), skew_z2(A, "W", Mat::identity(f, 2)));
}

struct MinedTriple {
    LawTriple triple;
    std::uint64_t codes[3];
    std::size_t candidates = 0; // nonzero weak laws found
    std::size_t compatible = 0; // triples passing YB-Comp
    std::size_t nabla_rank = 0;
};

/// S = T = D = GF(2) x GF(2). Every nonzero mined law is tried in each of the
/// three slots; among the triples satisfying YB-Comp the one whose iterated
/// nabla has the largest rank wins, ties broken by code order.
inline MinedTriple mined_wdl_triple() {
    MinerOptions o;
    o.exhaustive = true;
    MineResult found = mine_wdl(o);
    Field f = Field::prime(2);
    MonoidData S = diagonal_algebra("S", f, 2);
    MonoidData T = diagonal_algebra("T", f, 2);
    MonoidData D = diagonal_algebra("D", f, 2);
    std::vector<std::size_t> use;
    for (std::size_t i = 0; i < found.laws.size(); ++i)
        if (!found.laws[i].mat.is_zero()) use.push_back(i);
    auto as = [&](const MonoidData& A, const MonoidData& B, std::size_t i) {
        return found.laws[i].as(B.carrier * A.carrier, A.carrier * B.carrier);
    };
    MinedTriple best{};
    best.candidates = use.size();
    bool have = false;
    for (std::size_t i : use)
        for (std::size_t j : use)
            for (std::size_t k : use) {
                FMor l1 = as(S, T, i), l2 = as(T, D, j), l3 = as(S, D, k);
                if (!check_yang_baxter(S, T, D, l1, l2, l3).ok()) continue;
                ++best.compatible;
                FMor delta = wdl_nabla(T, D, l2);
                FMor psi = comp(tensor(l1, D.carrier), tensor(T.carrier, l3), tensor(delta, S.carrier));
                FMor n = comp(tensor(S.mul, T.carrier, D.carrier), tensor(S.carrier, psi),
                              tensor(S.carrier, T.carrier, D.carrier, S.unit));
                std::size_t rk = rank(n.mat);
                if (!have || rk > best.nabla_rank) {
                    have = true;
                    best.triple = LawTriple{S, T, D, l1, l2, l3, true};
                    best.codes[0] = found.codes[i];
                    best.codes[1] = found.codes[j];
                    best.codes[2] = found.codes[k];
                    best.nabla_rank = rk;
                }
            }
    if (!have) throw std::runtime_error("mined_wdl_triple: no Yang-Baxter compatible triple");
    return best;
}

/// The iteration fixtures: flip over Q and GF(3), quantum plane over GF(5),
/// the skew double, the mined weak triple and the cocycle-twisted DP pair.
inline std::vector<Fixture> standard_fixtures() {
    std::vector<Fixture> out;
    out.push_back(triple_fixture("flip-Q", flip_triple(Field::rationals())));
    out.push_back(triple_fixture("flip-GF3", flip_triple(Field::prime(3))));
    out.push_back(triple_fixture("quantum-GF5", quantum_triple()));
    out.push_back(skew_double());
    out.push_back(triple_fixture("mined-wdl-GF2", mined_wdl_triple().triple));
    out.push_back(dp_cocycle());
    return out;
}

} // namespace wcp

#endif
