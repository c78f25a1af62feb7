#ifndef WCP_MINER_HPP
#define WCP_MINER_HPP

#include <wcp/laws.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wcp {

/// GF(p)^n with orthogonal idempotent basis.
inline MonoidData diagonal_algebra(const std::string& name, Field f, std::size_t n) {
    Mat unit(f, n, 1);
    Mat mul(f, n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        unit(i, 0) = Scalar(f, 1);
        mul(i, i * n + i) = Scalar(f, 1);
    }
    return MonoidData::make(name, unit, mul);
}

struct MinerOptions {
    std::uint32_t p = 2;
    std::size_t s = 2; // dim A
    std::size_t t = 2; // dim B
    std::uint64_t budget = 1u << 16;
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

struct MineResult {
    MonoidData a;
    MonoidData b;
    std::vector<std::uint64_t> codes; // sorted
    std::vector<FMor> laws;           // lambda: B(x)A -> A(x)B, same order as codes
    std::uint64_t searched = 0;
};

namespace detail {

/// Residue tables for the screening pass. Everything here is plain modular
/// arithmetic; finds are re-checked with check_wdl afterwards.
class WdlScreen {
public:
    WdlScreen(const MonoidData& A, const MonoidData& B, std::uint32_t p)
        : p_(p), na_(A.dim()), nb_(B.dim()), ma_(table(A.mul.mat)), mb_(table(B.mul.mat)),
          ua_(table(A.unit.mat)), ub_(table(B.unit.mat)) {
        lam_.resize(na_ * nb_ * na_ * nb_);
    }

    std::size_t entries() const { return lam_.size(); }

    /// Entry k of the code is the matrix entry at row-major position k.
    void load(std::uint64_t code) {
        for (auto& e : lam_) {
            e = static_cast<std::uint32_t>(code % p_);
            code /= p_;
        }
    }

    bool accept() const { return dl3() && dl1() && idem() && !nabla_is_identity(); }

private:
    std::uint32_t p_;
    std::size_t na_, nb_;
    std::vector<std::uint32_t> ma_, mb_, ua_, ub_, lam_;

    static std::vector<std::uint32_t> table(const Mat& m) {
        std::vector<std::uint32_t> out(m.rows() * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out[i * m.cols() + j] = static_cast<std::uint32_t>(m(i, j).residue());
        return out;
    }

    // coefficient of a2(x)b2 in lambda(b(x)a)
    std::uint32_t lam(std::size_t b, std::size_t a, std::size_t a2, std::size_t b2) const {
        return lam_[(a2 * nb_ + b2) * (nb_ * na_) + b * na_ + a];
    }
    std::uint32_t mA(std::size_t i, std::size_t j, std::size_t k) const { return ma_[k * na_ * na_ + i * na_ + j]; }
    std::uint32_t mB(std::size_t i, std::size_t j, std::size_t k) const { return mb_[k * nb_ * nb_ + i * nb_ + j]; }

    using Acc = std::vector<std::uint64_t>;
    Acc zero_ab() const { return Acc(na_ * nb_, 0); }
    bool equal(Acc& x, Acc& y) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] % p_ != y[i] % p_) return false;
        return true;
    }

    bool dl3() const {
        for (std::size_t b = 0; b < nb_; ++b)
            for (std::size_t a = 0; a < na_; ++a)
                for (std::size_t a1 = 0; a1 < na_; ++a1) {
                    Acc l = zero_ab(), r = zero_ab();
                    for (std::size_t k = 0; k < na_; ++k) {
                        std::uint64_t c = mA(a, a1, k);
                        if (!c) continue;
                        for (std::size_t x = 0; x < na_; ++x)
                            for (std::size_t y = 0; y < nb_; ++y) l[x * nb_ + y] += c * lam(b, k, x, y);
                    }
                    for (std::size_t x = 0; x < na_; ++x)
                        for (std::size_t y = 0; y < nb_; ++y) {
                            std::uint64_t c = lam(b, a, x, y);
                            if (!c) continue;
                            for (std::size_t x2 = 0; x2 < na_; ++x2)
                                for (std::size_t y2 = 0; y2 < nb_; ++y2) {
                                    std::uint64_t c2 = c * lam(y, a1, x2, y2) % p_;
                                    if (!c2) continue;
                                    for (std::size_t k = 0; k < na_; ++k) r[k * nb_ + y2] += c2 * mA(x, x2, k);
                                }
                        }
                    if (!equal(l, r)) return false;
                }
        return true;
    }

    bool dl1() const {
        for (std::size_t b = 0; b < nb_; ++b)
            for (std::size_t b1 = 0; b1 < nb_; ++b1)
                for (std::size_t a = 0; a < na_; ++a) {
                    Acc l = zero_ab(), r = zero_ab();
                    for (std::size_t k = 0; k < nb_; ++k) {
                        std::uint64_t c = mB(b, b1, k);
                        if (!c) continue;
                        for (std::size_t x = 0; x < na_; ++x)
                            for (std::size_t y = 0; y < nb_; ++y) l[x * nb_ + y] += c * lam(k, a, x, y);
                    }
                    for (std::size_t x = 0; x < na_; ++x)
                        for (std::size_t y = 0; y < nb_; ++y) {
                            std::uint64_t c = lam(b1, a, x, y);
                            if (!c) continue;
                            for (std::size_t x2 = 0; x2 < na_; ++x2)
                                for (std::size_t y2 = 0; y2 < nb_; ++y2) {
                                    std::uint64_t c2 = c * lam(b, x, x2, y2) % p_;
                                    if (!c2) continue;
                                    for (std::size_t k = 0; k < nb_; ++k) r[x2 * nb_ + k] += c2 * mB(y2, y, k);
                                }
                        }
                    if (!equal(l, r)) return false;
                }
        return true;
    }

    // lambda(eta_B (x) a) and lambda(b (x) eta_A) as A(x)B vectors
    Acc left_unit(std::size_t a) const {
        Acc v = zero_ab();
        for (std::size_t b = 0; b < nb_; ++b)
            if (ub_[b])
                for (std::size_t x = 0; x < na_; ++x)
                    for (std::size_t y = 0; y < nb_; ++y) v[x * nb_ + y] += ub_[b] * lam(b, a, x, y);
        return v;
    }
    Acc right_unit(std::size_t b) const {
        Acc v = zero_ab();
        for (std::size_t a = 0; a < na_; ++a)
            if (ua_[a])
                for (std::size_t x = 0; x < na_; ++x)
                    for (std::size_t y = 0; y < nb_; ++y) v[x * nb_ + y] += ua_[a] * lam(b, a, x, y);
        return v;
    }

    bool idem() const {
        for (std::size_t a = 0; a < na_; ++a)
            for (std::size_t b = 0; b < nb_; ++b) {
                Acc l = zero_ab(), r = zero_ab();
                Acc lu = left_unit(a);
                for (std::size_t x = 0; x < na_; ++x)
                    for (std::size_t y = 0; y < nb_; ++y) {
                        std::uint64_t c = lu[x * nb_ + y] % p_;
                        if (c)
                            for (std::size_t k = 0; k < nb_; ++k) l[x * nb_ + k] += c * mB(y, b, k);
                    }
                Acc ru = right_unit(b);
                for (std::size_t x = 0; x < na_; ++x)
                    for (std::size_t y = 0; y < nb_; ++y) {
                        std::uint64_t c = ru[x * nb_ + y] % p_;
                        if (c)
                            for (std::size_t k = 0; k < na_; ++k) r[k * nb_ + y] += c * mA(a, x, k);
                    }
                if (!equal(l, r)) return false;
            }
        return true;
    }

    bool nabla_is_identity() const {
        for (std::size_t b = 0; b < nb_; ++b) {
            Acc ru = right_unit(b);
            for (std::size_t a = 0; a < na_; ++a) {
                Acc v = zero_ab();
                for (std::size_t x = 0; x < na_; ++x)
                    for (std::size_t y = 0; y < nb_; ++y) {
                        std::uint64_t c = ru[x * nb_ + y] % p_;
                        if (c)
                            for (std::size_t k = 0; k < na_; ++k) v[k * nb_ + y] += c * mA(a, x, k);
                    }
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] % p_ != (i == a * nb_ + b ? 1u : 0u)) return false;
            }
        }
        return true;
    }
};

inline FMor decode_law(const MonoidData& A, const MonoidData& B, std::uint64_t code) {
    Field f = A.field();
    const std::uint32_t p = f.characteristic();
    FMor out = zero_mor(B.carrier * A.carrier, A.carrier * B.carrier, f);
    const std::size_t cols = out.mat.cols();
    for (std::size_t k = 0; k < out.mat.rows() * cols; ++k) {
        out.mat(k / cols, k % cols) = Scalar::residue(f, code % p);
        code /= p;
    }
    return out;
}

constexpr unsigned kShards = 4; // fixed so random mode is reproducible on any machine

} // namespace detail

/// Searches lambda: B(x)A -> A(x)B over GF(p) that are weak distributive laws
/// with nabla != id. Exhaustive mode enumerates every matrix and is complete;
/// random mode draws `budget` matrices from a seeded generator. Results are
/// sorted by code (the matrix read as base-p digits, row-major), so the seed
/// only changes the order in which shards walk the space.
inline MineResult mine_wdl(const MonoidData& A, const MonoidData& B, const MinerOptions& o) {
    Field f = A.field();
    if (f.is_rational()) throw FieldError("mine_wdl needs a prime field");
    if (!(B.field() == f)) throw FieldError("mine_wdl: algebras over different fields");
    const std::uint32_t p = f.characteristic();
    const std::size_t n = A.dim() * B.dim() * A.dim() * B.dim();
    // size of the space, saturating
    std::uint64_t space = 1;
    bool huge = false;
    for (std::size_t i = 0; i < n && !huge; ++i) {
        if (space > UINT64_MAX / p) huge = true;
        else space *= p;
    }
    if (o.exhaustive && (huge || space > o.budget))
        throw std::invalid_argument("exhaustive search space " + std::string(huge ? "> 2^64" : std::to_string(space)) +
                                    " exceeds budget " + std::to_string(o.budget));

    std::vector<std::vector<std::uint64_t>> found(detail::kShards);
    std::vector<std::uint64_t> searched(detail::kShards, 0);
    auto work = [&](unsigned shard) {
        detail::WdlScreen screen(A, B, p);
        if (o.exhaustive) {
            const std::uint64_t lo = space * shard / detail::kShards;
            const std::uint64_t hi = space * (shard + 1) / detail::kShards;
            const std::uint64_t len = hi - lo;
            const std::uint64_t start = len ? o.seed % len : 0;
            for (std::uint64_t i = 0; i < len; ++i) {
                std::uint64_t code = lo + (start + i) % len;
                screen.load(code);
                if (screen.accept()) found[shard].push_back(code);
            }
            searched[shard] = len;
        } else {
            std::mt19937_64 rng(o.seed * detail::kShards + shard);
            const std::uint64_t count = o.budget / detail::kShards + (shard < o.budget % detail::kShards ? 1 : 0);
            for (std::uint64_t i = 0; i < count; ++i) {
                std::uint64_t code = huge ? rng() : rng() % space;
                screen.load(code);
                if (screen.accept()) found[shard].push_back(code);
            }
            searched[shard] = count;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < detail::kShards; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();

    MineResult r{A, B, {}, {}, 0};
    for (unsigned s = 0; s < detail::kShards; ++s) {
        r.codes.insert(r.codes.end(), found[s].begin(), found[s].end());
        r.searched += searched[s];
    }
    std::sort(r.codes.begin(), r.codes.end());
    r.codes.erase(std::unique(r.codes.begin(), r.codes.end()), r.codes.end());
    for (std::uint64_t code : r.codes) {
        FMor lambda = detail::decode_law(A, B, code);
        Report check = check_wdl(A, B, lambda);
        check.flag("wdl-found", !(wdl_nabla(A, B, lambda) == identity(A.carrier * B.carrier, f)), "nabla != id");
        ensure(check, "mine_wdl");
        r.laws.push_back(std::move(lambda));
    }
    return r;
}

/// Default algebras: GF(p)^s and GF(p)^t.
inline MineResult mine_wdl(const MinerOptions& o) {
    Field f = Field::prime(o.p);
    return mine_wdl(diagonal_algebra("A", f, o.s), diagonal_algebra("B", f, o.t), o);
}

} // namespace wcp

#endif
