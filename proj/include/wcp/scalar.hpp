#ifndef WCP_SCALAR_HPP
#define WCP_SCALAR_HPP

#include <wcp/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>

namespace wcp {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Descriptor of the ground field: the rationals, or GF(p) for a prime p.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }

    static Field prime(std::uint64_t p) {
        if (p < 2 || p > 0xFFFFFFFFull || !is_prime(p))
            throw FieldError("GF(p) needs a prime p < 2^32, got " + std::to_string(p));
        Field f;
        f.p_ = static_cast<std::uint32_t>(p);
        return f;
    }

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string describe() const {
        return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
    }

    friend bool operator==(const Field&, const Field&) = default;

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_ = 0;
};

/// Exact element of a Field. Every arithmetic operation checks that both
/// operands live in the same field.
class Scalar {
public:
    Scalar() = default; // zero of Q

    explicit Scalar(Field f) : p_(f.characteristic()) {}

    Scalar(Field f, long long v) : p_(f.characteristic()) {
        if (p_ == 0) {
            q_ = v;
        } else {
            long long m = v % static_cast<long long>(p_);
            if (m < 0) m += p_;
            r_ = static_cast<std::uint64_t>(m);
        }
    }

    Scalar(Field f, const Rational& q) : p_(f.characteristic()) {
        if (p_ == 0) {
            q_ = q;
        } else {
            Scalar num = reduce(f, boost::multiprecision::numerator(q));
            Scalar den = reduce(f, boost::multiprecision::denominator(q));
            *this = num / den;
        }
    }

    static Scalar residue(Field f, std::uint64_t r) {
        Scalar s(f);
        s.r_ = r % f.characteristic();
        return s;
    }

    /// Parses "a", "-a" or "a/b" (rationals) or a decimal residue (prime field).
    static Scalar parse(Field f, const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Scalar(f, Rational(BigInt(text)));
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw FieldError("zero denominator in '" + text + "'");
            return Scalar(f, Rational(num, den));
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const FieldError*>(&e)) throw;
            throw FieldError("not a scalar literal: '" + text + "'");
        }
    }

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint64_t residue() const noexcept { return r_; }
    const Rational& rational() const noexcept { return q_; }

    bool is_zero() const noexcept { return p_ == 0 ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    Scalar& operator+=(const Scalar& o) {
        same_field(o);
        if (p_ == 0) q_ += o.q_;
        else r_ = (r_ + o.r_) % p_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        same_field(o);
        if (p_ == 0) q_ -= o.q_;
        else r_ = (r_ + p_ - o.r_) % p_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        same_field(o);
        if (p_ == 0) q_ *= o.q_;
        else r_ = (r_ * o.r_) % p_;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar operator-() const {
        Scalar s(*this);
        if (p_ == 0) s.q_ = -q_;
        else s.r_ = (p_ - r_) % p_;
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw FieldError("division by zero");
        Scalar s(*this);
        if (p_ == 0) {
            s.q_ = 1 / q_;
        } else {
            s.r_ = pow_mod(r_, p_ - 2, p_);
        }
        return s;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.p_ == b.p_ && (a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_);
    }

    /// "a" or "a/b" for rationals, the residue in 0..p-1 otherwise.
    std::string to_string() const {
        if (p_ != 0) return std::to_string(r_);
        auto num = boost::multiprecision::numerator(q_);
        auto den = boost::multiprecision::denominator(q_);
        return den == 1 ? num.str() : num.str() + "/" + den.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    static Scalar reduce(Field f, const BigInt& z) {
        BigInt m = z % f.characteristic();
        if (m < 0) m += f.characteristic();
        return residue(f, m.convert_to<std::uint64_t>());
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1 % m;
        b %= m;
        while (e) {
            if (e & 1) r = r * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return r;
    }

    void same_field(const Scalar& o) const {
        if (p_ != o.p_)
            throw FieldError("mixed fields: " + field().describe() + " vs " + o.field().describe());
    }

    std::uint32_t p_ = 0;
    std::uint64_t r_ = 0;
    Rational q_;
};

} // namespace wcp

#endif
