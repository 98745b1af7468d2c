#pragma once

// Exact rational scalar. Values whose numerator and denominator fit in
// int64 are kept inline; anything larger spills to a GMP mpq_class.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gkf {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    do {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

inline u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

inline bool fits_i64(i128 v)
{
    return v >= static_cast<i128>(std::numeric_limits<std::int64_t>::min()) + 1 &&
           v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

inline mpz_class to_mpz(i128 v)
{
    const bool neg = v < 0;
    u128 m = abs_u128(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

inline mpz_class to_mpz(std::int64_t v) { return to_mpz(static_cast<i128>(v)); }

} // namespace detail

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : num_(v) // NOLINT(google-explicit-constructor)
    {
        if (v == std::numeric_limits<std::int64_t>::min()) set_big(mpq_class(detail::to_mpz(v)));
    }
    Rational(int v) : Rational(static_cast<std::int64_t>(v)) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) { assign_i128(num, den); }
    explicit Rational(const mpz_class& v) { assign_mpq(mpq_class(v)); }
    explicit Rational(mpq_class v)
    {
        v.canonicalize();
        assign_mpq(std::move(v));
    }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_)
    {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Parses "a" or "a/b" with optional sign.
    static Rational parse(std::string_view text)
    {
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        q.canonicalize();
        return Rational(std::move(q));
    }

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    [[nodiscard]] int sign() const
    {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    [[nodiscard]] mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : detail::to_mpz(num_); }
    [[nodiscard]] mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : detail::to_mpz(den_); }
    [[nodiscard]] mpq_class to_mpq() const
    {
        if (big_) return *big_;
        mpq_class q(detail::to_mpz(num_), detail::to_mpz(den_));
        return q;
    }

    /// Residue modulo an odd prime p < 2^63; the denominator must be a unit mod p.
    [[nodiscard]] std::uint64_t mod(std::uint64_t p) const;

    [[nodiscard]] std::string str() const
    {
        if (big_) return big_->get_str();
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const
    {
        Rational r(*this);
        r.negate();
        return r;
    }
    void negate()
    {
        if (big_) {
            *big_ = -*big_;
        } else {
            num_ = -num_;
        }
    }

    Rational& operator+=(const Rational& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                    num_ = s;
                    return *this;
                }
            }
            const detail::i128 n = static_cast<detail::i128>(num_) * o.den_ + static_cast<detail::i128>(o.num_) * den_;
            const detail::i128 d = static_cast<detail::i128>(den_) * o.den_;
            assign_i128(n, d);
            return *this;
        }
        assign_mpq(to_mpq() + o.to_mpq());
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t s;
                if (!__builtin_sub_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                    num_ = s;
                    return *this;
                }
            }
            const detail::i128 n = static_cast<detail::i128>(num_) * o.den_ - static_cast<detail::i128>(o.num_) * den_;
            const detail::i128 d = static_cast<detail::i128>(den_) * o.den_;
            assign_i128(n, d);
            return *this;
        }
        assign_mpq(to_mpq() - o.to_mpq());
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t s;
                if (!__builtin_mul_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                    num_ = s;
                    return *this;
                }
            }
            // cross-cancel first so the product stays small when possible
            const std::int64_t g1 = std::gcd(num_, o.den_);
            const std::int64_t g2 = std::gcd(o.num_, den_);
            const detail::i128 n = static_cast<detail::i128>(num_ / (g1 ? g1 : 1)) * (o.num_ / (g2 ? g2 : 1));
            const detail::i128 d = static_cast<detail::i128>(den_ / (g2 ? g2 : 1)) * (o.den_ / (g1 ? g1 : 1));
            assign_i128(n, d);
            return *this;
        }
        assign_mpq(to_mpq() * o.to_mpq());
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        if (!big_ && !o.big_) {
            const std::int64_t g1 = std::gcd(num_, o.num_);
            const std::int64_t g2 = std::gcd(den_, o.den_);
            const detail::i128 n = static_cast<detail::i128>(num_ / g1) * (o.den_ / g2);
            const detail::i128 d = static_cast<detail::i128>(den_ / g2) * (o.num_ / g1);
            assign_i128(n, d);
            return *this;
        }
        assign_mpq(to_mpq() / o.to_mpq());
        return *this;
    }

    /// this += a * b, the inner-loop primitive of elimination and cochain assembly.
    void add_mul(const Rational& a, const Rational& b)
    {
        if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
            const detail::i128 s = static_cast<detail::i128>(num_) + static_cast<detail::i128>(a.num_) * b.num_;
            if (detail::fits_i64(s)) {
                num_ = static_cast<std::int64_t>(s);
                return;
            }
        }
        Rational t(a);
        t *= b;
        *this += t;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false; // canonical form: a value is big only if it does not fit inline
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            const detail::i128 l = static_cast<detail::i128>(a.num_) * b.den_;
            const detail::i128 r = static_cast<detail::i128>(b.num_) * a.den_;
            return l <=> r;
        }
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] std::size_t hash() const
    {
        if (!big_) return std::hash<std::int64_t>{}(num_) * 31 + std::hash<std::int64_t>{}(den_);
        return std::hash<std::string>{}(big_->get_str());
    }

private:
    void set_big(mpq_class q)
    {
        big_ = std::make_unique<mpq_class>(std::move(q));
        num_ = 0;
        den_ = 1;
    }

    void assign_i128(detail::i128 n, detail::i128 d)
    {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        const detail::u128 g = detail::gcd_u128(detail::abs_u128(n), static_cast<detail::u128>(d));
        if (g > 1) {
            n /= static_cast<detail::i128>(g);
            d /= static_cast<detail::i128>(g);
        }
        if (detail::fits_i64(n) && detail::fits_i64(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
        } else {
            mpq_class q(detail::to_mpz(n), detail::to_mpz(d));
            set_big(std::move(q));
        }
    }

    void assign_mpq(mpq_class q)
    {
        // q is canonical here
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
            q.get_num() != std::numeric_limits<long>::min()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            set_big(std::move(q));
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
    return powmod(a, p - 2, p);
}

inline std::uint64_t mpz_mod(const mpz_class& v, std::uint64_t p)
{
    mpz_class r;
    mpz_class pm = static_cast<unsigned long>(p);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
    return r.get_ui();
}

inline std::uint64_t i64_mod(std::int64_t v, std::uint64_t p)
{
    const i128 r = static_cast<i128>(v) % static_cast<i128>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<i128>(p) : r);
}

} // namespace detail

inline std::uint64_t Rational::mod(std::uint64_t p) const
{
    if (!big_) {
        const std::uint64_t n = detail::i64_mod(num_, p);
        if (den_ == 1) return n;
        return detail::mulmod(n, detail::invmod(detail::i64_mod(den_, p), p), p);
    }
    const std::uint64_t n = detail::mpz_mod(big_->get_num(), p);
    const std::uint64_t d = detail::mpz_mod(big_->get_den(), p);
    return detail::mulmod(n, detail::invmod(d, p), p);
}

} // namespace gkf

template <>
struct std::hash<gkf::Rational> {
    std::size_t operator()(const gkf::Rational& r) const noexcept { return r.hash(); }
};
