#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppcert {

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over Q, lowest degree first. Only what the cyclotomic
// field needs: multiplication, euclidean division, extended gcd.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// Remainder and quotient of a by b, b nonzero.
inline void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
    quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    poly_trim(quot);
    rem = std::move(a);
}

}  // namespace detail

// Element of Q(zeta_l), l an odd prime, stored in the canonical basis
// 1, zeta, ..., zeta^{l-2}. The representative modulo the minimal polynomial
// 1 + X + ... + X^{l-1} is unique, so an element is zero exactly when every
// coefficient is zero.
class Cyclotomic {
  public:
    explicit Cyclotomic(unsigned order) : order_(order), coeff_(checked_size(order), Rational(0)) {}

    static Cyclotomic from_rational(unsigned order, const Rational& value) {
        Cyclotomic e(order);
        e.coeff_[0] = value;
        return e;
    }

    static Cyclotomic one(unsigned order) { return from_rational(order, Rational(1)); }

    // zeta^exponent for any integer exponent, reduced into the basis via
    // zeta^{l-1} = -(1 + zeta + ... + zeta^{l-2}).
    static Cyclotomic zeta_pow(unsigned order, long long exponent) {
        Cyclotomic e(order);
        long long k = exponent % static_cast<long long>(order);
        if (k < 0) k += order;
        if (k == static_cast<long long>(order) - 1) {
            for (auto& c : e.coeff_) c = Rational(-1);
        } else {
            e.coeff_[static_cast<std::size_t>(k)] = Rational(1);
        }
        return e;
    }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const {
        return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == 0; });
    }

    // Rational elements occupy the basis vector 1 alone.
    bool is_rational() const {
        return std::all_of(coeff_.begin() + 1, coeff_.end(),
                           [](const Rational& c) { return c == 0; });
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
        return coeff_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic out(order_);
        for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = -coeff_[i];
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& rhs) {
        require_same_field(rhs);
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& rhs) {
        require_same_field(rhs);
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_field(b);
        detail::Poly pa(a.coeff_.begin(), a.coeff_.end());
        detail::Poly pb(b.coeff_.begin(), b.coeff_.end());
        detail::poly_trim(pa);
        detail::poly_trim(pb);
        return from_poly(a.order_, detail::poly_mul(pa, pb));
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeff_ == b.coeff_;
    }

    // Inverse through the extended euclidean algorithm in Q[X]: the minimal
    // polynomial is irreducible, so gcd(f, Phi_l) is a nonzero constant and
    // the Bezout coefficient of f is the inverse modulo Phi_l.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
        detail::Poly r0(order_, Rational(1));                 // Phi_l
        detail::Poly r1(coeff_.begin(), coeff_.end());
        detail::poly_trim(r1);
        detail::Poly s0{}, s1{Rational(1)};                   // track coefficients of f
        while (!r1.empty()) {
            detail::Poly q, rem;
            detail::poly_divmod(r0, r1, q, rem);
            detail::Poly s2 = detail::poly_sub(s0, detail::poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant), s0 * f = r0 mod Phi_l.
        const Rational g = r0.at(0);
        for (auto& c : s0) c /= g;
        return from_poly(order_, s0);
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (i) out += ",";
            out += coeff_[i].str();
        }
        return "[" + out + "]";
    }

  private:
    static std::size_t checked_size(unsigned order) {
        if (order < 3 || !detail::is_prime(order))
            throw std::invalid_argument("cyclotomic order must be an odd prime");
        return order - 1;
    }

    void require_same_field(const Cyclotomic& rhs) const {
        if (order_ != rhs.order_) throw std::invalid_argument("mixed cyclotomic orders");
    }

    static Cyclotomic from_poly(unsigned order, detail::Poly p) {
        if (p.size() >= order) {
            detail::Poly phi(order, Rational(1)), q, rem;
            detail::poly_divmod(std::move(p), phi, q, rem);
            p = std::move(rem);
        }
        Cyclotomic e(order);
        for (std::size_t i = 0; i < p.size(); ++i) e.coeff_[i] = p[i];
        return e;
    }

    unsigned order_;
    std::vector<Rational> coeff_;
};

// 1 / (1 - zeta_l^k), the per-fixed-point weight of a degree-l cyclic action.
inline Cyclotomic cyc_inv_one_minus_zeta(unsigned l, long long k) {
    long long r = k % static_cast<long long>(l);
    if (r < 0) r += l;
    if (r == 0) throw std::domain_error("1 - zeta^k vanishes for k = 0 mod l");
    return (Cyclotomic::one(l) - Cyclotomic::zeta_pow(l, r)).inverse();
}

// sum_i 1/(1 - zeta^{eta_i}) + sum_j zeta^{xi_j}, the trace-side expression of
// the holomorphic fixed point formula for a curve action.
inline Cyclotomic cyc_eval_sum(unsigned l, const std::vector<unsigned>& fixed_exponents,
                               const std::vector<unsigned>& eigen_exponents) {
    Cyclotomic acc(l);
    for (unsigned e : fixed_exponents) {
        if (e < 1 || e >= l) throw std::invalid_argument("fixed exponent out of (Z/l)^x");
        acc += cyc_inv_one_minus_zeta(l, e);
    }
    for (unsigned e : eigen_exponents) {
        if (e < 1 || e >= l) throw std::invalid_argument("eigen exponent out of (Z/l)^x");
        acc += Cyclotomic::zeta_pow(l, e);
    }
    return acc;
}

}  // namespace fppcert
