#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/linalg.hpp"

namespace firlab {

/// Dense univariate polynomial over F_p in the commutative variable x.
/// Invariant: coefficient vector empty (the zero polynomial) or the last
/// entry is nonzero.
class FpPoly {
public:
    FpPoly() : p_(2) {}
    explicit FpPoly(std::uint32_t p) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> c) : p_(p), c_(std::move(c)) {
        for (auto& v : c_) v %= p_;
        trim();
    }

    static FpPoly constant(std::uint32_t p, std::uint32_t v) { return FpPoly(p, {v}); }
    static FpPoly x(std::uint32_t p) { return FpPoly(p, {0, 1}); }

    std::uint32_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_add(a.coeff(i), b.coeff(i), a.p_);
        return FpPoly(a.p_, std::move(c));
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_sub(a.coeff(i), b.coeff(i), a.p_);
        return FpPoly(a.p_, std::move(c));
    }
    FpPoly operator-() const {
        std::vector<std::uint32_t> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = fp_neg(c_[i], p_);
        return FpPoly(p_, std::move(c));
    }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
        std::vector<std::uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = fp_add(c[i + j], fp_mul(a.c_[i], b.c_[j], a.p_), a.p_);
        return FpPoly(a.p_, std::move(c));
    }

    /// Quotient and remainder of this by g.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& g) const {
        if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
        FpPoly r = *this;
        std::vector<std::uint32_t> q;
        const std::uint32_t linv = fp_inv(g.leading(), p_);
        while (!r.is_zero() && r.degree() >= g.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            const std::uint32_t c = fp_mul(r.leading(), linv, p_);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (std::size_t i = 0; i < g.c_.size(); ++i)
                r.c_[shift + i] = fp_sub(r.c_[shift + i], fp_mul(c, g.c_[i], p_), p_);
            r.trim();
        }
        return {FpPoly(p_, std::move(q)), r};
    }

    FpPoly monic() const {
        if (is_zero()) return *this;
        const std::uint32_t linv = fp_inv(leading(), p_);
        std::vector<std::uint32_t> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = fp_mul(c_[i], linv, p_);
        return FpPoly(p_, std::move(c));
    }

    static FpPoly gcd(FpPoly a, FpPoly b) {
        while (!b.is_zero()) {
            FpPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// f(x^2), the substitution endomorphism used by the k(x) backend.
    FpPoly substitute_x_squared() const {
        if (is_zero()) return *this;
        std::vector<std::uint32_t> c(2 * c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
        return FpPoly(p_, std::move(c));
    }

    /// True when only even powers of x occur, i.e. this = g(x^2) for some g.
    bool even_powers_only() const {
        for (std::size_t i = 1; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    /// The g with this = g(x^2); precondition even_powers_only().
    FpPoly even_part() const {
        std::vector<std::uint32_t> c((c_.size() + 1) / 2, 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(2 * i);
        return FpPoly(p_, std::move(c));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t j = c_.size(); j-- > 0;) {
            if (c_[j] == 0) continue;
            if (!out.empty()) out += "+";
            if (j == 0) {
                out += std::to_string(c_[j]);
            } else {
                if (c_[j] != 1) out += std::to_string(c_[j]) + "*";
                out += (j == 1) ? "x" : "x^" + std::to_string(j);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

/// An element of F_p(x): a reduced fraction num/den with monic denominator.
/// Zero is 0/1.  The canonical form is unique, so equality is structural.
class RatFn {
public:
    RatFn() : num_(2), den_(2, {1}) {}
    RatFn(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit RatFn(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.p(), 1)) {}

    static RatFn constant(std::uint32_t p, std::uint32_t v) { return RatFn(FpPoly::constant(p, v)); }
    static RatFn x(std::uint32_t p) { return RatFn(FpPoly::x(p)); }

    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    std::uint32_t p() const { return num_.p(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }
    RatFn operator-() const {
        RatFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFn inv() const {
        if (is_zero()) throw DivisionByZeroError("inverse of 0 in F_p(x)");
        return RatFn(den_, num_);
    }

    /// Image under the substitution x -> x^2.
    RatFn substitute_x_squared() const {
        return RatFn(num_.substitute_x_squared(), den_.substitute_x_squared());
    }

    /// Preimage under x -> x^2 when one exists.  The reduced form of an
    /// element of F_p(x^2) has numerator and denominator in F_p[x^2], so
    /// membership is a parity check on the exponents.
    bool has_x_squared_preimage() const { return num_.even_powers_only() && den_.even_powers_only(); }
    RatFn x_squared_preimage() const { return RatFn(num_.even_part(), den_.even_part()); }

    std::string str() const {
        if (is_polynomial()) return paren_if_sum(num_.str());
        return paren_if_sum(num_.str()) + "/" + paren("" + den_.str());
    }

private:
    static std::string paren(const std::string& s) { return "(" + s + ")"; }
    static std::string paren_if_sum(const std::string& s) {
        return s.find('+') != std::string::npos ? paren(s) : s;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZeroError("zero denominator in F_p(x)");
        if (num_.is_zero()) {
            den_ = FpPoly::constant(num_.p(), 1);
            return;
        }
        FpPoly g = FpPoly::gcd(num_, den_);
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
        const std::uint32_t linv = fp_inv(den_.leading(), num_.p());
        num_ = num_ * FpPoly::constant(num_.p(), linv);
        den_ = den_.monic();
    }

    FpPoly num_, den_;
};

}  // namespace firlab
