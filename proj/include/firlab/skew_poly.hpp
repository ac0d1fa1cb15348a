#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/twisted_field.hpp"

namespace firlab {

/// An element of the Ore extension R = K[t; S, D]: a polynomial
/// sum a_i t^i with coefficients written on the left and the commutation
/// rule t*a = S(a)*t + D(a).  Values are immutable in practice; every
/// operation returns a fresh polynomial.
///
/// Invariant: the coefficient vector is empty (the zero polynomial) or its
/// last entry is nonzero.
template <twisted_field F>
class SkewPoly {
public:
    using Ring = F;
    using RingPtr = std::shared_ptr<const F>;
    using Elem = typename F::Elem;

    SkewPoly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        trim();
    }

    static SkewPoly zero(RingPtr ring) { return SkewPoly(std::move(ring), {}); }
    static SkewPoly constant(RingPtr ring, Elem c) { return SkewPoly(std::move(ring), {std::move(c)}); }
    static SkewPoly one(RingPtr ring) {
        Elem c = ring->one();
        return SkewPoly(std::move(ring), {std::move(c)});
    }
    static SkewPoly t(RingPtr ring) {
        Elem c = ring->one();
        return monomial(std::move(ring), std::move(c), 1);
    }
    static SkewPoly monomial(RingPtr ring, Elem c, std::size_t k) {
        std::vector<Elem> v(k + 1, ring->zero());
        v[k] = std::move(c);
        return SkewPoly(std::move(ring), std::move(v));
    }

    const RingPtr& ring_ptr() const { return ring_; }
    const F& ring() const { return *ring_; }

    bool is_zero() const { return c_.empty(); }
    bool is_unit() const { return c_.size() == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && ring_->eq(c_.back(), ring_->one()); }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.ring_->eq(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        check_same_ring(a, b);
        std::vector<Elem> c;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) c.push_back(a.ring_->add(a.coeff(i), b.coeff(i)));
        return SkewPoly(a.ring_, std::move(c));
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
        check_same_ring(a, b);
        std::vector<Elem> c;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) c.push_back(a.ring_->sub(a.coeff(i), b.coeff(i)));
        return SkewPoly(a.ring_, std::move(c));
    }
    SkewPoly operator-() const {
        std::vector<Elem> c;
        c.reserve(c_.size());
        for (const Elem& x : c_) c.push_back(ring_->neg(x));
        return SkewPoly(ring_, std::move(c));
    }

    /// Left multiplication by a constant: c * (sum a_i t^i) = sum (c a_i) t^i.
    SkewPoly scale_left(const Elem& c) const {
        std::vector<Elem> v;
        v.reserve(c_.size());
        for (const Elem& x : c_) v.push_back(ring_->mul(c, x));
        return SkewPoly(ring_, std::move(v));
    }

    /// t * this, one application of the commutation rule per coefficient:
    /// (t h)_j = S(h_{j-1}) + D(h_j).
    SkewPoly t_shift() const {
        if (is_zero()) return *this;
        std::vector<Elem> v(c_.size() + 1, ring_->zero());
        for (std::size_t j = 0; j < c_.size(); ++j) {
            v[j + 1] = ring_->add(v[j + 1], ring_->endo(c_[j]));
            v[j] = ring_->add(v[j], ring_->derive(c_[j]));
        }
        return SkewPoly(ring_, std::move(v));
    }

    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
        check_same_ring(f, g);
        if (f.is_zero() || g.is_zero()) return zero(f.ring_);
        SkewPoly acc = zero(f.ring_);
        SkewPoly shifted = g;  // t^i * g, built incrementally
        for (int i = 0; i <= f.degree(); ++i) {
            if (i > 0) shifted = shifted.t_shift();
            if (!f.ring_->is_zero(f.coeff(static_cast<std::size_t>(i))))
                acc = acc + shifted.scale_left(f.coeff(static_cast<std::size_t>(i)));
        }
        return acc;
    }

    /// Monic normal form: divide by the leading coefficient on the left.
    /// Generates the same left ideal.
    SkewPoly monic() const {
        if (is_zero()) throw DomainError("monic form of the zero polynomial");
        if (is_monic()) return *this;
        return scale_left(ring_->inv(leading()));
    }

    struct DivMod {
        SkewPoly quotient;
        SkewPoly remainder;
    };

    /// f = q*g + r with deg r < deg g.  Works over every backend: only
    /// S-images of the inverse leading coefficient of g are needed.
    static DivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
        check_same_ring(f, g);
        if (g.is_zero()) throw DivisionByZeroError("right division by the zero polynomial");
        const F& k = f.ring();
        const Elem glc_inv = k.inv(g.leading());
        SkewPoly r = f;
        std::vector<Elem> q(f.degree() >= g.degree() ? static_cast<std::size_t>(f.degree() - g.degree()) + 1 : 0,
                            k.zero());
        while (r.degree() >= g.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            const Elem c = k.mul(r.leading(), k.endo_pow(glc_inv, shift));
            q[shift] = k.add(q[shift], c);
            r = r - monomial(f.ring_, c, shift) * g;
        }
        return {SkewPoly(f.ring_, std::move(q)), std::move(r)};
    }

    /// f = g*q + r with deg r < deg g, when computable: each quotient
    /// coefficient needs an S-preimage, which an injective non-surjective S
    /// may fail to provide.  nullopt means exactly that.
    static std::optional<DivMod> left_divmod(const SkewPoly& f, const SkewPoly& g) {
        check_same_ring(f, g);
        if (g.is_zero()) throw DivisionByZeroError("left division by the zero polynomial");
        const F& k = f.ring();
        const Elem glc_inv = k.inv(g.leading());
        const std::uint64_t n = static_cast<std::uint64_t>(g.degree());
        SkewPoly r = f;
        std::vector<Elem> q(f.degree() >= g.degree() ? static_cast<std::size_t>(f.degree() - g.degree()) + 1 : 0,
                            k.zero());
        while (r.degree() >= g.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            const std::optional<Elem> c = endo_preimage_pow(k, k.mul(glc_inv, r.leading()), n);
            if (!c) return std::nullopt;
            q[shift] = k.add(q[shift], *c);
            r = r - g * monomial(f.ring_, *c, shift);
        }
        return DivMod{SkewPoly(f.ring_, std::move(q)), std::move(r)};
    }

    /// Remainder of f modulo the left ideal Rg.
    static SkewPoly rem(const SkewPoly& f, const SkewPoly& g) { return right_divmod(f, g).remainder; }

    /// Whether g right-divides f, i.e. f lies in Rg.
    static bool right_divides(const SkewPoly& g, const SkewPoly& f) {
        return rem(f, g).is_zero();
    }

    std::string str() const {
        if (is_zero()) return "0";
        const F& k = ring();
        std::string out;
        for (std::size_t j = c_.size(); j-- > 0;) {
            if (k.is_zero(c_[j])) continue;
            if (!out.empty()) out += " + ";
            const bool unit_coeff = k.eq(c_[j], k.one());
            if (j == 0) {
                out += wrap_if_sum(k.format(c_[j]));
            } else {
                if (!unit_coeff) out += wrap_if_sum(k.format(c_[j])) + "*";
                out += (j == 1) ? "t" : "t^" + std::to_string(j);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << f.str(); }

    static void check_same_ring(const SkewPoly& a, const SkewPoly& b) {
        if (a.ring_ == b.ring_) return;
        if (a.ring_->same_structure(*b.ring_)) return;
        throw DomainError("mixed coefficient rings: " + a.ring_->describe() + " vs " + b.ring_->describe());
    }

private:
    // Parenthesize coefficient text containing + or - at parenthesis depth 0.
    static std::string wrap_if_sum(const std::string& s) {
        int depth = 0;
        for (char ch : s) {
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if ((ch == '+' || ch == '-') && depth == 0) return "(" + s + ")";
        }
        return s;
    }

    void trim() {
        while (!c_.empty() && ring_->is_zero(c_.back())) c_.pop_back();
    }

    RingPtr ring_;
    std::vector<Elem> c_;
};

}  // namespace firlab
