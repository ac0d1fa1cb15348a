#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/gf.hpp"
#include "firlab/rational_function.hpp"

namespace firlab {

/// A coefficient field K together with an endomorphism S and an
/// S-derivation D, i.e. the data needed to form the Ore extension
/// K[t; S, D] with commutation rule t*a = S(a)*t + D(a).
template <class F>
concept twisted_field = requires(const F& k, const typename F::Elem& a, const typename F::Elem& b,
                                 std::uint64_t n, std::int64_t z) {
    typename F::Elem;
    { k.add(a, b) } -> std::same_as<typename F::Elem>;
    { k.sub(a, b) } -> std::same_as<typename F::Elem>;
    { k.mul(a, b) } -> std::same_as<typename F::Elem>;
    { k.neg(a) } -> std::same_as<typename F::Elem>;
    { k.inv(a) } -> std::same_as<typename F::Elem>;
    { k.zero() } -> std::same_as<typename F::Elem>;
    { k.one() } -> std::same_as<typename F::Elem>;
    { k.from_int(z) } -> std::same_as<typename F::Elem>;
    { k.is_zero(a) } -> std::same_as<bool>;
    { k.eq(a, b) } -> std::same_as<bool>;
    { k.characteristic() } -> std::same_as<std::uint32_t>;
    { k.endo(a) } -> std::same_as<typename F::Elem>;
    { k.endo_pow(a, n) } -> std::same_as<typename F::Elem>;
    { k.endo_preimage(a) } -> std::same_as<std::optional<typename F::Elem>>;
    { k.endo_surjective() } -> std::same_as<bool>;
    { k.derive(a) } -> std::same_as<typename F::Elem>;
    { k.format(a) } -> std::same_as<std::string>;
    { k.describe() } -> std::same_as<std::string>;
    { k.same_structure(k) } -> std::same_as<bool>;
};

/// A twisted field whose element set can be enumerated, with prime-subfield
/// coordinates for flattening semilinear systems into F_p-linear ones.
template <class F>
concept finite_twisted_field = twisted_field<F> && requires(const F& k, const typename F::Elem& a,
                                                            std::uint64_t i,
                                                            const std::vector<std::uint32_t>& c) {
    { k.size() } -> std::same_as<std::uint64_t>;
    { k.element(i) } -> std::same_as<typename F::Elem>;
    { k.index(a) } -> std::same_as<std::uint64_t>;
    { k.prime_dim() } -> std::same_as<std::uint32_t>;
    { k.coords(a) } -> std::same_as<std::vector<std::uint32_t>>;
    { k.from_coords(c) } -> std::same_as<typename F::Elem>;
};

/// GF(p^e) with S = Frobenius^k (k = 1 by default, k = 0 the commutative
/// case) and D either zero or the inner derivation D_c(a) = c*a - S(a)*c.
class FiniteTwistedField {
public:
    using Elem = GfElem;

    FiniteTwistedField(GfField field, std::uint32_t frob_exp = 1,
                       std::optional<GfElem> inner_derivation = std::nullopt)
        : field_(std::move(field)), frob_exp_(frob_exp % field_.degree()), dc_(inner_derivation) {}

    const GfField& field() const { return field_; }
    std::uint32_t frobenius_exponent() const { return frob_exp_; }
    const std::optional<GfElem>& inner_derivation_constant() const { return dc_; }

    Elem add(Elem a, Elem b) const { return field_.add(a, b); }
    Elem sub(Elem a, Elem b) const { return field_.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return field_.mul(a, b); }
    Elem neg(Elem a) const { return field_.neg(a); }
    Elem inv(Elem a) const { return field_.inv(a); }
    Elem zero() const { return field_.zero(); }
    Elem one() const { return field_.one(); }
    Elem from_int(std::int64_t n) const { return field_.from_int(n); }
    bool is_zero(Elem a) const { return field_.is_zero(a); }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::uint32_t characteristic() const { return field_.characteristic(); }

    Elem endo(Elem a) const { return frob_times(a, frob_exp_); }
    Elem endo_pow(Elem a, std::uint64_t n) const {
        return frob_times(a, static_cast<std::uint32_t>((static_cast<std::uint64_t>(frob_exp_) * n) %
                                                        field_.degree()));
    }
    std::optional<Elem> endo_preimage(Elem a) const {
        // S = frob^k is an automorphism here; its inverse is frob^(e-k).
        return frob_times(a, (field_.degree() - frob_exp_) % field_.degree());
    }
    bool endo_surjective() const { return true; }

    Elem derive(Elem a) const {
        if (!dc_) return zero();
        return sub(mul(*dc_, a), mul(endo(a), *dc_));
    }

    std::uint64_t size() const { return field_.size(); }
    Elem element(std::uint64_t i) const { return field_.element(i); }
    std::uint64_t index(Elem a) const { return field_.index(a); }
    std::uint32_t prime_dim() const { return field_.degree(); }
    std::vector<std::uint32_t> coords(Elem a) const { return field_.coords(a); }
    Elem from_coords(const std::vector<std::uint32_t>& c) const { return field_.from_coords(c); }

    std::string format(Elem a) const { return field_.format(a); }

    std::string describe() const {
        std::string s = "gf(" + std::to_string(field_.characteristic()) + "," +
                        std::to_string(field_.degree()) + ")";
        if (frob_exp_ != 1 % field_.degree()) s += " frob=" + std::to_string(frob_exp_);
        if (dc_) s += " der=" + field_.format(*dc_);
        return s;
    }

    bool same_structure(const FiniteTwistedField& o) const {
        return field_.same_field(o.field_) && frob_exp_ == o.frob_exp_ && dc_ == o.dc_;
    }

    /// Distinguishes rings that describe() alone would conflate (same p, e
    /// but different stored modulus).
    std::string cache_key() const {
        std::string s = describe() + ";mod=";
        for (std::uint32_t c : field_.modulus()) s += std::to_string(c) + ",";
        return s;
    }

private:
    Elem frob_times(Elem a, std::uint32_t times) const {
        for (std::uint32_t i = 0; i < times; ++i) a = field_.frobenius(a);
        return a;
    }

    GfField field_;
    std::uint32_t frob_exp_;
    std::optional<GfElem> dc_;
};

/// F_p(x) with the substitution endomorphism S(x) = x^2, which is injective
/// but not surjective (x has no preimage), and D zero or inner.
class RationalFunctionTwistedField {
public:
    using Elem = RatFn;

    explicit RationalFunctionTwistedField(std::uint32_t p,
                                          std::optional<RatFn> inner_derivation = std::nullopt)
        : p_(p), dc_(std::move(inner_derivation)) {
        for (std::uint32_t d = 2; d * d <= p_; ++d)
            if (p_ % d == 0) throw DomainError("characteristic must be prime");
    }

    std::uint32_t p() const { return p_; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    Elem zero() const { return RatFn::constant(p_, 0); }
    Elem one() const { return RatFn::constant(p_, 1); }
    Elem from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return RatFn::constant(p_, static_cast<std::uint32_t>(r));
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::uint32_t characteristic() const { return p_; }

    Elem endo(const Elem& a) const { return a.substitute_x_squared(); }
    Elem endo_pow(Elem a, std::uint64_t n) const {
        for (std::uint64_t i = 0; i < n; ++i) a = a.substitute_x_squared();
        return a;
    }
    std::optional<Elem> endo_preimage(const Elem& a) const {
        if (!a.has_x_squared_preimage()) return std::nullopt;
        return a.x_squared_preimage();
    }
    bool endo_surjective() const { return false; }

    Elem derive(const Elem& a) const {
        if (!dc_) return zero();
        return sub(mul(*dc_, a), mul(endo(a), *dc_));
    }

    std::string format(const Elem& a) const { return a.str(); }
    std::string describe() const {
        std::string s = "funfield(" + std::to_string(p_) + ")";
        if (dc_) s += " der=" + dc_->str();
        return s;
    }
    bool same_structure(const RationalFunctionTwistedField& o) const { return p_ == o.p_ && dc_ == o.dc_; }

private:
    std::uint32_t p_;
    std::optional<RatFn> dc_;
};

/// Exact rational numbers with S = id and D = 0.  This backend only feeds
/// the truncated power-series module; it is never used as a skew coefficient
/// field with a nontrivial twist.
class RationalTwistedField {
public:
    using Elem = mpq_class;

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DivisionByZeroError("inverse of 0 in Q");
        return 1 / a;
    }
    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem from_int(std::int64_t n) const { return mpq_class(static_cast<long>(n)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::uint32_t characteristic() const { return 0; }

    Elem endo(const Elem& a) const { return a; }
    Elem endo_pow(const Elem& a, std::uint64_t) const { return a; }
    std::optional<Elem> endo_preimage(const Elem& a) const { return a; }
    bool endo_surjective() const { return true; }
    Elem derive(const Elem&) const { return mpq_class(0); }

    std::string format(const Elem& a) const { return a.get_str(); }
    std::string describe() const { return "rationals"; }
    bool same_structure(const RationalTwistedField&) const { return true; }
};

static_assert(finite_twisted_field<FiniteTwistedField>);
static_assert(twisted_field<RationalFunctionTwistedField>);
static_assert(twisted_field<RationalTwistedField>);

/// All field elements, exactly once, in enumeration order.
template <finite_twisted_field F>
std::vector<typename F::Elem> enumerate_field(const F& k) {
    std::vector<typename F::Elem> out;
    out.reserve(static_cast<std::size_t>(k.size()));
    for (std::uint64_t i = 0; i < k.size(); ++i) out.push_back(k.element(i));
    return out;
}

/// S^n composed with preimage checks; used by left division.
template <twisted_field F>
std::optional<typename F::Elem> endo_preimage_pow(const F& k, typename F::Elem a, std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) {
        std::optional<typename F::Elem> b = k.endo_preimage(a);
        if (!b) return std::nullopt;
        a = *b;
    }
    return a;
}

/// Pointwise checks of the endomorphism and S-derivation laws on the given
/// sample: S(a+b) = S(a)+S(b), S(ab) = S(a)S(b), S(1) = 1, and
/// D(ab) = S(a)D(b) + D(a)b.  Throws InternalError on a violation.
template <twisted_field F>
void validate_twist(const F& k, const std::vector<typename F::Elem>& sample) {
    if (!k.eq(k.endo(k.one()), k.one())) throw InternalError("S(1) != 1");
    if (!k.is_zero(k.derive(k.one()))) throw InternalError("D(1) != 0");
    for (const auto& a : sample) {
        for (const auto& b : sample) {
            if (!k.eq(k.endo(k.add(a, b)), k.add(k.endo(a), k.endo(b))))
                throw InternalError("S is not additive");
            if (!k.eq(k.endo(k.mul(a, b)), k.mul(k.endo(a), k.endo(b))))
                throw InternalError("S is not multiplicative");
            const auto lhs = k.derive(k.mul(a, b));
            const auto rhs = k.add(k.mul(k.endo(a), k.derive(b)), k.mul(k.derive(a), b));
            if (!k.eq(lhs, rhs)) throw InternalError("D violates the S-derivation law");
        }
    }
}

}  // namespace firlab
