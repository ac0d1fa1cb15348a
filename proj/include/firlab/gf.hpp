#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/linalg.hpp"

namespace firlab {

/// An element of a small finite field, identified by its enumeration index.
/// Index i has base-p digits (c_0, c_1, ...) which are the coordinates of
/// the element over the prime subfield: element = sum c_j w^j.
struct GfElem {
    std::uint32_t idx = 0;
    friend auto operator<=>(const GfElem&, const GfElem&) = default;
};

/// GF(p^e) with an explicit stored irreducible modulus over F_p.  All
/// arithmetic is table-driven; tables are built once at construction.
/// Enumeration order is by index, i.e. lexicographic from the last
/// prime-subfield coordinate down to the first (0, 1, w, w+1, ... for GF(4)).
class GfField {
public:
    /// `modulus` holds the coefficients m_0..m_e over F_p of a monic
    /// irreducible polynomial of degree e (m_e = 1).
    GfField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
        : p_(p), e_(e), modulus_(std::move(modulus)) {
        check_parameters();
        build_tables();
    }

    /// GF(p^e) with the default modulus: the first monic irreducible of
    /// degree e in enumeration order (constant coefficient varying fastest).
    GfField(std::uint32_t p, std::uint32_t e) : GfField(p, e, least_irreducible(p, e)) {}

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint64_t size() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    GfElem zero() const { return GfElem{0}; }
    GfElem one() const { return GfElem{1}; }
    GfElem element(std::uint64_t i) const {
        if (i >= q_) throw DomainError("element index out of range");
        return GfElem{static_cast<std::uint32_t>(i)};
    }
    std::uint64_t index(GfElem a) const { return a.idx; }
    bool is_zero(GfElem a) const { return a.idx == 0; }

    GfElem add(GfElem a, GfElem b) const { return GfElem{add_[a.idx * q_ + b.idx]}; }
    GfElem mul(GfElem a, GfElem b) const { return GfElem{mul_[a.idx * q_ + b.idx]}; }
    GfElem neg(GfElem a) const { return GfElem{neg_[a.idx]}; }
    GfElem sub(GfElem a, GfElem b) const { return add(a, neg(b)); }
    GfElem inv(GfElem a) const {
        if (a.idx == 0) throw DivisionByZeroError("inverse of 0 in GF(" + std::to_string(q_) + ")");
        return GfElem{inv_[a.idx]};
    }

    /// The Frobenius a -> a^p.
    GfElem frobenius(GfElem a) const { return GfElem{frob_[a.idx]}; }

    GfElem pow(GfElem a, std::uint64_t n) const {
        GfElem r = one();
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    /// Element from an integer (the image of n under Z -> F_p -> GF(p^e)).
    GfElem from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return GfElem{static_cast<std::uint32_t>(r)};
    }

    /// Coordinates over the prime subfield, c_0 first.
    std::vector<std::uint32_t> coords(GfElem a) const {
        std::vector<std::uint32_t> c(e_);
        std::uint32_t x = a.idx;
        for (std::uint32_t j = 0; j < e_; ++j) {
            c[j] = x % p_;
            x /= p_;
        }
        return c;
    }

    GfElem from_coords(const std::vector<std::uint32_t>& c) const {
        std::uint32_t idx = 0;
        for (std::uint32_t j = e_; j-- > 0;) idx = idx * p_ + (c[j] % p_);
        return GfElem{idx};
    }

    /// Printed as a polynomial in w over F_p, descending powers: "w^2+2*w+1".
    /// For e = 1 plain integers are printed.
    std::string format(GfElem a) const {
        const std::vector<std::uint32_t> c = coords(a);
        std::string out;
        for (std::uint32_t j = e_; j-- > 0;) {
            if (c[j] == 0) continue;
            if (!out.empty()) out += "+";
            if (j == 0) {
                out += std::to_string(c[j]);
            } else {
                if (c[j] != 1) out += std::to_string(c[j]) + "*";
                out += (j == 1) ? "w" : "w^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

    bool same_field(const GfField& o) const { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }

    /// The default modulus: least monic irreducible of degree e over F_p in
    /// enumeration order (constant coefficient fastest).
    static std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e) {
        if (e == 1) return {0, 1};  // w - 0; unused, reduction is mod p
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < e; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<std::uint32_t> m(e + 1, 0);
            std::uint64_t x = n;
            for (std::uint32_t j = 0; j < e; ++j) {
                m[j] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            m[e] = 1;
            if (poly_irreducible(m, p)) return m;
        }
        throw InternalError("no irreducible polynomial found");  // unreachable
    }

private:
    void check_parameters() {
        if (p_ < 2) throw DomainError("characteristic must be a prime >= 2");
        for (std::uint32_t d = 2; d * d <= p_; ++d)
            if (p_ % d == 0) throw DomainError("characteristic " + std::to_string(p_) + " is not prime");
        if (e_ < 1) throw DomainError("extension degree must be >= 1");
        q_ = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            q_ *= p_;
            if (q_ > kMaxSize) throw DomainError("field size exceeds table limit");
        }
        if (modulus_.size() != e_ + 1 || modulus_[e_] != 1)
            throw DomainError("modulus must be monic of degree e");
        if (e_ > 1 && !poly_irreducible(modulus_, p_)) throw DomainError("modulus is not irreducible");
    }

    // Dense polynomial helpers over F_p used only for table construction.
    static std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b,
                                                  const std::vector<std::uint32_t>& m, std::uint32_t p) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
        // reduce mod m (monic)
        const std::size_t e = m.size() - 1;
        for (std::size_t d = r.size(); d-- > e;) {
            const std::uint32_t c = r[d];
            if (c == 0) continue;
            r[d] = 0;
            for (std::size_t j = 0; j < e; ++j) r[d - e + j] = fp_sub(r[d - e + j], fp_mul(c, m[j], p), p);
        }
        r.resize(e ? e : 1);
        return r;
    }

    static bool poly_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
        // Trial division by all monic polynomials of degree <= deg(m)/2.
        const std::size_t e = m.size() - 1;
        if (m[0] == 0) return e == 1;
        for (std::size_t d = 1; 2 * d <= e; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t n = 0; n < count; ++n) {
                std::vector<std::uint32_t> g(d + 1, 0);
                std::uint64_t x = n;
                for (std::size_t j = 0; j < d; ++j) {
                    g[j] = static_cast<std::uint32_t>(x % p);
                    x /= p;
                }
                g[d] = 1;
                if (poly_divides(g, m, p)) return false;
            }
        }
        return true;
    }

    static bool poly_divides(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& f,
                             std::uint32_t p) {
        std::vector<std::uint32_t> r = f;
        const std::size_t dg = g.size() - 1;
        while (r.size() > dg) {
            const std::uint32_t c = r.back();
            if (c != 0)
                for (std::size_t j = 0; j <= dg; ++j)
                    r[r.size() - 1 - dg + j] = fp_sub(r[r.size() - 1 - dg + j], fp_mul(c, g[j], p), p);
            r.pop_back();
        }
        for (std::uint32_t c : r)
            if (c != 0) return false;
        return true;
    }

    void build_tables() {
        const std::size_t q = static_cast<std::size_t>(q_);
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.resize(q);
        frob_.resize(q);

        auto to_poly = [&](std::uint32_t idx) {
            std::vector<std::uint32_t> c(e_);
            for (std::uint32_t j = 0; j < e_; ++j) {
                c[j] = idx % p_;
                idx /= p_;
            }
            return c;
        };
        auto to_idx = [&](const std::vector<std::uint32_t>& c) {
            std::uint32_t idx = 0;
            for (std::uint32_t j = e_; j-- > 0;) idx = idx * p_ + (j < c.size() ? c[j] % p_ : 0);
            return idx;
        };

        for (std::size_t i = 0; i < q; ++i) {
            const auto a = to_poly(static_cast<std::uint32_t>(i));
            std::vector<std::uint32_t> na(e_);
            for (std::uint32_t j = 0; j < e_; ++j) na[j] = fp_neg(a[j], p_);
            neg_[i] = to_idx(na);
            for (std::size_t j = 0; j < q; ++j) {
                const auto b = to_poly(static_cast<std::uint32_t>(j));
                std::vector<std::uint32_t> s(e_);
                for (std::uint32_t k = 0; k < e_; ++k) s[k] = fp_add(a[k], b[k], p_);
                add_[i * q + j] = to_idx(s);
                mul_[i * q + j] = to_idx(poly_mulmod(a, b, modulus_, p_));
            }
        }
        for (std::size_t i = 1; i < q; ++i) {
            // a^(q-2) = a^{-1}
            GfElem v{static_cast<std::uint32_t>(i)};
            GfElem r{1};
            std::uint64_t n = q_ - 2;
            while (n) {
                if (n & 1) r = GfElem{mul_[r.idx * q_ + v.idx]};
                v = GfElem{mul_[v.idx * q_ + v.idx]};
                n >>= 1;
            }
            inv_[i] = r.idx;
        }
        inv_[0] = 0;
        for (std::size_t i = 0; i < q; ++i) {
            GfElem v{static_cast<std::uint32_t>(i)};
            GfElem r{1};
            std::uint64_t n = p_;
            GfElem base = v;
            while (n) {
                if (n & 1) r = GfElem{mul_[r.idx * q_ + base.idx]};
                base = GfElem{mul_[base.idx * q_ + base.idx]};
                n >>= 1;
            }
            frob_[i] = r.idx;
        }
    }

    static constexpr std::uint64_t kMaxSize = 512;

    std::uint32_t p_, e_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace firlab
