#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "firlab/error.hpp"

namespace firlab {

/// An element of R = Z + xQ[[x]] truncated at order N: the constant
/// coefficient is an integer, higher coefficients are exact rationals.
/// Units of R are exactly the series with constant term +1 or -1, so the
/// ideal calculus below is insensitive to truncation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::uint32_t trunc) : c_(trunc + 1, mpq_class(0)) {}
    TruncatedSeries(std::uint32_t trunc, std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
        c_.resize(trunc + 1, mpq_class(0));
        check_integral_constant();
    }

    static TruncatedSeries constant(std::uint32_t trunc, const mpq_class& a0) {
        TruncatedSeries f(trunc);
        f.c_[0] = a0;
        f.check_integral_constant();
        return f;
    }
    static TruncatedSeries x(std::uint32_t trunc) {
        TruncatedSeries f(trunc);
        if (trunc >= 1) f.c_[1] = 1;
        return f;
    }

    std::uint32_t trunc() const { return static_cast<std::uint32_t>(c_.size()) - 1; }
    const mpq_class& coeff(std::size_t i) const { return c_[i]; }
    bool is_zero() const {
        for (const auto& a : c_)
            if (a != 0) return false;
        return true;
    }
    bool is_unit() const { return c_[0] == 1 || c_[0] == -1; }

    /// o(f): least index with nonzero coefficient; nullopt when f is zero
    /// modulo the truncation.
    std::optional<std::uint32_t> order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.common_trunc(b));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.common_trunc(b));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.common_trunc(b));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            for (std::size_t j = 0; i + j < r.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    /// Exact quotient this / g to the truncation order, when it exists in R
    /// (i.e. the quotient's constant term is integral).  nullopt otherwise.
    std::optional<TruncatedSeries> divide_exact(const TruncatedSeries& g) const {
        const auto og = g.order();
        if (!og) throw DivisionByZeroError("series division by zero");
        const auto of = order();
        if (!of) return TruncatedSeries(trunc());
        if (*of < *og) return std::nullopt;
        // Shift both down by o(g), then divide by the resulting unit-like
        // series with nonzero constant term.
        const std::uint32_t n = trunc();
        std::vector<mpq_class> fs(n + 1, mpq_class(0)), gs(n + 1, mpq_class(0));
        for (std::size_t i = *og; i <= n; ++i) gs[i - *og] = g.c_[i];
        for (std::size_t i = *og; i <= n; ++i) fs[i - *og] = c_[i];
        // Coefficients of q beyond n - o(g) are lost to truncation; they do
        // not affect membership checks at this truncation order.
        std::vector<mpq_class> q(n + 1, mpq_class(0));
        for (std::size_t i = 0; i + *og <= n; ++i) {
            mpq_class acc = fs[i];
            for (std::size_t j = 0; j < i; ++j) acc -= q[j] * gs[i - j];
            q[i] = acc / gs[0];
        }
        if (q[0].get_den() != 1) return std::nullopt;
        return TruncatedSeries(n, std::move(q));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const bool neg = c_[i] < 0;
            mpq_class mag = abs(c_[i]);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit_coeff = (mag == 1 && i > 0);
            if (!unit_coeff) out += mag.get_str();
            if (i >= 1) {
                if (!unit_coeff) out += "*";
                out += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) { return os << f.str(); }

private:
    std::uint32_t common_trunc(const TruncatedSeries& o) const {
        if (c_.size() != o.c_.size()) throw DomainError("mixed truncation orders");
        return trunc();
    }
    void check_integral_constant() {
        if (c_[0].get_den() != 1) throw DomainError("constant series coefficient must be an integer");
    }

    std::vector<mpq_class> c_;
};

/// f = a x^m u with u a unit normalized to constant term 1.
struct SeriesNormalForm {
    std::uint32_t m;
    mpq_class a;  // integer when m = 0
    TruncatedSeries unit;
};

inline SeriesNormalForm normal_form(const TruncatedSeries& f) {
    const auto m = f.order();
    if (!m) throw DomainError("normal form of a series that vanishes to the truncation order");
    const std::uint32_t n = f.trunc();
    const mpq_class a = f.coeff(*m);
    std::vector<mpq_class> u(n + 1, mpq_class(0));
    for (std::size_t i = *m; i <= n; ++i) u[i - *m] = f.coeff(i) / a;
    return {*m, a, TruncatedSeries(n, std::move(u))};
}

/// A nonzero principal ideal a x^m R in canonical form: a > 0, and a is an
/// integer when m = 0.  Generators are unique up to the units +-1 of R, so
/// the pair (m, a) identifies the ideal.
struct PrincipalIdeal {
    std::uint32_t m = 0;
    mpq_class a = 1;

    friend bool operator==(const PrincipalIdeal& A, const PrincipalIdeal& B) {
        return A.m == B.m && A.a == B.a;
    }

    std::string str() const {
        std::string s;
        if (m == 0) {
            s = a.get_str();
        } else {
            if (a != 1) s = a.get_str() + "*";
            s += (m == 1) ? "x" : "x^" + std::to_string(m);
        }
        return s + "*R";
    }
};

inline PrincipalIdeal principal_ideal(const TruncatedSeries& f) {
    const SeriesNormalForm nf = normal_form(f);
    if (nf.m == 0 && nf.a.get_den() != 1)
        throw DomainError("constant term of a generator must be an integer");
    return {nf.m, abs(nf.a)};
}

inline TruncatedSeries generator(const PrincipalIdeal& A, std::uint32_t trunc) {
    TruncatedSeries g(trunc);
    std::vector<mpq_class> c(trunc + 1, mpq_class(0));
    if (A.m <= trunc) c[A.m] = A.a;
    return TruncatedSeries(trunc, std::move(c));
}

/// Membership of the generator of B in A, i.e. B subseteq A.  The cofactor
/// (b/a) x^(l-m) lies in R iff l > m, or l = m and b/a is an integer.
inline bool ideal_contains(const PrincipalIdeal& A, const PrincipalIdeal& B) {
    if (B.m > A.m) return true;
    if (B.m < A.m) return false;
    mpq_class ratio = B.a / A.a;
    return ratio.get_den() == 1;
}

/// A + B following the three cases: gcd in Z when both orders are 0,
/// absorption when the orders differ, and the common-denominator gcd
/// construction when 0 < m = l.
inline PrincipalIdeal ideal_sum(const PrincipalIdeal& A, const PrincipalIdeal& B) {
    if (A.m == 0 && B.m == 0) {
        mpz_class g = gcd(A.a.get_num(), B.a.get_num());
        return {0, mpq_class(g)};
    }
    if (A.m != B.m) return A.m < B.m ? A : B;
    // a = c/e, b = d/e over a common denominator e; A + B = (gcd(c,d)/e) x^m R.
    mpz_class e = lcm(A.a.get_den(), B.a.get_den());
    mpz_class c = A.a.get_num() * (e / A.a.get_den());
    mpz_class d = B.a.get_num() * (e / B.a.get_den());
    mpq_class coeff(gcd(c, d), e);
    coeff.canonicalize();
    return {A.m, coeff};
}

/// A intersect B, dual to ideal_sum: lcm in Z, absorption of the deeper
/// ideal, and the common-denominator lcm construction when 0 < m = l.
inline PrincipalIdeal ideal_intersection(const PrincipalIdeal& A, const PrincipalIdeal& B) {
    if (A.m == 0 && B.m == 0) {
        mpz_class l = lcm(A.a.get_num(), B.a.get_num());
        return {0, mpq_class(l)};
    }
    if (A.m != B.m) return A.m < B.m ? B : A;
    mpz_class e = lcm(A.a.get_den(), B.a.get_den());
    mpz_class c = A.a.get_num() * (e / A.a.get_den());
    mpz_class d = B.a.get_num() * (e / B.a.get_den());
    mpq_class coeff(lcm(c, d), e);
    coeff.canonicalize();
    return {A.m, coeff};
}

/// Both inclusions of the sum law, checked concretely at the truncation
/// order: A, B subseteq S and gen(S) = u*gen(A) + v*gen(B) with u, v in R.
inline bool verify_sum(const PrincipalIdeal& A, const PrincipalIdeal& B, const PrincipalIdeal& S,
                       std::uint32_t trunc) {
    if (!ideal_contains(S, A) || !ideal_contains(S, B)) return false;
    // Bezout coefficients over the common denominator.
    if (A.m != B.m) return S == (A.m < B.m ? A : B);
    mpz_class e = lcm(A.a.get_den(), B.a.get_den());
    mpz_class c = A.a.get_num() * (e / A.a.get_den());
    mpz_class d = B.a.get_num() * (e / B.a.get_den());
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    TruncatedSeries combo = generator(A, trunc) * TruncatedSeries::constant(trunc, mpq_class(u)) +
                            generator(B, trunc) * TruncatedSeries::constant(trunc, mpq_class(v));
    return combo == generator(S, trunc);
}

/// Membership of a concrete series in a principal ideal.
inline bool ideal_member(const TruncatedSeries& h, const PrincipalIdeal& A) {
    if (h.is_zero()) return true;
    return h.divide_exact(generator(A, h.trunc())).has_value();
}

/// I subseteq A intersect B by generator membership, plus the reverse
/// inclusion spot-checked on the given probe multipliers: whenever
/// gen(A)*r (or gen(B)*r) lands in the other input ideal it must land in I.
inline bool verify_intersection(const PrincipalIdeal& A, const PrincipalIdeal& B, const PrincipalIdeal& I,
                                std::uint32_t trunc, const std::vector<TruncatedSeries>& probes = {}) {
    if (!ideal_contains(A, I) || !ideal_contains(B, I)) return false;
    for (const TruncatedSeries& r : probes) {
        const TruncatedSeries ha = generator(A, trunc) * r;
        if (ideal_member(ha, B) && !ideal_member(ha, I)) return false;
        const TruncatedSeries hb = generator(B, trunc) * r;
        if (ideal_member(hb, A) && !ideal_member(hb, I)) return false;
    }
    return true;
}

/// The witness x = 2^n * (x 2^-n): a length-n prefix of atomic factors 2 in
/// front of an element of R, certifying that x is not a product of atoms.
struct NonAtomicWitness {
    TruncatedSeries factor;    // 2^n
    TruncatedSeries cofactor;  // (1/2^n) x
};

inline NonAtomicWitness nonatomic_witness(std::uint32_t n, std::uint32_t trunc) {
    mpz_class two_n = 1;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
    TruncatedSeries factor = TruncatedSeries::constant(trunc, mpq_class(two_n));
    TruncatedSeries cof(trunc);
    std::vector<mpq_class> c(trunc + 1, mpq_class(0));
    if (trunc >= 1) {
        c[1] = mpq_class(1, two_n);
        c[1].canonicalize();
    }
    return {factor, TruncatedSeries(trunc, std::move(c))};
}

/// A constant c in Z is an atom of R exactly when |c| is prime.
inline bool constant_is_atom(const mpz_class& c) {
    mpz_class a = abs(c);
    return mpz_probab_prime_p(a.get_mpz_t(), 30) != 0;
}

}  // namespace firlab
