#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/skew_poly.hpp"

namespace firlab {

namespace detail {

/// One run of the extended right-division Euclidean algorithm.  Maintains
/// r_i = u_i*a + v_i*b; ends with gcd = last nonzero remainder and the
/// syzygy row (u_end, v_end) satisfying u_end*a + v_end*b = 0.
template <twisted_field F>
struct RightEuclidRun {
    SkewPoly<F> gcd, u, v;        // gcd = u*a + v*b, not yet normalized
    SkewPoly<F> u_end, v_end;     // u_end*a = -v_end*b, the least common left multiple row
};

template <twisted_field F>
RightEuclidRun<F> right_euclid(const SkewPoly<F>& a, const SkewPoly<F>& b) {
    SkewPoly<F>::check_same_ring(a, b);
    auto ring = a.ring_ptr();
    SkewPoly<F> r0 = a, r1 = b;
    SkewPoly<F> u0 = SkewPoly<F>::one(ring), u1 = SkewPoly<F>::zero(ring);
    SkewPoly<F> v0 = SkewPoly<F>::zero(ring), v1 = SkewPoly<F>::one(ring);
    while (!r1.is_zero()) {
        auto dm = SkewPoly<F>::right_divmod(r0, r1);
        SkewPoly<F> u2 = u0 - dm.quotient * u1;
        SkewPoly<F> v2 = v0 - dm.quotient * v1;
        r0 = std::move(r1);
        r1 = std::move(dm.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {std::move(r0), std::move(u0), std::move(v0), std::move(u1), std::move(v1)};
}

}  // namespace detail

/// Monic d with Rd = Ra + Rb together with the Bezout cofactors
/// d = u*a + v*b.  Defined unless both inputs are zero.
template <twisted_field F>
struct RightGcd {
    SkewPoly<F> d, u, v;
};

template <twisted_field F>
RightGcd<F> rgcd_extended(const SkewPoly<F>& a, const SkewPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("rgcd(0, 0) is undefined");
    auto run = detail::right_euclid(a, b);
    const auto lc_inv = a.ring().inv(run.gcd.leading());
    return {run.gcd.scale_left(lc_inv), run.u.scale_left(lc_inv), run.v.scale_left(lc_inv)};
}

template <twisted_field F>
SkewPoly<F> rgcd(const SkewPoly<F>& a, const SkewPoly<F>& b) {
    return rgcd_extended(a, b).d;
}

/// Monic m with Rm = Ra intersect Rb; deg m = deg a + deg b - deg rgcd(a,b).
template <twisted_field F>
SkewPoly<F> llcm(const SkewPoly<F>& a, const SkewPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("llcm requires nonzero arguments");
    auto run = detail::right_euclid(a, b);
    SkewPoly<F> m = run.u_end * a;
    if (m.is_zero()) throw InternalError("llcm syzygy degenerated to zero");
    return m.monic();
}

/// The conjugate a^b: the monic q with Ra intersect Rb = R*q*b.  When a is
/// an atom and b is not in Ra, q is an atom similar to a; when b lies in Ra
/// the conjugate collapses to the unit 1.
template <twisted_field F>
SkewPoly<F> conj(const SkewPoly<F>& a, const SkewPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("conj requires nonzero arguments");
    auto dm = SkewPoly<F>::right_divmod(llcm(a, b), b);
    if (!dm.remainder.is_zero()) throw InternalError("llcm(a,b) is not a left multiple of b");
    return dm.quotient.monic();
}

/// Right-normalized monic form: f*c with fR = (f*c)R.  Needs an S-preimage
/// of the inverse leading coefficient, hence may be unavailable when S is
/// not surjective.
template <twisted_field F>
std::optional<SkewPoly<F>> monic_right(const SkewPoly<F>& f) {
    if (f.is_zero()) throw DomainError("monic form of the zero polynomial");
    const F& k = f.ring();
    if (k.eq(f.leading(), k.one())) return f;
    auto c = endo_preimage_pow(k, k.inv(f.leading()), static_cast<std::uint64_t>(f.degree()));
    if (!c) return std::nullopt;
    return f * SkewPoly<F>::constant(f.ring_ptr(), *c);
}

/// Generators of aR + bR and aR intersect bR via the mirrored Euclidean
/// algorithm on left division.  nullopt when a required S-preimage does not
/// exist (right ideals need not be principal then).
template <twisted_field F>
std::optional<std::pair<SkewPoly<F>, SkewPoly<F>>> lgcd_rlcm(const SkewPoly<F>& a, const SkewPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("lgcd_rlcm requires nonzero arguments");
    auto ring = a.ring_ptr();
    SkewPoly<F> r0 = a, r1 = b;
    SkewPoly<F> u0 = SkewPoly<F>::one(ring), u1 = SkewPoly<F>::zero(ring);
    while (!r1.is_zero()) {
        auto dm = SkewPoly<F>::left_divmod(r0, r1);
        if (!dm) return std::nullopt;
        SkewPoly<F> u2 = u0 - u1 * dm->quotient;
        r0 = std::move(r1);
        r1 = std::move(dm->remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    SkewPoly<F> m = a * u1;
    if (m.is_zero()) throw InternalError("rlcm syzygy degenerated to zero");
    auto g = monic_right(r0);
    auto mm = monic_right(m);
    if (!g || !mm) return std::nullopt;
    return std::make_pair(std::move(*g), std::move(*mm));
}

namespace detail {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t(1) << 22;

template <finite_twisted_field F>
std::uint64_t monic_count(const F& k, std::uint32_t degree) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        n *= k.size();
        if (n > kEnumerationCap) throw BackendError("monic enumeration too large at degree " +
                                                    std::to_string(degree));
    }
    return n;
}

}  // namespace detail

/// All monic polynomials of the exact given degree, in enumeration order:
/// the constant coefficient varies fastest, each coefficient running through
/// the field enumeration order.
template <finite_twisted_field F>
std::vector<SkewPoly<F>> enumerate_monic(const std::shared_ptr<const F>& ring, std::uint32_t degree) {
    const F& k = *ring;
    const std::uint64_t total = detail::monic_count(k, degree);
    std::vector<SkewPoly<F>> out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<typename F::Elem> c(degree + 1, k.zero());
        std::uint64_t x = n;
        for (std::uint32_t j = 0; j < degree; ++j) {
            c[j] = k.element(x % k.size());
            x /= k.size();
        }
        c[degree] = k.one();
        out.emplace_back(ring, std::move(c));
    }
    return out;
}

/// Atom test by exhaustive search for a proper monic right divisor.  Any
/// minimal-degree right divisor is automatically an atom, so searching monic
/// polynomials of each degree 1..deg-1 is complete.
template <twisted_field F>
bool is_atom(const SkewPoly<F>& f) {
    if (f.is_zero()) throw DomainError("is_atom(0) is undefined");
    if (f.is_unit()) return false;
    if (f.degree() == 1) return true;  // degrees add under multiplication
    if constexpr (finite_twisted_field<F>) {
        for (std::uint32_t d = 1; d < static_cast<std::uint32_t>(f.degree()); ++d)
            for (const SkewPoly<F>& g : enumerate_monic<F>(f.ring_ptr(), d))
                if (SkewPoly<F>::right_divides(g, f)) return false;
        return true;
    } else {
        throw BackendError("atom test requires an enumerable coefficient field");
    }
}

/// All monic atoms of the exact given degree, in enumeration order.
/// Cached per (ring, degree); the cache is shared between structurally equal
/// rings and safe for concurrent readers.
template <finite_twisted_field F>
std::vector<SkewPoly<F>> enumerate_atoms(const std::shared_ptr<const F>& ring, std::uint32_t degree) {
    if (degree < 1) throw DomainError("atoms have degree >= 1");
    static std::mutex mu;
    static std::map<std::pair<std::string, std::uint32_t>, std::vector<std::vector<typename F::Elem>>> cache;

    const std::pair<std::string, std::uint32_t> key{ring->cache_key(), degree};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            std::vector<SkewPoly<F>> out;
            out.reserve(it->second.size());
            for (const auto& c : it->second) out.emplace_back(ring, c);
            return out;
        }
    }
    std::vector<SkewPoly<F>> atoms;
    for (const SkewPoly<F>& g : enumerate_monic<F>(ring, degree))
        if (is_atom(g)) atoms.push_back(g);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& entry = cache[key];
        if (entry.empty())
            for (const SkewPoly<F>& g : atoms) entry.push_back(g.coeffs());
    }
    return atoms;
}

/// f = unit * atoms[0] * ... * atoms[n-1] with monic atoms.
template <twisted_field F>
struct Factorization {
    typename F::Elem unit;
    std::vector<SkewPoly<F>> atoms;

    SkewPoly<F> reassemble(const std::shared_ptr<const F>& ring) const {
        SkewPoly<F> f = SkewPoly<F>::constant(ring, unit);
        for (const SkewPoly<F>& q : atoms) f = f * q;
        return f;
    }
};

/// Atomic factorization: repeatedly peel off the lowest-degree,
/// enumeration-least monic right divisor.  A minimal-degree right divisor is
/// an atom, so the result is a factorization into atoms; the peeling order
/// makes the output deterministic even though atomic factorizations are not
/// unique.
template <finite_twisted_field F>
Factorization<F> factor_atomic(const SkewPoly<F>& f) {
    if (f.is_zero()) throw DomainError("factor_atomic(0) is undefined");
    std::vector<SkewPoly<F>> atoms_reversed;
    SkewPoly<F> cur = f;
    while (cur.degree() >= 1) {
        std::optional<SkewPoly<F>> divisor;
        for (std::uint32_t d = 1; !divisor && d < static_cast<std::uint32_t>(cur.degree()); ++d)
            for (const SkewPoly<F>& g : enumerate_monic<F>(f.ring_ptr(), d))
                if (SkewPoly<F>::right_divides(g, cur)) {
                    divisor = g;
                    break;
                }
        if (!divisor) divisor = cur.monic();  // cur itself is an atom
        atoms_reversed.push_back(*divisor);
        cur = SkewPoly<F>::right_divmod(cur, *divisor).quotient;
    }
    Factorization<F> out{cur.coeff(0), {}};
    out.atoms.assign(atoms_reversed.rbegin(), atoms_reversed.rend());
    return out;
}

/// Number of atoms in an atomic factorization; 0 for units.  Well defined by
/// the additivity of length over products.
template <finite_twisted_field F>
std::uint32_t length(const SkewPoly<F>& f) {
    if (f.is_zero()) throw DomainError("length(0) is undefined");
    if (f.is_unit()) return 0;
    return static_cast<std::uint32_t>(factor_atomic(f).atoms.size());
}

/// All proper monic right divisors of f (degrees 1..deg f - 1), enumeration
/// order within each degree.
template <finite_twisted_field F>
std::vector<SkewPoly<F>> monic_right_divisors(const SkewPoly<F>& f) {
    std::vector<SkewPoly<F>> out;
    for (std::uint32_t d = 1; d + 1 <= static_cast<std::uint32_t>(f.degree()); ++d)
        for (const SkewPoly<F>& g : enumerate_monic<F>(f.ring_ptr(), d))
            if (SkewPoly<F>::right_divides(g, f)) out.push_back(g);
    return out;
}

/// Every complete factorization of f into monic atoms (the unit in front is
/// the same for all of them).  Exponential in general; meant for the small
/// degrees this library works at.
template <finite_twisted_field F>
std::vector<std::vector<SkewPoly<F>>> all_atomic_factorizations(const SkewPoly<F>& f) {
    if (f.is_zero()) throw DomainError("factorizations of 0 are undefined");
    if (f.is_unit()) return {{}};
    std::vector<std::vector<SkewPoly<F>>> out;
    for (std::uint32_t d = 1; d <= static_cast<std::uint32_t>(f.degree()); ++d) {
        for (const SkewPoly<F>& q :
             d == static_cast<std::uint32_t>(f.degree()) ? std::vector<SkewPoly<F>>{f.monic()}
                                                         : enumerate_monic<F>(f.ring_ptr(), d)) {
            if (!SkewPoly<F>::right_divides(q, f) || !is_atom(q)) continue;
            for (auto prefix : all_atomic_factorizations(SkewPoly<F>::right_divmod(f, q).quotient)) {
                prefix.push_back(q);
                out.push_back(std::move(prefix));
            }
        }
    }
    return out;
}

}  // namespace firlab
