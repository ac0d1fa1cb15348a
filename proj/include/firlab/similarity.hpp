#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/linalg.hpp"
#include "firlab/ore.hpp"
#include "firlab/skew_poly.hpp"

namespace firlab {

namespace detail {

/// Flatten the coefficients of f (degree < ncoeffs assumed) into
/// prime-subfield coordinates, ncoeffs * e entries.
template <finite_twisted_field F>
std::vector<std::uint32_t> flatten(const SkewPoly<F>& f, std::uint32_t ncoeffs) {
    const F& k = f.ring();
    std::vector<std::uint32_t> out;
    out.reserve(ncoeffs * k.prime_dim());
    for (std::uint32_t i = 0; i < ncoeffs; ++i) {
        const std::vector<std::uint32_t> c = k.coords(f.coeff(i));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

template <finite_twisted_field F>
SkewPoly<F> unflatten(const std::shared_ptr<const F>& ring, const std::vector<std::uint32_t>& v,
                      std::uint32_t ncoeffs) {
    const F& k = *ring;
    const std::uint32_t e = k.prime_dim();
    std::vector<typename F::Elem> c(ncoeffs, k.zero());
    for (std::uint32_t i = 0; i < ncoeffs; ++i)
        c[i] = k.from_coords(std::vector<std::uint32_t>(v.begin() + i * e, v.begin() + (i + 1) * e));
    return SkewPoly<F>(ring, std::move(c));
}

/// The i-th prime-subfield basis vector of the space of polynomials of
/// degree < ncoeffs: w^j t^m with i = m*e + j.
template <finite_twisted_field F>
SkewPoly<F> coord_basis_poly(const std::shared_ptr<const F>& ring, std::uint32_t i) {
    const F& k = *ring;
    const std::uint32_t e = k.prime_dim();
    std::vector<std::uint32_t> coords(e, 0);
    coords[i % e] = 1;
    return SkewPoly<F>::monomial(ring, k.from_coords(coords), i / e);
}

/// Matrix of an additive, prime-subfield-linear map on polynomials of
/// degree < in_coeffs, with values of degree < out_coeffs, by evaluating on
/// the coordinate basis.
template <finite_twisted_field F, class Map>
MatFp semilinear_matrix(const std::shared_ptr<const F>& ring, std::uint32_t in_coeffs,
                        std::uint32_t out_coeffs, Map&& map) {
    const F& k = *ring;
    const std::uint32_t e = k.prime_dim();
    MatFp m(k.characteristic(), out_coeffs * e, in_coeffs * e);
    for (std::uint32_t colv = 0; colv < in_coeffs * e; ++colv) {
        const SkewPoly<F> img = map(coord_basis_poly(ring, colv));
        const std::vector<std::uint32_t> fl = flatten(img, out_coeffs);
        for (std::size_t r = 0; r < fl.size(); ++r) m.at(r, colv) = fl[r];
    }
    return m;
}

inline constexpr std::uint64_t kSpanCap = std::uint64_t(1) << 20;

}  // namespace detail

/// Basis over the prime subfield of {u : deg u < deg g, f*u in Rg}, the
/// space of left-module homomorphisms R/Rf -> R/Rg written as u + Rg.
template <finite_twisted_field F>
std::vector<SkewPoly<F>> hom_space(const SkewPoly<F>& f, const SkewPoly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("hom_space requires nonzero arguments");
    const std::uint32_t n = static_cast<std::uint32_t>(g.degree());
    if (n == 0) return {};
    auto m = detail::semilinear_matrix(f.ring_ptr(), n, n,
                                       [&](const SkewPoly<F>& u) { return SkewPoly<F>::rem(f * u, g); });
    std::vector<SkewPoly<F>> basis;
    for (const auto& v : kernel_basis(m)) basis.push_back(detail::unflatten(f.ring_ptr(), v, n));
    return basis;
}

/// Similarity test: R/Rf and R/Rg are isomorphic iff deg f = deg g and some
/// u in hom_space(f, g) satisfies Rg + Ru = R; then x -> xu is surjective,
/// hence bijective between spaces of equal finite dimension.  Returns the
/// witness u.  Basis vectors are tried first, then the whole span.
template <finite_twisted_field F>
std::optional<SkewPoly<F>> is_similar(const SkewPoly<F>& f, const SkewPoly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("is_similar requires nonzero arguments");
    if (f.degree() != g.degree()) return std::nullopt;
    if (f.is_unit()) return SkewPoly<F>::one(f.ring_ptr());
    const auto basis = hom_space(f, g);
    auto unit_witness = [&](const SkewPoly<F>& u) {
        return !u.is_zero() && rgcd(g, u).is_unit();
    };
    for (const SkewPoly<F>& u : basis)
        if (unit_witness(u)) return u;

    const std::uint32_t p = f.ring().characteristic();
    std::uint64_t span = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        span *= p;
        if (span > detail::kSpanCap) throw BackendError("hom-space span too large to search");
    }
    for (std::uint64_t idx = 0; idx < span; ++idx) {
        SkewPoly<F> u = SkewPoly<F>::zero(f.ring_ptr());
        std::uint64_t x = idx;
        for (const SkewPoly<F>& b : basis) {
            const std::uint32_t c = static_cast<std::uint32_t>(x % p);
            x /= p;
            if (c != 0) u = u + b.scale_left(f.ring().from_int(c));
        }
        if (unit_witness(u)) return u;
    }
    return std::nullopt;
}

/// Fast path for linear atoms: t - a and t - a2 are similar iff some
/// nonzero c satisfies a2*c = S(c)*a + D(c).
template <finite_twisted_field F>
bool similar_linear(const F& k, const typename F::Elem& a, const typename F::Elem& a2) {
    for (std::uint64_t i = 1; i < k.size(); ++i) {
        const typename F::Elem c = k.element(i);
        if (k.eq(k.mul(a2, c), k.add(k.mul(k.endo(c), a), k.derive(c)))) return true;
    }
    return false;
}

/// The eigenring C(p) = End(R/Rp) of an atom p, presented by a
/// prime-subfield basis of {u : deg u < deg p, p*u in Rp} and a
/// multiplication table.  Composition order: the product u * v represents
/// the endomorphism x -> (x*v)*u, i.e. the class of rem(v*u, p).
///
/// Construction verifies the division-ring structure (Schur): closure under
/// the product, associativity on basis triples, a two-sided identity, and a
/// two-sided inverse for every nonzero element.
template <finite_twisted_field F>
class Eigenring {
public:
    using Coords = std::vector<std::uint32_t>;

    explicit Eigenring(const SkewPoly<F>& p) : p_(p.monic()), ring_(p.ring_ptr()) {
        if (!is_atom(p_)) throw DomainError("eigenring is defined for atoms only");
        basis_ = hom_space(p_, p_);
        dim_ = static_cast<std::uint32_t>(basis_.size());
        if (dim_ == 0) throw InternalError("eigenring lost its identity");
        const std::uint32_t n = static_cast<std::uint32_t>(p_.degree());
        const std::uint32_t e = ring_->prime_dim();
        basis_matrix_ = MatFp(ring_->characteristic(), n * e, dim_);
        for (std::uint32_t j = 0; j < dim_; ++j) {
            const auto fl = detail::flatten(basis_[j], n);
            for (std::size_t r = 0; r < fl.size(); ++r) basis_matrix_->at(r, j) = fl[r];
        }
        identity_ = from_poly(SkewPoly<F>::one(ring_));
        build_table();
        check_division_ring();
    }

    const SkewPoly<F>& atom() const { return p_; }
    std::uint32_t dim() const { return dim_; }
    const std::vector<SkewPoly<F>>& basis() const { return basis_; }
    Coords identity() const { return identity_; }
    Coords zero() const { return Coords(dim_, 0); }

    bool is_zero(const Coords& a) const {
        for (std::uint32_t v : a)
            if (v != 0) return false;
        return true;
    }

    Coords add(const Coords& a, const Coords& b) const {
        Coords r(dim_);
        for (std::uint32_t i = 0; i < dim_; ++i) r[i] = fp_add(a[i], b[i], prime());
        return r;
    }

    /// Product in composition order: (a*b)(x) = (x b) a.
    Coords mul(const Coords& a, const Coords& b) const {
        Coords r(dim_, 0);
        for (std::uint32_t i = 0; i < dim_; ++i) {
            if (a[i] == 0) continue;
            for (std::uint32_t j = 0; j < dim_; ++j) {
                if (b[j] == 0) continue;
                const std::uint32_t s = fp_mul(a[i], b[j], prime());
                const Coords& t = table_[i * dim_ + j];
                for (std::uint32_t l = 0; l < dim_; ++l)
                    r[l] = fp_add(r[l], fp_mul(s, t[l], prime()), prime());
            }
        }
        return r;
    }

    /// Two-sided inverse of a nonzero element.
    Coords inverse(const Coords& a) const {
        if (is_zero(a)) throw DivisionByZeroError("inverse of 0 in the eigenring");
        const auto inv = solve_right_inverse(a);
        if (!inv || !coords_eq(mul(*inv, a), identity_))
            throw InternalError("eigenring element without a two-sided inverse");
        return *inv;
    }

    /// Representative polynomial of an eigenring element.
    SkewPoly<F> to_poly(const Coords& a) const {
        SkewPoly<F> u = SkewPoly<F>::zero(ring_);
        for (std::uint32_t i = 0; i < dim_; ++i)
            if (a[i] != 0) u = u + basis_[i].scale_left(ring_->from_int(a[i]));
        return u;
    }

    /// Coordinates of u + Rp; u must represent an endomorphism.
    Coords from_poly(const SkewPoly<F>& u) const {
        const std::uint32_t n = static_cast<std::uint32_t>(p_.degree());
        const auto fl = detail::flatten(SkewPoly<F>::rem(u, p_), n);
        const auto sol = solve(*basis_matrix_, fl);
        if (!sol) throw InternalError("polynomial is not an eigenring element");
        return *sol;
    }

    /// The right action of C(p) on R/Rp: x * gamma = gamma(x) = rem(x*u, p).
    SkewPoly<F> act(const SkewPoly<F>& x, const Coords& gamma) const {
        return SkewPoly<F>::rem(x * to_poly(gamma), p_);
    }

    bool commutative() const {
        for (std::uint32_t i = 0; i < dim_; ++i)
            for (std::uint32_t j = i + 1; j < dim_; ++j)
                if (!coords_eq(table_[i * dim_ + j], table_[j * dim_ + i])) return false;
        return true;
    }

    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (std::uint32_t i = 0; i < dim_; ++i) n *= prime();
        return n;
    }

private:
    std::uint32_t prime() const { return ring_->characteristic(); }

    static bool coords_eq(const Coords& a, const Coords& b) { return a == b; }

    void build_table() {
        table_.reserve(static_cast<std::size_t>(dim_) * dim_);
        for (std::uint32_t i = 0; i < dim_; ++i)
            for (std::uint32_t j = 0; j < dim_; ++j)
                table_.push_back(from_poly(basis_[j] * basis_[i]));  // x -> (x b_j) b_i
    }

    std::optional<Coords> solve_right_inverse(const Coords& a) const {
        // a * x = 1 is prime-subfield linear in x.
        MatFp m(prime(), dim_, dim_);
        for (std::uint32_t j = 0; j < dim_; ++j) {
            Coords ej(dim_, 0);
            ej[j] = 1;
            const Coords col = mul(a, ej);
            for (std::uint32_t r = 0; r < dim_; ++r) m.at(r, j) = col[r];
        }
        return solve(m, identity_);
    }

    void check_division_ring() {
        // Identity behaves on both sides.
        for (std::uint32_t i = 0; i < dim_; ++i) {
            Coords ei(dim_, 0);
            ei[i] = 1;
            if (!coords_eq(mul(identity_, ei), ei) || !coords_eq(mul(ei, identity_), ei))
                throw InternalError("eigenring identity fails");
        }
        // Associativity on basis triples (bilinearity extends it).
        for (std::uint32_t i = 0; i < dim_; ++i)
            for (std::uint32_t j = 0; j < dim_; ++j)
                for (std::uint32_t l = 0; l < dim_; ++l) {
                    Coords ei(dim_, 0), ej(dim_, 0), el(dim_, 0);
                    ei[i] = ej[j] = el[l] = 1;
                    ei[i] = 1;
                    if (!coords_eq(mul(mul(ei, ej), el), mul(ei, mul(ej, el))))
                        throw InternalError("eigenring is not associative");
                }
        // Schur: every nonzero element has a two-sided inverse.
        if (order() > (std::uint64_t(1) << 16))
            throw BackendError("eigenring too large for the exhaustive inverse check");
        for (std::uint64_t n = 1; n < order(); ++n) {
            Coords a(dim_, 0);
            std::uint64_t x = n;
            for (std::uint32_t i = 0; i < dim_; ++i) {
                a[i] = static_cast<std::uint32_t>(x % prime());
                x /= prime();
            }
            inverse(a);  // throws when no two-sided inverse exists
        }
    }

    SkewPoly<F> p_;
    typename SkewPoly<F>::RingPtr ring_;
    std::vector<SkewPoly<F>> basis_;
    std::uint32_t dim_ = 0;
    std::optional<MatFp> basis_matrix_;
    Coords identity_;
    std::vector<Coords> table_;
};

/// Construct the eigenring of an atom.
template <finite_twisted_field F>
Eigenring<F> eigenring(const SkewPoly<F>& p) {
    return Eigenring<F>(p);
}

/// Prime-subfield basis of Ker(lambda_{f,p}) = {x + Rp : f x in Rp}, a right
/// C(p)-subspace of R/Rp.
template <finite_twisted_field F>
std::vector<SkewPoly<F>> lambda_kernel(const SkewPoly<F>& f, const SkewPoly<F>& p) {
    if (f.is_zero()) throw DomainError("lambda_kernel requires nonzero f");
    if (!is_atom(p)) throw DomainError("lambda_kernel requires an atom p");
    return hom_space(f, p);
}

/// dim_{C(p)} Ker(lambda_{f,p}): the prime-subfield dimension of the kernel
/// divided by that of C(p).  The division is exact because the kernel is a
/// right C(p)-space; a remainder would be an internal inconsistency.
template <finite_twisted_field F>
std::uint32_t dim_over_eigenring(const SkewPoly<F>& f, const Eigenring<F>& cp) {
    const std::uint32_t kdim = static_cast<std::uint32_t>(lambda_kernel(f, cp.atom()).size());
    if (kdim % cp.dim() != 0)
        throw InternalError("lambda kernel dimension is not a multiple of dim C(p)");
    return kdim / cp.dim();
}

template <finite_twisted_field F>
std::uint32_t dim_over_eigenring(const SkewPoly<F>& f, const SkewPoly<F>& p) {
    return dim_over_eigenring(f, Eigenring<F>(p));
}

/// Whether v + Rp lies in the right C(p)-span of xs, by a prime-subfield
/// linear solve over one gamma_i in C(p) per spanning vector.
template <finite_twisted_field F>
bool cp_dependent(const Eigenring<F>& cp, const std::vector<SkewPoly<F>>& xs, const SkewPoly<F>& v) {
    const SkewPoly<F>& p = cp.atom();
    const std::uint32_t n = static_cast<std::uint32_t>(p.degree());
    const std::uint32_t e = p.ring().prime_dim();
    const std::uint32_t d = cp.dim();
    MatFp m(p.ring().characteristic(), n * e, static_cast<std::size_t>(xs.size()) * d);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
            typename Eigenring<F>::Coords gamma(d, 0);
            gamma[j] = 1;
            const auto fl = detail::flatten(cp.act(SkewPoly<F>::rem(xs[i], p), gamma), n);
            for (std::size_t r = 0; r < fl.size(); ++r) m.at(r, i * d + j) = fl[r];
        }
    return solve(m, detail::flatten(SkewPoly<F>::rem(v, p), n)).has_value();
}

/// Dimension over C(p) of the right span of the given vectors in R/Rp.
template <finite_twisted_field F>
std::uint32_t cp_span_dim(const Eigenring<F>& cp, const std::vector<SkewPoly<F>>& xs) {
    std::vector<SkewPoly<F>> independent;
    for (const SkewPoly<F>& x : xs) {
        const SkewPoly<F> r = SkewPoly<F>::rem(x, cp.atom());
        if (r.is_zero()) continue;
        if (!cp_dependent(cp, independent, r)) independent.push_back(r);
    }
    return static_cast<std::uint32_t>(independent.size());
}

}  // namespace firlab
