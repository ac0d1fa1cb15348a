#pragma once

#include <memory>
#include <random>
#include <vector>

#include "firlab/io.hpp"
#include "firlab/ore.hpp"
#include "firlab/skew_poly.hpp"
#include "firlab/twisted_field.hpp"

namespace testutil {

using namespace firlab;

using FinRing = std::shared_ptr<const FiniteTwistedField>;
using FunRing = std::shared_ptr<const RationalFunctionTwistedField>;
using Poly = SkewPoly<FiniteTwistedField>;
using FunPoly = SkewPoly<RationalFunctionTwistedField>;

inline FinRing make_gf(std::uint32_t p, std::uint32_t e, std::uint32_t frob = 1,
                       std::optional<GfElem> der = std::nullopt) {
    return std::make_shared<const FiniteTwistedField>(GfField(p, e), frob, der);
}

// Shared fixtures; the atom cache is keyed by ring structure, so reusing
// these across test cases keeps the suites fast.
inline const FinRing& gf4() {
    static FinRing r = make_gf(2, 2);
    return r;
}
inline const FinRing& gf8() {
    static FinRing r = make_gf(2, 3);
    return r;
}
inline const FinRing& gf9() {
    static FinRing r = make_gf(3, 2);
    return r;
}
inline const FinRing& gf2() {
    static FinRing r = make_gf(2, 1);
    return r;
}
inline const FinRing& gf5() {
    static FinRing r = make_gf(5, 1);
    return r;
}
inline const FunRing& fun2() {
    static FunRing r = std::make_shared<const RationalFunctionTwistedField>(2);
    return r;
}

inline Poly P(const FinRing& ring, const std::string& s) { return parse_poly(ring, s); }
inline GfElem E(const FinRing& ring, const std::string& s) { return parse_element(ring, s); }
inline FunPoly FP(const FunRing& ring, const std::string& s) { return parse_poly(ring, s); }

/// Deterministic generator for randomized properties.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    GfElem elem(const FinRing& ring) { return ring->element(below(ring->size())); }
    GfElem nonzero_elem(const FinRing& ring) { return ring->element(1 + below(ring->size() - 1)); }

    /// Random polynomial of degree exactly d (monic when asked).
    Poly poly_of_degree(const FinRing& ring, std::uint32_t d, bool monic = false) {
        std::vector<GfElem> c(d + 1);
        for (std::uint32_t i = 0; i < d; ++i) c[i] = elem(ring);
        c[d] = monic ? ring->one() : nonzero_elem(ring);
        return Poly(ring, std::move(c));
    }

    /// Random nonzero polynomial of degree <= maxdeg.
    Poly nonzero_poly(const FinRing& ring, std::uint32_t maxdeg, std::uint32_t mindeg = 0) {
        const std::uint32_t d = mindeg + static_cast<std::uint32_t>(below(maxdeg - mindeg + 1));
        return poly_of_degree(ring, d);
    }

    /// Random monic atom of degree <= maxdeg.
    Poly atom(const FinRing& ring, std::uint32_t maxdeg) {
        for (;;) {
            const std::uint32_t d = 1 + static_cast<std::uint32_t>(below(maxdeg));
            const auto atoms = enumerate_atoms(ring, d);
            if (!atoms.empty()) return atoms[below(atoms.size())];
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace testutil
