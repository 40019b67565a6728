#pragma once

// Closed-form Brill-Noether numerics: the Brill-Noether number rho and its
// gonality refinement, lattice discriminants, maximal degrees, Serre duality
// of linear series, and the classification of expected maximal loci.

#include <algorithm>
#include <vector>

#include "bnloci/arithmetic.hpp"

namespace bnloci {

// A labeled Brill-Noether locus: curves of genus g carrying a linear series
// of dimension r and degree d.
struct BNTriple {
    Int g;
    Int r;
    Int d;

    BNTriple(Int g_, Int r_, Int d_) : g(g_), r(r_), d(d_) {
        if (g < 2) throw std::invalid_argument("BNTriple: genus must be >= 2");
        if (r < 0) throw std::invalid_argument("BNTriple: rank must be >= 0");
        if (d < 0) throw std::invalid_argument("BNTriple: degree must be >= 0");
        if (g > input_guard())
            throw std::out_of_range("BNTriple: genus exceeds the configured input bound");
        require_guarded({r, d}, "BNTriple");
    }

    bool operator==(const BNTriple&) const = default;
};

// rho = g - (r+1)(g-d+r). The raw overload places no constraints on its
// arguments; callers that need validated triples go through BNTriple.
inline Int rho(Int g, Int r, Int d) {
    return checked_sub(g, checked_mul(checked_add(r, 1),
                                      checked_sub(checked_add(g, r), d)));
}

inline Int rho(const BNTriple& t) { return rho(t.g, t.r, t.d); }

// Gonality-refined Brill-Noether number for k-gonal curves:
//   rho_k = rho + max over 0 <= l <= min{r, g-d+r+1} of (g-k-d+2r+1)l - l^2.
// The maximum is found by scanning the whole l-range (at most r+1 terms)
// rather than through the closed-form vertex.
inline Int rho_pflueger(const BNTriple& t, Int k) {
    if (k < 2) throw std::invalid_argument("rho_pflueger: gonality must be >= 2");
    const Int coeff = t.g - k - t.d + 2 * t.r + 1;
    const Int l_hi = std::max<Int>(0, std::min(t.r, t.g - t.d + t.r + 1));
    Int best = 0;  // the l = 0 term, so rho_k >= rho always
    for (Int l = 0; l <= l_hi; ++l)
        best = std::max(best, checked_sub(checked_mul(coeff, l), checked_mul(l, l)));
    return checked_add(rho(t), best);
}

// Discriminant 4(g-1)(r-1) - d^2 of the rank-2 lattice attached to (g,r,d).
inline Int discriminant(Int g, Int r, Int d) {
    return checked_sub(checked_mul(4, checked_mul(g - 1, r - 1)), checked_mul(d, d));
}

inline Int discriminant(const BNTriple& t) { return discriminant(t.g, t.r, t.d); }

// Largest degree d with rho(g,r,d) < 0, in closed form r + ceil(gr/(r+1)) - 1.
inline Int d_max(Int g, Int r) {
    if (r < 1) throw std::invalid_argument("d_max: rank must be >= 1");
    require_guarded({g, r}, "d_max");
    const Int result = r + ceil_div(checked_mul(g, r), r + 1) - 1;
    if (!(rho(g, r, result) < 0 && rho(g, r, result + 1) >= 0))
        throw std::logic_error("d_max: postcondition violated");
    return result;
}

// Serre duality of series: (g, r, d) -> (g, g-d+r-1, 2g-2-d).
inline BNTriple serre_dual(const BNTriple& t) {
    const Int dual_rank = t.g - t.d + t.r - 1;
    if (dual_rank < 0)
        throw std::domain_error("serre_dual: dual rank is negative");
    return BNTriple(t.g, dual_rank, 2 * t.g - 2 - t.d);
}

// Expected maximal loci admit no trivial containment into a larger locus:
// 2 <= d <= g-1, rho < 0, rho(g,r,d+1) >= 0, and rho(g,r-1,d-1) >= 0 if r >= 2.
inline bool is_expected_maximal(Int g, Int r, Int d) {
    if (!(2 <= d && d <= g - 1)) return false;
    if (rho(g, r, d) >= 0) return false;
    if (rho(g, r, d + 1) < 0) return false;
    if (r >= 2 && rho(g, r - 1, d - 1) < 0) return false;
    return true;
}

inline bool is_expected_maximal(const BNTriple& t) {
    return is_expected_maximal(t.g, t.r, t.d);
}

// Largest rank r for which an expected maximal locus of genus g exists:
// floor(sqrt(g)) when g >= floor(sqrt(g))^2 + floor(sqrt(g)), else one less.
inline Int max_rank(Int g) {
    if (g < 3) throw std::invalid_argument("max_rank: genus must be >= 3");
    require_guarded({g}, "max_rank");
    const Int s = isqrt(g);
    return (g >= s * s + s) ? s : s - 1;
}

struct ExpectedMaximalLocus {
    BNTriple triple;
    Int rho;
};

// All expected maximal loci of genus g: one locus (g, r, d_max(g,r)) for each
// rank 1 <= r <= max_rank(g).
inline std::vector<ExpectedMaximalLocus> expected_maximal_loci(Int g) {
    std::vector<ExpectedMaximalLocus> out;
    const Int r_hi = max_rank(g);
    out.reserve(static_cast<std::size_t>(r_hi));
    for (Int r = 1; r <= r_hi; ++r) {
        const Int d = d_max(g, r);
        if (!is_expected_maximal(g, r, d))
            throw std::logic_error("expected_maximal_loci: classification mismatch");
        out.push_back({BNTriple(g, r, d), rho(g, r, d)});
    }
    return out;
}

}  // namespace bnloci
