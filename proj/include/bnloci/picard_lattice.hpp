#pragma once

// Arithmetic of the rank-2 lattice with Gram matrix [[2g-2, d], [d, 2r-2]]
// in the basis (H, L), and the decomposition-rigidity decision procedure:
// a closed-form fast path plus an exhaustive, exactly-filtered enumeration
// of flexible decompositions H = A + B with A = xH - yL.

#include <cmath>
#include <string>
#include <vector>

#include "bnloci/bn_core.hpp"

namespace bnloci {

// Parameters of a hyperbolic rank-2 lattice. Constructible only when the
// discriminant is negative, so the lattice actually occurs.
struct PicardLatticeParams {
    Int g;
    Int r;
    Int d;

    PicardLatticeParams(Int g_, Int r_, Int d_) : g(g_), r(r_), d(d_) {
        if (g < 3) throw std::invalid_argument("PicardLatticeParams: genus must be >= 3");
        if (r < 1) throw std::invalid_argument("PicardLatticeParams: rank must be >= 1");
        if (!(2 <= d && d <= g - 1))
            throw std::invalid_argument("PicardLatticeParams: degree must satisfy 2 <= d <= g-1");
        require_guarded({g, r, d}, "PicardLatticeParams");
        if (discriminant(g, r, d) >= 0)
            throw std::invalid_argument(
                "PicardLatticeParams: discriminant 4(g-1)(r-1) - d^2 must be negative");
    }

    bool operator==(const PicardLatticeParams&) const = default;
};

// Integral class a*H + b*L.
struct DivisorClass {
    Int a;
    Int b;
    bool operator==(const DivisorClass&) const = default;
};

inline Int pairing(const PicardLatticeParams& p, DivisorClass u, DivisorClass v) {
    const Int h2 = 2 * p.g - 2;
    const Int l2 = 2 * p.r - 2;
    Int acc = checked_mul(checked_mul(u.a, v.a), h2);
    acc = checked_add(acc, checked_mul(checked_add(checked_mul(u.a, v.b), checked_mul(u.b, v.a)), p.d));
    return checked_add(acc, checked_mul(checked_mul(u.b, v.b), l2));
}

// Arithmetic genus u.u/2 + 1; self-intersections are even on this lattice.
inline Int class_genus(const PicardLatticeParams& p, DivisorClass u) {
    return pairing(p, u, u) / 2 + 1;
}

// Over-approximate bound m' on |x| for decomposition candidates when r >= 2:
// floor of max{1 + d/(sqrt|D| sqrt(g-1)), 2(r-1)g/((d - sqrt|D|) sqrt|D|)}
// evaluated in floating point, plus a margin of 2. The margin absorbs any
// rounding slop; the exact membership filters below make the scan sound.
inline Int enumeration_bound(const PicardLatticeParams& p) {
    if (p.r < 2)
        throw std::invalid_argument("enumeration_bound: defined for r >= 2 (r = 1 scans x in {0,1})");
    const double s = std::sqrt(static_cast<double>(-discriminant(p.g, p.r, p.d)));
    const double b1 = 1.0 + static_cast<double>(p.d) / (s * std::sqrt(static_cast<double>(p.g - 1)));
    const double b2 = 2.0 * static_cast<double>(p.r - 1) * static_cast<double>(p.g) /
                      ((static_cast<double>(p.d) - s) * s);
    return static_cast<Int>(std::floor(std::max(b1, b2))) + 2;
}

// An (x,y) pair surviving the flexible-decomposition inequalities, with the
// pairings of A = xH - yL and B = (1-x)H + yL cached.
struct DecompositionCandidate {
    Int x;
    Int y;
    Int A_self;
    Int B_self;
    Int A_dot_H;
    Int B_dot_H;

    bool operator==(const DecompositionCandidate&) const = default;
};

inline DecompositionCandidate make_candidate(const PicardLatticeParams& p, Int x, Int y) {
    const DivisorClass A{x, -y};
    const DivisorClass B{1 - x, y};
    const DivisorClass H{1, 0};
    return DecompositionCandidate{x, y,
                                  pairing(p, A, A), pairing(p, B, B),
                                  pairing(p, A, H), pairing(p, B, H)};
}

inline bool candidate_inequalities_hold(const DecompositionCandidate& c) {
    return c.A_self >= 0 && c.B_self >= -2 && c.A_dot_H > 0 && c.B_dot_H > 0;
}

// All integer (x,y) such that A = xH - yL, B = (1-x)H + yL is a possible
// flexible decomposition of H: A^2 >= 0, B^2 >= -2, A.H > 0, B.H > 0.
// For r = 1 the x-range collapses to {0,1} with explicit y-windows; for
// r >= 2 the scan covers |x| <= enumeration_bound and the open y-interval
// (2(g-1)(x-1)/d, 2(g-1)x/d). Every emitted pair passes the exact integer
// filters; no floating point decides membership.
inline std::vector<DecompositionCandidate> decomposition_candidates(const PicardLatticeParams& p) {
    std::vector<DecompositionCandidate> out;
    auto consider = [&](Int x, Int y) {
        DecompositionCandidate c = make_candidate(p, x, y);
        if (candidate_inequalities_hold(c)) out.push_back(c);
    };

    if (p.r == 1) {
        // x = 0 with -g/d <= y < 0, or x = 1 with 0 < y <= (g-1)/d.
        for (Int y = -floor_div(p.g, p.d); y <= -1; ++y) consider(0, y);
        for (Int y = 1; y <= floor_div(p.g - 1, p.d); ++y) consider(1, y);
        return out;
    }

    const Int m = enumeration_bound(p);
    const Int two_g1 = 2 * (p.g - 1);
    for (Int x = -m; x <= m; ++x) {
        // strict window 2(g-1)(x-1) < d*y < 2(g-1)x
        const Int y_lo = floor_div(checked_mul(two_g1, x - 1), p.d) + 1;
        const Int y_hi = ceil_div(checked_mul(two_g1, x), p.d) - 1;
        for (Int y = y_lo; y <= y_hi; ++y) consider(x, y);
    }
    return out;
}

// The six intersection points bounding the candidate region, evaluated in
// floating point for plots and reports.
struct RegionVertices {
    struct Point {
        double x;
        double y;
    };
    Point q_plus;   // l meets l-: (1 + d/s, 2(g-1)/s), s = sqrt|D|
    Point q_minus;  // (1 - d/s, -2(g-1)/s)
    Point p1;       // conic meets l-: (2(r-1)g/((d-s)s), g/s)
    Point p2;       // conic meets l, upper: (1 + d/(sqrt(g-1) s), 2 sqrt(g-1)/s)
    Point p3;       // conic meets l, lower: (1 - d/(sqrt(g-1) s), -2 sqrt(g-1)/s)
    Point p4;       // conic meets l+: (-2(r-1)g/((d+s)s), -g/s)
};

inline RegionVertices region_vertices(const PicardLatticeParams& p) {
    if (p.r < 2) throw std::invalid_argument("region_vertices: defined for r >= 2");
    const double s = std::sqrt(static_cast<double>(-discriminant(p.g, p.r, p.d)));
    const double g = static_cast<double>(p.g);
    const double d = static_cast<double>(p.d);
    const double r = static_cast<double>(p.r);
    const double t = std::sqrt(g - 1.0);
    RegionVertices v;
    v.q_plus = {1.0 + d / s, 2.0 * (g - 1.0) / s};
    v.q_minus = {1.0 - d / s, -2.0 * (g - 1.0) / s};
    v.p1 = {2.0 * (r - 1.0) * g / ((d - s) * s), g / s};
    v.p2 = {1.0 + d / (t * s), 2.0 * t / s};
    v.p3 = {1.0 - d / (t * s), -2.0 * t / s};
    v.p4 = {-2.0 * (r - 1.0) * g / ((d + s) * s), -g / s};
    return v;
}

// Closed-form sufficient conditions for decomposition rigidity:
//   cliff: 2d >= g - 3 + 4r (r >= 2),  2d >= g (r = 1)
//   caz:   (r-1)(3g-4)^2 < 2 d^2 (g-2)
// Both comparisons are exact; the caz products run through 128-bit lanes.
inline bool rigidity_fast_path(const PicardLatticeParams& p) {
    const bool cliff = (p.r >= 2) ? (2 * p.d >= p.g - 3 + 4 * p.r) : (2 * p.d >= p.g);
    if (!cliff) return false;
    const Int128 lhs = Int128(p.r - 1) * Int128(3 * p.g - 4) * Int128(3 * p.g - 4);
    const Int128 rhs = Int128(2) * Int128(p.d) * Int128(p.d) * Int128(p.g - 2);
    return lhs < rhs;
}

// Simplified replacement for the caz inequality: g >= min{r(r+1), 10(r-1)}.
inline bool simplified_caz(Int g, Int r) {
    return g >= std::min(checked_mul(r, r + 1), checked_mul(10, r - 1));
}

enum class RigidityStatus { CertifiedFastPath, CertifiedByEnumeration, Unknown };

inline const char* to_string(RigidityStatus s) {
    switch (s) {
        case RigidityStatus::CertifiedFastPath: return "CertifiedFastPath";
        case RigidityStatus::CertifiedByEnumeration: return "CertifiedByEnumeration";
        case RigidityStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

// Named special-case rule removing candidates that cannot give a flexible
// decomposition for reasons the inequalities alone do not see.
struct ExclusionRule {
    std::string name;
    std::string reason;
};

struct RigidityVerdict {
    RigidityStatus status;
    // Extra candidates outside {(1,1), (0,-1)}; nonempty exactly when Unknown.
    std::vector<DecompositionCandidate> candidates;
    std::vector<ExclusionRule> exclusions_applied;

    bool certified() const { return status != RigidityStatus::Unknown; }
};

inline bool is_canonical_pair(Int x, Int y) {
    return (x == 1 && y == 1) || (x == 0 && y == -1);
}

// Enumeration-based classification: list candidates, apply exclusion R1
// (for r = 1, g = 2d the class H - 2L is the unique (-2)-class, hence an
// irreducible divisor with h^0 = 1, so (0,-2) and its mirror (1,2) cannot
// appear in a flexible decomposition), then check whether anything beyond
// the canonical pair {(1,1), (0,-1)} survives.
inline RigidityVerdict check_rigidity_by_enumeration(const PicardLatticeParams& p) {
    RigidityVerdict v{RigidityStatus::CertifiedByEnumeration, {}, {}};
    std::vector<DecompositionCandidate> cands = decomposition_candidates(p);

    if (p.r == 1 && p.g == 2 * p.d) {
        bool removed = false;
        std::erase_if(cands, [&](const DecompositionCandidate& c) {
            const bool hit = (c.x == 0 && c.y == -2) || (c.x == 1 && c.y == 2);
            removed = removed || hit;
            return hit;
        });
        if (removed)
            v.exclusions_applied.push_back(
                {"R1",
                 "r = 1 and g = 2d: H - 2L is the unique (-2)-class, hence irreducible "
                 "with h^0 = 1, so the split 2L + (H - 2L) is not flexible"});
    }

    for (const DecompositionCandidate& c : cands)
        if (!is_canonical_pair(c.x, c.y)) v.candidates.push_back(c);

    if (!v.candidates.empty()) v.status = RigidityStatus::Unknown;
    return v;
}

// Decide decomposition rigidity: the closed-form fast path first, exhaustive
// enumeration otherwise. Unknown is not a disproof; the h^0 >= 2 conditions
// are over-approximated by A.H > 0 and B.H > 0, so only Certified verdicts
// are conclusions.
inline RigidityVerdict check_rigidity(const PicardLatticeParams& p) {
    if (rigidity_fast_path(p)) return RigidityVerdict{RigidityStatus::CertifiedFastPath, {}, {}};
    return check_rigidity_by_enumeration(p);
}

}  // namespace bnloci
