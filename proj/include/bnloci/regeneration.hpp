#pragma once

// Witness search for the regeneration criterion: a series of dimension r'
// and degree d' exists on some smooth curve in |H| if and only if there are
// non-negative integers (r1, r2, d1, d2) with
//   (1) r1 + r2 = r' - 1
//   (2) d1 + d2 <= d' - d + 2r - 2
//   (3) 0 <= rho(r, r1, d1) < r
//   (4) 0 <= rho(g+r-d-1, r2, d2) < g+r-d-1
// plus the closed-form obstruction that rules the whole search out at once.

#include <optional>
#include <string>
#include <vector>

#include "bnloci/picard_lattice.hpp"

namespace bnloci {

struct RegenerationWitness {
    Int r1;
    Int r2;
    Int d1;
    Int d2;

    bool operator==(const RegenerationWitness&) const = default;
};

struct RegenerationQuery {
    Int g;
    Int r;
    Int d;
    Int rp;
    Int dp;

    bool operator==(const RegenerationQuery&) const = default;
};

// Raw re-validation of conditions (1)-(4) straight from the definitions.
inline bool witness_is_valid(const RegenerationQuery& q, const RegenerationWitness& w) {
    if (w.r1 < 0 || w.r2 < 0 || w.d1 < 0 || w.d2 < 0) return false;
    if (w.r1 + w.r2 != q.rp - 1) return false;
    if (w.d1 + w.d2 > q.dp - q.d + 2 * q.r - 2) return false;
    const Int rho1 = rho(q.r, w.r1, w.d1);
    if (!(0 <= rho1 && rho1 < q.r)) return false;
    const Int genus_b = q.g + q.r - q.d - 1;
    const Int rho2 = rho(genus_b, w.r2, w.d2);
    if (!(0 <= rho2 && rho2 < genus_b)) return false;
    return true;
}

// First witness in lexicographic (r1, d1, d2) order, or absence. The d1
// range solves condition (3) in closed form,
//   r1 + ceil(r1*r/(r1+1)) <= d1 <= r1 + r - 1,
// with the ceiling computed by exact integer division; d2 analogously with
// the genus g+r-d-1. Empty ranges simply yield absence.
inline std::optional<RegenerationWitness> find_witness(Int g, Int r, Int d, Int rp, Int dp) {
    require_guarded({g, r, d, rp, dp}, "find_witness");
    const RegenerationQuery q{g, r, d, rp, dp};
    const Int budget = dp - d + 2 * r - 2;
    if (budget < 0) return std::nullopt;
    const Int genus_b = g + r - d - 1;

    for (Int r1 = 0; r1 <= rp - 1; ++r1) {
        const Int r2 = rp - 1 - r1;
        const Int d1_lo = std::max<Int>(0, r1 + ceil_div(checked_mul(r1, r), r1 + 1));
        const Int d1_hi = r1 + r - 1;
        const Int d2_lo = std::max<Int>(0, r2 + ceil_div(checked_mul(r2, genus_b), r2 + 1));
        const Int d2_hi = r2 + genus_b - 1;
        for (Int d1 = d1_lo; d1 <= d1_hi && d1 <= budget; ++d1) {
            for (Int d2 = d2_lo; d2 <= d2_hi && d1 + d2 <= budget; ++d2) {
                const RegenerationWitness w{r1, r2, d1, d2};
                if (witness_is_valid(q, w)) return w;
            }
        }
    }
    return std::nullopt;
}

// Closed-form obstruction: when it holds, no witness quadruple exists.
// Exact rational comparison by cross-multiplication, branch by r' vs r:
//   r' <= r:  r'(d - r + r' - d') > r - r'
//   r  < r':  (r' - r + 1)(g + r' - 1 - d') > g + r - d - 1
inline bool nc30_holds(Int g, Int r, Int d, Int rp, Int dp) {
    if (rp < 1) throw std::invalid_argument("nc30_holds: target rank must be >= 1");
    require_guarded({g, r, d, rp, dp}, "nc30_holds");
    if (rp <= r)
        return checked_mul(rp, d - r + rp - dp) > r - rp;
    return checked_mul(rp - r + 1, g + rp - 1 - dp) > checked_sub(checked_add(g, r), d + 1);
}

enum class RegenerationStatus { Exists, NotExists, PreconditionsNotMet };

inline const char* to_string(RegenerationStatus s) {
    switch (s) {
        case RegenerationStatus::Exists: return "Exists";
        case RegenerationStatus::NotExists: return "NotExists";
        case RegenerationStatus::PreconditionsNotMet: return "PreconditionsNotMet";
    }
    return "PreconditionsNotMet";
}

struct RegenerationOutcome {
    RegenerationStatus status;
    RegenerationQuery query;
    std::optional<RegenerationWitness> witness;  // set exactly when Exists
    std::vector<std::string> reasons;            // set exactly when PreconditionsNotMet
};

// Full criterion for (g,r,d) with certified decomposition rigidity. Exists
// means some smooth curve in |H| on the very general surface with this
// lattice carries the queried series; NotExists means none does. When the
// criterion does not apply, the outcome says why instead of guessing.
inline RegenerationOutcome special_grd_exists(Int g, Int r, Int d, Int rp, Int dp,
                                              const RigidityVerdict& rigidity) {
    require_guarded({g, r, d, rp, dp}, "special_grd_exists");
    RegenerationOutcome out{RegenerationStatus::PreconditionsNotMet, {g, r, d, rp, dp}, {}, {}};

    if (!(g >= 3 && r >= 1 && 2 <= d && d <= g - 1))
        out.reasons.push_back("lattice constraints violated (need g >= 3, r >= 1, 2 <= d <= g-1)");
    if (rp < 1)
        out.reasons.push_back("target rank r' must be >= 1");
    if (!rigidity.certified())
        out.reasons.push_back("decomposition rigidity not certified");
    if (r > 1 && g + 4 * r - 2 * d == 4)
        out.reasons.push_back("g + 4r - 2d = 4");
    if (!out.reasons.empty()) return out;

    out.witness = find_witness(g, r, d, rp, dp);
    out.status = out.witness ? RegenerationStatus::Exists : RegenerationStatus::NotExists;
    return out;
}

}  // namespace bnloci
