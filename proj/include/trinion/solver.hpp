#pragma once

#include <array>
#include <variant>
#include <vector>

#include "trinion/polytope.hpp"
#include "trinion/su2.hpp"

namespace trinion {

/// Overshoot of |cos beta| beyond 1 accepted as boundary rounding.
inline constexpr double kDefaultClampTol = 1e-9;
/// Below this, sin(theta) is treated as zero and the class as central.
inline constexpr double kDegenerateSinTol = 1e-12;
/// |cos beta| within this of 1 snaps to exactly +-1, so inputs lying on a
/// facet produce an exactly diagonal second factor (reducible witness).
inline constexpr double kCosSnapBand = 1e-12;
/// Componentwise tolerance for witness feasibility and moment-map checks.
inline constexpr double kDefaultAngleTol = 1e-9;

/// Solution of cos(t1)cos(t2) - sin(t1)sin(t2)cos(beta) = cos(t3) for beta,
/// on the principal branch beta in [0, pi] (the branch with
/// sin(t2) sin(beta) >= 0).
struct BetaSolution {
    double beta;
    double cos_beta_raw;  // pre-clamp value of (cos t1 cos t2 - cos t3)/(sin t1 sin t2)
    bool clamped;         // |cos_beta_raw| exceeded 1 and was clamped
};

struct Witness {
    Representation rep;
    BetaSolution beta;
    RegionTag region;
};

/// Carries the per-facet slacks (offset - normal.t, negative = violated)
/// and the indices of violated facets with their positive violation sizes.
struct Infeasible {
    std::array<double, 4> slacks;
    std::vector<int> violated;
};

struct SolveOutcome {
    std::variant<Witness, Infeasible> value;

    bool is_witness() const { return std::holds_alternative<Witness>(value); }
    const Witness& witness() const { return std::get<Witness>(value); }
    const Infeasible& infeasible() const { return std::get<Infeasible>(value); }
};

/// Solves for beta in the nondegenerate case sin(t1) sin(t2) > tol; the
/// degenerate case belongs to solve_witness and throws here. Returns the
/// infeasibility report when |cos_beta_raw| > 1 + clamp_tol.
std::variant<BetaSolution, Infeasible> beta_from_angles(const AngleTriple& t,
                                                        double tol = kDegenerateSinTol,
                                                        double clamp_tol = kDefaultClampTol);

/// Constructs an explicit triple (A1, A2, A3), Ai in the class of t_i, with
/// A1 A2 A3 = 1, whenever t lies in the tetrahedron; otherwise reports the
/// violated facets. A1 is the diagonal class representative, A2 the rotated
/// representative at angle beta, A3 the inverse of their product. Central
/// classes route through an all-diagonal construction.
SolveOutcome solve_witness(const AngleTriple& t, double tol = kDefaultAngleTol);

/// |t1 - t2| <= t3 <= min(t1 + t2, 2 pi - (t1 + t2)), exact comparisons;
/// false outside [0, pi]^3. Agrees with Tetrahedron::contains.
bool holonomy_condition(const AngleTriple& t);

}  // namespace trinion
