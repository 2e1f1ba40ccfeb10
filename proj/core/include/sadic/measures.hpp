#pragma once

#include "sadic/cones.hpp"
#include "sadic/directive.hpp"
#include "sadic/numeric.hpp"
#include "sadic/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sadic {

/// A compatible family of nonnegative letter-value vectors down a
/// directive sequence: v_n = M(sigma_n) * v_{n+1} holds exactly at every
/// level. A tower is the finite-depth data of an invariant measure; all
/// arithmetic on it is exact rational. Immutable.
class MeasureTower {
public:
    /// Validates nonnegativity and exact compatibility.
    MeasureTower(DirectiveSequence seq, std::vector<RatVec> vectors);

    /// Builds the unique compatible tower with v_depth = top by pushing
    /// the vector down through the incidence matrices (exact).
    static MeasureTower from_top_vector(const DirectiveSequence& seq, int depth, RatVec top);

    const DirectiveSequence& sequence() const { return seq_; }
    int depth() const { return static_cast<int>(vectors_.size()) - 1; }
    const RatVec& level_vector(int n) const;

    /// Sum of v_n (the level-n block-start density m_n).
    Rat level_mass(int n) const;

    /// Same tower scaled by a nonnegative rational factor.
    MeasureTower scaled(const Rat& factor) const;

    /// Tower divided by its total mass. Normalization is always explicit
    /// and caller-side; nothing in this library renormalizes silently.
    MeasureTower normalized_to_probability() const;

    /// Structured-text export: one block per level with exact
    /// numerator/denominator pairs and a decimal rendering.
    std::string export_text() const;

private:
    DirectiveSequence seq_;
    std::vector<RatVec> vectors_;
};

/// The letter-evaluation vector at level n: (mu_n([a]) for a in
/// alphabet(n)), which is just v_n.
const RatVec& zeta(const MeasureTower& t, int n);

/// mu(X) = sum of v_0.
Rat total_mass(const MeasureTower& t);

/// A certified interval for mu([w]) from the depth-n block decomposition:
/// occurrences inside level-n blocks give the lower bound; occurrences
/// straddling a block boundary are at most |w|-1 per boundary, and
/// boundaries have density m_n, giving the upper bound. `point` is the
/// midpoint; for |w| == 1 the interval is a single point.
struct CylinderEstimate {
    Word word;
    int level = 0;
    Rat lower;
    Rat upper;
    Rat point;
    Rat error_bound; // (|w|-1) * m_n

    /// "w, n, lower, point, upper, error_bound" with exact rationals.
    std::string to_csv_line() const;
};

/// Evaluates the tower on the cylinder [w] using level-n blocks. The
/// blocks sigma_[0,n)(a) are expanded explicitly; `expansion_cap` guards
/// the total symbol count (ResourceLimitError past it). Throws
/// std::invalid_argument on an empty word.
CylinderEstimate cylinder_measure(const MeasureTower& t, const Word& w, int n,
                                  int64_t expansion_cap = 10'000'000);

/// The lift at some level is not unique: the solution set inside the cone
/// approximation still has the given affine dimension.
struct AmbiguityReport {
    int level = 0;
    int dimension = 0;
    std::string detail;
};

struct LiftOptions {
    /// How many levels past n+1 the pruning cone approximation looks.
    int cone_lookahead = 25;
    /// Convergence window handed to estimate_cone_dim.
    int window = 5;
};

struct LiftResult {
    std::optional<MeasureTower> tower;
    std::optional<AmbiguityReport> ambiguity;
    /// Exact L1 distance between the requested v0 and the realized one
    /// (zero on the invertible path; tiny when tolerance clamping or
    /// singular-level pruning had to adjust).
    Rat v0_adjustment;
};

/// Reconstructs the tower over `seq` whose level-0 letter values are v0,
/// lifting one level at a time: solve M(sigma_n) x = v_n for x >= 0
/// exactly when the matrix is invertible, and otherwise prune the
/// solution set with the level-(n+1) cone approximation. Returns an
/// ambiguity report instead of a tower when the pruned solution set has
/// positive dimension. Throws InfeasibleError (with the level) when no
/// nonnegative solution exists within eps, and std::invalid_argument when
/// v0 has a negative entry.
LiftResult unique_tower_from_letters(const DirectiveSequence& seq, const RatVec& v0, int depth,
                                     double eps, const LiftOptions& options = {});

/// The induced map on towers of a non-erasing morphism: the sequence is
/// prolongated by sigma and the new level-0 vector is M(sigma) * v_0.
/// Mass is generally not preserved. Throws std::invalid_argument on an
/// erasing morphism or a domain mismatch.
MeasureTower pushforward(const Morphism& sigma, const MeasureTower& t);

} // namespace sadic
