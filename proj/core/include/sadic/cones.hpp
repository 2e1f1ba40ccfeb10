#pragma once

#include "sadic/directive.hpp"
#include "sadic/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sadic {

/// Outer approximation of the level-n letter cone: the columns of the
/// exact telescoped incidence matrix M(sigma_[n,m)), normalized onto the
/// probability simplex. The true cone is contained in the cone these
/// generators span, and the approximations nest as m grows.
struct ConeApprox {
    int level = 0;
    int depth = 0;
    IntMatrix raw_matrix;
    /// Simplex-normalized columns; exact rationals, each sums to 1.
    std::vector<RatVec> generators;
};

/// Throws InvalidStateError on a zero column, which a non-erasing
/// sequence cannot produce.
ConeApprox cone_generators(const DirectiveSequence& seq, int level, int depth);

/// A cluster of nearly-identical generators. The representative is the
/// componentwise lower median of the members, renormalized to the simplex;
/// the canonical member is the lexicographically smallest member column
/// (exact, straight from the matrix).
struct ConeCluster {
    RatVec representative;
    RatVec canonical_member;
    int size = 0;
};

struct ConeDimEstimate {
    int level = 0;
    /// Estimated dimension of the level cone at the deepest inspected
    /// depth; always within [1, alphabet size].
    int c_estimate = 0;
    /// True when the estimate was identical over the last `window`
    /// inspected depths.
    bool converged = false;
    std::vector<ConeCluster> clusters;
    /// Indices into `clusters` of the representatives that are not
    /// nonnegative combinations of the others.
    std::vector<int> extreme;
    /// Inspected depths were sweep_begin..sweep_end (inclusive).
    int sweep_begin = 0;
    int sweep_end = 0;
    /// c estimate per inspected depth, parallel to that range.
    std::vector<int> history;

    std::vector<RatVec> extreme_rays() const;
};

/// Sweeps depths level+1 .. depth, clustering the simplex generators with
/// single-linkage at L1 distance eps and taking the rank (pivot tolerance
/// eps, double precision) of the cluster representatives.
ConeDimEstimate estimate_cone_dim(const DirectiveSequence& seq, int level, int depth, double eps,
                                  int window = 5);

enum class ThinVerdict {
    Thin,
    NotThinWitness,
    Undetermined,
};

std::string to_string(ThinVerdict v);

/// Per-level cone dimensions and the thinness verdict. Finite-depth
/// estimates are evidence, not proof: `thin` requires every level to have
/// converged to the same dimension, a not-thin witness is a pair of
/// converged levels that disagree, and anything else is undetermined.
struct ConeReport {
    std::vector<ConeDimEstimate> levels;
    ThinVerdict thin = ThinVerdict::Undetermined;
    /// The disagreeing levels when thin == NotThinWitness.
    std::pair<int, int> witness_levels{-1, -1};
    /// Smallest inspected level from which all converged estimates agree.
    std::optional<int> stabilization_level;
    /// Bracket for the number of ergodic measures: [c_0 estimate,
    /// card(alphabet(0))].
    std::pair<int, int> e_bounds{0, 0};
};

/// Estimates c_n for every n < depth, each swept `depth` levels ahead
/// (clamped to what the generator supports). Level sweeps run in
/// parallel, capped by the SADIC_THREADS environment variable.
ConeReport check_thin(const DirectiveSequence& seq, int depth, double eps, int window = 5);

/// Smallest inspected n such that all converged estimates at levels >= n
/// agree; nullopt when no level converged.
std::optional<int> find_stabilization_level(const ConeReport& report);

} // namespace sadic
