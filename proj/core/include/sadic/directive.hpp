#pragma once

#include "sadic/morphism.hpp"
#include "sadic/numeric.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace sadic {

/// A directive sequence sigma_0, sigma_1, ... of morphisms with
/// domain(sigma_{n-1}) == codomain(sigma_n) at every level, finitely
/// truncated for analysis.
///
/// Two generators:
///   - explicit: a fixed list, levels beyond it do not exist;
///   - periodic: an explicit head (possibly empty) followed by a cycle of
///     morphisms repeated forever, so any level can be materialized.
///
/// truncation_depth is the declared analysis horizon; periodic sequences
/// can be inspected past it (lookahead windows, cone sweeps), explicit
/// ones cannot. Every level morphism must be non-erasing. Telescoped
/// incidence matrices are memoized behind a mutex, so a const sequence is
/// safe to share across threads.
class DirectiveSequence {
public:
    DirectiveSequence() = default;

    static DirectiveSequence explicit_list(std::vector<Morphism> levels);
    static DirectiveSequence periodic(std::vector<Morphism> cycle, int truncation_depth);

    /// The sequence (head[0], ..., head[k-1], cycle[0], cycle[1], ...).
    static DirectiveSequence with_head(std::vector<Morphism> head, std::vector<Morphism> cycle,
                                       int truncation_depth);

    /// Prolongation: the sequence (sigma, this[0], this[1], ...). Requires
    /// sigma non-erasing with domain equal to this sequence's level-0
    /// alphabet.
    DirectiveSequence prepend(const Morphism& sigma) const;

    bool is_periodic() const { return !cycle_.empty(); }
    int head_size() const { return static_cast<int>(head_.size()); }
    int cycle_size() const { return static_cast<int>(cycle_.size()); }
    int truncation_depth() const { return truncation_depth_; }

    /// Largest level count that can be materialized: truncation_depth for
    /// explicit sequences, INT_MAX effectively for periodic ones.
    int available_depth() const;

    /// Clamp a requested lookahead depth to what the generator supports.
    int clamp_depth(int requested) const;

    const Morphism& morphism(int level) const;

    /// Alphabet of level n (domain of sigma_{n-1}; alphabet(0) is the
    /// codomain of sigma_0).
    const Alphabet& alphabet(int level) const;

    /// sigma_m ∘ sigma_{m+1} ∘ ... ∘ sigma_{n-1}; the identity on
    /// alphabet(n) when m == n. Materializes image words; prefer
    /// telescoped_incidence when only counts are needed.
    Morphism telescope(int m, int n) const;

    /// Incidence matrix of telescope(m, n), computed by exact matrix
    /// products and memoized.
    IntMatrix telescoped_incidence(int m, int n) const;

private:
    void validate() const;

    std::vector<Morphism> head_;
    std::vector<Morphism> cycle_;
    int truncation_depth_ = 0;

    struct Memo {
        std::mutex mutex;
        std::map<std::pair<int, int>, IntMatrix> telescopes;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// beta_-(n): the minimal length over letters a of alphabet(n) of the
/// telescoped image sigma_0...sigma_{n-1}(a), computed from incidence
/// column sums. beta_-(0) == 1.
Int min_image_length(const DirectiveSequence& seq, int n);

enum class GrowthStatus {
    CertifiedGrowing,
    HeuristicallyGrowing,
    Unknown,
    NotGrowingWitness,
};

std::string to_string(GrowthStatus s);

/// Finite-truncation verdict on "minimal image lengths tend to infinity".
/// A boolean would overstate what a truncated inspection can know, so the
/// status carries its evidence:
///   - certified-growing: periodic generator with a telescoped window whose
///     matrix is entrywise positive (and has every column sum >= 2, which
///     is what positivity gives except in dimension one); the window
///     recurs forever, forcing exponential growth.
///   - not-growing-witness: periodic generator in which some letter is
///     mapped to a single letter around a full cycle, pinning its
///     telescoped length forever.
///   - heuristically-growing: beta_- nondecreasing over the inspected range
///     and beta_-(depth) >= threshold. The strongest verdict an explicit
///     finite list can earn.
///   - unknown: none of the above.
struct GrowthVerdict {
    GrowthStatus status = GrowthStatus::Unknown;
    /// Human-readable evidence: the window or the pinned letter.
    std::string witness;
    /// Level of the witness (window start or pinned letter's level), -1 if
    /// not applicable.
    int witness_level = -1;
    /// beta_-(0), ..., beta_-(depth).
    std::vector<Int> beta_values;
};

/// Inspects levels 0..depth. `threshold` is the heuristic growth floor
/// (default 1000 at the configuration layer).
GrowthVerdict check_everywhere_growing(const DirectiveSequence& seq, int depth, const Int& threshold);

struct LevelInvertibility {
    int level = 0;
    bool square = true;
    /// Exact determinant; meaningful only when square.
    Int determinant;
    bool invertible = false;
    /// "" when square; "non-square" otherwise.
    std::string reason;
};

/// Exact determinant of every level matrix below `depth`. Non-square
/// levels are reported, not errors.
std::vector<LevelInvertibility> check_invertible_levels(const DirectiveSequence& seq, int depth);

} // namespace sadic
