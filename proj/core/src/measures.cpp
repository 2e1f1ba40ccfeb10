#include "sadic/measures.hpp"

#include "sadic/detail/ratlinalg.hpp"
#include "sadic/detail/smalllinalg.hpp"
#include "sadic/errors.hpp"
#include "sadic/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace sadic {

MeasureTower::MeasureTower(DirectiveSequence seq, std::vector<RatVec> vectors)
    : seq_(std::move(seq)), vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw std::invalid_argument("tower needs at least the level-0 vector");
    // GMP comparisons assume canonical form; normalize hand-built input.
    for (auto& v : vectors_)
        for (auto& x : v) x.canonicalize();
    const int n_levels = static_cast<int>(vectors_.size());
    if (n_levels - 1 > seq_.available_depth())
        throw std::invalid_argument("tower is deeper than the directive sequence");
    for (int n = 0; n < n_levels; ++n) {
        const RatVec& v = vectors_[static_cast<size_t>(n)];
        if (static_cast<int>(v.size()) != seq_.alphabet(n).size())
            throw std::invalid_argument("level " + std::to_string(n) +
                                        " vector size differs from the level alphabet");
        for (const auto& x : v)
            if (x < 0)
                throw std::invalid_argument("tower vectors must be nonnegative (level " +
                                            std::to_string(n) + ")");
    }
    for (int n = 0; n + 1 < n_levels; ++n) {
        RatVec expected =
            seq_.morphism(n).incidence_matrix().apply(vectors_[static_cast<size_t>(n) + 1]);
        if (expected != vectors_[static_cast<size_t>(n)])
            throw std::invalid_argument("tower compatibility v_n = M(sigma_n) v_{n+1} fails at level " +
                                        std::to_string(n));
    }
}

MeasureTower MeasureTower::from_top_vector(const DirectiveSequence& seq, int depth, RatVec top) {
    if (depth < 0 || depth > seq.available_depth())
        throw std::invalid_argument("tower depth out of range");
    for (auto& x : top) x.canonicalize();
    std::vector<RatVec> vectors(static_cast<size_t>(depth) + 1);
    vectors[static_cast<size_t>(depth)] = std::move(top);
    for (int n = depth - 1; n >= 0; --n) {
        vectors[static_cast<size_t>(n)] =
            seq.morphism(n).incidence_matrix().apply(vectors[static_cast<size_t>(n) + 1]);
    }
    return MeasureTower(seq, std::move(vectors));
}

const RatVec& MeasureTower::level_vector(int n) const {
    if (n < 0 || n > depth()) throw std::invalid_argument("tower level out of range");
    return vectors_[static_cast<size_t>(n)];
}

Rat MeasureTower::level_mass(int n) const { return vec_sum(level_vector(n)); }

MeasureTower MeasureTower::scaled(const Rat& factor) const {
    if (factor < 0) throw std::invalid_argument("scale factor must be nonnegative");
    std::vector<RatVec> vectors = vectors_;
    for (auto& v : vectors)
        for (auto& x : v) x *= factor;
    return MeasureTower(seq_, std::move(vectors));
}

MeasureTower MeasureTower::normalized_to_probability() const {
    Rat mass = vec_sum(vectors_[0]);
    if (mass == 0) throw std::invalid_argument("cannot normalize the zero tower");
    return scaled(Rat(1) / mass);
}

std::string MeasureTower::export_text() const {
    std::ostringstream out;
    out << "tower.depth = " << depth() << "\n";
    for (int n = 0; n <= depth(); ++n) {
        const Alphabet& alpha = seq_.alphabet(n);
        const RatVec& v = vectors_[static_cast<size_t>(n)];
        out << "level " << n << ":\n";
        for (int i = 0; i < alpha.size(); ++i) {
            const Rat& x = v[static_cast<size_t>(i)];
            out << "  " << alpha.letter(i) << " = " << rational_string(x) << " ("
                << decimal_string(x) << ")\n";
        }
    }
    return out.str();
}

const RatVec& zeta(const MeasureTower& t, int n) { return t.level_vector(n); }

Rat total_mass(const MeasureTower& t) { return vec_sum(t.level_vector(0)); }

std::string CylinderEstimate::to_csv_line() const {
    std::ostringstream out;
    out << word.to_string() << ", " << level << ", " << rational_string(lower) << ", "
        << rational_string(point) << ", " << rational_string(upper) << ", "
        << rational_string(error_bound);
    return out.str();
}

CylinderEstimate cylinder_measure(const MeasureTower& t, const Word& w, int n,
                                  int64_t expansion_cap) {
    if (w.is_empty()) throw std::invalid_argument("cylinder word must be nonempty");
    if (w.alphabet() != t.sequence().alphabet(0))
        throw std::invalid_argument("cylinder word is not over the level-0 alphabet");
    if (n < 0 || n > t.depth())
        throw std::invalid_argument("cylinder level exceeds the tower depth");

    const DirectiveSequence& seq = t.sequence();
    const Alphabet& alpha = seq.alphabet(n);

    Expander expander(seq, ExpansionBudget{expansion_cap, true});
    Int total_predicted = 0;
    for (int a = 0; a < alpha.size(); ++a) total_predicted += expander.predicted_length(n, a);
    if (total_predicted > expansion_cap)
        throw ResourceLimitError(
            "expanding all level-" + std::to_string(n) + " blocks needs " +
                total_predicted.get_str() + " symbols, over the cap of " +
                std::to_string(expansion_cap) + "; lower n or raise the cap",
            total_predicted.get_str());

    const RatVec& v = t.level_vector(n);
    Rat occurrence_sum = 0;
    for (int a = 0; a < alpha.size(); ++a) {
        if (v[static_cast<size_t>(a)] == 0) continue;
        Word block = expander.expand(n, a);
        int64_t occ = count_occurrences(block, w);
        if (occ > 0) occurrence_sum += Rat(occ) * v[static_cast<size_t>(a)];
    }

    CylinderEstimate est;
    est.word = w;
    est.level = n;
    est.error_bound = Rat(w.length() - 1) * t.level_mass(n);
    est.lower = occurrence_sum;
    est.upper = occurrence_sum + est.error_bound;
    est.point = occurrence_sum + est.error_bound / 2;
    return est;
}

namespace {

/// One lifting step: find v_{n+1} >= 0 with M(sigma_n) v_{n+1} = v_n,
/// pruned by the level-(n+1) cone approximation when the matrix does not
/// determine it alone.
struct LiftStep {
    RatVec solution;
    std::optional<AmbiguityReport> ambiguity;
};

LiftStep lift_one_level(const DirectiveSequence& seq, const RatVec& v_n, int n, double eps,
                        const LiftOptions& options) {
    const Morphism& sigma = seq.morphism(n);
    const IntMatrix& m = sigma.incidence_matrix();
    const Rat eps_rat(eps);

    auto check_nonneg = [&](RatVec& x) {
        for (auto& entry : x) {
            if (entry < 0) {
                if (entry < -eps_rat)
                    throw InfeasibleError(n + 1, "lift at level " + std::to_string(n + 1) +
                                                     " has a negative entry (" +
                                                     decimal_string(entry) + ")");
                entry = 0;
            }
        }
    };

    if (m.is_square() && m.determinant() != 0) {
        auto x = detail::solve_square(detail::QMat::from_int(m), v_n);
        if (!x) throw InvalidStateError("invertible matrix failed to solve");
        check_nonneg(*x);
        return {std::move(*x), std::nullopt};
    }

    // Singular or non-square: prune with the cone approximation one level up.
    const int sweep_end = seq.clamp_depth(n + 1 + options.cone_lookahead);
    ConeDimEstimate cone = estimate_cone_dim(seq, n + 1, sweep_end, eps, options.window);
    std::vector<RatVec> rays = cone.extreme_rays();

    std::vector<int> basis_idx = detail::independent_subset(rays);
    std::vector<RatVec> basis;
    for (int i : basis_idx) basis.push_back(rays[static_cast<size_t>(i)]);

    detail::QMat mq = detail::QMat::from_int(m);
    std::vector<RatVec> kernel = detail::kernel_basis(mq);

    int a_dim = 0;
    if (!kernel.empty()) {
        std::vector<RatVec> joint = kernel;
        joint.insert(joint.end(), basis.begin(), basis.end());
        const int joint_rank = detail::rank(detail::QMat::from_columns(joint));
        a_dim = static_cast<int>(kernel.size() + basis.size()) - joint_rank;
    }
    if (a_dim > 0) {
        AmbiguityReport amb;
        amb.level = n + 1;
        amb.dimension = a_dim;
        amb.detail = "the solution set inside the level-" + std::to_string(n + 1) +
                     " cone approximation has affine dimension " + std::to_string(a_dim);
        return {{}, amb};
    }

    // Unique inside the cone span: solve the normal equations exactly on
    // the span basis.
    std::vector<RatVec> image_cols;
    image_cols.reserve(basis.size());
    for (const auto& b : basis) image_cols.push_back(mq.apply(b));
    detail::QMat a = detail::QMat::from_columns(image_cols);
    detail::QMat gram = a.transpose_times(a);
    RatVec rhs = a.transpose_apply(v_n);
    auto z = detail::solve_square(gram, rhs);
    if (!z)
        throw InfeasibleError(n + 1, "cone span at level " + std::to_string(n + 1) +
                                         " is degenerate");

    RatVec x(static_cast<size_t>(m.cols()), Rat(0));
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t i = 0; i < x.size(); ++i) x[i] += (*z)[k] * basis[k][i];

    // Exact residual of the pruned solve: reject if v_n is not reachable
    // within eps.
    RatVec residual = vec_sub(mq.apply(x), v_n);
    for (const auto& r : residual)
        if (abs(r) > eps_rat)
            throw InfeasibleError(n + 1, "no solution within eps at level " +
                                             std::to_string(n + 1) + " (residual " +
                                             decimal_string(r) + ")");
    check_nonneg(x);

    // The span solve ignored the nonnegative-combination constraint; check
    // membership in the cone itself.
    std::vector<std::vector<double>> ray_cols;
    for (const auto& r : rays) ray_cols.push_back(to_double_vec(r));
    auto fit = detail::nnls(detail::DMat::from_columns(ray_cols), to_double_vec(x));
    if (fit.residual > eps + 1e-12)
        throw InfeasibleError(n + 1, "solution at level " + std::to_string(n + 1) +
                                         " lies outside the cone approximation (distance " +
                                         decimal_string(fit.residual) + ")");
    return {std::move(x), std::nullopt};
}

} // namespace

LiftResult unique_tower_from_letters(const DirectiveSequence& seq, const RatVec& v0, int depth,
                                     double eps, const LiftOptions& options) {
    if (depth < 1) throw std::invalid_argument("tower depth must be >= 1");
    if (depth > seq.available_depth())
        throw std::invalid_argument("tower depth exceeds the available sequence depth");
    if (static_cast<int>(v0.size()) != seq.alphabet(0).size())
        throw std::invalid_argument("v0 size differs from the level-0 alphabet");
    for (const auto& x : v0)
        if (x < 0) throw std::invalid_argument("v0 must be entrywise nonnegative");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");

    LiftResult result;
    RatVec current = v0;
    for (auto& x : current) x.canonicalize();
    std::vector<RatVec> upward;
    upward.push_back(current);
    for (int n = 0; n < depth; ++n) {
        LiftStep step = lift_one_level(seq, current, n, eps, options);
        if (step.ambiguity) {
            result.ambiguity = std::move(step.ambiguity);
            return result;
        }
        current = std::move(step.solution);
        upward.push_back(current);
    }

    // Rebuild downward from the top so the tower is exactly compatible even
    // when clamping or pruning adjusted an intermediate level.
    MeasureTower tower = MeasureTower::from_top_vector(seq, depth, upward.back());
    result.v0_adjustment = l1_norm(vec_sub(tower.level_vector(0), v0));
    result.tower = std::move(tower);
    return result;
}

MeasureTower pushforward(const Morphism& sigma, const MeasureTower& t) {
    if (!sigma.non_erasing())
        throw std::invalid_argument(
            "pushforward requires a non-erasing morphism (every letter image nonempty)");
    if (sigma.domain() != t.sequence().alphabet(0))
        throw std::invalid_argument(
            "pushforward morphism domain differs from the tower's level-0 alphabet");
    DirectiveSequence prolongated = t.sequence().prepend(sigma);
    std::vector<RatVec> vectors;
    vectors.reserve(static_cast<size_t>(t.depth()) + 2);
    vectors.push_back(sigma.incidence_matrix().apply(t.level_vector(0)));
    for (int n = 0; n <= t.depth(); ++n) vectors.push_back(t.level_vector(n));
    return MeasureTower(std::move(prolongated), std::move(vectors));
}

} // namespace sadic
