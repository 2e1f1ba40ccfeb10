#include "sadic/cones.hpp"

#include "sadic/detail/smalllinalg.hpp"
#include "sadic/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sadic {

namespace {

int thread_cap() {
    if (const char* env = std::getenv("SADIC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

/// Runs fn(i) for i in [0, n) across up to thread_cap() threads. Results
/// are written by index, so the outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    const int threads = std::min(n, thread_cap());
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < n; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

bool rat_vec_less(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

struct Clustering {
    std::vector<ConeCluster> clusters;
};

/// Single-linkage at L1 distance eps: connected components of the
/// eps-neighbor graph, in order of smallest member index.
Clustering cluster_generators(const std::vector<RatVec>& generators, double eps) {
    const int k = static_cast<int>(generators.size());
    std::vector<std::vector<double>> gd;
    gd.reserve(static_cast<size_t>(k));
    for (const auto& g : generators) gd.push_back(to_double_vec(g));

    std::vector<int> parent(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (l1_distance(gd[static_cast<size_t>(i)], gd[static_cast<size_t>(j)]) <= eps) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
            }

    std::vector<std::vector<int>> members_by_root(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) members_by_root[static_cast<size_t>(find(i))].push_back(i);

    Clustering out;
    for (int root = 0; root < k; ++root) {
        const auto& members = members_by_root[static_cast<size_t>(root)];
        if (members.empty()) continue;
        ConeCluster c;
        c.size = static_cast<int>(members.size());

        const size_t dim = generators[0].size();
        c.representative.resize(dim);
        for (size_t coord = 0; coord < dim; ++coord) {
            RatVec vals;
            vals.reserve(members.size());
            for (int m : members) vals.push_back(generators[static_cast<size_t>(m)][coord]);
            std::sort(vals.begin(), vals.end());
            c.representative[coord] = vals[(vals.size() - 1) / 2]; // lower median
        }
        Rat s = vec_sum(c.representative);
        if (s == 0) {
            c.representative = generators[static_cast<size_t>(members[0])];
        } else {
            for (auto& v : c.representative) v /= s;
        }

        c.canonical_member = generators[static_cast<size_t>(members[0])];
        for (int m : members)
            if (rat_vec_less(generators[static_cast<size_t>(m)], c.canonical_member))
                c.canonical_member = generators[static_cast<size_t>(m)];
        out.clusters.push_back(std::move(c));
    }
    return out;
}

int cluster_rank(const std::vector<ConeCluster>& clusters, double eps) {
    std::vector<std::vector<double>> cols;
    cols.reserve(clusters.size());
    for (const auto& c : clusters) cols.push_back(to_double_vec(c.representative));
    return detail::rank_with_tolerance(detail::DMat::from_columns(cols), eps);
}

/// A representative is extreme when it is not a nonnegative combination of
/// the other representatives (NNLS residual above threshold).
std::vector<int> extreme_indices(const std::vector<ConeCluster>& clusters) {
    constexpr double kResidualThreshold = 1e-9;
    const int k = static_cast<int>(clusters.size());
    std::vector<int> extreme;
    if (k == 1) { extreme.push_back(0); return extreme; }
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<double>> cols;
        cols.reserve(static_cast<size_t>(k - 1));
        for (int j = 0; j < k; ++j)
            if (j != i) cols.push_back(to_double_vec(clusters[static_cast<size_t>(j)].representative));
        auto r = detail::nnls(detail::DMat::from_columns(cols),
                              to_double_vec(clusters[static_cast<size_t>(i)].representative));
        if (r.residual > kResidualThreshold) extreme.push_back(i);
    }
    if (extreme.empty()) extreme.push_back(0); // degenerate: identical reps
    return extreme;
}

} // namespace

ConeApprox cone_generators(const DirectiveSequence& seq, int level, int depth) {
    if (level < 0 || level >= depth)
        throw std::invalid_argument("cone_generators needs 0 <= level < depth");
    if (depth > seq.available_depth())
        throw std::invalid_argument("cone depth exceeds the available sequence depth");
    ConeApprox approx;
    approx.level = level;
    approx.depth = depth;
    approx.raw_matrix = seq.telescoped_incidence(level, depth);

    const IntMatrix& m = approx.raw_matrix;
    approx.generators.reserve(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        Int colsum = m.column_sum(j);
        if (colsum == 0)
            throw InvalidStateError("telescoped incidence has a zero column at level " +
                                    std::to_string(level) + ", depth " + std::to_string(depth) +
                                    ": the non-erasing invariant is violated");
        RatVec g(static_cast<size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) {
            g[static_cast<size_t>(i)] = Rat(m.at(i, j)) / Rat(colsum);
        }
        approx.generators.push_back(std::move(g));
    }
    return approx;
}

std::vector<RatVec> ConeDimEstimate::extreme_rays() const {
    std::vector<RatVec> rays;
    rays.reserve(extreme.size());
    for (int i : extreme) rays.push_back(clusters[static_cast<size_t>(i)].representative);
    return rays;
}

ConeDimEstimate estimate_cone_dim(const DirectiveSequence& seq, int level, int depth, double eps,
                                  int window) {
    if (level < 0 || level >= depth)
        throw std::invalid_argument("estimate_cone_dim needs 0 <= level < depth");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    depth = std::min(depth, seq.available_depth());

    ConeDimEstimate est;
    est.level = level;
    est.sweep_begin = level + 1;
    est.sweep_end = depth;

    Clustering last;
    for (int m = level + 1; m <= depth; ++m) {
        ConeApprox approx = cone_generators(seq, level, m);
        last = cluster_generators(approx.generators, eps);
        est.history.push_back(cluster_rank(last.clusters, eps));
    }

    est.c_estimate = est.history.back();
    est.converged = static_cast<int>(est.history.size()) >= window;
    if (est.converged) {
        for (size_t i = est.history.size() - static_cast<size_t>(window); i < est.history.size(); ++i)
            if (est.history[i] != est.c_estimate) { est.converged = false; break; }
    }
    est.clusters = std::move(last.clusters);
    est.extreme = extreme_indices(est.clusters);
    return est;
}

std::string to_string(ThinVerdict v) {
    switch (v) {
        case ThinVerdict::Thin: return "thin";
        case ThinVerdict::NotThinWitness: return "not-thin-witness";
        case ThinVerdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

ConeReport check_thin(const DirectiveSequence& seq, int depth, double eps, int window) {
    if (depth < 2) throw std::invalid_argument("check_thin needs depth >= 2");
    ConeReport report;
    report.levels.resize(static_cast<size_t>(depth));
    parallel_for(depth, [&](int n) {
        const int sweep_end = seq.clamp_depth(n + depth);
        report.levels[static_cast<size_t>(n)] = estimate_cone_dim(seq, n, sweep_end, eps, window);
    });

    bool all_converged = true;
    bool any_converged = false;
    for (const auto& lvl : report.levels) {
        if (!lvl.converged) all_converged = false;
        else any_converged = true;
    }

    report.thin = ThinVerdict::Undetermined;
    // A witness needs two converged levels that disagree.
    int prev_level = -1;
    for (const auto& lvl : report.levels) {
        if (!lvl.converged) continue;
        if (prev_level >= 0 &&
            report.levels[static_cast<size_t>(prev_level)].c_estimate != lvl.c_estimate) {
            report.thin = ThinVerdict::NotThinWitness;
            report.witness_levels = {prev_level, lvl.level};
            break;
        }
        prev_level = lvl.level;
    }
    if (report.thin == ThinVerdict::Undetermined && all_converged && any_converged) {
        bool all_equal = true;
        for (const auto& lvl : report.levels)
            if (lvl.c_estimate != report.levels[0].c_estimate) { all_equal = false; break; }
        if (all_equal) report.thin = ThinVerdict::Thin;
    }

    report.stabilization_level = find_stabilization_level(report);
    report.e_bounds = {report.levels[0].c_estimate, seq.alphabet(0).size()};
    return report;
}

std::optional<int> find_stabilization_level(const ConeReport& report) {
    int tail_value = -1;
    for (auto it = report.levels.rbegin(); it != report.levels.rend(); ++it) {
        if (it->converged) { tail_value = it->c_estimate; break; }
    }
    if (tail_value < 0) return std::nullopt;

    int last_disagreeing = -1;
    for (const auto& lvl : report.levels)
        if (lvl.converged && lvl.c_estimate != tail_value) last_disagreeing = lvl.level;
    return last_disagreeing + 1;
}

} // namespace sadic
