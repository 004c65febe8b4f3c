// Monte Carlo estimates of E[MHS_k] over random permutations, or of
// E[MinHAD_k(n)] over uniform trajectories. Trials may run on several
// threads; each trial owns a seed-derived stream and results are folded in
// trial order, so the report does not depend on the thread count.

#ifndef HEAPABLE_ESTIMATE_HPP
#define HEAPABLE_ESTIMATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "greedy.hpp"
#include "hammersley.hpp"
#include "random.hpp"

namespace heapable {

enum class EstimateMethod { greedy, minhad };

inline EstimateMethod parse_method(const std::string& name) {
    if (name == "greedy")
        return EstimateMethod::greedy;
    if (name == "minhad")
        return EstimateMethod::minhad;
    throw std::invalid_argument("unknown estimate method '" + name + "'");
}

inline const char* to_string(EstimateMethod m) {
    return m == EstimateMethod::greedy ? "greedy" : "minhad";
}

struct TrialSample {
    std::size_t mhs;      // MHS_k(pi) or MinHAD_k(n)
    std::size_t records;  // left-to-right minima of the drawn sequence
};

struct EstimateReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t trials = 0;
    double mean = 0;
    double stderr_ = 0;
    double ratio_to_log = 0;  // mean / ln(n); NaN for n = 1
    double records_mean = 0;
    double records_stderr = 0;
};

/// Number of strict prefix minima (records) of seq.
template <class T>
std::size_t left_to_right_minima(std::span<const T> seq) {
    std::size_t count = 0;
    T lowest{};
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i == 0 || seq[i] < lowest) {
            lowest = seq[i];
            ++count;
        }
    }
    return count;
}

namespace detail {

inline void mean_and_stderr(const std::vector<double>& xs, double& mean, double& err) {
    double sum = 0;
    for (double x : xs)
        sum += x;
    mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        err = 0;
        return;
    }
    double ss = 0;
    for (double x : xs)
        ss += (x - mean) * (x - mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    err = std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace detail

inline TrialSample run_trial(std::size_t n, std::size_t k, std::uint64_t seed,
                             std::uint64_t trial, EstimateMethod method) {
    Engine eng = trial_engine(seed, trial);
    if (method == EstimateMethod::greedy) {
        const auto perm = random_permutation(n, eng);
        return {greedy_count(std::span<const std::int64_t>(perm), k),
                left_to_right_minima(std::span<const std::int64_t>(perm))};
    }
    ParticleState<double> state(k);
    std::size_t records = 0;
    double lowest = 2.0;
    for (std::size_t t = 0; t < n; ++t) {
        double x;
        do {
            x = uniform01(eng);
        } while (!state.try_step(x));
        if (x < lowest) {
            lowest = x;
            ++records;
        }
    }
    return {state.min_events(), records};
}

/// Runs trials [0, trials) with `threads` workers (0 = hardware concurrency).
inline std::vector<TrialSample> run_trials(std::size_t n, std::size_t k, std::size_t trials,
                                           std::uint64_t seed, EstimateMethod method,
                                           std::size_t threads = 1) {
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (k < 1)
        throw std::invalid_argument("arity k must be at least 1");
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, trials);
    std::vector<TrialSample> out(trials);
    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < trials; i += threads)
            out[i] = run_trial(n, k, seed, i, method);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
    }
    return out;
}

inline EstimateReport summarize(std::size_t n, std::size_t k,
                                const std::vector<TrialSample>& samples) {
    EstimateReport rep;
    rep.n = n;
    rep.k = k;
    rep.trials = samples.size();
    std::vector<double> mhs, records;
    for (const auto& s : samples) {
        mhs.push_back(static_cast<double>(s.mhs));
        records.push_back(static_cast<double>(s.records));
    }
    detail::mean_and_stderr(mhs, rep.mean, rep.stderr_);
    detail::mean_and_stderr(records, rep.records_mean, rep.records_stderr);
    rep.ratio_to_log = n > 1 ? rep.mean / std::log(static_cast<double>(n))
                             : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

inline EstimateReport estimate_E_MHS(std::size_t n, std::size_t k, std::size_t trials,
                                     std::uint64_t seed,
                                     EstimateMethod method = EstimateMethod::greedy,
                                     std::size_t threads = 1) {
    return summarize(n, k, run_trials(n, k, trials, seed, method, threads));
}

/// n-th harmonic number, the expected number of left-to-right minima of a
/// random permutation of length n and a lower bound on E[MHS_k].
inline double harmonic(std::size_t n) {
    double h = 0;
    for (std::size_t i = n; i >= 1; --i)
        h += 1.0 / static_cast<double>(i);
    return h;
}

}  // namespace heapable

#endif  // HEAPABLE_ESTIMATE_HPP
