// The multiset Hammersley process with k lifelines (HAD_k).
//
// Particles arrive one at a time with k lives each. An arrival takes one
// life from the largest live particle below it; a particle with no lives
// left is dead. Arrivals below every live particle are minima events, and
// their number after n arrivals is MinHAD_k(n). Live particles, counted with
// their remaining lives, are exactly the free slots of the greedy heap
// forest built from the same values.

#ifndef HEAPABLE_HAMMERSLEY_HPP
#define HEAPABLE_HAMMERSLEY_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "heap_forest.hpp"
#include "random.hpp"

namespace heapable {

/// value -> multiplicity
template <class T>
using Multiset = std::map<T, std::size_t>;

template <class T = double>
class ParticleState {
public:
    explicit ParticleState(std::size_t k) : k_(k) {
        if (k < 1)
            throw std::invalid_argument("number of lifelines must be at least 1");
    }

    /// Starts from an existing population, e.g. the survivors of an earlier
    /// run. Multiplicities must lie in 1..k.
    ParticleState(std::size_t k, const Multiset<T>& initial) : ParticleState(k) {
        for (const auto& [value, lives] : initial) {
            if (lives < 1 || lives > k)
                throw std::invalid_argument("particle lives out of range");
            particles_.emplace(value, lives);
            if (lives == 1)
                ++ones_;
            total_lives_ += lives;
        }
    }

    std::size_t arity() const noexcept { return k_; }
    std::size_t time() const noexcept { return time_; }
    std::size_t min_events() const noexcept { return min_events_; }
    /// Live particles (L_t).
    std::size_t live() const noexcept { return particles_.size(); }
    /// Live particles with a single life left (C_t).
    std::size_t single_life() const noexcept { return ones_; }
    /// Sum of remaining lives; equals the forest's slot count.
    std::size_t total_lives() const noexcept { return total_lives_; }
    const Multiset<T>& particles() const noexcept { return particles_; }
    bool contains(const T& x) const { return particles_.count(x) != 0; }

    /// Inserts x. Returns nullopt (state unchanged) if a live particle already
    /// has value x, else whether x was a minimum.
    std::optional<bool> try_step(const T& x) {
        auto [it, inserted] = particles_.try_emplace(x, k_);
        if (!inserted)
            return std::nullopt;
        ++time_;
        total_lives_ += k_;
        if (k_ == 1)
            ++ones_;
        if (it == particles_.begin()) {
            ++min_events_;
            return true;
        }
        auto below = std::prev(it);
        --total_lives_;
        if (--below->second == 0) {
            --ones_;
            particles_.erase(below);
        } else if (below->second == 1) {
            ++ones_;
        }
        return false;
    }

    /// Inserts x, returning whether it was a minimum. Throws on a duplicate.
    bool step(const T& x) {
        auto r = try_step(x);
        if (!r)
            throw std::invalid_argument("particle value already present");
        return *r;
    }

private:
    std::size_t k_;
    std::size_t time_ = 0;
    std::size_t min_events_ = 0;
    std::size_t ones_ = 0;
    std::size_t total_lives_ = 0;
    Multiset<T> particles_;  // live only
};

template <class T>
std::pair<ParticleState<T>, bool> step_particles(ParticleState<T> state, const T& x) {
    const bool was_minimum = state.step(x);
    return {std::move(state), was_minimum};
}

/// Rank-only form of the process. letters[0] is the sentinel -1; every other
/// letter is the remaining lives (0 = dead) of one particle, in value order.
class WordState {
public:
    static constexpr int kSentinel = -1;

    explicit WordState(std::size_t k = 2) : k_(k), letters_{kSentinel} {
        if (k < 1 || k > 100)
            throw std::invalid_argument("word arity out of range");
    }

    std::size_t arity() const noexcept { return k_; }
    std::size_t time() const noexcept { return letters_.size() - 1; }
    std::size_t min_events() const noexcept { return min_events_; }
    std::size_t live() const noexcept { return live_; }
    std::size_t single_life() const noexcept { return ones_; }
    const std::vector<std::int8_t>& letters() const noexcept { return letters_; }

    /// New particle lands in the gap just after letter `position` (0 = below
    /// every particle). The nearest live letter at or left of the gap loses
    /// a life; reaching the sentinel instead is a minimum event. Rewrites:
    ///   -1 0^r -> -1 0^r k,   1 0^r -> 0^{r+1} k,   v 0^r -> (v-1) 0^r k.
    bool step(std::size_t position) {
        if (position >= letters_.size())
            throw std::out_of_range("word position out of range");
        std::size_t j = position;
        while (j > 0 && letters_[j] == 0)
            --j;
        bool minimum = false;
        if (j == 0) {
            minimum = true;
            ++min_events_;
        } else {
            const int v = letters_[j]--;
            if (v == 1) {
                --live_;
                --ones_;
            } else if (v == 2) {
                ++ones_;
            }
        }
        letters_.insert(letters_.begin() + static_cast<std::ptrdiff_t>(position) + 1,
                        static_cast<std::int8_t>(k_));
        ++live_;
        if (k_ == 1)
            ++ones_;
        return minimum;
    }

    /// Conventional display: the sentinel is drawn as a leading 0, so the
    /// first states read "0", "02", then "022" or "012".
    std::string to_string() const {
        std::string out = "0";
        for (std::size_t i = 1; i < letters_.size(); ++i)
            out += std::to_string(letters_[i]);
        return out;
    }

private:
    std::size_t k_;
    std::vector<std::int8_t> letters_;
    std::size_t min_events_ = 0;
    std::size_t live_ = 0;
    std::size_t ones_ = 0;
};

inline WordState step_word(WordState state, std::size_t position) {
    state.step(position);
    return state;
}

// ---------------------------------------------------------------------------
// Trajectories

struct Checkpoint {
    std::size_t t;
    std::size_t min_events;
    std::size_t live;         // L_t
    std::size_t single_life;  // C_t
};

struct TrajectoryStats {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t min_events = 0;
    std::vector<Checkpoint> checkpoints;
};

/// Times ceil(1.2^j) up to n, deduplicated, always ending at n.
inline std::vector<std::size_t> geometric_checkpoints(std::size_t n, double ratio = 1.2) {
    std::vector<std::size_t> out;
    if (n == 0)
        return out;
    for (double x = 1.0;; x *= ratio) {
        const auto t = static_cast<std::size_t>(std::ceil(x - 1e-9));
        if (t >= n)
            break;
        if (out.empty() || out.back() != t)
            out.push_back(t);
    }
    out.push_back(n);
    return out;
}

/// n arrivals of i.i.d. uniform [0,1) values from stream (seed, trial).
/// Values colliding with a live particle are redrawn.
inline TrajectoryStats run_trajectory(std::size_t n, std::size_t k, std::uint64_t seed,
                                      std::span<const std::size_t> checkpoints,
                                      std::uint64_t trial = 0) {
    if (n < 1)
        throw std::invalid_argument("trajectory length must be at least 1");
    Engine eng = trial_engine(seed, trial);
    ParticleState<double> state(k);
    TrajectoryStats stats{n, k, 0, {}};
    std::set<std::size_t> wanted(checkpoints.begin(), checkpoints.end());
    for (std::size_t t = 1; t <= n; ++t) {
        while (!state.try_step(uniform01(eng))) {
        }
        if (wanted.count(t))
            stats.checkpoints.push_back(
                Checkpoint{t, state.min_events(), state.live(), state.single_life()});
    }
    stats.min_events = state.min_events();
    return stats;
}

inline TrajectoryStats run_trajectory(std::size_t n, std::size_t k, std::uint64_t seed,
                                      std::uint64_t trial = 0) {
    const auto cps = geometric_checkpoints(n);
    return run_trajectory(n, k, seed, std::span<const std::size_t>(cps), trial);
}

// ---------------------------------------------------------------------------
// Coupling with the greedy heap forest

struct CouplingReport {
    bool ok = true;
    std::size_t steps = 0;
    std::size_t minima = 0;
    std::size_t heaps = 0;
    std::optional<std::size_t> first_violation;
    std::string detail;
};

/// Runs the greedy forest and the particle process side by side on `values`
/// and checks, after every arrival, that minima coincide with new heaps and
/// that the slot multiset equals the live particles weighted by lives.
template <class T>
CouplingReport check_coupling(std::span<const T> values, std::size_t k) {
    HeapForest<T> forest(k);
    ParticleState<T> particles(k);
    CouplingReport report;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::size_t heaps_before = forest.heap_count();
        forest.insert_greedy(values[i]);
        const bool minimum = particles.step(values[i]);
        const bool new_heap = forest.heap_count() != heaps_before;
        ++report.steps;
        auto fail = [&](std::string why) {
            report.ok = false;
            report.first_violation = i;
            report.detail = std::move(why);
        };
        if (minimum != new_heap) {
            fail("minimum event and new heap disagree at step " + std::to_string(i));
        } else if (forest.open_slots() != particles.particles()) {
            fail("slot multiset differs from live particles at step " + std::to_string(i));
        } else if (forest.slot_count() != particles.total_lives()) {
            fail("slot count differs from total lives at step " + std::to_string(i));
        }
        if (!report.ok)
            break;
    }
    report.minima = particles.min_events();
    report.heaps = forest.heap_count();
    return report;
}

template <class T>
bool min_had_equals_greedy(std::span<const T> values, std::size_t k) {
    return check_coupling(values, k).ok;
}

template <class T>
bool min_had_equals_greedy(const std::vector<T>& values, std::size_t k) {
    return min_had_equals_greedy(std::span<const T>(values), k);
}

// ---------------------------------------------------------------------------
// Scaling constant

/// Unique root in (0,1) of X + X^2 + ... + X^k = 1, by bisection. The
/// conjectured growth of E[MHS_k] is ln(n) / phi_k(k); phi_k(2) = 1/golden.
inline double phi_k(std::size_t k, double tolerance = 1e-15) {
    if (k < 2)
        throw std::invalid_argument("phi_k requires k >= 2");
    if (!(tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");
    auto f = [k](double x) {
        double s = 0;
        for (std::size_t i = 0; i < k; ++i)
            s = (s + 1) * x;  // Horner for x + x^2 + ... + x^k
        return s - 1;
    };
    double lo = 0, hi = 1;
    while (hi - lo > tolerance) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2;
}

// ---------------------------------------------------------------------------
// Per-trajectory subadditivity relations

template <class T>
struct SubadditivityReport {
    std::size_t a_x = 0, a_y = 0, a_xy = 0;  // total lives of survivors
    std::size_t u_x = 0, u_y = 0, u_xy = 0;  // survivors with all k lives
    Multiset<T> s_x;          // survivors of x from an empty start
    Multiset<T> s_y;          // survivors of y from an empty start
    Multiset<T> s_y_given_x;  // y-particles alive after running y from s_x
    Multiset<T> s_xy;         // all survivors of the concatenation
    bool a_subadditive = true;
    bool u_subadditive = true;
    bool inclusion = true;              // s_y within s_y_given_x
    bool increment_implication = true;  // a(Y) grew by k-1 => a(XY) did too
    std::optional<std::size_t> first_failure;  // prefix length of y

    bool all() const { return a_subadditive && u_subadditive && inclusion && increment_implication; }
};

/// Checks a(XY) <= a(X)+a(Y), u(XY) <= u(X)+u(Y), s(Y) within s(Y; s(X)),
/// and the unit-increment implication for every prefix of y.
template <class T>
SubadditivityReport<T> check_subadditivity(std::span<const T> x, std::span<const T> y,
                                           std::size_t k = 2) {
    auto full_lives = [k](const Multiset<T>& m) {
        std::size_t c = 0;
        for (const auto& [v, lives] : m)
            c += lives == k;
        return c;
    };
    auto weight = [](const Multiset<T>& m) {
        std::size_t c = 0;
        for (const auto& [v, lives] : m)
            c += lives;
        return c;
    };

    ParticleState<T> run_x(k);
    for (const T& v : x)
        run_x.step(v);
    SubadditivityReport<T> rep;
    rep.s_x = run_x.particles();
    rep.a_x = weight(rep.s_x);
    rep.u_x = full_lives(rep.s_x);

    ParticleState<T> run_y(k);
    ParticleState<T> run_xy(k, rep.s_x);
    std::set<T> y_values;
    auto restrict_to_y = [&](const Multiset<T>& m) {
        Multiset<T> out;
        for (const auto& [v, lives] : m)
            if (y_values.count(v))
                out.emplace(v, lives);
        return out;
    };

    for (std::size_t m = 0; m <= y.size(); ++m) {
        const std::size_t prev_a_y = run_y.total_lives();
        const std::size_t prev_a_xy = run_xy.total_lives();
        if (m > 0) {
            y_values.insert(y[m - 1]);
            run_y.step(y[m - 1]);
            run_xy.step(y[m - 1]);
        }
        const auto& sy = run_y.particles();
        const auto& sxy = run_xy.particles();
        const std::size_t a_y = run_y.total_lives(), a_xy = run_xy.total_lives();
        const std::size_t u_y = full_lives(sy), u_xy = full_lives(sxy);

        bool ok_a = a_xy <= rep.a_x + a_y;
        bool ok_u = u_xy <= rep.u_x + u_y;
        bool ok_inc = true;
        for (const auto& [v, lives] : sy) {
            auto it = sxy.find(v);
            if (it == sxy.end() || it->second < lives) {
                ok_inc = false;
                break;
            }
        }
        bool ok_step = true;
        // an arrival adds k lives and takes one back unless it is a minimum
        if (m > 0 && a_y - prev_a_y == k - 1)
            ok_step = a_xy - prev_a_xy == k - 1;

        rep.a_subadditive = rep.a_subadditive && ok_a;
        rep.u_subadditive = rep.u_subadditive && ok_u;
        rep.inclusion = rep.inclusion && ok_inc;
        rep.increment_implication = rep.increment_implication && ok_step;
        if (!(ok_a && ok_u && ok_inc && ok_step) && !rep.first_failure)
            rep.first_failure = m;

        if (m == y.size()) {
            rep.a_y = a_y;
            rep.a_xy = a_xy;
            rep.u_y = u_y;
            rep.u_xy = u_xy;
            rep.s_y = sy;
            rep.s_xy = sxy;
            rep.s_y_given_x = restrict_to_y(sxy);
        }
    }
    return rep;
}

template <class T>
SubadditivityReport<T> check_subadditivity(const std::vector<T>& x, const std::vector<T>& y,
                                           std::size_t k = 2) {
    return check_subadditivity(std::span<const T>(x), std::span<const T>(y), k);
}

}  // namespace heapable

#endif  // HEAPABLE_HAMMERSLEY_HPP
