// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "heapable/heapable.hpp"
#include "heapable/io.hpp"
#include "oracles.hpp"

using namespace heapable;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

template <class F>
void each_permutation(std::size_t n, F&& f) {
    std::vector<std::int64_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        f(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

std::string fmt(double x, int prec = 4) {
    std::ostringstream o;
    o.precision(prec);
    o << std::fixed << x;
    return o.str();
}

// 1
Outcome examples() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::int64_t> x{2, 4, 3, 1};
    bool ok = greedy_mhs(x, 1).count == 3 && greedy_mhs(x, 2).count == 2;
    for (std::int64_t k = 1; k <= 10; ++k) {
        std::vector<std::int64_t> down(static_cast<std::size_t>(k));
        std::iota(down.rbegin(), down.rend(), 1);
        ok = ok && greedy_mhs(down, static_cast<std::size_t>(k)).count == static_cast<std::size_t>(k);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {ok && secs < 1.0, "MHS_1=3, MHS_2=2, MHS_k([k..1])=k for k<=10"};
}

// 2
Outcome greedy_optimality() {
    std::size_t cases = 0, mismatches = 0;
    auto one = [&](const std::vector<std::int64_t>& p, std::size_t k) {
        ++cases;
        if (greedy_mhs(p, k).count != brute_force_mhs(p, k))
            ++mismatches;
    };
    for (std::size_t n = 0; n <= 7; ++n)
        each_permutation(n, [&](const auto& p) { one(p, 2); });
    for (std::size_t k : {1, 3})
        for (std::size_t n = 0; n <= 6; ++n)
            each_permutation(n, [&](const auto& p) { one(p, k); });
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::uint64_t i = 0; i < 1000; ++i) {
            Engine eng = trial_engine(0xA2, k * 100000 + i);
            one(random_permutation(8, eng), k);
        }
    return {mismatches == 0,
            std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

// 3
Outcome families() {
    std::size_t checks = 0, bad = 0;
    for (std::int64_t k = 2; k <= 6; ++k)
        for (std::int64_t j = 1; j <= k; ++j) {
            ++checks;
            bad += greedy_mhs(gen_family_simple(k), static_cast<std::size_t>(j)).count !=
                   static_cast<std::size_t>(k - j + 1);
        }
    for (std::int64_t k = 3; k <= 4; ++k)
        for (std::int64_t n = 1; n <= 4; ++n) {
            const auto x = gen_family_X(k, n);
            checks += 2;
            bad += greedy_mhs(x, static_cast<std::size_t>(k)).count != 1;
            bad += greedy_mhs(x, static_cast<std::size_t>(k - 1)).count !=
                   static_cast<std::size_t>(n + 1);
        }
    return {bad == 0, std::to_string(checks) + " equalities, " + std::to_string(bad) + " wrong"};
}

// 4
Outcome coupling() {
    std::size_t violations = 0, steps = 0;
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::uint64_t i = 0; i < 1000; ++i) {
            Engine eng = trial_engine(0xA4, k * 100000 + i);
            std::vector<double> xs;
            while (xs.size() < 200) {
                const double x = uniform01(eng);
                if (std::find(xs.begin(), xs.end(), x) == xs.end())
                    xs.push_back(x);
            }
            const auto rep = check_coupling(std::span<const double>(xs), k);
            steps += rep.steps;
            violations += !rep.ok;
        }
    return {violations == 0, "3000 trajectories, " + std::to_string(steps) + " steps, " +
                                 std::to_string(violations) + " violating"};
}

// 5
Outcome scaling() {
    const double golden = (1 + std::sqrt(5.0)) / 2;
    bool ok = true;
    std::string detail;
    double ratio_1e5 = 0;
    for (std::size_t n : {1000, 10000, 100000}) {
        const auto rep = estimate_E_MHS(n, 2, 500, 0xA5, EstimateMethod::greedy, 0);
        const double target = golden * std::log(static_cast<double>(n)) + 1;
        const double rel = std::abs(rep.mean - target) / target;
        ok = ok && rel <= 0.05;
        detail += "n=" + std::to_string(n) + " mean=" + fmt(rep.mean, 3) + " target=" +
                  fmt(target, 3) + " off=" + fmt(100 * rel, 1) + "%; ";
        if (n == 100000)
            ratio_1e5 = rep.ratio_to_log;
    }
    const bool ratio_ok = ratio_1e5 >= 1.50 && ratio_1e5 <= 1.75;
    detail += "ratio@1e5=" + fmt(ratio_1e5) + (ratio_ok ? " in" : " outside") + " [1.50,1.75]";
    return {ok && ratio_ok, detail};
}

// 6
Outcome densities() {
    double l = 0, c = 0;
    const std::vector<std::size_t> last{1000000};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto s = run_trajectory(1000000, 2, seed, std::span<const std::size_t>(last));
        l += static_cast<double>(s.checkpoints.back().live) / 1e6;
        c += static_cast<double>(s.checkpoints.back().single_life) / 1e6;
    }
    l /= 20;
    c /= 20;
    const bool l_ok = std::abs(l - 0.618) <= 0.01;
    const bool c_ok = std::abs(c - 0.382) <= 0.01;
    return {l_ok && c_ok, "l=" + fmt(l) + (l_ok ? " ok" : " off") + ", c=" + fmt(c) +
                              (c_ok ? " ok" : " off (target 0.382)") +
                              ", 2l-c=" + fmt(2 * l - c)};
}

// 7
Outcome harmonic_bound() {
    const std::size_t n = 10000;
    const auto rep = estimate_E_MHS(n, 2, 500, 0xA7, EstimateMethod::greedy, 0);
    const double h = harmonic(n);
    const bool lower = rep.mean >= h - 3 * rep.stderr_;
    const bool records = std::abs(rep.records_mean - h) <= 3 * rep.records_stderr;
    return {lower && records, "H_n=" + fmt(h) + " mean MHS_2=" + fmt(rep.mean) +
                                  " mean minima=" + fmt(rep.records_mean) + " (se " +
                                  fmt(rep.records_stderr) + ")"};
}

// 8
Outcome rs_bijection() {
    std::size_t cases = 0, bad = 0;
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t n = 1; n <= 6; ++n)
            each_permutation(n, [&](const std::vector<Value>& p) {
                ++cases;
                bool step_ok = true;
                const auto pq = rs_insert_sequence(
                    p, k, [&](std::size_t, const TableauPair& s, const BumpTrace&) {
                        step_ok = step_ok && s.p.shape() == s.q.shape();
                    });
                bool ok = step_ok && is_standard(pq.q) && is_heap_tableau(pq.p);
                try {
                    ok = ok && invert_PQ(pq) == p;
                } catch (const std::exception&) {
                    ok = false;
                }
                bad += !ok;
            });
    const std::string want =
        io::to_json(build_PQ(std::vector<Value>{4, 2, 6, 3, 5, 1}, 2)).dump();
    const bool pair_ok = want ==
                        R"({"P":{"k":2,"vectors":{"":[1,3,5],"0":[4,6],"1":[2]}},)"
                        R"("Q":{"k":2,"vectors":{"":[1,3,5],"0":[2,4],"1":[6]}}})";
    return {bad == 0 && pair_ok, std::to_string(cases) + " round trips, " + std::to_string(bad) +
                                    " bad; reference pair " + (pair_ok ? "exact" : "differs")};
}

// 9
Outcome hooks() {
    auto A = [](const char* s) { return Address::parse(s, 2); };
    const Shape sample(2, {{A(""), 3}, {A("0"), 3}, {A("1"), 2}, {A("10"), 1}});
    const HookTable want{
        {Cell{A(""), 1}, 6}, {Cell{A("0"), 1}, 3}, {Cell{A("1"), 1}, 3}, {Cell{A("10"), 1}, 1},
        {Cell{A(""), 2}, 4}, {Cell{A("0"), 2}, 2}, {Cell{A("1"), 2}, 1},
        {Cell{A(""), 3}, 2}, {Cell{A("0"), 3}, 1},
    };
    std::vector<std::string> failed;
    if (hook_lengths(sample) != want)
        failed.push_back("hook table");
    if (hook_bound(sample) != Rational(420))
        failed.push_back("sample bound");

    std::size_t below = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Engine eng = trial_engine(0xA9, i);
        const Shape s = random_shape(1 + uniform_below(eng, 12), 1 + uniform_below(eng, 4), eng);
        const auto fc = count_fillings(s);
        below += Rational(fc.exact) < fc.bound;
    }
    if (below)
        failed.push_back(std::to_string(below) + " random shapes below bound");

    std::size_t chains = 0, chain_bad = 0;
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& rows : oracle::partitions(n)) {
            ++chains;
            const auto fc = count_fillings(oracle::chain_shape(rows));
            chain_bad += Rational(fc.exact) != fc.bound;
        }
    if (chain_bad)
        failed.push_back("arity-1 equality");

    std::size_t trk = 0;
    for (std::size_t k = 1; k <= 10; ++k)
        for (std::size_t r = 2;; ++r) {
            const FamilyShape f = gen_T_rk(r, k);
            if (f.shape.size() > 12)
                break;
            ++trk;
            const auto fc = count_fillings(f.shape);
            if (Rational(fc.exact) != fc.bound || fc.exact != f.closed_form)
                failed.push_back("T_{" + std::to_string(r) + "," + std::to_string(k) + "}");
        }

    const auto w4 = count_fillings(gen_W_r(4));
    const bool w4_ok = w4.bound == Rational(189, 2) && Rational(w4.exact) > w4.bound &&
                       w4.exact == 112;
    if (!w4_ok)
        failed.push_back("W_4");

    std::string detail = "random=200 chains=" + std::to_string(chains) +
                         " T_rk=" + std::to_string(trk) + " W_4 count=" + w4.exact.str() +
                         " bound=" + io::fraction(w4.bound);
    for (const auto& f : failed)
        detail += "; failed " + f;
    return {failed.empty(), detail};
}

// 10
Outcome subadditivity() {
    std::size_t a = 0, u = 0, inc = 0, step = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        Engine eng = trial_engine(0xAA, i);
        std::vector<double> x, y;
        for (int t = 0; t < 50; ++t)
            x.push_back(uniform01(eng));
        for (int t = 0; t < 50; ++t)
            y.push_back(uniform01(eng));
        const auto rep = check_subadditivity(x, y, 2);
        a += !rep.a_subadditive;
        u += !rep.u_subadditive;
        inc += !rep.inclusion;
        step += !rep.increment_implication;
    }
    return {a + u + inc + step == 0,
            "10000 pairs; violations: a=" + std::to_string(a) + " u=" + std::to_string(u) +
                " inclusion=" + std::to_string(inc) + " increment=" + std::to_string(step)};
}

// 11
Outcome determinism() {
    const std::vector<std::string> commands{
        "simulate --n 20000 --trials 8 --seed 11",
        "estimate --n 1000 --n 5000 --trials 64 --seed 11",
        "estimate --n 2000 --trials 64 --seed 11 --method minhad",
        "estimate --k 3 --n 2000 --trials 64 --seed 11",
        "check --trials 40 --seed 11",
    };
    std::size_t bad = 0;
    for (const auto& cmd : commands) {
        const auto first = cli::run(cmd);
        const auto again = cli::run(cmd);
        const auto wide = cli::run(cmd + " --parallel 4");
        const auto all = cli::run(cmd + " --parallel 0");
        const bool check_cmd = cmd.rfind("check", 0) == 0;
        const bool same = first.status == 0 && !first.out.empty() && first.out == again.out &&
                          (check_cmd || (first.out == wide.out && first.out == all.out));
        bad += !same;
    }
    return {bad == 0, std::to_string(commands.size()) + " commands, " + std::to_string(bad) +
                          " differing"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "worked examples", examples},
        {2, "greedy optimality", greedy_optimality},
        {3, "hierarchy families", families},
        {4, "forest/particle coupling", coupling},
        {5, "MHS_2 scaling", scaling},
        {6, "density constants", densities},
        {7, "harmonic bound", harmonic_bound},
        {8, "RS bijection", rs_bijection},
        {9, "hook machinery", hooks},
        {10, "subadditivity", subadditivity},
        {11, "determinism", determinism},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
