// heapable: command-line front end for the library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "check_suites.hpp"
#include "heapable/heapable.hpp"
#include "heapable/io.hpp"

namespace {

using namespace heapable;
using io::json;

struct Options {
    std::size_t k = 2;
    std::vector<std::size_t> n;
    std::size_t r = 0;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::string input;
    std::string output;
    std::string format;
    std::size_t cap = 0;
    std::size_t parallel = 1;
    std::string seq;
    std::string perm;
    std::string values;
    std::string method = "greedy";
    std::string name;
    int digits = 6;
    bool count = false;
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// Reads --input (a path, or "-" for stdin), falling back to stdin.
std::string read_input(const std::string& path) {
    if (path.empty() || path == "-")
        return read_all(std::cin);
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open input file '" + path + "'");
    return read_all(f);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
    if (!f)
        throw std::runtime_error("failed writing '" + path + "'");
}

std::string format_or(const Options& o, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a)
            return f;
    throw std::invalid_argument("format '" + f + "' not supported by this subcommand");
}

std::string num(double x, int precision = 10) {
    std::ostringstream out;
    out << std::setprecision(precision) << x;
    return out.str();
}

std::string csv_header(const std::string& command, const Options& o) {
    std::ostringstream out;
    out << "# heapable " << kVersion << "\n";
    out << "# command: " << command << "\n";
    out << "# seed: " << o.seed << "\n";
    out << "# k: " << o.k << "\n";
    out << "# trials: " << o.trials << "\n";
    return out.str();
}

std::size_t single_n(const Options& o) {
    if (o.n.size() != 1)
        throw std::invalid_argument("exactly one --n is required");
    if (o.n.front() < 1)
        throw std::invalid_argument("--n must be at least 1");
    return o.n.front();
}

void require_trials(const Options& o) {
    if (o.trials < 1)
        throw std::invalid_argument("--trials must be at least 1");
}

// ---------------------------------------------------------------------------

std::string cmd_mhs(const Options& o, bool seq_given) {
    const std::string text = seq_given ? o.seq : read_input(o.input);
    const auto seq = io::parse_numbers<double>(text);
    const auto res = greedy_mhs(seq, o.k);
    if (format_or(o, "text", {"text", "json"}) == "json")
        return io::to_json(res).dump() + "\n";
    return std::to_string(res.count) + "\n";
}

std::string cmd_simulate(const Options& o) {
    const std::size_t n = single_n(o);
    require_trials(o);
    if (o.k < 1)
        throw std::invalid_argument("--k must be at least 1");
    format_or(o, "csv", {"csv"});
    const auto cps = geometric_checkpoints(n);
    std::vector<TrajectoryStats> runs(o.trials);
    std::size_t threads = o.parallel == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : o.parallel;
    threads = std::min(threads, o.trials);
    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < o.trials; i += threads)
            runs[i] = run_trajectory(n, o.k, o.seed, std::span<const std::size_t>(cps), i);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
    }

    std::ostringstream out;
    out << csv_header("simulate", o) << "# n: " << n << "\n";
    out << "trial,t,min_events,L_t,C_t,l_t,c_t\n";
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (const Checkpoint& c : runs[i].checkpoints) {
            const double t = static_cast<double>(c.t);
            out << i << ',' << c.t << ',' << c.min_events << ',' << c.live << ','
                << c.single_life << ',' << num(static_cast<double>(c.live) / t) << ','
                << num(static_cast<double>(c.single_life) / t) << '\n';
        }
    return out.str();
}

std::string cmd_estimate(const Options& o) {
    require_trials(o);
    if (o.n.empty())
        throw std::invalid_argument("--n is required");
    const EstimateMethod method = parse_method(o.method);
    format_or(o, "csv", {"csv"});
    std::ostringstream out;
    out << csv_header("estimate", o) << "# method: " << to_string(method) << "\n";
    out << "n,k,trials,mean,stderr,mean_over_ln_n\n";
    for (std::size_t n : o.n) {
        if (n < 1)
            throw std::invalid_argument("--n must be at least 1");
        const auto rep = estimate_E_MHS(n, o.k, o.trials, o.seed, method, o.parallel);
        out << rep.n << ',' << rep.k << ',' << rep.trials << ',' << num(rep.mean) << ','
            << num(rep.stderr_) << ',' << num(rep.ratio_to_log) << '\n';
    }
    return out.str();
}

std::string cmd_rs(const Options& o, bool perm_given) {
    const auto perm = io::parse_numbers<Value>(perm_given ? o.perm : read_input(o.input));
    const TableauPair pq = build_PQ(perm, o.k);
    const json j = io::to_json(pq);
    return (format_or(o, "json", {"json", "text"}) == "json" ? j.dump() : j.dump(2)) + "\n";
}

std::string cmd_rs_inv(const Options& o) {
    format_or(o, "text", {"text"});
    const TableauPair pq = io::pair_from_json(json::parse(read_input(o.input)));
    return io::join(invert_PQ(pq)) + "\n";
}

std::string cmd_tableau_insert(const Options& o, bool input_given) {
    HeapTableau t = input_given ? io::tableau_from_json(json::parse(read_input(o.input)))
                                : HeapTableau(o.k);
    if (auto bad = heap_tableau_violations(t); !bad.empty())
        throw TableauError("input is not a heap tableau: " + bad.front().message,
                           bad.front().cell);
    const std::string fmt = format_or(o, "json", {"json", "text"});
    std::ostringstream out;
    for (Value x : io::parse_numbers<Value>(o.values)) {
        const BumpTrace trace = insert_in_place(t, x);
        if (fmt == "text") {
            out << "insert " << x << ":";
            for (const BumpStep& b : trace.bumps)
                out << " " << b.inserted << " bumps " << b.displaced << " at "
                    << b.address.display() << ";";
            out << " placed at " << to_string(trace.final_cell)
                << (trace.created ? " (new vector)" : "") << "\n";
        }
    }
    out << io::to_json(t).dump() << "\n";
    return out.str();
}

std::string cmd_hooks(const Options& o) {
    const std::string fmt = format_or(o, "text", {"text", "json"});
    const Shape shape = io::shape_from_json(json::parse(read_input(o.input)));
    const HookTable table = hook_lengths(shape);
    const Rational bound = hook_bound(shape);
    const double approx = bound.convert_to<double>();
    std::optional<BigInt> count;
    if (o.count)
        count = count_fillings(shape, o.cap == 0 ? kFillingDefaultCap : o.cap).exact;

    if (fmt == "json") {
        json j{{"shape", io::to_json(shape)},
               {"hooks", io::to_json(table)},
               {"bound", io::fraction(bound)},
               {"bound_approx", approx}};
        if (count)
            j["count"] = count->str();
        return j.dump() + "\n";
    }
    std::ostringstream out;
    std::size_t width = 1;
    for (const auto& [a, len] : shape.lengths())
        width = std::max(width, a.depth());
    for (const auto& [a, len] : shape.lengths()) {
        // the root label is one column wide but two bytes
        const std::size_t shown = a.is_root() ? 1 : a.depth();
        out << a.display() << std::string(width - shown, ' ');
        for (std::size_t row = 1; row <= len; ++row)
            out << ' ' << std::setw(3) << table.at(Cell{a, row});
        out << '\n';
    }
    out << "cells " << shape.size() << "\n";
    out << "bound " << io::fraction(bound) << " (" << num(approx) << ")\n";
    if (count)
        out << "count " << count->str() << "\n";
    return out.str();
}

std::string cmd_family(const Options& o) {
    if (o.name == "simple") {
        format_or(o, "text", {"text"});
        return io::join(gen_family_simple(static_cast<std::int64_t>(o.k))) + "\n";
    }
    if (o.name == "X") {
        format_or(o, "text", {"text"});
        return io::join(gen_family_X(static_cast<std::int64_t>(o.k),
                                     static_cast<std::int64_t>(single_n(o)))) +
               "\n";
    }
    if (o.name == "T") {
        const std::string fmt = format_or(o, "json", {"json", "text"});
        const FamilyShape f = gen_T_rk(o.r, o.k);
        if (fmt == "text")
            return io::to_json(f.shape).dump() + "\nfillings " + f.closed_form.str() + "\n";
        return io::to_json(f.shape).dump() + "\n";
    }
    if (o.name == "W") {
        format_or(o, "json", {"json"});
        return io::to_json(gen_W_r(o.r)).dump() + "\n";
    }
    throw std::invalid_argument("unknown family '" + o.name + "' (simple, X, T, W)");
}

std::string cmd_phi(const Options& o) {
    format_or(o, "text", {"text"});
    if (o.digits < 0 || o.digits > 15)
        throw std::invalid_argument("--digits must be in 0..15");
    std::ostringstream out;
    out << std::fixed << std::setprecision(o.digits) << phi_k(o.k) << "\n";
    return out.str();
}

std::pair<std::string, bool> cmd_check(const Options& o) {
    format_or(o, "text", {"text"});
    std::ostringstream out;
    bool ok = true;
    for (const auto& s : tools::run_all_suites(o.seed, o.trials)) {
        if (s.informational) {
            out << "INFO " << s.name << " cases=" << s.cases << " violations=" << s.failures
                << "\n";
            continue;
        }
        ok = ok && s.failures == 0;
        out << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases
            << " failures=" << s.failures;
        if (s.failures)
            out << " first=" << s.first_failure;
        out << "\n";
    }
    return {out.str(), ok};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heapable sequences, particle processes and heap tableaux"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    Options o;

    auto add_k = [&](CLI::App* c) { c->add_option("--k", o.k, "heap arity (default 2)"); };
    auto add_io = [&](CLI::App* c, const char* formats) {
        c->add_option("--input", o.input, "input file, '-' for stdin");
        c->add_option("--output", o.output, "output file (default stdout)");
        c->add_option("--format", o.format, formats);
    };

    auto* mhs = app.add_subcommand("mhs", "minimum number of k-heapable subsequences");
    add_k(mhs);
    auto* seq_opt = mhs->add_option("--seq", o.seq, "inline sequence, e.g. \"2 4 3 1\"");
    add_io(mhs, "text|json");

    auto* sim = app.add_subcommand("simulate", "particle-process trajectories as CSV");
    add_k(sim);
    sim->add_option("--n", o.n, "trajectory length")->required()->expected(1);
    sim->add_option("--trials", o.trials, "number of trajectories");
    sim->add_option("--seed", o.seed, "64-bit seed");
    sim->add_option("--parallel", o.parallel, "worker threads (0 = all cores)");
    add_io(sim, "csv");

    auto* est = app.add_subcommand("estimate", "Monte Carlo mean of MHS_k as CSV");
    add_k(est);
    est->add_option("--n", o.n, "sequence length (repeatable)")->required();
    auto* est_trials = est->add_option("--trials", o.trials, "trials per n (default 100)");
    est->add_option("--seed", o.seed, "64-bit seed");
    est->add_option("--parallel", o.parallel, "worker threads (0 = all cores)");
    est->add_option("--method", o.method, "greedy|minhad");
    add_io(est, "csv");

    auto* rs = app.add_subcommand("rs", "permutation to (P, Q) heap tableaux");
    add_k(rs);
    auto* perm_opt = rs->add_option("--perm", o.perm, "permutation, e.g. \"4 2 6 3 5 1\"");
    add_io(rs, "json|text");

    auto* rs_inv = app.add_subcommand("rs-inv", "(P, Q) JSON back to the permutation");
    add_io(rs_inv, "text");

    auto* ins = app.add_subcommand("tableau-insert", "insert values into a heap tableau");
    add_k(ins);
    ins->add_option("--values", o.values, "values to insert")->required();
    add_io(ins, "json|text");

    auto* hooks = app.add_subcommand("hooks", "hook lengths and the filling bound of a shape");
    hooks->add_flag("--count", o.count, "also count fillings exactly");
    hooks->add_option("--cap", o.cap, "largest shape --count will enumerate");
    add_io(hooks, "text|json");

    auto* fam = app.add_subcommand("family", "generate a named sequence or shape family");
    fam->add_option("--name", o.name, "simple|X|T|W")->required();
    add_k(fam);
    fam->add_option("--n", o.n, "blocks for X")->expected(1);
    fam->add_option("--r", o.r, "depth for T, size for W");
    add_io(fam, "text|json");

    auto* phi = app.add_subcommand("phi", "root in (0,1) of X + ... + X^k = 1");
    add_k(phi);
    phi->add_option("--digits", o.digits, "decimal places (default 6)");
    add_io(phi, "text");

    auto* check = app.add_subcommand("check", "run the cross-module invariant suites");
    check->add_option("--seed", o.seed, "64-bit seed");
    auto* check_trials = check->add_option("--trials", o.trials, "random cases per suite (default 200)");
    add_io(check, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (est->parsed() && est_trials->count() == 0)
        o.trials = 100;
    if (check->parsed() && check_trials->count() == 0)
        o.trials = 200;

    try {
        std::string text;
        int status = 0;
        if (mhs->parsed())
            text = cmd_mhs(o, seq_opt->count() > 0);
        else if (sim->parsed())
            text = cmd_simulate(o);
        else if (est->parsed())
            text = cmd_estimate(o);
        else if (rs->parsed())
            text = cmd_rs(o, perm_opt->count() > 0);
        else if (rs_inv->parsed())
            text = cmd_rs_inv(o);
        else if (ins->parsed())
            text = cmd_tableau_insert(o, !o.input.empty());
        else if (hooks->parsed())
            text = cmd_hooks(o);
        else if (fam->parsed())
            text = cmd_family(o);
        else if (phi->parsed())
            text = cmd_phi(o);
        else if (check->parsed()) {
            auto [report, ok] = cmd_check(o);
            text = std::move(report);
            status = ok ? 0 : 1;
        }
        write_output(o.output, text);
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
