/*
 * qdicke: command-line front end for Dicke-state circuit synthesis,
 * simulation, verification, counting, and export.
 *
 * Exit codes: 0 success (and verification pass), 1 internal failure or
 * verification fail, 2 invalid arguments.
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdicke/dicke_reference.hpp"
#include "qdicke/pruning.hpp"
#include "qdicke/simulator.hpp"
#include "qdicke/synthesis.hpp"

namespace {

using qdicke::CompositionVector;
using qdicke::SynthesisMode;

// Full-precision float rendering so downstream diffs are exact.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text << "\n";
}

CompositionVector make_k(const std::vector<int>& parts, int d, int n) {
    CompositionVector k(d, parts);
    if (n >= 0 && k.n() != n)
        throw std::invalid_argument("--k sums to " + std::to_string(k.n()) +
                                    ", which contradicts --n " +
                                    std::to_string(n));
    return k;
}

void print_report(std::ostream& os, const qdicke::VerifyReport& report) {
    os << "fidelity=" << fmt(report.fidelity) << "\n"
       << "max_amp_error=" << fmt(report.max_amp_error) << "\n"
       << "size=" << report.size << "\n"
       << "depth=" << report.depth << "\n";
    for (const auto& [kind, count] : report.counts)
        os << "count[" << kind << "]=" << count << "\n";
    os << "pass=" << (report.pass ? "true" : "false") << "\n";
}

int cmd_synth(int d, int n, const std::vector<int>& kparts,
              const std::string& mode, const std::string& out_path) {
    qdicke::Circuit c;
    if (mode == "pruned") {
        if (kparts.empty())
            throw std::invalid_argument("--mode pruned requires --k");
        c = qdicke::build_pruned_u(make_k(kparts, d, n));
    } else {
        if (!kparts.empty()) make_k(kparts, d, n);  // validate only
        c = qdicke::build_u(n, d);
    }
    // Summary goes to stdout unless stdout carries the circuit itself.
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "size=" << c.size() << "\n"
         << "depth=" << c.depth() << "\n";
    for (const auto& [kind, count] : qdicke::count_by_tag(c))
        info << "count[" << kind << "]=" << count << "\n";
    write_output(qdicke::to_json_string(c), out_path);
    return 0;
}

int cmd_verify(int d, int n, const std::vector<int>& kparts,
               const std::string& mode, double tol) {
    const auto report =
        qdicke::verify(d, n, make_k(kparts, d, n),
                       mode == "pruned" ? SynthesisMode::Pruned
                                        : SynthesisMode::Full,
                       tol);
    print_report(std::cout, report);
    return report.pass ? 0 : 1;
}

int cmd_simulate(const std::string& circuit_path,
                 const std::vector<int>& kparts, const std::string& out_path) {
    std::ifstream in(circuit_path);
    if (!in)
        throw std::invalid_argument("cannot open circuit file: " + circuit_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const qdicke::Circuit c = qdicke::circuit_from_json_string(buffer.str());
    const CompositionVector k = make_k(kparts, c.d, c.n);
    const qdicke::QuditState out =
        qdicke::run(c, qdicke::identity_permutation_state(k));
    write_output(nlohmann::json(out).dump(2), out_path);
    return 0;
}

int cmd_count(int d, int n) {
    for (int m = 2; m <= n; ++m)
        std::cout << "m=" << m
                  << " v_count=" << qdicke::predicted_w_count(m, d) << "\n";
    std::cout << "total_v_count=" << qdicke::predicted_v_count(n, d) << "\n";
    return 0;
}

int cmd_reference(int d, const std::vector<int>& kparts,
                  const std::string& out_path) {
    if (d > 0 && static_cast<std::size_t>(d) != kparts.size())
        throw std::invalid_argument("--d contradicts the length of --k");
    const CompositionVector k(static_cast<int>(kparts.size()), kparts);
    const qdicke::QuditState ref = qdicke::reference_dicke_state(k);
    write_output(nlohmann::json(ref).dump(2), out_path);
    return 0;
}

int cmd_sweep(int d, int max_n, const std::string& mode,
              const std::string& out_path) {
    if (mode == "pruned" && d != 2 && d != 3)
        throw std::invalid_argument("--mode pruned requires d in {2, 3}");
    std::ostringstream csv;
    csv << "d,n,k,mode,fidelity,max_amp_error,size,depth,pass\n";
    bool all_pass = true;
    for (int n = 1; n <= max_n; ++n) {
        for (const CompositionVector& k : qdicke::all_compositions(n, d)) {
            const auto report =
                qdicke::verify(d, n, k,
                               mode == "pruned" ? SynthesisMode::Pruned
                                                : SynthesisMode::Full);
            all_pass = all_pass && report.pass;
            std::string kfield;
            for (std::size_t idx = 0; idx < k.parts.size(); ++idx)
                kfield += (idx ? ";" : "") + std::to_string(k.parts[idx]);
            csv << d << "," << n << "," << kfield << "," << mode << ","
                << fmt(report.fidelity) << "," << fmt(report.max_amp_error)
                << "," << report.size << "," << report.depth << ","
                << (report.pass ? 1 : 0) << "\n";
        }
    }
    std::string text = csv.str();
    text.pop_back();  // write_output appends the final newline
    write_output(text, out_path);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Deterministic qudit Dicke-state preparation: circuit synthesis, "
        "dense statevector simulation, and verification"};
    app.require_subcommand(1);

    int d = 0;
    int n = -1;
    int max_n = 0;
    double tol = qdicke::kFidelityTol;
    std::vector<int> kparts;
    std::string mode = "full";
    std::string out_path;
    std::string circuit_path;

    const auto mode_check = CLI::IsMember({"full", "pruned"});

    CLI::App* synth = app.add_subcommand(
        "synth", "Synthesize a preparation circuit and write its JSON");
    synth->add_option("--d", d, "qudit dimension")->required();
    synth->add_option("--n", n, "wire count")->required();
    synth->add_option("--k", kparts, "composition k0,k1,...")->delimiter(',');
    synth->add_option("--mode", mode, "full (default) or pruned; pruned is "
                      "k-specialized and, for d=3, a conjecture validated "
                      "exhaustively by the test suite")
        ->check(mode_check);
    synth->add_option("--out", out_path, "circuit JSON file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Synthesize, simulate, and compare against the reference");
    verify->add_option("--d", d, "qudit dimension")->required();
    verify->add_option("--n", n, "wire count")->required();
    verify->add_option("--k", kparts, "composition k0,k1,...")
        ->required()
        ->delimiter(',');
    verify->add_option("--mode", mode, "full (default) or pruned")
        ->check(mode_check);
    verify->add_option("--tol", tol, "fidelity tolerance (default 1e-10)");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run a circuit JSON on a sorted input state");
    simulate->add_option("--circuit", circuit_path, "circuit JSON file")
        ->required();
    simulate->add_option("--input", kparts, "input composition k0,k1,...")
        ->required()
        ->delimiter(',');
    simulate->add_option("--out", out_path, "state JSON file (default stdout)");

    CLI::App* count = app.add_subcommand(
        "count", "Predicted V-operator counts (per recursion step and total)");
    count->add_option("--d", d, "qudit dimension")->required();
    count->add_option("--n", n, "wire count")->required();

    CLI::App* reference = app.add_subcommand(
        "reference", "Brute-force reference Dicke state JSON");
    reference->add_option("--d", d, "qudit dimension (optional cross-check)");
    reference->add_option("--k", kparts, "composition k0,k1,...")
        ->required()
        ->delimiter(',');
    reference->add_option("--out", out_path, "state JSON file (default stdout)");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Verify every composition for n = 1..max-n; CSV summary");
    sweep->add_option("--d", d, "qudit dimension")->required();
    sweep->add_option("--max-n", max_n, "largest wire count")->required();
    sweep->add_option("--mode", mode, "full (default) or pruned")
        ->check(mode_check);
    sweep->add_option("--out", out_path, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0; bad arguments exit 2
    }

    try {
        if (app.got_subcommand(synth)) return cmd_synth(d, n, kparts, mode, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(d, n, kparts, mode, tol);
        if (app.got_subcommand(simulate))
            return cmd_simulate(circuit_path, kparts, out_path);
        if (app.got_subcommand(count)) return cmd_count(d, n);
        if (app.got_subcommand(reference)) return cmd_reference(d, kparts, out_path);
        if (app.got_subcommand(sweep)) return cmd_sweep(d, max_n, mode, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
