// Command-line driver: run one suite and write its JSON report, or
// summarize a set of reports.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dahakit/suites.hpp"

using namespace dahakit;

namespace {

int write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "dahakit: cannot write " << path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int run_suite_command(const SuiteRequest& base, const std::string& seed_text, const std::string& out_path,
                      const std::string& timing_path, bool quiet) {
    SuiteRequest req = base;
    Report rep;
    try {
        if (!seed_text.empty()) req.seeds.push_back(parse_seed_weights(seed_text, build_root_datum(req.type)->rank()));
        rep = run_suite(req);
    } catch (const std::invalid_argument& e) {
        std::cerr << "dahakit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dahakit: error: " << e.what() << "\n";
        return 3;
    }
    std::string json = rep.to_json().dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << json;
    } else if (int rc = write_text(out_path, json)) {
        return rc;
    }
    if (!timing_path.empty())
        if (int rc = write_text(timing_path, rep.timing_json().dump(2) + "\n")) return rc;
    if (!quiet) {
        for (const auto& c : rep.checks)
            if (c.status != Status::Pass)
                std::cerr << status_name(c.status) << "  " << c.name << (c.witness.empty() ? "" : "  " + c.witness)
                          << "\n";
        std::cerr << rep.suite << " " << rep.type << " [" << rep.backend << "]: " << rep.count(Status::Pass)
                  << " pass, " << rep.count(Status::Fail) << " fail, " << rep.count(Status::Skipped)
                  << " skipped\n";
    }
    return rep.passed() ? 0 : 1;
}

int run_summary_command(const std::vector<std::string>& files, const std::string& csv_path) {
    std::vector<Json> reports;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) {
            std::cerr << "dahakit: cannot read " << f << "\n";
            return 2;
        }
        try {
            reports.push_back(Json::parse(in));
        } catch (const std::exception& e) {
            std::cerr << "dahakit: " << f << ": " << e.what() << "\n";
            return 2;
        }
    }
    auto rows = summarize(reports);
    std::cout << summary_text(rows);
    if (!csv_path.empty())
        if (int rc = write_text(csv_path, summary_csv(rows))) return rc;
    for (const auto& r : rows)
        if (r.overall != "pass") return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for double affine Hecke algebras and their degenerations"};
    app.require_subcommand(1);

    SuiteRequest req;
    std::string seed_text, out_path, timing_path;
    bool quiet = false;
    auto* suite = app.add_subcommand("suite", "run one check suite and write its JSON report");
    suite->add_option("--type", req.type, "root system")->required()->check(CLI::IsMember(RootDatum::supported_types()));
    suite->add_option("--suite", req.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    suite->add_option("--degree", req.degree, "probe degree");
    suite->add_option("--trunc", req.trunc, "series truncation order (lusztig)");
    suite->add_option("--backend", req.backend, "coefficient backend")
        ->check(CLI::IsMember(std::vector<std::string>{"qt", "k", "cyclo", "fp"}));
    suite->add_option("--modulus", req.modulus, "override N (cyclo) or the prime p (fp)");
    suite->add_option("--seed-weights", seed_text, "subspace seed, e.g. \"1,1\" or \"1,1/0,0\"");
    suite->add_option("--out", out_path, "report path (default: stdout)");
    suite->add_option("--timing", timing_path, "write per-check timings to this path");
    suite->add_flag("--quiet", quiet, "no progress summary on stderr");

    std::vector<std::string> files;
    std::string csv_path;
    auto* summary = app.add_subcommand("summary", "tabulate report files");
    summary->add_option("reports", files, "report JSON files");
    summary->add_option("--csv", csv_path, "also write CSV to this path");

    CLI11_PARSE(app, argc, argv);
    if (*suite) return run_suite_command(req, seed_text, out_path, timing_path, quiet);
    return run_summary_command(files, csv_path);
}
