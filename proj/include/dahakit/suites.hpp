#pragma once

// Suite dispatch by name and backend, and the per-type summary table.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dahakit/degenerate.hpp"
#include "dahakit/intertwine.hpp"
#include "dahakit/lusztig.hpp"
#include "dahakit/polyrep.hpp"
#include "dahakit/rootsofunity.hpp"
#include "dahakit/universal.hpp"

namespace dahakit {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"polyrep", "intertwine", "degenerate",
                                                "lusztig", "roots-of-unity", "universal"};
    return names;
}

inline std::vector<std::string> compatible_backends(const std::string& suite) {
    if (suite == "polyrep" || suite == "universal") return {"qt"};
    if (suite == "intertwine") return {"qt", "k"};
    if (suite == "degenerate" || suite == "lusztig") return {"k"};
    if (suite == "roots-of-unity") return {"cyclo", "fp"};
    throw IncompatibleParameters("unknown suite: " + suite);
}

struct SuiteRequest {
    std::string type;
    std::string suite;
    std::string backend;  // empty: first compatible backend
    std::optional<int> degree;
    std::optional<int> trunc;
    std::optional<long> modulus;
    std::vector<SubspaceSeed> seeds;
};

// "1,0;0,1" or "1,1/0,0" (seed weights, then the weights spanning the quotiented part)
inline SubspaceSeed parse_seed_weights(const std::string& text, std::size_t rank) {
    auto parse_list = [rank](const std::string& s) {
        std::vector<Weight> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            Weight w;
            std::stringstream is(item);
            std::string x;
            std::size_t i = 0;
            while (std::getline(is, x, ',')) {
                if (i >= rank) throw IncompatibleParameters("seed weight has too many coordinates: " + item);
                try {
                    w[i++] = std::stoi(x);
                } catch (const std::exception&) {
                    throw IncompatibleParameters("bad seed weight: " + item);
                }
            }
            if (i != rank) throw IncompatibleParameters("seed weight needs " + std::to_string(rank) + " coordinates: " + item);
            out.push_back(w);
        }
        return out;
    };
    SubspaceSeed seed;
    auto slash = text.find('/');
    seed.seed = parse_list(text.substr(0, slash));
    if (slash != std::string::npos) seed.lower = parse_list(text.substr(slash + 1));
    if (seed.seed.empty()) throw IncompatibleParameters("empty seed weight list");
    return seed;
}

inline void append_checks(Report& into, const Report& from, const std::string& prefix) {
    for (auto c : from.checks) {
        c.name = prefix + c.name;
        into.add(std::move(c));
    }
}

inline Report run_suite(const SuiteRequest& req) {
    auto backends = compatible_backends(req.suite);
    std::string backend = req.backend.empty() ? backends.front() : req.backend;
    if (!is_backend_label(backend)) throw BackendMismatch("unknown backend " + backend);
    if (std::find(backends.begin(), backends.end(), backend) == backends.end())
        throw BackendMismatch("suite " + req.suite + " does not run on backend " + backend);
    DatumPtr d = build_root_datum(req.type);
    Report rep;
    if (req.suite == "polyrep") {
        rep = relation_suite(d, req.degree.value_or(3));
    } else if (req.suite == "universal") {
        rep = universal_suite(d, req.degree.value_or(2));
    } else if (req.suite == "intertwine") {
        IntertwineOptions o;
        if (req.degree) o.degree = *req.degree;
        o.seeds = req.seeds;
        rep = backend == "qt" ? intertwine_suite_qt(d, o) : intertwine_suite_degenerate(d, o);
    } else if (req.suite == "degenerate") {
        int degree = req.degree.value_or(6);
        rep = dunkl_suite(d, degree);
        append_checks(rep, gaussian_tau_suite(d, degree), "gaussian.");
    } else if (req.suite == "lusztig") {
        LusztigOptions o;
        if (req.degree) o.degree = *req.degree;
        if (req.trunc) o.trunc = *req.trunc;
        o.seeds = req.seeds;
        rep = lusztig_suite(d, o);
    } else {
        RootsOfUnityOptions o;
        o.modulus = req.modulus;
        rep = backend == "fp" ? modular_suite(d, o) : roots_of_unity_suite(d, o);
    }
    rep.suite = req.suite;
    rep.backend = backend;
    return rep;
}

// ---- summary ----

struct SummaryRow {
    std::string type, suite, backend, overall;
    std::string dimension, free_orbits, sign_multiplicity;
    std::size_t failed = 0;
};

inline std::vector<SummaryRow> summarize(const std::vector<Json>& reports) {
    auto field = [](const Json& data, const char* key) -> std::string {
        if (!data.contains(key)) return "";
        const Json& v = data[key];
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    std::vector<SummaryRow> rows;
    for (const auto& r : reports) {
        SummaryRow row;
        row.type = r.value("type", "");
        row.suite = r.value("suite", "");
        row.backend = r.value("backend", "");
        row.overall = r.value("overall", "");
        const Json data = r.value("data", Json::object());
        row.dimension = field(data, "dimension");
        if (data.contains("orbits") && data["orbits"].contains("free")) row.free_orbits = data["orbits"]["free"].dump();
        row.sign_multiplicity = field(data, "sign_multiplicity");
        for (const auto& c : r.value("checks", Json::array()))
            if (c.value("status", "") == "fail") ++row.failed;
        rows.push_back(row);
    }
    return rows;
}

inline std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string s = "type,suite,backend,overall,dimension,free_orbits,sign_multiplicity,failed_checks\n";
    for (const auto& r : rows)
        s += r.type + "," + r.suite + "," + r.backend + "," + r.overall + "," + r.dimension + "," + r.free_orbits + "," +
             r.sign_multiplicity + "," + std::to_string(r.failed) + "\n";
    return s;
}

inline std::string summary_text(const std::vector<SummaryRow>& rows) {
    std::vector<std::vector<std::string>> cells{
        {"type", "suite", "backend", "overall", "dimension", "free orbits", "sign mult", "failed"}};
    for (const auto& r : rows)
        cells.push_back({r.type, r.suite, r.backend, r.overall == "fail" ? "FAIL" : r.overall, r.dimension,
                         r.free_orbits, r.sign_multiplicity, std::to_string(r.failed)});
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    std::string s;
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            s += row[k];
            if (k + 1 < row.size()) s += std::string(width[k] - row[k].size() + 2, ' ');
        }
        s += "\n";
    }
    return s;
}

}  // namespace dahakit
