// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dahakit/suites.hpp"

using namespace dahakit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
};

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (c.status == Status::Fail) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
    return "";
}

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }
bool contains(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

// number of passing checks whose name matches; any failing match is reported
std::size_t passing(const Report& r, const std::function<bool(const std::string&)>& match, Outcome& out,
                    const std::string& where) {
    std::size_t n = 0;
    for (const auto& c : r.checks) {
        if (!match(c.name)) continue;
        out.require(c.status != Status::Fail, where + ": " + c.name + " failed " + c.witness);
        if (c.status == Status::Pass) ++n;
    }
    return n;
}
std::size_t passing_prefix(const Report& r, const std::string& p, Outcome& out, const std::string& where) {
    return passing(r, [&](const std::string& s) { return starts_with(s, p); }, out, where);
}

void require_report(Outcome& out, const Report& r, const std::string& where) {
    out.require(r.passed(), where + ": " + first_failure(r));
}

const std::vector<std::string> kFive{"A1", "A2", "B2", "G2", "A3"};
const std::vector<std::string> kRankTwo{"A1", "A2", "B2", "G2"};

std::map<std::string, Report> torus_cache, polyrep_cache, lusztig_cache;

const Report& torus(const std::string& t) {
    auto it = torus_cache.find(t);
    if (it == torus_cache.end()) it = torus_cache.emplace(t, roots_of_unity_suite(build_root_datum(t))).first;
    return it->second;
}
const Report& polyrep(const std::string& t) {
    auto it = polyrep_cache.find(t);
    if (it == polyrep_cache.end()) {
        int degree = (t == "G2" || t == "A3") ? 2 : 3;
        it = polyrep_cache.emplace(t, relation_suite(build_root_datum(t), degree)).first;
    }
    return it->second;
}
const Report& lusztig(const std::string& t) {
    auto it = lusztig_cache.find(t);
    if (it == lusztig_cache.end()) {
        LusztigOptions o;
        o.trunc = 6;
        o.degree = 5;
        it = lusztig_cache.emplace(t, lusztig_suite(build_root_datum(t), o)).first;
    }
    return it->second;
}

Outcome check_dimensions() {
    Outcome out;
    const std::map<std::string, long> want{{"A1", 3}, {"A2", 16}, {"B2", 25}, {"G2", 49}, {"A3", 125}};
    std::string got;
    for (const auto& t : kFive) {
        const Report& r = torus(t);
        long dim = r.data.value("dimension", -1L);
        out.require(dim == want.at(t), t + ": dimension " + std::to_string(dim));
        passing_prefix(r, "dimension", out, t);
        got += t + "=" + std::to_string(dim) + " ";
    }
    if (out.ok) out.detail = got;
    return out;
}

Outcome check_weyl_relations() {
    Outcome out;
    for (const auto& t : kFive) {
        const Report& r = torus(t);
        for (const char* name : {"X_power_N", "Y_power_N", "XY_commutator", "X_Y_abelian"})
            out.require(passing_prefix(r, name, out, t) == 1, t + ": " + name + " did not pass");
    }
    return out;
}

Outcome check_irreducibility() {
    Outcome out;
    for (const auto& t : kRankTwo) {
        const Report& r = torus(t);
        out.require(passing_prefix(r, "commutant", out, t) >= 1, t + ": commutant not run");
        out.require(r.data.value("commutant_dimension", -1L) == 1, t + ": commutant dimension is not 1");
    }
    for (auto [t, p] : std::vector<std::pair<std::string, long>>{{"A1", 3}, {"B2", 5}, {"G2", 7}}) {
        RootsOfUnityOptions o;
        o.modulus = p;
        Report r = modular_suite(build_root_datum(t), o);
        std::string where = t + " p=" + std::to_string(p);
        require_report(out, r, where);
        out.require(passing_prefix(r, "commutant", out, where) == 1, where + ": commutant not run");
        out.require(r.data.value("commutant_dimension", -1L) == 1, where + ": commutant dimension is not 1");
    }
    return out;
}

Outcome check_orbit_census() {
    Outcome out;
    for (const auto& t : kFive) {
        const Report& r = torus(t);
        out.require(passing_prefix(r, "orbit_census", out, t) == 1, t + ": orbit census did not pass");
        out.require(passing_prefix(r, "displayed_identity", out, t) == 1, t + ": displayed identity did not pass");
        out.require(r.data["orbits"].value("free", -1L) == 1, t + ": free orbit count is not 1");
    }
    return out;
}

Outcome check_sign_multiplicity_line() {
    Outcome out;
    for (const auto& t : kFive) {
        const Report& r = torus(t);
        out.require(passing_prefix(r, "sign_multiplicity", out, t) == 1, t + ": sign multiplicity did not pass");
        out.require(r.data.value("sign_multiplicity", "") == "1", t + ": sign multiplicity is not 1");
    }
    // negative control, reported only
    try {
        RootsOfUnityOptions o;
        o.modulus = 2;
        Report c = roots_of_unity_suite(build_root_datum("A2"), o);
        if (out.ok) out.detail = "control A2 N=2: " + c.data.value("modulus_control", Json::object()).dump();
    } catch (const std::exception& e) {
        if (out.ok) out.detail = std::string("control A2 N=2 not run: ") + e.what();
    }
    return out;
}

Outcome check_polyrep_relations() {
    Outcome out;
    for (const auto& t : kFive) {
        const Report& r = polyrep(t);
        require_report(out, r, t);
        out.require(passing_prefix(r, "quadratic", out, t) > 0 && passing_prefix(r, "TY_cross", out, t) > 0,
                    t + ": relation checks missing");
    }
    return out;
}

Outcome check_discriminant() {
    Outcome out;
    for (const auto& t : kRankTwo) {
        const Report& r = polyrep(t);
        std::size_t n = build_root_datum(t)->rank();
        out.require(passing_prefix(r, "discriminant[", out, t) == n, t + ": discriminant checks missing");
    }
    return out;
}

Outcome check_dunkl() {
    Outcome out;
    for (const auto& t : kRankTwo) {
        DatumPtr d = build_root_datum(t);
        Report r = dunkl_suite(d, 6);
        require_report(out, r, t);
        if (d->rank() > 1) {
            out.require(passing_prefix(r, "rational_commute", out, t) > 0, t + ": rational commutativity missing");
            out.require(passing_prefix(r, "trig_commute", out, t) > 0, t + ": trigonometric commutativity missing");
        }
        out.require(passing_prefix(r, "cross[", out, t) > 0, t + ": cross relations missing");
        out.require(passing_prefix(r, "reflection_cross[", out, t) > 0, t + ": reflection relations missing");
    }
    return out;
}

Outcome check_gaussian() {
    Outcome out;
    for (const auto& t : kRankTwo) {
        Report r = gaussian_tau_suite(build_root_datum(t), 6);
        require_report(out, r, t);
        out.require(passing_prefix(r, "bracket_x2", out, t) > 0, t + ": [D_b, x^2/2] missing");
        out.require(passing_prefix(r, "double_bracket", out, t) > 0, t + ": double bracket missing");
        out.require(passing_prefix(r, "tau_braid", out, t) == 1, t + ": tau braid missing");
    }
    return out;
}

Outcome check_lusztig_routes() {
    Outcome out;
    for (const auto& t : kRankTwo) {
        const Report& r = lusztig(t);
        std::size_t n = build_root_datum(t)->rank();
        out.require(passing_prefix(r, "routes_agree", out, t) == n, t + ": route comparison missing");
        out.require(passing_prefix(r, "pole_is_rational_dunkl", out, t) == n, t + ": pole coefficient missing");
        passing_prefix(r, "substitution", out, t);
        passing_prefix(r, "bernoulli_plus", out, t);
    }
    return out;
}

Outcome check_lusztig_lift() {
    Outcome out;
    std::string sizes;
    for (const auto& t : {std::string("A1"), std::string("A2")}) {
        const Report& r = lusztig(t);
        require_report(out, r, t);
        std::size_t n = build_root_datum(t)->rank();
        auto quad = passing(
            r, [](const std::string& s) { return starts_with(s, "lift") && contains(s, ".quadratic["); }, out, t);
        out.require(quad >= n, t + ": lifted quadratic relations missing");
        Json subspaces = r.data.value("subspaces", Json::object());
        for (const auto& sp : subspaces) {
            std::string label = sp.value("seed", std::string());
            long dim = sp.value("dimension", 0L);
            out.require(dim <= 6, t + ": subspace " + label + " larger than 6");
            sizes += t + label + "=" + std::to_string(dim) + " ";
        }
    }
    if (out.ok) out.detail = sizes;
    return out;
}

Outcome check_intertwiners() {
    Outcome out;
    for (const auto& t : {std::string("A1"), std::string("A2"), std::string("B2")}) {
        DatumPtr d = build_root_datum(t);
        IntertwineOptions o;
        o.degree = 3;
        Report k = intertwine_suite_degenerate(d, o);
        require_report(out, k, t + " degenerate");
        out.require(passing_prefix(k, "intertwining[", out, t) == d->rank() + 1, t + ": degenerate intertwining missing");
        if (t != "B2") {
            auto unit = passing(
                k, [](const std::string& s) { return starts_with(s, "G'") && contains(s, ".unitarity["); }, out, t);
            out.require(unit >= d->rank(), t + ": G' unitarity missing");
        }
        if (t == "A2") {
            auto braid = passing(
                k, [](const std::string& s) { return starts_with(s, "G'") && contains(s, ".braid[1,2]"); }, out, t);
            out.require(braid >= 1, "A2: G' braid identity missing");
        }
        Report q = intertwine_suite_qt(d, o);
        require_report(out, q, t + " qt");
        out.require(passing_prefix(q, "intertwining[", out, t) == d->rank() + 1, t + ": q,t intertwining missing");
    }
    return out;
}

Outcome check_universal() {
    Outcome out;
    for (const auto& t : {std::string("A1"), std::string("A2")}) {
        Report r = universal_suite(build_root_datum(t), 2);
        require_report(out, r, t);
        if (t != "A1")
            for (const char* p : {"braid[", "projection.braid["})
                out.require(passing_prefix(r, p, out, t) > 0, t + ": no passing " + p + " checks");
        for (const char* p : {"quadratic[", "X_exchange[", "Y_exchange[", "X_reflect[", "Y_reflect[",
                              "X_commute[", "Y_commute[", "X_pi[", "Y_pi[", "pi_conjugation[", "seed[",
                              "swapped.", "string_support[", "epsilon_symmetry", "T_s_theta_inverse_at_1",
                              "projection.quadratic[0]", "projection.X_exchange[0]",
                              "projection.Y_exchange[0]", "projection.pi_group[", "projection.seed[0]"})
            out.require(passing_prefix(r, p, out, t) > 0, t + ": no passing " + p + " checks");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    // optional arguments select criteria by number
    std::set<std::size_t> only;
    for (int a = 1; a < argc; ++a) only.insert(std::stoul(argv[a]));
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dimension (1+h)^n of the torus module", check_dimensions},
        {"X^N = Y^N = 1 and the q-commutator", check_weyl_relations},
        {"commutant dimension 1 (torus and modular)", check_irreducibility},
        {"one free W-orbit, equal to W(rho), and the displayed identities", check_orbit_census},
        {"sign multiplicity 1", check_sign_multiplicity_line},
        {"polynomial representation relation suite", check_polyrep_relations},
        {"discriminant eigenrelation", check_discriminant},
        {"Dunkl commutativity and cross relations", check_dunkl},
        {"Gaussian and tau structure", check_gaussian},
        {"Dunkl series routes agree", check_lusztig_routes},
        {"lifted T_i satisfy the quadratic relation", check_lusztig_lift},
        {"intertwiners and G' matrices", check_intertwiners},
        {"universal hat-operator suite", check_universal},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (!only.empty() && !only.count(k + 1)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first << "  (" << timing << ")"
                  << (o.detail.empty() ? "" : "  " + o.detail) << std::endl;
    }
    return all ? 0 : 1;
}
