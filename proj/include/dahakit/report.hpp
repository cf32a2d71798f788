#pragma once

// Structured pass/fail records of verification suites, serialized to JSON.
// Elapsed times are kept out of the main document so that identical runs
// produce byte-identical reports.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dahakit {

inline constexpr const char* kToolName = "dahakit";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    std::string name;
    Status status = Status::Pass;
    std::string witness;
    double elapsed_ms = 0;

    static CheckResult pass(std::string name) { return {std::move(name), Status::Pass, "", 0}; }
    static CheckResult fail(std::string name, std::string witness) {
        return {std::move(name), Status::Fail, std::move(witness), 0};
    }
    static CheckResult skipped(std::string name, std::string why) {
        return {std::move(name), Status::Skipped, std::move(why), 0};
    }
    static CheckResult from(std::string name, bool ok, std::string witness) {
        return ok ? pass(std::move(name)) : fail(std::move(name), std::move(witness));
    }
};

// runs a check, timing it and turning exceptions into failures
inline CheckResult timed(const std::string& name, const std::function<CheckResult()>& f) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r = CheckResult::fail(name, std::string("exception: ") + e.what());
    }
    if (r.name.empty()) r.name = name;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct Report {
    std::string suite;
    std::string type;
    std::string backend;
    Json params = Json::object();
    std::vector<CheckResult> checks;
    Json data = Json::object();

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add_all(const std::vector<CheckResult>& cs) {
        for (const auto& c : cs) checks.push_back(c);
    }

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == Status::Fail) return false;
        return true;
    }
    std::size_t count(Status s) const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    Json to_json() const {
        Json j;
        j["schema"] = 1;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["suite"] = suite;
        j["type"] = type;
        j["backend"] = backend;
        j["params"] = params;
        Json arr = Json::array();
        for (const auto& c : checks) {
            Json cj;
            cj["name"] = c.name;
            cj["status"] = status_name(c.status);
            if (!c.witness.empty()) cj["witness"] = c.witness;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        j["overall"] = passed() ? "pass" : "fail";
        j["data"] = data;
        return j;
    }

    Json timing_json() const {
        Json j;
        j["suite"] = suite;
        j["type"] = type;
        Json arr = Json::array();
        for (const auto& c : checks) arr.push_back({{"name", c.name}, {"elapsed_ms", c.elapsed_ms}});
        j["checks"] = arr;
        return j;
    }
};

}  // namespace dahakit
