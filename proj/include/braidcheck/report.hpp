#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidcheck/scalar_io.hpp"
#include "braidcheck/tensor_op.hpp"

namespace braidcheck {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "inconclusive";
    }
}

// Outcome of one named check: status plus structured witnesses
// (entry indices, sample points, monomials, certificates).
struct CheckResult {
    std::string name;
    Status status = Status::Pass;
    json details = json::object();
    double wall_ms = 0.0;

    static CheckResult pass(std::string name, json details = json::object()) {
        return {std::move(name), Status::Pass, std::move(details), 0.0};
    }
    static CheckResult fail(std::string name, json details = json::object()) {
        return {std::move(name), Status::Fail, std::move(details), 0.0};
    }
    static CheckResult inconclusive(std::string name, json details = json::object()) {
        return {std::move(name), Status::Inconclusive, std::move(details), 0.0};
    }
};

// Witness for a nonzero matrix that should have been zero.
inline json entry_witness(const TensorOp& defect) {
    auto fnz = defect.first_nonzero();
    json w = json::object();
    if (fnz) {
        auto [r, c, v] = *fnz;
        w["row"] = r;
        w["col"] = c;
        w["value"] = v.is_laurent() ? write_scalar(v) : v.debug_string();
    }
    return w;
}

// Pass iff `defect` is the zero matrix; otherwise fail with an entry witness.
inline CheckResult zero_matrix_check(std::string name, const TensorOp& defect, json extra = json::object()) {
    if (defect.is_zero()) return CheckResult::pass(std::move(name), std::move(extra));
    extra["witness"] = entry_witness(defect);
    return CheckResult::fail(std::move(name), std::move(extra));
}

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;

    Status overall() const {
        Status s = Status::Pass;
        for (const auto& c : checks) {
            if (c.status == Status::Fail) return Status::Fail;
            if (c.status == Status::Inconclusive) s = Status::Inconclusive;
        }
        return s;
    }

    // 0 = all pass, 1 = some check failed, 2 = inconclusive results only.
    int exit_code() const {
        switch (overall()) {
            case Status::Pass: return 0;
            case Status::Fail: return 1;
            default: return 2;
        }
    }

    // Timing is deliberately excluded from JSON so reports are
    // byte-identical across runs with the same configuration and seed.
    json to_json() const {
        json j;
        j["schema"] = "braidcheck-report/1";
        j["suite"] = suite;
        j["status"] = status_str(overall());
        j["checks"] = json::array();
        for (const auto& c : checks) {
            json cj;
            cj["name"] = c.name;
            cj["status"] = status_str(c.status);
            if (!c.details.empty()) cj["details"] = c.details;
            j["checks"].push_back(cj);
        }
        return j;
    }

    std::string to_text() const {
        std::string out = "suite " + suite + ": " + status_str(overall()) + "\n";
        for (const auto& c : checks) {
            out += "  [" + std::string(status_str(c.status)) + "] " + c.name;
            if (c.wall_ms > 0) out += " (" + std::to_string(c.wall_ms) + " ms)";
            out += "\n";
            if (c.status != Status::Pass && !c.details.empty())
                out += "      " + c.details.dump() + "\n";
        }
        return out;
    }
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

} // namespace braidcheck
