#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidcheck/bethe.hpp"
#include "braidcheck/kz.hpp"
#include "braidcheck/report.hpp"

namespace braidcheck {

/*
 * Suite orchestration shared by the CLI and the python module. All
 * entry points are deterministic for a fixed configuration and seed;
 * worker-count only affects wall time, never report bytes.
 */

// "flip:2", "dj_hecke:3", "uq_sl11", "superflip:1,1", or "file:PATH".
// File-loaded matrices are braid-checked and classified (with q0 when the
// entries are numeric); catalog names resolve as usual.
Braiding resolve_braiding(const std::string& spec, const std::optional<Rational>& q0 = std::nullopt);

// "id:N", "diag:a,b,...", or "file:PATH" (arity-1 matrix file).
TensorOp resolve_gmatrix(const std::string& spec, int N);

RKind parse_kind(const std::string& s);

struct SuiteOptions {
    std::uint64_t seed = 42;
    int points = 10;
    std::optional<Rational> q;
    Rational kappa = rat(1);
    Rational shift_p = rat(1);
    int n = 3;
    int k = 1;
    int p = 1;
    int K = 2;
    int bound_a = 2;
    int bound_b = 2;
    std::optional<int> level_bound;
    bool t0_identity = false;
    bool keep_certificates = true;
    bool replay = false; // re-verify embedded certificates before emission
    std::string g_spec = "id";
};

CheckReport run_braiding_suite(const Braiding& B);
CheckReport run_compat_suite(const Braiding& R, const Braiding& F);
CheckReport run_baxter_suite(const Braiding& B, RKind kind, const SuiteOptions& opt);
CheckReport run_rstructs_suite(const Braiding& R, const Braiding& F, const SuiteOptions& opt);
CheckReport run_kz_suite(RKind kind, const Braiding& F, const SuiteOptions& opt,
                         const std::optional<Braiding>& R_for_r = std::nullopt);
CheckReport run_qkz_suite(const Braiding& R, const Braiding& F, RKind kind, const SuiteOptions& opt);
CheckReport run_bethe_suite(const Braiding& R, const Braiding& F, RKind kind, const SuiteOptions& opt);
CheckReport run_newton_suite(const Braiding& R, const Braiding& F, RKind kind, const SuiteOptions& opt);

// Composite deterministic suite over the whole catalog (used by
// `check all` and the byte-identical-report acceptance criterion).
CheckReport run_full_suite(const SuiteOptions& opt);

/*
 * Config-file entry point. The config is a JSON object with a "command"
 * (braiding|compat|baxter|rstructs|kz|qkz|bethe|newton|all) plus the
 * same knobs the CLI exposes; every rational is a string in the scalar
 * grammar and unknown keys are rejected.
 */
CheckReport run_from_config(const json& config);

// Worker cap for suite-level parallelism; reads BRAIDCHECK_WORKERS
// (default 1). Results are assembled in submission order.
int worker_count();
std::vector<CheckResult> run_parallel(std::vector<std::function<CheckResult()>> jobs);

std::string emit_report(const CheckReport& report, const std::string& format);

} // namespace braidcheck
