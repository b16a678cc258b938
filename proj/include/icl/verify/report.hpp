#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace icl {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);
/* "PASS", "FAIL", "INCONCLUSIVE"; throws SchemaError otherwise. */
Verdict parse_verdict(std::string_view text);

/* An element and the membership facts that contradict the statement. */
struct Witness {
    std::string element;
    std::vector<std::string> facts;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
    std::string theorem;
    std::string instance;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness; // set exactly when verdict is FAIL
    std::map<std::string, long> caps;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> notes;
    double seconds = 0; // wall time, left out of JSON unless asked for

    nlohmann::ordered_json to_json(bool with_timing = false) const;
    /* Throws SchemaError with a JSON-pointer path. */
    static VerificationReport from_json(const nlohmann::json& j);

    /* Timing is not compared. */
    friend bool operator==(const VerificationReport& a, const VerificationReport& b);
};

/* 0 when every report passes, 1 on any FAIL, 2 when something is
 * INCONCLUSIVE and nothing failed. */
int exit_code(std::span<const VerificationReport> reports);

/* Runs the tasks on up to `threads` workers (0: hardware concurrency) and
 * returns the reports in task order. The first exception by task index is
 * rethrown after all tasks finish. */
std::vector<VerificationReport> run_campaign(const std::vector<std::function<VerificationReport()>>& tasks,
                                             unsigned threads = 0);

} // namespace icl
