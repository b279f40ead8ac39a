// Structured results: one VerificationReport per theorem check, one RunReport
// per CLI invocation. Machine output is JSON with insertion-ordered keys and
// no wall-clock fields, so identical parameters reproduce identical bytes;
// timings show up only in the human-readable rendering.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace algindex {

using ojson = nlohmann::ordered_json;

struct VerificationReport {
    std::string tag;         // stable anchor, e.g. "thm.index-convexity"
    bool pass = false;
    bool applicable = true;  // false: hypothesis not met, check skipped (not a failure)
    ojson details;

    ojson to_json() const {
        ojson j;
        j["tag"] = tag;
        j["pass"] = pass;
        if (!applicable) j["applicable"] = false;
        j["details"] = details.is_null() ? ojson::object() : details;
        return j;
    }
};

struct InputRecord {
    std::string path;
    std::string hash;  // fnv1a of the file bytes, hex
};

struct RunReport {
    std::string command;
    std::vector<InputRecord> inputs;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    std::size_t trials = 0;
    ojson results;
    std::vector<VerificationReport> checks;
    double elapsed_ms = 0;  // never serialized in machine format
};

std::string emit_machine(const RunReport& r);
std::string emit_text(const RunReport& r);

}  // namespace algindex
