#include "algindex/report.hpp"

#include <sstream>

namespace algindex {

std::string emit_machine(const RunReport& r) {
    ojson j;
    j["command"] = r.command;
    ojson inputs = ojson::array();
    for (const InputRecord& in : r.inputs) inputs.push_back({{"path", in.path}, {"hash", in.hash}});
    j["inputs"] = inputs;
    j["seed"] = r.seed;
    j["prime"] = r.prime;
    j["trials"] = r.trials;
    ojson results = r.results.is_null() ? ojson::object() : r.results;
    if (!r.checks.empty()) {
        ojson checks = ojson::array();
        bool all = true;
        for (const VerificationReport& c : r.checks) {
            checks.push_back(c.to_json());
            all = all && c.pass;
        }
        results["checks"] = checks;
        results["all_pass"] = all;
    }
    j["results"] = results;
    return j.dump(2) + "\n";
}

std::string emit_text(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    for (const InputRecord& in : r.inputs) os << "input: " << in.path << " (" << in.hash << ")\n";
    os << "seed=" << r.seed << " prime=" << r.prime << " trials=" << r.trials << "\n";
    if (!r.results.is_null() && !r.results.empty()) {
        for (auto it = r.results.begin(); it != r.results.end(); ++it)
            os << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
    if (!r.checks.empty()) {
        bool all = true;
        for (const VerificationReport& c : r.checks) {
            os << (c.pass ? "  PASS " : "  FAIL ") << c.tag;
            if (!c.applicable) os << " (not applicable)";
            if (!c.pass || !c.applicable) os << "  " << c.details.dump();
            os << "\n";
            all = all && c.pass;
        }
        os << (all ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    os << "elapsed: " << r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace algindex
