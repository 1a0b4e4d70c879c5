#include "cubeiso/reports.hpp"

#include <algorithm>

namespace cubeiso {

void VerificationReport::add_violation(std::string line) {
    ++violation_count;
    auto pos = std::lower_bound(violations.begin(), violations.end(), line);
    if (pos == violations.end() && violations.size() >= kViolationCap) return;
    violations.insert(pos, std::move(line));
    if (violations.size() > kViolationCap) violations.pop_back();
}

void merge_into(VerificationReport& into, const VerificationReport& part) {
    into.instances += part.instances;
    into.complete = into.complete && part.complete;
    into.violation_count += part.violation_count;
    for (const auto& v : part.violations) {
        auto pos = std::lower_bound(into.violations.begin(), into.violations.end(), v);
        if (pos == into.violations.end() && into.violations.size() >= kViolationCap) continue;
        into.violations.insert(pos, v);
        if (into.violations.size() > kViolationCap) into.violations.pop_back();
    }
    for (const auto& [key, value] : part.counters) into.counters[key] += value;
    for (const auto& [size, ext] : part.extrema) {
        auto [it, inserted] = into.extrema.try_emplace(size, ext);
        if (inserted) continue;
        if (ext.min_boundary < it->second.min_boundary)
            it->second = ext;
        else if (ext.min_boundary == it->second.min_boundary)
            it->second.minimizer_count += ext.minimizer_count;
    }
}

std::string to_text(const VerificationReport& r) {
    std::string out = "report v1\n";
    out += "statement " + r.statement + "\n";
    out += "n " + std::to_string(r.n) + "\n";
    out += "mode " + r.mode + "\n";
    out += "instances " + std::to_string(r.instances) + "\n";
    out += std::string("complete ") + (r.complete ? "true" : "false") + "\n";
    out += "violations " + std::to_string(r.violation_count) + "\n";
    out += std::string("pass ") + (r.pass() ? "true" : "false") + "\n";
    if (r.seed) out += "seed " + std::to_string(*r.seed) + "\n";
    for (const auto& [key, value] : r.counters) out += "info " + key + " " + std::to_string(value) + "\n";
    for (const auto& [size, ext] : r.extrema) {
        out += "extremum m=" + std::to_string(size) + " min=" + std::to_string(ext.min_boundary) +
               " count=" + std::to_string(ext.minimizer_count) + " bound=" + std::to_string(ext.bound) +
               std::string(" tight=") + (ext.tight() ? "true" : "false") + "\n";
    }
    for (const auto& v : r.violations) out += "violation " + v + "\n";
    out += "end\n";
    return out;
}

std::string to_csv(const VerificationReport& r) {
    std::string out = "statement,n,mode,instances,complete,violations,pass,seed\n";
    out += r.statement + "," + std::to_string(r.n) + "," + r.mode + "," + std::to_string(r.instances) +
           "," + (r.complete ? "true" : "false") + "," + std::to_string(r.violation_count) + "," +
           (r.pass() ? "true" : "false") + "," + (r.seed ? std::to_string(*r.seed) : "") + "\n";
    return out;
}

}  // namespace cubeiso
