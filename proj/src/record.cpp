#include "zetalab/record.hpp"

#include <charconv>

#include "json.hpp"

namespace zetalab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Informational: return "informational";
    }
    return "informational";
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

nlohmann::ordered_json payload(const ExperimentRecord& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
    j["computed"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.computed) j["computed"][k] = v;
    j["reference"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.reference) j["reference"][k] = v;
    j["verdict"] = to_string(r.verdict);
    return j;
}

} // namespace

std::string ExperimentRecord::payload_json() const { return payload(*this).dump(2); }

std::string ExperimentRecord::to_json() const {
    nlohmann::ordered_json j;
    j["payload"] = payload(*this);
    j["runtime_seconds"] = runtime_seconds;
    return j.dump(2);
}

std::string ExperimentRecord::to_csv() const {
    std::string header = "name";
    std::string row = name;
    for (const auto& [k, v] : inputs) {
        header += ",input." + k;
        row += "," + v;
    }
    for (const auto& [k, v] : computed) {
        header += ",computed." + k;
        row += "," + format_double(v);
    }
    for (const auto& [k, v] : reference) {
        header += ",reference." + k;
        row += "," + format_double(v);
    }
    header += ",verdict";
    row += "," + to_string(verdict);
    return header + "\n" + row + "\n";
}

} // namespace zetalab
