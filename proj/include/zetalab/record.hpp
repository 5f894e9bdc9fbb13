#pragma once

#include <map>
#include <string>

namespace zetalab {

enum class Verdict { Pass, Fail, Informational };

std::string to_string(Verdict v);

// One experiment's inputs, computed quantities, reference values, and
// verdict.  The payload (everything except runtime_seconds) is
// deterministic: identical inputs serialize byte-identically.
struct ExperimentRecord {
    std::string name;
    std::map<std::string, std::string> inputs;
    std::map<std::string, double> computed;
    std::map<std::string, double> reference;
    Verdict verdict = Verdict::Informational;
    double runtime_seconds = 0.0;

    std::string payload_json() const;
    std::string to_json() const; // payload plus runtime_seconds
    std::string to_csv() const;  // flat inputs/computed/reference columns
};

// Shared numeric formatting for inputs maps: shortest round-trip form.
std::string format_double(double v);

} // namespace zetalab
