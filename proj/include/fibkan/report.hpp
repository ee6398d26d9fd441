#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibkan {

// Thrown when an operation's preconditions are violated or a required
// construction (e.g. a limit the contract promises) is missing.
class Fault : public std::runtime_error {
public:
    explicit Fault(const std::string& what) : std::runtime_error(what) {}
};

struct Witness {
    std::string label;
    std::string detail;
};

// Structured result of a law or universal-property verification.
// A failing report always carries at least one witness; `check_id` is a
// stable identifier of the check that produced it.
struct CheckReport {
    std::string check_id;
    bool pass = true;
    std::vector<Witness> witnesses;
    std::map<std::string, long long> counts;
    std::vector<std::string> notes;
    double seconds = 0.0;

    void fail(const std::string& label, const std::string& detail) {
        pass = false;
        witnesses.push_back({label, detail});
    }
    void note(const std::string& n) { notes.push_back(n); }
    void bump(const std::string& key, long long by = 1) { counts[key] += by; }

    std::string summary() const;
};

std::string report_to_json(const CheckReport& r);
CheckReport report_from_json(const std::string& text);

} // namespace fibkan
