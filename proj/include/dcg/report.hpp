#pragma once

// Verification reports: a named list of checks, each with expected and
// actual values rendered as decimal strings. Serializes to human-readable
// text (with timing) and to a stable machine-readable tree with exactly the
// keys {suite, checks[], status}; the tree is byte-identical across runs
// with the same seed.

#include "dcg/rational.hpp"

#include <string>
#include <vector>

namespace dcg {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(const std::string& name, const std::string& expected,
             const std::string& actual) {
        checks_.push_back({name, expected, actual, expected == actual});
    }
    void add(const std::string& name, const Int& expected, const Int& actual) {
        add(name, expected.get_str(), actual.get_str());
    }
    void add(const std::string& name, long expected, const Int& actual) {
        add(name, Int(expected), actual);
    }
    void add(const std::string& name, long expected, long actual) {
        add(name, std::to_string(expected), std::to_string(actual));
    }
    // A predicate check: expected "ok", actual "ok" or a failure detail.
    void add_ok(const std::string& name, bool ok, const std::string& detail = "") {
        checks_.push_back({name, "ok", ok ? "ok" : (detail.empty() ? "failed" : detail), ok});
    }

    const std::string& suite() const { return suite_; }
    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const {
        for (const Check& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    double seconds = 0.0; // human-readable output only

    std::string text(bool quiet) const;
    std::string json_string() const;

private:
    std::string suite_;
    std::vector<Check> checks_;
};

} // namespace dcg
