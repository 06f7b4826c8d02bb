#include "dcg/report.hpp"

#include <json.hpp>

#include <sstream>

namespace dcg {

std::string Report::text(bool quiet) const {
    std::ostringstream os;
    os << "suite " << suite_ << "\n";
    for (const Check& c : checks_) {
        if (quiet && c.pass) continue;
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (c.expected == c.actual) {
            os << " = " << c.actual;
        } else {
            os << ": expected " << c.expected << ", got " << c.actual;
        }
        os << "\n";
    }
    os << (passed() ? "PASS" : "FAIL") << " " << suite_ << " (" << checks_.size()
       << " checks, " << seconds << " s)\n";
    return os.str();
}

std::string Report::json_string() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks_) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["status"] = c.pass ? "pass" : "fail";
        j["checks"].push_back(std::move(jc));
    }
    j["status"] = passed() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

} // namespace dcg
