#include "fibkan/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fibkan {

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " " << check_id;
    for (const auto& [k, v] : counts) os << " " << k << "=" << v;
    for (const auto& w : witnesses) os << "\n  witness " << w.label << ": " << w.detail;
    for (const auto& n : notes) os << "\n  note: " << n;
    return os.str();
}

std::string report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["pass"] = r.pass;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back({{"label", w.label}, {"detail", w.detail}});
    j["counts"] = r.counts;
    j["notes"] = r.notes;
    j["seconds"] = r.seconds;
    return j.dump(2);
}

CheckReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& w : j.at("witnesses"))
        r.witnesses.push_back({w.at("label").get<std::string>(), w.at("detail").get<std::string>()});
    r.counts = j.at("counts").get<std::map<std::string, long long>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

} // namespace fibkan
