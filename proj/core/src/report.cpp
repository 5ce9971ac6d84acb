#include "sopol/report.hpp"

#include <json.hpp>

namespace sopol {

using nlohmann::json;

void Report::add(const std::string& id, const std::string& ref, double residual,
                 double tol) {
    bool ok = residual <= tol;
    checks.push_back({id, ref, residual, tol, ok});
    pass = pass && ok;
}

void Report::skip(const std::string& id, const std::string& ref,
                  const std::string& reason) {
    checks.push_back({id + " [skipped: " + reason + "]", ref, 0.0, 0.0, true});
}

namespace {

json check_to_json(const CheckRecord& c) {
    return json{{"id", c.id},
                {"paper_ref", c.paper_ref},
                {"residual", c.residual},
                {"tol", c.tol},
                {"pass", c.pass}};
}

CheckRecord check_from_json(const json& j) {
    CheckRecord c;
    c.id = j.at("id").get<std::string>();
    c.paper_ref = j.at("paper_ref").get<std::string>();
    c.residual = j.at("residual").get<double>();
    c.tol = j.at("tol").get<double>();
    c.pass = j.at("pass").get<bool>();
    return c;
}

json to_json_obj(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    return json{{"suite", r.suite},
                {"params", r.params},
                {"checks", checks},
                {"pass", r.pass},
                {"seconds", r.seconds}};
}

Report from_json_obj(const json& j) {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    r.pass = j.at("pass").get<bool>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

} // namespace

std::string report_to_json(const Report& report, int indent) {
    return to_json_obj(report).dump(indent);
}

Report report_from_json(const std::string& text) {
    return from_json_obj(json::parse(text));
}

std::string reports_to_json(const std::vector<Report>& reports, double seconds,
                            int indent) {
    json arr = json::array();
    bool pass = true;
    for (const auto& r : reports) {
        arr.push_back(to_json_obj(r));
        pass = pass && r.pass;
    }
    return json{{"reports", arr}, {"pass", pass}, {"seconds", seconds}}.dump(indent);
}

std::vector<Report> reports_from_json(const std::string& text) {
    std::vector<Report> out;
    json doc = json::parse(text);
    for (const auto& j : doc.at("reports")) out.push_back(from_json_obj(j));
    return out;
}

} // namespace sopol
