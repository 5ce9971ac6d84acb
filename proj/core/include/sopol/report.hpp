#ifndef SOPOL_REPORT_HPP
#define SOPOL_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace sopol {

/// One verified identity: residual against its tolerance, plus the reference
/// label of the identity it checks.
struct CheckRecord {
    std::string id;
    std::string paper_ref;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Machine-readable outcome of one verification suite.
struct Report {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<CheckRecord> checks;
    bool pass = true;
    double seconds = 0.0;

    /// Record a residual check; pass iff residual <= tol.
    void add(const std::string& id, const std::string& ref, double residual, double tol);
    /// Record a skipped check (counts as passing).
    void skip(const std::string& id, const std::string& ref, const std::string& reason);
};

std::string report_to_json(const Report& report, int indent = 2);
Report report_from_json(const std::string& text);

/// Aggregate of several suite reports; pass iff every report passes.
std::string reports_to_json(const std::vector<Report>& reports, double seconds,
                            int indent = 2);
std::vector<Report> reports_from_json(const std::string& text);

} // namespace sopol

#endif
