#include "grmod/report.hpp"

#include <algorithm>
#include <sstream>

namespace grmod {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::verified:
            return "verified";
        case Verdict::hypothesis_not_met:
            return "hypothesis-not-met";
        case Verdict::falsified:
            return "FALSIFIED";
    }
    return "?";
}

Json VerificationReport::to_json() const {
    Json j;
    j["claim"] = claim;
    j["entry"] = entry;
    Json hyps = Json::array();
    for (const Hypothesis& h : hypotheses) {
        Json hj;
        hj["name"] = h.name;
        hj["holds"] = h.holds;
        if (!h.witness.empty())
            hj["witness"] = h.witness;
        hyps.push_back(hj);
    }
    j["hypotheses"] = hyps;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["verdict"] = verdict_name(verdict);
    j["tight"] = tight;
    j["seed"] = seed;
    if (!details.is_null())
        j["details"] = details;
    return j;
}

std::string VerificationReport::text_line() const {
    std::ostringstream os;
    os << entry << "  " << claim << "  " << verdict_name(verdict);
    if (verdict == Verdict::verified && tight)
        os << " (tight)";
    if (verdict == Verdict::hypothesis_not_met)
        for (const Hypothesis& h : hypotheses)
            if (!h.holds) {
                os << " [" << h.name << "]";
                break;
            }
    return os.str();
}

static void sort_reports(std::vector<VerificationReport>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  if (a.entry != b.entry)
                      return a.entry < b.entry;
                  return a.claim < b.claim;
              });
}

Json reports_to_json(std::vector<VerificationReport> reports) {
    sort_reports(reports);
    Json out = Json::array();
    for (const VerificationReport& r : reports)
        out.push_back(r.to_json());
    return out;
}

std::string reports_to_text(std::vector<VerificationReport> reports) {
    sort_reports(reports);
    std::ostringstream os;
    for (const VerificationReport& r : reports)
        os << r.text_line() << "\n";
    return os.str();
}

bool any_falsified(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& r : reports)
        if (r.verdict == Verdict::falsified)
            return true;
    return false;
}

}  // namespace grmod
