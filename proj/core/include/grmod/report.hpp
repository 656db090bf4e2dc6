#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace grmod {

using Json = nlohmann::ordered_json;

enum class Verdict { verified, hypothesis_not_met, falsified };

std::string verdict_name(Verdict v);

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string witness;  // short human-readable evidence
};

/* One theorem or corollary checked on one concrete input. FALSIFIED is
 * reserved for hypothesis-satisfying counterexamples; since everything
 * verified here is proved, a FALSIFIED verdict means an implementation bug
 * and fails the run. */
struct VerificationReport {
    std::string claim;
    std::string entry;
    std::vector<Hypothesis> hypotheses;
    Json lhs;
    Json rhs;
    Verdict verdict = Verdict::verified;
    bool tight = false;
    std::uint64_t seed = 0;
    Json details;

    bool hypotheses_hold() const {
        for (const Hypothesis& h : hypotheses)
            if (!h.holds)
                return false;
        return true;
    }

    Json to_json() const;
    std::string text_line() const;
};

/* deterministic serialization: reports sorted by (entry, claim) */
Json reports_to_json(std::vector<VerificationReport> reports);
std::string reports_to_text(std::vector<VerificationReport> reports);

bool any_falsified(const std::vector<VerificationReport>& reports);

}  // namespace grmod
