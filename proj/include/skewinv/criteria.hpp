#pragma once

#include <string>
#include <vector>

namespace skewinv {

// One verified fact inside a criterion.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    std::vector<CheckItem> items;
};

// A place where the source description and direct computation disagree; the
// library follows the oracle and records the substitution here.
struct DiscrepancyNote {
    std::string id;
    std::string statement;   // what the description would imply
    std::string resolution;  // what the library implements instead
    std::string oracle;      // the direct computation that settles it
};

const std::vector<DiscrepancyNote>& discrepancy_notes();

// Fast exact-identity checks shared by the identities verb and criterion 1/2.
std::vector<CheckItem> identity_suite();

CriterionResult run_criterion(int index);  // 1..10; Usage otherwise
std::vector<CriterionResult> run_all_criteria();

}  // namespace skewinv
