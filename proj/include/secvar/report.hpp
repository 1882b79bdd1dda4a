#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secvar/config.hpp"
#include "secvar/secdim.hpp"
#include "secvar/varieties.hpp"

namespace secvar {

// One expected-versus-actual row of the verification suite.
struct SuiteLine {
    std::string label;
    int expected = 0;
    int actual = 0;

    bool pass() const { return expected == actual; }
};

// Everything a command run wants to persist or print. Serialization is
// canonical: keys are sorted and all numbers are integers, so two runs
// with the same configuration emit identical bytes.
struct Report {
    std::string command;
    std::optional<std::string> variety_name;
    std::optional<std::size_t> variety_n;
    std::optional<std::size_t> variety_r;
    std::optional<bool> variety_is_cone;
    std::optional<i64> variety_degree;
    std::optional<std::string> variety_digest;

    ComputeCfg cfg;
    std::vector<DimensionEstimate> results;
    std::vector<CheckResult> checks;
    std::vector<SuiteLine> suite;
    std::optional<ValidationReport> validation;
    std::vector<Variety> catalog_entries;

    bool pass = true;

    void set_variety(const Variety& v);

    std::string to_json_text() const;
    std::string to_table_text() const;
};

// FNV-1a over the document bytes; identifies file-loaded varieties in reports.
std::string digest_hex(const std::string& bytes);

} // namespace secvar
