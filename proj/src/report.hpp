#pragma once

#include <string>

#include "counting.hpp"
#include "oracle.hpp"

namespace skb {

// size-n brace classification (additive x multiplicative class counts)
std::string render_braces_md(const BraceCatalog& catalog);
std::string render_braces_csv(const BraceCatalog& catalog);
std::string render_braces_json(const BraceCatalog& catalog, bool include_tables);

// full counting report; subtables adds one kernel-resolved block per
// (additive group, multiplicative group) pair
std::string render_count_md(const CountReport& report, const std::vector<std::string>& names,
                            bool subtables);
std::string render_count_csv(const CountReport& report);
std::string render_count_json(const CountReport& report, const std::vector<std::string>& names);

std::string render_diffs_md(const std::vector<CellDiff>& diffs);

// single brace dump (tables, lambda maps, labels)
std::string brace_json(const SkewBrace& B, const std::string& add_label,
                       const std::string& mul_label);

} // namespace skb
