#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace skb {

using nlohmann::json;

namespace {

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "|";
  for (const auto& h : header) os << " " << h << " |";
  os << "\n|";
  for (size_t i = 0; i < header.size(); ++i) os << (i == 0 ? " --- |" : " ---: |");
  os << "\n";
  for (const auto& row : rows) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
  }
  return os.str();
}

} // namespace

std::string render_braces_md(const BraceCatalog& catalog) {
  auto m = catalog.type_matrix();
  int k = (int)catalog.group_names.size();
  std::ostringstream os;
  os << "# Skew braces of size " << catalog.n << "\n\n";
  std::vector<std::string> header{"E \\ G"};
  for (const auto& n : catalog.group_names) header.push_back(n);
  std::vector<std::vector<std::string>> rows;
  int total = 0;
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> row{catalog.group_names[i]};
    for (int j = 0; j < k; ++j) {
      row.push_back(std::to_string(m[i][j]));
      total += m[i][j];
    }
    rows.push_back(std::move(row));
  }
  os << md_table(header, rows) << "\nTotal: " << total << "\n";
  return os.str();
}

std::string render_braces_csv(const BraceCatalog& catalog) {
  auto m = catalog.type_matrix();
  std::ostringstream os;
  os << "add,mul,count\n";
  int k = (int)catalog.group_names.size();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      os << catalog.group_names[i] << "," << catalog.group_names[j] << "," << m[i][j] << "\n";
  return os.str();
}

std::string render_braces_json(const BraceCatalog& catalog, bool include_tables) {
  json out;
  out["n"] = catalog.n;
  out["groups"] = catalog.group_names;
  json cells = json::array();
  auto m = catalog.type_matrix();
  for (size_t i = 0; i < catalog.group_names.size(); ++i)
    for (size_t j = 0; j < catalog.group_names.size(); ++j)
      cells.push_back({{"add", catalog.group_names[i]},
                       {"mul", catalog.group_names[j]},
                       {"count", m[i][j]}});
  out["matrix"] = cells;
  out["total"] = catalog.total_braces();
  if (include_tables) {
    json classes = json::array();
    for (const auto& e : catalog.entries)
      for (size_t ci = 0; ci < e->classes.size(); ++ci) {
        SkewBrace B = brace_from_regular(e->E, e->realization((int)ci));
        classes.push_back(json::parse(brace_json(B, catalog.group_names[e->add_index],
                                                 catalog.group_names[e->classes[ci].mul_index])));
      }
    out["classes"] = classes;
  }
  return out.dump(2) + "\n";
}

std::string render_count_md(const CountReport& report, const std::vector<std::string>& names,
                            bool subtables) {
  int k = (int)names.size();
  std::ostringstream os;
  os << "# Skew braces of size " << report.n << "p, " << report.prime.str() << "\n\n";
  auto m = report.group_matrix(k);
  std::vector<std::string> header{"N \\ G"};
  for (const auto& n : names) header.push_back(n);
  header.push_back("total");
  std::vector<std::vector<std::string>> rows;
  std::vector<long long> col_tot(k, 0);
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> row{names[i]};
    long long rt = 0;
    for (int j = 0; j < k; ++j) {
      row.push_back(std::to_string(m[i][j]));
      rt += m[i][j];
      col_tot[j] += m[i][j];
    }
    row.push_back(std::to_string(rt));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> tot{"total"};
  for (int j = 0; j < k; ++j) tot.push_back(std::to_string(col_tot[j]));
  tot.push_back(std::to_string(report.total));
  rows.push_back(std::move(tot));
  os << md_table(header, rows);

  if (subtables) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<StructureLabel> adds, muls;
        for (const auto& c : report.cells) {
          if (c.add.group_index != i || c.mul.group_index != j) continue;
          if (std::find(adds.begin(), adds.end(), c.add) == adds.end()) adds.push_back(c.add);
          if (std::find(muls.begin(), muls.end(), c.mul) == muls.end()) muls.push_back(c.mul);
        }
        if (adds.empty()) continue;
        std::sort(adds.begin(), adds.end());
        std::sort(muls.begin(), muls.end());
        os << "\n## E = " << names[i] << ", F = " << names[j] << "\n\n";
        std::vector<std::string> h{"N \\ G"};
        for (const auto& lm : muls) h.push_back(lm.str());
        std::vector<std::vector<std::string>> body;
        for (const auto& la : adds) {
          std::vector<std::string> row{la.str()};
          for (const auto& lm : muls) row.push_back(std::to_string(report.cell(la, lm)));
          body.push_back(std::move(row));
        }
        os << md_table(h, body);
      }
  }
  return os.str();
}

std::string render_count_csv(const CountReport& report) {
  std::ostringstream os;
  os << "add_label,mul_label,count\n";
  for (const auto& c : report.cells)
    os << c.add.str() << "," << c.mul.str() << "," << c.count << "\n";
  return os.str();
}

std::string render_count_json(const CountReport& report, const std::vector<std::string>& names) {
  json out;
  out["n"] = report.n;
  out["prime"] = {{"mode", report.prime.mode == PrimeMode::Residue ? "residue" : "prime"},
                  {"value", report.prime.value}};
  json matrix = json::array();
  for (const auto& c : report.cells)
    matrix.push_back(
        {{"add_label", c.add.str()}, {"mul_label", c.mul.str()}, {"count", c.count}});
  out["matrix"] = matrix;
  json pbs = json::array();
  for (const auto& pb : report.per_brace) {
    json lines = json::array();
    for (const auto& line : pb.lines) {
      json taus = json::array();
      for (const auto& [lbl, cnt] : line.tau_orbit_counts)
        taus.push_back({{"kernel", lbl.first},
                        {"tag", lbl.second ? std::string(1, lbl.second) : ""},
                        {"orbits", cnt}});
      lines.push_back({{"kernel", line.add_label.first},
                       {"tag", line.add_label.second ? std::string(1, line.add_label.second) : ""},
                       {"sigma_orbit_size", line.orbit_size},
                       {"a_sigma_order", line.a_sigma_order},
                       {"trivial_sigma", line.trivial_sigma},
                       {"tau_orbits", taus}});
    }
    pbs.push_back({{"add", names[pb.add_index]},
                   {"mul", names[pb.mul_index]},
                   {"class_index", pb.class_index},
                   {"aut_b_order", pb.aut_b_order},
                   {"sigma_lines", lines}});
  }
  out["per_brace"] = pbs;
  out["total"] = report.total;
  return out.dump(2) + "\n";
}

std::string render_diffs_md(const std::vector<CellDiff>& diffs) {
  if (diffs.empty()) return "no differences\n";
  std::ostringstream os;
  os << "| add | mul | left | right |\n| --- | --- | ---: | ---: |\n";
  for (const auto& d : diffs)
    os << "| " << d.add.str() << " | " << d.mul.str() << " | " << d.a << " | " << d.b << " |\n";
  return os.str();
}

std::string brace_json(const SkewBrace& B, const std::string& add_label,
                       const std::string& mul_label) {
  json out;
  out["size"] = B.size();
  out["labels"] = {{"add", add_label}, {"mul", mul_label}};
  out["add_table"] = B.add.table;
  out["mul_table"] = B.mul.table;
  out["lambda"] = B.lambda;
  return out.dump() + "\n";
}

} // namespace skb
