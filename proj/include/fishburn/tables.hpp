#pragma once

// Published enumeration tables and their recomputation by brute force.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fishburn/enumerate.hpp"
#include "fishburn/error.hpp"
#include "fishburn/intseq.hpp"

namespace fishburn {

struct TableRow {
  std::vector<std::string> patterns;
  std::string oeis;  // inert metadata, may be empty
  std::vector<long long> published;
};

struct TableDef {
  std::string name;
  std::string caption;
  ClassFlags flags;
  int default_max_n;
  std::vector<TableRow> rows;
};

inline const std::vector<TableDef>& table_registry() {
  static const std::vector<TableDef> tables = {
      {"size3",
       "sigma-avoiding Fishburn permutations",
       {true, false},
       9,
       {
           {{"123", "132", "213", "312"}, "A000079", {1, 2, 4, 8, 16, 32, 64, 128, 256, 512}},
           {{"231"}, "A000108", {1, 2, 5, 14, 42, 132, 429, 1430, 4862}},
           {{"321"}, "A105633", {1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550}},
       }},
      {"size3-ind",
       "sigma-avoiding indecomposable Fishburn permutations",
       {true, true},
       9,
       {
           {{"123"}, "A000325", {1, 1, 2, 5, 12, 27, 58, 121, 248, 503}},
           {{"132", "213"}, "A000079", {1, 1, 2, 4, 8, 16, 32, 64, 128, 256}},
           {{"231"}, "A000108", {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}},
           {{"312"}, "A000012", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
           {{"321"}, "A082582", {1, 1, 1, 2, 5, 13, 35, 97, 275, 794}},
       }},
      {"size4-single",
       "Equivalence classes with a single pattern",
       {true, false},
       8,
       {
           {{"1342"}, "A007317", {1, 2, 5, 15, 51, 188, 731, 2950}},
           {{"1432"}, "", {1, 2, 5, 14, 43, 142, 495, 1796}},
           {{"2314"}, "", {1, 2, 5, 15, 52, 200, 827, 3601}},
           {{"2341"}, "", {1, 2, 5, 15, 52, 202, 858, 3910}},
           {{"3412"}, "A202062(?)", {1, 2, 5, 15, 52, 201, 843, 3764}},
           {{"3421"}, "", {1, 2, 5, 15, 52, 203, 874, 4076}},
           {{"4123"}, "", {1, 2, 5, 14, 42, 133, 442, 1535}},
           {{"4231"}, "", {1, 2, 5, 15, 52, 201, 843, 3765}},
           {{"4312"}, "", {1, 2, 5, 14, 43, 143, 508, 1905}},
           {{"4321"}, "", {1, 2, 5, 14, 45, 162, 639, 2713}},
       }},
      {"size4-catalan",
       "Catalan class of size-4 patterns",
       {true, false},
       8,
       {
           {{"1234", "1243", "1324", "1423", "2134", "2143", "3124", "3142"},
            "A000108",
            {1, 2, 5, 14, 42, 132, 429, 1430, 4862}},
       }},
      {"size4-ind",
       "sigma-avoiding indecomposable Fishburn permutations, size-4 patterns",
       {true, true},
       8,
       {
           {{"1234"}, "", {1, 1, 2, 6, 22, 85, 324, 1204}},
           {{"1243", "2134"}, "A289597(?)", {1, 1, 2, 6, 21, 75, 266, 938}},
           {{"1324"}, "", {1, 1, 2, 6, 22, 84, 317, 1174}},
           {{"1342"}, "A165538", {1, 1, 2, 6, 22, 88, 367, 1568}},
           {{"1423", "3124"}, "A279557", {1, 1, 2, 6, 20, 68, 233, 805}},
           {{"1432"}, "", {1, 1, 2, 6, 20, 71, 263, 1002}},
           {{"2143"}, "A026012", {1, 1, 2, 6, 19, 62, 207, 704}},
           {{"2314"}, "", {1, 1, 2, 6, 23, 99, 450, 2109}},
           {{"2341"}, "", {1, 1, 2, 6, 22, 91, 409, 1955}},
           {{"2413", "2431", "3241"}, "A165546(?)", {1, 1, 2, 6, 22, 90, 395, 1823}},
           {{"3142"}, "A000108", {1, 1, 2, 5, 14, 42, 132, 429}},
           {{"3214"}, "", {1, 1, 2, 6, 20, 72, 275, 1096}},
           {{"3412"}, "", {1, 1, 2, 6, 22, 90, 396, 1840}},
           {{"3421"}, "", {1, 1, 2, 6, 22, 92, 423, 2088}},
           {{"4123"}, "", {1, 1, 2, 5, 14, 43, 143, 507}},
           {{"4132", "4213"}, "", {1, 1, 2, 5, 15, 51, 188, 732}},
           {{"4231"}, "", {1, 1, 2, 6, 22, 90, 396, 1841}},
           {{"4312"}, "", {1, 1, 2, 5, 15, 51, 188, 733}},
           {{"4321"}, "", {1, 1, 2, 5, 17, 66, 279, 1256}},
       }},
  };
  return tables;
}

inline const TableDef& find_table(std::string_view name) {
  for (const auto& t : table_registry()) {
    if (t.name == name) return t;
  }
  throw Error(ErrorCode::UnknownTable, "no table named '" + std::string(name) + "'");
}

struct ComputedRow {
  std::vector<std::string> patterns;
  std::string oeis;
  IntSeq sequence;  // of the first pattern
  bool members_agree = true;
  bool matches_published = true;  // compared on the common prefix
};

struct ComputedTable {
  const TableDef* def = nullptr;
  int max_n = 0;
  std::vector<ComputedRow> rows;

  bool all_match() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ComputedRow& r) { return r.members_agree && r.matches_published; });
  }
};

inline ComputedTable compute_table(const TableDef& def, int max_n, unsigned workers = detail::default_workers()) {
  ComputedTable out{&def, max_n, {}};
  for (const auto& row : def.rows) {
    ComputedRow cr{row.patterns, row.oeis, {}, true, true};
    for (std::size_t i = 0; i < row.patterns.size(); ++i) {
      IntSeq s = counting_sequence(Permutation::parse(row.patterns[i]), def.flags, max_n, workers);
      if (i == 0) {
        cr.sequence = std::move(s);
      } else if (s != cr.sequence) {
        cr.members_agree = false;
      }
    }
    const int common = std::min<int>(max_n, static_cast<int>(row.published.size()));
    for (int n = 1; n <= common; ++n) {
      if (cr.sequence.term(n) != row.published[static_cast<std::size_t>(n - 1)]) cr.matches_published = false;
    }
    out.rows.push_back(std::move(cr));
  }
  return out;
}

namespace detail {
inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}
}  // namespace detail

enum class OutputFormat { Plain, Csv, Json };

/// Byte-stable rendering; identical inputs always give identical bytes.
inline std::string render_table(const ComputedTable& t, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Plain:
      os << "# " << t.def->caption << " (n = 1.." << t.max_n << ")\n";
      for (const auto& r : t.rows) {
        os << detail::join(r.patterns, ", ") << " | " << join_terms(r.sequence) << " | "
           << (r.oeis.empty() ? "-" : r.oeis);
        if (!r.members_agree) os << " | members disagree";
        os << "\n";
      }
      break;
    case OutputFormat::Csv:
      os << "patterns,oeis";
      for (int n = 1; n <= t.max_n; ++n) os << "," << n;
      os << "\n";
      for (const auto& r : t.rows) {
        os << detail::join(r.patterns, " ") << "," << r.oeis << "," << join_terms(r.sequence, ",") << "\n";
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["table"] = t.def->name;
      j["caption"] = t.def->caption;
      j["max_n"] = t.max_n;
      auto& rows = j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        rows.push_back({{"patterns", r.patterns},
                        {"oeis", r.oeis},
                        {"members_agree", r.members_agree},
                        {"sequence", to_json(r.sequence)}});
      }
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace fishburn
