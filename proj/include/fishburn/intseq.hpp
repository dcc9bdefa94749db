#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fishburn/error.hpp"
#include "fishburn/exact.hpp"

namespace fishburn {

/// Exact integer sequence with an explicit starting index.
struct IntSeq {
  int start = 1;
  std::vector<BigInt> terms;

  IntSeq() = default;
  IntSeq(int start_index, std::vector<BigInt> values) : start(start_index), terms(std::move(values)) {}

  int size() const noexcept { return static_cast<int>(terms.size()); }
  int last_index() const noexcept { return start + size() - 1; }

  const BigInt& term(int n) const {
    if (n < start || n > last_index()) {
      throw Error(ErrorCode::InvalidSpec, "index " + std::to_string(n) + " outside sequence range [" +
                                              std::to_string(start) + ", " + std::to_string(last_index()) + "]");
    }
    return terms[static_cast<std::size_t>(n - start)];
  }

  /// Restriction to indices [start, last].
  IntSeq prefix_through(int last) const {
    IntSeq out(start, {});
    for (int n = start; n <= std::min(last, last_index()); ++n) out.terms.push_back(term(n));
    return out;
  }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;
};

/// "1, 2, 5, 14"
inline std::string join_terms(const IntSeq& s, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) out += sep;
    out += s.terms[i].str();
  }
  return out;
}

/// {"start": 1, "terms": ["1", "2", ...]}; terms are decimal strings.
inline nlohmann::ordered_json to_json(const IntSeq& s) {
  nlohmann::ordered_json j;
  j["start"] = s.start;
  auto& arr = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : s.terms) arr.push_back(t.str());
  return j;
}

inline IntSeq int_seq_from_json(const nlohmann::ordered_json& j) {
  IntSeq s;
  s.start = j.at("start").get<int>();
  for (const auto& t : j.at("terms")) s.terms.emplace_back(BigInt(t.get<std::string>()));
  return s;
}

/// CSV header "n,value" followed by one row per term.
inline std::string to_csv(const IntSeq& s) {
  std::string out = "n,value\n";
  for (int n = s.start; n <= s.last_index(); ++n) out += std::to_string(n) + "," + s.term(n).str() + "\n";
  return out;
}

}  // namespace fishburn
