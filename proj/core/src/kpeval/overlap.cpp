#include "kpgen/kpeval/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kpgen/common/error.hpp"
#include "kpgen/common/text.hpp"
#include "kpgen/kpeval/normalize.hpp"

namespace kpgen::eval {

OverlapMatrix overlap_matrix(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& domain_phrases) {
  if (domain_phrases.empty()) throw ConfigError("overlap_matrix: need at least one domain");

  OverlapMatrix m;
  std::vector<std::set<std::string>> sets;
  for (const auto& [name, phrases] : domain_phrases) {
    m.domains.push_back(name);
    std::set<std::string> uniq;
    for (const auto& p : phrases) {
      if (trim(p).empty()) continue;
      uniq.insert(normalize(p).joined());
    }
    m.empty_domain.push_back(uniq.empty());
    if (uniq.empty()) ++m.warnings;
    sets.push_back(std::move(uniq));
  }

  const size_t n = sets.size();
  m.raw.assign(n, std::vector<size_t>(n, 0));
  m.normalized.assign(n, std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        m.raw[i][j] = sets[i].size();
        continue;
      }
      size_t inter = 0;
      const auto& small = sets[i].size() <= sets[j].size() ? sets[i] : sets[j];
      const auto& big = sets[i].size() <= sets[j].size() ? sets[j] : sets[i];
      for (const auto& p : small) inter += big.count(p);
      m.raw[i][j] = inter;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (m.empty_domain[j]) continue;  // undefined column
      m.normalized[i][j] =
          100.0 * static_cast<double>(m.raw[i][j]) / static_cast<double>(m.raw[j][j]);
    }
  }
  return m;
}

std::string OverlapMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["domains"] = domains;
  j["raw"] = raw;
  auto norm = nlohmann::ordered_json::array();
  for (const auto& row : normalized) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row) {
      if (std::isnan(v)) {
        r.push_back(nullptr);
      } else {
        r.push_back(v);
      }
    }
    norm.push_back(std::move(r));
  }
  j["normalized"] = std::move(norm);
  j["warnings"] = warnings;
  return j.dump(2);
}

std::string OverlapMatrix::to_csv() const {
  std::ostringstream out;
  out << "domain";
  for (const auto& d : domains) out << "," << d;
  out << "\n";
  for (size_t i = 0; i < domains.size(); ++i) {
    out << domains[i];
    for (size_t j = 0; j < domains.size(); ++j) {
      if (std::isnan(normalized[i][j])) {
        out << ",";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), ",%.1f", normalized[i][j]);
        out << buf;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string OverlapMatrix::to_text() const {
  std::ostringstream out;
  size_t w = 8;
  for (const auto& d : domains) w = std::max(w, d.size() + 2);
  out << std::string(w, ' ');
  char buf[64];
  for (const auto& d : domains) {
    std::snprintf(buf, sizeof(buf), "%*s", static_cast<int>(w), d.c_str());
    out << buf;
  }
  out << "\n";
  for (size_t i = 0; i < domains.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%-*s", static_cast<int>(w), domains[i].c_str());
    out << buf;
    for (size_t j = 0; j < domains.size(); ++j) {
      if (std::isnan(normalized[i][j])) {
        std::snprintf(buf, sizeof(buf), "%*s", static_cast<int>(w), "n/a");
      } else {
        std::snprintf(buf, sizeof(buf), "%*.1f", static_cast<int>(w), normalized[i][j]);
      }
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace kpgen::eval
