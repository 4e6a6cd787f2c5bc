#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kpgen::eval {

// Cross-domain keyphrase overlap. raw[i][j] = |U_i n U_j| over unique
// normalized phrase sets; normalized[i][j] = 100 * raw[i][j] / raw[j][j]
// (column-normalized, so the diagonal is exactly 100 and the matrix is
// generally asymmetric). Columns of empty domains are undefined and
// reported as null.
struct OverlapMatrix {
  std::vector<std::string> domains;
  std::vector<std::vector<size_t>> raw;
  std::vector<std::vector<double>> normalized;  // NaN where undefined
  std::vector<bool> empty_domain;
  size_t warnings = 0;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

OverlapMatrix overlap_matrix(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& domain_phrases);

}  // namespace kpgen::eval
