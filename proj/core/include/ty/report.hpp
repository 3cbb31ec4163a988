#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ty {

struct Check {
  std::string id;
  std::string rule;  // the algebraic law being checked, in words
  bool pass = false;
  std::optional<std::string> witness;  // offending index tuple or term
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  int64_t runtime_ms = 0;

  bool all_pass() const;
  void add(std::string id, std::string rule, bool pass, std::string witness = "");
  void merge(const Report& other);
};

}  // namespace ty
