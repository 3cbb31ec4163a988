#include "ty/report.hpp"

namespace ty {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string id, std::string rule, bool pass, std::string witness) {
  Check c;
  c.id = std::move(id);
  c.rule = std::move(rule);
  c.pass = pass;
  if (!witness.empty()) c.witness = std::move(witness);
  checks.push_back(std::move(c));
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

}  // namespace ty
