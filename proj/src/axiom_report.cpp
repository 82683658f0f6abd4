#include "taftcross/axiom_report.hpp"

namespace taftcross {

void AxiomReport::record_check(const std::string& axiom, std::size_t n) { checks_[axiom] += n; }

void AxiomReport::record_failure(AxiomFailure failure) {
  ++failures_by_axiom_[failure.axiom];
  ++failure_total_;
  auto& kept = kept_by_axiom_[failure.axiom];
  if (kept < kKeptPerAxiom) {
    ++kept;
    failures_.push_back(std::move(failure));
  }
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& [axiom, n] : other.checks_) checks_[axiom] += n;
  for (const auto& f : other.failures_) {
    auto& kept = kept_by_axiom_[f.axiom];
    if (kept < kKeptPerAxiom) {
      ++kept;
      failures_.push_back(f);
    }
  }
  for (const auto& [axiom, n] : other.failures_by_axiom_) failures_by_axiom_[axiom] += n;
  failure_total_ += other.failure_total_;
}

std::size_t AxiomReport::checks() const {
  std::size_t total = 0;
  for (const auto& [axiom, n] : checks_) total += n;
  return total;
}

std::size_t AxiomReport::failure_count(const std::string& axiom) const {
  auto it = failures_by_axiom_.find(axiom);
  return it == failures_by_axiom_.end() ? 0 : it->second;
}

std::vector<std::string> AxiomReport::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& [axiom, n] : failures_by_axiom_)
    if (n > 0) out.push_back(axiom);
  return out;
}

}  // namespace taftcross
