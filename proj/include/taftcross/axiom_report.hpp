#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace taftcross {

struct AxiomFailure {
  std::string axiom;
  std::vector<std::string> location;  // basis labels of the arguments
  std::string residual;               // printed nonzero residual
};

/// Outcome of an exhaustive (or sampled) identity sweep. Every failure is
/// counted; only the first kKeptPerAxiom per axiom are stored verbatim.
class AxiomReport {
 public:
  static constexpr std::size_t kKeptPerAxiom = 16;

  void record_check(const std::string& axiom, std::size_t n = 1);
  void record_failure(AxiomFailure failure);
  /// Appends another report; used to merge per-worker reports in order.
  void merge(const AxiomReport& other);

  bool pass() const { return failure_total_ == 0; }
  std::size_t checks() const;
  std::size_t failure_count() const { return failure_total_; }
  std::size_t failure_count(const std::string& axiom) const;
  const std::map<std::string, std::size_t>& checks_by_axiom() const { return checks_; }
  const std::vector<AxiomFailure>& failures() const { return failures_; }
  bool has_failure(const std::string& axiom) const { return failure_count(axiom) > 0; }
  /// Axiom ids with at least one failure, sorted.
  std::vector<std::string> failed_axioms() const;

 private:
  std::map<std::string, std::size_t> checks_;
  std::map<std::string, std::size_t> failures_by_axiom_;
  std::map<std::string, std::size_t> kept_by_axiom_;
  std::vector<AxiomFailure> failures_;
  std::size_t failure_total_ = 0;
};

}  // namespace taftcross
