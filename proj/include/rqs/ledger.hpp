#pragma once

// Cost accounting for simulated Grover search and amplitude amplification.
// Answers always come from a classical scan; only the charges follow the quantum model.
// Nothing here simulates quantum states.

#include <cstdint>
#include <functional>
#include <optional>

namespace rqs {

struct QueryLedger {
  std::uint64_t classical_ops = 0;
  std::uint64_t grover_queries = 0;
  std::uint64_t amplification_invocations = 0;

  QueryLedger& operator+=(const QueryLedger& o) {
    classical_ops += o.classical_ops;
    grover_queries += o.grover_queries;
    amplification_invocations += o.amplification_invocations;
    return *this;
  }
  friend QueryLedger operator+(QueryLedger a, const QueryLedger& b) { return a += b; }
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

  std::uint64_t total() const { return classical_ops + grover_queries + amplification_invocations; }
  /// Every counter multiplied by num/den, rounded up.
  QueryLedger scaled(std::uint64_t num, std::uint64_t den) const;
};

/// ceil(sqrt(t)) computed exactly.
std::uint64_t ceil_sqrt(std::uint64_t t);

/// Predicate over item i that charges its own work to the ledger it receives.
using ItemPredicate = std::function<bool(std::size_t i, QueryLedger& cost)>;

/// First index (in index order) satisfying the predicate. Every item is evaluated
/// classically; the ledger receives ceil(sqrt(t)) queries plus the summed item costs
/// scaled by ceil(sqrt(t))/t.
std::optional<std::size_t> grover_find(std::size_t t, const ItemPredicate& pred, QueryLedger& ledger);

struct AmplificationPolicy {
  double epsilon = 0.1;         // target failure probability
  double c_amp = 3.0;
  double branch_success = 0.9;  // success probability of one run, 1 - epsilon by default
  std::uint64_t budget = 0;     // explicit repeat budget; 0 means derive it

  AmplificationPolicy() = default;
  explicit AmplificationPolicy(double eps, double c = 3.0);
  /// ceil(c_amp / sqrt(branch_success)) unless an explicit budget is set; at least 1.
  std::uint64_t repeats() const;
};

enum class AttemptStatus { Ok, Error };

/// Runs `attempt` until it reports Ok or the repeat budget runs out.
/// Each run charges one amplification invocation. Returns the number of runs used,
/// or nullopt when every run returned Error.
std::optional<std::uint64_t> amplify(const std::function<AttemptStatus(std::uint64_t run)>& attempt,
                                     const AmplificationPolicy& policy, QueryLedger& ledger);

}  // namespace rqs
