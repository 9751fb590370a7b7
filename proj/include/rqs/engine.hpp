#pragma once

// Recursive search: sample, decompose into regions, check solutions spanning
// region boundaries, then search the regions with simulated Grover descent.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rqs/ledger.hpp"
#include "rqs/subproblem.hpp"
#include "rqs/witness.hpp"

namespace rqs {

using Rng = std::mt19937_64;

/// k distinct values from [0, n), by partial Fisher-Yates.
std::vector<int> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng);

struct RqsParams {
  std::size_t n0 = 0;
  double epsilon = 0.1;
  double delta = 2.0;
  double c3 = 2.718281828459045;
  double alpha = 1.0;
  std::size_t k = 2;               // sample size at the root
  std::size_t base_threshold = 2;  // sizes at or below run exhaustively
  std::size_t sample_override = 0;  // fixed sample size at every level when nonzero
  double c_amp = 3.0;

  /// Unclamped ceil(m^{1/alpha} * delta * (ln m + ln(1/epsilon))), or the override.
  std::size_t raw_k(std::size_t m) const;
  /// raw_k(m) clamped to [2, m - 1].
  std::size_t k_for(std::size_t m) const;
  bool exhaustive_at(std::size_t m) const;
};

/// alpha = sqrt(2 ln n / (ln C3 + ln ln n)); k and base_threshold from raw_k(n).
RqsParams choose_params(std::size_t n, double epsilon, double delta = 2.0, double c3 = 2.718281828459045);
/// Same alpha, but every level samples exactly `k` objects (clamped) and sizes <= base run
/// exhaustively; base = 0 means base = k.
RqsParams fixed_sample_params(std::size_t n, std::size_t k, double epsilon, double delta = 2.0, std::size_t base = 0);

/// Regions produced by one decomposition. Adapters derive to keep their geometry.
class Decomposition {
 public:
  virtual ~Decomposition() = default;
  std::vector<SubproblemSpec> subproblems;
  std::uint64_t redraws = 0;  // samples rejected as degenerate
};

class ProblemAdapter {
 public:
  virtual ~ProblemAdapter() = default;

  virtual std::size_t size() const = 0;
  /// Decision known without search (e.g. a target exceeding the object count).
  virtual std::optional<bool> trivial() const { return std::nullopt; }
  virtual std::unique_ptr<Decomposition> decompose(std::size_t k, Rng& rng) const = 0;
  /// Solutions on region boundaries, found without evaluating any region.
  virtual std::optional<Witness> span_check(const Decomposition& dec, QueryLedger& ledger) const = 0;
  virtual std::optional<Witness> base_solve(QueryLedger& ledger) const = 0;
  virtual std::unique_ptr<ProblemAdapter> restrict(const Decomposition& dec, const SubproblemSpec& spec) const = 0;
  /// Independent check against the full input.
  virtual bool verify(const Witness& w) const = 0;
  /// Largest admissible region size: ceil((m/k) * delta * (ln m + ln(1/epsilon))).
  virtual std::size_t oversize_bound(std::size_t m, std::size_t k, const RqsParams& params) const;
};

struct RqsResult {
  bool decision = false;
  std::optional<Witness> witness;
  QueryLedger ledger;              // simulated-Grover accounting
  QueryLedger classical_baseline;  // same work with regions searched one by one
  std::uint64_t attempts = 0;
  std::uint64_t retries = 0;
  std::uint64_t oversize_errors = 0;
  std::uint64_t redraws = 0;
  bool exhausted = false;  // every amplification run hit an oversize region
  int max_depth = 0;
};

RqsResult rqs_solve(const ProblemAdapter& adapter, const RqsParams& params, std::uint64_t seed);

bool verify_witness(const ProblemAdapter& adapter, const Witness& w);

}  // namespace rqs
