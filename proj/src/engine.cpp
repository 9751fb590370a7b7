#include "rqs/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rqs {

namespace {

struct Oversize {};

std::uint64_t decomposition_charge(std::size_t m, std::size_t k) {
  const double c = static_cast<double>(m) * static_cast<double>(k) * static_cast<double>(k) * std::log(static_cast<double>(m));
  return static_cast<std::uint64_t>(std::ceil(c));
}

class Solver {
 public:
  Solver(const RqsParams& params, Rng& rng, RqsResult& result) : params_(params), rng_(rng), result_(result) {}

  std::optional<Witness> solve(const ProblemAdapter& a, int depth, QueryLedger& quantum, QueryLedger& classical) {
    result_.max_depth = std::max(result_.max_depth, depth);
    const std::size_t m = a.size();
    if (params_.exhaustive_at(m)) return base(a, quantum, classical);

    const std::size_t k = params_.k_for(m);
    QueryLedger shared;
    shared.classical_ops += decomposition_charge(m, k);
    auto dec = a.decompose(k, rng_);
    result_.redraws += dec->redraws;
    auto hit = a.span_check(*dec, shared);
    quantum += shared;
    classical += shared;
    if (hit) return hit;

    const std::size_t bound = a.oversize_bound(m, k, params_);
    for (const auto& s : dec->subproblems)
      if (s.size() > bound) throw Oversize{};

    const auto& subs = dec->subproblems;
    std::vector<std::optional<Witness>> found(subs.size());
    QueryLedger children_classical;
    auto found_at = grover_find(subs.size(), [&](std::size_t i, QueryLedger& cost) {
      auto child = a.restrict(*dec, subs[i]);
      QueryLedger child_classical;
      if (child->size() >= m) {
        // No progress: the region holds everything; solve it directly.
        found[i] = base(*child, cost, child_classical);
      } else {
        found[i] = solve(*child, depth + 1, cost, child_classical);
      }
      children_classical += child_classical;
      return found[i].has_value();
    }, quantum);
    classical += children_classical;
    if (found_at) return found[*found_at];
    return std::nullopt;
  }

 private:
  std::optional<Witness> base(const ProblemAdapter& a, QueryLedger& quantum, QueryLedger& classical) {
    QueryLedger cost;
    auto w = a.base_solve(cost);
    quantum += cost;
    classical += cost;
    return w;
  }

  const RqsParams& params_;
  Rng& rng_;
  RqsResult& result_;
};

}  // namespace

std::vector<int> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw std::invalid_argument("sample larger than population");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

std::size_t RqsParams::raw_k(std::size_t m) const {
  if (sample_override > 0) return sample_override;
  const double lm = std::log(static_cast<double>(m));
  const double v = std::pow(static_cast<double>(m), 1.0 / alpha) * delta * (lm + std::log(1.0 / epsilon));
  return static_cast<std::size_t>(std::ceil(v));
}

std::size_t RqsParams::k_for(std::size_t m) const {
  if (m < 3) return 2;
  return std::clamp<std::size_t>(raw_k(m), 2, m - 1);
}

bool RqsParams::exhaustive_at(std::size_t m) const {
  if (m < 4) return true;
  if (sample_override > 0) return m <= base_threshold;
  return m <= raw_k(m);
}

RqsParams choose_params(std::size_t n, double epsilon, double delta, double c3) {
  if (n < 4) throw std::invalid_argument("choose_params needs n >= 4");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(delta > 0) || !(c3 > 0)) throw std::invalid_argument("delta and C3 must be positive");
  const double ln = std::log(static_cast<double>(n));
  const double den = std::log(c3) + std::log(ln);
  if (!(den > 0)) throw std::invalid_argument("ln C3 + ln ln n must be positive");
  RqsParams p;
  p.n0 = n;
  p.epsilon = epsilon;
  p.delta = delta;
  p.c3 = c3;
  p.alpha = std::sqrt(2.0 * ln / den);
  const std::size_t raw = p.raw_k(n);
  p.k = std::clamp<std::size_t>(raw, 2, n - 1);
  p.base_threshold = raw;
  return p;
}

RqsParams fixed_sample_params(std::size_t n, std::size_t k, double epsilon, double delta, std::size_t base) {
  RqsParams p = choose_params(std::max<std::size_t>(n, 4), epsilon, delta);
  p.n0 = n;
  p.sample_override = std::max<std::size_t>(k, 2);
  p.k = std::clamp<std::size_t>(p.sample_override, 2, std::max<std::size_t>(n, 3) - 1);
  p.base_threshold = std::max(base, p.sample_override);
  return p;
}

std::size_t ProblemAdapter::oversize_bound(std::size_t m, std::size_t k, const RqsParams& params) const {
  const double md = static_cast<double>(m);
  const double v = md / static_cast<double>(k) * params.delta * (std::log(md) + std::log(1.0 / params.epsilon));
  return static_cast<std::size_t>(std::ceil(v));
}

RqsResult rqs_solve(const ProblemAdapter& adapter, const RqsParams& params, std::uint64_t seed) {
  RqsResult result;
  if (auto t = adapter.trivial()) {
    result.decision = *t;
    result.attempts = 1;
    return result;
  }
  Rng rng(seed);
  AmplificationPolicy policy(params.epsilon, params.c_amp);
  auto used = amplify([&](std::uint64_t) {
    ++result.attempts;
    QueryLedger quantum, classical;
    Solver solver(params, rng, result);
    try {
      auto w = solver.solve(adapter, 0, quantum, classical);
      result.ledger += quantum;
      result.classical_baseline += classical;
      result.witness = std::move(w);
      return AttemptStatus::Ok;
    } catch (const Oversize&) {
      ++result.oversize_errors;
      result.ledger += quantum;
      result.classical_baseline += classical;
      return AttemptStatus::Error;
    }
  }, policy, result.ledger);
  result.classical_baseline.amplification_invocations = result.ledger.amplification_invocations;
  if (!used) {
    result.exhausted = true;
    result.retries = result.attempts - 1;
    return result;
  }
  result.retries = *used - 1;
  if (result.witness) {
    if (!adapter.verify(*result.witness)) throw std::logic_error("search produced a witness that fails verification");
    result.decision = true;
  }
  return result;
}

bool verify_witness(const ProblemAdapter& adapter, const Witness& w) { return adapter.verify(w); }

}  // namespace rqs
