#include "rqs/ledger.hpp"

#include <cmath>
#include <stdexcept>

namespace rqs {

namespace {

std::uint64_t mul_div_ceil(std::uint64_t v, std::uint64_t num, std::uint64_t den) {
  unsigned __int128 p = static_cast<unsigned __int128>(v) * num;
  return static_cast<std::uint64_t>((p + den - 1) / den);
}

}  // namespace

QueryLedger QueryLedger::scaled(std::uint64_t num, std::uint64_t den) const {
  if (den == 0) throw std::invalid_argument("scale by zero denominator");
  return {mul_div_ceil(classical_ops, num, den), mul_div_ceil(grover_queries, num, den),
          mul_div_ceil(amplification_invocations, num, den)};
}

std::uint64_t ceil_sqrt(std::uint64_t t) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(t)));
  while (r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  return r * r == t ? r : r + 1;
}

std::optional<std::size_t> grover_find(std::size_t t, const ItemPredicate& pred, QueryLedger& ledger) {
  if (t == 0) return std::nullopt;
  std::optional<std::size_t> hit;
  QueryLedger children;
  for (std::size_t i = 0; i < t; ++i) {
    QueryLedger cost;
    bool ok = pred(i, cost);
    children += cost;
    if (ok && !hit) hit = i;
  }
  const std::uint64_t q = ceil_sqrt(t);
  ledger.grover_queries += q;
  ledger += children.scaled(q, t);
  return hit;
}

AmplificationPolicy::AmplificationPolicy(double eps, double c) : epsilon(eps), c_amp(c), branch_success(1 - eps) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(c > 0)) throw std::invalid_argument("c_amp must be positive");
}

std::uint64_t AmplificationPolicy::repeats() const {
  if (budget > 0) return budget;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(c_amp / std::sqrt(branch_success))));
}

std::optional<std::uint64_t> amplify(const std::function<AttemptStatus(std::uint64_t run)>& attempt,
                                     const AmplificationPolicy& policy, QueryLedger& ledger) {
  const std::uint64_t budget = policy.repeats();
  for (std::uint64_t run = 0; run < budget; ++run) {
    ++ledger.amplification_invocations;
    if (attempt(run) == AttemptStatus::Ok) return run + 1;
  }
  return std::nullopt;
}

}  // namespace rqs
