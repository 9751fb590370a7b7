#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rqs/adapters.hpp"
#include "rqs/curved.hpp"

namespace rqs::problems {

namespace {

using curved::ArcOrSeg;
using curved::CurvedCell;
using curved::Rect;
using curved::UnitDisk;

// Candidate points may sit this far outside their cell. Covering disks reach kTolerance / 2
// beyond the cell, so every such point stays within 1 + kTolerance of them.
constexpr double kInsideSlack = geom::kTolerance / 4;
constexpr int kMaxRedraws = 16;

struct DiskData {
  DiskInstance inst;
  std::vector<UnitDisk> disks;
};

class DiskDecomposition : public Decomposition {
 public:
  std::vector<CurvedCell> cells;
};

double dist(const ApproxPoint& a, const ApproxPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Rect merge(const Rect& a, const Rect& b) {
  return {std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin), std::max(a.xmax, b.xmax), std::max(a.ymax, b.ymax)};
}

/// The view: disks `ids` (global), still needing depth `target` inside `region`, with
/// `covered` disks already containing all of it.
class DiskAdapter : public ProblemAdapter {
 public:
  DiskAdapter(std::shared_ptr<const DiskData> data, std::vector<int> ids, long target, long covered,
              std::optional<CurvedCell> region)
      : data_(std::move(data)), ids_(std::move(ids)), target_(target), covered_(covered), region_(std::move(region)) {}

  std::size_t size() const override { return ids_.size(); }

  std::optional<bool> trivial() const override {
    if (target_ > static_cast<long>(ids_.size())) return false;
    return std::nullopt;
  }

  std::unique_ptr<Decomposition> decompose(std::size_t k, Rng& rng) const override {
    auto dec = std::make_unique<DiskDecomposition>();
    const auto& disks = data_->disks;
    std::vector<int> sample;
    for (int attempt = 0;; ++attempt) {
      sample = to_global(sample_without_replacement(ids_.size(), k, rng));
      if (!degenerate(sample)) break;
      ++dec->redraws;
      if (attempt + 1 == kMaxRedraws) {
        // Give up on splitting: one region holding everything.
        SubproblemSpec all;
        all.region = -1;
        for (std::size_t i = 0; i < ids_.size(); ++i) all.objects.push_back(static_cast<int>(i));
        all.residual_target = target_;
        dec->subproblems.push_back(std::move(all));
        return dec;
      }
    }
    std::vector<UnitDisk> chosen;
    for (int id : sample) chosen.push_back(disks[static_cast<std::size_t>(id)]);
    Rect box = curved::disk_bbox(chosen);
    if (region_) {
      Rect r = region_->bounds();
      box = merge(box, {r.xmin - 1, r.ymin - 1, r.xmax + 1, r.ymax + 1});
    } else {
      std::vector<UnitDisk> mine;
      for (int id : ids_) mine.push_back(disks[static_cast<std::size_t>(id)]);
      box = merge(box, curved::disk_bbox(mine));
    }
    auto arrangement = curved::build_disk_arrangement(disks, sample, box);
    auto pieces = curved::pseudoline_refine(arrangement);
    if (region_)
      for (auto& p : region_->boundary()) pieces.push_back(p);
    for (auto& cell : curved::monotone_sweep_subdivide(pieces, false)) {
      if (region_ && !region_->contains(cell.interior_point(), 0.0)) continue;
      dec->cells.push_back(std::move(cell));
    }
    curved::classify_disks_per_cell(dec->cells, disks, ids_);
    std::vector<int> local_of(disks.size(), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) local_of[static_cast<std::size_t>(ids_[i])] = static_cast<int>(i);
    for (std::size_t c = 0; c < dec->cells.size(); ++c) {
      SubproblemSpec s;
      s.region = static_cast<int>(c);
      for (int g : dec->cells[c].crossing) s.objects.push_back(local_of[static_cast<std::size_t>(g)]);
      s.residual_target = target_ - dec->cells[c].covering;
      dec->subproblems.push_back(std::move(s));
    }
    return dec;
  }

  std::optional<Witness> span_check(const Decomposition& base, QueryLedger& ledger) const override {
    const auto& dec = static_cast<const DiskDecomposition&>(base);
    for (const auto& cell : dec.cells)
      for (const auto& piece : cell.boundary())
        if (auto p = walk(piece, ledger)) return witness_at(*p);
    return std::nullopt;
  }

  std::optional<Witness> base_solve(QueryLedger& ledger) const override {
    const auto& disks = data_->disks;
    if (target_ <= 0) {
      ApproxPoint p = region_ ? region_->interior_point() : disks[static_cast<std::size_t>(ids_.empty() ? 0 : ids_[0])].center;
      ledger.classical_ops += 1;
      return witness_at(p);
    }
    std::vector<ApproxPoint> cand;
    for (int id : ids_) {
      const auto& c = disks[static_cast<std::size_t>(id)].center;
      cand.push_back(c);
      for (const ApproxPoint& e : {ApproxPoint{c.x, c.y - 1}, ApproxPoint{c.x, c.y + 1}, ApproxPoint{c.x - 1, c.y}, ApproxPoint{c.x + 1, c.y}})
        cand.push_back(e);
    }
    for (std::size_t i = 0; i < ids_.size(); ++i)
      for (std::size_t j = i + 1; j < ids_.size(); ++j)
        for (const auto& p : geom::circle_circle_intersections(center(i), center(j), 1.0)) cand.push_back(p);
    if (region_) {
      for (const auto& k : region_->corners()) cand.push_back(k);
      for (const auto& piece : region_->boundary())
        for (std::size_t i = 0; i < ids_.size(); ++i)
          for (const auto& p : piece.meet_circle(center(i))) cand.push_back(p);
    }
    ledger.classical_ops += cand.size() * std::max<std::size_t>(ids_.size(), 1);
    for (const auto& p : cand) {
      if (region_ && !region_->contains(p, kInsideSlack)) continue;
      if (curved::depth_at(p, disks, ids_) >= target_) return witness_at(p);
    }
    return std::nullopt;
  }

  std::unique_ptr<ProblemAdapter> restrict(const Decomposition& base, const SubproblemSpec& spec) const override {
    const auto& dec = static_cast<const DiskDecomposition&>(base);
    std::vector<int> ids = to_global(spec.objects);
    if (spec.region < 0) return std::make_unique<DiskAdapter>(data_, std::move(ids), target_, covered_, region_);
    const auto& cell = dec.cells[static_cast<std::size_t>(spec.region)];
    return std::make_unique<DiskAdapter>(data_, std::move(ids), spec.residual_target, covered_ + cell.covering, cell);
  }

  bool verify(const Witness& w) const override {
    const auto* d = std::get_if<DiskWitness>(&w);
    if (!d) return false;
    int depth = 0;
    for (const auto& disk : data_->disks)
      if (dist(d->point, disk.center) <= 1 + geom::kTolerance) ++depth;
    return depth >= data_->inst.depth_target;
  }

 private:
  const ApproxPoint& center(std::size_t local) const { return data_->disks[static_cast<std::size_t>(ids_[local])].center; }

  std::vector<int> to_global(std::span<const int> local) const {
    std::vector<int> out;
    out.reserve(local.size());
    for (int i : local) out.push_back(ids_[static_cast<std::size_t>(i)]);
    return out;
  }

  bool degenerate(const std::vector<int>& sample) const {
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i + 1; j < sample.size(); ++j)
        if (curved::near_degenerate(data_->disks[static_cast<std::size_t>(sample[i])], data_->disks[static_cast<std::size_t>(sample[j])]))
          return true;
    return false;
  }

  Witness witness_at(const ApproxPoint& p) const {
    return DiskWitness{p, static_cast<int>(covered_) + curved::depth_at(p, data_->disks, ids_)};
  }

  /// Walks one boundary piece, updating the depth at each circle crossing. Returns a point of
  /// depth >= target, rechecked directly.
  std::optional<ApproxPoint> walk(const ArcOrSeg& piece, QueryLedger& ledger) const {
    const double t0 = piece.param(piece.a), t1 = piece.param(piece.b);
    struct Event {
      double t;
      std::size_t circle;
      bool inside_after;
    };
    std::vector<Event> events;
    std::vector<char> inside(ids_.size(), 0);
    long cur = 0;
    auto inside_at = [&](std::size_t i, double t) { return dist(piece.at_param(t), center(i)) <= 1 + geom::kTolerance; };
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      std::vector<double> ts;
      for (const auto& p : piece.meet_circle(center(i))) ts.push_back(std::clamp(piece.param(p), t0, t1));
      std::sort(ts.begin(), ts.end());
      const double first = ts.empty() ? t1 : ts.front();
      inside[i] = inside_at(i, (t0 + first) / 2);
      cur += inside[i];
      for (std::size_t e = 0; e < ts.size(); ++e) {
        const double next = e + 1 < ts.size() ? ts[e + 1] : t1;
        events.push_back({ts[e], i, inside_at(i, (ts[e] + next) / 2)});
      }
    }
    ledger.classical_ops += ids_.size() + events.size() * (1 + static_cast<std::uint64_t>(std::log2(events.size() + 1)));
    auto accept = [&](double t) -> std::optional<ApproxPoint> {
      ApproxPoint p = piece.at_param(t);
      ledger.classical_ops += ids_.size();
      if (curved::depth_at(p, data_->disks, ids_) >= target_) return p;
      return std::nullopt;
    };
    long start = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) start += inside_at(i, t0);
    if (start >= target_)
      if (auto p = accept(t0)) return p;
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    for (std::size_t e = 0; e < events.size();) {
      std::size_t f = e;
      long here = cur;
      while (f < events.size() && events[f].t - events[e].t <= 1e-12) {
        if (!inside[events[f].circle]) ++here;
        ++f;
      }
      if (here >= target_)
        if (auto p = accept(events[e].t)) return p;
      for (std::size_t g = e; g < f; ++g) {
        const auto& ev = events[g];
        cur += static_cast<long>(ev.inside_after) - static_cast<long>(inside[ev.circle]);
        inside[ev.circle] = ev.inside_after;
      }
      e = f;
    }
    return std::nullopt;
  }

  std::shared_ptr<const DiskData> data_;
  std::vector<int> ids_;
  long target_;
  long covered_;
  std::optional<CurvedCell> region_;
};

}  // namespace

std::unique_ptr<ProblemAdapter> disk_adapter(DiskInstance inst) {
  inst.validate();
  auto data = std::make_shared<DiskData>();
  for (const auto& p : inst.points) data->disks.push_back({p});
  data->inst = std::move(inst);
  std::vector<int> ids(data->disks.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  const long target = data->inst.depth_target;
  return std::make_unique<DiskAdapter>(std::move(data), std::move(ids), target, 0, std::nullopt);
}

}  // namespace rqs::problems
