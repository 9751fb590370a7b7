#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "rqs/geom.hpp"

namespace rqs {

/// A point on three or more input lines.
struct PointWitness {
  geom::ExactPoint point;
  std::vector<int> lines;
};

/// Three input points spanning a triangle of twice-area area2.
struct TriangleWitness {
  std::array<int, 3> points{};
  geom::Rat area2;
};

/// A point and the number of input disks containing it.
struct DiskWitness {
  geom::ApproxPoint point;
  int depth = 0;
};

struct TranslationWitness {
  geom::Rat t;
};

/// A pair (i, j) plus whatever the pair check produced: a cutting line or a direction.
struct PairWitness {
  int i = 0;
  int j = 0;
  std::optional<geom::ExactLine> line;
  std::optional<geom::ExactPoint> direction;
};

using Witness = std::variant<PointWitness, TriangleWitness, DiskWitness, TranslationWitness, PairWitness>;

}  // namespace rqs
