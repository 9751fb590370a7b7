#pragma once

#include <cstddef>
#include <vector>

namespace rqs {

/// One region of a decomposition and the input objects relevant inside it.
struct SubproblemSpec {
  int region = -1;           // face / cell id within the decomposition that produced it
  std::vector<int> objects;  // local object ids (indices into the parent problem's objects)
  long residual_target = 0;  // only meaningful for depth-counting problems
  int depth = 0;

  std::size_t size() const { return objects.size(); }
};

}  // namespace rqs
