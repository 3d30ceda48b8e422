#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

/// Row-major filling of a skew shape: rows[r] lists the entries of row r of
/// outer/inner from left to right (rows of zero length are present and empty).
using Filling = std::vector<std::vector<int>>;

/// Search parameters for semistandard fillings of outer/inner.
struct SkewFillingSpec {
  Partition outer;
  Partition inner;
  /// content[v-1] = number of entries equal to v.
  std::vector<int> content;
  /// Offsets for the lattice condition on the reverse reading word; an empty
  /// partition gives the classical Yamanouchi condition.
  Partition lattice_offset;
};

/// Enumerates semistandard fillings of outer/inner with the given content whose
/// reverse reading word (rows top to bottom, each read right to left) is an
/// offset-lattice word. Cells are assigned in reading-word order, so every
/// partial assignment is a prefix and the lattice condition prunes directly.
///
/// `row_done(r, partial)` runs once row r has been filled (rows 0..r of
/// `partial` are final); returning false abandons the branch. `visit` receives
/// each complete filling; returning false stops the whole search.
class SkewFiller {
 public:
  using RowHook = std::function<bool(int, const Filling&)>;
  using Visitor = std::function<bool(const Filling&)>;

  explicit SkewFiller(SkewFillingSpec spec);

  void run(const Visitor& visit, const RowHook& row_done = {}) const;
  std::uint64_t count(const RowHook& row_done = {}) const;

 private:
  SkewFillingSpec spec_;
  bool feasible_ = true;
};

}  // namespace kron
