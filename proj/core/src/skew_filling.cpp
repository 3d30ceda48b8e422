#include "kron/skew_filling.hpp"

#include <numeric>
#include <stdexcept>

namespace kron {

namespace {

struct Search {
  const SkewFillingSpec& spec;
  const SkewFiller::Visitor& visit;
  const SkewFiller::RowHook& row_done;
  int maxv;
  std::vector<int> used;   // 1-based counts placed so far
  std::vector<int> left;   // 1-based counts still to place
  std::vector<int> offset; // 1-based lattice offsets
  std::vector<std::vector<int>> below;  // below[r][c]: skew cells under (r,c)
  Filling rows;
  bool stopped = false;

  void cell(int r, int c) {
    if (stopped) return;
    const Partition& outer = spec.outer;
    const Partition& inner = spec.inner;
    if (c < inner[r]) {
      if (row_done && !row_done(r, rows)) return;
      if (r + 1 >= outer.length()) {
        if (!visit(rows)) stopped = true;
        return;
      }
      cell(r + 1, outer[r + 1] - 1);
      return;
    }
    const int pos = c - inner[r];
    int hi = (c + 1 < outer[r]) ? rows[r][pos + 1] : maxv;
    hi = std::min(hi, maxv - below[r][c]);
    int lo = 1;
    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1])
      lo = rows[r - 1][c - inner[r - 1]] + 1;
    for (int v = lo; v <= hi && !stopped; ++v) {
      if (left[v] == 0) continue;
      if (v > 1 && used[v] + offset[v] + 1 > used[v - 1] + offset[v - 1]) continue;
      rows[r][pos] = v;
      ++used[v];
      --left[v];
      cell(r, c - 1);
      --used[v];
      ++left[v];
    }
  }
};

}  // namespace

SkewFiller::SkewFiller(SkewFillingSpec spec) : spec_(std::move(spec)) {
  if (!contains(spec_.inner, spec_.outer))
    throw std::invalid_argument("skew filling requires inner ⊆ outer");
  for (int v : spec_.content)
    if (v < 0) throw std::invalid_argument("negative content");
  const int total = std::accumulate(spec_.content.begin(), spec_.content.end(), 0);
  feasible_ = total == spec_.outer.size() - spec_.inner.size();
}

void SkewFiller::run(const Visitor& visit, const RowHook& row_done) const {
  if (!feasible_) return;
  const Partition& outer = spec_.outer;
  const Partition& inner = spec_.inner;
  if (outer.length() == 0) {
    visit(Filling{});
    return;
  }
  const int maxv = static_cast<int>(spec_.content.size());
  Search s{spec_, visit, row_done, maxv, {}, {}, {}, {}, {}};
  s.used.assign(static_cast<std::size_t>(maxv) + 2, 0);
  s.left.assign(static_cast<std::size_t>(maxv) + 2, 0);
  s.offset.assign(static_cast<std::size_t>(maxv) + 2, 0);
  for (int v = 1; v <= maxv; ++v) {
    s.left[v] = spec_.content[v - 1];
    s.offset[v] = spec_.lattice_offset[v - 1];
  }
  const int rows = outer.length();
  s.rows.resize(rows);
  s.below.resize(rows);
  for (int r = 0; r < rows; ++r) {
    s.rows[r].assign(static_cast<std::size_t>(outer[r] - inner[r]), 0);
    s.below[r].assign(static_cast<std::size_t>(outer[r]), 0);
    for (int c = inner[r]; c < outer[r]; ++c)
      for (int r2 = r + 1; r2 < rows && c < outer[r2]; ++r2)
        if (c >= inner[r2]) ++s.below[r][c];
  }
  s.cell(0, outer[0] - 1);
}

std::uint64_t SkewFiller::count(const RowHook& row_done) const {
  std::uint64_t n = 0;
  run([&](const Filling&) { ++n; return true; }, row_done);
  return n;
}

}  // namespace kron
