#include "kron/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "kron/series.hpp"

namespace kron {

namespace {

void require_non_negative(std::initializer_list<int> values, const char* what) {
  for (int v : values)
    if (v < 0) throw std::invalid_argument(std::string(what) + ": arguments must be non-negative");
}

int triangular(int a) { return a * (a + 1) / 2; }

Integer f_coefficient(int a, int k) {
  if (k < 0) return 0;
  return F_series(a, k)[k];
}

}  // namespace

std::string ColouredPart::str() const {
  std::string out = std::to_string(level);
  if (decoration == Decoration::bar) out += "~";
  if (decoration == Decoration::doublebar) out += "~~";
  return out;
}

ColouredPart ColouredPart::parse(std::string_view text) {
  std::size_t tildes = 0;
  while (!text.empty() && text.back() == '~') {
    text.remove_suffix(1);
    ++tildes;
  }
  int level = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), level);
  if (ec != std::errc{} || ptr != text.data() + text.size() || level < 1 || tildes > 2)
    throw std::invalid_argument("malformed coloured part '" + std::string(text) + "'");
  return {level, static_cast<Decoration>(tildes)};
}

ColouredPartition::ColouredPartition(std::vector<ColouredPart> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p.level < 1) throw std::invalid_argument("coloured parts must have positive level");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

ColouredPartition ColouredPartition::parse(std::string_view text) {
  std::vector<ColouredPart> parts;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    parts.push_back(ColouredPart::parse(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ColouredPartition(std::move(parts));
}

std::string ColouredPartition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += parts_[i].str();
  }
  return out;
}

int ColouredPartition::weight() const {
  int w = 0;
  for (const auto& p : parts_) w += p.weight();
  return w;
}

int ColouredPartition::multiplicity(const ColouredPart& part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<ColouredPart> alphabet_B(int a) {
  if (a < 1) throw std::invalid_argument("alphabet_B needs a >= 1");
  std::vector<ColouredPart> out{{1, Decoration::bar}};
  for (int l = 2; l <= a; ++l) {
    out.push_back({l, Decoration::plain});
    out.push_back({l, Decoration::bar});
  }
  out.push_back({a + 1, Decoration::bar});
  return out;
}

std::vector<ColouredPart> alphabet_C(int a) {
  if (a < 2) throw std::invalid_argument("alphabet_C needs a >= 2");
  std::vector<ColouredPart> out{{1, Decoration::plain}, {1, Decoration::bar}};
  for (int l = 2; l <= a - 1; ++l) {
    out.push_back({l, Decoration::plain});
    out.push_back({l, Decoration::bar});
    out.push_back({l, Decoration::doublebar});
  }
  out.push_back({a, Decoration::plain});
  out.push_back({a, Decoration::bar});
  out.push_back({a + 1, Decoration::plain});
  return out;
}

std::vector<ColouredPartition> enumerate_coloured(const std::vector<ColouredPart>& alphabet,
                                                  int weight) {
  if (weight < 0) throw std::invalid_argument("enumerate_coloured: negative weight");
  std::vector<ColouredPart> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ColouredPartition> out;
  std::vector<ColouredPart> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (idx == sorted.size()) return;
    const ColouredPart& part = sorted[idx];
    const std::size_t mark = current.size();
    for (int used = 0; used * part.weight() <= remaining; ++used) {
      rec(idx + 1, remaining - used * part.weight());
      current.push_back(part);
    }
    current.resize(mark);
  };
  rec(0, weight);
  std::sort(out.begin(), out.end());
  return out;
}

Integer family1_reduced(int a, int b, int k, Pathway pathway) {
  require_non_negative({a, b, k}, "family1");
  return reduced_kron(rectangle(k, a), rectangle(k, b), Partition{k}, pathway);
}

Integer family2_reduced(int a, int b, int k, int i, Pathway pathway) {
  require_non_negative({a, b, k, i}, "family2");
  return reduced_kron(rectangle(k + i, a), rectangle(k, b), Partition{k}, pathway);
}

Integer family3_reduced(int a, int b, int k, int i, Pathway pathway) {
  require_non_negative({a, b, k, i}, "family3");
  if (a < 1 || b < 1) throw std::invalid_argument("family3 needs a >= 1 and b >= 1");
  std::vector<int> second{k + i};
  second.insert(second.end(), static_cast<std::size_t>(a - 1), k);
  return reduced_kron(rectangle(k, b - 1), Partition(std::move(second)), Partition{k}, pathway);
}

Integer family1(int a, int b, int k) {
  require_non_negative({a, b, k}, "family1");
  if (b != a) return family1_reduced(a, b, k);
  if (a == 0) return k == 0 ? 1 : 0;
  return f_coefficient(a, k);
}

Integer family2(int a, int b, int k, int i) {
  require_non_negative({a, b, k, i}, "family2");
  if (b != a) return family2_reduced(a, b, k, i);
  if (a == 0) return k == 0 ? 1 : 0;
  const int shift = triangular(a) * i;
  return k < shift ? Integer(0) : f_coefficient(a, k - shift);
}

Integer family3(int a, int b, int k, int i) {
  require_non_negative({a, b, k, i}, "family3");
  if (a < 1 || b < 1) throw std::invalid_argument("family3 needs a >= 1 and b >= 1");
  const int j = k - i;
  if (b == a + 1 && j >= 0 && k >= 2 * j) return diag_stable(a, j);
  return family3_reduced(a, b, k, i);
}

Integer diag_stable(int a, int j) {
  if (j < 0) throw std::invalid_argument("diag_stable: negative j");
  return G_series(a, j)[j];
}

namespace {

Integer stretched(const SaturationQuery& q, int s) {
  switch (q.family) {
    case FamilyId::family1:
      return family1(q.a, q.a, s * q.base);
    case FamilyId::family2:
      return family2(q.a, q.a, s * (q.base + triangular(q.a) * q.i), s * q.i);
    case FamilyId::family3:
      return diag_stable(q.a, s * q.base);
  }
  return 0;
}

Integer sequence_term(const MonotonicityQuery& q, int t) {
  const bool vary_k = q.sweep == Sweep::vary_k;
  const int a = vary_k ? q.fixed : t;
  const int x = vary_k ? t : q.fixed;
  switch (q.family) {
    case FamilyId::family1:
      return family1(a, a, x);
    case FamilyId::family2:
      return vary_k ? family2(a, a, x + triangular(a) * q.i, q.i) : family2(a, a, x, q.i);
    case FamilyId::family3:
      return diag_stable(a, x);
  }
  return 0;
}

void validate(FamilyId family, int a, int i, int base) {
  if (base < 0 || i < 0) throw std::invalid_argument("family parameters must be non-negative");
  if (family == FamilyId::family3 && a < 1)
    throw std::invalid_argument("family 3 diagonals need a >= 1");
  if (family != FamilyId::family3 && a < 0)
    throw std::invalid_argument("families 1 and 2 need a >= 0");
  if (family != FamilyId::family2 && i != 0)
    throw std::invalid_argument("the shift i only applies to family 2");
}

}  // namespace

bool saturation_check(const SaturationQuery& query, int s_max) {
  if (s_max < 1) throw std::invalid_argument("saturation_check: s_max must be positive");
  validate(query.family, query.a, query.i, query.base);
  for (int s = 1; s <= s_max; ++s)
    if (stretched(query, s) <= 0) return false;
  return true;
}

std::vector<Integer> monotonicity_sequence(const MonotonicityQuery& query) {
  if (query.hi < query.lo) throw std::invalid_argument("monotonicity range is empty");
  const bool vary_k = query.sweep == Sweep::vary_k;
  validate(query.family, vary_k ? query.fixed : query.lo, query.i, vary_k ? query.lo : query.fixed);
  std::vector<Integer> out;
  for (int t = query.lo; t <= query.hi; ++t) out.push_back(sequence_term(query, t));
  return out;
}

bool monotonicity_check(const MonotonicityQuery& query) {
  const auto seq = monotonicity_sequence(query);
  return std::is_sorted(seq.begin(), seq.end());
}

}  // namespace kron
