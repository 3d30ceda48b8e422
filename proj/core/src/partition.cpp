#include "kron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace kron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!contains(inner, outer))
    throw std::invalid_argument("skew shape requires inner ⊆ outer");
}

Partition rectangle(int width, int height) {
  if (width < 0 || height < 0) throw std::invalid_argument("negative rectangle side");
  if (width == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda)
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

Partition pad(const Partition& alpha, int n) {
  if (n < padding_floor(alpha))
    throw std::invalid_argument("pad: n=" + std::to_string(n) + " is below |alpha|+alpha_1=" +
                                std::to_string(padding_floor(alpha)) + " for alpha=(" +
                                alpha.str() + ")");
  std::vector<int> parts{n - alpha.size()};
  parts.insert(parts.end(), alpha.begin(), alpha.end());
  return Partition(std::move(parts));
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool is_alpha_lattice(std::span<const int> word, const Partition& alpha) {
  int top = alpha.length();
  for (int v : word) {
    if (v <= 0) throw std::invalid_argument("lattice words take positive entries");
    top = std::max(top, v);
  }
  // count[v] holds alpha_v plus the occurrences of v so far (1-based).
  std::vector<int> count(static_cast<std::size_t>(top) + 2, 0);
  for (int v = 1; v <= top; ++v) count[static_cast<std::size_t>(v)] = alpha[v - 1];
  for (int v = 1; v < top; ++v)
    if (count[static_cast<std::size_t>(v)] < count[static_cast<std::size_t>(v) + 1]) return false;
  for (int v : word) {
    auto& c = count[static_cast<std::size_t>(v)];
    ++c;
    if (v > 1 && c > count[static_cast<std::size_t>(v) - 1]) return false;
  }
  return true;
}

Integer z_weight(const Partition& rho) {
  std::map<int, int> mult;
  for (int part : rho) ++mult[part];
  Integer z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_length) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  const int cap = max_length.value_or(n);
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= cap) return;
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace kron
