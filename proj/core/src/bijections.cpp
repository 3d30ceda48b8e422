#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "kron/families.hpp"

namespace kron {

namespace {

// A column of height a+1: rows 1..shade are shaded (part of alpha), and
// entries[t] fills row shade+1+t.
struct Column {
  int shade = 0;
  std::vector<int> entries;

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

// Rows above `shade` shaded; `overrides` pins specific rows, the rest hold
// their own index.
Column make_column(int a, int shade, std::map<int, int> overrides = {}) {
  Column col{shade, {}};
  for (int row = shade + 1; row <= a + 1; ++row) {
    auto it = overrides.find(row);
    col.entries.push_back(it == overrides.end() ? row : it->second);
  }
  return col;
}

Column column_B(int a, const ColouredPart& part) {
  const int l = part.level;
  if (part.decoration == Decoration::bar) {
    if (l == a + 1) return make_column(a, a + 1);
    if (l >= 1 && l <= a) return make_column(a, l, {{l + 1, 1}});
  } else if (part.decoration == Decoration::plain && l >= 2 && l <= a) {
    return make_column(a, l);
  }
  throw std::invalid_argument("part " + part.str() + " is not in B_" + std::to_string(a));
}

Column filler_C(int a) { return make_column(a, 1); }

Column column_C(int a, const ColouredPart& part) {
  const int l = part.level;
  switch (part.decoration) {
    case Decoration::plain:
      if (l == a + 1) return make_column(a, a + 1);
      if (l >= 1 && l <= a) return make_column(a, l, {{l + 1, 1}});
      break;
    case Decoration::bar:
      if (l == 1) return make_column(a, 2, {{3, 2}});
      if (l >= 2 && l <= a) return make_column(a, l);
      break;
    case Decoration::doublebar:
      if (l >= 2 && l <= a - 1) return make_column(a, l + 1, {{l + 2, 2}});
      break;
  }
  throw std::invalid_argument("part " + part.str() + " is not in C_" + std::to_string(a));
}

// Columns go left to right by decreasing shade, ties by increasing entries;
// rows 2.. are completed with their own index and row 1 takes what is left
// of the type, in increasing order.
TypedTableau assemble(std::vector<Column> columns, const Partition& shape, const Partition& type) {
  std::sort(columns.begin(), columns.end(), [](const Column& x, const Column& y) {
    if (x.shade != y.shade) return x.shade > y.shade;
    return x.entries < y.entries;
  });
  const int rows = shape.length();
  const int ncols = static_cast<int>(columns.size());
  std::vector<int> alpha_parts(static_cast<std::size_t>(rows), 0);
  for (const Column& col : columns)
    for (int r = 0; r < col.shade && r < rows; ++r) ++alpha_parts[static_cast<std::size_t>(r)];
  const Partition alpha(alpha_parts);
  if (!contains(alpha, shape) || !contains(alpha, type))
    throw std::logic_error("column assembly does not fit the target shape");

  Filling filling(static_cast<std::size_t>(rows));
  std::vector<int> left(static_cast<std::size_t>(type.length()) + 1, 0);
  for (int v = 1; v <= type.length(); ++v) left[static_cast<std::size_t>(v)] = type[v - 1] - alpha[v - 1];
  for (int r = 1; r < rows; ++r) {
    auto& row = filling[static_cast<std::size_t>(r)];
    for (int c = alpha[r]; c < shape[r]; ++c) {
      const int v = c < ncols ? columns[static_cast<std::size_t>(c)]
                                    .entries[static_cast<std::size_t>(r - columns[static_cast<std::size_t>(c)].shade)]
                              : r + 1;
      if (v < 1 || v > type.length() || left[static_cast<std::size_t>(v)] == 0)
        throw std::logic_error("column assembly overflows the type");
      --left[static_cast<std::size_t>(v)];
      row.push_back(v);
    }
  }
  if (rows > 0) {
    auto& first = filling[0];
    for (int v = 1; v <= type.length(); ++v)
      first.insert(first.end(), static_cast<std::size_t>(left[static_cast<std::size_t>(v)]), v);
    if (static_cast<int>(first.size()) != shape[0] - alpha[0])
      throw std::logic_error("column assembly leaves row 1 with the wrong length");
  }
  return {KroneckerTableau{shape, alpha, std::move(filling)}, type};
}

TypedTableau assemble_family12(const ColouredPartition& beta, int a, int i) {
  if (a < 1) throw std::invalid_argument("families 1 and 2 bijections need a >= 1");
  if (i < 0) throw std::invalid_argument("bij_family2: negative i");
  std::vector<Column> columns;
  for (const auto& part : beta.parts()) columns.push_back(column_B(a, part));
  for (int h = 1; h <= a; ++h)
    for (int t = 0; t < i; ++t) columns.push_back(make_column(a, h));
  const int K = beta.weight() + a * (a + 1) / 2 * i;
  const Partition shape_seed = rectangle(K, a);
  const Partition type_seed = rectangle(K + i, a);
  const Partition gamma{K};
  const int n = evaluation_point(type_seed, shape_seed, gamma);
  return assemble(std::move(columns), pad(shape_seed, n), pad(type_seed, n));
}

}  // namespace

TypedTableau bij_family1(const ColouredPartition& beta, int a) { return assemble_family12(beta, a, 0); }

TypedTableau bij_family2(const ColouredPartition& beta, int a, int i) {
  return assemble_family12(beta, a, i);
}

TypedTableau bij_family3(const ColouredPartition& beta, int a, int k) {
  if (a < 2) throw std::invalid_argument("bij_family3 needs a >= 2");
  const int j = beta.weight();
  if (k < 2 * j)
    throw std::invalid_argument("bij_family3 needs k >= 2j (k=" + std::to_string(k) +
                                ", j=" + std::to_string(j) + ")");
  std::vector<Column> columns;
  int fillers = k - j;
  for (const auto& part : beta.parts()) {
    columns.push_back(column_C(a, part));
    if ((part.level == 1 && part.decoration == Decoration::bar) ||
        part.decoration == Decoration::doublebar)
      --fillers;
  }
  for (int t = 0; t < fillers; ++t) columns.push_back(filler_C(a));

  const Partition shape_seed = rectangle(k, a);
  std::vector<int> type_parts{2 * k - j};
  type_parts.insert(type_parts.end(), static_cast<std::size_t>(a - 1), k);
  const Partition type_seed(type_parts);
  const Partition gamma{k};
  const int n = evaluation_point(shape_seed, type_seed, gamma);
  return assemble(std::move(columns), pad(shape_seed, n), pad(type_seed, n));
}

ColouredPartition inv_bij_family3(const KroneckerTableau& T, int a, int k) {
  if (a < 2) throw std::invalid_argument("inv_bij_family3 needs a >= 2");
  if (k < 0) throw std::invalid_argument("inv_bij_family3: negative k");
  const Partition expected_shape = pad(rectangle(k, a), (a + 3) * k);
  if (T.outer != expected_shape)
    throw std::invalid_argument("inv_bij_family3: tableau shape is not (3k, k^a)");
  const Partition& alpha = T.inner;
  if (!contains(alpha, T.outer) || T.rows.size() != static_cast<std::size_t>(T.outer.length()))
    throw std::invalid_argument("inv_bij_family3: malformed tableau");

  std::map<Column, ColouredPart> catalogue;
  for (const auto& part : alphabet_C(a)) catalogue.emplace(column_C(a, part), part);
  const Column filler = filler_C(a);

  std::vector<ColouredPart> parts;
  for (int c = 0; c < alpha[0]; ++c) {
    Column col;
    while (alpha[col.shade] > c) ++col.shade;
    for (int r = col.shade; r < T.outer.length(); ++r)
      col.entries.push_back(T.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - alpha[r])]);
    if (col == filler) continue;
    auto it = catalogue.find(col);
    if (it == catalogue.end())
      throw std::invalid_argument("inv_bij_family3: column " + std::to_string(c + 1) +
                                  " is not in the column catalogue");
    parts.push_back(it->second);
  }
  return ColouredPartition(std::move(parts));
}

}  // namespace kron
