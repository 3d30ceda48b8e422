#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "kron/integer.hpp"
#include "kron/partition.hpp"
#include "kron/reduced.hpp"
#include "kron/tableaux.hpp"

namespace kron {

// ---------------------------------------------------------------------------
// Coloured partitions

enum class Decoration { plain = 0, bar = 1, doublebar = 2 };

/// A decorated part. Decorations tell parts apart; the weight is the level
/// whatever the decoration.
struct ColouredPart {
  int level = 1;
  Decoration decoration = Decoration::plain;

  int weight() const { return level; }
  /// "2", "2~" (bar) or "2~~" (doublebar).
  std::string str() const;
  static ColouredPart parse(std::string_view text);

  friend bool operator==(const ColouredPart&, const ColouredPart&) = default;
  friend auto operator<=>(const ColouredPart&, const ColouredPart&) = default;
};

/// Multiset of coloured parts, kept largest first under the order by level
/// then plain < bar < doublebar, so "2~~,2,1~,1".
class ColouredPartition {
 public:
  ColouredPartition() = default;
  explicit ColouredPartition(std::vector<ColouredPart> parts);

  /// Comma-separated parts, e.g. "2~~,1"; the empty string is empty.
  static ColouredPartition parse(std::string_view text);
  std::string str() const;

  const std::vector<ColouredPart>& parts() const { return parts_; }
  int weight() const;
  int multiplicity(const ColouredPart& part) const;

  friend bool operator==(const ColouredPartition&, const ColouredPartition&) = default;
  friend auto operator<=>(const ColouredPartition&, const ColouredPartition&) = default;

 private:
  std::vector<ColouredPart> parts_;
};

/// {1~} ∪ {l, l~ : 2 <= l <= a} ∪ {(a+1)~}, a >= 1; 2a parts.
std::vector<ColouredPart> alphabet_B(int a);

/// {1, 1~} ∪ {l, l~, l~~ : 2 <= l <= a-1} ∪ {a, a~, a+1}, a >= 2; 3a-1 parts.
std::vector<ColouredPart> alphabet_C(int a);

/// Every multiset over `alphabet` of total weight `weight`, each once, in
/// canonical order.
std::vector<ColouredPartition> enumerate_coloured(const std::vector<ColouredPart>& alphabet,
                                                  int weight);

// ---------------------------------------------------------------------------
// The three families

/// gbar^{(k)}_{(k^a),(k^b)}. For b == a this is [x^k] F_a; otherwise the
/// value comes from reduced_kron and may throw ScaleExceeded.
Integer family1(int a, int b, int k);

/// gbar^{(k)}_{((k+i)^a),(k^b)}. For b == a: 0 when k < d*i with
/// d = a(a+1)/2, else [x^{k-d*i}] F_a. Otherwise via reduced_kron.
Integer family2(int a, int b, int k, int i);

/// gbar^{(k)}_{(k^{b-1}),(k+i,k^{a-1})}, a >= 1, b >= 1. With b = a+1 and
/// k >= 2j (j = k - i >= 0) this is diag_stable(a, j); everything else goes
/// through reduced_kron.
Integer family3(int a, int b, int k, int i);

/// [x^j] G_a: the stable value of the j-th diagonal of family3(a, a+1, ., .).
Integer diag_stable(int a, int j);

/// The defining reduced Kronecker triples, for cross-checking the fast paths.
Integer family1_reduced(int a, int b, int k, Pathway pathway = Pathway::automatic);
Integer family2_reduced(int a, int b, int k, int i, Pathway pathway = Pathway::automatic);
Integer family3_reduced(int a, int b, int k, int i, Pathway pathway = Pathway::automatic);

// ---------------------------------------------------------------------------
// Bijections

/// A Kronecker tableau together with its type partition.
struct TypedTableau {
  KroneckerTableau tableau;
  Partition type;
};

/// Column assembly for a coloured partition over B_a of weight k. The shape
/// and type are the paddings of (k^a) at the evaluation point, (3k, k^a).
TypedTableau bij_family1(const ColouredPartition& beta, int a);

/// As bij_family1 plus i copies of the columns of shaded height 1..a, for
/// the coefficient gbar^{(K)}_{((K+i)^a),(K^a)} with K = k + a(a+1)i/2.
TypedTableau bij_family2(const ColouredPartition& beta, int a, int i);

/// Column assembly for a coloured partition over C_a of weight j, with
/// k - j - m(1~) - sum m(l~~) filler columns. Shape (3k, k^a), type
/// (2k+j, 2k-j, k^{a-1}). Throws std::invalid_argument when k < 2j.
TypedTableau bij_family3(const ColouredPartition& beta, int a, int k);

/// Reads the column multiplicities of a family-3 tableau of shape
/// (3k, k^a)/alpha back into a coloured partition over C_a. Throws
/// std::invalid_argument on a column outside the catalogue.
ColouredPartition inv_bij_family3(const KroneckerTableau& T, int a, int k);

// ---------------------------------------------------------------------------
// Saturation and monotonicity

enum class FamilyId {
  family1,  ///< gbar^{(k)}_{(k^a),(k^a)}
  family2,  ///< gbar^{(k+di)}_{((k+(d+1)i)^a),((k+di)^a)}, the zero prefix removed
  family3,  ///< diag_stable(a, j)
};

struct SaturationQuery {
  FamilyId family = FamilyId::family1;
  int a = 1;
  int base = 0;  ///< k for families 1 and 2, j for family 3
  int i = 0;     ///< family 2 only
};

/// True iff the coefficient with every indexing partition stretched by s is
/// positive for s = 1..s_max.
bool saturation_check(const SaturationQuery& query, int s_max);

enum class Sweep { vary_k, vary_a };

struct MonotonicityQuery {
  FamilyId family = FamilyId::family1;
  Sweep sweep = Sweep::vary_k;
  int fixed = 0;  ///< a when varying k (or j), k (or j) when varying a
  int i = 0;      ///< family 2 only
  int lo = 0;
  int hi = 0;
};

/// The sequence a monotonicity query looks at. For family 2 with a varying
/// and k fixed the raw coefficients family2(a, a, k, i) are used, which are
/// not expected to be monotone.
std::vector<Integer> monotonicity_sequence(const MonotonicityQuery& query);

/// Weakly increasing over [lo, hi].
bool monotonicity_check(const MonotonicityQuery& query);

}  // namespace kron
