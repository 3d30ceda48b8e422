#include "kronfam/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kron/characters.hpp"
#include "kron/config.hpp"
#include "kron/errors.hpp"
#include "kron/families.hpp"
#include "kron/plane_partitions.hpp"
#include "kron/quasipoly.hpp"
#include "kron/reduced.hpp"
#include "kron/series.hpp"
#include "kron/tableaux.hpp"
#include "kronfam/reference_values.hpp"

namespace kronfam {

using kron::Integer;
using kron::Partition;

namespace {

template <typename Seq>
std::string join(const Seq& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  return out.str();
}

// Evaluates f(k) for k in [lo, hi]; cells no pathway reaches become markers.
std::string sweep(int lo, int hi, const std::function<Integer(int)>& f) {
  std::vector<std::string> cells;
  for (int k = lo; k <= hi; ++k) {
    try {
      cells.push_back(f(k).str());
    } catch (const kron::ScaleExceeded&) {
      cells.push_back(kScaleExceeded);
    }
  }
  return join(cells);
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void expect(std::string description, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    report_.checks.push_back({std::move(description), std::move(expected), std::move(actual), pass});
  }

  void expect_true(std::string description, bool ok, std::string detail = "") {
    report_.checks.push_back({std::move(description), "true",
                              ok ? std::string("true") : "false" + (detail.empty() ? "" : ": " + detail),
                              ok});
  }

  // Runs body, turning an exception into a failed check.
  void guarded(const std::string& description, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.checks.push_back({description, "no error", std::string("error: ") + e.what(), false});
    }
  }

  RunReport take() { return std::move(report_); }

 private:
  RunReport report_;
};

// ---------------------------------------------------------------------------

RunReport suite_tables() {
  Recorder rec("tables");
  for (int a = 0; a <= 5; ++a)
    rec.guarded("family 1 grid", [&] {
      rec.expect("family 1 grid row a=" + std::to_string(a) + ", k=0..12", join(reference::kFamily1Grid[a]),
                 sweep(0, 12, [&](int k) { return kron::family1(a, a, k); }));
    });

  // The last two published family 2 rows carry the labels 4 and 5 but their
  // zero prefixes have lengths 9 and 12, i.e. 3i with i = 3 and 4.
  for (const auto& row : reference::kFamily2Grid) {
    const int i = row.label <= 2 ? row.label : row.label - 1;
    const std::string what = row.label == i ? "family 2 grid row i=" + std::to_string(i)
                                            : "family 2 grid row printed as i=" + std::to_string(row.label) +
                                                  ", compared with i=" + std::to_string(i);
    rec.guarded(what, [&] {
      rec.expect(what + ", k=0..16", join(row.values),
                 sweep(0, 16, [&](int k) { return kron::family2(2, 2, k, i); }));
    });
  }
  rec.guarded("family 2 zero prefix", [&] {
    std::vector<std::string> bad;
    for (int i = 0; i <= 5; ++i)
      for (int k = 0; k <= 16; ++k)
        if ((kron::family2(2, 2, k, i) == 0) != (k < 3 * i))
          bad.push_back("(i=" + std::to_string(i) + ",k=" + std::to_string(k) + ")");
    rec.expect("family2(2,2,k,i) = 0 exactly when k < 3i, i=0..5, k=0..16", "", join(bad));
  });
  rec.guarded("family 2 reduced pathway", [&] {
    for (int i = 0; i <= 4; ++i)
      rec.expect("family2(2,2,k,i) i=" + std::to_string(i) + " via reduced_kron, k=0..16",
                 sweep(0, 16, [&](int k) { return kron::family2(2, 2, k, i); }),
                 sweep(0, 16, [&](int k) { return kron::family2_reduced(2, 2, k, i); }));
  });

  for (int i = 0; i <= 5; ++i)
    rec.guarded("family 3 grid", [&] {
      rec.expect("family 3 grid row i=" + std::to_string(i) + ", k=0..13", join(reference::kFamily3Grid[i]),
                 sweep(0, 13, [&](int k) { return k < i ? Integer(0) : kron::family3(2, 3, k, i); }));
    });
  rec.guarded("family 3 diagonal", [&] {
    rec.expect("family 3 stable diagonal = diag_stable(2, j), j=0..5", join(reference::kFamily3Diagonal),
               sweep(0, 5, [](int j) { return kron::diag_stable(2, j); }));
    std::vector<std::string> expected, actual;
    for (int j = 0; j <= 5; ++j)
      for (int i = j; i <= 5; ++i) {
        expected.push_back(std::to_string(reference::kFamily3Grid[i][i + j]));
        try {
          actual.push_back(kron::family3_reduced(2, 3, i + j, i).str());
        } catch (const kron::ScaleExceeded&) {
          actual.push_back(kScaleExceeded);
        }
      }
    rec.expect("family 3 stable cells (k >= 2j) via reduced_kron", join(expected), join(actual));
  });
  return rec.take();
}

// ---------------------------------------------------------------------------

RunReport suite_oracle() {
  Recorder rec("oracle");
  const int cap = kron::oracle_cap();

  for (int a = 1; a <= 2; ++a)
    for (int k = 0; k <= 3; ++k) {
      const Partition alpha = kron::rectangle(k, a);
      const Partition gamma = k ? Partition{k} : Partition{};
      const int n = kron::stability_threshold(alpha, alpha, gamma);
      if (!kron::oracle_allows(n)) continue;
      rec.guarded("oracle family 1", [&] {
        rec.expect("family1(a,a,k) a=" + std::to_string(a) + ", k=" + std::to_string(k) +
                       " by the character oracle at n=" + std::to_string(n),
                   std::to_string(reference::kFamily1Grid[a][k]),
                   kron::padded_kronecker(alpha, alpha, gamma, n, kron::Pathway::oracle).str());
      });
    }

  for (int n = 2; n <= 10 && kron::oracle_allows(n); ++n)
    rec.guarded("two-row rule", [&] {
      long checked = 0;
      std::vector<std::string> bad;
      for (int p = 1; p <= 3 && 2 * p <= n; ++p)
        for (const Partition& lambda : kron::partitions_of(n)) {
          if (!kron::two_row_rule_applies(p, lambda)) continue;
          for (const Partition& nu : kron::partitions_of(n)) {
            ++checked;
            const Integer rule(kron::two_row_multiplicity(n, p, lambda, nu));
            if (rule != kron::kronecker_coeff(Partition{n - p, p}, lambda, nu))
              bad.push_back("p=" + std::to_string(p) + " lambda=" + lambda.str() + " nu=" + nu.str());
          }
        }
      rec.expect("two-row rule = character oracle, n=" + std::to_string(n) + " (" +
                     std::to_string(checked) + " triples)",
                 "", join(bad));
    });

  const int n_hi = std::min(14, cap);
  std::vector<Partition> small;
  for (int m = 0; m <= 3; ++m)
    for (const Partition& p : kron::partitions_of(m)) small.push_back(p);
  std::mt19937 rng(20160915);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  int tried = 0;
  std::vector<std::string> moving;
  for (int t = 0; t < 50; ++t) {
    const Partition& a = small[pick(rng)];
    const Partition& b = small[pick(rng)];
    const Partition& c = small[pick(rng)];
    const int lo = kron::evaluation_point(a, b, c);
    if (lo > n_hi || !kron::oracle_allows(n_hi)) continue;
    ++tried;
    try {
      const auto seq = kron::stabilization_sequence(a, b, c, lo, n_hi, kron::Pathway::oracle);
      if (std::adjacent_find(seq.begin(), seq.end(), std::not_equal_to<>()) != seq.end())
        moving.push_back("(" + a.str() + "|" + b.str() + "|" + c.str() + ")");
    } catch (const std::exception& e) {
      moving.push_back(std::string("error ") + e.what());
    }
  }
  if (tried > 0)
    rec.expect("stabilization constant from the threshold to n=" + std::to_string(n_hi) + " (" +
                   std::to_string(tried) + " random triples)",
               "", join(moving));
  return rec.take();
}

// ---------------------------------------------------------------------------

// Distinct, valid images and their number, for every coloured partition in betas.
template <typename Map>
std::pair<std::size_t, std::string> certify(const std::vector<kron::ColouredPartition>& betas, Map map) {
  std::set<kron::KroneckerTableau> images;
  std::string problem;
  for (const auto& beta : betas) {
    const kron::TypedTableau tt = map(beta);
    const auto& T = tt.tableau;
    if (!kron::is_kronecker_tableau(T, T.outer, tt.type, T.inner))
      problem = "invalid image of (" + beta.str() + ")";
    images.insert(T);
  }
  if (images.size() != betas.size()) problem = "not injective";
  return {images.size(), problem};
}

RunReport suite_bijections() {
  Recorder rec("bijections");
  for (int a = 1; a <= 3; ++a)
    rec.guarded("family 1 bijection", [&] {
      std::vector<std::string> expected, actual, problems;
      for (int k = 0; k <= 8; ++k) {
        const auto betas = kron::enumerate_coloured(kron::alphabet_B(a), k);
        auto [count, problem] = certify(betas, [&](const auto& b) { return kron::bij_family1(b, a); });
        expected.push_back(kron::family1(a, a, k).str());
        actual.push_back(std::to_string(count));
        if (!problem.empty()) problems.push_back("k=" + std::to_string(k) + " " + problem);
      }
      rec.expect("Family 1 bijection a=" + std::to_string(a) + ", k=0..8: distinct valid images",
                 join(expected), join(actual));
      rec.expect("Family 1 bijection a=" + std::to_string(a) + ": validity and injectivity", "",
                 join(problems));
    });

  for (int a = 1; a <= 3; ++a)
    for (int i = 1; i <= 2; ++i)
      rec.guarded("family 2 bijection", [&] {
        std::vector<std::string> expected, actual, problems;
        for (int k = 0; k <= 6; ++k) {
          const auto betas = kron::enumerate_coloured(kron::alphabet_B(a), k);
          auto [count, problem] = certify(betas, [&](const auto& b) { return kron::bij_family2(b, a, i); });
          const int shift = a * (a + 1) / 2 * i;
          expected.push_back(kron::family2(a, a, k + shift, i).str());
          actual.push_back(std::to_string(count));
          if (!problem.empty()) problems.push_back("k=" + std::to_string(k) + " " + problem);
        }
        const std::string tag = "a=" + std::to_string(a) + ", i=" + std::to_string(i);
        rec.expect("Family 2 bijection " + tag + ", k=0..6: distinct valid images", join(expected),
                   join(actual));
        rec.expect("Family 2 bijection " + tag + ": validity and injectivity", "", join(problems));
      });

  for (int a = 2; a <= 3; ++a)
    rec.guarded("family 3 bijection", [&] {
      std::vector<std::string> expected, actual, problems;
      for (int j = 0; j <= 4; ++j) {
        const int k = 2 * j;
        const auto betas = kron::enumerate_coloured(kron::alphabet_C(a), j);
        auto [count, problem] = certify(betas, [&](const auto& b) { return kron::bij_family3(b, a, k); });
        for (const auto& beta : betas)
          if (kron::inv_bij_family3(kron::bij_family3(beta, a, k).tableau, a, k) != beta)
            problem = "roundtrip fails on (" + beta.str() + ")";
        expected.push_back(kron::diag_stable(a, j).str());
        actual.push_back(std::to_string(count));
        if (!problem.empty()) problems.push_back("j=" + std::to_string(j) + " " + problem);
      }
      rec.expect("Family 3 bijection a=" + std::to_string(a) + ", j=0..4, k=2j: distinct valid images",
                 join(expected), join(actual));
      rec.expect("Family 3 bijection a=" + std::to_string(a) + ": validity, injectivity, roundtrip", "",
                 join(problems));
    });

  rec.guarded("Family 3 worked example", [&] {
    const auto beta = kron::ColouredPartition::parse("2~~,1");
    const auto tt = kron::bij_family3(beta, 3, 7);
    const kron::Filling figure{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4},
                               {1, 2, 2, 2, 2, 2},
                               {3, 3, 3, 3, 3, 3},
                               {2, 4, 4, 4, 4, 4, 4}};
    rec.expect("Family 3 worked example a=3, j=3, k=7, beta=(2~~,1): alpha", "5,1,1",
               tt.tableau.inner.str());
    rec.expect_true("Family 3 worked example: every cell as printed", tt.tableau.rows == figure);
    rec.expect("Family 3 worked example: inverse", "2~~,1",
               kron::inv_bij_family3(tt.tableau, 3, 7).str());
  });

  // The printed row 1 of this figure ends 2,3, which would put four 3's in a
  // tableau of type (9,3,3,3)/(2,1); rows 2..4 are checked as printed and
  // row 1 against the content it must carry.
  rec.guarded("Family 1 worked example", [&] {
    const auto tt = kron::bij_family1(kron::ColouredPartition::parse("2,1~"), 3);
    const auto& rows = tt.tableau.rows;
    rec.expect("Family 1 worked example a=3, beta=(2,1~): shape/alpha/type",
               "9,3,3,3 / 2,1 / 9,3,3,3",
               tt.tableau.outer.str() + " / " + tt.tableau.inner.str() + " / " + tt.type.str());
    rec.expect_true("Family 1 worked example: rows 2..4 as printed",
                    rows.size() == 4 && rows[1] == std::vector<int>{1, 2} &&
                        rows[2] == std::vector<int>{3, 3, 3} && rows[3] == std::vector<int>{4, 4, 4});
    rec.expect("Family 1 worked example: row 1", "1,1,1,1,1,1,2", join(rows[0]));
  });
  return rec.take();
}

// ---------------------------------------------------------------------------

RunReport suite_planepartitions() {
  Recorder rec("planepartitions");
  rec.guarded("MacMahon histograms", [&] {
    std::vector<std::string> bad;
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) {
          const int N = r * s * t;
          std::vector<Integer> histogram(static_cast<std::size_t>(N) + 1, 0);
          kron::for_each_pp(r, s, t, [&](const kron::PlanePartition& pp) {
            ++histogram[static_cast<std::size_t>(pp.weight())];
            return true;
          });
          if (histogram != kron::macmahon_series(r, s, t, N).coefficients())
            bad.push_back(std::to_string(r) + "x" + std::to_string(s) + "x" + std::to_string(t));
        }
    rec.expect("enumerated plane partitions match MacMahon, r,s,t <= 4", "", join(bad));
  });
  rec.guarded("box series", [&] {
    std::vector<std::string> bad;
    const int N = 20;
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s)
        for (int t : {N, N + 5})
          if (kron::box_series(r, s, N) != kron::macmahon_series(r, s, t, N))
            bad.push_back(std::to_string(r) + "x" + std::to_string(s) + " t=" + std::to_string(t));
    rec.expect("box_series = macmahon_series for t >= N, N=20", "", join(bad));
    const auto box = kron::box_series(2, 2, 12);
    rec.expect("box_series(2,2) = family 1 grid row a=2", join(reference::kFamily1Grid[2]), join(box.coefficients()));
  });
  rec.guarded("count_pp", [&] {
    std::vector<std::string> bad;
    for (int r = 1; r <= 3; ++r)
      for (int s = 1; s <= 3; ++s) {
        const auto box = kron::box_series(r, s, 12);
        for (int k = 0; k <= 12; ++k)
          if (kron::count_pp(k, r, s) != box[k])
            bad.push_back(std::to_string(r) + "x" + std::to_string(s) + " k=" + std::to_string(k));
      }
    rec.expect("count_pp = box_series coefficients, r,s <= 3, k <= 12", "", join(bad));
  });
  rec.guarded("lemma", [&] {
    const int N = 100;
    for (int a = 2; a <= 5; ++a) {
      const auto& h = kron::H_series(a, N).coefficients();
      const auto& g = kron::G_series(a, N).coefficients();
      rec.expect_true("lemma2_transform(H_" + std::to_string(a) + ") = G_" + std::to_string(a) + ", n <= 100",
                      kron::lemma2_transform(h) == g);
      rec.expect_true("r_n = q_n - q_{n-1} - q_{n-2} + q_{n-3} recovers H_" + std::to_string(a),
                      kron::lemma2_inverse(g) == h);
      const kron::IntegerSeries lhs =
          kron::G_series(a, 60) * kron::IntPolynomial({1, -1, -1, 1});
      rec.expect_true("(1-x)(1-x^2) G_" + std::to_string(a) + " = H_" + std::to_string(a) + " up to x^60",
                      lhs == kron::H_series(a, 60));
    }
  });
  rec.guarded("convolution", [&] {
    for (int a = 2; a <= 5; ++a) {
      std::vector<Integer> conv;
      for (int j = 0; j <= 20; ++j) conv.push_back(kron::family3_convolution(a, j));
      const auto g = kron::G_series(a, 20);
      rec.expect("plane-partition convolution = G_" + std::to_string(a) + ", j <= 20",
                 join(g.coefficients()), join(conv));
    }
  });
  return rec.take();
}

// ---------------------------------------------------------------------------

template <typename Table>
std::string residues_of(const Table& table) {
  std::vector<std::string> rows;
  for (const auto& row : table) rows.push_back(join(row));
  return join(rows);
}

std::string residues_of(const kron::Quasipolynomial& qp) {
  std::vector<std::string> rows;
  for (const auto& r : qp.residues) {
    std::vector<std::string> coeffs;
    for (const auto& c : r) {
      const std::string s = kron::to_fraction_string(c);
      coeffs.push_back(s.size() > 2 && s.substr(s.size() - 2) == "/1" ? s.substr(0, s.size() - 2) : s);
    }
    rows.push_back(join(coeffs));
  }
  return join(rows);
}

RunReport suite_quasipoly() {
  Recorder rec("quasipoly");
  rec.guarded("P_2", [&] {
    const auto fq = kron::family_quasipolynomial(kron::QuasiFamily::family1, 2);
    std::map<int, int> expected{{2, 2}, {3, 3}, {6, 4}};
    rec.expect_true("P_2 = Phi_2^2 Phi_3^3 Phi_6^4",
                    fq.numerator.cyclotomic == expected && fq.numerator.sign == 1);
    const auto product = kron::F_series(2, 40) * kron::IntPolynomial({1, 0, 0, 0, 0, 0, -1}).pow(4);
    std::vector<Integer> head(product.coefficients().begin(), product.coefficients().end());
    std::vector<Integer> poly = fq.numerator.poly.coefficients();
    poly.resize(head.size(), 0);
    rec.expect_true("P_2 = F_2 (1-x^6)^4", poly == head);
  });
  rec.guarded("Family 1 example", [&] {
    const auto fq = kron::family_quasipolynomial(kron::QuasiFamily::family1, 2);
    rec.expect("family1(2,2,k) quasipolynomial, residues mod 6", residues_of(reference::kFamily1A2),
               residues_of(fq.qp));
    rec.expect("family1(2,2,k) minimal period", "6", std::to_string(kron::minimal_period(fq.qp)));
  });
  rec.guarded("Family 3 example", [&] {
    const auto fq = kron::family_quasipolynomial(kron::QuasiFamily::family3, 2);
    rec.expect("diag_stable(2,j) quasipolynomial, residues mod 6", residues_of(reference::kFamily3A2),
               residues_of(fq.qp));
    rec.expect("diag_stable(2,j) minimal period", "6", std::to_string(kron::minimal_period(fq.qp)));
  });
  for (int a = 1; a <= 4; ++a)
    rec.guarded("degrees", [&] {
      const int ell = kron::lcm_upto(a + 1);
      const auto f = kron::family_quasipolynomial(kron::QuasiFamily::family1, a);
      const auto g = kron::family_quasipolynomial(kron::QuasiFamily::family3, a);
      const std::string tag = std::to_string(a);
      rec.expect("deg P_" + tag + " = 2a*l - a(a+2)", std::to_string(2 * a * ell - a * (a + 2)),
                 std::to_string(f.numerator.poly.degree()));
      rec.expect("deg Q_" + tag + " = l(3a-1) - 3(a^2+a)/2",
                 std::to_string(ell * (3 * a - 1) - 3 * (a * a + a) / 2),
                 std::to_string(g.numerator.poly.degree()));
      rec.expect("family 1 quasipolynomial degree, a=" + tag, std::to_string(2 * a - 1),
                 std::to_string(kron::quasipoly_degree(f.qp)));
      rec.expect("family 3 quasipolynomial degree, a=" + tag, std::to_string(3 * a - 2),
                 std::to_string(kron::quasipoly_degree(g.qp)));
      rec.expect("minimal periods = lcm(1..a+1), a=" + tag, std::to_string(ell) + "," + std::to_string(ell),
                 std::to_string(kron::minimal_period(f.qp)) + "," +
                     std::to_string(kron::minimal_period(g.qp)));
      const int N = 200;
      const auto fs = kron::F_series(a, N);
      const auto gs = kron::G_series(a, N);
      std::vector<std::string> bad;
      for (int n = 0; n <= N; ++n) {
        if (kron::quasipoly_eval(f.qp, n) != kron::Rational(fs[n])) bad.push_back("F n=" + std::to_string(n));
        if (kron::quasipoly_eval(g.qp, n) != kron::Rational(gs[n])) bad.push_back("G n=" + std::to_string(n));
      }
      rec.expect("quasipolynomials reproduce the series, a=" + tag + ", n <= 200", "", join(bad));
    });
  return rec.take();
}

// ---------------------------------------------------------------------------

RunReport suite_saturation() {
  Recorder rec("saturation");
  rec.guarded("saturation", [&] {
    std::vector<std::string> bad;
    for (int a = 1; a <= 4; ++a)
      for (int k = 0; k <= 5; ++k)
        if (!kron::saturation_check({kron::FamilyId::family1, a, k, 0}, 10))
          bad.push_back("a=" + std::to_string(a) + ",k=" + std::to_string(k));
    rec.expect("Family 1 stretched positivity, a <= 4, k <= 5, s <= 10", "", join(bad));
    bad.clear();
    for (int a = 1; a <= 3; ++a)
      for (int i = 1; i <= 2; ++i)
        for (int k = 0; k <= 5; ++k)
          if (!kron::saturation_check({kron::FamilyId::family2, a, k, i}, 10))
            bad.push_back("a=" + std::to_string(a) + ",i=" + std::to_string(i) + ",k=" + std::to_string(k));
    rec.expect("Family 2 stretched positivity, a <= 3, i <= 2, k <= 5, s <= 10", "", join(bad));
    bad.clear();
    for (int a = 1; a <= 3; ++a)
      for (int j = 0; j <= 4; ++j)
        if (!kron::saturation_check({kron::FamilyId::family3, a, j, 0}, 10))
          bad.push_back("a=" + std::to_string(a) + ",j=" + std::to_string(j));
    rec.expect("Family 3 diagonal stretched positivity, a <= 3, j <= 4, s <= 10", "", join(bad));
  });
  rec.guarded("monotonicity", [&] {
    // Row a = 0 is 1,0,0,... and is left out.
    std::vector<std::string> bad;
    for (int a = 1; a <= 5; ++a)
      if (!kron::monotonicity_check({kron::FamilyId::family1, kron::Sweep::vary_k, a, 0, 0, 12}))
        bad.push_back("row a=" + std::to_string(a));
    for (int k = 0; k <= 12; ++k)
      if (!kron::monotonicity_check({kron::FamilyId::family1, kron::Sweep::vary_a, k, 0, 0, 5}))
        bad.push_back("column k=" + std::to_string(k));
    rec.expect("family 1 grid rows a=1..5 and columns k=0..12 weakly increase", "", join(bad));
    bad.clear();
    for (int a = 1; a <= 3; ++a)
      if (!kron::monotonicity_check({kron::FamilyId::family3, kron::Sweep::vary_k, a, 0, 0, 12}))
        bad.push_back("a=" + std::to_string(a));
    for (int j = 0; j <= 8; ++j)
      if (!kron::monotonicity_check({kron::FamilyId::family3, kron::Sweep::vary_a, j, 0, 1, 5}))
        bad.push_back("j=" + std::to_string(j));
    rec.expect("Family 3 stable diagonals weakly increase in j and in a", "", join(bad));
  });
  return rec.take();
}

using SuiteFn = RunReport (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"tables", suite_tables},
      {"oracle", suite_oracle},
      {"bijections", suite_bijections},
      {"planepartitions", suite_planepartitions},
      {"quasipoly", suite_quasipoly},
      {"saturation", suite_saturation},
  };
  return suites;
}

RunReport timed(SuiteFn fn) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report = fn();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<RunReport> run_suites(const std::string& name, int threads) {
  std::vector<SuiteFn> selected;
  for (const auto& [suite, fn] : registry())
    if (name == "all" || name == suite) selected.push_back(fn);
  if (selected.empty()) throw std::invalid_argument("unknown suite '" + name + "'");

  std::vector<RunReport> reports;
  if (threads <= 1 || selected.size() == 1) {
    for (SuiteFn fn : selected) reports.push_back(timed(fn));
    return reports;
  }
  // Suites are independent; results are collected in declaration order.
  std::vector<std::future<RunReport>> pending;
  std::size_t next = 0;
  while (next < selected.size() || !pending.empty()) {
    while (next < selected.size() && pending.size() < static_cast<std::size_t>(threads))
      pending.push_back(std::async(std::launch::async, timed, selected[next++]));
    reports.push_back(pending.front().get());
    pending.erase(pending.begin());
  }
  return reports;
}

Result report_result(const std::vector<RunReport>& reports) {
  Result result;
  result.json = Json::array();
  result.header = {"suite", "check", "expected", "actual", "pass"};
  bool all_pass = true;
  for (const auto& report : reports) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"description", c.description},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
      result.rows.push_back({report.suite, c.description, c.expected, c.actual, c.pass ? "true" : "false"});
      result.lines.push_back(std::string(c.pass ? "PASS  " : "FAIL  ") + report.suite + ": " + c.description +
                             (c.pass ? "" : "\n      expected: " + c.expected + "\n      actual:   " + c.actual));
    }
    std::ostringstream summary;
    summary.setf(std::ios::fixed);
    summary.precision(2);
    summary << (report.pass() ? "ok    " : "FAILED ") << report.suite << " (" << report.checks.size()
            << " checks, " << report.elapsed_seconds << " s)";
    result.lines.push_back(summary.str());
    result.json.push_back({{"suite", report.suite}, {"pass", report.pass()}, {"checks", std::move(checks)}});
    all_pass = all_pass && report.pass();
  }
  result.exit_code = all_pass ? 0 : 1;
  return result;
}

}  // namespace kronfam
