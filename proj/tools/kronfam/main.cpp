#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kron/characters.hpp"
#include "kron/config.hpp"
#include "kron/errors.hpp"
#include "kron/families.hpp"
#include "kron/plane_partitions.hpp"
#include "kron/quasipoly.hpp"
#include "kron/reduced.hpp"
#include "kron/series.hpp"
#include "kron/tableaux.hpp"
#include "kronfam/output.hpp"
#include "kronfam/verify.hpp"

namespace {

using kron::Integer;
using kron::Partition;
using kronfam::Json;
using kronfam::Result;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string join_ints(const std::vector<int>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Json filling_json(const kron::Filling& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

std::vector<std::string> filling_lines(const kron::KroneckerTableau& T) {
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < T.rows.size(); ++r)
    lines.push_back(std::string(static_cast<std::size_t>(T.inner[static_cast<int>(r)]) * 2, '.') +
                    (T.inner[static_cast<int>(r)] ? " " : "") + join_ints(T.rows[r], ' '));
  return lines;
}

kron::Pathway parse_pathway(const std::string& name) {
  if (name == "auto") return kron::Pathway::automatic;
  if (name == "oracle") return kron::Pathway::oracle;
  if (name == "tableau") return kron::Pathway::tableau;
  throw UsageError("unknown pathway '" + name + "'");
}

// Table of (key, value) pairs where a value may be the scale-exceeded marker.
Result value_table(const std::string& key, const std::vector<std::pair<int, std::optional<Integer>>>& cells,
                   Json head) {
  Result result;
  result.header = {key, "value"};
  Json values = Json::array();
  bool exceeded = false;
  for (const auto& [x, v] : cells) {
    const std::string shown = v ? v->str() : kronfam::kScaleExceeded;
    exceeded = exceeded || !v;
    result.rows.push_back({std::to_string(x), shown});
    values.push_back({{key, x}, {"value", shown}});
  }
  head["values"] = std::move(values);
  result.json = std::move(head);
  if (exceeded) result.exit_code = kExitScale;
  return result;
}

std::optional<Integer> attempt(const std::function<Integer()>& f) {
  try {
    return f();
  } catch (const kron::ScaleExceeded&) {
    return std::nullopt;
  }
}

std::vector<Integer> parse_int_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(' ');
    const auto last = token.find_last_not_of(' ');
    if (first == std::string::npos) throw UsageError("empty entry in integer list");
    token = token.substr(first, last - first + 1);
    try {
      out.emplace_back(token);
    } catch (const std::exception&) {
      throw UsageError("'" + token + "' is not an integer");
    }
  }
  return out;
}

Json integer_array(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Result series_result(const std::vector<Integer>& coefficients, Json head) {
  Result result;
  result.header = {"n", "coefficient"};
  for (std::size_t n = 0; n < coefficients.size(); ++n)
    result.rows.push_back({std::to_string(n), coefficients[n].str()});
  head["coefficients"] = integer_array(coefficients);
  result.json = std::move(head);
  return result;
}

std::string poly_text(const std::vector<kron::Rational>& coeffs, const std::string& var) {
  std::string out;
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    const kron::Rational& c = coeffs[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    std::string term = kron::to_fraction_string(c < 0 ? kron::Rational(-c) : c);
    if (term.size() > 2 && term.substr(term.size() - 2) == "/1") term.resize(term.size() - 2);
    if (d > 0) term += (d == 1 ? " " + var : " " + var + "^" + std::to_string(d));
    out += out.empty() ? (c < 0 ? "-" + term : term) : (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker, reduced Kronecker and family coefficients with exact arithmetic", "kronfam"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "pretty";
  bool as_json = false, as_csv = false;
  std::optional<int> threads, cap;
  std::string out_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_flag("--json", as_json, "Shorthand for --format json");
  app.add_flag("--csv", as_csv, "Shorthand for --format csv");
  app.add_option("--threads", threads, "Worker threads (default: KRONFAM_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-cap", cap, "Largest n for the character oracle (default: KRONFAM_ORACLE_CAP or 25)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  std::function<Result()> action;

  // kron L M N
  std::string p1, p2, p3;
  auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient g^L_{M N} by the character oracle");
  kron_cmd->add_option("L", p1)->required();
  kron_cmd->add_option("M", p2)->required();
  kron_cmd->add_option("N", p3)->required();
  kron_cmd->callback([&] {
    action = [&] {
      const Partition l = Partition::parse(p1), m = Partition::parse(p2), n = Partition::parse(p3);
      const Integer g = kron::kronecker_coeff(l, m, n);
      Result r;
      r.scalar = g.str();
      r.json = {{"lambda", l.str()}, {"mu", m.str()}, {"nu", n.str()}, {"value", g.str()}};
      return r;
    };
  });

  // kronprod M N
  auto* kronprod_cmd = app.add_subcommand("kronprod", "Expansion of s_M * s_N in Schur functions");
  kronprod_cmd->add_option("M", p1)->required();
  kronprod_cmd->add_option("N", p2)->required();
  kronprod_cmd->callback([&] {
    action = [&] {
      const auto product = kron::kronecker_product(Partition::parse(p1), Partition::parse(p2));
      Result r;
      r.header = {"lambda", "coefficient"};
      r.json = Json::object();
      for (const auto& [lambda, g] : product) {
        r.rows.push_back({lambda.str(), g.str()});
        r.json[lambda.str()] = g.str();
      }
      return r;
    };
  });

  // rkron A B G [--sweep LO HI]
  std::vector<int> sweep;
  std::string pathway_name = "auto";
  auto* rkron_cmd = app.add_subcommand("rkron", "Reduced Kronecker coefficient gbar^G_{A B}");
  rkron_cmd->add_option("A", p1)->required();
  rkron_cmd->add_option("B", p2)->required();
  rkron_cmd->add_option("G", p3)->required();
  rkron_cmd->add_option("--sweep", sweep, "Print g^{G[n]}_{A[n] B[n]} for n in [LO, HI]")->expected(2);
  rkron_cmd->add_option("--pathway", pathway_name, "auto, oracle or tableau")
      ->check(CLI::IsMember({"auto", "oracle", "tableau"}));
  rkron_cmd->callback([&] {
    action = [&] {
      const Partition a = Partition::parse(p1), b = Partition::parse(p2), g = Partition::parse(p3);
      const kron::Pathway pathway = parse_pathway(pathway_name);
      Json head{{"alpha", a.str()}, {"beta", b.str()}, {"gamma", g.str()},
                {"threshold", kron::stability_threshold(a, b, g)}};
      if (sweep.empty()) {
        const Integer v = kron::reduced_kron(a, b, g, pathway);
        Result r;
        r.scalar = v.str();
        head["value"] = v.str();
        r.json = std::move(head);
        return r;
      }
      if (sweep[1] < sweep[0]) throw UsageError("--sweep needs LO <= HI");
      const int floor = std::max({kron::padding_floor(a), kron::padding_floor(b), kron::padding_floor(g)});
      if (sweep[0] < floor) throw UsageError("--sweep LO is below the padding floor " + std::to_string(floor));
      std::vector<std::pair<int, std::optional<Integer>>> cells;
      for (int n = sweep[0]; n <= sweep[1]; ++n)
        cells.emplace_back(n, attempt([&] { return kron::padded_kronecker(a, b, g, n, pathway); }));
      return value_table("n", cells, std::move(head));
    };
  });

  // ktab --outer L --type N --alpha A [--count|--list]
  std::string outer_s, type_s, alpha_s;
  bool list = false, count = false;
  auto* ktab_cmd = app.add_subcommand("ktab", "Kronecker tableaux of shape L/A and type N/A");
  ktab_cmd->add_option("--outer", outer_s)->required();
  ktab_cmd->add_option("--type", type_s)->required();
  ktab_cmd->add_option("--alpha", alpha_s)->required();
  auto* count_flag = ktab_cmd->add_flag("--count", count, "Print the number of tableaux (default)");
  ktab_cmd->add_flag("--list", list, "Print every tableau")->excludes(count_flag);
  ktab_cmd->callback([&] {
    action = [&] {
      const Partition l = Partition::parse(outer_s), n = Partition::parse(type_s), a = Partition::parse(alpha_s);
      Result r;
      Json head{{"outer", l.str()}, {"type", n.str()}, {"alpha", a.str()}};
      if (!list) {
        const auto c = kron::count_kron_tableaux(l, n, a);
        r.scalar = std::to_string(c);
        head["count"] = c;
        r.json = std::move(head);
        return r;
      }
      const auto tableaux = kron::enumerate_kron_tableaux(l, n, a);
      Json all = Json::array();
      r.header = {"tableau", "row", "entries"};
      for (std::size_t t = 0; t < tableaux.size(); ++t) {
        all.push_back(filling_json(tableaux[t].rows));
        for (std::size_t row = 0; row < tableaux[t].rows.size(); ++row)
          r.rows.push_back({std::to_string(t + 1), std::to_string(row + 1), join_ints(tableaux[t].rows[row], ' ')});
        if (t) r.lines.emplace_back();
        for (auto& line : filling_lines(tableaux[t])) r.lines.push_back(std::move(line));
      }
      if (tableaux.empty()) r.lines.push_back("(none)");
      head["count"] = tableaux.size();
      head["tableaux"] = std::move(all);
      r.json = std::move(head);
      return r;
    };
  });

  // family --id --a [--b] [--i] (--k K | --krange LO HI)
  int fam_id = 1, fam_a = 0, fam_i = 0;
  std::optional<int> fam_b, fam_k;
  std::vector<int> krange;
  auto* family_cmd = app.add_subcommand("family", "Values of the three coefficient families");
  family_cmd->add_option("--id", fam_id)->required()->check(CLI::IsMember({1, 2, 3}));
  family_cmd->add_option("--a", fam_a)->required()->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--b", fam_b, "Defaults to a (families 1, 2) or a+1 (family 3)")
      ->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--i", fam_i, "Shift (families 2 and 3)")->check(CLI::NonNegativeNumber);
  auto* k_opt = family_cmd->add_option("--k", fam_k)->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--krange", krange, "Inclusive k range")->expected(2)->excludes(k_opt);
  family_cmd->callback([&] {
    action = [&] {
      int lo = 0, hi = 0;
      if (fam_k) {
        lo = hi = *fam_k;
      } else if (krange.size() == 2) {
        lo = krange[0];
        hi = krange[1];
      } else {
        throw UsageError("family needs --k or --krange");
      }
      if (lo < 0 || hi < lo) throw UsageError("--krange needs 0 <= LO <= HI");
      const int b = fam_b.value_or(fam_id == 3 ? fam_a + 1 : fam_a);
      Json head{{"id", fam_id}, {"a", fam_a}, {"b", b}};
      if (fam_id != 1) head["i"] = fam_i;
      std::vector<std::pair<int, std::optional<Integer>>> cells;
      for (int k = lo; k <= hi; ++k) {
        cells.emplace_back(k, attempt([&]() -> Integer {
          switch (fam_id) {
            case 1:
              return kron::family1(fam_a, b, k);
            case 2:
              return kron::family2(fam_a, b, k, fam_i);
            default:
              return kron::family3(fam_a, b, k, fam_i);
          }
        }));
      }
      Result r = value_table("k", cells, std::move(head));
      if (fam_k && r.exit_code == 0) r.scalar = r.rows.front()[1];
      return r;
    };
  });

  // bij --family --a [--k] [--i] --beta
  int bij_family = 1, bij_a = 1, bij_i = 0;
  std::optional<int> bij_k;
  std::string beta_s;
  auto* bij_cmd = app.add_subcommand("bij", "Kronecker tableau attached to a coloured partition");
  bij_cmd->add_option("--family", bij_family)->required()->check(CLI::IsMember({1, 2, 3}));
  bij_cmd->add_option("--a", bij_a)->required()->check(CLI::PositiveNumber);
  bij_cmd->add_option("--k", bij_k, "Family 3 only; defaults to twice the weight of beta");
  bij_cmd->add_option("--i", bij_i, "Family 2 shift")->check(CLI::NonNegativeNumber);
  bij_cmd->add_option("--beta", beta_s, "Coloured parts, e.g. \"2~~,1\"")->required();
  bij_cmd->callback([&] {
    action = [&] {
      const auto beta = kron::ColouredPartition::parse(beta_s);
      kron::TypedTableau tt;
      if (bij_family == 1) {
        tt = kron::bij_family1(beta, bij_a);
      } else if (bij_family == 2) {
        tt = kron::bij_family2(beta, bij_a, bij_i);
      } else {
        tt = kron::bij_family3(beta, bij_a, bij_k.value_or(2 * beta.weight()));
      }
      const auto& T = tt.tableau;
      const bool valid = kron::is_kronecker_tableau(T, T.outer, tt.type, T.inner);
      Result r;
      r.json = {{"family", bij_family}, {"a", bij_a}, {"beta", beta.str()}, {"shape", T.outer.str()},
                {"alpha", T.inner.str()}, {"type", tt.type.str()}, {"rows", filling_json(T.rows)},
                {"kronecker_tableau", valid}};
      r.lines = {"shape " + T.outer.str() + "  alpha " + T.inner.str() + "  type " + tt.type.str()};
      for (auto& line : filling_lines(T)) r.lines.push_back(std::move(line));
      r.header = {"row", "entries"};
      for (std::size_t row = 0; row < T.rows.size(); ++row)
        r.rows.push_back({std::to_string(row + 1), join_ints(T.rows[row], ' ')});
      if (!valid) r.exit_code = kExitCheckFailed;
      return r;
    };
  });

  // pp --count K R S | --box R S T [--series N] | --lemma2 "q0,q1,..."
  std::vector<int> pp_count, pp_box;
  std::optional<int> pp_series;
  std::string pp_lemma;
  bool pp_inverse = false;
  auto* pp_cmd = app.add_subcommand("pp", "Plane partition counts and series");
  auto* count_opt = pp_cmd->add_option("--count", pp_count, "K R S: plane partitions of K in an R x S rectangle")
                        ->expected(3);
  auto* box_opt = pp_cmd->add_option("--box", pp_box, "R S T: MacMahon series of the R x S x T box")->expected(3);
  pp_cmd->add_option("--series", pp_series, "Truncation order for --box")->needs(box_opt);
  auto* lemma_opt = pp_cmd->add_option("--lemma2", pp_lemma, "Apply q_n = sum (floor((n-m)/2)+1) r_m");
  pp_cmd->add_flag("--inverse", pp_inverse, "With --lemma2: r_n = q_n - q_{n-1} - q_{n-2} + q_{n-3}")
      ->needs(lemma_opt);
  count_opt->excludes(box_opt)->excludes(lemma_opt);
  box_opt->excludes(lemma_opt);
  pp_cmd->callback([&] {
    action = [&]() -> Result {
      if (!pp_count.empty()) {
        const Integer c = kron::count_pp(pp_count[0], pp_count[1], pp_count[2]);
        Result r;
        r.scalar = c.str();
        r.json = {{"k", pp_count[0]}, {"r", pp_count[1]}, {"s", pp_count[2]}, {"count", c.str()}};
        return r;
      }
      if (!pp_box.empty()) {
        const int N = pp_series.value_or(std::max(0, pp_box[0] * pp_box[1] * pp_box[2]));
        const auto s = kron::macmahon_series(pp_box[0], pp_box[1], pp_box[2], N);
        return series_result(s.coefficients(), {{"r", pp_box[0]}, {"s", pp_box[1]}, {"t", pp_box[2]}});
      }
      if (lemma_opt->count()) {
        const auto in = parse_int_list(pp_lemma);
        const auto out = pp_inverse ? kron::lemma2_inverse(in) : kron::lemma2_transform(in);
        return series_result(out, {{"direction", pp_inverse ? "inverse" : "forward"}});
      }
      throw UsageError("pp needs one of --count, --box or --lemma2");
    };
  });

  // series --family {1|3} --a A --terms N
  int ser_family = 1, ser_a = 1, ser_terms = 20;
  auto* series_cmd = app.add_subcommand("series", "Generating-function coefficients F_a (1) or G_a (3)");
  series_cmd->add_option("--family", ser_family)->required()->check(CLI::IsMember({1, 3}));
  series_cmd->add_option("--a", ser_a)->required()->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--terms", ser_terms, "Number of coefficients")->check(CLI::PositiveNumber);
  series_cmd->callback([&] {
    action = [&] {
      const auto s = ser_family == 1 ? kron::F_series(ser_a, ser_terms - 1) : kron::G_series(ser_a, ser_terms - 1);
      return series_result(s.coefficients(), {{"family", ser_family}, {"a", ser_a}});
    };
  });

  // quasipoly --family {1|3} --a A
  int qp_family = 1, qp_a = 1;
  auto* qp_cmd = app.add_subcommand("quasipoly", "Quasipolynomial for family1(a,a,k) (1) or diag_stable(a,j) (3)");
  qp_cmd->add_option("--family", qp_family)->required()->check(CLI::IsMember({1, 3}));
  qp_cmd->add_option("--a", qp_a)->required()->check(CLI::PositiveNumber);
  qp_cmd->callback([&] {
    action = [&] {
      const auto fq = kron::family_quasipolynomial(
          qp_family == 1 ? kron::QuasiFamily::family1 : kron::QuasiFamily::family3, qp_a);
      Result r;
      Json residues = Json::array();
      const std::string var = qp_family == 1 ? "k" : "j";
      r.header = {"residue", "degree", "coefficients"};
      for (std::size_t res = 0; res < fq.qp.residues.size(); ++res) {
        Json coeffs = Json::array();
        std::vector<std::string> cells;
        for (const auto& c : fq.qp.residues[res]) {
          coeffs.push_back(kron::to_fraction_string(c));
          cells.push_back(kron::to_fraction_string(c));
        }
        residues.push_back(std::move(coeffs));
        std::string joined;
        for (std::size_t t = 0; t < cells.size(); ++t) joined += (t ? " " : "") + cells[t];
        r.rows.push_back({std::to_string(res), std::to_string(fq.qp.residues[res].size() - 1), joined});
        r.lines.push_back(var + " = " + std::to_string(res) + " mod " + std::to_string(fq.qp.period) + ":  " +
                          poly_text(fq.qp.residues[res], var));
      }
      Json cyclotomic = Json::object();
      std::string factored = fq.numerator.sign < 0 ? "-" : "";
      for (const auto& [d, e] : fq.numerator.cyclotomic) {
        cyclotomic[std::to_string(d)] = e;
        factored += "Phi_" + std::to_string(d) + "^" + std::to_string(e) + " ";
      }
      r.lines.insert(r.lines.begin(),
                     {"numerator " + factored + "over (1-x^" + std::to_string(fq.numerator.ell) + ")^" +
                          std::to_string(fq.numerator.m),
                      "period " + std::to_string(fq.qp.period) + ", minimal period " +
                          std::to_string(kron::minimal_period(fq.qp)) + ", degree " +
                          std::to_string(kron::quasipoly_degree(fq.qp))});
      r.json = {{"family", qp_family},
                {"a", qp_a},
                {"period", fq.qp.period},
                {"minimal_period", kron::minimal_period(fq.qp)},
                {"degree", kron::quasipoly_degree(fq.qp)},
                {"numerator", {{"sign", fq.numerator.sign}, {"ell", fq.numerator.ell}, {"m", fq.numerator.m},
                               {"cyclotomic", std::move(cyclotomic)},
                               {"degree", fq.numerator.poly.degree()}}},
                {"residues", std::move(residues)}};
      return r;
    };
  });

  // verify SUITE
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run a cross-pathway check suite");
  std::vector<std::string> suite_choices = kronfam::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("suite", suite, "Suite name (default all)")->check(CLI::IsMember(suite_choices));
  verify_cmd->callback([&] {
    action = [&] { return kronfam::report_result(kronfam::run_suites(suite, kron::thread_count())); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  kronfam::Format format = kronfam::Format::pretty;
  try {
    format = as_json ? kronfam::Format::json : as_csv ? kronfam::Format::csv : kronfam::parse_format(format_name);
    if (threads) kron::set_thread_count(*threads);
    if (cap) kron::set_oracle_cap(*cap);

    const Result result = action();
    const std::string text = kronfam::render(result, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + out_path);
      file << text;
    }
    return result.exit_code;
  } catch (const kron::ScaleExceeded& e) {
    std::cerr << "kronfam: scale exceeded: " << e.what() << '\n';
    return kExitScale;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kronfam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "kronfam: internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
