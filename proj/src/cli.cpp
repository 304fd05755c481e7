#include "aztec/cli.hpp"

#include "aztec/count.hpp"
#include "aztec/diamond.hpp"
#include "aztec/partitions.hpp"
#include "aztec/stats.hpp"
#include "aztec/symfunc.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace aztec::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  int k = 0;
  std::string barriers;
  bool rotated = false;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  std::string in_path;
};

// What a command produces, before rendering.
struct Result {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool ok = true;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json set_json(const std::vector<int>& s) { return Json(s); }

std::string set_text(const std::vector<int>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

Json cell_json(Cell c) { return Json::array({c.i, c.j}); }

Json tiling_json(const Tiling& t) {
  Json arr = Json::array();
  for (const auto& [a, b] : t) arr.push_back(Json::array({cell_json(a), cell_json(b)}));
  return arr;
}

Tiling tiling_from_json(const Json& j) {
  Tiling t;
  for (const auto& d : j) {
    if (!d.is_array() || d.size() != 2) throw UsageError("tiling: each domino must be a pair of cells");
    const Cell a{d[0].at(0).get<int>(), d[0].at(1).get<int>()};
    const Cell b{d[1].at(0).get<int>(), d[1].at(1).get<int>()};
    t.push_back(make_pair_sorted(a, b));
  }
  std::sort(t.begin(), t.end());
  return t;
}

BarrierConfig config_for(const Diamond& d, const std::string& text) {
  if (text.empty()) return BarrierConfig::all_zip(d.spine_length());
  auto cfg = BarrierConfig::parse(text);
  if (cfg.size() != d.spine_length())
    throw UsageError("--barriers needs " + std::to_string(d.spine_length()) + " characters for n=" +
                     std::to_string(d.order()));
  return cfg;
}

void require_positive(int value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be a positive integer");
}

// ---- tilings -------------------------------------------------------------

Result cmd_count(const Options& o) {
  require_positive(o.n, "--n");
  const Diamond d(o.n);
  const auto cfg = config_for(d, o.barriers);
  const auto c = count_tilings(d, cfg);
  Result r;
  r.json = {{"n", o.n}, {"barriers", cfg.to_string()}, {"count", to_decimal(c)}};
  r.csv_header = {"n", "barriers", "count"};
  r.csv_rows.push_back({std::to_string(o.n), cfg.to_string(), to_decimal(c)});
  return r;
}

Result cmd_enumerate(const Options& o) {
  require_positive(o.n, "--n");
  const Diamond d(o.n);
  const auto cfg = config_for(d, o.barriers);
  Result r;
  Json tilings = Json::array();
  r.csv_header = {"tiling", "i1", "j1", "i2", "j2"};
  std::size_t index = 0;
  for_each_tiling(d, cfg, [&](const Tiling& t) {
    tilings.push_back(tiling_json(t));
    for (const auto& [a, b] : t)
      r.csv_rows.push_back({std::to_string(index), std::to_string(a.i), std::to_string(a.j), std::to_string(b.i),
                            std::to_string(b.j)});
    ++index;
  });
  r.json = {{"n", o.n}, {"barriers", cfg.to_string()}, {"count", std::to_string(index)}, {"tilings", std::move(tilings)}};
  return r;
}

// Class sizes keyed (and thus ordered) by zig set.
using ClassSizes = std::map<std::vector<int>, BigCount>;

Json classes_json(const ClassSizes& sizes) {
  Json arr = Json::array();
  for (const auto& [zigs, size] : sizes) {
    const auto p = BalancedPartition::from_zigs(static_cast<int>(zigs.size()), zigs);
    arr.push_back({{"signature", p.signature()}, {"zigs", set_json(zigs)}, {"size", to_decimal(size)}});
  }
  return arr;
}

Result cmd_signature(const Options& o, std::istream& in) {
  std::string text;
  if (!o.in_path.empty()) {
    std::ifstream f(o.in_path);
    if (!f) throw UsageError("cannot open " + o.in_path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("signature: input is not JSON: ") + e.what());
  }
  int n = o.n;
  Json tilings;
  if (doc.is_object()) {
    if (n == 0 && doc.contains("n")) n = doc.at("n").get<int>();
    tilings = doc.at("tilings");
  } else {
    tilings = doc;
  }
  require_positive(n, "--n");
  const Diamond d(n);
  ClassSizes sizes;
  Json sigs = Json::array();
  Result r;
  r.csv_header = {"tiling", "signature"};
  std::size_t index = 0;
  for (const auto& tj : tilings) {
    const auto sig = spine_signature(tiling_from_json(tj), d);
    const auto text_sig = marks_to_string(sig);
    sigs.push_back(text_sig);
    r.csv_rows.push_back({std::to_string(index++), text_sig});
    sizes[partition_of_signature(sig).zigs()] += 1;
  }
  r.json = {{"n", n}, {"tilings", index}, {"signatures", std::move(sigs)}, {"classes", classes_json(sizes)}};
  return r;
}

Result cmd_census(const Options& o) {
  require_positive(o.n, "--n");
  const Diamond d(o.n);
  const bool by_enumeration = o.n <= max_enumerate_order;
  ClassSizes measured;
  if (by_enumeration) {
    for_each_tiling(d, BarrierConfig::all_zip(d.spine_length()), [&](const Tiling& t) {
      measured[partition_of_signature(spine_signature(t, d)).zigs()] += 1;
    });
  } else {
    for (const auto& p : enumerate_balanced(d.k())) measured[p.zigs()] = count_tilings(d, BarrierConfig::full_signature(p));
  }
  Result r;
  r.csv_header = {"signature", "zigs", "size", "formula", "match"};
  Json classes = Json::array();
  BigCount total = 0;
  for (const auto& p : enumerate_balanced(d.k())) {
    const auto it = measured.find(p.zigs());
    const BigCount size = it == measured.end() ? BigCount(0) : it->second;
    const BigCount formula = signature_class_size(p, o.n);
    const bool match = size == formula;
    r.ok = r.ok && match;
    total += size;
    classes.push_back({{"signature", p.signature()}, {"zigs", set_json(p.zigs())}, {"size", to_decimal(size)},
                       {"formula", to_decimal(formula)}, {"match", match}});
    r.csv_rows.push_back({p.signature(), set_text(p.zigs()), to_decimal(size), to_decimal(formula), bool_text(match)});
  }
  const BigCount expected_total = pow2(static_cast<unsigned long>(o.n) * (o.n + 1) / 2);
  r.ok = r.ok && total == expected_total;
  r.json = {{"status", r.ok ? "ok" : "fail"},
            {"n", o.n},
            {"method", by_enumeration ? "enumeration" : "dp"},
            {"tilings", to_decimal(total)},
            {"classes", std::move(classes)}};
  return r;
}

// ---- verify --------------------------------------------------------------

Result cmd_verify_theorem1(const Options& o) {
  require_positive(o.n, "--n");
  const Diamond d(o.n);
  const BigCount expected = pow2(static_cast<unsigned long>(o.n) * (o.n + 1) / 2 - d.k());
  Result r;
  r.csv_header = {"barriers", "count", "match"};
  Json configs = Json::array();
  for (const auto& row : barrier_sweep(o.n, o.rotated)) {
    const bool match = row.count == expected;
    r.ok = r.ok && match;
    configs.push_back({{"barriers", row.config.to_string()}, {"count", to_decimal(row.count)}});
    r.csv_rows.push_back({row.config.to_string(), to_decimal(row.count), bool_text(match)});
  }
  r.json = {{"status", r.ok ? "ok" : "fail"}, {"n", o.n},
            {"rotated", o.rotated}, {"expected", to_decimal(expected)},
            {"configs", std::move(configs)}};
  return r;
}

Result cmd_verify_formula1(const Options& o) {
  require_positive(o.n, "--n");
  const Diamond d(o.n);
  Result r;
  r.csv_header = {"signature", "count", "formula", "match"};
  Json classes = Json::array();
  BigCount total = 0;
  for (const auto& p : enumerate_balanced(d.k())) {
    const auto c = count_tilings(d, BarrierConfig::full_signature(p));
    const auto f = signature_class_size(p, o.n);
    total += c;
    r.ok = r.ok && c == f;
    classes.push_back({{"signature", p.signature()}, {"count", to_decimal(c)}, {"formula", to_decimal(f)}});
    r.csv_rows.push_back({p.signature(), to_decimal(c), to_decimal(f), bool_text(c == f)});
  }
  r.ok = r.ok && total == pow2(static_cast<unsigned long>(o.n) * (o.n + 1) / 2);
  r.json = {{"status", r.ok ? "ok" : "fail"}, {"n", o.n}, {"total", to_decimal(total)}, {"classes", std::move(classes)}};
  return r;
}

// Every partition with at most k rows and parts at most k.
std::vector<Shape> shapes_in_box(int k) {
  std::vector<Shape> out;
  std::vector<int> parts(k, 0);
  const std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row == k) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      parts[row] = v;
      rec(row + 1, v);
    }
  };
  rec(0, k);
  return out;
}

Result verify_status(std::size_t mismatches, Json details) {
  Result r;
  r.ok = mismatches == 0;
  r.json = {{"status", r.ok ? "ok" : "fail"}};
  for (auto& [key, value] : details.items()) r.json[key] = value;
  if (!r.ok) r.json["mismatches"] = mismatches;
  r.csv_header = {"status", "mismatches"};
  r.csv_rows.push_back({r.ok ? "ok" : "fail", std::to_string(mismatches)});
  return r;
}

Result cmd_verify_jacobi_trudi(const Options& o) {
  require_positive(o.k, "--k");
  if (o.k > 4) throw UsageError("verify jacobi-trudi: the tableau side is exhaustive; --k must be at most 4");
  const int trials = o.trials > 0 ? o.trials : 20;
  std::mt19937_64 rng(o.seed);
  const auto shapes = shapes_in_box(o.k);
  std::size_t bad = 0;
  for (const auto& s : shapes) {
    for (int t = 0; t < trials; ++t) {
      const auto p = random_rational_point(o.k, rng);
      if (schur_eval_jt(s, p) != schur_eval_tableau(s, p)) ++bad;
    }
  }
  return verify_status(bad, {{"k", o.k}, {"shapes", shapes.size()}, {"trials", trials}});
}

Result cmd_verify_theorem2(const Options& o) {
  require_positive(o.k, "--k");
  const int trials = o.trials > 0 ? o.trials : 100;
  std::mt19937_64 rng(o.seed);
  const auto all = even_subsets(o.k);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::size_t bad = 0;
  for (int t = 0; t < trials; ++t) {
    const auto family = random_vector_family(o.k, rng);
    const auto rhs = parity_minor_product(family);
    if (o.k <= 3) {
      for (const auto& a_star : all)
        if (split_minor_sum(family, a_star) != rhs) ++bad;
    } else {
      for (int s = 0; s < 8; ++s)
        if (split_minor_sum(family, all[pick(rng)]) != rhs) ++bad;
    }
  }
  return verify_status(bad, {{"trials", trials}});
}

Result cmd_verify_staircase(const Options& o) {
  require_positive(o.k, "--k");
  const int trials = o.trials > 0 ? o.trials : 20;
  std::mt19937_64 rng(o.seed);
  const Shape sigma = Shape::staircase(o.k);
  const Shape tau = Shape::staircase_below(o.k);
  std::size_t bad = 0;
  const auto ones = EvalPoint::ones(o.k);
  const Rational at_ones = schur_eval_jt(sigma, ones) * schur_eval_jt(tau, ones);
  if (at_ones != Rational(pow2(static_cast<unsigned long>(o.k) * (o.k - 1)))) ++bad;
  for (int t = 0; t < trials; ++t) {
    const auto p = random_rational_point(o.k, rng);
    if (schur_eval_jt(sigma, p) * schur_eval_jt(tau, p) != staircase_product_eval(o.k, p)) ++bad;
  }
  return verify_status(bad, {{"k", o.k}, {"trials", trials}, {"at_ones", to_fraction(at_ones)}});
}

Result cmd_verify_independence(const Options& o) {
  require_positive(o.k, "--k");
  const auto rep = independence_check(build_distribution(o.k));
  Result r;
  r.ok = rep.independent;
  r.csv_header = {"zig_evens", "probability", "decimal"};
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"zig_evens", set_json(row.zig_evens)}, {"probability", to_fraction(row.probability)}});
    r.csv_rows.push_back({set_text(row.zig_evens), to_fraction(row.probability), to_decimal12(row.probability)});
  }
  r.json = {{"status", r.ok ? "ok" : "fail"}, {"k", o.k}, {"expected", to_fraction(rep.expected)}, {"rows", std::move(rows)}};
  return r;
}

Result cmd_verify_moments(const Options& o) {
  require_positive(o.k, "--k");
  const auto dist = build_distribution(o.k);
  Result r;
  r.csv_header = {"m", "mean", "variance", "bound", "within_bound"};
  Json rows = Json::array();
  for (int m = 1; m <= 2 * o.k; ++m) {
    const auto rep = nm_moments(dist, m);
    r.ok = r.ok && rep.within_bound && rep.mean == Rational(m) / 2;
    rows.push_back({{"m", m},
                    {"mean", to_fraction(rep.mean)},
                    {"variance", to_fraction(rep.variance)},
                    {"bound", to_fraction(rep.variance_bound)},
                    {"within_bound", rep.within_bound}});
    r.csv_rows.push_back({std::to_string(m), to_decimal12(rep.mean), to_decimal12(rep.variance),
                          to_decimal12(rep.variance_bound), bool_text(rep.within_bound)});
  }
  r.json = {{"status", r.ok ? "ok" : "fail"}, {"k", o.k}, {"moments", std::move(rows)}};
  return r;
}

// ---- stats ---------------------------------------------------------------

constexpr const char* kConjectureLabel = "CONJECTURE - not asserted";

Result cmd_stats_distribution(const Options& o) {
  const auto dist = build_distribution(o.k);
  Result r;
  r.csv_header = {"signature", "zigs", "weight", "probability"};
  Json table = Json::array();
  for (const auto& e : dist.table) {
    table.push_back({{"signature", e.partition.signature()},
                     {"zigs", set_json(e.partition.zigs())},
                     {"weight", to_decimal(e.weight)},
                     {"probability", to_fraction(e.probability)}});
    r.csv_rows.push_back({e.partition.signature(), set_text(e.partition.zigs()), to_decimal(e.weight),
                          to_decimal12(e.probability)});
  }
  r.json = {{"k", o.k}, {"table", std::move(table)}};
  return r;
}

Result cmd_stats_variance_profile(const Options& o) {
  require_positive(o.k, "--k");
  Result r;
  r.csv_header = {"m", "variance", "exact"};
  Json rows = Json::array();
  for (const auto& [m, v] : variance_profile(o.k)) {
    rows.push_back({{"m", m}, {"variance", to_fraction(v)}});
    r.csv_rows.push_back({std::to_string(m), to_decimal12(v), to_fraction(v)});
  }
  r.json = {{"k", o.k}, {"note", "exploratory profile; no closed form is asserted"}, {"profile", std::move(rows)}};
  return r;
}

Result cmd_stats_correlations(const Options& o) {
  require_positive(o.k, "--k");
  const auto rep = partition_correlation_report(build_distribution(o.k));
  Result r;
  r.csv_header = {"s", "t", "parity", "covariance", "exact"};
  Json pairs = Json::array();
  int neg = 0, zero = 0, pos = 0;
  for (int s = 1; s <= rep.size; ++s) {
    for (int t = s + 1; t <= rep.size; ++t) {
      const Rational& cov = rep.covariance[s - 1][t - 1];
      const bool same = (s - t) % 2 == 0;
      if (same) {
        r.ok = r.ok && cov == 0;
      } else if (cov < 0) {
        ++neg;
      } else if (cov == 0) {
        ++zero;
      } else {
        ++pos;
      }
      pairs.push_back({{"s", s}, {"t", t}, {"parity", same ? "same" : "opposite"}, {"covariance", to_fraction(cov)}});
      r.csv_rows.push_back({std::to_string(s), std::to_string(t), same ? "same" : "opposite", to_decimal12(cov),
                            to_fraction(cov)});
    }
  }
  r.json = {{"status", r.ok ? "ok" : "fail"},
            {"k", o.k},
            {"same_parity_zero", r.ok},
            {"opposite_parity",
             {{"label", kConjectureLabel}, {"negative", neg}, {"zero", zero}, {"positive", pos}}},
            {"pairs", std::move(pairs)}};
  return r;
}

Result cmd_stats_subset_correlations(const Options& o) {
  require_positive(o.n, "--n");
  if (o.k < 0 || o.k > o.n) throw UsageError("--k must be in [0, n]");
  const auto dist = build_subset_distribution(o.n, o.k);
  const auto rep = subset_correlation_report(dist);
  Result r;
  r.csv_header = {"i", "j", "covariance", "exact"};
  Json matrix = Json::array();
  for (int i = 0; i < rep.size; ++i) {
    Json row = Json::array();
    for (int j = 0; j < rep.size; ++j) {
      row.push_back(to_fraction(rep.covariance[i][j]));
      r.csv_rows.push_back({std::to_string(i + 1), std::to_string(j + 1), to_decimal12(rep.covariance[i][j]),
                            to_fraction(rep.covariance[i][j])});
    }
    matrix.push_back(std::move(row));
  }
  Json positive = Json::array();
  for (const auto& [s, t] : rep.positive_pairs) positive.push_back(Json::array({s, t}));
  r.json = {{"n", o.n},
            {"k", o.k},
            {"summary",
             {{"label", kConjectureLabel},
              {"negative", rep.negative},
              {"zero", rep.zero},
              {"positive", rep.positive_pairs.size()},
              {"positive_pairs", std::move(positive)}}},
            {"covariance", std::move(matrix)}};
  return r;
}

Result cmd_sample(const Options& o) {
  require_positive(o.k, "--k");
  const std::size_t count = o.trials > 0 ? static_cast<std::size_t>(o.trials) : 1000;
  const auto dist = build_distribution(o.k);
  const auto draws = sample_partitions(dist, count, o.seed);
  Result r;
  r.csv_header = {"draw", "signature"};
  Json samples = Json::array();
  for (std::size_t i = 0; i < draws.size(); ++i) {
    samples.push_back(draws[i].signature());
    r.csv_rows.push_back({std::to_string(i), draws[i].signature()});
  }
  r.json = {{"k", o.k}, {"seed", o.seed}, {"count", count}, {"samples", std::move(samples)}};
  return r;
}

void render(const Result& r, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(r.csv_header);
    for (const auto& row : r.csv_rows) line(row);
  } else {
    os << r.json.dump() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domino-tiling counts on Aztec diamonds with barriers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out_path, "Write output to this path instead of stdout");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Diamond order")->required(); };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "Half the spine length")->required(); };
  auto add_random = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials, "Number of random trials");
    sub->add_option("--seed", o.seed, "Random seed");
  };

  std::function<Result()> action;
  auto bind = [&](CLI::App* sub, std::function<Result()> f) {
    add_common(sub);
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  auto* count = app.add_subcommand("count", "Count tilings compatible with a barrier string");
  add_n(count);
  count->add_option("--barriers", o.barriers, "One of i/a/. per spine square, SW to NE");
  bind(count, [&] { return cmd_count(o); });

  auto* enumerate = app.add_subcommand("enumerate", "List every compatible tiling (n <= 5)");
  add_n(enumerate);
  enumerate->add_option("--barriers", o.barriers, "One of i/a/. per spine square, SW to NE");
  bind(enumerate, [&] { return cmd_enumerate(o); });

  auto* signature = app.add_subcommand("signature", "Spine signatures of tilings read as JSON from stdin");
  signature->add_option("--n", o.n, "Diamond order (read from the input when present)");
  signature->add_option("--in", o.in_path, "Read tilings from this path instead of stdin");
  bind(signature, [&] { return cmd_signature(o, in); });

  auto* census = app.add_subcommand("census", "Group all tilings by spine signature and compare with the product formula");
  add_n(census);
  bind(census, [&] { return cmd_census(o); });

  auto* verify = app.add_subcommand("verify", "Exact identity checks; exit 1 on any mismatch");
  verify->require_subcommand(1);
  auto* v_t1 = verify->add_subcommand("theorem1", "Barrier sweep over one parity class of the spine");
  add_n(v_t1);
  v_t1->add_flag("--rotated", o.rotated, "Use the odd positions");
  bind(v_t1, [&] { return cmd_verify_theorem1(o); });
  auto* v_f1 = verify->add_subcommand("formula1", "Every full-signature count against the product formula");
  add_n(v_f1);
  bind(v_f1, [&] { return cmd_verify_formula1(o); });
  auto* v_jt = verify->add_subcommand("jacobi-trudi", "Determinant against tableau sum for shapes in a k x k box");
  add_k(v_jt);
  add_random(v_jt);
  bind(v_jt, [&] { return cmd_verify_jacobi_trudi(o); });
  auto* v_t2 = verify->add_subcommand("theorem2", "Split minor sum against the odd/even minor product");
  add_k(v_t2);
  add_random(v_t2);
  bind(v_t2, [&] { return cmd_verify_theorem2(o); });
  auto* v_sc = verify->add_subcommand("staircase", "Staircase Schur product against its closed form");
  add_k(v_sc);
  add_random(v_sc);
  bind(v_sc, [&] { return cmd_verify_staircase(o); });
  auto* v_ind = verify->add_subcommand("independence", "Joint independence of the even zig events");
  add_k(v_ind);
  bind(v_ind, [&] { return cmd_verify_independence(o); });
  auto* v_mom = verify->add_subcommand("moments", "Mean and variance bound of N_m");
  add_k(v_mom);
  bind(v_mom, [&] { return cmd_verify_moments(o); });

  auto* stats = app.add_subcommand("stats", "Exact distribution reports");
  stats->require_subcommand(1);
  auto* s_dist = stats->add_subcommand("distribution", "Full probability table on balanced partitions");
  add_k(s_dist);
  bind(s_dist, [&] { return cmd_stats_distribution(o); });
  auto* s_var = stats->add_subcommand("variance-profile", "Var(N_m) for m = 1..2k");
  add_k(s_var);
  bind(s_var, [&] { return cmd_stats_variance_profile(o); });
  auto* s_corr = stats->add_subcommand("correlations", "Pairwise covariances of the zig indicators");
  add_k(s_corr);
  bind(s_corr, [&] { return cmd_stats_correlations(o); });
  auto* s_sub = stats->add_subcommand("subset-correlations", "Covariance matrix of the diagonal zig-zag variables");
  add_n(s_sub);
  add_k(s_sub);
  bind(s_sub, [&] { return cmd_stats_subset_correlations(o); });

  auto* sample = app.add_subcommand("sample", "Exact inverse-CDF draws from the partition distribution");
  add_k(sample);
  add_random(sample);
  bind(sample, [&] { return cmd_sample(o); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!action) {
    err << "error: no command given\n";
    return kUsage;
  }

  Result result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kUsage;
  }

  if (o.out_path.empty()) {
    render(result, o.format, out);
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write " << o.out_path << '\n';
      return kUsage;
    }
    render(result, o.format, f);
  }
  return result.ok ? kOk : kVerificationFailed;
}

}  // namespace aztec::cli
