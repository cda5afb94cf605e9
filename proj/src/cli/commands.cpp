#include "lieinv/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "lieinv/tensor.hpp"
#include "lieinv/theorems.hpp"
#include "lieinv/weyl.hpp"

namespace lieinv::cli {

Labels parse_labels(std::string_view text) {
  Labels out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw ParseError("bad label '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    if (v < 0) throw ParseError("labels must be >= 0, got " + std::to_string(v));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Weight parse_weight(const RootSystem& g, std::string_view text) { return Weight(g, parse_labels(text)); }

namespace {

// Simple roots of B_n, C_n, F4 in epsilon coordinates, doubled so F4 stays integral.
std::vector<Labels> doubled_simple_roots(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<Labels> out;
  auto unit = [](std::size_t dim, std::size_t i, std::int64_t c) {
    Labels v(dim, 0);
    v[i] = c;
    return v;
  };
  switch (t.family) {
    case Family::B:
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Labels v(n, 0);
        v[i] = 2;
        v[i + 1] = -2;
        out.push_back(v);
      }
      out.push_back(unit(n, n - 1, t.family == Family::B ? 2 : 4));
      break;
    case Family::F:
      out = {{0, 2, -2, 0}, {0, 0, 2, -2}, unit(4, 3, 2), {1, -1, -1, -1}};
      break;
    default:
      break;
  }
  return out;
}

std::string format_doubled(const Labels& v) {
  const bool half = std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x % 2 != 0; });
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t c = half ? v[i] : v[i] / 2;
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += "e" + std::to_string(i + 1);
  }
  return half ? "1/2(" + out + ")" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "skipped"; }

}  // namespace

std::string epsilon_string(const RootSystem& g, const Root& root) {
  const SimpleType& t = g.spec().factors.at(root.factor);
  const auto simple = doubled_simple_roots(t);
  if (simple.empty()) return "";
  const std::size_t off = g.factor_offset(root.factor);
  Labels v(simple.front().size(), 0);
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += root.coords[off + i] * simple[i][k];
  }
  return format_doubled(v);
}

InfoResult info(const RootSystem& g) {
  InfoResult r;
  r.rank = g.rank();
  r.dimension = g.dimension();
  r.positive_roots = g.positive_roots().size();
  for (std::size_t s : weyl::opposition_permutation(g)) r.opposition.push_back(s + 1);
  for (const Root& theta : g.highest_roots()) {
    r.highest_roots.push_back({g.spec().factors.at(theta.factor).name(), theta.coords, theta.labels});
  }
  return r;
}

InvariantsResult invariants(const Weight& mu, const Weight& nu, std::size_t cap) {
  InvariantsResult r;
  const auto closed = theorems::invariant_dim_closed_detailed(mu, nu);
  r.closed = closed.value;
  r.rule = theorems::to_string(closed.rule);
  r.oracle_a = tensor::invariant_dim_adj(mu, nu);
  const auto dom = characters::freudenthal_weights(mu);
  BigInt support = 0;
  for (const auto& [w, m] : dom.entries) support += weyl::orbit_size(Weight(mu.algebra(), w));
  if (support <= cap) r.oracle_b = tensor::adjoint_multiplicity_in_product(mu, nu, dom);
  r.agree = r.closed == r.oracle_a && (!r.oracle_b || *r.oracle_b == r.closed);
  return r;
}

SplitReport split(const Weight& mu, std::size_t cap) {
  SplitReport r;
  const auto s = theorems::split_closed(mu);
  r.b = s.b;
  r.b_S = s.b_S;
  r.b_Lambda = s.b_Lambda;
  r.fs = static_cast<int>(theorems::frobenius_schur(mu));
  r.self_dual = r.fs != 0;
  try {
    const auto o = theorems::split_oracle(mu, cap);
    r.oracle_b_S = o.b_S;
    r.oracle_b_Lambda = o.b_Lambda;
    r.agree = o == s && s.b == tensor::invariant_dim_adj(mu, mu);
  } catch (const SizeCapExceeded&) {
  }
  return r;
}

FsReport fs(const Weight& mu, std::size_t cap) {
  FsReport r;
  r.fs = static_cast<int>(theorems::frobenius_schur(mu));
  try {
    r.oracle = static_cast<int>(theorems::fs_oracle(mu, cap));
    r.agree = *r.oracle == r.fs;
  } catch (const SizeCapExceeded&) {
  }
  return r;
}

Table1Result table1(const RootSystem& g) {
  Table1Result r;
  for (const auto& e : theorems::enumerate_table1(g)) {
    const Root& alpha = g.simple_root(e.simple_index);
    const std::size_t f = e.beta.factor;
    const std::size_t off = g.factor_offset(f);
    Labels local(e.beta.coords.begin() + static_cast<std::ptrdiff_t>(off),
                 e.beta.coords.begin() + static_cast<std::ptrdiff_t>(off + g.factor_rank(f)));
    r.rows.push_back({g.spec().factors.at(f).name(), e.simple_index - off + 1, epsilon_string(g, alpha),
                      epsilon_string(g, e.beta), local});
  }
  if (r.rows.empty()) r.note = "no short simple root has a weakly orthogonal partner (simply-laced or G2)";
  return r;
}

DecomposeResult decompose(const Weight& mu, const std::optional<Weight>& nu, std::size_t cap) {
  const RootSystem& g = mu.algebra();
  DecomposeResult r;
  tensor::Decomposition d(g);
  if (nu) {
    const auto dom = characters::freudenthal_weights(mu);
    BigInt support = 0;
    for (const auto& [w, m] : dom.entries) support += weyl::orbit_size(Weight(g, w));
    if (support > cap) {
      throw SizeCapExceeded("weight system of " + mu.str() + " has " + support.str() + " weights, cap is " +
                            std::to_string(cap));
    }
    d = tensor::tensor_general(mu, *nu, dom);
    r.product = "V_mu x V_nu";
    r.expected_dimension = characters::weyl_dim(mu) * characters::weyl_dim(*nu);
  } else {
    d = tensor::adjoint_tensor(mu);
    r.product = "adj x V_mu";
    r.expected_dimension = characters::weyl_dim(mu) * BigInt(g.dimension());
  }
  for (const auto& [w, m] : d.sorted_terms()) r.terms.push_back({w.labels(), m, characters::weyl_dim(w)});
  r.dimension = d.dimension();
  return r;
}

VerifySummary summarize(const verify::SweepReport& report) {
  VerifySummary s;
  s.weights = report.weights;
  s.pairs = report.pairs;
  s.checks = report.total_checks();
  s.failures = report.total_failures();
  s.skipped_cap = report.skipped_cap;
  s.check_counts.assign(report.checks.begin(), report.checks.end());
  s.failure_counts.assign(report.failures.begin(), report.failures.end());
  s.rule_hits.assign(report.rule_hits.begin(), report.rule_hits.end());
  if (const auto& f = report.first_failure) {
    std::string text = f->check + " at mu=" + to_string(f->mu);
    if (!f->nu.empty()) text += " nu=" + to_string(f->nu);
    if (!f->detail.empty()) text += ": " + f->detail;
    s.first_failure = text;
  }
  return s;
}

namespace {

struct Options {
  std::string algebra;
  std::string mu;
  std::string nu;
  bool json = false;
  std::int64_t max_label = 2;
  std::int64_t sum = 3;
  std::size_t jobs = 1;
  std::size_t char_cap = characters::kDefaultProductCap;
};

struct Output {
  json inputs = json::object();
  json result;
  json checks = json::object();
  std::string text;
  int code = kOk;
};

void emit(const std::string& command, const RootSystem& g, const Options& opt, const Output& o, std::ostream& out) {
  if (opt.json) {
    json doc = {{"command", command}, {"algebra", g.name()}, {"inputs", o.inputs}, {"result", o.result},
                {"checks", o.checks}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
}

Output do_info(const RootSystem& g) {
  Output o;
  const InfoResult r = info(g);
  BigInt adjoint_sum = 0;
  for (const Weight& theta : characters::adjoint_highest_weights(g)) adjoint_sum += characters::weyl_dim(theta);
  const bool dims_ok = adjoint_sum == r.dimension;
  o.result = r;
  o.checks = {{"dimension_matches_adjoint", dims_ok}};
  o.code = dims_ok ? kOk : kVerificationFailed;
  std::string t = "algebra: " + g.name() + "\nrank: " + std::to_string(r.rank) + "\ndimension: " + r.dimension.str() +
                  "\npositive roots: " + std::to_string(r.positive_roots) + "\nopposition:";
  for (std::size_t j = 0; j < r.opposition.size(); ++j) {
    t += " " + std::to_string(j + 1) + "->" + std::to_string(r.opposition[j]);
  }
  t += "\n";
  for (const auto& h : r.highest_roots) {
    t += "highest root " + h.factor + ": labels " + to_string(h.labels) + " coords " + to_string(h.coords) + "\n";
  }
  o.text = t;
  return o;
}

Output do_invariants(const Weight& mu, const Weight& nu, const Options& opt) {
  Output o;
  const InvariantsResult r = invariants(mu, nu, opt.char_cap);
  o.inputs = {{"mu", mu.labels()}, {"nu", nu.labels()}};
  o.result = r;
  o.checks = {{"agree", r.agree}, {"oracle_b_run", r.oracle_b.has_value()}};
  o.code = r.agree ? kOk : kVerificationFailed;
  o.text = "closed form: " + std::to_string(r.closed) + " (" + r.rule + ")\noracle A: " + std::to_string(r.oracle_a) +
           "\noracle B: " + (r.oracle_b ? r.oracle_b->str() : std::string("skipped (size cap)")) +
           "\nagree: " + yes_no(r.agree) + "\n";
  return o;
}

Output do_split(const Weight& mu, const Options& opt) {
  Output o;
  const SplitReport r = split(mu, opt.char_cap);
  o.inputs = {{"mu", mu.labels()}};
  o.result = r;
  o.checks = {{"agree", r.agree ? json(*r.agree) : json(nullptr)}};
  o.code = r.agree.value_or(true) ? kOk : kVerificationFailed;
  o.text = "b: " + std::to_string(r.b) + "\nb_S: " + std::to_string(r.b_S) + "\nb_Lambda: " +
           std::to_string(r.b_Lambda) + "\nFS: " + theorems::to_string(static_cast<theorems::FSIndicator>(r.fs)) +
           "\noracle b_S: " + opt_str(r.oracle_b_S) + "\noracle b_Lambda: " + opt_str(r.oracle_b_Lambda) +
           "\nagree: " + (r.agree ? yes_no(*r.agree) : std::string("skipped (size cap)")) + "\n";
  return o;
}

Output do_fs(const Weight& mu, const Options& opt) {
  Output o;
  const FsReport r = fs(mu, opt.char_cap);
  o.inputs = {{"mu", mu.labels()}};
  o.result = r;
  o.checks = {{"agree", r.agree ? json(*r.agree) : json(nullptr)}};
  o.code = r.agree.value_or(true) ? kOk : kVerificationFailed;
  auto name = [](int v) { return theorems::to_string(static_cast<theorems::FSIndicator>(v)); };
  o.text = "FS: " + name(r.fs) + "\noracle: " + (r.oracle ? name(*r.oracle) : std::string("skipped (size cap)")) +
           "\nagree: " + (r.agree ? yes_no(*r.agree) : std::string("skipped")) + "\n";
  return o;
}

Output do_table1(const RootSystem& g) {
  Output o;
  const Table1Result r = table1(g);
  o.result = r;
  std::map<std::string, std::size_t> counts;
  for (const auto& row : r.rows) ++counts[row.factor + " j=" + std::to_string(row.j)];
  o.checks = {{"rows", r.rows.size()}, {"counts", counts}};
  std::string t;
  for (const auto& row : r.rows) {
    t += row.factor + " j=" + std::to_string(row.j) + " alpha=" + row.alpha_eps + " beta=" + row.beta_eps +
         " coords=" + to_string(row.beta_coords) + "\n";
  }
  for (const auto& [k, n] : counts) t += "count " + k + ": " + std::to_string(n) + "\n";
  if (!r.note.empty()) t += "note: " + r.note + "\n";
  o.text = t;
  return o;
}

Output do_decompose(const Weight& mu, const std::optional<Weight>& nu, const Options& opt) {
  Output o;
  const DecomposeResult r = decompose(mu, nu, opt.char_cap);
  o.inputs = {{"mu", mu.labels()}};
  if (nu) o.inputs["nu"] = nu->labels();
  o.result = r;
  const bool conserved = r.dimension == r.expected_dimension;
  o.checks = {{"dimension_conserved", conserved}};
  o.code = conserved ? kOk : kVerificationFailed;
  std::string t = r.product + ":\n";
  for (const auto& term : r.terms) {
    t += "  " + term.multiplicity.str() + " x V" + to_string(term.weight) + "  dim " + term.dimension.str() + "\n";
  }
  t += "dimension: " + r.dimension.str() + " (expected " + r.expected_dimension.str() + ")\n";
  o.text = t;
  return o;
}

Output do_verify(const RootSystem& g, const Options& opt) {
  Output o;
  verify::SweepOptions so;
  so.max_label = opt.max_label;
  so.max_sum = opt.sum;
  so.jobs = opt.jobs;
  so.char_cap = opt.char_cap;
  const VerifySummary s = summarize(verify::run_sweep(g, so));
  o.inputs = {{"max_label", opt.max_label}, {"sum", opt.sum}, {"jobs", opt.jobs}, {"char_cap", opt.char_cap}};
  o.result = s;
  o.checks = {{"checks", s.checks}, {"failures", s.failures}};
  o.code = s.failures == 0 ? kOk : kVerificationFailed;
  std::string t = "algebra: " + g.name() + "\nweights: " + std::to_string(s.weights) +
                  "\npairs: " + std::to_string(s.pairs) + "\n";
  for (const auto& [k, n] : s.check_counts) {
    std::uint64_t failed = 0;
    for (const auto& [fk, fn] : s.failure_counts)
      if (fk == k) failed = fn;
    t += "  " + k + ": " + std::to_string(n) + " checks, " + std::to_string(failed) + " failures\n";
  }
  t += "rule hits:";
  for (const auto& [k, n] : s.rule_hits) t += " " + k + "=" + std::to_string(n);
  t += "\nskipped (size cap): " + std::to_string(s.skipped_cap) + "\nchecks: " + std::to_string(s.checks) +
       "\nfailures: " + std::to_string(s.failures) + "\n";
  if (s.first_failure) t += "first failure: " + *s.first_failure + "\n";
  o.text = t;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of adj (x) V_mu (x) V_nu for semisimple Lie algebras", "lieinv"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "algebra, e.g. A2, B3xG2, E6")->required();
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--char-cap", opt.char_cap, "cap on character sizes")->check(CLI::PositiveNumber);
  };
  auto* c_info = app.add_subcommand("info", "rank, dimension, roots, opposition");
  common(c_info);
  auto* c_inv = app.add_subcommand("invariants", "dim (adj x V_mu x V_nu)^g, closed form and oracles");
  common(c_inv);
  c_inv->add_option("--mu", opt.mu, "Dynkin labels, comma-separated")->required();
  c_inv->add_option("--nu", opt.nu, "Dynkin labels, comma-separated")->required();
  auto* c_split = app.add_subcommand("split", "S^2 / Lambda^2 refinement for V_mu");
  common(c_split);
  c_split->add_option("--mu", opt.mu, "Dynkin labels")->required();
  auto* c_table = app.add_subcommand("table1", "short simple roots with weakly orthogonal partners");
  common(c_table);
  auto* c_verify = app.add_subcommand("verify", "sweep all checks over small dominant weights");
  common(c_verify);
  c_verify->add_option("--max-label", opt.max_label, "largest label")->check(CLI::NonNegativeNumber);
  c_verify->add_option("--sum", opt.sum, "largest label sum")->check(CLI::NonNegativeNumber);
  c_verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* c_dec = app.add_subcommand("decompose", "adj x V_mu, or V_mu x V_nu with --nu");
  common(c_dec);
  c_dec->add_option("--mu", opt.mu, "Dynkin labels")->required();
  c_dec->add_option("--nu", opt.nu, "Dynkin labels");
  auto* c_fs = app.add_subcommand("fs", "Frobenius-Schur indicator of V_mu");
  common(c_fs);
  c_fs->add_option("--mu", opt.mu, "Dynkin labels")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto g = RootSystem::build(opt.algebra);
    Output o;
    if (command == "info") {
      o = do_info(*g);
    } else if (command == "invariants") {
      o = do_invariants(parse_weight(*g, opt.mu), parse_weight(*g, opt.nu), opt);
    } else if (command == "split") {
      o = do_split(parse_weight(*g, opt.mu), opt);
    } else if (command == "fs") {
      o = do_fs(parse_weight(*g, opt.mu), opt);
    } else if (command == "table1") {
      o = do_table1(*g);
    } else if (command == "decompose") {
      std::optional<Weight> nu;
      if (!opt.nu.empty()) nu = parse_weight(*g, opt.nu);
      o = do_decompose(parse_weight(*g, opt.mu), nu, opt);
    } else {
      o = do_verify(*g, opt);
    }
    emit(command, *g, opt, o, out);
    return o.code;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NotDominant& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace lieinv::cli
