#include "lieinv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "lieinv/tensor.hpp"
#include "lieinv/theorems.hpp"
#include "lieinv/weyl.hpp"

namespace lieinv::verify {

std::vector<Weight> dominant_weights(const RootSystem& g, std::int64_t max_label, std::int64_t max_sum) {
  std::vector<Labels> found;
  Labels cur(g.rank(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t budget) {
    if (j == cur.size()) {
      found.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= std::min(max_label, budget); ++v) {
      cur[j] = v;
      rec(j + 1, budget - v);
    }
    cur[j] = 0;
  };
  if (max_label >= 0 && max_sum >= 0) rec(0, max_sum);
  std::sort(found.begin(), found.end(), [](const Labels& a, const Labels& b) {
    const auto sa = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto sb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    return sa != sb ? sa < sb : a < b;
  });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& l : found) out.emplace_back(g, std::move(l));
  return out;
}

std::uint64_t SweepReport::total_checks() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : checks) n += v;
  return n;
}

std::uint64_t SweepReport::total_failures() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : failures) n += v;
  return n;
}

void SweepReport::merge(const SweepReport& other) {
  for (const auto& [k, v] : other.checks) checks[k] += v;
  for (const auto& [k, v] : other.failures) failures[k] += v;
  for (const auto& [k, v] : other.rule_hits) rule_hits[k] += v;
  skipped_cap += other.skipped_cap;
  if (!first_failure) first_failure = other.first_failure;
}

namespace {

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Per-mu slice of the report; `order` makes the first failure deterministic.
struct Slice {
  SweepReport report;
  std::size_t order = SIZE_MAX;

  void check(const char* name, bool ok, std::size_t order_key, const Labels& mu, const Labels& nu,
             const std::string& detail) {
    ++report.checks[name];
    if (ok) return;
    ++report.failures[name];
    if (order_key < order) {
      order = order_key;
      report.first_failure = Failure{name, mu, nu, detail};
    }
  }
};

std::string values(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ", ";
    out += std::string(k) + "=" + v;
  }
  return out;
}

}  // namespace

SweepReport run_sweep(const RootSystem& g, const SweepOptions& options) {
  const std::vector<Weight> weights = dominant_weights(g, options.max_label, options.max_sum);
  const std::size_t n = weights.size();
  const BigInt dim_g = g.dimension();

  std::map<Labels, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(weights[i].labels(), i);

  // Phase 1: per-weight data shared by all pairs.
  std::vector<tensor::Decomposition> adjoint(n, tensor::Decomposition(g));
  std::vector<std::size_t> dual(n);
  std::vector<Slice> phase1(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    const Weight& mu = weights[i];
    adjoint[i] = tensor::adjoint_tensor(mu);
    dual[i] = index.at(weyl::opposition(mu).labels());
    const BigInt dim_mu = characters::weyl_dim(mu);
    phase1[i].check("adjoint_dimension", adjoint[i].dimension() == dim_g * dim_mu, i * n, mu.labels(), {},
                    values({{"sum", adjoint[i].dimension().str()}, {"expected", (dim_g * dim_mu).str()}}));
  });
  auto oracle_a = [&](std::size_t i, std::size_t j) {
    return adjoint[i].multiplicity(weights[dual[j]].labels()).convert_to<std::int64_t>();
  };

  // Phase 2: pairs.
  std::vector<Slice> slices(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    Slice& s = slices[i];
    const Weight& mu = weights[i];
    const std::size_t base = i * n;

    std::optional<characters::WeightMultiplicityMap> full;
    if (options.characters) {
      const auto dom = characters::freudenthal_weights(mu);
      BigInt total = 0;
      BigInt support = 0;
      for (const auto& [w, m] : dom.entries) {
        const BigInt orbit = weyl::orbit_size(Weight(g, w));
        total += orbit * m;
        support += orbit;
      }
      const BigInt dim_mu = characters::weyl_dim(mu);
      s.check("freudenthal_dimension", total == dim_mu, base, mu.labels(), {},
              values({{"sum", total.str()}, {"weyl_dim", dim_mu.str()}}));
      if (support <= options.char_cap) {
        full = characters::expand(g, dom);
      } else {
        ++s.report.skipped_cap;
      }
    }

    for (std::size_t j = 0; j < n; ++j) {
      const Weight& nu = weights[j];
      const auto closed = theorems::invariant_dim_closed_detailed(mu, nu);
      ++s.report.rule_hits[theorems::to_string(closed.rule)];
      const std::int64_t a = oracle_a(i, j);
      const std::string detail = values({{"closed", std::to_string(closed.value)},
                                         {"oracle_a", std::to_string(a)},
                                         {"rule", theorems::to_string(closed.rule)}});
      s.check("closed_vs_oracle_a", closed.value == a, base + j, mu.labels(), nu.labels(), detail);
      switch (closed.rule) {
        case theorems::ClosedFormRule::WeaklyOrthogonal:
        case theorems::ClosedFormRule::G2LabelZero:
        case theorems::ClosedFormRule::G2LabelOne:
          s.check("exception_is_zero", closed.value == 0 && a == 0, base + j, mu.labels(), nu.labels(), detail);
          break;
        case theorems::ClosedFormRule::NotRoot:
          s.check("vanishing", a == 0, base + j, mu.labels(), nu.labels(), detail);
          break;
        default:
          break;
      }
      const std::int64_t swapped = oracle_a(j, i);
      const std::int64_t conjugated = oracle_a(dual[i], dual[j]);
      s.check("symmetry", a == swapped && a == conjugated, base + j, mu.labels(), nu.labels(),
              values({{"a", std::to_string(a)}, {"swapped", std::to_string(swapped)},
                      {"conjugated", std::to_string(conjugated)}}));
      if (full) {
        const BigInt b = tensor::adjoint_multiplicity_in_product(mu, nu, *full);
        s.check("closed_vs_oracle_b", b == closed.value, base + j, mu.labels(), nu.labels(),
                values({{"closed", std::to_string(closed.value)}, {"oracle_b", b.str()}}));
      }
    }

    // mu - opposition(mu) is never a root.
    {
      Labels coords;
      const Labels diff = (mu - weights[dual[i]]).labels();
      const bool is_root = g.integral_coords(diff, coords) && g.is_root(coords);
      s.check("self_difference_not_root", !is_root, base, mu.labels(), {}, "");
    }

    if (dual[i] != i || !options.characters) return;
    const auto closed = theorems::split_closed(mu);
    s.check("kw_span", theorems::kw_question(mu) == theorems::in_self_dual_span(mu), base, mu.labels(), {}, "");
    std::optional<characters::VirtualCharacter> sym, alt;
    try {
      sym = characters::sym2_char(mu, options.char_cap);
      alt = characters::alt2_char(mu, options.char_cap);
    } catch (const SizeCapExceeded&) {
      ++s.report.skipped_cap;
      return;
    }
    const auto adj = characters::adjoint_highest_weights(g);
    theorems::SplitResult oracle;
    oracle.b_S = characters::invariant_dim_in(*sym, adj).convert_to<std::int64_t>();
    oracle.b_Lambda = characters::invariant_dim_in(*alt, adj).convert_to<std::int64_t>();
    oracle.b = oracle.b_S + oracle.b_Lambda;
    s.check("split_vs_oracle", closed == oracle, base, mu.labels(), {},
            values({{"closed", std::to_string(closed.b_S) + "/" + std::to_string(closed.b_Lambda)},
                    {"oracle", std::to_string(oracle.b_S) + "/" + std::to_string(oracle.b_Lambda)}}));
    s.check("b_matches_oracle_a", closed.b == oracle_a(i, i), base, mu.labels(), {}, "");

    const Weight zero = g.zero();
    const BigInt fs_value = characters::coefficient_of(*sym, zero) - characters::coefficient_of(*alt, zero);
    const auto fs = theorems::frobenius_schur(mu);
    s.check("fs_vs_oracle", BigInt(static_cast<int>(fs)) == fs_value, base, mu.labels(), {},
            values({{"closed", theorems::to_string(fs)}, {"oracle", fs_value.str()}}));
    if (closed.b > 0) {
      s.check("corollary_symplectic_iff_sym_larger",
              (closed.b_S > closed.b_Lambda) == (fs == theorems::FSIndicator::Symplectic), base, mu.labels(), {}, "");
    }
  });

  SweepReport report;
  report.algebra = g.name();
  report.weights = n;
  report.pairs = n * n;
  std::size_t best = SIZE_MAX;
  for (auto* group : {&phase1, &slices}) {
    for (const Slice& s : *group) {
      const auto saved = report.first_failure;
      report.merge(s.report);
      if (s.order < best) {
        best = s.order;
        report.first_failure = s.report.first_failure;
      } else {
        report.first_failure = saved;
      }
    }
  }
  return report;
}

}  // namespace lieinv::verify
