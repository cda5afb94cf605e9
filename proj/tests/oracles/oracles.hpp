#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library beyond reading plain data (Cartan rows).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

// ---- A_n weight multiplicities via semistandard tableaux ----

/// Partition of sl(n+1) highest weight from Dynkin labels (n+1 parts).
inline Vec partition_of_labels(const Vec& labels) {
  Vec p(labels.size() + 1, 0);
  for (std::size_t i = labels.size(); i-- > 0;) p[i] = p[i + 1] + labels[i];
  return p;
}

/// Number of SSYT of shape `shape` with content `content` (Kostka number).
/// Peels off the largest entry as a horizontal strip, recursively.
inline std::int64_t kostka(const Vec& shape, const Vec& content) {
  const std::int64_t total = std::accumulate(shape.begin(), shape.end(), std::int64_t{0});
  if (std::accumulate(content.begin(), content.end(), std::int64_t{0}) != total) return 0;
  if (std::any_of(content.begin(), content.end(), [](std::int64_t c) { return c < 0; })) return 0;
  std::map<std::pair<Vec, std::size_t>, std::int64_t> memo;
  std::function<std::int64_t(const Vec&, std::size_t)> count = [&](const Vec& lam, std::size_t k) -> std::int64_t {
    if (k == 0) return std::all_of(lam.begin(), lam.end(), [](std::int64_t x) { return x == 0; }) ? 1 : 0;
    auto key = std::make_pair(lam, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // entries equal to k occupy a horizontal strip; rows >= k are empty after removal
    const std::int64_t c = content[k - 1];
    std::int64_t n = 0;
    Vec mu(lam.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
      if (i == lam.size()) {
        if (left == 0) n += count(mu, k - 1);
        return;
      }
      const std::int64_t lo = i + 1 < lam.size() ? lam[i + 1] : 0;
      for (std::int64_t v = lam[i]; v >= lo && lam[i] - v <= left; --v) {
        if (i >= k - 1 && v != 0) continue;  // row i holds only entries > i
        mu[i] = v;
        rec(i + 1, left - (lam[i] - v));
      }
      mu[i] = 0;
    };
    rec(0, c);
    memo[key] = n;
    return n;
  };
  return count(shape, content.size());
}

/// Multiplicity of the weight with Dynkin labels `weight` in the sl(n+1)
/// irreducible with labels `highest`.
inline std::int64_t an_weight_multiplicity(const Vec& highest, const Vec& weight) {
  const std::size_t n = highest.size();
  const Vec shape = partition_of_labels(highest);
  const std::int64_t total = std::accumulate(shape.begin(), shape.end(), std::int64_t{0});
  // content c with c_i - c_{i+1} = weight_i and sum c = total
  Vec offs(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offs[i + 1] = offs[i] - weight[i];
  const std::int64_t s = std::accumulate(offs.begin(), offs.end(), std::int64_t{0});
  const std::int64_t rem = total - s;
  if (rem % static_cast<std::int64_t>(n + 1) != 0) return 0;
  const std::int64_t c1 = rem / static_cast<std::int64_t>(n + 1);
  Vec content(n + 1);
  for (std::size_t i = 0; i <= n; ++i) content[i] = c1 + offs[i];
  return kostka(shape, content);
}

// ---- Root systems in epsilon coordinates (doubled, so F4 stays integral) ----

struct EpsModel {
  std::vector<Vec> roots;   // doubled coordinates
  std::vector<Vec> simple;  // doubled, Bourbaki order
};

inline std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

inline Vec neg(Vec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline EpsModel eps_model(char family, int n) {
  EpsModel m;
  auto d = static_cast<std::size_t>(n);
  auto pm_pairs = [&](std::size_t dim, std::int64_t scale) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Vec v(dim, 0);
            v[i] = si * scale;
            v[j] = sj * scale;
            m.roots.push_back(v);
          }
  };
  auto chain = [&](std::size_t dim, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      Vec v(dim, 0);
      v[i] = 2;
      v[i + 1] = -2;
      m.simple.push_back(v);
    }
  };
  switch (family) {
    case 'A':
      d = static_cast<std::size_t>(n + 1);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (i != j) {
            Vec v(d, 0);
            v[i] = 2;
            v[j] = -2;
            m.roots.push_back(v);
          }
      chain(d, d - 1);
      break;
    case 'B':
    case 'C': {
      const std::int64_t s = family == 'B' ? 2 : 4;
      pm_pairs(d, 2);
      for (std::size_t i = 0; i < d; ++i)
        for (int sg : {1, -1}) {
          Vec v(d, 0);
          v[i] = sg * s;
          m.roots.push_back(v);
        }
      chain(d, d - 1);
      Vec last(d, 0);
      last[d - 1] = s;
      m.simple.push_back(last);
      break;
    }
    case 'D': {
      pm_pairs(d, 2);
      chain(d, d - 1);
      Vec last(d, 0);
      last[d - 2] = 2;
      last[d - 1] = 2;
      m.simple.push_back(last);
      break;
    }
    case 'F': {
      d = 4;
      pm_pairs(4, 2);
      for (std::size_t i = 0; i < 4; ++i)
        for (int sg : {1, -1}) {
          Vec v(4, 0);
          v[i] = 2 * sg;
          m.roots.push_back(v);
        }
      for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int k = 0; k < 4; ++k) v[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -1 : 1;
        m.roots.push_back(v);
      }
      m.simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    }
    case 'G': {
      // plane x1 + x2 + x3 = 0; short e_i - e_j, long +-(2e_i - e_j - e_k)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) {
            Vec v(3, 0);
            v[i] = 2;
            v[j] = -2;
            m.roots.push_back(v);
          }
      for (std::size_t i = 0; i < 3; ++i) {
        Vec v(3, -2);
        v[i] = 4;
        m.roots.push_back(v);
        m.roots.push_back(neg(v));
      }
      m.simple = {{2, -2, 0}, {-2, 4, -2}};  // e1-e2 (short), -e1+2e2-e3
      break;
    }
    default:
      break;
  }
  return m;
}

inline bool contains(const std::vector<Vec>& set, const Vec& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

/// Cartan matrix C_ij = 2 (a_i, a_j) / (a_j, a_j) from an epsilon model.
inline std::vector<Vec> cartan_of(const EpsModel& m) {
  std::vector<Vec> c(m.simple.size(), Vec(m.simple.size()));
  for (std::size_t i = 0; i < m.simple.size(); ++i)
    for (std::size_t j = 0; j < m.simple.size(); ++j)
      c[i][j] = 2 * dot(m.simple[i], m.simple[j]) / dot(m.simple[j], m.simple[j]);
  return c;
}

/// Text of a doubled epsilon vector: "e1-e2", "2e3", "1/2(e1-e2-e3-e4)".
inline std::string eps_text(const Vec& v) {
  const bool half = std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x % 2 != 0; });
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t c = half ? v[i] : v[i] / 2;
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "e" + std::to_string(i + 1);
  }
  return half ? "1/2(" + out + ")" : out;
}

/// (j (1-based), alpha text, beta text) with alpha_j short simple and beta
/// weakly orthogonal to it, by brute force in epsilon coordinates.
inline std::set<std::tuple<std::size_t, std::string, std::string>> table1_rows(const EpsModel& m) {
  std::int64_t long_norm = 0;
  for (const auto& r : m.roots) long_norm = std::max(long_norm, dot(r, r));
  std::set<std::tuple<std::size_t, std::string, std::string>> rows;
  for (std::size_t j = 0; j < m.simple.size(); ++j) {
    const Vec& a = m.simple[j];
    if (dot(a, a) == long_norm) continue;
    for (const auto& b : m.roots) {
      if (dot(a, b) == 0 && contains(m.roots, add(a, b))) rows.insert({j + 1, eps_text(a), eps_text(b)});
    }
  }
  return rows;
}

// ---- sl2 ----

/// V_a (x) V_b = sum_{k=0}^{min(a,b)} V_{a+b-2k} (highest weights as labels).
inline std::map<std::int64_t, std::int64_t> sl2_clebsch_gordan(std::int64_t a, std::int64_t b) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t k = 0; k <= std::min(a, b); ++k) ++out[a + b - 2 * k];
  return out;
}

/// S^2 V_n = V_{2n} + V_{2n-4} + ...; Lambda^2 V_n = V_{2n-2} + V_{2n-6} + ...
inline std::map<std::int64_t, std::int64_t> sl2_sym2(std::int64_t n) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t w = 2 * n; w >= 0; w -= 4) ++out[w];
  return out;
}

inline std::map<std::int64_t, std::int64_t> sl2_alt2(std::int64_t n) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t w = 2 * n - 2; w >= 0; w -= 4) ++out[w];
  return out;
}

// ---- Weyl alternation from a Cartan matrix ----

/// Reflection s_j on Dynkin labels; row j of the Cartan matrix holds the labels of alpha_j.
inline void reflect(const std::vector<Vec>& cartan, Vec& lam, std::size_t j) {
  const std::int64_t p = lam[j];
  for (std::size_t k = 0; k < lam.size(); ++k) lam[k] -= p * cartan[j][k];
}

/// Dominant representative of the orbit of lam.
inline Vec dominant(const std::vector<Vec>& cartan, Vec lam) {
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t j = 0; j < lam.size(); ++j)
      if (lam[j] < 0) {
        reflect(cartan, lam, j);
        moved = true;
      }
  }
  return lam;
}

/// All (w rho, sign(w)); the orbit of rho is regular so this enumerates W.
inline std::vector<std::pair<Vec, int>> signed_rho_orbit(const std::vector<Vec>& cartan) {
  const Vec rho(cartan.size(), 1);
  std::map<Vec, int> seen{{rho, 1}};
  std::vector<Vec> frontier{rho};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        Vec w = v;
        reflect(cartan, w, j);
        if (seen.emplace(w, -seen[v]).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// c_lambda = sum_w sign(w) mult_a(lambda + rho - w rho), where mult_a is
/// read off the dominant record of a Weyl-invariant character.
inline std::map<Vec, std::int64_t> alternation_coefficients(const std::vector<Vec>& cartan,
                                                            const std::map<Vec, std::int64_t>& dominant_record) {
  const auto orbit = signed_rho_orbit(cartan);
  auto mult = [&](const Vec& x) -> std::int64_t {
    auto it = dominant_record.find(dominant(cartan, x));
    return it == dominant_record.end() ? 0 : it->second;
  };
  // candidates: dominant lam = y - (rho - w rho) over the full support y
  std::set<Vec> candidates;
  for (const auto& [key, m] : dominant_record) {
    (void)m;
    std::set<Vec> seen{key};
    std::vector<Vec> frontier{key};
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& y : frontier) {
        for (std::size_t j = 0; j < cartan.size(); ++j) {
          Vec z = y;
          reflect(cartan, z, j);
          if (seen.insert(z).second) next.push_back(z);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& y : seen) {
      for (const auto& [wrho, sign] : orbit) {
        (void)sign;
        Vec lam = y;
        bool dominant_lam = true;
        for (std::size_t k = 0; k < lam.size(); ++k) {
          lam[k] -= 1 - wrho[k];
          dominant_lam = dominant_lam && lam[k] >= 0;
        }
        if (dominant_lam) candidates.insert(lam);
      }
    }
  }
  std::map<Vec, std::int64_t> out;
  for (const auto& lam : candidates) {
    std::int64_t c = 0;
    for (const auto& [wrho, sign] : orbit) {
      Vec x = lam;
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += 1 - wrho[k];
      c += sign * mult(x);
    }
    if (c != 0) out[lam] = c;
  }
  return out;
}

/// Weyl dimension from a Cartan matrix and symmetrizer d_i = (a_i, a_i)/2
/// via the Weyl group order-free product over positive coroots, using
/// the eps model for root data: dim = prod (lam + rho, a) / (rho, a).
inline std::int64_t weyl_dim_eps(const EpsModel& m, const Vec& labels) {
  // fundamental weights in eps coordinates are awkward; work with the
  // pairing <lam + rho, a^vee> = sum_j (labels_j + 1) <w_j, a^vee>, and
  // a^vee = sum_j c_j (|a_j|^2/|a|^2) a_j^vee with a = sum_j c_j a_j.
  const std::size_t n = m.simple.size();
  // Solve a = sum c_j a_j by least squares on small integer systems:
  // use the Gram matrix G_ij = (a_i, a_j) and rhs (a, a_i).
  std::vector<std::vector<double>> gram(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = static_cast<double>(dot(m.simple[i], m.simple[j]));
  double num = 1, den = 1;
  for (const Vec& a : m.roots) {
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = static_cast<double>(dot(a, m.simple[i]));
    // Gaussian elimination
    auto g = gram;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(g[r][c]) > std::abs(g[p][c])) p = r;
      std::swap(g[c], g[p]);
      std::swap(rhs[c], rhs[p]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        const double f = g[r][c] / g[c][c];
        for (std::size_t k = 0; k < n; ++k) g[r][k] -= f * g[c][k];
        rhs[r] -= f * rhs[c];
      }
    }
    bool positive = true;
    std::vector<double> coeff(n);
    for (std::size_t i = 0; i < n; ++i) {
      coeff[i] = rhs[i] / g[i][i];
      if (coeff[i] < -1e-9) positive = false;
    }
    if (!positive) continue;
    const double an = static_cast<double>(dot(a, a));
    double pr = 0, pl = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = coeff[j] * static_cast<double>(dot(m.simple[j], m.simple[j])) / an;
      pr += w;
      pl += w * static_cast<double>(labels[j] + 1);
    }
    num *= pl;
    den *= pr;
  }
  return static_cast<std::int64_t>(std::llround(num / den));
}

}  // namespace oracle
