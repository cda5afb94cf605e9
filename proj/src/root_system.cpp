#include "lieinv/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace lieinv {

std::string to_string(const Labels& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

SimpleType::SimpleType(Family family, int rank) : family(family), rank(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    std::string hint;
    if (family == Family::C && rank == 2) hint = " (use B2)";
    if (family == Family::D && rank == 3) hint = " (use A3)";
    if (family == Family::D && rank == 2) hint = " (use A1xA1)";
    throw InvalidSpec("invalid simple type " + std::string(1, family_letter(family)) +
                      std::to_string(rank) + hint);
  }
}

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

AlgebraSpec::AlgebraSpec(std::vector<SimpleType> f) : factors(std::move(f)) {
  if (factors.empty()) throw InvalidSpec("algebra needs at least one simple factor");
}

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  std::vector<SimpleType> factors;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw InvalidSpec("empty factor in algebra spec '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    const std::string digits = token.substr(1);
    if (letter < 'A' || letter > 'G' || digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidSpec("cannot parse factor '" + token + "'");
    }
    factors.emplace_back(static_cast<Family>(letter - 'A'), std::stoi(digits));
    token.clear();
  };
  for (char c : text) {
    if (c == 'x' || c == 'X') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  flush();
  return AlgebraSpec(std::move(factors));
}

std::size_t AlgebraSpec::rank() const {
  std::size_t r = 0;
  for (const auto& f : factors) r += static_cast<std::size_t>(f.rank);
  return r;
}

std::string AlgebraSpec::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += factors[i].name();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(const RootSystem& algebra, Labels labels) : algebra_(&algebra), labels_(std::move(labels)) {
  if (labels_.size() != algebra.rank()) {
    throw ParseError("weight has " + std::to_string(labels_.size()) + " labels, algebra " +
                     algebra.name() + " has rank " + std::to_string(algebra.rank()));
  }
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](std::int64_t x) { return x >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<Rational> Weight::root_coords() const { return algebra_->coords_of_labels(labels_); }

Weight Weight::operator+(const Weight& other) const {
  if (!same_algebra(other)) throw MismatchedAlgebra();
  Labels out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(labels_[i], other.labels_[i]);
  return Weight(*algebra_, std::move(out));
}

Weight Weight::operator-(const Weight& other) const {
  if (!same_algebra(other)) throw MismatchedAlgebra();
  Labels out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::sub(labels_[i], other.labels_[i]);
  return Weight(*algebra_, std::move(out));
}

Weight Weight::operator-() const {
  Labels out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::sub(0, labels_[i]);
  return Weight(*algebra_, std::move(out));
}

Weight Weight::operator*(std::int64_t k) const {
  Labels out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::mul(labels_[i], k);
  return Weight(*algebra_, std::move(out));
}

std::string Weight::str() const { return to_string(labels_); }

// ---------------------------------------------------------------------------
// Root

bool Root::is_positive() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t Root::height() const noexcept { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

// ---------------------------------------------------------------------------
// RootSystem construction

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix invert(const std::vector<Labels>& m) {
  const std::size_t n = m.size();
  RMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  RMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

BigInt lcm_of_denominators(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& q : values) {
    const BigInt d = boost::multiprecision::denominator(q);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

// Cartan block and simple-root squared lengths for one factor (Bourbaki).
void simple_block(const SimpleType& t, std::vector<Labels>& c, std::vector<Rational>& norms) {
  const auto n = static_cast<std::size_t>(t.rank);
  c.assign(n, Labels(n, 0));
  norms.assign(n, Rational(2));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      norms[n - 1] = 1;
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      for (std::size_t i = 0; i + 1 < n; ++i) norms[i] = 1;
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E: {
      const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
      for (auto [i, j] : edges)
        if (j < n) link(i, j);
      break;
    }
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      norms[2] = norms[3] = 1;
      break;
    case Family::G:
      link(0, 1);
      c[1][0] = -3;
      norms[0] = Rational(2, 3);
      break;
  }
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(const AlgebraSpec& spec) {
  return std::shared_ptr<const RootSystem>(new RootSystem(spec));
}

std::shared_ptr<const RootSystem> RootSystem::build(std::string_view spec) {
  return build(AlgebraSpec::parse(spec));
}

RootSystem::RootSystem(AlgebraSpec spec) : spec_(std::move(spec)) {
  rank_ = spec_.rank();
  build_cartan();
  build_roots();
  build_weights();
}

void RootSystem::build_cartan() {
  cartan_.assign(rank_, Labels(rank_, 0));
  simple_norm_.assign(rank_, Rational(0));
  std::size_t offset = 0;
  for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
    std::vector<Labels> block;
    std::vector<Rational> norms;
    simple_block(spec_.factors[f], block, norms);
    factor_offset_.push_back(offset);
    for (std::size_t i = 0; i < block.size(); ++i) {
      factor_of_.push_back(f);
      simple_norm_[offset + i] = norms[i];
      for (std::size_t j = 0; j < block.size(); ++j) cartan_[offset + i][offset + j] = block[i][j];
    }
    offset += block.size();
  }
  sym_form_.assign(rank_, std::vector<Rational>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) sym_form_[i][j] = Rational(cartan_[i][j]) * simple_norm_[j] / 2;
  inverse_cartan_ = invert(cartan_);

  // Integer scalings of the form and of heights.
  std::vector<Rational> gram_entries;
  for (std::size_t i = 0; i < rank_; ++i) {
    gram_entries.push_back(simple_norm_[i] / 2);
    for (std::size_t j = 0; j < rank_; ++j) gram_entries.push_back(inverse_cartan_[j][i] * simple_norm_[i] / 2);
  }
  form_scale_ = lcm_of_denominators(gram_entries).convert_to<std::int64_t>();
  weight_gram_scaled_.assign(rank_, std::vector<std::int64_t>(rank_));
  half_norm_scaled_.assign(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    half_norm_scaled_[i] = to_int64(simple_norm_[i] / 2 * form_scale_);
    for (std::size_t j = 0; j < rank_; ++j)
      weight_gram_scaled_[i][j] = to_int64(inverse_cartan_[j][i] * simple_norm_[i] / 2 * form_scale_);
  }
  std::vector<Rational> fund_heights(rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t k = 0; k < rank_; ++k) fund_heights[j] += inverse_cartan_[j][k];
  height_scale_ = lcm_of_denominators(fund_heights).convert_to<std::int64_t>();
  fund_height_scaled_.resize(rank_);
  for (std::size_t j = 0; j < rank_; ++j) fund_height_scaled_[j] = to_int64(fund_heights[j] * height_scale_);
}

void RootSystem::build_roots() {
  // Closure of the simple roots under simple reflections.
  std::unordered_set<Labels, LabelsHash> seen;
  std::deque<Labels> queue;
  for (std::size_t j = 0; j < rank_; ++j) {
    Labels e(rank_, 0);
    e[j] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    Labels beta = std::move(queue.front());
    queue.pop_front();
    const Labels lab = labels_of_coords(beta);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (lab[i] == 0) continue;
      Labels image = beta;
      image[i] -= lab[i];
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }

  for (const Labels& coords : seen) {
    const bool positive = std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x >= 0; });
    if (!positive) continue;
    Root r;
    r.coords = coords;
    r.labels = labels_of_coords(coords);
    r.algebra = this;
    r.factor = factor_of_.at(static_cast<std::size_t>(
        std::find_if(coords.begin(), coords.end(), [](std::int64_t x) { return x != 0; }) - coords.begin()));
    positive_roots_.push_back(std::move(r));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.coords < b.coords;
  });
  for (Root& r : positive_roots_) {
    Rational norm = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j)
        if (r.coords[i] && r.coords[j]) norm += sym_form_[i][j] * r.coords[i] * r.coords[j];
    r.is_long = norm == 2;
  }

  roots_ = positive_roots_;
  for (const Root& r : positive_roots_) {
    Root neg = r;
    for (auto& x : neg.coords) x = -x;
    for (auto& x : neg.labels) x = -x;
    roots_.push_back(std::move(neg));
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) root_index_.emplace(roots_[i].coords, i);

  for (std::size_t f = 0; f < num_factors(); ++f) {
    const Root* best = nullptr;
    for (const Root& r : positive_roots_)
      if (r.factor == f && (!best || r.height() > best->height())) best = &r;
    highest_roots_.push_back(*best);
  }
}

void RootSystem::build_weights() {
  for (std::size_t j = 0; j < rank_; ++j) {
    Labels l(rank_, 0);
    l[j] = 1;
    fundamental_weights_.emplace_back(*this, std::move(l));
  }
  rho_.emplace_back(*this, Labels(rank_, 1));

  two_rho_check_.assign(rank_, 0);
  for (const Root& r : positive_roots_) {
    const std::int64_t norm = root_norm_scaled(r);
    for (std::size_t j = 0; j < rank_; ++j) {
      if (r.coords[j] == 0) continue;
      // alpha^vee = sum_j c_j (alpha_j, alpha_j)/(alpha, alpha) alpha_j^vee
      const std::int64_t num = r.coords[j] * 2 * half_norm_scaled_[j];
      if (num % norm != 0) throw std::logic_error("non-integral coroot coordinate");
      two_rho_check_[j] += num / norm;
    }
  }
}

// ---------------------------------------------------------------------------
// RootSystem queries

const Root& RootSystem::simple_root(std::size_t j) const {
  if (j >= rank_) throw IndexOutOfRange("simple root index " + std::to_string(j) + " out of range");
  Labels e(rank_, 0);
  e[j] = 1;
  return roots_[root_index_.at(e)];
}

const Weight& RootSystem::fundamental_weight(std::size_t j) const {
  if (j >= rank_) throw IndexOutOfRange("fundamental weight index " + std::to_string(j) + " out of range");
  return fundamental_weights_[j];
}

Weight RootSystem::zero() const { return Weight(*this, Labels(rank_, 0)); }

Weight RootSystem::weight(Labels labels) const { return Weight(*this, std::move(labels)); }

std::int64_t RootSystem::pairing_two_rho_check(const Weight& lambda) const {
  if (&lambda.algebra() != this) throw MismatchedAlgebra();
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s = checked::add(s, checked::mul(two_rho_check_[j], lambda[j]));
  return s;
}

const Root* RootSystem::find_root(const Labels& coords) const {
  auto it = root_index_.find(coords);
  return it == root_index_.end() ? nullptr : &roots_[it->second];
}

Labels RootSystem::labels_of_coords(const Labels& coords) const {
  Labels out(rank_, 0);
  for (std::size_t k = 0; k < rank_; ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      if (cartan_[k][j]) out[j] = checked::add(out[j], checked::mul(coords[k], cartan_[k][j]));
  }
  return out;
}

std::vector<Rational> RootSystem::coords_of_labels(const Labels& labels) const {
  std::vector<Rational> out(rank_);
  for (std::size_t k = 0; k < rank_; ++k)
    for (std::size_t j = 0; j < rank_; ++j)
      if (labels[j]) out[k] += inverse_cartan_[j][k] * labels[j];
  return out;
}

bool RootSystem::integral_coords(const Labels& labels, Labels& out) const {
  const auto q = coords_of_labels(labels);
  out.assign(rank_, 0);
  for (std::size_t k = 0; k < rank_; ++k) {
    if (boost::multiprecision::denominator(q[k]) != 1) return false;
    out[k] = boost::multiprecision::numerator(q[k]).convert_to<std::int64_t>();
  }
  return true;
}

Rational RootSystem::inner(const Labels& a, const Labels& b) const { return Rational(inner_scaled(a, b), form_scale_); }

std::int64_t RootSystem::inner_scaled(const Labels& a, const Labels& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      if (b[j] && weight_gram_scaled_[i][j])
        s = checked::add(s, checked::mul(checked::mul(a[i], b[j]), weight_gram_scaled_[i][j]));
  }
  return s;
}

std::int64_t RootSystem::inner_root_scaled(const Labels& lambda, const Root& alpha) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < rank_; ++k)
    if (alpha.coords[k]) s = checked::add(s, checked::mul(checked::mul(alpha.coords[k], lambda[k]), half_norm_scaled_[k]));
  return s;
}

std::int64_t RootSystem::root_norm_scaled(const Root& alpha) const { return inner_root_scaled(alpha.labels, alpha); }

std::int64_t RootSystem::height_scaled(const Labels& labels) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s = checked::add(s, checked::mul(labels[j], fund_height_scaled_[j]));
  return s;
}

// ---------------------------------------------------------------------------

std::int64_t pairing(const Weight& lambda, const Root& alpha) {
  const RootSystem& g = lambda.algebra();
  if (alpha.algebra != &g) throw MismatchedAlgebra();
  const std::int64_t num = 2 * g.inner_root_scaled(lambda.labels(), alpha);
  const std::int64_t den = g.root_norm_scaled(alpha);
  if (num % den != 0) throw std::logic_error("non-integral pairing; weight is not integral");
  return num / den;
}

Weight add_root(const Weight& lambda, const Root& gamma) {
  if (gamma.algebra != &lambda.algebra()) throw MismatchedAlgebra();
  Labels out = lambda.labels();
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked::add(out[j], gamma.labels[j]);
  return Weight(lambda.algebra(), std::move(out));
}

const Root& negate(const Root& gamma) {
  Labels neg = gamma.coords;
  for (auto& x : neg) x = -x;
  const Root* r = gamma.algebra->find_root(neg);
  if (!r) throw std::logic_error("negation of a root is not a root");
  return *r;
}

}  // namespace lieinv
