#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lieinv/errors.hpp"
#include "lieinv/numeric.hpp"

namespace lieinv {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// One simple factor, e.g. B3. Low-rank aliases are rejected so every
/// isomorphism class has exactly one presentation (B2 not C2, A3 not D3).
struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family family, int rank);

  std::string name() const;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Ordered list of simple factors.
struct AlgebraSpec {
  std::vector<SimpleType> factors;

  explicit AlgebraSpec(std::vector<SimpleType> factors);

  /// Parses "A2", "B3xG2", "e6" (case-insensitive, factors joined by 'x').
  static AlgebraSpec parse(std::string_view text);

  std::size_t rank() const;
  std::string name() const;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

class RootSystem;

/// A weight in Dynkin-label coordinates: labels[j] = <lambda, alpha_j^vee>.
/// Holds a non-owning reference to its root system, which must outlive it.
class Weight {
 public:
  Weight(const RootSystem& algebra, Labels labels);

  const Labels& labels() const noexcept { return labels_; }
  const RootSystem& algebra() const noexcept { return *algebra_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::int64_t operator[](std::size_t j) const { return labels_[j]; }

  bool is_dominant() const noexcept;
  bool is_zero() const noexcept;

  /// Exact root-basis coordinates.
  std::vector<Rational> root_coords() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight operator*(std::int64_t k) const;

  bool same_algebra(const Weight& other) const noexcept { return algebra_ == other.algebra_; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.algebra_ == b.algebra_ && a.labels_ == b.labels_;
  }

  std::string str() const;

 private:
  const RootSystem* algebra_;
  Labels labels_;
};

/// A root in the simple-root basis. Support lies in a single factor.
struct Root {
  Labels coords;
  Labels labels;  // <root, alpha_j^vee>
  bool is_long = true;
  std::size_t factor = 0;
  const RootSystem* algebra = nullptr;

  bool is_positive() const noexcept;
  std::int64_t height() const noexcept;
  friend bool operator==(const Root& a, const Root& b) {
    return a.algebra == b.algebra && a.coords == b.coords;
  }
};

/// Immutable Cartan, root and weight data of a semisimple Lie algebra.
/// Long roots of every factor have squared length 2.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const AlgebraSpec& spec);
  static std::shared_ptr<const RootSystem> build(std::string_view spec);

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  const AlgebraSpec& spec() const noexcept { return spec_; }
  std::string name() const { return spec_.name(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t num_factors() const noexcept { return spec_.factors.size(); }

  /// Cartan matrix, cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is the
  /// label vector of alpha_i.
  const std::vector<Labels>& cartan() const noexcept { return cartan_; }
  /// (alpha_i, alpha_j).
  const std::vector<std::vector<Rational>>& sym_form() const noexcept { return sym_form_; }

  /// Positive roots ordered by factor, then lexicographically on coords.
  std::span<const Root> positive_roots() const noexcept { return positive_roots_; }
  /// Positive roots followed by their negatives (same order).
  std::span<const Root> roots() const noexcept { return roots_; }
  const Root& simple_root(std::size_t j) const;
  std::span<const Root> highest_roots() const noexcept { return highest_roots_; }

  std::span<const Weight> fundamental_weights() const noexcept { return fundamental_weights_; }
  const Weight& fundamental_weight(std::size_t j) const;
  const Weight& rho() const noexcept { return rho_.front(); }
  Weight zero() const;
  Weight weight(Labels labels) const;

  /// Coefficients k_j with 2 rho^vee = sum_j k_j alpha_j^vee, so that
  /// <lambda, 2 rho^vee> = sum_j k_j labels_j.
  const Labels& two_rho_check() const noexcept { return two_rho_check_; }
  std::int64_t pairing_two_rho_check(const Weight& lambda) const;

  /// Factor containing simple root j, and the simple-index range of factor f.
  std::size_t factor_of(std::size_t j) const { return factor_of_.at(j); }
  std::size_t factor_offset(std::size_t f) const { return factor_offset_.at(f); }
  std::size_t factor_rank(std::size_t f) const {
    return static_cast<std::size_t>(spec_.factors.at(f).rank);
  }

  /// Index into roots() of the root with these coordinates, or nullptr.
  const Root* find_root(const Labels& coords) const;
  bool is_root(const Labels& coords) const { return find_root(coords) != nullptr; }

  /// Labels of sum_i coords_i alpha_i.
  Labels labels_of_coords(const Labels& coords) const;
  /// Root-basis coordinates of a weight (C^{-T} labels).
  std::vector<Rational> coords_of_labels(const Labels& labels) const;
  /// Root-basis coordinates when they are all integers (root lattice), else empty.
  bool integral_coords(const Labels& labels, Labels& out) const;

  /// Exact (lambda, nu) under the normalized invariant form.
  Rational inner(const Labels& a, const Labels& b) const;
  /// (a, b) * form_scale(), exact integer.
  std::int64_t inner_scaled(const Labels& a, const Labels& b) const;
  /// (lambda, alpha) * form_scale() for a root alpha.
  std::int64_t inner_root_scaled(const Labels& lambda, const Root& alpha) const;
  /// (alpha, alpha) * form_scale().
  std::int64_t root_norm_scaled(const Root& alpha) const;
  std::int64_t form_scale() const noexcept { return form_scale_; }

  /// Sum of root-basis coordinates, scaled by height_scale() to an integer.
  std::int64_t height_scaled(const Labels& labels) const;
  std::int64_t height_scale() const noexcept { return height_scale_; }

  /// dim g = |roots| + rank.
  std::size_t dimension() const noexcept { return roots_.size() + rank_; }

 private:
  explicit RootSystem(AlgebraSpec spec);
  void build_cartan();
  void build_roots();
  void build_weights();

  AlgebraSpec spec_;
  std::size_t rank_ = 0;
  std::vector<Labels> cartan_;
  std::vector<std::vector<Rational>> sym_form_;
  std::vector<Rational> simple_norm_;  // (alpha_j, alpha_j)
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<std::size_t> factor_of_;
  std::vector<std::size_t> factor_offset_;

  std::vector<Root> positive_roots_;
  std::vector<Root> roots_;
  std::vector<Root> highest_roots_;
  std::unordered_map<Labels, std::size_t, LabelsHash> root_index_;

  std::vector<Weight> fundamental_weights_;
  std::vector<Weight> rho_;  // single element; Weight has no default ctor
  Labels two_rho_check_;

  std::int64_t form_scale_ = 1;
  std::vector<std::vector<std::int64_t>> weight_gram_scaled_;  // (w_i, w_j) * scale
  std::vector<std::int64_t> half_norm_scaled_;                 // (a_j, a_j)/2 * scale
  std::int64_t height_scale_ = 1;
  std::vector<std::int64_t> fund_height_scaled_;
};

/// <lambda, alpha^vee>, exact.
std::int64_t pairing(const Weight& lambda, const Root& alpha);
/// lambda + gamma in Dynkin labels.
Weight add_root(const Weight& lambda, const Root& gamma);
/// Negation of a root.
const Root& negate(const Root& gamma);

}  // namespace lieinv
