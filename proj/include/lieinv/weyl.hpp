#pragma once

#include <cstddef>
#include <vector>

#include "lieinv/root_system.hpp"

namespace lieinv::weyl {

/// Outcome of moving lambda + rho into the dominant chamber.
struct DominantResult {
  Weight weight;  // dominant (after removing rho) unless singular
  int sign = 1;
  bool singular = false;
};

/// s_j(lambda) = lambda - <lambda, alpha_j^vee> alpha_j.
Weight reflect(const Weight& lambda, std::size_t j);

/// Racah-Speiser straightening: chi_lambda = sign * chi_weight, or zero when
/// lambda + rho lies on a wall. Reflects at the smallest negative index.
DominantResult to_dominant_shifted(const Weight& lambda);

/// Dominant representative of the (unshifted) Weyl orbit of lambda.
Weight to_dominant(const Weight& lambda);

/// mu -> -w0(mu) for dominant mu (labels of the dual representation).
Weight opposition(const Weight& mu);

/// The diagram permutation sigma with opposition(w_j) = w_{sigma[j]}.
std::vector<std::size_t> opposition_permutation(const RootSystem& g);

/// Linear extension of -w0 to arbitrary weights (a permutation of labels).
Weight minus_w0(const Weight& lambda);

/// Full Weyl orbit as label vectors; order unspecified.
std::vector<Labels> orbit(const Weight& lambda);

/// |W|.
BigInt group_order(const RootSystem& g);

/// |W . lambda| for dominant lambda, via |W| / |W_J| with J the zero labels.
BigInt orbit_size(const Weight& lambda);

namespace detail {

/// In-place variants on raw labels; hot paths in the tensor and character
/// engines use these to avoid allocating Weight objects.
void reflect_in_place(const RootSystem& g, Labels& lambda, std::size_t j);

/// Shifts by rho, straightens, unshifts. Returns the sign, 0 when singular.
int to_dominant_shifted_in_place(const RootSystem& g, Labels& lambda);

void to_dominant_in_place(const RootSystem& g, Labels& lambda);

}  // namespace detail

}  // namespace lieinv::weyl
