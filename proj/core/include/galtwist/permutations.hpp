#pragma once

// Permutations of the underlying set of G and the ideals they preserve.

#include <cstdint>
#include <optional>
#include <vector>

#include "galtwist/grouprings.hpp"

namespace galtwist::grouprings {

/// sigma[g] is the image of element g.
using Permutation = std::vector<std::size_t>;

/// Throws PreconditionError unless sigma is a bijection on the element indices.
void validate_permutation(const GroupPtr& group, const Permutation& sigma);

/// sigma(gH) = sigma(g)H for every g and every subgroup H of prime order.
bool perm_condition_star(const GroupPtr& group, const Permutation& sigma);

/// The linear extension of sigma maps the ideal's lattice into itself.
bool perm_stabilizes(const GroupRingIdeal& ideal, const Permutation& sigma);

/// For cyclic G of squarefree order p_1...p_t: sigma = prod sigma_i with
/// sigma_i permuting the order-p_i factor, i.e. the residue of sigma(g) mod
/// p_i depends only on the residue of g mod p_i (tau^a <-> a).
bool perm_in_prime_factor_product(const GroupPtr& group, const Permutation& sigma);

/// Lexicographic unranking of index in [0, n!).
Permutation unrank_permutation(std::size_t n, std::uint64_t index);

struct PermScanResult {
  std::uint64_t total = 0;
  std::uint64_t condition_star = 0;
  std::uint64_t stabilizing = 0;
  /// Present when |G| is squarefree.
  std::optional<std::uint64_t> prime_factor_product;
  /// Permutations (by lexicographic index) where the criteria disagree; at most 16 kept.
  std::vector<std::uint64_t> mismatches;
  std::uint64_t mismatch_count = 0;
};

/// Exhaustive scan over all |G|! permutations of a cyclic group, comparing
/// condition (*) with stabilization of cyclic_twist_ideal(G). Work is split
/// into contiguous index ranges; the result does not depend on workers.
/// Throws ResourceError for |G| > 10.
PermScanResult scan_permutations(const GroupPtr& group, unsigned workers = 1);

}  // namespace galtwist::grouprings
