#include "galtwist/permutations.hpp"

#include <algorithm>
#include <thread>

#include "galtwist/cyclopoly.hpp"
#include "galtwist/errors.hpp"

namespace galtwist::grouprings {

namespace {

constexpr std::size_t kMaxScanOrder = 10;

// coset_of[H][g] = smallest element of gH, one row per prime-order subgroup H.
std::vector<std::vector<std::size_t>> prime_coset_tables(const GroupPtr& group) {
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& h : groups::all_subgroups(group)) {
    if (!cyclo::is_prime(h.order())) continue;
    std::vector<std::size_t> coset(group->order());
    for (std::size_t g = 0; g < group->order(); ++g) {
      std::size_t m = g;
      for (std::size_t x : h.elements()) m = std::min(m, group->mul(g, x));
      coset[g] = m;
    }
    tables.push_back(std::move(coset));
  }
  return tables;
}

bool star_with(const std::vector<std::vector<std::size_t>>& tables, const Permutation& sigma) {
  // sigma(gH) = sigma(g)H iff sigma maps each coset into a single coset.
  for (const auto& coset : tables)
    for (std::size_t g = 0; g < sigma.size(); ++g)
      if (coset[sigma[g]] != coset[sigma[coset[g]]]) return false;
  return true;
}

// Saturated lattice I = {x : x W = 0}; small integer entries suffice for |G| <= 10.
struct OrthogonalTest {
  std::vector<std::vector<long>> basis;  // lattice basis rows
  std::vector<std::vector<long>> w;      // columns of W, stored as rows

  bool stabilizes(const Permutation& sigma) const {
    for (const auto& b : basis)
      for (const auto& col : w) {
        long acc = 0;
        for (std::size_t g = 0; g < b.size(); ++g) acc += b[g] * col[sigma[g]];
        if (acc != 0) return false;
      }
    return true;
  }
};

std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> out;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw VerificationError("scan_permutations: lattice entry too large for the fast path");
    out.push_back(x.get_si());
  }
  return out;
}

OrthogonalTest orthogonal_test(const GroupRingIdeal& ideal) {
  if (!ideal.is_saturated()) throw PreconditionError("orthogonal_test: ideal is not saturated");
  OrthogonalTest t;
  const auto& basis = ideal.lattice().basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) t.basis.push_back(to_longs(basis.row(i)));
  Lattice orth = linalg::kernel(basis.transpose());
  for (std::size_t i = 0; i < orth.rank(); ++i) t.w.push_back(to_longs(orth.basis().row(i)));
  return t;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void validate_permutation(const GroupPtr& group, const Permutation& sigma) {
  if (sigma.size() != group->order()) throw PreconditionError("permutation length differs from the group order");
  std::vector<bool> hit(sigma.size());
  for (std::size_t x : sigma) {
    if (x >= sigma.size() || hit[x]) throw PreconditionError("permutation is not a bijection");
    hit[x] = true;
  }
}

bool perm_condition_star(const GroupPtr& group, const Permutation& sigma) {
  validate_permutation(group, sigma);
  if (!group->cyclic_generator()) throw PreconditionError("perm_condition_star: group is not cyclic");
  return star_with(prime_coset_tables(group), sigma);
}

bool perm_stabilizes(const GroupRingIdeal& ideal, const Permutation& sigma) {
  validate_permutation(ideal.group(), sigma);
  const auto& basis = ideal.lattice().basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    IntVector image(sigma.size());
    for (std::size_t g = 0; g < sigma.size(); ++g) image[sigma[g]] = basis(i, g);
    if (!ideal.lattice().contains(image)) return false;
  }
  return true;
}

bool perm_in_prime_factor_product(const GroupPtr& group, const Permutation& sigma) {
  validate_permutation(group, sigma);
  if (group->kind() != groups::GroupKind::cyclic)
    throw PreconditionError("perm_in_prime_factor_product: expects a cyclic group built by cyclic(r)");
  const std::size_t r = group->order();
  const auto primes = cyclo::prime_factors(r);
  std::uint64_t prod = 1;
  for (auto p : primes) prod *= p;
  if (prod != r) throw PreconditionError("perm_in_prime_factor_product: group order is not squarefree");
  for (auto p : primes) {
    std::vector<std::size_t> image(p, p);
    for (std::size_t a = 0; a < r; ++a) {
      std::size_t& slot = image[a % p];
      if (slot == p)
        slot = sigma[a] % p;
      else if (slot != sigma[a] % p)
        return false;
    }
  }
  return true;
}

Permutation unrank_permutation(std::size_t n, std::uint64_t index) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  Permutation out;
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t f = factorial(i - 1);
    const std::size_t pick = static_cast<std::size_t>(index / f);
    index %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

PermScanResult scan_permutations(const GroupPtr& group, unsigned workers) {
  const std::size_t n = group->order();
  if (n > kMaxScanOrder)
    throw ResourceError("scan_permutations: |G|! permutations exceeds the scan bound (|G| <= " +
                        std::to_string(kMaxScanOrder) + ")");
  if (!group->cyclic_generator()) throw PreconditionError("scan_permutations: group is not cyclic");
  const auto tables = prime_coset_tables(group);
  const OrthogonalTest ideal_test = orthogonal_test(cyclic_twist_ideal(group));
  bool squarefree = group->kind() == groups::GroupKind::cyclic;
  {
    std::uint64_t prod = 1;
    for (auto p : cyclo::prime_factors(n)) prod *= p;
    squarefree = squarefree && prod == n;
  }

  const std::uint64_t total = factorial(n);
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<PermScanResult> parts(workers);

  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    PermScanResult& res = parts[w];
    if (squarefree) res.prime_factor_product = 0;
    Permutation sigma = unrank_permutation(n, begin);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const bool star = star_with(tables, sigma);
      const bool stab = ideal_test.stabilizes(sigma);
      ++res.total;
      res.condition_star += star;
      res.stabilizing += stab;
      if (squarefree && perm_in_prime_factor_product(group, sigma)) ++*res.prime_factor_product;
      if (star != stab) {
        ++res.mismatch_count;
        if (res.mismatches.size() < 16) res.mismatches.push_back(idx);
      }
      std::next_permutation(sigma.begin(), sigma.end());
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  PermScanResult merged;
  if (squarefree) merged.prime_factor_product = 0;
  for (const auto& p : parts) {
    merged.total += p.total;
    merged.condition_star += p.condition_star;
    merged.stabilizing += p.stabilizing;
    if (squarefree) *merged.prime_factor_product += *p.prime_factor_product;
    merged.mismatch_count += p.mismatch_count;
    for (auto idx : p.mismatches)
      if (merged.mismatches.size() < 16) merged.mismatches.push_back(idx);
  }
  return merged;
}

}  // namespace galtwist::grouprings
