#include "galtwist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "galtwist/algebraic_groups.hpp"
#include "galtwist/cyclopoly.hpp"
#include "galtwist/errors.hpp"
#include "galtwist/finite_group.hpp"
#include "galtwist/galois_modules.hpp"
#include "galtwist/grouprings.hpp"
#include "galtwist/linalg.hpp"
#include "galtwist/permutations.hpp"

namespace galtwist::verify {

namespace {

using algroup::GroupModel;
using algroup::ModelKind;
using groups::FiniteGroup;
using groups::GroupPtr;
using linalg::IntMatrix;
using linalg::Integer;
using linalg::IntVector;

// Collects assertion outcomes for one suite.
class Recorder {
 public:
  explicit Recorder(SuiteResult& out) : out_(out) {}

  void check(bool ok, const std::string& instance, const std::string& detail = {}) {
    ++out_.checked;
    if (!ok) out_.failures.push_back(detail.empty() ? instance : instance + ": " + detail);
  }

  // Runs body; an exception counts as a failure of the instance.
  void guarded(const std::string& instance, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++out_.checked;
      out_.failures.push_back(instance + ": exception: " + e.what());
    }
  }

 private:
  SuiteResult& out_;
};

std::string str(const Integer& v) { return v.get_str(); }

GroupModel torus(std::uint32_t p) {
  GroupModel m;
  m.kind = ModelKind::multiplicative;
  m.p = p;
  return m;
}

GroupModel curve(std::uint32_t p, std::int64_t a, std::int64_t b) {
  GroupModel m;
  m.kind = ModelKind::elliptic;
  m.p = p;
  m.a = a;
  m.b = b;
  return m;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= b;
  return v;
}

struct GridPoint {
  GroupModel model;
  unsigned r;
};

std::vector<GridPoint> torus_grid() {
  std::vector<GridPoint> out;
  for (std::uint32_t q : {2U, 3U, 5U, 7U, 11U, 13U})
    for (unsigned r = 2; r <= 6; ++r)
      if (ipow(q, r) <= algroup::kEnumerationBound) out.push_back({torus(q), r});
  return out;
}

// The first four nonsingular curves from a fixed candidate list, per prime.
std::vector<GridPoint> curve_grid() {
  static const std::vector<std::pair<int, int>> candidates = {{1, 1}, {0, 2}, {2, 3}, {1, 3}, {3, 1},
                                                              {4, 2}, {2, 1}, {1, 4}, {3, 3}};
  std::vector<GridPoint> out;
  for (std::uint32_t q : {5U, 7U, 11U, 13U}) {
    std::size_t taken = 0;
    for (auto [a, b] : candidates) {
      if (taken == 4) break;
      const GroupModel m = curve(q, a, b);
      try {
        algroup::validate(m);
      } catch (const PreconditionError&) {
        continue;
      }
      ++taken;
      for (unsigned r = 2; r <= 4; ++r)
        if (ipow(q, r) <= algroup::kEnumerationBound) out.push_back({m, r});
    }
  }
  return out;
}

std::string instance(const GridPoint& g) { return g.model.spec() + " r=" + std::to_string(g.r); }

// ------------------------------------------------------------------ suites

void torus_orders(Recorder& rec, unsigned workers) {
  for (const auto& g : torus_grid()) {
    rec.guarded(instance(g), [&] {
      const auto brute = algroup::primitive_subgroup_bruteforce(g.model, g.r, workers);
      const Integer predicted = algroup::twisted_order(g.model, g.r);
      const Integer phi = abs(cyclo::cyclotomic(g.r).evaluate(Integer(g.model.p)));
      rec.check(Integer(std::to_string(brute.count)) == predicted && predicted == phi, instance(g),
                "brute force " + std::to_string(brute.count) + ", twisted_order " + str(predicted) + ", |Phi_r(q)| " +
                    str(phi));
      rec.check(brute.subgroup_verified && brute.frobenius_closed, instance(g), "primitive set is not a Frobenius-stable subgroup");
    });
  }
}

void elliptic_orders(Recorder& rec, unsigned workers) {
  for (const auto& g : curve_grid()) {
    rec.guarded(instance(g), [&] {
      const auto brute = algroup::primitive_subgroup_bruteforce(g.model, g.r, workers);
      const Integer predicted = algroup::twisted_order(g.model, g.r);
      rec.check(Integer(std::to_string(brute.count)) == predicted, instance(g),
                "brute force " + std::to_string(brute.count) + ", twisted_order " + str(predicted));
      rec.check(brute.subgroup_verified && brute.frobenius_closed, instance(g), "primitive set is not a Frobenius-stable subgroup");
    });
  }
  const GridPoint worked{curve(5, 1, 1), 2};
  rec.guarded(instance(worked), [&] {
    const auto brute = algroup::primitive_subgroup_bruteforce(worked.model, worked.r, workers);
    const Integer predicted = algroup::twisted_order(worked.model, worked.r);
    rec.check(brute.count == 3 && predicted == 3, instance(worked),
              "expected 3 on both routes, got " + std::to_string(brute.count) + " and " + str(predicted));
  });
}

void product_identity(Recorder& rec, unsigned) {
  auto grid = torus_grid();
  const auto curves = curve_grid();
  grid.insert(grid.end(), curves.begin(), curves.end());
  for (const auto& g : grid) {
    rec.guarded(instance(g), [&] {
      const auto check = algroup::restriction_order_product_check(g.model, g.r);
      rec.check(check.holds, instance(g), "|V(F_{q^r})| = " + str(check.points) + ", product " + str(check.product));
    });
  }
}

void ideal_identities(Recorder& rec, unsigned) {
  for (std::size_t r = 1; r <= 30; ++r) {
    const std::string name = "cyclic:" + std::to_string(r);
    rec.guarded(name, [&] {
      const auto group = FiniteGroup::cyclic(r);
      const auto cmp = grouprings::norm_generators_equal_annihilator(group);
      rec.check(cmp.equal, name, "annihilator, Phi_r ideal and norm ideals differ");
      const auto il = grouprings::cyclic_twist_ideal(group);
      rec.check(il.rank() == cyclo::euler_phi(r), name,
                "rank " + std::to_string(il.rank()) + " != phi(r) = " + std::to_string(cyclo::euler_phi(r)));
      rec.check(il.is_saturated() && il.is_right_ideal(), name, "I_L is not a saturated right ideal");
      rec.check(grouprings::double_annihilator_check(il), name, "double annihilator differs from I_L");
    });
  }
}

// Invariant factor lists n_1 | n_2 | ... with product n.
void invariant_factor_lists(std::size_t n, std::size_t prev, std::vector<std::size_t>& prefix,
                            std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t d = std::max<std::size_t>(prev, 2); d <= n; d += prev) {
    if (n % d != 0) continue;
    // Remaining factors must be multiples of d.
    const std::size_t rest = n / d;
    if (rest != 1 && rest % d != 0) continue;
    prefix.push_back(d);
    invariant_factor_lists(rest, d, prefix, out);
    prefix.pop_back();
  }
}

void decomposition(Recorder& rec, unsigned) {
  for (std::size_t n = 1; n <= 24; ++n) {
    std::vector<std::vector<std::size_t>> lists;
    std::vector<std::size_t> prefix;
    invariant_factor_lists(n, 1, prefix, lists);
    for (const auto& factors : lists) {
      GroupPtr group = FiniteGroup::cyclic(factors.empty() ? 1 : factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i)
        group = FiniteGroup::direct_product(group, FiniteGroup::cyclic(factors[i]));
      const std::string name = group->name();
      rec.guarded(name, [&] {
        std::vector<grouprings::GroupRingIdeal> ideals;
        for (const auto& k : grouprings::cyclic_quotient_kernels(group)) ideals.push_back(grouprings::isotypic_ideal(k));
        std::size_t total_rank = 0;
        linalg::Lattice total(group->order());
        for (std::size_t i = 0; i < ideals.size(); ++i) {
          rec.check(ideals[i].is_saturated(), name, "isotypic ideal " + std::to_string(i) + " not saturated");
          for (std::size_t j = i + 1; j < ideals.size(); ++j)
            rec.check(linalg::intersect(ideals[i].lattice(), ideals[j].lattice()).is_zero(), name,
                      "isotypic ideals " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
          total_rank += ideals[i].rank();
          total = linalg::sum(total, ideals[i].lattice());
        }
        rec.check(total_rank == group->order(), name,
                  "ranks sum to " + std::to_string(total_rank) + ", |G| = " + std::to_string(group->order()));
        rec.check(linalg::index_in(total, linalg::Lattice::full(group->order())).has_value(), name,
                  "sum of isotypic ideals has infinite index");
      });
    }
  }
}

void permutations(Recorder& rec, unsigned workers) {
  struct Case {
    std::size_t r;
    std::uint64_t expected;
  };
  for (const Case c : {Case{6, 12}, Case{4, 8}, Case{8, 384}}) {
    const std::string name = "cyclic:" + std::to_string(c.r);
    rec.guarded(name, [&] {
      const auto scan = grouprings::scan_permutations(FiniteGroup::cyclic(c.r), workers);
      rec.check(scan.mismatch_count == 0 && scan.condition_star == scan.stabilizing, name,
                std::to_string(scan.mismatch_count) + " permutations where condition (*) and stabilization disagree");
      rec.check(scan.condition_star == c.expected, name,
                "condition (*) count " + std::to_string(scan.condition_star) + ", expected " + std::to_string(c.expected));
      if (c.r == 6)
        rec.check(scan.total == 720 && scan.prime_factor_product == 12, name,
                  "expected 720 permutations and 12 = 2!*3! prime-factor products");
    });
  }
}

void semidirect(Recorder& rec, unsigned) {
  for (std::size_t r : {3, 5, 7}) {
    const std::string name = "dihedral:" + std::to_string(r);
    rec.guarded(name, [&] {
      const auto sd = grouprings::semidirect_twist_ideal(FiniteGroup::dihedral(r));
      rec.check(sd.right_ideal && sd.saturated, name, "J_L is not a saturated right ideal");
      rec.check(sd.ideal.rank() == cyclo::euler_phi(r), name, "rank " + std::to_string(sd.ideal.rank()));
      rec.check(sd.norm_map_unimodular, name, "N_H: I_L -> J_L is not bijective");
      rec.check(sd.gamma_equivariant, name, "N_H: I_L -> J_L is not Gamma-equivariant");
    });
  }
}

// mu_n with Frobenius acting by m over cyclic(r); requires m^r = 1 mod n.
galmod::TorsionGaloisModule character(const GroupPtr& g, long n, long m) {
  return galmod::TorsionGaloisModule::cyclic_character(g, Integer(n), Integer(m));
}

std::string poly_str(const cyclo::IntPoly& f) { return f.to_string(); }

void module_functor(Recorder& rec, unsigned) {
  // Kronecker route against the resultant route.
  const std::vector<cyclo::IntPoly> polys = {
      cyclo::IntPoly{-5, 1}, cyclo::IntPoly{-2, 1}, cyclo::IntPoly{3, 1},     cyclo::IntPoly{5, 3, 1},
      cyclo::IntPoly{7, -1, 1}, cyclo::IntPoly{1, 0, 1}, cyclo::IntPoly{-4, 0, 1}, cyclo::IntPoly{11, -4, 1}};
  for (std::size_t r = 1; r <= 12; ++r) {
    const auto group = FiniteGroup::cyclic(r);
    const auto lattice = galmod::GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(group));
    for (const auto& f : polys) {
      const std::string name = "charpoly r=" + std::to_string(r) + " f=" + poly_str(f);
      rec.guarded(name, [&] {
        const auto kron = galmod::twist_charpoly(lattice, f, *group->cyclic_generator());
        const auto infl = cyclo::inflate_charpoly(f, r, r);
        rec.check(kron == infl, name, poly_str(kron) + " vs " + poly_str(infl));
      });
    }
  }

  // Randomized presentations against the direct twist.
  struct PresCase {
    std::size_t r;
    long n, m;
  };
  const std::vector<PresCase> pres_cases = {{2, 3, 2}, {2, 4, 3}, {3, 7, 2}, {3, 9, 4}, {4, 5, 2}, {4, 8, 3}, {5, 11, 3},
                                            {6, 7, 3}, {6, 9, 2}, {6, 13, 4}};
  std::mt19937_64 rng(20240601);
  for (const auto& c : pres_cases) {
    const auto group = FiniteGroup::cyclic(c.r);
    const auto module = galmod::direct_sum(character(group, c.n, c.m), galmod::TorsionGaloisModule::trivial(group, {2}));
    std::vector<grouprings::GroupRingIdeal> ideals = {grouprings::cyclic_twist_ideal(group),
                                                      grouprings::GroupRingIdeal::whole(group)};
    for (const auto& ideal : ideals) {
      const auto base = galmod::compute_presentation(ideal);
      const auto direct = galmod::twist_module(galmod::GaloisLattice::from_ideal(ideal), module);
      for (int trial = 0; trial < 2; ++trial) {
        const std::string name = "presentation r=" + std::to_string(c.r) + " n=" + std::to_string(c.n) +
                                 " m=" + std::to_string(c.m) + " rank=" + std::to_string(ideal.rank()) +
                                 " trial=" + std::to_string(trial);
        rec.guarded(name, [&] {
          const auto p = galmod::randomize_presentation(base, rng);
          const auto via = galmod::presentation_twist(p, module);
          rec.check(galmod::isomorphic_invariants(via, direct), name,
                    "presentation with a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) +
                        " gives a different module");
        });
      }
    }
  }

  // 0 -> I_L (x) M -> Z[G] (x) M -> (Z[G]/I_L) (x) M -> 0.
  for (std::size_t r = 1; r <= 12; ++r) {
    const auto group = FiniteGroup::cyclic(r);
    const long n = r == 1 ? 3 : static_cast<long>(ipow(2, static_cast<unsigned>(r)) - 1);
    const auto module = galmod::direct_sum(character(group, n, 2), galmod::TorsionGaloisModule::trivial(group, {4}));
    const std::string name = "exactness r=" + std::to_string(r) + " M=mu_" + std::to_string(n) + "+Z/4";
    rec.guarded(name, [&] {
      const auto report = galmod::exactness_check(grouprings::cyclic_twist_ideal(group),
                                                  grouprings::GroupRingIdeal::whole(group), module);
      rec.check(report.exact, name,
                "|I(x)M| = " + str(report.sub_order) + ", |J(x)M| = " + str(report.whole_order) +
                    ", |Q(x)M| = " + str(report.quotient_order));
    });
  }

  // Composite twist over cyclic(d*e): I_F (x) I_M against I_L.
  struct CompositeCase {
    std::size_t d, e;
    long n, m;  // mu_n with m of order d*e mod n
  };
  for (const auto& c : {CompositeCase{2, 3, 7, 3}, CompositeCase{3, 4, 13, 2}, CompositeCase{2, 5, 11, 2}}) {
    const std::size_t r = c.d * c.e;
    const std::string name = "composite d=" + std::to_string(c.d) + " e=" + std::to_string(c.e);
    rec.guarded(name, [&] {
      const auto group = FiniteGroup::cyclic(r);
      const auto iso = [&](std::size_t degree) {
        return galmod::GaloisLattice::from_ideal(
            grouprings::isotypic_ideal(groups::Subgroup::generated_by(group, {degree % r})));
      };
      const auto lf = iso(c.d);
      const auto lm = iso(c.e);
      const auto ll = galmod::GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(group));
      const auto module = character(group, c.n, c.m);
      rec.check(galmod::associativity_check(lf, lm, module), name, "(I_F (x) I_M) (x) M differs from I_F (x) (I_M (x) M)");
      const auto composite = galmod::twist_module(lf, galmod::twist_module(lm, module));
      rec.check(galmod::isomorphic_invariants(composite, galmod::twist_module(ll, module)), name,
                "I_F (x) (I_M (x) M) differs from I_L (x) M");
      const auto cp = galmod::twist_charpoly(galmod::tensor(lf, lm), cyclo::IntPoly{-1, 1}, 1);
      rec.check(cp == cyclo::cyclotomic(r), name, "tau on I_F (x) I_M has char poly " + poly_str(cp));
    });
  }
}

void torsion_bridge(Recorder& rec, unsigned workers) {
  for (std::uint32_t q : {2U, 5U, 7U})
    for (unsigned r : {2U, 3U, 6U})
      for (std::uint64_t n : {3U, 4U, 5U}) {
        if (n % q == 0) continue;
        const std::string name = "gm:p=" + std::to_string(q) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
        rec.guarded(name, [&] {
          const auto check = algroup::twisted_torsion_check(torus(q), r, n, workers);
          rec.check(check.holds, name,
                    "module count " + str(check.module_count) + ", brute force " + str(check.brute_count) +
                        ", splitting degree " + std::to_string(check.splitting_degree));
        });
      }
}

// Random module over (Z/2)^2: characters and regular blocks mod n, conjugated
// by a random unimodular matrix.
galmod::TorsionGaloisModule random_klein_module(const GroupPtr& group, long n, std::mt19937_64& rng) {
  const std::size_t order = group->order();
  std::size_t dim = 0;
  std::uniform_int_distribution<int> pick(0, 4);
  const int pieces = 1 + pick(rng) % 3;
  std::vector<std::vector<IntMatrix>> parts;
  for (int i = 0; i < pieces; ++i) {
    const int kind = pick(rng);
    std::vector<IntMatrix> act(order);
    if (kind < 4) {
      // Character: g = (a, b) acts by (-1)^(a*s + b*t).
      const int s = kind & 1, t = (kind >> 1) & 1;
      for (std::size_t g = 0; g < order; ++g) {
        const std::size_t a = g / 2, b = g % 2;
        act[g] = IntMatrix(1, 1);
        act[g](0, 0) = ((a * s + b * t) % 2 == 0) ? 1 : n - 1;
      }
    } else {
      for (std::size_t g = 0; g < order; ++g) {
        act[g] = IntMatrix(order, order);
        for (std::size_t h = 0; h < order; ++h) act[g](group->mul(g, h), h) = 1;
      }
    }
    dim += act[0].rows();
    parts.push_back(std::move(act));
  }
  std::vector<IntMatrix> action(order, IntMatrix(dim, dim));
  std::size_t offset = 0;
  for (const auto& act : parts) {
    for (std::size_t g = 0; g < order; ++g)
      for (std::size_t i = 0; i < act[g].rows(); ++i)
        for (std::size_t j = 0; j < act[g].cols(); ++j) action[g](offset + i, offset + j) = act[g](i, j);
    offset += act[0].rows();
  }
  IntMatrix u = IntMatrix::identity(dim);
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 6 && dim > 1; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(dim);
    e(i, j) = coef(rng);
    u = u * e;
  }
  const IntMatrix uinv = linalg::unimodular_inverse(u);
  for (auto& a : action) {
    a = u * a * uinv;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Integer v = a(i, j) % n;
        if (v < 0) v += n;
        a(i, j) = v;
      }
  }
  return galmod::TorsionGaloisModule(group, IntVector(dim, Integer(n)), std::move(action));
}

void noncyclic(Recorder& rec, unsigned) {
  for (std::uint64_t p : {2U, 3U, 5U}) {
    const std::string name = "noncyclic identity p=" + std::to_string(p);
    rec.guarded(name, [&] { rec.check(grouprings::noncyclic_norm_identity(p), name); });
  }

  const auto group = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const auto regular = galmod::GaloisLattice::regular(group);
  std::vector<IntMatrix> norms;
  for (const auto& h : groups::all_subgroups(group))
    if (h.order() > 1) norms.push_back(grouprings::norm_element(h).left_multiplication());
  std::mt19937_64 rng(777);
  const std::vector<long> moduli = {2, 3, 4, 5, 6, 8, 9, 12};
  for (int trial = 0; trial < 16; ++trial) {
    const long n = moduli[static_cast<std::size_t>(trial) % moduli.size()];
    const std::string name = "klein norm kernels n=" + std::to_string(n) + " trial=" + std::to_string(trial);
    rec.guarded(name, [&] {
      const auto module = random_klein_module(group, n, rng);
      const auto twisted = galmod::twist_module(regular, module);
      std::optional<linalg::Lattice> w;
      for (const auto& f : norms) {
        const auto k = galmod::induced_map(regular, regular, f, module).kernel_lifted();
        w = w ? linalg::intersect(*w, k) : k;
      }
      bool killed = true;
      const auto& basis = w->basis();
      for (std::size_t i = 0; i < basis.rows() && killed; ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j)
          if ((2 * basis(i, j)) % twisted.orders()[j] != 0) {
            killed = false;
            break;
          }
      rec.check(killed, name, "intersection of norm kernels is not killed by 2 (module of size " +
                                  std::to_string(module.size()) + ")");
    });
  }
}

using SuiteFn = void (*)(Recorder&, unsigned);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> list = {
      {{1, "torus", "G_m primitive subgroup: brute force = twisted_order = |Phi_r(q)|"}, torus_orders},
      {{2, "elliptic", "elliptic primitive subgroup: brute force = twisted_order"}, elliptic_orders},
      {{3, "product", "|V(F_{q^r})| = product of twisted orders over d | r"}, product_identity},
      {{4, "ideals", "annihilator and norm ideal identities for cyclic G, r <= 30"}, ideal_identities},
      {{5, "decomposition", "isotypic decomposition of Z[G] for abelian |G| <= 24"}, decomposition},
      {{6, "permutations", "condition (*) versus stabilization of I_L"}, permutations},
      {{7, "semidirect", "J_L = N_H I_L for dihedral groups"}, semidirect},
      {{8, "functor", "char polys, presentations, exactness and composite twists"}, module_functor},
      {{9, "torsion", "fixed points of I_L (x) mu_n against brute-force n-torsion"}, torsion_bridge},
      {{10, "noncyclic", "norm identities and degeneracy for (Z/p)^2"}, noncyclic},
  };
  return list;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return list;
}

SuiteResult run_suite(const std::string& name, unsigned workers) {
  for (const auto& e : entries()) {
    if (name != e.info.name && name != std::to_string(e.info.id)) continue;
    SuiteResult out;
    out.id = e.info.id;
    out.name = e.info.name;
    out.description = e.info.description;
    Recorder rec(out);
    const auto start = std::chrono::steady_clock::now();
    e.fn(rec, workers);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }
  throw PreconditionError("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all(unsigned workers) {
  std::vector<SuiteResult> out;
  for (const auto& e : entries()) out.push_back(run_suite(e.info.name, workers));
  return out;
}

}  // namespace galtwist::verify
