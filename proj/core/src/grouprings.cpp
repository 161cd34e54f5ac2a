#include "galtwist/grouprings.hpp"

#include <sstream>

#include "galtwist/errors.hpp"

namespace galtwist::grouprings {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b && a->name() != b->name()) throw PreconditionError("group ring elements over different groups");
}

// x * g as a coefficient vector.
IntVector right_translate(const GroupPtr& group, const IntVector& x, std::size_t g) {
  IntVector out(x.size());
  for (std::size_t h = 0; h < x.size(); ++h) out[group->mul(h, g)] = x[h];
  return out;
}

IntVector left_translate(const GroupPtr& group, const IntVector& x, std::size_t g) {
  IntVector out(x.size());
  for (std::size_t h = 0; h < x.size(); ++h) out[group->mul(g, h)] = x[h];
  return out;
}

IntVector multiply(const GroupPtr& group, const IntVector& a, const IntVector& b) {
  const std::size_t n = group->order();
  IntVector out(n);
  for (std::size_t g = 0; g < n; ++g) {
    if (a[g] == 0) continue;
    for (std::size_t h = 0; h < n; ++h)
      if (b[h] != 0) out[group->mul(g, h)] += a[g] * b[h];
  }
  return out;
}

bool is_normal(const Subgroup& k) {
  const auto& g = k.group();
  for (std::size_t x = 0; x < g->order(); ++x)
    for (std::size_t y : k.elements())
      if (!k.contains(g->mul(g->mul(x, y), g->inverse(x)))) return false;
  return true;
}

std::size_t cyclic_generator_or_throw(const GroupPtr& group, const char* what) {
  auto t = group->cyclic_generator();
  if (!t) throw PreconditionError(std::string(what) + ": group " + group->name() + " is not cyclic");
  return *t;
}

IntMatrix coordinates_in(const Lattice& target, const std::vector<IntVector>& vectors, const char* what) {
  IntMatrix out(vectors.size(), target.rank());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto c = target.coordinates(vectors[i]);
    if (!c) throw VerificationError(std::string(what) + ": vector outside the target lattice");
    out.set_row(i, *c);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------- GroupRingElement

GroupRingElement::GroupRingElement(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order()) {}

GroupRingElement::GroupRingElement(GroupPtr group, IntVector coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw PreconditionError("GroupRingElement: coefficient vector length differs from the group order");
}

GroupRingElement GroupRingElement::basis(const GroupPtr& group, std::size_t g) {
  GroupRingElement e(group);
  e.coeffs_.at(g) = 1;
  return e;
}

GroupRingElement GroupRingElement::from_polynomial(const GroupPtr& group, const cyclo::IntPoly& p, std::size_t t) {
  GroupRingElement e(group);
  std::size_t power = 0;
  for (const Integer& c : p.coefficients()) {
    e.coeffs_[power] += c;
    power = group->mul(power, t);
  }
  return e;
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

IntMatrix GroupRingElement::right_multiplication() const { return grouprings::right_multiplication(group_, coeffs_); }

IntMatrix GroupRingElement::left_multiplication() const { return grouprings::left_multiplication(group_, coeffs_); }

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a.group_, b.group_);
  GroupRingElement out(a);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a.group_, b.group_);
  GroupRingElement out(a);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a.group_, b.group_);
  return GroupRingElement(a.group_, multiply(a.group_, a.coeffs_, b.coeffs_));
}

GroupRingElement operator*(const Integer& s, const GroupRingElement& a) {
  GroupRingElement out(a);
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t g = 0; g < coeffs_.size(); ++g) {
    const Integer& c = coeffs_[g];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (g == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << group_->label(g);
    }
  }
  return first ? "0" : os.str();
}

IntMatrix right_multiplication(const GroupPtr& group, const IntVector& b) {
  const std::size_t n = group->order();
  IntMatrix m(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (b[h] != 0) m(g, group->mul(g, h)) += b[h];
  return m;
}

IntMatrix left_multiplication(const GroupPtr& group, const IntVector& b) {
  const std::size_t n = group->order();
  IntMatrix m(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (b[h] != 0) m(g, group->mul(h, g)) += b[h];
  return m;
}

// --------------------------------------------------------- GroupRingIdeal

GroupRingIdeal::GroupRingIdeal(GroupPtr group, Lattice lattice) : group_(std::move(group)), lattice_(std::move(lattice)) {
  if (lattice_.ambient_rank() != group_->order())
    throw PreconditionError("GroupRingIdeal: lattice ambient rank differs from the group order");
  right_ = left_ = true;
  for (std::size_t i = 0; i < lattice_.rank() && (right_ || left_); ++i) {
    const IntVector v = lattice_.basis().row(i);
    for (std::size_t g = 1; g < group_->order(); ++g) {
      if (right_ && !lattice_.contains(right_translate(group_, v, g))) right_ = false;
      if (left_ && !lattice_.contains(left_translate(group_, v, g))) left_ = false;
    }
  }
  saturated_ = linalg::is_saturated(lattice_);
}

GroupRingIdeal GroupRingIdeal::zero(const GroupPtr& group) { return GroupRingIdeal(group, Lattice(group->order())); }

GroupRingIdeal GroupRingIdeal::whole(const GroupPtr& group) {
  return GroupRingIdeal(group, Lattice::full(group->order()));
}

GroupRingIdeal GroupRingIdeal::right_generated(const GroupPtr& group, const std::vector<GroupRingElement>& gens) {
  std::vector<IntVector> rows;
  for (const auto& b : gens) {
    require_same_group(group, b.group());
    for (std::size_t g = 0; g < group->order(); ++g) rows.push_back(right_translate(group, b.coeffs(), g));
  }
  return GroupRingIdeal(group, Lattice::span(rows, group->order()));
}

GroupRingIdeal GroupRingIdeal::left_generated(const GroupPtr& group, const std::vector<GroupRingElement>& gens) {
  std::vector<IntVector> rows;
  for (const auto& b : gens) {
    require_same_group(group, b.group());
    for (std::size_t g = 0; g < group->order(); ++g) rows.push_back(left_translate(group, b.coeffs(), g));
  }
  return GroupRingIdeal(group, Lattice::span(rows, group->order()));
}

std::vector<IntMatrix> GroupRingIdeal::right_action() const {
  if (!right_) throw PreconditionError("right_action: lattice is not a right ideal");
  std::vector<IntMatrix> out;
  for (std::size_t g = 0; g < group_->order(); ++g) {
    std::vector<IntVector> images;
    for (std::size_t i = 0; i < rank(); ++i) images.push_back(right_translate(group_, lattice_.basis().row(i), g));
    out.push_back(coordinates_in(lattice_, images, "right_action"));
  }
  return out;
}

// ------------------------------------------------------------ operations

GroupRingElement norm_element(const Subgroup& h) {
  IntVector c(h.group()->order());
  for (std::size_t g : h.elements()) c[g] = 1;
  return GroupRingElement(h.group(), std::move(c));
}

GroupRingElement cyclic_polynomial_element(const GroupPtr& group, const cyclo::IntPoly& p) {
  return GroupRingElement::from_polynomial(group, p, cyclic_generator_or_throw(group, "cyclic_polynomial_element"));
}

GroupRingIdeal cyclic_twist_ideal(const GroupPtr& group) {
  const std::size_t r = group->order();
  return GroupRingIdeal::right_generated(group, {cyclic_polynomial_element(group, cyclo::psi(r))});
}

std::vector<Subgroup> cyclic_quotient_kernels(const GroupPtr& group) {
  std::vector<Subgroup> out;
  for (auto& k : groups::all_subgroups(group))
    if (is_normal(k) && groups::has_cyclic_quotient(k)) out.push_back(std::move(k));
  return out;
}

GroupRingIdeal isotypic_ideal(const Subgroup& kernel) {
  const GroupPtr& group = kernel.group();
  if (!group->is_abelian()) throw PreconditionError("isotypic_ideal: group " + group->name() + " is not abelian");
  std::optional<std::size_t> gen;
  for (std::size_t x = 0; x < group->order() && !gen; ++x) {
    std::vector<std::size_t> gens = kernel.elements();
    gens.push_back(x);
    if (Subgroup::generated_by(group, gens).order() == group->order()) gen = x;
  }
  if (!gen) throw PreconditionError("isotypic_ideal: G/K is not cyclic");
  const std::size_t d = group->order() / kernel.order();

  // x lies in Q[G]_F iff x (k - 1) = 0 for k in K and x Phi_d(g) = 0.
  const std::size_t n = group->order();
  IntMatrix conditions(n, 0);
  for (std::size_t k : kernel.elements()) {
    if (k == 0) continue;
    conditions = linalg::hstack(conditions, (GroupRingElement::basis(group, k) - GroupRingElement::one(group))
                                                .right_multiplication());
  }
  conditions = linalg::hstack(conditions,
                              GroupRingElement::from_polynomial(group, cyclo::cyclotomic(d), *gen).right_multiplication());
  return GroupRingIdeal(group, linalg::kernel(conditions));
}

GroupRingIdeal annihilator(const GroupRingIdeal& ideal) {
  const GroupPtr& group = ideal.group();
  IntMatrix conditions(group->order(), 0);
  for (std::size_t i = 0; i < ideal.rank(); ++i)
    conditions = linalg::hstack(conditions, right_multiplication(group, ideal.lattice().basis().row(i)));
  return GroupRingIdeal(group, linalg::kernel(conditions));
}

GroupRingIdeal right_annihilator(const GroupRingIdeal& ideal) {
  const GroupPtr& group = ideal.group();
  IntMatrix conditions(group->order(), 0);
  for (std::size_t i = 0; i < ideal.rank(); ++i)
    conditions = linalg::hstack(conditions, left_multiplication(group, ideal.lattice().basis().row(i)));
  return GroupRingIdeal(group, linalg::kernel(conditions));
}

bool double_annihilator_check(const GroupRingIdeal& ideal) {
  return right_annihilator(annihilator(ideal)) == ideal;
}

NormGeneratorComparison norm_generators_equal_annihilator(const GroupPtr& group) {
  const std::size_t r = group->order();
  cyclic_generator_or_throw(group, "norm_generators_equal_annihilator");
  std::vector<GroupRingElement> all, prime;
  for (const auto& h : groups::all_subgroups(group)) {
    if (h.order() == 1) continue;
    all.push_back(norm_element(h));
    if (cyclo::is_prime(h.order())) prime.push_back(norm_element(h));
  }
  NormGeneratorComparison cmp{
      GroupRingIdeal::right_generated(group, {cyclic_polynomial_element(group, cyclo::cyclotomic(r))}),
      GroupRingIdeal::right_generated(group, all),
      GroupRingIdeal::right_generated(group, prime),
      annihilator(cyclic_twist_ideal(group)),
  };
  cmp.equal = cmp.phi_ideal == cmp.all_norms && cmp.all_norms == cmp.prime_norms && cmp.prime_norms == cmp.annihilator_il;
  return cmp;
}

SemidirectTwist semidirect_twist_ideal(const GroupPtr& group) {
  const auto& sd = group->semidirect_data();
  if (!sd) throw PreconditionError("semidirect_twist_ideal: group " + group->name() + " is not a semidirect product");
  const std::size_t n = group->order();
  const std::size_t r = sd->gamma_order;
  const std::size_t t = r > 1 ? sd->gamma[1] : 0;

  const GroupRingElement psi = GroupRingElement::from_polynomial(group, cyclo::psi(r), t);
  std::vector<IntVector> cyc_rows;
  for (std::size_t gamma : sd->gamma) cyc_rows.push_back(right_translate(group, psi.coeffs(), gamma));
  GroupRingIdeal cyclic(group, Lattice::span(cyc_rows, n));

  IntVector nh(n);
  for (std::size_t h : sd->h) nh[h] = 1;
  std::vector<IntVector> images;
  for (std::size_t i = 0; i < cyclic.rank(); ++i) images.push_back(multiply(group, nh, cyclic.lattice().basis().row(i)));
  GroupRingIdeal j(group, Lattice::span(images, n));

  SemidirectTwist out{cyclic, j, IntMatrix(), j.is_right_ideal(), j.is_saturated(), false, true};
  if (!out.right_ideal) throw VerificationError("semidirect_twist_ideal: N_H I_L is not a right ideal");
  if (!out.saturated) throw VerificationError("semidirect_twist_ideal: N_H I_L is not saturated");

  out.norm_map = coordinates_in(j.lattice(), images, "semidirect_twist_ideal");
  out.norm_map_unimodular = out.norm_map.rows() == out.norm_map.cols() && abs(linalg::determinant(out.norm_map)) == 1;

  // The map x -> N_H x commutes with right multiplication by Gamma.
  for (std::size_t gamma : sd->gamma) {
    std::vector<IntVector> ci, cj;
    for (std::size_t i = 0; i < cyclic.rank(); ++i)
      ci.push_back(right_translate(group, cyclic.lattice().basis().row(i), gamma));
    for (std::size_t i = 0; i < j.rank(); ++i) cj.push_back(right_translate(group, j.lattice().basis().row(i), gamma));
    IntMatrix ai = coordinates_in(cyclic.lattice(), ci, "semidirect_twist_ideal");
    IntMatrix aj = coordinates_in(j.lattice(), cj, "semidirect_twist_ideal");
    if (!(ai * out.norm_map == out.norm_map * aj)) out.gamma_equivariant = false;
  }
  return out;
}

bool noncyclic_norm_identity(std::uint64_t p) {
  if (!cyclo::is_prime(p)) throw PreconditionError("noncyclic_norm_identity: p must be prime");
  if (p * p > groups::kMaxGroupOrder) throw PreconditionError("noncyclic_norm_identity: p^2 exceeds the group size bound");
  auto group = groups::FiniteGroup::direct_product(groups::FiniteGroup::cyclic(p), groups::FiniteGroup::cyclic(p));
  GroupRingElement lhs(group);
  std::size_t count = 0;
  for (const auto& h : groups::all_subgroups(group)) {
    if (h.order() != p) continue;
    lhs = lhs + norm_element(h);
    ++count;
  }
  if (count != p + 1) return false;
  GroupRingElement rhs = Integer(p) * GroupRingElement::one(group) + norm_element(Subgroup::whole(group));
  return lhs == rhs;
}

QuotientIndex twist_ideal_quotient_index(std::uint64_t r) {
  auto group = groups::FiniteGroup::cyclic(r);
  GroupRingIdeal il = cyclic_twist_ideal(group);
  GroupRingIdeal perp = annihilator(il);
  QuotientIndex out;
  out.lattice_index = *linalg::index_in(linalg::sum(il.lattice(), perp.lattice()), Lattice::full(r));
  out.formula = 1;
  const std::uint64_t phi = cyclo::euler_phi(r);
  for (std::uint64_t l : cyclo::prime_factors(r)) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), l, phi / (l - 1));
    out.formula *= term;
  }
  return out;
}

}  // namespace galtwist::grouprings
