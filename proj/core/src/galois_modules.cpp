#include "galtwist/galois_modules.hpp"

#include <algorithm>

#include "galtwist/errors.hpp"

namespace galtwist::galmod {

using grouprings::GroupRingElement;
using grouprings::GroupRingIdeal;

namespace {

Integer mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Greedy generating set; A_{gh} = A_g A_h for all g and all h in it implies
// the homomorphism property once A_1 = 1.
std::vector<std::size_t> generating_set(const GroupPtr& group) {
  std::vector<std::size_t> gens;
  groups::ElementMask reached = 1;
  for (std::size_t x = 1; x < group->order(); ++x) {
    if ((reached >> x) & 1U) continue;
    gens.push_back(x);
    reached = groups::Subgroup::generated_by(group, gens).mask();
  }
  return gens;
}

void check_homomorphism(const GroupPtr& source, const GroupPtr& target, const std::vector<std::size_t>& hom) {
  if (hom.size() != source->order()) throw PreconditionError("pullback: map length differs from the group order");
  for (std::size_t y : hom)
    if (y >= target->order()) throw PreconditionError("pullback: map value out of range");
  for (std::size_t x = 0; x < source->order(); ++x)
    for (std::size_t y = 0; y < source->order(); ++y)
      if (hom[source->mul(x, y)] != target->mul(hom[x], hom[y]))
        throw PreconditionError("pullback: map is not a group homomorphism");
}

IntMatrix reduce_rows(IntMatrix m, const IntVector& orders) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod(m(i, j), orders[i]);
  return m;
}

// (B^{-1})^T (x) A
IntMatrix twisted_action(const IntMatrix& b, const IntMatrix& a) {
  if (b.rows() == 0 || a.rows() == 0) return IntMatrix(b.rows() * a.rows(), b.rows() * a.rows());
  return linalg::kronecker(linalg::unimodular_inverse(b).transpose(), a);
}

IntVector repeat_orders(const IntVector& orders, std::size_t times) {
  IntVector out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), orders.begin(), orders.end());
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, std::size_t copies) {
  IntMatrix out(a.rows() * copies, a.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(c * a.rows() + i, c * a.cols() + j) = a(i, j);
  return out;
}

Integer product(const IntVector& v) {
  Integer p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

Integer lattice_index(const Lattice& l) {
  auto idx = linalg::index_in(l, Lattice::full(l.ambient_rank()));
  if (!idx) throw VerificationError("lattice of deficient rank where a full-rank lattice was expected");
  return *idx;
}

// x -> x * g on Z[G]^b, blockwise.
IntVector right_translate_blocks(const GroupPtr& group, const IntVector& v, std::size_t g) {
  const std::size_t n = group->order();
  IntVector out(v.size());
  for (std::size_t k = 0; k < v.size() / n; ++k)
    for (std::size_t h = 0; h < n; ++h) out[k * n + group->mul(h, g)] = v[k * n + h];
  return out;
}

// Greedy choice among `candidates` of generators for the right submodule
// of Z[G]^b they span.
std::vector<IntVector> greedy_right_generators(const GroupPtr& group, const Lattice& candidates) {
  std::vector<IntVector> gens, rows;
  Lattice current(candidates.ambient_rank());
  for (std::size_t i = 0; i < candidates.rank(); ++i) {
    IntVector v = candidates.basis().row(i);
    if (current.contains(v)) continue;
    gens.push_back(v);
    for (std::size_t g = 0; g < group->order(); ++g) rows.push_back(right_translate_blocks(group, v, g));
    current = Lattice::span(rows, candidates.ambient_rank());
  }
  return gens;
}

GroupRingElement random_element(const GroupPtr& group, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> coeff(-spread, spread);
  IntVector c(group->order());
  for (auto& x : c) x = coeff(rng);
  return GroupRingElement(group, std::move(c));
}

}  // namespace

// ----------------------------------------------------------- GaloisLattice

GaloisLattice::GaloisLattice(GroupPtr group, std::vector<IntMatrix> action)
    : group_(std::move(group)), action_(std::move(action)) {
  if (action_.size() != group_->order()) throw PreconditionError("GaloisLattice: one action matrix per element expected");
  rank_ = action_[0].rows();
  for (const auto& m : action_)
    if (m.rows() != rank_ || m.cols() != rank_) throw PreconditionError("GaloisLattice: action matrices of wrong shape");
  if (!action_[0].is_identity() && rank_ > 0) throw PreconditionError("GaloisLattice: identity must act trivially");
  for (std::size_t s : generating_set(group_)) {
    if (rank_ > 0 && abs(linalg::determinant(action_[s])) != 1)
      throw PreconditionError("GaloisLattice: action matrix not invertible over Z");
    for (std::size_t g = 0; g < group_->order(); ++g)
      if (!(action_[group_->mul(g, s)] == action_[g] * action_[s]))
        throw PreconditionError("GaloisLattice: action is not a homomorphism (B_gh != B_g B_h)");
  }
}

GaloisLattice GaloisLattice::trivial(const GroupPtr& group, std::size_t rank) {
  return GaloisLattice(group, std::vector<IntMatrix>(group->order(), IntMatrix::identity(rank)));
}

GaloisLattice GaloisLattice::from_ideal(const GroupRingIdeal& ideal) {
  return GaloisLattice(ideal.group(), ideal.right_action());
}

GaloisLattice GaloisLattice::regular(const GroupPtr& group) { return from_ideal(GroupRingIdeal::whole(group)); }

GaloisLattice GaloisLattice::pullback(const GroupPtr& group, const std::vector<std::size_t>& hom) const {
  check_homomorphism(group, group_, hom);
  std::vector<IntMatrix> action;
  for (std::size_t x = 0; x < group->order(); ++x) action.push_back(action_[hom[x]]);
  return GaloisLattice(group, std::move(action));
}

GaloisLattice tensor(const GaloisLattice& a, const GaloisLattice& b) {
  if (a.group() != b.group()) throw PreconditionError("tensor: lattices over different groups");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < a.group()->order(); ++g) action.push_back(linalg::kronecker(a.action(g), b.action(g)));
  return GaloisLattice(a.group(), std::move(action));
}

GaloisLattice hat_dual(const GaloisLattice& lattice) {
  std::vector<IntMatrix> action;
  for (const auto& b : lattice.actions()) action.push_back(linalg::unimodular_inverse(b).transpose());
  return GaloisLattice(lattice.group(), std::move(action));
}

GaloisLattice hat_dual(const GroupRingIdeal& ideal) { return hat_dual(GaloisLattice::from_ideal(ideal)); }

// ---------------------------------------------------- TorsionGaloisModule

TorsionGaloisModule::TorsionGaloisModule(GroupPtr group, IntVector orders, std::vector<IntMatrix> action)
    : group_(std::move(group)), orders_(std::move(orders)) {
  const std::size_t m = orders_.size();
  for (const auto& n : orders_)
    if (n < 1) throw PreconditionError("TorsionGaloisModule: cyclic orders must be positive");
  if (action.size() != group_->order())
    throw PreconditionError("TorsionGaloisModule: one action matrix per element expected");
  for (auto& a : action) {
    if (a.rows() != m || a.cols() != m) throw PreconditionError("TorsionGaloisModule: action matrices of wrong shape");
    a = reduce_rows(std::move(a), orders_);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (mod(a(i, j) * orders_[j], orders_[i]) != 0)
          throw PreconditionError("TorsionGaloisModule: action is not well defined on Z/n_j -> Z/n_i");
  }
  action_ = std::move(action);
  if (!(action_[0] == reduce_rows(IntMatrix::identity(m), orders_)))
    throw PreconditionError("TorsionGaloisModule: identity must act trivially");
  for (std::size_t s : generating_set(group_))
    for (std::size_t g = 0; g < group_->order(); ++g)
      if (!(action_[group_->mul(g, s)] == reduce_rows(action_[g] * action_[s], orders_)))
        throw PreconditionError("TorsionGaloisModule: action is not a homomorphism (A_gh != A_g A_h)");
}

TorsionGaloisModule TorsionGaloisModule::trivial(const GroupPtr& group, const IntVector& orders) {
  return TorsionGaloisModule(group, orders, std::vector<IntMatrix>(group->order(), IntMatrix::identity(orders.size())));
}

TorsionGaloisModule TorsionGaloisModule::cyclic_character(const GroupPtr& group, const Integer& n, const Integer& m) {
  auto t = group->cyclic_generator();
  if (!t) throw PreconditionError("cyclic_character: group is not cyclic");
  std::vector<IntMatrix> action(group->order());
  Integer power = mod(Integer(1), n);
  std::size_t x = 0;
  for (std::size_t i = 0; i < group->order(); ++i) {
    action[x] = IntMatrix(1, 1);
    action[x](0, 0) = power;
    power = mod(power * m, n);
    x = group->mul(x, *t);
  }
  return TorsionGaloisModule(group, {n}, std::move(action));
}

TorsionGaloisModule TorsionGaloisModule::from_relations(const GroupPtr& group, std::size_t k, const IntMatrix& relations,
                                                        const std::vector<IntMatrix>& action) {
  if (relations.cols() != k) throw PreconditionError("from_relations: relation width differs from k");
  if (action.size() != group->order()) throw PreconditionError("from_relations: one action matrix per element expected");
  if (k == 0) return TorsionGaloisModule(group, {}, std::vector<IntMatrix>(group->order(), IntMatrix(0, 0)));
  linalg::SmithForm sf = linalg::smith(relations);
  IntVector d(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = i < sf.diagonal.rows() ? sf.diagonal(i, i) : Integer(0);
    if (d[i] == 0) throw PreconditionError("from_relations: relations do not have full rank (module is infinite)");
  }
  // Row coordinates y = x V turn the relations into d_i e_i; on column
  // vectors the action becomes V^T A V^{-T}.
  const IntMatrix vt = sf.right.transpose();
  const IntMatrix vt_inv = linalg::unimodular_inverse(vt);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (d[i] != 1) keep.push_back(i);
  IntVector orders;
  for (std::size_t i : keep) orders.push_back(d[i]);

  std::vector<IntMatrix> reduced;
  for (const auto& a : action) {
    if (a.rows() != k || a.cols() != k) throw PreconditionError("from_relations: action matrices of wrong shape");
    IntMatrix full = vt * a * vt_inv;
    for (std::size_t i : keep)
      for (std::size_t j = 0; j < k; ++j)
        if (mod(full(i, j) * d[j], d[i]) != 0)
          throw PreconditionError("from_relations: action does not preserve the relations");
    IntMatrix small(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) small(i, j) = full(keep[i], keep[j]);
    reduced.push_back(std::move(small));
  }
  return TorsionGaloisModule(group, std::move(orders), std::move(reduced));
}

Integer TorsionGaloisModule::cardinality() const { return product(orders_); }

IntVector TorsionGaloisModule::invariant_factors() const {
  if (orders_.empty()) return {};
  IntVector out;
  for (const auto& d : linalg::snf_diagonal(IntMatrix::diagonal(orders_)))
    if (d != 1) out.push_back(d);
  return out;
}

TorsionGaloisModule TorsionGaloisModule::pullback(const GroupPtr& group, const std::vector<std::size_t>& hom) const {
  check_homomorphism(group, group_, hom);
  std::vector<IntMatrix> action;
  for (std::size_t x = 0; x < group->order(); ++x) action.push_back(action_[hom[x]]);
  return TorsionGaloisModule(group, orders_, std::move(action));
}

TorsionGaloisModule direct_sum(const TorsionGaloisModule& a, const TorsionGaloisModule& b) {
  if (a.group() != b.group()) throw PreconditionError("direct_sum: modules over different groups");
  IntVector orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < a.group()->order(); ++g) {
    IntMatrix m(a.size() + b.size(), a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.action(g)(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(a.size() + i, a.size() + j) = b.action(g)(i, j);
    action.push_back(std::move(m));
  }
  return TorsionGaloisModule(a.group(), std::move(orders), std::move(action));
}

TorsionGaloisModule twist_module(const GaloisLattice& lattice, const TorsionGaloisModule& module) {
  if (lattice.group() != module.group()) throw PreconditionError("twist_module: lattice and module over different groups");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < lattice.group()->order(); ++g)
    action.push_back(twisted_action(lattice.action(g), module.action(g)));
  return TorsionGaloisModule(lattice.group(), repeat_orders(module.orders(), lattice.rank()), std::move(action));
}

// ---------------------------------------------------------------- maps

ModuleMap::ModuleMap(TorsionGaloisModule source, TorsionGaloisModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.size() || matrix_.cols() != source_.size())
    throw PreconditionError("ModuleMap: matrix shape does not match the modules");
  matrix_ = reduce_rows(std::move(matrix_), target_.orders());
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      if (mod(matrix_(i, j) * source_.orders()[j], target_.orders()[i]) != 0)
        throw PreconditionError("ModuleMap: matrix is not a well-defined homomorphism");
}

bool ModuleMap::is_equivariant() const {
  if (source_.group() != target_.group()) return false;
  for (std::size_t g = 0; g < source_.group()->order(); ++g)
    if (!(reduce_rows(target_.action(g) * matrix_, target_.orders()) ==
          reduce_rows(matrix_ * source_.action(g), target_.orders())))
      return false;
  return true;
}

Lattice ModuleMap::image_lifted() const {
  return linalg::hnf(linalg::vstack(matrix_.transpose(), IntMatrix::diagonal(target_.orders())));
}

Integer ModuleMap::image_size() const {
  if (target_.size() == 0) return 1;
  return target_.cardinality() / lattice_index(image_lifted());
}

Lattice ModuleMap::kernel_lifted() const {
  const std::size_t m1 = source_.size();
  if (m1 == 0) return Lattice(0);
  if (target_.size() == 0) return Lattice::full(m1);
  IntVector neg;
  for (const auto& n : target_.orders()) neg.push_back(-n);
  Lattice k = linalg::kernel(linalg::vstack(matrix_.transpose(), IntMatrix::diagonal(neg)));
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < k.rank(); ++i) {
    IntVector row = k.basis().row(i);
    gens.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m1));
  }
  return Lattice::span(gens, m1);
}

Integer ModuleMap::kernel_size() const { return source_.cardinality() / image_size(); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target().orders() != g.source().orders()) throw PreconditionError("compose: modules do not match");
  return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

ModuleMap induced_map(const GaloisLattice& source, const GaloisLattice& target, const IntMatrix& f,
                      const TorsionGaloisModule& module) {
  if (f.rows() != source.rank() || f.cols() != target.rank())
    throw PreconditionError("induced_map: matrix shape does not match the lattices");
  for (std::size_t g = 0; g < source.group()->order(); ++g)
    if (!(source.action(g) * f == f * target.action(g)))
      throw PreconditionError("induced_map: lattice map is not G-equivariant");
  return ModuleMap(twist_module(source, module), twist_module(target, module),
                   linalg::kronecker(f.transpose(), IntMatrix::identity(module.size())));
}

// ------------------------------------------------------------ fixed points

FixedPoints fixed_submodule(const TorsionGaloisModule& module, std::size_t g) {
  const std::size_t m = module.size();
  if (m == 0) return {1, Lattice(0)};
  const IntMatrix diff = module.action(g) - IntMatrix::identity(m);
  Integer coker = 1;
  for (const auto& d : linalg::snf_diagonal(linalg::hstack(diff, IntMatrix::diagonal(module.orders())))) coker *= d;

  ModuleMap endo(module, module, diff);
  Lattice lifted = endo.kernel_lifted();
  const Integer via_kernel = module.cardinality() / lattice_index(lifted);
  if (via_kernel != coker)
    throw VerificationError("fixed_submodule: kernel and cokernel sizes disagree (" + via_kernel.get_str() + " vs " +
                            coker.get_str() + ")");
  return {coker, std::move(lifted)};
}

Integer fixed_points(const TorsionGaloisModule& module, std::size_t g) { return fixed_submodule(module, g).count; }

// ------------------------------------------------------------ char polys

IntMatrix companion_matrix(const cyclo::IntPoly& f) {
  if (!f.is_monic()) throw PreconditionError("companion_matrix: polynomial must be monic");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f[i];
  return c;
}

cyclo::IntPoly twist_charpoly(const GaloisLattice& lattice, const cyclo::IntPoly& f, std::size_t g) {
  if (!f.is_monic()) throw PreconditionError("twist_charpoly: f must be monic");
  return cyclo::characteristic_polynomial(twisted_action(lattice.action(g), companion_matrix(f)));
}

// ----------------------------------------------------------- presentations

ModulePresentation compute_presentation(const GroupRingIdeal& ideal) {
  if (!ideal.is_right_ideal()) throw PreconditionError("compute_presentation: lattice is not a right ideal");
  const GroupPtr& group = ideal.group();
  const std::size_t n = group->order();
  std::vector<IntVector> gens = greedy_right_generators(group, ideal.lattice());
  ModulePresentation p;
  p.group = group;
  p.b = gens.size();
  if (p.b == 0) return p;

  IntMatrix pi(0, n);
  for (const auto& beta : gens) pi = linalg::vstack(pi, grouprings::left_multiplication(group, beta));
  Lattice k = linalg::kernel(pi);
  std::vector<IntVector> rels = greedy_right_generators(group, k);
  p.a = rels.size();
  p.psi.assign(p.b, std::vector<GroupRingElement>(p.a, GroupRingElement(group)));
  for (std::size_t i = 0; i < p.a; ++i)
    for (std::size_t row = 0; row < p.b; ++row)
      p.psi[row][i] = GroupRingElement(group, IntVector(rels[i].begin() + static_cast<std::ptrdiff_t>(row * n),
                                                        rels[i].begin() + static_cast<std::ptrdiff_t>((row + 1) * n)));
  return p;
}

ModulePresentation randomize_presentation(const ModulePresentation& p, std::mt19937_64& rng) {
  ModulePresentation q = p;
  const GroupPtr& group = q.group;
  auto zero = GroupRingElement(group);

  // An extra generator together with the relation that kills it.
  if (rng() % 2 == 0) {
    for (auto& row : q.psi) row.push_back(zero);
    q.psi.emplace_back(q.a + 1, zero);
    q.psi.back().back() = GroupRingElement::one(group);
    ++q.a;
    ++q.b;
  }
  // A redundant relation: a right Z[G]-combination of the existing ones.
  if (q.a > 0 && rng() % 2 == 0) {
    std::vector<GroupRingElement> coeff;
    for (std::size_t i = 0; i < q.a; ++i) coeff.push_back(random_element(group, rng, 1));
    for (auto& row : q.psi) {
      GroupRingElement combo(group);
      for (std::size_t i = 0; i < q.a; ++i) combo = combo + row[i] * coeff[i];
      row.push_back(combo);
    }
    ++q.a;
  }
  if (q.b < 2) return q;
  const int ops = 1 + static_cast<int>(rng() % 3);
  for (int op = 0; op < ops; ++op) {
    const std::size_t k = rng() % q.b;
    std::size_t l = rng() % (q.b - 1);
    if (l >= k) ++l;
    if (rng() % 4 == 0) {
      std::swap(q.psi[k], q.psi[l]);
    } else {
      // row_k += u * row_l is left multiplication by an invertible matrix over Z[G].
      const GroupRingElement u = random_element(group, rng, 1);
      for (std::size_t i = 0; i < q.a; ++i) q.psi[k][i] = q.psi[k][i] + u * q.psi[l][i];
    }
  }
  return q;
}

TorsionGaloisModule presentation_twist(const ModulePresentation& p, const TorsionGaloisModule& module) {
  const GroupPtr& group = p.group;
  if (group != module.group()) throw PreconditionError("presentation_twist: presentation and module over different groups");
  if (p.psi.size() != p.b) throw PreconditionError("presentation_twist: psi must have b rows");
  for (const auto& row : p.psi)
    if (row.size() != p.a) throw PreconditionError("presentation_twist: psi must have a columns");
  const std::size_t n = group->order();
  const std::size_t m = module.size();

  // Z[G]^a -> Z[G]^b as a row-convention lattice map; block (i, k) is
  // x -> psi[k][i] * x.
  IntMatrix f(p.a * n, p.b * n);
  for (std::size_t i = 0; i < p.a; ++i)
    for (std::size_t k = 0; k < p.b; ++k) {
      const IntMatrix lm = p.psi[k][i].left_multiplication();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) f(i * n + x, k * n + y) = lm(x, y);
    }
  const IntVector orders = repeat_orders(module.orders(), p.b * n);
  const IntMatrix relations =
      linalg::vstack(linalg::kronecker(f, IntMatrix::identity(m)), IntMatrix::diagonal(orders));

  const GaloisLattice reg = GaloisLattice::regular(group);
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < n; ++g) action.push_back(block_diagonal(twisted_action(reg.action(g), module.action(g)), p.b));
  return TorsionGaloisModule::from_relations(group, p.b * n * m, relations, action);
}

// ------------------------------------------------------- structural checks

ExactnessReport exactness_check(const GroupRingIdeal& sub, const GroupRingIdeal& whole,
                                const TorsionGaloisModule& module) {
  if (sub.group() != whole.group() || sub.group() != module.group())
    throw PreconditionError("exactness_check: objects over different groups");
  if (!whole.lattice().contains(sub.lattice())) throw PreconditionError("exactness_check: I is not contained in J");
  const std::size_t s = sub.rank();
  const std::size_t t = whole.rank();
  const GroupPtr& group = whole.group();

  IntMatrix e(s, t);
  for (std::size_t i = 0; i < s; ++i) e.set_row(i, *whole.lattice().coordinates(sub.lattice().basis().row(i)));
  IntMatrix v = IntMatrix::identity(t);
  if (s > 0) {
    linalg::SmithForm sf = linalg::smith(e);
    for (std::size_t i = 0; i < s; ++i)
      if (sf.diagonal(i, i) != 1)
        throw NonFreeQuotientError("exactness_check: J/I has torsion (elementary divisor " +
                                   sf.diagonal(i, i).get_str() + ")");
    v = sf.right;
  }
  // In the basis V^{-1} * basis(J) the first s vectors span I.
  const IntMatrix v_inv = linalg::unimodular_inverse(v);
  const auto j_action = whole.right_action();
  std::vector<IntMatrix> act_j, act_i, act_q;
  for (std::size_t g = 0; g < group->order(); ++g) {
    IntMatrix b = v_inv * j_action[g] * v;
    if (s > 0 && s < t && !b.block(0, s, s, t).is_zero())
      throw VerificationError("exactness_check: I is not stable under the action");
    act_i.push_back(b.block(0, s, 0, s));
    act_q.push_back(b.block(s, t, s, t));
    act_j.push_back(std::move(b));
  }
  const GaloisLattice li(group, act_i), lj(group, act_j), lq(group, act_q);

  IntMatrix incl(s, t), proj(t, t - s);
  for (std::size_t i = 0; i < s; ++i) incl(i, i) = 1;
  for (std::size_t i = s; i < t; ++i) proj(i, i - s) = 1;
  const ModuleMap iota = induced_map(li, lj, incl, module);
  const ModuleMap pi = induced_map(lj, lq, proj, module);

  ExactnessReport r;
  r.sub_order = iota.source().cardinality();
  r.whole_order = iota.target().cardinality();
  r.quotient_order = pi.target().cardinality();
  r.injective = iota.is_injective();
  r.surjective = pi.is_surjective();
  const bool composite_zero = compose(pi, iota).matrix().is_zero();
  r.middle_exact = composite_zero && pi.kernel_size() == iota.image_size();
  r.exact = r.injective && r.surjective && r.middle_exact && r.whole_order == r.sub_order * r.quotient_order;
  return r;
}

bool isomorphic_invariants(const TorsionGaloisModule& a, const TorsionGaloisModule& b) {
  if (a.group() != b.group()) return false;
  if (a.invariant_factors() != b.invariant_factors()) return false;
  for (std::size_t g = 0; g < a.group()->order(); ++g)
    if (fixed_points(a, g) != fixed_points(b, g)) return false;
  return true;
}

bool associativity_check(const GaloisLattice& i, const GaloisLattice& j, const TorsionGaloisModule& module) {
  return isomorphic_invariants(twist_module(tensor(i, j), module), twist_module(i, twist_module(j, module)));
}

}  // namespace galtwist::galmod
