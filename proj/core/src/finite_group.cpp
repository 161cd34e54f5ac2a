#include "galtwist/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "galtwist/errors.hpp"

namespace galtwist::groups {

namespace {

void check_order(std::size_t n) {
  if (n == 0) throw PreconditionError("group order must be positive");
  if (n > kMaxGroupOrder)
    throw PreconditionError("group order " + std::to_string(n) + " exceeds the supported maximum of " +
                            std::to_string(kMaxGroupOrder));
}

}  // namespace

GroupPtr FiniteGroup::cyclic(std::size_t r) {
  check_order(r);
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = r;
  g->kind_ = GroupKind::cyclic;
  g->name_ = "cyclic:" + std::to_string(r);
  g->table_.resize(r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) g->table_[a * r + b] = (a + b) % r;
  for (std::size_t a = 0; a < r; ++a) g->labels_.push_back(a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a)));
  g->compute_inverses();
  return g;
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
  check_order(a->order() * b->order());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  g->order_ = n;
  g->kind_ = GroupKind::product;
  std::string an = a->name().rfind("product:", 0) == 0 ? a->name().substr(8) : std::to_string(na);
  std::string bn = b->name().rfind("product:", 0) == 0 ? b->name().substr(8) : std::to_string(nb);
  g->name_ = "product:" + an + "x" + bn;
  g->table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      g->table_[x * n + y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
  for (std::size_t x = 0; x < n; ++x)
    g->labels_.push_back("(" + a->label(x / nb) + "," + b->label(x % nb) + ")");
  g->compute_inverses();
  return g;
}

GroupPtr FiniteGroup::semidirect(std::size_t r, std::size_t h, std::uint64_t e) {
  check_order(r * h);
  e %= r;
  if (r > 1 && std::gcd<std::uint64_t>(e, r) != 1)
    throw PreconditionError("semidirect: action exponent must be a unit modulo r");
  std::uint64_t eh = 1 % r;
  for (std::size_t i = 0; i < h; ++i) eh = (eh * e) % r;
  if (r > 1 && eh != 1 % r)
    throw PreconditionError("semidirect: action exponent^h must be 1 modulo r (not a homomorphism into Aut)");
  std::vector<std::uint64_t> epow(h);
  epow[0] = 1 % r;
  for (std::size_t b = 1; b < h; ++b) epow[b] = (epow[b - 1] * e) % r;

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::size_t n = r * h;
  g->order_ = n;
  g->kind_ = GroupKind::semidirect;
  g->name_ = "semidirect:" + std::to_string(r) + ":" + std::to_string(h) + ":" + std::to_string(e);
  g->table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % r, b = x / r, c = y % r, d = y / r;
      const std::size_t na = (a + epow[b] * c) % r;
      g->table_[x * n + y] = na + r * ((b + d) % h);
    }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x % r, b = x / r;
    std::string l;
    if (a > 0) l += a == 1 ? "t" : "t^" + std::to_string(a);
    if (b > 0) l += b == 1 ? "s" : "s^" + std::to_string(b);
    g->labels_.push_back(l.empty() ? "1" : l);
  }
  SemidirectData sd;
  sd.gamma_order = r;
  sd.h_order = h;
  sd.action_exponent = e;
  for (std::size_t a = 0; a < r; ++a) sd.gamma.push_back(a);
  for (std::size_t b = 0; b < h; ++b) sd.h.push_back(r * b);
  g->semidirect_ = std::move(sd);
  g->compute_inverses();
  g->validate();
  return g;
}

GroupPtr FiniteGroup::dihedral(std::size_t r) {
  auto g = semidirect(r, 2, r - 1);
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*g));
  copy->name_ = "dihedral:" + std::to_string(r);
  return copy;
}

GroupPtr FiniteGroup::from_table(std::vector<std::size_t> table, std::vector<std::string> labels) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n * n != table.size()) throw PreconditionError("from_table: table size is not a square");
  check_order(n);
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->table_ = std::move(table);
  g->kind_ = GroupKind::table;
  g->name_ = "table:" + std::to_string(n);
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != n) throw PreconditionError("from_table: label count mismatch");
  g->labels_ = std::move(labels);
  for (std::size_t v : g->table_)
    if (v >= n) throw PreconditionError("from_table: entry out of range");
  g->validate();
  g->compute_inverses();
  return g;
}

void FiniteGroup::validate() const {
  const std::size_t n = order_;
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw PreconditionError("group table: element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (std::size_t b = 0; b < n; ++b) {
      row[mul(a, b)] = true;
      col[mul(b, a)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw PreconditionError("group table: not a Latin square (inverses missing)");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw PreconditionError("group table: not associative");
}

void FiniteGroup::compute_inverses() {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return a == 0 ? 1 : k;
}

std::size_t FiniteGroup::power(std::size_t a, std::uint64_t e) const {
  std::size_t result = 0;
  for (std::uint64_t i = 0; i < e % order_; ++i) result = mul(result, a);
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::size_t> FiniteGroup::cyclic_generator() const {
  if (kind_ == GroupKind::cyclic) return order_ == 1 ? 0 : 1;
  for (std::size_t a = 0; a < order_; ++a)
    if (element_order(a) == order_) return a;
  return std::nullopt;
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr group, std::vector<std::size_t> elements) : group_(std::move(group)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (std::size_t g : elements) {
    if (g >= group_->order()) throw PreconditionError("Subgroup: element index out of range");
    mask_ |= ElementMask{1} << g;
  }
  if (!(mask_ & 1U)) throw PreconditionError("Subgroup: identity missing");
  for (std::size_t a : elements) {
    if (!((mask_ >> group_->inverse(a)) & 1U)) throw PreconditionError("Subgroup: not closed under inverses");
    for (std::size_t b : elements)
      if (!((mask_ >> group_->mul(a, b)) & 1U)) throw PreconditionError("Subgroup: not closed under multiplication");
  }
  elements_ = std::move(elements);
}

Subgroup Subgroup::generated_by(const GroupPtr& group, const std::vector<std::size_t>& generators) {
  std::vector<std::size_t> elems{0};
  ElementMask seen = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t g : generators) {
      std::size_t x = group->mul(elems[i], g);
      if (!((seen >> x) & 1U)) {
        seen |= ElementMask{1} << x;
        elems.push_back(x);
      }
    }
  return Subgroup(group, std::move(elems));
}

Subgroup Subgroup::trivial(const GroupPtr& group) { return Subgroup(group, {0}); }

Subgroup Subgroup::whole(const GroupPtr& group) {
  std::vector<std::size_t> all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group) {
  std::vector<Subgroup> found{Subgroup::trivial(group)};
  std::set<ElementMask> seen{found.front().mask()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 0; g < group->order(); ++g) {
      if (found[i].contains(g)) continue;
      std::vector<std::size_t> gens = found[i].elements();
      gens.push_back(g);
      Subgroup s = Subgroup::generated_by(group, gens);
      if (seen.insert(s.mask()).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.mask() < b.mask();
  });
  return found;
}

bool has_cyclic_quotient(const Subgroup& k) {
  const auto& g = k.group();
  for (std::size_t x = 0; x < g->order(); ++x)
    for (std::size_t y : k.elements())
      if (!k.contains(g->mul(g->mul(x, y), g->inverse(x))))
        throw PreconditionError("has_cyclic_quotient: subgroup is not normal");
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::vector<std::size_t> gens = k.elements();
    gens.push_back(x);
    if (Subgroup::generated_by(g, gens).order() == g->order()) return true;
  }
  return false;
}

// ---------------------------------------------------------------- parsing

namespace {

std::size_t parse_count(const std::string& text, const std::string& spec) {
  std::size_t v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
    throw ParseError("group spec '" + spec + "': expected a positive integer, got '" + text + "'");
  if (v == 0) throw ParseError("group spec '" + spec + "': orders must be positive");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("group spec '" + spec + "': missing ':'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "cyclic") return FiniteGroup::cyclic(parse_count(rest, spec));
  if (kind == "dihedral") return FiniteGroup::dihedral(parse_count(rest, spec));
  if (kind == "product") {
    auto parts = split(rest, 'x');
    if (parts.size() < 2) throw ParseError("group spec '" + spec + "': product needs at least two factors");
    GroupPtr g = FiniteGroup::cyclic(parse_count(parts[0], spec));
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = FiniteGroup::direct_product(g, FiniteGroup::cyclic(parse_count(parts[i], spec)));
    return g;
  }
  if (kind == "semidirect") {
    auto parts = split(rest, ':');
    if (parts.size() != 3) throw ParseError("group spec '" + spec + "': expected semidirect:<r>:<h>:<exponent>");
    return FiniteGroup::semidirect(parse_count(parts[0], spec), parse_count(parts[1], spec),
                                   parse_count(parts[2], spec));
  }
  throw ParseError("group spec '" + spec + "': unknown kind '" + kind + "'");
}

}  // namespace galtwist::groups
