#include "galtwist/algebraic_groups.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "galtwist/errors.hpp"
#include "galtwist/galois_modules.hpp"
#include "galtwist/grouprings.hpp"

namespace galtwist::algroup {

namespace {

using Elem = FieldTower::Elem;
constexpr std::uint32_t kNoRoot = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_power(std::uint64_t q, unsigned r) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (v > kEnumerationBound / q + 1) return kEnumerationBound + 1;
    v *= q;
  }
  return v;
}

void require_enumerable(const GroupModel& model, unsigned r) {
  if (r == 0) throw PreconditionError("r must be positive");
  const std::uint64_t size = checked_power(model.q(), r);
  if (size > kEnumerationBound)
    throw ResourceError("enumeration of F_{q^r} with q = " + std::to_string(model.q()) + ", r = " + std::to_string(r) +
                        " exceeds the bound of " + std::to_string(kEnumerationBound) + " elements");
}

// Splits [begin, end) into `workers` contiguous ranges and runs fn(w, lo, hi).
template <typename Fn>
void parallel_ranges(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn fn) {
  workers = std::max(1U, workers);
  const std::uint64_t total = end - begin;
  if (workers == 1 || total < workers) {
    fn(0U, begin, end);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back(fn, w, begin + total * w / workers, begin + total * (w + 1) / workers);
  for (auto& t : threads) t.join();
}

unsigned effective_workers(unsigned workers) { return std::max(1U, std::min(workers, 256U)); }

std::int64_t parse_int(const std::string& text, const std::string& spec) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != last)
    throw ParseError("group model '" + spec + "': expected an integer, got '" + text + "'");
  return v;
}

bool multiplicative_primitive(const FieldTower& f, const Elem& x, const std::vector<unsigned>& steps,
                              const std::vector<unsigned>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Elem norm = x, y = x;
    for (unsigned j = 1; j < primes[i]; ++j) {
      y = f.frobenius(y, steps[i]);
      norm = f.mul(norm, y);
    }
    if (!f.equal(norm, f.one())) return false;
  }
  return true;
}

bool elliptic_primitive(const EllipticCurve& e, const Point& pt, const std::vector<unsigned>& steps,
                        const std::vector<unsigned>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Point sum = pt, y = pt;
    for (unsigned j = 1; j < primes[i]; ++j) {
      y = e.frobenius(y, steps[i]);
      sum = e.add(sum, y);
    }
    if (!sum.infinity) return false;
  }
  return true;
}

bool contains_sorted(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

Integer elliptic_trace_power(const Integer& a, const Integer& q, unsigned k) {
  Integer t0 = 2, t1 = a;
  if (k == 0) return t0;
  for (unsigned i = 1; i < k; ++i) {
    Integer t2 = a * t1 - q * t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

}  // namespace

// ------------------------------------------------------------- models

std::uint64_t GroupModel::q() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < m; ++i) v *= p;
  return v;
}

std::string GroupModel::spec() const {
  std::ostringstream os;
  if (kind == ModelKind::multiplicative) {
    os << "gm:p=" << p;
  } else {
    os << "ec:p=" << p << ",a=" << a << ",b=" << b;
  }
  if (m != 1) os << ",m=" << m;
  return os.str();
}

void validate(const GroupModel& model) {
  if (!cyclo::is_prime(model.p)) throw PreconditionError("group model: p = " + std::to_string(model.p) + " is not prime");
  if (model.m == 0) throw PreconditionError("group model: m must be positive");
  if (model.kind == ModelKind::elliptic) {
    if (model.p < 5) throw PreconditionError("group model: the short Weierstrass model needs characteristic >= 5");
    const std::int64_t p = model.p;
    const std::int64_t a = ((model.a % p) + p) % p;
    const std::int64_t b = ((model.b % p) + p) % p;
    const Integer disc = 4 * Integer(a) * a * a + 27 * Integer(b) * b;
    if (disc % p == 0) throw PreconditionError("group model: singular curve (4a^3 + 27b^2 = 0 mod p)");
  }
}

GroupModel parse_group_model(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("group model '" + spec + "': missing ':'");
  GroupModel model;
  const std::string kind = spec.substr(0, colon);
  if (kind == "gm") {
    model.kind = ModelKind::multiplicative;
  } else if (kind == "ec") {
    model.kind = ModelKind::elliptic;
  } else {
    throw ParseError("group model '" + spec + "': unknown kind '" + kind + "'");
  }
  std::map<std::string, std::int64_t> values;
  std::istringstream is(spec.substr(colon + 1));
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("group model '" + spec + "': expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const bool allowed = key == "p" || key == "m" || (model.kind == ModelKind::elliptic && (key == "a" || key == "b"));
    if (!allowed) throw ParseError("group model '" + spec + "': unknown key '" + key + "'");
    if (!values.emplace(key, parse_int(item.substr(eq + 1), spec)).second)
      throw ParseError("group model '" + spec + "': duplicate key '" + key + "'");
  }
  if (!values.count("p")) throw ParseError("group model '" + spec + "': missing p");
  if (model.kind == ModelKind::elliptic && (!values.count("a") || !values.count("b")))
    throw ParseError("group model '" + spec + "': elliptic curves need a and b");
  if (values["p"] < 2 || values["p"] >= static_cast<std::int64_t>(kMaxCharacteristic))
    throw PreconditionError("group model '" + spec + "': p out of range");
  model.p = static_cast<std::uint32_t>(values["p"]);
  if (values.count("m")) {
    if (values["m"] < 1 || values["m"] > static_cast<std::int64_t>(kMaxFieldDegree))
      throw PreconditionError("group model '" + spec + "': m out of range");
    model.m = static_cast<unsigned>(values["m"]);
  }
  model.a = values.count("a") ? values["a"] : 0;
  model.b = values.count("b") ? values["b"] : 0;
  validate(model);
  return model;
}

// ------------------------------------------------------- elliptic curves

EllipticCurve::EllipticCurve(const FieldTower& field, std::int64_t a, std::int64_t b)
    : field_(&field), a_(field.from_int(a)), b_(field.from_int(b)) {
  if (field.characteristic() < 5) throw PreconditionError("EllipticCurve: characteristic must be at least 5");
}

Elem EllipticCurve::rhs(const Elem& x) const {
  const FieldTower& f = *field_;
  return f.add(f.mul(f.add(f.square(x), a_), x), b_);
}

bool EllipticCurve::on_curve(const Point& pt) const {
  return pt.infinity || field_->equal(field_->square(pt.y), rhs(pt.x));
}

bool EllipticCurve::equal(const Point& u, const Point& v) const {
  if (u.infinity || v.infinity) return u.infinity == v.infinity;
  return field_->equal(u.x, v.x) && field_->equal(u.y, v.y);
}

Point EllipticCurve::neg(const Point& pt) const {
  if (pt.infinity) return pt;
  return Point{false, pt.x, field_->neg(pt.y)};
}

Point EllipticCurve::add(const Point& u, const Point& v) const {
  if (u.infinity) return v;
  if (v.infinity) return u;
  const FieldTower& f = *field_;
  Elem lambda;
  if (f.equal(u.x, v.x)) {
    if (f.is_zero(f.add(u.y, v.y))) return Point{};
    const Elem num = f.add(f.scale(f.square(u.x), 3), a_);
    lambda = f.mul(num, f.inv(f.scale(u.y, 2)));
  } else {
    lambda = f.mul(f.sub(v.y, u.y), f.inv(f.sub(v.x, u.x)));
  }
  const Elem x3 = f.sub(f.sub(f.square(lambda), u.x), v.x);
  const Elem y3 = f.sub(f.mul(lambda, f.sub(u.x, x3)), u.y);
  return Point{false, x3, y3};
}

Point EllipticCurve::mul(Point pt, std::uint64_t n) const {
  Point acc;
  while (n > 0) {
    if (n & 1U) acc = add(acc, pt);
    pt = add(pt, pt);
    n >>= 1U;
  }
  return acc;
}

Point EllipticCurve::frobenius(const Point& pt, unsigned k) const {
  if (pt.infinity) return pt;
  return Point{false, field_->frobenius(pt.x, k), field_->frobenius(pt.y, k)};
}

std::uint64_t EllipticCurve::key(const Point& pt) const {
  if (pt.infinity) return 0;
  return 1 + field_->to_index(pt.x) * field_->size() + field_->to_index(pt.y);
}

Point EllipticCurve::from_key(std::uint64_t key) const {
  if (key == 0) return Point{};
  --key;
  return Point{false, field_->from_index(key / field_->size()), field_->from_index(key % field_->size())};
}

std::vector<std::uint32_t> square_root_table(const FieldTower& field) {
  if (field.size() > kEnumerationBound) throw ResourceError("square_root_table: field too large to tabulate");
  std::vector<std::uint32_t> root(field.size(), kNoRoot);
  Elem y = field.zero();
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    const std::uint64_t s = field.to_index(field.square(y));
    if (root[s] == kNoRoot) root[s] = static_cast<std::uint32_t>(i);
    field.increment(y);
  }
  return root;
}

namespace {

// Appends the points with x coordinate x, ordered by y index.
void points_over(const EllipticCurve& e, const std::vector<std::uint32_t>& roots, const Elem& x, std::vector<Point>& out) {
  const FieldTower& f = e.field();
  const std::uint32_t r = roots[f.to_index(e.rhs(x))];
  if (r == kNoRoot) return;
  const Elem y = f.from_index(r);
  const Elem ny = f.neg(y);
  if (f.equal(y, ny)) {
    out.push_back(Point{false, x, y});
    return;
  }
  const bool y_first = f.to_index(y) < f.to_index(ny);
  out.push_back(Point{false, x, y_first ? y : ny});
  out.push_back(Point{false, x, y_first ? ny : y});
}

}  // namespace

std::vector<Point> enumerate_points(const EllipticCurve& curve) {
  const FieldTower& f = curve.field();
  const auto roots = square_root_table(f);
  std::vector<Point> out{Point{}};
  Elem x = f.zero();
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    points_over(curve, roots, x, out);
    f.increment(x);
  }
  return out;
}

// ------------------------------------------------------------ operations

cyclo::IntPoly frobenius_charpoly(const GroupModel& model) {
  validate(model);
  const Integer q(std::to_string(model.q()));
  if (model.kind == ModelKind::multiplicative) return cyclo::IntPoly(std::vector<Integer>{-q, 1});
  if (model.q() > kPointCountBound)
    throw ResourceError("frobenius_charpoly: q = " + std::to_string(model.q()) + " exceeds the point-count bound " +
                        std::to_string(kPointCountBound));
  const Integer count = count_points(model, 1);
  const Integer a = q + 1 - count;
  return cyclo::IntPoly(std::vector<Integer>{q, -a, 1});
}

Elem norm_map(const FieldTower& field, const Elem& x, unsigned d) {
  const unsigned r = field.top_degree();
  if (d == 0 || r % d != 0) throw PreconditionError("norm_map: d must divide r");
  Elem acc = x, y = x;
  for (unsigned j = 1; j < r / d; ++j) {
    y = field.frobenius(y, d);
    acc = field.mul(acc, y);
  }
  return acc;
}

Point norm_map(const EllipticCurve& curve, const Point& pt, unsigned d) {
  const unsigned r = curve.field().top_degree();
  if (d == 0 || r % d != 0) throw PreconditionError("norm_map: d must divide r");
  Point acc = pt, y = pt;
  for (unsigned j = 1; j < r / d; ++j) {
    y = curve.frobenius(y, d);
    acc = curve.add(acc, y);
  }
  return acc;
}

BruteForceResult primitive_subgroup_bruteforce(const GroupModel& model, unsigned r, unsigned workers,
                                               bool keep_elements) {
  validate(model);
  require_enumerable(model, r);
  workers = effective_workers(workers);
  const FieldTower field(model.p, model.m, r);
  std::vector<unsigned> primes, steps;
  for (auto l : cyclo::prime_factors(r)) {
    primes.push_back(static_cast<unsigned>(l));
    steps.push_back(static_cast<unsigned>(r / l));
  }

  std::vector<std::vector<std::uint64_t>> parts(workers);
  std::vector<std::uint64_t> totals(workers, 0);
  BruteForceResult out;

  if (model.kind == ModelKind::multiplicative) {
    parallel_ranges(1, field.size(), workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
      Elem x = field.from_index(lo);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (multiplicative_primitive(field, x, steps, primes)) parts[w].push_back(i);
        field.increment(x);
      }
    });
    for (auto& p : parts) out.elements.insert(out.elements.end(), p.begin(), p.end());
    out.count = out.elements.size();

    const std::uint64_t group_order = field.size() - 1;
    bool ok = out.count > 0 && group_order % out.count == 0;
    bool closed = true;
    for (std::uint64_t idx : out.elements) {
      const Elem x = field.from_index(idx);
      if (ok && !field.equal(field.pow(x, out.count), field.one())) ok = false;
      if (closed && !contains_sorted(out.elements, field.to_index(field.frobenius(x, 1)))) closed = false;
      if (!ok && !closed) break;
    }
    // The only subgroup of order c in the cyclic group F^* is {x : x^c = 1}.
    out.subgroup_verified = ok;
    out.frobenius_closed = closed;
  } else {
    const EllipticCurve curve(field, model.a, model.b);
    const auto roots = square_root_table(field);
    parallel_ranges(0, field.size(), workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
      Elem x = field.from_index(lo);
      std::vector<Point> pts;
      for (std::uint64_t i = lo; i < hi; ++i) {
        pts.clear();
        points_over(curve, roots, x, pts);
        totals[w] += pts.size();
        for (const auto& pt : pts)
          if (elliptic_primitive(curve, pt, steps, primes)) parts[w].push_back(curve.key(pt));
        field.increment(x);
      }
    });
    out.elements.push_back(0);  // the point at infinity
    std::uint64_t total_points = 1;
    for (unsigned w = 0; w < workers; ++w) {
      out.elements.insert(out.elements.end(), parts[w].begin(), parts[w].end());
      total_points += totals[w];
    }
    out.count = out.elements.size();

    bool ok = total_points % out.count == 0;
    bool closed = true;
    for (std::uint64_t k : out.elements) {
      const Point pt = curve.from_key(k);
      if (!contains_sorted(out.elements, curve.key(curve.neg(pt)))) ok = false;
      if (!contains_sorted(out.elements, curve.key(curve.frobenius(pt, 1)))) closed = false;
    }
    // Closure under addition on a deterministic sample of pairs (all pairs when small).
    const std::uint64_t c = out.count;
    if (c * c <= 4096) {
      for (std::uint64_t i = 0; i < c && ok; ++i)
        for (std::uint64_t j = i; j < c && ok; ++j)
          if (!contains_sorted(out.elements,
                               curve.key(curve.add(curve.from_key(out.elements[i]), curve.from_key(out.elements[j])))))
            ok = false;
    } else {
      std::mt19937_64 rng(0x5eedULL);
      std::uniform_int_distribution<std::uint64_t> pick(0, c - 1);
      for (int s = 0; s < 512 && ok; ++s) {
        const Point u = curve.from_key(out.elements[pick(rng)]);
        const Point v = curve.from_key(out.elements[pick(rng)]);
        if (!contains_sorted(out.elements, curve.key(curve.add(u, v)))) ok = false;
      }
    }
    out.subgroup_verified = ok;
    out.frobenius_closed = closed;
  }
  if (!keep_elements) {
    out.elements.clear();
    out.elements.shrink_to_fit();
  }
  return out;
}

Integer count_points(const GroupModel& model, unsigned r) {
  validate(model);
  require_enumerable(model, r);
  const FieldTower field(model.p, model.m, r);
  if (model.kind == ModelKind::multiplicative) return Integer(std::to_string(field.size() - 1));
  const EllipticCurve curve(field, model.a, model.b);
  const auto roots = square_root_table(field);
  std::uint64_t count = 1;
  Elem x = field.zero();
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    const std::uint32_t root = roots[field.to_index(curve.rhs(x))];
    if (root != kNoRoot) count += root == 0 ? 1 : 2;
    field.increment(x);
  }
  return Integer(std::to_string(count));
}

Integer twisted_order(const GroupModel& model, unsigned r) {
  if (r == 0) throw PreconditionError("twisted_order: r must be positive");
  return cyclo::eval_at_one_abs(cyclo::inflate_charpoly(frobenius_charpoly(model), r, r));
}

ProductCheck restriction_order_product_check(const GroupModel& model, unsigned r) {
  ProductCheck out;
  out.points = count_points(model, r);
  out.product = 1;
  for (auto d : cyclo::divisors(r)) out.product *= twisted_order(model, static_cast<unsigned>(d));
  out.holds = out.points == out.product;
  return out;
}

namespace {

// E[n] inside E(F_{q^k}) for the least k = r*s containing it, with the
// matrix of Frobenius on a basis (columns are images).
struct EllipticTorsion {
  unsigned k = 0;
  linalg::IntMatrix frobenius;
};

EllipticTorsion elliptic_torsion_basis(const GroupModel& model, unsigned r, std::uint64_t n) {
  const Integer q(std::to_string(model.q()));
  const cyclo::IntPoly f = frobenius_charpoly(model);
  const Integer a = -f[1];
  for (unsigned s = 1;; ++s) {
    const unsigned k = r * s;
    if (k > groups::kMaxGroupOrder || checked_power(model.q(), k) > kEnumerationBound)
      throw ResourceError("twisted_torsion_check: E[" + std::to_string(n) + "] is not defined over any F_{q^k} with q^k <= " +
                          std::to_string(kEnumerationBound));
    Integer qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    if ((qk - 1) % n != 0) continue;  // the Weil pairing forces mu_n into F_{q^k}
    const Integer order = qk + 1 - elliptic_trace_power(a, q, k);
    if (order % (Integer(std::to_string(n)) * n) != 0) continue;

    const FieldTower field(model.p, model.m, k);
    const EllipticCurve curve(field, model.a, model.b);
    std::vector<Point> torsion;
    for (const auto& pt : enumerate_points(curve))
      if (curve.mul(pt, n).infinity) torsion.push_back(pt);
    if (torsion.size() != n * n) continue;

    auto exact_order_n = [&](const Point& pt) {
      for (auto d : cyclo::divisors(n))
        if (d < n && curve.mul(pt, d).infinity) return false;
      return true;
    };
    const auto p1 = std::find_if(torsion.begin(), torsion.end(), exact_order_n);
    if (p1 == torsion.end()) throw VerificationError("twisted_torsion_check: no point of order n in E[n]");
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> dlog;
    for (const auto& cand : torsion) {
      dlog.clear();
      Point bq;
      for (std::uint64_t b = 0; b < n; ++b) {
        Point acc = bq;
        for (std::uint64_t a2 = 0; a2 < n; ++a2) {
          dlog.emplace(curve.key(acc), std::make_pair(a2, b));
          acc = curve.add(acc, *p1);
        }
        bq = curve.add(bq, cand);
      }
      if (dlog.size() != n * n) continue;
      const auto i1 = dlog.at(curve.key(curve.frobenius(*p1, 1)));
      const auto i2 = dlog.at(curve.key(curve.frobenius(cand, 1)));
      EllipticTorsion out;
      out.k = k;
      out.frobenius = linalg::IntMatrix(2, 2);
      out.frobenius(0, 0) = static_cast<unsigned long>(i1.first);
      out.frobenius(1, 0) = static_cast<unsigned long>(i1.second);
      out.frobenius(0, 1) = static_cast<unsigned long>(i2.first);
      out.frobenius(1, 1) = static_cast<unsigned long>(i2.second);
      return out;
    }
    throw VerificationError("twisted_torsion_check: no basis found for E[n]");
  }
}

}  // namespace

TorsionCheck twisted_torsion_check(const GroupModel& model, unsigned r, std::uint64_t n, unsigned workers) {
  validate(model);
  if (n == 0) throw PreconditionError("twisted_torsion_check: n must be positive");
  if (n % model.p == 0) throw PreconditionError("twisted_torsion_check: n must be prime to the characteristic");
  if (r == 0) throw PreconditionError("twisted_torsion_check: r must be positive");

  TorsionCheck out;
  const BruteForceResult brute = primitive_subgroup_bruteforce(model, r, workers, true);
  const FieldTower field(model.p, model.m, r);
  std::uint64_t torsion = 0;
  if (model.kind == ModelKind::multiplicative) {
    for (auto idx : brute.elements)
      if (field.equal(field.pow(field.from_index(idx), n), field.one())) ++torsion;
  } else {
    const EllipticCurve curve(field, model.a, model.b);
    for (auto key : brute.elements)
      if (curve.mul(curve.from_key(key), n).infinity) ++torsion;
  }
  out.brute_count = Integer(std::to_string(torsion));

  // V[n] as a module over Gal(F_{q^k}/F_q), k = r*s.
  groups::GroupPtr big;
  std::vector<linalg::IntMatrix> action;
  linalg::IntVector orders;
  if (model.kind == ModelKind::multiplicative) {
    unsigned k = r;
    const std::uint64_t qn = model.q() % n;
    for (;; k += r) {
      if (k > groups::kMaxGroupOrder) throw ResourceError("twisted_torsion_check: splitting degree exceeds the group bound");
      std::uint64_t v = 1 % n;
      for (unsigned i = 0; i < k; ++i) v = v * qn % n;
      if (v == 1 % n) break;
    }
    big = groups::FiniteGroup::cyclic(k);
    out.splitting_degree = k;
    orders = {Integer(std::to_string(n))};
    linalg::Integer power = 1;
    for (unsigned i = 0; i < k; ++i) {
      linalg::IntMatrix m(1, 1);
      m(0, 0) = power;
      action.push_back(m);
      power = power * Integer(std::to_string(qn)) % Integer(std::to_string(n));
    }
  } else {
    const EllipticTorsion et = elliptic_torsion_basis(model, r, n);
    big = groups::FiniteGroup::cyclic(et.k);
    out.splitting_degree = et.k;
    orders = {Integer(std::to_string(n)), Integer(std::to_string(n))};
    linalg::IntMatrix power = linalg::IntMatrix::identity(2);
    for (unsigned i = 0; i < et.k; ++i) {
      action.push_back(power);
      power = power * et.frobenius;
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) power(x, y) %= Integer(std::to_string(n));
    }
  }
  const galmod::TorsionGaloisModule vn(big, orders, action);

  const auto small = groups::FiniteGroup::cyclic(r);
  std::vector<std::size_t> hom(big->order());
  for (std::size_t x = 0; x < hom.size(); ++x) hom[x] = x % r;
  const auto lattice =
      galmod::GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(small)).pullback(big, hom);
  out.module_count = galmod::fixed_points(galmod::twist_module(lattice, vn), *big->cyclic_generator());
  out.holds = out.module_count == out.brute_count;
  return out;
}

}  // namespace galtwist::algroup
