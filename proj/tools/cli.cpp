#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "galtwist/algebraic_groups.hpp"
#include "galtwist/cyclopoly.hpp"
#include "galtwist/errors.hpp"
#include "galtwist/finite_group.hpp"
#include "galtwist/grouprings.hpp"
#include "galtwist/permutations.hpp"
#include "galtwist/verify.hpp"

namespace galtwist::cli {

namespace {

using nlohmann::json;
using linalg::Integer;

// Integers are emitted as JSON numbers when they fit in 64 bits, otherwise
// as decimal strings.
json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const cyclo::IntPoly& p) {
  json out = json::array();
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max<long>(p.degree(), 0)); ++i) out.push_back(to_json(p[i]));
  return out;
}

json to_json(const linalg::IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json ideal_json(const grouprings::GroupRingIdeal& ideal) {
  return {{"rank", ideal.rank()},
          {"basis", to_json(ideal.lattice().basis())},
          {"right_ideal", ideal.is_right_ideal()},
          {"left_ideal", ideal.is_left_ideal()},
          {"saturated", ideal.is_saturated()}};
}

json subgroup_json(const groups::Subgroup& h) {
  json out = json::array();
  for (auto g : h.elements()) out.push_back(h.group()->label(g));
  return out;
}

// Descending coefficients "1,-5" -> X - 5.
cyclo::IntPoly parse_descending(const std::string& text) {
  std::vector<Integer> coeffs;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw ParseError("--f: '" + item + "' is not an integer");
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw ParseError("--f: no coefficients");
  std::reverse(coeffs.begin(), coeffs.end());
  return cyclo::IntPoly(std::move(coeffs));
}

unsigned default_workers() {
  if (const char* env = std::getenv("GALTWIST_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    throw ParseError("GALTWIST_WORKERS must be an integer in [1, 256], got '" + std::string(env) + "'");
  }
  return 1;
}

void print_table(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      print_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << std::left << std::setw(40) << prefix << ' ' << j.dump() << '\n';
  }
}

struct Options {
  std::string spec;
  unsigned r = 1;
  unsigned d = 0;
  std::string f;
  bool count_star = false;
  bool elements = false;
  std::string suite = "all";
  unsigned workers = 0;
  bool table = false;
};

json cmd_ideal(const Options& o) {
  const auto group = groups::parse_group_spec(o.spec);
  json out;
  out["order"] = group->order();
  out["elements"] = group->labels();
  if (group->cyclic_generator()) {
    const auto il = grouprings::cyclic_twist_ideal(group);
    out["twist_ideal"] = ideal_json(il);
    out["annihilator"] = ideal_json(grouprings::annihilator(il));
  }
  if (group->is_abelian()) {
    json iso = json::array();
    for (const auto& k : grouprings::cyclic_quotient_kernels(group)) {
      json entry = ideal_json(grouprings::isotypic_ideal(k));
      entry["kernel"] = subgroup_json(k);
      entry["degree"] = group->order() / k.order();
      iso.push_back(std::move(entry));
    }
    out["isotypic"] = std::move(iso);
  }
  if (group->semidirect_data()) {
    const auto sd = grouprings::semidirect_twist_ideal(group);
    out["semidirect_ideal"] = ideal_json(sd.ideal);
    out["semidirect_ideal"]["norm_map_unimodular"] = sd.norm_map_unimodular;
    out["semidirect_ideal"]["gamma_equivariant"] = sd.gamma_equivariant;
  }
  return out;
}

json cmd_order(const Options& o) {
  const auto model = algroup::parse_group_model(o.spec);
  const auto f = algroup::frobenius_charpoly(model);
  return {{"q", model.q()},
          {"frobenius_charpoly", to_json(f)},
          {"inflated_charpoly", to_json(cyclo::inflate_charpoly(f, o.r, o.r))},
          {"twisted_order", to_json(algroup::twisted_order(model, o.r))}};
}

json cmd_bruteforce(const Options& o) {
  const auto model = algroup::parse_group_model(o.spec);
  const auto res = algroup::primitive_subgroup_bruteforce(model, o.r, o.workers, o.elements);
  if (!res.subgroup_verified || !res.frobenius_closed)
    throw VerificationError("bruteforce: the primitive set of " + model.spec() + ", r = " + std::to_string(o.r) +
                            " failed the subgroup or Frobenius closure check");
  json out = {{"q", model.q()},
              {"count", res.count},
              {"subgroup_verified", res.subgroup_verified},
              {"frobenius_closed", res.frobenius_closed}};
  if (o.elements) out["elements"] = res.elements;
  return out;
}

json cmd_charpoly(const Options& o) {
  const auto f = parse_descending(o.f);
  if (!f.is_monic()) throw PreconditionError("--f must be monic");
  const unsigned d = o.d == 0 ? o.r : o.d;
  return {{"f", to_json(f)}, {"d", d}, {"coefficients", to_json(cyclo::inflate_charpoly(f, o.r, d))}};
}

json cmd_perms(const Options& o) {
  const auto group = groups::parse_group_spec(o.spec);
  const auto scan = grouprings::scan_permutations(group, o.workers);
  if (o.count_star) return {{"total", scan.total}, {"condition_star", scan.condition_star}};
  json out = {{"total", scan.total},
              {"condition_star", scan.condition_star},
              {"stabilizing", scan.stabilizing},
              {"mismatch_count", scan.mismatch_count},
              {"mismatches", scan.mismatches}};
  if (scan.prime_factor_product) out["prime_factor_product"] = *scan.prime_factor_product;
  return out;
}

json cmd_verify(const Options& o, bool& failed) {
  std::vector<verify::SuiteResult> results;
  if (o.suite == "all") {
    results = verify::run_all(o.workers);
  } else {
    results.push_back(verify::run_suite(o.suite, o.workers));
  }
  json suites = json::array();
  failed = false;
  for (const auto& r : results) {
    failed = failed || !r.passed();
    suites.push_back({{"id", r.id},
                      {"name", r.name},
                      {"description", r.description},
                      {"passed", r.passed()},
                      {"checked", r.checked},
                      {"failures", r.failures},
                      {"seconds", r.seconds}});
  }
  return {{"passed", !failed}, {"suites", suites}};
}

json error_document(const char* type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twists of algebraic groups by integral Galois modules"};
  app.name("galtwist");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--table", o.table, "Print a flat key/value table instead of JSON");
  app.add_option("--workers", o.workers, "Worker threads for enumeration (default: $GALTWIST_WORKERS or 1)")
      ->check(CLI::Range(1, 256));

  auto* ideal = app.add_subcommand("ideal", "Twist, annihilator, isotypic and semidirect ideals of Z[G]");
  ideal->add_option("group", o.spec, "cyclic:<r>, product:<r1>x<r2>..., dihedral:<r>, semidirect:<r>:<h>:<e>")
      ->required();

  auto* order = app.add_subcommand("order", "Order of the primitive subgroup via the Frobenius char poly");
  order->add_option("model", o.spec, "gm:p=<p>[,m=<m>] or ec:p=<p>,a=<a>,b=<b>[,m=<m>]")->required();
  order->add_option("--r", o.r, "Extension degree")->required()->check(CLI::Range(1, 64));

  auto* brute = app.add_subcommand("bruteforce", "Enumerate the primitive subgroup of V(F_{q^r})");
  brute->add_option("model", o.spec, "gm:p=<p>[,m=<m>] or ec:p=<p>,a=<a>,b=<b>[,m=<m>]")->required();
  brute->add_option("--r", o.r, "Extension degree")->required()->check(CLI::Range(1, 24));
  brute->add_flag("--elements", o.elements, "Include element indices (point keys for curves)");

  auto* charpoly = app.add_subcommand("charpoly", "Inflate a characteristic polynomial by primitive d-th roots of unity");
  charpoly->add_option("--f", o.f, "Monic polynomial, coefficients in descending degree, comma separated")->required();
  charpoly->add_option("--r", o.r, "Degree r")->required()->check(CLI::Range(1, 1000));
  charpoly->add_option("--d", o.d, "Divisor d of r (default r)")->check(CLI::Range(1, 1000));

  auto* perms = app.add_subcommand("perms", "Scan permutations of a cyclic group against condition (*)");
  perms->add_option("group", o.spec, "cyclic:<r>, r <= 10")->required();
  perms->add_flag("--count-star", o.count_star, "Report only the condition (*) count");

  auto* verify_cmd = app.add_subcommand("verify", "Run an acceptance suite (by name or number) or all of them");
  verify_cmd->add_option("suite", o.suite, "all, or one of: torus elliptic product ideals decomposition permutations "
                                           "semidirect functor torsion noncyclic");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_document("parse", e.what()).dump(2) << '\n';
    return kParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  json doc;
  doc["command"] = sub->get_name();
  int code = kOk;
  try {
    if (o.workers == 0) o.workers = default_workers();
    json input = {{"workers", o.workers}};
    if (!o.spec.empty()) input["spec"] = o.spec;
    if (sub == order || sub == brute || sub == charpoly) input["r"] = o.r;
    if (sub == charpoly) {
      input["f"] = o.f;
      input["d"] = o.d == 0 ? o.r : o.d;
    }
    if (sub == perms) input["count_star"] = o.count_star;
    if (sub == verify_cmd) input["suite"] = o.suite;
    doc["input"] = std::move(input);

    const auto start = std::chrono::steady_clock::now();
    if (sub == ideal) {
      doc["result"] = cmd_ideal(o);
    } else if (sub == order) {
      doc["result"] = cmd_order(o);
    } else if (sub == brute) {
      doc["result"] = cmd_bruteforce(o);
    } else if (sub == charpoly) {
      doc["result"] = cmd_charpoly(o);
    } else if (sub == perms) {
      doc["result"] = cmd_perms(o);
    } else {
      bool failed = false;
      doc["result"] = cmd_verify(o, failed);
      if (failed) code = kVerification;
    }
    doc["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  } catch (const ParseError& e) {
    err << error_document("parse", e.what()).dump(2) << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << error_document("precondition", e.what()).dump(2) << '\n';
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << error_document("resource", e.what()).dump(2) << '\n';
    return kResource;
  } catch (const VerificationError& e) {
    err << error_document("verification", e.what()).dump(2) << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    err << error_document("internal", e.what()).dump(2) << '\n';
    return kOther;
  }

  if (o.table) {
    print_table(doc, "", out);
  } else {
    out << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace galtwist::cli
