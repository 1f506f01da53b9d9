// lempert: command-line front end over the core catalogues.
//
// Subcommands: verify, lempertize, probe, distance, sample, suite.
// Reports are JSON {schema, command, config, reports, pass, timestamp};
// sample emits CSV.  Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or selector error, 3 numeric failure inside the library.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lempert/acceptance.hpp"
#include "lempert/construction.hpp"
#include "lempert/covector.hpp"
#include "lempert/distances.hpp"
#include "lempert/domains.hpp"
#include "lempert/errors.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/inverses.hpp"
#include "lempert/report.hpp"
#include "lempert/verify.hpp"

namespace {

using lempert::cplx;
using lempert::DomainKind;
using lempert::DomainModel;
using lempert::DomainPoint;
using lempert::GeodesicSpec;
using lempert::HSpec;
using lempert::LeftInverseSpec;
using lempert::Multiplier;
using lempert::VerificationReport;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kTau = 6.283185307179586476925286766559;

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  try {
    size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw UsageError("trailing characters in number '" + s + "'");
    return x;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("expected a number, got '" + s + "'");
  }
}

// "0.3" or "0.3/0.2" meaning 0.3 + 0.2i; slash keeps signs unambiguous
cplx parse_complex(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return cplx(parse_double(s), 0.0);
  return cplx(parse_double(s.substr(0, slash)), parse_double(s.substr(slash + 1)));
}

cplx unit_from_turns(double turns) {
  return cplx(std::cos(kTau * turns), std::sin(kTau * turns));
}

// Selector grammar: name[:key=value,...]; values may themselves contain ':'
// (e.g. h=const:0.3), so only the first ':' splits the name off.
struct Selector {
  std::string name;
  std::map<std::string, std::string> kv;
  std::string text;
};

Selector parse_selector(const std::string& text) {
  Selector out;
  out.text = text;
  const auto colon = text.find(':');
  out.name = text.substr(0, colon);
  if (out.name.empty()) throw UsageError("empty selector");
  if (colon == std::string::npos) return out;
  std::string rest = text.substr(colon + 1), item;
  std::istringstream stream(rest);
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("selector '" + text + "': expected key=value, got '" + item + "'");
    if (!out.kv.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw UsageError("selector '" + text + "': duplicate key '" + item.substr(0, eq) + "'");
  }
  if (rest.empty() || rest.back() == ',')
    throw UsageError("selector '" + text + "': trailing comma");
  return out;
}

class SelectorArgs {
 public:
  explicit SelectorArgs(const Selector& s) : s_(s) {}
  ~SelectorArgs() = default;

  std::string want(const std::string& key) {
    const auto it = s_.kv.find(key);
    if (it == s_.kv.end())
      throw UsageError("selector '" + s_.text + "': missing key '" + key + "'");
    seen_.push_back(key);
    return it->second;
  }
  std::optional<std::string> maybe(const std::string& key) {
    const auto it = s_.kv.find(key);
    if (it == s_.kv.end()) return std::nullopt;
    seen_.push_back(key);
    return it->second;
  }
  void finish() const {
    for (const auto& [k, v] : s_.kv) {
      (void)v;
      if (std::find(seen_.begin(), seen_.end(), k) == seen_.end())
        throw UsageError("selector '" + s_.text + "': unknown key '" + k + "'");
    }
  }

 private:
  const Selector& s_;
  std::vector<std::string> seen_;
};

HSpec parse_h(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "const") return HSpec::constant(parse_complex(arg));
  if (name == "coord") return HSpec::coordinate(static_cast<int>(parse_double(arg)));
  if (name == "product") {
    if (!arg.empty()) throw UsageError("h=product takes no argument");
    return HSpec::product();
  }
  throw UsageError("unknown h variant '" + name + "' (const:<c>, coord:<1|2>, product)");
}

Multiplier parse_multiplier(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "const") return Multiplier::constant(parse_complex(arg));
  if (name == "identity") {
    if (!arg.empty()) throw UsageError("m=identity takes no argument");
    return Multiplier::identity();
  }
  if (name == "blaschke") return Multiplier::blaschke(parse_complex(arg));
  throw UsageError("unknown multiplier '" + name + "' (const:<c>, identity, blaschke:<a>)");
}

GeodesicSpec make_geodesic(const std::string& text) {
  const Selector s = parse_selector(text);
  SelectorArgs a(s);
  GeodesicSpec out = GeodesicSpec::diagonal();
  if (s.name == "diagonal") {
  } else if (s.name == "graph") {
    out = GeodesicSpec::bidisc_graph(parse_multiplier(a.want("m")));
  } else if (s.name == "royal") {
    out = GeodesicSpec::royal();
  } else if (s.name == "flat") {
    out = GeodesicSpec::flat(parse_complex(a.want("beta")));
  } else if (s.name == "ball") {
    out = GeodesicSpec::ball_family(parse_double(a.want("t")));
  } else if (s.name == "ball-axis") {
    out = GeodesicSpec::ball_axis();
  } else {
    throw UsageError("unknown geodesic '" + s.name +
                     "' (diagonal, graph, royal, flat, ball, ball-axis)");
  }
  a.finish();
  return out;
}

LeftInverseSpec make_inverse(const std::string& text) {
  const Selector s = parse_selector(text);
  SelectorArgs a(s);
  LeftInverseSpec out = LeftInverseSpec::royal_phi();
  if (s.name == "proj") {
    out = LeftInverseSpec::bidisc_projection(static_cast<int>(parse_double(a.want("axis"))));
  } else if (s.name == "affine") {
    out = LeftInverseSpec::bidisc_affine(parse_double(a.want("t")));
  } else if (s.name == "family") {
    const double t = parse_double(a.want("t"));
    out = LeftInverseSpec::bidisc_family(t, parse_h(a.want("h")));
  } else if (s.name == "psi") {
    // omega in turns on the unit circle; optional mod scales it into the disc
    cplx omega = unit_from_turns(parse_double(a.want("omega")));
    if (const auto mod = a.maybe("mod")) omega *= parse_double(*mod);
    out = LeftInverseSpec::psi_omega(omega);
  } else if (s.name == "minus-psi") {
    out = LeftInverseSpec::royal_minus_psi(unit_from_turns(parse_double(a.want("omega"))));
  } else if (s.name == "phi") {
    out = LeftInverseSpec::royal_phi();
  } else if (s.name == "ball-simple") {
    out = LeftInverseSpec::ball_simple();
  } else if (s.name == "ball-refined") {
    out = LeftInverseSpec::ball_refined();
  } else {
    throw UsageError("unknown inverse '" + s.name +
                     "' (proj, affine, family, psi, minus-psi, phi, ball-simple, ball-refined)");
  }
  a.finish();
  return out;
}

lempert::verify::PathSpec make_path(const std::string& text) {
  const Selector s = parse_selector(text);
  SelectorArgs a(s);
  if (s.name == "linear-g2") {
    const double c = parse_double(a.want("c"));
    a.finish();
    return lempert::verify::PathSpec::linear_g2(c);
  }
  if (s.name == "royal-approach") {
    const cplx l0 = unit_from_turns(parse_double(a.want("omega")));
    a.finish();
    return lempert::verify::PathSpec::royal_approach(l0);
  }
  if (s.name == "ball-vertical") {
    const cplx va = parse_complex(a.want("a"));
    a.finish();
    return lempert::verify::PathSpec::ball_vertical(va);
  }
  throw UsageError("unknown path '" + s.name +
                   "' (linear-g2, royal-approach, ball-vertical)");
}

DomainModel make_domain(const std::string& key) {
  if (key == "disc") return DomainModel(DomainKind::UnitDisc);
  if (key == "bidisc") return DomainModel(DomainKind::Bidisc);
  if (key == "ball") return DomainModel(DomainKind::Ball2);
  if (key == "g2") return DomainModel(DomainKind::SymBidisc);
  throw UsageError("unknown domain '" + key + "' (disc, bidisc, ball, g2)");
}

DomainPoint parse_point(const DomainModel& d, const std::string& text) {
  std::vector<double> parts;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) parts.push_back(parse_double(item));
  const size_t want = d.dimension() == 1 ? 2 : 4;
  if (parts.size() != want) {
    std::ostringstream msg;
    msg << "point '" << text << "': expected " << want << " comma-separated reals";
    throw UsageError(msg.str());
  }
  const DomainPoint z = d.dimension() == 1 ? DomainPoint(cplx(parts[0], parts[1]))
                                           : DomainPoint(cplx(parts[0], parts[1]),
                                                         cplx(parts[2], parts[3]));
  if (!d.contains(z)) throw UsageError("point '" + text + "' lies outside the domain");
  return z;
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

ordered_json envelope(const std::string& command, ordered_json config,
                      const std::vector<VerificationReport>& reports, bool pass) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = std::move(config);
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(ordered_json::parse(lempert::to_json(r)));
  j["pass"] = pass;
  j["timestamp"] = iso_timestamp();
  return j;
}

// --out is relative to LEMPERT_OUT_DIR when that is set; empty --out = stdout
void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::string path = out_path;
  if (const char* dir = std::getenv("LEMPERT_OUT_DIR"); dir && *dir && path.front() != '/')
    path = std::string(dir) + "/" + path;
  std::ofstream stream(path);
  if (!stream) throw UsageError("cannot open output file '" + path + "'");
  stream << text;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return !reports.empty();
}

struct CommonFlags {
  std::uint64_t seed = 42;
  std::string out;
};

int finish(const std::string& command, ordered_json config,
           const std::vector<VerificationReport>& reports, const std::string& out_path) {
  const bool pass = all_pass(reports);
  write_text(out_path, envelope(command, std::move(config), reports, pass).dump(2) + "\n");
  return pass ? 0 : 1;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string geodesic, inverse;
  int grid = 64;
  bool fit = false;
  double tol = 1e-10;
  bool fiber = false;
  bool range = false;
  bool duality = false;
  int samples = 1000;
  CommonFlags common;
};

int run_verify(const VerifyArgs& a) {
  GeodesicSpec f = GeodesicSpec::diagonal();
  LeftInverseSpec G = LeftInverseSpec::royal_phi();
  try {
    f = make_geodesic(a.geodesic);
    G = make_inverse(a.inverse);
  } catch (const lempert::Error& e) {
    throw UsageError(e.what());
  }

  std::vector<VerificationReport> reports;
  reports.push_back(lempert::verify::left_inverse_residual(f, G, a.grid, a.fit, a.tol));
  if (a.fiber)
    reports.push_back(lempert::verify::fiber_affinity(f, G, 16, {1e-3, 1e-2, 1e-1}));
  if (a.range)
    reports.push_back(lempert::verify::range_supremum(G, G.domain(), a.samples, a.common.seed));
  if (a.duality) {
    const auto v = lempert::normalize_field(lempert::field_from_inverse(G, f), f);
    reports.push_back(
        lempert::verify::duality_residual(f, v, G, a.samples, a.common.seed, a.tol));
  }

  ordered_json config;
  config["geodesic"] = a.geodesic;
  config["inverse"] = a.inverse;
  config["grid"] = a.grid;
  config["fit"] = a.fit;
  config["tolerance"] = a.tol;
  config["fiber"] = a.fiber;
  config["range"] = a.range;
  config["duality"] = a.duality;
  config["samples"] = a.samples;
  config["seed"] = a.common.seed;
  return finish("verify", std::move(config), reports, a.common.out);
}

// ---- lempertize -----------------------------------------------------------

struct LempertizeArgs {
  std::string geodesic;
  std::vector<std::string> inverses;
  double t = 0.5;
  std::string match;
  int samples = 1000;
  int grid = 64;
  double tol = 1e-8;
  CommonFlags common;
};

int run_lempertize(const LempertizeArgs& a) {
  if (a.inverses.empty() || a.inverses.size() > 2)
    throw UsageError("--from-inverse must be given once or twice");

  GeodesicSpec f = GeodesicSpec::diagonal();
  std::optional<lempert::CovectorField> field;
  std::optional<LeftInverseSpec> match;
  try {
    f = make_geodesic(a.geodesic);
    std::vector<lempert::CovectorField> fields;
    for (const auto& text : a.inverses)
      fields.push_back(lempert::normalize_field(
          lempert::field_from_inverse(make_inverse(text), f), f));
    field = fields.size() == 2 ? lempert::combine(fields[0], fields[1], a.t) : fields[0];
    if (!a.match.empty()) match = make_inverse(a.match);
  } catch (const lempert::Error& e) {
    throw UsageError(e.what());
  }

  const lempert::LempertCandidate cand(f, *field);
  const lempert::RootSolveConfig cfg{};
  const LeftInverseSpec built = lempert::build_inverse(cand, cfg);

  std::vector<VerificationReport> reports;
  reports.push_back(lempert::verify::kernel_constancy(*field, a.grid));
  reports.push_back(lempert::verify::left_inverse_residual(f, built, a.grid, false, a.tol));

  const auto samples = lempert::capped_samples(cand.domain, a.samples, a.common.seed);
  if (match) {
    VerificationReport r;
    r.check_name = "match against catalogue inverse";
    r.inputs["built_from"] = field->describe();
    r.inputs["match"] = match->describe();
    r.seed = a.common.seed;
    r.tolerance = a.tol;
    double dev = 0.0;
    for (const auto& z : samples) dev = std::max(dev, std::abs(built.eval(z) - match->eval(z)));
    r.metrics["samples"] = static_cast<double>(samples.size());
    r.metrics["max_dev"] = dev;
    r.pass = dev < a.tol;
    reports.push_back(r);
  }

  {
    // root uniqueness and range audit over the sample set
    VerificationReport r;
    r.check_name = "constructed inverse audit";
    r.inputs["candidate"] = field->describe();
    r.seed = a.common.seed;
    double sup = 0.0;
    int bad = 0;
    for (const auto& z : samples) {
      const cplx root = lempert::solve_point(cand, z, cfg);
      sup = std::max(sup, std::abs(root));
      const double radius = std::max(std::abs(root) + 0.05, 0.9);
      if (lempert::zero_count(cand, z, radius, cfg.contour_nodes) != 1) ++bad;
    }
    r.metrics["samples"] = static_cast<double>(samples.size());
    r.metrics["range_sup"] = sup;
    r.metrics["bad_root_counts"] = bad;
    r.pass = bad == 0 && sup < 1.0;
    reports.push_back(r);
  }

  ordered_json config;
  config["geodesic"] = a.geodesic;
  config["from_inverse"] = a.inverses;
  if (a.inverses.size() == 2) config["t"] = a.t;
  if (!a.match.empty()) config["match"] = a.match;
  config["samples"] = a.samples;
  config["grid"] = a.grid;
  config["tolerance"] = a.tol;
  config["seed"] = a.common.seed;
  return finish("lempertize", std::move(config), reports, a.common.out);
}

// ---- probe ----------------------------------------------------------------

struct ProbeArgs {
  std::string inverse, path;
  int len = 12;
  std::optional<double> expect_limit;
  double tol = 1e-6;
  CommonFlags common;
};

int run_probe(const ProbeArgs& a) {
  LeftInverseSpec G = LeftInverseSpec::royal_phi();
  std::optional<lempert::verify::PathSpec> path;
  try {
    G = make_inverse(a.inverse);
    path = make_path(a.path);
  } catch (const lempert::Error& e) {
    throw UsageError(e.what());
  }

  auto probe = lempert::verify::boundary_probe(G, *path, a.len);
  VerificationReport r = probe.report;
  if (a.expect_limit) {
    const double dev = std::abs(probe.limit - cplx(*a.expect_limit, 0.0));
    r.metrics["expect_dev"] = dev;
    r.tolerance = a.tol;
    r.pass = dev < a.tol;
  }

  ordered_json config;
  config["inverse"] = a.inverse;
  config["path"] = a.path;
  config["len"] = a.len;
  if (a.expect_limit) config["expect_limit"] = *a.expect_limit;
  config["tolerance"] = a.tol;
  return finish("probe", std::move(config), {r}, a.common.out);
}

// ---- distance -------------------------------------------------------------

struct DistanceArgs {
  std::string domain = "bidisc";
  std::string from, to;
  int pairs = 0;
  double tol = 1e-8;
  CommonFlags common;
};

int run_distance(const DistanceArgs& a) {
  const DomainModel d = make_domain(a.domain);
  std::vector<VerificationReport> reports;

  if (a.pairs > 0) {
    reports.push_back(lempert::distance_consistency(d, a.pairs, a.common.seed, a.tol));
  } else {
    if (a.from.empty() || a.to.empty())
      throw UsageError("distance needs --from and --to (or --pairs for a sampled run)");
    const DomainPoint w = parse_point(d, a.from);
    const DomainPoint z = parse_point(d, a.to);
    const auto c = lempert::caratheodory_star(d, w, z);
    const auto l = lempert::lempert_star(d, w, z);

    VerificationReport r;
    r.check_name = "distance agreement";
    r.inputs["domain"] = a.domain;
    r.inputs["caratheodory_method"] = c.method;
    r.inputs["lempert_method"] = l.base.method;
    r.tolerance = a.tol;
    r.metrics["c_star"] = c.value_star;
    r.metrics["l_star"] = l.base.value_star;
    r.metrics["l_minus_c"] = l.base.value_star - c.value_star;
    for (const auto& [k, v] : c.details) r.metrics["c_" + k] = v;
    for (const auto& [k, v] : l.base.details) r.metrics["l_" + k] = v;
    double witness_dev = 0.0;
    if (l.witness) {
      const auto gap = [](const lempert::C2& x, const lempert::C2& y) {
        return std::sqrt(std::norm(x[0] - y[0]) + std::norm(x[1] - y[1]));
      };
      witness_dev = std::max(gap(l.witness->map(0.0).as_c2(), w.as_c2()),
                             gap(l.witness->map(l.witness->reach).as_c2(), z.as_c2()));
      r.metrics["witness_endpoint_dev"] = witness_dev;
      r.inputs["witness"] = l.witness->form;
    }
    r.pass = l.base.value_star - c.value_star >= -1e-9 && witness_dev < 1e-8;
    reports.push_back(r);
  }

  ordered_json config;
  config["domain"] = a.domain;
  if (a.pairs > 0) {
    config["pairs"] = a.pairs;
  } else {
    config["from"] = a.from;
    config["to"] = a.to;
  }
  config["tolerance"] = a.tol;
  config["seed"] = a.common.seed;
  return finish("distance", std::move(config), reports, a.common.out);
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  std::string domain = "bidisc";
  int count = 100;
  CommonFlags common;
};

int run_sample(const SampleArgs& a) {
  const DomainModel d = make_domain(a.domain);
  std::ostringstream out;
  out << "domain,re(z1),im(z1),re(z2),im(z2)\n";
  for (const auto& z : d.sample(a.count, a.common.seed)) {
    const cplx z1 = z.z1();
    const cplx z2 = d.dimension() == 2 ? z.z2() : cplx(0.0, 0.0);
    out << a.domain << ',' << num(z1.real()) << ',' << num(z1.imag()) << ','
        << num(z2.real()) << ',' << num(z2.imag()) << '\n';
  }
  write_text(a.common.out, out.str());
  return 0;
}

// ---- suite ----------------------------------------------------------------

struct SuiteArgs {
  std::string only;
  CommonFlags common;
};

int run_suite(const SuiteArgs& a) {
  const auto criteria = a.only.empty()
                            ? lempert::acceptance::run_all(a.common.seed)
                            : lempert::acceptance::run_filtered(a.common.seed, a.only);
  if (criteria.empty()) throw UsageError("--only '" + a.only + "' matches no criterion");

  std::vector<VerificationReport> reports;
  bool pass = true;
  for (const auto& c : criteria) {
    std::cout << (c.report.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(4) << c.id
              << ' ' << c.title << '\n';
    pass = pass && c.report.pass;
    reports.push_back(c.report);
  }
  std::cout << (pass ? "suite: all criteria passed" : "suite: at least one criterion FAILED")
            << '\n';

  ordered_json config;
  config["seed"] = a.common.seed;
  if (!a.only.empty()) config["only"] = a.only;
  if (!a.common.out.empty())
    write_text(a.common.out, envelope("suite", std::move(config), reports, pass).dump(2) + "\n");
  return pass ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--out", c.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex geodesics, left inverses and invariant distances in model domains"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "residual checks for a geodesic/inverse pair");
  verify->add_option("--geodesic", verify_args.geodesic, "geodesic selector")->required();
  verify->add_option("--inverse", verify_args.inverse, "left-inverse selector")->required();
  verify->add_option("--grid", verify_args.grid, "radial-angular grid size")
      ->capture_default_str();
  verify->add_flag("--fit", verify_args.fit, "fit a disc automorphism before the residual");
  verify->add_option("--tol", verify_args.tol, "residual tolerance")->capture_default_str();
  verify->add_flag("--fiber", verify_args.fiber, "also run the fiber affinity check");
  verify->add_flag("--range", verify_args.range, "also run the range supremum check");
  verify->add_flag("--duality", verify_args.duality, "also run the duality residual check");
  verify->add_option("--samples", verify_args.samples, "sample count for --range/--duality")
      ->capture_default_str();
  add_common(verify, verify_args.common);

  LempertizeArgs lempertize_args;
  auto* lempertize =
      app.add_subcommand("lempertize", "build a left inverse from a covector field");
  lempertize->add_option("--geodesic", lempertize_args.geodesic, "geodesic selector")
      ->required();
  lempertize
      ->add_option("--from-inverse", lempertize_args.inverses,
                   "inverse whose field seeds the construction (repeat to combine two)")
      ->required();
  lempertize
      ->add_option("--t", lempertize_args.t, "combination weight of the second field")
      ->capture_default_str();
  lempertize->add_option("--match", lempertize_args.match,
                         "catalogue inverse the construction should reproduce");
  lempertize->add_option("--samples", lempertize_args.samples, "evaluation sample count")
      ->capture_default_str();
  lempertize->add_option("--grid", lempertize_args.grid, "grid for the residual check")
      ->capture_default_str();
  lempertize->add_option("--tol", lempertize_args.tol, "comparison tolerance")
      ->capture_default_str();
  add_common(lempertize, lempertize_args.common);

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "boundary limit of an inverse along a path");
  probe->add_option("--inverse", probe_args.inverse, "left-inverse selector")->required();
  probe->add_option("--path", probe_args.path, "boundary path selector")->required();
  probe->add_option("--len", probe_args.len, "schedule length")->capture_default_str();
  double expect = 0.0;
  auto* expect_opt =
      probe->add_option("--expect-limit", expect, "assert the limit equals this real value");
  probe->add_option("--tol", probe_args.tol, "limit tolerance")->capture_default_str();
  add_common(probe, probe_args.common);

  DistanceArgs distance_args;
  auto* distance =
      app.add_subcommand("distance", "Caratheodory and Lempert distances between two points");
  distance->add_option("--domain", distance_args.domain, "disc, bidisc, ball or g2")
      ->capture_default_str();
  distance->add_option("--from", distance_args.from, "first point, comma-separated reals");
  distance->add_option("--to", distance_args.to, "second point, comma-separated reals");
  distance->add_option("--pairs", distance_args.pairs,
                       "run the sampled consistency check on this many pairs instead");
  distance->add_option("--tol", distance_args.tol, "agreement tolerance")
      ->capture_default_str();
  add_common(distance, distance_args.common);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "dump seeded domain samples as CSV");
  sample->add_option("--domain", sample_args.domain, "disc, bidisc, ball or g2")
      ->capture_default_str();
  sample->add_option("--count", sample_args.count, "number of samples")->capture_default_str();
  add_common(sample, sample_args.common);

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--only", suite_args.only, "substring filter on criterion id/title");
  add_common(suite, suite_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify) return run_verify(verify_args);
    if (*lempertize) return run_lempertize(lempertize_args);
    if (*probe) {
      if (expect_opt->count() > 0) probe_args.expect_limit = expect;
      return run_probe(probe_args);
    }
    if (*distance) return run_distance(distance_args);
    if (*sample) return run_sample(sample_args);
    if (*suite) return run_suite(suite_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const lempert::Error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
