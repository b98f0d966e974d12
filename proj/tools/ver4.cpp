// ver4: builds group schemes in Ver4+ and prints or verifies their tangent
// spaces, distribution algebras and restricted Lie algebras.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ver4/ver4.hpp"

using nlohmann::json;
using namespace ver4;

namespace {

struct Options {
  std::vector<std::string> args;
  std::size_t trunc = 4;
  bool json = false;
  bool text = false;
  std::optional<std::size_t> maxOrder;
};

struct Family {
  std::string group;
  std::size_t m = 0;
  std::size_t n = 0;
};

struct Outcome {
  Status status = Status::Pass;
  json payload = json::object();
  json counterexamples = json::array();
  std::vector<std::string> text;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxLieDim = 400;
constexpr std::size_t kMaxTrunc = 8;
constexpr double kMaxBasis = 6000;
constexpr double kMaxTriple = 3.0e6;

std::size_t parseCount(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  }
}

Family parseFamily(const std::vector<std::string>& args, std::size_t from) {
  if (args.size() <= from) throw UsageError("missing group (ga, gm or gl)");
  Family f;
  f.group = args[from];
  if (f.group == "ga" || f.group == "gm") {
    if (args.size() != from + 1) throw UsageError(f.group + " takes no further arguments");
    return f;
  }
  if (f.group != "gl") throw UsageError("unknown group '" + f.group + "' (expected ga, gm or gl)");
  if (args.size() != from + 3) throw UsageError("gl needs two counts: gl <m> <n> for GL(m+n|n)");
  f.m = parseCount(args[from + 1], "m");
  f.n = parseCount(args[from + 2], "n");
  if (f.m + f.n == 0) throw UsageError("gl needs m + n >= 1");
  return f;
}

json familyJson(const Family& f) {
  json j{{"group", f.group}};
  if (f.group == "gl") {
    j["m"] = f.m;
    j["n"] = f.n;
  }
  return j;
}

std::size_t generatorCounts(const Family& f, std::size_t& nw) {
  if (f.group == "gl") {
    nw = f.n * f.n;
    return (f.m + f.n) * (f.m + f.n);
  }
  nw = 1;
  return 1;
}

/// Refuses parameter choices outside the desk-scale limits.
void checkResources(const Family& f, std::size_t trunc, std::size_t tensorPower) {
  if (trunc > kMaxTrunc) throw UsageError("resource bound: truncation " + std::to_string(trunc) + " > 8");
  if (trunc < 2) throw UsageError("truncation must be >= 2");
  std::size_t nw = 0;
  const std::size_t nx = generatorCounts(f, nw);
  if (nx + nw > kMaxLieDim)
    throw UsageError("resource bound: (m+n)^2 + n^2 = " + std::to_string(nx + nw) + " > 400");
  const double basis = freeBasisSize(nx, nw, trunc);
  if (basis > kMaxBasis)
    throw UsageError("resource bound: O/m^" + std::to_string(trunc) + " has " + std::to_string(std::llround(basis)) +
                     " basis elements (limit 6000)");
  const double tensors = freeBasisSize(tensorPower * nx, tensorPower * nw, trunc);
  if (tensors > kMaxTriple)
    throw UsageError("resource bound: tensor power has " + std::to_string(std::llround(tensors)) +
                     " basis elements (limit 3000000)");
}

HopfData build(const Family& f, std::size_t trunc) {
  if (f.group == "ga") return buildGa(trunc);
  if (f.group == "gm") return buildGm(trunc);
  return buildGL(f.m, f.n, trunc);
}

void addReport(Outcome& out, const Report& r) {
  if (r.status() == Status::Error)
    out.status = Status::Error;
  else if (r.status() == Status::Fail && out.status == Status::Pass)
    out.status = Status::Fail;
  for (const auto& v : r.violations()) out.counterexamples.push_back({{"law", v.law}, {"witness", v.witness}});
  for (const auto& e : r.errors()) out.counterexamples.push_back({{"law", "error"}, {"witness", e}});
  out.payload["checks"].push_back({{"suite", r.name()},
                                   {"status", toString(r.status())},
                                   {"checks", r.checks()},
                                   {"failures", r.failures()}});
  out.text.push_back(r.summary());
  for (const auto& n : r.notes()) out.text.push_back("  " + n);
}

std::string decompositionString(const Ver4Object& v) {
  return std::to_string(v.kCount()) + "·k ⊕ " + std::to_string(v.pCount()) + "·P";
}

Outcome cmdInfo(const Family& f, std::size_t trunc) {
  checkResources(f, trunc, 1);
  const HopfData h = build(f, trunc);
  const Ver4Object t = tangentObject(h);
  Outcome out;
  const auto& fd = h.algebra.freeData();
  out.payload = {{"name", h.name},
                 {"generators", {{"x", fd.xNames}, {"w", fd.wNames}}},
                 {"truncation", trunc},
                 {"algebraDim", h.algebra.dim()},
                 {"tangentDim", t.dim()},
                 {"lieDim", t.dim()},
                 {"decomposition", {{"k", t.kCount()}, {"P", t.pCount()}}},
                 {"tangentBasis", t.labels()},
                 {"formulas", h.formulas}};
  out.text.push_back(h.name + " at truncation " + std::to_string(trunc));
  std::string gens;
  for (const auto& x : fd.xNames) gens += (gens.empty() ? "" : " ") + x;
  for (const auto& w : fd.wNames) gens += " " + w;
  out.text.push_back("generators: " + gens);
  out.text.push_back("dim O/m^N: " + std::to_string(h.algebra.dim()));
  out.text.push_back("dim m/m^2 = dim Lie: " + std::to_string(t.dim()));
  out.text.push_back("Lie decomposition: " + decompositionString(t));
  for (const auto& fm : h.formulas) out.text.push_back("  " + fm);
  return out;
}

Outcome cmdTangent(const Family& f, std::size_t trunc) {
  checkResources(f, trunc, 1);
  const HopfData h = build(f, trunc);
  const auto basis = tangentBasis(h);
  const Ver4Object t = tangentObject(h);
  const auto cot = h.algebra.cotangentBasis();
  Outcome out;
  json dual = json::object();
  json d = json::object();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    dual[basis[k].label] = h.algebra.label(cot[k]);
    d[basis[k].label] = labelList(t.d(BitVector::unit(t.dim(), k)), t.labels());
    out.text.push_back(basis[k].label + " dual to " + h.algebra.label(cot[k]) +
                       ", d = " + t.format(t.d(BitVector::unit(t.dim(), k))));
  }
  out.payload = {{"name", h.name},
                 {"basis", t.labels()},
                 {"dualTo", dual},
                 {"d", d},
                 {"decomposition", {{"k", t.kCount()}, {"P", t.pCount()}}}};
  out.text.push_back("decomposition: " + decompositionString(t));
  Report homs("algebra maps to dual numbers");
  for (const auto& b : basis) homs.absorb(verifyAlgebraMap(h, homToDualNumbers(h, b)));
  addReport(out, homs);
  if (basis.size() <= kTangentOracleBound) {
    const auto oracle = enumerateTangentOracle(h);
    const std::size_t expected = std::size_t{1} << basis.size();
    Report r("tangent oracle");
    r.check(oracle.count() == expected, "#Hom(O, E)_e = 2^dim(m/m^2)",
            [&] { return std::to_string(oracle.count()) + " vs " + std::to_string(expected); });
    r.note("algebra maps to E: " + std::to_string(oracle.count()) + " of " + std::to_string(expected));
    out.payload["oracle"] = {{"count", oracle.count()}, {"expected", expected}};
    addReport(out, r);
  } else {
    out.payload["oracle"] = nullptr;
    out.text.push_back("oracle skipped: tangent dimension above 20");
  }
  return out;
}

Outcome cmdLie(const Family& f, std::size_t trunc) {
  checkResources(f, trunc, 1);
  if (trunc < 3) throw UsageError("lie needs truncation >= 3");
  const HopfData h = build(f, trunc);
  const RestrictedLie l = lieOfGroupUnchecked(h);
  Outcome out;
  out.payload = lieToJson(l);
  out.payload["name"] = h.name;
  const auto& labels = l.labels();
  out.text.push_back("Lie(" + h.name + "), basis: " + json(labels).dump());
  for (std::size_t i = 0; i < l.dim(); ++i) out.text.push_back("  d" + labels[i] + " = " + l.format(l.d(l.basis(i))));
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!l.bracketBasis(i, j).isZero())
        out.text.push_back("  [" + labels[i] + "," + labels[j] + "] = " + l.format(l.bracketBasis(i, j)));
  bool anyBracket = false;
  for (const auto& b : l.brackets) anyBracket = anyBracket || !b.isZero();
  if (!anyBracket) out.text.push_back("  all brackets zero");
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const auto s = l.squareBasis(i);
    out.text.push_back("  " + labels[i] + "^[2] = " + (s ? l.format(*s) : std::string("undefined")));
  }
  addReport(out, verifyLieAxioms(l));
  addReport(out, verifyRestrictedAxioms(l));
  return out;
}

Outcome cmdDist(const Family& f, std::size_t trunc, std::optional<std::size_t> maxOrder) {
  checkResources(f, trunc, 1);
  const std::size_t k = maxOrder.value_or(trunc - 1);
  if (k + 1 > trunc) throw UsageError("--max-order must be <= truncation - 1");
  const HopfData h = build(f, trunc);
  const DistAlgebra dist = distAlgebra(h, k);
  const LocalAlgebra& a = h.algebra;
  Outcome out;
  json layers = json::array();
  for (std::size_t i = 0; i <= k; ++i) layers.push_back(dist.layerDim(i));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dist.layerDim(k); ++i) labels.push_back(dist.label(i));
  json products = json::object();
  json brackets = json::object();
  auto fmt = [&](const BitVector& v) {
    json l = json::array();
    v.forEachSetBit([&](std::size_t i) { l.push_back(dist.label(i)); });
    return l;
  };
  for (std::size_t i = 1; i < dist.layerDim(k); ++i)
    for (std::size_t j = 1; j < dist.layerDim(k - a.degree(i)); ++j) {
      const std::string key = labels[i] + "·" + labels[j];
      products[key] = fmt(dist.product(dist.basis(i), dist.basis(j)));
      const BitVector b = dist.beta(dist.basis(i), dist.basis(j));
      if (!b.isZero()) brackets["β(" + labels[i] + "," + labels[j] + ")"] = fmt(b);
    }
  out.payload = {{"name", h.name}, {"maxOrder", k}, {"layers", layers}, {"basis", labels},
                 {"products", products}, {"brackets", brackets}};
  out.text.push_back("Dist(" + h.name + ") up to order " + std::to_string(k) + ", layer dims " + layers.dump());
  for (const auto& [key, v] : brackets.items()) out.text.push_back("  " + key + " = " + v.dump());
  addReport(out, verifyDistIdentities(dist));
  addReport(out, verifyDualBraiding(dist));
  return out;
}

Outcome cmdVerify(const std::string& suite, const Family& f, std::size_t trunc) {
  static const std::vector<std::string> suites{"hopf",          "filtration", "dist", "lie", "restricted",
                                               "universality",  "omega",      "tangent", "gamma2", "all"};
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw UsageError("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  const std::size_t power = (all || suite == "hopf" || suite == "omega") ? 3 : 2;
  checkResources(f, trunc, power);
  const HopfData h = build(f, trunc);
  Outcome out;
  if (all || suite == "hopf") addReport(out, verifyHopf(h));
  if (all || suite == "filtration") {
    Report r("filtration");
    for (std::size_t j = 0; j < trunc; ++j) r.absorb(verifyDeltaFiltration(h, j));
    r.absorb(verifyGrCocommutative(h));
    addReport(out, r);
  }
  if (all || suite == "omega") {
    Report r("omega");
    for (std::size_t n = 2; n <= 3; ++n)
      for (std::size_t j = 1; n + j - 1 <= trunc; ++j) r.absorb(omegaFiltrationCheck(h, n, j));
    addReport(out, r);
  }
  if (all || suite == "tangent") {
    Outcome t = cmdTangent(f, trunc);
    for (const auto& c : t.payload["checks"]) out.payload["checks"].push_back(c);
    for (const auto& c : t.counterexamples) out.counterexamples.push_back(c);
    for (const auto& s : t.text) out.text.push_back(s);
    if (t.status != Status::Pass && out.status == Status::Pass) out.status = t.status;
  }
  if (all || suite == "dist") {
    const DistAlgebra dist = distAlgebra(h, trunc - 1);
    addReport(out, verifyDistIdentities(dist));
    addReport(out, verifyDualBraiding(dist));
  }
  if (all || suite == "lie" || suite == "restricted" || suite == "gamma2") {
    if (trunc < 3) throw UsageError("Lie suites need truncation >= 3");
    const RestrictedLie l = lieOfGroupUnchecked(h);
    if (all || suite == "lie") addReport(out, verifyLieAxioms(l));
    if (all || suite == "restricted") addReport(out, verifyRestrictedAxioms(l));
    if (all || suite == "gamma2") addReport(out, gamma2Span(l).report);
  }
  if (all || suite == "universality") {
    if (trunc < 3) throw UsageError("universality needs truncation >= 3");
    addReport(out, verifyUniversality(h));
  }
  out.payload["name"] = h.name;
  return out;
}

int emit(const std::string& command, const json& parameters, const Outcome& out, bool asJson) {
  if (asJson) {
    json report{{"command", command},
                {"parameters", parameters},
                {"status", toString(out.status)},
                {"payload", out.payload},
                {"counterexamples", out.counterexamples}};
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& line : out.text) std::cout << line << "\n";
    for (const auto& c : out.counterexamples)
      std::cout << "counterexample: " << c["law"].get<std::string>() << " at " << c["witness"].get<std::string>()
                << "\n";
    std::cout << "status: " << toString(out.status) << "\n";
  }
  return exitCode(out.status);
}

void addCommon(CLI::App* sub, Options& opt, bool withMaxOrder) {
  sub->add_option("args", opt.args, "group and parameters: ga | gm | gl <m> <n>");
  sub->add_option("--trunc", opt.trunc, "truncation N (work in O/m^N)")->capture_default_str();
  auto* j = sub->add_flag("--json", opt.json, "JSON report");
  auto* t = sub->add_flag("--text", opt.text, "text report (default)");
  j->excludes(t);
  if (withMaxOrder) sub->add_option("--max-order", opt.maxOrder, "highest Dist layer (default N-1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group schemes, distributions and restricted Lie algebras in Ver4+"};
  app.require_subcommand(1);
  Options opt;
  auto* lie = app.add_subcommand("lie", "bracket, differential and square tables of Lie(G)");
  auto* dist = app.add_subcommand("dist", "distribution algebra products and identities");
  auto* tangent = app.add_subcommand("tangent", "tangent space and the dual-number oracle");
  auto* verify = app.add_subcommand("verify", "run a verifier suite: hopf filtration omega tangent dist lie "
                                              "restricted gamma2 universality all");
  auto* info = app.add_subcommand("info", "dimensions, generators and the Lie decomposition");
  addCommon(lie, opt, false);
  addCommon(dist, opt, true);
  addCommon(tangent, opt, false);
  addCommon(verify, opt, false);
  addCommon(info, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  json parameters{{"trunc", opt.trunc}, {"threads", threadCount()}, {"args", opt.args}};
  if (opt.maxOrder) parameters["maxOrder"] = *opt.maxOrder;
  try {
    Outcome out;
    if (command == "verify") {
      if (opt.args.empty()) throw UsageError("missing suite");
      const Family f = parseFamily(opt.args, 1);
      parameters["suite"] = opt.args[0];
      parameters["family"] = familyJson(f);
      out = cmdVerify(opt.args[0], f, opt.trunc);
    } else {
      const Family f = parseFamily(opt.args, 0);
      parameters["family"] = familyJson(f);
      if (command == "info") out = cmdInfo(f, opt.trunc);
      if (command == "tangent") out = cmdTangent(f, opt.trunc);
      if (command == "lie") out = cmdLie(f, opt.trunc);
      if (command == "dist") out = cmdDist(f, opt.trunc, opt.maxOrder);
    }
    return emit(command, parameters, out, opt.json);
  } catch (const std::exception& e) {
    Outcome out;
    out.status = Status::Error;
    out.payload = {{"error", e.what()}};
    out.text.push_back(std::string("error: ") + e.what());
    return emit(command, parameters, out, opt.json);
  }
}
