// One line per acceptance criterion; exits 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ver4/ver4.hpp"

using namespace ver4;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { details.push_back("     " + what); }
};

std::vector<HopfData> families(std::size_t N) { return {buildGa(N), buildGm(N), buildGL(0, 1, N), buildGL(1, 1, N)}; }

std::string firstViolation(const Report& r) {
  if (r.passed()) return "";
  if (!r.violations().empty()) return ": " + r.violations().front().law + " at " + r.violations().front().witness;
  return ": " + r.summary();
}

std::size_t idx(const RestrictedLie& l, const std::string& label) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.labels()[i] == label) return i;
  throw std::out_of_range(label);
}

// The Lie algebra tables as printed for G_a and G_m.
RestrictedLie publishedRankOne(const RestrictedLie& shape, bool multiplicative) {
  RestrictedLie l = shape;
  for (auto& b : l.brackets) b = l.zero();
  l.squareDomain = {l.basis(idx(l, "e"))};
  l.squareValues = {multiplicative ? l.basis(idx(l, "e")) : l.zero()};
  return l;
}

// The δ-formulas for GL(m+n|n); transposeFix replaces e_{j,k} by e_{k,j} in
// the [e,e] rule.
RestrictedLie publishedGL(const RestrictedLie& shape, std::size_t r, std::size_t n, bool transposeFix) {
  RestrictedLie l = shape;
  auto e = [&](std::size_t i, std::size_t j) { return l.basis(idx(l, "e" + indexPair(i, j))); };
  auto f = [&](std::size_t i, std::size_t j) {
    return (i <= n && j <= n) ? l.basis(idx(l, "f" + indexPair(i, j))) : l.zero();
  };
  auto pos = [&](char kind, std::size_t i, std::size_t j) { return idx(l, std::string(1, kind) + indexPair(i, j)); };
  for (auto& b : l.brackets) b = l.zero();
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      for (std::size_t k = 1; k <= r; ++k)
        for (std::size_t m = 1; m <= r; ++m) {
          BitVector ee = l.zero();
          if (j == k) ee ^= e(i, m);
          if (i == m) ee ^= transposeFix ? e(k, j) : e(j, k);
          l.bracketBasis(pos('e', i, j), pos('e', k, m)) = ee;
          if (k > n || m > n) continue;
          BitVector ef = l.zero();
          if (j == k) ef ^= f(i, m);
          if (i == m) ef ^= f(k, j);
          l.bracketBasis(pos('e', i, j), pos('f', k, m)) = ef;
          l.bracketBasis(pos('f', k, m), pos('e', i, j)) = ef;
          if (i > n || j > n) continue;
          BitVector ff = l.zero();
          if (i == k && j == m) {
            ff = e(i, j);
          } else {
            if (j == k) ff ^= e(i, m);
            if (i == m) ff ^= e(k, j);
          }
          l.bracketBasis(pos('f', i, j), pos('f', k, m)) = ff;
        }
  l.squareDomain.clear();
  l.squareValues.clear();
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j) {
      l.squareDomain.push_back(e(i, j));
      l.squareValues.push_back(i == j ? e(i, j) : l.zero());
    }
  return l;
}

// Bracket and square entries where two tables on the same basis differ.
std::vector<std::string> tableDiff(const RestrictedLie& a, const RestrictedLie& b) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.bracketBasis(i, j) == b.bracketBasis(i, j)))
        out.push_back("[" + a.labels()[i] + "," + a.labels()[j] + "] = " + a.format(a.bracketBasis(i, j)) + " vs " +
                      b.format(b.bracketBasis(i, j)));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto sa = a.squareBasis(i), sb = b.squareBasis(i);
    if (sa != sb)
      out.push_back(a.labels()[i] + "^[2] = " + (sa ? a.format(*sa) : "undefined") + " vs " +
                    (sb ? b.format(*sb) : "undefined"));
  }
  return out;
}

void compareTables(Outcome& o, const std::string& name, const RestrictedLie& computed, const RestrictedLie& published) {
  const auto diff = tableDiff(computed, published);
  std::ostringstream s;
  s << name << ": " << diff.size() << " entries differ from the published table";
  if (!diff.empty()) s << ", e.g. " << diff.front() << " (computed vs published)";
  o.require(diff.empty(), s.str());
  const Report lie = verifyLieAxioms(published), res = verifyRestrictedAxioms(published);
  o.info(name + " published table: Lie axioms " + (lie.passed() ? "PASS" : "FAIL" + firstViolation(lie)) +
         "; restricted axioms " + (res.passed() ? "PASS" : "FAIL" + firstViolation(res)));
}

Outcome criterion1() {
  Outcome o;
  const auto ga = lieOfGroup(buildGa(4));
  const auto gm = lieOfGroup(buildGm(4));
  for (const auto* l : {&ga, &gm}) {
    o.require(l->labels() == std::vector<std::string>{"e", "f"} && l->d(l->basis(1)) == l->basis(0) &&
                  l->d(l->basis(0)).isZero() && !l->squareBasis(1).has_value(),
              "basis {e,f}, df = e, f^[2] undefined");
  }
  compareTables(o, "Lie(Ga)", ga, publishedRankOne(ga, false));
  compareTables(o, "Lie(Gm)", gm, publishedRankOne(gm, true));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (auto [m, n] : {std::pair{0U, 1U}, std::pair{1U, 1U}, std::pair{0U, 2U}, std::pair{2U, 1U}}) {
    const auto h = buildGL(m, n, 3);
    const auto l = lieOfGroupUnchecked(h);
    const Report lie = verifyLieAxioms(l), res = verifyRestrictedAxioms(l);
    o.info(h.name + " computed table: Lie axioms " + (lie.passed() ? "PASS" : "FAIL" + firstViolation(lie)) +
           "; restricted axioms " + (res.passed() ? "PASS" : "FAIL" + firstViolation(res)));
    compareTables(o, h.name, l, publishedGL(l, m + n, n, false));
    const auto corrected = publishedGL(l, m + n, n, true);
    const auto fixed = tableDiff(l, corrected);
    const Report cl = verifyLieAxioms(corrected);
    o.info(h.name + " with e_{k,j} in the [e,e] rule: " + std::to_string(fixed.size()) + " entries differ" +
           (fixed.empty() ? "" : ", e.g. " + fixed.front()) + "; Lie axioms " +
           (cl.passed() ? "PASS" : "FAIL" + firstViolation(cl)));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::size_t N = 2; N <= 4; ++N)
    for (const auto& h : families(N)) {
      const auto r = verifyHopf(h);
      o.require(r.passed(), h.name + " N=" + std::to_string(N) + " " + r.summary());
    }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& h : families(4)) {
    bool ok = true;
    for (std::size_t j = 0; j < 4; ++j) ok = ok && verifyDeltaFiltration(h, j).passed();
    ok = ok && verifyGrCocommutative(h).passed();
    for (std::size_t arity : {2U, 3U})
      for (std::size_t j = 1; arity + j - 1 <= 4; ++j) ok = ok && omegaFiltrationCheck(h, arity, j).passed();
    o.require(ok, h.name + " Δ filtration, Gr cocommutativity, ω filtration");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& h : families(4)) {
    const auto r = verifyDistIdentities(distAlgebra(h, 3));
    o.require(r.passed(), h.name + " " + r.summary());
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& h : families(4)) {
    const auto r = verifyUniversality(h);
    std::string note = r.notes().empty() ? "" : " [" + r.notes().front() + "]";
    o.require(r.passed(), h.name + note + firstViolation(r));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<HopfData> hs = families(4);
  hs.push_back(buildGL(0, 2, 3));
  hs.push_back(buildGL(2, 1, 2));
  for (const auto& h : hs) {
    const auto r = enumerateTangentOracle(h);
    o.require(r.count() == (std::size_t{1} << r.tangentDim) && r.tangentDim == h.algebra.cotangentBasis().size(),
              h.name + " homs " + std::to_string(r.count()) + " = 2^" + std::to_string(r.tangentDim));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto check = [&](const std::string& name, const RestrictedLie& l) {
    const Report lie = verifyLieAxioms(l), res = verifyRestrictedAxioms(l);
    o.require(lie.passed(), name + " Lie axioms" + firstViolation(lie));
    o.require(res.passed(), name + " restricted axioms" + firstViolation(res));
  };
  for (const auto& h : families(4)) check("Lie(" + h.name + ")", lieOfGroupUnchecked(h));
  check("End(P)", lieFromAssociative(endomorphismAlgebra(makeObject(0, 1))));
  check("End(V_{2|1})", lieFromAssociative(endomorphismAlgebra(makeObject(1, 1))));
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto expectFail = [&](const std::string& suite, const Report& r) {
    const bool named = !r.passed() && !r.violations().empty() && !r.violations().front().law.empty();
    o.require(named, suite + (named ? " -> " + r.violations().front().law + " at " + r.violations().front().witness
                                    : " did not report a named violation"));
  };
  {
    auto h = buildGa(3);
    h.coproduct[h.algebra.generatorIndex("x")] ^= h.t2.pure(h.algebra.unit(), h.algebra.unit());
    expectFail("hopf (Δ(x) += 1⊗1)", verifyHopf(h));
  }
  {
    auto h = buildGm(3);
    h.antipode[h.algebra.generatorIndex("t")] ^= h.algebra.element("t^2");
    expectFail("hopf (τ(t) += t^2)", verifyHopf(h));
  }
  {
    auto h = buildGa(4);
    const auto x = h.algebra.generatorIndex("x");
    h.coproduct[x] ^= h.t2.pure(h.algebra.element("w"), h.algebra.unit());
    expectFail("graded cocommutativity (Δ(x) += w⊗1)", verifyGrCocommutative(h));
  }
  {
    auto h = buildGa(4);
    h.coproduct[h.algebra.generatorIndex("x")] ^= h.t2.pure(h.algebra.element("x"), h.algebra.unit());
    expectFail("Δ filtration (Δ(x) += x⊗1)", verifyDeltaFiltration(h, 1));
  }
  {
    auto h = buildGa(4);
    h.coproduct[h.algebra.generatorIndex("x")] ^= h.t2.pure(h.algebra.element("x"), h.algebra.unit());
    expectFail("ω filtration (Δ(x) += x⊗1)", omegaFiltrationCheck(h, 2, 1));
  }
  {
    auto h = buildGm(4);
    const auto tt = h.algebra.countBelow(2);
    h.coproduct[tt] ^= h.t2.pure(h.algebra.element("t"), h.algebra.element("t"));
    expectFail("dist (Δ(t^2) += t⊗t)", verifyDistIdentities(distAlgebra(h, 3)));
  }
  {
    const auto h = buildGa(3);
    auto f = homToDualNumbers(h, tangentBasis(h)[0]);
    f.flip(1, h.algebra.generatorIndex("x"));
    expectFail("tangent (one entry of a hom to dual numbers)", verifyAlgebraMap(h, f));
  }
  {
    auto l = lieOfGroup(buildGL(0, 1, 4));
    l.bracketBasis(idx(l, "e11"), idx(l, "f11")).flip(idx(l, "f11"));
    expectFail("Lie axioms ([e11,f11] += f11)", verifyLieAxioms(l));
  }
  {
    auto l = lieOfGroup(buildGm(4));
    l.squareValues[0].flip(idx(l, "e"));
    expectFail("restricted axioms (e^[2] += e)", verifyRestrictedAxioms(l));
  }
  {
    const auto h = buildGm(4);
    auto f = derivationFromTangent(h, tangentBasis(h)[0]);
    f.matrix.flip(h.algebra.generatorIndex("t"), h.algebra.generatorIndex("t"));
    expectFail("derivation (F_e(t) += t)", verifyDerivation(h.algebra, f));
  }
  {
    auto h = buildGm(4);
    const auto t = h.algebra.generatorIndex("t");
    h.coproduct[t] ^= h.t2.pure(h.algebra.element("t"), h.algebra.element("t"));
    expectFail("universality (Δ(t) -= t⊗t)", verifyUniversality(h));
  }
  {
    auto l = lieOfGroup(buildGa(4));
    l.squareValues[0].flip(idx(l, "e"));
    expectFail("Γ² (e^[2] += e)", gamma2Span(l).report);
  }
  {
    auto a = freeCommutative(0, 1, 4);
    const auto bad = a.withProduct(a.generatorIndex("x"), a.generatorIndex("w"), BitVector(a.dim()));
    expectFail("commutativity (x*w := 0)", verifyCommutativity(bad));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden tables Lie(Ga), Lie(Gm)", criterion1},
      {"golden tables Lie(GL(m+n|n))", criterion2},
      {"Hopf axioms", criterion3},
      {"filtrations", criterion4},
      {"Dist identities", criterion5},
      {"universality", criterion6},
      {"tangent oracle", criterion7},
      {"restricted Lie axioms", criterion8},
      {"fault injection", criterion9},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s (%.2fs)\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
