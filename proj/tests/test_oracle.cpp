#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tanglekit/bracket.hpp"
#include "tanglekit/classify.hpp"
#include "tanglekit/diagram.hpp"
#include "tanglekit/invariants.hpp"

using namespace tanglekit;
using namespace tanglekit::oracle;

namespace {

Diagram closure_of(const std::string& text) {
  return diagram_of_closure(parse_expr(text));
}

Diagram mirror_diagram(Diagram d) {
  for (auto& s : d.sign) s = -s;
  return d;
}

LaurentPoly jones_knot(const Diagram& d) {
  Analysis a = analyze(d);
  REQUIRE(a.n_comp == 1);
  return jones(d, a, Orientation(std::max(a.traced, 1), false));
}

int sigma_knot(const Diagram& d) {
  Analysis a = analyze(d);
  return signature(d, a, Orientation(std::max(a.traced, 1), false));
}

// invariants at the orientation class with the requested linking number
OrientationClass class_with_lk(const Diagram& d, int lk) {
  LinkInvariants inv = invariants_of(d);
  REQUIRE(inv.n_comp == 2);
  for (const auto& cls : inv.classes)
    if (cls.lk == lk) return cls;
  FAIL("linking number not realizable");
  return inv.classes[0];
}

}  // namespace

TEST_CASE("component counts") {
  CHECK(analyze(closure_of("6/1")).n_comp == 2);
  CHECK(analyze(closure_of("3/1")).n_comp == 1);
  CHECK(analyze(closure_of("0/1")).n_comp == 2);
  // |a| = 1 closures are unknots: one component
  CHECK(analyze(closure_of("1/0")).n_comp == 1);
  CHECK(analyze(closure_of("1/5")).n_comp == 1);
}

TEST_CASE("crossing counts match twist-region totals") {
  CHECK(closure_of("3/1").crossings() == 3);
  CHECK(closure_of("15/4").crossings() == 7);   // word (3,1,3)
  CHECK(closure_of("(-1/3 + -1/3)").crossings() == 6);
  CHECK(closure_of("(-1/3 + -1/3) o (-1,2,0)").crossings() == 9);
  CHECK(closure_of("0/1").crossings() == 0);
  CHECK_THROWS_AS(diagram_of_closure(parse_expr("99999/2")),
                  CrossingCapExceeded);
}

TEST_CASE("jones normalization on unknots") {
  CHECK(jones_knot(closure_of("1/1")) == LaurentPoly::one());
  CHECK(jones_knot(closure_of("-1/1")) == LaurentPoly::one());
  CHECK(jones_knot(closure_of("1/0")) == LaurentPoly::one());
  CHECK(jones_knot(closure_of("1/5")) == LaurentPoly::one());
}

TEST_CASE("trefoil chirality and signature calibration") {
  Diagram right = closure_of("3/1");  // three positive crossings
  Diagram left = closure_of("3/2");
  LaurentPoly jr = jones_knot(right), jl = jones_knot(left);
  CHECK(jr != jl);
  CHECK(jl == jr.mirrored());
  CHECK(jones_knot(mirror_diagram(right)) == jr.mirrored());
  // positive trefoil has signature -2
  CHECK(sigma_knot(right) == -2);
  CHECK(sigma_knot(left) == +2);
  CHECK(sigma_knot(closure_of("5/2")) == 0);  // figure eight, amphichiral
  CHECK(jones_knot(closure_of("5/2")) ==
        jones_knot(closure_of("5/2")).mirrored());
}

TEST_CASE("hopf link orientation classes") {
  Diagram hopf = closure_of("2/1");
  OrientationClass pos = class_with_lk(hopf, +1);
  OrientationClass neg = class_with_lk(hopf, -1);
  CHECK(pos.sigma == -1);
  CHECK(neg.sigma == +1);
  CHECK(pos.jones != neg.jones);
}

TEST_CASE("torus link signatures match the quoted facts") {
  // |sigma(N(2k), lk = k)| = 2|k| - 1
  for (int k = 1; k <= 5; ++k) {
    Diagram d = diagram_of_closure(
        TangleExpr::leaf(TangleFraction::integer(2 * k)));
    OrientationClass coherent = class_with_lk(d, +k);
    CHECK(std::abs(coherent.sigma) == 2 * k - 1);
    OrientationClass reverse = class_with_lk(d, -k);
    CHECK(std::abs(reverse.sigma) == 1);
  }
  // genus-one products: |sigma| in {0, 2}
  for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3},
                      {1, -1}, {2, -1}, {-2, 3}}) {
    Diagram d = diagram_of_closure(
        TangleExpr::leaf(TangleFraction(4 * m * n - 1, 2 * m)));
    int s = std::abs(sigma_knot(d));
    CHECK((s == 0 || s == 2));
  }
}

TEST_CASE("linking numbers of torus closures") {
  Diagram four = closure_of("4/1");
  CHECK(class_with_lk(four, +2).lk == 2);
  CHECK(class_with_lk(four, -2).lk == -2);
  Diagram six = closure_of("6/1");
  CHECK(class_with_lk(six, -3).lk == -3);
  // split two-component unlink links nothing
  Diagram unlink = closure_of("0/1");
  Analysis a = analyze(unlink);
  CHECK(a.n_comp == 2);
  CHECK(linking_number(unlink, a, Orientation{}) == 0);
}

TEST_CASE("twist-box word closes to its continued-fraction value") {
  // (-2m, 2n, -w, 0) at (m,n,w) = (1,1,0): value 3/2, closure N(3/2)
  TwistWord word{-2, 2, 0, 0};
  CHECK(cf_to_fraction(word) == TangleFraction(3, 2));
  ExprPtr e = TangleExpr::circle(
      TangleExpr::leaf(TangleFraction::infinity()), word);
  ClassifyResult r = classify_closure(e);
  REQUIRE(r.recognized);
  CHECK(r.link == TwoBridgeLink::from_fraction({3, 2}));
  CHECK(r.link != TwoBridgeLink::from_fraction({3, 1}));
}

TEST_CASE("determinants from the Goeritz matrix") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pd(2, 13);
  for (int i = 0; i < 60; ++i) {
    std::int64_t p = pd(rng);
    std::int64_t q = 1 + (std::int64_t)(rng() % (p - 1));
    if (std::gcd(p, q) != 1) continue;
    Diagram d = diagram_of_closure(TangleExpr::leaf(TangleFraction(p, q)));
    CHECK(link_determinant(d) == p);
  }
  CHECK(link_determinant(closure_of("1/0")) == 1);
  CHECK(link_determinant(closure_of("0/1")) == 0);
}

TEST_CASE("oracle agrees with Schubert classification on random fractions") {
  std::mt19937_64 rng(20240812);
  std::uniform_int_distribution<std::int64_t> zd(-13, 13);
  std::uniform_int_distribution<std::int64_t> vd(0, 13);
  int done = 0;
  while (done < 200) {
    std::int64_t z = zd(rng), v = vd(rng);
    if (z == 0 && v == 0) continue;
    TangleFraction f(z, v);
    if (word_crossings(fraction_to_cf(f)) > 20) continue;
    ++done;
    ClassifyResult got = classify_closure(TangleExpr::leaf(f));
    REQUIRE(got.recognized);
    CHECK(got.link == TwoBridgeLink::from_fraction(f));
  }
}

TEST_CASE("classify sums from the catenane corollaries") {
  // the 8-catenane product identity: N(-1/3 + -1/5 + -1) = N(23/4)
  ClassifyResult r = classify_closure(parse_expr("(-1/3 + -1/5 + -1)"));
  REQUIRE(r.recognized);
  CHECK(r.link == TwoBridgeLink::from_fraction({23, 4}));
  // trefoil-to-Hopf shape at w = -1: N(3 + -1) = Hopf link
  r = classify_closure(parse_expr("(3/1 + -1)"));
  REQUIRE(r.recognized);
  CHECK(r.link == TwoBridgeLink::from_fraction({2, 1}));
  // the N(4)-to-trefoil instance: N(4 + -1) = N(3)
  r = classify_closure(parse_expr("(4/1 + -1)"));
  REQUIRE(r.recognized);
  CHECK(r.link == TwoBridgeLink::from_fraction({3, 1}));
  // the m = n = 2 product identity: N(-1/3 + -1/3 + -1) = N(15/4)
  r = classify_closure(parse_expr("(-1/3 + -1/3 + -1)"));
  REQUIRE(r.recognized);
  CHECK(r.link == TwoBridgeLink::from_fraction({15, 4}));
  // and the substrate: N(-1/3 + -1/3) = N(6)
  r = classify_closure(parse_expr("(-1/3 + -1/3)"));
  REQUIRE(r.recognized);
  CHECK(r.link == TwoBridgeLink::from_fraction({6, 1}));
}

TEST_CASE("pretzel identities from the crossing-number proof") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    Diagram knot = diagram_of_closure(
        TangleExpr::leaf(TangleFraction(4 * m * n - 1, 2 * m)));
    Diagram p1 = pretzel_diagram(2 * m - 1, 2 * n - 1, 1);
    Diagram p2 = pretzel_diagram(2 * m + 1, 2 * n + 1, -1);
    LaurentPoly j = jones_knot(knot);
    CHECK(jones_knot(p1) == j);
    CHECK(jones_knot(p2) == j);
  }
}

TEST_CASE("mirror law for jones") {
  for (const char* text : {"3/1", "15/4", "(-1/3 + -1/5)", "7/2"}) {
    Diagram d = closure_of(text);
    Analysis a = analyze(d);
    Orientation o(std::max(a.traced, 1), false);
    LaurentPoly j = jones(d, a, o);
    Diagram m = mirror_diagram(d);
    Analysis am = analyze(m);
    LaurentPoly jm = jones(m, am, o);
    CHECK(jm == j.mirrored());
  }
}

TEST_CASE("mirror distinction matches jones asymmetry") {
  // whenever the oracle's Jones data changes under t -> 1/t, the Schubert
  // forms of N(z/v) and its mirror must differ
  for (std::int64_t z = 2; z <= 11; ++z)
    for (std::int64_t v = 1; v < z; ++v) {
      if (std::gcd(z, v) != 1) continue;
      Diagram d = diagram_of_closure(TangleExpr::leaf(TangleFraction(z, v)));
      LinkInvariants inv = invariants_of(d);
      std::set<std::string> plain, mirrored;
      for (const auto& cls : inv.classes) {
        plain.insert(cls.jones.to_string());
        mirrored.insert(cls.jones.mirrored().to_string());
      }
      TwoBridgeLink link = TwoBridgeLink::from_fraction(TangleFraction(z, v));
      if (plain != mirrored) CHECK(link != link.mirror());
    }
}

TEST_CASE("linking number is antisymmetric under component reversal") {
  for (const char* text : {"4/1", "6/1", "8/3", "(-1/3 + -1/3)"}) {
    Diagram d = closure_of(text);
    Analysis a = analyze(d);
    if (a.n_comp != 2 || a.traced != 2) continue;
    Orientation o1{false, false}, o2{false, true};
    CHECK(linking_number(d, a, o1) == -linking_number(d, a, o2));
  }
}

TEST_CASE("coherent orientation of N(4) against the trefoil") {
  SurgeryCheck chk = verify_surgery(
      parse_expr("4/1"), parse_expr("0/1"), parse_expr("-1"),
      TwoBridgeLink::from_fraction({4, 1}),
      TwoBridgeLink::from_fraction({3, 1}), +2, std::nullopt);
  CHECK(chk.ok);
  CHECK(chk.coherent_found);
  REQUIRE(chk.left_lk.has_value());
  CHECK(*chk.left_lk == 2);
}

TEST_CASE("murasugi bound on a solved catenane instance") {
  // U = (-1/3 + -1/3): N(U+0) = N(6) with lk -3, N(U-1) = N(15/4)
  SurgeryCheck chk = verify_surgery(
      parse_expr("(-1/3 + -1/3)"), parse_expr("0/1"), parse_expr("-1"),
      TwoBridgeLink::from_fraction({6, 1}),
      TwoBridgeLink::from_fraction({15, 4}), -3, std::nullopt);
  CHECK(chk.ok);
  REQUIRE(chk.left_sigma.has_value());
  REQUIRE(chk.right_sigma.has_value());
  CHECK(std::abs(*chk.left_sigma - *chk.right_sigma) <= 1);
}

namespace {

// Sorted multiset of per-orientation-class Jones polynomials; stable under
// component renumbering.
std::vector<std::string> jones_classes(const Diagram& d) {
  LinkInvariants inv = invariants_of(d);
  std::vector<std::string> out;
  for (const auto& cls : inv.classes) out.push_back(cls.jones.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Kink on the arc (p, q): the strand passes through the new crossing twice,
// with a little loop arc from SE back around to NE.
Diagram with_r1_kink(const Diagram& d, int p, int sign) {
  Diagram k = d;
  int q = k.match[p];
  int c = k.crossings();
  k.sign.push_back(static_cast<std::int8_t>(sign));
  k.match.resize(4 * c + 4);
  k.match[p] = 4 * c + kSlotNW;
  k.match[4 * c + kSlotNW] = p;
  k.match[4 * c + kSlotSE] = 4 * c + kSlotNE;
  k.match[4 * c + kSlotNE] = 4 * c + kSlotSE;
  k.match[q] = 4 * c + kSlotSW;
  k.match[4 * c + kSlotSW] = q;
  return k;
}

// R2 poke across the corner between slots s and ccw(s) of crossing c: the
// arc ending at a0 slides over the arc ending at b0.
constexpr int kCcw[4] = {kSlotSW, kSlotNW, kSlotSE, kSlotNE};

std::optional<Diagram> with_r2_poke(const Diagram& d, int c, int s,
                                    bool over) {
  int a0 = 4 * c + s;
  int b0 = 4 * c + kCcw[s];
  int pa = d.match[a0], pb = d.match[b0];
  if (pa == b0 || pb == a0) return std::nullopt;
  if (pa == a0 || pb == b0) return std::nullopt;
  Diagram k = d;
  int x = k.crossings(), y = x + 1;
  k.sign.push_back(static_cast<std::int8_t>(over ? -1 : +1));
  k.sign.push_back(static_cast<std::int8_t>(over ? +1 : -1));
  k.match.resize(4 * y + 4);
  auto pair = [&](int u, int v) {
    k.match[u] = v;
    k.match[v] = u;
  };
  pair(pa, 4 * x + kSlotNW);
  pair(pb, 4 * x + kSlotSW);
  pair(4 * x + kSlotNE, 4 * y + kSlotNW);
  pair(4 * x + kSlotSE, 4 * y + kSlotSW);
  pair(4 * y + kSlotNE, a0);
  pair(4 * y + kSlotSE, b0);
  return k;
}

}  // namespace

TEST_CASE("reidemeister moves preserve jones and signature") {
  std::mt19937_64 rng(99);
  for (const char* text : {"3/1", "7/2", "5/2", "(-1/3 + -1/3)", "11/4"}) {
    Diagram d = closure_of(text);
    auto j0 = jones_classes(d);
    int comp0 = analyze(d).n_comp;
    std::vector<int> sig0;
    {
      LinkInvariants inv = invariants_of(d);
      for (const auto& cls : inv.classes) sig0.push_back(cls.sigma);
      std::sort(sig0.begin(), sig0.end());
    }

    for (int rep = 0; rep < 4; ++rep) {
      Diagram k = with_r1_kink(d, (int)(rng() % d.ports()),
                               rng() % 2 ? 1 : -1);
      CHECK(analyze(k).n_comp == comp0);
      CHECK(jones_classes(k) == j0);
    }

    int pokes = 0;
    for (int tries = 0; tries < 40 && pokes < 3; ++tries) {
      int c = (int)(rng() % d.crossings());
      int s = (int)(rng() % 4);
      auto k = with_r2_poke(d, c, s, rng() % 2);
      if (!k) continue;
      ++pokes;
      CHECK(analyze(*k).n_comp == comp0);
      CHECK(jones_classes(*k) == j0);
      LinkInvariants inv = invariants_of(*k);
      std::vector<int> sig;
      for (const auto& cls : inv.classes) sig.push_back(cls.sigma);
      std::sort(sig.begin(), sig.end());
      CHECK(sig == sig0);
    }
    CHECK(pokes > 0);
  }
}
