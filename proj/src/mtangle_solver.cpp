#include "tanglekit/mtangle_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tanglekit::solver {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, m);
}

// Bezout x,y with b*x - a*y = 1 (gcd(a,b) = 1).
void bezout(std::int64_t b, std::int64_t a, std::int64_t& x, std::int64_t& y) {
  // extended euclid on (b, a)
  std::int64_t old_r = b, r = a, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  // old_r = +-1 = b*old_s + a*old_t
  if (old_r == 1) {
    x = old_s;
    y = -old_t;
  } else {
    x = -old_s;
    y = old_t;
  }
}

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
  n = std::llabs(n);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GenMSolution> solve_generalized_M(const TangleFraction& ab,
                                              const TangleFraction& tw,
                                              const TangleFraction& zv) {
  const std::int64_t a = ab.num(), b = ab.den();
  const std::int64_t t = tw.num(), w = tw.den();
  const std::int64_t z = zv.num();
  if (std::llabs(t) <= 1)
    throw std::domain_error("|t| > 1 required (generalized M-tangle scope)");
  if (a == 0 || z == 0)
    throw std::domain_error("substrate and product must not be the unlink");

  const TwoBridgeLink target = TwoBridgeLink::from_fraction(zv);
  const std::int64_t at = std::llabs(t);
  std::vector<GenMSolution> out;

  if (mod(w, at) != 1 && mod(w, at) != at - 1) {
    // case (a): |t b' + w a| = |z| pins at most two integer candidates
    for (std::int64_t sg : {+1, -1}) {
      std::int64_t num = sg * z - w * a;
      if (num % t != 0) continue;
      std::int64_t bp = num / t;
      bool residue_ok =
          std::llabs(a) >= 1 &&
          (mod(bp - b, std::llabs(a)) == 0 ||
           mod(bp * b, std::llabs(a)) == mod(1, std::llabs(a)));
      if (!residue_ok) continue;
      if (std::gcd(std::llabs(bp), std::llabs(a)) != 1) continue;
      std::int64_t x, y;
      bezout(bp, a, x, y);  // bp*x - a*y = 1
      TangleFraction closure(t * bp + w * a, t * y + w * x);
      if (!(TwoBridgeLink::from_fraction(closure) == target)) continue;
      GenMSolution sol;
      sol.case_tag = 'a';
      sol.b_prime = bp;
      sol.U = TangleExpr::leaf(TangleFraction(a, bp));
      sol.U_value = rational_value(sol.U);
      out.push_back(std::move(sol));
    }
    return out;
  }

  // case (b): w = h t + eps
  const std::int64_t eps = mod(w, at) == 1 ? 1 : -1;
  const std::int64_t h = (w - eps) / t;
  std::set<std::string> seen;
  for (std::int64_t sg : {+1, -1}) {
    std::int64_t M = sg * z - eps * a;
    if (M == 0 || M % t != 0) continue;
    std::int64_t Mt = M / t;
    for (std::int64_t p : positive_divisors(Mt)) {
      if (Mt % p != 0) continue;
      std::int64_t x = Mt / p;  // x = p b - q a
      if (x == 0) continue;
      if ((p * b - x) % a != 0) continue;
      std::int64_t q = (p * b - x) / a;
      if (std::gcd(p, std::llabs(q)) != 1) continue;
      // closure check: N((t p x + eps a)/(t q x + eps b)) = N(z/v)
      TangleFraction closure(t * p * x + eps * a, t * q * x + eps * b);
      if (!(TwoBridgeLink::from_fraction(closure) == target)) continue;
      std::int64_t d, j;
      bezout(p, q, d, j);  // p*d - q*j = 1
      TangleFraction f1(d * a - j * p, x);
      TangleFraction f2(j, p);
      for (int swapped = 0; swapped < 2; ++swapped) {
        ExprPtr sum = swapped ? TangleExpr::sum({TangleExpr::leaf(f2),
                                                 TangleExpr::leaf(f1)})
                              : TangleExpr::sum({TangleExpr::leaf(f1),
                                                 TangleExpr::leaf(f2)});
        ExprPtr u = h == 0 ? sum : TangleExpr::circle(sum, {h, 0});
        std::string key = to_string(u);
        if (!seen.insert(key).second) continue;
        GenMSolution sol;
        sol.case_tag = 'b';
        sol.sigma = sg;
        sol.eps = eps;
        sol.p = p;
        sol.q = q;
        sol.x = x;
        sol.d = d;
        sol.j = j;
        sol.h = h;
        sol.swapped = swapped;
        sol.U_value = rational_value(u);
        sol.U = std::move(u);
        out.push_back(std::move(sol));
      }
    }
  }
  return out;
}

std::vector<NonBandInstance> NonBandFamily::instances(std::int64_t h_lo,
                                                      std::int64_t h_hi) const {
  std::vector<NonBandInstance> out;
  const std::int64_t z = zv.num();
  for (std::int64_t vp : residues)
    for (std::int64_t h = h_lo; h <= h_hi; ++h) {
      NonBandInstance inst;
      inst.v_prime = vp;
      inst.h = h;
      std::int64_t tnum = z - 2 * k * vp;
      inst.tw = TangleFraction(tnum, vp - tnum * h);
      inst.U = TangleFraction(2 * k, 2 * k * h + 1);
      out.push_back(inst);
    }
  return out;
}

NonBandFamily solve_nonband_family(std::int64_t k, const TangleFraction& zv) {
  const std::int64_t z = zv.num(), v = zv.den();
  if (z % 2 == 0)
    throw std::domain_error("product must be a knot (odd numerator)");
  if (z <= 0) throw std::domain_error("normalized z > 0 expected");
  NonBandFamily fam;
  fam.k = k;
  fam.zv = zv;
  std::set<std::int64_t> rs;
  std::int64_t vi = mod_inverse(v, z);
  for (std::int64_t r : {mod(v, z), vi, mod(-v, z), mod(-vi, z)}) rs.insert(r);
  fam.residues.assign(rs.begin(), rs.end());
  const std::string zs = std::to_string(z), ks = std::to_string(2 * k);
  fam.tw_form =
      "t/w = (" + zs + "-" + ks + "v')/(v'-(" + zs + "-" + ks + "v')h)";
  fam.u_form = "U = " + ks + "/(" + ks + "h+1)";
  return fam;
}

std::vector<PsiSolution> psi_move_solve(std::int64_t k,
                                        const TangleFraction& zv) {
  // (-1/3,-4/3) is equivalent to the (0, 9/w) moves with w = 5 (mod 9); the
  // translated system is N(U0+0) = N(2k), N(U0+9/5) = N(z/v) and
  // U = U0 o (1,2,0).  t = z - 2k v' = +-9 pins at most two candidates.
  const std::int64_t z = zv.num();
  std::vector<PsiSolution> out;
  NonBandFamily fam = solve_nonband_family(k, zv);
  for (std::int64_t tsign : {+1, -1}) {
    std::int64_t t = 9 * tsign;
    if ((z - t) % (2 * k) != 0) continue;
    std::int64_t vp = (z - t) / (2 * k);
    if (std::find(fam.residues.begin(), fam.residues.end(), mod(vp, z)) ==
        fam.residues.end())
      continue;
    // w = v' - t h must equal +-5 with w = 5 (mod 9) after sign folding
    std::int64_t target_w = tsign > 0 ? 5 : -5;
    if ((vp - target_w) % t != 0) continue;
    std::int64_t h = (vp - target_w) / t;
    PsiSolution sol;
    sol.v_prime = vp;
    sol.h = h;
    sol.U_zero = TangleFraction(2 * k, 2 * k * h + 1);
    sol.U_psi = circle_product_fraction(sol.U_zero, {1, 2, 0});
    out.push_back(sol);
  }
  return out;
}

std::vector<DivisorScanHit> scan_nonrational_genM(std::int64_t k,
                                                  const TangleFraction& zv) {
  const std::int64_t z = zv.num();
  const std::int64_t a = 2 * k, b = 1;
  const TwoBridgeLink target = TwoBridgeLink::from_fraction(zv);
  std::vector<DivisorScanHit> out;
  for (std::int64_t sg : {+1, -1})
    for (std::int64_t eps : {+1, -1}) {
      std::int64_t M = sg * z - eps * a;
      if (M == 0) continue;
      for (std::int64_t t : positive_divisors(M)) {
        if (t <= 1) continue;
        for (std::int64_t tsign : {+1, -1}) {
          std::int64_t Mt = M / (t * tsign);
          for (std::int64_t p : positive_divisors(Mt)) {
            if (p <= 1) continue;
            std::int64_t x = Mt / p;
            if (std::llabs(x) <= 1) continue;  // rational U otherwise
            if ((p * b - x) % a != 0) continue;
            std::int64_t q = (p * b - x) / a;
            if (std::gcd(p, std::llabs(q)) != 1) continue;
            DivisorScanHit hit;
            hit.sigma = sg;
            hit.eps = eps;
            hit.t = t * tsign;
            hit.p = p;
            hit.x = x;
            hit.q = q;
            TangleFraction closure(t * tsign * p * x + eps * a,
                                   t * tsign * q * x + eps * b);
            hit.closure_match =
                TwoBridgeLink::from_fraction(closure) == target;
            out.push_back(hit);
          }
        }
      }
    }
  return out;
}

}  // namespace tanglekit::solver
