#include "tanglekit/band_solver.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tanglekit::solver {

namespace {

ExprPtr make_case_solution(std::int64_t a1, std::int64_t a2, TwistWord word) {
  ExprPtr sum = TangleExpr::sum({TangleExpr::leaf(TangleFraction(-1, a1)),
                                 TangleExpr::leaf(TangleFraction(-1, a2))});
  bool identity = true;
  for (auto c : word) identity &= (c == 0);
  return identity ? sum : TangleExpr::circle(sum, std::move(word));
}

BandSolution solution_from_expr(int case_id, const std::string& label,
                                bool swapped, bool symmetric, ExprPtr u) {
  BandSolution s;
  s.case_id = case_id;
  s.case_label = label;
  s.swapped = swapped;
  s.symmetric_dup = symmetric;
  s.U_value = rational_value(u);
  s.U = std::move(u);
  return s;
}

}  // namespace

BandSolveResult band_solve_coherent(std::int64_t m, std::int64_t n,
                                 std::int64_t w,
                                 const OrientedTorusLink2& target) {
  if (m == 0 || n == 0)
    throw std::domain_error(
        "mn = 0 (unknot substrate) is out of scope for this solver");
  if (std::llabs(target.lk) != std::llabs(target.k))
    throw std::domain_error("torus link N(2k) has linking number +-k");

  BandSolveResult out;
  out.substrate = TangleFraction(4 * m * n - 1, 2 * m);

  std::int64_t k = target.k;
  if (target.lk == k && k != 0) {
    // N(2) = N(-2): the Hopf link (and the unlink) admit both orientations.
    if (std::llabs(k) <= 1) {
      k = -k;
    } else if (std::llabs(k) == 2) {
      out.outcome = BandOutcome::Unknown;
      out.reason = "lk = +k with |k| = 2 is open";
      return out;
    } else {
      out.outcome = BandOutcome::Obstructed;
      out.reason = "signature";
      return out;
    }
  }

  out.outcome = BandOutcome::Solutions;
  const std::int64_t D = 4 * m * n - 1;
  if (k == m)
    out.solutions.push_back(solution_from_expr(
        1, "k=m", false, false,
        TangleExpr::leaf(TangleFraction(D, -w * D + 2 * m))));
  if (k == n)
    out.solutions.push_back(solution_from_expr(
        2, "k=n", false, false,
        TangleExpr::leaf(TangleFraction(D, -w * D + 2 * n))));
  if (k == m + n + 1) {
    out.solutions.push_back(solution_from_expr(
        3, "k=m+n+1", false, m == n,
        make_case_solution(2 * m + 1, 2 * n + 1, {1, -(w + 1), 0})));
    if (m != n)
      out.solutions.push_back(solution_from_expr(
          3, "k=m+n+1", true, false,
          make_case_solution(2 * n + 1, 2 * m + 1, {1, -(w + 1), 0})));
  }
  if (k == m + n - 1) {
    out.solutions.push_back(solution_from_expr(
        4, "k=m+n-1", false, m == n,
        make_case_solution(2 * m - 1, 2 * n - 1, {-1, -(w - 1), 0})));
    if (m != n)
      out.solutions.push_back(solution_from_expr(
          4, "k=m+n-1", true, false,
          make_case_solution(2 * n - 1, 2 * m - 1, {-1, -(w - 1), 0})));
  }
  if (out.solutions.empty())
    out.reason = "k matches none of m, n, m+n+1, m+n-1";
  return out;
}

std::int64_t crossing_number_genus1(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0) throw std::domain_error("m and n must be nonzero");
  std::int64_t size = std::llabs(m) + std::llabs(n);
  return m * n > 0 ? 2 * size - 1 : 2 * size;
}

std::vector<XerFamily> solve_2k_to_2k1(std::int64_t k, std::int64_t w) {
  if (k < 1) throw std::domain_error("k >= 1 required");
  std::vector<XerFamily> out;
  TwistWord word{-w - 1, 0};
  auto add = [&](std::int64_t m, std::int64_t n) {
    XerFamily fam;
    fam.m = m;
    fam.n = n;
    fam.symmetric_dup = (m == n);
    ExprPtr u = make_case_solution(2 * m - 1, 2 * n - 1, word);
    fam.U_value = rational_value(u);
    fam.U = std::move(u);
    fam.product = TangleFraction(4 * m * n - 1, 2 * m);
    fam.product_link = TwoBridgeLink::from_fraction(fam.product);
    fam.product_name = lookup_name(fam.product_link);
    out.push_back(std::move(fam));
  };
  for (std::int64_t m = 1; m <= k; ++m) add(m, k + 1 - m);
  for (std::int64_t m = -1; m >= -k; --m) add(m, -k - 1 - m);
  return out;
}

TangleFraction solve_trefoil_hopf(std::int64_t w) {
  return TangleFraction(3, -3 * w - 2);
}

}  // namespace tanglekit::solver
