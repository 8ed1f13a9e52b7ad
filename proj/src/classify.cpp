#include "tanglekit/classify.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace tanglekit::oracle {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return ((t % m) + m) % m;
}

Orientation class_flips(const Analysis& a, int which) {
  Orientation o(std::max(a.traced, 1), false);
  if (which == 1 && a.traced >= 2) o[1] = true;
  return o;
}

bool classes_match(const LinkInvariants& x, const LinkInvariants& y) {
  if (x.n_comp != y.n_comp || x.classes.size() != y.classes.size())
    return false;
  auto tuple_of = [](const OrientationClass& c) {
    return std::make_tuple(c.jones.terms(), c.sigma, c.lk);
  };
  if (x.classes.size() == 1)
    return tuple_of(x.classes[0]) == tuple_of(y.classes[0]);
  auto x0 = tuple_of(x.classes[0]), x1 = tuple_of(x.classes[1]);
  auto y0 = tuple_of(y.classes[0]), y1 = tuple_of(y.classes[1]);
  return (x0 == y0 && x1 == y1) || (x0 == y1 && x1 == y0);
}

}  // namespace

LinkInvariants invariants_of(const Diagram& d) {
  LinkInvariants inv;
  Analysis a = analyze(d);
  inv.n_comp = a.n_comp;
  inv.det = link_determinant(d);
  inv.bracket = kauffman_bracket(d);
  if (inv.n_comp > 2) return inv;
  int n_classes = (inv.n_comp == 2 && a.traced == 2) ? 2 : 1;
  for (int i = 0; i < n_classes; ++i) {
    OrientationClass oc;
    oc.flips = class_flips(a, i);
    if (d.crossings() > 0) {
      oc.writhe = writhe(d, a, oc.flips);
      oc.sigma = signature(d, a, oc.flips);
      if (inv.n_comp == 2) oc.lk = linking_number(d, a, oc.flips);
    }
    oc.jones = jones_from_bracket(inv.bracket, oc.writhe);
    inv.classes.push_back(std::move(oc));
  }
  // split two-component diagrams have one relative-orientation class; pad so
  // class matching compares like with like
  if (inv.n_comp == 2 && inv.classes.size() == 1)
    inv.classes.push_back(inv.classes[0]);
  return inv;
}

const LinkInvariants& candidate_invariants(std::int64_t p, std::int64_t q) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, LinkInvariants> cache;
  auto key = std::make_pair(p, q);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TangleFraction f = p == 0 ? TangleFraction(0, 1)
                            : (p == 1 ? TangleFraction::infinity()
                                      : TangleFraction(p, q));
  Diagram d = diagram_of_closure(TangleExpr::leaf(f),
                                 /*crossing_cap=*/p > 0 ? int(p) + 1 : 1);
  LinkInvariants inv = invariants_of(d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(inv)).first->second;
}

std::string ClassifyResult::to_string() const {
  if (!recognized) return "unrecognized (" + reason + ")";
  std::string s = link.to_string();
  if (auto name = lookup_name(link)) s += " = " + name->to_string();
  return s;
}

ClassifyResult classify_diagram(const Diagram& d) {
  ClassifyResult out;
  LinkInvariants inv = invariants_of(d);
  if (inv.n_comp > 2) {
    out.reason = "more than two components";
    return out;
  }
  if (inv.det == 0) {
    if (inv.n_comp == 2 && classes_match(inv, candidate_invariants(0, 1))) {
      out.recognized = true;
      out.link = TwoBridgeLink::unlink();
      return out;
    }
    out.reason = "determinant 0 but not the two-component unlink";
    return out;
  }
  if (inv.det == 1) {
    if (inv.n_comp == 1 && classes_match(inv, candidate_invariants(1, 0))) {
      out.recognized = true;
      out.link = TwoBridgeLink::unknot();
      return out;
    }
    out.reason = "determinant 1 but not the unknot";
    return out;
  }
  // Candidates share the diagram's determinant; a candidate whose reduced
  // alternating diagram needs more crossings than this diagram has cannot
  // match (crossing number is a lower bound over all diagrams).
  std::vector<TwoBridgeLink> matches;
  const std::int64_t p = inv.det;
  for (std::int64_t q = 1; q < p; ++q) {
    if (std::gcd(p, q) != 1) continue;
    if (mod_inverse(q, p) < q) continue;  // one representative per class
    if (word_crossings(fraction_to_cf(TangleFraction(p, q))) > d.crossings())
      continue;
    if (classes_match(inv, candidate_invariants(p, q)))
      matches.push_back(TwoBridgeLink::two_bridge(p, q));
  }
  if (matches.size() == 1) {
    out.recognized = true;
    out.link = matches[0];
  } else if (matches.empty()) {
    out.reason = "no two-bridge candidate matches";
  } else {
    out.reason = "ambiguous: several candidates match";
  }
  return out;
}

ClassifyResult classify_closure(const ExprPtr& e, int crossing_cap) {
  return classify_diagram(diagram_of_closure(e, crossing_cap));
}

SurgeryCheck verify_surgery(const ExprPtr& u, const ExprPtr& p,
                            const ExprPtr& r,
                            const TwoBridgeLink& expected_left,
                            const TwoBridgeLink& expected_right,
                            std::optional<int> expected_left_lk,
                            std::optional<int> expected_right_lk,
                            int crossing_cap) {
  SurgeryCheck out;
  ClosurePair pair;
  try {
    pair = closure_pair(u, p, r, crossing_cap);
  } catch (const CrossingCapExceeded&) {
    out.cap_exceeded = true;
    out.detail = "crossing cap exceeded";
    return out;
  }
  out.left = classify_diagram(pair.with_p);
  out.right = classify_diagram(pair.with_r);

  Analysis al = analyze(pair.with_p);
  Analysis ar = analyze(pair.with_r);

  // Enumerate orientations of both closures; keep pairs that agree on every
  // strand pass through the shared crossings.
  auto pass_dirs = [&](const Diagram&, const Analysis& a,
                       const Orientation& o) {
    std::vector<std::int8_t> dirs(2 * pair.shared);
    for (int c = 0; c < pair.shared; ++c)
      for (int diag = 0; diag < 2; ++diag) {
        int exit = a.fwd_exit[diag][c];
        if (o[a.pass_comp[diag][c]]) exit = 3 - exit;
        dirs[2 * c + diag] = static_cast<std::int8_t>(exit);
      }
    return dirs;
  };
  std::vector<std::pair<Orientation, Orientation>> coherent;
  for (int mask_l = 0; mask_l < (1 << al.traced); ++mask_l) {
    Orientation ol(al.traced);
    for (int i = 0; i < al.traced; ++i) ol[i] = (mask_l >> i) & 1;
    auto dl = pass_dirs(pair.with_p, al, ol);
    for (int mask_r = 0; mask_r < (1 << ar.traced); ++mask_r) {
      Orientation orr(ar.traced);
      for (int i = 0; i < ar.traced; ++i) orr[i] = (mask_r >> i) & 1;
      if (dl == pass_dirs(pair.with_r, ar, orr)) coherent.push_back({ol, orr});
    }
  }
  out.coherent_found = !coherent.empty();
  if (out.coherent_found) {
    const auto& [ol, orr] = coherent.front();
    if (al.n_comp == 2 && al.traced == 2)
      out.left_lk = linking_number(pair.with_p, al, ol);
    if (ar.n_comp == 2 && ar.traced == 2)
      out.right_lk = linking_number(pair.with_r, ar, orr);
    if (pair.with_p.crossings() > 0)
      out.left_sigma = signature(pair.with_p, al, ol);
    if (pair.with_r.crossings() > 0)
      out.right_sigma = signature(pair.with_r, ar, orr);
    // all coherent pairs must agree on linking numbers
    for (const auto& [o1, o2] : coherent) {
      if (out.left_lk && linking_number(pair.with_p, al, o1) != *out.left_lk)
        out.detail = "ambiguous coherent linking number (left); ";
      if (out.right_lk && linking_number(pair.with_r, ar, o2) != *out.right_lk)
        out.detail += "ambiguous coherent linking number (right); ";
    }
  }

  bool ok = out.left.recognized && out.right.recognized &&
            out.left.link == expected_left && out.right.link == expected_right;
  if (!ok)
    out.detail += "closure mismatch: got " + out.left.to_string() + " / " +
                  out.right.to_string();
  if (expected_left_lk) {
    if (!out.left_lk || *out.left_lk != *expected_left_lk) {
      ok = false;
      out.detail += "; left lk mismatch";
    }
  }
  if (expected_right_lk) {
    if (!out.right_lk || *out.right_lk != *expected_right_lk) {
      ok = false;
      out.detail += "; right lk mismatch";
    }
  }
  out.ok = ok;
  return out;
}

}  // namespace tanglekit::oracle
