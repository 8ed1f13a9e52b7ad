#include "tanglekit/diagram.hpp"

#include <cstdlib>

namespace tanglekit::oracle {

namespace {

constexpr std::int64_t kUnpaired = INT64_MIN;

// Strand endpoints: non-negative values are crossing ports, negative values
// are virtual boundary markers -(v+1).  Virtual markers are always paired;
// ports are unpaired until an arc reaches them.
class Builder {
 public:
  explicit Builder(int cap) : cap_(cap) {}

  struct Corners {
    std::int64_t nw, ne, sw, se;
  };

  Corners build(const ExprPtr& e) {
    switch (e->kind) {
      case TangleExpr::Kind::Leaf:
        return build_word(base_corners(e->value), fraction_to_cf(e->value));
      case TangleExpr::Kind::Circle:
        return build_word(build(e->child), e->word);
      case TangleExpr::Kind::Sum: {
        Corners acc = build(e->terms[0]);
        for (std::size_t i = 1; i < e->terms.size(); ++i)
          acc = join_sum(acc, build(e->terms[i]));
        return acc;
      }
    }
    throw std::logic_error("unreachable");
  }

  void close(const Corners& c) {
    splice(c.nw, c.ne);
    splice(c.sw, c.se);
  }

  int crossings() const { return static_cast<int>(signs_.size()); }

  Corners join_sum(const Corners& left, const Corners& right) {
    splice(left.ne, right.nw);
    splice(left.se, right.sw);
    return Corners{left.nw, right.ne, left.sw, right.se};
  }

  Diagram finish() {
    Diagram d;
    d.sign = signs_;
    d.free_loops = free_loops_;
    d.match.resize(port_partner_.size());
    for (std::size_t p = 0; p < port_partner_.size(); ++p) {
      std::int64_t m = port_partner_[p];
      if (m < 0) throw std::logic_error("dangling port after closure");
      d.match[p] = static_cast<std::int32_t>(m);
    }
    return d;
  }

 private:
  std::int64_t new_virtual() {
    virt_partner_.push_back(kUnpaired);
    return -static_cast<std::int64_t>(virt_partner_.size());
  }

  std::int64_t& partner(std::int64_t e) {
    return e >= 0 ? port_partner_[static_cast<std::size_t>(e)]
                  : virt_partner_[static_cast<std::size_t>(-e - 1)];
  }

  void pair(std::int64_t a, std::int64_t b) {
    partner(a) = b;
    partner(b) = a;
  }

  // Joins the strand ends at the boundary points e1 and e2.  Joining the two
  // ends of a single arc closes a free loop.
  void splice(std::int64_t e1, std::int64_t e2) {
    if (e1 >= 0 && e2 >= 0) {
      pair(e1, e2);
      return;
    }
    if (e1 >= 0) {
      pair(e1, partner(e2));
      return;
    }
    if (e2 >= 0) {
      pair(partner(e1), e2);
      return;
    }
    std::int64_t a = partner(e1);
    if (a == e2) {
      ++free_loops_;
      return;
    }
    pair(a, partner(e2));
  }

  int add_crossing(int sign_of_entry) {
    if (crossings() >= cap_)
      throw CrossingCapExceeded("crossing cap " + std::to_string(cap_) +
                                " exceeded");
    signs_.push_back(static_cast<std::int8_t>(sign_of_entry > 0 ? 1 : -1));
    port_partner_.insert(port_partner_.end(), 4, kUnpaired);
    return crossings() - 1;
  }

  std::int64_t port(int crossing, int slot) const { return 4 * crossing + slot; }

  void twist_right(Corners& c, int s) {
    int x = add_crossing(s);
    splice(c.ne, port(x, kSlotNW));
    splice(c.se, port(x, kSlotSW));
    c.ne = port(x, kSlotNE);
    c.se = port(x, kSlotSE);
  }

  void twist_bottom(Corners& c, int s) {
    int x = add_crossing(s);
    splice(c.sw, port(x, kSlotNW));
    splice(c.se, port(x, kSlotNE));
    c.sw = port(x, kSlotSW);
    c.se = port(x, kSlotSE);
  }

  Corners make_zero() {
    Corners c{new_virtual(), new_virtual(), new_virtual(), new_virtual()};
    pair(c.nw, c.ne);
    pair(c.sw, c.se);
    return c;
  }

  Corners make_inf() {
    Corners c{new_virtual(), new_virtual(), new_virtual(), new_virtual()};
    pair(c.nw, c.sw);
    pair(c.ne, c.se);
    return c;
  }

  Corners base_corners(const TangleFraction& f) {
    return fraction_to_cf(f).size() % 2 == 0 ? make_inf() : make_zero();
  }

  Corners build_word(Corners c, const TwistWord& word) {
    const std::size_t n = word.size();
    for (std::size_t i = 1; i <= n; ++i) {
      std::int64_t entry = word[i - 1];
      int s = entry > 0 ? 1 : -1;
      for (std::int64_t r = 0; r < std::llabs(entry); ++r) {
        if (axis_of_entry(i, n) == TwistAxis::Horizontal)
          twist_right(c, s);
        else
          twist_bottom(c, s);
      }
    }
    return c;
  }

  int cap_;
  std::vector<std::int8_t> signs_;
  std::vector<std::int64_t> port_partner_;
  std::vector<std::int64_t> virt_partner_;
  int free_loops_ = 0;
};

int cap_or_default(int cap) { return cap > 0 ? cap : default_crossing_cap(); }

}  // namespace

int default_crossing_cap() {
  static int cap = [] {
    if (const char* env = std::getenv("TANGLEKIT_CROSSING_CAP")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 24;
  }();
  return cap;
}

Diagram diagram_of_closure(const ExprPtr& e, int crossing_cap) {
  Builder b(cap_or_default(crossing_cap));
  b.close(b.build(e));
  return b.finish();
}

Diagram pretzel_diagram(std::int64_t p1, std::int64_t p2, std::int64_t p3,
                        int crossing_cap) {
  auto leaf = [](std::int64_t p) {
    return TangleExpr::leaf(TangleFraction(-1, p));
  };
  return diagram_of_closure(
      TangleExpr::sum({leaf(p1), leaf(p2), leaf(p3)}), crossing_cap);
}

ClosurePair closure_pair(const ExprPtr& u, const ExprPtr& p, const ExprPtr& r,
                         int crossing_cap) {
  Builder base(cap_or_default(crossing_cap));
  Builder::Corners cu = base.build(u);
  ClosurePair out;
  out.shared = base.crossings();

  Builder bp = base;
  bp.close(bp.join_sum(cu, bp.build(p)));
  out.with_p = bp.finish();

  Builder br = base;
  br.close(br.join_sum(cu, br.build(r)));
  out.with_r = br.finish();
  return out;
}

std::string Diagram::export_crossing_list() const {
  std::string out;
  for (int c = 0; c < crossings(); ++c) {
    out += std::to_string(c);
    for (int s = 0; s < 4; ++s) {
      out += ' ';
      out += std::to_string(match[4 * c + s]);
    }
    out += ' ';
    out += sign[c] > 0 ? "+1" : "-1";
    out += '\n';
  }
  return out;
}

}  // namespace tanglekit::oracle
