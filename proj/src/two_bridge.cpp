#include "tanglekit/two_bridge.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace tanglekit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  // m >= 2, gcd(a, m) = 1
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, m);
}

}  // namespace

TwoBridgeLink TwoBridgeLink::from_fraction(const TangleFraction& f) {
  std::int64_t a = f.num(), b = f.den();
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (a == 0) return unlink();
  if (a == 1) return unknot();
  return TwoBridgeLink(LinkKind::TwoBridge, a, mod(b, a));
}

TwoBridgeLink TwoBridgeLink::two_bridge(std::int64_t p, std::int64_t q) {
  if (p == 0) return unlink();
  if (p < 0) throw std::domain_error("b(p,q) needs p >= 0");
  if (p == 1) return unknot();
  q = mod(q, p);
  if (std::gcd(p, q) != 1) throw std::domain_error("b(p,q) needs gcd(p,q)=1");
  return TwoBridgeLink(LinkKind::TwoBridge, p, q);
}

TwoBridgeLink TwoBridgeLink::mirror() const {
  if (kind_ != LinkKind::TwoBridge) return *this;
  return TwoBridgeLink(LinkKind::TwoBridge, p_, mod(-q_, p_));
}

bool TwoBridgeLink::operator==(const TwoBridgeLink& o) const {
  if (kind_ != o.kind_ || p_ != o.p_) return false;
  if (kind_ != LinkKind::TwoBridge) return true;
  return o.q_ == q_ || mod(q_ * o.q_, p_) == 1;
}

std::string TwoBridgeLink::to_string() const {
  if (kind_ == LinkKind::Unknot) return "unknot";
  if (kind_ == LinkKind::TwoComponentUnlink) return "unlink";
  std::int64_t qi = mod_inverse(q_, p_);
  return "b(" + std::to_string(p_) + "," + std::to_string(std::min(q_, qi)) +
         ")";
}

TangleFraction TwoBridgeLink::fraction() const {
  if (kind_ == LinkKind::Unknot) return TangleFraction::infinity();
  if (kind_ == LinkKind::TwoComponentUnlink) return TangleFraction(0, 1);
  return TangleFraction(p_, q_);
}

bool two_bridge_equal(const TwoBridgeLink& a, const TwoBridgeLink& b) {
  return a == b;
}

namespace {

struct NameEntry {
  const char* label;
  std::int64_t p, q;  // the plain (un-mirrored) class N(+p/q)
};

// Fixed name/fraction table; closed by design.
constexpr std::array<NameEntry, 11> kNameTable{{
    {"hopf", 2, 1},
    {"trefoil", 3, 1},
    {"fig8", 5, 2},
    {"5_2", 7, 2},
    {"7_2", 11, 2},
    {"7_4", 15, 4},
    {"9_2", 15, 2},
    {"9_5", 23, 4},
    {"11a247", 19, 2},
    {"11a343", 31, 4},
    {"11a363", 35, 6},
}};

}  // namespace

std::optional<KnotName> lookup_name(const TwoBridgeLink& link) {
  if (link.kind() != LinkKind::TwoBridge) return std::nullopt;
  for (const auto& e : kNameTable) {
    TwoBridgeLink plain = TwoBridgeLink::two_bridge(e.p, e.q);
    if (link == plain) return KnotName{e.label, false};
    if (link == plain.mirror()) return KnotName{e.label, true};
  }
  if (link.p() % 2 == 0) {
    TwoBridgeLink plain = TwoBridgeLink::two_bridge(link.p(), 1);
    std::string label = "T(2," + std::to_string(link.p()) + ")";
    if (link == plain) return KnotName{label, false};
    if (link == plain.mirror()) return KnotName{label, true};
  }
  return std::nullopt;
}

std::optional<TwoBridgeLink> link_by_name(const std::string& name) {
  bool mirrored = !name.empty() && name.back() == '*';
  std::string base = mirrored ? name.substr(0, name.size() - 1) : name;
  if (base == "unknot") return TwoBridgeLink::unknot();
  if (base == "unlink") return TwoBridgeLink::unlink();
  for (const auto& e : kNameTable) {
    if (base == e.label) {
      TwoBridgeLink link = TwoBridgeLink::two_bridge(e.p, e.q);
      return mirrored ? link.mirror() : link;
    }
  }
  if (base.rfind("T(2,", 0) == 0 && base.back() == ')') {
    std::int64_t n = std::stoll(base.substr(4, base.size() - 5));
    if (n % 2 != 0) return std::nullopt;
    return TwoBridgeLink::from_fraction(TangleFraction::integer(n));
  }
  return std::nullopt;
}

TwoBridgeLink parse_link(const std::string& text) {
  if (auto byname = link_by_name(text)) return *byname;
  if (text.rfind("b(", 0) == 0 && text.back() == ')') {
    auto comma = text.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad link spec: " + text);
    std::int64_t p = std::stoll(text.substr(2, comma - 2));
    std::int64_t q = std::stoll(text.substr(comma + 1, text.size() - comma - 2));
    return TwoBridgeLink::two_bridge(p, q);
  }
  return TwoBridgeLink::from_fraction(parse_fraction(text));
}

}  // namespace tanglekit
