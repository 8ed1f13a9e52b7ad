#pragma once

// Schubert classification of numerator closures N(a/b).  Sign folds as
// N(-z/v) = N(z/-v), then q is reduced mod p into [0,p).  Equality is the
// chirality-sensitive rule q' = q^{+-1} (mod p).

#include <cstdint>
#include <optional>
#include <string>

#include "tanglekit/fraction.hpp"

namespace tanglekit {

enum class LinkKind { TwoBridge, Unknot, TwoComponentUnlink };

class TwoBridgeLink {
 public:
  // closure_of_rational: classifies N(f).
  static TwoBridgeLink from_fraction(const TangleFraction& f);
  static TwoBridgeLink unknot() { return TwoBridgeLink(LinkKind::Unknot, 1, 0); }
  static TwoBridgeLink unlink() {
    return TwoBridgeLink(LinkKind::TwoComponentUnlink, 0, 1);
  }
  static TwoBridgeLink two_bridge(std::int64_t p, std::int64_t q);

  LinkKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  int components() const {
    if (kind_ == LinkKind::TwoComponentUnlink) return 2;
    if (kind_ == LinkKind::Unknot) return 1;
    return p_ % 2 == 0 ? 2 : 1;
  }

  TwoBridgeLink mirror() const;

  // q' = q^{+-1} (mod p); mirrors are distinct unless amphichiral.
  bool operator==(const TwoBridgeLink& o) const;
  bool operator!=(const TwoBridgeLink& o) const { return !(*this == o); }

  // b(p,q) with q the smaller of its inverse pair; "unknot"/"unlink" for the
  // degenerate kinds.
  std::string to_string() const;

  // A fraction whose closure is this link (p/q; unknot -> 1/0, unlink -> 0/1).
  TangleFraction fraction() const;

 private:
  TwoBridgeLink(LinkKind k, std::int64_t p, std::int64_t q)
      : kind_(k), p_(p), q_(q) {}

  LinkKind kind_;
  std::int64_t p_;
  std::int64_t q_;
};

bool two_bridge_equal(const TwoBridgeLink& a, const TwoBridgeLink& b);

// Parses "b(p,q)", "unknot", "unlink", or a fraction "p/q".
TwoBridgeLink parse_link(const std::string& text);

// Fixed knot-name table, chirality annotated with a '*' suffix
// for the N(-z/v) class.  Torus links print as T(2,2k) / T(2,-2k).
struct KnotName {
  std::string label;
  bool mirrored;
  std::string to_string() const { return mirrored ? label + "*" : label; }
};

std::optional<KnotName> lookup_name(const TwoBridgeLink& link);
// Accepts table labels ("7_4", optionally with trailing '*'), "trefoil",
// "fig8", "hopf", "unknot", "unlink", "T(2,n)".
std::optional<TwoBridgeLink> link_by_name(const std::string& name);

}  // namespace tanglekit
