#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// The two figure-dependent binary choices. The default is the calibrated profile.
struct Conventions {
  /// false: over(i) resolves to A * id + A^{-1} * e_i; true swaps A and A^{-1}.
  bool swap_smoothing = false;
  /// false: the Dehn twist composes with rot(+1)^m; true uses rot(-1)^m.
  bool reverse_twist = false;

  friend bool operator==(const Conventions&, const Conventions&) = default;
};

/// Crossingless diagram in the disk or annulus. Endpoints 0..bottom-1 sit on
/// the lower (inner) boundary, bottom..bottom+top-1 on the upper (outer) one,
/// left to right. wind[e] counts signed seam crossings along the arc from e to
/// partner[e]; the seam runs between the last and the first position.
struct Diagram {
  int bottom = 0;
  int top = 0;
  std::vector<int> partner;
  std::vector<int> wind;
  int loops = 0;  // essential closed curves

  auto operator<=>(const Diagram&) const = default;

  int size() const { return bottom + top; }
  bool is_top(int e) const { return e >= bottom; }
  int through_count() const;
  /// True when every winding is zero and there are no essential loops.
  bool is_planar() const;
};

Diagram identity_diagram(int strands);
/// Closed diagram with `loops` essential curves (the basis element l^loops).
Diagram loop_diagram(int loops);
/// Throws std::invalid_argument when the data is not a crossingless diagram
/// (bad partners, winding asymmetry, turnback windings out of range).
void check_diagram(const Diagram& d);

/// Finite combination of diagrams with fixed boundary counts.
class Element {
 public:
  using Terms = std::map<Diagram, LaurentPoly>;

  Element() = default;
  Element(int bottom, int top) : bottom_(bottom), top_(top) {}
  static Element basis(const Diagram& d, const LaurentPoly& c = LaurentPoly(1));
  static Element identity(int strands) { return basis(identity_diagram(strands)); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Diagram& d) const;
  void add(const Diagram& d, const LaurentPoly& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const LaurentPoly& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const LaurentPoly& c) { return a *= c; }
  friend Element operator*(const LaurentPoly& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.terms_ == b.terms_;
  }

  /// Coefficient-wise exact division; nullopt when some coefficient is not divisible.
  std::optional<Element> exact_divide(const LaurentPoly& d) const;
  std::string to_string() const;

 private:
  void check_shape(const Element& o) const;
  int bottom_ = 0;
  int top_ = 0;
  Terms terms_;
};

/// Resolves every crossing slice by slice; contractible loops give the loop value.
Element resolve_word(const MorseWord& word, const Conventions& conv = {});

/// Stacks `upper` on top of `lower` (diagram-wise, windings add across the cut).
Element glue(const Element& lower, const Element& upper);
Diagram glue_diagrams(const Diagram& lower, const Diagram& upper, int& contractible);

/// A crossing-free word whose resolution is exactly d.
MorseWord to_word(const Diagram& d, Ambient ambient);

/// Rewrites `word` (acting on its own strands) inside a larger strand set.
/// `own` lists, in boundary order, which global points belong to the word's
/// strands (bottom and top share the layout). Other strands are spectators:
/// they stay vertical and pass in front of the word when `spectators_in_front`.
MorseWord embed_with_spectators(const MorseWord& word, const std::vector<bool>& own, bool spectators_in_front);

/// Diagram-level stacking in the thickness direction: `upper` on the points
/// marked true in `upper_points`, `lower` on the rest.
Element layer_product(const Element& upper, const Element& lower, const std::vector<bool>& upper_points,
                      const Conventions& conv = {});

}  // namespace skein
