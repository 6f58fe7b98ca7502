#include "skein/atlcalc.hpp"

#include <stdexcept>

namespace skein {

namespace {

void require_square(const ATLElement& v, const char* what) {
  if (v.bottom() != v.top()) throw std::invalid_argument(std::string(what) + ": expects equal boundary counts");
}

ATLElement core_element(int strands, bool in_front, const Conventions& conv) {
  MorseWord w{Ambient::kAnnulus, strands, strands, {Slice::core(in_front)}};
  return resolve_word(w, conv);
}

ATLElement wrap(const LaurentCoeffPoly& x, const ATLElement& v, bool in_front, const Conventions& conv) {
  require_square(v, "wrap");
  ATLElement out(v.bottom(), v.top());
  if (x.is_zero()) return out;
  if (x.min_exponent() < 0) throw std::invalid_argument("wrap: negative power of l");
  const ATLElement core = core_element(v.top(), in_front, conv);
  ATLElement power = v;
  for (int k = 0; k <= x.max_exponent(); ++k) {
    if (k > 0) power = glue(power, core);
    const LaurentPoly c = x.coeff(k);
    if (!c.is_zero()) out += power * c;
  }
  return out;
}

}  // namespace

ATLElement reduce_annulus(const MorseWord& word, const Conventions& conv) {
  if (word.ambient != Ambient::kAnnulus) throw DiagramError("ambient", "reduce_annulus expects an annulus word");
  return resolve_word(word, conv);
}

ATLElement compose(const ATLElement& x, const ATLElement& y) {
  if (x.top() != y.bottom()) throw std::invalid_argument("compose: strand count mismatch");
  return glue(x, y);
}

Diagram rotation_diagram(int strands, int steps) {
  Diagram d = identity_diagram(strands);
  if (strands == 0) return d;
  for (int i = 0; i < strands; ++i) {
    const int shifted = i + steps;
    const int target = ((shifted % strands) + strands) % strands;
    const int turns = (shifted - target) / strands;
    d.partner[static_cast<std::size_t>(i)] = strands + target;
    d.partner[static_cast<std::size_t>(strands + target)] = i;
    d.wind[static_cast<std::size_t>(i)] = turns;
    d.wind[static_cast<std::size_t>(strands + target)] = -turns;
  }
  return d;
}

ATLElement full_rotation(int strands, int direction) {
  return ATLElement::basis(rotation_diagram(strands, direction * strands));
}

ATLElement dehn_twist(const ATLElement& v, int direction, const Conventions& conv) {
  require_square(v, "dehn_twist");
  if (direction != 1 && direction != -1) throw std::invalid_argument("dehn_twist: direction must be +1 or -1");
  return compose(v, full_rotation(v.top(), conv.reverse_twist ? -direction : direction));
}

ATLElement r_power(int k) { return ATLElement::basis(rotation_diagram(1, k)); }

ATLElement closed_from_poly(const LaurentCoeffPoly& x) {
  ATLElement out(0, 0);
  if (x.is_zero()) return out;
  if (x.min_exponent() < 0) throw std::invalid_argument("closed element: negative power of l");
  for (int k = 0; k <= x.max_exponent(); ++k) out.add(loop_diagram(k), x.coeff(k));
  return out;
}

LaurentCoeffPoly closed_to_poly(const ATLElement& x) {
  if (x.bottom() != 0 || x.top() != 0) throw std::invalid_argument("closed_to_poly: element has boundary points");
  LaurentCoeffPoly out('l');
  for (const auto& [d, c] : x.terms()) out.add(d.loops, c);
  return out;
}

ATLElement strand_to_element(const StrandElement& v) {
  ATLElement out(1, 1);
  for (int k = v.min_exponent(); !v.is_zero() && k <= v.max_exponent(); ++k) {
    out.add(rotation_diagram(1, k), v.coeff(k));
  }
  return out;
}

StrandElement element_to_strand(const ATLElement& v) {
  if (v.bottom() != 1 || v.top() != 1) throw std::invalid_argument("element_to_strand: expects one strand");
  StrandElement out('r');
  for (const auto& [d, c] : v.terms()) out.add(d.wind[0], c);
  return out;
}

ATLElement wrap_left(const LaurentCoeffPoly& x, const ATLElement& v, const Conventions& conv) {
  return wrap(x, v, true, conv);
}

ATLElement wrap_right(const LaurentCoeffPoly& x, const ATLElement& v, const Conventions& conv) {
  return wrap(x, v, false, conv);
}

ATLElement boxtimes(const ATLElement& v, const ATLElement& w, const Conventions& conv) {
  std::vector<bool> flags(static_cast<std::size_t>(v.top() + w.top()), false);
  for (int i = 0; i < v.top(); ++i) flags[static_cast<std::size_t>(i)] = true;
  return boxtimes(v, w, flags, conv);
}

ATLElement boxtimes(const ATLElement& v, const ATLElement& w, const std::vector<bool>& v_points,
                    const Conventions& conv) {
  require_square(v, "boxtimes");
  require_square(w, "boxtimes");
  return layer_product(v, w, v_points, conv);
}

ATLElement sigma(const LaurentCoeffPoly& x, const ATLElement& v, const Conventions& conv) {
  const ATLElement diff = wrap_left(x, v, conv) - wrap_right(x, v, conv);
  auto q = diff.exact_divide(LaurentPoly::A(-1) - LaurentPoly::A(1));
  if (!q) throw std::domain_error("sigma: commutator is not divisible by -A + A^{-1}");
  return *q;
}

StrandElement strand_wrap_multiplier(bool left, const Conventions& conv) {
  const ATLElement r0 = r_power(0);
  return element_to_strand(left ? wrap_left(l_poly(), r0, conv) : wrap_right(l_poly(), r0, conv));
}

StrandElement strand_act(const LaurentCoeffPoly& x, const StrandElement& multiplier, const StrandElement& v) {
  StrandElement out('r');
  if (x.is_zero() || v.is_zero()) return out;
  if (x.min_exponent() < 0) throw std::invalid_argument("strand_act: negative power of l");
  StrandElement power = v;
  for (int k = 0; k <= x.max_exponent(); ++k) {
    if (k > 0) power = multiplier * power;
    const LaurentPoly c = x.coeff(k);
    if (!c.is_zero()) out += power * c;
  }
  return out;
}

StrandElement r_monomial(const LaurentPoly& c, int k) { return StrandElement::monomial('r', c, k); }

LaurentCoeffPoly l_poly() { return LaurentCoeffPoly::monomial('l', LaurentPoly(1), 1); }

}  // namespace skein
