#pragma once

#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/planar.hpp"
#include "skein/uni_poly.hpp"

namespace skein {

/// Annulus elements with m points on each boundary circle (bottom = top = m).
/// For m = 0 these are polynomials in the core curve l.
using ATLElement = Element;

/// Laurent polynomial in r over Q[A, A^{-1}]: the one-strand module.
using StrandElement = LaurentCoeffPoly;

ATLElement reduce_annulus(const MorseWord& word, const Conventions& conv = {});

/// Stacks y on top of x.
ATLElement compose(const ATLElement& x, const ATLElement& y);

/// rot(+1)^steps on m strands (negative steps rotate the other way).
Diagram rotation_diagram(int strands, int steps);

/// The full rotation rot(direction)^m: every strand winds once.
ATLElement full_rotation(int strands, int direction);

/// t^direction applied to v. Conventions::reverse_twist flips the handedness.
ATLElement dehn_twist(const ATLElement& v, int direction = 1, const Conventions& conv = {});

/// The arc r^k on one strand.
ATLElement r_power(int k);

ATLElement closed_from_poly(const LaurentCoeffPoly& x);
/// Throws std::invalid_argument for open elements.
LaurentCoeffPoly closed_to_poly(const ATLElement& x);

ATLElement strand_to_element(const StrandElement& v);
/// Throws std::invalid_argument unless v has one strand.
StrandElement element_to_strand(const ATLElement& v);

/// x v: x placed above v in the thickness direction.
ATLElement wrap_left(const LaurentCoeffPoly& x, const ATLElement& v, const Conventions& conv = {});
/// v x: x placed below v.
ATLElement wrap_right(const LaurentCoeffPoly& x, const ATLElement& v, const Conventions& conv = {});

/// v on the first points, w on the remaining ones, v entirely above w.
ATLElement boxtimes(const ATLElement& v, const ATLElement& w, const Conventions& conv = {});
/// General form: v on the points flagged in v_points.
ATLElement boxtimes(const ATLElement& v, const ATLElement& w, const std::vector<bool>& v_points,
                    const Conventions& conv = {});

/// (x v - v x) / (-A + A^{-1}). Throws std::domain_error when not divisible.
ATLElement sigma(const LaurentCoeffPoly& x, const ATLElement& v, const Conventions& conv = {});

/// The strand-level multiplier of l acting from the left (true) or right (false),
/// read off from the resolver: wrap(l, r^0) as a Laurent polynomial in r.
StrandElement strand_wrap_multiplier(bool left, const Conventions& conv = {});

/// x(l) acting on a strand element, with l replaced by the given multiplier.
StrandElement strand_act(const LaurentCoeffPoly& x, const StrandElement& multiplier, const StrandElement& v);

/// c r^k.
StrandElement r_monomial(const LaurentPoly& c, int k);

/// The core curve l as a polynomial.
LaurentCoeffPoly l_poly();

}  // namespace skein
