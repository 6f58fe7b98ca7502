#pragma once

#include <set>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/planar.hpp"

namespace skein {

/// Disk elements: every diagram is planar (no windings, no essential loops).
using TLElement = Element;

/// Skein class of a disk word in the Temperley-Lieb basis.
/// Throws DiagramError("ambient") for annulus words.
TLElement reduce_disk(const MorseWord& word, const Conventions& conv = {});

/// e_i on n strands (1-based i).
TLElement tl_generator(int strands, int i);

/// K(L) of a closed disk word, normalized by K(empty) = 1.
LaurentPoly bracket(const MorseWord& word, const Conventions& conv = {});

/// sum over S subset of marked of 2^{|marked| - |S|} K(word minus (marked \ S)).
LaurentPoly star_bracket(const MorseWord& word, const std::set<int>& marked, const Conventions& conv = {});

}  // namespace skein
