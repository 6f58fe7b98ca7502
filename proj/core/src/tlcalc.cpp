#include "skein/tlcalc.hpp"

#include <vector>

namespace skein {

TLElement reduce_disk(const MorseWord& word, const Conventions& conv) {
  if (word.ambient != Ambient::kDisk) throw DiagramError("ambient", "reduce_disk expects a disk word");
  return resolve_word(word, conv);
}

TLElement tl_generator(int strands, int i) {
  if (i < 1 || i >= strands) throw std::invalid_argument("tl_generator: index out of range");
  MorseWord w{Ambient::kDisk, strands, strands, {Slice::cap(i), Slice::cup(i)}};
  return reduce_disk(w);
}

LaurentPoly bracket(const MorseWord& word, const Conventions& conv) {
  if (word.bottom != 0 || word.top != 0) throw DiagramError("strand-count", "bracket expects a closed diagram");
  const TLElement e = reduce_disk(word, conv);
  return e.coeff(Diagram{});
}

LaurentPoly star_bracket(const MorseWord& word, const std::set<int>& marked, const Conventions& conv) {
  const std::vector<int> list(marked.begin(), marked.end());
  const auto m = list.size();
  if (m > 20) throw std::invalid_argument("star_bracket: too many marked components");
  LaurentPoly sum;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<int> removed;
    int kept = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ++kept;
      } else {
        removed.insert(list[i]);
      }
    }
    const Rational weight(Integer(1) << static_cast<unsigned>(static_cast<int>(m) - kept));
    sum += bracket(delete_components(word, removed), conv) * weight;
  }
  return sum;
}

}  // namespace skein
