#include "skein/planar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

int Diagram::through_count() const {
  int n = 0;
  for (int e = 0; e < bottom; ++e) n += is_top(partner[static_cast<std::size_t>(e)]) ? 1 : 0;
  return n;
}

bool Diagram::is_planar() const {
  return loops == 0 && std::all_of(wind.begin(), wind.end(), [](int w) { return w == 0; });
}

Diagram identity_diagram(int strands) {
  Diagram d{strands, strands, std::vector<int>(2 * static_cast<std::size_t>(strands)),
            std::vector<int>(2 * static_cast<std::size_t>(strands), 0), 0};
  for (int i = 0; i < strands; ++i) {
    d.partner[static_cast<std::size_t>(i)] = strands + i;
    d.partner[static_cast<std::size_t>(strands + i)] = i;
  }
  return d;
}

Diagram loop_diagram(int loops) { return Diagram{0, 0, {}, {}, loops}; }

void check_diagram(const Diagram& d) {
  const auto n = static_cast<std::size_t>(d.size());
  if (d.bottom < 0 || d.top < 0 || d.partner.size() != n || d.wind.size() != n || d.loops < 0) {
    throw std::invalid_argument("diagram: inconsistent sizes");
  }
  for (std::size_t e = 0; e < n; ++e) {
    const int p = d.partner[e];
    if (p < 0 || static_cast<std::size_t>(p) >= n || p == static_cast<int>(e) ||
        d.partner[static_cast<std::size_t>(p)] != static_cast<int>(e)) {
      throw std::invalid_argument("diagram: partner map is not a fixed-point-free involution");
    }
    if (d.wind[static_cast<std::size_t>(p)] != -d.wind[e]) throw std::invalid_argument("diagram: winding not antisymmetric");
    const bool turnback = d.is_top(static_cast<int>(e)) == d.is_top(p);
    if (turnback && static_cast<int>(e) < p && d.wind[e] != 0 && d.wind[e] != -1) {
      throw std::invalid_argument("diagram: turnback winding out of range");
    }
  }
  if (d.loops > 0 && d.through_count() > 0) throw std::invalid_argument("diagram: essential loop beside a through strand");
}

// ---------------------------------------------------------------------------
// Element

Element Element::basis(const Diagram& d, const LaurentPoly& c) {
  Element e(d.bottom, d.top);
  e.add(d, c);
  return e;
}

LaurentPoly Element::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void Element::add(const Diagram& d, const LaurentPoly& c) {
  if (d.bottom != bottom_ || d.top != top_) throw std::invalid_argument("element: diagram boundary mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_shape(const Element& o) const {
  if (o.bottom_ != bottom_ || o.top_ != top_) throw std::invalid_argument("element: boundary mismatch");
}

Element& Element::operator+=(const Element& o) {
  check_shape(o);
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_shape(o);
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

Element& Element::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

std::optional<Element> Element::exact_divide(const LaurentPoly& d) const {
  Element out(bottom_, top_);
  for (const auto& [diag, c] : terms_) {
    auto q = c.exact_divide(d);
    if (!q) return std::nullopt;
    out.add(diag, *q);
  }
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")[";
    for (int e = 0; e < d.size(); ++e) {
      const int p = d.partner[static_cast<std::size_t>(e)];
      if (p < e) continue;
      os << e << "-" << p;
      if (d.wind[static_cast<std::size_t>(e)] != 0) os << ":" << d.wind[static_cast<std::size_t>(e)];
      os << " ";
    }
    if (d.loops) os << "l^" << d.loops;
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Slice engine

namespace {

// link[k] >= 0: the strand at position k runs down to bottom point link[k].
// link[k] < 0: it runs down and back up to position -link[k] - 1.
// wind[k]: seam crossings along that path, from the far end to position k.
struct State {
  std::vector<int> link;
  std::vector<int> wind;
  std::vector<int> done_partner;
  std::vector<int> done_wind;
  int loops = 0;

  auto operator<=>(const State&) const = default;
};

using StateMap = std::map<State, LaurentPoly>;

int to_link(int position) { return -position - 1; }
int from_link(int link) { return -link - 1; }

void remap_positions(State& s, const std::vector<int>& new_pos) {
  for (auto& l : s.link) {
    if (l < 0) l = to_link(new_pos[static_cast<std::size_t>(from_link(l))]);
  }
}

void do_cup(State& s, int p) {
  std::vector<int> new_pos(s.link.size());
  for (std::size_t k = 0; k < s.link.size(); ++k) new_pos[k] = static_cast<int>(k) + (static_cast<int>(k) >= p ? 2 : 0);
  remap_positions(s, new_pos);
  const auto at = static_cast<std::ptrdiff_t>(p);
  s.link.insert(s.link.begin() + at, {to_link(p + 1), to_link(p)});
  s.wind.insert(s.wind.begin() + at, {0, 0});
}

// Returns the number of contractible loops closed (0 or 1).
int do_cap(State& s, int p) {
  const auto up = static_cast<std::size_t>(p);
  const int l1 = s.link[up];
  const int l2 = s.link[up + 1];
  const int w1 = s.wind[up];
  const int w2 = s.wind[up + 1];
  int contractible = 0;
  if (l1 == to_link(p + 1)) {
    if (w1 == 0) {
      contractible = 1;
    } else {
      ++s.loops;
    }
  } else if (l1 < 0 && l2 < 0) {
    const auto q1 = static_cast<std::size_t>(from_link(l1));
    const auto q2 = static_cast<std::size_t>(from_link(l2));
    s.link[q1] = to_link(static_cast<int>(q2));
    s.link[q2] = to_link(static_cast<int>(q1));
    s.wind[q2] = w1 - w2;
    s.wind[q1] = w2 - w1;
  } else if (l1 >= 0 && l2 < 0) {
    const auto q = static_cast<std::size_t>(from_link(l2));
    s.link[q] = l1;
    s.wind[q] = w1 - w2;
  } else if (l1 < 0 && l2 >= 0) {
    const auto q = static_cast<std::size_t>(from_link(l1));
    s.link[q] = l2;
    s.wind[q] = w2 - w1;
  } else {
    s.done_partner[static_cast<std::size_t>(l1)] = l2;
    s.done_partner[static_cast<std::size_t>(l2)] = l1;
    s.done_wind[static_cast<std::size_t>(l1)] = w1 - w2;
    s.done_wind[static_cast<std::size_t>(l2)] = w2 - w1;
  }
  const auto at = static_cast<std::ptrdiff_t>(p);
  s.link.erase(s.link.begin() + at, s.link.begin() + at + 2);
  s.wind.erase(s.wind.begin() + at, s.wind.begin() + at + 2);
  std::vector<int> new_pos(s.link.size() + 2, -1);
  for (std::size_t k = 0; k < new_pos.size(); ++k) {
    if (static_cast<int>(k) < p) new_pos[k] = static_cast<int>(k);
    if (static_cast<int>(k) > p + 1) new_pos[k] = static_cast<int>(k) - 2;
  }
  remap_positions(s, new_pos);
  return contractible;
}

void do_rot(State& s, int dir) {
  const int k = static_cast<int>(s.link.size());
  if (k == 0) return;
  const auto moving = static_cast<std::size_t>(dir > 0 ? k - 1 : 0);
  s.wind[moving] += dir;
  if (s.link[moving] < 0) s.wind[static_cast<std::size_t>(from_link(s.link[moving]))] -= dir;
  std::vector<int> new_pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) new_pos[static_cast<std::size_t>(i)] = ((i + dir) % k + k) % k;
  remap_positions(s, new_pos);
  if (dir > 0) {
    std::rotate(s.link.rbegin(), s.link.rbegin() + 1, s.link.rend());
    std::rotate(s.wind.rbegin(), s.wind.rbegin() + 1, s.wind.rend());
  } else {
    std::rotate(s.link.begin(), s.link.begin() + 1, s.link.end());
    std::rotate(s.wind.begin(), s.wind.begin() + 1, s.wind.end());
  }
}

void accumulate(StateMap& out, State&& s, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(std::move(s), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

LaurentPoly contractible_factor(int n) { return n == 0 ? LaurentPoly(1) : loop_value().pow(static_cast<unsigned>(n)); }

StateMap step(const StateMap& in, const Slice& slice, const Conventions& conv) {
  StateMap out;
  const int p = slice.arg - 1;
  for (const auto& [state, coeff] : in) {
    switch (slice.kind) {
      case SliceKind::kCup: {
        State s = state;
        do_cup(s, p);
        accumulate(out, std::move(s), coeff);
        break;
      }
      case SliceKind::kCap: {
        State s = state;
        const int c = do_cap(s, p);
        accumulate(out, std::move(s), coeff * contractible_factor(c));
        break;
      }
      case SliceKind::kRot: {
        State s = state;
        do_rot(s, slice.arg);
        accumulate(out, std::move(s), coeff);
        break;
      }
      case SliceKind::kOver:
      case SliceKind::kUnder: {
        const bool a_on_id = (slice.kind == SliceKind::kOver) != conv.swap_smoothing;
        const LaurentPoly c_id = LaurentPoly::A(a_on_id ? 1 : -1);
        const LaurentPoly c_e = LaurentPoly::A(a_on_id ? -1 : 1);
        State id = state;
        accumulate(out, std::move(id), coeff * c_id);
        State e = state;
        const int c = do_cap(e, p);
        do_cup(e, p);
        accumulate(out, std::move(e), coeff * c_e * contractible_factor(c));
        break;
      }
      case SliceKind::kCoreOver:
      case SliceKind::kCoreUnder:
        throw std::logic_error("core slices must be lowered before resolution");
    }
  }
  return out;
}

Diagram finish(const State& s, int bottom) {
  const int top = static_cast<int>(s.link.size());
  Diagram d{bottom, top, std::vector<int>(static_cast<std::size_t>(bottom + top), -1),
            std::vector<int>(static_cast<std::size_t>(bottom + top), 0), s.loops};
  for (int b = 0; b < bottom; ++b) {
    const int q = s.done_partner[static_cast<std::size_t>(b)];
    if (q >= 0) {
      d.partner[static_cast<std::size_t>(b)] = q;
      d.wind[static_cast<std::size_t>(b)] = s.done_wind[static_cast<std::size_t>(b)];
    }
  }
  for (int k = 0; k < top; ++k) {
    const int l = s.link[static_cast<std::size_t>(k)];
    const int w = s.wind[static_cast<std::size_t>(k)];
    const auto e = static_cast<std::size_t>(bottom + k);
    if (l >= 0) {
      d.partner[static_cast<std::size_t>(l)] = bottom + k;
      d.wind[static_cast<std::size_t>(l)] = w;
      d.partner[e] = l;
      d.wind[e] = -w;
    } else {
      d.partner[e] = bottom + from_link(l);
      d.wind[e] = -w;
    }
  }
  return d;
}

}  // namespace

Element resolve_word(const MorseWord& input, const Conventions& conv) {
  validate(input);
  const MorseWord word = lower_core(input);
  State start;
  for (int b = 0; b < word.bottom; ++b) {
    start.link.push_back(b);
    start.wind.push_back(0);
  }
  start.done_partner.assign(static_cast<std::size_t>(word.bottom), -1);
  start.done_wind.assign(static_cast<std::size_t>(word.bottom), 0);
  StateMap states;
  states.emplace(std::move(start), LaurentPoly(1));
  for (const auto& slice : word.slices) states = step(states, slice, conv);

  Element out(word.bottom, word.top);
  for (const auto& [state, coeff] : states) out.add(finish(state, word.bottom), coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Gluing

Diagram glue_diagrams(const Diagram& lower, const Diagram& upper, int& contractible) {
  if (lower.top != upper.bottom) throw std::invalid_argument("glue: boundary mismatch");
  const int B = lower.bottom;
  const int M = lower.top;
  const int T = upper.top;
  Diagram d{B, T, std::vector<int>(static_cast<std::size_t>(B + T), -1),
            std::vector<int>(static_cast<std::size_t>(B + T), 0), lower.loops + upper.loops};
  std::vector<bool> middle_seen(static_cast<std::size_t>(M), false);
  contractible = 0;

  // Walks from an outer endpoint until the next outer endpoint.
  auto walk = [&](bool start_in_lower, int endpoint, int& winding) {
    bool in_lower = start_in_lower;
    int e = endpoint;
    winding = 0;
    while (true) {
      const Diagram& cur = in_lower ? lower : upper;
      const int p = cur.partner[static_cast<std::size_t>(e)];
      winding += cur.wind[static_cast<std::size_t>(e)];
      if (in_lower) {
        if (p < B) return p;  // lower bottom
        const int mid = p - B;
        middle_seen[static_cast<std::size_t>(mid)] = true;
        in_lower = false;
        e = mid;
      } else {
        if (p >= M) return B + (p - M);  // upper top
        middle_seen[static_cast<std::size_t>(p)] = true;
        in_lower = true;
        e = B + p;
      }
    }
  };

  for (int b = 0; b < B; ++b) {
    if (d.partner[static_cast<std::size_t>(b)] >= 0) continue;
    int w = 0;
    const int end = walk(true, b, w);
    d.partner[static_cast<std::size_t>(b)] = end;
    d.partner[static_cast<std::size_t>(end)] = b;
    d.wind[static_cast<std::size_t>(b)] = w;
    d.wind[static_cast<std::size_t>(end)] = -w;
  }
  for (int t = 0; t < T; ++t) {
    const int e = B + t;
    if (d.partner[static_cast<std::size_t>(e)] >= 0) continue;
    int w = 0;
    const int end = walk(false, M + t, w);
    d.partner[static_cast<std::size_t>(e)] = end;
    d.partner[static_cast<std::size_t>(end)] = e;
    d.wind[static_cast<std::size_t>(e)] = w;
    d.wind[static_cast<std::size_t>(end)] = -w;
  }
  // Whatever remains in the middle closes up into loops.
  for (int i = 0; i < M; ++i) {
    if (middle_seen[static_cast<std::size_t>(i)]) continue;
    int w = 0;
    int mid = i;
    do {
      middle_seen[static_cast<std::size_t>(mid)] = true;
      w += upper.wind[static_cast<std::size_t>(mid)];
      const int next_low = upper.partner[static_cast<std::size_t>(mid)];  // a lower middle point of upper
      middle_seen[static_cast<std::size_t>(next_low)] = true;
      w += lower.wind[static_cast<std::size_t>(B + next_low)];
      mid = lower.partner[static_cast<std::size_t>(B + next_low)] - B;
    } while (mid != i);
    if (w == 0) {
      ++contractible;
    } else {
      ++d.loops;
    }
  }
  return d;
}

Element glue(const Element& lower, const Element& upper) {
  if (lower.top() != upper.bottom()) throw std::invalid_argument("glue: boundary mismatch");
  Element out(lower.bottom(), upper.top());
  for (const auto& [dl, cl] : lower.terms()) {
    for (const auto& [du, cu] : upper.terms()) {
      int contractible = 0;
      Diagram d = glue_diagrams(dl, du, contractible);
      out.add(d, cl * cu * contractible_factor(contractible));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words from diagrams

namespace {

struct Capping {
  std::vector<Slice> slices;
  std::vector<int> remaining;  // local ids of through endpoints, left to right
};

// Caps off all turnbacks among n boundary points. pair[i] is the local
// partner (or -1 for a through endpoint); w[i] the winding from i to it.
Capping cap_off(int n, const std::vector<int>& pair, const std::vector<int>& w) {
  Capping out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = i;
  auto has_turnback = [&] {
    return std::any_of(cur.begin(), cur.end(), [&](int x) { return pair[static_cast<std::size_t>(x)] >= 0; });
  };
  while (has_turnback()) {
    bool found = false;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int x = cur[p];
      const int y = cur[p + 1];
      if (pair[static_cast<std::size_t>(x)] == y && w[static_cast<std::size_t>(x)] == 0) {
        out.slices.push_back(Slice::cap(static_cast<int>(p) + 1));
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p), cur.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        found = true;
        break;
      }
    }
    if (!found && cur.size() >= 2) {
      const int x = cur.back();
      const int y = cur.front();
      if (pair[static_cast<std::size_t>(x)] == y && w[static_cast<std::size_t>(x)] == 1) {
        out.slices.push_back(Slice::rot(1));
        out.slices.push_back(Slice::cap(1));
        cur.pop_back();
        cur.erase(cur.begin());
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("to_word: diagram is not crossingless");
  }
  out.remaining = cur;
  return out;
}

}  // namespace

MorseWord to_word(const Diagram& d, Ambient ambient) {
  check_diagram(d);
  if (ambient == Ambient::kDisk && !d.is_planar()) throw std::invalid_argument("to_word: winding in a disk diagram");
  const int B = d.bottom;
  const int T = d.top;
  std::vector<int> bpair(static_cast<std::size_t>(B), -1), bw(static_cast<std::size_t>(B), 0);
  std::vector<int> tpair(static_cast<std::size_t>(T), -1), tw(static_cast<std::size_t>(T), 0);
  for (int e = 0; e < B + T; ++e) {
    const int p = d.partner[static_cast<std::size_t>(e)];
    const int w = d.wind[static_cast<std::size_t>(e)];
    if (e < B && p < B) {
      bpair[static_cast<std::size_t>(e)] = p;
      bw[static_cast<std::size_t>(e)] = w;
    } else if (e >= B && p >= B) {
      tpair[static_cast<std::size_t>(e - B)] = p - B;
      tw[static_cast<std::size_t>(e - B)] = w;
    }
  }
  const Capping low = cap_off(B, bpair, bw);
  const Capping high = cap_off(T, tpair, tw);

  MorseWord word{ambient, B, T, low.slices};
  const int p = static_cast<int>(low.remaining.size());
  if (p > 0) {
    const int b0 = low.remaining[0];
    const int t0 = d.partner[static_cast<std::size_t>(b0)] - B;
    const auto it = std::find(high.remaining.begin(), high.remaining.end(), t0);
    const int j0 = static_cast<int>(it - high.remaining.begin());
    const int s = j0 + p * d.wind[static_cast<std::size_t>(b0)];
    for (int i = 0; i < std::abs(s); ++i) word.slices.push_back(Slice::rot(s > 0 ? 1 : -1));
  } else {
    for (int i = 0; i < d.loops; ++i) word.slices.push_back(Slice::core(true));
  }
  for (auto it = high.slices.rbegin(); it != high.slices.rend(); ++it) {
    if (it->kind == SliceKind::kCap) {
      word.slices.push_back(Slice::cup(it->arg));
    } else {
      word.slices.push_back(Slice::rot(-it->arg));
    }
  }
  validate(word);
  return word;
}

// ---------------------------------------------------------------------------
// Layers

namespace {

class SpectatorLayout {
 public:
  SpectatorLayout(const std::vector<bool>& own, bool spectators_in_front, MorseWord& out)
      : own_(own), front_(spectators_in_front), out_(out) {}

  int own_count() const { return static_cast<int>(std::count(own_.begin(), own_.end(), true)); }

  // Global index of the r-th own strand.
  std::size_t own_index(int r) const {
    int seen = 0;
    for (std::size_t g = 0; g < own_.size(); ++g) {
      if (own_[g] && seen++ == r) return g;
    }
    throw std::logic_error("embed: own strand index out of range");
  }

  // Exchanges the strands at g and g + 1 with the crossing the layers dictate.
  void swap(std::size_t g) {
    if (own_[g] == own_[g + 1]) throw std::logic_error("embed: strands of one layer never pass each other");
    const bool left_in_front = own_[g] ? !front_ : front_;
    out_.slices.push_back(left_in_front ? Slice::over(static_cast<int>(g) + 1) : Slice::under(static_cast<int>(g) + 1));
    std::swap(own_[g], own_[g + 1]);
  }

  // Moves the r-th own strand right until it sits next to the (r+1)-th.
  std::size_t bring_adjacent(int r) {
    std::size_t g = own_index(r);
    const std::size_t h = own_index(r + 1);
    for (; g + 1 < h; ++g) swap(g);
    return g;
  }

  void apply(const Slice& s) {
    switch (s.kind) {
      case SliceKind::kCup: {
        const int n = own_count();
        const std::size_t g = s.arg <= n ? own_index(s.arg - 1) : (n == 0 ? 0 : own_index(n - 1) + 1);
        out_.slices.push_back(Slice::cup(static_cast<int>(g) + 1));
        own_.insert(own_.begin() + static_cast<std::ptrdiff_t>(g), 2, true);
        break;
      }
      case SliceKind::kCap: {
        const std::size_t g = bring_adjacent(s.arg - 1);
        out_.slices.push_back(Slice::cap(static_cast<int>(g) + 1));
        own_.erase(own_.begin() + static_cast<std::ptrdiff_t>(g), own_.begin() + static_cast<std::ptrdiff_t>(g) + 2);
        break;
      }
      case SliceKind::kOver:
      case SliceKind::kUnder: {
        const std::size_t g = bring_adjacent(s.arg - 1);
        out_.slices.push_back({s.kind, static_cast<int>(g) + 1});
        break;
      }
      case SliceKind::kRot:
        if (s.arg > 0) {
          for (std::size_t g = own_index(own_count() - 1); g + 1 < own_.size(); ++g) swap(g);
          std::rotate(own_.rbegin(), own_.rbegin() + 1, own_.rend());
        } else {
          for (std::size_t g = own_index(0); g > 0; --g) swap(g - 1);
          std::rotate(own_.begin(), own_.begin() + 1, own_.end());
        }
        out_.slices.push_back(s);
        break;
      case SliceKind::kCoreOver:
      case SliceKind::kCoreUnder:
        throw std::logic_error("embed: core slices must be lowered first");
    }
  }

  void sort_to(const std::vector<bool>& target) {
    // Same-layer order is preserved, so bubbling by layer rank reaches the target.
    std::vector<int> rank(own_.size());
    int next_own = 0;
    int next_spec = 0;
    std::vector<int> own_target;
    std::vector<int> spec_target;
    for (std::size_t g = 0; g < target.size(); ++g) (target[g] ? own_target : spec_target).push_back(static_cast<int>(g));
    for (std::size_t g = 0; g < own_.size(); ++g) {
      rank[g] = own_[g] ? own_target[static_cast<std::size_t>(next_own++)] : spec_target[static_cast<std::size_t>(next_spec++)];
    }
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t g = 0; g + 1 < rank.size(); ++g) {
        if (rank[g] > rank[g + 1]) {
          swap(g);
          std::swap(rank[g], rank[g + 1]);
          moved = true;
        }
      }
    }
  }

 private:
  std::vector<bool> own_;
  bool front_;
  MorseWord& out_;
};

}  // namespace

MorseWord embed_with_spectators(const MorseWord& word, const std::vector<bool>& own, bool spectators_in_front) {
  const int n = static_cast<int>(std::count(own.begin(), own.end(), true));
  if (word.bottom != n || word.top != n) throw std::invalid_argument("embed: word must act on exactly the own strands");
  const int total = static_cast<int>(own.size());
  MorseWord out{word.ambient, total, total, {}};
  SpectatorLayout layout(own, spectators_in_front, out);
  for (const auto& s : lower_core(word).slices) layout.apply(s);
  layout.sort_to(own);
  validate(out);
  return out;
}

Element layer_product(const Element& upper, const Element& lower, const std::vector<bool>& upper_points,
                      const Conventions& conv) {
  const int nu = static_cast<int>(std::count(upper_points.begin(), upper_points.end(), true));
  const int nl = static_cast<int>(upper_points.size()) - nu;
  if (upper.bottom() != nu || upper.top() != nu || lower.bottom() != nl || lower.top() != nl) {
    throw std::invalid_argument("layer product: point sets do not match the factors");
  }
  std::vector<bool> lower_points(upper_points.size());
  for (std::size_t i = 0; i < upper_points.size(); ++i) lower_points[i] = !upper_points[i];
  const int m = static_cast<int>(upper_points.size());
  Element out(m, m);
  for (const auto& [dl, cl] : lower.terms()) {
    const MorseWord wl = embed_with_spectators(to_word(dl, Ambient::kAnnulus), lower_points, true);
    for (const auto& [du, cu] : upper.terms()) {
      const MorseWord wu = embed_with_spectators(to_word(du, Ambient::kAnnulus), upper_points, false);
      out += resolve_word(concat(wl, wu), conv) * (cl * cu);
    }
  }
  return out;
}

}  // namespace skein
