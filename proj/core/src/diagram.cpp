#include "skein/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits into statements on ';', each a list of whitespace separated tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> statements(1);
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
      continue;
    }
    if (c == ';') {
      statements.emplace_back();
      ++column;
      ++i;
      continue;
    }
    Token tok{"", line, column};
    while (i < text.size() && text[i] != ';' && text[i] != '#' && text[i] != '\n' && text[i] != ' ' &&
           text[i] != '\t' && text[i] != '\r') {
      tok.text.push_back(text[i]);
      ++column;
      ++i;
    }
    statements.back().push_back(std::move(tok));
  }
  return statements;
}

int parse_int(const Token& tok) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (!tok.text.empty() && tok.text[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DiagramError("syntax", "expected an integer, got '" + tok.text + "'", tok.line, tok.column);
  }
  return value;
}

void expect_arity(const std::vector<Token>& st, std::size_t n) {
  if (st.size() != n) {
    throw DiagramError("syntax", "'" + st[0].text + "' expects " + std::to_string(n - 1) + " argument(s)", st[0].line,
                       st[0].column);
  }
}

const char* kind_name(SliceKind k) {
  switch (k) {
    case SliceKind::kCup: return "cup";
    case SliceKind::kCap: return "cap";
    case SliceKind::kOver: return "over";
    case SliceKind::kUnder: return "under";
    case SliceKind::kRot: return "rot";
    case SliceKind::kCoreOver:
    case SliceKind::kCoreUnder: return "core";
  }
  return "?";
}

std::string slice_text(const Slice& s) {
  switch (s.kind) {
    case SliceKind::kRot: return s.arg > 0 ? "rot +1" : "rot -1";
    case SliceKind::kCoreOver: return "core over";
    case SliceKind::kCoreUnder: return "core under";
    default: return std::string(kind_name(s.kind)) + " " + std::to_string(s.arg);
  }
}

// Checks one slice against the current strand count; returns the new count.
int apply_checked(int k, const Slice& s, Ambient ambient, int line, int column) {
  auto bad_pos = [&](int lo, int hi) {
    throw DiagramError("position",
                       slice_text(s) + ": position out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "] with " + std::to_string(k) + " strands",
                       line, column);
  };
  switch (s.kind) {
    case SliceKind::kCup:
      if (s.arg < 1 || s.arg > k + 1) bad_pos(1, k + 1);
      return k + 2;
    case SliceKind::kCap:
    case SliceKind::kOver:
    case SliceKind::kUnder:
      if (s.arg < 1 || s.arg > k - 1) bad_pos(1, k - 1);
      return s.kind == SliceKind::kCap ? k - 2 : k;
    case SliceKind::kRot:
      if (ambient != Ambient::kAnnulus) throw DiagramError("ambient", "rot is only allowed in the annulus", line, column);
      if (s.arg != 1 && s.arg != -1) throw DiagramError("syntax", "rot takes +1 or -1", line, column);
      if (k < 1) throw DiagramError("position", "rot needs at least one strand", line, column);
      return k;
    case SliceKind::kCoreOver:
    case SliceKind::kCoreUnder:
      if (ambient != Ambient::kAnnulus) throw DiagramError("ambient", "core is only allowed in the annulus", line, column);
      return k;
  }
  return k;
}

}  // namespace

int strand_count_after(int count, const Slice& s) {
  if (s.kind == SliceKind::kCup) return count + 2;
  if (s.kind == SliceKind::kCap) return count - 2;
  return count;
}

MorseWord parse_word(std::string_view text) {
  auto statements = tokenize(text);
  std::size_t idx = 0;
  while (idx < statements.size() && statements[idx].empty()) ++idx;
  if (idx == statements.size()) throw DiagramError("syntax", "empty input: missing header", 1, 1);

  MorseWord word;
  const auto& header = statements[idx];
  if (header[0].text == "disk") {
    word.ambient = Ambient::kDisk;
  } else if (header[0].text == "annulus") {
    word.ambient = Ambient::kAnnulus;
  } else {
    throw DiagramError("syntax", "header must start with 'disk' or 'annulus'", header[0].line, header[0].column);
  }
  expect_arity(header, 3);
  word.bottom = parse_int(header[1]);
  word.top = parse_int(header[2]);
  if (word.bottom < 0 || word.top < 0) {
    throw DiagramError("syntax", "boundary counts must be non-negative", header[1].line, header[1].column);
  }
  if (word.ambient == Ambient::kDisk && (word.bottom + word.top) % 2 != 0) {
    throw DiagramError("strand-count", "disk tangle needs an even number of endpoints", header[1].line,
                       header[1].column);
  }

  int k = word.bottom;
  int last_line = header[0].line;
  int last_column = header[0].column;
  for (++idx; idx < statements.size(); ++idx) {
    const auto& st = statements[idx];
    if (st.empty()) continue;
    const Token& head = st[0];
    last_line = head.line;
    last_column = head.column;
    Slice s{SliceKind::kCup, 0};
    if (head.text == "cup" || head.text == "cap" || head.text == "over" || head.text == "under") {
      expect_arity(st, 2);
      s.kind = head.text == "cup"    ? SliceKind::kCup
               : head.text == "cap"  ? SliceKind::kCap
               : head.text == "over" ? SliceKind::kOver
                                     : SliceKind::kUnder;
      s.arg = parse_int(st[1]);
    } else if (head.text == "rot") {
      expect_arity(st, 2);
      if (st[1].text != "+1" && st[1].text != "-1" && st[1].text != "1") {
        throw DiagramError("syntax", "rot takes +1 or -1", st[1].line, st[1].column);
      }
      s.kind = SliceKind::kRot;
      s.arg = st[1].text == "-1" ? -1 : 1;
    } else if (head.text == "core") {
      expect_arity(st, 2);
      if (st[1].text == "over") {
        s.kind = SliceKind::kCoreOver;
      } else if (st[1].text == "under") {
        s.kind = SliceKind::kCoreUnder;
      } else {
        throw DiagramError("syntax", "core takes 'over' or 'under'", st[1].line, st[1].column);
      }
    } else {
      throw DiagramError("syntax", "unknown slice '" + head.text + "'", head.line, head.column);
    }
    k = apply_checked(k, s, word.ambient, head.line, head.column);
    word.slices.push_back(s);
  }
  if (k != word.top) {
    throw DiagramError("strand-count",
                       "word ends with " + std::to_string(k) + " strands but header declares " +
                           std::to_string(word.top),
                       last_line, last_column);
  }
  return word;
}

std::string print_word(const MorseWord& word) {
  std::ostringstream os;
  os << (word.ambient == Ambient::kDisk ? "disk " : "annulus ") << word.bottom << " " << word.top;
  for (const auto& s : word.slices) os << "; " << slice_text(s);
  return os.str();
}

void validate(const MorseWord& word) {
  if (word.bottom < 0 || word.top < 0) throw DiagramError("strand-count", "negative boundary count");
  if (word.ambient == Ambient::kDisk && (word.bottom + word.top) % 2 != 0) {
    throw DiagramError("strand-count", "disk tangle needs an even number of endpoints");
  }
  int k = word.bottom;
  for (std::size_t i = 0; i < word.slices.size(); ++i) {
    k = apply_checked(k, word.slices[i], word.ambient, 0, static_cast<int>(i) + 1);
  }
  if (k != word.top) throw DiagramError("strand-count", "final strand count does not match the top profile");
}

int crossing_count(const MorseWord& word) {
  int n = 0;
  for (const auto& s : word.slices) n += s.is_crossing() ? 1 : 0;
  return n;
}

int ComponentMap::closed_count() const {
  int n = 0;
  for (bool c : closed) n += c ? 1 : 0;
  return n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

void permute_rot(std::vector<int>& pos, int dir) {
  if (pos.empty()) return;
  if (dir > 0) {
    std::rotate(pos.rbegin(), pos.rbegin() + 1, pos.rend());
  } else {
    std::rotate(pos.begin(), pos.begin() + 1, pos.end());
  }
}

// Segment ids per slice: the segments touched by each slice, used to label
// slices by component after the union-find closes.
struct Traced {
  UnionFind uf;
  std::vector<int> bottom_seg;
  std::vector<int> top_seg;
  std::vector<std::vector<int>> slice_segs;
};

Traced trace(const MorseWord& word) {
  validate(word);
  Traced t;
  std::vector<int> pos;
  for (int i = 0; i < word.bottom; ++i) {
    pos.push_back(t.uf.make());
    t.bottom_seg.push_back(pos.back());
  }
  for (const auto& s : word.slices) {
    std::vector<int> segs;
    const auto at = static_cast<std::size_t>(s.arg - 1);
    switch (s.kind) {
      case SliceKind::kCup: {
        const int seg = t.uf.make();
        pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(at), 2, seg);
        segs = {seg};
        break;
      }
      case SliceKind::kCap:
        t.uf.unite(pos[at], pos[at + 1]);
        segs = {pos[at], pos[at + 1]};
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(at), pos.begin() + static_cast<std::ptrdiff_t>(at) + 2);
        break;
      case SliceKind::kOver:
      case SliceKind::kUnder:
        segs = {pos[at], pos[at + 1]};
        std::swap(pos[at], pos[at + 1]);
        break;
      case SliceKind::kRot:
        permute_rot(pos, s.arg);
        break;
      case SliceKind::kCoreOver:
      case SliceKind::kCoreUnder:
        segs = {t.uf.make()};
        break;
    }
    t.slice_segs.push_back(std::move(segs));
  }
  t.top_seg = pos;
  return t;
}

}  // namespace

ComponentMap components(const MorseWord& word) {
  Traced t = trace(word);
  ComponentMap map;
  std::vector<int> label(t.uf.parent.size(), -1);
  auto name = [&](int seg) {
    const int root = t.uf.find(seg);
    int& l = label[static_cast<std::size_t>(root)];
    if (l < 0) {
      l = map.count++;
      map.closed.push_back(true);
    }
    return l;
  };
  for (int seg : t.bottom_seg) {
    const int c = name(seg);
    map.closed[static_cast<std::size_t>(c)] = false;
    map.bottom_component.push_back(c);
  }
  for (const auto& segs : t.slice_segs) {
    for (int seg : segs) name(seg);
  }
  for (int seg : t.top_seg) {
    const int c = name(seg);
    map.closed[static_cast<std::size_t>(c)] = false;
    map.top_component.push_back(c);
  }
  return map;
}

MorseWord delete_components(const MorseWord& word, const std::set<int>& doomed) {
  const ComponentMap map = components(word);
  for (int c : doomed) {
    if (c < 0 || c >= map.count) throw DiagramError("position", "component index " + std::to_string(c) + " out of range");
    if (!map.closed[static_cast<std::size_t>(c)]) {
      throw DiagramError("position", "component " + std::to_string(c) + " is not closed");
    }
  }
  Traced t = trace(word);
  std::vector<int> label(t.uf.parent.size(), -1);
  // Reproduce the numbering used by components().
  int next = 0;
  auto comp = [&](int seg) {
    int& l = label[static_cast<std::size_t>(t.uf.find(seg))];
    if (l < 0) l = next++;
    return l;
  };
  for (int seg : t.bottom_seg) comp(seg);
  for (const auto& segs : t.slice_segs) {
    for (int seg : segs) comp(seg);
  }

  MorseWord out{word.ambient, word.bottom, word.top, {}};
  std::vector<int> pos;  // component per current position
  for (int seg : t.bottom_seg) pos.push_back(comp(seg));
  auto kept_before = [&](std::size_t at) {
    int n = 0;
    for (std::size_t i = 0; i < at; ++i) n += doomed.count(pos[i]) ? 0 : 1;
    return n;
  };
  for (std::size_t si = 0; si < word.slices.size(); ++si) {
    const Slice& s = word.slices[si];
    const auto at = static_cast<std::size_t>(s.arg - 1);
    switch (s.kind) {
      case SliceKind::kCup: {
        const int c = comp(t.slice_segs[si][0]);
        if (!doomed.count(c)) out.slices.push_back(Slice::cup(kept_before(at) + 1));
        pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(at), 2, c);
        break;
      }
      case SliceKind::kCap: {
        if (!doomed.count(pos[at])) out.slices.push_back(Slice::cap(kept_before(at) + 1));
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(at), pos.begin() + static_cast<std::ptrdiff_t>(at) + 2);
        break;
      }
      case SliceKind::kOver:
      case SliceKind::kUnder:
        if (!doomed.count(pos[at]) && !doomed.count(pos[at + 1])) out.slices.push_back({s.kind, kept_before(at) + 1});
        std::swap(pos[at], pos[at + 1]);
        break;
      case SliceKind::kRot: {
        const int moving = s.arg > 0 ? pos.back() : pos.front();
        if (!doomed.count(moving)) out.slices.push_back(s);
        permute_rot(pos, s.arg);
        break;
      }
      case SliceKind::kCoreOver:
      case SliceKind::kCoreUnder:
        if (!doomed.count(comp(t.slice_segs[si][0]))) out.slices.push_back(s);
        break;
    }
  }
  return out;
}

MorseWord lower_core(const MorseWord& word) {
  MorseWord out{word.ambient, word.bottom, word.top, {}};
  int k = word.bottom;
  for (const auto& s : word.slices) {
    if (s.kind == SliceKind::kCoreOver || s.kind == SliceKind::kCoreUnder) {
      // The loop end that crosses the seam walks left across all k strands.
      const SliceKind other_side = s.kind == SliceKind::kCoreOver ? SliceKind::kUnder : SliceKind::kOver;
      out.slices.push_back(Slice::cup(k + 1));
      out.slices.push_back(Slice::rot(1));
      for (int i = k + 1; i >= 2; --i) out.slices.push_back({other_side, i});
      out.slices.push_back(Slice::cap(1));
    } else {
      out.slices.push_back(s);
    }
    k = strand_count_after(k, s);
  }
  return out;
}

MorseWord concat(const MorseWord& a, const MorseWord& b) {
  if (a.ambient != b.ambient) throw DiagramError("ambient", "cannot stack disk and annulus words");
  if (a.top != b.bottom) throw DiagramError("strand-count", "top of the first word does not match bottom of the second");
  MorseWord out = a;
  out.top = b.top;
  out.slices.insert(out.slices.end(), b.slices.begin(), b.slices.end());
  return out;
}

MorseWord juxtapose(const MorseWord& a, const MorseWord& b) {
  if (a.ambient != Ambient::kDisk || b.ambient != Ambient::kDisk) {
    throw DiagramError("ambient", "juxtaposition is defined for disk words");
  }
  MorseWord out = a;
  out.bottom = a.bottom + b.bottom;
  out.top = a.top + b.top;
  for (Slice s : b.slices) {
    s.arg += a.top;
    out.slices.push_back(s);
  }
  return out;
}

MorseWord identity_word(Ambient ambient, int strands) { return MorseWord{ambient, strands, strands, {}}; }

}  // namespace skein
