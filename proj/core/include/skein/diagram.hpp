#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

enum class Ambient { kDisk, kAnnulus };

enum class SliceKind { kCup, kCap, kOver, kUnder, kRot, kCoreOver, kCoreUnder };

/// One generator of a Morse word. `arg` is the 1-based position for
/// cup/cap/over/under, the direction (+1 or -1) for rot, unused for core.
/// over(i): the strand at i moving to i+1 passes in front.
struct Slice {
  SliceKind kind;
  int arg = 0;

  static Slice cup(int i) { return {SliceKind::kCup, i}; }
  static Slice cap(int i) { return {SliceKind::kCap, i}; }
  static Slice over(int i) { return {SliceKind::kOver, i}; }
  static Slice under(int i) { return {SliceKind::kUnder, i}; }
  static Slice rot(int dir) { return {SliceKind::kRot, dir}; }
  static Slice core(bool in_front) { return {in_front ? SliceKind::kCoreOver : SliceKind::kCoreUnder, 0}; }

  bool is_crossing() const { return kind == SliceKind::kOver || kind == SliceKind::kUnder; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

struct MorseWord {
  Ambient ambient = Ambient::kDisk;
  int bottom = 0;
  int top = 0;
  std::vector<Slice> slices;

  friend bool operator==(const MorseWord&, const MorseWord&) = default;
};

/// Error classes: "syntax", "strand-count", "position", "ambient".
class DiagramError : public std::invalid_argument {
 public:
  DiagramError(std::string error_class, const std::string& what, int line = 0, int column = 0)
      : std::invalid_argument(what), error_class_(std::move(error_class)), line_(line), column_(column) {}
  const std::string& error_class() const { return error_class_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string error_class_;
  int line_;
  int column_;
};

/// Parses "disk|annulus B T; slice; slice; ...". '#' starts a comment.
MorseWord parse_word(std::string_view text);
std::string print_word(const MorseWord& word);

/// Throws DiagramError on inconsistent strand counts or positions.
void validate(const MorseWord& word);
int strand_count_after(int count, const Slice& s);
int crossing_count(const MorseWord& word);

struct ComponentMap {
  int count = 0;
  std::vector<bool> closed;
  std::vector<int> bottom_component;
  std::vector<int> top_component;
  int closed_count() const;
};

/// Components numbered by first appearance: bottom points left to right, then slices.
ComponentMap components(const MorseWord& word);

/// Removes the given closed components. Throws DiagramError for open ones.
MorseWord delete_components(const MorseWord& word, const std::set<int>& doomed);

/// Rewrites core slices as cup, rot, crossings and cap.
MorseWord lower_core(const MorseWord& word);

/// a then b (b stacked on top). Throws DiagramError on mismatch.
MorseWord concat(const MorseWord& a, const MorseWord& b);

/// Word-level split union: b's strands appended to the right of a's, both disk words.
MorseWord juxtapose(const MorseWord& a, const MorseWord& b);

MorseWord identity_word(Ambient ambient, int strands);

}  // namespace skein
