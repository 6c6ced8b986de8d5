#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fock {

// Thrown when structured input fails a domain invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when textual/JSON input cannot be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Parity : unsigned char { Even = 0, Odd = 1 };

struct LetterInfo {
  std::string id;  // canonical: "-3'", "0'", "2"
  Parity parity = Parity::Even;
};

/// A finite Z2-graded totally ordered alphabet (a truncation window of one of
/// the standard families, or a custom letter list). Letters are addressed by
/// rank 0..size()-1; comparison of letters is comparison of ranks.
/// Immutable after construction.
class Alphabet {
 public:
  Alphabet() = default;

  // Recognized families: "[k]", "[-k]", "[k]'", "[-k]'" (window ignored) and
  // "Z>0", "Z>=0", "Z<0", "Z'>0", "Z'>=0", "Z'<0" (window [lo,hi] by value).
  static Alphabet preset(const std::string& family, int lo = 0, int hi = -1);
  static Alphabet custom(std::vector<LetterInfo> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Parity parity(int rank) const { return letters_.at(rank).parity; }
  bool odd(int rank) const { return parity(rank) == Parity::Odd; }
  const std::string& id(int rank) const { return letters_.at(rank).id; }
  int rank_of(const std::string& id) const;  // throws ParseError if absent
  const std::vector<LetterInfo>& letters() const { return letters_; }

  // Family/window survive only through preset(); derived alphabets are custom.
  const std::string& family() const { return family_; }
  int window_lo() const { return lo_; }
  int window_hi() const { return hi_; }

  bool operator==(const Alphabet& o) const;
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<LetterInfo> letters_;
  std::string family_;  // empty for custom/derived
  int lo_ = 0, hi_ = -1;
};

/// Same letters and parities, ranks reversed. Involutive.
Alphabet pi_dual(const Alphabet& a);

/// Concatenated order with every letter of `a` below every letter of `b`.
/// Throws ValidationError on a letter-id collision.
Alphabet star(const Alphabet& a, const Alphabet& b);

}  // namespace fock
