#include "fock/alphabet.hpp"

#include <algorithm>
#include <set>

namespace fock {

namespace {

std::string int_id(int v, bool primed) {
  std::string s = std::to_string(v);
  if (primed) s.push_back('\'');
  return s;
}

Alphabet range_alphabet(int lo, int hi, bool primed) {
  std::vector<LetterInfo> ls;
  for (int v = lo; v <= hi; ++v)
    ls.push_back({int_id(v, primed), primed ? Parity::Odd : Parity::Even});
  return Alphabet::custom(std::move(ls));
}

// "[k]" / "[-k]" / primed variants; returns k and flags, or 0 if not bracket form.
bool parse_bracket(const std::string& f, int& k, bool& neg, bool& primed) {
  std::string s = f;
  primed = false;
  if (!s.empty() && s.back() == '\'') {
    primed = true;
    s.pop_back();
  }
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') return false;
  std::string body = s.substr(1, s.size() - 2);
  neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.erase(body.begin());
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    return false;
  k = std::stoi(body);
  return k > 0;
}

}  // namespace

Alphabet Alphabet::custom(std::vector<LetterInfo> letters) {
  std::set<std::string> seen;
  for (const auto& l : letters)
    if (!seen.insert(l.id).second)
      throw ValidationError("duplicate letter id: " + l.id);
  Alphabet a;
  a.letters_ = std::move(letters);
  return a;
}

Alphabet Alphabet::preset(const std::string& family, int lo, int hi) {
  int k;
  bool neg, primed;
  Alphabet a;
  if (parse_bracket(family, k, neg, primed)) {
    a = neg ? range_alphabet(-k, -1, primed) : range_alphabet(1, k, primed);
  } else if (family == "Z>0" || family == "Z'>0") {
    bool p = family[1] == '\'';
    if (hi < lo || lo < 1) throw ValidationError("empty or invalid window for " + family);
    a = range_alphabet(lo, hi, p);
  } else if (family == "Z>=0" || family == "Z'>=0") {
    bool p = family[1] == '\'';
    if (hi < lo || lo < 0) throw ValidationError("empty or invalid window for " + family);
    a = range_alphabet(lo, hi, p);
  } else if (family == "Z<0" || family == "Z'<0") {
    bool p = family[1] == '\'';
    if (hi < lo || hi > -1) throw ValidationError("empty or invalid window for " + family);
    a = range_alphabet(lo, hi, p);
  } else {
    throw ValidationError("unknown alphabet preset: " + family);
  }
  a.family_ = family;
  a.lo_ = lo;
  a.hi_ = hi;
  return a;
}

int Alphabet::rank_of(const std::string& id) const {
  for (int r = 0; r < size(); ++r)
    if (letters_[r].id == id) return r;
  throw ParseError("letter not in alphabet: " + id);
}

bool Alphabet::operator==(const Alphabet& o) const {
  if (letters_.size() != o.letters_.size()) return false;
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].id != o.letters_[i].id ||
        letters_[i].parity != o.letters_[i].parity)
      return false;
  return true;
}

Alphabet pi_dual(const Alphabet& a) {
  std::vector<LetterInfo> ls(a.letters().rbegin(), a.letters().rend());
  return Alphabet::custom(std::move(ls));
}

Alphabet star(const Alphabet& a, const Alphabet& b) {
  std::vector<LetterInfo> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return Alphabet::custom(std::move(ls));  // custom() rejects id collisions
}

}  // namespace fock
