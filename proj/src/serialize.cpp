#include "fock/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace fock {

namespace {

Json require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key: ") + key);
  return j.at(key);
}

std::vector<int> int_list(const Json& j) {
  std::vector<int> v;
  for (const auto& x : j) v.push_back(x.get<int>());
  return v;
}

}  // namespace

Json alphabet_to_json(const Alphabet& a) {
  Json j;
  if (!a.family().empty()) {
    j["family"] = a.family();
    j["window"] = {a.window_lo(), a.window_hi()};
  } else {
    Json ls = Json::array();
    for (const auto& l : a.letters())
      ls.push_back({{"id", l.id},
                    {"parity", l.parity == Parity::Odd ? "odd" : "even"}});
    j["custom"] = ls;
  }
  return j;
}

Alphabet alphabet_from_json(const Json& j) {
  try {
    if (j.contains("family")) {
      int lo = 0, hi = -1;
      if (j.contains("window")) {
        auto w = int_list(j.at("window"));
        if (w.size() != 2) throw ParseError("window must be [lo,hi]");
        lo = w[0];
        hi = w[1];
      }
      return Alphabet::preset(j.at("family").get<std::string>(), lo, hi);
    }
    std::vector<LetterInfo> ls;
    for (const auto& l : require(j, "custom")) {
      std::string parity = l.at("parity").get<std::string>();
      if (parity != "odd" && parity != "even")
        throw ParseError("parity must be odd or even");
      ls.push_back({l.at("id").get<std::string>(),
                    parity == "odd" ? Parity::Odd : Parity::Even});
    }
    return Alphabet::custom(std::move(ls));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("alphabet: ") + e.what());
  }
}

Json tableau_to_json(const SuperTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (int x : row) r.push_back(t.alphabet.id(x));
    rows.push_back(r);
  }
  return Json{{"alphabet", alphabet_to_json(t.alphabet)},
              {"outer", t.outer},
              {"inner", t.inner},
              {"rows", rows}};
}

SuperTableau tableau_from_json(const Json& j) {
  try {
    Alphabet a = alphabet_from_json(require(j, "alphabet"));
    std::vector<int> outer = int_list(require(j, "outer"));
    std::vector<int> inner = int_list(require(j, "inner"));
    std::vector<std::vector<int>> rows;
    for (const auto& row : require(j, "rows")) {
      std::vector<int> r;
      for (const auto& x : row) r.push_back(a.rank_of(x.get<std::string>()));
      rows.push_back(std::move(r));
    }
    return make_tableau(std::move(a), std::move(outer), std::move(inner),
                        std::move(rows));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("tableau: ") + e.what());
  }
}

Json rational_to_json(const RationalTableau& t) {
  Json pos = Json::array(), neg = Json::array();
  for (int i = 0; i < t.n; ++i) {
    if (t.shape[i] > 0) pos.push_back(t.rows[i]);
    if (t.shape[i] < 0) neg.push_back(t.rows[i]);
  }
  return Json{
      {"n", t.n}, {"shape", t.shape}, {"pos_rows", pos}, {"neg_rows", neg}};
}

RationalTableau rational_from_json(const Json& j) {
  try {
    int n = require(j, "n").get<int>();
    GenPartition shape = int_list(require(j, "shape"));
    std::vector<std::vector<int>> rows(shape.size());
    size_t pi = 0, ni = 0;
    Json pos = require(j, "pos_rows"), neg = require(j, "neg_rows");
    for (size_t i = 0; i < shape.size(); ++i) {
      if (shape[i] > 0) {
        if (pi >= pos.size()) throw ParseError("missing positive row");
        rows[i] = int_list(pos.at(pi++));
      } else if (shape[i] < 0) {
        if (ni >= neg.size()) throw ParseError("missing negative row");
        rows[i] = int_list(neg.at(ni++));
      }
    }
    return make_rational(n, std::move(shape), std::move(rows));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("rational: ") + e.what());
  }
}

Json psst_to_json(const Psst& t) {
  return Json{{"n", t.n},           {"shape", t.lambda},
              {"d", t.d},           {"mu", t.mu},
              {"plus", tableau_to_json(t.plus)},
              {"minus", tableau_to_json(t.minus)}};
}

Psst psst_from_json(const Json& j) {
  try {
    int n = require(j, "n").get<int>();
    int d = require(j, "d").get<int>();
    Partition mu = int_list(require(j, "mu"));
    SuperTableau plus = tableau_from_json(require(j, "plus"));
    SuperTableau minus = tableau_from_json(require(j, "minus"));
    GenPartition shape = int_list(require(j, "shape"));
    Psst p = normalize_psst(plus.alphabet, minus.alphabet, n, d, mu,
                            std::move(plus), std::move(minus));
    if (p.lambda != shape)
      throw ParseError("psst: declared shape disagrees with the fillings");
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("psst: ") + e.what());
  }
}

Json tuple_to_json(const FockTuple& t) {
  Json entries = Json::array();
  for (const Level1& x : t.entries) {
    Json plus = Json::array(), minus = Json::array();
    for (int r : x.plus) plus.push_back(t.A.id(r));
    for (int r : x.minus) minus.push_back(t.B.id(r));
    entries.push_back(
        {{"k", x.k()}, {"plus_row", plus}, {"minus_row", minus}});
  }
  return Json{{"alphabet_a", alphabet_to_json(t.A)},
              {"alphabet_b", alphabet_to_json(t.B)},
              {"entries", entries}};
}

FockTuple tuple_from_json(const Json& j) {
  try {
    FockTuple t;
    t.A = alphabet_from_json(require(j, "alphabet_a"));
    t.B = alphabet_from_json(require(j, "alphabet_b"));
    for (const auto& e : require(j, "entries")) {
      Level1 x;
      for (const auto& id : require(e, "plus_row"))
        x.plus.push_back(t.A.rank_of(id.get<std::string>()));
      for (const auto& id : require(e, "minus_row"))
        x.minus.push_back(t.B.rank_of(id.get<std::string>()));
      if (!std::is_sorted(x.plus.begin(), x.plus.end()) ||
          !std::is_sorted(x.minus.begin(), x.minus.end()))
        throw ParseError("tuple rows must be weakly increasing");
      if (e.contains("k") && e.at("k").get<int>() != x.k())
        throw ParseError("tuple entry: declared k disagrees with the rows");
      t.entries.push_back(std::move(x));
    }
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("tuple: ") + e.what());
  }
}

Json matrix_to_json(const AbMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.B.size(); ++r)
    rows.push_back({{"letter", m.B.id(r)}, {"entries", m.b_rows[r]}});
  for (int r = 0; r < m.A.size(); ++r)
    rows.push_back({{"letter", m.A.id(r)}, {"entries", m.a_rows[r]}});
  return Json{{"n", m.n},
              {"alphabet_a", alphabet_to_json(m.A)},
              {"alphabet_b", alphabet_to_json(m.B)},
              {"rows", rows}};
}

AbMatrix matrix_from_json(const Json& j) {
  try {
    AbMatrix m;
    m.A = alphabet_from_json(require(j, "alphabet_a"));
    m.B = alphabet_from_json(require(j, "alphabet_b"));
    m.n = require(j, "n").get<int>();
    m.a_rows.assign(m.A.size(), std::vector<int>(m.n, 0));
    m.b_rows.assign(m.B.size(), std::vector<int>(m.n, 0));
    for (const auto& row : require(j, "rows")) {
      std::string id = require(row, "letter").get<std::string>();
      std::vector<int> entries = int_list(require(row, "entries"));
      if (static_cast<int>(entries.size()) != m.n)
        throw ParseError("matrix row length != n");
      bool in_a = true;
      int rank = -1;
      try {
        rank = m.A.rank_of(id);
      } catch (const ParseError&) {
        in_a = false;
        rank = m.B.rank_of(id);
      }
      (in_a ? m.a_rows : m.b_rows)[rank] = entries;
    }
    return m;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

std::string tableau_to_text(const SuperTableau& t) {
  std::ostringstream os;
  if (t.box_count() == 0) return "  (empty)\n";
  for (int i = 0; i < t.row_count(); ++i) {
    if (t.outer[i] == 0 && t.inner[i] == 0 && i >= 1 && t.outer[i - 1] == 0)
      continue;
    os << "  ";
    for (int c = 0; c < t.inner[i]; ++c) os << ". ";
    for (int x : t.rows[i]) os << t.alphabet.id(x) << " ";
    os << "\n";
  }
  return os.str();
}

std::string rational_to_text(const RationalTableau& t) {
  std::ostringstream os;
  os << "  shape (";
  for (int i = 0; i < t.n; ++i) os << t.shape[i] << (i + 1 < t.n ? "," : "");
  os << ")\n";
  for (int i = 0; i < t.n; ++i) {
    if (t.rows[i].empty()) continue;
    os << "  row " << i + 1 << ": ";
    for (int e : t.rows[i]) os << e << " ";
    os << "\n";
  }
  return os.str();
}

std::string psst_to_text(const Psst& t) {
  std::ostringstream os;
  os << "  lambda (";
  for (int i = 0; i < t.n; ++i) os << t.lambda[i] << (i + 1 < t.n ? "," : "");
  os << "), d=" << t.d << ", mu (";
  for (int i = 0; i < t.n; ++i) os << t.mu[i] << (i + 1 < t.n ? "," : "");
  os << ")\n T+:\n" << tableau_to_text(t.plus) << " T-:\n"
     << tableau_to_text(t.minus);
  return os.str();
}

}  // namespace fock
