#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fock/crystal.hpp"
#include "fock/energy.hpp"
#include "fock/psst.hpp"
#include "fock/serialize.hpp"
#include "fock/symfunc.hpp"
#include "fock/verify.hpp"

namespace {

constexpr const char* kSchema = "fock-energy/1";

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerify = 4;

struct CliError {
  int code;
  std::string message;
};

fock::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitParse, "cannot open " + path};
  fock::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CliError{kExitParse, std::string("bad JSON: ") + e.what()};
  }
  return j;
}

// "Z'>=0:0..3", "[4]", "empty", or @file.json
fock::Alphabet parse_alphabet_spec(const std::string& spec) {
  if (spec.empty() || spec == "empty") return fock::Alphabet();
  if (spec[0] == '@') return fock::alphabet_from_json(load_json(spec.substr(1)));
  auto colon = spec.find(':');
  std::string family = spec.substr(0, colon);
  int lo = 0, hi = -1;
  if (colon != std::string::npos) {
    std::string w = spec.substr(colon + 1);
    auto dots = w.find("..");
    if (dots == std::string::npos)
      throw CliError{kExitParse, "window must look like lo..hi"};
    try {
      lo = std::stoi(w.substr(0, dots));
      hi = std::stoi(w.substr(dots + 2));
    } catch (const std::exception&) {
      throw CliError{kExitParse, "bad window in alphabet spec"};
    }
  }
  return fock::Alphabet::preset(family, lo, hi);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CliError{kExitParse, "bad integer list: " + s};
    }
  }
  return v;
}

int thread_cap() {
  if (const char* env = std::getenv("FOCK_ENERGY_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

struct Options {
  std::string format = "text";
  unsigned seed = 1;
};

void emit(const Options& opt, const fock::Json& payload,
          const std::function<void()>& text) {
  if (opt.format == "json") {
    fock::Json j = payload;
    j["schema"] = kSchema;
    std::cout << j.dump(2) << "\n";
  } else {
    text();
  }
}

int cmd_rsk(const Options& opt, const std::string& input, bool inverse) {
  fock::Json j = load_json(input);
  if (!inverse) {
    fock::FockTuple t = fock::tuple_from_json(j);
    fock::KappaResult kr = fock::kappa(t);
    fock::Json out{{"lambda", kr.p.lambda},
                   {"P", fock::psst_to_json(kr.p)},
                   {"Q", fock::rational_to_json(kr.q)}};
    emit(opt, out, [&] {
      std::cout << "lambda:";
      for (int x : kr.p.lambda) std::cout << " " << x;
      std::cout << "\nP_T:\n" << fock::psst_to_text(kr.p);
      std::cout << "Q_T:\n" << fock::rational_to_text(kr.q);
      std::cout << "wt_{A/B}:";
      for (const auto& [key, v] : fock::weight_ab(kr.p)) {
        const auto& [in_a, rank] = key;
        std::cout << " " << (in_a ? kr.p.A.id(rank) : kr.p.B.id(rank)) << ":"
                  << v;
      }
      std::cout << "\nwt_[n]:";
      for (int x : fock::weight_rational(kr.q)) std::cout << " " << x;
      std::cout << "\n";
    });
    return kExitOk;
  }
  fock::Psst p = fock::psst_from_json(j.at("P"));
  fock::RationalTableau q = fock::rational_from_json(j.at("Q"));
  fock::FockTuple t = fock::kappa_inverse(p, q);
  emit(opt, fock::tuple_to_json(t), [&] {
    for (int i = 0; i < t.n(); ++i) {
      std::cout << "T" << i + 1 << ": +[";
      for (size_t c = 0; c < t.entries[i].plus.size(); ++c)
        std::cout << (c ? " " : "") << t.A.id(t.entries[i].plus[c]);
      std::cout << "] -[";
      for (size_t c = 0; c < t.entries[i].minus.size(); ++c)
        std::cout << (c ? " " : "") << t.B.id(t.entries[i].minus[c]);
      std::cout << "]\n";
    }
  });
  return kExitOk;
}

int cmd_energy(const Options& opt, const std::string& input, bool check,
               int random_count, int max_boxes) {
  std::vector<fock::FockTuple> tuples;
  if (random_count > 0) {
    fock::Json j = load_json(input);
    fock::FockTuple base = fock::tuple_from_json(j);
    auto elems =
        fock::enumerate_level1_by_boxes(base.A, base.B, max_boxes);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < random_count; ++i) {
      fock::FockTuple t = base;
      for (auto& e : t.entries) e = elems[pick(rng)];
      tuples.push_back(std::move(t));
    }
  } else {
    tuples.push_back(fock::tuple_from_json(load_json(input)));
  }
  bool all_ok = true;
  for (const fock::FockTuple& t : tuples) {
    long long d = fock::global_d(t);
    fock::KappaResult kr = fock::kappa(t);
    int c = fock::charge(kr.q);
    fock::Json hterms = fock::Json::array();
    int n = t.n();
    for (int j2 = 2; j2 <= n; ++j2) {
      fock::FockTuple v = t;
      for (int i = j2 - 1; i >= 1; --i) {
        if (i < j2 - 1) v = fock::apply_r(v, i + 1);
        int h = fock::local_h(t.A, t.B, v.entries[i - 1], v.entries[i]);
        hterms.push_back({{"i", i}, {"j", j2}, {"H", h}});
      }
    }
    bool ok = (d == -c);
    all_ok = all_ok && ok;
    fock::Json out{{"D", d}, {"charge_Q", c}, {"H_terms", hterms},
                   {"check", ok}};
    emit(opt, out, [&] {
      std::cout << "D = " << d << "\n";
      for (const auto& h : hterms)
        std::cout << "  H_" << h.at("i").get<int>() << " (j="
                  << h.at("j").get<int>() << "): " << h.at("H").get<int>()
                  << "\n";
      std::cout << "charge(Q_T) = " << c << "\n";
      if (check)
        std::cout << "check D = -charge(Q_T): " << (ok ? "pass" : "FAIL")
                  << "\n";
    });
  }
  return check && !all_ok ? kExitVerify : kExitOk;
}

int cmd_charge(const Options& opt, const std::string& input, int n) {
  fock::Json j = load_json(input);
  fock::Word w;
  for (const auto& x : j) w.push_back(x.get<int>());
  int c = fock::charge(w, n);
  fock::Json out{{"charge", c}};
  bool has_ls = false;
  int ls = 0;
  try {
    ls = fock::charge_ls(w, n);
    has_ls = true;
    out["charge_ls"] = ls;
  } catch (const fock::ValidationError&) {
  }
  emit(opt, out, [&] {
    std::cout << "charge = " << c << "\n";
    if (has_ls) std::cout << "charge_LS = " << ls << "\n";
  });
  return kExitOk;
}

int cmd_rmatrix(const Options& opt, const std::string& input) {
  fock::FockTuple t = fock::tuple_from_json(load_json(input));
  if (t.n() != 2)
    throw CliError{kExitValidation, "rmatrix expects a tuple of length 2"};
  int h = fock::local_h(t.A, t.B, t.entries[0], t.entries[1]);
  auto [u, v] = fock::r_matrix(t.A, t.B, t.entries[0], t.entries[1]);
  fock::FockTuple res = t;
  res.entries = {u, v};
  fock::Json out{{"H", h}, {"result", fock::tuple_to_json(res)}};
  emit(opt, out, [&] {
    std::cout << "H = " << h << "\n";
    for (int i = 0; i < 2; ++i) {
      std::cout << "slot " << i + 1 << ": +[";
      for (size_t c = 0; c < res.entries[i].plus.size(); ++c)
        std::cout << (c ? " " : "") << t.A.id(res.entries[i].plus[c]);
      std::cout << "] -[";
      for (size_t c = 0; c < res.entries[i].minus.size(); ++c)
        std::cout << (c ? " " : "") << t.B.id(res.entries[i].minus[c]);
      std::cout << "]\n";
    }
  });
  return kExitOk;
}

int cmd_kostka(const Options& opt, const std::string& lambda_s,
               const std::string& mu_s, int n, bool cross_check) {
  fock::GenPartition la = fock::pad(parse_int_list(lambda_s), n);
  if (opt.format == "csv" || mu_s.empty()) {
    auto table = fock::kostka_charge_table(la, n);
    std::cout << "mu,K\n";
    for (const auto& [mu, k] : table) {
      std::ostringstream ms;
      for (size_t i = 0; i < mu.size(); ++i) ms << (i ? " " : "") << mu[i];
      std::cout << "\"" << ms.str() << "\"," << "\"" << k.to_string()
                << "\"\n";
      if (cross_check && !(fock::kostka_foulkes_hl(la, mu, n) == k))
        return kExitVerify;
    }
    return kExitOk;
  }
  fock::GenPartition mu = fock::pad(parse_int_list(mu_s), n);
  fock::QPoly k = fock::kostka_foulkes_charge(la, mu, n);
  bool ok = true;
  if (cross_check) ok = fock::kostka_foulkes_hl(la, mu, n) == k;
  fock::Json out{{"K", k.to_string()}, {"cross_check", ok}};
  emit(opt, out, [&] {
    std::cout << "K_{lambda mu}(q) = " << k.to_string() << "\n";
    if (cross_check)
      std::cout << "cross-check (Hall-Littlewood solve): "
                << (ok ? "pass" : "FAIL") << "\n";
  });
  return cross_check && !ok ? kExitVerify : kExitOk;
}

int cmd_schur(const Options& opt, const std::string& lambda_s, int n) {
  fock::GenPartition la = fock::pad(parse_int_list(lambda_s), n);
  fock::GradedPoly s = fock::schur(la, n);
  emit(opt, fock::Json{{"schur", s.to_string()}},
       [&] { std::cout << s.to_string() << "\n"; });
  return kExitOk;
}

int cmd_hl(const Options& opt, const std::string& mu_s, int n) {
  fock::GenPartition mu = fock::pad(parse_int_list(mu_s), n);
  fock::GradedPoly p = fock::hall_littlewood(mu, n);
  emit(opt, fock::Json{{"hall_littlewood", p.to_string()}},
       [&] { std::cout << p.to_string() << "\n"; });
  return kExitOk;
}

int cmd_enumerate(const Options& opt, const std::string& a_spec,
                  const std::string& b_spec, int n, const std::string& shape_s,
                  int d_max) {
  fock::Alphabet a = parse_alphabet_spec(a_spec);
  fock::Alphabet b = parse_alphabet_spec(b_spec);
  fock::GenPartition la = fock::pad(parse_int_list(shape_s), n);
  long long count = 0;
  fock::visit_psst(a, b, n, la, {d_max}, [&](const fock::Psst& t) {
    ++count;
    if (opt.format == "json")
      std::cout << fock::psst_to_json(t).dump() << "\n";
    else
      std::cout << "#" << count << "\n" << fock::psst_to_text(t);
    return true;
  });
  if (opt.format != "json") std::cout << "total: " << count << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite, int max_boxes,
               int degree_box) {
  fock::VerifyConfig cfg;
  if (max_boxes > 0) cfg.max_boxes = max_boxes;
  if (degree_box > 0) cfg.degree_box = degree_box;
  std::vector<std::string> names;
  if (suite == "all")
    names = fock::suite_names();
  else
    names = {suite};
  std::vector<fock::SuiteReport> reports(names.size());
  int cap = thread_cap();
  if (cap > 1 && names.size() > 1) {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < cap; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < names.size(); i = next++)
          reports[i] = fock::run_suite(names[i], cfg);
      });
    for (auto& th : pool) th.join();
  } else {
    for (size_t i = 0; i < names.size(); ++i)
      reports[i] = fock::run_suite(names[i], cfg);
  }
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.suite < b.suite; });
  bool all = true;
  fock::Json out = fock::Json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    out.push_back({{"suite", r.suite},
                   {"pass", r.pass},
                   {"checked", r.checked},
                   {"detail", r.detail}});
  }
  emit(opt, fock::Json{{"results", out}}, [&] {
    for (const auto& r : reports) {
      const auto pass = r.pass;
      std::cout << (pass ? "[PASS] " : "[FAIL] ") << r.suite << " ("
                << r.checked << " checks)";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << "\n";
    }
  });
  return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial energy functions on Fock space tableaux"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", opt.seed, "seed for randomized suites");

  std::string input, mu_s, lambda_s, shape_s;
  std::string a_spec = "Z'>=0:0..3", b_spec = "Z'<0:-3..-1";
  int n = 3, d_max = 2, random_count = 0, max_boxes = 0, degree_box = 0;
  bool inverse = false, check = false, cross_check = false;

  auto* rsk = app.add_subcommand("rsk", "kappa correspondence");
  rsk->add_option("input", input, "FockTuple JSON file (or {P,Q} with --inverse)")
      ->required();
  rsk->add_flag("--inverse", inverse, "run kappa inverse");

  auto* energy = app.add_subcommand("energy", "combinatorial energy D");
  energy->add_option("input", input, "FockTuple JSON file")->required();
  energy->add_flag("--check", check, "assert D = -charge(Q_T)");
  energy->add_option("--random", random_count,
                     "check this many random tuples with the input's alphabets");
  energy->add_option("--max-boxes", max_boxes, "box bound for --random");

  auto* charge_cmd = app.add_subcommand("charge", "charge of a word");
  charge_cmd->add_option("input", input, "JSON array of signed letters")
      ->required();
  charge_cmd->add_option("--n", n, "rank")->required();

  auto* rmatrix = app.add_subcommand("rmatrix", "combinatorial R-matrix");
  rmatrix->add_option("input", input, "length-2 FockTuple JSON file")
      ->required();

  auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
  kostka->add_option("--lambda", lambda_s, "partition, e.g. 2,1")->required();
  kostka->add_option("--mu", mu_s, "weight (omit for the whole table)");
  kostka->add_option("--n", n, "rank")->required();
  kostka->add_flag("--cross-check", cross_check,
                   "also run the Hall-Littlewood solve");

  auto* schur_cmd = app.add_subcommand("schur", "Laurent Schur polynomial");
  schur_cmd->add_option("--lambda", lambda_s, "generalized partition")
      ->required();
  schur_cmd->add_option("--n", n, "rank")->required();

  auto* hl = app.add_subcommand("hl", "Hall-Littlewood polynomial");
  hl->add_option("--mu", mu_s, "generalized partition")->required();
  hl->add_option("--n", n, "rank")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list PSST of a shape");
  enumerate->add_option("--alphabet-a", a_spec, "e.g. Z'>=0:0..3 or [4]");
  enumerate->add_option("--alphabet-b", b_spec, "e.g. Z'<0:-3..-1 or empty");
  enumerate->add_option("--n", n, "level")->required();
  enumerate->add_option("--shape", shape_s, "generalized partition")
      ->required();
  enumerate->add_option("--bound-d", d_max, "witness bound");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "bijection|energy-charge|crystal-isom|"
                                     "cauchy|kf-equivalence|rmatrix-braid|"
                                     "charge|all")
      ->required();
  verify->add_option("--max-boxes", max_boxes, "tuple window box bound");
  verify->add_option("--degree-box", degree_box, "polynomial degree box");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rsk->parsed()) return cmd_rsk(opt, input, inverse);
    if (energy->parsed())
      return cmd_energy(opt, input, check, random_count,
                        max_boxes > 0 ? max_boxes : 4);
    if (charge_cmd->parsed()) return cmd_charge(opt, input, n);
    if (rmatrix->parsed()) return cmd_rmatrix(opt, input);
    if (kostka->parsed()) return cmd_kostka(opt, lambda_s, mu_s, n, cross_check);
    if (schur_cmd->parsed()) return cmd_schur(opt, lambda_s, n);
    if (hl->parsed()) return cmd_hl(opt, mu_s, n);
    if (enumerate->parsed())
      return cmd_enumerate(opt, a_spec, b_spec, n, shape_s, d_max);
    if (verify->parsed()) return cmd_verify(opt, suite, max_boxes, degree_box);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const fock::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const fock::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
