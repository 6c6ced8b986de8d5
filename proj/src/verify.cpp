#include "fock/verify.hpp"

#include <algorithm>
#include <sstream>

#include "fock/crystal.hpp"
#include "fock/energy.hpp"
#include "fock/psst.hpp"
#include "fock/serialize.hpp"
#include "fock/symfunc.hpp"

namespace fock {

namespace {

std::string describe_tuple(const FockTuple& t) {
  return tuple_to_json(t).dump();
}

// Iterate all tuples of length n whose entries have <= max_boxes boxes.
void for_each_tuple(const VerifyConfig& cfg, int n,
                    const std::function<bool(const FockTuple&)>& f) {
  std::vector<Level1> elems =
      enumerate_level1_by_boxes(cfg.A, cfg.B, cfg.max_boxes);
  FockTuple t;
  t.A = cfg.A;
  t.B = cfg.B;
  t.entries.resize(n);
  std::vector<size_t> idx(n, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return f(t);
    for (const Level1& x : elems) {
      t.entries[i] = x;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

SuiteReport suite_bijection(const VerifyConfig& cfg) {
  SuiteReport r{"bijection", true, 0, ""};
  for (int n : cfg.levels) {
    for_each_tuple(cfg, n, [&](const FockTuple& t) {
      KappaResult kr = kappa(t);
      ++r.checked;
      if (kr.p.lambda != kr.q.shape || !validate_rational(kr.q)) {
        r.pass = false;
        r.detail = "kappa output malformed on " + describe_tuple(t);
        return false;
      }
      // weight preservation
      WeightAB lhs;
      for (const Level1& x : t.entries)
        for (const auto& [k, v] : weight_ab(t.A, t.B, x)) lhs[k] += v;
      for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second == 0 ? lhs.erase(it) : std::next(it);
      if (!(lhs == weight_ab(kr.p))) {
        r.pass = false;
        r.detail = "kappa changed wt_{A/B} on " + describe_tuple(t);
        return false;
      }
      std::vector<int> wq = weight_rational(kr.q);
      for (int j = 0; j < n; ++j)
        if (wq[j] != t.entries[j].k()) {
          r.pass = false;
          r.detail = "kappa changed wt_{[n]} on " + describe_tuple(t);
          return false;
        }
      FockTuple back = kappa_inverse(kr.p, kr.q);
      if (!(back.entries == t.entries)) {
        r.pass = false;
        r.detail = "kappa round trip failed on " + describe_tuple(t);
        return false;
      }
      return true;
    });
    if (!r.pass) return r;
  }
  return r;
}

SuiteReport suite_energy_charge(const VerifyConfig& cfg) {
  SuiteReport r{"energy-charge", true, 0, ""};
  for (int n : cfg.levels) {
    for_each_tuple(cfg, n, [&](const FockTuple& t) {
      ++r.checked;
      long long d = global_d(t);
      KappaResult kr = kappa(t);
      int c = charge(kr.q);
      if (d != -c) {
        r.pass = false;
        std::ostringstream os;
        os << "D = " << d << " but charge(Q_T) = " << c << " on "
           << describe_tuple(t);
        r.detail = os.str();
        return false;
      }
      if (d != d_via_roots(t) || tuple_charge(t) != c) {
        r.pass = false;
        r.detail = "root-sum route disagrees on " + describe_tuple(t);
        return false;
      }
      return true;
    });
    if (!r.pass) return r;
  }
  return r;
}

SuiteReport suite_crystal_isom(const VerifyConfig& cfg) {
  SuiteReport r{"crystal-isom", true, 0, ""};
  for (int n : cfg.levels) {
    for_each_tuple(cfg, n, [&](const FockTuple& t) {
      KappaResult kr = kappa(t);
      for (int j = 1; j <= n - 1; ++j) {
        for (bool lowering : {false, true}) {
          ++r.checked;
          auto tx = lowering ? f_tilde(t, j) : e_tilde(t, j);
          auto qx = lowering ? f_tilde(kr.q, j) : e_tilde(kr.q, j);
          if (tx.has_value() != qx.has_value()) {
            r.pass = false;
            r.detail = "null mismatch on " + describe_tuple(t);
            return false;
          }
          if (!tx) continue;
          KappaResult krx = kappa(*tx);
          if (!(krx.p == kr.p) || !(krx.q == *qx)) {
            r.pass = false;
            std::ostringstream os;
            os << (lowering ? "f_" : "e_") << j
               << " does not commute with kappa on " << describe_tuple(t);
            r.detail = os.str();
            return false;
          }
        }
      }
      return true;
    });
    if (!r.pass) return r;
  }
  return r;
}

SuiteReport suite_cauchy(const VerifyConfig& cfg) {
  SuiteReport r{"cauchy", true, 0, ""};
  struct Case {
    Alphabet a, b;
  };
  std::vector<Case> cases;
  cases.push_back({Alphabet::preset("Z'>=0", 0, 1), Alphabet::preset("Z'<0", -1, -1)});
  cases.push_back({Alphabet::custom({{"1", Parity::Even}, {"2'", Parity::Odd}}),
                   Alphabet::custom({{"b", Parity::Even}})});
  cases.push_back(
      {Alphabet::custom({{"1", Parity::Even}, {"2'", Parity::Odd}, {"3", Parity::Even}}),
       Alphabet::custom({{"b1'", Parity::Odd}, {"b2", Parity::Even}})});
  for (const Case& c : cases) {
    for (int n = 1; n <= cfg.cauchy_n; ++n) {
      CompareResult cr = cauchy_check(c.a, c.b, n, cfg.degree_box);
      ++r.checked;
      if (!cr.ok) {
        r.pass = false;
        r.detail = "cauchy mismatch at n=" + std::to_string(n) + ": " +
                   cr.mismatch;
        return r;
      }
    }
  }
  return r;
}

SuiteReport suite_kf_equivalence(const VerifyConfig& cfg) {
  SuiteReport r{"kf-equivalence", true, 0, ""};
  int n = cfg.kf_n;
  for (int m = 0; m <= cfg.kf_size; ++m) {
    for (const Partition& lap : partitions_of(m, n, m)) {
      GenPartition la = pad(lap, n);
      auto table = kostka_charge_table(la, n);
      for (const Partition& mup : partitions_of(m, n, m)) {
        GenPartition mu = pad(mup, n);
        ++r.checked;
        QPoly via_charge =
            table.count(mu) ? table.at(mu) : QPoly();
        QPoly via_hl = kostka_foulkes_hl(la, mu, n);
        if (!(via_charge == via_hl)) {
          r.pass = false;
          std::ostringstream os;
          os << "K mismatch: charge " << via_charge.to_string() << " vs HL "
             << via_hl.to_string();
          r.detail = os.str();
          return r;
        }
        // K(1) counts the tableaux
        long long count = 0;
        Alphabet al = Alphabet::preset("[" + std::to_string(n) + "]");
        std::vector<int> outer = la;
        for (const SuperTableau& t :
             enumerate_sst(al, outer, std::vector<int>(n, 0))) {
          std::vector<int> wt(n, 0);
          for (const auto& row : t.rows)
            for (int rk : row) wt[rk]++;
          if (wt == mu) ++count;
        }
        if (via_charge.eval_at_one() != count) {
          r.pass = false;
          r.detail = "K(1) != |SST(lambda)_mu|";
          return r;
        }
      }
    }
  }
  return r;
}

SuiteReport suite_rmatrix_braid(const VerifyConfig& cfg) {
  SuiteReport r{"rmatrix-braid", true, 0, ""};
  std::vector<Level1> elems =
      enumerate_level1_by_boxes(cfg.A, cfg.B, cfg.max_boxes);
  // pair-level: involution, phi-eps lemma, sigma = S, H = -min(eps, phi)
  for (const Level1& x : elems) {
    for (const Level1& y : elems) {
      ++r.checked;
      auto [u, v] = r_matrix(cfg.A, cfg.B, x, y);
      auto [x2, y2] = r_matrix(cfg.A, cfg.B, u, v);
      if (!(x2 == x) || !(y2 == y)) {
        r.pass = false;
        r.detail = "sigma not involutive";
        return r;
      }
      FockTuple p;
      p.A = cfg.A;
      p.B = cfg.B;
      p.entries = {x, y};
      int h = local_h(cfg.A, cfg.B, x, y);
      if (h != -std::min(tuple_eps(p, 1), tuple_phi(p, 1))) {
        r.pass = false;
        r.detail = "H != -min(eps, phi) on " + describe_tuple(p);
        return r;
      }
      FockTuple sp = tuple_weyl_s(p, 1);
      if (!(sp.entries[0] == u) || !(sp.entries[1] == v)) {
        r.pass = false;
        r.detail = "sigma != Weyl S on " + describe_tuple(p);
        return r;
      }
    }
  }
  // triple-level: braid relation and D-invariance
  FockTuple t;
  t.A = cfg.A;
  t.B = cfg.B;
  t.entries.resize(3);
  for (const Level1& a : elems)
    for (const Level1& b : elems)
      for (const Level1& c : elems) {
        ++r.checked;
        t.entries = {a, b, c};
        FockTuple lhs = apply_r(apply_r(apply_r(t, 1), 2), 1);
        FockTuple rhs = apply_r(apply_r(apply_r(t, 2), 1), 2);
        if (!(lhs.entries == rhs.entries)) {
          r.pass = false;
          r.detail = "braid relation failed on " + describe_tuple(t);
          return r;
        }
        long long d = global_d(t);
        if (d != global_d(apply_r(t, 1)) || d != global_d(apply_r(t, 2))) {
          r.pass = false;
          r.detail = "D not sigma-invariant on " + describe_tuple(t);
          return r;
        }
      }
  return r;
}

SuiteReport suite_charge(const VerifyConfig& cfg) {
  SuiteReport r{"charge", true, 0, ""};
  int n = cfg.charge_n;
  std::vector<int> letters;
  for (int v = 1; v <= n; ++v) letters.push_back(v);
  for (int len = 0; len <= cfg.charge_len; ++len) {
    std::vector<int> w(len, 1);
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == len) {
        std::vector<int> content(n, 0);
        for (int l : w) content[l - 1]++;
        if (!weakly_decreasing(content)) return true;
        ++r.checked;
        int ls = charge_ls(w, n);
        int rs = charge(w, n);
        if (ls != rs) {
          r.pass = false;
          std::ostringstream os;
          os << "charge_LS = " << ls << " but root-sum = " << rs << " on word";
          for (int l : w) os << " " << l;
          r.detail = os.str();
          return false;
        }
        return true;
      }
      for (int l : letters) {
        w[i] = l;
        if (!rec(i + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) return r;
  }
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bijection",      "energy-charge", "crystal-isom", "cauchy",
          "kf-equivalence", "rmatrix-braid", "charge"};
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "bijection") return suite_bijection(cfg);
  if (name == "energy-charge") return suite_energy_charge(cfg);
  if (name == "crystal-isom") return suite_crystal_isom(cfg);
  if (name == "cauchy") return suite_cauchy(cfg);
  if (name == "kf-equivalence") return suite_kf_equivalence(cfg);
  if (name == "rmatrix-braid") return suite_rmatrix_braid(cfg);
  if (name == "charge") return suite_charge(cfg);
  throw ValidationError("unknown verify suite: " + name);
}

}  // namespace fock
