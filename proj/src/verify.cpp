#include "chromsym/verify.hpp"

#include "chromsym/coloring.hpp"
#include "chromsym/errors.hpp"
#include "chromsym/gfun.hpp"
#include "chromsym/hikita.hpp"
#include "chromsym/modlaw.hpp"
#include "chromsym/orientations.hpp"
#include "chromsym/ptab.hpp"

namespace chromsym {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"egs", "x-all", "modlaw", "sink", "appendix", "paths"};
  return names;
}

namespace {

SuiteReport start(const std::string& name, int n_max) {
  SuiteReport r;
  r.suite = name;
  r.n_max = n_max;
  return r;
}

void fail(SuiteReport& r, const std::string& what) { r.failures.push_back(what); }

std::string tag(const HessFn& m) { return "m=(" + to_string(m) + ")"; }

QRat q_power(int e) { return e >= 0 ? QRat(q_pow(e)) : QRat(QPoly(1), q_pow(-e)); }

}  // namespace

SuiteReport verify_egs(int n_max) {
  SuiteReport r = start("egs", n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      ++r.checked;
      std::vector<SymFun> e;
      try {
        e = e_parts(m);
      } catch (const NotDivisible& ex) {
        fail(r, tag(m) + ": " + ex.what());
        continue;
      }
      const std::vector<SymFun> gc = g_caps(m);
      SymFun e_sum = SymFun::zero(n);
      for (int k = 1; k <= n; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        e_sum += e[ks];
        if (!(e[ks] == gc[ks])) fail(r, tag(m) + " k=" + std::to_string(k) + ": E_{m,k} != G_{m,k}");
      }
      if (!(e_sum == to_e(s_fun(m)))) fail(r, tag(m) + ": E != S");
      for (int k = 0; k < n; ++k) {
        if (!is_e_positive_at_one(g(m, k))) fail(r, tag(m) + " k=" + std::to_string(k) + ": g not e-positive at q=1");
      }
    }
  }
  return r;
}

SuiteReport verify_x_all(int n_max) {
  SuiteReport r = start("x-all", n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      ++r.checked;
      const SymFun x = to_e(x_colorings(m, std::max(n_max, kColoringMaxN)));
      if (!(x == x_hikita(m))) fail(r, tag(m) + ": colorings != transition model");
      SymFun from_g = SymFun::zero(n);
      const auto gc = g_caps(m);
      for (int k = 1; k <= n; ++k) from_g += gc[static_cast<std::size_t>(k)] * QRat(q_int(k));
      if (!(x == from_g)) fail(r, tag(m) + ": colorings != sum_k [k]_q G_{m,k}");
      if (!(x == to_e(x_schur(m)))) fail(r, tag(m) + ": colorings != P-tableau expansion");
      if (!(x == x_an(m))) fail(r, tag(m) + ": colorings != cycle sum");
    }
  }
  return r;
}

SuiteReport verify_modlaw(int n_max) {
  SuiteReport r = start("modlaw", n_max);
  const auto record = [&](const std::string& label, const LawReport& law) {
    r.checked += law.checked;
    for (const auto& v : law.violations) {
      fail(r, label + " " + to_string(v.triple.kind) + " i=" + std::to_string(v.triple.index) + " (" +
                  to_string(v.triple.m) + " | " + to_string(v.triple.m_prime) + " | " +
                  to_string(v.triple.m_dprime) + ")");
    }
  };
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      record("E_k k=" + std::to_string(k), check_restricted_modular_law([k](const HessFn& m) { return e_part(m, k); }, n));
      record("G_k k=" + std::to_string(k), check_restricted_modular_law([k](const HessFn& m) { return g_cap(m, k); }, n));
    }
    for (int k = 0; k < n; ++k) {
      record("g_k k=" + std::to_string(k), check_restricted_modular_law([k](const HessFn& m) { return g(m, k); }, n));
    }
    record("S", check_restricted_modular_law([](const HessFn& m) { return s_fun(m); }, n));
    const LawReport full = check_restricted_modular_law([](const HessFn& m) { return s_fun(m); }, n, {TripleKind::TypeII});
    int at_one = 0;
    for (const auto& v : full.violations) at_one += v.triple.index == 1 ? 1 : 0;
    if (at_one > 0) {
      r.notes.push_back("n=" + std::to_string(n) + ": S violates " + std::to_string(at_one) +
                        " unrestricted type II triples at i=1");
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      const PathCombination cert = reduce(m);
      for (Refinement ref : {Refinement::E, Refinement::G, Refinement::S}) {
        ++r.checked;
        const SymFun direct = ref == Refinement::E ? e_total(m) : ref == Refinement::G ? g_total(m) : to_e(s_fun(m));
        if (!(evaluate(cert, direct_base(ref)) == direct)) {
          fail(r, tag(m) + ": reduction does not reproduce " + std::string(to_string(ref)));
        }
      }
    }
  }
  return r;
}

SuiteReport verify_sink(int n_max) {
  SuiteReport r = start("sink", n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      ++r.checked;
      if (sink_distribution(m, SinkSource::X) != orientation_sink_distribution(m, false)) {
        fail(r, tag(m) + ": X sink distribution mismatch");
      }
      if (sink_distribution(m, SinkSource::S) != orientation_sink_distribution(m, true)) {
        fail(r, tag(m) + ": S sink distribution mismatch");
      }
      for (const auto& lambda : partitions_of(n)) {
        for (const auto& t : enumerate_pt(m, lambda, false)) {
          const Orientation o = theta_of(m, t);
          if (asc(o) != inv(m, t)) fail(r, tag(m) + " T=" + to_string(t.rows) + ": asc != inv");
          if (!is_acyclic(n, o)) fail(r, tag(m) + " T=" + to_string(t.rows) + ": theta has a cycle");
        }
      }
      for (const auto& o : enumerate_ao(m, true)) {
        const int l = static_cast<int>(sinks(n, o).size());
        smallest_sink(m, o);
        for (int i = 1; i <= l; ++i) {
          if (sink_subset_count(m, o, i) != binomial(l - 1, i - 1)) {
            fail(r, tag(m) + " i=" + std::to_string(i) + ": hook count != C(l-1, i-1)");
          }
        }
      }
    }
  }
  return r;
}

SuiteReport verify_appendix(int n_max) {
  SuiteReport r = start("appendix", n_max);
  int phi_failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& t : enumerate_syt(lambda)) {
        for (int rr = 0; rr <= n; ++rr) {
          ++r.checked;
          const DeltaVec d = delta_vec(t, rr);
          QRat psi_sum(0);
          QRat phi_sum(0);
          for (int k = 0; k <= d.l; ++k) {
            const QRat ps = psi(d, k);
            const QRat ph = phi(d, k);
            psi_sum += ps;
            phi_sum += ph;
            int e = 0;
            for (int i = k + 1; i <= d.l; ++i) e += d.b[static_cast<std::size_t>(i)];
            for (int i = 1; i <= k; ++i) e -= d.a[static_cast<std::size_t>(i)];
            if (!(ps == q_power(e) * ph)) fail(r, "T=" + to_string(t) + " r=" + std::to_string(rr) + ": psi/phi relation");
          }
          if (!(psi_sum == QRat(1))) fail(r, "T=" + to_string(t) + " r=" + std::to_string(rr) + ": sum psi != 1");
          if (!(phi_sum == QRat(1))) ++phi_failures;
        }
      }
    }
  }
  if (phi_failures > 0) fail(r, std::to_string(phi_failures) + " tableau delta-vectors with sum phi != 1");
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& m : enumerate_hess(n)) {
      ++r.checked;
      if (!check_area_relation(m)) fail(r, tag(m) + ": area relation");
      QRat total(0);
      for (const auto& [t, p] : p_table(m)) {
        total += p;
        const Rational at_one = p.eval_at(Rational(1));
        if (at_one < 0 || at_one > 1) fail(r, tag(m) + " T=" + to_string(t) + ": p(q=1) outside [0,1]");
      }
      if (!(total == QRat(1))) fail(r, tag(m) + ": total probability != 1");
    }
  }
  return r;
}

SuiteReport verify_paths(int n_max) {
  SuiteReport r = start("paths", n_max);
  for (int n = 1; n <= n_max; ++n) {
    const HessFn p = path(n);
    const auto e = e_parts(p);
    for (int k = 1; k <= n; ++k) {
      ++r.checked;
      if (!(e[static_cast<std::size_t>(k)] == path_part_closed_form(n, k))) {
        fail(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": closed form != transition model");
      }
    }
    if (n <= kPtabMaxN) {
      ++r.checked;
      if (!(to_e(s_fun(p)) == e_total(p))) fail(r, "n=" + std::to_string(n) + ": S != E on the path");
    }
    for (const auto& lambda : partitions_of(n)) {
      ++r.checked;
      QPoly rhs = lambda == Partition(static_cast<std::size_t>(n), 1) ? QPoly(1) : QPoly();
      for (const auto& mu : vertical_strips(lambda)) {
        if (mu == lambda || mu.empty()) continue;
        rhs += (q_int(size(lambda) - size(mu)) - QPoly(1)) * path_l(mu);
      }
      if (!(path_l(lambda) == rhs)) fail(r, "lambda=" + to_string(lambda) + ": path recursion");
      for (const auto& t : enumerate_pt(p, lambda, true)) {
        if (t == staircase(n)) continue;
        ++r.checked;
        const Peeled pe = path_peel(t);
        const int n_mu = size(shape_of(pe.tableau.rows));
        const HessFn pmu = n_mu > 0 ? path(n_mu) : HessFn();
        if (n_mu == 0 || inv(p, t) != inv(pmu, pe.tableau) + pe.j || !(path_unpeel(pe, lambda) == t)) {
          fail(r, "T=" + to_string(t.rows) + ": peel round trip or inv shift");
        }
      }
    }
  }
  return r;
}

SuiteReport run_suite(const std::string& name, int n_max) {
  if (name == "egs") return verify_egs(n_max);
  if (name == "x-all") return verify_x_all(n_max);
  if (name == "modlaw") return verify_modlaw(n_max);
  if (name == "sink") return verify_sink(n_max);
  if (name == "appendix") return verify_appendix(n_max);
  if (name == "paths") return verify_paths(n_max);
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace chromsym
