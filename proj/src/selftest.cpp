#include "statmon/selftest.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "statmon/extremal.hpp"
#include "statmon/monogamy.hpp"
#include "statmon/npartite.hpp"
#include "statmon/observables.hpp"
#include "statmon/spectrum.hpp"
#include "statmon/states.hpp"

namespace statmon {

namespace {

constexpr double kPi = std::numbers::pi;

struct Suite {
  std::vector<SelftestCheck> results;

  // body returns an empty string on success, a failure detail otherwise.
  void run(const char* module, const char* name, const std::function<std::string()>& body) {
    SelftestCheck check{module, name, false, ""};
    try {
      check.detail = body();
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(check));
  }
};

std::string fail_if(bool bad, const std::string& detail) { return bad ? detail : std::string(); }

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

ScenarioGraph parse_graph(int n, std::initializer_list<const char*> fixed_plus,
                          std::initializer_list<const char*> free) {
  ScenarioGraph g;
  g.n = n;
  for (const char* p : fixed_plus) g.fixed.emplace(Pair::parse(p), Sign::kPlus);
  for (const char* p : free) g.free.push_back(Pair::parse(p));
  return g;
}

void group_core_checks(Suite& s) {
  s.run("group_core", "exchange operators are involutions (n <= 5)", [] {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& p : canonical_pairs(n)) {
        const auto op = exchange_operator(n, p);
        if (op.mapping * op.mapping != BasisPermutation::identity(op.mapping.dimension())) {
          return "Pi_" + p.str() + " squared is not identity at n = " + std::to_string(n);
        }
        if (op.mapping.fixed_points() != 0) return "Pi_" + p.str() + " has fixed points";
      }
    }
    return std::string();
  });
  s.run("group_core", "exchange matrices are symmetric", [] {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& p : canonical_pairs(n)) {
        const Eigen::MatrixXd m = exchange_operator(n, p).dense();
        if (m != m.transpose()) return "Pi_" + p.str() + " not symmetric";
      }
    }
    return std::string();
  });
  s.run("group_core", "S = Pi_AB Pi_BC = Pi_AC Pi_AB = Pi_BC Pi_AC, S^3 = I", [] {
    const auto ab = exchange_operator(3, Pair::parse("AB")).mapping;
    const auto bc = exchange_operator(3, Pair::parse("BC")).mapping;
    const auto ac = exchange_operator(3, Pair::parse("AC")).mapping;
    const auto cyc = cyclic_operator();
    return fail_if(!(cyc == ab * bc && cyc == ac * ab && cyc == bc * ac &&
                     power(cyc, 3) == BasisPermutation::identity(6)),
                   "cyclic identities broken");
  });
  s.run("group_core", "spectrum of S is {1, w, w^2} x2", [] {
    const auto spec = cyclic_spectrum(cyclic_operator());
    for (const auto& e : spec.entries) {
      if (e.multiplicity != 2) return std::string("multiplicity differs from 2");
    }
    return std::string();
  });
  s.run("group_core", "Pi_XY spectrum is +1 x3, -1 x3", [] {
    for (const auto& p : canonical_pairs(3)) {
      const auto spec = symmetric_spectrum(exchange_operator(3, p).dense());
      if (spec.multiplicity(1.0) != 3 || spec.multiplicity(-1.0) != 3) return "Pi_" + p.str();
    }
    return std::string();
  });
  s.run("group_core", "word/index round trip (n <= 7)", [] {
    for (int n = kMinBoxes; n <= kMaxBoxes; ++n) {
      const auto& ord = BasisOrdering::canonical(n);
      for (std::size_t i = 0; i < ord.dimension(); ++i) {
        if (word_to_index(index_to_word(i, ord), ord) != i) return "n = " + std::to_string(n);
      }
    }
    return std::string();
  });
}

void states_checks(Suite& s) {
  s.run("states", "|+> and |-> are +-1 eigenvectors of every Pi", [] {
    const auto plus = named_state(NamedKind::kSymPlus);
    const auto minus = named_state(NamedKind::kAntisymMinus);
    for (const auto& p : canonical_pairs(3)) {
      const auto op = exchange_operator(3, p);
      if ((apply(op, plus).amplitudes() - plus.amplitudes()).norm() > 1e-12) return "plus, " + p.str();
      if ((apply(op, minus).amplitudes() + minus.amplitudes()).norm() > 1e-12) return "minus, " + p.str();
    }
    return std::string();
  });
  s.run("states", "named states are normalized", [] {
    for (auto k : {NamedKind::kSymPlus, NamedKind::kAntisymMinus, NamedKind::kEq5, NamedKind::kEq6,
                   NamedKind::kPhiEq23, NamedKind::kNontransitive35}) {
      if (std::abs(named_state(k).amplitudes().norm() - 1.0) > 1e-12) return NamedState{k, {}}.str();
    }
    return std::string();
  });
  s.run("states", "random mixtures are valid density matrices", [] {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const std::array<PureState, 3> parts{random_pure_state(3, rng), random_pure_state(3, rng),
                                           random_pure_state(3, rng)};
      const std::array<double, 3> w{0.2, 0.3, 0.5};
      (void)MixedState::mixture(w, parts);
    }
    return std::string();
  });
}

void observables_checks(Suite& s) {
  s.run("observables", "W-algebra identities (1e-12)", [] {
    const auto& f = w_frame();
    double worst = 0.0;
    worst = std::max(worst, max_abs_entry(commutator(f.W1, f.W2)));
    worst = std::max(worst, max_abs_entry(commutator(f.W1, f.W3)));
    worst = std::max(worst, max_abs_entry(f.W1 * f.W2));
    worst = std::max(worst, max_abs_entry(f.W1 * f.W3));
    worst = std::max(worst, max_abs_entry(anticommutator(f.W2, f.W3)));
    worst = std::max(worst, max_abs_entry(f.W2 * f.W2 - f.W3 * f.W3));
    for (double theta : {0.3, 1.7, 4.0}) {
      const Eigen::MatrixXd wt = w_theta(theta);
      worst = std::max(worst, max_abs_entry(wt * wt - f.W2 * f.W2));
    }
    return fail_if(worst > kAlgebraTolerance, "max entry " + num(worst));
  });
  s.run("observables", "W1, W2, W3 eigenvalues lie in {1, 0, -1}", [] {
    const auto& f = w_frame();
    for (const Eigen::MatrixXd* m : {&f.W1, &f.W2, &f.W3}) {
      const auto spec = symmetric_spectrum(*m);
      for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        const double x = spec.eigenvalues(i);
        if (std::min({std::abs(x - 1.0), std::abs(x), std::abs(x + 1.0)}) > 1e-12) return "eigenvalue " + num(x);
      }
    }
    const auto w1 = symmetric_spectrum(f.W1);
    return fail_if(w1.multiplicity(0.0) != 4 || w1.multiplicity(1.0) != 1, "W1 multiplicities");
  });
  s.run("observables", "v entries in [-1, 1]; <W_i> = w_i . v", [] {
    std::mt19937_64 rng(11);
    const auto& f = w_frame();
    for (int trial = 0; trial < 2000; ++trial) {
      const auto psi = random_pure_state(3, rng);
      const Eigen::Vector3d v = v_vector(psi).triple();
      if (v.cwiseAbs().maxCoeff() > 1.0 + 1e-9) return std::string("v outside cube");
      if (std::abs(expectation(psi, f.W1) - f.w1.dot(v)) > 1e-10 ||
          std::abs(expectation(psi, f.W2) - f.w2.dot(v)) > 1e-10 ||
          std::abs(expectation(psi, f.W3) - f.w3.dot(v)) > 1e-10) {
        return std::string("w_i . v mismatch");
      }
    }
    return std::string();
  });
  s.run("observables", "perfect statistics are transitive", [] {
    const std::array<Constraint, 2> bos{Constraint{Pair::parse("AB"), Sign::kPlus},
                                        Constraint{Pair::parse("BC"), Sign::kPlus}};
    const std::array<Constraint, 2> fer{Constraint{Pair::parse("AB"), Sign::kMinus},
                                        Constraint{Pair::parse("BC"), Sign::kMinus}};
    std::mt19937_64 rng(3);
    for (const auto* cs : {&bos, &fer}) {
      const auto space = joint_eigenspace(3, *cs);
      const double expected = to_double((*cs)[0].value);
      for (int trial = 0; trial < 100; ++trial) {
        const auto r = random_pure_state(3, rng);
        const Eigen::VectorXcd proj = space.projector().cast<std::complex<double>>() * r.amplitudes();
        const auto psi = normalize(3, proj);
        if (std::abs(v_vector(psi).at(Pair::parse("AC")) - expected) > 1e-9) return std::string("v_AC");
      }
    }
    return std::string();
  });
  s.run("observables", "<Pi> = 1 - t  <=>  |Pi psi - psi| = sqrt(2 t)", [] {
    std::mt19937_64 rng(5);
    const auto op = exchange_operator(3, Pair::parse("AB"));
    const auto base = named_state(NamedKind::kEq5);
    for (double eps : {1e-2, 1e-4, 1e-6}) {
      const auto noise = random_pure_state(3, rng);
      const auto psi = normalize(3, base.amplitudes() + eps * noise.amplitudes());
      const double t = 1.0 - expectation(psi, op);
      const double dist = (apply(op, psi).amplitudes() - psi.amplitudes()).norm();
      if (std::abs(dist - std::sqrt(2.0 * std::max(t, 0.0))) > 1e-7) return "eps " + num(eps);
    }
    return std::string();
  });
}

void monogamy_checks(Suite& s) {
  s.run("monogamy", "720-point theta grid matches the sqrt form (2e-5)", [] {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::Vector3d v(u(rng), u(rng), u(rng));
      const auto check = region_check(v, kDefaultThetaGrid);
      const double gap = std::abs((3.0 - check.theta_margin) / 3.0 - (1.0 - check.sqrt_margin));
      if (gap > 2e-5) return "gap " + num(gap);
    }
    return std::string();
  });
  s.run("monogamy", "check_sqrt(v) = check_sqrt(-v)", [] {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const Eigen::Vector3d v(u(rng), u(rng), u(rng));
      if (check_sqrt(v) != check_sqrt(-v)) return std::string("asymmetric");
    }
    return std::string();
  });
  s.run("monogamy", "boundary is invariant under rotation about w1", [] {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> t(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> ph(0.0, kPi / 2.0);
    for (int trial = 0; trial < 100; ++trial) {
      const auto point = surface_state(t(rng), ph(rng), trial % 2 ? Sign::kPlus : Sign::kMinus,
                                       trial % 3 ? Sign::kPlus : Sign::kMinus);
      const Eigen::Vector3d r = rotate_about_w1(point.v, t(rng));
      if (std::abs(check_sqrt(r)) > 1e-9) return std::string("rotated point left the boundary");
    }
    return std::string();
  });
  s.run("monogamy", "apexes at +-(1, 1, 1)", [] {
    return fail_if(std::abs(check_sqrt(Eigen::Vector3d(1, 1, 1))) > 1e-15 ||
                       std::abs(check_sqrt(Eigen::Vector3d(-1, -1, -1))) > 1e-15,
                   "apex margin nonzero");
  });
  s.run("monogamy", "audit: 10^4 pure + 10^3 mixed, zero violations", [] {
    const auto report = region_audit({10000, 1000, 42});
    return fail_if(report.violations != 0 || report.min_margin < -1e-9, "min margin " + num(report.min_margin));
  });
  s.run("monogamy", "surface mesh lies on the boundary", [] {
    const auto mesh = surface_mesh(16, 8);
    for (const auto& p : mesh.points) {
      if (std::abs(check_sqrt(p.v)) > 1e-9) return std::string("off-boundary point");
    }
    return std::string();
  });
}

void extremal_checks(Suite& s) {
  s.run("extremal", "eigenvalue bounds every sampled c . v", [] {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::VectorXd c = Eigen::Vector3d(g(rng), g(rng), g(rng));
      const auto best = max_expectation({3, c});
      double sampled = -1e300;
      for (int k = 0; k < 2000; ++k) sampled = std::max(sampled, c.dot(v_vector(random_pure_state(3, rng)).values));
      if (sampled > best.value + 1e-9) return std::string("sample exceeds eigenvalue");
    }
    return std::string();
  });
  s.run("extremal", "constrained <= unconstrained; results physical", [] {
    const Objective obj{3, Eigen::Vector3d(0.3, -1.0, 0.5)};
    const auto free = max_expectation(obj);
    for (const char* text : {"AB=1", "AB=-1", "BC=1", "AC=-1"}) {
      const auto cs = parse_constraints(text);
      const auto r = constrained_extremal(cs, obj);
      if (r.value > free.value + 1e-9) return std::string("constrained exceeds free: ") + text;
      if (check_sqrt(r.v.triple()) < -1e-9) return std::string("unphysical result: ") + text;
    }
    return std::string();
  });
  s.run("extremal", "projector is idempotent and commutes with constraints", [] {
    const auto cs = parse_constraints("AB=1,CD=1");
    const Eigen::MatrixXd p = joint_eigenspace(4, cs).projector();
    double worst = max_abs_entry(p * p - p);
    for (const auto& c : cs) worst = std::max(worst, max_abs_entry(commutator(p, exchange_operator(4, c.pair).dense())));
    return fail_if(worst > 1e-10, "max entry " + num(worst));
  });
}

void npartite_checks(Suite& s) {
  s.run("npartite", "two fixed edges AB, CD: constrained route gives 2 (cross terms -1/2)", [] {
    const auto cs = parse_constraints("AB=1,CD=1");
    const auto r = constrained_extremal(cs, Objective::parse(4, "AC:-1,AD:-1,BC:-1,BD:-1"));
    const auto spec = spectral_bound(parse_graph(4, {"AB", "CD"}, {"AC", "AD", "BC", "BD"}));
    return fail_if(std::abs(r.value - 2.0) > 1e-9 || std::abs(*spec.spectral_bound - 0.5) > 1e-9,
                   "value " + num(r.value));
  });
  s.run("npartite", "fixed triangle ABC: bosonic triangle keeps cross v >= -1/3", [] {
    const auto space = joint_eigenspace(4, parse_constraints("AB=1,AC=1,BC=1"));
    const Eigen::MatrixXcd p = space.projector().cast<std::complex<double>>();
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 5000; ++trial) {
      const auto psi = normalize(4, p * random_pure_state(4, rng).amplitudes());
      const auto v = v_vector(psi);
      const double low = std::min({v.at(Pair::parse("AD")), v.at(Pair::parse("BD")), v.at(Pair::parse("CD"))});
      if (low < -1.0 / 3.0 - 1e-9) return "cross v " + num(low);
    }
    return std::string();
  });
  s.run("npartite", "fixed triangle ABC: triangles give 1/2, spectrum 1/3", [] {
    const auto r = scenario_report(parse_graph(4, {"AB", "AC", "BC"}, {"AD", "BD", "CD"}));
    return fail_if(std::abs(*r.triangle_bound - 0.5) > 1e-9 || std::abs(*r.spectral_bound - 1.0 / 3.0) > 1e-9 ||
                       !r.improvement,
                   "bounds differ");
  });
  s.run("npartite", "sampled states respect the spectral bounds", [] {
    std::mt19937_64 rng(31);
    for (const auto& g : {parse_graph(4, {"AB", "CD"}, {"AC", "AD", "BC", "BD"}),
                          parse_graph(4, {"AB", "AC", "BC"}, {"AD", "BD", "CD"})}) {
      const double bound = *spectral_bound(g).spectral_bound;
      std::vector<Constraint> cs;
      for (const auto& [pair, sign] : g.fixed) cs.push_back({pair, sign});
      const Eigen::MatrixXcd p = joint_eigenspace(4, cs).projector().cast<std::complex<double>>();
      for (int trial = 0; trial < 2000; ++trial) {
        const auto v = v_vector(normalize(4, p * random_pure_state(4, rng).amplitudes()));
        double mean = 0.0;
        for (const auto& pair : g.free) mean += v.at(pair) / static_cast<double>(g.free.size());
        if (mean < -bound - 1e-9) return "mean free v " + num(mean);
      }
    }
    return std::string();
  });
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  Suite suite;
  group_core_checks(suite);
  states_checks(suite);
  observables_checks(suite);
  monogamy_checks(suite);
  extremal_checks(suite);
  npartite_checks(suite);
  return suite.results;
}

}  // namespace statmon
