#include "flagbound/verify.hpp"

#include <random>
#include <sstream>

#include "flagbound/arrangement.hpp"
#include "flagbound/flags.hpp"
#include "flagbound/homology.hpp"
#include "flagbound/threshold.hpp"

namespace flagbound {

namespace {

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

class Suite {
 public:
  void record(std::string name, bool passed, std::string detail) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

void verify_one(int m, VerifyLevel level, std::uint64_t seed, unsigned threads, Suite& suite) {
  const bool full = level == VerifyLevel::full;
  const std::string tag = cat("[n=", m, "] ");
  const VectorSet e = generate_e(m);
  const IntersectionLattice lattice = build_lattice(e, threads);
  const Integer lambda = lambda_count(lattice, OrderPermutation::identity(e.size()));
  const Integer chambers = chamber_count(lattice);
  const Integer chambers_dr = chamber_count_dr(e);
  std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(m));

  if (m <= 4) {
    const Integer brute = count_threshold_functions(m, threads);
    suite.record(tag + "threshold count = Zaslavsky = deletion-restriction", brute == chambers && chambers == chambers_dr,
                 cat(brute, " / ", chambers, " / ", chambers_dr));
  } else {
    suite.record(tag + "Zaslavsky = deletion-restriction", chambers == chambers_dr, cat(chambers, " / ", chambers_dr));
  }

  {
    const std::size_t trials = m == 5 ? 1 : (full ? 10 : 5);
    bool ok = theorem1_sum(lattice, WeightVector::uniform(e.size()), threads) == Rational(lambda);
    std::size_t negative = 0;
    for (std::size_t k = 0; k < trials && m < 5; ++k) {
      const WeightVector p = random_weight_vector(e.size(), rng);
      negative += p.has_negative();
      ok = ok && theorem1_sum(lattice, p, threads) == Rational(lambda);
    }
    suite.record(tag + "flag sum = Lambda for every weight vector", ok,
                 cat("Lambda = ", lambda, ", ", trials, " random weight vectors (", negative, " with a negative entry)"));
  }

  if (m <= 3) {
    const WeightVector p = random_weight_vector(e.size(), rng);
    suite.record(tag + "grouped flag sum = per-tuple reference",
                 theorem1_sum(lattice, p, threads) == theorem1_sum_reference(lattice, p), "exact rationals");
  }

  suite.record(tag + "2 Lambda <= chambers <= Schlafli",
               2 * lambda <= chambers && chambers <= schlafli_bound(m),
               cat(2 * lambda, " <= ", chambers, " <= ", schlafli_bound(m)));

  if (m == 5) return;

  {
    const std::size_t orders = full ? 20 : 5;
    bool ok = true;
    bool basis_ok = true;
    for (std::size_t k = 0; k < orders; ++k) {
      const auto gamma = OrderPermutation::random(e.size(), rng);
      ok = ok && lambda_count(lattice, gamma) == lambda;
      if (k < 5) basis_ok = basis_ok && Integer(static_cast<unsigned long>(basis_bsigma(e, gamma).size())) == lambda;
    }
    suite.record(tag + "Lambda independent of the order", ok, cat(orders, " random orders"));
    suite.record(tag + "|B^sigma| = Lambda", basis_ok, "5 orders");
  }

  {
    bool ok = true;
    const std::vector<Field> fields = {Field::gf(2), Field::gf(3), Field::rationals()};
    std::ostringstream detail;
    for (const auto& field : fields) {
      const std::size_t r = homology_rank(e, m - 1, field);
      detail << field.name() << "=" << r << " ";
      ok = ok && Integer(static_cast<unsigned long>(r)) == lambda;
    }
    suite.record(tag + "homology rank = Lambda over GF(2), GF(3), Q", ok, detail.str());
  }

  if (m <= 3) {
    bool ok = true;
    std::size_t checked = 0;
    for (std::size_t id = 1; id < lattice.size(); ++id) {
      const auto fid = static_cast<IntersectionLattice::FlatId>(id);
      const Integer via_h(static_cast<unsigned long>(mobius_via_homology(e, lattice.flat(fid), Field::gf(2))));
      ok = ok && via_h == abs(lattice.mobius(fid));
      ++checked;
    }
    suite.record(tag + "|mu(0,u)| = reduced homology rank for every flat", ok, cat(checked, " flats"));
  }

  if (m <= (full ? 3 : 2)) {
    bool ok = true;
    std::size_t pairs = 0;
    Integer factorial = 1;
    for (std::size_t k = 2; k < e.size(); ++k) factorial *= static_cast<unsigned long>(k);
    enumerate_tuples(lattice, [&](const IndexTuple& w, const FullFlag& flag) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (flag.top_members.contains(i)) continue;
        ok = ok && count_admissible_orders(e, w, i) * flag.product == factorial;
        ++pairs;
      }
    });
    suite.record(tag + "admissible orders = (T-1)!/W[H]", ok, cat(pairs, " (tuple, first vector) pairs"));
  }

  if (m == 2 || m == 3) {
    const std::size_t samples = full ? 10000 : 1000;
    const auto mc = monte_carlo_expectation(lattice, WeightVector::uniform(e.size()), samples, seed);
    suite.record(tag + "sampled I(gamma) constant = Lambda",
                 mc.min_sample == lambda && mc.max_sample == lambda && mc.mean == Rational(lambda),
                 cat(samples, " samples, mean ", mc.mean, ", stderr ~", mc.standard_error));
  }
}

}  // namespace

std::vector<CheckResult> run_verification(int n, VerifyLevel level, std::uint64_t seed, unsigned threads) {
  const int cap = level == VerifyLevel::fast ? 3 : 5;
  if (n < 1 || n > cap) {
    throw GuardViolation(level == VerifyLevel::fast ? "verify.fast.n" : "verify.full.n", cap, n);
  }
  Suite suite;
  for (int m = 1; m <= n; ++m) verify_one(m, level, seed, threads, suite);
  return suite.take();
}

}  // namespace flagbound
