// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every comparison is exact; the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flagbound/arrangement.hpp"
#include "flagbound/flags.hpp"
#include "flagbound/homology.hpp"
#include "flagbound/threshold.hpp"
#include "oracles.hpp"

using namespace flagbound;

namespace {

constexpr double kGroundTruthSeconds = 600.0;
constexpr double kFlagSumN4Seconds = 300.0;
constexpr double kRationalHomologySeconds = 900.0;
constexpr double kLargeCaseSeconds = 1800.0;
constexpr std::uint64_t kSeed = 20240607;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void run(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what() << "; ";
  }
  std::string detail = c.detail.str();
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
  std::printf("%s criterion %d: %s [%.1fs] %s\n", c.ok ? "PASS" : "FAIL", number, title.c_str(), seconds_since(start),
              detail.c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

Integer lambda_of(const IntersectionLattice& lat) {
  return lambda_count(lat, OrderPermutation::identity(lat.vector_count()));
}

Integer factorial(std::size_t k) {
  Integer r = 1;
  for (std::size_t j = 2; j <= k; ++j) r *= static_cast<unsigned long>(j);
  return r;
}

}  // namespace

int main() {
  run(1, "threshold count = Zaslavsky = deletion-restriction, n = 1..4", [](Criterion& c) {
    const auto start = Clock::now();
    const long expected[] = {4, 14, 104, 1882};
    for (int n = 1; n <= 4; ++n) {
      const auto e = generate_e(n);
      const Integer brute = count_threshold_functions(n);
      const Integer zaslavsky = chamber_count(e);
      const Integer dr = chamber_count_dr(e);
      c.require(brute == zaslavsky && zaslavsky == dr, "three counts agree at n=" + std::to_string(n));
      c.require(zaslavsky == expected[n - 1], "expected value at n=" + std::to_string(n));
      c.detail << zaslavsky << " ";
    }
    c.require(seconds_since(start) <= kGroundTruthSeconds, "time limit");
  });

  run(2, "flag sum = Lambda for 10 random weight vectors, n = 1..4", [](Criterion& c) {
    std::mt19937_64 rng(kSeed);
    for (int n = 1; n <= 4; ++n) {
      const auto start = Clock::now();
      const auto lat = build_lattice(generate_e(n));
      const Rational lambda(lambda_of(lat));
      int negative = 0;
      for (int k = 0; k < 10; ++k) {
        const auto p = random_weight_vector(lat.vector_count(), rng);
        negative += p.has_negative();
        c.require(theorem1_sum(lat, p) == lambda, "identity at n=" + std::to_string(n));
      }
      c.require(negative >= 3, "at least 3 weight vectors with a negative entry");
      if (n == 4) c.require(seconds_since(start) <= kFlagSumN4Seconds, "time limit at n=4");
      c.detail << "n=" << n << " Lambda=" << lambda << " (" << negative << " negative) ";
    }
  });

  run(3, "Lambda identical over 20 random orders, |B^sigma| on 5, n = 1..4", [](Criterion& c) {
    std::mt19937_64 rng(kSeed + 3);
    for (int n = 1; n <= 4; ++n) {
      const auto e = generate_e(n);
      const auto lat = build_lattice(e);
      const Integer base = lambda_of(lat);
      for (int k = 0; k < 20; ++k) {
        const auto order = OrderPermutation::random(e.size(), rng);
        c.require(lambda_count(lat, order) == base, "order independence at n=" + std::to_string(n));
        if (k < 5) {
          c.require(Integer(static_cast<unsigned long>(basis_bsigma(e, order).size())) == base,
                    "|B^sigma| at n=" + std::to_string(n));
        }
      }
      c.detail << "n=" << n << ":" << base << " ";
    }
  });

  run(4, "|mu(0,u)| = reduced homology rank over GF(2) on every flat, n = 1..3", [](Criterion& c) {
    std::size_t flats = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto e = generate_e(n);
      const auto lat = build_lattice(e);
      for (IntersectionLattice::FlatId t = 1; t < lat.size(); ++t) {
        const Integer h(static_cast<unsigned long>(mobius_via_homology(e, lat.flat(t), Field::gf(2))));
        c.require(h == abs(lat.mobius(t)), "flat of E_" + std::to_string(n));
        ++flats;
      }
    }
    c.detail << flats << " flats";
  });

  run(5, "homology rank over GF(2), GF(3), Q = Lambda, n = 1..4", [](Criterion& c) {
    for (int n = 1; n <= 4; ++n) {
      const auto e = generate_e(n);
      const Integer lambda = lambda_of(build_lattice(e));
      for (const auto field : {Field::gf(2), Field::gf(3), Field::rationals()}) {
        const auto start = Clock::now();
        const Integer h(static_cast<unsigned long>(homology_rank(e, n - 1, field)));
        c.require(h == lambda, field.name() + " at n=" + std::to_string(n));
        if (field.is_rational()) c.require(seconds_since(start) <= kRationalHomologySeconds, "Q time limit");
      }
      c.detail << "n=" << n << ":" << lambda << " ";
    }
  });

  run(6, "admissible orders = (T-1)!/W[H] for every tuple and first vector", [](Criterion& c) {
    std::mt19937_64 rng(kSeed + 6);
    std::vector<VectorSet> sets = {generate_e(2)};
    for (int k = 0; k < 5; ++k) sets.push_back(oracle::random_vector_set(k % 2 == 0 ? 5 : 6, 3, 3, rng));
    std::size_t pairs = 0;
    for (const auto& h : sets) {
      const Integer total = factorial(h.size() - 1);
      enumerate_tuples(build_lattice(h), [&](const IndexTuple& w, const FullFlag& f) {
        for (std::size_t i = 0; i < h.size(); ++i) {
          if (f.top_members.contains(i)) continue;
          c.require(count_admissible_orders(h, w, i) * f.product == total, "count identity");
          ++pairs;
        }
      });
    }
    c.detail << sets.size() << " sets, " << pairs << " (tuple, first vector) pairs";
  });

  run(7, "lower bound = 2 Lambda <= chambers <= Schlafli, n = 1..4", [](Criterion& c) {
    std::mt19937_64 rng(kSeed + 7);
    for (int n = 1; n <= 4; ++n) {
      const auto e = generate_e(n);
      const auto lat = build_lattice(e);
      const Integer two_lambda = 2 * lambda_of(lat);
      const Integer chambers = chamber_count(lat);
      std::vector<WeightVector> ps = {WeightVector::uniform(e.size())};
      for (int k = 0; k < 5; ++k) ps.push_back(random_weight_vector(e.size(), rng));
      for (const auto& p : ps) c.require(corollary_bound(n, p) == Rational(two_lambda), "corollary = 2 Lambda");
      c.require(two_lambda <= chambers, "2 Lambda <= C");
      c.require(chambers <= schlafli_bound(n), "C <= Schlafli");
      c.detail << two_lambda << "<=" << chambers << "<=" << schlafli_bound(n) << " ";
    }
  });

  run(8, "sampled I(gamma) equals Lambda on every sample, n = 2, 3, 10^4 samples", [](Criterion& c) {
    for (int n = 2; n <= 3; ++n) {
      const auto lat = build_lattice(generate_e(n));
      const Integer lambda = lambda_of(lat);
      const auto r = monte_carlo_expectation(lat, WeightVector::uniform(lat.vector_count()), 10000, kSeed + n);
      c.require(r.samples == 10000, "sample count");
      c.require(r.min_sample == lambda && r.max_sample == lambda, "constant samples at n=" + std::to_string(n));
      c.require(r.mean == Rational(lambda), "mean at n=" + std::to_string(n));
      c.detail << "n=" << n << " mean=" << r.mean << " ";
    }
  });

  run(9, "n = 5: flag sum = Lambda, 2 Lambda <= Zaslavsky = deletion-restriction, thread independent",
      [](Criterion& c) {
        const auto start = Clock::now();
        const auto e = generate_e(5);
        const auto p = WeightVector::uniform(e.size());
        const auto lat1 = build_lattice(e, 1);
        const Rational sum1 = theorem1_sum(lat1, p, 1);
        const Integer lambda = lambda_of(lat1);
        const Integer chambers = chamber_count(lat1);
        const Integer dr = chamber_count_dr(e);
        const auto lat4 = build_lattice(e, 4);
        const Rational sum4 = theorem1_sum(lat4, p, 4);
        c.require(sum1 == Rational(lambda), "flag sum = Lambda");
        c.require(2 * lambda <= chambers, "2 Lambda <= C");
        c.require(chambers == dr, "Zaslavsky = deletion-restriction");
        c.require(lat4.size() == lat1.size() && chamber_count(lat4) == chambers && sum4 == sum1,
                  "1 and 4 threads agree");
        c.require(seconds_since(start) <= kLargeCaseSeconds, "time limit");
        c.detail << "flats=" << lat1.size() << " Lambda=" << lambda << " C=" << chambers;
      });

  run(10, "20 random sets in R^3/R^4: flag sum, order independence, chamber counts", [](Criterion& c) {
    std::mt19937_64 rng(kSeed + 10);
    for (int k = 0; k < 20; ++k) {
      const std::size_t dim = 3 + k % 2;
      const std::size_t count = dim + 1 + static_cast<std::size_t>(k % 5);
      const auto h = oracle::random_vector_set(count, dim, 3, rng);
      const auto lat = build_lattice(h);
      const Integer lambda = lambda_of(lat);
      for (int j = 0; j < 3; ++j) {
        c.require(theorem1_sum(lat, random_weight_vector(h.size(), rng)) == Rational(lambda), "flag sum");
      }
      for (int j = 0; j < 5; ++j) {
        c.require(lambda_count(lat, OrderPermutation::random(h.size(), rng)) == lambda, "order independence");
      }
      c.require(chamber_count(lat) == chamber_count_dr(h), "chamber counts");
    }
    c.detail << "20 sets";
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
