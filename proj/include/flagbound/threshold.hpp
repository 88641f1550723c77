// Threshold Boolean functions by definition: exact linear separability of
// the labelled +-1 cube, decided by Fourier-Motzkin elimination.

#ifndef FLAGBOUND_THRESHOLD_HPP
#define FLAGBOUND_THRESHOLD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "flagbound/exactlin.hpp"
#include "flagbound/flags.hpp"

namespace flagbound {

// Truth values over the 2^n inputs in the order of generate_e(n): input k has
// x_{j+1} = -1 iff bit j of k (most significant first) is set.
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<bool> truth);
  // Bit k of `table` is the value on input k (1 means f = +1).
  static BooleanFunction from_table(int n, std::uint64_t table);

  int arity() const { return n_; }
  bool value(std::size_t input) const { return truth_[input]; }
  const std::vector<bool>& truth() const { return truth_; }
  BooleanFunction negated() const;

 private:
  int n_;
  std::vector<bool> truth_;
};

// Integer row a and rational bound b of the constraint <a, x> >= b.
struct LinearInequality {
  std::vector<std::int64_t> coeffs;
  Rational bound;
};

// Feasibility of a system of non-strict inequalities over the reals.
bool fourier_motzkin_feasible(std::vector<LinearInequality> system, std::size_t variables);

// f(x) = +1 exactly when alpha_0 + sum alpha_j x_j >= 0, for some real alpha.
bool is_threshold(const BooleanFunction& f);

// Number of threshold functions of n <= 4 variables, by exhaustion.
Integer count_threshold_functions(int n, unsigned threads = 0);

struct BoundsReport {
  int n = 0;
  Rational corollary_lower_bound;
  Integer two_lambda;
  Integer chamber_count;
  std::optional<Integer> brute_force_count;
  Integer schlafli_upper_bound;

  // lower bound = 2 Lambda <= chambers <= Schlafli, and brute force = chambers.
  bool chain_holds() const;
};

// Brute force is included for n <= 4 when requested.
BoundsReport bounds_report(int n, const WeightVector& p, bool with_brute_force = true, unsigned threads = 0);
BoundsReport bounds_report(int n, bool with_brute_force = true, unsigned threads = 0);

}  // namespace flagbound

#endif  // FLAGBOUND_THRESHOLD_HPP
