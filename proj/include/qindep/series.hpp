#pragma once

#include <qindep/factored.hpp>
#include <qindep/primes.hpp>

#include <functional>
#include <string>
#include <vector>

namespace qindep {

// (-1)^f(n) sign selectors from the examples, plus user tables.
struct SignFunction {
  enum class Kind { Constant, ProductKN, DivisorCount, EulerTotient, Table };
  Kind kind = Kind::ProductKN;
  Int constant = 0;
  std::vector<Int> table;

  Int eval(int k, long n) const;
  int sign(int k, long n) const;  // (-1)^eval
  std::string describe() const;
};

struct Term {
  Int b;
  FactoredInteger a;
};

// Declared tail behavior of |b_{k,n}/a_{k,n}|; set by the builtin generators
// (true by construction) and used to certify geometric/integral majorants
// beyond the horizon. User table families leave it at None.
struct TailShape {
  enum class Kind { None, Squaring, Geometric, Power };
  Kind kind = Kind::None;
  Int param = 0;    // Geometric: ratio >= 2; Power: exponent s >= 2
  long from_n = 1;  // property declared for n >= from_n
  Int b_bound = 1;  // |b_{k,n}| <= b_bound
};

struct PrimeSpec {
  bool single = true;
  Int p = 2;         // when single
  Int gen_start = 3; // generator: increasing primes >= gen_start
  std::vector<Int> explicit_list;  // non-empty: finite user-given set

  // Primes the finite-horizon checkers iterate over.
  std::vector<Int> primes_for_checks(int count) const;
  // i-th prime (1-based) of the generator view.
  Int nth(long i) const;
};

struct SeriesParams {
  int K = 1;
  int d = 1;
  Rat epsilon = Rat(1);
  Rat kappa = make_rat(1, 2);
  Int A = 4;  // base for hkl5'/limsup-A checks
  PrimeSpec primes;
  // finite-horizon policy knobs
  Rat growth_factor = Rat(2);
  Rat growth_threshold = Rat(1);
  Int distinct_C = 0;
  int primes_checked = 3;
};

// Generator family (b_{k,n}, a_{k,n}) with envelope a_n. Generators are pure
// in (k, n); the family is immutable after construction.
class SeriesFamily {
 public:
  using TermFn = std::function<Term(int k, long n)>;
  using EnvFn = std::function<FactoredInteger(long n)>;

  SeriesFamily(std::string name, SeriesParams params, TermFn term, EnvFn envelope,
               TailShape tail = {})
      : name_(std::move(name)),
        params_(std::move(params)),
        term_(std::move(term)),
        envelope_(std::move(envelope)),
        tail_(tail) {}

  const std::string& name() const { return name_; }
  int K() const { return params_.K; }
  const SeriesParams& params() const { return params_; }
  const TailShape& tail_shape() const { return tail_; }

  // Never returns zero components (throws if a generator misbehaves).
  Term term(int k, long n) const;
  FactoredInteger envelope(long n) const;  // positive

  // nu_p(a_{k,n}) for n = 1..H (finite; terms are nonzero).
  std::vector<Int> valuations(int k, const Int& p, long H) const;

 private:
  std::string name_;
  SeriesParams params_;
  TermFn term_;
  EnvFn envelope_;
  TailShape tail_;
};

enum class CheckStatus { WITNESSED, FALSIFIED, UNKNOWN };

std::string to_string(CheckStatus s);

// Finite-horizon verdict for one hypothesis. FALSIFIED always carries a
// concrete counterexample index; WITNESSED carries witnessing indices where
// meaningful. stats holds the raw per-index statistic so users can judge
// limit-type verdicts themselves.
struct CheckReport {
  std::string condition;
  long horizon = 0;
  long window_lo = 0, window_hi = 0;
  CheckStatus status = CheckStatus::UNKNOWN;
  std::vector<long> witnesses;
  std::string detail;
  std::vector<std::pair<long, std::string>> stats;
  std::vector<CheckReport> children;
};

// Decimal rendering of an exact rational for report statistics (6 fractional
// digits; huge magnitudes fall back to a power-of-two bracket).
std::string rat_brief(const Rat& q);
std::string interval_brief(const RatInterval& iv);

}  // namespace qindep
