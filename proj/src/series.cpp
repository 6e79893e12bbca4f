#include <qindep/nu.hpp>
#include <qindep/series.hpp>

#include <numeric>
#include <sstream>

namespace qindep {

Int SignFunction::eval(int k, long n) const {
  switch (kind) {
    case Kind::Constant:
      return constant;
    case Kind::ProductKN:
      return Int(k) * Int(n);
    case Kind::DivisorCount: {
      long count = 0;
      for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
          count += 2;
          if (d * d == n) --count;
        }
      }
      return Int(count);
    }
    case Kind::EulerTotient: {
      long phi = 0;
      for (long m = 1; m <= n; ++m)
        if (std::gcd(m, n) == 1) ++phi;
      return Int(phi);
    }
    case Kind::Table: {
      if (n < 1 || static_cast<std::size_t>(n) > table.size())
        throw std::out_of_range("SignFunction table: index beyond table");
      return table[n - 1];
    }
  }
  throw std::logic_error("SignFunction: unreachable");
}

int SignFunction::sign(int k, long n) const {
  return mpz_odd_p(eval(k, n).get_mpz_t()) ? -1 : 1;
}

std::string SignFunction::describe() const {
  switch (kind) {
    case Kind::Constant:
      return "const:" + constant.get_str();
    case Kind::ProductKN:
      return "kn";
    case Kind::DivisorCount:
      return "divisors";
    case Kind::EulerTotient:
      return "totient";
    case Kind::Table:
      return "table";
  }
  return "?";
}

std::vector<Int> PrimeSpec::primes_for_checks(int count) const {
  if (single) return {p};
  if (!explicit_list.empty()) {
    std::vector<Int> out = explicit_list;
    if (static_cast<int>(out.size()) > count) out.resize(count);
    return out;
  }
  std::vector<Int> out;
  Int q = gen_start - 1;
  for (int i = 0; i < count; ++i) {
    q = next_prime(q);
    out.push_back(q);
  }
  return out;
}

Int PrimeSpec::nth(long i) const {
  if (single) {
    if (i != 1) throw std::out_of_range("PrimeSpec::nth: single prime");
    return p;
  }
  if (!explicit_list.empty()) {
    if (i < 1 || static_cast<std::size_t>(i) > explicit_list.size())
      throw std::out_of_range("PrimeSpec::nth: beyond explicit list");
    return explicit_list[i - 1];
  }
  return nth_prime_from(gen_start, i);
}

Term SeriesFamily::term(int k, long n) const {
  if (k < 1 || k > params_.K) throw std::out_of_range("SeriesFamily::term: k out of range");
  if (n < 1) throw std::out_of_range("SeriesFamily::term: n must be >= 1");
  Term t = term_(k, n);
  if (t.b == 0) throw std::domain_error("SeriesFamily: generator produced zero numerator");
  return t;
}

FactoredInteger SeriesFamily::envelope(long n) const {
  if (n < 1) throw std::out_of_range("SeriesFamily::envelope: n must be >= 1");
  FactoredInteger a = envelope_(n);
  if (a.sign() < 0) throw std::domain_error("SeriesFamily: envelope must be positive");
  return a;
}

std::vector<Int> SeriesFamily::valuations(int k, const Int& p, long H) const {
  std::vector<Int> out;
  out.reserve(H);
  for (long n = 1; n <= H; ++n) {
    ExtNat v = nu_p_factored(term(k, n).a, p);
    out.push_back(v.finite());
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::WITNESSED:
      return "WITNESSED";
    case CheckStatus::FALSIFIED:
      return "FALSIFIED";
    case CheckStatus::UNKNOWN:
      return "UNKNOWN";
  }
  return "?";
}

std::string rat_brief(const Rat& q) {
  if (q == 0) return "0";
  Rat a = rat_abs(q);
  long mag = static_cast<long>(bit_length(a.get_num())) - static_cast<long>(bit_length(a.get_den()));
  if (mag > 64) {
    // enormous: report a power-of-two window
    std::ostringstream os;
    os << (q < 0 ? "-" : "") << "~2^" << (mag - 1);
    return os.str();
  }
  if (mag < -64) {
    std::ostringstream os;
    os << (q < 0 ? "-" : "") << "~2^" << mag;
    return os.str();
  }
  // 6 fractional digits, floor semantics
  Int scaled = floor_div(a.get_num() * 1000000, a.get_den());
  Int ip = scaled / 1000000;
  Int fp = scaled % 1000000;
  std::ostringstream os;
  if (q < 0) os << "-";
  os << ip.get_str() << ".";
  std::string f = fp.get_str();
  os << std::string(6 - f.size(), '0') << f;
  return os.str();
}

std::string interval_brief(const RatInterval& iv) {
  if (iv.lo == iv.hi) return rat_brief(iv.lo);
  return "[" + rat_brief(iv.lo) + "," + rat_brief(iv.hi) + "]";
}

}  // namespace qindep
