#include <qindep/poly.hpp>

#include <sstream>

namespace qindep {

long IntPolynomial::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(total_degree(e)));
  return d;
}

void IntPolynomial::add_term(Exponents e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("IntPolynomial::add_term: exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int IntPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(std::move(e), c1 * c2);
    }
  }
  return r;
}

IntPolynomial IntPolynomial::negated() const {
  IntPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
  IntPolynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
  return r;
}

namespace {

template <typename T>
std::vector<std::vector<T>> power_table(const std::vector<T>& point, const IntPolynomial& p) {
  std::vector<unsigned> maxe(p.nvars(), 0);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < p.nvars(); ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<T>> pows(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    pows[i].resize(maxe[i] + 1);
    pows[i][0] = T(1);
    for (unsigned j = 1; j <= maxe[i]; ++j) pows[i][j] = pows[i][j - 1] * point[i];
  }
  return pows;
}

}  // namespace

Rat IntPolynomial::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("IntPolynomial::evaluate: dimension mismatch");
  auto pows = power_table(point, *this);
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t(c);
    for (int i = 0; i < nvars_; ++i) t *= pows[i][e[i]];
    acc += t;
  }
  return acc;
}

Int IntPolynomial::evaluate_int(const std::vector<Int>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("IntPolynomial::evaluate_int: dimension mismatch");
  auto pows = power_table(point, *this);
  Int acc(0);
  for (const auto& [e, c] : terms_) {
    Int t(c);
    for (int i = 0; i < nvars_; ++i) t *= pows[i][e[i]];
    acc += t;
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative(int var) const {
  IntPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(std::move(d), c * Int(e[var]));
  }
  return r;
}

IntPolynomial IntPolynomial::substitute(int var, const IntPolynomial& value) const {
  if (value.nvars() != nvars_)
    throw std::invalid_argument("IntPolynomial::substitute: arity mismatch");
  // Horner in the substituted variable.
  unsigned maxe = 0;
  for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[var]);
  std::vector<IntPolynomial> coeffs(maxe + 1, IntPolynomial(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    coeffs[e[var]].add_term(std::move(rest), c);
  }
  IntPolynomial acc = coeffs[maxe];
  for (long j = static_cast<long>(maxe) - 1; j >= 0; --j) acc = acc * value + coeffs[j];
  return acc;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    Int a = ::abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int IntPolynomial::sum_abs_coeffs() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += ::abs(c);
  return s;
}

std::string IntPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = ::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(e) > 0;
    bool printed = false;
    if (a != 1 || !has_vars) {
      os << a.get_str();
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::pair<Exponents, Int> colex_leading(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("colex_leading: zero polynomial");
  auto it = p.terms().rbegin();
  return {it->first, it->second};
}

Rat lipschitz_constant(const IntPolynomial& p, const Rat& R) {
  if (R < 1) throw std::invalid_argument("lipschitz_constant: requires R >= 1");
  long d = std::max(p.degree(), 1L);
  Rat rp = make_rat(pow_ui(Int(R.get_num()), d - 1), pow_ui(Int(R.get_den()), d - 1));
  return Rat(Int(d)) * Rat(Int(p.nvars())) * rp * Rat(p.sum_abs_coeffs());
}

HomogPolynomial::HomogPolynomial(IntPolynomial p) : poly_(std::move(p)), degree_(poly_.degree()) {
  if (poly_.is_zero()) throw std::domain_error("HomogPolynomial: zero polynomial");
  for (const auto& [e, c] : poly_.terms())
    if (static_cast<long>(total_degree(e)) != degree_)
      throw std::invalid_argument("HomogPolynomial: input is not homogeneous");
}

HomogPolynomial homogenize(const IntPolynomial& p) {
  if (p.nvars() != 2) throw std::invalid_argument("homogenize: expects a bivariate polynomial");
  if (p.is_zero()) throw std::domain_error("homogenize: zero polynomial");
  long D = p.degree();
  IntPolynomial q(3);
  for (const auto& [e, c] : p.terms()) {
    Exponents h = {e[0], e[1], static_cast<unsigned>(D - e[0] - e[1])};
    q.add_term(std::move(h), c);
  }
  return HomogPolynomial(std::move(q));
}

IntPolynomial dehomogenize(const HomogPolynomial& q) {
  int n = q.nvars();
  IntPolynomial p(n - 1);
  for (const auto& [e, c] : q.poly().terms()) {
    Exponents r(e.begin(), e.end() - 1);
    p.add_term(std::move(r), c);
  }
  return p;
}

}  // namespace qindep
