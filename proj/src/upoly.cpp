#include <qindep/upoly.hpp>

#include <sstream>

namespace qindep {

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::negated() const {
  std::vector<Int> r = c_;
  for (Int& v : r) v = -v;
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Int& v) const {
  if (v == 0) return UPoly();
  std::vector<Int> r = c_;
  for (Int& x : r) x *= v;
  return UPoly(std::move(r));
}

UPoly UPoly::shifted(std::size_t k) const {
  if (is_zero()) return UPoly();
  std::vector<Int> r(c_.size() + k, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return UPoly(std::move(r));
}

Int UPoly::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rat UPoly::eval_rat(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
  return UPoly(std::move(r));
}

Int UPoly::content() const {
  Int g = 0;
  for (const Int& v : c_) {
    Int a = ::abs(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int UPoly::sum_abs() const {
  Int s = 0;
  for (const Int& v : c_) s += ::abs(v);
  return s;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return UPoly();
  Int g = content();
  if (lc() < 0) g = -g;
  std::vector<Int> r = c_;
  for (Int& v : r) v /= g;
  return UPoly(std::move(r));
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Int a = ::abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << "-";
      first = false;
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool try_divide_exact(const UPoly& a, const UPoly& b, UPoly* quotient) {
  if (b.is_zero()) throw std::invalid_argument("try_divide_exact: division by zero");
  if (a.is_zero()) {
    if (quotient) *quotient = UPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
  long db = b.degree();
  for (long i = a.degree(); i >= db;) {
    const Int& top = rem[i];
    if (top == 0) {
      --i;
      continue;
    }
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return false;
    Int t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    q[i - db] = t;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= t * b.coeff(j);
    --i;
  }
  for (const Int& v : rem)
    if (v != 0) return false;
  if (quotient) *quotient = UPoly(std::move(q));
  return true;
}

UPoly pseudo_rem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero");
  UPoly r = a;
  long db = b.degree();
  if (r.degree() < db) return r;
  long steps = r.degree() - db + 1;
  for (long s = 0; s < steps && r.degree() >= db; ++s) {
    // r <- lc(b)*r - lc(r)*x^(dr-db)*b
    Int lr = r.lc();
    UPoly shifted_b = b.shifted(r.degree() - db);
    r = r.scaled(b.lc()) - shifted_b.scaled(lr);
  }
  return r;
}

UPoly gcd_upoly(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.lc() < 0 ? b.negated() : b;
  if (b.is_zero()) return a.lc() < 0 ? a.negated() : a;
  Int cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  UPoly g1 = a.primitive_part();
  UPoly g2 = b.primitive_part();
  if (g1.degree() < g2.degree()) std::swap(g1, g2);
  while (!g2.is_zero()) {
    UPoly r = pseudo_rem(g1, g2).primitive_part();
    g1 = std::move(g2);
    g2 = std::move(r);
  }
  return g1.scaled(cont);
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() == 0) return out;
  UPoly a = gcd_upoly(f, f.derivative());
  UPoly b, c;
  if (!try_divide_exact(f, a, &b) ) throw std::logic_error("squarefree: gcd does not divide");
  if (!try_divide_exact(f.derivative(), a, &c)) throw std::logic_error("squarefree: gcd does not divide f'");
  int i = 1;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly ai = gcd_upoly(b, d);
    if (ai.degree() > 0) out.emplace_back(ai.primitive_part(), i);
    UPoly b2, c2;
    if (!try_divide_exact(b, ai, &b2)) throw std::logic_error("squarefree: step division failed");
    if (!try_divide_exact(d, ai, &c2)) throw std::logic_error("squarefree: step division failed (d)");
    b = std::move(b2);
    d = c2 - b.derivative();
    ++i;
  }
  return out;
}

namespace modp {

Poly reduce(const UPoly& f, const Int& p) {
  Poly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int v = f.coeff(i) % p;
    if (v < 0) v += p;
    r[i] = v;
  }
  normalize(r);
  return r;
}

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, const Int& p) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  for (Int& v : r) v %= p;
  normalize(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Int& p) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (Int& v : r) {
    v %= p;
    if (v < 0) v += p;
  }
  normalize(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (Int& v : r) {
    v %= p;
    if (v < 0) v += p;
  }
  normalize(r);
  return r;
}

namespace {

Int inv_mod(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("inv_mod: not invertible");
  return r;
}

}  // namespace

void divmod(const Poly& a, const Poly& b, const Int& p, Poly* q, Poly* r) {
  if (b.empty()) throw std::invalid_argument("modp::divmod: division by zero");
  Poly rem = a;
  long db = degree(b);
  Int binv = inv_mod(b.back(), p);
  Poly quo(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Int(0));
  while (degree(rem) >= db) {
    long dr = degree(rem);
    Int t = (rem.back() * binv) % p;
    quo[dr - db] = t;
    for (long j = 0; j <= db; ++j) {
      Int v = (rem[dr - db + j] - t * b[j]) % p;
      if (v < 0) v += p;
      rem[dr - db + j] = v;
    }
    normalize(rem);
  }
  normalize(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

Poly monic(const Poly& f, const Int& p) {
  if (f.empty()) return f;
  Int s = inv_mod(f.back(), p);
  Poly r = f;
  for (Int& v : r) v = (v * s) % p;
  return r;
}

Poly gcd(Poly a, Poly b, const Int& p) {
  while (!b.empty()) {
    Poly r;
    divmod(a, b, p, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

void xgcd(Poly a, Poly b, const Int& p, Poly* g, Poly* s, Poly* t) {
  Poly s0 = {Int(1)}, s1 = {};
  Poly t0 = {}, t1 = {Int(1)};
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, p, &q, &r);
    a = std::move(b);
    b = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // normalize gcd monic
  if (!a.empty()) {
    Int sc = inv_mod(a.back(), p);
    for (Int& v : a) v = (v * sc) % p;
    for (Int& v : s0) v = (v * sc) % p;
    for (Int& v : t0) v = (v * sc) % p;
  }
  if (g) *g = std::move(a);
  if (s) *s = std::move(s0);
  if (t) *t = std::move(t0);
}

Poly powmod(const Poly& base, const Int& e, const Poly& mod_, const Int& p) {
  Poly result = {Int(1)};
  Poly acc = base;
  Poly tmp;
  divmod(acc, mod_, p, nullptr, &tmp);
  acc = std::move(tmp);
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) {
      result = mul(result, acc, p);
      Poly r2;
      divmod(result, mod_, p, nullptr, &r2);
      result = std::move(r2);
    }
    acc = mul(acc, acc, p);
    Poly a2;
    divmod(acc, mod_, p, nullptr, &a2);
    acc = std::move(a2);
    exp >>= 1;
  }
  return result;
}

}  // namespace modp

}  // namespace qindep
