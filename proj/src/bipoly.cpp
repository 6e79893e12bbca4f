#include <qindep/bipoly.hpp>

#include <algorithm>

namespace qindep {

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("divide_exact: arity mismatch");
  IntPolynomial rem = a;
  IntPolynomial quo(a.nvars());
  auto [be, bc] = colex_leading(b);
  while (!rem.is_zero()) {
    auto [le, lc] = colex_leading(rem);
    Exponents diff(le.size());
    for (std::size_t i = 0; i < le.size(); ++i) {
      if (le[i] < be[i]) return std::nullopt;
      diff[i] = le[i] - be[i];
    }
    if (!mpz_divisible_p(lc.get_mpz_t(), bc.get_mpz_t())) return std::nullopt;
    Int t;
    mpz_divexact(t.get_mpz_t(), lc.get_mpz_t(), bc.get_mpz_t());
    IntPolynomial mono = IntPolynomial::monomial(diff, t);
    quo.add_term(std::move(diff), t);
    rem = rem - mono * b;
  }
  return quo;
}

UPoly to_upoly(const IntPolynomial& p, int var) {
  std::vector<Int> c;
  for (const auto& [e, coeff] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("to_upoly: not univariate in var");
    if (e[var] >= c.size()) c.resize(e[var] + 1, Int(0));
    c[e[var]] = coeff;
  }
  return UPoly(std::move(c));
}

IntPolynomial from_upoly(const UPoly& f, int nvars, int var) {
  IntPolynomial p(nvars);
  for (long i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    Exponents e(nvars, 0);
    e[var] = static_cast<unsigned>(i);
    p.add_term(std::move(e), f.coeff(i));
  }
  return p;
}

namespace {

bool depends_on(const IntPolynomial& p, int var) {
  for (const auto& [e, c] : p.terms())
    if (e[var] != 0) return true;
  return false;
}

// Kronecker image P(x, x^M); injective on exponents since deg_x P < M.
UPoly kronecker_image(const IntPolynomial& p, unsigned long M) {
  std::vector<Int> c;
  for (const auto& [e, coeff] : p.terms()) {
    unsigned long idx = e[0] + M * e[1];
    if (idx >= c.size()) c.resize(idx + 1, Int(0));
    c[idx] = coeff;
  }
  return UPoly(std::move(c));
}

IntPolynomial deinterleave(const UPoly& f, unsigned long M) {
  IntPolynomial p(2);
  for (long i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    Exponents e = {static_cast<unsigned>(i % M), static_cast<unsigned>(i / M)};
    p.add_term(std::move(e), f.coeff(i));
  }
  return p;
}

IntPolynomial primitive_with_positive_lead(const IntPolynomial& p, Int* unit_content) {
  Int cont = p.content();
  if (colex_leading(p).second < 0) cont = -cont;
  if (unit_content) *unit_content = cont;
  IntPolynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c / cont);
  return out;
}

}  // namespace

BiFactorization factor_bivariate(const IntPolynomial& p_in) {
  if (p_in.nvars() != 2) throw std::invalid_argument("factor_bivariate: expects 2 variables");
  if (p_in.is_zero()) throw std::invalid_argument("factor_bivariate: zero polynomial");
  BiFactorization out;
  IntPolynomial p = primitive_with_positive_lead(p_in, &out.content);
  if (p.degree() == 0) return out;

  // Univariate shortcut when only one variable occurs.
  for (int var = 0; var < 2; ++var) {
    if (!depends_on(p, 1 - var)) {
      UFactorization uf = factor_upoly(to_upoly(p, var));
      for (auto& [f, m] : uf.factors) out.factors.emplace_back(from_upoly(f, 2, var), m);
      return out;
    }
  }

  unsigned long degx = 0;
  for (const auto& [e, c] : p.terms()) degx = std::max<unsigned long>(degx, e[0]);
  unsigned long M = degx + 1;

  UFactorization uf = factor_upoly(kronecker_image(p, M));
  // p primitive with positive colex-leading coefficient maps to a primitive
  // image with positive lc.
  if (uf.content != 1) throw std::logic_error("factor_bivariate: image content not 1");

  // Remaining multiplicity pool of univariate irreducible factors.
  std::vector<UPoly> fs;
  std::vector<int> avail;
  for (auto& [f, m] : uf.factors) {
    fs.push_back(f);
    avail.push_back(m);
  }

  // All non-empty multiplicity vectors, by increasing Kronecker degree.
  struct Cand {
    std::vector<int> mult;
    unsigned long deg;
  };
  std::vector<Cand> cands;
  {
    std::vector<int> v(fs.size(), 0);
    for (;;) {
      std::size_t i = 0;
      while (i < v.size() && v[i] == avail[i]) {
        v[i] = 0;
        ++i;
      }
      if (i == v.size()) break;
      ++v[i];
      unsigned long d = 0;
      for (std::size_t j = 0; j < v.size(); ++j) d += static_cast<unsigned long>(v[j]) * fs[j].degree();
      cands.push_back({v, d});
      if (cands.size() > 200000)
        throw std::domain_error("factor_bivariate: candidate space too large");
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      return a.mult < b.mult;
    });
  }

  IntPolynomial pcur = p;
  bool progress = true;
  while (pcur.degree() > 0 && progress) {
    progress = false;
    for (const Cand& cand : cands) {
      bool fits = true;
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (cand.mult[j] > avail[j]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      UPoly g = UPoly::constant(1);
      for (std::size_t j = 0; j < fs.size(); ++j)
        for (int t = 0; t < cand.mult[j]; ++t) g = g * fs[j];
      IntPolynomial G = deinterleave(g, M);
      auto q = divide_exact(pcur, G);
      if (!q) continue;
      // G is irreducible: any proper factor would correspond to a smaller
      // candidate that already failed against pcur.
      int mult = 0;
      do {
        ++mult;
        pcur = *q;
        q = divide_exact(pcur, G);
      } while (q);
      out.factors.emplace_back(G, mult);
      for (std::size_t j = 0; j < fs.size(); ++j) avail[j] -= cand.mult[j] * mult;
      progress = true;
      break;
    }
  }
  if (pcur.degree() != 0)
    throw std::logic_error("factor_bivariate: leftover non-constant cofactor");
  if (!(pcur == IntPolynomial::constant(2, 1)))
    throw std::logic_error("factor_bivariate: leftover unit is not 1");
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.str() < b.first.str();
  });
  return out;
}

bool is_squarefree_bivariate(const IntPolynomial& p) {
  BiFactorization f = factor_bivariate(p);
  for (const auto& [g, m] : f.factors)
    if (m > 1) return false;
  return true;
}

namespace {

// Coefficients of p viewed in the eliminated variable; entries in Z[kept].
std::vector<UPoly> coeffs_in_var(const IntPolynomial& p, int elim_var) {
  unsigned long d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max<unsigned long>(d, e[elim_var]);
  std::vector<std::vector<Int>> cs(d + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& vec = cs[e[elim_var]];
    unsigned other = e[1 - elim_var];
    if (other >= vec.size()) vec.resize(other + 1, Int(0));
    vec[other] = c;
  }
  std::vector<UPoly> out;
  out.reserve(cs.size());
  for (auto& v : cs) out.emplace_back(std::move(v));
  return out;
}

}  // namespace

UPoly resultant_bivariate(const IntPolynomial& f, const IntPolynomial& g, int elim_var) {
  if (f.is_zero() || g.is_zero()) return UPoly();
  std::vector<UPoly> F = coeffs_in_var(f, elim_var);
  std::vector<UPoly> G = coeffs_in_var(g, elim_var);
  long m = static_cast<long>(F.size()) - 1;
  long n = static_cast<long>(G.size()) - 1;
  if (m == 0 && n == 0) return UPoly::constant(1);
  if (m == 0) {
    UPoly r = UPoly::constant(1);
    for (long i = 0; i < n; ++i) r = r * F[0];
    return r;
  }
  if (n == 0) {
    UPoly r = UPoly::constant(1);
    for (long i = 0; i < m; ++i) r = r * G[0];
    return r;
  }

  long sz = m + n;
  std::vector<std::vector<UPoly>> mat(sz, std::vector<UPoly>(sz));
  for (long r = 0; r < n; ++r)
    for (long j = 0; j <= m; ++j) mat[r][r + j] = F[m - j];
  for (long r = 0; r < m; ++r)
    for (long j = 0; j <= n; ++j) mat[n + r][r + j] = G[n - j];

  // Fraction-free Bareiss elimination over Z[kept].
  UPoly prev = UPoly::constant(1);
  int sign = 1;
  for (long k = 0; k < sz - 1; ++k) {
    if (mat[k][k].is_zero()) {
      long swap_row = -1;
      for (long i = k + 1; i < sz; ++i)
        if (!mat[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return UPoly();  // singular: resultant is 0
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (long i = k + 1; i < sz; ++i) {
      for (long j = k + 1; j < sz; ++j) {
        UPoly num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
        UPoly q;
        if (!try_divide_exact(num, prev, &q))
          throw std::logic_error("resultant_bivariate: Bareiss division failed");
        mat[i][j] = std::move(q);
      }
      mat[i][k] = UPoly();
    }
    prev = mat[k][k];
  }
  UPoly det = mat[sz - 1][sz - 1];
  return sign < 0 ? det.negated() : det;
}

}  // namespace qindep
