#include <qindep/primes.hpp>
#include <qindep/upoly.hpp>

#include <algorithm>
#include <cstdint>

// Univariate factorization over Z: squarefree decomposition, then Zassenhaus
// (factor mod p, Hensel lift, subset recombination with exact division).
// Desk-scale inputs; correctness is re-verified by multiplying back.

namespace qindep {

namespace {

using modp::Poly;

struct Rng {
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

// ---- factorization over F_p (f monic squarefree) ----

void edf(const Poly& f, long d, const Int& p, Rng& rng, std::vector<Poly>* out) {
  if (modp::degree(f) == d) {
    out->push_back(modp::monic(f, p));
    return;
  }
  Int exp = (pow_z(p, d) - 1) / 2;
  unsigned long pu = p.get_ui();
  for (;;) {
    Poly r(static_cast<std::size_t>(modp::degree(f)), Int(0));
    for (Int& v : r) v = Int(static_cast<unsigned long>(rng.next() % pu));
    modp::normalize(r);
    if (r.empty()) continue;
    Poly m = modp::powmod(r, exp, f, p);
    m = modp::sub(m, Poly{Int(1)}, p);
    Poly g = modp::gcd(m, f, p);
    long dg = modp::degree(g);
    if (dg > 0 && dg < modp::degree(f)) {
      Poly q;
      modp::divmod(f, g, p, &q, nullptr);
      edf(g, d, p, rng, out);
      edf(q, d, p, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_modp(Poly f, const Int& p) {
  std::vector<Poly> out;
  Rng rng;
  Poly h = {Int(0), Int(1)};  // x
  {
    Poly r;
    modp::divmod(h, f, p, nullptr, &r);
    h = std::move(r);
  }
  long d = 0;
  while (modp::degree(f) > 0) {
    ++d;
    if (2 * d > modp::degree(f)) {
      out.push_back(modp::monic(f, p));
      break;
    }
    h = modp::powmod(h, p, f, p);
    Poly g = modp::gcd(modp::sub(h, Poly{Int(0), Int(1)}, p), f, p);
    if (modp::degree(g) > 0) {
      edf(g, d, p, rng, &out);
      Poly q;
      modp::divmod(f, g, p, &q, nullptr);
      f = std::move(q);
      Poly r;
      modp::divmod(h, f, p, nullptr, &r);
      h = std::move(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

// ---- Hensel lifting (monic, linear steps) ----

UPoly from_modp(const Poly& f) {
  std::vector<Int> c(f.begin(), f.end());
  return UPoly(std::move(c));
}

UPoly reduce_mod(const UPoly& f, const Int& m) {
  std::vector<Int> c = f.coeffs();
  for (Int& v : c) {
    v %= m;
    if (v < 0) v += m;
  }
  return UPoly(std::move(c));
}

// Lift f ≡ g0*h0 (mod p) to f ≡ G*H (mod p^k); all monic, f in Z[x].
void hensel_pair(const UPoly& f, const Poly& g0, const Poly& h0, const Int& p, int k, UPoly* G,
                 UPoly* H) {
  Poly gg, s, t;
  modp::xgcd(g0, h0, p, &gg, &s, &t);
  if (modp::degree(gg) != 0) throw std::logic_error("hensel_pair: factors not coprime mod p");
  UPoly g = from_modp(g0), h = from_modp(h0);
  Int pj = p;
  for (int j = 1; j < k; ++j) {
    UPoly diff = f - g * h;
    std::vector<Int> ec = diff.coeffs();
    for (Int& v : ec) {
      Int q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), pj.get_mpz_t());
      v = q % p;
      if (v < 0) v += p;
    }
    Poly e(ec.begin(), ec.end());
    modp::normalize(e);
    if (!e.empty()) {
      Poly te = modp::mul(t, e, p);
      Poly q, sigma;
      modp::divmod(te, g0, p, &q, &sigma);
      // tau = (e - sigma*h0)/g0 mod p, exact by construction
      Poly num = modp::sub(e, modp::mul(sigma, h0, p), p);
      Poly tau, rem;
      modp::divmod(num, g0, p, &tau, &rem);
      if (!rem.empty()) throw std::logic_error("hensel_pair: inexact tau division");
      g = g + from_modp(sigma).scaled(pj);
      h = h + from_modp(tau).scaled(pj);
    }
    pj *= p;
  }
  *G = reduce_mod(g, pj);
  *H = reduce_mod(h, pj);
}

// f ≡ prod(mods) (mod p), f monic in Z[x]; returns lifts mod p^k.
std::vector<UPoly> hensel_tree(const UPoly& f, const std::vector<Poly>& mods, const Int& p,
                               int k) {
  if (mods.size() == 1) {
    Int pk = pow_ui(p, k);
    return {reduce_mod(f, pk)};
  }
  std::size_t half = mods.size() / 2;
  Poly g0 = {Int(1)}, h0 = {Int(1)};
  for (std::size_t i = 0; i < half; ++i) g0 = modp::mul(g0, mods[i], p);
  for (std::size_t i = half; i < mods.size(); ++i) h0 = modp::mul(h0, mods[i], p);
  UPoly G, H;
  hensel_pair(f, g0, h0, p, k, &G, &H);
  std::vector<Poly> left(mods.begin(), mods.begin() + half);
  std::vector<Poly> right(mods.begin() + half, mods.end());
  std::vector<UPoly> out = hensel_tree(G, left, p, k);
  std::vector<UPoly> rr = hensel_tree(H, right, p, k);
  out.insert(out.end(), rr.begin(), rr.end());
  return out;
}

UPoly symmetric_mod(const UPoly& f, const Int& pk) {
  std::vector<Int> c = f.coeffs();
  Int half = pk / 2;
  for (Int& v : c) {
    v %= pk;
    if (v < 0) v += pk;
    if (v > half) v -= pk;
  }
  return UPoly(std::move(c));
}

// ---- Zassenhaus on monic squarefree F in Z[x] ----

std::vector<UPoly> zassenhaus_monic(const UPoly& F) {
  long n = F.degree();
  if (n <= 1) return {F};

  Int p = 0;
  Poly fp;
  for (const Int& cand : small_primes(200)) {
    if (cand == 2) continue;
    Poly r = modp::reduce(F, cand);
    if (modp::degree(r) != n) continue;
    Poly d = modp::reduce(F.derivative(), cand);
    if (modp::degree(modp::gcd(r, d, cand)) == 0) {
      p = cand;
      fp = modp::monic(r, cand);
      break;
    }
  }
  if (p == 0) throw std::domain_error("zassenhaus: no good prime found");

  std::vector<Poly> mods = factor_modp(fp, p);
  if (mods.size() == 1) return {F};
  if (mods.size() > 26)
    throw std::domain_error("zassenhaus: too many modular factors for recombination");

  // Mignotte-style bound on the coefficients of any monic factor.
  Int bound = pow2(Int(n)) * F.sum_abs();
  int k = 1;
  Int pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }
  std::vector<UPoly> lifted = hensel_tree(F, mods, p, k);

  std::vector<UPoly> result;
  UPoly fcur = F;
  std::vector<std::size_t> pool(lifted.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  auto try_subsets = [&](std::size_t size) -> bool {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      UPoly cand = UPoly::constant(1);
      for (std::size_t i : idx) cand = reduce_mod(cand * lifted[pool[i]], pk);
      cand = symmetric_mod(cand, pk);
      UPoly q;
      if (!cand.is_zero() && try_divide_exact(fcur, cand, &q)) {
        result.push_back(cand);
        fcur = q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i)
            ++j;
          else
            keep.push_back(pool[i]);
        }
        pool = keep;
        return true;
      }
      // next combination
      long i = static_cast<long>(size) - 1;
      while (i >= 0 && idx[i] == pool.size() - size + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    if (try_subsets(s)) {
      s = 1;
      continue;
    }
    ++s;
  }
  if (fcur.degree() >= 1) result.push_back(fcur);
  return result;
}

}  // namespace

UFactorization factor_upoly(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_upoly: zero polynomial");
  UFactorization out;
  Int cont = f.content();
  if (f.lc() < 0) cont = -cont;
  out.content = cont;
  UPoly prim = f.primitive_part();
  if (prim.degree() == 0) return out;

  for (const auto& [sq, mult] : squarefree_decomposition(prim)) {
    std::vector<UPoly> irr;
    if (sq.degree() == 1) {
      irr.push_back(sq);
    } else {
      // Monicize: F(y) = lc^(n-1) * sq(y/lc) is monic over Z.
      const Int& L = sq.lc();
      long n = sq.degree();
      std::vector<Int> c(n + 1);
      for (long i = 0; i < n; ++i) c[i] = sq.coeff(i) * pow_z(L, Int(n - 1 - i));
      c[n] = 1;
      UPoly F(std::move(c));
      std::vector<UPoly> monic_factors = zassenhaus_monic(F);
      UPoly check = UPoly::constant(1);
      for (const UPoly& G : monic_factors) {
        // map back through y = L*x
        std::vector<Int> c(G.degree() + 1);
        Int scale = 1;
        for (long i = 0; i <= G.degree(); ++i) {
          c[i] = G.coeff(i) * scale;
          scale *= L;
        }
        UPoly g = UPoly(std::move(c)).primitive_part();
        irr.push_back(g);
        check = check * g;
      }
      if (!(check == sq) && !(check.negated() == sq))
        throw std::logic_error("factor_upoly: factor product check failed");
    }
    std::sort(irr.begin(), irr.end(), [](const UPoly& a, const UPoly& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.coeffs() < b.coeffs();
    });
    for (UPoly& g : irr) out.factors.emplace_back(std::move(g), mult);
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first.degree() != b.first.degree())
                       return a.first.degree() < b.first.degree();
                     return a.first.coeffs() < b.first.coeffs();
                   });
  return out;
}

}  // namespace qindep
