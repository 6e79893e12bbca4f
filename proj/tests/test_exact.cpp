#include <doctest.h>

#include <qindep/dyadic.hpp>
#include <qindep/factored.hpp>
#include <qindep/log2exact.hpp>
#include <qindep/nu.hpp>
#include <qindep/primes.hpp>

#include <random>

using namespace qindep;

namespace {

// Independent oracle: strip p by repeated division.
Int nu_oracle(Int n, const Int& p) {
  Int count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

Int rnd_int(std::mt19937_64& rng, int max_bits) {
  std::uniform_int_distribution<int> bits(1, max_bits);
  int b = bits(rng);
  Int v = 0;
  for (int i = 0; i < b; i += 32) v = (v << 32) | Int(static_cast<unsigned long>(rng() & 0xffffffffu));
  v >>= (32 - b % 32) % 32;
  return v;
}

}  // namespace

TEST_CASE("nu_p_int matches the definition") {
  CHECK(nu_p_int(12, 2) == ExtNat(2));  // 12 = 2^2 * 3
  CHECK(nu_p_int(0, 3).is_infinite());
  // Built by repeated multiplication, divided out by the oracle.
  Int big = pow_ui(3, 40) * 7;
  CHECK(nu_p_int(big, 3) == ExtNat(nu_oracle(big, 3)));
  CHECK(nu_p_int(big, 3) == ExtNat(40));
  CHECK_THROWS_AS(nu_p_int(5, 1), std::invalid_argument);
}

TEST_CASE("nu_p_rat is representative-independent") {
  CHECK(nu_p_rat(make_rat(7, 50), 5) == ExtVal(-2));
  CHECK(nu_p_rat(Rat(0), 2).is_infinite());
  CHECK(nu_p_rat(make_rat(8, 6), 2) == ExtVal(2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Int num = rnd_int(rng, 64) - rnd_int(rng, 64);
    Int den = rnd_int(rng, 48) + 1;
    if (num == 0) num = 1;
    Rat q = make_rat(num, den);
    Int scale = rnd_int(rng, 24) + 1;
    Rat q2(num * scale);
    q2 /= Rat(den * scale);
    CHECK(nu_p_rat(q, 3) == nu_p_rat(q2, 3));
  }
}

TEST_CASE("eq:nupRules randomized") {
  std::mt19937_64 rng(42);
  std::vector<Int> primes = small_primes(10);
  for (int i = 0; i < 2000; ++i) {
    const Int& p = primes[rng() % primes.size()];
    Int a = (rnd_int(rng, 60) + 1) * pow_ui(p, rng() % 6);
    Int b = (rnd_int(rng, 60) + 1) * pow_ui(p, rng() % 6);
    if (rng() & 1) a = -a;
    if (rng() & 1) b = -b;
    // product rule
    CHECK(nu_p_int(a * b, p) == nu_p_int(a, p) + nu_p_int(b, p));
    // sum rule
    ExtNat va = nu_p_int(a, p), vb = nu_p_int(b, p);
    ExtNat vs = nu_p_int(a + b, p);
    if (va < vb) CHECK(vs == va);
    if (va == vb) CHECK(vs >= va);
  }
}

TEST_CASE("ExtNat saturates and orders infinity as maximal") {
  ExtNat inf = ExtNat::infinity();
  CHECK(inf + ExtNat(5) == inf);
  CHECK(ExtNat(3) < inf);
  CHECK(inf <= inf);
  CHECK(ext_max(ExtNat(2), inf).is_infinite());
  CHECK(ExtNat(4).scaled(3) == ExtNat(12));
  CHECK(inf.scaled(7).is_infinite());
}

TEST_CASE("FactoredInteger basics and nu_p_factored") {
  FactoredInteger x(1, {{Int(2), pow_ui(2, 100)}}, 3);
  CHECK(nu_p_factored(x, 2) == ExtNat(pow_ui(2, 100)));
  FactoredInteger y(1, {}, 12);
  CHECK(nu_p_factored(y, 2) == ExtNat(2));
  FactoredInteger z(-1, {{Int(3), Int(5)}}, 1);
  CHECK(nu_p_factored(z, 7) == ExtNat(0));
}

TEST_CASE("materialize respects the bit cap") {
  FactoredInteger a(1, {{Int(2), Int(10)}}, 3);
  MaterializeResult r = materialize(a, 64);
  REQUIRE(!r.too_large());
  CHECK(*r.value == 3072);

  FactoredInteger b(1, {{Int(2), pow_ui(2, 40)}}, 1);
  MaterializeResult rb = materialize(b, 1000000);
  CHECK(rb.too_large());
  CHECK(rb.bit_length_lo == pow_ui(2, 40) + 1);  // exact for a pure power of two

  FactoredInteger c(-1, {}, 1);
  MaterializeResult rc = materialize(c, 1);
  REQUIRE(!rc.too_large());
  CHECK(*rc.value == -1);
}

TEST_CASE("mul_factored re-factors residuals against the union key set") {
  FactoredInteger a(1, {{Int(2), Int(3)}}, 5);
  FactoredInteger b(1, {{Int(2), Int(1)}}, 7);
  FactoredInteger ab = mul_factored(a, b);
  CHECK(ab.factors().at(2) == 4);
  CHECK(ab.residual() == 35);

  FactoredInteger c(1, {{Int(3), Int(2)}}, 2);
  FactoredInteger d(1, {}, 9);
  FactoredInteger cd = mul_factored(c, d);
  CHECK(cd.factors().at(3) == 4);
  CHECK(cd.residual() == 2);

  FactoredInteger unit(1, {}, 1);
  CHECK(equal_factored(mul_factored(a, unit), a));
}

TEST_CASE("nu_p_factored agrees with nu_p_int after materialization") {
  std::mt19937_64 rng(11);
  std::vector<Int> primes = small_primes(6);
  for (int i = 0; i < 300; ++i) {
    std::map<Int, Int> f;
    for (const Int& p : primes)
      if (rng() & 1) f[p] = Int(rng() % 20);
    Int residual = rnd_int(rng, 40) + 1;
    FactoredInteger x(rng() & 1 ? 1 : -1, f, residual);
    MaterializeResult m = materialize(x, 4096);
    REQUIRE(!m.too_large());
    for (const Int& p : primes) CHECK(nu_p_factored(x, p) == nu_p_int(*m.value, p));
  }
}

TEST_CASE("identity (M+2+d)^N telescopes via (M+1+d) partial sums") {
  for (int M = 0; M <= 5; ++M) {
    for (int delta = 0; delta <= 1; ++delta) {
      Int base = M + 2 + delta;
      Int mult = M + 1 + delta;
      for (int N = 1; N <= 20; ++N) {
        for (int k = 0; k < N; ++k) {
          Int sum = 0;
          for (int n = k; n <= N - 1; ++n) sum += pow_ui(base, n);
          CHECK(pow_ui(base, N) == pow_ui(base, k) + mult * sum);
        }
      }
    }
  }
}

TEST_CASE("log2 enclosures are sound and tight") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Int x = rnd_int(rng, 80) + 1;
    RatInterval lg = log2_int(x, 48);
    CHECK(lg.lo <= lg.hi);
    // 2^lo <= x <= 2^hi checked through integer powers of the bracket.
    Int flo = rat_floor(lg.lo), fhi = rat_ceil(lg.hi);
    CHECK(pow2(flo) <= x);
    CHECK(x <= pow2(fhi));
    CHECK(lg.width() < make_rat(1, Int(1) << 40));
  }
  RatInterval exact = log2_int(pow_ui(2, 77), 16);
  CHECK(exact.lo == exact.hi);
  CHECK(exact.lo == 77);
}

TEST_CASE("pow_kappa_bracket gives sound integer brackets of (log2 a)^kappa") {
  // (log2 2^100)^(1/2) = 10 exactly.
  RatInterval lg = RatInterval::point(Rat(100));
  IntBracket b = pow_kappa_bracket(lg, make_rat(1, 2));
  CHECK(b.lo == 10);
  CHECK(b.hi == 10);
  IntBracket c = pow_kappa_bracket(RatInterval::point(Rat(99)), make_rat(1, 2));
  CHECK(c.lo == 9);
  CHECK(c.hi == 10);
}

TEST_CASE("compare_factored decides across representations") {
  FactoredInteger a(1, {{Int(2), Int(10)}}, 1);       // 1024
  FactoredInteger b(1, {{Int(2), Int(5)}}, 33);       // 1056
  CHECK(compare_factored(a, b) == Cmp::Less);
  FactoredInteger c(1, {{Int(3), Int(7)}}, 1);        // 2187
  CHECK(compare_factored(c, b) == Cmp::Greater);
  FactoredInteger d(1, {{Int(2), Int(5)}}, 32);       // 1024 again
  CHECK(compare_factored(a, d) == Cmp::Equal);
  FactoredInteger neg(-1, {{Int(2), Int(10)}}, 1);
  CHECK(compare_factored(neg, a) == Cmp::Less);
  // Huge values decided by exponent structure.
  FactoredInteger h1(1, {{Int(2), factorial(20)}}, 1);
  FactoredInteger h2(1, {{Int(3), factorial(19)}}, 1);
  CHECK(compare_factored(h1, h2) == Cmp::Greater);
  CHECK(compare_with_pow2(h1, factorial(20)) == Cmp::Equal);
  CHECK(compare_with_pow2(h1, factorial(20) + 1) == Cmp::Less);
}

TEST_CASE("dyadic directed arithmetic brackets exact rationals") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Rat q1 = make_rat(rnd_int(rng, 40) + 1, rnd_int(rng, 40) + 1);
    Rat q2 = make_rat(rnd_int(rng, 40) + 1, rnd_int(rng, 40) + 1);
    Dyadic u1 = Dyadic::from_rat_up(q1, 48), d1 = Dyadic::from_rat_down(q1, 48);
    Dyadic u2 = Dyadic::from_rat_up(q2, 48), d2 = Dyadic::from_rat_down(q2, 48);
    CHECK(u1.compare_rat(q1) != Cmp::Less);
    CHECK(d1.compare_rat(q1) != Cmp::Greater);
    Rat sum = q1 + q2, prod = q1 * q2;
    CHECK(u1.add_up(u2, 64).compare_rat(sum) != Cmp::Less);
    CHECK(d1.add_down(d2, 64).compare_rat(sum) != Cmp::Greater);
    CHECK(u1.mul_up(u2, 64).compare_rat(prod) != Cmp::Less);
    CHECK(d1.mul_down(d2, 64).compare_rat(prod) != Cmp::Greater);
  }
  // Astronomical exponents still compare.
  Dyadic tiny = Dyadic::pow2(-factorial(12));
  Dyadic small = Dyadic::pow2(-1000000);
  CHECK(compare(tiny, small) == Cmp::Less);
  CHECK(tiny.compare_rat(make_rat(1, 1000000)) == Cmp::Less);
}

TEST_CASE("div_up / div_down bracket b/a") {
  FactoredInteger a(1, {{Int(2), Int(8)}}, 3);  // 768
  Dyadic up = div_up(5, a, 64);
  Dyadic down = div_down(5, a, 64);
  Rat exact = make_rat(5, 768);
  CHECK(up.compare_rat(exact) != Cmp::Less);
  CHECK(down.compare_rat(exact) != Cmp::Greater);
  // Unmaterializable denominator: coarse but sound.
  FactoredInteger huge(1, {{Int(3), factorial(15)}}, 1);
  Dyadic u2 = div_up(1, huge, 32);
  CHECK(compare(u2, Dyadic::pow2(-factorial(14))) == Cmp::Less);
}
