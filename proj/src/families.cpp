#include <qindep/families.hpp>
#include <qindep/nu.hpp>

#include <memory>
#include <sstream>

namespace qindep {

namespace {

using nlohmann::json;

Int json_int(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long>());
  throw std::invalid_argument("expected integer (number or decimal string): " + j.dump());
}

Rat json_rat(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  throw std::invalid_argument("expected rational (int or \"p/q\"): " + j.dump());
}

// ---- integer sequence specs (exponents r_n and friends) ----

struct IntSeq {
  std::string kind;
  Int value = 0;   // const / n_pow power / linear scale
  Int offset = 0;  // factorial offset / linear offset
  std::vector<Int> table;

  Int eval(long n) const {
    if (kind == "n") return Int(n);
    if (kind == "const") return value;
    if (kind == "factorial") return factorial(static_cast<unsigned long>(n + offset.get_si()));
    if (kind == "pow2") return pow2(Int(n));
    if (kind == "n_pow") return pow_ui(Int(n), value.get_ui());
    if (kind == "linear") return value * Int(n) + offset;
    if (kind == "table") {
      if (n < 1 || static_cast<std::size_t>(n) > table.size())
        throw std::out_of_range("integer sequence table exhausted at n=" + std::to_string(n));
      return table[n - 1];
    }
    throw std::invalid_argument("unknown integer sequence kind: " + kind);
  }

  json echo() const {
    json j;
    j["kind"] = kind;
    if (kind == "const" || kind == "n_pow" || kind == "linear") j["value"] = value.get_str();
    if (kind == "factorial" || kind == "linear") j["offset"] = offset.get_str();
    if (kind == "table") {
      json t = json::array();
      for (const Int& v : table) t.push_back(v.get_str());
      j["table"] = t;
    }
    return j;
  }
};

IntSeq parse_int_seq(const json& j, const IntSeq& dflt) {
  if (j.is_null()) return dflt;
  IntSeq s;
  s.kind = j.value("kind", "n");
  if (j.contains("value")) s.value = json_int(j.at("value"));
  if (j.contains("power")) s.value = json_int(j.at("power"));
  if (j.contains("offset")) s.offset = json_int(j.at("offset"));
  if (j.contains("table"))
    for (const auto& v : j.at("table")) s.table.push_back(json_int(v));
  s.eval(1);  // validate early
  return s;
}

// ---- factored sequence specs (the a_n and g(n) inputs) ----

struct FactoredSeq {
  std::string kind;          // "pow" | "const" | "poly" | "table"
  FactoredInteger base;      // pow
  IntSeq exponent;           // pow
  Int const_value = 1;       // const
  Int power = 0;             // poly: n^power
  std::vector<Int> table;

  FactoredInteger eval(long n) const {
    if (kind == "pow") return base.pow(exponent.eval(n));
    if (kind == "const") return factor_small(const_value);
    if (kind == "poly") {
      if (power == 0) return FactoredInteger();
      return factor_small(Int(n)).pow(power);
    }
    if (kind == "table") {
      if (n < 1 || static_cast<std::size_t>(n) > table.size())
        throw std::out_of_range("sequence table exhausted at n=" + std::to_string(n));
      return factor_small(table[n - 1]);
    }
    throw std::invalid_argument("unknown sequence kind: " + kind);
  }

  json echo() const {
    json j;
    j["kind"] = kind;
    if (kind == "pow") {
      j["base"] = base.str();
      j["exp"] = exponent.echo();
    }
    if (kind == "const") j["value"] = const_value.get_str();
    if (kind == "poly") j["power"] = power.get_str();
    if (kind == "table") {
      json t = json::array();
      for (const Int& v : table) t.push_back(v.get_str());
      j["table"] = t;
    }
    return j;
  }
};

FactoredSeq parse_factored_seq(const json& j, const FactoredSeq& dflt) {
  if (j.is_null()) return dflt;
  FactoredSeq s;
  s.kind = j.value("kind", "pow");
  if (s.kind == "pow") {
    Int b = j.contains("base") ? json_int(j.at("base")) : Int(3);
    if (b < 1) throw std::invalid_argument("sequence base must be >= 1");
    s.base = factor_small(b);
    s.exponent = parse_int_seq(j.contains("exp") ? j.at("exp") : json(), {"factorial", 0, 0, {}});
  } else if (s.kind == "const") {
    s.const_value = json_int(j.at("value"));
    if (s.const_value < 1) throw std::invalid_argument("const sequence must be positive");
  } else if (s.kind == "poly") {
    s.power = json_int(j.at("power"));
  } else if (s.kind == "table") {
    for (const auto& v : j.at("table")) s.table.push_back(json_int(v));
    if (s.table.empty()) throw std::invalid_argument("table sequence must be non-empty");
  } else {
    throw std::invalid_argument("unknown sequence kind: " + s.kind);
  }
  s.eval(1);
  return s;
}

FactoredSeq default_pow_seq(long base, long factorial_offset) {
  FactoredSeq s;
  s.kind = "pow";
  s.base = factor_small(Int(base));
  s.exponent = IntSeq{"factorial", 0, Int(factorial_offset), {}};
  return s;
}

SignFunction parse_sign(const json& j, SignFunction dflt) {
  if (j.is_null()) return dflt;
  SignFunction f;
  std::string kind = j.value("kind", "kn");
  if (kind == "kn")
    f.kind = SignFunction::Kind::ProductKN;
  else if (kind == "const") {
    f.kind = SignFunction::Kind::Constant;
    f.constant = j.contains("value") ? json_int(j.at("value")) : Int(0);
  } else if (kind == "divisors")
    f.kind = SignFunction::Kind::DivisorCount;
  else if (kind == "totient")
    f.kind = SignFunction::Kind::EulerTotient;
  else if (kind == "table") {
    f.kind = SignFunction::Kind::Table;
    for (const auto& v : j.at("table")) f.table.push_back(json_int(v));
  } else
    throw std::invalid_argument("unknown sign function kind: " + kind);
  return f;
}

// Declared tail shape from the structure of the dominant factor.
TailShape shape_for(const FactoredSeq& a) {
  TailShape t;
  if (a.kind == "pow" && a.exponent.kind == "factorial") {
    t.kind = TailShape::Kind::Squaring;
    t.from_n = 1;
  } else if (a.kind == "pow" && (a.exponent.kind == "pow2" || a.exponent.kind == "n_pow" ||
                                 a.exponent.kind == "linear" || a.exponent.kind == "n")) {
    t.kind = TailShape::Kind::Geometric;
    t.param = 2;
    t.from_n = 1;
  } else if (a.kind == "poly" && a.power >= 2) {
    t.kind = TailShape::Kind::Power;
    t.param = a.power;
    t.from_n = 1;
  }
  return t;
}

void common_params(const json& j, SeriesParams* ps) {
  if (j.contains("epsilon")) ps->epsilon = json_rat(j.at("epsilon"));
  if (j.contains("kappa")) ps->kappa = json_rat(j.at("kappa"));
  if (j.contains("A")) ps->A = json_int(j.at("A"));
  if (j.contains("d")) ps->d = j.at("d").get<int>();
  if (j.contains("growth_factor")) ps->growth_factor = json_rat(j.at("growth_factor"));
  if (j.contains("growth_threshold")) ps->growth_threshold = json_rat(j.at("growth_threshold"));
  if (j.contains("C")) ps->distinct_C = json_int(j.at("C"));
  if (j.contains("primes_checked")) ps->primes_checked = j.at("primes_checked").get<int>();
  if (ps->epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (!(ps->kappa > 0 && ps->kappa < 1)) throw std::invalid_argument("kappa must be in (0,1)");
  if (ps->A < 2) throw std::invalid_argument("A must be >= 2");
}

void require_coprime_to(const FactoredSeq& a, const Int& p, long upto, const std::string& what) {
  for (long n = 1; n <= upto; ++n) {
    if (nu_p_factored(a.eval(n), p) != ExtNat(0))
      throw std::invalid_argument("parameter violation: " + what + " must be coprime to " +
                                  p.get_str() + " (fails at n=" + std::to_string(n) + ")");
  }
}

constexpr long kValidateHorizon = 24;

struct Defs {
  std::shared_ptr<FactoredSeq> a;
  std::shared_ptr<IntSeq> r;
  std::shared_ptr<std::vector<SignFunction>> fs;
  SignFunction sign_for(int k) const {
    if (fs->empty()) return SignFunction{};
    return (*fs)[std::min<std::size_t>(k - 1, fs->size() - 1)];
  }
};

Defs make_defs(const json& j, FactoredSeq a_dflt, IntSeq r_dflt, SignFunction f_dflt) {
  Defs d;
  d.a = std::make_shared<FactoredSeq>(
      parse_factored_seq(j.contains("a") ? j.at("a") : json(), a_dflt));
  d.r = std::make_shared<IntSeq>(parse_int_seq(j.contains("r") ? j.at("r") : json(), r_dflt));
  d.fs = std::make_shared<std::vector<SignFunction>>();
  if (j.contains("f")) {
    if (j.at("f").is_array())
      for (const auto& fj : j.at("f")) d.fs->push_back(parse_sign(fj, f_dflt));
    else
      d.fs->push_back(parse_sign(j.at("f"), f_dflt));
  } else {
    d.fs->push_back(f_dflt);
  }
  return d;
}

}  // namespace

SeriesFamily builtin_family(const std::string& name, const json& params) {
  const json& j = params;
  SeriesParams ps;
  SignFunction f_kn;  // default f_k(n) = k*n
  SignFunction f_zero{SignFunction::Kind::Constant, 0, {}};

  if (name == "ex-thm2-nk") {
    ps.K = j.value("K", 2);
    ps.primes.single = true;
    ps.primes.p = 2;
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(3, 0), {"n", 0, 0, {}}, f_kn);
    require_coprime_to(*d.a, 2, kValidateHorizon, "a_n (must be odd)");
    TailShape t = shape_for(*d.a);
    return SeriesFamily(
        name, ps,
        [d](int k, long n) {
          FactoredInteger two_pow(1, {{Int(2), pow_ui(Int(n), k)}}, 1);
          return Term{Int(d.sign_for(k).sign(k, n)), mul_factored(d.a->eval(n), two_pow)};
        },
        [d](long n) { return d.a->eval(n); }, t);
  }

  if (name == "ex-thm2-nu2n") {
    ps.K = j.value("K", 2);
    Int z = j.contains("z") ? json_int(j.at("z")) : Int(3);
    if (z < 2) throw std::invalid_argument("parameter violation: z must be >= 2");
    FactoredInteger zf = factor_small(z);
    Int p = j.contains("p") ? json_int(j.at("p")) : zf.factors().begin()->first;
    if (nu_p_factored(zf, p) == ExtNat(0))
      throw std::invalid_argument("parameter violation: p must divide z");
    ps.primes.single = true;
    ps.primes.p = p;
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(5, 0), {"n", 0, 0, {}}, f_kn);
    for (const auto& [q, e] : zf.factors()) require_coprime_to(*d.a, q, kValidateHorizon, "a_n");
    TailShape t = shape_for(*d.a);
    return SeriesFamily(
        name, ps,
        [d, zf](int k, long n) {
          Int nu2 = nu_p_int(Int(n), 2).finite();
          Int e = pow_z(nu2, Int(k));
          return Term{Int(d.sign_for(k).sign(k, n)), mul_factored(d.a->eval(n), zf.pow(e))};
        },
        [d](long n) { return d.a->eval(n); }, t);
  }

  if (name == "ex-thm3") {
    ps.K = j.value("K", 2);
    ps.d = 3;
    Int z = j.contains("z") ? json_int(j.at("z")) : Int(2);
    if (z < 2) throw std::invalid_argument("parameter violation: z must be >= 2");
    FactoredInteger zf = factor_small(z);
    ps.primes.single = true;
    ps.primes.p = j.contains("p") ? json_int(j.at("p")) : zf.factors().begin()->first;
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(3, 4), {"n", 0, 0, {}}, f_kn);
    for (const auto& [q, e] : zf.factors()) require_coprime_to(*d.a, q, kValidateHorizon, "a_n");
    TailShape t = shape_for(*d.a);
    return SeriesFamily(
        name, ps,
        [d, zf](int k, long n) {
          Int e = (pow_ui(Int(3), k) - 1) * Int(n);
          return Term{Int(d.sign_for(k).sign(k, n)), mul_factored(d.a->eval(n), zf.pow(e))};
        },
        [d](long n) { return d.a->eval(n); }, t);
  }

  if (name == "ex-thm1") {
    ps.K = j.value("K", 2);
    ps.d = 1;
    Int z = j.contains("z") ? json_int(j.at("z")) : Int(3);
    Int q = j.contains("inner_prime") ? json_int(j.at("inner_prime")) : Int(2);
    if (!is_probable_prime(q)) throw std::invalid_argument("parameter violation: inner_prime");
    FactoredInteger zf = factor_small(z);
    ps.primes.single = true;
    ps.primes.p = j.contains("p") ? json_int(j.at("p")) : zf.factors().begin()->first;
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(5, 2), {"n", 0, 0, {}}, f_kn);
    for (const auto& [pp, e] : zf.factors()) require_coprime_to(*d.a, pp, kValidateHorizon, "a_n");
    TailShape t = shape_for(*d.a);
    return SeriesFamily(
        name, ps,
        [d, zf, q](int k, long n) {
          Int e = Int(k) * nu_p_int(Int(n), q).finite();
          return Term{Int(d.sign_for(k).sign(k, n)), mul_factored(d.a->eval(n), zf.pow(e))};
        },
        [d](long n) { return d.a->eval(n); }, t);
  }

  if (name == "zeta5") {
    ps.K = 1;
    ps.d = 1;
    ps.primes.single = true;
    ps.primes.p = 2;
    common_params(j, &ps);
    Int s = j.contains("s") ? json_int(j.at("s")) : Int(5);
    if (s < 2) throw std::invalid_argument("parameter violation: exponent s must be >= 2");
    FactoredSeq g_dflt = default_pow_seq(3, 0);
    Defs d = make_defs(j.contains("g") ? json{{"a", j.at("g")}} : json(), g_dflt, {"n", 0, 0, {}},
                       f_zero);
    require_coprime_to(*d.a, 2, kValidateHorizon, "g(n) (must be odd)");
    TailShape t = shape_for(*d.a);
    if (t.kind == TailShape::Kind::None && d.a->kind == "const") {
      t.kind = TailShape::Kind::Power;
      t.param = s;
    }
    auto term_fn = [d, s](int k, long n) {
      FactoredInteger npow = factor_small(Int(n)).pow(s);
      return Term{Int(d.sign_for(k).sign(k, n)), mul_factored(d.a->eval(n), npow)};
    };
    return SeriesFamily(name, ps, term_fn, [term_fn](long n) { return term_fn(1, n).a.abs(); },
                        t);
  }

  if (name == "ex-p-irr" || name == "ex-p-transc") {
    ps.K = 1;
    ps.d = 1;
    Int z = j.contains("z") ? json_int(j.at("z")) : Int(2);
    if (z < 2) throw std::invalid_argument("parameter violation: z must be >= 2");
    FactoredInteger zf = factor_small(z);
    ps.primes.single = true;
    ps.primes.p = j.contains("p") ? json_int(j.at("p")) : zf.factors().begin()->first;
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(3, 0), {"n", 0, 0, {}}, f_zero);
    for (const auto& [q, e] : zf.factors()) require_coprime_to(*d.a, q, kValidateHorizon, "a_n");
    // r_n pairwise different non-negative
    for (long m = 1; m <= kValidateHorizon; ++m) {
      if (d.r->eval(m) < 0)
        throw std::invalid_argument("parameter violation: r_n must be non-negative");
      for (long n = m + 1; n <= kValidateHorizon; ++n)
        if (d.r->eval(m) == d.r->eval(n))
          throw std::invalid_argument("parameter violation: r_n must be pairwise different");
    }
    // optional integer twist c_n, p ∤ c_n
    auto twist = std::make_shared<IntSeq>(
        parse_int_seq(j.contains("twist") ? j.at("twist") : json(), {"const", 1, 0, {}}));
    for (long n = 1; n <= kValidateHorizon; ++n) {
      Int c = twist->eval(n);
      if (c == 0) throw std::invalid_argument("parameter violation: twist c_n must be nonzero");
      if (nu_p_int(c, ps.primes.p) != ExtNat(0))
        throw std::invalid_argument("parameter violation: p must not divide twist c_n");
    }
    bool trivial_twist = twist->kind == "const" && twist->value == 1;
    TailShape t = trivial_twist ? shape_for(*d.a) : TailShape{};
    auto term_fn = [d, zf, twist](int k, long n) {
      FactoredInteger a = mul_factored(d.a->eval(n), zf.pow(d.r->eval(n)));
      Int c = twist->eval(n);
      if (c < 0) return Term{Int(-d.sign_for(k).sign(k, n)), mul_factored(a, factor_small(-c))};
      if (c != 1) a = mul_factored(a, factor_small(c));
      return Term{Int(d.sign_for(k).sign(k, n)), a};
    };
    return SeriesFamily(name, ps, term_fn, [term_fn](long n) { return term_fn(1, n).a.abs(); },
                        t);
  }

  if (name == "ex-inf-lin") {
    ps.K = j.value("K", 2);
    ps.d = 1;
    ps.primes.single = false;
    ps.primes.gen_start = j.contains("prime_start") ? json_int(j.at("prime_start")) : Int(2);
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(3, 0), {"factorial", 0, 0, {}}, f_kn);
    for (long n = 1; n < kValidateHorizon; ++n)
      if (!(d.r->eval(n) < d.r->eval(n + 1)))
        throw std::invalid_argument("parameter violation: r_n must be strictly increasing");
    PrimeSpec pr = ps.primes;
    TailShape t;
    if (d.r->kind == "factorial") t = {TailShape::Kind::Squaring, 0, 1, 1};
    return SeriesFamily(
        name, ps,
        [d, pr](int k, long n) {
          FactoredInteger a(1, {{pr.nth(n), Int(k) + d.r->eval(n)}}, 1);
          return Term{Int(d.sign_for(k).sign(k, n)), a};
        },
        [d, pr](long n) { return FactoredInteger(1, {{pr.nth(n), Int(1) + d.r->eval(n)}}, 1); },
        t);
  }

  if (name == "ex-inf-algindep") {
    ps.K = j.value("K", 2);
    ps.d = 1;
    ps.kappa = make_rat(1, 2);
    ps.primes.single = false;
    ps.primes.gen_start = j.contains("prime_start") ? json_int(j.at("prime_start")) : Int(3);
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(3, 0), {"factorial", 0, 0, {}}, f_kn);
    for (long n = 1; n < kValidateHorizon; ++n)
      if (d.r->eval(n) > d.r->eval(n + 1))
        throw std::invalid_argument("parameter violation: r_n must be non-decreasing");
    PrimeSpec pr = ps.primes;
    TailShape t;
    if (d.r->kind == "factorial") t = {TailShape::Kind::Squaring, 0, 1, 1};
    return SeriesFamily(
        name, ps,
        [d, pr](int k, long n) {
          std::map<Int, Int> fac{{Int(2), d.r->eval(n)}};
          if (k == 1) {
            fac[pr.nth(n)] += 1;
          } else {
            Int e = pow_ui(Int(n), k - 1);
            for (long m = 1; m <= n; ++m) fac[pr.nth(m)] += e;
          }
          return Term{Int(d.sign_for(k).sign(k, n)), FactoredInteger(1, std::move(fac), 1)};
        },
        [d](long n) { return FactoredInteger(1, {{Int(2), d.r->eval(n)}}, 1); }, t);
  }

  if (name == "ex-inf-K2") {
    ps.K = j.value("K", 2);
    ps.d = 3;
    ps.primes.single = false;
    ps.primes.gen_start = j.contains("prime_start") ? json_int(j.at("prime_start")) : Int(3);
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(3, 0), {"factorial", 0, Int(5), {}}, f_kn);
    PrimeSpec pr = ps.primes;
    TailShape t;
    if (d.r->kind == "factorial") t = {TailShape::Kind::Squaring, 0, 1, 1};
    return SeriesFamily(
        name, ps,
        [d, pr](int k, long n) {
          Int e = pow_ui(Int(3), k) - 1;
          FactoredInteger a(1, {{Int(2), d.r->eval(n)}, {pr.nth(n), e}}, 1);
          return Term{Int(d.sign_for(k).sign(k, n)), a};
        },
        [d](long n) { return FactoredInteger(1, {{Int(2), d.r->eval(n)}}, 1); }, t);
  }

  if (name == "ex-P-irr") {
    ps.K = 1;
    ps.d = 1;
    int variant = j.value("variant", 1);
    if (variant != 1 && variant != 2)
      throw std::invalid_argument("parameter violation: variant must be 1 or 2");
    ps.primes.single = false;
    ps.primes.gen_start = j.contains("prime_start") ? json_int(j.at("prime_start")) : Int(3);
    common_params(j, &ps);
    Defs d = make_defs(j, default_pow_seq(2, 0), {"n", 0, 0, {}}, f_zero);
    for (int i = 1; i <= ps.primes_checked; ++i)
      require_coprime_to(*d.a, ps.primes.nth(i), kValidateHorizon, "a_n");
    PrimeSpec pr = ps.primes;
    TailShape t = shape_for(*d.a);
    auto term_fn = [d, pr, variant](int k, long n) {
      FactoredInteger a = d.a->eval(n);
      std::map<Int, Int> fac;
      if (variant == 1) {
        fac[pr.nth(n)] += 1;
      } else {
        fac[pr.nth(n)] += 2;
        for (long m = 1; m < n; ++m) fac[pr.nth(m)] += 1;
      }
      return Term{Int(d.sign_for(k).sign(k, n)),
                  mul_factored(a, FactoredInteger(1, std::move(fac), 1))};
    };
    return SeriesFamily(name, ps, term_fn, [term_fn](long n) { return term_fn(1, n).a.abs(); },
                        t);
  }

  if (name == "table") {
    ps.K = j.value("K", 1);
    if (j.contains("p")) {
      ps.primes.single = true;
      ps.primes.p = json_int(j.at("p"));
    }
    common_params(j, &ps);
    if (!j.contains("terms"))
      throw std::invalid_argument("table family requires terms: [[b, a], ...] per k");
    auto rows = std::make_shared<std::vector<std::vector<std::pair<Int, Int>>>>();
    const json& tj = j.at("terms");
    for (const auto& krow : tj) {
      std::vector<std::pair<Int, Int>> row;
      for (const auto& pair : krow) {
        Int b = json_int(pair.at(0)), a = json_int(pair.at(1));
        if (b == 0 || a == 0)
          throw std::invalid_argument("parameter violation: table terms must be nonzero");
        row.emplace_back(b, a);
      }
      rows->push_back(std::move(row));
    }
    if (static_cast<int>(rows->size()) != ps.K)
      throw std::invalid_argument("table family: need exactly K rows of terms");
    return SeriesFamily(
        name, ps,
        [rows](int k, long n) {
          const auto& row = rows->at(k - 1);
          if (n < 1 || static_cast<std::size_t>(n) > row.size())
            throw std::out_of_range("table family exhausted at n=" + std::to_string(n));
          auto [b, a] = row[n - 1];
          return Term{b, factor_small(a)};
        },
        [rows](long n) {
          const auto& row = rows->front();
          if (n < 1 || static_cast<std::size_t>(n) > row.size())
            throw std::out_of_range("table family exhausted at n=" + std::to_string(n));
          return factor_small(row[n - 1].second).abs();
        },
        TailShape{});
  }

  std::ostringstream os;
  os << "unknown family '" << name << "'; available:";
  for (const auto& nm : builtin_family_names()) os << " " << nm;
  throw std::invalid_argument(os.str());
}

std::vector<std::string> builtin_family_names() {
  return {"ex-thm2-nk", "ex-thm2-nu2n", "ex-thm3",       "ex-thm1", "zeta5",     "ex-p-irr",
          "ex-p-transc", "ex-inf-lin",   "ex-inf-algindep", "ex-inf-K2", "ex-P-irr", "table"};
}

nlohmann::json family_config_echo(const std::string& name, const nlohmann::json& params) {
  // Echo the user-provided parameters under canonical key order.
  nlohmann::ordered_json echo;
  echo["family"] = name;
  std::vector<std::string> keys;
  for (auto it = params.begin(); it != params.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  nlohmann::ordered_json pj;
  for (const auto& k : keys) pj[k] = params.at(k);
  echo["params"] = pj;
  return echo;
}

ExampleSpec example_spec(const std::string& name) {
  ExampleSpec s;
  s.family = name;
  s.params = nlohmann::json::object();
  if (name == "ex-thm2-nk") {
    s.preset = "thm-alg-indep";
  } else if (name == "ex-thm2-nu2n") {
    s.preset = "thm-alg-indep";
  } else if (name == "ex-thm3") {
    s.preset = "thm-K2";
  } else if (name == "ex-thm1") {
    s.preset = "thm-general";
  } else if (name == "zeta5") {
    // Remark rem:zeta5 derives irrationality from the single-prime theorem.
    s.preset = "thm-general";
  } else if (name == "ex-p-irr") {
    s.preset = "thm-p-irrational";
    s.run_linear_scan = true;
  } else if (name == "ex-p-transc") {
    s.preset = "thm-p-irrational";
    s.run_linear_scan = true;
  } else if (name == "ex-inf-lin") {
    s.preset = "thm-general-infinite";
  } else if (name == "ex-inf-algindep") {
    s.preset = "thm-alg-indep-infinite";
  } else if (name == "ex-inf-K2") {
    s.preset = "thm-K2-infinite";
  } else if (name == "ex-P-irr") {
    s.preset = "thm-P-irrational";
    s.run_linear_scan = true;
  } else {
    std::ostringstream os;
    os << "unknown example '" << name << "'; available:";
    for (const auto& nm : example_names()) os << " " << nm;
    throw std::invalid_argument(os.str());
  }
  return s;
}

std::vector<std::string> example_names() {
  return {"ex-thm2-nk", "ex-thm2-nu2n", "ex-thm3",       "ex-thm1",   "zeta5",   "ex-p-irr",
          "ex-p-transc", "ex-inf-lin",   "ex-inf-algindep", "ex-inf-K2", "ex-P-irr"};
}

}  // namespace qindep
