#include "arcgeom/field.hpp"

#include <algorithm>
#include <cstdint>

namespace arcgeom {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Dense polynomials over GF(p), coefficient 0 = constant term.
using Poly = std::vector<std::uint32_t>;

std::size_t degree(const Poly& f) {
  std::size_t d = f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;  // the zero polynomial reports degree 0
}

bool is_zero_poly(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is tiny; a linear scan beats carrying an egcd around.
  for (std::uint32_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  std::size_t dg = degree(g);
  std::uint32_t lead_inv = inv_mod_p(g[dg], p);
  while (!is_zero_poly(f) && degree(f) >= dg) {
    std::size_t df = degree(f);
    std::uint32_t c = f[df] * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      std::uint32_t sub = c * g[i] % p;
      f[df - dg + i] = (f[df - dg + i] + p - sub) % p;
    }
  }
  return f;
}

// Exhaustive scan over monic divisors of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t deg = degree(f);
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly g(d + 1, 0);
      std::uint64_t m = enc;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(m % p);
        m /= p;
      }
      g[d] = 1;
      if (is_zero_poly(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw InputError("extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > 0x10000) throw InputError("field size p^e exceeds 2^16");
  }

  // Smallest coefficient encoding among irreducible monic degree-e
  // polynomials.  Degree 1 is always irreducible, so GF(p) gets modulus x.
  for (std::uint64_t enc = 0;; ++enc) {
    std::vector<std::uint32_t> mod(e + 1, 0);
    std::uint64_t m = enc;
    for (std::uint32_t i = 0; i < e; ++i) {
      mod[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    mod[e] = 1;
    if (is_irreducible(mod, p)) {
      Field f;
      f.init(p, e, std::move(mod));
      return f;
    }
  }
}

Field Field::make(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw InputError("extension degree must be >= 1");
  if (modulus.size() != e + 1 || modulus[e] != 1)
    throw InputError("modulus must be monic of degree e");
  for (auto c : modulus)
    if (c >= p) throw InputError("modulus coefficient out of range 0..p-1");
  if (!is_irreducible(modulus, p)) throw InputError("modulus is reducible over GF(p)");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > 0x10000) throw InputError("field size p^e exceeds 2^16");
  }
  Field f;
  f.init(p, e, modulus);
  return f;
}

void Field::init(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
  p_ = p;
  e_ = e;
  q_ = 1;
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  modulus_ = std::move(modulus);

  if (p_ != 2) {
    neg_tab_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      std::uint32_t r = 0, pw = 1, x = a;
      for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_;
        r += ((p_ - d) % p_) * pw;
        x /= p_;
        pw *= p_;
      }
      neg_tab_[a] = static_cast<felt>(r);
    }
    if (q_ <= 512) {
      add_tab_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
          std::uint32_t r = 0, pw = 1, x = a, y = b;
          for (std::uint32_t i = 0; i < e_; ++i) {
            r += (x % p_ + y % p_) % p_ * pw;
            x /= p_;
            y /= p_;
            pw *= p_;
          }
          add_tab_[std::size_t{a} * q_ + b] = static_cast<felt>(r);
        }
    }
  }
  build_tables();
}

felt Field::mul_direct(felt a, felt b) const {
  // Coefficient vectors from the codes, schoolbook product, reduction.
  std::uint32_t da[17], db[17];
  std::uint32_t x = a, y = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = x % p_;
    db[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  std::uint32_t prod[33] = {0};
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // Reduce x^(e+t) by the monic modulus, highest term first.
  for (std::uint32_t d = 2 * e_ - 2 + 1; d-- > e_;) {
    std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < e_; ++i)
      prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - modulus_[i] % p_) * c) % p_;
  }
  std::uint32_t r = 0, pw = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += prod[i] * pw;
    pw *= p_;
  }
  return static_cast<felt>(r);
}

felt Field::pow_direct(felt a, std::uint64_t n) const {
  felt r = 1, base = a;
  while (n) {
    if (n & 1) r = mul_direct(r, base);
    base = mul_direct(base, base);
    n >>= 1;
  }
  return r;
}

void Field::build_tables() {
  if (q_ == 2) {
    generator_ = 1;
    log_.assign(2, 0);
    exp_.assign(2, 1);
    return;
  }
  auto fs = prime_factors(q_ - 1);
  felt g = 0;
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (auto f : fs)
      if (pow_direct(static_cast<felt>(cand), (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = static_cast<felt>(cand);
      break;
    }
  }
  if (g == 0) throw VerificationError("no multiplicative generator found; field construction is broken");
  generator_ = g;

  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  felt cur = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    exp_[i + q_ - 1] = cur;
    log_[cur] = static_cast<felt>(i);
    cur = mul_direct(cur, g);
  }
  if (cur != 1) throw VerificationError("generator order mismatch; field construction is broken");
}

felt Field::add(felt a, felt b) const {
  check(a);
  check(b);
  if (p_ == 2) return a ^ b;
  if (!add_tab_.empty()) return add_tab_[std::size_t{a} * q_ + b];
  std::uint32_t r = 0, pw = 1, x = a, y = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += (x % p_ + y % p_) % p_ * pw;
    x /= p_;
    y /= p_;
    pw *= p_;
  }
  return static_cast<felt>(r);
}

felt Field::neg(felt a) const {
  check(a);
  if (p_ == 2) return a;
  return neg_tab_[a];
}

felt Field::sub(felt a, felt b) const { return add(a, neg(b)); }

felt Field::mul(felt a, felt b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

felt Field::inv(felt a) const {
  check(a);
  if (a == 0) throw InputError("inversion of zero");
  return exp_[q_ - 1 - log_[a]];
}

felt Field::div(felt a, felt b) const {
  check(a);
  check(b);
  if (b == 0) throw InputError("division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + q_ - 1 - log_[b]];
}

felt Field::pow(felt a, std::uint64_t n) const {
  check(a);
  if (a == 0) return n == 0 ? felt{1} : felt{0};
  std::uint64_t l = std::uint64_t{log_[a]} * (n % (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

std::uint64_t Field::element_order(felt a) const {
  check(a);
  if (a == 0) throw InputError("zero has no multiplicative order");
  std::uint64_t d = q_ - 1;
  for (auto f : prime_factors(q_ - 1))
    while (d % f == 0 && pow(a, d / f) == 1) d /= f;
  return d;
}

}  // namespace arcgeom
