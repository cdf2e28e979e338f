#include "cpbase/field.hpp"

#include <algorithm>
#include <numeric>

#include "cpbase/numeric.hpp"

namespace cpb {
namespace {

// --- polynomial helpers over GF(p), used only during construction ---------
//
// Polynomials are coefficient vectors, ascending degree, no trailing zeros.

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  while (a.size() >= f.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - f.size();
    if (lead != 0) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::uint64_t sub = (lead * f[i]) % p;
        std::uint64_t& c = a[shift + i];
        c = (c + p - sub % p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
  Poly r = {1};
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    exp >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  auto inv_mod_p = [p](std::uint64_t x) {
    // Fermat inverse; p is prime and x != 0.
    std::uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    std::uint64_t il = inv_mod_p(b.back());
    Poly bm = b;
    for (auto& c : bm) c = c * il % p;
    Poly r = poly_mod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f, computed by repeated exponentiation by p.
Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned k) {
  Poly x = {0, 1};
  Poly r = x;
  for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
  return r;
}

bool is_irreducible(const Poly& f, std::uint64_t p, unsigned e) {
  // f monic of degree e over GF(p). Irreducible iff x^(p^e) = x mod f and,
  // for every prime r | e, gcd(x^(p^(e/r)) - x, f) = 1.
  Poly x = {0, 1};
  Poly xq = frobenius_power(f, p, e);
  if (xq != x) return false;
  for (std::uint64_t r : prime_factors(e)) {
    Poly g = frobenius_power(f, p, static_cast<unsigned>(e / r));
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = poly_gcd(f, g, p);
    if (!(d.size() == 1)) return false;  // nonconstant common factor
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint64_t p, unsigned e, std::uint64_t cap) {
  if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw DegreeOutOfRange("extension degree must be at least 1");
  // Overflow-safe computation of q = p^e against the cap.
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > cap / p) throw FieldTooLarge("field order exceeds cap " + std::to_string(cap));
    q *= p;
  }
  if (q > cap) throw FieldTooLarge("field order exceeds cap " + std::to_string(cap));

  auto fld = std::shared_ptr<Field>(new Field());
  fld->p_ = p;
  fld->e_ = e;
  fld->q_ = q;

  // Defining polynomial: scan monic degree-e polynomials in ascending order
  // of their non-leading coefficient vector (encoded base p) and keep the
  // first irreducible one. For e = 1 no modulus is needed.
  Poly mod;
  if (e > 1) {
    bool found = false;
    for (std::uint64_t code = 0; code < q && !found; ++code) {
      Poly f(e + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < e; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[e] = 1;
      if (is_irreducible(f, p, e)) {
        mod = f;
        found = true;
      }
    }
    if (!found) throw BadParameters("no irreducible polynomial found");  // unreachable for prime p
    fld->modulus_.assign(mod.begin(), mod.end());
  }

  // Raw product of two encoded elements, used until the tables exist.
  auto decode = [&](scalar_t a) {
    Poly f;
    std::uint64_t v = a;
    while (v) {
      f.push_back(v % p);
      v /= p;
    }
    return f;
  };
  auto encode = [&](const Poly& f) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return static_cast<scalar_t>(v);
  };
  auto raw_mul = [&](scalar_t a, scalar_t b) -> scalar_t {
    if (e == 1) return static_cast<scalar_t>((std::uint64_t(a) * b) % p);
    return encode(poly_mod(poly_mul(decode(a), decode(b), p), mod, p));
  };
  auto raw_pow = [&](scalar_t a, std::uint64_t k) {
    scalar_t r = 1, base = a;
    while (k) {
      if (k & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      k >>= 1;
    }
    return r;
  };

  // Least-valued generator of the unit group: a is a generator iff
  // a^((q-1)/r) != 1 for every prime r | q-1.
  const auto unit_factors = prime_factors(q - 1);
  scalar_t gen = 0;
  for (std::uint64_t a = 1; a < q; ++a) {
    bool ok = true;
    for (std::uint64_t r : unit_factors) {
      if (raw_pow(static_cast<scalar_t>(a), (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = static_cast<scalar_t>(a);
      break;
    }
  }
  if (gen == 0 && q > 2) throw BadParameters("no multiplicative generator found");  // unreachable
  if (q == 2) gen = 1;
  fld->generator_ = gen;

  fld->exp_.resize(q - 1);
  fld->log_.assign(q, 0);
  scalar_t cur = 1;
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    fld->exp_[k] = cur;
    fld->log_[cur] = static_cast<scalar_t>(k);
    cur = raw_mul(cur, gen);
  }
  return fld;
}

scalar_t Field::add_ext(scalar_t a, scalar_t b) const {
  // Digit-wise addition modulo p; no carries between digits.
  std::uint64_t r = 0, mult = 1;
  std::uint64_t x = a, y = b;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t s = (x % p_ + y % p_) % p_;
    r += s * mult;
    mult *= p_;
    x /= p_;
    y /= p_;
  }
  return static_cast<scalar_t>(r);
}

scalar_t Field::neg_ext(scalar_t a) const {
  std::uint64_t r = 0, mult = 1;
  std::uint64_t x = a;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    x /= p_;
  }
  return static_cast<scalar_t>(r);
}

std::uint64_t Field::multiplicative_order(scalar_t a) const {
  if (a == 0) throw BadParameters("order of zero is undefined");
  // ord(g^k) = (q-1) / gcd(q-1, k).
  std::uint64_t k = log_[a];
  return (q_ - 1) / std::gcd(q_ - 1, k);
}

std::vector<scalar_t> Field::digits(scalar_t a) const {
  std::vector<scalar_t> d(e_);
  std::uint64_t v = a;
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = static_cast<scalar_t>(v % p_);
    v /= p_;
  }
  return d;
}

}  // namespace cpb
