#include "spinorbit/upoly.hpp"

#include <stdexcept>

namespace spinorbit {

UPoly UPoly::constant(const GaussRat& a) {
  UPoly p;
  if (!a.is_zero()) p.c.push_back(a);
  return p;
}

UPoly UPoly::t() {
  UPoly p;
  p.c = {GaussRat(0), GaussRat(1)};
  return p;
}

void UPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

GaussRat UPoly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  UPoly d;
  for (size_t k = 1; k < c.size(); k++) d.c.push_back(c[k] * GaussRat(static_cast<long>(k)));
  d.trim();
  return d;
}

UPoly UPoly::monic() const {
  if (is_zero()) throw std::domain_error("UPoly::monic on zero polynomial");
  return *this * lead().inv();
}

UPoly UPoly::inflate(int k) const {
  UPoly r;
  if (is_zero()) return r;
  r.c.assign(static_cast<size_t>(deg()) * k + 1, GaussRat(0));
  for (size_t j = 0; j < c.size(); j++) r.c[j * k] = c[j];
  r.trim();
  return r;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return *this;
  // gcd of all numerators / lcm of all denominators across re and im parts
  mpz_class g = 0, l = 1;
  auto absorb = [&](const mpq_class& q) {
    if (q == 0) return;
    g = gcd(g, q.get_num());
    l = lcm(l, q.get_den());
  };
  for (const auto& z : c) {
    absorb(z.re);
    absorb(z.im);
  }
  GaussRat scale{mpq_class(l) / mpq_class(g)};
  return *this * scale;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); k++) {
    if (k < a.c.size()) r.c[k] += a.c[k];
    if (k < b.c.size()) r.c[k] += b.c[k];
  }
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); k++) {
    if (k < a.c.size()) r.c[k] += a.c[k];
    if (k < b.c.size()) r.c[k] -= b.c[k];
  }
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, GaussRat(0));
  for (size_t j = 0; j < a.c.size(); j++) {
    if (a.c[j].is_zero()) continue;
    for (size_t k = 0; k < b.c.size(); k++) {
      if (b.c[k].is_zero()) continue;
      r.c[j + k] += a.c[j] * b.c[k];
    }
  }
  r.trim();
  return r;
}

UPoly UPoly::operator*(const GaussRat& s) const {
  UPoly r;
  if (s.is_zero()) return r;
  r.c = c;
  for (auto& z : r.c) z *= s;
  return r;
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = deg(); k >= 0; k--) {
    const GaussRat& z = c[k];
    if (z.is_zero()) continue;
    std::string coef = to_string(z);
    bool neg = coef[0] == '-' && z.im * z.re == 0;  // single-part negatives
    if (!out.empty()) {
      out += neg ? " - " : " + ";
      if (neg) coef = coef.substr(1);
    }
    if (k == 0) {
      out += coef;
    } else {
      std::string mono = (k == 1) ? "t" : "t^" + std::to_string(k);
      if (coef == "1") {
        out += mono;
      } else if (coef == "-1") {
        out += "-" + mono;
      } else {
        bool composite = !z.is_real() && z.re != 0;
        out += (composite ? "(" + coef + ")" : coef) + "*" + mono;
      }
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly divmod by zero");
  UPoly q, r = a;
  if (r.deg() >= b.deg()) q.c.assign(r.deg() - b.deg() + 1, GaussRat(0));
  GaussRat linv = b.lead().inv();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    GaussRat f = r.lead() * linv;
    q.c[shift] = f;
    for (int k = 0; k <= b.deg(); k++) r.c[k + shift] -= f * b.c[k];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly::zero();
  return divmod(a * b, gcd(a, b)).first.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of zero");
  if (p.deg() == 0) return UPoly::constant(GaussRat(1));
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

// --- mod-p machinery ---

namespace {

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
uint64_t fp_inv(uint64_t a, uint64_t p) { return fp_pow(a, p - 2, p); }

uint64_t mpz_mod_u64(const mpz_class& z, uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::optional<FpPoly> reduce_mod(const UPoly& q, uint64_t p, uint64_t r) {
  FpPoly out;
  out.p = p;
  out.c.reserve(q.c.size());
  for (const auto& z : q.c) {
    if (mpz_mod_u64(z.re.get_den(), p) == 0 || mpz_mod_u64(z.im.get_den(), p) == 0)
      return std::nullopt;
    uint64_t re = fp_mul(mpz_mod_u64(z.re.get_num(), p),
                         fp_inv(mpz_mod_u64(z.re.get_den(), p), p), p);
    uint64_t im = fp_mul(mpz_mod_u64(z.im.get_num(), p),
                         fp_inv(mpz_mod_u64(z.im.get_den(), p), p), p);
    out.c.push_back(fp_add(re, fp_mul(im, r, p), p));
  }
  out.trim();
  return out;
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly d;
  d.p = a.p;
  for (size_t k = 1; k < a.c.size(); k++)
    d.c.push_back(fp_mul(a.c[k], k % a.p, a.p));
  d.trim();
  return d;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  uint64_t p = a.p;
  while (!b.c.empty()) {
    // a mod b
    uint64_t linv = fp_inv(b.c.back(), p);
    while (a.c.size() >= b.c.size() && !a.c.empty()) {
      uint64_t f = fp_mul(a.c.back(), linv, p);
      size_t shift = a.c.size() - b.c.size();
      for (size_t k = 0; k < b.c.size(); k++)
        a.c[k + shift] = fp_sub(a.c[k + shift], fp_mul(f, b.c[k], p), p);
      a.trim();
    }
    std::swap(a, b);
  }
  return a;
}

std::pair<uint64_t, uint64_t> split_prime(int skip) {
  // Fixed list of primes = 1 (mod 4) near 2^30 keeps products in uint64.
  // Every entry must actually be a prime in that residue class: fp_inv
  // relies on Fermat inversion, and the r returned below squares to -1
  // only when (p-1)/4 is exact, so a composite or 3 (mod 4) entry breaks
  // modular division (fp_gcd then fails to cancel leading terms).
  static const uint64_t primes[] = {1073741833ULL, 1073741857ULL, 1073741909ULL,
                                    1073741953ULL, 1073741969ULL, 1073741993ULL};
  uint64_t p = primes[skip % 6];
  // r = g^((p-1)/4) for a non-residue g has r^2 = -1.
  for (uint64_t g = 2;; g++) {
    if (fp_pow(g, (p - 1) / 2, p) == p - 1) {
      return {p, fp_pow(g, (p - 1) / 4, p)};
    }
  }
}

bool squarefree(const UPoly& q) {
  if (q.is_zero()) throw std::domain_error("squarefree of zero polynomial");
  if (q.deg() <= 1) return true;
  // Certificate: pick p with lead(q) and deg preserved mod p; if
  // gcd(q mod p, q' mod p) = 1 then Res(q, q') != 0 mod p, hence over Q(i).
  for (int attempt = 0; attempt < 3; attempt++) {
    auto [p, r] = split_prime(attempt);
    auto qm = reduce_mod(q, p, r);
    if (!qm || qm->deg() != q.deg()) continue;
    FpPoly g = fp_gcd(*qm, fp_derivative(*qm));
    if (g.deg() == 0) return true;
    // Inconclusive: reduction may have collided; try another prime once,
    // then settle it exactly.
  }
  return gcd(q, q.derivative()).deg() == 0;
}

RootList gauss_rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of zero polynomial");
  RootList out;
  out.remaining = p;
  // A root a+bi of the monic rational-ized polynomial is an algebraic
  // number in Q(i); for the monic primitive integer polynomial all Q(i)
  // roots are Gaussian integers dividing the constant term (after
  // stripping t-powers).  Strip t first.
  int tmult = 0;
  while (out.remaining.deg() >= 1 && out.remaining.c[0].is_zero()) {
    out.remaining.c.erase(out.remaining.c.begin());
    tmult++;
  }
  if (tmult > 0) out.roots.push_back({GaussRat(0), tmult});
  UPoly work = out.remaining.monic();
  // Denominator clearing: roots of monic(p) with rational coefficients
  // satisfy d*root is an algebraic integer where d = lcm of denominators
  // raised appropriately; instead substitute t = s/d to get a monic
  // integer polynomial in s and divide candidate roots by d.
  mpz_class d = 1;
  for (const auto& z : work.c) {
    d = lcm(d, z.re.get_den());
    d = lcm(d, z.im.get_den());
  }
  // q(s) = d^n * p(s/d) is monic with Gaussian-integer coefficients.
  UPoly q = work;
  mpz_class dk = 1;
  for (int k = work.deg() - 1; k >= 0; k--) {
    dk *= d;
    q.c[k] *= GaussRat(mpq_class(dk));
  }
  // Enumerate Gaussian-integer divisors of the constant term of q by
  // scanning |a|,|b| up to sqrt(N(c0)); fine for the small eigenvalue
  // scales this project meets.  Then test p at candidate/d.
  GaussRat c0 = q.c[0];
  mpz_class N = c0.re.get_num() * c0.re.get_num() + c0.im.get_num() * c0.im.get_num();
  if (c0.is_zero()) N = 0;
  mpz_class bound = sqrt(N) + 1;
  if (bound > 2000) bound = 2000;  // guard; completeness is checked by caller
  long ibound = bound.get_si();
  for (long a = -ibound; a <= ibound; a++) {
    for (long b = -ibound; b <= ibound; b++) {
      if (a == 0 && b == 0) continue;
      unsigned long norm2 = static_cast<unsigned long>(a * a + b * b);
      if (mpz_fdiv_ui(N.get_mpz_t(), norm2) != 0)
        continue;  // not a Gaussian divisor norm
      GaussRat cand(mpq_class(a) / mpq_class(d), mpq_class(b) / mpq_class(d));
      int mult = 0;
      while (!out.remaining.is_zero() && out.remaining.deg() >= 1 &&
             out.remaining.eval(cand).is_zero()) {
        UPoly lin;
        lin.c = {-cand, GaussRat(1)};
        out.remaining = divmod(out.remaining, lin).first;
        mult++;
      }
      if (mult > 0) out.roots.push_back({cand, mult});
      if (out.remaining.deg() <= 0) break;
    }
    if (out.remaining.deg() <= 0) break;
  }
  return out;
}

}  // namespace spinorbit
