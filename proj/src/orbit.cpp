// Element-level orbit machinery: exact semisimplicity and nilpotency
// tests through the graded block structure of ad, Jordan decomposition
// inside the degree-1 component, centralizers, structure signatures of
// centralizer subalgebras, sl2-triple completion, the open-orbit
// criterion, absolute and relative dominant characteristics, and the
// drivers that re-verify the printed tables of mixed elements.
#include "spinorbit/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "spinorbit/reflgroup.hpp"
#include "spinorbit/tables.hpp"
#include "spinorbit/upoly.hpp"

namespace spinorbit {
namespace {

const std::vector<int>& comp(int d) { return E8::get().component(d & 3); }

// ---------- generic linear helpers ----------

Mat columns_of(const std::vector<LieElement>& elems, int dim = E8::DIM) {
  Mat m(dim, static_cast<int>(elems.size()));
  for (size_t j = 0; j < elems.size(); ++j) {
    Vec v = elems[j].to_vec();
    for (int r = 0; r < dim; ++r) m.at(r, static_cast<int>(j)) = v[r];
  }
  return m;
}

Mat columns_from(const std::vector<Vec>& cols, int dim) {
  Mat m(dim, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r < dim; ++r) m.at(r, static_cast<int>(j)) = cols[j][r];
  return m;
}

// Solves a x = b for every b in rhs with a single elimination; free
// variables are set to zero.  All systems must be consistent: a pivot
// inside the right-hand block would invalidate the read-off, so it
// throws instead.
std::vector<Vec> solve_multi(const Mat& a, const std::vector<Vec>& rhs,
                             const char* what) {
  int n = a.cols;
  int k = static_cast<int>(rhs.size());
  Mat aug(a.rows, n + k);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (int j = 0; j < k; ++j) aug.at(r, n + j) = rhs[j][r];
  }
  RrefResult rr = rref(aug);
  std::vector<int> pivot_row(n + k, -1);
  for (size_t t = 0; t < rr.pivot_cols.size(); ++t)
    pivot_row[rr.pivot_cols[t]] = static_cast<int>(t);
  for (int j = 0; j < k; ++j)
    if (pivot_row[n + j] >= 0)
      throw std::invalid_argument(std::string(what) +
                                  ": inconsistent linear system");
  std::vector<Vec> out(rhs.size());
  for (int j = 0; j < k; ++j) {
    Vec x(n, GaussRat());
    for (int c = 0; c < n; ++c)
      if (pivot_row[c] >= 0) x[c] = rr.echelon.at(pivot_row[c], n + j);
    out[j] = std::move(x);
  }
  return out;
}

// Common kernel of square matrices on Q(i)^dim, by iterative
// restriction of each map to the running kernel.
// Scale a rational vector to a primitive integer one (entries coprime);
// keeps coefficient growth in check wherever a kernel vector seeds
// minimal-polynomial or structure-constant computations.
Vec primitive_vec(const Vec& v) {
  mpz_class lc = 1, gc = 0;
  for (const GaussRat& g : v) {
    lc = lcm(lc, g.re.get_den());
    lc = lcm(lc, g.im.get_den());
  }
  for (const GaussRat& g : v) {
    gc = gcd(gc, mpz_class(g.re.get_num() * (lc / g.re.get_den())));
    gc = gcd(gc, mpz_class(g.im.get_num() * (lc / g.im.get_den())));
  }
  if (gc == 0) return v;
  GaussRat scale((mpq_class(lc) / mpq_class(gc)));
  Vec out;
  out.reserve(v.size());
  for (const GaussRat& g : v) out.push_back(g * scale);
  return out;
}

std::vector<Vec> common_kernel(const std::vector<Mat>& maps, int dim) {
  std::vector<Vec> basis(dim, Vec(dim, GaussRat()));
  for (int i = 0; i < dim; ++i) basis[i][i] = GaussRat(1);
  for (const Mat& m : maps) {
    if (basis.empty()) break;
    Mat restr(dim, static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      Vec img = m.apply(basis[j]);
      for (int r = 0; r < dim; ++r) restr.at(r, static_cast<int>(j)) = img[r];
    }
    std::vector<Vec> coords = kernel_basis(restr);
    std::vector<Vec> next;
    for (const Vec& c : coords) {
      Vec v(dim, GaussRat());
      for (size_t j = 0; j < basis.size(); ++j)
        if (!c[j].is_zero())
          for (int r = 0; r < dim; ++r) v[r] += c[j] * basis[j][r];
      next.push_back(std::move(v));
    }
    basis.swap(next);
  }
  return basis;
}

// Eigenvalues of a rational matrix through an integer rescaling: clearing
// the entry denominators first keeps the divisor scan of the root finder
// on integer candidates of moderate size (a direct scan on the rational
// characteristic polynomial would need candidates scaled by the full lcm
// of its coefficient denominators, which can dwarf the scan bound).  The
// roots are mapped back to the original matrix; `remaining` stays in the
// scaled variable and is only meaningful through complete().
RootList scaled_eigenvalues(const Mat& m, bool with_multiplicity) {
  mpz_class delta = 1;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      delta = lcm(delta, m.at(r, c).re.get_den());
      delta = lcm(delta, m.at(r, c).im.get_den());
    }
  Mat ms = m;
  if (delta != 1) ms = m * GaussRat(mpq_class(delta), mpq_class(0));
  RootList rl =
      gauss_rational_roots(with_multiplicity ? char_poly(ms) : min_poly(ms));
  if (delta != 1) {
    GaussRat inv(mpq_class(1, delta), mpq_class(0));
    for (auto& rm : rl.roots) rm.first = rm.first * inv;
  }
  return rl;
}

// All eigenvalues with algebraic multiplicity, sorted descending;
// requires every eigenvalue to be a real element of the scalar field.
std::vector<GaussRat> eigen_desc(const Mat& m, const char* what) {
  RootList rl = scaled_eigenvalues(m, true);
  if (!rl.complete())
    throw std::runtime_error(std::string(what) +
                             ": eigenvalues do not lie in the scalar field");
  std::vector<GaussRat> ev;
  for (const auto& [lam, mult] : rl.roots) {
    if (!lam.is_real())
      throw std::runtime_error(std::string(what) +
                               ": eigenvalues are not real");
    for (int t = 0; t < mult; ++t) ev.push_back(lam);
  }
  std::sort(ev.begin(), ev.end(),
            [](const GaussRat& x, const GaussRat& y) { return y < x; });
  return ev;
}

// Matrix of ad x restricted to the span of the given basis; throws if
// the image leaves the span.
Mat ad_in_span(const LieElement& x, const std::vector<LieElement>& basis) {
  int m = static_cast<int>(basis.size());
  Mat b = columns_of(basis);
  std::vector<Vec> images;
  images.reserve(basis.size());
  for (const LieElement& v : basis) images.push_back(bracket(x, v).to_vec());
  std::vector<Vec> co = solve_multi(b, images, "ad restriction");
  Mat out(m, m);
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < m; ++r) out.at(r, j) = co[j][r];
  return out;
}

// ---------- graded blocks of ad ----------

// ad x of a homogeneous x shifts the grading by deg, so its fourth
// (second, first) power is block diagonal; cycle[a] is the composition
// of steps around the degree circle, back to component a.
struct GradedBlocks {
  int cycle_len = 1;
  std::array<SparseMat, 4> step;   // ad x : comp(a) -> comp(a+deg)
  std::array<SparseMat, 4> cycle;  // comp(a) -> comp(a)
};

GradedBlocks graded_blocks(const LieElement& x, int deg) {
  GradedBlocks g;
  deg &= 3;
  for (int a = 0; a < 4; ++a)
    g.step[a] = ad_matrix(x, comp(a), comp((a + deg) & 3));
  g.cycle_len = (deg == 0) ? 1 : (deg == 2 ? 2 : 4);
  for (int a = 0; a < 4; ++a) {
    SparseMat m = g.step[a];
    int at = (a + deg) & 3;
    for (int k = 1; k < g.cycle_len; ++k) {
      m = g.step[at] * m;
      at = (at + deg) & 3;
    }
    g.cycle[a] = std::move(m);
  }
  return g;
}

// Least common multiple of the cycle-block minimal polynomials: the
// minimal polynomial of the block-diagonal (ad x)^cycle_len.
UPoly cycle_annihilator(const GradedBlocks& g) {
  UPoly q = UPoly::constant(GaussRat(1));
  for (int a = 0; a < 4; ++a)
    if (g.cycle[a].rows > 0) q = lcm(q, min_poly(g.cycle[a]));
  return q;
}

// The descending image chain V_{k+1} = sum_i maps_i(V_k), starting from
// the full space; reaches zero iff every long enough product of the
// maps vanishes, which certifies that every element of their span is
// nilpotent (and for a single map, that the map itself is).
bool images_descend_to_zero(int dim, const std::vector<SparseMat>& maps) {
  if (dim == 0 || maps.empty()) return true;
  std::vector<Vec> cur(dim, Vec(dim, GaussRat()));
  for (int i = 0; i < dim; ++i) cur[i][i] = GaussRat(1);
  while (true) {
    SpanBuilder sb(dim);
    for (const SparseMat& m : maps)
      for (const Vec& v : cur) sb.add(m.apply(v));
    if (sb.rank() == 0) return true;
    if (sb.rank() >= static_cast<int>(cur.size())) return false;
    cur = sb.rows();
  }
}

int sparse_rank(const SparseMat& m) { return rref(m).rank; }

// ---------- arithmetic mod a word-size split prime ----------
//
// The Jordan projection polynomial is computed modulo several primes
// p = 1 (mod 4), with i mapped to a square root r of -1; the exact
// coefficients of the semisimple part are then recovered by Chinese
// remaindering and rational reconstruction, and the candidate is
// certified exactly (Jordan uniqueness makes the certificate
// sufficient, so no prime needs to be trusted).

uint64_t fp_addu(uint64_t a, uint64_t b, uint64_t p) {
  a += b;
  if (a >= p) a -= p;
  return a;
}
uint64_t fp_subu(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
uint64_t fp_mulu(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
uint64_t fp_powu(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = fp_mulu(r, a, p);
    a = fp_mulu(a, a, p);
    e >>= 1;
  }
  return r;
}
uint64_t fp_invu(uint64_t a, uint64_t p) { return fp_powu(a, p - 2, p); }

std::optional<uint64_t> fp_of(const GaussRat& g, uint64_t p, uint64_t r) {
  auto md = [&](const mpz_class& z) -> uint64_t {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
  };
  uint64_t rd = md(g.re.get_den()), id = md(g.im.get_den());
  if (rd == 0 || id == 0) return std::nullopt;
  uint64_t re = fp_mulu(md(g.re.get_num()), fp_invu(rd, p), p);
  uint64_t im = fp_mulu(md(g.im.get_num()), fp_invu(id, p), p);
  return fp_addu(re, fp_mulu(im, r, p), p);
}

// dense polynomials over F_p, coefficients ascending, no trailing zeros
using FpP = std::vector<uint64_t>;

void fpp_trim(FpP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// reduction of an exact polynomial; fails on denominator collisions or
// if the degree drops
std::optional<FpP> fpp_of(const UPoly& q, uint64_t p, uint64_t r) {
  FpP out;
  for (const GaussRat& g : q.c) {
    auto v = fp_of(g, p, r);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  fpp_trim(out);
  if (static_cast<int>(out.size()) != q.deg() + 1) return std::nullopt;
  return out;
}

FpP fpp_mul(const FpP& a, const FpP& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpP out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = fp_addu(out[i + j], fp_mulu(a[i], b[j], p), p);
  }
  fpp_trim(out);
  return out;
}

void fpp_reduce(FpP& a, const FpP& m, uint64_t p) {
  uint64_t linv = fp_invu(m.back(), p);
  while (a.size() >= m.size()) {
    uint64_t f = fp_mulu(a.back(), linv, p);
    size_t shift = a.size() - m.size();
    if (f != 0)
      for (size_t k = 0; k < m.size(); ++k)
        a[k + shift] = fp_subu(a[k + shift], fp_mulu(f, m[k], p), p);
    a.pop_back();
    fpp_trim(a);
    if (a.empty()) return;
  }
}

FpP fpp_mulmod(const FpP& a, const FpP& b, const FpP& m, uint64_t p) {
  FpP out = fpp_mul(a, b, p);
  fpp_reduce(out, m, p);
  return out;
}

FpP fpp_sub(FpP a, const FpP& b, uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t k = 0; k < b.size(); ++k) a[k] = fp_subu(a[k], b[k], p);
  fpp_trim(a);
  return a;
}

FpP fpp_deriv(const FpP& a, uint64_t p) {
  FpP d;
  for (size_t k = 1; k < a.size(); ++k)
    d.push_back(fp_mulu(a[k], k % p, p));
  fpp_trim(d);
  return d;
}

std::optional<FpP> fpp_invmod(const FpP& a, const FpP& m, uint64_t p) {
  FpP r0 = m, r1 = a;
  fpp_reduce(r1, m, p);
  FpP s0, s1{1};
  while (!r1.empty()) {
    // one Euclid step r0 = q r1 + r2 with the quotient folded into s
    FpP q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    FpP rem = r0;
    uint64_t linv = fp_invu(r1.back(), p);
    while (rem.size() >= r1.size()) {
      uint64_t f = fp_mulu(rem.back(), linv, p);
      size_t shift = rem.size() - r1.size();
      q[shift] = f;
      if (f != 0)
        for (size_t k = 0; k < r1.size(); ++k)
          rem[k + shift] = fp_subu(rem[k + shift], fp_mulu(f, r1[k], p), p);
      rem.pop_back();
      fpp_trim(rem);
      if (rem.empty()) break;
    }
    fpp_trim(q);
    FpP s2 = fpp_sub(s0, fpp_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;  // gcd not constant
  uint64_t ginv = fp_invu(r0[0], p);
  for (uint64_t& c : s0) c = fp_mulu(c, ginv, p);
  fpp_trim(s0);
  fpp_reduce(s0, m, p);
  return s0;
}

FpP fpp_compose_mod(const FpP& f, const FpP& x, const FpP& m, uint64_t p) {
  FpP r;
  for (size_t k = f.size(); k-- > 0;) {
    r = fpp_mulmod(r, x, m, p);
    if (f[k] != 0) {
      if (r.empty()) r.push_back(0);
      r[0] = fp_addu(r[0], f[k], p);
      fpp_trim(r);
    }
  }
  return r;
}

bool fpp_squarefree(const FpP& a, uint64_t p) {
  FpP x = a, y = fpp_deriv(a, p);
  // Euclid gcd
  while (!y.empty()) {
    FpP rem = x;
    fpp_reduce(rem, y, p);
    x = std::move(y);
    y = std::move(rem);
  }
  return x.size() == 1;
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                        23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t y = fp_powu(base % n, d, n);
    if (y == 1 || y == n - 1) continue;
    bool witness = true;
    for (int k = 1; k < s; ++k) {
      y = fp_mulu(y, y, n);
      if (y == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// an unbounded stream of primes = 1 (mod 4) with a square root of -1
std::pair<uint64_t, uint64_t> split_prime_above(uint64_t start) {
  uint64_t p = start | 1;
  if (p % 4 != 1) p += 2;
  for (;; p += 4) {
    if (!is_prime_u64(p)) continue;
    for (uint64_t g = 2;; ++g)
      if (fp_powu(g, (p - 1) / 2, p) == p - 1)
        return {p, fp_powu(g, (p - 1) / 4, p)};
  }
}

// x' = x mod m, = v mod p for the accumulated modulus m (coprime to p)
void crt_update(mpz_class& x, const mpz_class& m, uint64_t v, uint64_t p) {
  uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), p);
  uint64_t mm = mpz_fdiv_ui(m.get_mpz_t(), p);
  uint64_t delta = fp_mulu(fp_subu(v, xm, p), fp_invu(mm, p), p);
  x += m * static_cast<unsigned long>(delta);
}

// unique n/d = u mod m with |n|, |d| <= sqrt(m/2), if one exists
std::optional<mpq_class> rat_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (2 * r1 * r1 >= m) {
    mpz_class quo = r0 / r1;
    mpz_class r2 = r0 - quo * r1;
    mpz_class t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || 2 * t1 * t1 > m) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

// ---------- degree-1 probe for reading off semisimple parts ----------

// A fixed degree-0 Cartan element pairing nontrivially with every
// degree-1 root, plus those pairings; [s, probe] then determines every
// coordinate of a degree-1 semisimple part s.
struct Probe {
  LieElement h;
  std::vector<GaussRat> alpha;  // by position in comp(1)
};

const Probe& g1_probe() {
  static const Probe probe = [] {
    const std::vector<int>& g1 = comp(1);
    for (long base : {2L, 3L, 5L, 7L, 11L, 13L}) {
      Probe cand;
      GaussRat w(1);
      for (int i = 0; i < 8; ++i) {
        cand.h.set(i, w);
        w *= GaussRat(base);
      }
      bool ok = true;
      for (int lab : g1) {
        GaussRat a = bracket(cand.h, LieElement::basis(lab)).coeff(lab);
        if (a.is_zero()) {
          ok = false;
          break;
        }
        cand.alpha.push_back(a);
      }
      if (ok) return cand;
    }
    throw std::runtime_error("no separating degree-1 probe found");
  }();
  return probe;
}

}  // namespace

// ---------- exact matrix utilities ----------

UPoly char_poly(const Mat& a) {
  int n = a.rows;
  std::vector<GaussRat> c(n + 1);
  c[n] = GaussRat(1);
  Mat am(n, n);  // a * M_{k-1}, starts at zero
  for (int k = 1; k <= n; ++k) {
    Mat m = am;
    for (int d = 0; d < n; ++d) m.at(d, d) += c[n - k + 1];
    am = a * m;
    GaussRat tr;
    for (int d = 0; d < n; ++d) tr += am.at(d, d);
    c[n - k] = -(tr / GaussRat(k));
  }
  return UPoly(c);
}

// ---------- element tests ----------

bool is_semisimple(const LieElement& x) {
  if (x.is_zero()) return true;
  int d = 0;
  if (x.homogeneous_degree(d)) {
    GradedBlocks g = graded_blocks(x, d);
    UPoly q = cycle_annihilator(g);
    if (!squarefree(q)) return false;
    if ((d & 3) == 0) return true;
    // (ad x)^L is semisimple; ad x is iff no extra kernel collapses in
    // between, i.e. ker(ad x) = ker((ad x)^L).
    int ker1 = 0, kerl = 0;
    for (int a = 0; a < 4; ++a) {
      int n = static_cast<int>(comp(a).size());
      ker1 += n - sparse_rank(g.step[a]);
      kerl += n - sparse_rank(g.cycle[a]);
    }
    return ker1 == kerl;
  }
  return squarefree(min_poly(ad_matrix_full(x)));
}

bool is_nilpotent(const LieElement& x) {
  if (x.is_zero()) return true;
  int d = 0;
  if (x.homogeneous_degree(d)) {
    GradedBlocks g = graded_blocks(x, d);
    for (int a = 0; a < 4; ++a)
      if (!images_descend_to_zero(static_cast<int>(comp(a).size()),
                                  {g.cycle[a]}))
        return false;
    return true;
  }
  return images_descend_to_zero(E8::DIM, {ad_matrix_full(x)});
}

// ---------- Jordan decomposition in the degree-1 component ----------

JordanParts jordan_g1(const LieElement& x) {
  if (x.is_zero()) return {LieElement::zero(), LieElement::zero()};
  int d = 0;
  if (!x.homogeneous_degree(d) || (d & 3) != 1)
    throw std::invalid_argument("jordan_g1: element is not of degree 1");

  // A = ad x, B = A^4 block diagonal with minimal polynomial q(u);
  // the semisimple part of A is A c(B) with u c(u)^4 = pi(u) mod q,
  // where pi is the semisimple projection for B and c is the branch
  // with c = 1 at every nonzero eigenvalue of B (and c = 0 on the
  // power-of-u factor of q, where A is nilpotent).
  GradedBlocks g = graded_blocks(x, 1);
  UPoly q = cycle_annihilator(g);
  int um = 0;  // multiplicity of the root u = 0 in q
  while (um <= q.deg() && q.c[um].is_zero()) ++um;
  std::vector<GaussRat> qp(q.c.begin() + um, q.c.end());
  UPoly q_plus(qp);

  if (q_plus.deg() == 0) {
    // q is a power of u, so B and hence A is nilpotent
    return {LieElement::zero(), x};
  }
  if (um == 0 && squarefree(q)) {
    // q(t^4) is then also squarefree (the nonzero roots of q each
    // contribute four distinct fourth roots), and it annihilates A
    return {x, LieElement::zero()};
  }

  UPoly gsf = squarefree_part(q);

  // The coefficients of the semisimple part are recovered from their
  // images modulo split primes: i maps to the two square roots +-r of
  // -1, separating real and imaginary parts.  Any candidate passing
  // the exact certificate below is the Jordan part, by uniqueness.
  const Probe& probe = g1_probe();
  SparseMat a = ad_matrix_full(x);
  Vec v = probe.h.to_vec();
  const std::vector<int>& g1lab = comp(1);
  const size_t ng = g1lab.size();

  auto residues_mod =
      [&](uint64_t p, uint64_t r) -> std::optional<std::vector<uint64_t>> {
    auto qf = fpp_of(q, p, r);
    auto qpf = fpp_of(q_plus, p, r);
    auto gf = fpp_of(gsf, p, r);
    if (!qf || !qpf || !gf) return std::nullopt;
    if ((*qpf)[0] == 0) return std::nullopt;       // u must stay invertible
    if (!fpp_squarefree(*gf, p)) return std::nullopt;  // radical reduces faithfully

    // Newton iteration for the semisimple projection pi mod (p, q)
    FpP gd = fpp_deriv(*gf, p);
    FpP pi{0, 1};
    fpp_reduce(pi, *qf, p);
    bool ok = false;
    for (int it = 0; it < 64 && !ok; ++it) {
      FpP val = fpp_compose_mod(*gf, pi, *qf, p);
      if (val.empty()) {
        ok = true;
        break;
      }
      FpP slope = fpp_compose_mod(gd, pi, *qf, p);
      auto sinv = fpp_invmod(slope, *qf, p);
      if (!sinv) return std::nullopt;
      pi = fpp_sub(pi, fpp_mulmod(val, *sinv, *qf, p), p);
    }
    if (!ok) return std::nullopt;

    // Hensel iteration for the fourth root c = (pi/u)^(1/4) mod q_plus
    // on the branch with c = 1 modulo the radical
    FpP pip = pi;
    fpp_reduce(pip, *qpf, p);
    auto uinv = fpp_invmod(FpP{0, 1}, *qpf, p);
    if (!uinv) return std::nullopt;
    FpP rhs = fpp_mulmod(pip, *uinv, *qpf, p);
    FpP c{1};
    ok = false;
    for (int it = 0; it < 64 && !ok; ++it) {
      FpP c3 = fpp_mulmod(fpp_mulmod(c, c, *qpf, p), c, *qpf, p);
      FpP val = fpp_sub(fpp_mulmod(c3, c, *qpf, p), rhs, p);
      if (val.empty()) {
        ok = true;
        break;
      }
      FpP den = c3;
      for (uint64_t& cc : den) cc = fp_mulu(cc, 4 % p, p);
      auto dinv = fpp_invmod(den, *qpf, p);
      if (!dinv) return std::nullopt;
      c = fpp_sub(c, fpp_mulmod(val, *dinv, *qpf, p), p);
    }
    if (!ok) return std::nullopt;

    // glue with the power-of-u factor: c_full = 0 mod u^um, = c mod q_plus
    FpP c_full;
    if (um == 0) {
      c_full = c;
    } else {
      FpP upow(um + 1, 0);
      upow[um] = 1;
      FpP upr = upow;
      fpp_reduce(upr, *qpf, p);
      auto einv = fpp_invmod(upr, *qpf, p);
      if (!einv) return std::nullopt;
      c_full = fpp_mul(c, fpp_mul(upow, *einv, p), p);
      fpp_reduce(c_full, *qf, p);
    }

    // w = A c_full(B) v by Horner, entirely mod p
    std::vector<std::vector<std::pair<int, uint64_t>>> ap(E8::DIM);
    for (int row = 0; row < a.rows; ++row)
      for (const auto& [col, val] : a.row[row]) {
        auto f = fp_of(val, p, r);
        if (!f) return std::nullopt;
        if (*f != 0) ap[row].push_back({col, *f});
      }
    std::vector<uint64_t> vp(E8::DIM);
    for (int t = 0; t < E8::DIM; ++t) {
      auto f = fp_of(v[t], p, r);
      if (!f) return std::nullopt;
      vp[t] = *f;
    }
    auto apply = [&](const std::vector<uint64_t>& in) {
      std::vector<uint64_t> out(E8::DIM, 0);
      for (int row = 0; row < E8::DIM; ++row) {
        unsigned __int128 acc = 0;
        for (const auto& [col, val] : ap[row])
          acc += fp_mulu(val, in[col], p);
        out[row] = static_cast<uint64_t>(acc % p);
      }
      return out;
    };
    std::vector<uint64_t> w(E8::DIM, 0);
    for (size_t k = c_full.size(); k-- > 0;) {
      for (int quad = 0; quad < 4; ++quad) w = apply(w);
      if (c_full[k] != 0)
        for (int t = 0; t < E8::DIM; ++t)
          w[t] = fp_addu(w[t], fp_mulu(c_full[k], vp[t], p), p);
    }
    w = apply(w);

    // coordinate of s at a degree-1 root is -w there divided by alpha
    std::vector<uint64_t> out(ng);
    for (size_t j = 0; j < ng; ++j) {
      auto af = fp_of(probe.alpha[j], p, r);
      if (!af || *af == 0) return std::nullopt;
      out[j] = fp_mulu(fp_subu(0, w[g1lab[j]], p), fp_invu(*af, p), p);
    }
    return out;
  };

  mpz_class modulus = 1;
  std::vector<mpz_class> reacc(ng, 0), imacc(ng, 0);
  uint64_t next = uint64_t{1} << 31;
  int used = 0;
  const int max_primes = 64;
  while (used < max_primes) {
    auto [p, r] = split_prime_above(next);
    next = p + 1;
    auto plus = residues_mod(p, r);
    if (!plus) continue;
    auto minus = residues_mod(p, p - r);
    if (!minus) continue;
    uint64_t inv2 = fp_invu(2, p);
    uint64_t inv2r = fp_invu(fp_mulu(2, r, p), p);
    for (size_t j = 0; j < ng; ++j) {
      uint64_t rp = fp_mulu(fp_addu((*plus)[j], (*minus)[j], p), inv2, p);
      uint64_t ip = fp_mulu(fp_subu((*plus)[j], (*minus)[j], p), inv2r, p);
      crt_update(reacc[j], modulus, rp, p);
      crt_update(imacc[j], modulus, ip, p);
    }
    modulus *= static_cast<unsigned long>(p);
    ++used;
    if (used < 2) continue;

    LieElement s;
    bool complete = true;
    for (size_t j = 0; j < ng && complete; ++j) {
      auto re = rat_reconstruct(reacc[j], modulus);
      auto im = rat_reconstruct(imacc[j], modulus);
      if (!re || !im)
        complete = false;
      else if (*re != 0 || *im != 0)
        s.set(g1lab[j], GaussRat(*re, *im));
    }
    if (!complete) continue;
    LieElement n = x - s;
    if (!bracket(s, n).is_zero()) continue;
    if (!is_semisimple(s)) continue;
    if (!is_nilpotent(n)) continue;
    return {std::move(s), std::move(n)};
  }
  throw std::runtime_error("jordan_g1: modular reconstruction failed");
}

// ---------- centralizers and orbit dimensions ----------

std::vector<LieElement> centralizer_in(const std::vector<LieElement>& xs,
                                       const std::vector<int>& labels) {
  const std::vector<int>& all = all_basis_labels();
  SparseMat stacked(static_cast<int>(xs.size()) * E8::DIM,
                    static_cast<int>(labels.size()));
  for (size_t t = 0; t < xs.size(); ++t) {
    SparseMat m = ad_matrix(xs[t], labels, all);
    for (int r = 0; r < m.rows; ++r)
      for (const auto& [c, v] : m.row[r])
        stacked.add(static_cast<int>(t) * E8::DIM + r, c, v);
  }
  std::vector<LieElement> out;
  for (const Vec& k : kernel_basis(stacked))
    out.push_back(LieElement::from_vec_in(k, labels));
  return out;
}

std::vector<LieElement> centralizer_in(const LieElement& x,
                                       const std::vector<int>& labels) {
  return centralizer_in(std::vector<LieElement>{x}, labels);
}

std::vector<LieElement> centralizer_in_span(
    const LieElement& x, const std::vector<LieElement>& space) {
  if (space.empty()) return {};
  Mat m(E8::DIM, static_cast<int>(space.size()));
  for (size_t j = 0; j < space.size(); ++j) {
    Vec b = bracket(x, space[j]).to_vec();
    for (int r = 0; r < E8::DIM; ++r) m.at(r, static_cast<int>(j)) = b[r];
  }
  std::vector<LieElement> out;
  for (const Vec& k : kernel_basis(m)) {
    LieElement y;
    for (size_t j = 0; j < space.size(); ++j)
      if (!k[j].is_zero()) y = y + space[j] * k[j];
    out.push_back(std::move(y));
  }
  return out;
}

int orbit_dim_in_span(const std::vector<LieElement>& z0, const LieElement& e) {
  if (z0.empty()) return 0;
  Mat m(E8::DIM, static_cast<int>(z0.size()));
  for (size_t j = 0; j < z0.size(); ++j) {
    Vec b = bracket(z0[j], e).to_vec();
    for (int r = 0; r < E8::DIM; ++r) m.at(r, static_cast<int>(j)) = b[r];
  }
  return rank_of(m);
}

int orbit_dim_in_centralizer(const LieElement& p, const LieElement& e) {
  if (!bracket(p, e).is_zero())
    throw std::invalid_argument(
        "orbit_dim_in_centralizer: elements do not commute");
  return orbit_dim_in_span(centralizer_in(p, comp(0)), e);
}

// ---------- structure signatures ----------

std::string Signature::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < simple_types.size();) {
    size_t k = j;
    while (k < simple_types.size() && simple_types[k] == simple_types[j]) ++k;
    if (!first) os << '+';
    first = false;
    if (k - j > 1) os << (k - j);
    os << simple_types[j];
    j = k;
  }
  if (toral_dim > 0) {
    if (!first) os << '+';
    first = false;
    os << 't' << toral_dim;
  }
  if (nilpotent_dim > 0) {
    if (!first) os << '+';
    first = false;
    os << 'u' << nilpotent_dim;
  }
  if (first) return "0";
  return os.str();
}

std::optional<Signature> parse_signature(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  Signature sig;
  if (s == "0" || s == "1") return sig;
  if (s.empty()) return std::nullopt;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t nxt = s.find('+', pos);
    std::string tok =
        s.substr(pos, nxt == std::string::npos ? std::string::npos : nxt - pos);
    if (tok.empty()) return std::nullopt;
    size_t q = 0;
    int mult = 0;
    while (q < tok.size() && std::isdigit(static_cast<unsigned char>(tok[q])))
      mult = mult * 10 + (tok[q++] - '0');
    if (q == tok.size()) return std::nullopt;
    if (mult == 0) mult = 1;
    char head = tok[q];
    std::string rest = tok.substr(q + 1);
    if (rest.empty() ||
        !std::all_of(rest.begin(), rest.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      return std::nullopt;
    int num = std::stoi(rest);
    if (head == 't' || head == 'T') {
      if (mult != 1) return std::nullopt;
      sig.toral_dim += num;
    } else if (head == 'u' || head == 'U') {
      if (mult != 1) return std::nullopt;
      sig.nilpotent_dim += num;
    } else if (head >= 'A' && head <= 'G') {
      for (int t = 0; t < mult; ++t)
        sig.simple_types.push_back(std::string(1, head) + rest);
    } else {
      return std::nullopt;
    }
    if (nxt == std::string::npos) break;
    pos = nxt + 1;
  }
  std::sort(sig.simple_types.begin(), sig.simple_types.end());
  return sig;
}

namespace {

// The dimension of an absolutely simple Lie algebra determines its
// complex type whenever exactly one simple type has that dimension.
// That holds for every entry below (B2 = C2 and A3 = D3 are equalities
// of complex types, recorded under one name); the first genuinely
// ambiguous dimension, 78 (B6 and E6), is deliberately absent.
std::string type_by_dimension(int m) {
  static const std::map<int, const char*> table = {
      {3, "A1"},  {8, "A2"},  {10, "B2"}, {14, "G2"}, {15, "A3"}, {24, "A4"},
      {28, "D4"}, {35, "A5"}, {45, "D5"}, {48, "A6"}, {52, "F4"}};
  auto it = table.find(m);
  if (it == table.end())
    throw std::runtime_error("signature: simple ideal of dimension " +
                             std::to_string(m) +
                             " not recognized by dimension");
  return it->second;
}

}  // namespace

Signature signature_of(const std::vector<LieElement>& basis) {
  Signature sig;
  int n = static_cast<int>(basis.size());
  if (n == 0) return sig;

  Mat b = columns_of(basis);
  if (rank_of(b) != n)
    throw std::invalid_argument("signature_of: basis is dependent");

  // structure constants in span coordinates
  std::vector<Vec> brkt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      brkt.push_back(bracket(basis[i], basis[j]).to_vec());
  std::vector<Vec> cc;
  try {
    cc = solve_multi(b, brkt, "signature_of");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "signature_of: span is not closed under the bracket");
  }
  std::vector<Mat> adl(n, Mat(n, n));
  {
    size_t t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++t)
        for (int r = 0; r < n; ++r) {
          adl[i].at(r, j) = cc[t][r];
          adl[j].at(r, i) = -cc[t][r];
        }
  }

  // the subalgebra's own trace form
  Mat kl(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      GaussRat tr;
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) tr += adl[i].at(a, c) * adl[j].at(c, a);
      kl.at(i, j) = tr;
      kl.at(j, i) = tr;
    }

  // radical = orthogonal complement of the derived subalgebra
  SpanBuilder der(n);
  for (const Vec& c : cc) der.add(c);
  std::vector<Vec> rad;
  if (der.rank() == 0) {
    rad.assign(n, Vec(n, GaussRat()));
    for (int i = 0; i < n; ++i) rad[i][i] = GaussRat(1);
  } else {
    Mat r(der.rank(), n);
    for (int t = 0; t < der.rank(); ++t) {
      Vec kd = kl.apply(der.rows()[t]);
      for (int j = 0; j < n; ++j) r.at(t, j) = kd[j];
    }
    rad = kernel_basis(r);
  }
  int rdim = static_cast<int>(rad.size());

  // certify the radical: an ideal with vanishing derived series
  {
    SpanBuilder radspan(n);
    for (const Vec& v : rad) radspan.add(v);
    for (int i = 0; i < n; ++i)
      for (const Vec& v : rad)
        if (!radspan.contains(adl[i].apply(v)))
          throw std::runtime_error("signature_of: radical is not an ideal");
    std::vector<Vec> cur = rad;
    for (int depth = 0; depth <= rdim && !cur.empty(); ++depth) {
      SpanBuilder next(n);
      for (size_t a = 0; a < cur.size(); ++a)
        for (size_t b2 = a + 1; b2 < cur.size(); ++b2) {
          Vec lhs(n, GaussRat());
          for (int i = 0; i < n; ++i)
            if (!cur[a][i].is_zero()) {
              Vec img = adl[i].apply(cur[b2]);
              for (int r = 0; r < n; ++r) lhs[r] += cur[a][i] * img[r];
            }
          next.add(lhs);
        }
      if (next.rank() == 0) {
        cur.clear();
        break;
      }
      if (next.rank() >= static_cast<int>(cur.size()))
        throw std::runtime_error("signature_of: radical is not solvable");
      cur = next.rows();
    }
    if (!cur.empty())
      throw std::runtime_error("signature_of: radical is not solvable");
  }

  // nilpotent part of the radical: kernel of both trace forms
  std::vector<LieElement> radl;
  for (const Vec& v : rad) {
    LieElement y;
    for (int j = 0; j < n; ++j)
      if (!v[j].is_zero()) y = y + basis[j] * v[j];
    radl.push_back(std::move(y));
  }
  std::vector<Vec> nil;
  if (rdim > 0) {
    Mat forms(2 * rdim, rdim);
    for (int a = 0; a < rdim; ++a)
      for (int c = 0; c < rdim; ++c) {
        forms.at(a, c) = killing(radl[a], radl[c]);
        GaussRat q;
        Vec kr = kl.apply(rad[c]);
        for (int j = 0; j < n; ++j) q += rad[a][j] * kr[j];
        forms.at(rdim + a, c) = q;
      }
    nil = kernel_basis(forms);
  }
  // certify: basis vectors of the candidate nilpotent part must be
  // nilpotent elements; inside a solvable radical the triangular
  // diagonal functionals are linear, so this extends to the whole span,
  // and the trace-form kernel always contains the nilpotent ideal.
  for (const Vec& v : nil) {
    LieElement y;
    for (int a = 0; a < rdim; ++a)
      if (!v[a].is_zero()) y = y + radl[a] * v[a];
    if (!is_nilpotent(y))
      throw std::runtime_error(
          "signature_of: nilpotent part certification failed");
  }
  sig.nilpotent_dim = static_cast<int>(nil.size());
  sig.toral_dim = rdim - sig.nilpotent_dim;

  // semisimple quotient on a complement of the radical
  SpanBuilder compl_span(n);
  for (const Vec& v : rad) compl_span.add(v);
  std::vector<int> comp_idx;
  for (int j = 0; j < n; ++j) {
    Vec unit(n, GaussRat());
    unit[j] = GaussRat(1);
    if (compl_span.add(unit)) comp_idx.push_back(j);
  }
  int m2 = static_cast<int>(comp_idx.size());
  if (m2 == 0) return sig;

  // change of basis: radical vectors then complement units
  std::vector<Vec> tb = rad;
  for (int j : comp_idx) {
    Vec unit(n, GaussRat());
    unit[j] = GaussRat(1);
    tb.push_back(unit);
  }
  Mat t = columns_from(tb, n);
  std::vector<Vec> qbrackets;
  for (int a = 0; a < m2; ++a)
    for (int c = a + 1; c < m2; ++c) {
      Vec lhs = adl[comp_idx[a]].apply(tb[rdim + c]);
      qbrackets.push_back(std::move(lhs));
    }
  std::vector<Vec> qc = solve_multi(t, qbrackets, "signature_of quotient");
  std::vector<Mat> adq(m2, Mat(m2, m2));
  {
    size_t idx = 0;
    for (int a = 0; a < m2; ++a)
      for (int c = a + 1; c < m2; ++c, ++idx)
        for (int r = 0; r < m2; ++r) {
          adq[a].at(r, c) = qc[idx][rdim + r];
          adq[c].at(r, a) = -qc[idx][rdim + r];
        }
  }
  // quotient trace form must be nondegenerate (semisimplicity)
  Mat kq(m2, m2);
  for (int i = 0; i < m2; ++i)
    for (int j = i; j < m2; ++j) {
      GaussRat tr;
      for (int a = 0; a < m2; ++a)
        for (int c = 0; c < m2; ++c) tr += adq[i].at(a, c) * adq[j].at(c, a);
      kq.at(i, j) = tr;
      kq.at(j, i) = tr;
    }
  if (rank_of(kq) != m2)
    throw std::runtime_error("signature_of: quotient trace form degenerate");

  // split into minimal ideals through the centroid
  std::vector<Mat> constraints;
  for (int j = 0; j < m2; ++j) {
    Mat c(m2 * m2, m2 * m2);
    // (Phi ad_j - ad_j Phi) entry (a,b) over unknowns phi_{rc}
    for (int a = 0; a < m2; ++a)
      for (int b2 = 0; b2 < m2; ++b2)
        for (int k2 = 0; k2 < m2; ++k2) {
          c.at(a * m2 + b2, a * m2 + k2) += adq[j].at(k2, b2);
          c.at(a * m2 + b2, k2 * m2 + b2) -= adq[j].at(a, k2);
        }
    constraints.push_back(std::move(c));
  }
  std::vector<Vec> centroid = common_kernel(constraints, m2 * m2);
  for (Vec& v : centroid) v = primitive_vec(v);
  int cdim = static_cast<int>(centroid.size());
  if (cdim < 1)
    throw std::runtime_error("signature_of: centroid computation failed");

  std::vector<std::vector<Vec>> ideals;
  if (cdim == 1) {
    std::vector<Vec> whole(m2, Vec(m2, GaussRat()));
    for (int i = 0; i < m2; ++i) whole[i][i] = GaussRat(1);
    ideals.push_back(std::move(whole));
  } else {
    std::vector<std::vector<long>> patterns;
    for (int t2 = 0; t2 < cdim; ++t2) {
      std::vector<long> w(cdim, 0);
      w[t2] = 1;
      patterns.push_back(w);
    }
    for (long base : {2L, 3L, 5L, 7L}) {
      std::vector<long> w(cdim);
      long val = 1;
      for (int t2 = 0; t2 < cdim; ++t2) {
        w[t2] = val;
        val *= base;
      }
      patterns.push_back(w);
    }
    bool done = false;
    for (const auto& w : patterns) {
      Mat theta(m2, m2);
      for (int t2 = 0; t2 < cdim; ++t2)
        if (w[t2] != 0)
          for (int a = 0; a < m2; ++a)
            for (int c = 0; c < m2; ++c)
              theta.at(a, c) += GaussRat(w[t2]) * centroid[t2][a * m2 + c];
      UPoly mp = min_poly(theta);
      RootList rl = gauss_rational_roots(mp);
      // a separating centroid element has as many distinct eigenvalues
      // as the centroid has dimensions; its eigenspaces are then the
      // minimal ideals and each is absolutely simple
      if (!rl.complete() || static_cast<int>(rl.roots.size()) != cdim)
        continue;
      std::vector<std::vector<Vec>> parts;
      int total = 0;
      for (const auto& [lam, mult] : rl.roots) {
        Mat shifted = theta;
        for (int dgl = 0; dgl < m2; ++dgl) shifted.at(dgl, dgl) -= lam;
        parts.push_back(kernel_basis(shifted));
        total += static_cast<int>(parts.back().size());
      }
      if (total != m2) continue;
      ideals = std::move(parts);
      done = true;
      break;
    }
    if (!done)
      throw std::runtime_error("signature_of: centroid split not found");
  }

  for (const std::vector<Vec>& ideal : ideals)
    sig.simple_types.push_back(type_by_dimension(static_cast<int>(ideal.size())));
  std::sort(sig.simple_types.begin(), sig.simple_types.end());
  return sig;
}

// ---------- sl2 triples ----------

Sl2Triple sl2_complete_in(const LieElement& e,
                          const std::vector<LieElement>& f_space) {
  if (e.is_zero())
    throw std::runtime_error("sl2 completion: element is zero");
  if (!is_nilpotent(e))
    throw std::runtime_error("sl2 completion: element is not nilpotent");
  if (f_space.empty())
    throw std::runtime_error("sl2 completion: empty coefficient space");

  // (ad e)^2 f = -2e determines h = [e, f0] with [h, e] = 2e
  Mat m(E8::DIM, static_cast<int>(f_space.size()));
  for (size_t j = 0; j < f_space.size(); ++j) {
    Vec b = bracket(e, bracket(e, f_space[j])).to_vec();
    for (int r = 0; r < E8::DIM; ++r) m.at(r, static_cast<int>(j)) = b[r];
  }
  std::optional<Vec> sol = solve(m, (e * GaussRat(-2)).to_vec());
  if (!sol)
    throw std::runtime_error("sl2 completion: no solution for the triple");
  LieElement f0;
  for (size_t j = 0; j < f_space.size(); ++j)
    if (!(*sol)[j].is_zero()) f0 = f0 + f_space[j] * (*sol)[j];
  LieElement h = bracket(e, f0);

  // correct f within the centralizer of e so that [h, f] = -2f
  LieElement u = bracket(h, f0) + f0 * GaussRat(2);
  LieElement f = f0;
  if (!u.is_zero()) {
    std::vector<LieElement> zc = centralizer_in_span(e, f_space);
    if (zc.empty())
      throw std::runtime_error("sl2 completion: no correction space");
    Mat c(E8::DIM, static_cast<int>(zc.size()));
    for (size_t j = 0; j < zc.size(); ++j) {
      Vec b = (bracket(h, zc[j]) + zc[j] * GaussRat(2)).to_vec();
      for (int r = 0; r < E8::DIM; ++r) c.at(r, static_cast<int>(j)) = b[r];
    }
    std::optional<Vec> w = solve(c, (-u).to_vec());
    if (!w)
      throw std::runtime_error("sl2 completion: correction unsolvable");
    for (size_t j = 0; j < zc.size(); ++j)
      if (!(*w)[j].is_zero()) f = f + zc[j] * (*w)[j];
  }

  if (!(bracket(h, e) == e * GaussRat(2)) ||
      !(bracket(h, f) == f * GaussRat(-2)) || !(bracket(e, f) == h))
    throw std::runtime_error("sl2 completion: relations failed");
  return {std::move(h), e, std::move(f)};
}

Sl2Triple sl2_complete(const LieElement& e) {
  std::vector<LieElement> g3;
  for (int lab : comp(3)) g3.push_back(LieElement::basis(lab));
  return sl2_complete_in(e, g3);
}

bool open_orbit_check(const LieElement& e, const LieElement& h,
                      const std::vector<LieElement>& part0,
                      const std::vector<LieElement>& part1) {
  std::vector<LieElement> zh = centralizer_in_span(h, part0);
  SpanBuilder img(E8::DIM);
  for (const LieElement& a : zh) img.add(bracket(a, e).to_vec());
  // weight-2 space of ad h inside the degree-1 part
  std::vector<LieElement> mh;
  if (!part1.empty()) {
    Mat c(E8::DIM, static_cast<int>(part1.size()));
    for (size_t j = 0; j < part1.size(); ++j) {
      Vec b = (bracket(h, part1[j]) - part1[j] * GaussRat(2)).to_vec();
      for (int r = 0; r < E8::DIM; ++r) c.at(r, static_cast<int>(j)) = b[r];
    }
    for (const Vec& k : kernel_basis(c)) {
      LieElement y;
      for (size_t j = 0; j < part1.size(); ++j)
        if (!k[j].is_zero()) y = y + part1[j] * k[j];
      mh.push_back(std::move(y));
    }
  }
  if (img.rank() != static_cast<int>(mh.size())) return false;
  for (const LieElement& v : mh)
    if (!img.contains(v.to_vec())) return false;
  return true;
}

// ---------- absolute characteristics ----------

namespace {

// the antidiagonal bilinear form composed with a matrix in the fork
// component model; the result must be antisymmetric
Mat form_compose(const Mat& m10) {
  int n = m10.rows;
  Mat x(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) x.at(r, c) = m10.at(n - 1 - r, c);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!(x.at(r, c) + x.at(c, r)).is_zero())
        throw std::runtime_error(
            "characteristic: matrix does not respect the bilinear form");
  return x;
}

}  // namespace

// Pfaffian of an antisymmetric matrix by congruence elimination with
// exact pivoting; congruences by unit-determinant elementary matrices
// leave the value fixed, swaps flip the sign.
GaussRat pfaffian_of(Mat m) {
  int n = m.rows;
  if (n != m.cols || n % 2 != 0)
    throw std::invalid_argument("pfaffian: matrix must be even-dimensional");
  GaussRat result(1);
  for (int k = 0; k + 1 < n; k += 2) {
    int piv = -1;
    for (int j = k + 1; j < n; ++j)
      if (!m.at(k, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return GaussRat(0);
    if (piv != k + 1) {
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(k + 1, c));
      for (int r = 0; r < n; ++r) std::swap(m.at(r, piv), m.at(r, k + 1));
      result = -result;
    }
    GaussRat p = m.at(k, k + 1);
    for (int j = k + 2; j < n; ++j) {
      GaussRat top = m.at(k, j);
      if (!top.is_zero()) {
        GaussRat f = top / p;
        for (int r = 0; r < n; ++r) m.at(r, j) -= f * m.at(r, k + 1);
        for (int c = 0; c < n; ++c) m.at(j, c) -= f * m.at(k + 1, c);
      }
      GaussRat side = m.at(k + 1, j);
      if (!side.is_zero()) {
        GaussRat f = side / m.at(k + 1, k);
        for (int r = 0; r < n; ++r) m.at(r, j) -= f * m.at(r, k);
        for (int c = 0; c < n; ++c) m.at(j, c) -= f * m.at(k, c);
      }
    }
    result = result * p;
  }
  return result;
}

namespace {

// calibration: the diagonal fork-model element with entries 1..5 has
// signed eigenvalue product 120, pinning the Pfaffian normalization
const GaussRat& pfaffian_calibration() {
  static const GaussRat cal = [] {
    Mat mcal(10, 10);
    for (int k = 0; k < 5; ++k) {
      mcal.at(k, k) = GaussRat(k + 1);
      mcal.at(9 - k, 9 - k) = GaussRat(-(k + 1));
    }
    return pfaffian_of(form_compose(mcal)) / GaussRat(120);
  }();
  return cal;
}

}  // namespace

std::array<GaussRat, 8> characteristic(const LieElement& h) {
  std::array<GaussRat, 8> out{};
  if (h.is_zero()) return out;
  int d = 0;
  if (!h.homogeneous_degree(d) || (d & 3) != 0)
    throw std::runtime_error("characteristic: element is not of degree 0");
  auto [m10, m4] = G1Dictionary::get().iso().split(h);
  if (!squarefree(min_poly(m10)) || !squarefree(min_poly(m4)))
    throw std::runtime_error("characteristic: element is not semisimple");

  // three-node chain component
  std::vector<GaussRat> nu = eigen_desc(m4, "characteristic");
  out[5] = nu[0] - nu[1];
  out[6] = nu[1] - nu[2];
  out[7] = nu[2] - nu[3];

  // five-node fork component: spectrum pairs off as +-a_k
  std::vector<GaussRat> lam = eigen_desc(m10, "characteristic");
  for (int k = 0; k < 5; ++k)
    if (!(lam[k] + lam[9 - k]).is_zero())
      throw std::runtime_error("characteristic: fork spectrum not symmetric");
  std::array<GaussRat, 5> a;
  for (int k = 0; k < 5; ++k) a[k] = lam[k];  // a1 >= ... >= a5 >= 0
  if (!a[3].is_zero() && !a[4].is_zero()) {
    GaussRat pi = pfaffian_of(form_compose(m10)) / pfaffian_calibration();
    GaussRat signed5 = pi / (a[0] * a[1] * a[2] * a[3]);
    if (signed5 != a[4] && signed5 != -a[4])
      throw std::runtime_error("characteristic: orientation mismatch");
    a[4] = signed5;
  }
  out[0] = a[0] - a[1];
  out[1] = a[1] - a[2];
  out[2] = a[2] - a[3];
  out[3] = a[3] - a[4];
  out[4] = a[3] + a[4];
  return out;
}

// ---------- the centralizer frame of the first base point ----------

namespace {

std::vector<LieElement> elems_of(const std::vector<Vec>& rows) {
  std::vector<LieElement> out;
  for (const Vec& v : rows) out.push_back(LieElement::from_vec(v));
  return out;
}

bool rows_less(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t r = 0; r < a.size(); ++r) {
    if (a[r] == b[r]) continue;
    return std::lexicographical_compare(a[r].begin(), a[r].end(), b[r].begin(),
                                        b[r].end());
  }
  return false;
}

}  // namespace

const RelativeFrame& RelativeFrame::get() {
  static const RelativeFrame frame;
  return frame;
}

RelativeFrame::RelativeFrame() {
  const G1Dictionary& dict = G1Dictionary::get();
  auto pt = parse_spinor(cartan_p_texts()[0]);
  if (!pt) throw std::runtime_error("relative frame: base point parse failed");
  p1_ = dict.map(*pt);
  z0_ = centralizer_in(p1_, comp(0));
  z1_ = centralizer_in(p1_, comp(1));
  z3_ = centralizer_in(p1_, comp(3));
  if (z0_.size() != 15)
    throw std::runtime_error("relative frame: unexpected centralizer size");

  // one-dimensional center of the degree-0 centralizer
  {
    int nz = static_cast<int>(z0_.size());
    Mat m(E8::DIM * nz, nz);
    for (int j = 0; j < nz; ++j)
      for (int k = 0; k < nz; ++k) {
        Vec b = bracket(z0_[j], z0_[k]).to_vec();
        for (int r = 0; r < E8::DIM; ++r)
          m.at(k * E8::DIM + r, j) = b[r];
      }
    std::vector<Vec> ker = kernel_basis(m);
    if (ker.size() != 1)
      throw std::runtime_error("relative frame: center is not a line");
    for (int j = 0; j < nz; ++j)
      if (!ker[0][j].is_zero()) center_ = center_ + z0_[j] * ker[0][j];
  }

  // derived subalgebra
  {
    SpanBuilder der(E8::DIM);
    for (size_t i = 0; i < z0_.size(); ++i)
      for (size_t j = i + 1; j < z0_.size(); ++j)
        der.add(bracket(z0_[i], z0_[j]).to_vec());
    if (der.rank() != 14)
      throw std::runtime_error("relative frame: derived algebra size");
    derived_ = elems_of(der.rows());
  }

  // split toral elements: Cartan elements commuting with the base point
  std::vector<LieElement> t4;
  {
    Mat cm(E8::DIM, 8);
    for (int i = 0; i < 8; ++i) {
      Vec b = bracket(LieElement::basis(i), p1_).to_vec();
      for (int r = 0; r < E8::DIM; ++r) cm.at(r, i) = b[r];
    }
    std::vector<int> hlabels{0, 1, 2, 3, 4, 5, 6, 7};
    for (const Vec& k : kernel_basis(cm))
      t4.push_back(LieElement::from_vec_in(k, hlabels));
    if (t4.size() < 2)
      throw std::runtime_error("relative frame: split torus too small");
  }

  // Split the derived algebra into its minimal ideals through its
  // centroid: a separating centroid element has one (rational)
  // eigenvalue per ideal, and its eigenspaces are exactly the minimal
  // ideals, so no eigenvector can straddle two of them.
  {
    const int m = static_cast<int>(derived_.size());
    std::vector<Mat> adl;
    for (const LieElement& x : derived_) adl.push_back(ad_in_span(x, derived_));
    std::vector<Mat> constraints;
    for (int j = 0; j < m; ++j) {
      Mat c(m * m, m * m);
      // (Phi ad_j - ad_j Phi) entry (a,b) over unknowns phi_{rc}
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int k = 0; k < m; ++k) {
            c.at(a * m + b, a * m + k) += adl[j].at(k, b);
            c.at(a * m + b, k * m + b) -= adl[j].at(a, k);
          }
      constraints.push_back(std::move(c));
    }
    std::vector<Vec> centroid = common_kernel(constraints, m * m);
    for (Vec& v : centroid) v = primitive_vec(v);
    const int cdim = static_cast<int>(centroid.size());
    if (cdim != 3)
      throw std::runtime_error("relative frame: centroid dimension");

    std::vector<std::vector<long>> patterns;
    for (int t = 0; t < cdim; ++t) {
      std::vector<long> w(cdim, 0);
      w[t] = 1;
      patterns.push_back(w);
    }
    for (long base : {2L, 3L, 5L, 7L}) {
      std::vector<long> w(cdim);
      long val = 1;
      for (int t = 0; t < cdim; ++t) {
        w[t] = val;
        val *= base;
      }
      patterns.push_back(w);
    }
    bool done = false;
    for (const auto& w : patterns) {
      Mat theta(m, m);
      for (int t = 0; t < cdim; ++t)
        if (w[t] != 0)
          for (int a = 0; a < m; ++a)
            for (int c = 0; c < m; ++c)
              theta.at(a, c) += GaussRat(w[t]) * centroid[t][a * m + c];
      RootList rl = gauss_rational_roots(min_poly(theta));
      if (!rl.complete() || static_cast<int>(rl.roots.size()) != cdim)
        continue;
      std::vector<std::vector<Vec>> found;
      int total = 0;
      for (const auto& [lam, mult] : rl.roots) {
        Mat shifted = theta;
        for (int dgl = 0; dgl < m; ++dgl) shifted.at(dgl, dgl) -= lam;
        std::vector<Vec> rows;
        for (const Vec& co : kernel_basis(shifted)) {
          Vec v(E8::DIM, GaussRat());
          for (int j = 0; j < m; ++j)
            if (!co[j].is_zero()) {
              Vec dj = derived_[j].to_vec();
              for (int r = 0; r < E8::DIM; ++r) v[r] += co[j] * dj[r];
            }
          rows.push_back(primitive_vec(v));
        }
        total += static_cast<int>(rows.size());
        found.push_back(std::move(rows));
      }
      if (total != m) continue;
      std::sort(found.begin(), found.end(), rows_less);
      if (found[0].size() == 3 && found[1].size() == 3 &&
          found[2].size() == 8) {
        for (int i = 0; i < 3; ++i) ideals_[i] = elems_of(found[i]);
        done = true;
        break;
      }
    }
    if (!done)
      throw std::runtime_error("relative frame: ideal split not found");
  }

  // the ideals must commute pairwise
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (const LieElement& x : ideals_[a])
        for (const LieElement& y : ideals_[b])
          if (!bracket(x, y).is_zero())
            throw std::runtime_error("relative frame: ideals do not commute");

  // Chevalley-normalized basis of the eight-dimensional ideal
  {
    const std::vector<LieElement>& i3 = ideals_[2];
    // combined basis for component projections
    std::vector<LieElement> combined;
    for (int k = 0; k < 3; ++k)
      combined.insert(combined.end(), ideals_[k].begin(), ideals_[k].end());
    combined.push_back(center_);
    Mat cb = columns_of(combined);
    // projections of the torus onto the ideal
    std::vector<LieElement> t3;
    {
      SpanBuilder t3span(E8::DIM);
      std::vector<Vec> rhs;
      for (const LieElement& t : t4) rhs.push_back(t.to_vec());
      std::vector<Vec> co = solve_multi(cb, rhs, "relative frame torus");
      for (const Vec& c : co) {
        LieElement proj;
        for (int j = 0; j < 8; ++j)
          if (!c[6 + j].is_zero()) proj = proj + i3[j] * c[6 + j];
        if (t3span.add(proj.to_vec())) t3.push_back(proj);
        if (t3.size() == 2) break;
      }
      if (t3.size() != 2)
        throw std::runtime_error("relative frame: torus projection rank");
    }
    // simultaneous eigenspaces of the two torus elements
    struct Piece {
      std::vector<LieElement> basis;
      GaussRat va, vb;
    };
    std::vector<Piece> pieces{{i3, GaussRat(), GaussRat()}};
    for (int stage = 0; stage < 2; ++stage) {
      std::vector<Piece> next;
      for (Piece& pc : pieces) {
        Mat dmat = ad_in_span(t3[stage], pc.basis);
        RootList rl = scaled_eigenvalues(dmat, false);
        if (!rl.complete())
          throw std::runtime_error("relative frame: torus not split");
        for (const auto& [lam, mult] : rl.roots) {
          Mat shifted = dmat;
          for (int dgl = 0; dgl < dmat.rows; ++dgl)
            shifted.at(dgl, dgl) -= lam;
          std::vector<Vec> ker = kernel_basis(shifted);
          if (ker.empty()) continue;
          Piece np;
          np.va = (stage == 0) ? lam : pc.va;
          np.vb = (stage == 0) ? GaussRat() : lam;
          for (const Vec& co : ker) {
            LieElement y;
            for (size_t j = 0; j < pc.basis.size(); ++j)
              if (!co[j].is_zero()) y = y + pc.basis[j] * co[j];
            np.basis.push_back(std::move(y));
          }
          next.push_back(std::move(np));
        }
      }
      pieces = std::move(next);
    }
    std::vector<Piece> rootsp;
    int cartan_dim = 0;
    for (Piece& pc : pieces) {
      if (pc.va.is_zero() && pc.vb.is_zero())
        cartan_dim += static_cast<int>(pc.basis.size());
      else
        rootsp.push_back(pc);
    }
    if (cartan_dim != 2 || rootsp.size() != 6)
      throw std::runtime_error("relative frame: root decomposition failed");
    for (const Piece& pc : rootsp)
      if (pc.basis.size() != 1)
        throw std::runtime_error("relative frame: root spaces not lines");

    auto pos = [](const Piece& pc) {
      if (!pc.va.is_zero()) return GaussRat() < pc.va;
      return GaussRat() < pc.vb;
    };
    std::vector<int> positives;
    for (size_t r = 0; r < rootsp.size(); ++r)
      if (pos(rootsp[r])) positives.push_back(static_cast<int>(r));
    if (positives.size() != 3)
      throw std::runtime_error("relative frame: positivity selection failed");
    // exactly one positive root is the sum of the other two
    int highest = -1;
    for (int i = 0; i < 3; ++i) {
      int a = positives[i], b = positives[(i + 1) % 3],
          c = positives[(i + 2) % 3];
      if (rootsp[a].va == rootsp[b].va + rootsp[c].va &&
          rootsp[a].vb == rootsp[b].vb + rootsp[c].vb) {
        highest = i;
        break;
      }
    }
    if (highest < 0)
      throw std::runtime_error("relative frame: highest root not found");
    int s1 = positives[(highest + 1) % 3], s2 = positives[(highest + 2) % 3];
    // deterministic order of the two simple roots
    if (std::make_pair(rootsp[s2].va, rootsp[s2].vb) <
        std::make_pair(rootsp[s1].va, rootsp[s1].vb))
      std::swap(s1, s2);

    auto root_vec = [&](const GaussRat& va,
                        const GaussRat& vb) -> const LieElement* {
      for (const Piece& pc : rootsp)
        if (pc.va == va && pc.vb == vb) return &pc.basis[0];
      return nullptr;
    };
    auto chevalley_pair = [&](int s) {
      const Piece& beta = rootsp[s];
      const LieElement* fv = root_vec(-beta.va, -beta.vb);
      if (!fv)
        throw std::runtime_error("relative frame: opposite root missing");
      LieElement e = beta.basis[0];
      LieElement t = bracket(e, *fv);
      // scale f so that [ [e,f], e ] = 2 e
      Vec img = bracket(t, e).to_vec();
      Vec ev = e.to_vec();
      int lead = -1;
      for (int r = 0; r < E8::DIM; ++r)
        if (!ev[r].is_zero()) {
          lead = r;
          break;
        }
      GaussRat bval = img[lead] / ev[lead];
      if (bval.is_zero())
        throw std::runtime_error("relative frame: degenerate coroot");
      LieElement f = *fv * (GaussRat(2) / bval);
      LieElement hh = bracket(e, f);
      if (!(bracket(hh, e) == e * GaussRat(2)) ||
          !(bracket(hh, f) == f * GaussRat(-2)))
        throw std::runtime_error("relative frame: coroot normalization");
      return std::make_pair(e, f);
    };
    auto [e1, f1] = chevalley_pair(s1);
    auto [e2, f2] = chevalley_pair(s2);
    LieElement h1 = bracket(e1, f1), h2 = bracket(e2, f2);
    LieElement e3 = bracket(e1, e2), f3 = bracket(f2, f1);
    if (e3.is_zero() || f3.is_zero())
      throw std::runtime_error("relative frame: simple roots do not add");
    sl3_basis_ = {h1, h2, e1, e2, e3, f1, f2, f3};

    auto unit = [](int r, int c) {
      Mat m(3, 3);
      m.at(r, c) = GaussRat(1);
      return m;
    };
    Mat d1(3, 3), d2(3, 3);
    d1.at(0, 0) = GaussRat(1);
    d1.at(1, 1) = GaussRat(-1);
    d2.at(1, 1) = GaussRat(1);
    d2.at(2, 2) = GaussRat(-1);
    sl3_images_ = {d1,         d2,         unit(0, 1), unit(1, 2),
                   unit(0, 2), unit(1, 0), unit(2, 1), unit(2, 0)};

    // the map must be an isomorphism: basis independent, brackets match
    Mat sb = columns_of(sl3_basis_);
    if (rank_of(sb) != 8)
      throw std::runtime_error("relative frame: ideal basis dependent");
    std::vector<Vec> pairbr;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        pairbr.push_back(bracket(sl3_basis_[i], sl3_basis_[j]).to_vec());
    std::vector<Vec> co = solve_multi(sb, pairbr, "relative frame ideal");
    size_t idx = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j, ++idx) {
        Mat want =
            sl3_images_[i] * sl3_images_[j] - sl3_images_[j] * sl3_images_[i];
        Mat got(3, 3);
        for (int t2 = 0; t2 < 8; ++t2)
          if (!co[idx][t2].is_zero())
            got = got + sl3_images_[t2] * co[idx][t2];
        if (!(want == got))
          throw std::runtime_error("relative frame: map is not a "
                                   "homomorphism");
      }
  }
}

std::array<GaussRat, 5> RelativeFrame::raw_characteristic(
    const LieElement& h) const {
  std::vector<LieElement> combined;
  for (int k = 0; k < 3; ++k)
    combined.insert(combined.end(), ideals_[k].begin(), ideals_[k].end());
  combined.push_back(center_);
  Mat cb = columns_of(combined);
  std::optional<Vec> co = solve(cb, h.to_vec());
  if (!co)
    throw std::runtime_error(
        "relative characteristic: element is not in the centralizer");

  std::array<GaussRat, 5> out{};
  int offset = 0;
  for (int k = 0; k < 2; ++k) {
    LieElement hk;
    for (int j = 0; j < 3; ++j)
      if (!(*co)[offset + j].is_zero())
        hk = hk + ideals_[k][j] * (*co)[offset + j];
    offset += 3;
    if (hk.is_zero()) {
      out[k] = GaussRat(0);
      continue;
    }
    Mat dmat = ad_in_span(hk, ideals_[k]);
    if (!squarefree(min_poly(dmat)))
      throw std::runtime_error(
          "relative characteristic: component not semisimple");
    out[k] = eigen_desc(dmat, "relative characteristic").front();
  }
  LieElement h3;
  for (int j = 0; j < 8; ++j)
    if (!(*co)[offset + j].is_zero())
      h3 = h3 + ideals_[2][j] * (*co)[offset + j];
  Mat sb = columns_of(sl3_basis_);
  std::optional<Vec> c3 = solve(sb, h3.to_vec());
  if (!c3)
    throw std::runtime_error("relative characteristic: ideal projection");
  Mat m3(3, 3);
  for (int t = 0; t < 8; ++t)
    if (!(*c3)[t].is_zero()) m3 = m3 + sl3_images_[t] * (*c3)[t];
  if (!squarefree(min_poly(m3)))
    throw std::runtime_error(
        "relative characteristic: component not semisimple");
  std::vector<GaussRat> mu = eigen_desc(m3, "relative characteristic");
  out[2] = mu[0] - mu[1];
  out[3] = mu[1] - mu[2];
  out[4] = (*co)[14];
  return out;
}

// ---------- table verification ----------

namespace {

int type_dim(const std::string& t) {
  int rank = std::stoi(t.substr(1));
  switch (t[0]) {
    case 'A':
      return rank * (rank + 2);
    case 'B':
    case 'C':
      return rank * (2 * rank + 1);
    case 'D':
      return rank * (2 * rank - 1);
    case 'G':
      return 14;
    case 'F':
      return 52;
    case 'E':
      return rank == 6 ? 78 : (rank == 7 ? 133 : 248);
    default:
      throw std::invalid_argument("type_dim: unknown type " + t);
  }
}

int signature_dim(const Signature& s) {
  int total = s.toral_dim + s.nilpotent_dim;
  for (const std::string& t : s.simple_types) total += type_dim(t);
  return total;
}

std::array<LieElement, 4> base_points() {
  const G1Dictionary& dict = G1Dictionary::get();
  std::array<LieElement, 4> pb;
  for (int k = 0; k < 4; ++k) {
    auto pt = parse_spinor(cartan_p_texts()[k]);
    if (!pt) throw std::runtime_error("base point parse failed");
    pb[k] = dict.map(*pt);
  }
  return pb;
}

std::string combo_text(const Vec& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    GaussRat c = coeffs[k];
    if (first) {
      if (c == GaussRat(-1))
        os << '-';
      else if (!(c == GaussRat(1)))
        os << to_string(c) << '*';
    } else {
      bool neg = c.is_real() && c.re < 0;
      os << (neg ? " - " : " + ");
      GaussRat ac = neg ? -c : c;
      if (!(ac == GaussRat(1))) os << to_string(ac) << '*';
    }
    os << 'p' << (k + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

// The printed convention for relative characteristics: which raw slot
// each printed position reads, and the scale on the center coordinate.
struct RelConvention {
  std::array<int, 4> perm{};
  GaussRat kappa;
};

struct RelFit {
  std::optional<RelConvention> conv;
  std::vector<bool> quad_ok, center_ok;
};

RelFit fit_relative_convention(
    const std::vector<std::array<GaussRat, 5>>& raw, const MixedTable& table) {
  RelFit fit;
  size_t nrows = table.rows.size();
  fit.quad_ok.assign(nrows, false);
  fit.center_ok.assign(nrows, false);

  std::vector<std::array<GaussRat, 4>> printed(nrows);
  std::vector<GaussRat> printed_center(nrows);
  for (size_t r = 0; r < nrows; ++r) {
    const std::string& q = table.rows[r].char_quadruple;
    if (q.size() != 4) return fit;
    for (int k = 0; k < 4; ++k) printed[r][k] = GaussRat(q[k] - '0');
    auto c = parse_gaussrat(table.rows[r].char_center);
    if (!c) return fit;
    printed_center[r] = *c;
  }

  // scale on the center coordinate, from the first row that moves it
  GaussRat kappa(1);
  bool kappa_set = false;
  for (size_t r = 0; r < nrows; ++r) {
    if (raw[r][4].is_zero()) continue;
    kappa = printed_center[r] / raw[r][4];
    kappa_set = true;
    break;
  }
  (void)kappa_set;
  for (size_t r = 0; r < nrows; ++r)
    fit.center_ok[r] = (printed_center[r] == kappa * raw[r][4]);

  std::array<int, 4> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    bool all = true;
    for (size_t r = 0; r < nrows && all; ++r)
      for (int k = 0; k < 4; ++k)
        if (printed[r][k] != raw[r][perm[k]]) {
          all = false;
          break;
        }
    if (all) {
      for (size_t r = 0; r < nrows; ++r) fit.quad_ok[r] = true;
      bool centers = std::all_of(fit.center_ok.begin(), fit.center_ok.end(),
                                 [](bool b) { return b; });
      if (centers) fit.conv = RelConvention{perm, kappa};
      return fit;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fit;
}

// One printed centralizer cell is a misprint: the first row over stratum 4
// claims signature t1, but the centralizer of the sum is one-dimensional and
// spanned by an element certified nilpotent by exact triangularization.  A
// nonzero element cannot be both nilpotent and semisimple, so no spanning
// vector can be toral and the signature is u1.  The subspace is also
// independent of the choice of generic base point (certified below against a
// second point of the stratum), ruling out an unlucky base.  The verifier
// checks the computed value and records that it differs from the printed one.
const std::map<std::pair<int, int>, std::string>& corrected_signatures() {
  static const std::map<std::pair<int, int>, std::string> m = {{{4, 1}, "u1"}};
  return m;
}

// certify that a second generic point of the stratum yields the same
// centralizer subspace for the sum, and that the span is nilpotent
bool correction_crosscheck(const MixedTable& table,
                           const std::array<LieElement, 4>& pb,
                           const LieElement& e,
                           const std::vector<LieElement>& zl) {
  if (zl.size() != 1 || !is_nilpotent(zl[0])) return false;
  Vec alt = {GaussRat(0), GaussRat(1), GaussRat(2), GaussRat(-3)};
  if (stratum_of(alt) != table.index) return false;
  LieElement q;
  for (int k = 0; k < 4; ++k)
    if (!alt[static_cast<size_t>(k)].is_zero())
      q = q + pb[static_cast<size_t>(k)] * alt[static_cast<size_t>(k)];
  if (!bracket(q, e).is_zero()) return false;
  std::vector<LieElement> zq = centralizer_in(q + e, comp(0));
  if (zq.size() != zl.size()) return false;
  SpanBuilder sb(static_cast<int>(E8::DIM));
  for (const LieElement& v : zl) sb.add(v.to_vec());
  for (const LieElement& v : zq)
    if (!sb.contains(v.to_vec())) return false;
  return true;
}

Report attempt_mixed_table(const MixedTable& table,
                           const std::array<LieElement, 4>& pb, int mask,
                           bool early_exit) {
  Vec signed_coeffs(4);
  LieElement p;
  for (int k = 0; k < 4; ++k) {
    GaussRat c = table.base_coeffs[k];
    if (mask & (1 << k)) c = -c;
    signed_coeffs[k] = c;
    if (!c.is_zero()) p = p + pb[k] * c;
  }
  Report rep("base point " + combo_text(signed_coeffs));

  bool on_stratum = stratum_of(signed_coeffs) == table.index;
  rep.check("base point lies on stratum " + std::to_string(table.index),
            on_stratum);
  if (!on_stratum && early_exit) return rep;

  std::vector<LieElement> z0 = centralizer_in(p, comp(0));
  std::vector<LieElement> z1 = centralizer_in(p, comp(1));
  std::vector<LieElement> z3 = centralizer_in(p, comp(3));

  // base centralizer signature against the subgroup table
  {
    const Table1Row& t1 = table1_rows()[table.index - 1];
    auto want = parse_signature(t1.centralizer_type);
    bool ok = false;
    std::string detail;
    if (want && signature_dim(*want) == static_cast<int>(z0.size())) {
      try {
        Signature got = signature_of(z0);
        ok = got == *want;
        detail = "computed " + got.str() + ", tabulated " + want->str();
      } catch (const std::exception& ex) {
        detail = ex.what();
      }
    } else if (want) {
      detail = "tabulated type has dimension " +
               std::to_string(signature_dim(*want)) +
               ", centralizer has dimension " + std::to_string(z0.size());
    }
    rep.check("base centralizer signature " + t1.centralizer_type, ok,
              detail);
    if (!ok && early_exit) return rep;
  }

  const G1Dictionary& dict = G1Dictionary::get();
  std::vector<std::optional<Sl2Triple>> triples(table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const MixedRow& row = table.rows[r];
    std::string pfx = "row " + std::to_string(r + 1) + ": ";
    auto parsed = parse_spinor(row.element);
    if (!parsed)
      throw std::runtime_error("table row does not parse: " + row.element);
    LieElement e = dict.map(*parsed);

    bool row_ok = true;
    row_ok &= rep.check(pfx + "commutes with the base point",
                        bracket(p, e).is_zero());
    row_ok &= rep.check(pfx + "nilpotent", is_nilpotent(e));

    int dim = orbit_dim_in_span(z0, e);
    row_ok &= rep.check(
        pfx + "orbit dimension " + std::to_string(row.dim),
        dim == row.dim, "computed " + std::to_string(dim));

    std::vector<LieElement> zl = centralizer_in(p + e, comp(0));
    row_ok &= rep.check(
        pfx + "dimension identity",
        static_cast<int>(z0.size()) == dim + static_cast<int>(zl.size()),
        "centralizer of the sum has dimension " + std::to_string(zl.size()));

    {
      JordanParts jp = jordan_g1(p + e);
      row_ok &= rep.check(pfx + "Jordan parts recover the summands",
                          jp.s == p && jp.n == e);
    }

    {
      auto fix = corrected_signatures().find(
          {table.index, static_cast<int>(r) + 1});
      bool fixed = fix != corrected_signatures().end();
      auto want = parse_signature(fixed ? fix->second : row.signature);
      bool ok = false;
      std::string detail;
      if (want) {
        try {
          Signature got = signature_of(zl);
          ok = got == *want;
          detail = "computed " + got.str();
        } catch (const std::exception& ex) {
          detail = ex.what();
        }
      }
      if (fixed) {
        ok = ok && fix->second != row.signature &&
             correction_crosscheck(table, pb, e, zl);
        row_ok &= rep.check(pfx + "printed centralizer signature " +
                                row.signature + " misprinted, certified " +
                                fix->second,
                            ok,
                            detail + "; spanning vector certified nilpotent "
                                     "at two generic stratum points");
      } else {
        row_ok &= rep.check(pfx + "centralizer signature " + row.signature,
                            ok, detail);
      }
    }

    {
      bool sl2ok = false, open_ok = false;
      std::string detail;
      try {
        triples[r] = sl2_complete_in(e, z3);
        sl2ok = true;
        open_ok = open_orbit_check(e, triples[r]->h, z0, z1);
      } catch (const std::exception& ex) {
        detail = ex.what();
      }
      row_ok &= rep.check(pfx + "sl2 triple in the centralizer", sl2ok,
                          detail);
      row_ok &= rep.check(pfx + "open orbit in the centralizer", open_ok);
    }
    if (!row_ok && early_exit) return rep;
  }

  // relative characteristics for the table anchored at the first basis
  // point, under one position/scale convention for the whole table
  if (table.index == 8) {
    const RelativeFrame& frame = RelativeFrame::get();
    std::vector<std::array<GaussRat, 5>> raw(table.rows.size());
    bool raws_ok = true;
    for (size_t r = 0; r < table.rows.size(); ++r) {
      if (!triples[r]) {
        raws_ok = false;
        break;
      }
      try {
        raw[r] = frame.raw_characteristic(triples[r]->h);
      } catch (const std::exception&) {
        raws_ok = false;
        break;
      }
    }
    if (!raws_ok) {
      rep.check("relative characteristics computable", false);
      return rep;
    }
    RelFit fit = fit_relative_convention(raw, table);
    if (fit.conv) {
      std::ostringstream os;
      os << "positions read raw slots (" << fit.conv->perm[0] << ","
         << fit.conv->perm[1] << "," << fit.conv->perm[2] << ","
         << fit.conv->perm[3] << "), center scale "
         << to_string(fit.conv->kappa);
      rep.note("characteristic convention", os.str());
    }
    for (size_t r = 0; r < table.rows.size(); ++r) {
      const MixedRow& row = table.rows[r];
      std::string pfx = "row " + std::to_string(r + 1) + ": ";
      std::ostringstream detail;
      detail << "raw (";
      for (int k = 0; k < 5; ++k)
        detail << (k ? "," : "") << to_string(raw[r][k]);
      detail << ")";
      bool ok = fit.conv && fit.quad_ok[r] && fit.center_ok[r];
      rep.check(pfx + "relative characteristic (" + row.char_quadruple + "," +
                    row.char_center + ")",
                ok, detail.str());
      if (!ok && early_exit) return rep;
    }
    if (!fit.conv)
      rep.check("single position/scale convention fits the whole table",
                false);
  }
  return rep;
}

}  // namespace

Report verify_mixed_table(int i) {
  const MixedTable& table = mixed_table(i);
  Report rep("mixed elements over stratum " + std::to_string(i));
  if (i == 6)
    rep.note("rows 3 and 5",
             "joined from two printed continuation lines; flagged for review");
  std::array<LieElement, 4> pb = base_points();

  Report first = attempt_mixed_table(table, pb, 0, false);
  if (first.all_ok()) {
    rep.note("sign choice", "default (all +)");
    rep.merge(first);
    return rep;
  }
  for (int mask = 1; mask < 16; ++mask) {
    Report retry = attempt_mixed_table(table, pb, mask, true);
    if (retry.all_ok()) {
      rep.note("sign choice",
               "default failed; consistent alternative adopted");
      rep.merge(retry);
      return rep;
    }
  }
  rep.check("a single sign choice passes the whole table", false,
            "all 16 sign choices fail");
  rep.merge(first);
  return rep;
}

// ---------- property drivers ----------

Report verify_cartan_subspace() {
  Report rep("the degree-1 Cartan subspace and its centralizers");
  std::array<LieElement, 4> pb = base_points();
  std::vector<LieElement> ps(pb.begin(), pb.end());

  {
    bool comm = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        comm &= bracket(pb[static_cast<size_t>(i)],
                        pb[static_cast<size_t>(j)])
                    .is_zero();
    rep.check("the four base points commute pairwise", comm);
  }
  {
    bool ss = true;
    for (const LieElement& p : pb) ss &= is_semisimple(p);
    rep.check("each base point is semisimple", ss);
  }
  {
    std::vector<LieElement> zc1 = centralizer_in(ps, comp(1));
    bool span_ok = zc1.size() == 4;
    SpanBuilder sb(static_cast<int>(E8::DIM));
    for (const LieElement& v : zc1) sb.add(v.to_vec());
    for (const LieElement& p : pb) span_ok &= sb.contains(p.to_vec());
    rep.check(
        "the degree-1 centralizer of the subspace is the subspace itself",
        span_ok,
        "dimension " + std::to_string(zc1.size()));
  }
  {
    std::vector<LieElement> zc = centralizer_in(ps, all_basis_labels());
    rep.check("the full centralizer has dimension 8", zc.size() == 8,
              "dimension " + std::to_string(zc.size()));
    bool abelian = true;
    for (size_t i = 0; i < zc.size(); ++i)
      for (size_t j = i + 1; j < zc.size(); ++j)
        abelian &= bracket(zc[i], zc[j]).is_zero();
    rep.check("the full centralizer is abelian", abelian);
    bool ss = true;
    for (const LieElement& v : zc) ss &= is_semisimple(v);
    rep.check("the full centralizer consists of semisimple elements", ss);
  }
  return rep;
}

Report verify_jordan_random(int n, std::uint64_t seed) {
  Report rep("Jordan decomposition on random degree-1 elements");
  std::mt19937_64 rng(seed);
  const std::vector<int>& g1 = comp(1);
  std::uniform_int_distribution<int> nterms(4, 7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g1.size()) - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  int bad_sum = 0, bad_comm = 0, bad_deg = 0, bad_parts = 0;
  for (int t = 0; t < n; ++t) {
    LieElement x;
    int k = nterms(rng);
    for (int u = 0; u < k; ++u) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      x = x + LieElement::basis(g1[pick(rng)]) * GaussRat(c);
    }
    JordanParts jp = jordan_g1(x);
    if (!(jp.s + jp.n == x)) ++bad_sum;
    if (!bracket(jp.s, jp.n).is_zero()) ++bad_comm;
    int d = 0;
    bool deg_ok =
        (jp.s.is_zero() || (jp.s.homogeneous_degree(d) && (d & 3) == 1)) &&
        (jp.n.is_zero() || (jp.n.homogeneous_degree(d) && (d & 3) == 1));
    if (!deg_ok) ++bad_deg;
    if (!is_semisimple(jp.s) || !is_nilpotent(jp.n)) ++bad_parts;
  }
  rep.note("samples", std::to_string(n));
  rep.check("s + n = x on all samples", bad_sum == 0,
            std::to_string(bad_sum) + " failures");
  rep.check("[s, n] = 0 on all samples", bad_comm == 0,
            std::to_string(bad_comm) + " failures");
  rep.check("components of degree 1 on all samples", bad_deg == 0,
            std::to_string(bad_deg) + " failures");
  rep.check("parts semisimple and nilpotent on all samples", bad_parts == 0,
            std::to_string(bad_parts) + " failures");
  return rep;
}

Report verify_characteristic_properties(int n, std::uint64_t seed) {
  Report rep("dominant characteristic properties");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const E8& alg = E8::get();
  const std::vector<int>& simples = alg.g0_simple_roots();

  // normalized coroots and root values for the degree-0 simple roots
  std::vector<LieElement> coroots;
  for (int r : simples) {
    LieElement e = LieElement::basis(8 + r);
    LieElement f = LieElement::basis(8 + alg.negative_of(r));
    LieElement t = bracket(e, f);
    GaussRat c = bracket(t, e).coeff(8 + r);
    coroots.push_back(t * (GaussRat(2) / c));
  }
  auto root_value = [&](const LieElement& h, int r) {
    return bracket(h, LieElement::basis(8 + r)).coeff(8 + r);
  };

  {
    std::array<GaussRat, 8> z = characteristic(LieElement::zero());
    bool all0 = std::all_of(z.begin(), z.end(),
                            [](const GaussRat& g) { return g.is_zero(); });
    rep.check("zero element has zero characteristic", all0);
  }

  int bad_dom = 0, bad_inv = 0, bad_scale = 0;
  std::uniform_int_distribution<int> rpick(0,
                                           static_cast<int>(simples.size()) -
                                               1);
  for (int t = 0; t < n; ++t) {
    LieElement h;
    for (int i = 0; i < 8; ++i) {
      int c = coeff(rng);
      if (c != 0) h.set(i, GaussRat(c));
    }
    std::array<GaussRat, 8> ch = characteristic(h);
    for (const GaussRat& g : ch)
      if (!g.is_real() || g.re < 0) {
        ++bad_dom;
        break;
      }
    std::array<GaussRat, 8> ch2 = characteristic(h * GaussRat(2));
    for (int k = 0; k < 8; ++k)
      if (ch2[k] != ch[k] * GaussRat(2)) {
        ++bad_scale;
        break;
      }
    for (int probe = 0; probe < 2; ++probe) {
      int ri = rpick(rng);
      LieElement refl = h - coroots[ri] * root_value(h, simples[ri]);
      if (!(characteristic(refl) == ch)) {
        ++bad_inv;
        break;
      }
    }
  }
  rep.note("samples", std::to_string(n));
  rep.check("all components nonnegative", bad_dom == 0,
            std::to_string(bad_dom) + " failures");
  rep.check("doubling the element doubles the characteristic",
            bad_scale == 0, std::to_string(bad_scale) + " failures");
  rep.check("invariant under simple reflections", bad_inv == 0,
            std::to_string(bad_inv) + " failures");
  return rep;
}

}  // namespace spinorbit
