#include "spinorbit/e8.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "spinorbit/report.hpp"

namespace spinorbit {

namespace {

// E8 Cartan matrix for the numbering: chain 1-3-4-5-6-7-8, node 2 on 4.
constexpr int kAdj[8][8] = {
    // 1  2  3  4  5  6  7  8
    {2, 0, -1, 0, 0, 0, 0, 0},   // 1
    {0, 2, 0, -1, 0, 0, 0, 0},   // 2
    {-1, 0, 2, -1, 0, 0, 0, 0},  // 3
    {0, -1, -1, 2, -1, 0, 0, 0}, // 4
    {0, 0, 0, -1, 2, -1, 0, 0},  // 5
    {0, 0, 0, 0, -1, 2, -1, 0},  // 6
    {0, 0, 0, 0, 0, -1, 2, -1},  // 7
    {0, 0, 0, 0, 0, 0, -1, 2},   // 8
};

// Simple roots in doubled epsilon-coordinates.
constexpr int kSimple2Eps[8][8] = {
    {1, -1, -1, -1, -1, -1, -1, 1},  // (e1+e8)/2 - (e2+...+e7)/2
    {2, 2, 0, 0, 0, 0, 0, 0},        // e1+e2
    {-2, 2, 0, 0, 0, 0, 0, 0},       // e2-e1
    {0, -2, 2, 0, 0, 0, 0, 0},       // e3-e2
    {0, 0, -2, 2, 0, 0, 0, 0},       // e4-e3
    {0, 0, 0, -2, 2, 0, 0, 0},       // e5-e4
    {0, 0, 0, 0, -2, 2, 0, 0},       // e6-e5
    {0, 0, 0, 0, 0, -2, 2, 0},       // e7-e6
};

int dot2eps(const std::array<int, 8>& a, const std::array<int, 8>& b) {
  int s = 0;
  for (int k = 0; k < 8; k++) s += a[k] * b[k];
  return s / 4;  // doubled coordinates on both sides
}

}  // namespace

const E8& E8::get() {
  static const E8 instance;
  return instance;
}

int E8::root_index(const std::array<int, 8>& simple) const {
  auto it = index_.find(simple);
  return it == index_.end() ? -1 : it->second;
}

bool E8::is_positive(int r) const {
  int s = 0;
  for (int c : roots_[r].simple) s += c;
  return s > 0;
}

int E8::pairing(int r1, int r2) const {
  const auto& a = roots_[r1].simple;
  const auto& d = roots_[r2].dot_simple;
  int s = 0;
  for (int k = 0; k < 8; k++) s += a[k] * d[k];
  return s;
}

int E8::eps_sign(int r1, int r2) const {
  int par = std::popcount(static_cast<unsigned>(roots_[r1].bits & roots_[r2].ebits));
  return (par & 1) ? -1 : 1;
}

void E8::bracket_basis(int bi, int bj, std::vector<ZTerm>& out) const {
  if (bi < 8 && bj < 8) return;
  if (bi < 8) {
    int c = roots_[bj - 8].dot_simple[bi];
    if (c != 0) out.push_back({bj, c});
    return;
  }
  if (bj < 8) {
    int c = roots_[bi - 8].dot_simple[bj];
    if (c != 0) out.push_back({bi, -c});
    return;
  }
  int ra = bi - 8, rb = bj - 8;
  if (neg_[ra] == rb) {
    int s = opp_sign_ * (flip_neg_ ? -1 : 1);
    for (int k = 0; k < 8; k++) {
      int c = roots_[ra].simple[k];
      if (c != 0) out.push_back({k, s * c});
    }
    return;
  }
  std::array<int, 8> sum;
  for (int k = 0; k < 8; k++) sum[k] = roots_[ra].simple[k] + roots_[rb].simple[k];
  int rc = root_index(sum);
  if (rc < 0) return;
  int s = eps_sign(ra, rb);
  if (flip_neg_) s *= chi(ra) * chi(rb) * chi(rc);
  out.push_back({8 + rc, s});
}

GaussRat E8::killing_basis(int bi, int bj) const {
  if (bi < 8 && bj < 8) return GaussRat(60L * kAdj[bi][bj]);
  if (bi < 8 || bj < 8) return GaussRat(0);
  return neg_[bi - 8] == bj - 8 ? GaussRat(60) : GaussRat(0);
}

GaussRat E8::theta_scalar(int b) const {
  switch (degree_of_basis(b)) {
    case 0: return GaussRat(1);
    case 1: return GaussRat::i();
    case 2: return GaussRat(-1);
    default: return -GaussRat::i();
  }
}

bool E8::jacobi_sample_ok() const {
  // Structured sample hitting both bracket branches: opposite pairs and
  // closing triples a+b+c = 0.  Tests re-run this exhaustively.
  std::vector<long> acc(DIM, 0);
  std::vector<ZTerm> t1, t2;
  auto jacobi = [&](int x, int y, int z) {
    std::fill(acc.begin(), acc.end(), 0L);
    auto add_term = [&](int a, int b, int c, int sign) {
      t1.clear();
      bracket_basis(a, b, t1);
      for (auto [m, cm] : t1) {
        t2.clear();
        bracket_basis(m, c, t2);
        for (auto [n, cn] : t2) acc[n] += static_cast<long>(sign) * cm * cn;
      }
    };
    add_term(x, y, z, 1);
    add_term(y, z, x, 1);
    add_term(z, x, y, 1);
    for (long v : acc)
      if (v != 0) return false;
    return true;
  };
  for (int a = 0; a < NROOTS; a += 7) {
    for (int b = 0; b < NROOTS; b += 11) {
      if (!jacobi(8 + a, 8 + neg_[a], 8 + b)) return false;
      std::array<int, 8> m;
      for (int k = 0; k < 8; k++)
        m[k] = -roots_[a].simple[k] - roots_[b].simple[k];
      int rc = root_index(m);
      if (rc >= 0 && !jacobi(8 + a, 8 + b, 8 + rc)) return false;
    }
  }
  for (int h = 0; h < 8; h++)
    for (int a = 0; a < NROOTS; a += 13)
      for (int b = 0; b < NROOTS; b += 17)
        if (!jacobi(h, 8 + a, 8 + b)) return false;
  return true;
}

E8::E8() {
  // 1. roots in doubled epsilon-coordinates
  std::vector<std::array<int, 8>> eps_roots;
  for (int i = 0; i < 8; i++)
    for (int j = i + 1; j < 8; j++)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          std::array<int, 8> v{};
          v[i] = 2 * si;
          v[j] = 2 * sj;
          eps_roots.push_back(v);
        }
  for (int mask = 0; mask < 256; mask++) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    std::array<int, 8> v;
    for (int k = 0; k < 8; k++) v[k] = (mask >> k) & 1 ? -1 : 1;
    eps_roots.push_back(v);
  }
  if (eps_roots.size() != NROOTS) throw std::logic_error("E8 root count");

  // 2. conversion to simple-root coordinates
  Mat s(8, 8);
  for (int c = 0; c < 8; c++)
    for (int r = 0; r < 8; r++) s.at(r, c) = GaussRat(kSimple2Eps[c][r]);
  Mat sinv = *s.inverse();
  std::vector<std::array<int, 8>> simple_coords;
  for (const auto& v : eps_roots) {
    Vec rhs(8);
    for (int k = 0; k < 8; k++) rhs[k] = GaussRat(v[k]);
    Vec x = sinv.apply(rhs);
    std::array<int, 8> c;
    for (int k = 0; k < 8; k++) {
      if (x[k].im != 0 || x[k].re.get_den() != 1)
        throw std::logic_error("E8 root not integral in simple basis");
      c[k] = static_cast<int>(x[k].re.get_num().get_si());
    }
    simple_coords.push_back(c);
  }

  // deterministic order: lexicographic on simple coordinates
  std::vector<int> order(NROOTS);
  for (int k = 0; k < NROOTS; k++) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return simple_coords[a] < simple_coords[b];
  });

  roots_.resize(NROOTS);
  for (int k = 0; k < NROOTS; k++) {
    E8Root& r = roots_[k];
    r.simple = simple_coords[order[k]];
    r.eps2 = eps_roots[order[k]];
    int c6 = r.simple[5] % 4;
    r.degree = (c6 + 4) % 4;
    index_[r.simple] = k;
  }

  // pairings with simple roots, cocycle bits
  std::array<std::array<int, 8>, 8> simple2eps;
  for (int i = 0; i < 8; i++)
    for (int k = 0; k < 8; k++) simple2eps[i][k] = kSimple2Eps[i][k];
  for (auto& r : roots_) {
    for (int i = 0; i < 8; i++) r.dot_simple[i] = dot2eps(r.eps2, simple2eps[i]);
    r.bits = 0;
    for (int i = 0; i < 8; i++)
      if (r.simple[i] & 1) r.bits |= static_cast<uint8_t>(1 << i);
    // (E * b)_i = b_i + sum_{j<i, adjacent} b_j (mod 2)
    r.ebits = 0;
    for (int i = 0; i < 8; i++) {
      int v = r.simple[i];
      for (int j = 0; j < i; j++)
        if (kAdj[i][j] != 0) v += r.simple[j];
      if (v & 1) r.ebits |= static_cast<uint8_t>(1 << i);
    }
  }

  // sanity: Cartan matrix of the declared simple roots
  for (int i = 0; i < 8; i++)
    for (int j = 0; j < 8; j++)
      if (dot2eps(simple2eps[i], simple2eps[j]) != kAdj[i][j])
        throw std::logic_error("E8 Cartan matrix mismatch");

  neg_.resize(NROOTS);
  for (int k = 0; k < NROOTS; k++) {
    std::array<int, 8> m;
    for (int i = 0; i < 8; i++) m[i] = -roots_[k].simple[i];
    neg_[k] = root_index(m);
    if (neg_[k] < 0) throw std::logic_error("E8 roots not negation-closed");
  }

  // graded components
  for (int b = 0; b < DIM; b++) comp_[degree_of_basis(b)].push_back(b);
  if (comp_[0].size() != 60 || comp_[1].size() != 64 || comp_[2].size() != 60 ||
      comp_[3].size() != 64)
    throw std::logic_error("unexpected graded dimensions");

  // Structure-constant sign branch.  The effective sign of [e_a, e_{-a}]
  // is opp * (flip ? -1 : 1); the first two configurations below have
  // effective sign +1 and lie in the two distinct rescaling classes, so
  // whichever class satisfies Jacobi we end up with [e_a, e_{-a}] = +h_a.
  bool ok = false;
  for (auto [opp, flip] : {std::pair{1, false}, {-1, true}, {1, true}, {-1, false}}) {
    opp_sign_ = opp;
    flip_neg_ = flip;
    if (jacobi_sample_ok()) {
      ok = true;
      break;
    }
  }
  if (!ok) throw std::logic_error("no consistent structure-constant signs");

  // simple roots of the degree-0 subsystem
  std::vector<int> pos0;
  for (int r = 0; r < NROOTS; r++)
    if (roots_[r].degree == 0 && is_positive(r)) pos0.push_back(r);
  std::vector<int> simples;
  for (int b : pos0) {
    bool decomposable = false;
    for (int g : pos0) {
      if (decomposable) break;
      for (int d : pos0) {
        std::array<int, 8> sum;
        for (int k = 0; k < 8; k++)
          sum[k] = roots_[g].simple[k] + roots_[d].simple[k];
        if (sum == roots_[b].simple) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simples.push_back(b);
  }
  if (simples.size() != 8) throw std::logic_error("g0 simple-root count");

  // order the two diagram components: rank-5 fork first, then rank-3 chain
  auto adjacent = [&](int a, int b) { return pairing(a, b) != 0 && a != b; };
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(simples.size(), false);
  for (size_t k = 0; k < simples.size(); k++) {
    if (seen[k]) continue;
    std::vector<int> comp{simples[k]};
    seen[k] = true;
    for (size_t q = 0; q < comp.size(); q++)
      for (size_t j = 0; j < simples.size(); j++)
        if (!seen[j] && adjacent(comp[q], simples[j])) {
          seen[j] = true;
          comp.push_back(simples[j]);
        }
    comps.push_back(comp);
  }
  if (comps.size() != 2) throw std::logic_error("g0 diagram component count");
  if (comps[0].size() < comps[1].size()) std::swap(comps[0], comps[1]);
  if (comps[0].size() != 5 || comps[1].size() != 3)
    throw std::logic_error("g0 diagram component ranks");

  auto degree_in = [&](const std::vector<int>& comp, int node) {
    int d = 0;
    for (int o : comp)
      if (adjacent(node, o)) d++;
    return d;
  };
  // rank-5 fork component: chain end, chain middle, fork, two tips
  {
    const auto& comp = comps[0];
    int fork = -1;
    for (int n : comp)
      if (degree_in(comp, n) == 3) fork = n;
    if (fork < 0) throw std::logic_error("g0 rank-5 component is not a fork");
    std::vector<int> tips, chain;
    for (int n : comp) {
      if (n == fork) continue;
      if (adjacent(n, fork) && degree_in(comp, n) == 1)
        tips.push_back(n);
      else
        chain.push_back(n);
    }
    if (tips.size() != 2 || chain.size() != 2)
      throw std::logic_error("g0 rank-5 component shape");
    std::sort(tips.begin(), tips.end(), [&](int a, int b) {
      return roots_[a].simple < roots_[b].simple;
    });
    int mid = adjacent(chain[0], fork) ? chain[0] : chain[1];
    int end = chain[0] == mid ? chain[1] : chain[0];
    g0_simples_ = {end, mid, fork, tips[0], tips[1]};
  }
  {
    const auto& comp = comps[1];
    int mid = -1;
    for (int n : comp)
      if (degree_in(comp, n) == 2) mid = n;
    std::vector<int> ends;
    for (int n : comp)
      if (n != mid) ends.push_back(n);
    std::sort(ends.begin(), ends.end(), [&](int a, int b) {
      return roots_[a].simple < roots_[b].simple;
    });
    g0_simples_.push_back(ends[0]);
    g0_simples_.push_back(mid);
    g0_simples_.push_back(ends[1]);
  }
}

std::string E8::describe_root(int r) const {
  std::string s = "(";
  for (int k = 0; k < 8; k++) {
    if (k) s += ",";
    s += std::to_string(roots_[r].simple[k]);
  }
  return s + ")";
}

// --- LieElement ---

LieElement LieElement::basis(int idx) {
  LieElement e;
  e.coords.push_back({idx, GaussRat(1)});
  return e;
}

GaussRat LieElement::coeff(int idx) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != coords.end() && it->first == idx) return it->second;
  return GaussRat(0);
}

void LieElement::set(int idx, const GaussRat& v) {
  auto it = std::lower_bound(coords.begin(), coords.end(), idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != coords.end() && it->first == idx) {
    if (v.is_zero())
      coords.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    coords.insert(it, {idx, v});
  }
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r;
  auto a = coords.begin();
  auto b = o.coords.begin();
  while (a != coords.end() || b != o.coords.end()) {
    if (b == o.coords.end() || (a != coords.end() && a->first < b->first)) {
      r.coords.push_back(*a++);
    } else if (a == coords.end() || b->first < a->first) {
      r.coords.push_back(*b++);
    } else {
      GaussRat s = a->second + b->second;
      if (!s.is_zero()) r.coords.push_back({a->first, s});
      ++a;
      ++b;
    }
  }
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  return *this + o * GaussRat(-1);
}

LieElement LieElement::operator*(const GaussRat& s) const {
  LieElement r;
  if (s.is_zero()) return r;
  r.coords = coords;
  for (auto& [i, c] : r.coords) c *= s;
  return r;
}

Vec LieElement::to_vec() const {
  Vec v(E8::DIM);
  for (const auto& [i, c] : coords) v[i] = c;
  return v;
}

LieElement LieElement::from_vec(const Vec& v) {
  LieElement e;
  for (size_t i = 0; i < v.size(); i++)
    if (!v[i].is_zero()) e.coords.push_back({static_cast<int>(i), v[i]});
  return e;
}

std::optional<Vec> LieElement::to_vec_in(const std::vector<int>& labels) const {
  std::vector<int> pos(E8::DIM, -1);
  for (size_t k = 0; k < labels.size(); k++) pos[labels[k]] = static_cast<int>(k);
  Vec v(labels.size());
  for (const auto& [i, c] : coords) {
    if (pos[i] < 0) return std::nullopt;
    v[pos[i]] = c;
  }
  return v;
}

LieElement LieElement::from_vec_in(const Vec& v, const std::vector<int>& labels) {
  LieElement e;
  for (size_t k = 0; k < labels.size(); k++)
    if (!v[k].is_zero()) e.set(labels[k], v[k]);
  return e;
}

bool LieElement::homogeneous_degree(int& k) const {
  const E8& e8 = E8::get();
  bool first = true;
  for (const auto& [i, c] : coords) {
    int d = e8.degree_of_basis(i);
    if (first) {
      k = d;
      first = false;
    } else if (d != k) {
      return false;
    }
  }
  if (first) k = 0;  // zero element: treat as degree 0
  return true;
}

std::string LieElement::str() const {
  if (coords.empty()) return "0";
  const E8& e8 = E8::get();
  std::string out;
  for (const auto& [i, c] : coords) {
    std::string base =
        i < 8 ? "h" + std::to_string(i + 1) : "e" + e8.describe_root(i - 8);
    std::string coef = to_string(c);
    std::string term;
    if (coef == "1")
      term = base;
    else if (coef == "-1")
      term = "-" + base;
    else if (c.is_real() || c.re == 0)
      term = coef + "*" + base;
    else
      term = "(" + coef + ")*" + base;
    if (out.empty())
      out = term;
    else
      out += (term[0] == '-') ? "-" + term.substr(1) : "+" + term;
  }
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  const E8& e8 = E8::get();
  std::map<int, GaussRat> acc;
  std::vector<ZTerm> terms;
  for (const auto& [i, ci] : x.coords) {
    for (const auto& [j, cj] : y.coords) {
      terms.clear();
      e8.bracket_basis(i, j, terms);
      if (terms.empty()) continue;
      GaussRat f = ci * cj;
      for (auto [b, c] : terms) acc[b] += f * GaussRat(c);
    }
  }
  LieElement r;
  for (auto& [b, c] : acc)
    if (!c.is_zero()) r.coords.push_back({b, std::move(c)});
  return r;
}

GaussRat killing(const LieElement& x, const LieElement& y) {
  const E8& e8 = E8::get();
  GaussRat acc;
  for (const auto& [i, ci] : x.coords)
    for (const auto& [j, cj] : y.coords) {
      GaussRat k = e8.killing_basis(i, j);
      if (!k.is_zero()) acc += ci * cj * k;
    }
  return acc;
}

SparseMat ad_matrix(const LieElement& x, const std::vector<int>& domain,
                    const std::vector<int>& codomain) {
  const E8& e8 = E8::get();
  std::vector<int> pos(E8::DIM, -1);
  for (size_t k = 0; k < codomain.size(); k++)
    pos[codomain[k]] = static_cast<int>(k);
  SparseMat m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
  std::vector<ZTerm> terms;
  for (size_t col = 0; col < domain.size(); col++) {
    std::map<int, GaussRat> acc;
    for (const auto& [i, ci] : x.coords) {
      terms.clear();
      e8.bracket_basis(i, domain[col], terms);
      for (auto [b, c] : terms) acc[b] += ci * GaussRat(c);
    }
    for (auto& [b, c] : acc) {
      if (c.is_zero()) continue;
      if (pos[b] < 0)
        throw GradingViolation("ad image leaves the declared codomain");
      m.add(pos[b], static_cast<int>(col), c);
    }
  }
  return m;
}

SparseMat ad_matrix_full(const LieElement& x) {
  return ad_matrix(x, all_basis_labels(), all_basis_labels());
}

std::vector<int> all_basis_labels() {
  std::vector<int> v(E8::DIM);
  for (int k = 0; k < E8::DIM; k++) v[k] = k;
  return v;
}

// --- Cartan-type recognition ---

std::vector<std::string> cartan_type(const Mat& cartan) {
  int n = cartan.rows;
  if (cartan.cols != n) throw std::invalid_argument("cartan_type shape");
  for (int i = 0; i < n; i++)
    if (cartan.at(i, i) != GaussRat(2))
      throw std::invalid_argument("cartan_type: diagonal must be 2");
  auto aij = [&](int i, int j) {
    const GaussRat& v = cartan.at(i, j);
    if (!v.is_real() || v.re.get_den() != 1)
      throw std::invalid_argument("cartan_type: non-integer entry");
    return static_cast<int>(v.re.get_num().get_si());
  };
  std::vector<bool> seen(n, false);
  std::vector<std::string> out;
  for (int start = 0; start < n; start++) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (size_t q = 0; q < comp.size(); q++)
      for (int j = 0; j < n; j++)
        if (!seen[j] && aij(comp[q], j) != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    int m = static_cast<int>(comp.size());
    // bond multiplicities and degrees within the component
    int maxbond = 1;
    std::vector<int> deg(m, 0);
    for (int a = 0; a < m; a++)
      for (int b = 0; b < m; b++) {
        if (a == b) continue;
        int prod = aij(comp[a], comp[b]) * aij(comp[b], comp[a]);
        if (prod > 0) {
          deg[a]++;
          maxbond = std::max(maxbond, prod);
        }
      }
    std::string name;
    int forks = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
    if (maxbond == 1) {
      if (forks == 0) {
        name = "A" + std::to_string(m);
      } else if (forks == 1) {
        // branch lengths from the fork node
        int fork = comp[std::find(deg.begin(), deg.end(), 3) - deg.begin()];
        std::vector<int> lens;
        for (int a = 0; a < m; a++) {
          if (comp[a] == fork || aij(comp[a], fork) == 0) continue;
          int len = 1, prev = fork, cur = comp[a];
          while (true) {
            int next = -1;
            for (int b = 0; b < m; b++) {
              int cand = comp[b];
              if (cand != prev && cand != cur && aij(cand, cur) != 0) next = cand;
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            len++;
          }
          lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens.size() == 3 && lens[0] == 1 && lens[1] == 1)
          name = "D" + std::to_string(m);
        else if (lens == std::vector<int>{1, 2, 2})
          name = "E6";
        else if (lens == std::vector<int>{1, 2, 3})
          name = "E7";
        else if (lens == std::vector<int>{1, 2, 4})
          name = "E8";
      }
    } else if (maxbond == 2 && forks == 0) {
      if (m == 2) {
        name = "B2";
      } else {
        // locate the double bond; B_n iff the -2 row belongs to a chain end
        for (int a = 0; a < m && name.empty(); a++)
          for (int b = 0; b < m; b++) {
            if (a == b || aij(comp[a], comp[b]) != -2) continue;
            bool doubles_at_end = (deg[a] == 1);
            bool at_boundary = (deg[a] == 1 || deg[b] == 1);
            if (!at_boundary) {
              name = "F4-like";
              if (m == 4) name = "F4";
            } else {
              name = (doubles_at_end ? "B" : "C") + std::to_string(m);
            }
            break;
          }
      }
    } else if (maxbond == 3 && m == 2) {
      name = "G2";
    }
    if (name.empty())
      throw std::invalid_argument("cartan_type: unrecognized diagram");
    out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mat cartan_matrix_of(const std::vector<int>& root_indices) {
  const E8& e8 = E8::get();
  int n = static_cast<int>(root_indices.size());
  Mat m(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      m.at(i, j) = GaussRat(e8.pairing(root_indices[i], root_indices[j]));
  return m;
}

Report verify_grading() {
  Report rep("order-4 grading of the 248-dimensional algebra");
  const E8& e8 = E8::get();

  std::array<int, 4> dims{};
  bool disjoint = true;
  std::vector<int> seen(E8::DIM, 0);
  for (int k = 0; k < 4; k++) {
    dims[static_cast<size_t>(k)] = static_cast<int>(e8.component(k).size());
    for (int b : e8.component(k)) {
      disjoint &= (seen[static_cast<size_t>(b)]++ == 0);
      disjoint &= e8.degree_of_basis(b) == k;
    }
  }
  rep.check("component dimensions (60,64,60,64)",
            dims == std::array<int, 4>{60, 64, 60, 64},
            "(" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) +
                "," + std::to_string(dims[2]) + "," + std::to_string(dims[3]) +
                ")");
  rep.check("components partition the basis",
            disjoint && dims[0] + dims[1] + dims[2] + dims[3] == E8::DIM);

  {
    bool order4 = true, scalar_ok = true;
    GaussRat i = GaussRat::i();
    for (int b = 0; b < E8::DIM; b++) {
      GaussRat s = e8.theta_scalar(b);
      GaussRat p = GaussRat(1);
      for (int k = 0; k < e8.degree_of_basis(b); k++) p = p * i;
      scalar_ok &= s == p;
      order4 &= (s * s * s * s).is_one();
    }
    rep.check("grading automorphism scales basis b by i^deg(b)", scalar_ok);
    rep.check("grading automorphism has fourth power one", order4);
    rep.check("grading automorphism has order exactly four",
              dims[1] > 0 && dims[2] > 0);
  }

  {
    // theta[x,y] = [theta x, theta y] for all basis pairs: every bracket
    // term must sit in degree deg(x) + deg(y) mod 4
    bool autom = true;
    std::vector<ZTerm> terms;
    for (int bi = 0; bi < E8::DIM && autom; bi++)
      for (int bj = bi + 1; bj < E8::DIM && autom; bj++) {
        terms.clear();
        e8.bracket_basis(bi, bj, terms);
        int want = (e8.degree_of_basis(bi) + e8.degree_of_basis(bj)) & 3;
        for (const ZTerm& t : terms)
          if (t.second != 0 && e8.degree_of_basis(t.first) != want) {
            autom = false;
            break;
          }
      }
    rep.check("bracket automorphism on all basis pairs", autom);
  }

  {
    const std::vector<int>& s = e8.g0_simple_roots();
    bool deg0 = s.size() == 8;
    for (int r : s) deg0 &= e8.roots()[static_cast<size_t>(r)].degree == 0;
    rep.check("eight degree-0 simple roots", deg0);
    std::vector<std::string> type;
    try {
      type = cartan_type(cartan_matrix_of(s));
    } catch (const std::exception&) {
    }
    rep.check("degree-0 subalgebra root system of type D5+A3",
              type == std::vector<std::string>{"A3", "D5"});
  }
  return rep;
}

std::string grading_dump() {
  const E8& e8 = E8::get();
  std::ostringstream os;
  os << "order-4 grading of E8 (degree = coefficient of node-6 simple root mod 4)\n";
  os << "dim g = 248; dims (g0,g1,g2,g3) = (" << e8.component(0).size() << ","
     << e8.component(1).size() << "," << e8.component(2).size() << ","
     << e8.component(3).size() << ")\n";
  for (int r = 0; r < E8::NROOTS; r++)
    os << "root " << e8.describe_root(r) << " deg " << e8.roots()[r].degree
       << "\n";
  os << "g0 simple roots:\n";
  const auto& s = e8.g0_simple_roots();
  os << "D5:";
  for (int k = 0; k < 5; k++) os << " " << e8.describe_root(s[k]);
  os << "\nA3:";
  for (int k = 5; k < 8; k++) os << " " << e8.describe_root(s[k]);
  os << "\n";
  return os.str();
}

}  // namespace spinorbit
