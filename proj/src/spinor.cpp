#include "spinorbit/spinor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spinorbit {

namespace {

// ---- label bookkeeping ----

std::vector<SpinorLabel> make_labels() {
  std::vector<std::vector<int>> sets;
  sets.push_back({});
  for (int a = 1; a <= 5; a++)
    for (int b = a + 1; b <= 5; b++) sets.push_back({a, b});
  for (int a = 1; a <= 5; a++)
    for (int b = a + 1; b <= 5; b++)
      for (int c = b + 1; c <= 5; c++)
        for (int d = c + 1; d <= 5; d++) sets.push_back({a, b, c, d});
  std::vector<SpinorLabel> out;
  for (int j = 1; j <= 4; j++)
    for (const auto& s : sets) out.push_back({s, j});
  return out;
}

int set_to_mask(const std::vector<int>& set) {
  int m = 0;
  for (int v : set) m |= 1 << (v - 1);
  return m;
}

std::vector<int> mask_to_set(int mask) {
  std::vector<int> s;
  for (int v = 1; v <= 5; v++)
    if (mask & (1 << (v - 1))) s.push_back(v);
  return s;
}

// label index <-> (even mask, j); -1 when the mask has odd popcount
int label_index_of(int mask, int j) {
  static const auto table = [] {
    std::array<std::array<int, 4>, 32> t{};
    for (auto& row : t) row.fill(-1);
    const auto& ls = all_labels();
    for (size_t k = 0; k < ls.size(); k++)
      t[set_to_mask(ls[k].set)][ls[k].j - 1] = static_cast<int>(k);
    return t;
  }();
  if (mask < 0 || mask >= 32 || j < 1 || j > 4) return -1;
  return table[mask][j - 1];
}

// ---- matrix helpers ----

Mat unit_mat(int n, int r, int c) {
  Mat m(n, n);
  m.at(r, c) = GaussRat(1);
  return m;
}

// E_ij - E_{11-j,11-i} in the antidiagonal o(10) model (1-based indices)
Mat b10(int i, int j) {
  Mat m(10, 10);
  m.at(i - 1, j - 1) += GaussRat(1);
  m.at(11 - j - 1, 11 - i - 1) -= GaussRat(1);
  return m;
}

Mat antidiag10() {
  Mat a(10, 10);
  for (int i = 0; i < 10; i++) a.at(i, 9 - i) = GaussRat(1);
  return a;
}

bool is_zero_mat(const Mat& m) {
  for (const auto& v : m.a)
    if (!v.is_zero()) return false;
  return true;
}

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

Vec flatten(const Mat& m) { return m.a; }

// ---- reduced rows paired with images ----

void sub_scaled(LieElement& x, const GaussRat& c, const LieElement& y) {
  x = x - y * c;
}
void scale_img(LieElement& x, const GaussRat& c) { x = x * c; }
bool img_is_zero(const LieElement& x) { return x.is_zero(); }

using MatPair = std::pair<Mat, Mat>;
void sub_scaled(MatPair& x, const GaussRat& c, const MatPair& y) {
  x.first = x.first - y.first * c;
  x.second = x.second - y.second * c;
}
void scale_img(MatPair& x, const GaussRat& c) {
  x.first = x.first * c;
  x.second = x.second * c;
}
bool img_is_zero(const MatPair& x) {
  return is_zero_mat(x.first) && is_zero_mat(x.second);
}

// Row-echelon rows (each row has zeros at all earlier pivots) with a
// parallel image carried through every elimination step, so that linear
// combinations on one side are mirrored on the other.
template <class Img>
struct PairedRows {
  explicit PairedRows(int dim) : dim(dim) {}
  int dim;
  std::vector<Vec> rows;
  std::vector<Img> imgs;
  std::vector<int> pivots;

  void reduce(Vec& v, Img& img) const {
    for (size_t k = 0; k < rows.size(); k++) {
      GaussRat c = v[pivots[k]];
      if (c.is_zero()) continue;
      for (int t = 0; t < dim; t++)
        if (!rows[k][t].is_zero()) v[t] -= c * rows[k][t];
      sub_scaled(img, c, imgs[k]);
    }
  }

  // true if added; false if (v,img) reduced to (0,0); throws if v
  // reduced to zero with a nonzero image left (inconsistent pairing)
  bool add(Vec v, Img img) {
    reduce(v, img);
    int p = -1;
    for (int t = 0; t < dim; t++)
      if (!v[t].is_zero()) {
        p = t;
        break;
      }
    if (p < 0) {
      if (!img_is_zero(img))
        throw std::runtime_error("inconsistent generator matching");
      return false;
    }
    GaussRat inv = v[p].inv();
    for (int t = 0; t < dim; t++)
      if (!v[t].is_zero()) v[t] *= inv;
    scale_img(img, inv);
    rows.push_back(std::move(v));
    imgs.push_back(std::move(img));
    pivots.push_back(p);
    return true;
  }

  // image of v under the linear map the rows define; nullopt if v is
  // outside the row span
  std::optional<Img> image_of(Vec v, Img zero) const {
    Img img = std::move(zero);
    reduce(v, img);
    for (const auto& t : v)
      if (!t.is_zero()) return std::nullopt;
    // reduce() computed zero_img - sum c_k img_k for v = sum c_k row_k,
    // so the image of v is the negation
    scale_img(img, GaussRat(-1));
    return img;
  }
};

}  // namespace

// ---- labels ----

std::string SpinorLabel::str() const {
  std::string s = "(";
  for (size_t k = 0; k < set.size(); k++) {
    if (k) s += ",";
    s += std::to_string(set[k]);
  }
  s += ")x" + std::to_string(j);
  return s;
}

const std::vector<SpinorLabel>& all_labels() {
  static const std::vector<SpinorLabel> labels = make_labels();
  return labels;
}

int label_index(const SpinorLabel& l) {
  if (l.j < 1 || l.j > 4) return -1;
  if (l.set.size() % 2 != 0 || l.set.size() > 4) return -1;
  for (size_t k = 0; k < l.set.size(); k++) {
    if (l.set[k] < 1 || l.set[k] > 5) return -1;
    if (k > 0 && l.set[k] <= l.set[k - 1]) return -1;
  }
  return label_index_of(set_to_mask(l.set), l.j);
}

// ---- spinor four-tuples ----

SpinorTensor SpinorTensor::basis(int label_idx) {
  SpinorTensor t;
  t.coords.push_back({label_idx, GaussRat(1)});
  return t;
}

GaussRat SpinorTensor::coeff(int label_idx) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), label_idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != coords.end() && it->first == label_idx) return it->second;
  return GaussRat(0);
}

void SpinorTensor::set(int label_idx, const GaussRat& v) {
  auto it = std::lower_bound(coords.begin(), coords.end(), label_idx,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != coords.end() && it->first == label_idx) {
    if (v.is_zero())
      coords.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    coords.insert(it, {label_idx, v});
  }
}

SpinorTensor SpinorTensor::operator+(const SpinorTensor& o) const {
  SpinorTensor r;
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

SpinorTensor SpinorTensor::operator-(const SpinorTensor& o) const {
  return *this + o * GaussRat(-1);
}

SpinorTensor SpinorTensor::operator*(const GaussRat& s) const {
  SpinorTensor r;
  if (s.is_zero()) return r;
  r.coords = coords;
  for (auto& [i, c] : r.coords) c *= s;
  return r;
}

std::string SpinorTensor::str() const {
  if (coords.empty()) return "0";
  const auto& labels = all_labels();
  std::string out;
  for (const auto& [idx, c] : coords) {
    std::string s = to_string(c);
    bool neg = s[0] == '-';
    std::string body = neg ? to_string(-c) : s;
    std::string term = labels[idx].str();
    if (body != "1") term = body + "*" + term;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out;
}

std::optional<SpinorTensor> parse_spinor(std::string_view text) {
  // split into sign-prefixed terms: a +/- separates terms only once the
  // running term has seen its complete label ... ')' 'x' digit
  std::vector<std::pair<int, std::string>> terms;  // (sign, body)
  int sign = 1;
  std::string cur;
  bool label_done = false;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    pos++;
  }
  for (; pos < text.size(); pos++) {
    char ch = text[pos];
    if ((ch == '+' || ch == '-') && label_done) {
      terms.push_back({sign, cur});
      cur.clear();
      label_done = false;
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    if (ch == ' ') return std::nullopt;
    cur += ch;
    if (ch >= '1' && ch <= '9' && cur.size() >= 2 &&
        cur[cur.size() - 2] == 'x' && cur.find(')') != std::string::npos)
      label_done = true;
    else if (ch != ' ')
      label_done = false;
  }
  if (cur.empty() || !label_done) return std::nullopt;
  terms.push_back({sign, cur});

  SpinorTensor out;
  for (auto& [sgn, body] : terms) {
    size_t lp = body.find('(');
    size_t rp = body.find(')');
    if (lp == std::string::npos || rp == std::string::npos || rp < lp)
      return std::nullopt;
    if (rp + 1 >= body.size() || body[rp + 1] != 'x') return std::nullopt;
    GaussRat coeff(1);
    if (lp > 0) {
      if (body[lp - 1] != '*') return std::nullopt;
      auto c = parse_gaussrat(std::string_view(body).substr(0, lp - 1));
      if (!c) return std::nullopt;
      coeff = *c;
    }
    if (sgn < 0) coeff = -coeff;
    // index list
    SpinorLabel label;
    std::string list = body.substr(lp + 1, rp - lp - 1);
    if (!list.empty()) {
      size_t p = 0;
      while (p < list.size()) {
        size_t q = list.find(',', p);
        std::string tok = list.substr(p, q == std::string::npos ? q : q - p);
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '9')
          return std::nullopt;
        label.set.push_back(tok[0] - '0');
        p = q == std::string::npos ? list.size() : q + 1;
      }
    }
    std::string jtxt = body.substr(rp + 2);
    if (jtxt.size() != 1 || jtxt[0] < '1' || jtxt[0] > '4')
      return std::nullopt;
    label.j = jtxt[0] - '0';
    int idx = label_index(label);
    if (idx < 0) return std::nullopt;
    out.set(idx, out.coeff(idx) + coeff);
  }
  return out;
}

// ---- weights ----

bool Weight::operator<(const Weight& o) const {
  for (int k = 0; k < 5; k++) {
    if (d5[k] < o.d5[k]) return true;
    if (o.d5[k] < d5[k]) return false;
  }
  for (int k = 0; k < 4; k++) {
    if (a3[k] < o.a3[k]) return true;
    if (o.a3[k] < a3[k]) return false;
  }
  return false;
}

Weight weight_of(int label_idx) {
  const auto& l = all_labels().at(label_idx);
  Weight w;
  int mask = set_to_mask(l.set);
  for (int k = 0; k < 5; k++)
    w.d5[k] = (mask & (1 << k)) ? GaussRat(1, 2, 0, 1) : GaussRat(-1, 2, 0, 1);
  for (int k = 0; k < 4; k++)
    w.a3[k] = (k + 1 == l.j) ? GaussRat(3, 4, 0, 1) : GaussRat(-1, 4, 0, 1);
  return w;
}

GaussRat weight_dot(const Weight& a, const Weight& b) {
  GaussRat s;
  for (int k = 0; k < 5; k++) s += a.d5[k] * b.d5[k];
  for (int k = 0; k < 4; k++) s += a.a3[k] * b.a3[k];
  return s;
}

// ---- Clifford model ----

Mat gamma_action(int generator) {
  if (generator < 1 || generator > 10)
    throw std::invalid_argument("gamma_action: generator out of range");
  Mat m(32, 32);
  if (generator > 5) {
    int a = generator - 5;  // wedge by u_a
    int bit = 1 << (a - 1);
    for (int mask = 0; mask < 32; mask++) {
      if (mask & bit) continue;
      int below = std::popcount(static_cast<unsigned>(mask & (bit - 1)));
      m.at(mask | bit, mask) = GaussRat(below % 2 ? -1 : 1);
    }
  } else {
    int tgt = 6 - generator;  // contraction pairs u_{6-g} with v_g
    int bit = 1 << (tgt - 1);
    for (int mask = 0; mask < 32; mask++) {
      if (!(mask & bit)) continue;
      int before = std::popcount(static_cast<unsigned>(mask & (bit - 1)));
      m.at(mask & ~bit, mask) = GaussRat(before % 2 ? -1 : 1);
    }
  }
  return m;
}

const std::vector<Mat>& o10_basis() {
  static const std::vector<Mat> basis = [] {
    std::vector<Mat> out;
    for (int i = 1; i <= 10; i++)
      for (int j = 1; j <= 10; j++) {
        if (i + j == 11) continue;
        if (std::pair{i, j} < std::pair{11 - j, 11 - i})
          out.push_back(b10(i, j));
      }
    return out;
  }();
  return basis;
}

Mat rho(const Mat& a) {
  if (a.rows != 10 || a.cols != 10)
    throw std::invalid_argument("rho: expected a 10x10 matrix");
  static const Mat A = antidiag10();
  if (!is_zero_mat(a.transpose() * A + A * a))
    throw std::invalid_argument("rho: matrix is not in o(10)");
  static const std::vector<Mat> gammas = [] {
    std::vector<Mat> g;
    for (int k = 1; k <= 10; k++) g.push_back(gamma_action(k));
    return g;
  }();
  Mat r(32, 32);
  GaussRat half(1, 2, 0, 1);
  for (int i = 1; i <= 10; i++)
    for (int k = 1; k <= 10; k++) {
      const GaussRat& c = a.at(k - 1, i - 1);
      if (c.is_zero()) continue;
      r = r + gammas[k - 1] * gammas[11 - i - 1] * (c * half);
    }
  return r;
}

const std::vector<Mat>& sl4_basis() {
  static const std::vector<Mat> basis = [] {
    std::vector<Mat> out;
    for (int i = 0; i < 4; i++)
      for (int j = 0; j < 4; j++)
        if (i != j) out.push_back(unit_mat(4, i, j));
    for (int k = 0; k < 3; k++) {
      Mat h(4, 4);
      h.at(k, k) = GaussRat(1);
      h.at(k + 1, k + 1) = GaussRat(-1);
      out.push_back(h);
    }
    return out;
  }();
  return basis;
}

// ---- Dynkin schemes ----

std::string DynkinScheme::dot() const {
  const auto& labels = all_labels();
  std::ostringstream os;
  os << "graph scheme {\n";
  for (int n : nodes) os << "  \"" << labels[n].str() << "\";\n";
  for (const auto& e : edges) {
    os << "  \"" << labels[e.a].str() << "\" -- \"" << labels[e.b].str()
       << "\"";
    if (e.dashed) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

DynkinScheme dynkin_scheme(const SpinorTensor& x) {
  if (x.is_zero())
    throw std::invalid_argument("dynkin_scheme: zero vector has no scheme");
  DynkinScheme s;
  for (const auto& [idx, c] : x.coords) s.nodes.push_back(idx);
  for (size_t a = 0; a < s.nodes.size(); a++)
    for (size_t b = a + 1; b < s.nodes.size(); b++) {
      GaussRat d = weight_dot(weight_of(s.nodes[a]), weight_of(s.nodes[b]));
      if (d == GaussRat(-1))
        s.edges.push_back({s.nodes[a], s.nodes[b], false});
      else if (d == GaussRat(1))
        s.edges.push_back({s.nodes[a], s.nodes[b], true});
    }
  return s;
}

// ---- identification with the degree-1 component ----

struct G0Iso::Impl {
  Impl() : fwd10(100), fwd4(16), rev(248) {}
  PairedRows<LieElement> fwd10;
  PairedRows<LieElement> fwd4;
  PairedRows<MatPair> rev;
};

LieElement G0Iso::map_o10(const Mat& a) const {
  if (a.rows != 10 || a.cols != 10)
    throw std::invalid_argument("map_o10: expected a 10x10 matrix");
  static const Mat A = antidiag10();
  if (!is_zero_mat(a.transpose() * A + A * a))
    throw std::invalid_argument("map_o10: matrix is not in o(10)");
  auto img = impl_->fwd10.image_of(flatten(a), LieElement::zero());
  if (!img) throw std::logic_error("map_o10: span does not cover o(10)");
  return *img;
}

LieElement G0Iso::map_sl4(const Mat& a) const {
  if (a.rows != 4 || a.cols != 4)
    throw std::invalid_argument("map_sl4: expected a 4x4 matrix");
  GaussRat tr;
  for (int k = 0; k < 4; k++) tr += a.at(k, k);
  if (!tr.is_zero()) throw std::invalid_argument("map_sl4: nonzero trace");
  auto img = impl_->fwd4.image_of(flatten(a), LieElement::zero());
  if (!img) throw std::logic_error("map_sl4: span does not cover sl4");
  return *img;
}

std::pair<Mat, Mat> G0Iso::split(const LieElement& x) const {
  auto img = impl_->rev.image_of(x.to_vec(), MatPair{Mat(10, 10), Mat(4, 4)});
  if (!img)
    throw std::invalid_argument("split: element is not in the degree-0 part");
  return *img;
}

namespace {

// degree-1 root weight under the generator assignment sigma: pairings
// with the five fork-component simples give the orthonormal coordinates,
// pairings with the rank-3 chain give the sum-zero 4-vector.
Weight root_weight(int r, const std::vector<int>& simples) {
  const E8& e8 = E8::get();
  std::array<GaussRat, 8> m;
  for (int k = 0; k < 8; k++) m[k] = GaussRat(e8.pairing(r, simples[k]));
  Weight w;
  GaussRat half(1, 2, 0, 1);
  w.d5[3] = (m[3] + m[4]) * half;           // mu4 from m4 = mu4-mu5, m5 = mu4+mu5
  w.d5[4] = (m[4] - m[3]) * half;
  w.d5[2] = m[2] + w.d5[3];
  w.d5[1] = m[1] + w.d5[2];
  w.d5[0] = m[0] + w.d5[1];
  GaussRat quarter(1, 4, 0, 1);
  GaussRat t4 = -(m[5] + m[6] * GaussRat(2) + m[7] * GaussRat(3)) * quarter;
  w.a3[3] = t4;
  w.a3[2] = t4 + m[7];
  w.a3[1] = w.a3[2] + m[6];
  w.a3[0] = w.a3[1] + m[5];
  return w;
}

}  // namespace

const G1Dictionary& G1Dictionary::get() {
  static const G1Dictionary dict = [] {
    const E8& e8 = E8::get();
    const auto& g0s = e8.g0_simple_roots();
    const auto& labels = all_labels();

    // module weights of the 64 labels
    std::vector<Weight> lw;
    for (int k = 0; k < 64; k++) lw.push_back(weight_of(k));
    std::vector<Weight> lw_sorted = lw;
    std::sort(lw_sorted.begin(), lw_sorted.end());

    // degree-1 roots
    std::vector<int> roots1;
    for (int b : e8.component(1)) roots1.push_back(b - 8);

    // find the generator assignment whose root weights reproduce the
    // label weights (fork tips may swap; the rank-3 chain may reverse)
    int variant = -1;
    std::vector<int> simples;
    std::vector<Weight> rw;
    for (int v = 0; v < 4; v++) {
      simples = g0s;
      if (v & 1) std::swap(simples[3], simples[4]);
      if (v & 2) std::swap(simples[5], simples[7]);
      rw.clear();
      for (int r : roots1) rw.push_back(root_weight(r, simples));
      std::vector<Weight> rs = rw;
      std::sort(rs.begin(), rs.end());
      if (rs == lw_sorted) {
        variant = v;
        break;
      }
    }
    if (variant < 0)
      throw std::runtime_error(
          "no generator assignment reproduces the module weights");

    // weight -> label, then root -> label
    std::map<Weight, int> by_weight;
    for (int k = 0; k < 64; k++) {
      if (!by_weight.emplace(lw[k], k).second)
        throw std::runtime_error("module weights are not distinct");
    }
    std::vector<int> root_to_label(E8::NROOTS, -1);
    std::vector<int> label_root(64, -1);
    for (size_t k = 0; k < roots1.size(); k++) {
      auto it = by_weight.find(rw[k]);
      if (it == by_weight.end())
        throw std::runtime_error("root weight missing among label weights");
      root_to_label[roots1[k]] = it->second;
      label_root[it->second] = roots1[k];
    }

    // ---- matrix-side Chevalley generators ----
    // The weight functionals eps_i read the Cartan eigenvalue at the
    // position of u_i = v_{5+i} (so that u_i has weight eps_i, matching
    // the label weights); the raising operators for eps1-eps2, eps2-eps3,
    // eps3-eps4, eps4-eps5, eps4+eps5 therefore sit in the u-block.
    std::vector<Mat> me = {b10(6, 7), b10(7, 8), b10(8, 9), b10(9, 10),
                           b10(9, 1)};
    std::vector<Mat> mf = {b10(7, 6), b10(8, 7), b10(9, 8), b10(10, 9),
                           b10(1, 9)};
    for (int k = 0; k < 5; k++) {
      Mat h = commutator(me[k], mf[k]);
      if (!(commutator(h, me[k]) == me[k] * GaussRat(2)) ||
          !(commutator(h, mf[k]) == mf[k] * GaussRat(-2)))
        throw std::logic_error("bad normalization of o(10) generators");
    }
    std::vector<Mat> se, sf;
    for (int k = 0; k < 3; k++) {
      se.push_back(unit_mat(4, k, k + 1));
      sf.push_back(unit_mat(4, k + 1, k));
    }

    // ---- generator matching and bracket closure ----
    G0Iso iso;
    auto impl = std::make_shared<G0Iso::Impl>();
    auto e8_gen = [&](int pos, bool neg) {
      int r = simples[pos];
      return LieElement::basis(8 + (neg ? e8.negative_of(r) : r));
    };
    {
      std::vector<std::pair<Mat, LieElement>> gens, work;
      for (int k = 0; k < 5; k++) {
        gens.push_back({me[k], e8_gen(k, false)});
        gens.push_back({mf[k], e8_gen(k, true)});
      }
      for (const auto& g : gens)
        if (impl->fwd10.add(flatten(g.first), g.second)) work.push_back(g);
      for (size_t q = 0; q < work.size(); q++) {
        auto cur = work[q];
        for (const auto& g : gens) {
          Mat m = commutator(g.first, cur.first);
          LieElement x = bracket(g.second, cur.second);
          if (impl->fwd10.add(flatten(m), x)) work.push_back({m, x});
        }
      }
      if (static_cast<int>(impl->fwd10.rows.size()) != 45)
        throw std::runtime_error("o(10) closure has wrong dimension");
    }
    {
      std::vector<std::pair<Mat, LieElement>> gens, work;
      for (int k = 0; k < 3; k++) {
        gens.push_back({se[k], e8_gen(5 + k, false)});
        gens.push_back({sf[k], e8_gen(5 + k, true)});
      }
      for (const auto& g : gens)
        if (impl->fwd4.add(flatten(g.first), g.second)) work.push_back(g);
      for (size_t q = 0; q < work.size(); q++) {
        auto cur = work[q];
        for (const auto& g : gens) {
          Mat m = commutator(g.first, cur.first);
          LieElement x = bracket(g.second, cur.second);
          if (impl->fwd4.add(flatten(m), x)) work.push_back({m, x});
        }
      }
      if (static_cast<int>(impl->fwd4.rows.size()) != 15)
        throw std::runtime_error("sl4 closure has wrong dimension");
    }
    // reverse span over the degree-0 component
    {
      Mat z10(10, 10), z4(4, 4);
      for (size_t k = 0; k < impl->fwd10.rows.size(); k++) {
        Mat m(10, 10);
        m.a = impl->fwd10.rows[k];
        impl->rev.add(impl->fwd10.imgs[k].to_vec(), MatPair{m, z4});
      }
      for (size_t k = 0; k < impl->fwd4.rows.size(); k++) {
        Mat m(4, 4);
        m.a = impl->fwd4.rows[k];
        impl->rev.add(impl->fwd4.imgs[k].to_vec(), MatPair{z10, m});
      }
      if (static_cast<int>(impl->rev.rows.size()) != 60)
        throw std::runtime_error(
            "degree-0 component is not the sum of the two images");
    }
    iso.impl_ = impl;
    for (const Mat& b : o10_basis()) iso.o10_images.push_back(iso.map_o10(b));
    for (const Mat& b : sl4_basis()) iso.sl4_images.push_back(iso.map_sl4(b));

    // ---- equivariance constraints for the dictionary coefficients ----
    // spinor-side generator actions on labels
    struct Action {
      // per label: list of (target label, coefficient)
      std::array<std::vector<std::pair<int, GaussRat>>, 64> on;
    };
    std::vector<Action> acts(16);
    std::vector<LieElement> e8_gens(16);
    for (int k = 0; k < 8; k++) {
      e8_gens[2 * k] = e8_gen(k, false);
      e8_gens[2 * k + 1] = e8_gen(k, true);
    }
    for (int k = 0; k < 5; k++)
      for (int s = 0; s < 2; s++) {
        Mat op = rho(s ? mf[k] : me[k]);
        Action& act = acts[2 * k + s];
        for (int L = 0; L < 64; L++) {
          int mask = set_to_mask(labels[L].set);
          for (int mask2 = 0; mask2 < 32; mask2++) {
            const GaussRat& c = op.at(mask2, mask);
            if (c.is_zero()) continue;
            int L2 = label_index_of(mask2, labels[L].j);
            if (L2 < 0)
              throw std::logic_error("half-spin action leaves the even part");
            act.on[L].push_back({L2, c});
          }
        }
      }
    for (int k = 0; k < 3; k++)
      for (int s = 0; s < 2; s++) {
        const Mat& op = s ? sf[k] : se[k];
        Action& act = acts[10 + 2 * k + s];
        for (int L = 0; L < 64; L++) {
          int j = labels[L].j;
          for (int i = 0; i < 4; i++) {
            const GaussRat& c = op.at(i, j - 1);
            if (c.is_zero()) continue;
            int L2 = label_index_of(set_to_mask(labels[L].set), i + 1);
            act.on[L].push_back({L2, c});
          }
        }
      }

    // propagate coefficients from the first label
    std::vector<GaussRat> coeff(64);
    std::vector<bool> known(64, false);
    coeff[0] = GaussRat(1);
    known[0] = true;
    std::vector<int> queue{0};
    std::vector<ZTerm> bterms;
    auto e8_step = [&](int g, int L) -> std::pair<int, GaussRat> {
      // [gen g, root vector of label L]: at most one root-vector term
      bterms.clear();
      const auto& gen = e8_gens[g];
      e8.bracket_basis(gen.coords[0].first, 8 + label_root[L], bterms);
      if (bterms.empty()) return {-1, GaussRat(0)};
      if (bterms.size() != 1 || bterms[0].first < 8)
        throw std::logic_error("degree-1 bracket produced a Cartan term");
      int L2 = root_to_label[bterms[0].first - 8];
      if (L2 < 0) throw std::logic_error("bracket left the degree-1 part");
      return {L2, GaussRat(bterms[0].second)};
    };
    for (size_t q = 0; q < queue.size(); q++) {
      int L = queue[q];
      for (int g = 0; g < 16; g++) {
        const auto& terms = acts[g].on[L];
        auto [L2, n] = e8_step(g, L);
        if (terms.empty() != (L2 < 0) ||
            (!terms.empty() && (terms.size() != 1 || terms[0].first != L2))) {
          std::ostringstream os;
          os << "action supports disagree between the two models: gen " << g
             << " label " << all_labels()[L].str() << " ->";
          for (auto& [t, c] : terms) os << " " << all_labels()[t].str();
          os << " | e8 -> " << (L2 >= 0 ? all_labels()[L2].str() : "none");
          throw std::runtime_error(os.str());
        }
        if (L2 < 0) continue;
        GaussRat want = coeff[L] * n / terms[0].second;
        if (!known[L2]) {
          coeff[L2] = want;
          known[L2] = true;
          queue.push_back(L2);
        } else if (!(coeff[L2] == want)) {
          throw std::runtime_error("equivariance constraints are inconsistent");
        }
      }
    }
    for (int L = 0; L < 64; L++)
      if (!known[L] || coeff[L].is_zero())
        throw std::runtime_error("dictionary does not cover all labels");

    G1Dictionary d;
    d.variant_ = variant;
    d.iso_ = iso;
    d.root_to_label_ = root_to_label;
    for (int L = 0; L < 64; L++) {
      LieElement x;
      x.set(8 + label_root[L], coeff[L]);
      d.to_g1_.push_back(x);
    }
    return d;
  }();
  return dict;
}

LieElement G1Dictionary::map(const SpinorTensor& x) const {
  LieElement out;
  for (const auto& [idx, c] : x.coords) out = out + to_g1_[idx] * c;
  return out;
}

std::optional<SpinorTensor> G1Dictionary::unmap(const LieElement& x) const {
  SpinorTensor out;
  for (const auto& [b, v] : x.coords) {
    if (b < 8) return std::nullopt;
    int L = root_to_label_[b - 8];
    if (L < 0) return std::nullopt;
    out.set(L, v / to_g1_[L].coords[0].second);
  }
  return out;
}

int G1Dictionary::label_of_root(int r) const { return root_to_label_.at(r); }

// ---- verification drivers ----

Report verify_spin_model() {
  Report rep("Clifford model and half-spin representation");

  {
    // v_a v_b + v_b v_a = Id when a + b = 11, zero otherwise
    std::vector<Mat> g;
    for (int k = 1; k <= 10; k++) g.push_back(gamma_action(k));
    Mat id = Mat::identity(32), zero(32, 32);
    bool ok = true;
    for (int a = 1; a <= 10 && ok; a++)
      for (int b = a; b <= 10 && ok; b++) {
        Mat s = g[static_cast<size_t>(a - 1)] * g[static_cast<size_t>(b - 1)] +
                g[static_cast<size_t>(b - 1)] * g[static_cast<size_t>(a - 1)];
        ok = s == (a + b == 11 ? id : zero);
      }
    rep.check("anticommutation relations on all 55 generator pairs", ok);
  }

  const std::vector<Mat>& basis = o10_basis();
  rep.check("the orthogonal algebra has 45 basis elements",
            basis.size() == 45);

  std::vector<Mat> r;
  r.reserve(basis.size());
  for (const Mat& a : basis) r.push_back(rho(a));

  {
    bool hom = true;
    for (size_t i = 0; i < basis.size() && hom; i++)
      for (size_t j = i + 1; j < basis.size() && hom; j++) {
        Mat c = basis[i] * basis[j] - basis[j] * basis[i];
        hom = rho(c) == r[i] * r[j] - r[j] * r[i];
      }
    rep.check("representation is a bracket homomorphism on all basis pairs",
              hom);
  }

  {
    // the even-degree part of the exterior algebra: masks of even
    // popcount, 16 of them, preserved by every operator of the image
    int even = 0;
    for (int mask = 0; mask < 32; mask++)
      if (std::popcount(static_cast<unsigned>(mask)) % 2 == 0) even++;
    rep.check("even part has dimension 16", even == 16);
    bool inv = true;
    for (const Mat& m : r)
      for (int row = 0; row < 32 && inv; row++)
        for (int col = 0; col < 32; col++) {
          bool rowEven =
              std::popcount(static_cast<unsigned>(row)) % 2 == 0;
          bool colEven =
              std::popcount(static_cast<unsigned>(col)) % 2 == 0;
          if (rowEven != colEven && !m.at(row, col).is_zero()) {
            inv = false;
            break;
          }
        }
    rep.check("even part invariant under the whole image", inv);
  }
  return rep;
}

Report verify_weight_dictionary() {
  Report rep("weights of the 64 labels against the degree-1 roots");
  const E8& e8 = E8::get();
  const G1Dictionary& dict = G1Dictionary::get();
  const std::vector<SpinorLabel>& labels = all_labels();
  rep.check("64 labels", labels.size() == 64);

  const std::vector<int>& g1 = e8.component(1);
  rep.check("64 degree-1 roots", g1.size() == 64);

  // the matching label of every degree-1 root, and the root of every label
  std::vector<int> root_of(64, -1);
  bool bij = true;
  for (int b : g1) {
    int rt = b - 8;
    int l = dict.label_of_root(rt);
    if (l < 0 || l >= 64 || root_of[static_cast<size_t>(l)] != -1) {
      bij = false;
      break;
    }
    root_of[static_cast<size_t>(l)] = rt;
  }
  rep.check("label-to-root matching is a bijection", bij);
  if (!bij) return rep;

  {
    bool lines = true;
    for (int l = 0; l < 64; l++) {
      const LieElement& img = dict.images()[static_cast<size_t>(l)];
      lines &= img.coords.size() == 1 &&
               img.coords[0].first == 8 + root_of[static_cast<size_t>(l)];
    }
    rep.check("each label maps onto its matching root line", lines);
  }

  {
    bool agree = true, values = true;
    for (int a = 0; a < 64 && agree; a++) {
      Weight wa = weight_of(a);
      for (int b = 0; b < 64; b++) {
        GaussRat dot = weight_dot(wa, weight_of(b));
        if (GaussRat(e8.pairing(root_of[static_cast<size_t>(a)],
                                root_of[static_cast<size_t>(b)])) != dot) {
          agree = false;
          break;
        }
        bool expected = a == b ? dot == GaussRat(2)
                               : (dot == GaussRat(1) || dot.is_zero() ||
                                  dot == GaussRat(-1));
        values &= expected;
      }
    }
    rep.check("root pairing equals the weight scalar product on all pairs",
              agree);
    rep.check("scalar products take values 2, 1, 0, -1", values);
  }
  return rep;
}

}  // namespace spinorbit
