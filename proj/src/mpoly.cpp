#include "spinorbit/mpoly.hpp"

#include <stdexcept>

namespace spinorbit {

MPoly MPoly::variable(const std::vector<std::string>& names, int idx) {
  MPoly p(names);
  Expo e(names.size(), 0);
  e[idx] = 1;
  p.terms[e] = GaussRat(1);
  return p;
}

MPoly MPoly::constant(const std::vector<std::string>& names,
                      const GaussRat& c) {
  MPoly p(names);
  if (!c.is_zero()) p.terms[Expo(names.size(), 0)] = c;
  return p;
}

int MPoly::total_degree() const {
  if (terms.empty()) return -1;
  // first term in descending grlex has the maximal total degree
  const Expo& e = terms.begin()->first;
  int d = 0;
  for (int x : e) d += x;
  return d;
}

void MPoly::add_term(const Expo& e, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.vars.empty() ? b.vars : a.vars);
  if (a.terms.empty() || b.terms.empty()) return r;
  Expo e(a.terms.begin()->first.size());
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (size_t k = 0; k < e.size(); k++) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(const GaussRat& s) const {
  MPoly r(vars);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms) r.terms[e] = c * s;
  return r;
}

MPoly MPoly::pow(int e) const {
  MPoly r = MPoly::constant(vars, GaussRat(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
    if (e == 0) break;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(vars);
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var]--;
    r.add_term(d, c * GaussRat(static_cast<long>(e[var])));
  }
  return r;
}

GaussRat MPoly::eval(const Vec& point) const {
  if (point.size() != vars.size())
    throw std::invalid_argument("MPoly eval arity");
  GaussRat acc;
  for (const auto& [e, c] : terms) {
    GaussRat t = c;
    for (size_t k = 0; k < e.size(); k++)
      for (int j = 0; j < e[k]; j++) t *= point[k];
    acc += t;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (size_t k = 0; k < e.size(); k++) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string coef = to_string(c);
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else if (coef == "-1") {
      term = "-" + mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else {
      out += (term[0] == '-') ? "-" + term.substr(1) : "+" + term;
    }
  }
  return out;
}

MPoly poly_substitute(const MPoly& p, const Mat& m) {
  if (m.rows != p.nvars() || m.cols != p.nvars())
    throw std::invalid_argument("poly_substitute shape");
  std::vector<MPoly> images;
  for (int v = 0; v < p.nvars(); v++) {
    MPoly img(p.vars);
    Expo e(p.vars.size(), 0);
    for (int j = 0; j < p.nvars(); j++) {
      if (m.at(v, j).is_zero()) continue;
      e[j] = 1;
      img.add_term(e, m.at(v, j));
      e[j] = 0;
    }
    images.push_back(std::move(img));
  }
  return poly_substitute(p, images);
}

MPoly poly_substitute(const MPoly& p, const std::vector<MPoly>& images) {
  if (images.size() != p.vars.size())
    throw std::invalid_argument("poly_substitute image count");
  // Cache image powers; exponents stay small (<= 24 here).
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](int v, int e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty())
      cache.push_back(MPoly::constant(p.vars, GaussRat(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  MPoly out(p.vars);
  for (const auto& [e, c] : p.terms) {
    MPoly term = MPoly::constant(p.vars, c);
    for (size_t v = 0; v < e.size(); v++)
      if (e[v] > 0) term = term * power(static_cast<int>(v), e[v]);
    out = out + term;
  }
  return out;
}

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly q(p.vars), r = p;
  const Expo& de = d.terms.begin()->first;
  const GaussRat dinv = d.terms.begin()->second.inv();
  while (!r.is_zero()) {
    // find the first (grlex-largest) term of r divisible by lead(d)
    const Expo* re = nullptr;
    const GaussRat* rc = nullptr;
    for (const auto& [e, c] : r.terms) {
      bool div = true;
      for (size_t k = 0; k < e.size(); k++) {
        if (e[k] < de[k]) {
          div = false;
          break;
        }
      }
      if (div) {
        re = &e;
        rc = &c;
        break;
      }
    }
    if (!re) return std::nullopt;  // remainder nonzero
    Expo qe(re->size());
    for (size_t k = 0; k < qe.size(); k++) qe[k] = (*re)[k] - de[k];
    GaussRat qc = *rc * dinv;
    q.add_term(qe, qc);
    // r -= qc * x^qe * d
    Expo tmp(qe.size());
    for (const auto& [e, c] : d.terms) {
      for (size_t k = 0; k < tmp.size(); k++) tmp[k] = qe[k] + e[k];
      r.add_term(tmp, -(qc * c));
    }
  }
  return q;
}

MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_determinant shape");
  if (n == 0) throw std::invalid_argument("poly_determinant empty");
  if (n == 1) return m[0][0];
  // cofactor expansion along the first row, recursing on minors
  std::vector<std::string> vars = m[0][0].vars;
  MPoly det(vars);
  for (size_t j = 0; j < n; j++) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (size_t r = 1; r < n; r++) {
      std::vector<MPoly> row;
      for (size_t c = 0; c < n; c++)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MPoly cof = m[0][j] * poly_determinant(minor);
    det = (j % 2 == 0) ? det + cof : det - cof;
  }
  return det;
}

std::vector<std::vector<MPoly>> hessian_matrix(const MPoly& p) {
  int n = p.nvars();
  std::vector<MPoly> firsts;
  for (int v = 0; v < n; v++) firsts.push_back(p.derivative(v));
  std::vector<std::vector<MPoly>> h(n, std::vector<MPoly>(n, MPoly(p.vars)));
  for (int r = 0; r < n; r++)
    for (int c = r; c < n; c++) {
      h[r][c] = firsts[r].derivative(c);
      if (c != r) h[c][r] = h[r][c];
    }
  return h;
}

}  // namespace spinorbit
