#include "spinorbit/tables.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "spinorbit/gaussrat.hpp"

namespace spinorbit {

namespace {

GaussRat gr(const char* s) {
  auto v = parse_gaussrat(s);
  if (!v) throw std::runtime_error(std::string("bad scalar literal: ") + s);
  return *v;
}

Mat mat_of(int r, int c, std::initializer_list<const char*> entries) {
  if (static_cast<int>(entries.size()) != r * c)
    throw std::runtime_error("matrix literal size mismatch");
  Mat m(r, c);
  int idx = 0;
  for (const char* s : entries) m.a[idx++] = gr(s);
  return m;
}

Vec vec_of(std::initializer_list<const char*> entries) {
  Vec v;
  for (const char* s : entries) v.push_back(gr(s));
  return v;
}

std::vector<std::string> xvars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> zvars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

struct Term {
  const char* coeff;
  std::vector<int> expo;
};

MPoly mk_poly_in(const std::vector<std::string>& vars,
                 std::initializer_list<Term> terms) {
  MPoly p(vars);
  for (const Term& t : terms) {
    if (t.expo.size() != vars.size())
      throw std::runtime_error("polynomial literal exponent size mismatch");
    p.add_term(t.expo, gr(t.coeff));
  }
  return p;
}

MPoly mk_poly(int nvars, std::initializer_list<Term> terms) {
  return mk_poly_in(xvars(nvars), terms);
}

}  // namespace

const std::array<std::string, 4>& cartan_p_texts() {
  static const std::array<std::string, 4> texts = {
      "-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4",
      "-(2,5)x1+(1,3,4,5)x2+(3,4)x3+(1,2)x4",
      "(1,2,3,4)x1+()x2+(1,2,3,5)x3-(4,5)x4",
      "(1,4)x1+(2,3)x2-(1,5)x3+(2,3,4,5)x4",
  };
  return texts;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> r;
    r.push_back({1,
                 {},
                 1,
                 {vec_of({"1", "0", "0", "0"}), vec_of({"0", "1", "0", "0"}),
                  vec_of({"0", "0", "1", "0"}), vec_of({"0", "0", "0", "1"})},
                 {"p1", "p2", "p3", "p4"},
                 "1",
                 4,
                 46080});
    r.push_back({2,
                 {{1}},
                 2,
                 {vec_of({"0", "1", "0", "0"}), vec_of({"0", "0", "1", "0"}),
                  vec_of({"0", "0", "0", "1"})},
                 {"p2", "p3", "p4"},
                 "T1",
                 3,
                 384});
    r.push_back({3,
                 {{1}, {4, 2, 3, 5, 4, 5, 3, 2, 4}},
                 4,
                 {vec_of({"0", "1", "0", "0"}), vec_of({"0", "0", "1", "0"})},
                 {"p2", "p3"},
                 "T2",
                 2,
                 32});
    r.push_back({4,
                 {{1}, {4}},
                 6,
                 {vec_of({"0", "1", "-1", "0"}), vec_of({"0", "0", "1", "-1"})},
                 {"p2-p3", "p3-p4"},
                 "A1",
                 2,
                 24});
    r.push_back({5,
                 {{4, 2, 4}, {4, 3, 5, 4, 5, 3, 4}, {4, 2, 1, 5, 4, 5, 1, 2, 4}},
                 16,
                 {vec_of({"1", "0", "0", "0"}), vec_of({"0", "1", "0", "0"})},
                 {"p1", "p2"},
                 "A1+T3",
                 2,
                 96});
    r.push_back({6,
                 {{1, 2, 1}, {1, 2, 4, 3, 5, 3, 4, 2, 1}, {4, 2, 3, 5, 4, 5, 3, 2, 4}},
                 12,
                 {vec_of({"1", "1", "1", "0"})},
                 {"p1+p2+p3"},
                 "A1+T1",
                 1,
                 4});
    r.push_back({7,
                 {{1}, {3, 5, 4, 5, 3}, {2, 4, 2}},
                 24,
                 {vec_of({"0", "1", "1", "0"})},
                 {"p2+p3"},
                 "2A1",
                 1,
                 4});
    r.push_back({8,
                 {{2, 1, 2}, {2, 5, 2}, {3, 5, 3}, {4, 5, 4}},
                 192,
                 {vec_of({"1", "0", "0", "0"})},
                 {"p1"},
                 "2A1+A2+T1",
                 1,
                 4});
    r.push_back({9,
                 {{1}, {2}, {3}, {4}, {5}},
                 46080,
                 {},
                 {},
                 "D5+A3",
                 0,
                 1});
    return r;
  }();
  return rows;
}

std::vector<Mat> gamma_printed_generators(int i) {
  switch (i) {
    case 2:
      return {mat_of(3, 3,
                     {"1", "0", "0",  //
                      "0", "1", "0",  //
                      "0", "0", "-1"}),
              mat_of(3, 3,
                     {"0", "1/2+1/2*i", "1/2-1/2*i",  //
                      "1/2+1/2*i", "1/2", "1/2*i",    //
                      "1/2-1/2*i", "1/2*i", "1/2"})};
    case 3:
      return {mat_of(2, 2, {"1", "0", "0", "i"}),
              mat_of(2, 2, {"0", "1", "1", "0"})};
    case 4:
      return {mat_of(2, 2, {"1", "0", "1", "-1"}),
              mat_of(2, 2, {"-1/2-1/2*i", "1", "1/2", "1/2-1/2*i"})};
    case 5:
      return {mat_of(2, 2, {"1", "0", "0", "i"}),
              mat_of(2, 2, {"1/2+1/2*i", "1/2+1/2*i",  //
                            "1/2+1/2*i", "-1/2-1/2*i"})};
    case 6:
    case 7:
    case 8:
      return {mat_of(1, 1, {"i"})};
    default:
      throw std::runtime_error("printed quotient generators exist for 2..8");
  }
}

const PresentationData& presentation_data() {
  static const PresentationData data = [] {
    PresentationData d;
    d.names = {"s", "t", "u", "v", "w"};
    d.words = {std::vector<int>{1, 5, 3, 4, 3, 5, 1},
               std::vector<int>{4},
               std::vector<int>{2, 1, 5, 1, 2},
               std::vector<int>{1},
               std::vector<int>{4, 2, 3, 5, 4, 5, 3, 2, 4}};
    d.roots = {vec_of({"1", "i", "1+i", "0"}), vec_of({"1", "1", "1", "1"}),
               vec_of({"0", "1+i", "1", "i"}), vec_of({"1", "0", "0", "0"}),
               vec_of({"0", "0", "0", "1"})};
    return d;
  }();
  return data;
}

const std::vector<MPoly>& stratum_polynomials(int i) {
  static const std::array<std::vector<MPoly>, 5> lists = [] {
    std::array<std::vector<MPoly>, 5> ls;
    // stratum 1, coordinates on p1..p4
    ls[0] = {
        mk_poly(4, {{"1", {1, 1, 1, 1}}}),
        mk_poly(4, {{"1", {0, 4, 0, 0}},
                    {"-2", {0, 2, 1, 1}},
                    {"1/4", {0, 0, 4, 0}},
                    {"1/2", {0, 0, 2, 2}},
                    {"1/4", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}}, {"-1", {0, 4, 0, 0}}}),
        mk_poly(4, {{"1", {0, 0, 4, 0}}, {"-1", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {0, 4, 0, 0}},
                    {"2", {0, 2, 1, 1}},
                    {"1/4", {0, 0, 4, 0}},
                    {"1/2", {0, 0, 2, 2}},
                    {"1/4", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"-2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"-1", {0, 0, 2, 0}},
                    {"-2", {0, 0, 1, 1}},
                    {"-1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"-2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"-1", {0, 0, 2, 0}},
                    {"2", {0, 0, 1, 1}},
                    {"-1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"-1", {0, 0, 2, 0}},
                    {"-2", {0, 0, 1, 1}},
                    {"-1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"-1", {0, 0, 2, 0}},
                    {"2", {0, 0, 1, 1}},
                    {"-1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}},
                    {"2", {2, 2, 0, 0}},
                    {"-8", {1, 1, 0, 2}},
                    {"1", {0, 4, 0, 0}},
                    {"4", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}},
                    {"2", {2, 2, 0, 0}},
                    {"8", {1, 1, 0, 2}},
                    {"1", {0, 4, 0, 0}},
                    {"4", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}},
                    {"2", {2, 2, 0, 0}},
                    {"-8", {1, 1, 2, 0}},
                    {"1", {0, 4, 0, 0}},
                    {"4", {0, 0, 4, 0}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}},
                    {"2", {2, 2, 0, 0}},
                    {"8", {1, 1, 2, 0}},
                    {"1", {0, 4, 0, 0}},
                    {"4", {0, 0, 4, 0}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}},
                    {"-2", {2, 0, 1, 1}},
                    {"1/4", {0, 0, 4, 0}},
                    {"1/2", {0, 0, 2, 2}},
                    {"1/4", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {4, 0, 0, 0}},
                    {"2", {2, 0, 1, 1}},
                    {"1/4", {0, 0, 4, 0}},
                    {"1/2", {0, 0, 2, 2}},
                    {"1/4", {0, 0, 0, 4}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"-2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"1", {0, 0, 2, 0}},
                    {"-2", {0, 0, 1, 1}},
                    {"1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"-2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"1", {0, 0, 2, 0}},
                    {"2", {0, 0, 1, 1}},
                    {"1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"1", {0, 0, 2, 0}},
                    {"-2", {0, 0, 1, 1}},
                    {"1", {0, 0, 0, 2}}}),
        mk_poly(4, {{"1", {2, 0, 0, 0}},
                    {"2", {1, 1, 0, 0}},
                    {"1", {0, 2, 0, 0}},
                    {"1", {0, 0, 2, 0}},
                    {"2", {0, 0, 1, 1}},
                    {"1", {0, 0, 0, 2}}}),
    };
    // stratum 2, coordinates on p2,p3,p4
    ls[1] = {
        mk_poly(3, {{"1", {1, 1, 1}}}),
        mk_poly(3, {{"1", {2, 0, 0}},
                    {"-2", {1, 1, 0}},
                    {"1", {0, 2, 0}},
                    {"-1", {0, 0, 2}}}),
        mk_poly(3, {{"1", {0, 4, 0}}, {"-1", {0, 0, 4}}}),
        mk_poly(3, {{"1", {2, 0, 0}},
                    {"2", {1, 1, 0}},
                    {"1", {0, 2, 0}},
                    {"-1", {0, 0, 2}}}),
        mk_poly(3, {{"1", {2, 0, 0}},
                    {"1", {0, 2, 0}},
                    {"-2", {0, 1, 1}},
                    {"1", {0, 0, 2}}}),
        mk_poly(3, {{"1", {2, 0, 0}},
                    {"1", {0, 2, 0}},
                    {"2", {0, 1, 1}},
                    {"1", {0, 0, 2}}}),
        mk_poly(3, {{"1", {4, 0, 0}}, {"4", {0, 0, 4}}}),
        mk_poly(3, {{"1", {4, 0, 0}}, {"4", {0, 4, 0}}}),
        mk_poly(3, {{"1", {4, 0, 0}},
                    {"-2", {2, 1, 1}},
                    {"1/4", {0, 4, 0}},
                    {"1/2", {0, 2, 2}},
                    {"1/4", {0, 0, 4}}}),
        mk_poly(3, {{"1", {4, 0, 0}},
                    {"2", {2, 1, 1}},
                    {"1/4", {0, 4, 0}},
                    {"1/2", {0, 2, 2}},
                    {"1/4", {0, 0, 4}}}),
    };
    // stratum 3, coordinates on p2,p3
    ls[2] = {
        mk_poly(2, {{"1", {1, 1}}}),
        mk_poly(2, {{"1", {4, 0}}, {"-1", {0, 4}}}),
        mk_poly(2, {{"1", {8, 0}}, {"17/4", {4, 4}}, {"1", {0, 8}}}),
    };
    // stratum 4, coordinates on p2-p3, p3-p4
    ls[3] = {
        mk_poly(2, {{"1", {1, 1}}}),
        mk_poly(2, {{"1", {2, 0}}, {"-3", {1, 1}}, {"2", {0, 2}}}),
        mk_poly(2, {{"1", {4, 0}}, {"4", {0, 4}}}),
        mk_poly(2, {{"1", {2, 0}}, {"-6/5", {1, 1}}, {"2/5", {0, 2}}}),
        mk_poly(2, {{"1", {2, 0}}, {"-2/5", {1, 1}}, {"2/5", {0, 2}}}),
    };
    // stratum 5, coordinates on p1,p2
    ls[4] = {
        mk_poly(2, {{"1", {1, 1}}}),
        mk_poly(2, {{"1", {4, 0}}, {"-1", {0, 4}}}),
    };
    return ls;
  }();
  if (i < 1 || i > 5)
    throw std::runtime_error("stratum polynomial lists exist for 1..5");
  return lists[static_cast<size_t>(i - 1)];
}

const std::vector<MPoly>& quadrics_x() {
  static const std::vector<MPoly> qs = {
      mk_poly(4, {{"1", {1, 0, 1, 0}},
                  {"i", {1, 0, 0, 1}},
                  {"-1", {0, 1, 0, 1}},
                  {"-i", {0, 1, 1, 0}}}),
      mk_poly(4, {{"1", {1, 0, 1, 0}},
                  {"i", {0, 1, 1, 0}},
                  {"-1", {0, 1, 0, 1}},
                  {"-i", {1, 0, 0, 1}}}),
      mk_poly(4, {{"1", {2, 0, 0, 0}},
                  {"i", {0, 0, 2, 0}},
                  {"-1", {0, 2, 0, 0}},
                  {"-i", {0, 0, 0, 2}}}),
      mk_poly(4, {{"1", {2, 0, 0, 0}},
                  {"i", {0, 0, 0, 2}},
                  {"-1", {0, 2, 0, 0}},
                  {"-i", {0, 0, 2, 0}}}),
      mk_poly(4, {{"1", {1, 0, 1, 0}},
                  {"-i", {1, 0, 0, 1}},
                  {"-i", {0, 1, 1, 0}},
                  {"1", {0, 1, 0, 1}}}),
      mk_poly(4, {{"1", {1, 0, 1, 0}},
                  {"i", {1, 0, 0, 1}},
                  {"i", {0, 1, 1, 0}},
                  {"1", {0, 1, 0, 1}}}),
      mk_poly(4, {{"1", {2, 0, 0, 0}}, {"1", {0, 2, 0, 0}}, {"2", {0, 0, 1, 1}}}),
      mk_poly(4, {{"2", {1, 1, 0, 0}}, {"1", {0, 0, 2, 0}}, {"1", {0, 0, 0, 2}}}),
      mk_poly(4,
              {{"1", {2, 0, 0, 0}}, {"1", {0, 2, 0, 0}}, {"-2", {0, 0, 1, 1}}}),
      mk_poly(4, {{"2", {1, 1, 0, 0}},
                  {"-1", {0, 0, 2, 0}},
                  {"-1", {0, 0, 0, 2}}}),
  };
  return qs;
}

const std::vector<MPoly>& quartics_x() {
  static const std::vector<MPoly> as = {
      mk_poly(4, {{"2", {4, 0, 0, 0}},
                  {"2", {0, 4, 0, 0}},
                  {"-1", {0, 0, 4, 0}},
                  {"-1", {0, 0, 0, 4}},
                  {"12", {1, 1, 2, 0}},
                  {"12", {1, 1, 0, 2}},
                  {"6", {0, 0, 2, 2}}}),
      mk_poly(4, {{"-1", {4, 0, 0, 0}},
                  {"-1", {0, 4, 0, 0}},
                  {"2", {0, 0, 4, 0}},
                  {"2", {0, 0, 0, 4}},
                  {"6", {2, 2, 0, 0}},
                  {"-12", {2, 0, 1, 1}},
                  {"-12", {0, 2, 1, 1}}}),
      mk_poly(4, {{"2", {4, 0, 0, 0}},
                  {"2", {0, 4, 0, 0}},
                  {"-1", {0, 0, 4, 0}},
                  {"-1", {0, 0, 0, 4}},
                  {"-12", {1, 1, 2, 0}},
                  {"-12", {1, 1, 0, 2}},
                  {"6", {0, 0, 2, 2}}}),
      mk_poly(4, {{"-1", {4, 0, 0, 0}},
                  {"-1", {0, 4, 0, 0}},
                  {"2", {0, 0, 4, 0}},
                  {"2", {0, 0, 0, 4}},
                  {"6", {2, 2, 0, 0}},
                  {"12", {2, 0, 1, 1}},
                  {"12", {0, 2, 1, 1}}}),
      mk_poly(4, {{"-1", {4, 0, 0, 0}},
                  {"-1", {0, 4, 0, 0}},
                  {"-1", {0, 0, 4, 0}},
                  {"-1", {0, 0, 0, 4}},
                  {"-6", {2, 2, 0, 0}},
                  {"6*i", {2, 0, 2, 0}},
                  {"-6*i", {2, 0, 0, 2}},
                  {"-6*i", {0, 2, 2, 0}},
                  {"6*i", {0, 2, 0, 2}},
                  {"-6", {0, 0, 2, 2}}}),
      mk_poly(4, {{"-1", {4, 0, 0, 0}},
                  {"-1", {0, 4, 0, 0}},
                  {"-1", {0, 0, 4, 0}},
                  {"-1", {0, 0, 0, 4}},
                  {"-6", {2, 2, 0, 0}},
                  {"-6*i", {2, 0, 2, 0}},
                  {"6*i", {2, 0, 0, 2}},
                  {"6*i", {0, 2, 2, 0}},
                  {"-6*i", {0, 2, 0, 2}},
                  {"-6", {0, 0, 2, 2}}}),
  };
  return as;
}

const std::vector<MPoly>& quadrics_z() {
  static const std::vector<MPoly> qs = [] {
    auto zv = zvars(4);
    return std::vector<MPoly>{
        mk_poly_in(zv, {{"1", {1, 1, 0, 0}}, {"1", {0, 0, 1, 1}}}),
        mk_poly_in(zv, {{"1", {1, 1, 0, 0}}, {"-1", {0, 0, 1, 1}}}),
        mk_poly_in(zv, {{"1", {1, 0, 1, 0}}, {"1", {0, 1, 0, 1}}}),
        mk_poly_in(zv, {{"1", {1, 0, 1, 0}}, {"-1", {0, 1, 0, 1}}}),
        mk_poly_in(zv, {{"1", {1, 0, 0, 1}}, {"1", {0, 1, 1, 0}}}),
        mk_poly_in(zv, {{"1", {1, 0, 0, 1}}, {"-1", {0, 1, 1, 0}}}),
        mk_poly_in(zv, {{"1", {2, 0, 0, 0}},
                        {"1", {0, 2, 0, 0}},
                        {"-1", {0, 0, 2, 0}},
                        {"-1", {0, 0, 0, 2}}}),
        mk_poly_in(zv, {{"1", {2, 0, 0, 0}},
                        {"-1", {0, 2, 0, 0}},
                        {"1", {0, 0, 2, 0}},
                        {"-1", {0, 0, 0, 2}}}),
        mk_poly_in(zv, {{"1", {2, 0, 0, 0}},
                        {"-1", {0, 2, 0, 0}},
                        {"-1", {0, 0, 2, 0}},
                        {"1", {0, 0, 0, 2}}}),
        mk_poly_in(zv, {{"1", {2, 0, 0, 0}},
                        {"1", {0, 2, 0, 0}},
                        {"1", {0, 0, 2, 0}},
                        {"1", {0, 0, 0, 2}}}),
    };
  }();
  return qs;
}

const std::vector<MPoly>& quartics_z() {
  static const std::vector<MPoly> as = [] {
    auto zv = zvars(4);
    auto quartic_mix = [&](const char* c12, const char* c13, const char* c14,
                           const char* c23, const char* c24, const char* c34) {
      return mk_poly_in(zv, {{"1", {4, 0, 0, 0}},
                             {"1", {0, 4, 0, 0}},
                             {"1", {0, 0, 4, 0}},
                             {"1", {0, 0, 0, 4}},
                             {c12, {2, 2, 0, 0}},
                             {c13, {2, 0, 2, 0}},
                             {c14, {2, 0, 0, 2}},
                             {c23, {0, 2, 2, 0}},
                             {c24, {0, 2, 0, 2}},
                             {c34, {0, 0, 2, 2}}});
    };
    return std::vector<MPoly>{
        quartic_mix("-6", "-6", "-6", "-6", "-6", "-6"),
        quartic_mix("-6", "6", "6", "6", "6", "-6"),
        quartic_mix("6", "-6", "6", "6", "-6", "6"),
        quartic_mix("6", "6", "-6", "-6", "6", "6"),
        mk_poly_in(zv, {{"-2", {4, 0, 0, 0}},
                        {"-2", {0, 4, 0, 0}},
                        {"-2", {0, 0, 4, 0}},
                        {"-2", {0, 0, 0, 4}},
                        {"-24", {1, 1, 1, 1}}}),
        mk_poly_in(zv, {{"-2", {4, 0, 0, 0}},
                        {"-2", {0, 4, 0, 0}},
                        {"-2", {0, 0, 4, 0}},
                        {"-2", {0, 0, 0, 4}},
                        {"24", {1, 1, 1, 1}}}),
    };
  }();
  return as;
}

const Mat& z_change_mat() {
  static const Mat m = mat_of(4, 4,
                              {"1", "1", "0", "0",    //
                               "0", "0", "-i", "i",   //
                               "i", "-i", "0", "0",   //
                               "0", "0", "-i", "-i"});
  return m;
}

const std::array<std::array<QuadricCell, 5>, 10>& quadric_action_printed() {
  static const std::array<std::array<QuadricCell, 5>, 10> table = [] {
    auto cell = [](int target, const char* scalar) {
      return QuadricCell{target, gr(scalar)};
    };
    std::array<std::array<QuadricCell, 5>, 10> t;
    t[0] = {cell(6, "-1"), cell(2, "i"), cell(5, "1"), cell(4, "-1/2-1/2*i"),
            cell(10, "1/2+1/2*i")};
    t[1] = {cell(5, "-1"), cell(1, "-i"), cell(6, "-1"), cell(3, "-1/2+1/2*i"),
            cell(2, "1")};
    t[2] = {cell(3, "1"), cell(4, "-1"), cell(3, "1"), cell(2, "-1-i"),
            cell(3, "1")};
    t[3] = {cell(4, "1"), cell(3, "-1"), cell(4, "1"), cell(1, "-1+i"),
            cell(9, "-1")};
    t[4] = {cell(2, "-1"), cell(6, "i"), cell(1, "1"), cell(5, "1"),
            cell(5, "1")};
    t[5] = {cell(1, "-1"), cell(5, "-i"), cell(2, "-1"), cell(6, "1"),
            cell(8, "-1/2-1/2*i")};
    t[6] = {cell(7, "1"), cell(7, "1"), cell(9, "-1"), cell(7, "1"),
            cell(7, "1")};
    t[7] = {cell(8, "1"), cell(8, "1"), cell(8, "1"), cell(8, "1"),
            cell(6, "-1+i")};
    t[8] = {cell(9, "1"), cell(9, "1"), cell(7, "-1"), cell(10, "-1"),
            cell(4, "-1")};
    t[9] = {cell(10, "1"), cell(10, "1"), cell(10, "1"), cell(9, "-1"),
            cell(1, "1-i")};
    return t;
  }();
  return table;
}

const std::array<std::array<int, 5>, 6>& quartic_action_printed() {
  static const std::array<std::array<int, 5>, 6> table = {{
      {3, 1, 1, 4, 1},
      {2, 2, 4, 2, 6},
      {1, 3, 3, 3, 3},
      {4, 4, 2, 1, 4},
      {5, 6, 5, 5, 5},
      {6, 5, 6, 6, 2},
  }};
  return table;
}

namespace {

MixedRow row(const char* element, int dim, const char* signature,
             const char* quad = "", const char* center = "") {
  return MixedRow{element, dim, signature, quad, center};
}

}  // namespace

const MixedTable& mixed_table(int i) {
  static const std::array<MixedTable, 7> tables = [] {
    std::array<MixedTable, 7> t;

    t[0] = {2,
            vec_of({"0", "1", "2", "4"}),
            "p2+2p3+4p4",
            {
                row("(3,5)x1+(1,3)x4", 1, "0"),
            }};

    t[1] = {3,
            vec_of({"0", "1", "2", "0"}),
            "p2+2p3",
            {
                row("(1,4)x1-(1,5)x3", 1, "t1"),
                row("(3,5)x1+(1,3)x4", 1, "t1"),
                row("(1,4)x1-(3,5)x1-(1,5)x3-(1,3)x4", 2, "0"),
            }};

    t[2] = {4,
            vec_of({"0", "1", "1", "-2"}),
            "p2+p3-2p4",
            {
                row("(3,5)x1+(1,3)x4", 2, "t1"),
                row("()x1+(2,3)x1+(1,3,4,5)x1-(3,5)x2"
                    "+(1,3)x3+(1,5)x4-(3,4)x4-(1,2,3,5)x4",
                    3, "0"),
            }};

    t[3] = {5,
            vec_of({"1", "2", "0", "0"}),
            "p1+2p2",
            {
                row("(1,4)x1", 2, "t3+u1"),
                row("(1,4)x1-(4,5)x4", 3, "t2+u1"),
                row("(1,5)x3+(4,5)x4", 3, "t2+u1"),
                row("()x2-(4,5)x4", 3, "t2+u1"),
                row("(2,3)x2-(4,5)x4", 4, "t2"),
                row("(2,3)x2-(1,5)x3", 4, "t2"),
                row("(1,4)x1+(2,3)x2", 4, "t2"),
                row("(1,4)x1+()x2-(4,5)x4", 4, "t1+u1"),
                row("(2,3)x2-(1,5)x3-(4,5)x4", 5, "t1"),
                row("(1,4)x1+(2,3)x2-(4,5)x4", 5, "t1"),
                row("(1,4)x1+(2,3)x2-(1,5)x3", 5, "t1"),
                row("()x2-(4,5)x4+(1,4)x1+(1,2,3,5)x3", 6, "0"),
                row("(1,4)x1+()x2+(2,3)x2+(2,3,4,5)x4", 6, "0"),
            }};

    t[4] = {6,
            vec_of({"1", "1", "1", "0"}),
            "p1+p2+p3",
            {
                row("(2,3)x2+(2,3,4,5)x4", 1, "A1"),
                row("-(2,5)x1+(3,5)x1-(1,2,4,5)x2+(1,3,4,5)x2", 2, "t1+u1"),
                row("-(2,4)x1+(3,4)x1-2*(1,2,3,5)x1-(1,2)x2+(1,3)x2"
                    "-2*(4,5)x2-(2,5)x3+(3,5)x3+(1,2,4,5)x4-(1,3,4,5)x4",
                    3, "t1"),
                row("(1,4)x1-(2,5)x1+(3,5)x1-(1,2,4,5)x2+(1,3,4,5)x2"
                    "-(1,5)x3",
                    3, "u1"),
                row("(1,4)x1-(2,4)x1+(3,4)x1-2*(1,2,3,5)x1-(1,2)x2+(1,3)x2"
                    "-2*(4,5)x2-(1,5)x3-(2,5)x3+(3,5)x3+(1,2,4,5)x4"
                    "-(1,3,4,5)x4",
                    4, "0"),
            }};

    t[5] = {7,
            vec_of({"0", "1", "1", "0"}),
            "p2+p3",
            {
                row("(3,5)x1+(1,3)x4", 3, "t1+u2"),
                row("-()x1+(1,3,4,5)x1+(1,3)x3-(1,5)x4", 4, "t1+u1"),
                row("-()x1-(2,3)x1+(1,3,4,5)x1-(3,5)x2+(1,3)x3"
                    "-(1,5)x4-(3,4)x4+(1,2,3,5)x4",
                    5, "u1"),
                row("(1,4)x1-(2,3)x1-(3,5)x2-(1,5)x3-(3,4)x4+(1,2,3,5)x4", 6,
                    "0"),
            }};

    t[6] = {8,
            vec_of({"1", "0", "0", "0"}),
            "p1",
            {
                row("(1,4)x1", 4, "2A1+t2+u3", "0110", "1/3"),
                row("(1,4)x1-(4,5)x4", 5, "2A1+t2+u2", "0200", "2/3"),
                row("(1,2)x1+(1,4)x4-(4,5)x1", 7, "A1+t2+u3", "1110", "1"),
                row("(1,4)x1+()x2", 7, "t3+u5", "1111", "0"),
                row("(1,2)x1-(4,5)x4", 8, "A1+t2+u2", "2000", "4/3"),
                row("(1,4)x1+(2,3)x2", 8, "A1+t2+u2", "0022", "0"),
                row("(1,4)x1-(4,5)x4+()x2", 8, "t3+u4", "1201", "1/3"),
                row("(1,2)x1+(1,4)x4+(2,3,4,5)x4-(4,5)x1", 9, "2A1", "0000",
                    "2"),
                row("(1,4)x1+(1,5)x2-(4,5)x4+()x3", 9, "t3+u3", "2200", "0"),
                row("(1,4)x1+(2,3)x2-(4,5)x4", 9, "A1+t2+u1", "0204", "2/3"),
                row("(1,2)x1+(1,4)x4-(4,5)x1+()x2", 9, "t2+u4", "2111",
                    "2/3"),
                row("(1,2)x1-(4,5)x4+()x2", 10, "t2+u3", "3001", "1"),
                row("(1,2,3,4)x1+(1,4)x4-(4,5)x1+()x2", 10, "t2+u3", "0222",
                    "2/3"),
                row("(1,2)x1+(1,4)x4+(1,5)x2-(4,5)x1+()x3", 10, "t2+u3",
                    "3110", "1/3"),
                row("(1,2)x1+(1,5)x2-(4,5)x4+()x3", 11, "t2+u2", "4000",
                    "2/3"),
                row("(1,2,3,4)x1+(1,4)x4+(1,5)x2-(4,5)x1+()x3", 11, "t2+u2",
                    "2240", "0"),
                row("(1,2)x1+(1,4)x4+(1,5)x2+(3,4)x2-(4,5)x1+()x3", 11,
                    "t1+u3", "2222", "0"),
                row("(1,2)x1+(3,4)x2-(4,5)x4", 11, "t2+u2", "1213", "4/3"),
                row("(1,2)x1+(1,4)x4+(2,3)x2-(4,5)x1", 11, "t2+u2", "1114",
                    "1"),
                row("(1,2)x1+(2,3)x2+(3,4)x2-(4,5)x4", 12, "t1+u2", "2004",
                    "4/3"),
                row("(1,2,3,4)x1+(1,5)x2-(4,5)x4+()x3", 12, "t2+u1", "2640",
                    "4/3"),
                row("(1,2)x1+(1,4)x4+(1,5)x2+(2,3)x2-(4,5)x1+()x3", 12,
                    "t1+u2", "3114", "1/3"),
                row("(1,2,3,4)x1+(1,2)x4-(2,5)x1-(4,5)x4+()x2", 12, "t1+u2",
                    "1113", "2"),
                row("(1,2)x1+(1,5)x2+(3,4)x2-(4,5)x4+()x3", 12, "t1+u2",
                    "3213", "2/3"),
                row("-(1,2,3,4)x4+(1,2)x1+(2,3,4,5)x1-(4,5)x4+()x2", 13,
                    "t1+u1", "0004", "2"),
                row("(1,2)x1+(1,5)x2+(2,3)x2+(3,4)x2-(4,5)x4+()x3", 13, "u2",
                    "4004", "2/3"),
                row("(1,2,3,4)x1+(1,2)x4+(1,5)x2-(2,5)x1-(4,5)x4+()x3", 13,
                    "t1+u1", "4440", "2"),
                row("(1,2,3,4)x1+(1,4)x4+(1,5)x2+(2,3)x2-(4,5)x1+()x3", 13,
                    "t1+u1", "2244", "0"),
                row("(1,2,3,4)x1+(1,5)x2+(3,4)x2-(4,5)x4+()x3", 13, "t1+u1",
                    "1741", "1"),
                row("(1,2)x1-(1,5)x3+(3,4)x2-(4,5)x4", 13, "t1+u1", "4422",
                    "0"),
                row("(1,2)x1+(1,3,4,5)x3-(1,5)x3+(3,4)x2-(4,5)x4", 14, "u1",
                    "0840", "2/3"),
                row("(1,2,3,4)x1+(1,2)x4+(1,5)x2-(2,5)x1+(3,4)x2-(4,5)x4"
                    "+()x3",
                    14, "u1", "4444", "2"),
                row("(1,2,3,4)x1+(1,5)x2+(2,3)x2-(4,5)x4+()x3", 14, "t1",
                    "2648", "4/3"),
                row("(1,2,3,4)x1+(1,2)x4-(1,5)x3-(2,5)x1+(3,4)x2-(4,5)x4",
                    15, "0", "8884", "2"),
                row("(1,2,3,4)x1+(1,2)x4+(1,5)x2+(2,3)x2-(2,5)x1-(4,5)x4"
                    "+()x3",
                    15, "0", "4448", "2"),
            }};

    return t;
  }();
  if (i < 2 || i > 8) throw std::runtime_error("mixed_table: index not in 2..8");
  return tables[static_cast<size_t>(i - 2)];
}

}  // namespace spinorbit
