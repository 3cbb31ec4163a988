#include "ty/fixtures.hpp"

#include "ty/error.hpp"

namespace ty {
namespace fixtures {

namespace {

Involution involution_from_images(const LieAlgebra& L, const std::vector<RatVec>& images) {
  int n = L.dim();
  SparseTensor t({n, n}, {Variance::Down, Variance::Up});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!images[a][b].is_zero()) t.set_at(make_index({a, b}), images[a][b]);
  Involution th;
  th.matrix = std::move(t);
  validate_involution(L, th);
  return th;
}

RatVec unit_vec(int n, int i, Rational c = Rational(1)) {
  RatVec v(n);
  v[i] = c;
  return v;
}

Involution sl3_so3_involution(const LieAlgebra& L) {
  int n = L.dim();
  auto ix = [&](const char* s) { return L.label_index(s); };
  std::vector<RatVec> img(n, RatVec(n));
  img[ix("e1")] = unit_vec(n, ix("e2"), Rational(-1));
  img[ix("e2")] = unit_vec(n, ix("e1"), Rational(-1));
  img[ix("f1")] = unit_vec(n, ix("f2"), Rational(-1));
  img[ix("f2")] = unit_vec(n, ix("f1"), Rational(-1));
  img[ix("h1")] = unit_vec(n, ix("h2"));
  img[ix("h2")] = unit_vec(n, ix("h1"));
  img[ix("e3")] = unit_vec(n, ix("e3"), Rational(-1));
  img[ix("f3")] = unit_vec(n, ix("f3"), Rational(-1));
  return involution_from_images(L, img);
}

Involution sl3_gl2_involution(const LieAlgebra& L) {
  int n = L.dim();
  auto ix = [&](const char* s) { return L.label_index(s); };
  std::vector<RatVec> img(n);
  for (int a = 0; a < n; ++a) img[a] = unit_vec(n, a);
  for (const char* s : {"e2", "f2", "e3", "f3"}) img[ix(s)] = unit_vec(n, ix(s), Rational(-1));
  return involution_from_images(L, img);
}

// Conjugation by diag(1,...,1,-1) on the matrix-unit basis of sl_n: a
// basis element keeps its sign unless exactly one of its two matrix
// indices is the last row/column.
Involution sl_last_diag_involution(const LieAlgebra& L, int n) {
  int dim = L.dim();
  std::vector<RatVec> img(dim);
  for (int a = 0; a < dim; ++a) {
    const std::string& lab = L.labels[a];
    Rational sign(1);
    if (lab[0] == 'e' || lab[0] == 'f') {
      int i = lab[1] - '0', j = lab[2] - '0';
      if ((i == n) != (j == n)) sign = Rational(-1);
    }
    img[a] = unit_vec(dim, a, sign);
  }
  return involution_from_images(L, img);
}

}  // namespace

LieAlgebra algebra(const std::string& name) {
  std::string base = name;
  FormKind form = FormKind::Trace;
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    base = name.substr(0, colon);
    std::string f = name.substr(colon + 1);
    if (f == "killing") form = FormKind::Killing;
    else if (f == "trace") form = FormKind::Trace;
    else fail("unknown form suffix '" + f + "'");
  }
  if (base == "sl2") return classical_algebra(Family::sl, 2, form);
  if (base == "sl3") return classical_algebra(Family::sl, 3, form);
  if (base == "sl4") return classical_algebra(Family::sl, 4, form);
  if (base == "so5") return classical_algebra(Family::so, 5, form);
  if (base == "sp4") return classical_algebra(Family::sp, 2, form);
  if (base == "sl3-chevalley") return sl3_chevalley();
  fail("unknown algebra fixture '" + name + "'");
}

bool is_algebra_name(const std::string& name) {
  try {
    (void)algebra(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Involution involution(const std::string& pair_name, const LieAlgebra& L) {
  if (pair_name == "sl3-so3") return sl3_so3_involution(L);
  if (pair_name == "sl3-gl2") return sl3_gl2_involution(L);
  if (pair_name == "sl3-even") return identity_involution(L.dim());
  if (pair_name == "sl4-diag") return sl_last_diag_involution(L, 4);
  fail("unknown involution fixture '" + pair_name + "'");
}

LieAlgebra pair_parent(const std::string& name) {
  if (name == "sl3-so3" || name == "sl3-gl2" || name == "sl3-even") return sl3_chevalley();
  if (name == "sl4-diag") return classical_algebra(Family::sl, 4, FormKind::Trace);
  fail("unknown pair fixture '" + name + "'");
}

SymmetricPair pair(const std::string& name) {
  LieAlgebra L = pair_parent(name);
  Involution th = involution(name, L);
  return decompose(L, th);
}

bool is_pair_name(const std::string& name) {
  return name == "sl3-so3" || name == "sl3-gl2" || name == "sl3-even" || name == "sl4-diag";
}

}  // namespace fixtures
}  // namespace ty
