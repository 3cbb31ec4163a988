#include "ty/lie.hpp"

#include <algorithm>
#include <sstream>

#include "ty/error.hpp"

namespace ty {

int LieAlgebra::label_index(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == name) return i;
  fail("unknown basis label '" + name + "'");
}

SparseTensor LieAlgebra::alpha_lowered() const {
  return einsum("abd,dc->abc", {&structure, &form});
}

SparseTensor LieAlgebra::alpha_raised() const {
  SparseTensor low = alpha_lowered();
  return einsum("axy,xb,yc->abc", {&low, &form_inverse, &form_inverse});
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  RatVec out(dim());
  for (const auto& [idx, v] : structure.entries()) {
    int a = idx[0], b = idx[1], c = idx[2];
    if (x[a].is_zero() || y[b].is_zero()) continue;
    out[c] += v * x[a] * y[b];
  }
  return out;
}

RatMat LieAlgebra::ad(const RatVec& x) const {
  RatMat m(dim(), dim());
  for (const auto& [idx, v] : structure.entries()) {
    int a = idx[0], b = idx[1], c = idx[2];
    if (x[a].is_zero()) continue;
    m.at(c, b) += v * x[a];
  }
  return m;
}

namespace {

std::string entry_witness(const SparseTensor& t, const std::vector<std::string>& labels) {
  if (t.is_zero()) return "";
  const auto& [idx, v] = *t.entries().begin();
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < t.rank(); ++i) {
    int x = idx[i];
    os << (i ? "," : "");
    if (x < static_cast<int>(labels.size())) os << labels[x];
    else os << x;
  }
  os << ") -> " << v;
  return os.str();
}

SparseTensor invert_form(const SparseTensor& form) {
  int n = form.dims()[0];
  RatMat m(n, n);
  for (const auto& [idx, v] : form.entries()) m.at(idx[0], idx[1]) = v;
  RatMat inv = m.inverse();
  SparseTensor out({n, n}, {Variance::Up, Variance::Up});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set_at(make_index({r, c}), inv.at(r, c));
  return out;
}

}  // namespace

LieAlgebra build_lie_algebra(std::vector<std::string> labels, SparseTensor structure,
                             const FormChoice& form_choice) {
  int n = static_cast<int>(labels.size());
  require(structure.rank() == 3, "build_lie_algebra: structure tensor must have rank 3");
  require(structure.dims() == std::vector<int>({n, n, n}),
          "build_lie_algebra: structure dims must match basis size");
  require(structure.variance() ==
              std::vector<Variance>({Variance::Down, Variance::Down, Variance::Up}),
          "build_lie_algebra: structure variance must be (down, down, up)");

  // antisymmetry in the two lower slots
  SparseTensor anti = structure + structure.permuted({1, 0, 2});
  require(anti.is_zero(), "build_lie_algebra: antisymmetry fails at " +
                              entry_witness(anti, labels));

  // Jacobi identity, cyclic over the three lower labels
  SparseTensor jac_base = einsum("abc,dce->abde", {&structure, &structure});
  SparseTensor jacobi = cyclic_sum(jac_base, {0, 1, 2});
  require(jacobi.is_zero(),
          "build_lie_algebra: Jacobi identity fails at " + entry_witness(jacobi, labels));

  SparseTensor form;
  if (form_choice.explicit_tensor) {
    form = *form_choice.explicit_tensor;
    require(form.dims() == std::vector<int>({n, n}) &&
                form.variance() == std::vector<Variance>({Variance::Down, Variance::Down}),
            "build_lie_algebra: explicit form must be a rank-2 lower tensor over the basis");
  } else {
    // trace of ad(x_a) ad(x_b)
    form = einsum("acd,bdc->ab", {&structure, &structure});
  }
  SparseTensor sym_defect = form - form.permuted({1, 0});
  require(sym_defect.is_zero(), "build_lie_algebra: form is not symmetric");

  LieAlgebra L;
  L.labels = std::move(labels);
  L.structure = std::move(structure);
  L.form = std::move(form);
  try {
    L.form_inverse = invert_form(L.form);
  } catch (const Error&) {
    fail("build_lie_algebra: degenerate invariant form (input is not simple)");
  }

  // invariance: alpha_{abc} totally antisymmetric (swap of the last two slots)
  SparseTensor low = L.alpha_lowered();
  SparseTensor inv_defect = low + low.permuted({0, 2, 1});
  require(inv_defect.is_zero(), "build_lie_algebra: form is not ad-invariant, witness " +
                                    entry_witness(inv_defect, L.labels));

  // contracted square proportional to the identity; fixes the Casimir eigenvalue
  SparseTensor sq = einsum("ab,ace,bed->cd", {&L.form_inverse, &L.structure, &L.structure});
  Rational cg;
  for (const auto& [idx, v] : sq.entries()) {
    if (idx[0] != idx[1])
      fail("build_lie_algebra: Casimir contraction not diagonal, witness " +
           entry_witness(sq, L.labels));
    if (cg.is_zero()) cg = v;
    else require(v == cg, "build_lie_algebra: Casimir contraction not proportional to the "
                          "identity, witness " + entry_witness(sq, L.labels));
  }
  require(static_cast<int>(sq.nnz()) == n && !cg.is_zero(),
          "build_lie_algebra: Casimir contraction degenerate (input is not simple)");
  L.casimir_adjoint = cg;
  return L;
}

CasimirCheck casimir_identity_check(const LieAlgebra& L) {
  SparseTensor up = L.alpha_raised();
  SparseTensor t = einsum("abc,cbd->ad", {&up, &L.structure});
  SparseTensor expected = SparseTensor::delta(L.dim()).permuted({1, 0}).scaled(L.casimir_adjoint);
  // delta built as (up, down); here we want (down a, up d)
  SparseTensor defect = t - expected;
  CasimirCheck out;
  out.pass = defect.is_zero();
  out.value = L.casimir_adjoint;
  if (!out.pass) out.witness = entry_witness(defect, L.labels);
  return out;
}

// ---------------------------------------------------------------------------
// classical families
// ---------------------------------------------------------------------------

namespace {

// Dense square matrix over rationals, used only to realize the classical
// algebras; flattened row-major into vectors for coordinate solving.
RatMat mat_bracket(const RatMat& x, const RatMat& y) {
  RatMat xy = x * y;
  RatMat yx = y * x;
  RatMat out(x.rows(), x.cols());
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c) out.at(r, c) = xy.at(r, c) - yx.at(r, c);
  return out;
}

RatVec flatten(const RatMat& m) {
  RatVec v(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v[static_cast<size_t>(r) * m.cols() + c] = m.at(r, c);
  return v;
}

Rational trace_product(const RatMat& x, const RatMat& y) {
  Rational t;
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c) t += x.at(r, c) * y.at(c, r);
  return t;
}

RatMat unit(int n, int i, int j) {
  RatMat m(n, n);
  m.at(i, j) = Rational(1);
  return m;
}

LieAlgebra from_matrix_basis(const std::vector<std::string>& labels,
                             const std::vector<RatMat>& basis, FormKind form) {
  int dim = static_cast<int>(basis.size());
  std::vector<RatVec> flat;
  flat.reserve(dim);
  for (const auto& m : basis) flat.push_back(flatten(m));

  std::vector<RatVec> brackets;
  brackets.reserve(static_cast<size_t>(dim) * dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) brackets.push_back(flatten(mat_bracket(basis[a], basis[b])));
  std::vector<RatVec> coords = coordinates_in_basis(flat, brackets);

  SparseTensor structure({dim, dim, dim}, {Variance::Down, Variance::Down, Variance::Up});
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const RatVec& co = coords[static_cast<size_t>(a) * dim + b];
      for (int c = 0; c < dim; ++c)
        if (!co[c].is_zero()) structure.set_at(make_index({a, b, c}), co[c]);
    }

  FormChoice fc = FormChoice::killing();
  if (form == FormKind::Trace) {
    SparseTensor tr({dim, dim}, {Variance::Down, Variance::Down});
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b) {
        Rational t = trace_product(basis[a], basis[b]);
        tr.set_at(make_index({a, b}), t);
        if (a != b) tr.set_at(make_index({b, a}), t);
      }
    fc = FormChoice::explicit_form(std::move(tr));
  }
  return build_lie_algebra(labels, std::move(structure), fc);
}

LieAlgebra build_sl(int n, FormKind form) {
  // Cartan first, then positive roots by height, then the matching negatives.
  std::vector<std::string> labels;
  std::vector<RatMat> basis;
  for (int i = 0; i < n - 1; ++i) {
    labels.push_back("h" + std::to_string(i + 1));
    RatMat h(n, n);
    h.at(i, i) = Rational(1);
    h.at(i + 1, i + 1) = Rational(-1);
    basis.push_back(std::move(h));
  }
  for (int height = 1; height < n; ++height)
    for (int i = 0; i + height < n; ++i) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(i + height + 1));
      basis.push_back(unit(n, i, i + height));
    }
  for (int height = 1; height < n; ++height)
    for (int i = 0; i + height < n; ++i) {
      labels.push_back("f" + std::to_string(i + 1) + std::to_string(i + height + 1));
      basis.push_back(unit(n, i + height, i));
    }
  return from_matrix_basis(labels, basis, form);
}

LieAlgebra build_so(int n, FormKind form) {
  std::vector<std::string> labels;
  std::vector<RatMat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      labels.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1));
      RatMat m(n, n);
      m.at(i, j) = Rational(1);
      m.at(j, i) = Rational(-1);
      basis.push_back(std::move(m));
    }
  return from_matrix_basis(labels, basis, form);
}

LieAlgebra build_sp(int n, FormKind form) {
  // sp_{2n}: X = [[A, B], [C, -A^T]] with B, C symmetric.
  int N = 2 * n;
  std::vector<std::string> labels;
  std::vector<RatMat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      labels.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
      RatMat m(N, N);
      m.at(i, j) = Rational(1);
      m.at(n + j, n + i) = Rational(-1);
      basis.push_back(std::move(m));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      labels.push_back("b" + std::to_string(i + 1) + std::to_string(j + 1));
      RatMat m(N, N);
      m.at(i, n + j) += Rational(1);
      m.at(j, n + i) += Rational(1);
      basis.push_back(std::move(m));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      labels.push_back("c" + std::to_string(i + 1) + std::to_string(j + 1));
      RatMat m(N, N);
      m.at(n + i, j) += Rational(1);
      m.at(n + j, i) += Rational(1);
      basis.push_back(std::move(m));
    }
  return from_matrix_basis(labels, basis, form);
}

}  // namespace

LieAlgebra classical_algebra(Family family, int n, FormKind form) {
  switch (family) {
    case Family::sl:
      require(n >= 2 && n * n - 1 <= 64, "classical_algebra: unsupported sl size");
      return build_sl(n, form);
    case Family::so:
      // so_2 is abelian, so_4 is not simple; both are rejected by validation.
      require(n >= 3 && n * (n - 1) / 2 <= 64, "classical_algebra: unsupported so size");
      require(n != 4, "classical_algebra: so(4) is not simple");
      return build_so(n, form);
    case Family::sp:
      require(n >= 1 && 2 * n * n + n <= 64, "classical_algebra: unsupported sp size");
      return build_sp(n, form);
  }
  fail("classical_algebra: unknown family");
}

LieAlgebra sl3_chevalley() {
  // e1 = E12, e2 = E23, e3 = E13, f_i transposed, h1 = E11-E22, h2 = E22-E33.
  std::vector<std::string> labels = {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2"};
  std::vector<RatMat> basis;
  basis.push_back(unit(3, 0, 1));
  basis.push_back(unit(3, 1, 2));
  basis.push_back(unit(3, 0, 2));
  basis.push_back(unit(3, 1, 0));
  basis.push_back(unit(3, 2, 1));
  basis.push_back(unit(3, 2, 0));
  RatMat h1(3, 3), h2(3, 3);
  h1.at(0, 0) = Rational(1);
  h1.at(1, 1) = Rational(-1);
  h2.at(1, 1) = Rational(1);
  h2.at(2, 2) = Rational(-1);
  basis.push_back(std::move(h1));
  basis.push_back(std::move(h2));
  return from_matrix_basis(labels, basis, FormKind::Trace);
}

}  // namespace ty
