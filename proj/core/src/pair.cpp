#include "ty/pair.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ty/error.hpp"

namespace ty {

Involution identity_involution(int dim) {
  Involution th;
  SparseTensor t({dim, dim}, {Variance::Down, Variance::Up});
  for (int i = 0; i < dim; ++i) t.set_at(make_index({i, i}), Rational(1));
  th.matrix = std::move(t);
  return th;
}

void validate_involution(const LieAlgebra& L, const Involution& theta) {
  int n = L.dim();
  const SparseTensor& th = theta.matrix;
  require(th.dims() == std::vector<int>({n, n}) &&
              th.variance() == std::vector<Variance>({Variance::Down, Variance::Up}),
          "involution: matrix must be rank 2 (down, up) over the basis");
  SparseTensor sq = einsum("ab,bc->ac", {&th, &th});
  require(sq == identity_involution(n).matrix, "involution: theta^2 != id");
  SparseTensor lhs = einsum("abc,cd->abd", {&L.structure, &th});
  SparseTensor rhs = einsum("ac,bd,cde->abe", {&th, &th, &L.structure});
  require(lhs == rhs, "involution: not a Lie algebra automorphism");
  SparseTensor fl = einsum("ac,bd,cd->ab", {&th, &th, &L.form});
  require(fl == L.form, "involution: does not preserve the invariant form");
}

std::string combo_label(const RatVec& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational a = v[i];
    if (first) {
      if (a == Rational(-1)) os << "-";
      else if (a != Rational(1)) os << a.str() << "*";
    } else {
      if (a == Rational(-1)) os << "-";
      else if (a.is_negative()) os << "-" << (-a).str() << "*";
      else if (a == Rational(1)) os << "+";
      else os << "+" << a.str() << "*";
    }
    os << labels[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string SymmetricPair::h_label(int alpha) const {
  return combo_label(h_basis[alpha], parent.labels);
}
std::string SymmetricPair::m_label(int p) const { return combo_label(m_basis[p], parent.labels); }

int SymmetricPair::h_index_of(const std::string& label) const {
  for (int i = 0; i < hdim(); ++i)
    if (h_label(i) == label) return i;
  fail("unknown h-basis label '" + label + "'");
}
int SymmetricPair::m_index_of(const std::string& label) const {
  for (int i = 0; i < mdim(); ++i)
    if (m_label(i) == label) return i;
  fail("unknown m-basis label '" + label + "'");
}

SparseTensor SymmetricPair::f_up() const { return einsum("lr,arb->alb", {&kappa_h_inv, &f}); }
SparseTensor SymmetricPair::g_up() const { return einsum("ar,rpq->paq", {&kappa_h_inv, &g}); }
SparseTensor SymmetricPair::w_up() const { return einsum("pr,arq->apq", {&kappa_m_inv, &g}); }

SparseTensor SymmetricPair::cbar_inv_diag() const {
  std::vector<Rational> diag(hdim());
  for (int a = 0; a < hdim(); ++a) {
    const Block& b = blocks[block_of[a]];
    require(!b.casimir_bar.is_zero(), "cbar_inv_diag: vanishing complementary Casimir");
    diag[a] = b.casimir_bar.inverse();
  }
  return SparseTensor::diagonal(diag);  // (Up, Down)
}

namespace {

// Kernel of (A -/+ I) where the involution acts by v |-> v theta, i.e.
// (theta v)_b = sum_a v_a theta_a^b.
std::vector<RatVec> eigenspace(const SparseTensor& theta, int n, int sign) {
  RatMat m(n, n);
  for (const auto& [idx, v] : theta.entries()) m.at(idx[1], idx[0]) = v;  // A[b][a]
  for (int i = 0; i < n; ++i) m.at(i, i) -= Rational(sign);
  return m.kernel();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SymmetricPair decompose(const LieAlgebra& L, const Involution& theta) {
  validate_involution(L, theta);
  int n = L.dim();

  SymmetricPair P;
  P.parent = L;
  P.theta = theta;
  std::vector<RatVec> h_raw = eigenspace(theta.matrix, n, +1);
  P.m_basis = eigenspace(theta.matrix, n, -1);
  require(static_cast<int>(h_raw.size() + P.m_basis.size()) == n,
          "decompose: eigenspace dimensions inconsistent");

  int h = static_cast<int>(h_raw.size());

  // centre: vectors of h commuting with all of h
  std::vector<RatVec> centre;
  {
    RatMat sys(h * n, h);
    for (int j = 0; j < h; ++j) {
      for (int i = 0; i < h; ++i) {
        RatVec br = L.bracket(h_raw[i], h_raw[j]);  // [u_i, sum c_j u_j] linear in column j
        for (int r = 0; r < n; ++r) sys.at(i * n + r, j) = br[r];
      }
    }
    std::vector<RatVec> coeffs = sys.kernel();
    for (const auto& c : coeffs) {
      RatVec v(n);
      for (int j = 0; j < h; ++j)
        for (int r = 0; r < n; ++r) v[r] += c[j] * h_raw[j][r];
      // normalize leading coordinate 1
      for (int r = 0; r < n; ++r)
        if (!v[r].is_zero()) {
          Rational inv = v[r].inverse();
          for (auto& x : v) x *= inv;
          break;
        }
      centre.push_back(std::move(v));
    }
  }

  // derived subalgebra [h, h], canonical basis by row reduction
  std::vector<RatVec> derived;
  {
    RatMat rows(h * h, n);
    int r = 0;
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j) {
        RatVec br = L.bracket(h_raw[i], h_raw[j]);
        for (int c = 0; c < n; ++c) rows.at(r, c) = br[c];
        ++r;
      }
    int rank = rows.rref();
    for (int i = 0; i < rank; ++i) {
      RatVec v(n);
      for (int c = 0; c < n; ++c) v[c] = rows.at(i, c);
      derived.push_back(std::move(v));
    }
  }
  require(static_cast<int>(derived.size() + centre.size()) == h,
          "decompose: h does not split as derived algebra plus centre");

  // split the derived part into ideals by bracket connectivity
  int d = static_cast<int>(derived.size());
  std::vector<std::vector<int>> components;
  if (d > 0) {
    std::vector<RatVec> coords_basis = derived;
    UnionFind uf(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        RatVec br = L.bracket(derived[i], derived[j]);
        bool nonzero = false;
        for (const auto& x : br) nonzero |= !x.is_zero();
        if (!nonzero) continue;
        RatVec co = coordinates_in_basis(derived, {br})[0];
        for (int k = 0; k < d; ++k)
          if (!co[k].is_zero()) { uf.unite(i, k); uf.unite(j, k); }
      }
    std::vector<int> root_order;
    std::vector<std::vector<int>> by_root(d);
    for (int i = 0; i < d; ++i) {
      int r = uf.find(i);
      if (by_root[r].empty()) root_order.push_back(r);
      by_root[r].push_back(i);
    }
    for (int r : root_order) components.push_back(by_root[r]);
  }

  // adapted h basis: simple ideals in order of appearance, centre last
  std::string block_names = "ab";
  int name_i = 0;
  for (const auto& comp : components) {
    Block b;
    b.name = name_i < 2 ? std::string(1, block_names[name_i]) : "a" + std::to_string(name_i);
    ++name_i;
    b.offset = static_cast<int>(P.h_basis.size());
    b.size = static_cast<int>(comp.size());
    for (int i : comp) P.h_basis.push_back(derived[i]);
    P.blocks.push_back(std::move(b));
  }
  if (!centre.empty()) {
    Block b;
    b.name = "k";
    b.central = true;
    b.offset = static_cast<int>(P.h_basis.size());
    b.size = static_cast<int>(centre.size());
    for (auto& v : centre) P.h_basis.push_back(std::move(v));
    P.blocks.push_back(std::move(b));
  }
  P.block_of.assign(h, -1);
  for (size_t bi = 0; bi < P.blocks.size(); ++bi)
    for (int i = 0; i < P.blocks[bi].size; ++i) P.block_of[P.blocks[bi].offset + i] = bi;

  int m = P.mdim();

  // blocked structure constants by restriction
  auto extract = [&](const std::vector<RatVec>& xs, const std::vector<RatVec>& ys,
                     const std::vector<RatVec>& target, const char* who) {
    int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
    SparseTensor t({nx, ny, static_cast<int>(target.size())},
                   {Variance::Down, Variance::Down, Variance::Up});
    if (target.empty()) {
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
          RatVec br = L.bracket(xs[i], ys[j]);
          for (const auto& x : br)
            require(x.is_zero(), std::string(who) + ": bracket leaves the target subspace");
        }
      return t;
    }
    std::vector<RatVec> brs;
    brs.reserve(static_cast<size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) brs.push_back(L.bracket(xs[i], ys[j]));
    std::vector<RatVec> coords;
    try {
      coords = coordinates_in_basis(target, brs);
    } catch (const Error&) {
      fail(std::string(who) + ": bracket leaves the target subspace");
    }
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const RatVec& co = coords[static_cast<size_t>(i) * ny + j];
        for (size_t k = 0; k < co.size(); ++k)
          if (!co[k].is_zero()) t.set_at(make_index({i, j, static_cast<int>(k)}), co[k]);
      }
    return t;
  };

  P.f = extract(P.h_basis, P.h_basis, P.h_basis, "decompose: [h,h] in h");
  P.g = extract(P.h_basis, P.m_basis, P.m_basis, "decompose: [h,m] in m");
  P.w = extract(P.m_basis, P.m_basis, P.h_basis, "decompose: [m,m] in h");

  // f must be block diagonal in all three slots
  for (const auto& [idx, v] : P.f.entries()) {
    (void)v;
    int ba = P.block_of[idx[0]], bb = P.block_of[idx[1]], bc = P.block_of[idx[2]];
    require(ba == bb && bb == bc,
            "decompose: ideal split failed, f couples blocks at (" + P.h_label(idx[0]) + "," +
                P.h_label(idx[1]) + "," + P.h_label(idx[2]) + ")");
  }

  // restricted forms
  auto restrict_form = [&](const std::vector<RatVec>& xs) {
    int k = static_cast<int>(xs.size());
    SparseTensor t({k, k}, {Variance::Down, Variance::Down});
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rational s;
        for (const auto& [idx, v] : L.form.entries()) s += v * xs[i][idx[0]] * xs[j][idx[1]];
        t.set_at(make_index({i, j}), s);
      }
    return t;
  };
  P.kappa_h = restrict_form(P.h_basis);
  P.kappa_m = restrict_form(P.m_basis);
  // h and m must be orthogonal for the blocked forms to capture the parent form
  for (int i = 0; i < h; ++i)
    for (int p = 0; p < m; ++p) {
      Rational s;
      for (const auto& [idx, v] : L.form.entries()) s += v * P.h_basis[i][idx[0]] * P.m_basis[p][idx[1]];
      require(s.is_zero(), "decompose: h and m are not orthogonal under the invariant form");
    }
  // kappa_h must be block diagonal
  for (const auto& [idx, v] : P.kappa_h.entries()) {
    (void)v;
    require(P.block_of[idx[0]] == P.block_of[idx[1]],
            "decompose: restricted form couples distinct blocks of h");
  }

  auto invert = [&](const SparseTensor& t, const char* who) {
    int k = t.dims()[0];
    RatMat mm(k, k);
    for (const auto& [idx, v] : t.entries()) mm.at(idx[0], idx[1]) = v;
    RatMat inv;
    try {
      inv = mm.inverse();
    } catch (const Error&) {
      fail(std::string(who) + ": restricted form is degenerate");
    }
    SparseTensor out({k, k}, {Variance::Up, Variance::Up});
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) out.set_at(make_index({r, c}), inv.at(r, c));
    return out;
  };
  P.kappa_h_inv = h > 0 ? invert(P.kappa_h, "decompose: h form")
                        : SparseTensor({0, 0}, {Variance::Up, Variance::Up});
  P.kappa_m_inv = m > 0 ? invert(P.kappa_m, "decompose: m form")
                        : SparseTensor({0, 0}, {Variance::Up, Variance::Up});

  // block Casimir data: c via the f route, c_bar via the w route,
  // cross-checked against c_g - c.
  {
    SparseTensor fup = P.f_up();
    SparseTensor tf = einsum("amn,nmb->ab", {&fup, &P.f});
    SparseTensor wup = P.w_up();
    SparseTensor tw = m > 0 ? einsum("aqp,pqb->ab", {&wup, &P.w})
                            : SparseTensor({h, h}, {Variance::Down, Variance::Up});
    for (auto& b : P.blocks) {
      Rational c, cbar;
      bool c_set = false, cbar_set = false;
      for (int i = b.offset; i < b.offset + b.size; ++i) {
        Rational ci = tf.at(make_index({i, i}));
        Rational wi = tw.at(make_index({i, i}));
        if (!c_set) { c = ci; c_set = true; }
        else require(ci == c, "decompose: block Casimir not constant on block " + b.name);
        if (!cbar_set) { cbar = wi; cbar_set = true; }
        else require(wi == cbar,
                     "decompose: complementary Casimir not constant on block " + b.name);
      }
      if (m == 0) cbar = P.cg() - c;  // no m side: fixed by the defining relation
      require(c + cbar == P.cg(), "decompose: block Casimir data inconsistent on block " + b.name +
                                      " (c + c_bar != c_g)");
      if (b.central) require(c.is_zero(), "decompose: central block has nonzero Casimir");
      b.casimir = c;
      b.casimir_bar = cbar;
    }
    // off-diagonal and cross-block entries of both contractions must vanish
    for (const auto& [idx, v] : tf.entries()) {
      (void)v;
      require(idx[0] == idx[1], "decompose: f-contraction not diagonal");
    }
    for (const auto& [idx, v] : tw.entries()) {
      (void)v;
      require(idx[0] == idx[1], "decompose: w-contraction not diagonal at (" +
                                    P.h_label(idx[0]) + "," + P.h_label(idx[1]) + ")");
    }
  }

  Report rep = verify_pair_identities(P);
  for (const auto& c : rep.checks)
    require(c.pass, "decompose: identity suite failed at " + c.id +
                        (c.witness ? " witness " + *c.witness : ""));
  return P;
}

namespace {
std::string tensor_witness(const SparseTensor& t) {
  if (t.is_zero()) return "";
  const auto& [idx, v] = *t.entries().begin();
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < t.rank(); ++i) os << (i ? "," : "") << int(idx[i]);
  os << ") -> " << v;
  return os.str();
}
}  // namespace

Report verify_pair_identities(const SymmetricPair& P) {
  Report rep;
  rep.suite = "pair-identities";
  int m = P.mdim();

  auto check_zero = [&](const std::string& id, const std::string& rule, const SparseTensor& t) {
    rep.add(id, rule, t.is_zero(), tensor_witness(t));
  };

  check_zero("f-antisymmetry", "f_{ab}^c + f_{ba}^c = 0", P.f + P.f.permuted({1, 0, 2}));
  if (m > 0)
    check_zero("w-antisymmetry", "w_{pq}^a + w_{qp}^a = 0", P.w + P.w.permuted({1, 0, 2}));

  // homogeneous Jacobi for f
  {
    SparseTensor base = einsum("abn,cnm->abcm", {&P.f, &P.f});
    check_zero("f-jacobi", "cyclic f f sum vanishes", cyclic_sum(base, {0, 1, 2}));
  }

  if (m > 0) {
    // mixed Jacobi: f_{ab}^n g_{np}^s = g_{bp}^q g_{aq}^s - g_{ap}^q g_{bq}^s
    SparseTensor lhs = einsum("abn,nps->abps", {&P.f, &P.g});
    SparseTensor r1 = einsum("bpq,aqs->abps", {&P.g, &P.g});
    SparseTensor r2 = einsum("apq,bqs->abps", {&P.g, &P.g});
    check_zero("hhm-jacobi", "[h,[h,m]] mixed Jacobi", lhs - (r1 - r2));

    // mixed Jacobi: w_{pq}^b f_{ab}^n + g_{ap}^r w_{qr}^n - g_{aq}^r w_{pr}^n = 0
    SparseTensor t1 = einsum("pqb,abn->apqn", {&P.w, &P.f});
    SparseTensor t2 = einsum("apr,qrn->apqn", {&P.g, &P.w});
    SparseTensor t3 = einsum("aqr,prn->apqn", {&P.g, &P.w});
    check_zero("hmm-jacobi", "[h,[m,m]] mixed Jacobi", t1 + t2 - t3);

    // cyclic w g identity over (p,q,r)
    SparseTensor base = einsum("pqa,ars->pqrs", {&P.w, &P.g});
    check_zero("mmm-jacobi", "cyclic w g sum vanishes", cyclic_sum(base, {0, 1, 2}));

    // cross-block g w identity
    {
      SparseTensor t = einsum("apr,qrb->apqb", {&P.g, &P.w});
      SparseTensor diff = t - t.permuted({0, 2, 1, 3});
      bool ok = true;
      std::string wit;
      for (const auto& [idx, v] : diff.entries()) {
        (void)v;
        if (P.block_of[idx[0]] != P.block_of[idx[3]]) {
          ok = false;
          wit = tensor_witness(diff);
          break;
        }
      }
      rep.add("gw-cross-block", "antisymmetrized g w vanishes across distinct blocks", ok, wit);
    }
  }

  // contracted Casimir identities per block (f route and w route)
  {
    SparseTensor fup = P.f_up();
    SparseTensor tf = einsum("amn,nmb->ab", {&fup, &P.f});
    SparseTensor expect({P.hdim(), P.hdim()}, {Variance::Down, Variance::Up});
    for (int i = 0; i < P.hdim(); ++i)
      expect.set_at(make_index({i, i}), P.blocks[P.block_of[i]].casimir);
    check_zero("f-casimir", "f-contraction equals the block Casimir times identity",
               tf - expect);
  }
  if (m > 0) {
    SparseTensor wup = P.w_up();
    SparseTensor tw = einsum("aqp,pqb->ab", {&wup, &P.w});
    SparseTensor expect({P.hdim(), P.hdim()}, {Variance::Down, Variance::Up});
    for (int i = 0; i < P.hdim(); ++i)
      expect.set_at(make_index({i, i}), P.blocks[P.block_of[i]].casimir_bar);
    check_zero("w-casimir",
               "w-contraction equals the complementary Casimir times identity, and vanishes "
               "across blocks",
               tw - expect);

    // half-Casimir identity for the m side
    SparseTensor gup = P.g_up();
    SparseTensor tg = einsum("par,arq->pq", {&gup, &P.g});
    SparseTensor expect2({m, m}, {Variance::Down, Variance::Up});
    Rational half_cg = P.cg() / Rational(2);
    for (int p = 0; p < m; ++p) expect2.set_at(make_index({p, p}), half_cg);
    check_zero("g-half-casimir", "g-contraction equals half the adjoint Casimir times identity",
               tg - expect2);
  }

  // c + c_bar = c_g and positivity of c_bar off-centre for proper pairs
  {
    bool ok = true;
    std::string wit;
    for (const auto& b : P.blocks) {
      if (b.casimir + b.casimir_bar != P.cg()) { ok = false; wit = "block " + b.name; break; }
      if (b.central && !b.casimir.is_zero()) { ok = false; wit = "central block"; break; }
    }
    rep.add("casimir-split", "block Casimir plus complement equals the adjoint Casimir", ok, wit);
    if (m > 0) {
      bool pos = true;
      std::string pwit;
      for (const auto& b : P.blocks)
        if (!b.central && (b.casimir_bar.is_zero() || b.casimir_bar.is_negative())) {
          pos = false;
          pwit = "block " + b.name;
        }
      rep.add("cbar-positive", "complementary Casimir is positive on non-central blocks", pos,
              pwit);
    }
  }
  return rep;
}

SparseTensor cocommutator(const LieAlgebra& L, int a) {
  require(a >= 0 && a < L.dim(), "cocommutator: index out of range");
  SparseTensor up = L.alpha_raised();  // up[a, l, k]
  SparseTensor slice_a = slice(up, 0, a);  // (l, k) both Up
  // coefficient of x_k (x) x_l: T[k, l] = alpha_a^{l k}
  return slice_a.permuted({1, 0});
}

SparseTensor bi_ideal_tau(const SymmetricPair& P, int p) {
  require(!P.identity_theta(),
          "bi_ideal_tau: identity involution has no m-side coideal map (use the even-level "
          "construction instead)");
  require(p >= 0 && p < P.mdim(), "bi_ideal_tau: index out of range");
  // [Y_p (x) 1, Omega_h]: T[s, alpha] = kappa^{beta alpha} [Y_p, X_beta]-coefficient
  SparseTensor gup = P.g_up();         // gup[p, alpha, s] for [X_alpha, Y_p]
  SparseTensor sl = slice(gup, 0, p);  // (alpha, s)
  return sl.permuted({1, 0}).scaled(Rational(-1));
}

}  // namespace ty
