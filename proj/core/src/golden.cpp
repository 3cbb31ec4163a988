#include "ty/golden.hpp"

#include <sstream>

#include "ty/coeffs.hpp"
#include "ty/error.hpp"
#include "ty/fixtures.hpp"
#include "ty/loop.hpp"

namespace ty {

namespace {

struct SymTerm {
  Rational coeff;
  std::vector<int> idx;
};

// sum of coeff * symmetrized unit tensors over the listed slots
SparseTensor sym_target(const std::vector<int>& dims, const std::vector<SymTerm>& terms,
                        const std::vector<int>& sym_slots) {
  std::vector<Variance> var(dims.size(), Variance::Up);
  SparseTensor acc(dims, var);
  for (const auto& t : terms) {
    Index ix{};
    for (size_t i = 0; i < t.idx.size(); ++i) ix[i] = static_cast<uint8_t>(t.idx[i]);
    acc.add_at(ix, t.coeff);
  }
  return symmetric_accumulation(acc, sym_slots);
}

// Displayed generators of the reference tables over the Chevalley-basis
// algebra. The tables take both non-simple root vectors from the positive
// bracket order, e3 = [e1,e2] and f3 = [f1,f2], while the basis pins
// f3 = [f2,f1]; the translation therefore flips the sign of f3. The
// current-algebra limit of the displayed level-1 relations fixes this.
struct DisplayBasis {
  const LieAlgebra* L;
  int index(const std::string& s) const { return L->label_index(s); }
  Rational sign(const std::string& s) const {
    return s == "f3" ? Rational(-1) : Rational(1);
  }
};

struct DispTerm {
  Rational coeff;
  std::vector<const char*> labels;
};

SparseTensor display_target(const DisplayBasis& D, int rank,
                            const std::vector<DispTerm>& terms,
                            const std::vector<int>& sym_slots) {
  std::vector<int> dims(rank, D.L->dim());
  std::vector<SymTerm> out;
  for (const auto& t : terms) {
    SymTerm s;
    s.coeff = t.coeff;
    for (const char* lab : t.labels) {
      s.coeff *= D.sign(lab);
      s.idx.push_back(D.index(lab));
    }
    out.push_back(std::move(s));
  }
  return sym_target(dims, out, sym_slots);
}

std::string tensor_witness(const SparseTensor& t) {
  if (t.is_zero()) return "";
  const auto& [idx, v] = *t.entries().begin();
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < t.rank(); ++i) os << (i ? "," : "") << int(idx[i]);
  os << ") -> " << v;
  return os.str();
}

// displayed generator of a twisted algebra: a signed element of the
// adapted m-basis (level 1) or h-basis (level 0)
struct Dict {
  const SymmetricPair* P;
  // m-side generators by display name
  std::map<std::string, std::pair<int, Rational>> level1;
  // h-side generators by display name
  std::map<std::string, std::pair<int, Rational>> level0;

  LoopElement level0_current(const std::string& name) const {
    auto [i, c] = level0.at(name);
    return loop_term(i, 0, c);
  }
  LoopElement level1_current(const std::string& name) const {
    auto [i, c] = level1.at(name);
    return loop_term(P->hdim() + i, 1, c);
  }
};

Dict so3_dictionary(const SymmetricPair& P) {
  Dict d;
  d.P = &P;
  d.level0["h"] = {P.h_index_of("h1+h2"), Rational(1)};
  d.level0["e"] = {P.h_index_of("e1-e2"), Rational(1)};
  d.level0["f"] = {P.h_index_of("f1-f2"), Rational(1)};
  d.level1["H"] = {P.m_index_of("h1-h2"), Rational(1)};
  d.level1["E"] = {P.m_index_of("e1+e2"), Rational(1)};
  d.level1["F"] = {P.m_index_of("f1+f2"), Rational(1)};
  d.level1["E2"] = {P.m_index_of("e3"), Rational(1)};
  d.level1["F2"] = {P.m_index_of("f3"), Rational(-1)};
  return d;
}

Dict gl2_dictionary(const SymmetricPair& P) {
  Dict d;
  d.P = &P;
  d.level0["h"] = {P.h_index_of("h1"), Rational(1)};
  d.level0["e"] = {P.h_index_of("e1"), Rational(1)};
  d.level0["f"] = {P.h_index_of("f1"), Rational(1)};
  d.level0["k"] = {P.h_index_of("h1+2*h2"), Rational(1)};
  d.level1["E2"] = {P.m_index_of("e2"), Rational(1)};
  d.level1["F2"] = {P.m_index_of("f2"), Rational(1)};
  d.level1["E3"] = {P.m_index_of("e3"), Rational(1)};
  d.level1["F3"] = {P.m_index_of("f3"), Rational(-1)};
  return d;
}

// check one level-1 Lie relation [a, b] = sum of signed level-1 generators
bool check_current_relation(const Dict& d, const LoopCtx& ctx, const std::string& level0_name,
                            const std::string& level1_name,
                            const std::vector<std::pair<Rational, std::string>>& rhs) {
  LoopElement lhs =
      loop_bracket(d.level0_current(level0_name), d.level1_current(level1_name), ctx);
  LoopElement want;
  for (const auto& [c, name] : rhs) want += d.level1_current(name).scaled(c);
  return lhs == want;
}

// coefficient matrix of a combination of [B_r, B_s], antisymmetrized
RatMat bracket_matrix(int m) { return RatMat(m, m); }

void add_bracket(RatMat& M, int r, int s, const Rational& c) {
  M.at(r, s) += c;
  M.at(s, r) -= c;
}

// level-2 closure left-hand side of the generic relation at (p, q)
RatMat generic_level2_lhs(const SymmetricPair& P, int p, int q) {
  int m = P.mdim();
  RatMat M = bracket_matrix(m);
  add_bracket(M, p, q, Rational(1));
  SparseTensor wup = P.w_up();
  for (int al = 0; al < P.hdim(); ++al) {
    Rational wpq = P.w.at(make_index({p, q, al}));
    if (wpq.is_zero()) continue;
    Rational pref = wpq / P.blocks[P.block_of[al]].casimir_bar;
    for (const auto& [t, v] : wup.entries())
      if (t[0] == al) add_bracket(M, t[1], t[2], pref * v);
  }
  return M;
}

}  // namespace

Report sl3_golden_suite() {
  Report rep;
  rep.suite = "sl3-golden";

  LieAlgebra L = sl3_chevalley();
  auto ix = [&](const char* s) { return L.label_index(s); };

  rep.add("trace-casimir", "adjoint Casimir eigenvalue of the trace form is 6",
          L.casimir_adjoint == Rational(6));

  auto [beta, gamma] = yangian_closure_coeffs(L);
  (void)gamma;

  DisplayBasis DB{&L};
  {
    // [J(h1), J(h2)] = 3/4 hbar^2 ({e1,e2,f3} + {e3,f1,f2}):
    // the triple (h1, e2, f2) isolates exactly this bracket.
    SparseTensor b = slice(slice(slice(beta, 0, ix("h1")), 0, ix("e2")), 0, ix("f2"));
    SparseTensor lhs = symmetric_accumulation(b, {0, 1, 2}).scaled(Rational(1, 4));
    SparseTensor want = display_target(DB, 3,
                                       {{Rational(3, 4), {"e1", "e2", "f3"}},
                                        {Rational(3, 4), {"e3", "f1", "f2"}}},
                                       {0, 1, 2});
    SparseTensor d = lhs - want;
    rep.add("untwisted-level2", "level-2 closure coefficient 3/4 on the Cartan bracket",
            d.is_zero(), tensor_witness(d));
  }

  // ---- orthogonal pair -----------------------------------------------
  SymmetricPair Pso = fixtures::pair("sl3-so3");
  Dict dso = so3_dictionary(Pso);
  {
    LoopCtx ctx(Pso);
    bool ok = check_current_relation(dso, ctx, "e", "E", {{Rational(2), "E2"}}) &&
              check_current_relation(dso, ctx, "f", "F", {{Rational(2), "F2"}}) &&
              check_current_relation(dso, ctx, "e", "F", {{Rational(1), "H"}}) &&
              check_current_relation(dso, ctx, "e", "F2", {{Rational(1), "F"}}) &&
              check_current_relation(dso, ctx, "f", "E2", {{Rational(1), "E"}}) &&
              check_current_relation(dso, ctx, "h", "E2", {{Rational(2), "E2"}}) &&
              check_current_relation(dso, ctx, "h", "F2", {{Rational(-2), "F2"}}) &&
              check_current_relation(dso, ctx, "h", "E", {{Rational(1), "E"}}) &&
              check_current_relation(dso, ctx, "h", "F", {{Rational(-1), "F"}}) &&
              check_current_relation(dso, ctx, "e", "E2", {}) &&
              check_current_relation(dso, ctx, "f", "F2", {});
    rep.add("so3-dictionary", "displayed generators match the adapted basis in the current "
                              "algebra (including the sign of F2)",
            ok);
  }

  int E = dso.level1.at("E").first, F = dso.level1.at("F").first;
  int H1 = dso.level1.at("H").first;
  int E2 = dso.level1.at("E2").first, F2m = dso.level1.at("F2").first;
  int sh = dso.level0.at("h").first, se = dso.level0.at("e").first,
      sf = dso.level0.at("f").first;

  SparseTensor lam_so = twisted_closure_lambda(Pso);
  SparseTensor ups_so = twisted_closure_upsilon(Pso);

  {
    // level-2: generic combination at (E, F) is proportional to the
    // displayed [E,F] + [E2,F2]; the displayed right-hand side is
    // 1/4 {h,h,h} - 3/4 {e,f,h}
    RatMat gen = generic_level2_lhs(Pso, E, F);
    RatMat disp = bracket_matrix(Pso.mdim());
    add_bracket(disp, E, F, Rational(1));
    add_bracket(disp, E2, F2m, Rational(-1));  // F2 carries the sign -f3
    Rational t;
    bool prop = true;
    for (int r = 0; r < Pso.mdim() && prop; ++r)
      for (int s = 0; s < Pso.mdim() && prop; ++s) {
        if (disp.at(r, s).is_zero()) {
          if (!gen.at(r, s).is_zero()) prop = false;
        } else {
          Rational ratio = gen.at(r, s) / disp.at(r, s);
          if (t.is_zero()) t = ratio;
          else if (ratio != t) prop = false;
        }
      }
    SparseTensor rhs = symmetric_accumulation(slice(slice(lam_so, 0, E), 0, F), {0, 1, 2});
    bool ok = prop && !t.is_zero();
    std::string wit;
    if (ok) {
      SparseTensor want = sym_target({3, 3, 3},
                                     {{Rational(1, 4), {sh, sh, sh}},
                                      {Rational(-3, 4), {se, sf, sh}}},
                                     {0, 1, 2})
                              .scaled(t);
      SparseTensor d = rhs - want;
      ok = d.is_zero();
      wit = tensor_witness(d);
    } else {
      wit = "left-hand sides not proportional";
    }
    rep.add("so3-level2", "orthogonal level-2 closure coefficients 1/4 and -3", ok, wit);
  }

  {
    // level-3 at (E, F, H): the generic correction vanishes, so the
    // displayed [[E,F],H] = 3/2({E2,f,f} + {F2,e,e}) + 15/4({E,f,h} - {F,e,h})
    bool corr_zero = true;
    for (int al = 0; al < Pso.hdim(); ++al) {
      Rational wpq = Pso.w.at(make_index({E, F, al}));
      if (wpq.is_zero()) continue;
      for (int s = 0; s < Pso.mdim(); ++s)
        if (!Pso.g.at(make_index({al, H1, s})).is_zero()) corr_zero = false;
    }
    SparseTensor u = symmetric_accumulation(slice(slice(slice(ups_so, 0, E), 0, F), 0, H1), {0, 1});
    SparseTensor want = sym_target({3, 3, 5},
                                   {{Rational(3, 2), {sf, sf, E2}},
                                    {Rational(-3, 2), {se, se, F2m}},
                                    {Rational(15, 4), {sf, sh, E}},
                                    {Rational(-15, 4), {se, sh, F}}},
                                   {0, 1});
    SparseTensor d = u - want;
    rep.add("so3-level3", "orthogonal level-3 closure coefficients 3/2 and 15/4",
            corr_zero && d.is_zero(), tensor_witness(d));
  }

  // ---- general linear pair -------------------------------------------
  SymmetricPair Pgl = fixtures::pair("sl3-gl2");
  Dict dgl = gl2_dictionary(Pgl);
  {
    LoopCtx ctx(Pgl);
    bool ok = check_current_relation(dgl, ctx, "e", "E2", {{Rational(1), "E3"}}) &&
              check_current_relation(dgl, ctx, "f", "F2", {{Rational(1), "F3"}}) &&
              check_current_relation(dgl, ctx, "e", "F2", {}) &&
              check_current_relation(dgl, ctx, "f", "E2", {}) &&
              check_current_relation(dgl, ctx, "e", "F3", {{Rational(1), "F2"}}) &&
              check_current_relation(dgl, ctx, "f", "E3", {{Rational(1), "E2"}}) &&
              check_current_relation(dgl, ctx, "e", "E3", {}) &&
              check_current_relation(dgl, ctx, "f", "F3", {}) &&
              check_current_relation(dgl, ctx, "h", "E2", {{Rational(-1), "E2"}}) &&
              check_current_relation(dgl, ctx, "h", "F2", {{Rational(1), "F2"}}) &&
              check_current_relation(dgl, ctx, "h", "E3", {{Rational(1), "E3"}}) &&
              check_current_relation(dgl, ctx, "h", "F3", {{Rational(-1), "F3"}}) &&
              check_current_relation(dgl, ctx, "k", "E2", {{Rational(3), "E2"}}) &&
              check_current_relation(dgl, ctx, "k", "E3", {{Rational(3), "E3"}}) &&
              check_current_relation(dgl, ctx, "k", "F2", {{Rational(-3), "F2"}}) &&
              check_current_relation(dgl, ctx, "k", "F3", {{Rational(-3), "F3"}});
    rep.add("gl2-dictionary", "displayed generators match the adapted basis in the current "
                              "algebra (including the sign of F3)",
            ok);
  }

  int gE2 = dgl.level1.at("E2").first, gF2 = dgl.level1.at("F2").first;
  int gE3 = dgl.level1.at("E3").first, gF3 = dgl.level1.at("F3").first;
  int ge = dgl.level0.at("e").first, gf = dgl.level0.at("f").first,
      gk = dgl.level0.at("k").first;

  SparseTensor lam_gl = twisted_closure_lambda(Pgl);
  SparseTensor ups_gl = twisted_closure_upsilon(Pgl);

  {
    bool ok = true;
    std::string wit;
    // both displayed level-2 relations have a vanishing right-hand side
    for (auto [p, q] : {std::pair{gE2, gE3}, std::pair{gF2, gF3}}) {
      for (int al = 0; al < Pgl.hdim(); ++al)
        if (!Pgl.w.at(make_index({p, q, al})).is_zero()) ok = false;  // no correction term
      SparseTensor r = symmetric_accumulation(slice(slice(lam_gl, 0, p), 0, q), {0, 1, 2});
      if (!r.is_zero()) {
        ok = false;
        wit = tensor_witness(r);
      }
    }
    rep.add("gl2-level2", "general-linear level-2 closure right-hand sides vanish", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    struct Case {
      int p, q, r;       // generic triple
      Rational lhs_sign; // displayed bracket in terms of the generic one
      int single;        // displayed level-1 generator on the right
      Rational single_sign;
      int x1, x2;        // displayed level-0 pair
    };
    // [E2,[E2,F3]] = -2 hbar^2 {E2, f, k}; F3 = -B(f3) makes the generic
    // triple (e2, f3, e2) carry the opposite overall sign twice over.
    // [F2,[E3,F2]] = -2 hbar^2 {F2, e, k} (with e; the displayed partner
    // follows from the Chevalley symmetry e <-> f).
    std::vector<Case> cases = {
        {gE2, gF3, gE2, Rational(1), gE2, Rational(1), gf, gk},
        {gF2, gE3, gF2, Rational(1), gF2, Rational(1), ge, gk},
    };
    for (const auto& c : cases) {
      bool corr_zero = true;
      for (int al = 0; al < Pgl.hdim(); ++al) {
        Rational wpq = Pgl.w.at(make_index({c.p, c.q, al}));
        if (wpq.is_zero()) continue;
        for (int s = 0; s < Pgl.mdim(); ++s)
          if (!Pgl.g.at(make_index({al, c.r, s})).is_zero()) corr_zero = false;
      }
      SparseTensor u =
          symmetric_accumulation(slice(slice(slice(ups_gl, 0, c.p), 0, c.q), 0, c.r), {0, 1});
      SparseTensor want = sym_target(
          {4, 4, 4}, {{Rational(-2) * c.single_sign, {c.x1, c.x2, c.single}}}, {0, 1});
      SparseTensor d = u.scaled(c.lhs_sign) - want;
      if (!corr_zero || !d.is_zero()) {
        ok = false;
        wit = tensor_witness(d);
      }
    }
    rep.add("gl2-level3", "general-linear level-3 closure coefficient -2", ok, wit);
  }

  // ---- even pair (theta = id) ----------------------------------------
  EvenCoeffs Ec = even_closure_coeffs(L);
  {
    int h1 = ix("h1"), e2 = ix("e2"), f2 = ix("f2");
    auto slice3 = [&](const SparseTensor& t) {
      return slice(slice(slice(t, 0, h1), 0, e2), 0, f2);
    };
    // [G(h1), G(h2)] is the closure combination at (h1, e2, f2)
    SparseTensor psi_c = symmetric_accumulation(slice3(Ec.Psi), {0, 1});
    SparseTensor phi_c = symmetric_accumulation(slice3(Ec.Phi), {0, 1, 2});
    SparseTensor phibar_c = symmetric_accumulation(slice3(Ec.PhiBar), {0, 1, 2, 3, 4});

    SparseTensor psi_want = display_target(
        DB, 3,
        {
            {Rational(1), {"e1", "e2", "f3"}},
            {Rational(1), {"f1", "f2", "e3"}},
            {Rational(1), {"f3", "e2", "e1"}},
            {Rational(1), {"f3", "e1", "e2"}},
            {Rational(1), {"e3", "f2", "f1"}},
            {Rational(1), {"e3", "f1", "f2"}},
            {Rational(1, 2), {"h1", "f2", "e2"}},
            {Rational(-1, 2), {"h1", "e2", "f2"}},
            {Rational(-1, 2), {"h2", "f1", "e1"}},
            {Rational(1, 2), {"h2", "e1", "f1"}},
            {Rational(1, 4), {"h1", "e1", "f1"}},
            {Rational(-1, 4), {"h1", "f1", "e1"}},
            {Rational(-1, 4), {"h2", "e2", "f2"}},
            {Rational(1, 4), {"h2", "f2", "e2"}},
            {Rational(1, 4), {"h1", "e3", "f3"}},
            {Rational(-1, 4), {"h2", "e3", "f3"}},
            {Rational(-1, 4), {"h1", "f3", "e3"}},
            {Rational(1, 4), {"h2", "f3", "e3"}},
        },
        {0, 1});
    SparseTensor d1 = psi_c - psi_want;
    rep.add("even-level4-quadratic",
            "even level-4 closure coefficients 1, 1/2, 1/4 on the mixed terms", d1.is_zero(),
            tensor_witness(d1));

    SparseTensor phi_want = display_target(DB, 3,
                                           {{Rational(-1, 2), {"e1", "e2", "f3"}},
                                            {Rational(-1, 2), {"f1", "f2", "e3"}}},
                                           {0, 1, 2});
    SparseTensor d2 = phi_c - phi_want;
    rep.add("even-level4-cubic", "even level-4 closure coefficient -1/2 on the cubic terms",
            d2.is_zero(), tensor_witness(d2));

    SparseTensor phibar_want = display_target(
        DB, 5,
        {
            {Rational(-1, 4), {"e1", "e1", "e2", "f1", "f3"}},
            {Rational(-1, 4), {"e1", "e2", "e2", "f2", "f3"}},
            {Rational(1, 4), {"e1", "e2", "e3", "f3", "f3"}},
            {Rational(-1, 4), {"f1", "f1", "f2", "e1", "e3"}},
            {Rational(-1, 4), {"f1", "f2", "f2", "e2", "e3"}},
            {Rational(1, 4), {"f1", "f2", "f3", "e3", "e3"}},
            {Rational(-1, 12), {"e1", "e2", "h1", "h1", "f3"}},
            {Rational(-1, 12), {"e1", "e2", "h1", "h2", "f3"}},
            {Rational(-1, 12), {"e1", "e2", "h2", "h2", "f3"}},
            {Rational(-1, 12), {"f1", "f2", "h1", "h1", "e3"}},
            {Rational(-1, 12), {"f1", "f2", "h1", "h2", "e3"}},
            {Rational(-1, 12), {"f1", "f2", "h2", "h2", "e3"}},
        },
        {0, 1, 2, 3, 4});
    SparseTensor d3 = phibar_c - phibar_want;
    rep.add("even-level4-quintic",
            "even level-4 closure coefficients -1/4 and -1/12 on the quintic terms",
            d3.is_zero(), tensor_witness(d3));
  }

  rep.merge(remark_equivalence_checks(L, Ec));
  return rep;
}

Report remark_equivalence_checks(const LieAlgebra& L, const EvenCoeffs& E) {
  Report rep;
  rep.suite = "sl3-remark";
  auto [beta, gamma] = yangian_closure_coeffs(L);
  (void)gamma;

  {
    SparseTensor lhs = symmetric_accumulation(E.Psi, {3, 4});
    SparseTensor rhs = symmetric_accumulation(simplified_psi_sl3(L, beta, E.phi_t), {3, 4});
    SparseTensor d = lhs - rhs;
    rep.add("remark-psi",
            "general and simplified quadratic coefficients agree after symmetrization",
            d.is_zero(), tensor_witness(d));
  }
  {
    SparseTensor lhs = symmetric_accumulation(E.Phi, {3, 4, 5});
    SparseTensor rhs = symmetric_accumulation(simplified_phi_sl3(beta), {3, 4, 5});
    SparseTensor d = lhs - rhs;
    rep.add("remark-phi",
            "general and simplified cubic coefficients agree after symmetrization",
            d.is_zero(), tensor_witness(d));
  }
  {
    SparseTensor lhs = symmetric_accumulation(E.PhiBar, {3, 4, 5, 6, 7});
    SparseTensor rhs = symmetric_accumulation(simplified_phibar_sl3(L, beta), {3, 4, 5, 6, 7});
    SparseTensor d = lhs - rhs;
    rep.add("remark-phibar",
            "general and simplified quintic coefficients agree after symmetrization",
            d.is_zero(), tensor_witness(d));
  }
  return rep;
}

Report sl3_remark_equivalence() {
  LieAlgebra L = sl3_chevalley();
  return remark_equivalence_checks(L, even_closure_coeffs(L));
}

}  // namespace ty
