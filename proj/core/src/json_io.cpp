#include "ty/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "ty/error.hpp"

namespace ty {

Json tensor_to_json(const SparseTensor& t) {
  Json j;
  j["rank"] = t.rank();
  j["dims"] = t.dims();
  Json var = Json::array();
  for (Variance v : t.variance()) var.push_back(v == Variance::Up ? "up" : "down");
  j["variance"] = std::move(var);
  Json entries = Json::array();
  for (const auto& [idx, v] : t.entries()) {
    Json e;
    Json ix = Json::array();
    for (int i = 0; i < t.rank(); ++i) ix.push_back(int(idx[i]));
    e["idx"] = std::move(ix);
    e["num"] = v.numerator();
    e["den"] = v.denominator();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

SparseTensor tensor_from_json(const Json& j) {
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  require(j.at("rank").get<int>() == static_cast<int>(dims.size()),
          "tensor json: rank does not match dims");
  std::vector<Variance> var;
  for (const auto& v : j.at("variance")) {
    std::string s = v.get<std::string>();
    require(s == "up" || s == "down", "tensor json: bad variance entry");
    var.push_back(s == "up" ? Variance::Up : Variance::Down);
  }
  SparseTensor t(dims, var);
  for (const auto& e : j.at("entries")) {
    std::vector<int> raw = e.at("idx").get<std::vector<int>>();
    require(raw.size() == dims.size(), "tensor json: bad idx length");
    Index idx{};
    for (size_t i = 0; i < raw.size(); ++i) idx[i] = static_cast<uint8_t>(raw[i]);
    Rational v(e.at("num").get<std::string>(), e.at("den").get<std::string>());
    require(!v.is_zero(), "tensor json: explicit zero entry");
    t.set_at(idx, v);
  }
  return t;
}

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = r.numerator();
  j["den"] = r.denominator();
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["kind"] = "algebra";
  j["labels"] = L.labels;
  j["casimir_adjoint"] = rational_to_json(L.casimir_adjoint);
  j["structure"] = tensor_to_json(L.structure);
  j["form"] = tensor_to_json(L.form);
  j["form_inverse"] = tensor_to_json(L.form_inverse);
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  require(j.at("kind") == "algebra", "algebra json: wrong kind");
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  SparseTensor structure = tensor_from_json(j.at("structure"));
  SparseTensor form = tensor_from_json(j.at("form"));
  LieAlgebra L = build_lie_algebra(labels, structure, FormChoice::explicit_form(form));
  require(L.casimir_adjoint == rational_from_json(j.at("casimir_adjoint")),
          "algebra json: stored Casimir eigenvalue does not match");
  return L;
}

Json involution_to_json(const Involution& th) {
  Json j;
  j["kind"] = "involution";
  j["matrix"] = tensor_to_json(th.matrix);
  return j;
}

Involution involution_from_json(const Json& j) {
  require(j.at("kind") == "involution", "involution json: wrong kind");
  Involution th;
  th.matrix = tensor_from_json(j.at("matrix"));
  return th;
}

namespace {
Json vectors_to_json(const std::vector<RatVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.str());
    out.push_back(std::move(row));
  }
  return out;
}
}  // namespace

Json pair_to_json(const SymmetricPair& P) {
  Json j;
  j["kind"] = "pair";
  j["parent"] = algebra_to_json(P.parent);
  j["involution"] = tensor_to_json(P.theta.matrix);
  j["h_basis"] = vectors_to_json(P.h_basis);
  j["m_basis"] = vectors_to_json(P.m_basis);
  Json blocks = Json::array();
  for (const auto& b : P.blocks) {
    Json bj;
    bj["name"] = b.name;
    bj["central"] = b.central;
    bj["offset"] = b.offset;
    bj["size"] = b.size;
    bj["casimir"] = rational_to_json(b.casimir);
    bj["casimir_bar"] = rational_to_json(b.casimir_bar);
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  j["f"] = tensor_to_json(P.f);
  j["g"] = tensor_to_json(P.g);
  j["w"] = tensor_to_json(P.w);
  j["kappa_h"] = tensor_to_json(P.kappa_h);
  j["kappa_h_inv"] = tensor_to_json(P.kappa_h_inv);
  j["kappa_m"] = tensor_to_json(P.kappa_m);
  j["kappa_m_inv"] = tensor_to_json(P.kappa_m_inv);
  return j;
}

SymmetricPair pair_from_json(const Json& j) {
  require(j.at("kind") == "pair", "pair json: wrong kind");
  LieAlgebra L = algebra_from_json(j.at("parent"));
  Involution th;
  th.matrix = tensor_from_json(j.at("involution"));
  SymmetricPair P = decompose(L, th);
  require(tensor_from_json(j.at("f")) == P.f && tensor_from_json(j.at("g")) == P.g &&
              tensor_from_json(j.at("w")) == P.w,
          "pair json: embedded blocked constants do not match the decomposition");
  return P;
}

namespace {
struct NamedTensor {
  const char* name;
  const char* role;
  const std::optional<SparseTensor>* t;
};

std::vector<NamedTensor> bundle_slots(const CoeffBundle& b) {
  return {
      {"beta", "cubic coefficient of the untwisted level-2 closure relation", &b.beta},
      {"gamma", "cubic coefficient of the untwisted level-3 closure relation", &b.gamma},
      {"lambda", "symmetric-cube coefficient of the twisted level-2 closure relation",
       &b.lambda},
      {"upsilon", "mixed-cube coefficient of the twisted level-3 closure relation", &b.upsilon},
      {"h", "right-split quadratic coaction tail of the even twisted algebra", &b.h_t},
      {"hbar", "left-split quadratic coaction tail of the even twisted algebra", &b.hbar_t},
      {"phi", "symmetrized four-fold contraction part of the coaction tail", &b.phi_t},
      {"psi", "double-contraction part of the coaction tail", &b.psi_t},
      {"Psi", "quadratic-in-level-2 coefficient of the even level-4 closure relation", &b.Psi},
      {"Phi", "cubic coefficient of the even level-4 closure relation", &b.Phi},
      {"PhiBar", "quintic coefficient of the even level-4 closure relation", &b.PhiBar},
      {"W", "auxiliary pairing tensor of the even level-4 closure relation", &b.W},
  };
}
}  // namespace

Json bundle_to_json(const CoeffBundle& b) {
  Json j;
  j["kind"] = "coeff-bundle";
  Json manifest = Json::array();
  for (const auto& slot : bundle_slots(b)) {
    if (!slot.t->has_value()) continue;
    Json e;
    e["name"] = slot.name;
    e["role"] = slot.role;
    e["tensor"] = tensor_to_json(**slot.t);
    manifest.push_back(std::move(e));
  }
  j["tensors"] = std::move(manifest);
  if (b.counit_center) j["counit_center"] = rational_to_json(*b.counit_center);
  return j;
}

CoeffBundle bundle_from_json(const Json& j) {
  require(j.at("kind") == "coeff-bundle", "bundle json: wrong kind");
  CoeffBundle b;
  auto slots = bundle_slots(b);
  for (const auto& e : j.at("tensors")) {
    std::string name = e.at("name").get<std::string>();
    bool found = false;
    for (auto& slot : slots) {
      if (name == slot.name) {
        *const_cast<std::optional<SparseTensor>*>(slot.t) = tensor_from_json(e.at("tensor"));
        found = true;
        break;
      }
    }
    require(found, "bundle json: unknown tensor '" + name + "'");
  }
  if (j.contains("counit_center")) b.counit_center = rational_from_json(j.at("counit_center"));
  return b;
}

Json report_to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["check"] = c.id;
    cj["rule"] = c.rule;
    cj["status"] = c.pass ? "pass" : "fail";
    if (c.witness) cj["witness"] = *c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream os(path);
  require(os.good(), "cannot open '" + path + "' for writing");
  os << j.dump(2) << "\n";
  require(os.good(), "failed while writing '" + path + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  require(is.good(), "cannot open '" + path + "' for reading");
  Json j;
  is >> j;
  return j;
}

}  // namespace ty
