#include <vecvar/json_io.hpp>

namespace vecvar {

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw DomainError("expected a rational string");
  return parse_rat(j.get<std::string>());
}

Json vector_to_json(const RatVector& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals");
  RatVector v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of matrix rows");
  std::vector<RatVector> rows;
  for (const Json& r : j) rows.push_back(vector_from_json(r));
  return RatMatrix::from_rows(rows);
}

namespace {

std::string atom_kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::Tensor: return "tensor";
    case AtomKind::Sym: return "sym";
    case AtomKind::Ext: return "ext";
    case AtomKind::Const: return "const";
  }
  throw DomainError("unknown atom kind");
}

AtomKind atom_kind_from_name(const std::string& s) {
  if (s == "tensor") return AtomKind::Tensor;
  if (s == "sym") return AtomKind::Sym;
  if (s == "ext") return AtomKind::Ext;
  if (s == "const") return AtomKind::Const;
  throw DomainError("unknown atom kind '" + s + "'");
}

}  // namespace

Json space_to_json(const SpaceDescriptor& s) {
  Json atoms = Json::array();
  for (const Atom& a : s.atoms)
    atoms.push_back(Json{{"kind", atom_kind_name(a.kind)}, {"d", a.d}});
  return Json{{"n", s.n}, {"atoms", atoms}};
}

SpaceDescriptor space_from_json(const Json& j) {
  SpaceDescriptor s;
  s.n = j.at("n").get<int>();
  for (const Json& a : j.at("atoms"))
    s.atoms.push_back(
        {atom_kind_from_name(a.at("kind").get<std::string>()), a.at("d").get<int>()});
  return s;
}

Json point_to_json(const TensorPoint& p) {
  return Json{{"space", space_to_json(p.space)}, {"coords", vector_to_json(p.coords)}};
}

TensorPoint point_from_json(const Json& j) {
  TensorPoint p{space_from_json(j.at("space")), vector_from_json(j.at("coords"))};
  if (static_cast<long>(p.coords.size()) != p.space.dimension())
    throw DomainError("coordinate count does not match the space dimension");
  return p;
}

Json functor_to_json(const PolynomialFunctor& p) {
  Json summands = Json::array();
  for (const auto& [lam, mult] : p.summands) {
    Json parts = Json::array();
    for (int x : lam.parts()) parts.push_back(x);
    summands.push_back(Json{{"partition", parts}, {"multiplicity", mult}});
  }
  Json out{{"constant_dim", p.constant_dim},
           {"summands", summands},
           {"pure", is_pure(p)}};
  if (auto d = degree(p))
    out["degree"] = *d;
  else
    out["degree"] = nullptr;
  return out;
}

PolynomialFunctor functor_from_json(const Json& j) {
  PolynomialFunctor p;
  p.constant_dim = j.at("constant_dim").get<long>();
  if (p.constant_dim < 0) throw DomainError("negative constant dimension");
  for (const Json& s : j.at("summands")) {
    std::vector<int> parts;
    for (const Json& x : s.at("partition")) parts.push_back(x.get<int>());
    p.add_summand(Partition(parts), s.at("multiplicity").get<long>());
  }
  return p;
}

Json omega_to_json(const OmegaPoint& w) {
  Json out{{"family", w.family.display_name()},
           {"phi", matrix_to_json(w.phi)},
           {"p0", point_to_json(w.p0)}};
  if (w.U_basis) out["U_basis"] = matrix_to_json(*w.U_basis);
  if (w.W_basis) out["W_basis"] = matrix_to_json(*w.W_basis);
  return out;
}

OmegaPoint omega_from_json(const Json& j) {
  VarietySpec family = VarietySpec::parse(j.at("family").get<std::string>());
  RatMatrix phi = matrix_from_json(j.at("phi"));
  TensorPoint p0 = point_from_json(j.at("p0"));
  std::optional<RatMatrix> U, W;
  if (j.contains("U_basis")) U = matrix_from_json(j.at("U_basis"));
  if (j.contains("W_basis")) W = matrix_from_json(j.at("W_basis"));
  // Re-canonicalizing validates every invariant and is the identity on
  // well-formed input.
  return canonicalize(family, phi, p0, U, W);
}

Json singularity_report_to_json(const SingularityReport& r) {
  return Json{{"point", point_to_json(r.point)},
              {"ambient_dim", r.ambient_dim},
              {"variety_dim", r.variety_dim},
              {"jacobian_rank", r.jacobian_rank},
              {"is_singular", r.is_singular}};
}

Json sing_locus_report_to_json(const SingLocusReport& r) {
  Json cx = Json::array();
  for (const auto& c : r.counterexamples)
    cx.push_back(Json{{"rank", c.rank},
                      {"seed", c.seed},
                      {"expected_singular", c.expected_singular},
                      {"got_singular", c.got_singular}});
  return Json{{"r", r.r},
              {"n", r.n},
              {"samples_per_rank", r.samples_per_rank},
              {"seed", r.seed},
              {"checked", r.checked},
              {"pass", r.pass},
              {"counterexamples", cx}};
}

Json fdc_report_to_json(const FdcReport& r) {
  Json branches = Json::array();
  for (long v : r.branch_values) branches.push_back(v);
  return Json{{"d", r.d},
              {"c", r.c},
              {"n0", r.branch_values[0]},
              {"n1", r.branch_values[1]},
              {"branch_values", branches},
              {"F", r.F}};
}

Json dichotomy_report_to_json(const DichotomyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"k", row.k},
                        {"n", row.n},
                        {"tangent_dim", row.tangent_dim},
                        {"variety_dim", row.variety_dim},
                        {"equal", row.equal}});
  return Json{{"d", r.profile.d},
              {"c", r.profile.c},
              {"dim_at_d", r.profile.dim_at_d},
              {"fdc", r.fdc},
              {"k_max", r.k_max},
              {"rows", rows},
              {"branch", r.branch},
              {"constant_gap", r.constant_gap},
              {"consistent_from_fdc", r.consistent_from_fdc}};
}

Json fiber_report_to_json(const FiberReport& r) {
  Json pre = Json::array();
  for (const auto& w : r.preimages_found) pre.push_back(omega_to_json(w));
  return Json{{"target", point_to_json(r.target)},
              {"preimages_found", pre},
              {"distinct", r.distinct},
              {"trials", r.trials},
              {"seed", r.seed}};
}

}  // namespace vecvar
