#include <vecvar/cli.hpp>

#include <vecvar/lineartype.hpp>
#include <vecvar/resolution.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace vecvar {

namespace {

Json read_json_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return Json::parse(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

TensorPoint read_point(const std::string& path) {
  return point_from_json(read_json_input(path));
}

// Functor arguments accept the text syntax inline, a JSON literal, or "-"
// for functor JSON on stdin.
PolynomialFunctor read_functor(const std::string& arg) {
  if (arg == "-") return functor_from_json(read_json_input("-"));
  for (char c : arg)
    if (!isspace(static_cast<unsigned char>(c)))
      return c == '{' ? functor_from_json(Json::parse(arg))
                      : PolynomialFunctor::parse(arg);
  return PolynomialFunctor::parse(arg);
}

void write_payload(const std::string& out_path, const Json& payload) {
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot open output file '" + out_path + "'");
  out << payload.dump(2) << "\n";
}

struct Pending {
  std::function<Json()> handler;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact calculator for polynomial-functor varieties"};
  app.require_subcommand(1);

  Pending pending;
  std::string out_path;
  app.add_option("--out", out_path, "write the payload JSON to this file");

  // lrcoef
  {
    auto* sub = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient");
    auto mu = std::make_shared<std::string>();
    auto nu = std::make_shared<std::string>();
    auto lam = std::make_shared<std::string>();
    sub->add_option("--mu", *mu, "partition, e.g. 2,1 (empty for ())");
    sub->add_option("--nu", *nu, "partition");
    sub->add_option("--lambda", *lam, "partition")->required();
    sub->callback([&pending, mu, nu, lam] {
      pending.handler = [=] {
        long c = lr_coefficient(Partition::parse(*mu), Partition::parse(*nu),
                                Partition::parse(*lam));
        return Json{{"coefficient", c}};
      };
    });
  }

  // schurdim
  {
    auto* sub = app.add_subcommand("schurdim", "dimension of a Schur functor");
    auto lam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto method = std::make_shared<std::string>("formula");
    sub->add_option("--lambda", *lam, "partition");
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--method", *method, "formula | tableaux")
        ->check(CLI::IsMember({"formula", "tableaux"}));
    sub->callback([&pending, lam, n, method] {
      pending.handler = [=] {
        Partition p = Partition::parse(*lam);
        long dim = *method == "tableaux" ? ssyt_count(p, *n) : schur_dimension(p, *n);
        return Json{{"dimension", dim}, {"method", *method}};
      };
    });
  }

  // dimpoly
  {
    auto* sub = app.add_subcommand("dimpoly", "dimension polynomial of a functor");
    auto f = std::make_shared<std::string>();
    sub->add_option("--functor", *f, "e.g. '0 + 1*[2] + 1*[1,1]'")->required();
    sub->callback([&pending, f] {
      pending.handler = [=] {
        PolynomialFunctor p = read_functor(*f);
        DimensionPolynomial poly = dimension_polynomial(p);
        Json out{{"coefficients", vector_to_json(poly.coefficients())}};
        if (auto d = degree(p))
          out["degree"] = *d;
        else
          out["degree"] = nullptr;
        return out;
      };
    });
  }

  // shift
  {
    auto* sub = app.add_subcommand("shift", "shift a functor by K^u");
    auto f = std::make_shared<std::string>();
    auto u = std::make_shared<int>(0);
    sub->add_option("--functor", *f, "functor literal")->required();
    sub->add_option("--u", *u, "shift dimension")->required();
    sub->callback([&pending, f, u] {
      pending.handler = [=] {
        return functor_to_json(shift(read_functor(*f), *u));
      };
    });
  }

  // precedes
  {
    auto* sub = app.add_subcommand("precedes", "well-founded order on functors");
    auto q = std::make_shared<std::string>();
    auto p = std::make_shared<std::string>();
    sub->add_option("--q", *q, "functor literal")->required();
    sub->add_option("--p", *p, "functor literal")->required();
    sub->callback([&pending, q, p] {
      pending.handler = [=] {
        return Json{{"precedes", precedes(read_functor(*q), read_functor(*p))}};
      };
    });
  }

  // minsub
  {
    auto* sub = app.add_subcommand("minsub", "minimal defining subspace U_p");
    auto point = std::make_shared<std::string>();
    auto d = std::make_shared<int>(-1);
    sub->add_option("--point", *point, "point JSON file, or - for stdin")->required();
    sub->add_option("--d", *d, "also report membership in the d-th subspace variety");
    sub->callback([&pending, point, d] {
      pending.handler = [=] {
        TensorPoint p = read_point(*point);
        std::vector<RatVector> basis = minimal_subspace(p);
        Json rows = Json::array();
        for (const auto& v : basis) rows.push_back(vector_to_json(v));
        Json out{{"dimension", basis.size()}, {"basis", rows}};
        if (*d >= 0) out["subspace_variety_member"] = subspace_variety_member(p, *d);
        return out;
      };
    });
  }

  // member
  {
    auto* sub = app.add_subcommand("member", "equation membership test");
    auto fam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto point = std::make_shared<std::string>();
    sub->add_option("--family", *fam, "e.g. matrices_rank_le:r=2")->required();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--point", *point, "point JSON file")->required();
    sub->callback([&pending, fam, n, point] {
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        TensorPoint p = read_point(*point);
        if (p.space.n != *n) throw DomainError("point has a different ambient dimension");
        return Json{{"member", is_member(x, p)}};
      };
    });
  }

  // singular
  {
    auto* sub = app.add_subcommand("singular", "Jacobian-criterion singularity test");
    auto fam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto point = std::make_shared<std::string>();
    auto jac_out = std::make_shared<std::string>();
    sub->add_option("--family", *fam, "variety family")->required();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--point", *point, "point JSON file")->required();
    sub->add_option("--jacobian-out", *jac_out,
                    "also write the full Jacobian matrix to this file");
    sub->callback([&pending, fam, n, point, jac_out] {
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        TensorPoint p = read_point(*point);
        if (p.space.n != *n) throw DomainError("point has a different ambient dimension");
        SingularityReport rep = is_singular(x, p);
        if (!jac_out->empty()) {
          std::ofstream out(*jac_out);
          if (!out) throw DomainError("cannot open '" + *jac_out + "'");
          out << matrix_to_json(jacobian_at(x, p)).dump(2) << "\n";
        }
        return singularity_report_to_json(rep);
      };
    });
  }

  // verify-sing
  {
    auto* sub = app.add_subcommand("verify-sing",
                                   "singular-locus law for rank <= r matrices");
    auto r = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto samples = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    sub->add_option("--r", *r, "rank bound")->required();
    sub->add_option("--n", *n, "matrix size")->required();
    sub->add_option("--samples", *samples, "samples per rank")->required();
    sub->add_option("--seed", *seed, "base seed")->required();
    sub->callback([&pending, r, n, samples, seed] {
      pending.handler = [=] {
        return sing_locus_report_to_json(
            verify_sing_locus_determinantal(*r, *n, *samples, *seed));
      };
    });
  }

  // fdc
  {
    auto* sub = app.add_subcommand("fdc", "stability bound F(d,c)");
    auto d = std::make_shared<int>(0);
    auto c = std::make_shared<long>(0);
    sub->add_option("--d", *d, "parametrization width")->required();
    sub->add_option("--c", *c, "base dimension")->required();
    sub->callback([&pending, d, c] {
      pending.handler = [=] { return fdc_report_to_json(fdc_bound(*d, *c)); };
    });
  }

  // dimlaw
  {
    auto* sub = app.add_subcommand("dimlaw", "linear-type dimension law");
    auto fam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto* seed_opt =
        sub->add_option("--seed", *seed, "cross-check with the generic rank oracle");
    sub->add_option("--family", *fam, "variety family")->required();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->callback([&pending, fam, n, seed, seed_opt] {
      bool with_oracle = seed_opt->count() > 0;
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        LinearTypeProfile prof = x.profile();
        Json out{{"d", prof.d},
                 {"c", prof.c},
                 {"dim_at_d", prof.dim_at_d},
                 {"n", *n},
                 {"dimension", dim_formula(prof, *n)}};
        if (with_oracle) {
          out["seed"] = *seed;
          out["generic_lower_bound"] = generic_dimension_lower_bound(x, *n, *seed);
        }
        return out;
      };
    });
  }

  // dichotomy
  {
    auto* sub = app.add_subcommand("dichotomy", "tangent-space dichotomy sweep");
    auto fam = std::make_shared<std::string>();
    auto point = std::make_shared<std::string>();
    auto kmax = std::make_shared<long>(-1);
    sub->add_option("--family", *fam, "equation-backed family")->required();
    sub->add_option("--point", *point, "point of X(K^d), JSON file")->required();
    sub->add_option("--k-max", *kmax, "sweep k = 0..k_max (default F(d,c))");
    sub->callback([&pending, fam, point, kmax] {
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        LinearTypeProfile prof = x.profile();
        long k = *kmax >= 0 ? *kmax : fdc_bound(prof.d, prof.c).F;
        return dichotomy_report_to_json(
            singular_dichotomy_check(x, prof, read_point(*point), k));
      };
    });
  }

  // resolve
  {
    auto* sub = app.add_subcommand("resolve",
                                   "local inverse of the weak resolution at a point");
    auto fam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto point = std::make_shared<std::string>();
    sub->add_option("--family", *fam, "matrices_rank_le or sym_matrices_rank_le")
        ->required();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--point", *point, "point JSON file")->required();
    sub->callback([&pending, fam, n, point] {
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        return omega_to_json(local_inverse(x, read_point(*point), *n));
      };
    });
  }

  // invert
  {
    auto* sub = app.add_subcommand("invert", "apply rho to a resolution point");
    auto n = std::make_shared<int>(0);
    auto omega = std::make_shared<std::string>();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--omega", *omega, "OmegaPoint JSON file")->required();
    sub->callback([&pending, n, omega] {
      pending.handler = [=] {
        OmegaPoint w = omega_from_json(read_json_input(*omega));
        return point_to_json(rho(w, *n));
      };
    });
  }

  // fiber
  {
    auto* sub = app.add_subcommand("fiber", "probe the fiber of rho over a point");
    auto fam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto point = std::make_shared<std::string>();
    auto trials = std::make_shared<long>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    sub->add_option("--family", *fam, "variety family")->required();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--point", *point, "point JSON file")->required();
    sub->add_option("--trials", *trials, "number of random completions")->required();
    sub->add_option("--seed", *seed, "base seed")->required();
    sub->callback([&pending, fam, n, point, trials, seed] {
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        return fiber_report_to_json(
            fiber_probe(x, read_point(*point), *n, *trials, *seed));
      };
    });
  }

  // sample
  {
    auto* sub = app.add_subcommand("sample", "seeded point from a parametrization");
    auto fam = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    sub->add_option("--family", *fam, "variety family")->required();
    sub->add_option("--n", *n, "ambient dimension")->required();
    sub->add_option("--seed", *seed, "seed")->required();
    sub->callback([&pending, fam, n, seed] {
      pending.handler = [=] {
        VarietySpec x = VarietySpec::parse(*fam);
        return point_to_json(parametrize_sample(x, *n, *seed));
      };
    });
  }

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.exit_code = 0;
    result.envelope = Json{{"status", "ok"},
                           {"payload", Json{{"help", app.help()}}},
                           {"diagnostics", Json::array()}};
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.envelope = Json{{"status", "error"},
                           {"payload", nullptr},
                           {"diagnostics", Json::array({std::string(e.what()),
                                                        app.help()})}};
    return result;
  }

  try {
    Json payload = pending.handler();
    write_payload(out_path, payload);
    result.exit_code = 0;
    result.envelope =
        Json{{"status", "ok"}, {"payload", payload}, {"diagnostics", Json::array()}};
  } catch (const DomainError& e) {
    result.exit_code = 1;
    result.envelope = Json{{"status", "error"},
                           {"payload", nullptr},
                           {"diagnostics", Json::array({std::string(e.what())})}};
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.envelope = Json{{"status", "error"},
                           {"payload", nullptr},
                           {"diagnostics", Json::array({std::string(e.what())})}};
  }
  return result;
}

const std::map<std::string, std::vector<std::string>>& cli_operation_coverage() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"lrcoef", {"partitions_schur.lr_coefficient"}},
      {"schurdim", {"partitions_schur.schur_dimension", "partitions_schur.ssyt_count"}},
      {"dimpoly", {"polyfun.dimension_polynomial", "polyfun.degree"}},
      {"shift",
       {"polyfun.shift", "partitions_schur.partitions_up_to", "polyfun.is_pure",
        "partitions_schur.lr_coefficient"}},
      {"precedes",
       {"polyfun.precedes", "polyfun.homogeneous_component", "polyfun.is_subobject"}},
      {"minsub",
       {"tensor_space.minimal_subspace", "tensor_space.flattening",
        "tensor_space.subspace_variety_member", "exact_linear.rref"}},
      {"member", {"varieties.builtin_variety", "varieties.is_member"}},
      {"singular",
       {"varieties.is_singular", "varieties.jacobian_at", "exact_linear.rank"}},
      {"verify-sing", {"varieties.verify_sing_locus_determinantal"}},
      {"fdc", {"linear_type.fdc_bound"}},
      {"dimlaw",
       {"linear_type.dim_formula", "varieties.generic_dimension_lower_bound"}},
      {"dichotomy",
       {"linear_type.singular_dichotomy_check", "linear_type.tangent_dimension",
        "linear_type.dim_formula", "linear_type.fdc_bound"}},
      {"resolve",
       {"resolution.local_inverse", "resolution.canonicalize",
        "exact_linear.column_echelon_canonical", "tensor_space.minimal_subspace",
        "tensor_space.apply_map", "exact_linear.kernel_basis"}},
      {"invert", {"resolution.rho", "tensor_space.apply_map",
                  "resolution.canonicalize"}},
      {"fiber",
       {"resolution.fiber_probe", "resolution.canonicalize", "resolution.rho",
        "exact_linear.kernel_basis", "exact_linear.column_echelon_canonical"}},
      {"sample", {"varieties.parametrize_sample", "varieties.builtin_variety"}},
  };
  return table;
}

std::vector<std::string> all_module_operations() {
  return {
      "partitions_schur.lr_coefficient",
      "partitions_schur.schur_dimension",
      "partitions_schur.ssyt_count",
      "partitions_schur.partitions_up_to",
      "exact_linear.rank",
      "exact_linear.rref",
      "exact_linear.kernel_basis",
      "exact_linear.column_echelon_canonical",
      "polyfun.degree",
      "polyfun.homogeneous_component",
      "polyfun.dimension_polynomial",
      "polyfun.shift",
      "polyfun.is_subobject",
      "polyfun.precedes",
      "polyfun.is_pure",
      "tensor_space.apply_map",
      "tensor_space.flattening",
      "tensor_space.minimal_subspace",
      "tensor_space.subspace_variety_member",
      "varieties.builtin_variety",
      "varieties.is_member",
      "varieties.jacobian_at",
      "varieties.is_singular",
      "varieties.verify_sing_locus_determinantal",
      "varieties.parametrize_sample",
      "varieties.generic_dimension_lower_bound",
      "linear_type.fdc_bound",
      "linear_type.dim_formula",
      "linear_type.tangent_dimension",
      "linear_type.singular_dichotomy_check",
      "resolution.canonicalize",
      "resolution.rho",
      "resolution.local_inverse",
      "resolution.fiber_probe",
      "cli.run",
  };
}

}  // namespace vecvar
