#pragma once

#include <vecvar/lineartype.hpp>
#include <vecvar/polyfun.hpp>
#include <vecvar/resolution.hpp>
#include <vecvar/tensor.hpp>
#include <vecvar/variety.hpp>

#include <json.hpp>

namespace vecvar {

using Json = nlohmann::json;

// Rationals travel as canonical strings "p/q" (or "p"); matrices as arrays
// of arrays of such strings. Object keys are emitted sorted, so output is
// byte-stable for fixed inputs.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json space_to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j);

Json point_to_json(const TensorPoint& p);
TensorPoint point_from_json(const Json& j);

Json functor_to_json(const PolynomialFunctor& p);
PolynomialFunctor functor_from_json(const Json& j);

Json omega_to_json(const OmegaPoint& w);
OmegaPoint omega_from_json(const Json& j);

Json singularity_report_to_json(const SingularityReport& r);
Json sing_locus_report_to_json(const SingLocusReport& r);
Json fdc_report_to_json(const FdcReport& r);
Json dichotomy_report_to_json(const DichotomyReport& r);
Json fiber_report_to_json(const FiberReport& r);

}  // namespace vecvar
