#pragma once

#include <nlohmann/json.hpp>

#include "genps/analysis.hpp"
#include "genps/oracle.hpp"
#include "genps/pxi.hpp"
#include "genps/rep_theory.hpp"
#include "genps/root_system.hpp"
#include "genps/small_k.hpp"

namespace genps::io {

using json = nlohmann::json;

/// Rationals are serialized as "p" / "p/q" strings to keep the output free
/// of floating point; vectors become arrays of such strings.
json to_json(const Rat& q);
json to_json(const Vec& v);

json root_system_json(const roots::RootSystem& rs);
json small_k_json(const std::vector<smallk::SmallKType>& types);
json branch_json(const std::vector<long>& js);

/// Factored determinant, schema:
/// {"scalar": "p/q", "factors": [{"root": [ints], "shift": "p/q", "mult": k}]}
/// with roots in simple-root coordinates.
json factored_polynomial_json(const pxi::FactoredPolynomial& p);

json cyclicity_json(const analysis::CyclicityVerdict& v);
json irreducibility_json(const analysis::IrreducibilityVerdict& v);
json langlands_json(const analysis::LanglandsDescriptor& d);
json gamma_product_json(const analysis::GammaRatioProduct& g);
json reduced_ratio_json(const analysis::ReducedRatio& r,
                        const std::vector<roots::Root>& roots);
json oracle_reports_json(const oracle::ComparisonReport& wc, const oracle::MultiplicityReport& mi);

/// Canonical dump: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace genps::io
