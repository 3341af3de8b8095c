#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dgfree/classify2.hpp"
#include "dgfree/cohomology.hpp"
#include "dgfree/dgmodule.hpp"

namespace dgfree::io {

using nlohmann::json;

json rational_json(const Rational& r);
Rational rational_from(const json& j);  // "p/q", "p" or a JSON integer

json surd_json(const Surd& s);
Surd parse_surd(const std::string& text);  // "a", "b*sqrt(d)", "a - sqrt(d)", ...

json matrix_json(const RatMatrix& m);
json matrix_json(const SurdMatrix& m);
RatMatrix matrix_from(const json& j, int n);
SurdMatrix surd_matrix_from(const json& j, int n);

json tuple_json(const MatrixTuple& t);
MatrixTuple tuple_from(const json& j);

json witness_json(const WitnessMatrix& w);
WitnessMatrix witness_from(const json& j);

json label_json(const Classification& c);
json cohomology_json(const CohomologyReport& r);
std::string cohomology_tsv(const CohomologyReport& r);
json verdict_json(const IsoVerdict& v);
json endo_json(const EndoAlgebraReport& r);

// "algebra" may be an embedded tuple object or a path relative to base_dir
FreeDGModule module_from(const json& j, const std::filesystem::path& base_dir);
json module_json(const FreeDGModule& f);

json read_json_file(const std::filesystem::path& p);  // throws ParseError
void write_json_file(const std::filesystem::path& p, const json& j);

}  // namespace dgfree::io
