#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcert/cyclic_cover.hpp"
#include "symcert/int_matrix.hpp"
#include "symcert/lefschetz.hpp"
#include "symcert/spread.hpp"
#include "symcert/symplectic.hpp"

// JSON encodings. Big integers are written as decimal strings so they
// survive any JSON reader; on input both strings and plain integers are
// accepted. Key order is fixed, so output is byte-stable.
namespace symcert::json {

using Json = nlohmann::ordered_json;

// {"rows": r, "cols": c, "entries": [["1", "0"], ...]}
Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const IntMatrix& m, const std::vector<std::string>& basis_labels);
IntMatrix matrix_from_json(const Json& j);
IntMatrix parse_matrix(std::string_view text);

IntVector vector_from_json(const Json& j);

// {"alpha": {"homology": [1, 0, 0, 0], "separating": false, "geom": {"beta": 0}}, ...}
CurveTable curve_table_from_json(const Json& j);
CurveTable parse_curve_table(std::string_view text);

// [["beta", 1], ["alpha", -1]]
TwistWord twist_word_from_json(const Json& j);
TwistWord parse_twist_word(std::string_view text);

Json to_json(const LowerBoundCert& cert);
Json to_json(const ObstructionCert& cert);
Json to_json(const SpreadBound& bound);
Json to_json(const OrbitSumResult& result);
Json to_json(const SurjectivityReport& report);

Json parse(std::string_view text);

}  // namespace symcert::json
