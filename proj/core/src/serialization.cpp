#include "symcert/serialization.hpp"

#include "symcert/errors.hpp"

namespace symcert::json {
namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw ParseError("not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
    return v;
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    return Integer(j.get<long>());
  }
  throw ParseError("expected an integer (number or decimal string), got " + j.dump());
}

std::size_t size_from_json(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_unsigned()) {
    throw ParseError(std::string("matrix field '") + field + "' must be a non-negative integer");
  }
  return j.at(field).get<std::size_t>();
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(x.get_str());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json matrix_to_json(const IntMatrix& m, const std::vector<std::string>& basis_labels) {
  Json j = matrix_to_json(m);
  j["basis_labels"] = basis_labels;
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  const std::size_t rows = size_from_json(j, "rows");
  const std::size_t cols = size_from_json(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ParseError("matrix field 'entries' must be an array of rows");
  }
  const Json& entries = j.at("entries");
  if (entries.size() != rows) {
    throw ParseError("matrix declares " + std::to_string(rows) + " rows but has " +
                     std::to_string(entries.size()));
  }
  std::vector<Integer> flat;
  flat.reserve(rows * cols);
  for (const Json& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("every matrix row must have " + std::to_string(cols) + " entries");
    }
    for (const Json& x : row) flat.push_back(integer_from_json(x));
  }
  return IntMatrix(rows, cols, std::move(flat));
}

IntMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse(text)); }

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  IntVector v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(integer_from_json(x));
  return v;
}

CurveTable curve_table_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("curve table must be a JSON object keyed by curve id");
  CurveTable table;
  for (const auto& [id, body] : j.items()) {
    if (!body.is_object() || !body.contains("homology")) {
      throw ParseError("curve '" + id + "' needs a 'homology' array");
    }
    BaseCurve curve;
    curve.id = id;
    curve.homology = vector_from_json(body.at("homology"));
    curve.separating = body.value("separating", false);
    if (body.contains("geom")) {
      for (const auto& [other, value] : body.at("geom").items()) {
        if (!value.is_number_unsigned()) {
          throw ParseError("geom entry '" + id + "'/'" + other + "' must be a natural number");
        }
        curve.geom.emplace(other, value.get<std::uint64_t>());
      }
    }
    table.add(std::move(curve));
  }
  return table;
}

CurveTable parse_curve_table(std::string_view text) { return curve_table_from_json(parse(text)); }

TwistWord twist_word_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("twist word must be an array of [id, exponent] pairs");
  TwistWord word;
  for (const Json& letter : j) {
    if (!letter.is_array() || letter.size() != 2 || !letter[0].is_string() ||
        !letter[1].is_number_integer()) {
      throw ParseError("twist letter must be [id, exponent], got " + letter.dump());
    }
    const long e = letter[1].get<long>();
    if (e == 0) throw ParseError("twist exponent must be nonzero");
    word.letters.push_back({letter[0].get<std::string>(), e});
  }
  return word;
}

TwistWord parse_twist_word(std::string_view text) { return twist_word_from_json(parse(text)); }

Json to_json(const LowerBoundCert& cert) {
  return Json{{"genus", std::to_string(cert.genus)},
              {"k", std::to_string(cert.k)},
              {"m", std::to_string(cert.m)},
              {"witness_j", std::to_string(cert.witness_j)},
              {"trace_at_j", cert.trace_at_j.get_str()},
              {"lefschetz_at_j", cert.lefschetz_at_j.get_str()},
              {"bound", BoundExpression::kTemplate},
              {"bound_instantiated", cert.bound.instantiated()}};
}

Json to_json(const ObstructionCert& cert) {
  return Json{{"degree", cert.degree},
              {"identity_mod_d", cert.matrix_mod_d_is_identity},
              {"depends_on", cert.depends_on},
              {"statement", cert.statement}};
}

Json to_json(const SpreadBound& bound) {
  return Json{{"genus_param", bound.genus_param},
              {"int_sum", bound.int_sum},
              {"offset", bound.offset},
              {"n_star", bound.n_star},
              {"bound", rational_string(bound.bound)},
              {"automaton_width", bound.automaton_width},
              {"automaton_misses_block", bound.automaton_misses_block}};
}

Json to_json(const OrbitSumResult& result) {
  return Json{{"dimension", result.dimension}, {"invariant", result.invariant}};
}

Json to_json(const SurjectivityReport& report) {
  return Json{{"surjective", report.surjective},
              {"classes_found", report.classes_found},
              {"group_order", report.group_order},
              {"identity_word_length", report.identity_word_length}};
}

}  // namespace symcert::json
