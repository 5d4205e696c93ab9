#include "symcert/spread.hpp"

#include <mpfr.h>

#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "symcert/errors.hpp"

namespace symcert {
namespace {

constexpr mpfr_prec_t kPrecisionBits = 256;

// RAII holder for an mpfr_t.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(value_, kPrecisionBits); }
  ~BigFloat() { mpfr_clear(value_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;

  mpfr_ptr get() { return value_; }

  std::string to_string(int significant_digits = 20) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

 private:
  mpfr_t value_;
};

}  // namespace

std::pair<std::string, std::string> IntersectionTable::key(const std::string& a,
                                                            const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void IntersectionTable::set(const std::string& a, const std::string& b, std::uint64_t value,
                            std::string provenance) {
  if (a == b && value != 0) {
    throw PreconditionError("intersection of '" + a + "' with itself must be 0");
  }
  auto [it, inserted] = entries_.try_emplace(key(a, b), Entry{value, std::move(provenance)});
  if (!inserted) throw PreconditionError("duplicate intersection entry for ('" + a + "', '" + b + "')");
}

std::optional<std::uint64_t> IntersectionTable::get(const std::string& a,
                                                    const std::string& b) const {
  if (a == b) return 0;
  auto it = entries_.find(key(a, b));
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::uint64_t IntersectionTable::at(const std::string& a, const std::string& b) const {
  auto v = get(a, b);
  if (!v) throw PreconditionError("missing intersection entry for ('" + a + "', '" + b + "')");
  return *v;
}

std::string IntersectionTable::provenance(const std::string& a, const std::string& b) const {
  auto it = entries_.find(key(a, b));
  return it == entries_.end() ? std::string{} : it->second.provenance;
}

IntersectionTable parse_intersection_table(std::string_view toml_text) {
  toml::table doc;
  try {
    doc = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    throw ParseError(std::string("intersection config: ") + std::string(e.description()));
  }
  const toml::array* entries = doc["intersection"].as_array();
  if (!entries) throw ParseError("intersection config: missing [[intersection]] entries");

  IntersectionTable table;
  for (const toml::node& node : *entries) {
    const toml::table* entry = node.as_table();
    if (!entry) throw ParseError("intersection config: entry is not a table");
    const toml::array* curves = (*entry)["curves"].as_array();
    auto value = (*entry)["value"].value<std::int64_t>();
    if (!curves || curves->size() != 2 || !value || *value < 0) {
      throw ParseError("intersection config: each entry needs curves = [a, b] and value >= 0");
    }
    auto a = (*curves)[0].value<std::string>();
    auto b = (*curves)[1].value<std::string>();
    if (!a || !b) throw ParseError("intersection config: curve names must be strings");
    table.set(*a, *b, static_cast<std::uint64_t>(*value),
              (*entry)["provenance"].value_or(std::string{}));
  }
  return table;
}

IntersectionTable load_intersection_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open intersection config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_intersection_table(buf.str());
}

IntersectionTable default_intersection_table() {
  return parse_intersection_table(default_intersection_config());
}

std::uint64_t twist_self_intersection(std::uint64_t i_ab) { return i_ab * i_ab; }

std::uint64_t twist_cross_intersection(std::uint64_t i_ab, std::uint64_t i_ac) {
  return i_ab * i_ac;
}

PaperExampleNumbers paper_example_numbers(const IntersectionTable& table) {
  if (table.at("alpha", "beta") != 0) {
    throw PreconditionError("worked example needs alpha disjoint from beta");
  }
  PaperExampleNumbers n;
  n.i_xi_beta = table.at("xi", "beta");
  n.i_xi_alpha = table.at("xi", "alpha");
  // lambda = T_xi beta
  n.i_lambda_beta = twist_self_intersection(n.i_xi_beta);
  n.i_lambda_alpha = twist_cross_intersection(n.i_xi_beta, n.i_xi_alpha);
  // phi alpha = T_lambda alpha, phi beta = T_lambda beta
  n.i_phialpha_alpha = twist_self_intersection(n.i_lambda_alpha);
  n.i_phibeta_alpha = twist_cross_intersection(n.i_lambda_beta, n.i_lambda_alpha);
  n.int_sum = n.i_phialpha_alpha + n.i_phibeta_alpha;
  return n;
}

PaperExampleNumbers paper_example_numbers() {
  return paper_example_numbers(default_intersection_table());
}

bool SpreadState::contains(std::uint64_t block) const {
  if (degree == 0) return false;
  if (saturated()) return true;
  // Offset of `block` from center, measured upwards mod degree.
  const std::uint64_t up = (block % degree + degree - center % degree) % degree;
  return up <= right || degree - up <= left;
}

SpreadState spread_initial(std::uint64_t degree, std::uint64_t center) {
  if (degree == 0) throw PreconditionError("spread: degree must be positive");
  return SpreadState{degree, center % degree, 0, 0, 0};
}

SpreadState spread_step(const SpreadState& state, std::uint64_t half_growth) {
  SpreadState next = state;
  ++next.iteration;
  if (state.saturated()) return next;
  next.left += half_growth;
  next.right += half_growth;
  if (next.width() > next.degree) {
    // Clamp to exactly the full cover.
    next.right = next.degree - 1 - std::min(next.left, next.degree - 1);
    next.left = next.degree - 1 - next.right;
  }
  return next;
}

std::uint64_t half_growth_for(std::uint64_t int_sum) { return (int_sum + 1) / 2; }

std::optional<SpreadBound> upper_bound_eq2(std::uint64_t genus, std::uint64_t int_sum,
                                           unsigned offset) {
  if (offset != 2 && offset != 3) throw PreconditionError("offset must be 2 or 3");
  if (int_sum == 0) throw PreconditionError("intersection sum must be positive");
  const std::uint64_t n_star = genus >= offset ? (genus - offset) / int_sum : 0;
  if (n_star < 1) return std::nullopt;

  SpreadBound b;
  b.genus_param = genus;
  b.int_sum = int_sum;
  b.offset = offset;
  b.n_star = n_star;
  b.bound = Rational(2, Integer(static_cast<unsigned long>(n_star)));
  b.bound.canonicalize();

  SpreadState s = spread_initial(genus);
  const std::uint64_t grow = half_growth_for(int_sum);
  for (std::uint64_t i = 0; i < n_star && !s.saturated(); ++i) s = spread_step(s, grow);
  b.automaton_width = std::min(s.width(), genus);
  b.automaton_misses_block = s.misses_block();
  return b;
}

Rational linearized_bound(std::uint64_t genus, std::uint64_t int_sum, unsigned offset) {
  if (genus <= offset + int_sum) {
    throw PreconditionError("linearized bound needs g > offset + S");
  }
  Rational q(Integer(static_cast<unsigned long>(2 * int_sum)),
             Integer(static_cast<unsigned long>(genus - offset - int_sum)));
  q.canonicalize();
  return q;
}

Rational quantitative_restriction(std::uint64_t genus) {
  static const std::uint64_t kIntSum = paper_example_numbers().int_sum;
  if (genus <= 3 + kIntSum) {
    throw PreconditionError("quantitative restriction needs g > " + std::to_string(3 + kIntSum));
  }
  return linearized_bound(genus, kIntSum, 3);
}

AptLowerBound apt_lower_bound(const Rational& ell_base, std::uint64_t genus) {
  if (genus < 2) throw PreconditionError("apt_lower_bound: genus must be at least 2");
  if (ell_base < 0) throw PreconditionError("apt_lower_bound: base length must be non-negative");

  AptLowerBound out;
  const Integer denom = Integer(static_cast<unsigned long>(genus - 1)) * 80 * 8192;
  out.coefficient = ell_base / Rational(denom);
  out.coefficient.canonicalize();

  BigFloat value, e54, pi;
  mpfr_set_q(value.get(), out.coefficient.get_mpq_t(), MPFR_RNDN);
  mpfr_set_ui(e54.get(), 54, MPFR_RNDN);
  mpfr_exp(e54.get(), e54.get(), MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_div(value.get(), value.get(), e54.get(), MPFR_RNDN);
  mpfr_div(value.get(), value.get(), pi.get(), MPFR_RNDN);
  out.decimal = value.to_string();
  return out;
}

WeakerUpperBound weaker_upper_bound(std::uint64_t k, std::uint64_t genus) {
  if (genus < 2) throw PreconditionError("weaker_upper_bound: genus must be at least 2");
  WeakerUpperBound out;
  out.numerator = Integer(static_cast<unsigned long>(k)) + 1;

  BigFloat denom, value;
  mpfr_set_ui(denom.get(), genus, MPFR_RNDN);
  mpfr_log(denom.get(), denom.get(), MPFR_RNDN);
  mpfr_mul_ui(denom.get(), denom.get(), genus, MPFR_RNDN);
  mpfr_set_z(value.get(), out.numerator.get_mpz_t(), MPFR_RNDN);
  mpfr_div(value.get(), value.get(), denom.get(), MPFR_RNDN);
  out.denominator = denom.to_string();
  out.value = value.to_string();
  return out;
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace symcert
