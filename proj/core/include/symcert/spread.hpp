#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "symcert/int_matrix.hpp"

namespace symcert {

/// Symmetric partial table of geometric intersection numbers, each entry
/// carrying a provenance note. These are inputs; nothing here computes them.
class IntersectionTable {
 public:
  void set(const std::string& a, const std::string& b, std::uint64_t value,
           std::string provenance = {});
  std::optional<std::uint64_t> get(const std::string& a, const std::string& b) const;
  std::uint64_t at(const std::string& a, const std::string& b) const;
  std::string provenance(const std::string& a, const std::string& b) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    std::uint64_t value;
    std::string provenance;
  };
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
  std::map<std::pair<std::string, std::string>, Entry> entries_;
};

/// Parses the TOML configuration format:
///
///   [[intersection]]
///   curves = ["xi", "beta"]
///   value = 6
///   provenance = "..."
IntersectionTable parse_intersection_table(std::string_view toml_text);
IntersectionTable load_intersection_table(const std::string& path);
/// The configuration shipped in data/intersections.toml.
IntersectionTable default_intersection_table();
std::string_view default_intersection_config();

/// i(T_a b, b) = i(a, b)^2.
std::uint64_t twist_self_intersection(std::uint64_t i_ab);

/// i(T_a b, c) = i(a, b) * i(a, c), taken as given for b and c disjoint.
/// The positioning hypotheses behind this identity are not checked.
std::uint64_t twist_cross_intersection(std::uint64_t i_ab, std::uint64_t i_ac);

/// The worked chain for lambda = T_xi beta and phi = T_lambda T_beta^-1.
struct PaperExampleNumbers {
  std::uint64_t i_xi_beta = 0;
  std::uint64_t i_xi_alpha = 0;
  std::uint64_t i_lambda_beta = 0;     // i(xi, beta)^2
  std::uint64_t i_lambda_alpha = 0;    // i(xi, beta) i(xi, alpha)
  std::uint64_t i_phialpha_alpha = 0;  // i(lambda, alpha)^2
  std::uint64_t i_phibeta_alpha = 0;   // i(lambda, beta) i(lambda, alpha)
  std::uint64_t int_sum = 0;           // S
};

/// Reads i(xi, beta), i(xi, alpha) and i(alpha, beta) (which must be 0).
PaperExampleNumbers paper_example_numbers(const IntersectionTable& table);
PaperExampleNumbers paper_example_numbers();

/// Support of the iterated image of one gluing circle, as a cyclic interval
/// of blocks around `center` in a degree-d cover.
struct SpreadState {
  std::uint64_t degree = 0;
  std::uint64_t center = 0;
  std::uint64_t left = 0;   // blocks covered below center
  std::uint64_t right = 0;  // blocks covered above center
  std::uint64_t iteration = 0;

  std::uint64_t width() const noexcept { return left + right + 1; }
  bool saturated() const noexcept { return width() >= degree; }
  bool misses_block() const noexcept { return !saturated(); }
  bool contains(std::uint64_t block) const;
};

SpreadState spread_initial(std::uint64_t degree, std::uint64_t center = 0);

/// Widens the interval by half_growth blocks on each side, clamped at the
/// full cover.
SpreadState spread_step(const SpreadState& state, std::uint64_t half_growth);

/// Per-side growth for an intersection sum S: ceil(S / 2).
std::uint64_t half_growth_for(std::uint64_t int_sum);

struct SpreadBound {
  std::uint64_t genus_param = 0;
  std::uint64_t int_sum = 0;
  unsigned offset = 3;
  std::uint64_t n_star = 0;
  Rational bound;  // 2 / n_star
  // Automaton cross-check on a degree-genus_param cover.
  std::uint64_t automaton_width = 0;
  bool automaton_misses_block = false;
};

/// 2 / floor((g - offset) / S), or nullopt when the floor is 0.
/// offset must be 2 or 3; S must be positive.
std::optional<SpreadBound> upper_bound_eq2(std::uint64_t genus, std::uint64_t int_sum,
                                           unsigned offset);

/// 2S / (g - offset - S); needs g > offset + S.
Rational linearized_bound(std::uint64_t genus, std::uint64_t int_sum, unsigned offset);

/// 1152 / (g - 579) for the shipped configuration (S = 576, offset 3).
Rational quantitative_restriction(std::uint64_t genus);

/// ell_base / ((g-1) * 80 * 2^13 * e^54 * pi), held as an exact rational
/// coefficient times the symbolic factor e^-54 pi^-1.
struct AptLowerBound {
  Rational coefficient;
  std::string symbolic_factor = "e^-54 * pi^-1";
  std::string decimal;  // 20 significant digits
};

AptLowerBound apt_lower_bound(const Rational& ell_base, std::uint64_t genus);

/// C (k+1) / (g log g) with C symbolic.
struct WeakerUpperBound {
  Integer numerator;            // k + 1
  std::string denominator;      // g ln g, 20 significant digits
  std::string value;            // (k+1) / (g ln g), 20 significant digits
  std::string constant = "C";
};

WeakerUpperBound weaker_upper_bound(std::uint64_t k, std::uint64_t genus);

/// Rationals as "p/q", always with an explicit denominator.
std::string rational_string(const Rational& q);

}  // namespace symcert
