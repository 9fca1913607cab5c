#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "incompat/generators.hpp"
#include "incompat/graph.hpp"
#include "incompat/limits.hpp"

namespace incompat {

/**
 * Known formula for a family. Johnson and rook results carry the bound plus
 * an existence condition; the value is exact only when the condition holds.
 * An unset condition means the search was skipped because of a cap.
 */
struct ClosedForm {
  std::string formula;
  std::optional<double> exact;
  std::optional<double> lower;
  std::optional<double> upper;
  std::string condition_name;
  std::optional<bool> condition;
  nlohmann::json certificate;
};

/** Supported: empty, complete, cycle, path, johnson(n,2), rook and their line-graph forms, line of hypercube. */
ClosedForm closed_form(const FamilySpec& spec, const Limits& limits = {});

/** Family spec recovered from generator metadata, if any. */
std::optional<FamilySpec> family_of(const Graph& g);

/** Whether closed_form accepts the spec. */
bool has_closed_form(const FamilySpec& spec);

nlohmann::json closed_form_to_json(const ClosedForm& c);

/** Path interval for P_n (n vertices): {lower, upper}. */
std::pair<double, double> path_interval(int n);

/** Cycle value for C_n, n >= 3. */
double cycle_value(int n);

}  // namespace incompat
