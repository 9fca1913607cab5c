#include "incompat/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "incompat/certificates.hpp"
#include "incompat/error.hpp"
#include "incompat/generators.hpp"
#include "incompat/orientation.hpp"

namespace incompat {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kMaxHadamardFreeBits = 28;

ClosedForm exact_value(std::string formula, double value) {
  ClosedForm c;
  c.formula = std::move(formula);
  c.exact = c.lower = c.upper = value;
  return c;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

// Odd orders are impossible: a skew-symmetric matrix of odd order is singular.
std::optional<bool> skew_conference_exists(int n, const Limits& limits, nlohmann::json& witness) {
  if (n % 2 == 1) return false;
  Graph kn = complete_graph(n);
  std::optional<SwitchingClasses> classes;
  try {
    classes.emplace(kn, limits);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
  bool found = any_class(*classes, [&](std::uint64_t pattern, const Orientation& o) {
    if (!matrix_certificates(to_integer_matrix(o.skew_matrix())).skew_conference) return false;
    witness = orientation_to_json(*classes, pattern);
    return true;
  });
  return found;
}

// Orthogonal +-1 rows need s even for two rows and s divisible by 4 for three.
std::optional<bool> partial_hadamard_exists(int r, int s, nlohmann::json& witness) {
  if (r >= 2 && s % 2 == 1) return false;
  if (r >= 3 && s % 4 != 0) return false;
  if (r > s) return false;
  int free_bits = r * s > 24 ? (r - 1) * (s - 1) : r * s;
  if (free_bits > kMaxHadamardFreeBits) return std::nullopt;
  auto search = search_partial_hadamard(r, s);
  if (!search.found) return false;
  std::vector<std::vector<long long>> rows(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) rows[i].push_back((*search.found)(i, j));
  witness = rows;
  return true;
}

ClosedForm johnson_form(int n, const Limits& limits) {
  require(n >= 2, "johnson(n,2) needs n >= 2");
  ClosedForm c;
  c.formula = "johnson: 1/sqrt(n-1)";
  c.upper = 1.0 / std::sqrt(double(n - 1));
  c.condition_name = "skew-conference matrix of order " + std::to_string(n);
  nlohmann::json witness;
  c.condition = skew_conference_exists(n, limits, witness);
  if (c.condition == true) {
    c.exact = c.lower = c.upper;
    c.certificate = witness;
  }
  return c;
}

ClosedForm rook_form(int r, int s) {
  require(r >= 1 && s >= 1, "rook needs r, s >= 1");
  if (r > s) std::swap(r, s);
  ClosedForm c;
  c.formula = "rook: 1/sqrt(max(r,s))";
  c.upper = 1.0 / std::sqrt(double(s));
  c.condition_name = "partial Hadamard matrix of size " + std::to_string(r) + "x" + std::to_string(s);
  nlohmann::json witness;
  c.condition = partial_hadamard_exists(r, s, witness);
  if (c.condition == true) {
    c.exact = c.lower = c.upper;
    c.certificate = witness;
  }
  return c;
}

ClosedForm path_form(int n) {
  require(n >= 1, "path needs n >= 1");
  auto [lower, upper] = path_interval(n);
  ClosedForm c;
  c.formula = n % 2 == 0 ? "path (even): [2/(n+2) csc(pi/(n+2)), cot(pi/(2(n+2)))/n - 1/n]"
                         : "path (odd): [2/(n+1) csc(pi/(n+1)), csc(pi/(2(n+2)))/n - 1/n]";
  c.lower = lower;
  c.upper = upper;
  if (upper - lower < 1e-12) c.exact = lower;
  return c;
}

}  // namespace

std::pair<double, double> path_interval(int n) {
  require(n >= 1, "path needs n >= 1");
  if (n == 1) return {1.0, 1.0};
  double dn = n;
  if (n % 2 == 0)
    return {2.0 / (dn + 2) / std::sin(pi / (dn + 2)), 1.0 / dn / std::tan(pi / (2 * (dn + 2))) - 1.0 / dn};
  return {2.0 / (dn + 1) / std::sin(pi / (dn + 1)), 1.0 / dn / std::sin(pi / (2 * (dn + 2))) - 1.0 / dn};
}

double cycle_value(int n) {
  require(n >= 3, "cycle needs n >= 3");
  double dn = n;
  if (n % 2 == 1) return 1.0 / dn / std::tan(pi / (2 * dn));
  return 2.0 / dn / std::sin(pi / dn);
}

bool has_closed_form(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::empty:
    case FamilyTag::complete:
    case FamilyTag::cycle:
    case FamilyTag::path:
    case FamilyTag::rook:
      return true;
    case FamilyTag::johnson:
      return spec.params.size() == 2 && spec.params[1] == 2;
    case FamilyTag::line_of:
      if (!spec.inner) return false;
      switch (spec.inner->tag) {
        case FamilyTag::hypercube:
        case FamilyTag::cycle:
        case FamilyTag::path:
        case FamilyTag::complete:
        case FamilyTag::complete_bipartite:
          return true;
        default:
          return false;
      }
    default:
      return false;
  }
}

ClosedForm closed_form(const FamilySpec& spec, const Limits& limits) {
  if (!has_closed_form(spec)) throw InvalidParameter("no closed form for family " + family_name(spec.tag));
  auto param = [&](const FamilySpec& s, std::size_t i) {
    require(s.params.size() > i, "missing parameter for family " + family_name(s.tag));
    return s.params[i];
  };
  switch (spec.tag) {
    case FamilyTag::empty:
      require(param(spec, 0) >= 1, "empty graph needs n >= 1");
      return exact_value("commuting: 1", 1.0);
    case FamilyTag::complete: {
      int n = param(spec, 0);
      require(n >= 1, "complete graph needs n >= 1");
      return exact_value("complete: n^-1/2", 1.0 / std::sqrt(double(n)));
    }
    case FamilyTag::cycle: {
      int n = param(spec, 0);
      return exact_value(n % 2 ? "cycle (odd): cot(pi/2n)/n" : "cycle (even): 2 csc(pi/n)/n", cycle_value(n));
    }
    case FamilyTag::path:
      return path_form(param(spec, 0));
    case FamilyTag::johnson:
      return johnson_form(param(spec, 0), limits);
    case FamilyTag::rook:
      return rook_form(param(spec, 0), param(spec, 1));
    case FamilyTag::line_of: {
      const FamilySpec& inner = *spec.inner;
      switch (inner.tag) {
        case FamilyTag::hypercube: {
          int d = param(inner, 0);
          require(d >= 1, "hypercube needs d >= 1");
          return exact_value("line of hypercube: 1/sqrt(d)", 1.0 / std::sqrt(double(d)));
        }
        case FamilyTag::cycle:
          return closed_form(FamilySpec{FamilyTag::cycle, {param(inner, 0)}, {}, nullptr}, limits);
        case FamilyTag::path:
          require(param(inner, 0) >= 2, "line of a path needs n >= 2");
          return path_form(param(inner, 0) - 1);
        case FamilyTag::complete: {
          int n = param(inner, 0);
          if (n <= 1) throw InvalidParameter("line of K_1 is empty");
          return johnson_form(n, limits);
        }
        case FamilyTag::complete_bipartite:
          return rook_form(param(inner, 0), param(inner, 1));
        default:
          break;
      }
      break;
    }
    default:
      break;
  }
  throw InternalError("closed form dispatch");
}

std::optional<FamilySpec> family_of(const Graph& g) {
  if (!g.meta() || g.meta()->tag == FamilyTag::custom) return std::nullopt;
  const FamilyMeta& meta = *g.meta();
  FamilySpec spec{meta.tag, meta.params, meta.intersections, nullptr};
  if (meta.tag == FamilyTag::line_of) {
    if (!meta.line_root) return std::nullopt;
    auto inner = family_of(*meta.line_root);
    if (!inner) return std::nullopt;
    spec.inner = std::make_shared<FamilySpec>(*inner);
  }
  return spec;
}

nlohmann::json closed_form_to_json(const ClosedForm& c) {
  nlohmann::json j = {{"formula", c.formula}};
  auto put = [&](const char* key, const std::optional<double>& v) {
    j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  put("exact", c.exact);
  put("lower", c.lower);
  put("upper", c.upper);
  if (!c.condition_name.empty()) {
    j["condition"] = {{"name", c.condition_name},
                      {"holds", c.condition ? nlohmann::json(*c.condition) : nlohmann::json(nullptr)}};
    if (!c.certificate.is_null()) j["condition"]["witness"] = c.certificate;
  }
  return j;
}

}  // namespace incompat
