#include "incompat/majorana.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <set>
#include <string>

#include "incompat/error.hpp"

namespace incompat {

namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

std::complex<double> i_power(int k) {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[mod4(k)];
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  int swaps = std::popcount(a.z & b.x);
  return {a.x ^ b.x, a.z ^ b.z, mod4(a.phase + b.phase + 2 * swaps)};
}

PauliString majorana_pauli(int label, int qubit_count) {
  int j = (label + 1) / 2;
  PauliString p;
  for (int i = 1; i < j; ++i) p.z |= std::uint64_t{1} << (qubit_count - i);
  std::uint64_t bit = std::uint64_t{1} << (qubit_count - j);
  p.x |= bit;
  if (label % 2 == 0) {
    p.z |= bit;
    p.phase = 1;
  }
  return p;
}

void validate(const std::vector<int>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1) throw InvalidParameter("Majorana labels are 1-based");
    if (i > 0 && labels[i] == labels[i - 1]) throw InvalidParameter("repeated Majorana label");
  }
}

}  // namespace

MajoranaMonomial::MajoranaMonomial(std::vector<int> labels) : indices(std::move(labels)) {
  std::sort(indices.begin(), indices.end());
  validate(indices);
  phase = degree() / 2;
}

MajoranaMonomial::MajoranaMonomial(std::vector<int> labels, int phase_exponent)
    : indices(std::move(labels)), phase(mod4(phase_exponent)) {
  if (!std::is_sorted(indices.begin(), indices.end()))
    throw InvalidParameter("monomial labels must be strictly increasing");
  validate(indices);
  int k = degree();
  if ((phase + k * (k - 1) / 2) % 2 != 0)
    throw InvalidParameter("phase exponent " + std::to_string(phase) +
                           " does not give a Hermitian monomial of degree " + std::to_string(k));
}

bool anticommute(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  int common = 0;
  auto i = a.indices.begin(), j = b.indices.begin();
  while (i != a.indices.end() && j != b.indices.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return (a.degree() * b.degree() - common) % 2 != 0;
}

PauliString pauli_of(const MajoranaMonomial& mon, int qubit_count) {
  if (qubit_count > 63) throw CapExceeded("at most 63 qubits");
  PauliString p;
  for (int label : mon.indices) {
    if (label > 2 * qubit_count)
      throw InvalidParameter("Majorana label " + std::to_string(label) + " needs more than " +
                             std::to_string(qubit_count) + " qubits");
    p = multiply(p, majorana_pauli(label, qubit_count));
  }
  p.phase = mod4(p.phase + mon.phase);
  return p;
}

Eigen::MatrixXcd monomial_matrix(const MajoranaMonomial& mon, int qubit_count) {
  if (qubit_count > 20) throw CapExceeded("dense matrices are limited to 20 qubits");
  PauliString p = pauli_of(mon, qubit_count);
  std::uint64_t d = std::uint64_t{1} << qubit_count;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  std::complex<double> unit = i_power(p.phase);
  for (std::uint64_t b = 0; b < d; ++b) {
    double sign = (std::popcount(p.z & b) % 2 == 0) ? 1.0 : -1.0;
    m(b ^ p.x, b) = unit * sign;
  }
  return m;
}

std::vector<Eigen::MatrixXcd> observable_matrices(const ObservableSet& obs, const Limits& limits) {
  if (obs.qubit_count() > limits.max_qubits)
    throw CapExceeded("realisation needs " + std::to_string(obs.qubit_count()) +
                      " qubits; the cap is " + std::to_string(limits.max_qubits));
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(obs.monomials.size());
  for (const auto& mon : obs.monomials) out.push_back(monomial_matrix(mon, obs.qubit_count()));
  return out;
}

Graph anticommutativity_graph(const ObservableSet& obs, bool allow_repeats) {
  int n = obs.size();
  if (!allow_repeats) {
    std::set<std::pair<std::vector<int>, int>> seen;
    for (const auto& mon : obs.monomials)
      if (!seen.emplace(mon.indices, mon.phase).second)
        throw InvalidParameter("duplicate monomial in observable set");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (anticommute(obs.monomials[u], obs.monomials[v])) edges.push_back({u, v});
  return Graph(n, edges);
}

nlohmann::json observables_to_json(const ObservableSet& obs) {
  nlohmann::json j;
  j["modes"] = obs.modes;
  j["monomials"] = nlohmann::json::array();
  for (const auto& mon : obs.monomials)
    j["monomials"].push_back({{"indices", mon.indices}, {"alpha", mon.phase}});
  return j;
}

ObservableSet observables_from_json(const nlohmann::json& j) {
  try {
    ObservableSet obs;
    obs.modes = j.at("modes").get<int>();
    if (obs.modes < 0) throw InvalidParameter("modes must be non-negative");
    for (const auto& item : j.at("monomials")) {
      MajoranaMonomial mon(item.at("indices").get<std::vector<int>>(), item.at("alpha").get<int>());
      if (!mon.indices.empty() && mon.indices.back() > obs.modes)
        throw InvalidParameter("monomial label exceeds mode count");
      obs.monomials.push_back(std::move(mon));
    }
    return obs;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("observable JSON: ") + e.what());
  }
}

}  // namespace incompat
