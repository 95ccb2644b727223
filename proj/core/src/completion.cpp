#include "mvalg/completion.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mvalg {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

bool is_surjective(std::span<const Element> map, std::size_t codomain_size) {
  std::vector<char> hit(codomain_size, 0);
  for (Element m : map) {
    if (m < codomain_size) hit[m] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool is_bijective(std::span<const Element> map, std::size_t codomain_size) {
  return map.size() == codomain_size && is_surjective(map, codomain_size);
}

std::vector<int> eta_or_empty(const FiniteMVAlgebra& algebra) {
  if (algebra.is_trivial()) return {};
  return decompose(algebra).eta;
}

}  // namespace

const std::vector<Element>* InverseSystem::transition(std::size_t from, std::size_t to) const {
  const auto it = transitions.find({from, to});
  return it == transitions.end() ? nullptr : &it->second;
}

bool InverseSystem::is_functorial() const {
  const std::size_t m = node_count();
  for (std::size_t i = 0; i < m; ++i) {
    const auto* id = transition(i, i);
    if (id == nullptr) return false;
    for (Element c = 0; c < id->size(); ++c) {
      if ((*id)[c] != c) return false;
    }
  }
  for (const auto& [key, map] : transitions) {
    const auto& from = quotients[key.first].algebra;
    const auto& to = quotients[key.second].algebra;
    if (!is_homomorphism(from, to, map) || !is_surjective(map, to.size())) return false;
  }
  for (const auto& [ij, phi_ji] : transitions) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto* phi_kj = transition(ij.second, k);
      if (phi_kj == nullptr) continue;
      const auto* phi_ki = transition(ij.first, k);
      if (phi_ki == nullptr) return false;
      for (Element c = 0; c < phi_ji.size(); ++c) {
        if ((*phi_kj)[phi_ji[c]] != (*phi_ki)[c]) return false;
      }
    }
  }
  return true;
}

InverseSystem build_inverse_system(const FiniteMVAlgebra& algebra, std::size_t max_size) {
  InverseSystem system;
  system.ideals = all_ideals(algebra, max_size);
  std::stable_sort(system.ideals.begin(), system.ideals.end(),
                   [](const Ideal& l, const Ideal& r) { return l.size() > r.size(); });
  for (const Ideal& ideal : system.ideals) system.quotients.push_back(quotient(algebra, ideal));

  const std::size_t m = system.node_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!system.ideals[i].is_subset_of(system.ideals[j])) continue;
      const auto& qi = system.quotients[i];
      const auto& qj = system.quotients[j];
      std::vector<Element> map(qi.algebra.size(), kUnset);
      for (Element a = 0; a < algebra.size(); ++a) {
        Element& slot = map[qi.projection[a]];
        if (slot == kUnset) {
          slot = qj.projection[a];
        } else if (slot != qj.projection[a]) {
          throw InternalError("transition map is not well defined");
        }
      }
      system.transitions.emplace(std::pair(i, j), std::move(map));
    }
  }
  return system;
}

CompletionResult profinite_completion(const FiniteMVAlgebra& algebra, std::size_t max_size) {
  InverseSystem system = build_inverse_system(algebra, max_size);
  const std::size_t m = system.node_count();

  // constraints[k]: earlier nodes j whose ideal contains ideals[k]. Nodes are
  // sorted by decreasing ideal size, so every constraint points backwards.
  std::vector<std::vector<std::pair<std::size_t, const std::vector<Element>*>>> constraints(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (const auto* phi = system.transition(k, j)) constraints[k].emplace_back(j, phi);
    }
  }

  std::vector<std::vector<Element>> threads;
  std::vector<Element> partial(m, 0);
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == m) {
      threads.push_back(partial);
      return;
    }
    const std::size_t options = system.quotients[k].algebra.size();
    for (Element v = 0; v < options; ++v) {
      const bool compatible = std::all_of(constraints[k].begin(), constraints[k].end(),
                                          [&](const auto& c) { return (*c.second)[v] == partial[c.first]; });
      if (!compatible) continue;
      partial[k] = v;
      self(self, k + 1);
    }
  };
  extend(extend, 0);

  std::map<std::vector<Element>, Element> index;
  for (Element t = 0; t < threads.size(); ++t) index.emplace(threads[t], t);
  auto lookup = [&](const std::vector<Element>& thread) {
    const auto it = index.find(thread);
    if (it == index.end()) throw InternalError("compatible threads are not closed under the operations");
    return it->second;
  };

  std::vector<Element> canonical(algebra.size());
  for (Element a = 0; a < algebra.size(); ++a) {
    std::vector<Element> thread(m);
    for (std::size_t i = 0; i < m; ++i) thread[i] = system.quotients[i].projection[a];
    canonical[a] = lookup(thread);
  }

  const std::size_t n = threads.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<Element> negs(n);
  std::vector<std::string> labels(n);
  for (Element t = 0; t < n; ++t) labels[t] = "thread" + std::to_string(t);
  for (Element a = 0; a < algebra.size(); ++a) labels[canonical[a]] = algebra.label(a);

  std::vector<Element> scratch(m);
  for (Element s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < m; ++i) scratch[i] = system.quotients[i].algebra.neg(threads[s][i]);
    negs[s] = lookup(scratch);
    for (Element t = 0; t < n; ++t) {
      for (std::size_t i = 0; i < m; ++i) {
        scratch[i] = system.quotients[i].algebra.oplus(threads[s][i], threads[t][i]);
      }
      table[s][t] = lookup(scratch);
    }
  }
  std::vector<Element> zero_thread(m);
  for (std::size_t i = 0; i < m; ++i) zero_thread[i] = system.quotients[i].algebra.zero();
  const Element zero = lookup(zero_thread);

  CompletionResult result{std::move(system), std::move(threads),
                          FiniteMVAlgebra::from_tables(n, zero, table, std::move(negs), std::move(labels)),
                          std::move(canonical), false, {}};
  result.eta = eta_or_empty(result.completion);
  result.is_isomorphism = is_homomorphism(algebra, result.completion, result.canonical_map) &&
                          is_bijective(result.canonical_map, result.completion.size()) &&
                          are_isomorphic(algebra, result.completion);
  return result;
}

Main3Report verify_main3(const FiniteMVAlgebra& algebra, std::size_t max_size) {
  if (!is_regular(algebra)) throw PreconditionError("algebra is not regular");

  const InverseSystem system = build_inverse_system(algebra, max_size);
  const EmbeddedAlgebra center = center_algebra(algebra);
  const std::vector<Ideal> center_ideals = all_ideals(center.algebra, max_size);
  const std::size_t m = system.node_count();

  Main3Report report;
  report.ideal_count = m;
  report.center_ideal_count = center_ideals.size();

  // psi(I) = I meet B(A), in local indices of the center algebra.
  std::vector<std::size_t> psi(m, center_ideals.size());
  report.psi_bijective = true;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Element> local;
    for (Element a : system.ideals[i].members()) {
      const Element l = center.local_index(a);
      if (l < center.carrier.size()) local.push_back(l);
    }
    const auto it = std::find_if(center_ideals.begin(), center_ideals.end(),
                                 [&](const Ideal& v) { return v.members() == local; });
    if (it == center_ideals.end()) {
      report.psi_bijective = false;
      continue;
    }
    psi[i] = static_cast<std::size_t>(it - center_ideals.begin());
  }
  if (report.psi_bijective) {
    std::vector<std::size_t> sorted = psi;
    std::sort(sorted.begin(), sorted.end());
    report.psi_bijective = m == center_ideals.size() &&
                           std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  if (!report.psi_bijective) return report;

  report.psi_preserves_and_reflects_inclusion = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool a_side = system.ideals[i].is_subset_of(system.ideals[j]);
      const bool b_side = center_ideals[psi[i]].is_subset_of(center_ideals[psi[j]]);
      if (a_side != b_side) report.psi_preserves_and_reflects_inclusion = false;
    }
  }

  struct Node {
    Quotient center_quotient;      // B(A)/psi(I)
    EmbeddedAlgebra quotient_center;  // B(A/I) inside A/I
    std::vector<Element> theta;    // center_quotient -> quotient_center (local)
  };
  std::vector<Node> nodes;
  report.theta_isomorphisms = true;
  for (std::size_t i = 0; i < m; ++i) {
    const Quotient& qa = system.quotients[i];
    Node node{quotient(center.algebra, center_ideals[psi[i]]), center_algebra(qa.algebra), {}};
    node.theta.assign(node.center_quotient.algebra.size(), kUnset);
    bool ok = true;
    for (Element c = 0; c < center.carrier.size(); ++c) {
      const Element image = node.quotient_center.local_index(qa.projection[center.carrier[c]]);
      Element& slot = node.theta[node.center_quotient.projection[c]];
      if (image == node.quotient_center.carrier.size() || (slot != kUnset && slot != image)) {
        ok = false;
        break;
      }
      slot = image;
    }
    ok = ok && is_bijective(node.theta, node.quotient_center.algebra.size()) &&
         is_homomorphism(node.center_quotient.algebra, node.quotient_center.algebra, node.theta);
    if (!ok) report.theta_isomorphisms = false;
    nodes.push_back(std::move(node));
  }
  if (!report.theta_isomorphisms) return report;

  report.squares_commute = true;
  for (const auto& [ij, phi] : system.transitions) {
    const Node& ni = nodes[ij.first];
    const Node& nj = nodes[ij.second];
    // phi_{psi(J) psi(I)} : B(A)/psi(I) -> B(A)/psi(J) through representatives.
    std::vector<Element> phi_center(ni.center_quotient.algebra.size(), kUnset);
    for (Element c = 0; c < center.carrier.size(); ++c) {
      phi_center[ni.center_quotient.projection[c]] = nj.center_quotient.projection[c];
    }
    for (Element x = 0; x < phi_center.size(); ++x) {
      const Element down_then_across = nj.quotient_center.carrier[nj.theta[phi_center[x]]];
      const Element across_then_down = phi[ni.quotient_center.carrier[ni.theta[x]]];
      if (down_then_across != across_then_down) report.squares_commute = false;
    }
  }
  return report;
}

BooReport verify_boo(const FiniteMVAlgebra& algebra, std::size_t max_size) {
  if (!is_regular(algebra)) throw PreconditionError("algebra is not regular");
  const CompletionResult completion = profinite_completion(algebra, max_size);
  const FiniteMVAlgebra left = center_algebra(completion.completion).algebra;
  const FiniteMVAlgebra right = profinite_completion(center_algebra(algebra).algebra, max_size).completion;
  return {eta_or_empty(left), eta_or_empty(right), are_isomorphic(left, right)};
}

}  // namespace mvalg
