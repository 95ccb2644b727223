#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mvalg/finite_algebra.hpp"
#include "mvalg/ideals.hpp"

namespace mvalg {

/// The inverse system of finite quotients {A/I} over all ideals I with
/// finite quotient, ordered by reverse inclusion.
///
/// For a finite algebra every ideal qualifies, including A itself whose
/// quotient is trivial. Nodes are stored by decreasing ideal size.
struct InverseSystem {
  std::vector<Ideal> ideals;
  std::vector<Quotient> quotients;
  /// transitions[{i, j}] maps A/ideals[i] onto A/ideals[j] whenever
  /// ideals[i] is a subset of ideals[j] (including i == j).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Element>> transitions;

  std::size_t node_count() const noexcept { return ideals.size(); }
  const std::vector<Element>* transition(std::size_t from, std::size_t to) const;

  /// phi_II = id, every transition a surjective homomorphism, and
  /// phi_KJ o phi_JI = phi_KI for every I <= J <= K.
  bool is_functorial() const;
};

InverseSystem build_inverse_system(const FiniteMVAlgebra& algebra,
                                   std::size_t max_size = kDefaultMaxSize);

struct CompletionResult {
  InverseSystem system;
  /// Compatible threads: threads[t][i] is the coordinate in A/ideals[i].
  std::vector<std::vector<Element>> threads;
  /// The inverse limit with componentwise operations; element t is threads[t].
  FiniteMVAlgebra completion;
  /// a -> ([a]_I)_I as indices into `threads`.
  std::vector<Element> canonical_map;
  /// The canonical map is a bijective homomorphism and the eta invariants agree.
  bool is_isomorphism = false;
  /// Chain orders of the completion; empty when it is trivial.
  std::vector<int> eta;
};

/// Inverse limit of the system, enumerated as compatible threads with
/// pruning against already-fixed larger ideals.
CompletionResult profinite_completion(const FiniteMVAlgebra& algebra,
                                      std::size_t max_size = kDefaultMaxSize);

struct Main3Report {
  std::size_t ideal_count = 0;
  std::size_t center_ideal_count = 0;
  /// I -> I meet B(A) lands in the ideals of B(A) and hits each exactly once.
  bool psi_bijective = false;
  /// I <= J iff psi(I) <= psi(J).
  bool psi_preserves_and_reflects_inclusion = false;
  /// B(A)/psi(I) -> B(A/I), [a] -> [a]_I is an isomorphism for every I.
  bool theta_isomorphisms = false;
  /// Theta_J o phi_{psi(J) psi(I)} = B(phi_JI) o Theta_I for all I <= J.
  bool squares_commute = false;

  bool passed() const {
    return psi_bijective && psi_preserves_and_reflects_inclusion && theta_isomorphisms &&
           squares_commute;
  }
};

/// Checks the correspondence between the inverse systems of A and B(A).
/// Throws PreconditionError if A is not regular.
Main3Report verify_main3(const FiniteMVAlgebra& algebra, std::size_t max_size = kDefaultMaxSize);

struct BooReport {
  /// eta of the Boolean center of the completion of A.
  std::vector<int> center_of_completion;
  /// eta of the completion of B(A).
  std::vector<int> completion_of_center;
  bool isomorphic = false;
};

/// Compares B(completion of A) with the completion of B(A).
/// Throws PreconditionError if A is not regular.
BooReport verify_boo(const FiniteMVAlgebra& algebra, std::size_t max_size = kDefaultMaxSize);

}  // namespace mvalg
