#include "mvalg/error.hpp"

#include <utility>

namespace mvalg {

AxiomViolation::AxiomViolation(std::string axiom, std::vector<std::size_t> witness)
    : Error("axiom '" + axiom + "' violated"), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

}  // namespace mvalg
