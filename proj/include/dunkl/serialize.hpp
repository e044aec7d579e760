#pragma once

#include <string>

#include "dunkl/bases.hpp"

namespace dunkl {

// Byte-deterministic serializations of a certified BasisSet. Element order is
// (reverse-lex label) x (spinor index); polynomial terms are in reverse-lex
// order with canonical coefficient strings.
std::string basis_to_json(const Setup& s, const BasisSet& basis);
std::string basis_to_csv(const Setup& s, const BasisSet& basis);
std::string basis_to_latex(const Setup& s, const BasisSet& basis);

}  // namespace dunkl
