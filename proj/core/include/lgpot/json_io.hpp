#pragma once

#include <string>

#include <json.hpp>

#include "lgpot/algebra.hpp"
#include "lgpot/laurent.hpp"
#include "lgpot/struct_const.hpp"
#include "lgpot/wallcross.hpp"

namespace lgpot {

// Insertion-ordered JSON keeps the emitted key order fixed, so identical
// inputs always produce byte-identical output.
using Json = nlohmann::ordered_json;

/// {"vars":["x","y"],"terms":[{"coeff":"1","exp":[1,0]},...]}
/// Terms sorted lexicographically by exponent vector; coefficients as
/// canonical "p/q" or "a/b+c/d*i" strings. Exact towers only.
Json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

/// {"W":<poly>,"higher":[<poly>,...],"divisor_label":"..."}
Json family_to_json(const PotentialFamily& fam);
PotentialFamily family_from_json(const Json& j);

/// {"gens":["p","q"],"inverted":"1-p*q"}; the inverted element is an
/// expression string over the generators.
Json algebra_to_json(const LocalizedAlgebra& alg);
LocalizedAlgebra algebra_from_json(const Json& j);

/// {"vars":["u","v"],"images":{"p":"(u+1)*v","q":"v^-1"}}; one expression
/// string per generator, over the target variables.
Json hom_to_json(const LocalizedAlgebra& alg, const AlgebraHom& h);
AlgebraHom hom_from_json(const LocalizedAlgebra& alg, const Json& j);

/// {"source_vars":[...],"target_vars":[...],"map":{"v":{"monomial":
/// {"coeff":"1","exp":[0,-1]},"binomial_exp":[1,0],"power":-1},...}}
/// meaning v -> v^-1 * (1+u)^-1. "binomial_coeff" defaults to "1";
/// omitting "binomial_exp" means the base is the constant 1 and the
/// power must be 0.
Json substitution_to_json(const SubstitutionMap& phi);
SubstitutionMap substitution_from_json(const Json& j);

} // namespace lgpot
