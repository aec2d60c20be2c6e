#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/fincat.hpp"

namespace fincat {

// The three distinguished classes of a model structure, as morphism ids.
// Order and repetition do not matter; every id must exist in the category.
struct MorphismClasses {
  std::vector<std::string> weq;
  std::vector<std::string> cof;
  std::vector<std::string> fib;
};

// For every composable pair, once two of f, g, g∘f are weak equivalences
// the third must be one as well. Issue: TwoOfThreeFails.
Report check_two_of_three(const FinCat& c, const MorphismClasses& m);

// f is a retract of g when a diagram i, r, j, s exists with r∘i and s∘j
// identities, g∘i = j∘f and f∘r = s∘g. Each class must contain every
// retract of each of its members. Issue: RetractEscapes.
Report check_retract_closure(const FinCat& c, const MorphismClasses& m);

// Whether the commuting square p∘u = v∘i admits h with h∘i = u and
// p∘h = v. Throws NonCommutingSquare when the square does not commute and
// EndpointMismatch when the four morphisms do not form a square.
bool has_lift(const FinCat& c, const std::string& i, const std::string& p, const std::string& u,
              const std::string& v);

// Every cofibration lifts against trivial fibrations and every trivial
// cofibration lifts against fibrations, in every commuting square.
// Issue: LiftMissing.
Report check_lifting(const FinCat& c, const MorphismClasses& m);

// Every morphism factors as a cofibration followed by a trivial fibration
// and as a trivial cofibration followed by a fibration.
// Issue: FactorizationFails.
Report check_factorization(const FinCat& c, const MorphismClasses& m);

// All four checks in the order above, with their issues concatenated.
Report check_model_axioms(const FinCat& c, const MorphismClasses& m);

// Objects whose unique morphism from the initial object is a cofibration;
// empty optional when there is no initial object.
std::optional<std::vector<std::string>> cofibrant_objects(const FinCat& c,
                                                          const MorphismClasses& m);

// Objects whose unique morphism to the terminal object is a fibration;
// empty optional when there is no terminal object.
std::optional<std::vector<std::string>> fibrant_objects(const FinCat& c,
                                                        const MorphismClasses& m);

}  // namespace fincat
