#ifndef ARTIN_FP_GROUP_HPP_
#define ARTIN_FP_GROUP_HPP_

// Finite groups given by presentations: coset enumeration over the trivial
// subgroup, then the regular permutation action as a FiniteGroup.

#include <memory>
#include <stdexcept>
#include <vector>

#include "artin/coset_enum.hpp"
#include "artin/finite_group.hpp"
#include "artin/presentation.hpp"

namespace artin {

struct FpGroup {
  FpPresentation presentation;
  std::shared_ptr<FiniteGroup const> group;

  std::size_t order() const { return group->size(); }
};

inline std::vector<Perm> coset_action(CosetTable const& table) {
  std::vector<Perm> gens;
  for (std::size_t g = 0; g < table.number_of_generators; ++g) {
    gens.emplace_back(table.generator_permutation(g));
  }
  return gens;
}

inline FpGroup enumerate_group(FpPresentation const& pres, CosetEnumerationOptions opts = {}) {
  CosetTable t = todd_coxeter(pres, {}, opts);
  if (t.index() > FiniteGroup::default_limit) throw GroupTooLarge(t.index(), FiniteGroup::default_limit);
  if (pres.number_of_generators() == 0) throw std::invalid_argument("presentation without generators");
  return {pres, std::make_shared<FiniteGroup const>(coset_action(t), pres.generator_names())};
}

// The quotient by the subgroup generated by a central element, re-enumerated
// from the presentation with the word added as a relator.
inline FpGroup quotient_by_central_word(FpGroup const& g, Word const& word,
                                        CosetEnumerationOptions opts = {}) {
  ElementIndex z = g.group->evaluate(word);
  if (!g.group->is_central(z)) throw std::invalid_argument("word is not central in the group");
  FpPresentation q = g.presentation;
  if (!word.empty()) q.add_relator(word);
  return enumerate_group(q, opts);
}

}  // namespace artin

#endif  // ARTIN_FP_GROUP_HPP_
