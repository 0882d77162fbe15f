// Cross-engine property checks on a single program. Each returns an empty
// string when the property holds and a description of the first violation
// otherwise.
#pragma once

#include <string>

#include "elparg/semantics.hpp"

namespace elparg {

/// Composite relations built from u and r agree with the definition-level
/// relations; the inclusion diagram holds; rebut is symmetric.
std::string check_relation_algebra(const Framework& fw);

/// Every equality class and inclusion edge of the hierarchy.
std::string check_hierarchy(const Framework& fw);

/// wfm_p equals the u/a model.
std::string check_wfsx(const Program& p);

/// For every two-valued interpretation (a subset t of the Herbrand base as
/// the true side), L in gamma(t) iff some argument concluding L has no
/// assumption `not K` with K in t, and L in gamma_s(t) iff moreover no
/// conclusion of that argument has its complement in t. Herbrand bases
/// larger than `max_base` are skipped.
std::string check_gamma_characterisation(const Framework& fw, std::size_t max_base = 8);

/// Dialogue search agrees with fixpoint membership for all 25 pairs, every
/// winning tree passes verify_tree, and an argument first justified at stage
/// n has a winning tree of height at most n - 1.
std::string check_proof_theory(const Framework& fw);

/// Defence a never produces coherence violations.
std::string check_coherence_defence_a(const Program& p);

/// Whenever y is contained in x, J_{x/y} is x-consistent.
std::string check_consistency_property(const Framework& fw);

/// lfp(Gs G) = lfp(Gs Gs) <= lfp(G G) <= lfp(G Gs).
std::string check_lfp_chain(const Program& p);

}  // namespace elparg
