#pragma once

#include <vector>

#include "singlab/exact_solutions.hpp"

namespace singlab {

/// Family-level adjudications: every printed formula is a candidate whose
/// confirmed/refuted/repaired status is decided by the residual oracles.
std::vector<AdjudicationRow> adjudicate_slezkin_landau(double c, unsigned seed);
std::vector<AdjudicationRow> adjudicate_euler_separable();
std::vector<AdjudicationRow> adjudicate_oseen_moffatt();
std::vector<AdjudicationRow> adjudicate_von_karman();
std::vector<AdjudicationRow> adjudicate_yaceev();
std::vector<AdjudicationRow> adjudicate_squire();
std::vector<AdjudicationRow> adjudicate_slezkin_riccati();
std::vector<AdjudicationRow> adjudicate_hermite_tables();
std::vector<AdjudicationRow> adjudicate_reduced_systems(unsigned seed);
std::vector<AdjudicationRow> adjudicate_constants();

/// Every family, in a fixed order; the machine-readable ledger body.
std::vector<AdjudicationRow> adjudicate_all(unsigned seed);

/// Dispatch by family tag with gate rows marked; throws on unknown tags.
std::vector<AdjudicationRow> adjudicate_family(const std::string& family, double c,
                                               unsigned seed);

std::string ledger_csv(const std::vector<AdjudicationRow>& rows);

/// True when no row is refuted without a recorded repair.
bool ledger_accepts(const std::vector<AdjudicationRow>& rows);

}  // namespace singlab
