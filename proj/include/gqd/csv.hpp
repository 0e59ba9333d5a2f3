#pragma once

#include <string>

#include "gqd/sweep.hpp"

namespace gqd {

/// 12 significant digits, '.' decimal separator, locale-independent.
std::string fmt12(double v);

/// Header: alpha,kappa_t,pair,dg1,dg2,concurrence,hierarchy_gap
std::string dynamics_csv(const std::vector<SweepRow>& rows);

/// Header: alpha,type,n_roots,root_1,root_2,revival_time (fields empty when absent)
std::string classification_csv(const std::vector<ClassifyRow>& rows);

/// Header: alpha,kappa_t,m3_g1,m3rho_g1,m4_g1,m3_g2,m3rho_g2,m4_g2,m3sq,m3sq_rho,m4sq
std::string monogamy_csv(const std::vector<MonogamyRow>& rows);

}  // namespace gqd
