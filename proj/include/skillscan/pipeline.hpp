#pragma once

#include <vector>

#include "skillscan/policy_engine.hpp"
#include "skillscan/reporting.hpp"
#include "skillscan/skill_model.hpp"

namespace skillscan {

/// Scans every skill in the corpus with up to `jobs` worker threads.
/// Output order follows the corpus order (sorted by skill id), never
/// completion order, so the result is identical for any job count.
std::vector<ScanReport> scan_corpus(const Corpus& corpus, const PolicyConfig& cfg,
                                    int jobs = 1);

}  // namespace skillscan
