#ifndef PERMFORMS_REPORT_HPP_
#define PERMFORMS_REPORT_HPP_

#include <string>

#include "permforms/classify.hpp"
#include "permforms/verify.hpp"

namespace permforms {

/// One JSON document per run, stable field order (machine-diffable).
std::string sweep_to_json(const CorpusSweep& sweep, const std::string& mode,
                          const Formation& f);
std::string sweep_to_table(const CorpusSweep& sweep);

std::string classification_to_json(const std::string& group_name, const Group& g,
                                   const Formation& f,
                                   const std::vector<SubgroupClassification>& rows);
std::string classification_to_table(const std::string& group_name, const Group& g,
                                    const Formation& f,
                                    const std::vector<SubgroupClassification>& rows);

}  // namespace permforms

#endif  // PERMFORMS_REPORT_HPP_
