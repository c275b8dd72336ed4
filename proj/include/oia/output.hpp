#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "oia/classifier.hpp"
#include "oia/verify.hpp"

namespace oia {

using Json = nlohmann::ordered_json;

/// One classification entry as a machine-readable record. All potentially
/// large numbers are decimal strings; field order is fixed.
Json entry_record(const GroupSpec& spec, const ClassificationEntry& entry);

Json verdict_record(const GroupSpec& spec, const SubgroupDescriptor& d,
                    const CheckVerdict& verdict);

Json report_record(const Report& report);

/// CSV with the same fields as entry_record, one header plus one row per
/// entry. Conditions and traces are packed "name=value" lists.
std::string entries_csv(const GroupSpec& spec, const std::vector<ClassificationEntry>& entries,
                        bool header = true);
std::string entries_csv_header();

std::string entry_text(const GroupSpec& spec, const ClassificationEntry& entry);

}  // namespace oia
