#include "oia/output.hpp"

#include <sstream>

namespace oia {

namespace {

Json conditions_json(const std::vector<Condition>& conditions) {
  Json arr = Json::array();
  for (const Condition& c : conditions) arr.push_back({{"name", c.name}, {"holds", c.holds}});
  return arr;
}

Json certificate_trace_json(const ParityCertificate& cert) {
  Json arr = Json::array();
  for (const TraceStep& step : cert.trace)
    arr.push_back({{"expression", step.expression}, {"value", step.value.to_string()}});
  return arr;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string conditions_packed(const std::vector<Condition>& conditions) {
  std::string out;
  for (const Condition& c : conditions) {
    if (!out.empty()) out += "; ";
    out += c.name + "=" + (c.holds ? "1" : "0");
  }
  return out;
}

std::string trace_packed(const ParityCertificate& cert) {
  std::string out;
  for (const TraceStep& step : cert.trace) {
    if (!out.empty()) out += "; ";
    out += step.expression + " = " + step.value.to_string();
  }
  return out;
}

}  // namespace

Json entry_record(const GroupSpec& spec, const ClassificationEntry& entry) {
  Json rec;
  rec["family"] = family_token(spec.family, spec.sign);
  rec["n"] = spec.n;
  rec["q"] = spec.q;
  rec["sign"] = spec.sign ? Json(std::string(to_string(*spec.sign))) : Json(nullptr);
  rec["item"] = entry.item;
  rec["subitem"] = entry.subitem;
  rec["descriptor"] = descriptor_to_string(entry.descriptor);
  rec["structure"] = entry.structure;
  rec["conditions"] = conditions_json(entry.conditions);
  if (entry.certificate) {
    rec["index_v2"] = entry.certificate->index_v2;
    rec["certificate_trace"] = certificate_trace_json(*entry.certificate);
  } else {
    rec["index_v2"] = nullptr;
    rec["certificate_trace"] = nullptr;
  }
  return rec;
}

Json verdict_record(const GroupSpec& spec, const SubgroupDescriptor& d,
                    const CheckVerdict& verdict) {
  Json rec;
  rec["family"] = family_token(spec.family, spec.sign);
  rec["n"] = spec.n;
  rec["q"] = spec.q;
  rec["sign"] = spec.sign ? Json(std::string(to_string(*spec.sign))) : Json(nullptr);
  rec["descriptor"] = descriptor_to_string(d);
  rec["maximal_odd_index"] = verdict.maximal_odd_index;
  rec["item"] = verdict.item ? Json(*verdict.item) : Json(nullptr);
  rec["subitem"] = verdict.subitem;
  rec["conditions"] = conditions_json(verdict.conditions);
  rec["failed_conditions"] = verdict.failed_conditions;
  return rec;
}

Json report_record(const Report& report) {
  Json rec;
  rec["all_pass"] = report.all_pass();
  rec["checks"] = Json::array();
  for (const CheckLine& line : report.lines)
    rec["checks"].push_back({{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
  return rec;
}

std::string entries_csv_header() {
  return "family,n,q,sign,item,subitem,descriptor,structure,conditions,index_v2,"
         "certificate_trace";
}

std::string entries_csv(const GroupSpec& spec, const std::vector<ClassificationEntry>& entries,
                        bool header) {
  std::ostringstream out;
  if (header) out << entries_csv_header() << "\n";
  for (const ClassificationEntry& e : entries) {
    out << family_token(spec.family, spec.sign) << "," << spec.n << "," << spec.q << ","
        << (spec.sign ? to_string(*spec.sign) : "") << "," << e.item << "," << e.subitem << ","
        << csv_escape(descriptor_to_string(e.descriptor)) << "," << csv_escape(e.structure)
        << "," << csv_escape(conditions_packed(e.conditions)) << ",";
    if (e.certificate)
      out << e.certificate->index_v2 << "," << csv_escape(trace_packed(*e.certificate));
    else
      out << ",";
    out << "\n";
  }
  return out.str();
}

std::string entry_text(const GroupSpec& spec, const ClassificationEntry& entry) {
  std::ostringstream out;
  out << to_string(spec) << "  item (" << entry.item << entry.subitem << ")  "
      << descriptor_to_string(entry.descriptor) << "  " << entry.structure;
  if (entry.certificate) out << "  [v2(index) = " << entry.certificate->index_v2 << "]";
  return out.str();
}

}  // namespace oia
