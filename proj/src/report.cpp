#include "permforms/report.hpp"

#include <sstream>

#include <json.hpp>

namespace permforms {

namespace {

using nlohmann::ordered_json;

ordered_json flags_json(const FormationFlags& fl) {
  ordered_json j;
  j["subgroup_closed"] = fl.subgroup_closed;
  j["saturated"] = fl.saturated;
  j["superradical"] = fl.superradical;
  j["contains_nilpotent"] = fl.contains_nilpotent;
  return j;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["group"] = r.group_name;
  j["order"] = r.group_order;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  if (r.status == VerifyStatus::kVerified || r.status == VerifyStatus::kCounterexample) {
    if (r.check == "theorem" || r.check == "corollary") {
      ordered_json s;
      s["s1"] = r.statements.s1;
      s["s2"] = r.statements.s2;
      s["s3"] = r.statements.s3;
      j["statements"] = s;
      auto witness_json = [](const SubgroupWitness& w) {
        ordered_json wj;
        wj["order"] = w.order;
        wj["generators"] = w.generators;
        wj["self_normalizing"] = w.self_normalizing;
        wj["f_subnormal"] = w.f_subnormal;
        wj["f_abnormal"] = w.f_abnormal;
        return wj;
      };
      if (r.statements.s1_witness) j["s1_witness"] = witness_json(*r.statements.s1_witness);
      if (r.statements.s2_witness) j["s2_witness"] = witness_json(*r.statements.s2_witness);
      if (r.statements.s3_witness) {
        const auto& w = *r.statements.s3_witness;
        ordered_json wj;
        wj["p"] = w.p;
        wj["x"] = w.x;
        wj["x_order"] = w.x_order;
        wj["derived_order"] = w.derived_order;
        wj["fpart_order"] = w.fpart_order;
        wj["fpart_free_of_self_normalizing_primary_cyclic"] =
            w.fpart_free_of_self_normalizing_primary_cyclic;
        j["s3_witness"] = wj;
      }
    }
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["time_ms"] = r.time_ms;
  return j;
}

}  // namespace

std::string sweep_to_json(const CorpusSweep& sweep, const std::string& mode,
                          const Formation& f) {
  ordered_json j;
  j["tool"] = "permforms";
  j["mode"] = mode;
  j["formation"] = f.name();
  j["flags"] = flags_json(f.flags());
  ordered_json results = ordered_json::array();
  for (const auto& r : sweep.reports) results.push_back(report_json(r));
  j["results"] = results;
  ordered_json summary;
  summary["total"] = sweep.reports.size();
  summary["verified"] = sweep.verified;
  summary["counterexamples"] = sweep.counterexamples;
  summary["skipped_in_f"] = sweep.skipped_in_f;
  summary["skipped_insoluble"] = sweep.skipped_insoluble;
  summary["skipped_flags"] = sweep.skipped_flags;
  summary["errors"] = sweep.errors;
  j["summary"] = summary;
  j["exit_code"] = sweep.exit_code();
  return j.dump(2) + "\n";
}

std::string sweep_to_table(const CorpusSweep& sweep) {
  std::ostringstream os;
  os << "group                          order  check                             status             s1 s2 s3  time_ms\n";
  for (const auto& r : sweep.reports) {
    char line[200];
    bool ran = r.status == VerifyStatus::kVerified || r.status == VerifyStatus::kCounterexample;
    bool stmt = r.check == "theorem" || r.check == "corollary";
    std::snprintf(line, sizeof(line), "%-30s %5llu  %-33s %-18s %2s %2s %2s  %7.1f\n",
                  r.group_name.c_str(), static_cast<unsigned long long>(r.group_order),
                  r.check.c_str(), to_string(r.status),
                  ran && stmt ? (r.statements.s1 ? "T" : "F") : "-",
                  ran && stmt ? (r.statements.s2 ? "T" : "F") : "-",
                  ran && stmt ? (r.statements.s3 ? "T" : "F") : "-", r.time_ms);
    os << line;
    if (!r.detail.empty()) os << "    detail: " << r.detail << "\n";
  }
  os << "totals: verified " << sweep.verified << ", counterexamples " << sweep.counterexamples
     << ", skipped_in_f " << sweep.skipped_in_f << ", skipped_insoluble "
     << sweep.skipped_insoluble << ", skipped_flags " << sweep.skipped_flags << ", errors "
     << sweep.errors << "\n";
  return os.str();
}

std::string classification_to_json(const std::string& group_name, const Group& g,
                                   const Formation& f,
                                   const std::vector<SubgroupClassification>& rows) {
  ordered_json j;
  j["tool"] = "permforms";
  j["mode"] = "analyze";
  j["group"] = group_name;
  j["order"] = g.order();
  j["degree"] = g.degree();
  j["formation"] = f.name();
  j["flags"] = flags_json(f.flags());
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json rj;
    rj["order"] = row.order;
    rj["class_size"] = row.class_size;
    ordered_json gens = ordered_json::array();
    for (const auto& p : row.subgroup.generators()) gens.push_back(p.to_cycles());
    rj["generators"] = gens;
    rj["self_normalizing"] = row.self_normalizing;
    rj["f_subnormal"] = row.f_subnormal;
    if (row.chain) {
      ordered_json chain = ordered_json::array();
      for (const auto& link : row.chain->links) chain.push_back(link.order());
      rj["chain_orders"] = chain;
    }
    rj["f_abnormal"] = row.f_abnormal;
    arr.push_back(rj);
  }
  j["classes"] = arr;
  return j.dump(2) + "\n";
}

std::string classification_to_table(const std::string& group_name, const Group& g,
                                    const Formation& f,
                                    const std::vector<SubgroupClassification>& rows) {
  std::ostringstream os;
  os << "group " << group_name << " (order " << g.order() << ", degree " << g.degree()
     << "), formation " << f.name() << "\n";
  os << "order  size  self_norm  " << f.name() << "-subnormal  " << f.name()
     << "-abnormal  chain\n";
  for (const auto& row : rows) {
    std::ostringstream chain;
    if (row.chain) {
      for (std::size_t i = 0; i < row.chain->links.size(); ++i)
        chain << (i ? " < " : "") << row.chain->links[i].order();
    }
    char line[160];
    std::snprintf(line, sizeof(line), "%5llu  %4llu  %-9s  %-12s  %-11s  %s\n",
                  static_cast<unsigned long long>(row.order),
                  static_cast<unsigned long long>(row.class_size),
                  row.self_normalizing ? "yes" : "no", row.f_subnormal ? "yes" : "no",
                  row.f_abnormal ? "yes" : "no", chain.str().c_str());
    os << line;
  }
  return os.str();
}

}  // namespace permforms
