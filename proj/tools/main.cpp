// odd-index-atlas: classify the maximal subgroups of odd index in a finite
// simple classical group over a field of odd order, check a single subgroup
// descriptor, run the exact verification suites, or emit bulk tables.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oia/classifier.hpp"
#include "oia/output.hpp"
#include "oia/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;     // check: descriptor is not maximal of odd index
constexpr int kExitError = 2;  // invalid spec / parse error

oia::GroupSpec spec_from_flags(const std::string& family, uint32_t n, uint64_t q) {
  oia::GroupSpec spec;
  spec.n = n;
  spec.q = q;
  if (family == "psl") {
    spec.family = oia::Family::linear;
  } else if (family == "psu") {
    spec.family = oia::Family::unitary;
  } else if (family == "psp") {
    spec.family = oia::Family::symplectic;
  } else if (family == "omega") {
    spec.family = oia::Family::orthogonal_odd;
  } else if (family == "omega+") {
    spec.family = oia::Family::orthogonal_even;
    spec.sign = oia::Sign::plus;
  } else if (family == "omega-") {
    spec.family = oia::Family::orthogonal_even;
    spec.sign = oia::Sign::minus;
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected psl|psu|psp|omega|omega+|omega-)");
  }
  oia::validate_spec(spec);
  return spec;
}

void print_entries(const oia::GroupSpec& spec,
                   const std::vector<oia::ClassificationEntry>& entries,
                   const std::string& format, bool csv_header) {
  if (format == "json") {
    for (const auto& e : entries) std::cout << oia::entry_record(spec, e).dump() << "\n";
  } else if (format == "csv") {
    std::cout << oia::entries_csv(spec, entries, csv_header);
  } else {
    if (entries.empty()) {
      std::cout << oia::to_string(spec) << ": no maximal subgroups of odd index\n";
      return;
    }
    for (const auto& e : entries) std::cout << oia::entry_text(spec, e) << "\n";
  }
}

std::vector<uint64_t> parse_qset(const std::string& csv) {
  std::vector<uint64_t> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        out.push_back(std::stoull(cur));
        cur.clear();
      }
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("bad qset entry");
    cur += c;
  }
  return out;
}

struct FamilyRange {
  oia::Family family;
  std::optional<oia::Sign> sign;
  uint32_t n_min;
  uint32_t n_step;
};

FamilyRange family_range(const std::string& family) {
  if (family == "psl") return {oia::Family::linear, std::nullopt, 2, 1};
  if (family == "psu") return {oia::Family::unitary, std::nullopt, 3, 1};
  if (family == "psp") return {oia::Family::symplectic, std::nullopt, 4, 2};
  if (family == "omega") return {oia::Family::orthogonal_odd, std::nullopt, 7, 2};
  if (family == "omega+") return {oia::Family::orthogonal_even, oia::Sign::plus, 8, 2};
  if (family == "omega-") return {oia::Family::orthogonal_even, oia::Sign::minus, 8, 2};
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "odd-index-atlas: maximal subgroups of odd index in finite simple classical groups "
      "over fields of odd order, with exact parity certificates"};
  app.require_subcommand(1);

  std::string family, format = "text", subgroup, suite = "all", qset;
  uint32_t n = 0, nmax = 0;
  uint64_t q = 0, qmax = 199;

  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "psl|psu|psp|omega|omega+|omega-")->required();
    cmd->add_option("--n", n, "dimension of the natural module")->required();
    cmd->add_option("--q", q, "odd prime power field size")->required();
  };

  CLI::App* classify = app.add_subcommand("classify", "list the maximal odd-index subgroups");
  add_spec_flags(classify);
  classify->add_option("--format", format, "json|csv|text (default text)");

  CLI::App* check = app.add_subcommand("check", "test one subgroup descriptor");
  add_spec_flags(check);
  check->add_option("--subgroup", subgroup,
                    "fieldaut:r | subspace:m[:disc:sign] | decomp:m[:sign] | named:KIND")
      ->required();
  check->add_option("--format", format, "json|text (default text)");

  CLI::App* verify = app.add_subcommand("verify", "run an exact verification suite");
  verify->add_option("--suite", suite, "arith|forms|dim4|oracle|all (default all)");
  verify->add_option("--qmax", qmax, "upper bound for the dim4 q grid (default 199)");
  verify->add_option("--format", format, "json|text (default text)");

  CLI::App* table = app.add_subcommand("table", "classification table over a parameter grid");
  table->add_option("--family", family, "psl|psu|psp|omega|omega+|omega-")->required();
  table->add_option("--nmax", nmax, "largest dimension")->required();
  table->add_option("--qset", qset, "comma-separated field sizes")->required();
  table->add_option("--format", format, "json|csv (default json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (classify->parsed()) {
      const oia::GroupSpec spec = spec_from_flags(family, n, q);
      print_entries(spec, oia::classify(spec), format, true);
      return kExitOk;
    }

    if (check->parsed()) {
      const oia::GroupSpec spec = spec_from_flags(family, n, q);
      const oia::SubgroupDescriptor d = oia::parse_descriptor(spec, subgroup);
      const oia::CheckVerdict verdict = oia::check(spec, d);
      if (format == "json") {
        std::cout << oia::verdict_record(spec, d, verdict).dump() << "\n";
      } else {
        std::cout << oia::to_string(spec) << " " << oia::descriptor_to_string(d) << ": ";
        if (verdict.maximal_odd_index) {
          std::cout << "maximal of odd index, item (" << *verdict.item << verdict.subitem
                    << ")\n";
        } else {
          std::cout << "not maximal of odd index";
          if (verdict.item) std::cout << " (item (" << *verdict.item << verdict.subitem << "))";
          std::cout << "; failed:";
          for (const auto& name : verdict.failed_conditions) std::cout << " [" << name << "]";
          std::cout << "\n";
        }
      }
      return verdict.maximal_odd_index ? kExitOk : kExitNo;
    }

    if (verify->parsed()) {
      oia::Report report;
      if (suite == "arith") {
        report = oia::verify_arith();
      } else if (suite == "forms") {
        report = oia::verify_forms();
      } else if (suite == "dim4") {
        report = oia::verify_dim4(qmax);
      } else if (suite == "oracle") {
        report = oia::verify_oracle();
      } else if (suite == "all") {
        report = oia::verify_all(qmax);
      } else {
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected arith|forms|dim4|oracle|all)");
      }
      if (format == "json") {
        std::cout << oia::report_record(report).dump(2) << "\n";
      } else {
        for (const auto& line : report.lines) {
          std::cout << (line.pass ? "PASS " : "FAIL ") << line.name;
          if (!line.pass && !line.detail.empty()) std::cout << "  <- " << line.detail;
          std::cout << "\n";
        }
        std::cout << (report.all_pass() ? "all checks passed"
                                        : std::to_string(report.failures()) + " checks FAILED")
                  << " (" << report.lines.size() << " total)\n";
      }
      return report.all_pass() ? kExitOk : kExitNo;
    }

    // table
    const FamilyRange range = family_range(family);
    const std::vector<uint64_t> qs = parse_qset(qset);
    for (uint64_t qv : qs) oia::factor_prime_power(qv);  // reject bad field sizes up front
    bool first = true;
    for (uint32_t nv = range.n_min; nv <= nmax; nv += range.n_step) {
      for (uint64_t qv : qs) {
        oia::GroupSpec spec{range.family, nv, qv, range.sign};
        // The one non-simple point a grid can contain.
        if (range.family == oia::Family::linear && nv == 2 && qv == 3) continue;
        const auto entries = oia::classify(spec);
        if (format == "csv") {
          std::cout << oia::entries_csv(spec, entries, first);
          first = false;
        } else {
          for (const auto& e : entries) std::cout << oia::entry_record(spec, e).dump() << "\n";
        }
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
