#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "supchar/serialization.hpp"
#include "supchar/verify.hpp"

namespace supchar {

namespace {

struct JobSpec {
  std::string family;
  int n = 0;
  unsigned p = 0;
  unsigned e = 1;
  std::string modulus;
};

void add_job_options(CLI::App* cmd, JobSpec& spec) {
  cmd->add_option("--family", spec.family, "B, C or D")->required();
  cmd->add_option("--n", spec.n, "rank")->required();
  cmd->add_option("--p", spec.p, "odd prime")->required();
  cmd->add_option("--e", spec.e, "field degree, q = p^e")->capture_default_str();
  cmd->add_option("--modulus", spec.modulus, "monic irreducible modulus, coefficients c0,...,ce low degree first");
}

std::optional<std::vector<unsigned>> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad modulus coefficient '" + item + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

GroupModel make_group(const JobSpec& spec) {
  FieldCtx field(spec.p, spec.e, parse_modulus(spec.modulus));
  return GroupModel(parse_family(spec.family), spec.n, std::move(field));
}

std::string polynomial_text(const std::vector<unsigned>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c[k] != 1) os << c[k];
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return first ? "0" : os.str();
}

std::string pair_text(const RootSystem& rs, const BasicPair& pair) {
  if (pair.roots.empty()) return "(∅)";
  std::string d = "D={", phi = "phi={";
  for (std::size_t k = 0; k < pair.roots.size(); ++k) {
    const std::string name = root_to_string(rs.root(pair.roots[k]));
    d += (k ? ", " : "") + name;
    phi += (k ? ", " : "") + name + ": " + std::to_string(pair.phi[k]);
  }
  return d + "}, " + phi + "}";
}

void print_matrix(std::ostream& os, const GroupModel& g, const Matrix& x) {
  const auto& idx = g.roots().indices();
  os << "      ";
  for (int c : idx) os << std::setw(4) << c;
  os << '\n';
  for (int r = 0; r < x.m; ++r) {
    os << "  " << std::setw(4) << idx[r];
    for (int c = 0; c < x.m; ++c) os << std::setw(4) << x.at(r, c);
    os << '\n';
  }
}

mpz_class basic_pair_count(const GroupModel& g) {
  mpz_class total = 0;
  const mpz_class q1 = g.field().q() - 1;
  for (const auto& d : g.roots().basic_subsets()) {
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), q1.get_mpz_t(), d.size());
    total += term;
  }
  return total;
}

mpz_class group_order_mpz(const GroupModel& g) {
  mpz_class out;
  const mpz_class q = g.field().q();
  mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), g.rank());
  return out;
}

int write_output(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << text;
    return 0;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: write to " << path << " failed\n";
    return 2;
  }
  err << "wrote " << path << '\n';
  return 0;
}

int cmd_table(const JobSpec& spec, const std::string& format, const std::string& path, std::uint64_t max_order,
              std::ostream& out, std::ostream& err) {
  const GroupModel g = make_group(spec);
  const SuperTable table = build_table(g, max_order);
  const std::string text = format == "csv" ? table_to_csv(table) : table_to_json(table).dump(2) + "\n";
  return write_output(text, path, out, err);
}

int cmd_verify(const JobSpec& spec, const std::string& suites_text, const VerifyOptions& options,
               const std::string& report_path, std::ostream& out, std::ostream& err) {
  const auto suites = parse_suites(suites_text);
  const GroupModel g = make_group(spec);
  Verifier verifier(g, options);
  nlohmann::json reports = nlohmann::json::array();
  bool failed = false;
  out << "verify " << spec.family << spec.n << " over F_" << g.field().q() << '\n';
  for (const auto& name : suites) {
    const CheckReport r = verifier.run(name);
    reports.push_back(report_to_json(r));
    out << "  " << std::left << std::setw(14) << name << std::right;
    if (r.status == "skipped") {
      out << r.note << '\n';
      err << "notice: suite " << name << " " << r.note << '\n';
      continue;
    }
    out << r.status << " (" << r.passed << "/" << r.instances << " checks)";
    if (r.first_counterexample) out << " first counterexample: " << *r.first_counterexample;
    out << '\n';
    if (!r.note.empty()) out << "  " << std::setw(14) << "" << "note: " << r.note << '\n';
    failed = failed || r.status == "fail";
  }
  out << (failed ? "FAILED" : "all requested suites passed") << '\n';
  if (!report_path.empty()) {
    const nlohmann::json doc = {{"family", spec.family},
                                {"n", spec.n},
                                {"p", spec.p},
                                {"e", spec.e},
                                {"modulus", g.field().modulus()},
                                {"suites", reports},
                                {"status", failed ? "fail" : "pass"}};
    if (const int rc = write_output(doc.dump(2) + "\n", report_path, out, err); rc != 0) return rc;
  }
  return failed ? 1 : 0;
}

int cmd_classify(const JobSpec& spec, const std::string& element_path, const std::string& coords,
                 std::uint64_t max_order, std::ostream& out, std::ostream& err) {
  const GroupModel g = make_group(spec);
  GroupElement z;
  if (!coords.empty()) {
    z = g.group_from_coords(coords_from_text(g, coords));
  } else if (!element_path.empty()) {
    std::ifstream file(element_path);
    if (!file) {
      err << "error: cannot read " << element_path << '\n';
      return 2;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception& ex) {
      err << "error: " << element_path << " is not valid JSON: " << ex.what() << '\n';
      return 2;
    }
    z = element_from_json(g, j);
  } else {
    err << "error: classify needs --element or --coords\n";
    return 2;
  }
  if (const auto why = g.group_violation(z)) {
    err << "error: element is not in U: " << *why << '\n';
    return 2;
  }
  const BasicPair pair = superclass_of(g, z);
  out << pair_text(g.roots(), pair) << '\n';
  const auto order = g.order();
  if (order && *order <= max_order) {
    const SuperclassPartition partition(g, enumerate_basic_pairs(g.roots(), g.field()), max_order);
    out << "|K| = " << partition.sizes()[partition.index_of(pair)] << '\n';
  } else {
    out << "|K| not computed (|U| exceeds --max-order)\n";
  }
  out << "representative:\n";
  print_matrix(out, g, representative(g, pair));
  return 0;
}

int cmd_info(const JobSpec& spec, std::ostream& out) {
  const GroupModel g = make_group(spec);
  const FieldCtx& f = g.field();
  out << "family: " << family_letter(g.roots().family()) << '\n';
  out << "n: " << g.roots().n() << '\n';
  out << "matrix size: " << g.m() << '\n';
  out << "field: F_" << f.q() << " (p = " << f.p() << ", e = " << f.e() << ")\n";
  out << "modulus: " << polynomial_text(f.modulus()) << "  (elements are base-" << f.p()
      << " codes of their coefficients, lowest degree first)\n";
  out << "positive roots: " << g.rank() << '\n';
  out << "|U|: " << group_order_mpz(g).get_str() << '\n';
  out << "basic subsets: " << g.roots().basic_subsets().size() << '\n';
  out << "basic pairs: " << basic_pair_count(g).get_str() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superclasses and supercharacters of Sylow p-subgroups of classical groups"};
  app.name("supchar");
  app.require_subcommand(1);

  JobSpec spec;
  std::string format = "json", out_path = "-", suites = "all", report, element, coords;
  std::uint64_t max_order = 1000000;
  VerifyOptions vopt;

  auto* table = app.add_subcommand("table", "write the supercharacter table");
  add_job_options(table, spec);
  table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  table->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();
  table->add_option("--max-order", max_order, "bound on |U| for classifying every element")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_job_options(verify, spec);
  verify->add_option("--suite", suites, "comma-separated suites or all")->capture_default_str();
  verify->add_option("--max-group-order", vopt.max_group_order, "bound on |U| for brute force")
      ->capture_default_str();
  verify->add_option("--seed", vopt.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--report", report, "write the JSON report here (- for stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "find the superclass of an element");
  add_job_options(classify_cmd, spec);
  auto* element_opt = classify_cmd->add_option("--element", element, "JSON file with a matrix or coordinate map");
  auto* coords_opt = classify_cmd->add_option("--coords", coords, "coordinates of a_z, e.g. 2e1=2,e1-e2=1");
  element_opt->excludes(coords_opt);
  classify_cmd->add_option("--max-order", max_order, "bound on |U| for computing |K|")->capture_default_str();

  auto* info = app.add_subcommand("info", "print facts about the group");
  add_job_options(info, spec);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(spec, format, out_path, max_order, out, err);
    if (*verify) return cmd_verify(spec, suites, vopt, report, out, err);
    if (*classify_cmd) return cmd_classify(spec, element, coords, max_order, out, err);
    if (*info) return cmd_info(spec, out);
  } catch (const std::length_error& e) {
    err << "error: size bound exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace supchar
