#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isg/action.hpp"
#include "isg/builtins.hpp"
#include "isg/congruence.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"
#include "isg/io.hpp"
#include "isg/report.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(28) << key << value << "\n";
}

void print_analysis(std::ostream& out, const isg::InverseSemigroup& s) {
  using namespace isg;
  const auto sp = std::make_shared<const InverseSemigroup>(s);
  const ElementSet e = idempotents(s);
  const ElementSet z = centralizer(s);
  row(out, "elements", std::to_string(s.size()));
  row(out, "idempotents", std::to_string(e.count()));
  row(out, "zero", s.zero() ? s.label(*s.zero()) : "none");
  row(out, "clifford", yes_no(is_clifford(s)));
  row(out, "e_unitary", yes_no(is_e_unitary(s)));
  row(out, "zero_e_unitary", s.has_zero() ? yes_no(is_zero_e_unitary(s)) : "n/a");
  row(out, "fundamental", yes_no(is_fundamental(s)));
  row(out, "cryptic", yes_no(is_cryptic(s)));
  row(out, "centralizer_size", std::to_string(z.count()));
  row(out, "mu_classes", std::to_string(mu_relation(s).block_count()));
  row(out, "d_classes", std::to_string(d_classes(s).block_count()));
  const Semilattice sl = semilattice_of(s);
  row(out, "zero_disjunctive", sl.zero() ? yes_no(is_zero_disjunctive(sl)) : "n/a");
  row(out, "filters", std::to_string(all_filters(sl).size()));
  row(out, "ultrafilters", std::to_string(ultrafilters(sl).size()));
  const auto u = universal_groupoid(sp);
  const auto& g = *u.groupoid;
  const auto gz = induced_subgroupoid(u.action, u.germs, z);
  row(out, "universal_arrows", std::to_string(g.size()));
  row(out, "universal_units", std::to_string(g.unit_list().size()));
  row(out, "iso_size", std::to_string(iso_bundle(g).count()));
  row(out, "iso_interior_size", std::to_string(iso_interior(g).count()));
  row(out, "centralizer_groupoid_size", std::to_string(gz.arrows.count()));
  row(out, "group_bundle", yes_no(is_group_bundle(g)));
  row(out, "effective", yes_no(is_effective(g)));
  row(out, "essentially_principal", yes_no(is_essentially_principal(g)));
}

int run_germs(const std::string& subject, const std::string& which, const std::string& dot_path) {
  using namespace isg;
  const auto sp = std::make_shared<const InverseSemigroup>(resolve_subject(subject));
  const Action a = which == "tight" ? tight_action(sp) : universal_action(sp);
  const GermGroupoid gg = germ_groupoid(a);
  const auto& g = gg.groupoid;
  const ElementSet interior = iso_interior(g);
  const ElementSet gz = induced_subgroupoid(a, gg, centralizer(*sp)).arrows;
  std::cout << "points:";
  for (const auto& p : a.point_names) std::cout << ' ' << p;
  std::cout << "\narrow,label,range,source,unit,iso_interior,centralizer\n";
  for (Index x = 0; x < g.size(); ++x)
    std::cout << x << ',' << g.label(x) << ',' << g.label(g.r(x)) << ',' << g.label(g.d(x)) << ','
              << yes_no(g.is_unit(x)) << ',' << yes_no(interior.contains(x)) << ',' << yes_no(gz.contains(x)) << '\n';
  if (!dot_path.empty()) write_file(dot_path, groupoid_to_dot(g, interior - g.units()));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups, groupoids of germs and their convolution algebras"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "Validate a semigroup or graph document");
  check->add_option("file", file, "JSON file or builtin:<name>")->required();

  auto* analyze = app.add_subcommand("analyze", "Print the predicate table");
  analyze->add_option("file", file, "JSON file or builtin:<name>")->required();

  std::string action = "universal", dot;
  auto* germs = app.add_subcommand("germs", "List the groupoid of germs");
  germs->add_option("file", file, "JSON file or builtin:<name>")->required();
  germs->add_option("--action", action, "universal or tight")->check(CLI::IsMember({"universal", "tight"}));
  germs->add_option("--dot", dot, "Write a DOT rendering");

  std::string suite = "all", csv;
  std::size_t samples = 100;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("subject", file, "JSON file or builtin:<name>")->required();
  verify->add_option("--suite", suite, "universal, tight, extension, algebra or all")
      ->check(CLI::IsMember({"universal", "tight", "extension", "algebra", "all"}));
  verify->add_option("--csv", csv, "Write the norm table");
  verify->add_option("--samples", samples, "Random functions per algebra check");

  std::string name, emit;
  auto* example = app.add_subcommand("example", "Show a builtin example");
  example->add_option("name", name, "Builtin name")->required();
  example->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) {
      const auto s = isg::resolve_subject(file);
      std::cout << "valid inverse semigroup: " << s.size() << " elements, " << isg::idempotents(s).count()
                << " idempotents, zero " << (s.zero() ? s.label(*s.zero()) : "none") << "\n";
      return kPass;
    }
    if (*analyze) {
      print_analysis(std::cout, isg::resolve_subject(file));
      return kPass;
    }
    if (*germs) return run_germs(file, action, dot);
    if (*verify) {
      const auto sp = std::make_shared<const isg::InverseSemigroup>(isg::resolve_subject(file));
      isg::SuiteOptions options;
      options.samples = samples;
      const auto report = isg::run_suite(file, sp, isg::parse_suite(suite), options);
      std::cout << report.render();
      if (!csv.empty()) isg::write_file(csv, report.norm_csv);
      return report.ok() ? kPass : kCheckFailure;
    }
    if (*example) {
      const auto s = isg::builtin(name);
      if (emit == "json") std::cout << isg::semigroup_to_json(s);
      else print_analysis(std::cout, s);
      return kPass;
    }
  } catch (const isg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == isg::ErrorKind::kInvariantViolation ? kCheckFailure : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
