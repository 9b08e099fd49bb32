#include <CLI11.hpp>
#include <iostream>

#include "qfa/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qfa: quantum determinants and Hopf algebras from braided vector spaces"};
  app.require_subcommand(1);

  std::string spec_path;
  std::optional<int> max_degree;
  std::optional<std::string> volume;
  bool certify = false;
  std::string format = "text";
  std::size_t budget = qfa::kDefaultBudget;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", spec_path, "spec file (JSON)")->required();
    sub->add_option("--max-degree", max_degree, "highest degree of B(V) to compute");
    sub->add_option("--volume", volume, "volume monomial, e.g. x1x2x3x2");
    sub->add_flag("--certify-normality", certify, "certify D t = J(t) D by ideal membership");
    sub->add_option("--format", format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}));
    sub->add_option("--budget", budget, "Groebner basis work budget");
  };
  CLI::App* check = app.add_subcommand("check", "braid equation and rigidity");
  CLI::App* frt = app.add_subcommand("frt", "FRT relations");
  CLI::App* nichols = app.add_subcommand("nichols", "Nichols algebra degrees, top and volume");
  CLI::App* qdet = app.add_subcommand("qdet", "quantum determinant and the Hopf algebra H(c)");
  for (auto* s : {check, frt, nichols, qdet}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qfa::kExitUsage;
  }

  qfa::CommandOptions opt;
  opt.max_degree = max_degree;
  opt.volume = volume;
  opt.certify_normality = certify;
  opt.budget = budget;
  opt.format = format == "json" ? qfa::Format::Json : format == "latex" ? qfa::Format::Latex : qfa::Format::Text;

  try {
    const qfa::BraidingSpec spec = qfa::load_spec(spec_path);
    qfa::CommandOutput out;
    if (*check) out = qfa::cmd_check(spec, opt);
    if (*frt) out = qfa::cmd_frt(spec, opt);
    if (*nichols) out = qfa::cmd_nichols(spec, opt);
    if (*qdet) out = qfa::cmd_qdet(spec, opt);
    std::cout << out.text;
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "qfa: " << e.what() << "\n";
    return qfa::kExitUsage;
  }
}
