#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentor/commands.hpp"

namespace {

bool parse_range(const std::string& text, long& lo, long& hi) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stol(text);
    } else {
      lo = std::stol(text.substr(0, colon));
      hi = std::stol(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized torsion certificates for Dehn fillings of Montesinos knots"};
  app.set_version_flag("--version", std::string(gentor::kVersion));
  app.require_subcommand(1);

  std::string json_out;
  app.add_option("--json", json_out, "Also write the report to this file");

  long n = 0, p = 0, q = 1;
  std::string tangle, descriptor, certificate_path;
  std::vector<std::string> grid;

  auto* family = app.add_subcommand("family", "Descriptor, gcd criteria and puncture count of K_n");
  family->add_option("--n", n, "Family index (n >= 2)")->required();

  auto* verify = app.add_subcommand("verify", "Certify the meridian of K_n(p/q) as generalized torsion of order p");
  verify->add_option("--n", n, "Family index (n >= 2)")->required();
  verify->add_option("--p", p, "Slope numerator")->required();
  verify->add_option("--q", q, "Slope denominator");

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial and bi-orderability flags");
  auto* tangle_opt = alexander->add_option("--tangle", tangle, "Tangle word, e.g. \"[2,2]\" or \"[3,1]@reversed\"");
  auto* desc_opt = alexander->add_option("--descriptor", descriptor, "Montesinos descriptor, e.g. \"M(1/3,1/3,1/3)\"");
  tangle_opt->excludes(desc_opt);

  auto* check = app.add_subcommand("check", "Re-verify a certificate or verify report by free reduction");
  check->add_option("certificate", certificate_path, "Certificate JSON file")->required();

  auto* vgrid = app.add_subcommand("verify-grid", "Run verify over a grid of (n, p, q)");
  vgrid->add_option("--grid", grid, "nmin:nmax pmax qmax")->expected(3)->required();

  for (auto* sub : {family, verify, alexander, check, vgrid}) {
    sub->add_option("--json", json_out, "Also write the report to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gentor::kInputError;
  }

  gentor::CommandResult result;
  if (family->parsed()) {
    result = gentor::cmd_family(n);
  } else if (verify->parsed()) {
    result = gentor::cmd_verify(n, p, q);
  } else if (alexander->parsed()) {
    if (!tangle_opt->count() && !desc_opt->count()) {
      std::cerr << "alexander needs --tangle or --descriptor\n";
      return gentor::kInputError;
    }
    result = tangle_opt->count() ? gentor::cmd_alexander(tangle, false) : gentor::cmd_alexander(descriptor, true);
  } else if (check->parsed()) {
    std::ifstream in(certificate_path);
    if (!in) {
      std::cerr << "cannot read " << certificate_path << "\n";
      return gentor::kInputError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    result = gentor::cmd_check(buffer.str());
  } else if (vgrid->parsed()) {
    long nmin = 0, nmax = 0, pmax = 0, qmax = 0;
    if (!parse_range(grid[0], nmin, nmax) || !parse_range(grid[1], pmax, pmax) || !parse_range(grid[2], qmax, qmax)) {
      std::cerr << "--grid expects nmin:nmax pmax qmax\n";
      return gentor::kInputError;
    }
    result = gentor::cmd_verify_grid(nmin, nmax, pmax, qmax);
  }

  const std::string text = result.report.dump(2) + "\n";
  std::cout << text;
  if (result.report["results"].contains("error")) {
    std::cerr << "error: " << result.report["results"]["error"].get<std::string>() << "\n";
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write " << json_out << "\n";
      return gentor::kInputError;
    }
    out << text;
  }
  return result.exit_code;
}
