// kmc: exact (kappa, mu) contact geometry reports.
//
//   kmc analyze <spec-file> [--format text|json]
//   kmc example <preset> [--c2 R --c3 R] [--format text|json]
//   kmc audit --n-from K --n-to M [--format text|json]
//
// Exit status: 0 all certifications pass, 2 a certification failed,
// 1 input or usage error.

#include <kmc/kmc.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum class Format { Text, Json };

int emit_analysis(const kmc::ManifoldSpec& spec, const kmc::AnalysisOptions& options, Format format) {
  const auto start = std::chrono::steady_clock::now();
  auto rep = kmc::run_analysis(spec, options);
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (format == Format::Json) {
    // elapsed time stays out of the json so reports are byte-identical across runs
    std::cout << kmc::report_json(rep).dump(2) << "\n";
  } else {
    std::cout << kmc::report_text(rep);
  }
  return kmc::exit_code(rep);
}

kmc::AnalysisOptions analysis_options(const std::vector<std::string>& perturb) {
  kmc::AnalysisOptions options;
  if (perturb.empty()) return options;
  const auto i = std::stoul(perturb.at(0));
  const auto j = std::stoul(perturb.at(1));
  if (i < 1 || j < 1) throw kmc::Error(kmc::ErrorCode::IndexOutOfRange, "--perturb-ricci indices are 1-based");
  options.perturb_ricci = kmc::AnalysisOptions::RicciPerturbation{i - 1, j - 1, kmc::Rational::parse(perturb.at(2))};
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of (kappa, mu)-contact metric geometry on Lie frames"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  Format format = Format::Text;

  std::string spec_file;
  std::vector<std::string> perturb;
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline on a JSON manifold document");
  analyze->add_option("spec-file", spec_file, "Manifold document")->required();

  std::string preset;
  std::string c2_text;
  std::string c3_text;
  auto* example = app.add_subcommand("example", "Run the pipeline on a built-in preset");
  example->add_option("preset-name", preset, "paper-sasakian | paper-family | kappa-minus-mu | n-kappa-flatcase")
      ->required();
  example->add_option("--c2", c2_text, "c2 for paper-family, as p/q");
  example->add_option("--c3", c3_text, "c3 for paper-family, as p/q");

  for (auto* sub : {analyze, example}) {
    sub->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--perturb-ricci", perturb, "Fault injection: add VALUE to S(I,J), 1-based")
        ->expected(3)
        ->type_name("I J VALUE");
  }

  long long n_from = 2;
  long long n_to = 2;
  auto* audit = app.add_subcommand("audit", "Sweep the n >= 2 solution families and branch polynomials");
  audit->add_option("--n-from", n_from, "First n")->required();
  audit->add_option("--n-to", n_to, "Last n")->required();
  audit->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) {
      std::ifstream in(spec_file);
      if (!in) throw kmc::Error(kmc::ErrorCode::ParseError, "cannot open '" + spec_file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      return emit_analysis(kmc::parse_spec(buffer.str()), analysis_options(perturb), format);
    }
    if (example->parsed()) {
      std::optional<kmc::Rational> c2;
      std::optional<kmc::Rational> c3;
      if (!c2_text.empty()) c2 = kmc::Rational::parse(c2_text);
      if (!c3_text.empty()) c3 = kmc::Rational::parse(c3_text);
      return emit_analysis(kmc::preset_spec(preset, c2, c3), analysis_options(perturb), format);
    }
    const auto table = kmc::run_audit(n_from, n_to);
    if (format == Format::Json) {
      std::cout << kmc::audit_json(table).dump(2) << "\n";
    } else {
      std::cout << kmc::audit_text(table);
    }
    return table.all_certified() ? 0 : 2;
  } catch (const kmc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
